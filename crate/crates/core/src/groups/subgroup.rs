use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{Elem, FiniteGroup, GroupError};

/// A subgroup of a shared parent group, stored as a sorted element list.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Arc<Vec<Elem>>,
    own: Arc<OnceLock<Arc<FiniteGroup>>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent_order", &self.parent.order())
            .field("elements", &self.elements)
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(parent: &Arc<FiniteGroup>, gens: &[Elem]) -> Result<Subgroup, GroupError> {
        if let Some(&bad) = gens.iter().find(|&&g| g as usize >= parent.order()) {
            return Err(GroupError::BadElement(bad as u64));
        }
        Ok(Self::from_sorted(parent.clone(), parent.generated(gens)))
    }

    /// Checks that `elements` is closed and builds the subgroup.
    pub fn from_elements(parent: &Arc<FiniteGroup>, elements: &[Elem]) -> Result<Subgroup, GroupError> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if let Some(&bad) = elems.iter().find(|&&g| g as usize >= parent.order()) {
            return Err(GroupError::BadElement(bad as u64));
        }
        let mut member = vec![false; parent.order()];
        for &e in &elems {
            member[e as usize] = true;
        }
        if !member[parent.identity() as usize] {
            return Err(GroupError::NotSubgroup);
        }
        for &a in &elems {
            for &b in &elems {
                if !member[parent.mul(a, b) as usize] {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        Ok(Self::from_sorted(parent.clone(), elems))
    }

    pub(crate) fn from_sorted(parent: Arc<FiniteGroup>, elements: Vec<Elem>) -> Subgroup {
        Subgroup { parent, elements: Arc::new(elements), own: Arc::new(OnceLock::new()) }
    }

    pub(crate) fn from_mask(parent: &Arc<FiniteGroup>, mask: &[bool]) -> Subgroup {
        let elements = (0..mask.len() as Elem).filter(|&g| mask[g as usize]).collect();
        Self::from_sorted(parent.clone(), elements)
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_sorted(parent.clone(), parent.elements().collect())
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Self::from_sorted(parent.clone(), vec![parent.identity()])
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn is_normal(&self) -> bool {
        let gens = self.parent.generators();
        self.elements.iter().all(|&h| gens.iter().all(|&s| self.contains(self.parent.conj(h, s))))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let elems = self.elements.iter().copied().filter(|&g| other.contains(g)).collect();
        Self::from_sorted(self.parent.clone(), elems)
    }

    /// `x^-1 H x`.
    pub fn conjugate(&self, x: Elem) -> Subgroup {
        let mut elems: Vec<Elem> = self.elements.iter().map(|&h| self.parent.conj(h, x)).collect();
        elems.sort_unstable();
        Self::from_sorted(self.parent.clone(), elems)
    }

    /// Representatives `g_1 = e, g_2, ...` of the left cosets `g_i H`.
    pub fn left_transversal(&self) -> Vec<Elem> {
        let g = &self.parent;
        let mut covered = vec![false; g.order()];
        let mut reps = Vec::with_capacity(self.index());
        let mut first = vec![g.identity()];
        first.extend(g.elements().filter(|&x| x != g.identity()));
        for x in first {
            if covered[x as usize] {
                continue;
            }
            reps.push(x);
            for &h in self.elements.iter() {
                covered[g.mul(x, h) as usize] = true;
            }
        }
        reps
    }

    /// For every element of the parent, the position of its left coset in
    /// `transversal`. Fails if `transversal` is not a left transversal.
    pub fn left_coset_map(&self, transversal: &[Elem]) -> Result<Vec<usize>, GroupError> {
        let g = &self.parent;
        if transversal.len() != self.index() {
            return Err(GroupError::InvalidTransversal("wrong number of representatives"));
        }
        let mut map = vec![usize::MAX; g.order()];
        for (i, &x) in transversal.iter().enumerate() {
            if x as usize >= g.order() {
                return Err(GroupError::BadElement(x as u64));
            }
            for &h in self.elements.iter() {
                let y = g.mul(x, h) as usize;
                if map[y] != usize::MAX {
                    return Err(GroupError::InvalidTransversal("two representatives share a coset"));
                }
                map[y] = i;
            }
        }
        Ok(map)
    }

    /// The subgroup as a group in its own right; element `i` of the result
    /// is `self.elements()[i]`.
    pub fn as_group(&self) -> Arc<FiniteGroup> {
        self.own
            .get_or_init(|| {
                if self.order() == self.parent.order() {
                    return self.parent.clone();
                }
                let mut pos = vec![u32::MAX; self.parent.order()];
                for (i, &g) in self.elements.iter().enumerate() {
                    pos[g as usize] = i as u32;
                }
                let rows: Vec<Vec<u32>> = self
                    .elements
                    .iter()
                    .map(|&a| self.elements.iter().map(|&b| pos[self.parent.mul(a, b) as usize]).collect())
                    .collect();
                Arc::new(FiniteGroup::from_cayley_unchecked(&rows))
            })
            .clone()
    }

    /// Position of a parent element inside [`Subgroup::elements`].
    pub fn local_index(&self, g: Elem) -> Option<Elem> {
        self.elements.binary_search(&g).ok().map(|i| i as Elem)
    }

    pub fn to_parent(&self, local: Elem) -> Elem {
        self.elements[local as usize]
    }

    /// Subgroup of this subgroup's own group, mapped into the parent.
    pub fn lift(&self, inner: &Subgroup) -> Subgroup {
        let mut elems: Vec<Elem> = inner.elements().iter().map(|&i| self.to_parent(i)).collect();
        elems.sort_unstable();
        Self::from_sorted(self.parent.clone(), elems)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;

    #[test]
    fn cosets_and_normality() {
        let s3 = Arc::new(library::symmetric(3));
        let a3 = Subgroup::generated(&s3, &[s3.generators()[1]]).unwrap();
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
        let t = a3.left_transversal();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0], s3.identity());
        let map = a3.left_coset_map(&t).unwrap();
        assert!(a3.elements().iter().all(|&h| map[h as usize] == 0));
        let c2 = Subgroup::generated(&s3, &[s3.generators()[0]]).unwrap();
        assert!(!c2.is_normal());
        assert_eq!(c2.index(), 3);
        assert!(c2.left_coset_map(&[0, 0, 0]).is_err());
        assert_eq!(c2.intersection(&a3).order(), 1);
    }

    #[test]
    fn own_group_matches() {
        let s4 = Arc::new(library::symmetric(4));
        let sub = Subgroup::generated(&s4, &s4.generators()[..1]).unwrap();
        let own = sub.as_group();
        assert_eq!(own.order(), sub.order());
        for a in own.elements() {
            for b in own.elements() {
                assert_eq!(sub.to_parent(own.mul(a, b)), s4.mul(sub.to_parent(a), sub.to_parent(b)));
            }
        }
        assert!(Subgroup::from_elements(&s4, &[0, 1]).is_err() || s4.mul(1, 1) == 0);
    }
}
