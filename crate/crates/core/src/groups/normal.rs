use std::collections::HashSet;
use std::sync::Arc;

use super::{FiniteGroup, Subgroup};

/// All normal subgroups, sorted by order and then by elements.
///
/// Every normal subgroup is a join of normal closures of conjugacy classes,
/// so the lattice is explored breadth-first from the trivial subgroup by
/// joining one class closure at a time.
pub fn normal_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let classes = group.conjugacy_classes();
    let n = group.order();
    let trivial = {
        let mut m = vec![false; n];
        m[group.identity() as usize] = true;
        m
    };
    let mut seen: HashSet<Vec<bool>> = HashSet::from([trivial.clone()]);
    let mut layer = vec![trivial];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for mask in &layer {
            for class in classes.classes() {
                if mask[class[0] as usize] {
                    continue;
                }
                let mut joined = mask.clone();
                group.close_into(&mut joined, class);
                if seen.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<Subgroup> = seen.iter().map(|m| Subgroup::from_mask(group, m)).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    out
}

pub fn is_simple(group: &Arc<FiniteGroup>) -> bool {
    group.order() > 1 && normal_subgroups(group).len() == 2
}

/// Number of terms in the longest strictly increasing chain drawn from
/// `subgroups`.
pub fn max_normal_chain_length(subgroups: &[Subgroup]) -> usize {
    let mut sorted: Vec<&Subgroup> = subgroups.iter().collect();
    sorted.sort_by_key(|s| s.order());
    let mut best = vec![1usize; sorted.len()];
    for i in 0..sorted.len() {
        for j in 0..i {
            if sorted[j].order() < sorted[i].order() && sorted[j].is_subgroup_of(sorted[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;

    fn orders(g: FiniteGroup) -> Vec<usize> {
        normal_subgroups(&Arc::new(g)).iter().map(Subgroup::order).collect()
    }

    #[test]
    fn lattices_of_small_groups() {
        assert_eq!(orders(library::symmetric(3)), vec![1, 3, 6]);
        assert_eq!(orders(library::symmetric(4)), vec![1, 4, 12, 24]);
        assert_eq!(orders(library::alternating(4)), vec![1, 4, 12]);
        assert_eq!(orders(library::alternating(5)), vec![1, 60]);
        assert_eq!(orders(library::quaternion()), vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(orders(library::dihedral(4)), vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(orders(library::elementary_abelian(2, 2)), vec![1, 2, 2, 2, 4]);
    }

    #[test]
    fn every_result_is_normal() {
        let g = Arc::new(library::sl23());
        let ns = normal_subgroups(&g);
        assert!(ns.iter().all(Subgroup::is_normal));
        assert_eq!(ns.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![1, 2, 8, 24]);
        assert_eq!(max_normal_chain_length(&ns), 4);
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&Arc::new(library::alternating(5))));
        assert!(is_simple(&Arc::new(library::cyclic(7))));
        assert!(!is_simple(&Arc::new(library::alternating(4))));
        assert!(!is_simple(&Arc::new(library::cyclic(1))));
    }
}
