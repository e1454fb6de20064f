use std::collections::VecDeque;

use super::{Elem, FiniteGroup};

/// Conjugacy classes, ordered by their smallest element. The class of the
/// identity is therefore class 0 for groups built by closure.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    class_of: Vec<u32>,
    classes: Vec<Vec<Elem>>,
    inverse_class: Vec<usize>,
    identity_class: usize,
}

impl ConjugacyClasses {
    pub(super) fn compute(g: &FiniteGroup) -> ConjugacyClasses {
        let n = g.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        let gens = g.generators();
        for x in 0..n as Elem {
            if class_of[x as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut orbit = vec![x];
            class_of[x as usize] = id;
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for &s in gens {
                    let z = g.conj(y, s);
                    if class_of[z as usize] == u32::MAX {
                        class_of[z as usize] = id;
                        orbit.push(z);
                        queue.push_back(z);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        let inverse_class = classes
            .iter()
            .map(|c| class_of[g.inv(c[0]) as usize] as usize)
            .collect();
        let identity_class = class_of[g.identity() as usize] as usize;
        ConjugacyClasses { class_of, classes, inverse_class, identity_class }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, g: Elem) -> usize {
        self.class_of[g as usize] as usize
    }

    pub fn class(&self, k: usize) -> &[Elem] {
        &self.classes[k]
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn representative(&self, k: usize) -> Elem {
        self.classes[k][0]
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    /// Class containing the inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    /// Class of `g^e` for `g` in class `k`.
    pub fn power_class(&self, group: &FiniteGroup, k: usize, e: u64) -> usize {
        self.class_of(group.pow(self.representative(k), e))
    }
}
