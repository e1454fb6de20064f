use std::collections::HashSet;
use std::sync::Arc;

use super::{FiniteGroup, Subgroup};

/// Every subgroup, found as joins of cyclic subgroups; sorted by order and
/// then by elements. Intended for small groups.
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let n = group.order();
    let mut cyclic: Vec<(u32, Vec<bool>)> = Vec::new();
    let mut seen_cyclic: HashSet<Vec<bool>> = HashSet::new();
    for g in group.elements() {
        let (_, mask) = group.span(&[g]);
        if seen_cyclic.insert(mask.clone()) {
            cyclic.push((g, mask));
        }
    }
    let mut seen: HashSet<Vec<bool>> = seen_cyclic.clone();
    let mut layer: Vec<Vec<bool>> = seen_cyclic.into_iter().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for mask in &layer {
            for (g, _) in &cyclic {
                if mask[*g as usize] {
                    continue;
                }
                let mut joined = mask.clone();
                group.close_into(&mut joined, &[*g]);
                if seen.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        layer = next;
    }
    debug_assert!(seen.iter().all(|m| m.len() == n));
    let mut out: Vec<Subgroup> = seen.iter().map(|m| Subgroup::from_mask(group, m)).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    out
}
