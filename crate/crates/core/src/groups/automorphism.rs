use std::collections::VecDeque;

use super::{Elem, FiniteGroup, GroupError};
use crate::limits::Limits;

/// Extends `images` (one per generator of `source`) to a homomorphism into
/// `target`, or returns `None` if no such homomorphism exists.
pub fn extend_homomorphism(source: &FiniteGroup, target: &FiniteGroup, images: &[Elem]) -> Option<Vec<Elem>> {
    let gens = source.generators();
    assert_eq!(gens.len(), images.len(), "one image per generator");
    let mut map = vec![Elem::MAX; source.order()];
    map[source.identity() as usize] = target.identity();
    let mut queue = VecDeque::from([source.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x as usize];
        for (&s, &fs) in gens.iter().zip(images) {
            let y = source.mul(x, s) as usize;
            let fy = target.mul(fx, fs);
            if map[y] == Elem::MAX {
                map[y] = fy;
                queue.push_back(y as Elem);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// Candidate images for each generator: same element order and, when
/// `class_sizes` is set, the same conjugacy class size.
fn candidates(source: &FiniteGroup, target: &FiniteGroup, class_sizes: bool) -> Vec<Vec<Elem>> {
    let scc = source.conjugacy_classes();
    let tcc = target.conjugacy_classes();
    source
        .generators()
        .iter()
        .map(|&s| {
            target
                .elements()
                .filter(|&t| {
                    target.element_order(t) == source.element_order(s)
                        && (!class_sizes || tcc.size(tcc.class_of(t)) == scc.size(scc.class_of(s)))
                })
                .collect()
        })
        .collect()
}

/// Visits every bijective homomorphism `source -> target`; stops early when
/// `visit` returns `false`.
fn for_each_isomorphism(source: &FiniteGroup, target: &FiniteGroup, mut visit: impl FnMut(&[Elem]) -> bool) {
    if source.order() != target.order() {
        return;
    }
    let cands = candidates(source, target, true);
    let k = cands.len();
    if cands.iter().any(Vec::is_empty) {
        return;
    }
    let mut pos = vec![0usize; k];
    loop {
        let images: Vec<Elem> = (0..k).map(|i| cands[i][pos[i]]).collect();
        if let Some(map) = extend_homomorphism(source, target, &images) {
            let mut hit = vec![false; target.order()];
            let bijective = map.iter().all(|&y| !std::mem::replace(&mut hit[y as usize], true));
            if bijective && !visit(&map) {
                return;
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            pos[i] += 1;
            if pos[i] < cands[i].len() {
                break;
            }
            pos[i] = 0;
            i += 1;
        }
    }
}

pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() || a.conjugacy_classes().len() != b.conjugacy_classes().len() {
        return false;
    }
    let mut oa = a.element_orders().to_vec();
    let mut ob = b.element_orders().to_vec();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob {
        return false;
    }
    let mut found = false;
    for_each_isomorphism(a, b, |_| {
        found = true;
        false
    });
    found
}

/// `|Aut(G)|` by enumerating generator images.
pub fn automorphism_count(group: &FiniteGroup, limits: &Limits) -> Result<u64, GroupError> {
    if group.order() > limits.max_automorphism_order {
        return Err(GroupError::BruteForceBound { order: group.order(), bound: limits.max_automorphism_order });
    }
    let mut count = 0u64;
    for_each_isomorphism(group, group, |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// `|Out(G)| = |Aut(G)| / |Inn(G)|`, with `|Inn(G)| = |G| / |Z(G)|`.
pub fn outer_automorphism_order(group: &FiniteGroup, limits: &Limits) -> Result<u64, GroupError> {
    let aut = automorphism_count(group, limits)?;
    let inn = (group.order() / group.center().len()) as u64;
    Ok(aut / inn)
}
