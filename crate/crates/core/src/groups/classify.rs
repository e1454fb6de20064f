use std::collections::HashSet;
use std::sync::Arc;

use super::{
    is_simple, max_normal_chain_length, normal_subgroups, outer_automorphism_order, DirectPower, Elem,
    FiniteGroup, GroupError, Subgroup, WreathProduct,
};
use crate::exactnum::is_prime;
use crate::limits::Limits;

/// Shape of a shift-stable subgroup of `H^l` whose first projection is onto.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoursatResult {
    /// All of `H^l`.
    Full,
    /// `{(h, phi_2(h), ..., phi_l(h))}`; each `phi_j` is an automorphism of
    /// `H` given as the image of every element, and `phi_j = phi_2^(j-1)`.
    TwistedDiagonal { automorphisms: Vec<Vec<Elem>> },
    /// Anything else; only possible when `H` is abelian.
    Intermediate { order: usize },
}

/// Classifies a set of coordinate tuples forming a subgroup of `H^l`.
pub(crate) fn classify_tuples(
    base: &FiniteGroup,
    ell: usize,
    tuples: &[Vec<Elem>],
) -> Result<GoursatResult, GroupError> {
    let set: HashSet<&[Elem]> = tuples.iter().map(Vec::as_slice).collect();
    for t in tuples {
        let mut shifted = t[1..].to_vec();
        shifted.push(t[0]);
        if !set.contains(shifted.as_slice()) {
            return Err(GroupError::NotShiftStable);
        }
    }
    let m = base.order();
    let mut first = vec![false; m];
    for t in tuples {
        first[t[0] as usize] = true;
    }
    if first.iter().any(|&b| !b) {
        return Err(GroupError::NotSurjective);
    }
    let full = (0..ell).try_fold(1usize, |acc, _| acc.checked_mul(m));
    if full == Some(tuples.len()) {
        return Ok(GoursatResult::Full);
    }
    if tuples.len() == m && ell > 1 {
        let mut phis = vec![vec![0; m]; ell - 1];
        for t in tuples {
            for (j, phi) in phis.iter_mut().enumerate() {
                phi[t[0] as usize] = t[j + 1];
            }
        }
        return Ok(GoursatResult::TwistedDiagonal { automorphisms: phis });
    }
    Ok(GoursatResult::Intermediate { order: tuples.len() })
}

/// Classifies `hp`, a subgroup of `power = H^l` with `H` simple and `l`
/// prime.
pub fn goursat_classify(power: &DirectPower, hp: &Subgroup) -> Result<GoursatResult, GroupError> {
    if !Arc::ptr_eq(hp.parent(), power.group()) {
        return Err(GroupError::NotSubgroup);
    }
    if !is_prime(power.ell() as u64) {
        return Err(GroupError::NotPrime(power.ell() as u64));
    }
    if !is_simple(power.base()) {
        return Err(GroupError::NotSimple);
    }
    let tuples: Vec<Vec<Elem>> = hp.elements().iter().map(|&x| power.decode(x)).collect();
    classify_tuples(power.base(), power.ell(), &tuples)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prop45Case {
    /// The intersection with the base is all of `H^l`.
    FullBase,
    /// The intersection with the base is a twisted diagonal copy of `H`.
    Diagonal,
}

#[derive(Debug, Clone)]
pub struct Prop45Report {
    pub case: Prop45Case,
    pub base_is_abelian: bool,
    /// Normal subgroups of the image, as subgroups of the wreath product.
    pub normal_subgroups: Vec<Subgroup>,
    pub max_normal_chain_length: usize,
    pub chain_bound_holds: bool,
    /// For nonabelian base: whether the normal subgroups are exactly
    /// `1`, the base intersection and the whole image (in the diagonal case
    /// this is expected only when the image is not a direct product).
    pub normal_list_matches: Option<bool>,
    /// Diagonal case only: whether the image is `C_l x H` internally.
    pub direct_product: Option<bool>,
    pub outer_automorphism_order: Option<u64>,
    /// When `l` does not divide `|Out(H)|` the image must split as a direct
    /// product; `None` when this was not applicable.
    pub out_criterion_consistent: Option<bool>,
}

/// Classifies an image `gbar` inside `C_l wr H` for `l` prime and `H`
/// simple.
pub fn prop45_classify(
    wreath: &WreathProduct,
    gbar: &Subgroup,
    out_order: Option<u64>,
    limits: &Limits,
) -> Result<Prop45Report, GroupError> {
    if !Arc::ptr_eq(gbar.parent(), wreath.group()) {
        return Err(GroupError::NotSubgroup);
    }
    let ell = wreath.degree();
    if !is_prime(ell as u64) {
        return Err(GroupError::NotPrime(ell as u64));
    }
    if !wreath.has_cyclic_prime_top() {
        return Err(GroupError::NotCyclicTop);
    }
    let base = wreath.base();
    if !is_simple(base) {
        return Err(GroupError::NotSimple);
    }
    if gbar.elements().iter().all(|&g| wreath.element(g).is_base()) {
        return Err(GroupError::TopNotSurjective);
    }
    let hp = gbar.intersection(wreath.base_subgroup());
    let tuples: Vec<Vec<Elem>> = hp.elements().iter().map(|&x| wreath.element(x).coords.clone()).collect();
    let case = match classify_tuples(base, ell, &tuples)? {
        GoursatResult::Full => Prop45Case::FullBase,
        GoursatResult::TwistedDiagonal { .. } => Prop45Case::Diagonal,
        GoursatResult::Intermediate { .. } => return Err(GroupError::OutsideDichotomy),
    };
    let base_is_abelian = base.is_abelian();

    let own = gbar.as_group();
    let normals: Vec<Subgroup> = normal_subgroups(&own).iter().map(|n| gbar.lift(n)).collect();
    let chain = max_normal_chain_length(&normals);

    let direct_product = (case == Prop45Case::Diagonal).then(|| {
        normals.iter().any(|k| k.order() == ell && k.intersection(&hp).is_trivial())
    });
    let normal_list_matches = (!base_is_abelian).then(|| {
        let expected = normals.len() == 3
            && normals.iter().any(|n| n.is_trivial())
            && normals.iter().any(|n| *n == hp)
            && normals.iter().any(|n| n == gbar);
        match direct_product {
            Some(true) => !expected,
            _ => expected,
        }
    });
    let out = match out_order {
        Some(o) => Some(o),
        None if base.order() <= limits.max_automorphism_order => Some(outer_automorphism_order(base, limits)?),
        None => None,
    };
    let out_criterion_consistent = match (out, direct_product) {
        (Some(o), Some(dp)) if !base_is_abelian && o % ell as u64 != 0 => Some(dp),
        _ => None,
    };
    Ok(Prop45Report {
        case,
        base_is_abelian,
        normal_subgroups: normals,
        max_normal_chain_length: chain,
        chain_bound_holds: base_is_abelian || chain <= 3,
        normal_list_matches,
        direct_product,
        outer_automorphism_order: out,
        out_criterion_consistent,
    })
}

/// Smallest prime not in `exclude` that divides none of `avoid_divisors`.
pub fn select_prime(exclude: &[u64], avoid_divisors: &[u64]) -> Result<u64, GroupError> {
    if avoid_divisors.contains(&0) {
        return Err(GroupError::ZeroDivisor);
    }
    let mut p = 2u64;
    loop {
        if is_prime(p) && !exclude.contains(&p) && avoid_divisors.iter().all(|&n| n % p != 0) {
            return Ok(p);
        }
        p += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{direct_product, embed_in_wreath, library, wreath_cyclic};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn prime_selection() {
        assert_eq!(select_prime(&[2, 3], &[]).unwrap(), 5);
        assert_eq!(select_prime(&[], &[6, 10]).unwrap(), 7);
        assert_eq!(select_prime(&[], &[]).unwrap(), 2);
        assert!(select_prime(&[], &[0]).is_err());
    }

    #[test]
    fn goursat_on_squares() {
        let a5 = Arc::new(library::alternating(5));
        let p = DirectPower::new(a5.clone(), 2, &lim()).unwrap();
        let whole = Subgroup::whole(p.group());
        assert_eq!(goursat_classify(&p, &whole).unwrap(), GoursatResult::Full);
        let diag_gens: Vec<Elem> = a5.generators().iter().map(|&s| p.encode(&[s, s])).collect();
        let diag = Subgroup::generated(p.group(), &diag_gens).unwrap();
        match goursat_classify(&p, &diag).unwrap() {
            GoursatResult::TwistedDiagonal { automorphisms } => {
                assert_eq!(automorphisms.len(), 1);
                assert!(automorphisms[0].iter().enumerate().all(|(i, &j)| i as Elem == j))
            }
            other => panic!("{other:?}"),
        }
        let left: Vec<Elem> = a5.generators().iter().map(|&s| p.encode(&[s, 0])).collect();
        let left = Subgroup::generated(p.group(), &left).unwrap();
        assert_eq!(goursat_classify(&p, &left).unwrap_err(), GroupError::NotShiftStable);
    }

    #[test]
    fn cyclic_square_diagonals() {
        let c3 = Arc::new(library::cyclic(3));
        let p = DirectPower::new(c3.clone(), 2, &lim()).unwrap();
        let anti = Subgroup::generated(p.group(), &[p.encode(&[1, 2])]).unwrap();
        let GoursatResult::TwistedDiagonal { automorphisms } = goursat_classify(&p, &anti).unwrap() else {
            panic!("expected a twisted diagonal");
        };
        assert_eq!(automorphisms, vec![vec![0, 2, 1]]);
        let s3 = Arc::new(library::symmetric(3));
        let p = DirectPower::new(s3, 2, &lim()).unwrap();
        assert_eq!(goursat_classify(&p, &Subgroup::whole(p.group())).unwrap_err(), GroupError::NotSimple);
    }

    #[test]
    fn abelian_cube_has_intermediate_subgroups() {
        let c3 = Arc::new(library::cyclic(3));
        let p = DirectPower::new(c3.clone(), 3, &lim()).unwrap();
        let g = c3.generators()[0];
        let g2 = c3.mul(g, g);
        // a + b + c = 0
        let gens = [p.encode(&[g, g2, 0]), p.encode(&[0, g, g2])];
        let sum_zero = Subgroup::generated(p.group(), &gens).unwrap();
        assert_eq!(sum_zero.order(), 9);
        assert_eq!(goursat_classify(&p, &sum_zero).unwrap(), GoursatResult::Intermediate { order: 9 });
    }

    #[test]
    fn diagonal_product_is_split() {
        let a5 = Arc::new(library::alternating(5));
        let c2 = library::cyclic(2);
        let g = Arc::new(direct_product(&c2, &a5, &lim()).unwrap());
        // A5 sits at indices 0..60 with trivial C2 coordinate
        let h = Subgroup::from_elements(&g, &(0..60).collect::<Vec<_>>()).unwrap();
        let emb = embed_in_wreath(&h, &[0, 60]).unwrap();
        let w = wreath_cyclic(emb.base(), 2, &lim()).unwrap();
        let gbar = emb.image_in(&w).unwrap();
        let report = prop45_classify(&w, &gbar, None, &lim()).unwrap();
        assert_eq!(report.case, Prop45Case::Diagonal);
        assert_eq!(report.direct_product, Some(true));
        assert_eq!(report.normal_subgroups.len(), 4);
        assert_eq!(report.max_normal_chain_length, 3);
        assert!(report.chain_bound_holds);
        assert_eq!(report.normal_list_matches, Some(true));
        assert_eq!(report.outer_automorphism_order, Some(2));
        assert_eq!(report.out_criterion_consistent, None);
    }

    #[test]
    fn full_wreath_is_full_base() {
        let a5 = Arc::new(library::alternating(5));
        let w = wreath_cyclic(&a5, 2, &lim()).unwrap();
        let gbar = Subgroup::whole(w.group());
        let report = prop45_classify(&w, &gbar, Some(2), &lim()).unwrap();
        assert_eq!(report.case, Prop45Case::FullBase);
        assert_eq!(report.normal_subgroups.len(), 3);
        assert_eq!(report.normal_list_matches, Some(true));
        assert_eq!(report.direct_product, None);
    }

    #[test]
    fn rejects_bad_bases() {
        let s3 = Arc::new(library::symmetric(3));
        let w = wreath_cyclic(&s3, 2, &lim()).unwrap();
        assert_eq!(
            prop45_classify(&w, &Subgroup::whole(w.group()), None, &lim()).unwrap_err(),
            GroupError::NotSimple
        );
        let c3 = Arc::new(library::cyclic(3));
        let w = wreath_cyclic(&c3, 2, &lim()).unwrap();
        let base_only = w.base_subgroup().clone();
        assert_eq!(prop45_classify(&w, &base_only, None, &lim()).unwrap_err(), GroupError::TopNotSurjective);
    }
}
