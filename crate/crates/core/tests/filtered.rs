use std::sync::Arc;

use proptest::prelude::*;
use slopeforge::exactnum::frac;
use slopeforge::filtered::{
    graded_characters, hasse_arf_check, herbrand_phi, invariant_dimension, kummer_scale, lemma13_check,
    lower_numbering_swan, slope_decomposition, swan, upper_from_lower, BreakChain, FilterError, LowerChain,
};
use slopeforge::groups::{library, normal_subgroups, FiniteGroup, Subgroup};
use slopeforge::reptheory::{character_table, ClassFunction};
use slopeforge::suites::corpus;
use slopeforge::{Cyclotomic, Limits, Rational, SlopeMultiset};

fn lim() -> Limits {
    Limits::default()
}

fn q(n: i64, d: i64) -> Rational {
    frac(n, d)
}

fn single(s: Rational) -> SlopeMultiset {
    SlopeMultiset::single(s, 1).unwrap()
}

fn c6_char(g: &Arc<FiniteGroup>, k: u64) -> ClassFunction {
    ClassFunction::from_fn(g.clone(), |x| Cyclotomic::root_of_unity(6, k * x as u64))
}

fn sign_chain() -> (BreakChain, ClassFunction) {
    let c2 = Arc::new(library::cyclic(2));
    let f = BreakChain::new(c2.clone(), vec![q(1, 1)], vec![Subgroup::whole(&c2)]).unwrap();
    let sign = ClassFunction::from_fn(c2, |x| Cyclotomic::from_int(if x == 0 { 1 } else { -1 }));
    (f, sign)
}

#[test]
fn c2_sign() {
    let (f, sign) = sign_chain();
    let one = ClassFunction::trivial(f.group());
    assert_eq!(slope_decomposition(&f, &one).unwrap(), single(q(0, 1)));
    assert_eq!(slope_decomposition(&f, &sign).unwrap(), single(q(1, 1)));
    assert_eq!(swan(&f, &one).unwrap(), q(0, 1));
    assert_eq!(swan(&f, &sign).unwrap(), q(1, 1));
    let f2 = kummer_scale(&f, 2).unwrap();
    assert_eq!(f2.breaks(), &[q(2, 1)]);
    assert_eq!(kummer_scale(&f, 1).unwrap().breaks(), f.breaks());
    assert_eq!(kummer_scale(&f, 0).unwrap_err(), FilterError::ZeroScale);
}

#[test]
fn c6_example() {
    let f = corpus::c6_example();
    let g = f.group().clone();
    assert_eq!(slope_decomposition(&f, &c6_char(&g, 5)).unwrap(), single(q(1, 1)));
    assert_eq!(slope_decomposition(&f, &c6_char(&g, 2)).unwrap(), single(q(1, 2)));
    let prod = c6_char(&g, 3).mul(&c6_char(&g, 2)).unwrap();
    assert_eq!(slope_decomposition(&f, &prod).unwrap(), single(q(1, 1)));
    assert!(!hasse_arf_check(&f, &c6_char(&g, 2)).unwrap());
    assert!(hasse_arf_check(&f, &ClassFunction::trivial(&g)).unwrap());

    let table = character_table(&g, &lim()).unwrap();
    let reg = ClassFunction::regular(&g);
    assert!(lemma13_check(&f, &reg, &table).unwrap());
    let pieces = graded_characters(&f, &reg).unwrap();
    let slopes: Vec<Rational> = pieces.iter().map(|(s, _)| s.clone()).collect();
    assert_eq!(slopes, vec![q(0, 1), q(1, 2), q(1, 1)]);
    let degrees: Vec<Option<u64>> = pieces.iter().map(|(_, c)| c.degree()).collect();
    assert_eq!(degrees, vec![Some(1), Some(2), Some(3)]);
}

#[test]
fn invariant_dimensions() {
    let s3 = Arc::new(library::symmetric(3));
    let a3 = normal_subgroups(&s3).into_iter().find(|h| h.order() == 3).unwrap();
    let reg = ClassFunction::regular(&s3);
    assert_eq!(invariant_dimension(&reg, &a3).unwrap(), 2);
    assert_eq!(invariant_dimension(&reg, &Subgroup::whole(&s3)).unwrap(), 1);
    assert_eq!(invariant_dimension(&reg, &Subgroup::trivial(&s3)).unwrap(), 6);
}

#[test]
fn herbrand_examples() {
    let c5 = Arc::new(library::cyclic(5));
    let chain = LowerChain::from_runs(c5.clone(), &[(Subgroup::whole(&c5), 2)]).unwrap();
    let phi = herbrand_phi(&chain);
    assert_eq!(phi.eval(&q(1, 1)), q(1, 1));
    assert_eq!(phi.eval(&q(3, 1)), q(7, 5));
    assert_eq!(phi.final_slope(), &q(1, 5));
    let upper = upper_from_lower(&chain);
    assert_eq!(upper.breaks(), &[q(1, 1)]);

    let c4 = Arc::new(library::cyclic(4));
    let c2 = Subgroup::generated(&c4, &[2]).unwrap();
    let chain = LowerChain::from_runs(c4.clone(), &[(Subgroup::whole(&c4), 3), (c2, 3)]).unwrap();
    let upper = upper_from_lower(&chain);
    assert_eq!(upper.breaks(), &[q(2, 1), q(7, 2)]);
    assert_eq!(herbrand_phi(&chain).slopes(), vec![q(1, 1), q(1, 2), q(1, 4)]);

    let trivial = LowerChain::from_runs(c4.clone(), &[(Subgroup::whole(&c4), 1)]).unwrap();
    assert!(upper_from_lower(&trivial).breaks().is_empty());
}

/// A random break chain drawn from the seeded corpus.
fn chain_and_character() -> impl Strategy<Value = (usize, Vec<u8>, Vec<u8>)> {
    (0usize..64, prop::collection::vec(0u8..3, 1..10), prop::collection::vec(0u8..3, 1..10))
}

fn character_from(g: &Arc<FiniteGroup>, mults: &[u8]) -> ClassFunction {
    let t = character_table(g, &lim()).unwrap();
    let mut acc = ClassFunction::zero(g);
    for (chi, &m) in t.characters().iter().zip(mults.iter().cycle()) {
        for _ in 0..m {
            acc = acc.add(chi).unwrap();
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_invariants((k, a, b) in chain_and_character(), n in 1u64..=5) {
        let chains = corpus::filtered_corpus(7);
        let (_, f) = &chains[k % chains.len()];
        let chi = character_from(f.group(), &a);
        let psi = character_from(f.group(), &b);
        let s = slope_decomposition(f, &chi).unwrap();
        prop_assert_eq!(s.dimension(), chi.degree().unwrap());
        prop_assert_eq!(slope_decomposition(f, &chi.dual()).unwrap(), s.clone());
        let both = chi.add(&psi).unwrap();
        prop_assert_eq!(swan(f, &both).unwrap(), swan(f, &chi).unwrap() + swan(f, &psi).unwrap());
        prop_assert_eq!(slope_decomposition(f, &both).unwrap(), s.add(&slope_decomposition(f, &psi).unwrap()));
        let g = kummer_scale(f, n).unwrap();
        prop_assert_eq!(swan(&g, &chi).unwrap(), swan(f, &chi).unwrap() * Rational::from_integer((n as i64).into()));
        prop_assert_eq!(slope_decomposition(&g, &chi).unwrap(), s.scale_slopes(n).unwrap());
    }

    #[test]
    fn swan_matches_lower_numbering(k in 0usize..200, realizable in any::<bool>()) {
        let chains = if realizable {
            corpus::abelian_lower_chains(11, 30)
        } else {
            corpus::arbitrary_lower_chains(11, 30)
        };
        let (_, c) = &chains[k % chains.len()];
        let f = upper_from_lower(c);
        for chi in character_table(c.group(), &lim()).unwrap().characters() {
            prop_assert_eq!(swan(&f, chi).unwrap(), lower_numbering_swan(c, chi).unwrap());
            if realizable {
                prop_assert!(hasse_arf_check(&f, chi).unwrap());
            }
        }
    }
}

#[test]
fn rejects_bad_chains() {
    let c4 = Arc::new(library::cyclic(4));
    let c2 = Subgroup::generated(&c4, &[2]).unwrap();
    let whole = Subgroup::whole(&c4);
    assert_eq!(
        BreakChain::new(c4.clone(), vec![q(0, 1)], vec![whole.clone()]).unwrap_err(),
        FilterError::NonPositiveBreak
    );
    assert_eq!(
        BreakChain::new(c4.clone(), vec![q(2, 1), q(1, 1)], vec![whole.clone(), c2.clone()]).unwrap_err(),
        FilterError::NotIncreasing
    );
    assert!(matches!(
        BreakChain::new(c4.clone(), vec![q(1, 1)], vec![whole.clone(), c2.clone()]),
        Err(FilterError::LengthMismatch { .. })
    ));
    assert!(BreakChain::new(c4.clone(), vec![q(1, 1), q(2, 1)], vec![c2, whole]).is_err());
    let s3 = Arc::new(library::symmetric(3));
    let c2 = slopeforge::groups::all_subgroups(&s3).into_iter().find(|h| h.order() == 2).unwrap();
    assert_eq!(BreakChain::new(s3, vec![q(1, 1)], vec![c2]).unwrap_err(), FilterError::NotNormal(0));
}
