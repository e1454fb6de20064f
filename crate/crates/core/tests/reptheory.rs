use std::sync::Arc;

use proptest::prelude::*;
use slopeforge::groups::{all_subgroups, library, normal_subgroups, wreath_cyclic, FiniteGroup, Subgroup};
use slopeforge::reptheory::{
    character_table, conjugate_char, induce, inner_product, irreducible_dims_gcd, mackey_check, restrict,
    tensor_induce, tind_summand_check, ClassFunction,
};
use slopeforge::{Cyclotomic, Limits};

fn lim() -> Limits {
    Limits::default()
}

fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
    Arc::new(g)
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_int(n)
}

fn small_groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        arc(library::symmetric(3)),
        arc(library::dihedral(4)),
        arc(library::quaternion()),
        arc(library::alternating(4)),
        arc(library::dihedral(5)),
        arc(library::cyclic(6)),
        arc(library::dicyclic(3)),
        arc(library::symmetric(4)),
    ]
}

/// A character of `g` with irreducible multiplicities taken from `mults`.
fn character_from(g: &Arc<FiniteGroup>, mults: &[u8]) -> ClassFunction {
    let table = character_table(g, &lim()).unwrap();
    let mut acc = ClassFunction::zero(g);
    for (chi, &m) in table.characters().iter().zip(mults.iter().cycle()) {
        for _ in 0..m % 3 {
            acc = acc.add(chi).unwrap();
        }
    }
    acc
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<u8>, Vec<u8>)> {
    (0usize..8, 0usize..64, prop::collection::vec(0u8..3, 1..8), prop::collection::vec(0u8..3, 1..8))
}

fn subgroup_of(g: &Arc<FiniteGroup>, k: usize, normal: bool) -> Subgroup {
    let subs = if normal { normal_subgroups(g) } else { all_subgroups(g) };
    subs[k % subs.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn frobenius_reciprocity((gi, hk, a, b) in case()) {
        let g = small_groups()[gi].clone();
        let h = subgroup_of(&g, hk, false);
        let chi = character_from(&h.as_group(), &a);
        let psi = character_from(&g, &b);
        let lhs = inner_product(&induce(&chi, &h).unwrap(), &psi).unwrap();
        let rhs = inner_product(&chi, &restrict(&psi, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_of_inductions((gi, hk, a, b) in case()) {
        let g = small_groups()[gi].clone();
        let h = subgroup_of(&g, hk, true);
        let chi = character_from(&h.as_group(), &a);
        let mut sum = ClassFunction::zero(chi.group());
        let mut prod = ClassFunction::trivial(chi.group());
        for gamma in h.left_transversal() {
            let c = conjugate_char(&chi, &h, gamma).unwrap();
            sum = sum.add(&c).unwrap();
            prod = prod.mul(&c).unwrap();
        }
        prop_assert_eq!(restrict(&induce(&chi, &h).unwrap(), &h).unwrap(), sum);
        prop_assert_eq!(restrict(&tensor_induce(&chi, &h, None).unwrap(), &h).unwrap(), prod);
        let psi = character_from(&h.as_group(), &b);
        prop_assert!(mackey_check(&chi, &psi, &h).unwrap().holds);
    }

    #[test]
    fn tensor_induction_ignores_the_transversal((gi, hk, a, _b) in case(), shifts in prop::collection::vec(0usize..24, 24)) {
        let g = small_groups()[gi].clone();
        let h = subgroup_of(&g, hk, false);
        let chi = character_from(&h.as_group(), &a);
        let t1 = h.left_transversal();
        let t2: Vec<u32> = t1.iter().zip(&shifts).map(|(&t, &s)| g.mul(t, h.elements()[s % h.order()])).collect();
        prop_assert_eq!(tensor_induce(&chi, &h, Some(&t1)).unwrap(), tensor_induce(&chi, &h, Some(&t2)).unwrap());
    }
}

fn s3_parts() -> (Arc<FiniteGroup>, Subgroup, ClassFunction) {
    let s3 = arc(library::symmetric(3));
    let a3 = normal_subgroups(&s3).into_iter().find(|h| h.order() == 3).unwrap();
    let t = character_table(&a3.as_group(), &lim()).unwrap();
    let omega = t.characters().iter().find(|c| !c.values().iter().all(|v| *v == int(1))).unwrap().clone();
    (s3, a3, omega)
}

#[test]
fn inner_product_examples() {
    let s3 = arc(library::symmetric(3));
    let one = ClassFunction::trivial(&s3);
    assert_eq!(inner_product(&one, &one).unwrap(), int(1));
    assert_eq!(inner_product(&ClassFunction::regular(&s3), &one).unwrap(), int(1));
    let t = character_table(&s3, &lim()).unwrap();
    let chi2 = t.characters().iter().find(|c| c.degree() == Some(2)).unwrap();
    assert_eq!(inner_product(chi2, chi2).unwrap(), int(1));
}

#[test]
fn s3_over_a3() {
    let (s3, a3, omega) = s3_parts();
    let induced = induce(&omega, &a3).unwrap();
    assert_eq!(induced.degree(), Some(2));
    assert_eq!(inner_product(&induced, &induced).unwrap(), int(1));
    let transposition = s3.elements().find(|&g| !a3.contains(g)).unwrap();
    let conj = conjugate_char(&omega, &a3, transposition).unwrap();
    assert_eq!(conj, omega.dual());
    assert_eq!(restrict(&induced, &a3).unwrap(), omega.add(&omega.dual()).unwrap());
    assert!(mackey_check(&omega, &omega, &a3).unwrap().holds);
    let table = character_table(&s3, &lim()).unwrap();
    assert!(tind_summand_check(&omega, &a3, &table).unwrap().holds);
    for gamma in a3.elements() {
        assert_eq!(conjugate_char(&omega, &a3, *gamma).unwrap(), omega);
    }
}

#[test]
fn induction_of_trivial_is_permutation_character() {
    let s4 = arc(library::symmetric(4));
    for h in all_subgroups(&s4) {
        let perm = induce(&ClassFunction::trivial(&h.as_group()), &h).unwrap();
        for g in s4.elements() {
            let fixed = h.left_transversal().iter().filter(|&&t| h.contains(s4.conj(g, t))).count();
            assert_eq!(*perm.value_at(g), int(fixed as i64));
        }
    }
    let whole = Subgroup::whole(&s4);
    let t = character_table(&s4, &lim()).unwrap();
    for chi in t.characters() {
        let own = restrict(chi, &whole).unwrap();
        assert_eq!(induce(&own, &whole).unwrap().values(), chi.values());
        assert_eq!(tensor_induce(&own, &whole, None).unwrap().values(), chi.values());
    }
}

#[test]
fn tables() {
    let degrees = |g: FiniteGroup| {
        let mut d = character_table(&arc(g), &lim()).unwrap().degrees();
        d.sort();
        d
    };
    assert_eq!(degrees(library::symmetric(3)), vec![1, 1, 2]);
    assert_eq!(degrees(library::quaternion()), vec![1, 1, 1, 1, 2]);
    assert_eq!(degrees(library::alternating(5)), vec![1, 3, 3, 4, 5]);
    let c3 = character_table(&arc(library::cyclic(3)), &lim()).unwrap();
    assert_eq!(c3.len(), 3);
    assert!(c3.characters().iter().all(|c| c.values().iter().all(|v| v.conductor() <= 3)));
    for g in [library::symmetric(3), library::quaternion(), library::cyclic(10)] {
        assert_eq!(irreducible_dims_gcd(&arc(g), &lim()).unwrap(), 1);
    }
}

#[test]
fn column_orthogonality() {
    for g in small_groups() {
        let t = character_table(&g, &lim()).unwrap();
        let cc = g.conjugacy_classes();
        for a in 0..cc.len() {
            for b in 0..cc.len() {
                let mut s = int(0);
                for chi in t.characters() {
                    s += &chi.values()[a] * &chi.values()[b].conj();
                }
                let expected = if a == b { (g.order() / cc.size(a)) as i64 } else { 0 };
                assert_eq!(s, int(expected));
            }
        }
    }
}

/// `Ind(psi x 1)` from `A5 x A5` to `A5 wr C2` tensor-induces to `psi x psi`.
#[test]
fn tensor_induction_from_a_simple_base_is_irreducible() {
    let a5 = arc(library::alternating(5));
    let w = wreath_cyclic(&a5, 2, &lim()).unwrap();
    let base = w.base_subgroup().clone();
    let table = character_table(&a5, &lim()).unwrap();
    for psi in table.characters().iter().filter(|c| c.degree() > Some(1)) {
        let chi = ClassFunction::from_fn(base.as_group(), |x| {
            psi.value_at(w.element(base.to_parent(x)).coords[0]).clone()
        });
        let t = tensor_induce(&chi, &base, None).unwrap();
        assert_eq!(t.degree(), psi.degree().map(|d| d * d));
        assert_eq!(inner_product(&t, &t).unwrap(), int(1));
    }
}
