//! The runners behind [`super::CRITERIA`].

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use super::corpus;
use super::{SuiteConfig, Tally};
use crate::exactnum::{frac, ExactScalar};
use crate::filtered::{
    cor_a2_check, hasse_arf_check, kummer_scale, lemma13_check, lower_numbering_swan, ppower_dim_check,
    slope_decomposition, swan, tensor_bound_check, upper_from_lower, LowerChain,
};
use crate::groups::{
    all_subgroups, direct_product, embed_in_wreath, goursat_classify, library, normal_subgroups,
    outer_automorphism_order, prop45_classify, wreath_cyclic, DirectPower, FiniteGroup, GoursatResult, GroupError,
    Prop45Case, Subgroup,
};
use crate::reptheory::{
    character_of, character_table, conjugate_char, induce, irreducible_dims_gcd, mackey_check, realize_character,
    restrict, tensor_induce, tensor_induced_matrix_rep, tind_summand_check, CharacterTable, ClassFunction,
};
use crate::weyl::{build_root_system, check_2m_rho, weyl_dim, Family};
use crate::{Cyclotomic, Limits, Rational, SlopeMultiset};

pub(crate) fn run_named(id: u8, config: &SuiteConfig) -> Tally {
    match id {
        1 => weyl(),
        2 => hasse_arf(config),
        3 => swan_oracle(config),
        4 => mackey(config),
        5 => tensor_induction(config),
        6 => k0_additivity(config),
        7 => slope_filtration(config),
        8 => kummer(config),
        9 => robba(config),
        10 => wreath(config),
        11 => dims_gcd(config),
        12 => ppower_cor_a2(config),
        _ => {
            let mut t = Tally::default();
            t.fail(format!("unknown criterion {id}"));
            t
        }
    }
}

fn sum(tallies: impl ParallelIterator<Item = Tally>) -> Tally {
    tallies.reduce(Tally::default, Tally::merge)
}

/// Runs `f`, turning an error into a failure.
fn guarded<E: std::fmt::Display>(t: &mut Tally, what: &str, f: impl FnOnce(&mut Tally) -> Result<(), E>) {
    if let Err(e) = f(t) {
        t.fail(format!("{what}: {e}"));
    }
}

fn table(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<CharacterTable, String> {
    character_table(g, limits).map_err(|e| e.to_string())
}

fn weyl() -> Tally {
    let mut t = Tally::default();
    let types = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ];
    for (f, n) in types {
        guarded(&mut t, &format!("{f}{n}"), |t| {
            let rs = build_root_system::<Rational>(f, n)?;
            for m in 1..=3 {
                t.check(check_2m_rho(&rs, m)?, || format!("{f}{n} m={m}"));
            }
            Ok::<(), crate::weyl::WeylError>(())
        });
    }
    guarded(&mut t, "spot values", |t| {
        let a2 = build_root_system::<Rational>(Family::A, 2)?;
        let d = weyl_dim(&a2, &a2.two_m_rho(1))?;
        t.check(d == frac(27, 1), || format!("A2 m=1 gave {d}"));
        let g2 = build_root_system::<Rational>(Family::G, 2)?;
        let d = weyl_dim(&g2, &g2.two_m_rho(2))?;
        t.check(d == frac(15625, 1), || format!("G2 m=2 gave {d}"));
        Ok::<(), crate::weyl::WeylError>(())
    });
    t
}

fn irreducibles(g: &Arc<FiniteGroup>, limits: &Limits) -> Result<Vec<ClassFunction>, String> {
    Ok(table(g, limits)?.characters().to_vec())
}

fn hasse_arf(config: &SuiteConfig) -> Tally {
    let chains = corpus::abelian_lower_chains(config.seed, 24);
    let mut t = sum(chains.par_iter().map(|(name, c)| {
        let mut t = Tally::default();
        let f = upper_from_lower(c);
        t.check(f.breaks().iter().all(|b| b.is_integer()), || format!("{name}: upper breaks {:?}", f.breaks()));
        guarded(&mut t, name, |t| {
            for (i, chi) in irreducibles(c.group(), &config.limits)?.iter().enumerate() {
                let s = swan(&f, chi).map_err(|e| e.to_string())?;
                t.check(s.is_integer(), || format!("{name}: irreducible {i} has Swan {s}"));
                t.check(hasse_arf_check(&f, chi).map_err(|e| e.to_string())?, || format!("{name}: polygon {i}"));
            }
            Ok::<(), String>(())
        });
        t
    }));
    t.check(chains.len() >= 20, || format!("corpus has {} chains", chains.len()));
    t
}

fn swan_pairs(name: &str, c: &LowerChain, limits: &Limits) -> Tally {
    let mut t = Tally::default();
    let f = upper_from_lower(c);
    guarded(&mut t, name, |t| {
        for (i, chi) in irreducibles(c.group(), limits)?.iter().enumerate() {
            let a = swan(&f, chi).map_err(|e| e.to_string())?;
            let b = lower_numbering_swan(c, chi).map_err(|e| e.to_string())?;
            t.check(a == b, || format!("{name}: irreducible {i}: {a} vs {b}"));
        }
        Ok::<(), String>(())
    });
    t
}

fn swan_oracle(config: &SuiteConfig) -> Tally {
    let mut chains = corpus::abelian_lower_chains(config.seed, 24);
    chains.extend(corpus::arbitrary_lower_chains(config.seed, 24));
    sum(chains.par_iter().map(|(name, c)| swan_pairs(name, c, &config.limits)))
}

/// A nonzero character built from irreducibles with multiplicities in 0..=2.
fn random_character(rng: &mut impl Rng, irr: &[ClassFunction]) -> ClassFunction {
    loop {
        let mut acc = ClassFunction::zero(irr[0].group());
        for chi in irr {
            for _ in 0..rng.gen_range(0..=2) {
                acc = acc.add(chi).expect("same group");
            }
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

fn mackey(config: &SuiteConfig) -> Tally {
    let pairs = corpus::normal_pairs();
    let mut t = sum(pairs.par_iter().enumerate().map(|(k, (name, _g, h))| {
        let mut t = Tally::default();
        let mut rng = corpus::rng(config.seed, 40 + k as u64);
        guarded(&mut t, name, |t| {
            let irr = irreducibles(&h.as_group(), &config.limits)?;
            let transversal = h.left_transversal();
            for _ in 0..3 {
                let v = random_character(&mut rng, &irr);
                let w = random_character(&mut rng, &irr);
                let m = mackey_check(&v, &w, h).map_err(|e| e.to_string())?;
                t.check(m.holds, || format!("{name}: Mackey identity"));

                let res_ind = restrict(&induce(&v, h).map_err(|e| e.to_string())?, h).map_err(|e| e.to_string())?;
                let res_tind =
                    restrict(&tensor_induce(&v, h, None).map_err(|e| e.to_string())?, h).map_err(|e| e.to_string())?;
                let mut sum = ClassFunction::zero(v.group());
                let mut prod = ClassFunction::trivial(v.group());
                for &gamma in &transversal {
                    let c = conjugate_char(&v, h, gamma).map_err(|e| e.to_string())?;
                    sum = sum.add(&c).map_err(|e| e.to_string())?;
                    prod = prod.mul(&c).map_err(|e| e.to_string())?;
                }
                t.check(res_ind == sum, || format!("{name}: Res Ind"));
                t.check(res_tind == prod, || format!("{name}: Res TInd"));
            }
            Ok::<(), String>(())
        });
        t
    }));
    t.check(pairs.len() >= 10, || format!("{} pairs", pairs.len()));
    t.check(pairs.iter().all(|(_, g, _)| g.order() <= 48), || "group over order 48".to_string());
    t
}

fn tensor_induction(config: &SuiteConfig) -> Tally {
    let groups = corpus::tiny_groups();
    let cases: Vec<(String, Arc<FiniteGroup>, Subgroup)> = groups
        .iter()
        .flat_map(|(name, g)| all_subgroups(g).into_iter().map(move |h| (format!("{name} > order {}", h.order()), g.clone(), h)))
        .collect();
    let mut t = sum(cases.par_iter().map(|(name, g, h)| {
        let mut t = Tally::default();
        guarded(&mut t, name, |t| {
            let own = h.as_group();
            let th = table(&own, &config.limits)?;
            let tg = if h.is_normal() { Some(table(g, &config.limits)?) } else { None };
            let transversal = h.left_transversal();
            for (i, chi) in th.characters().iter().enumerate() {
                if chi.degree().is_some_and(|d| d > 2) {
                    continue;
                }
                let rho = realize_character(chi, &th, &config.limits).map_err(|e| e.to_string())?;
                t.check(character_of(&rho) == *chi, || format!("{name}: realization of {i}"));
                let m = tensor_induced_matrix_rep(&rho, h, &transversal, &config.limits).map_err(|e| e.to_string())?;
                t.check(m.is_multiplicative(), || format!("{name}: tensor-induced matrices of {i}"));
                let formula = tensor_induce(chi, h, Some(&transversal)).map_err(|e| e.to_string())?;
                t.check(character_of(&m) == formula, || format!("{name}: trace of {i}"));
                if let Some(tg) = &tg {
                    let s = tind_summand_check(chi, h, tg).map_err(|e| e.to_string())?;
                    t.check(s.holds, || format!("{name}: summand check of {i}"));
                }
            }
            Ok::<(), String>(())
        });
        t
    }));
    t.note(format!("{} (G, H) pairs", cases.len()));
    t
}

fn k0_additivity(config: &SuiteConfig) -> Tally {
    let mut t = Tally::default();
    let multisets = corpus::slope_multisets(config.seed, 101);
    for w in multisets.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let ab = a.add(b);
        t.check(ab.polygon() == a.polygon().sum(&b.polygon()), || format!("NP not additive on {a:?} + {b:?}"));
        let h = a.polygon().height() + b.polygon().height();
        t.check(ab.polygon().height() == h, || format!("hNP not additive on {a:?} + {b:?}"));
        t.check(ab.polygon().height() == ab.weighted_sum(), || format!("hNP of {ab:?}"));
        t.check(a.polygon().slopes().as_ref() == Some(a), || format!("slopes of NP({a:?})"));
        if a.polygon().is_integral() && b.polygon().is_integral() {
            t.check(ab.polygon().is_integral(), || format!("integrality of {a:?} + {b:?}"));
        }
    }
    // duality on realized representations
    let mut rng = corpus::rng(config.seed, 61);
    for (name, f) in corpus::filtered_corpus(config.seed).iter().take(6) {
        guarded(&mut t, name, |t| {
            let irr = irreducibles(f.group(), &config.limits)?;
            let chi = random_character(&mut rng, &irr);
            let a = slope_decomposition(f, &chi).map_err(|e| e.to_string())?;
            let b = slope_decomposition(f, &chi.dual()).map_err(|e| e.to_string())?;
            t.check(a == b, || format!("{name}: dual changes the slopes"));
            Ok::<(), String>(())
        });
    }
    t
}

fn slope_filtration(config: &SuiteConfig) -> Tally {
    let chains = corpus::filtered_corpus(config.seed);
    let mut t = sum(chains.par_iter().map(|(name, f)| {
        let mut t = Tally::default();
        guarded(&mut t, name, |t| {
            let tab = table(f.group(), &config.limits)?;
            let irr = tab.characters();
            let e = |e: crate::filtered::FilterError| e.to_string();
            let mut decomps = Vec::with_capacity(irr.len());
            for (i, chi) in irr.iter().enumerate() {
                let s = slope_decomposition(f, chi).map_err(e)?;
                t.check(s.entries().len() == 1, || format!("{name}: irreducible {i} has slopes {s:?}"));
                t.check(s.dimension() == chi.degree().unwrap_or(0), || format!("{name}: multiplicities of {i}"));
                t.check(lemma13_check(f, chi, &tab).map_err(e)?, || format!("{name}: pieces of {i}"));
                decomps.push(s);
            }
            let reg = ClassFunction::regular(f.group());
            t.check(lemma13_check(f, &reg, &tab).map_err(e)?, || format!("{name}: pieces of the regular character"));
            let total = slope_decomposition(f, &reg).map_err(e)?.dimension();
            t.check(total == f.group().order() as u64, || format!("{name}: regular multiplicities"));
            for (i, a) in irr.iter().enumerate() {
                for (j, b) in irr.iter().enumerate().skip(i) {
                    t.check(tensor_bound_check(f, a, b).map_err(e)?, || format!("{name}: tensor bound {i} x {j}"));
                    let (sa, sb) = (&decomps[i].entries()[0].0, &decomps[j].entries()[0].0);
                    if sa == sb && !sa.is_zero() {
                        let prod = slope_decomposition(f, &a.mul(b).map_err(|e| e.to_string())?).map_err(e)?;
                        if prod.entries().iter().any(|(s, _)| s < sa) {
                            t.note(format!("{name}: equal-slope drop at {sa} for {i} x {j}"));
                        }
                    }
                }
            }
            Ok::<(), String>(())
        });
        t
    }));
    t.check(chains.len() >= 15, || format!("corpus has {} chains", chains.len()));
    let drops = t.notes.iter().filter(|n| n.contains("equal-slope drop")).count();
    t.check(drops > 0, || "no equal-slope drop observed".to_string());
    guarded(&mut t, "C6 example", |t| {
        let f = corpus::c6_example();
        let g = f.group().clone();
        let chi = |k: u64| ClassFunction::from_fn(g.clone(), |x| Cyclotomic::root_of_unity(6, k * x as u64));
        let e = |e: crate::filtered::FilterError| e.to_string();
        let one = SlopeMultiset::single(frac(1, 1), 1).map_err(|e| e.to_string())?;
        let half = SlopeMultiset::single(frac(1, 2), 1).map_err(|e| e.to_string())?;
        let (a, b) = (chi(3), chi(5));
        t.check(slope_decomposition(&f, &a).map_err(e)? == one, || "C6: order 2 character not at slope 1".into());
        t.check(slope_decomposition(&f, &b).map_err(e)? == one, || "C6: order 6 character not at slope 1".into());
        let prod = a.mul(&b).map_err(|e| e.to_string())?;
        t.check(prod == chi(2), || "C6: product is not the order 3 character".into());
        t.check(slope_decomposition(&f, &prod).map_err(e)? == half, || "C6: product not at slope 1/2".into());
        t.check(tensor_bound_check(&f, &a, &b).map_err(e)?, || "C6: tensor bound".into());
        Ok::<(), String>(())
    });
    t
}

fn kummer(config: &SuiteConfig) -> Tally {
    let chains = corpus::filtered_corpus(config.seed);
    sum(chains.par_iter().map(|(name, f)| {
        let mut t = Tally::default();
        guarded(&mut t, name, |t| {
            let irr = irreducibles(f.group(), &config.limits)?;
            let e = |e: crate::filtered::FilterError| e.to_string();
            for n in 1..=5u64 {
                let g = kummer_scale(f, n).map_err(e)?;
                let k = Rational::from_integer((n as i64).into());
                for (i, chi) in irr.iter().enumerate() {
                    let (a, b) = (swan(&g, chi).map_err(e)?, swan(f, chi).map_err(e)?);
                    t.check(a == &k * &b, || format!("{name}: n={n} irreducible {i}: {a} vs {b}"));
                    let scaled = slope_decomposition(f, chi).map_err(e)?.scale_slopes(n).map_err(|e| e.to_string())?;
                    t.check(slope_decomposition(&g, chi).map_err(e)? == scaled, || format!("{name}: n={n} slopes {i}"));
                }
            }
            Ok::<(), String>(())
        });
        t
    }))
}

fn robba(config: &SuiteConfig) -> Tally {
    let ops = corpus::robba_corpus(config.seed, 50);
    let mut t = Tally::default();
    if let Some(first) = ops.first() {
        t.check(first.p_power_reduce().0 == 2, || "p=2, a=(0,1) needs N=2".to_string());
    }
    for (k, l) in ops.iter().enumerate() {
        let name = format!("operator {k} (p={}, a={:?})", l.prime(), l.coefficients());
        let r = l.reduce();
        let expected = r.pole_order().saturating_sub(1) as i64;
        t.check(l.slope() == frac(expected, 1), || format!("{name}: slope"));
        t.check(r.reduce() == r && r.slope() == l.slope(), || format!("{name}: reduction not stable"));
        let (n, residue) = l.p_power_reduce();
        let searched = crate::robba::p_power_reduce_search(l, 12);
        t.check(searched == Some(n), || format!("{name}: N={n}, search found {searched:?}"));
        let tame = l.tensor_power(l.prime().pow(n));
        t.check(tame.is_tame() && tame.residue() == residue, || format!("{name}: p^N power"));
        for m in 1..=5u64 {
            match l.kummer_pullback(m) {
                Ok(pb) => {
                    let k = Rational::from_integer((m as i64).into());
                    t.check(pb.slope() == &k * &l.slope(), || format!("{name}: pullback slope n={m}"));
                    t.check(pb.residue() == ExactScalar::fract(&(&k * &l.coefficient(1))), || format!("{name}: pullback residue n={m}"));
                }
                Err(e) => t.fail(format!("{name}: {e}")),
            }
        }
        match tame.character_order() {
            Ok(m) => {
                let a1 = tame.coefficient(1);
                let ok = m >= 1
                    && (&a1 * Rational::from_integer((m as i64).into())).is_integer()
                    && (1..m).all(|j| !(&a1 * Rational::from_integer((j as i64).into())).is_integer());
                t.check(ok, || format!("{name}: character order {m}"));
            }
            Err(e) => t.fail(format!("{name}: {e}")),
        }
    }
    t.check(ops.len() >= 50, || format!("{} operators", ops.len()));
    t
}

/// `x -> (x_{l-1}, x_0, ..., x_{l-2})` on `H^l`.
fn shift(p: &DirectPower, x: u32) -> u32 {
    let mut c = p.decode(x);
    c.rotate_right(1);
    p.encode(&c)
}

fn goursat_brute_force(base: FiniteGroup, ell: usize, limits: &Limits) -> Tally {
    let mut t = Tally::default();
    let name = format!("C{}^{ell}", base.order());
    let base = Arc::new(base);
    let power = match DirectPower::new(base.clone(), ell, limits) {
        Ok(p) => p,
        Err(e) => {
            t.fail(format!("{name}: {e}"));
            return t;
        }
    };
    let n = base.order();
    let mut counts = [0usize; 3];
    for s in all_subgroups(power.group()) {
        let stable = s.elements().iter().all(|&x| s.contains(shift(&power, x)));
        let firsts: std::collections::BTreeSet<u32> = s.elements().iter().map(|&x| power.decode(x)[0]).collect();
        let surjective = firsts.len() == n;
        let got = goursat_classify(&power, &s);
        match (stable, surjective, got) {
            (false, _, Err(GroupError::NotShiftStable)) => t.check(true, String::new),
            (true, false, Err(GroupError::NotSurjective)) => t.check(true, String::new),
            (true, true, Ok(GoursatResult::Full)) => {
                counts[0] += 1;
                t.check(s.order() == power.group().order(), || format!("{name}: Full of order {}", s.order()));
            }
            (true, true, Ok(GoursatResult::TwistedDiagonal { automorphisms })) => {
                counts[1] += 1;
                let mut ok = s.order() == n && automorphisms.len() == ell - 1;
                for h in 0..n as u32 {
                    let mut tuple = vec![h];
                    tuple.extend(automorphisms.iter().map(|phi| phi[h as usize]));
                    ok &= s.contains(power.encode(&tuple));
                }
                t.check(ok, || format!("{name}: diagonal of order {} does not match its automorphisms", s.order()));
            }
            (true, true, Ok(GoursatResult::Intermediate { order })) => {
                counts[2] += 1;
                t.check(order == s.order() && n < order && order < power.group().order(), || {
                    format!("{name}: intermediate of order {order}")
                });
            }
            (st, su, got) => t.fail(format!("{name}: stable={st} surjective={su} but classified {got:?}")),
        }
    }
    t.note(format!("{name}: {} full, {} diagonal, {} intermediate", counts[0], counts[1], counts[2]));
    t
}

/// `C_l x H` inside `C_l wr H` through the embedding with transversal
/// `(k, 1)` for `k` in `C_l`.
fn diagonal_case(base: FiniteGroup, ell: u32, limits: &Limits) -> Result<(crate::groups::Prop45Report, u64), String> {
    let e = |e: GroupError| e.to_string();
    let n = base.order() as u32;
    let g = Arc::new(direct_product(&library::cyclic(ell), &base, limits).map_err(e)?);
    let h = Subgroup::from_elements(&g, &(0..n).collect::<Vec<_>>()).map_err(e)?;
    let transversal: Vec<u32> = (0..ell).map(|k| k * n).collect();
    let emb = embed_in_wreath(&h, &transversal).map_err(e)?;
    let w = wreath_cyclic(emb.base(), ell as usize, limits).map_err(e)?;
    let gbar = emb.image_in(&w).map_err(e)?;
    let out = outer_automorphism_order(emb.base(), limits).map_err(e)?;
    Ok((prop45_classify(&w, &gbar, Some(out), limits).map_err(e)?, out))
}

fn wreath(config: &SuiteConfig) -> Tally {
    let limits = &config.limits;
    let mut t = Tally::default();
    guarded(&mut t, "A5 wr C2", |t| {
        let a5 = Arc::new(library::alternating(5));
        let w = wreath_cyclic(&a5, 2, limits)?;
        let g = w.group();
        t.check(g.order() == 7200, || format!("order {}", g.order()));
        let normals = normal_subgroups(g);
        let orders: Vec<usize> = normals.iter().map(|n| n.order()).collect();
        t.check(orders == [1, 3600, 7200], || format!("normal subgroup orders {orders:?}"));
        t.check(normals.get(1).is_some_and(|n| n == w.base_subgroup()), || "middle normal subgroup is not the base".into());
        let report = prop45_classify(&w, &Subgroup::whole(g), Some(2), limits)?;
        t.check(report.case == Prop45Case::FullBase, || "full wreath not in the full-base case".into());
        t.check(report.normal_list_matches == Some(true), || "normal list mismatch".into());
        Ok::<(), GroupError>(())
    });
    let cases: Vec<(u32, usize)> = vec![(3, 2), (3, 3), (5, 2), (5, 3), (7, 2), (7, 3)];
    t = cases
        .par_iter()
        .map(|&(p, ell)| goursat_brute_force(library::cyclic(p), ell, limits))
        .reduce(Tally::default, Tally::merge)
        .merge(t);
    match diagonal_case(library::alternating(5), 2, limits) {
        Ok((r, out)) => {
            t.check(out == 2, || format!("|Out(A5)| = {out}"));
            t.check(r.case == Prop45Case::Diagonal, || "C2 x A5 not diagonal".into());
            t.check(r.direct_product == Some(true), || "C2 x A5: no direct product found".into());
            t.check(r.chain_bound_holds, || "C2 x A5: normal chain too long".into());
        }
        Err(e) => t.fail(format!("C2 x A5: {e}")),
    }
    // l does not divide |Out(H)|: the split must be found
    for (p, ell) in [(5u32, 3u32), (3, 5)] {
        match diagonal_case(library::cyclic(p), ell, limits) {
            Ok((r, out)) => {
                t.check(out % ell as u64 != 0, || format!("C{p}: {ell} divides |Out| = {out}"));
                t.check(r.case == Prop45Case::Diagonal, || format!("C{ell} x C{p} not diagonal"));
                t.check(r.direct_product == Some(true), || format!("C{ell} x C{p}: no direct product found"));
            }
            Err(e) => t.fail(format!("C{ell} x C{p}: {e}")),
        }
    }
    t
}

fn dims_gcd(config: &SuiteConfig) -> Tally {
    let groups = corpus::table_groups();
    let mut t = sum(groups.par_iter().map(|(name, g)| {
        let mut t = Tally::default();
        guarded(&mut t, name, |t| {
            let tab = table(g, &config.limits)?;
            let degrees = tab.degrees();
            let order = g.order() as u64;
            t.check(degrees.iter().map(|d| d * d).sum::<u64>() == order, || format!("{name}: sum of squares"));
            t.check(degrees.iter().all(|d| order % d == 0), || format!("{name}: degrees {degrees:?}"));
            t.check(tab.is_orthonormal(), || format!("{name}: table not orthonormal"));
            let gcd = irreducible_dims_gcd(g, &config.limits).map_err(|e| e.to_string())?;
            t.check(gcd == 1, || format!("{name}: gcd {gcd}"));
            Ok::<(), String>(())
        });
        t
    }));
    t.check(groups.len() >= 25, || format!("{} groups", groups.len()));
    t.check(groups.iter().all(|(_, g)| g.order() <= 100 && g.order() > 1), || "group order out of range".into());
    t
}

fn ppower_cor_a2(config: &SuiteConfig) -> Tally {
    let e = |e: crate::filtered::FilterError| e.to_string();
    let ppower = corpus::ppower_corpus();
    let mut t = sum(ppower.par_iter().map(|(name, f, p)| {
        let mut t = Tally::default();
        guarded(&mut t, name, |t| {
            let wild = f.wild();
            for (i, chi) in irreducibles(f.group(), &config.limits)?.iter().enumerate() {
                t.check(ppower_dim_check(f, chi, *p).map_err(e)?, || format!("{name}: irreducible {i}"));
                let end = chi.mul(&chi.dual()).map_err(|e| e.to_string())?;
                let fixed = crate::filtered::invariant_dimension(&end, &wild).map_err(e)?;
                if fixed == 1 && chi.degree().is_some_and(|d| d > 1) {
                    t.note(format!("{name}: irreducible {i} meets the hypothesis in degree {:?}", chi.degree()));
                }
            }
            Ok::<(), String>(())
        });
        t
    }));
    let nonlinear = t.notes.iter().filter(|n| n.contains("meets the hypothesis")).count();
    t.check(nonlinear > 0, || "no nonlinear instance met the p-power hypothesis".to_string());

    let a2 = corpus::cor_a2_corpus(config.seed);
    let t2 = sum(a2.par_iter().map(|(name, f)| {
        let mut t = Tally::default();
        guarded(&mut t, name, |t| {
            let tab = table(f.group(), &config.limits)?;
            t.check(cor_a2_check(f, &tab).map_err(e)?, || format!("{name}: implication fails"));
            let mut hypothesis = true;
            for chi in tab.characters() {
                let s = slope_decomposition(f, chi).map_err(e)?;
                hypothesis &= hasse_arf_check(f, chi).map_err(e)?;
                hypothesis &= s.entries().iter().all(|(l, _)| l.is_zero() || !l.is_integer());
            }
            if hypothesis {
                t.note(format!("{name}: hypothesis met"));
            }
            Ok::<(), String>(())
        });
        t
    }));
    let met = t2.notes.iter().filter(|n| n.ends_with("hypothesis met")).count();
    let mut t = t.merge(t2);
    t.check(met >= 5, || format!("only {met} chains meet the integrality hypothesis"));
    t
}
