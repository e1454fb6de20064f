//! Seeded corpora shared by the acceptance suites. The same seed always
//! yields the same corpus.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{frac, is_prime};
use crate::filtered::{BreakChain, LowerChain};
use crate::groups::{all_subgroups, direct_product, library, normal_subgroups, FiniteGroup, Subgroup};
use crate::{Limits, RankOneOperator, Rational, SlopeMultiset};

pub type Named<T> = (String, T);

pub fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn named(name: &str, g: FiniteGroup) -> Named<Arc<FiniteGroup>> {
    (name.to_string(), Arc::new(g))
}

fn product(name: &str, a: FiniteGroup, b: FiniteGroup) -> Named<Arc<FiniteGroup>> {
    named(name, direct_product(&a, &b, &Limits::default()).expect("small product"))
}

/// Nontrivial groups of order at most 100.
pub fn table_groups() -> Vec<Named<Arc<FiniteGroup>>> {
    let mut v = Vec::new();
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 30] {
        v.push(named(&format!("C{n}"), library::cyclic(n)));
    }
    v.extend([
        named("S3", library::symmetric(3)),
        named("S4", library::symmetric(4)),
        named("Q8", library::quaternion()),
        named("D4", library::dihedral(4)),
        named("A4", library::alternating(4)),
        named("A5", library::alternating(5)),
        named("D5", library::dihedral(5)),
        named("D6", library::dihedral(6)),
        named("Dic3", library::dicyclic(3)),
        named("Q16", library::dicyclic(4)),
        named("C2^3", library::elementary_abelian(2, 3)),
        named("C3^2", library::elementary_abelian(3, 2)),
        named("C5^2", library::elementary_abelian(5, 2)),
        named("C2xC4", library::abelian(&[2, 4])),
        named("Heis(3)", library::heisenberg(3)),
        named("M(27)", library::metacyclic_p3(3)),
        named("SL(2,3)", library::sl23()),
        named("GL(2,3)", library::gl23()),
        named("F20", library::frobenius(5, 4)),
        named("F21", library::frobenius(7, 3)),
        named("F55", library::frobenius(11, 5)),
        product("C2xS4", library::cyclic(2), library::symmetric(4)),
        product("C3xS3", library::cyclic(3), library::symmetric(3)),
        product("C2xD4", library::cyclic(2), library::dihedral(4)),
    ]);
    v
}

/// Groups of order at most 16.
pub fn tiny_groups() -> Vec<Named<Arc<FiniteGroup>>> {
    let mut v = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 8] {
        v.push(named(&format!("C{n}"), library::cyclic(n)));
    }
    v.extend([
        named("S3", library::symmetric(3)),
        named("D4", library::dihedral(4)),
        named("Q8", library::quaternion()),
        named("C2^2", library::elementary_abelian(2, 2)),
        named("C2^3", library::elementary_abelian(2, 3)),
        named("D5", library::dihedral(5)),
        named("D6", library::dihedral(6)),
        named("Dic3", library::dicyclic(3)),
        named("A4", library::alternating(4)),
        named("C2xC4", library::abelian(&[2, 4])),
        named("D8", library::dihedral(8)),
        named("Q16", library::dicyclic(4)),
    ]);
    v
}

/// Groups supporting filtrations: small, with varied normal structure.
fn filtration_groups() -> Vec<Named<Arc<FiniteGroup>>> {
    vec![
        named("C4", library::cyclic(4)),
        named("C6", library::cyclic(6)),
        named("C8", library::cyclic(8)),
        named("C12", library::cyclic(12)),
        named("C2^3", library::elementary_abelian(2, 3)),
        named("S3", library::symmetric(3)),
        named("D4", library::dihedral(4)),
        named("Q8", library::quaternion()),
        named("A4", library::alternating(4)),
        named("D5", library::dihedral(5)),
        named("Dic3", library::dicyclic(3)),
        named("S4", library::symmetric(4)),
        named("Heis(3)", library::heisenberg(3)),
        named("SL(2,3)", library::sl23()),
        named("F20", library::frobenius(5, 4)),
        named("F21", library::frobenius(7, 3)),
    ]
}

fn prime_divisors(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| n % p == 0 && is_prime(p)).collect()
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Elements of `p`-power order; a subgroup when `g` is abelian.
fn sylow_abelian(g: &Arc<FiniteGroup>, p: u64) -> Subgroup {
    let elems: Vec<u32> = g.elements().filter(|&x| is_p_power(g.element_order(x) as u64, p)).collect();
    Subgroup::from_elements(g, &elems).expect("abelian sylow subgroup")
}

/// `start = H_1 ⊋ H_2 ⊋ ... ⊋ H_k ⊋ 1` drawn from `pool`.
fn descending_chain(rng: &mut ChaCha8Rng, start: &Subgroup, pool: &[Subgroup], max_len: usize) -> Vec<Subgroup> {
    let mut chain = vec![start.clone()];
    while chain.len() < max_len {
        let cur = chain.last().unwrap();
        let below: Vec<&Subgroup> =
            pool.iter().filter(|h| h.order() < cur.order() && h.is_subgroup_of(cur)).collect();
        let options: Vec<&&Subgroup> = below.iter().filter(|h| !h.is_trivial()).collect();
        // stop early with probability 1/4, always at the bottom
        if options.is_empty() || rng.gen_ratio(1, 4) {
            break;
        }
        chain.push((**options.choose(rng).unwrap()).clone());
    }
    chain
}

/// Abelian lower chains whose jumps satisfy `u_i = u_{i-1} + t_i [G_0 : G_{u_i}]`,
/// the congruences met by ramification groups of abelian extensions.
pub fn abelian_lower_chains(seed: u64, count: usize) -> Vec<Named<LowerChain>> {
    let mut rng = rng(seed, 2);
    let mut groups: Vec<Named<Arc<FiniteGroup>>> = Vec::new();
    for n in [2, 3, 4, 5, 6, 7, 8, 9, 12, 16, 18, 20, 25, 27, 32, 64] {
        groups.push(named(&format!("C{n}"), library::cyclic(n)));
    }
    for (p, k) in [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)] {
        groups.push(named(&format!("C{p}^{k}"), library::elementary_abelian(p, k)));
    }
    let lattices: Vec<Vec<Subgroup>> = groups.iter().map(|(_, g)| all_subgroups(g)).collect();
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let gi = if i < groups.len() { i } else { rng.gen_range(0..groups.len()) };
        let (name, g) = &groups[gi];
        let primes = prime_divisors(g.order() as u64);
        let p = *primes.choose(&mut rng).unwrap();
        let wild = sylow_abelian(g, p);
        let hs = descending_chain(&mut rng, &wild, &lattices[gi], 4);
        let mut runs = vec![(Subgroup::whole(g), 1usize)];
        for h in &hs {
            let t = rng.gen_range(1..=3usize);
            runs.push((h.clone(), t * h.index()));
        }
        let chain = LowerChain::from_runs(g.clone(), &runs).expect("valid lower chain");
        let orders: Vec<String> = hs.iter().map(|h| h.order().to_string()).collect();
        out.push((format!("{name} p={p} wild orders [{}]", orders.join(",")), chain));
    }
    out
}

/// Lower chains with arbitrary run lengths on possibly nonabelian groups.
pub fn arbitrary_lower_chains(seed: u64, count: usize) -> Vec<Named<LowerChain>> {
    let mut rng = rng(seed, 3);
    let groups = filtration_groups();
    let normals: Vec<Vec<Subgroup>> = groups.iter().map(|(_, g)| normal_subgroups(g)).collect();
    (0..count)
        .map(|i| {
            let gi = i % groups.len();
            let (name, g) = &groups[gi];
            let nontrivial: Vec<&Subgroup> = normals[gi].iter().filter(|h| !h.is_trivial()).collect();
            let start = (*nontrivial.choose(&mut rng).unwrap()).clone();
            let hs = descending_chain(&mut rng, &start, &normals[gi], 4);
            let mut runs = vec![(Subgroup::whole(g), 1usize)];
            runs.extend(hs.iter().map(|h| (h.clone(), rng.gen_range(1..=4usize))));
            (format!("{name} arbitrary #{i}"), LowerChain::from_runs(g.clone(), &runs).expect("valid lower chain"))
        })
        .collect()
}

/// `C6` with `C6` on `(0, 1/2]` and `C2` on `(1/2, 1]`.
pub fn c6_example() -> BreakChain {
    let g = Arc::new(library::cyclic(6));
    let c2 = Subgroup::generated(&g, &[3]).expect("element of C6");
    BreakChain::new(g.clone(), vec![frac(1, 2), frac(1, 1)], vec![Subgroup::whole(&g), c2]).expect("valid chain")
}

fn random_breaks(rng: &mut ChaCha8Rng, k: usize, fractional_only: bool) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    let mut last = Rational::from_integer(0.into());
    while out.len() < k {
        let d = rng.gen_range(1..=4i64);
        let n = rng.gen_range(1..=4i64);
        let b = &last + Rational::new(n.into(), d.into());
        if fractional_only && b.is_integer() {
            continue;
        }
        last = b.clone();
        out.push(b);
    }
    out
}

/// Break chains: the C6 example, random normal chains with rational breaks,
/// and upper numberings of a few abelian lower chains.
pub fn filtered_corpus(seed: u64) -> Vec<Named<BreakChain>> {
    let mut rng = rng(seed, 7);
    let mut out = vec![("C6 example".to_string(), c6_example())];
    let groups = filtration_groups();
    for (name, g) in &groups {
        let normals = normal_subgroups(g);
        let nontrivial: Vec<&Subgroup> = normals.iter().filter(|h| !h.is_trivial()).collect();
        let start = (*nontrivial.choose(&mut rng).unwrap()).clone();
        let hs = descending_chain(&mut rng, &start, &normals, 3);
        let breaks = random_breaks(&mut rng, hs.len(), false);
        let shown: Vec<String> = breaks.iter().map(|b| b.to_string()).collect();
        let chain = BreakChain::new(g.clone(), breaks, hs).expect("valid chain");
        out.push((format!("{name} breaks [{}]", shown.join(",")), chain));
    }
    for (name, lower) in abelian_lower_chains(seed, 4) {
        out.push((format!("upper of {name}"), crate::filtered::upper_from_lower(&lower)));
    }
    out
}

/// Chains whose wild subgroup is a p-group, mostly extraspecial.
pub fn ppower_corpus() -> Vec<(String, BreakChain, u64)> {
    let whole = |name: &str, g: FiniteGroup, p: u64| {
        let g = Arc::new(g);
        let chain = BreakChain::new(g.clone(), vec![frac(1, 1)], vec![Subgroup::whole(&g)]).expect("valid chain");
        (name.to_string(), chain, p)
    };
    let normal_of_order = |name: &str, g: FiniteGroup, order: usize, p: u64, lambda: Rational| {
        let g = Arc::new(g);
        let h = normal_subgroups(&g).into_iter().find(|h| h.order() == order).expect("normal subgroup");
        (name.to_string(), BreakChain::new(g, vec![lambda], vec![h]).expect("valid chain"), p)
    };
    vec![
        whole("Heis(3)", library::heisenberg(3), 3),
        whole("Heis(5)", library::heisenberg(5), 5),
        whole("M(27)", library::metacyclic_p3(3), 3),
        whole("D4", library::dihedral(4), 2),
        whole("Q8", library::quaternion(), 2),
        normal_of_order("A4 over V4", library::alternating(4), 4, 2, frac(1, 2)),
        normal_of_order("S4 over V4", library::symmetric(4), 4, 2, frac(2, 3)),
        normal_of_order("SL(2,3) over Q8", library::sl23(), 8, 2, frac(1, 1)),
        normal_of_order("GL(2,3) over Q8", library::gl23(), 8, 2, frac(3, 2)),
        normal_of_order(
            "C2 x Heis(3) over Heis(3)",
            direct_product(&library::cyclic(2), &library::heisenberg(3), &Limits::default()).expect("small"),
            27,
            3,
            frac(1, 3),
        ),
    ]
}

/// Chains with only non-integral breaks: hand-picked ones meeting the
/// integrality hypothesis, plus random ones.
pub fn cor_a2_corpus(seed: u64) -> Vec<Named<BreakChain>> {
    let over = |name: &str, g: FiniteGroup, order: usize, lambda: Rational| {
        let g = Arc::new(g);
        let h = normal_subgroups(&g).into_iter().find(|h| h.order() == order).expect("normal subgroup");
        (name.to_string(), BreakChain::new(g, vec![lambda], vec![h]).expect("valid chain"))
    };
    let mut out = vec![
        over("S3 over A3", library::symmetric(3), 3, frac(1, 2)),
        over("D4 over Z", library::dihedral(4), 2, frac(1, 2)),
        over("Q8 over Z", library::quaternion(), 2, frac(3, 2)),
        over("A4 over V4", library::alternating(4), 4, frac(1, 3)),
        over("S4 over V4", library::symmetric(4), 4, frac(2, 3)),
        over("Heis(3) over Z", library::heisenberg(3), 3, frac(1, 3)),
        over("F20 over C5", library::frobenius(5, 4), 5, frac(1, 4)),
        over("F21 over C7", library::frobenius(7, 3), 7, frac(2, 3)),
        over("D5 over C5", library::dihedral(5), 5, frac(1, 2)),
        over("A5", library::alternating(5), 60, frac(1, 2)),
    ];
    let mut rng = rng(seed, 12);
    for (name, g) in filtration_groups() {
        let normals = normal_subgroups(&g);
        let nontrivial: Vec<&Subgroup> = normals.iter().filter(|h| !h.is_trivial()).collect();
        let start = (*nontrivial.choose(&mut rng).unwrap()).clone();
        let hs = descending_chain(&mut rng, &start, &normals, 3);
        let breaks = random_breaks(&mut rng, hs.len(), true);
        out.push((format!("{name} fractional"), BreakChain::new(g, breaks, hs).expect("valid chain")));
    }
    out
}

/// Pairs `(G, H)` with `H` normal and `|G| <= 48`.
pub fn normal_pairs() -> Vec<(String, Arc<FiniteGroup>, Subgroup)> {
    let pick = |name: &str, g: FiniteGroup, order: usize| {
        let g = Arc::new(g);
        let h = normal_subgroups(&g).into_iter().find(|h| h.order() == order).expect("normal subgroup");
        (name.to_string(), g, h)
    };
    vec![
        pick("S3 > A3", library::symmetric(3), 3),
        pick("D4 > order 4", library::dihedral(4), 4),
        pick("Q8 > C4", library::quaternion(), 4),
        pick("A4 > V4", library::alternating(4), 4),
        pick("S4 > A4", library::symmetric(4), 12),
        pick("S4 > V4", library::symmetric(4), 4),
        pick("C6 > C2", library::cyclic(6), 2),
        pick("C6 > C3", library::cyclic(6), 3),
        pick("D6 > C6", library::dihedral(6), 6),
        pick("SL(2,3) > Q8", library::sl23(), 8),
        pick("GL(2,3) > SL(2,3)", library::gl23(), 24),
        pick("D5 > C5", library::dihedral(5), 5),
        pick("F21 > C7", library::frobenius(7, 3), 7),
        pick("Heis(3) > Z", library::heisenberg(3), 3),
        pick("C2^3 > C2^2", library::elementary_abelian(2, 3), 4),
    ]
}

/// Rank-one operators over `p in {2, 3, 5}` with p-integral coefficients;
/// the first is `p = 2, a = (0, 1)`.
pub fn robba_corpus(seed: u64, count: usize) -> Vec<RankOneOperator> {
    let mut rng = rng(seed, 9);
    let mut out = vec![RankOneOperator::new(2, vec![frac(0, 1), frac(1, 1)]).expect("valid operator")];
    while out.len() < count {
        let p = *[2u64, 3, 5].choose(&mut rng).unwrap();
        let len = rng.gen_range(1..=5usize);
        let coefficients = (0..len)
            .map(|_| {
                if rng.gen_ratio(1, 4) {
                    return frac(0, 1);
                }
                let scale = (p as i64).pow(rng.gen_range(0..=2));
                let n = rng.gen_range(-9..=9i64) * scale;
                let d = loop {
                    let d = rng.gen_range(1..=12i64);
                    if d % p as i64 != 0 {
                        break d;
                    }
                };
                frac(n, d)
            })
            .collect();
        out.push(RankOneOperator::new(p, coefficients).expect("p-integral coefficients"));
    }
    out
}

pub fn slope_multisets(seed: u64, count: usize) -> Vec<SlopeMultiset> {
    let mut rng = rng(seed, 6);
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=5usize);
            let pairs: Vec<(Rational, u64)> = (0..k)
                .map(|_| (frac(rng.gen_range(0..=12), rng.gen_range(1..=6)), rng.gen_range(1..=4)))
                .collect();
            SlopeMultiset::from_pairs(pairs).expect("non-negative slopes")
        })
        .collect()
}
