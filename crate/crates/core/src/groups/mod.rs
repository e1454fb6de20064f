//! Finite groups as explicit multiplication tables.
//!
//! Elements are indices `0..order`. Groups built by closure (from
//! permutations, matrices, wreath products) number their elements in
//! breadth-first order from the generators, so the identity is element 0.

mod automorphism;
mod classes;
mod classify;
mod lattice;
pub mod library;
mod normal;
mod subgroup;
mod wreath;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};

pub use automorphism::{automorphism_count, extend_homomorphism, is_isomorphic, outer_automorphism_order};
pub use classes::ConjugacyClasses;
pub use lattice::all_subgroups;
pub use classify::{
    goursat_classify, prop45_classify, select_prime, GoursatResult, Prop45Case, Prop45Report,
};
pub use normal::{is_simple, max_normal_chain_length, normal_subgroups};
pub use subgroup::Subgroup;
pub use wreath::{embed_in_wreath, wreath_cyclic, wreath_mul, DirectPower, WreathElement, WreathEmbedding, WreathProduct};

use crate::limits::Limits;

/// Index of a group element.
pub type Elem = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("group order exceeds the configured bound {bound}")]
    OrderBound { bound: usize },
    #[error("permutation generators must all act on {expected} points (found {found})")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("generator {0} is not a permutation")]
    NotPermutation(usize),
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("element index {0} out of range")]
    BadElement(u64),
    #[error("elements do not form a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid coset transversal: {0}")]
    InvalidTransversal(&'static str),
    #[error("subgroup is not stable under the cyclic shift of coordinates")]
    NotShiftStable,
    #[error("first coordinate projection is not surjective")]
    NotSurjective,
    #[error("base group is not simple")]
    NotSimple,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("subgroup does not map onto the cyclic top group")]
    TopNotSurjective,
    #[error("wreath product top group is not cyclic of prime order")]
    NotCyclicTop,
    #[error("group of order {order} is beyond the brute-force bound {bound}; supply the value")]
    BruteForceBound { order: usize, bound: usize },
    #[error("intersection with the base is neither the full power nor a twisted diagonal")]
    OutsideDichotomy,
    #[error("prime selection impossible: forbidden divisor list contains 0")]
    ZeroDivisor,
}

#[derive(Debug, Clone)]
enum Table {
    Small(Vec<u16>),
    Large(Vec<u32>),
}

impl Table {
    fn new(n: usize) -> Table {
        if n <= u16::MAX as usize + 1 {
            Table::Small(vec![0; n * n])
        } else {
            Table::Large(vec![0; n * n])
        }
    }

    #[inline]
    fn get(&self, i: usize) -> Elem {
        match self {
            Table::Small(t) => t[i] as Elem,
            Table::Large(t) => t[i],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, v: Elem) {
        match self {
            Table::Small(t) => t[i] = v as u16,
            Table::Large(t) => t[i] = v,
        }
    }
}

/// Degree and generators of a faithful permutation action, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationPresentation {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

/// A finite group with a full multiplication table.
#[derive(Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Table,
    identity: Elem,
    inverse: Vec<Elem>,
    generators: Vec<Elem>,
    labels: Option<Vec<String>>,
    permutations: Option<PermutationPresentation>,
    classes: OnceLock<ConjugacyClasses>,
    orders: OnceLock<Vec<u32>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table.get(a as usize * self.order + b as usize)
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a as usize]
    }

    /// `x^-1 g x`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), g), x)
    }

    pub fn pow(&self, g: Elem, k: u64) -> Elem {
        let mut acc = self.identity;
        let mut base = g;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        0..self.order as Elem
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn generator_labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn permutation_presentation(&self) -> Option<&PermutationPresentation> {
        self.permutations.as_ref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    /// Order of every element.
    pub fn element_orders(&self) -> &[u32] {
        self.orders.get_or_init(|| {
            (0..self.order as Elem)
                .map(|g| {
                    let mut k = 1;
                    let mut x = g;
                    while x != self.identity {
                        x = self.mul(x, g);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, g: Elem) -> u32 {
        self.element_orders()[g as usize]
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.element_orders().iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, &a)| self.generators[i + 1..].iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&z| self.generators.iter().all(|&s| self.mul(z, s) == self.mul(s, z)))
            .collect()
    }

    pub fn conjugacy_classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| ConjugacyClasses::compute(self))
    }

    /// Elements of the subgroup generated by `gens`, sorted.
    pub fn generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut member = vec![false; self.order];
        self.close_into(&mut member, gens);
        (0..self.order as Elem).filter(|&g| member[g as usize]).collect()
    }

    /// Extends the subgroup marked in `member` (possibly empty) by `gens`.
    pub(crate) fn close_into(&self, member: &mut [bool], gens: &[Elem]) {
        let mut all: Vec<Elem> = (0..self.order as Elem).filter(|&g| member[g as usize]).collect();
        all.extend_from_slice(gens);
        let (_, span) = self.span(&all);
        member.copy_from_slice(&span);
    }

    /// The subgroup generated by `gens` as a membership mask, together with
    /// the generators that were actually needed.
    pub(crate) fn span(&self, gens: &[Elem]) -> (Vec<Elem>, Vec<bool>) {
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        let mut kept = Vec::new();
        let mut elems = vec![self.identity];
        for &g in gens {
            if member[g as usize] {
                continue;
            }
            kept.push(g);
            let mut queue: VecDeque<Elem> = elems.iter().copied().collect();
            while let Some(x) = queue.pop_front() {
                for &s in &kept {
                    let y = self.mul(x, s);
                    if !member[y as usize] {
                        member[y as usize] = true;
                        elems.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        (kept, member)
    }

    /// A small generating set found greedily, preferring high element orders.
    fn choose_generators(&self) -> Vec<Elem> {
        let orders = self.element_orders().to_vec();
        let mut candidates: Vec<Elem> = self.elements().collect();
        candidates.sort_by_key(|&g| (std::cmp::Reverse(orders[g as usize]), g));
        let mut member = vec![false; self.order];
        member[self.identity as usize] = true;
        let mut count = 1;
        let mut gens = Vec::new();
        for g in candidates {
            if count == self.order {
                break;
            }
            if member[g as usize] {
                continue;
            }
            gens.push(g);
            self.close_into(&mut member, &[g]);
            count = member.iter().filter(|&&b| b).count();
        }
        gens
    }

    /// Builds a group from a multiplication table, `table[i][j] = i * j`.
    pub fn from_cayley_table(rows: &[Vec<u32>], limits: &Limits) -> Result<FiniteGroup, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if n > limits.max_group_order {
            return Err(GroupError::OrderBound { bound: limits.max_group_order });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for (j, &v) in row.iter().enumerate() {
                if v as usize >= n {
                    return Err(GroupError::InvalidTable(format!("entry ({i},{j}) = {v} out of range")));
                }
                if std::mem::replace(&mut seen[v as usize], true) {
                    return Err(GroupError::InvalidTable(format!("row {i} repeats {v}")));
                }
            }
        }
        if !(0..n).any(|e| (0..n).all(|j| rows[e][j] as usize == j && rows[j][e] as usize == j)) {
            return Err(GroupError::InvalidTable("no identity element".into()));
        }
        let assoc = |a: usize, b: usize, c: usize| {
            rows[rows[a][b] as usize][c] == rows[a][rows[b][c] as usize]
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
            for _ in 0..200_000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        Ok(FiniteGroup::from_cayley_unchecked(rows))
    }

    /// Builds a group from rows already known to form a group table.
    pub(crate) fn from_cayley_unchecked(rows: &[Vec<u32>]) -> FiniteGroup {
        let n = rows.len();
        let mut table = Table::new(n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                table.set(i * n + j, v);
            }
        }
        let identity = (0..n).find(|&e| rows[e][e] as usize == e).unwrap_or(0) as Elem;
        let mut inverse = vec![0; n];
        for (i, row) in rows.iter().enumerate() {
            inverse[i] = row.iter().position(|&v| v == identity).unwrap_or(0) as Elem;
        }
        let mut g = FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            generators: Vec::new(),
            labels: None,
            permutations: None,
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        g.generators = g.choose_generators();
        g
    }

    /// The multiplication table as rows.
    pub fn cayley_rows(&self) -> Vec<Vec<u32>> {
        (0..self.order as Elem)
            .map(|a| (0..self.order as Elem).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// The closure of `gens` under `mul`, with element 0 the identity and
    /// elements numbered breadth-first.
    pub fn from_closure<E, F>(
        identity: E,
        gens: &[E],
        mul: F,
        limits: &Limits,
    ) -> Result<(FiniteGroup, Vec<E>), GroupError>
    where
        E: Clone + Eq + Hash,
        F: Fn(&E, &E) -> E,
    {
        let bound = limits.max_group_order;
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<E, Elem> = HashMap::new();
        index.insert(identity, 0);
        // parent[x] = (p, s) with x = p * gens[s]
        let mut parent: Vec<(Elem, usize)> = vec![(0, usize::MAX)];
        let mut i = 0;
        while i < elements.len() {
            for (s, g) in gens.iter().enumerate() {
                let y = mul(&elements[i], g);
                if !index.contains_key(&y) {
                    if elements.len() >= bound {
                        return Err(GroupError::OrderBound { bound });
                    }
                    index.insert(y.clone(), elements.len() as Elem);
                    elements.push(y);
                    parent.push((i as Elem, s));
                }
            }
            i += 1;
        }
        let n = elements.len();
        // left multiplication by each generator
        let gen_idx: Vec<Elem> = gens.iter().map(|g| index[g]).collect();
        let left: Vec<Vec<Elem>> = gens
            .iter()
            .map(|g| elements.iter().map(|y| index[&mul(g, y)]).collect())
            .collect();
        let mut table = Table::new(n);
        for y in 0..n {
            table.set(y, y as Elem);
        }
        // row(p * s)[y] = row(p)[s * y]
        for x in 1..n {
            let (p, s) = parent[x];
            for y in 0..n {
                let sy = left[s][y] as usize;
                let v = table.get(p as usize * n + sy);
                table.set(x * n + y, v);
            }
        }
        let mut inverse = vec![0; n];
        for x in 0..n {
            if let Some(y) = (0..n).find(|&y| table.get(x * n + y) == 0) {
                inverse[x] = y as Elem;
            }
        }
        let mut generators: Vec<Elem> = Vec::new();
        for g in gen_idx {
            if g != 0 && !generators.contains(&g) {
                generators.push(g);
            }
        }
        let group = FiniteGroup {
            order: n,
            table,
            identity: 0,
            inverse,
            generators,
            labels: None,
            permutations: None,
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        Ok((group, elements))
    }

    /// Writes an element as a product of generators (indices into
    /// [`FiniteGroup::generators`]), found breadth-first.
    pub fn word(&self, g: Elem) -> Vec<usize> {
        let mut prev: Vec<Option<(Elem, usize)>> = vec![None; self.order];
        let mut seen = vec![false; self.order];
        seen[self.identity as usize] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            if x == g {
                break;
            }
            for (s, &gen) in self.generators.iter().enumerate() {
                let y = self.mul(x, gen);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    prev[y as usize] = Some((x, s));
                    queue.push_back(y);
                }
            }
        }
        let mut word = Vec::new();
        let mut cur = g;
        while let Some((p, s)) = prev[cur as usize] {
            word.push(s);
            cur = p;
        }
        word.reverse();
        word
    }

    /// Relabels the generating set; every listed element must lie in the
    /// group and together they must generate it.
    pub fn set_generators(&mut self, gens: Vec<Elem>) -> Result<(), GroupError> {
        if let Some(&bad) = gens.iter().find(|&&g| g as usize >= self.order) {
            return Err(GroupError::BadElement(bad as u64));
        }
        if self.generated(&gens).len() != self.order {
            return Err(GroupError::NotSubgroup);
        }
        self.generators = gens;
        Ok(())
    }
}

/// Composition `(a * b)(i) = a(b(i))`.
pub fn compose(a: &[u32], b: &[u32]) -> Vec<u32> {
    b.iter().map(|&i| a[i as usize]).collect()
}

/// The permutation group generated by `generators` (0-based images).
pub fn group_from_permutations(generators: &[Vec<u32>], limits: &Limits) -> Result<FiniteGroup, GroupError> {
    let degree = generators.first().map_or(0, Vec::len);
    for (k, g) in generators.iter().enumerate() {
        if g.len() != degree {
            return Err(GroupError::DegreeMismatch { expected: degree, found: g.len() });
        }
        let mut seen = vec![false; degree];
        for &i in g {
            if i as usize >= degree || std::mem::replace(&mut seen[i as usize], true) {
                return Err(GroupError::NotPermutation(k));
            }
        }
    }
    let identity: Vec<u32> = (0..degree as u32).collect();
    let (mut group, _) = FiniteGroup::from_closure(identity, generators, |a, b| compose(a, b), limits)?;
    group.permutations = Some(PermutationPresentation { degree, generators: generators.to_vec() });
    Ok(group)
}

/// Permutation groups built from generators given in 1-based image notation.
pub fn group_from_permutations_one_based(
    generators: &[Vec<u32>],
    limits: &Limits,
) -> Result<FiniteGroup, GroupError> {
    let zero_based: Vec<Vec<u32>> = generators
        .iter()
        .enumerate()
        .map(|(k, g)| {
            g.iter()
                .map(|&i| i.checked_sub(1).ok_or(GroupError::NotPermutation(k)))
                .collect::<Result<Vec<u32>, _>>()
        })
        .collect::<Result<_, _>>()?;
    group_from_permutations(&zero_based, limits)
}

/// `G x H` with element `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup, GroupError> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > limits.max_group_order {
        return Err(GroupError::OrderBound { bound: limits.max_group_order });
    }
    let mut table = Table::new(n);
    for a in 0..n {
        let (a1, a2) = ((a / nh) as Elem, (a % nh) as Elem);
        for b in 0..n {
            let (b1, b2) = ((b / nh) as Elem, (b % nh) as Elem);
            let v = g.mul(a1, b1) as usize * nh + h.mul(a2, b2) as usize;
            table.set(a * n + b, v as Elem);
        }
    }
    let inverse = (0..n)
        .map(|a| (g.inv((a / nh) as Elem) as usize * nh + h.inv((a % nh) as Elem) as usize) as Elem)
        .collect();
    let identity = (g.identity() as usize * nh + h.identity() as usize) as Elem;
    let mut generators: Vec<Elem> = g
        .generators()
        .iter()
        .map(|&s| (s as usize * nh + h.identity() as usize) as Elem)
        .collect();
    generators.extend(h.generators().iter().map(|&s| (g.identity() as usize * nh + s as usize) as Elem));
    Ok(FiniteGroup {
        order: n,
        table,
        identity,
        inverse,
        generators,
        labels: None,
        permutations: None,
        classes: OnceLock::new(),
        orders: OnceLock::new(),
    })
}

pub type GroupRef = Arc<FiniteGroup>;
