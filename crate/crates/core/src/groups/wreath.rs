use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::{compose, Elem, FiniteGroup, GroupError, Subgroup, Table};
use crate::limits::Limits;

/// `(sigma, (h_1, ..., h_n))` in `Gamma wr H`, with `sigma` a 0-based
/// permutation and `h_i` elements of the base group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    pub sigma: Vec<u32>,
    pub coords: Vec<Elem>,
}

impl WreathElement {
    pub fn identity(base: &FiniteGroup, degree: usize) -> WreathElement {
        WreathElement { sigma: (0..degree as u32).collect(), coords: vec![base.identity(); degree] }
    }

    pub fn is_base(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i as u32 == s)
    }
}

/// `(sigma, h)(tau, k) = (sigma tau, (h_{tau(i)} k_i)_i)`.
pub fn wreath_mul(base: &FiniteGroup, a: &WreathElement, b: &WreathElement) -> WreathElement {
    WreathElement {
        sigma: compose(&a.sigma, &b.sigma),
        coords: b
            .sigma
            .iter()
            .zip(&b.coords)
            .map(|(&t, &k)| base.mul(a.coords[t as usize], k))
            .collect(),
    }
}

/// A wreath product `Gamma wr H` with `Gamma` a permutation group of degree
/// `n` acting on coordinates.
#[derive(Debug)]
pub struct WreathProduct {
    base: Arc<FiniteGroup>,
    degree: usize,
    cyclic_prime: bool,
    group: Arc<FiniteGroup>,
    elements: Vec<WreathElement>,
    index: HashMap<WreathElement, Elem>,
    base_subgroup: OnceLock<Subgroup>,
}

impl WreathProduct {
    /// `Gamma wr H` for `Gamma` generated by `top_generators`.
    pub fn new(
        base: Arc<FiniteGroup>,
        degree: usize,
        top_generators: &[Vec<u32>],
        limits: &Limits,
    ) -> Result<WreathProduct, GroupError> {
        for (k, t) in top_generators.iter().enumerate() {
            if t.len() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, found: t.len() });
            }
            let mut seen = vec![false; degree];
            if t.iter().any(|&i| i as usize >= degree || std::mem::replace(&mut seen[i as usize], true)) {
                return Err(GroupError::NotPermutation(k));
            }
        }
        let total = (base.order() as f64).powi(degree as i32);
        if total > limits.max_group_order as f64 {
            return Err(GroupError::OrderBound { bound: limits.max_group_order });
        }
        let id = WreathElement::identity(&base, degree);
        let mut gens: Vec<WreathElement> = top_generators
            .iter()
            .map(|t| WreathElement { sigma: t.clone(), coords: id.coords.clone() })
            .collect();
        for i in 0..degree {
            for &s in base.generators() {
                let mut coords = id.coords.clone();
                coords[i] = s;
                gens.push(WreathElement { sigma: id.sigma.clone(), coords });
            }
        }
        let b = base.clone();
        let (group, elements) = FiniteGroup::from_closure(id, &gens, |x, y| wreath_mul(&b, x, y), limits)?;
        let index = elements.iter().enumerate().map(|(i, e)| (e.clone(), i as Elem)).collect();
        let cyclic_prime = top_generators.len() == 1
            && crate::exactnum::is_prime(degree as u64)
            && is_full_cycle(&top_generators[0]);
        Ok(WreathProduct {
            base,
            degree,
            cyclic_prime,
            group: Arc::new(group),
            elements,
            index,
            base_subgroup: OnceLock::new(),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Whether the top group is generated by one cycle of prime length.
    pub fn has_cyclic_prime_top(&self) -> bool {
        self.cyclic_prime
    }

    pub fn element(&self, g: Elem) -> &WreathElement {
        &self.elements[g as usize]
    }

    pub fn index_of(&self, e: &WreathElement) -> Option<Elem> {
        self.index.get(e).copied()
    }

    /// `H^n`, the elements with trivial permutation part.
    pub fn base_subgroup(&self) -> &Subgroup {
        self.base_subgroup.get_or_init(|| {
            let elems = (0..self.elements.len() as Elem).filter(|&g| self.elements[g as usize].is_base()).collect();
            Subgroup::from_sorted(self.group.clone(), elems)
        })
    }
}

fn is_full_cycle(p: &[u32]) -> bool {
    let mut i = 0usize;
    for step in 1..=p.len() {
        i = p[i] as usize;
        if i == 0 {
            return step == p.len();
        }
    }
    false
}

/// `C_l wr H` with the top group generated by `i -> i + 1 mod l`.
pub fn wreath_cyclic(base: &Arc<FiniteGroup>, ell: usize, limits: &Limits) -> Result<WreathProduct, GroupError> {
    let shift: Vec<u32> = (0..ell as u32).map(|i| (i + 1) % ell as u32).collect();
    let tops = if ell > 1 { vec![shift] } else { Vec::new() };
    WreathProduct::new(base.clone(), ell, &tops, limits)
}

/// `H^l` with `(h_0, ..., h_{l-1})` stored at index `sum h_i |H|^i`.
#[derive(Debug)]
pub struct DirectPower {
    base: Arc<FiniteGroup>,
    ell: usize,
    group: Arc<FiniteGroup>,
}

impl DirectPower {
    pub fn new(base: Arc<FiniteGroup>, ell: usize, limits: &Limits) -> Result<DirectPower, GroupError> {
        let m = base.order();
        let n = (0..ell).try_fold(1usize, |acc, _| acc.checked_mul(m)).filter(|&n| n <= limits.max_group_order);
        let Some(n) = n else {
            return Err(GroupError::OrderBound { bound: limits.max_group_order });
        };
        let decode = |mut x: usize| -> Vec<Elem> {
            (0..ell)
                .map(|_| {
                    let d = x % m;
                    x /= m;
                    d as Elem
                })
                .collect()
        };
        let encode = |t: &[Elem]| -> Elem { t.iter().rev().fold(0usize, |acc, &h| acc * m + h as usize) as Elem };
        let tuples: Vec<Vec<Elem>> = (0..n).map(decode).collect();
        let mut table = Table::new(n);
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<Elem> = tuples[a].iter().zip(&tuples[b]).map(|(&x, &y)| base.mul(x, y)).collect();
                table.set(a * n + b, encode(&prod));
            }
        }
        let inverse = tuples.iter().map(|t| encode(&t.iter().map(|&h| base.inv(h)).collect::<Vec<_>>())).collect();
        let identity = encode(&vec![base.identity(); ell]);
        let mut generators = Vec::new();
        for i in 0..ell {
            for &s in base.generators() {
                let mut t = vec![base.identity(); ell];
                t[i] = s;
                generators.push(encode(&t));
            }
        }
        let group = FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            generators,
            labels: None,
            permutations: None,
            classes: OnceLock::new(),
            orders: OnceLock::new(),
        };
        Ok(DirectPower { base, ell, group: Arc::new(group) })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn encode(&self, t: &[Elem]) -> Elem {
        let m = self.base.order();
        t.iter().rev().fold(0usize, |acc, &h| acc * m + h as usize) as Elem
    }

    pub fn decode(&self, x: Elem) -> Vec<Elem> {
        let m = self.base.order();
        let mut x = x as usize;
        (0..self.ell)
            .map(|_| {
                let d = x % m;
                x /= m;
                d as Elem
            })
            .collect()
    }
}

/// The map `G -> S_n wr H` attached to a left transversal of `H` in `G`.
#[derive(Debug)]
pub struct WreathEmbedding {
    base: Arc<FiniteGroup>,
    images: Vec<WreathElement>,
}

/// `g -> (sigma_g, (gamma_{sigma_g(i)}^-1 g gamma_i)_i)` where
/// `g gamma_i H = gamma_{sigma_g(i)} H`. Base coordinates are indices into
/// `subgroup.elements()`.
pub fn embed_in_wreath(subgroup: &Subgroup, transversal: &[Elem]) -> Result<WreathEmbedding, GroupError> {
    let g = subgroup.parent();
    let coset = subgroup.left_coset_map(transversal)?;
    let images = g
        .elements()
        .map(|x| {
            let sigma: Vec<u32> = transversal.iter().map(|&t| coset[g.mul(x, t) as usize] as u32).collect();
            let coords = transversal
                .iter()
                .zip(&sigma)
                .map(|(&t, &s)| {
                    let h = g.mul(g.mul(g.inv(transversal[s as usize]), x), t);
                    subgroup.local_index(h).expect("coset representative mismatch")
                })
                .collect();
            WreathElement { sigma, coords }
        })
        .collect();
    Ok(WreathEmbedding { base: subgroup.as_group(), images })
}

impl WreathEmbedding {
    /// The base group `H`, numbered as in the subgroup's element list.
    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn image(&self, g: Elem) -> &WreathElement {
        &self.images[g as usize]
    }

    pub fn images(&self) -> &[WreathElement] {
        &self.images
    }

    /// Checks `phi(xy) = phi(x) phi(y)` on all pairs.
    pub fn is_homomorphism(&self, group: &FiniteGroup) -> bool {
        group.elements().all(|x| {
            group
                .elements()
                .all(|y| wreath_mul(&self.base, self.image(x), self.image(y)) == *self.image(group.mul(x, y)))
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.images.iter().all(|e| seen.insert(e))
    }

    /// The image as a subgroup of `wreath`, whose base must be this
    /// embedding's base group.
    pub fn image_in(&self, wreath: &WreathProduct) -> Result<Subgroup, GroupError> {
        let elems = self
            .images
            .iter()
            .map(|e| wreath.index_of(e).ok_or(GroupError::NotSubgroup))
            .collect::<Result<Vec<_>, _>>()?;
        Subgroup::from_elements(wreath.group(), &elems)
    }
}
