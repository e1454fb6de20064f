use std::collections::VecDeque;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{induce, same_group, CharacterTable, ClassFunction, RepError};
use crate::groups::{all_subgroups, Elem, FiniteGroup, Subgroup};
use crate::limits::Limits;
use crate::Cyclotomic;

/// A square matrix of cyclotomic numbers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn identity(dim: usize) -> CycMatrix {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Cyclotomic::one();
        }
        m
    }

    pub fn zero(dim: usize) -> CycMatrix {
        CycMatrix { dim, entries: vec![Cyclotomic::zero(); dim * dim] }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> CycMatrix {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        CycMatrix { dim, entries: rows.into_iter().flatten().collect() }
    }

    pub fn scalar(c: Cyclotomic) -> CycMatrix {
        CycMatrix { dim: 1, entries: vec![c] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Cyclotomic) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        let n = self.dim;
        assert_eq!(n, other.dim);
        let mut out = Self::zero(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn kronecker(&self, other: &CycMatrix) -> CycMatrix {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.set(i * m + k, j * m + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn block_diagonal(&self, other: &CycMatrix) -> CycMatrix {
        let (n, m) = (self.dim, other.dim);
        let mut out = Self::zero(n + m);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..m {
            for j in 0..m {
                out.set(n + i, n + j, other.get(i, j).clone());
            }
        }
        out
    }
}

/// A representation given by one matrix per group element.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    matrices: Vec<CycMatrix>,
}

impl MatrixRep {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: Elem) -> &CycMatrix {
        &self.matrices[g as usize]
    }

    /// `rho(gh) = rho(g) rho(h)` on all pairs.
    pub fn is_multiplicative(&self) -> bool {
        let g = &self.group;
        g.elements().all(|x| g.elements().all(|y| self.matrix(x).mul(self.matrix(y)) == *self.matrix(g.mul(x, y))))
    }
}

fn check_bounds(group: &FiniteGroup, dim: usize, limits: &Limits) -> Result<(), RepError> {
    if group.order() > limits.max_matrix_group_order {
        return Err(RepError::OrderBound { order: group.order(), bound: limits.max_matrix_group_order });
    }
    if dim > limits.max_matrix_dim {
        return Err(RepError::DimensionBound { dim, bound: limits.max_matrix_dim });
    }
    Ok(())
}

/// Extends images of the generators to all elements.
pub fn rep_from_generator_images(
    group: &Arc<FiniteGroup>,
    images: &[CycMatrix],
    limits: &Limits,
) -> Result<MatrixRep, RepError> {
    let gens = group.generators();
    if gens.len() != images.len() {
        return Err(RepError::GeneratorCount { expected: gens.len(), got: images.len() });
    }
    let dim = images.first().map_or(1, CycMatrix::dim);
    if images.iter().any(|m| m.dim() != dim) {
        return Err(RepError::NotMultiplicative);
    }
    check_bounds(group, dim, limits)?;
    let mut mats: Vec<Option<CycMatrix>> = vec![None; group.order()];
    mats[group.identity() as usize] = Some(CycMatrix::identity(dim));
    let mut queue = VecDeque::from([group.identity()]);
    while let Some(x) = queue.pop_front() {
        let mx = mats[x as usize].clone().expect("visited");
        for (&s, ms) in gens.iter().zip(images) {
            let y = group.mul(x, s) as usize;
            let my = mx.mul(ms);
            match &mats[y] {
                None => {
                    mats[y] = Some(my);
                    queue.push_back(y as Elem);
                }
                Some(existing) if *existing != my => return Err(RepError::NotMultiplicative),
                Some(_) => {}
            }
        }
    }
    let matrices = mats.into_iter().map(|m| m.expect("generators span the group")).collect();
    Ok(MatrixRep { group: group.clone(), dim, matrices })
}

/// The one-dimensional representation with character `chi`.
pub fn rep_from_linear_character(chi: &ClassFunction, limits: &Limits) -> Result<MatrixRep, RepError> {
    if chi.degree() != Some(1) {
        return Err(RepError::NotLinear);
    }
    let group = chi.group();
    let images: Vec<CycMatrix> = group.generators().iter().map(|&s| CycMatrix::scalar(chi.value_at(s).clone())).collect();
    let rep = rep_from_generator_images(group, &images, limits).map_err(|e| match e {
        RepError::NotMultiplicative => RepError::NotLinear,
        other => other,
    })?;
    if group.elements().any(|g| rep.matrix(g).get(0, 0) != chi.value_at(g)) {
        return Err(RepError::NotLinear);
    }
    Ok(rep)
}

pub fn direct_sum(a: &MatrixRep, b: &MatrixRep, limits: &Limits) -> Result<MatrixRep, RepError> {
    if !same_group(&a.group, &b.group) {
        return Err(RepError::GroupMismatch);
    }
    check_bounds(&a.group, a.dim + b.dim, limits)?;
    let matrices = a.matrices.iter().zip(&b.matrices).map(|(x, y)| x.block_diagonal(y)).collect();
    Ok(MatrixRep { group: a.group.clone(), dim: a.dim + b.dim, matrices })
}

pub fn tensor(a: &MatrixRep, b: &MatrixRep, limits: &Limits) -> Result<MatrixRep, RepError> {
    if !same_group(&a.group, &b.group) {
        return Err(RepError::GroupMismatch);
    }
    check_bounds(&a.group, a.dim * b.dim, limits)?;
    let matrices = a.matrices.iter().zip(&b.matrices).map(|(x, y)| x.kronecker(y)).collect();
    Ok(MatrixRep { group: a.group.clone(), dim: a.dim * b.dim, matrices })
}

pub fn character_of(rep: &MatrixRep) -> ClassFunction {
    ClassFunction::from_fn(rep.group.clone(), |g| rep.matrix(g).trace())
}

/// For each `g`: the coset permutation `sigma` and the elements
/// `h_i = gamma_{sigma(i)}^-1 g gamma_i` as local indices of `h`.
fn coset_action(h: &Subgroup, transversal: &[Elem], g: Elem) -> Result<(Vec<usize>, Vec<Elem>), RepError> {
    let parent = h.parent();
    let coset = h.left_coset_map(transversal)?;
    let sigma: Vec<usize> = transversal.iter().map(|&t| coset[parent.mul(g, t) as usize]).collect();
    let hs = transversal
        .iter()
        .zip(&sigma)
        .map(|(&t, &s)| {
            let x = parent.mul(parent.mul(parent.inv(transversal[s]), g), t);
            h.local_index(x).expect("transversal")
        })
        .collect();
    Ok((sigma, hs))
}

fn check_rep_on(rho: &MatrixRep, h: &Subgroup) -> Result<(), RepError> {
    if same_group(&rho.group, &h.as_group()) {
        Ok(())
    } else {
        Err(RepError::GroupMismatch)
    }
}

/// `g (gamma_i (x) v) = gamma_{sigma(i)} (x) h_i v`; block `(sigma(i), i)` is
/// `rho(h_i)`.
pub fn induced_matrix_rep(
    rho: &MatrixRep,
    h: &Subgroup,
    transversal: &[Elem],
    limits: &Limits,
) -> Result<MatrixRep, RepError> {
    check_rep_on(rho, h)?;
    let g = h.parent();
    let n = transversal.len();
    let d = rho.dim;
    check_bounds(g, n * d, limits)?;
    let mut matrices = Vec::with_capacity(g.order());
    for x in g.elements() {
        let (sigma, hs) = coset_action(h, transversal, x)?;
        let mut m = CycMatrix::zero(n * d);
        for i in 0..n {
            let block = rho.matrix(hs[i]);
            for r in 0..d {
                for c in 0..d {
                    m.set(sigma[i] * d + r, i * d + c, block.get(r, c).clone());
                }
            }
        }
        matrices.push(m);
    }
    Ok(MatrixRep { group: g.clone(), dim: n * d, matrices })
}

/// `g (v_1 (x) ... (x) v_n) = w_1 (x) ... (x) w_n` with
/// `w_{sigma(i)} = rho(h_i) v_i`.
pub fn tensor_induced_matrix_rep(
    rho: &MatrixRep,
    h: &Subgroup,
    transversal: &[Elem],
    limits: &Limits,
) -> Result<MatrixRep, RepError> {
    check_rep_on(rho, h)?;
    let g = h.parent();
    let n = transversal.len();
    let d = rho.dim;
    let dim = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(d)).unwrap_or(usize::MAX);
    check_bounds(g, dim, limits)?;
    let digits = |mut x: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let r = x % d;
                x /= d;
                r
            })
            .collect()
    };
    let tuples: Vec<Vec<usize>> = (0..dim).map(digits).collect();
    let mut matrices = Vec::with_capacity(g.order());
    for x in g.elements() {
        let (sigma, hs) = coset_action(h, transversal, x)?;
        let mut sigma_inv = vec![0; n];
        for (i, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = i;
        }
        let mut m = CycMatrix::zero(dim);
        for (bi, b) in tuples.iter().enumerate() {
            for (ai, a) in tuples.iter().enumerate() {
                let mut entry = Cyclotomic::one();
                for j in 0..n {
                    let i = sigma_inv[j];
                    let v = rho.matrix(hs[i]).get(b[j], a[i]);
                    if v.is_zero() {
                        entry = Cyclotomic::zero();
                        break;
                    }
                    entry = &entry * v;
                }
                if !entry.is_zero() {
                    m.set(bi, ai, entry);
                }
            }
        }
        matrices.push(m);
    }
    Ok(MatrixRep { group: g.clone(), dim, matrices })
}

/// A matrix representation with character `chi`, assembled from
/// representations induced from linear characters of subgroups.
pub fn realize_character(chi: &ClassFunction, table: &CharacterTable, limits: &Limits) -> Result<MatrixRep, RepError> {
    let group = chi.group();
    let parts = table.constituents(chi)?;
    let subgroups = all_subgroups(group);
    let mut acc: Option<MatrixRep> = None;
    for (idx, mult) in parts {
        let psi = &table.characters()[idx];
        let rep = realize_irreducible(psi, &subgroups, limits)?;
        for _ in 0..mult {
            acc = Some(match acc {
                None => rep.clone(),
                Some(a) => direct_sum(&a, &rep, limits)?,
            });
        }
    }
    acc.ok_or(RepError::NotCharacter)
}

fn realize_irreducible(psi: &ClassFunction, subgroups: &[Subgroup], limits: &Limits) -> Result<MatrixRep, RepError> {
    let group = psi.group();
    let degree = psi.degree().ok_or(RepError::NotCharacter)? as usize;
    if degree == 1 {
        return rep_from_linear_character(psi, limits);
    }
    for k in subgroups.iter().filter(|k| k.index() == degree) {
        let own = k.as_group();
        let table = super::character_table(&own, limits)?;
        for lambda in table.characters().iter().filter(|c| c.degree() == Some(1)) {
            if induce(lambda, k)? == *psi {
                let linear = rep_from_linear_character(lambda, limits)?;
                let rep = induced_matrix_rep(&linear, k, &k.left_transversal(), limits)?;
                debug_assert!(Arc::ptr_eq(rep.group(), group));
                return Ok(rep);
            }
        }
    }
    Err(RepError::NotMonomial)
}
