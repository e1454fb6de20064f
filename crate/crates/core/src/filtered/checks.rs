//! Predicates on filtered groups evaluated character by character.

use num_traits::Zero;

use super::{graded_characters, invariant_dimension, is_p_power, slope_decomposition, BreakChain, FilterError};
use crate::newton::tensor_slope_bound;
use crate::reptheory::{CharacterTable, ClassFunction};

/// Distinct graded pieces of `chi` share no irreducible constituent, every
/// piece is a genuine character, and every constituent of `chi` has a single
/// slope.
pub fn lemma13_check(f: &BreakChain, chi: &ClassFunction, table: &CharacterTable) -> Result<bool, FilterError> {
    if !table.is_for(f.group()) {
        return Err(FilterError::GroupMismatch);
    }
    let pieces = graded_characters(f, chi)?;
    let mut owner: Vec<Option<usize>> = vec![None; table.len()];
    for (k, (_, piece)) in pieces.iter().enumerate() {
        if piece.is_zero() {
            continue;
        }
        let Some(mults) = table.multiplicities(piece)? else {
            return Ok(false);
        };
        for (i, &m) in mults.iter().enumerate() {
            if m == 0 {
                continue;
            }
            if owner[i].is_some_and(|o| o != k) {
                return Ok(false);
            }
            owner[i] = Some(k);
        }
    }
    for (i, _) in table.constituents(chi)? {
        if slope_decomposition(f, &table.characters()[i])?.entries().len() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The decomposition of `chi * psi` is admitted by the abstract tensor bound.
pub fn tensor_bound_check(f: &BreakChain, chi: &ClassFunction, psi: &ClassFunction) -> Result<bool, FilterError> {
    let a = slope_decomposition(f, chi)?;
    let b = slope_decomposition(f, psi)?;
    let product = slope_decomposition(f, &chi.mul(psi)?)?;
    Ok(tensor_slope_bound(&a, &b).admits(&product))
}

/// The Newton polygon of `chi` has integer vertices.
pub fn hasse_arf_check(f: &BreakChain, chi: &ClassFunction) -> Result<bool, FilterError> {
    Ok(slope_decomposition(f, chi)?.polygon().is_integral())
}

/// If `End(V)` has only scalars fixed by the wild subgroup then `deg chi` is
/// a power of `p`.
pub fn ppower_dim_check(f: &BreakChain, chi: &ClassFunction, p: u64) -> Result<bool, FilterError> {
    let wild = f.wild();
    if !is_p_power(wild.order() as u64, p) {
        return Err(FilterError::NotPGroup(p));
    }
    let degree = chi.degree().ok_or(FilterError::NotCharacter)?;
    let end = chi.mul(&chi.dual())?;
    if invariant_dimension(&end, &wild)? != 1 {
        return Ok(true);
    }
    Ok(is_p_power(degree, p))
}

/// If every irreducible has an integral polygon and none has a nonzero
/// integer slope, some nontrivial irreducible has slope 0.
pub fn cor_a2_check(f: &BreakChain, table: &CharacterTable) -> Result<bool, FilterError> {
    if f.group().order() == 1 {
        return Err(FilterError::TrivialGroup);
    }
    if !table.is_for(f.group()) {
        return Err(FilterError::GroupMismatch);
    }
    let mut hypothesis = true;
    let mut conclusion = false;
    for (i, chi) in table.characters().iter().enumerate() {
        let s = slope_decomposition(f, chi)?;
        if !s.polygon().is_integral() {
            hypothesis = false;
        }
        if s.entries().iter().any(|(l, _)| !l.is_zero() && l.is_integer()) {
            hypothesis = false;
        }
        if i > 0 && s.entries().iter().all(|(l, _)| l.is_zero()) {
            conclusion = true;
        }
    }
    Ok(!hypothesis || conclusion)
}
