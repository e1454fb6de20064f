//! Characters of finite groups with exact cyclotomic values.

mod dixon;
mod matrix;

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::groups::{Elem, FiniteGroup, GroupError, Subgroup};
use crate::{Cyclotomic, Rational};

pub use dixon::{character_table, irreducible_dims_gcd, CharacterTable};
pub use matrix::{
    character_of, direct_sum, induced_matrix_rep, realize_character, rep_from_generator_images,
    rep_from_linear_character, tensor, tensor_induced_matrix_rep, CycMatrix, MatrixRep,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("expected {expected} class values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group of order {order} exceeds the bound {bound}")]
    OrderBound { order: usize, bound: usize },
    #[error("representation dimension {dim} exceeds the bound {bound}")]
    DimensionBound { dim: usize, bound: usize },
    #[error("the trivial group has no nontrivial irreducible characters")]
    TrivialGroup,
    #[error("generator images do not define a homomorphism")]
    NotMultiplicative,
    #[error("expected {expected} generator images, got {got}")]
    GeneratorCount { expected: usize, got: usize },
    #[error("character is not linear")]
    NotLinear,
    #[error("no monomial realization found")]
    NotMonomial,
    #[error("not a character")]
    NotCharacter,
    #[error("character table computation failed: {0}")]
    TableFailed(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A function on conjugacy classes, one value per class in the order of
/// [`FiniteGroup::conjugacy_classes`].
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClassFunction")
            .field("group_order", &self.group.order())
            .field("values", &self.values.iter().map(ToString::to_string).collect::<Vec<_>>())
            .finish()
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.group, &other.group) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

/// Identical objects, or equal multiplication tables.
pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.order() == b.order()
            && a.elements().all(|x| a.elements().all(|y| a.mul(x, y) == b.mul(x, y))))
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<ClassFunction, RepError> {
        let k = group.conjugacy_classes().len();
        if values.len() != k {
            return Err(RepError::LengthMismatch { expected: k, got: values.len() });
        }
        Ok(ClassFunction { group, values })
    }

    /// Builds a class function from its value at every element.
    pub fn from_fn(group: Arc<FiniteGroup>, f: impl Fn(Elem) -> Cyclotomic) -> ClassFunction {
        let cc = group.conjugacy_classes();
        let values = (0..cc.len()).map(|k| f(cc.representative(k))).collect();
        ClassFunction { group, values }
    }

    pub fn constant(group: Arc<FiniteGroup>, c: Cyclotomic) -> ClassFunction {
        let k = group.conjugacy_classes().len();
        ClassFunction { group, values: vec![c; k] }
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> ClassFunction {
        Self::constant(group.clone(), Cyclotomic::one())
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> ClassFunction {
        Self::constant(group.clone(), Cyclotomic::zero())
    }

    /// `|G|` at the identity, 0 elsewhere.
    pub fn regular(group: &Arc<FiniteGroup>) -> ClassFunction {
        let id = group.identity();
        let n = group.order() as i64;
        Self::from_fn(group.clone(), |g| if g == id { Cyclotomic::from_int(n) } else { Cyclotomic::zero() })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value_at(&self, g: Elem) -> &Cyclotomic {
        &self.values[self.group.conjugacy_classes().class_of(g)]
    }

    /// Value at the identity, when it is a non-negative integer.
    pub fn degree(&self) -> Option<u64> {
        let cc = self.group.conjugacy_classes();
        self.values[cc.identity_class()]
            .as_integer()
            .and_then(|d| u64::try_from(d).ok())
    }

    fn check(&self, other: &ClassFunction) -> Result<(), RepError> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(RepError::GroupMismatch)
        }
    }

    fn zip(&self, other: &ClassFunction, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self, RepError> {
        self.check(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction { group: self.group.clone(), values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction, RepError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction, RepError> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product, the character of the tensor product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction, RepError> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Cyclotomic) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn pow(&self, n: u32) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v.pow(n)).collect() }
    }

    /// `g -> chi(g^-1)`, the character of the dual representation.
    pub fn dual(&self) -> ClassFunction {
        let cc = self.group.conjugacy_classes();
        let values = (0..cc.len()).map(|k| self.values[cc.inverse_class(k)].clone()).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// `{g : chi(g) = chi(1)}`, the kernel when `self` is a character.
    pub fn kernel(&self) -> Vec<Elem> {
        let cc = self.group.conjugacy_classes();
        let one = &self.values[cc.identity_class()];
        self.group.elements().filter(|&g| self.value_at(g) == one).collect()
    }
}

/// `(1/|G|) sum_g chi(g) psi(g^-1)`.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic, RepError> {
    chi.check(psi)?;
    let g = &chi.group;
    let cc = g.conjugacy_classes();
    let mut acc = Cyclotomic::zero();
    for k in 0..cc.len() {
        let term = &chi.values[k] * &psi.values[cc.inverse_class(k)];
        acc += term.scale(&Rational::from_integer((cc.size(k) as i64).into()));
    }
    Ok(acc.scale(&Rational::new(1.into(), (g.order() as i64).into())))
}

fn check_subgroup_char(chi: &ClassFunction, h: &Subgroup) -> Result<(), RepError> {
    if same_group(chi.group(), &h.as_group()) {
        Ok(())
    } else {
        Err(RepError::GroupMismatch)
    }
}

/// `Res^G_H chi`, as a class function on `h.as_group()`.
pub fn restrict(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction, RepError> {
    if !same_group(chi.group(), h.parent()) {
        return Err(RepError::GroupMismatch);
    }
    let own = h.as_group();
    Ok(ClassFunction::from_fn(own, |x| chi.value_at(h.to_parent(x)).clone()))
}

/// `h -> chi(gamma^-1 h gamma)` for `chi` on a normal subgroup.
pub fn conjugate_char(chi: &ClassFunction, h: &Subgroup, gamma: Elem) -> Result<ClassFunction, RepError> {
    check_subgroup_char(chi, h)?;
    if !h.is_normal() {
        return Err(RepError::NotNormal);
    }
    let g = h.parent();
    if gamma as usize >= g.order() {
        return Err(GroupError::BadElement(gamma as u64).into());
    }
    Ok(ClassFunction::from_fn(h.as_group(), |x| {
        let y = g.conj(h.to_parent(x), gamma);
        chi.value_at(h.local_index(y).expect("normal subgroup")).clone()
    }))
}

/// Frobenius induction to the parent of `h`.
pub fn induce(chi: &ClassFunction, h: &Subgroup) -> Result<ClassFunction, RepError> {
    check_subgroup_char(chi, h)?;
    let g = h.parent();
    let transversal = h.left_transversal();
    Ok(ClassFunction::from_fn(g.clone(), |x| {
        let mut acc = Cyclotomic::zero();
        for &t in &transversal {
            if let Some(local) = h.local_index(g.conj(x, t)) {
                acc += chi.value_at(local);
            }
        }
        acc
    }))
}

/// Tensor induction to the parent of `h`. The value at `g` is the product,
/// over the cycles of `g` on `G/H` with representative coset `gamma H` and
/// length `m`, of `chi(gamma^-1 g^m gamma)`.
pub fn tensor_induce(
    chi: &ClassFunction,
    h: &Subgroup,
    transversal: Option<&[Elem]>,
) -> Result<ClassFunction, RepError> {
    check_subgroup_char(chi, h)?;
    let g = h.parent();
    let owned;
    let transversal = match transversal {
        Some(t) => t,
        None => {
            owned = h.left_transversal();
            &owned
        }
    };
    let coset = h.left_coset_map(transversal)?;
    let n = transversal.len();
    Ok(ClassFunction::from_fn(g.clone(), |x| {
        let mut done = vec![false; n];
        let mut acc = Cyclotomic::one();
        for i in 0..n {
            if done[i] {
                continue;
            }
            let mut len = 0u64;
            let mut j = i;
            while !done[j] {
                done[j] = true;
                j = coset[g.mul(x, transversal[j]) as usize];
                len += 1;
            }
            let c = g.conj(g.pow(x, len), transversal[i]);
            acc = &acc * chi.value_at(h.local_index(c).expect("cycle returns to its coset"));
        }
        acc
    }))
}

/// Both sides of `Ind V * Ind W = sum_i Ind(gamma_i V * W)`.
#[derive(Debug, Clone)]
pub struct MackeyResult {
    pub holds: bool,
    pub lhs: ClassFunction,
    pub rhs: ClassFunction,
}

pub fn mackey_check(v: &ClassFunction, w: &ClassFunction, h: &Subgroup) -> Result<MackeyResult, RepError> {
    check_subgroup_char(v, h)?;
    check_subgroup_char(w, h)?;
    if !h.is_normal() {
        return Err(RepError::NotNormal);
    }
    let lhs = induce(v, h)?.mul(&induce(w, h)?)?;
    let mut rhs = ClassFunction::zero(h.parent());
    for gamma in h.left_transversal() {
        let term = conjugate_char(v, h, gamma)?.mul(w)?;
        rhs = rhs.add(&induce(&term, h)?)?;
    }
    Ok(MackeyResult { holds: lhs == rhs, lhs, rhs })
}

/// Whether `(Ind chi)^n - TInd chi` is a genuine character, `n = [G:H]`.
#[derive(Debug, Clone)]
pub struct SummandCheck {
    pub holds: bool,
    /// Multiplicity of each irreducible of the table in the difference.
    pub multiplicities: Vec<Cyclotomic>,
}

pub fn tind_summand_check(
    chi: &ClassFunction,
    h: &Subgroup,
    table: &CharacterTable,
) -> Result<SummandCheck, RepError> {
    check_subgroup_char(chi, h)?;
    if !h.is_normal() {
        return Err(RepError::NotNormal);
    }
    if !same_group(table.group(), h.parent()) {
        return Err(RepError::GroupMismatch);
    }
    let n = h.index() as u32;
    let diff = induce(chi, h)?.pow(n).sub(&tensor_induce(chi, h, None)?)?;
    let multiplicities = table.decompose(&diff)?;
    let holds = multiplicities
        .iter()
        .all(|m| m.as_integer().is_some_and(|k| k >= 0));
    Ok(SummandCheck { holds, multiplicities })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;

    fn s3() -> (Arc<FiniteGroup>, Subgroup) {
        let g = Arc::new(library::symmetric(3));
        let a3 = Subgroup::generated(&g, &[g.generators()[1]]).unwrap();
        (g, a3)
    }

    /// `omega` on A3: a fixed generator goes to `zeta_3`.
    fn omega(a3: &Subgroup) -> ClassFunction {
        let own = a3.as_group();
        let gen = own.elements().find(|&x| own.element_order(x) == 3).unwrap();
        ClassFunction::from_fn(own.clone(), |x| {
            let k = (0..3).find(|&k| own.pow(gen, k) == x).unwrap();
            Cyclotomic::root_of_unity(3, k)
        })
    }

    #[test]
    fn inner_products() {
        let (g, _) = s3();
        let one = ClassFunction::trivial(&g);
        assert_eq!(inner_product(&one, &one).unwrap(), Cyclotomic::one());
        let reg = ClassFunction::regular(&g);
        assert_eq!(inner_product(&reg, &one).unwrap(), Cyclotomic::one());
    }

    #[test]
    fn induced_omega_is_irreducible() {
        let (g, a3) = s3();
        let w = omega(&a3);
        let ind = induce(&w, &a3).unwrap();
        assert_eq!(ind.degree(), Some(2));
        assert_eq!(inner_product(&ind, &ind).unwrap(), Cyclotomic::one());
        let res = restrict(&ind, &a3).unwrap();
        let w2 = w.pow(2);
        assert_eq!(res, w.add(&w2).unwrap());
        let t = g.elements().find(|&x| !a3.contains(x)).unwrap();
        assert_eq!(conjugate_char(&w, &a3, t).unwrap(), w2);
        assert_eq!(conjugate_char(&w, &a3, a3.to_parent(1)).unwrap(), w);
    }

    #[test]
    fn permutation_character() {
        let (g, _) = s3();
        let c2 = Subgroup::generated(&g, &[g.generators()[0]]).unwrap();
        let perm = induce(&ClassFunction::trivial(&c2.as_group()), &c2).unwrap();
        for x in g.elements() {
            let fixed = c2.left_transversal().iter().filter(|&&t| c2.contains(g.conj(x, t))).count();
            assert_eq!(perm.value_at(x), &Cyclotomic::from_int(fixed as i64));
        }
        assert!(conjugate_char(&ClassFunction::trivial(&c2.as_group()), &c2, 0).is_err());
    }

    #[test]
    fn whole_group_is_identity() {
        let (g, _) = s3();
        let whole = Subgroup::whole(&g);
        let reg = ClassFunction::regular(&g);
        assert_eq!(induce(&reg, &whole).unwrap(), reg);
        assert_eq!(tensor_induce(&reg, &whole, None).unwrap(), reg);
        assert_eq!(restrict(&reg, &whole).unwrap(), reg);
    }

    #[test]
    fn mackey_and_summand_on_s3() {
        let (g, a3) = s3();
        let w = omega(&a3);
        let m = mackey_check(&w, &w, &a3).unwrap();
        assert!(m.holds);
        assert_eq!(m.lhs.degree(), Some(4));
        let table = character_table(&g, &crate::Limits::default()).unwrap();
        let s = tind_summand_check(&w, &a3, &table).unwrap();
        assert!(s.holds);
        let t = tensor_induce(&w, &a3, None).unwrap();
        assert_eq!(t.degree(), Some(1));
    }

    #[test]
    fn tensor_induction_from_c2_in_c4() {
        let g = Arc::new(library::cyclic(4));
        let c2 = Subgroup::generated(&g, &[2]).unwrap();
        let own = c2.as_group();
        let sign = ClassFunction::from_fn(own.clone(), |x| {
            if x == own.identity() { Cyclotomic::one() } else { Cyclotomic::from_int(-1) }
        });
        let t = tensor_induce(&sign, &c2, None).unwrap();
        // the generator swaps the two cosets and squares into C2
        assert_eq!(t.value_at(1), &Cyclotomic::from_int(-1));
        assert_eq!(t.value_at(2), &Cyclotomic::one());
        assert!(mackey_check(&sign, &sign, &c2).unwrap().holds);
    }

    #[test]
    fn dual_and_kernel() {
        let g = Arc::new(library::cyclic(3));
        let chi = ClassFunction::from_fn(g.clone(), |x| Cyclotomic::root_of_unity(3, x as u64));
        let d = chi.dual();
        assert_eq!(d.value_at(1), &Cyclotomic::root_of_unity(3, 2));
        assert_eq!(chi.kernel(), vec![0]);
        assert_eq!(ClassFunction::new(g.clone(), vec![]).unwrap_err(), RepError::LengthMismatch {
            expected: 3,
            got: 0
        });
    }
}
