//! Slope filtrations on representations of a finite group, induced by a
//! descending chain of normal subgroups indexed by rational breaks.

mod checks;
mod herbrand;

use std::sync::Arc;

use num_traits::{Signed, Zero};

use crate::groups::{Elem, FiniteGroup, Subgroup};
use crate::newton::NewtonError;
use crate::reptheory::{same_group, ClassFunction, RepError};
use crate::{Cyclotomic, NewtonPolygon, Rational, SlopeMultiset};

pub use checks::{
    cor_a2_check, hasse_arf_check, lemma13_check, ppower_dim_check, tensor_bound_check,
};
pub use herbrand::{herbrand_phi, lower_numbering_swan, upper_from_lower, HerbrandFunction, LowerChain};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FilterError {
    #[error("breaks must be positive")]
    NonPositiveBreak,
    #[error("breaks must be strictly increasing")]
    NotIncreasing,
    #[error("{breaks} breaks but {subgroups} subgroups")]
    LengthMismatch { breaks: usize, subgroups: usize },
    #[error("subgroup {0} of the chain is not normal")]
    NotNormal(usize),
    #[error("subgroup {0} of the chain does not strictly contain the next one")]
    NotDescending(usize),
    #[error("subgroups must belong to the chain's group")]
    GroupMismatch,
    #[error("lower chain must start with the whole group")]
    BadBase,
    #[error("class function is not a character")]
    NotCharacter,
    #[error("wild subgroup is not a {0}-group")]
    NotPGroup(u64),
    #[error("the trivial group has no nontrivial irreducible characters")]
    TrivialGroup,
    #[error("scale factor must be positive")]
    ZeroScale,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Newton(#[from] NewtonError),
}

/// `G^(l) = H_i` for `l` in `(l_{i-1}, l_i]` (with `l_0 = 0`) and
/// `G^(l) = 1` for `l > l_k`.
#[derive(Debug, Clone)]
pub struct BreakChain {
    group: Arc<FiniteGroup>,
    breaks: Vec<Rational>,
    subgroups: Vec<Subgroup>,
}

impl BreakChain {
    pub fn new(group: Arc<FiniteGroup>, breaks: Vec<Rational>, subgroups: Vec<Subgroup>) -> Result<BreakChain, FilterError> {
        if breaks.len() != subgroups.len() {
            return Err(FilterError::LengthMismatch { breaks: breaks.len(), subgroups: subgroups.len() });
        }
        if breaks.iter().any(|b| !b.is_positive()) {
            return Err(FilterError::NonPositiveBreak);
        }
        if breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FilterError::NotIncreasing);
        }
        for (i, h) in subgroups.iter().enumerate() {
            if !Arc::ptr_eq(h.parent(), &group) {
                return Err(FilterError::GroupMismatch);
            }
            if !h.is_normal() {
                return Err(FilterError::NotNormal(i));
            }
            let strictly_above = match subgroups.get(i + 1) {
                Some(next) => next.order() < h.order() && next.is_subgroup_of(h),
                None => !h.is_trivial(),
            };
            if !strictly_above {
                return Err(FilterError::NotDescending(i));
            }
        }
        Ok(BreakChain { group, breaks, subgroups })
    }

    /// The chain with no breaks: everything has slope 0.
    pub fn tame(group: Arc<FiniteGroup>) -> BreakChain {
        BreakChain { group, breaks: Vec::new(), subgroups: Vec::new() }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// `G^{>0}`, the first subgroup of the chain.
    pub fn wild(&self) -> Subgroup {
        self.subgroups.first().cloned().unwrap_or_else(|| Subgroup::trivial(&self.group))
    }

    /// `G^(l)` for the interval semantics above; `l > 0`.
    pub fn at(&self, lambda: &Rational) -> Subgroup {
        self.breaks
            .iter()
            .position(|b| lambda <= b)
            .map(|i| self.subgroups[i].clone())
            .unwrap_or_else(|| Subgroup::trivial(&self.group))
    }

    /// Same subgroups with every break multiplied by `n`.
    pub fn kummer_scale(&self, n: u64) -> Result<BreakChain, FilterError> {
        if n == 0 {
            return Err(FilterError::ZeroScale);
        }
        let k = Rational::from_integer((n as i64).into());
        Ok(BreakChain {
            group: self.group.clone(),
            breaks: self.breaks.iter().map(|b| b * &k).collect(),
            subgroups: self.subgroups.clone(),
        })
    }

    /// The subgroups `H_1, ..., H_k, 1`.
    fn levels(&self) -> Vec<Subgroup> {
        let mut v = self.subgroups.clone();
        v.push(Subgroup::trivial(&self.group));
        v
    }

    fn check_char(&self, chi: &ClassFunction) -> Result<(), FilterError> {
        if same_group(chi.group(), &self.group) {
            Ok(())
        } else {
            Err(FilterError::GroupMismatch)
        }
    }
}

pub fn kummer_scale(chain: &BreakChain, n: u64) -> Result<BreakChain, FilterError> {
    chain.kummer_scale(n)
}

/// `dim V^H = (1/|H|) sum_{h in H} chi(h)`.
pub fn invariant_dimension(chi: &ClassFunction, h: &Subgroup) -> Result<u64, FilterError> {
    let mut acc = Cyclotomic::zero();
    for &x in h.elements() {
        acc += chi.value_at(x);
    }
    let d = acc.scale(&Rational::new(1.into(), (h.order() as i64).into()));
    d.as_integer()
        .and_then(|v| u64::try_from(v).ok())
        .ok_or(FilterError::NotCharacter)
}

/// Character of `V^H` for `H` normal: `g -> (1/|H|) sum_h chi(g h)`.
pub fn invariant_character(chi: &ClassFunction, h: &Subgroup) -> ClassFunction {
    let g = chi.group().clone();
    let inv = Rational::new(1.into(), (h.order() as i64).into());
    ClassFunction::from_fn(g.clone(), |x: Elem| {
        let mut acc = Cyclotomic::zero();
        for &y in h.elements() {
            acc += chi.value_at(g.mul(x, y));
        }
        acc.scale(&inv)
    })
}

/// Dimensions of the graded pieces: slope 0 carries `dim V^{H_1}` and slope
/// `l_i` carries `dim V^{H_{i+1}} - dim V^{H_i}`.
pub fn slope_decomposition(chain: &BreakChain, chi: &ClassFunction) -> Result<SlopeMultiset, FilterError> {
    chain.check_char(chi)?;
    let degree = chi.degree().ok_or(FilterError::NotCharacter)?;
    let levels = chain.levels();
    let dims: Vec<u64> = levels.iter().map(|h| invariant_dimension(chi, h)).collect::<Result<_, _>>()?;
    debug_assert_eq!(*dims.last().unwrap(), degree);
    let mut pairs = vec![(Rational::zero(), dims[0])];
    for (i, b) in chain.breaks.iter().enumerate() {
        let d = dims[i + 1].checked_sub(dims[i]).ok_or(FilterError::NotCharacter)?;
        pairs.push((b.clone(), d));
    }
    Ok(SlopeMultiset::from_pairs(pairs.into_iter().filter(|(_, d)| *d > 0))?)
}

/// The graded pieces as characters, indexed like [`BreakChain::breaks`] with
/// slope 0 first.
pub fn graded_characters(chain: &BreakChain, chi: &ClassFunction) -> Result<Vec<(Rational, ClassFunction)>, FilterError> {
    chain.check_char(chi)?;
    let levels = chain.levels();
    let fixed: Vec<ClassFunction> = levels.iter().map(|h| invariant_character(chi, h)).collect();
    let mut out = vec![(Rational::zero(), fixed[0].clone())];
    for (i, b) in chain.breaks.iter().enumerate() {
        out.push((b.clone(), fixed[i + 1].sub(&fixed[i])?));
    }
    Ok(out)
}

pub fn newton_polygon(chain: &BreakChain, chi: &ClassFunction) -> Result<NewtonPolygon, FilterError> {
    Ok(slope_decomposition(chain, chi)?.polygon())
}

/// Swan conductor: the height of the Newton polygon.
pub fn swan(chain: &BreakChain, chi: &ClassFunction) -> Result<Rational, FilterError> {
    Ok(newton_polygon(chain, chi)?.height())
}

/// The slopes of an irreducible character; a single slope is expected.
pub fn slopes_of(chain: &BreakChain, chi: &ClassFunction) -> Result<Vec<Rational>, FilterError> {
    Ok(slope_decomposition(chain, chi)?.entries().iter().map(|(s, _)| s.clone()).collect())
}

pub(crate) fn is_p_power(n: u64, p: u64) -> bool {
    let mut n = n;
    while n > 1 && n % p == 0 {
        n /= p;
    }
    n == 1
}


#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::exactnum::frac;
    use crate::groups::library;

    /// C6 with H1 = C6 on (0, 1/2] and H2 = C2 on (1/2, 1].
    pub(crate) fn c6_chain() -> BreakChain {
        let g = Arc::new(library::cyclic(6));
        let h1 = Subgroup::whole(&g);
        let h2 = Subgroup::generated(&g, &[3]).unwrap();
        BreakChain::new(g, vec![frac(1, 2), frac(1, 1)], vec![h1, h2]).unwrap()
    }

    /// `chi_k(g) = zeta_6^(k g)` on C6 = Z/6.
    pub(crate) fn c6_char_on(g: &Arc<FiniteGroup>, k: u64) -> ClassFunction {
        ClassFunction::from_fn(g.clone(), |x| Cyclotomic::root_of_unity(6, k * x as u64))
    }

    fn single(s: Rational) -> SlopeMultiset {
        SlopeMultiset::single(s, 1).unwrap()
    }

    #[test]
    fn c6_decompositions() {
        let f = c6_chain();
        let g = f.group().clone();
        let chi = |k: u64| c6_char_on(&g, k);
        // order 6 character: nontrivial on C2
        assert_eq!(slope_decomposition(&f, &chi(1)).unwrap(), single(frac(1, 1)));
        // order 3 character: trivial on C2
        assert_eq!(slope_decomposition(&f, &chi(2)).unwrap(), single(frac(1, 2)));
        assert_eq!(slope_decomposition(&f, &chi(0)).unwrap(), single(frac(0, 1)));
        assert_eq!(swan(&f, &chi(2)).unwrap(), frac(1, 2));
        let reg = ClassFunction::regular(&g);
        let s = slope_decomposition(&f, &reg).unwrap();
        assert_eq!(s.entries(), &[(frac(0, 1), 1), (frac(1, 2), 2), (frac(1, 1), 3)]);
    }

    #[test]
    fn chain_validation() {
        let g = Arc::new(library::cyclic(6));
        let h = Subgroup::generated(&g, &[3]).unwrap();
        let whole = Subgroup::whole(&g);
        assert_eq!(
            BreakChain::new(g.clone(), vec![frac(1, 1), frac(1, 2)], vec![whole.clone(), h.clone()]).unwrap_err(),
            FilterError::NotIncreasing
        );
        assert_eq!(
            BreakChain::new(g.clone(), vec![frac(1, 2), frac(1, 1)], vec![h.clone(), whole.clone()]).unwrap_err(),
            FilterError::NotDescending(0)
        );
        assert_eq!(
            BreakChain::new(g.clone(), vec![frac(0, 1)], vec![whole.clone()]).unwrap_err(),
            FilterError::NonPositiveBreak
        );
        let s3 = Arc::new(library::symmetric(3));
        let c2 = Subgroup::generated(&s3, &[s3.generators()[0]]).unwrap();
        assert_eq!(BreakChain::new(s3, vec![frac(1, 1)], vec![c2]).unwrap_err(), FilterError::NotNormal(0));
        let f = BreakChain::new(g.clone(), vec![frac(1, 2), frac(1, 1)], vec![whole.clone(), h.clone()]).unwrap();
        assert_eq!(f.at(&frac(1, 2)), whole);
        assert_eq!(f.at(&frac(3, 4)), h);
        assert!(f.at(&frac(2, 1)).is_trivial());
    }

    #[test]
    fn kummer_scaling_of_c2() {
        let g = Arc::new(library::cyclic(2));
        let f = BreakChain::new(g.clone(), vec![frac(1, 1)], vec![Subgroup::whole(&g)]).unwrap();
        let sign = ClassFunction::from_fn(g.clone(), |x| Cyclotomic::from_int(if x == 0 { 1 } else { -1 }));
        assert_eq!(swan(&f, &sign).unwrap(), frac(1, 1));
        let f2 = kummer_scale(&f, 2).unwrap();
        assert_eq!(f2.breaks(), &[frac(2, 1)]);
        assert_eq!(swan(&f2, &sign).unwrap(), frac(2, 1));
        assert_eq!(kummer_scale(&f, 0).unwrap_err(), FilterError::ZeroScale);
    }

    #[test]
    fn graded_characters_sum_to_chi() {
        let f = c6_chain();
        let reg = ClassFunction::regular(f.group());
        let pieces = graded_characters(&f, &reg).unwrap();
        let total = pieces.iter().fold(ClassFunction::zero(f.group()), |acc, (_, c)| acc.add(c).unwrap());
        assert_eq!(total, reg);
        assert_eq!(pieces[1].1.degree(), Some(2));
    }
}
