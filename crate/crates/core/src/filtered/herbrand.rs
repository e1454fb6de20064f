//! Lower numbering and the Herbrand transition to upper numbering.

use std::sync::Arc;

use num_traits::Zero;

use super::{invariant_dimension, BreakChain, FilterError};
use crate::groups::{FiniteGroup, Subgroup};
use crate::reptheory::{same_group, ClassFunction};
use crate::Rational;

/// `G_0 ⊇ G_1 ⊇ ...` indexed by integers; terms past the list are trivial.
#[derive(Debug, Clone)]
pub struct LowerChain {
    group: Arc<FiniteGroup>,
    lower: Vec<Subgroup>,
}

impl LowerChain {
    pub fn new(group: Arc<FiniteGroup>, lower: Vec<Subgroup>) -> Result<LowerChain, FilterError> {
        match lower.first() {
            Some(g0) if g0.order() == group.order() => {}
            _ => return Err(FilterError::BadBase),
        }
        for (i, h) in lower.iter().enumerate() {
            if !Arc::ptr_eq(h.parent(), &group) {
                return Err(FilterError::GroupMismatch);
            }
            if !h.is_normal() {
                return Err(FilterError::NotNormal(i));
            }
            if i > 0 && !h.is_subgroup_of(&lower[i - 1]) {
                return Err(FilterError::NotDescending(i - 1));
            }
        }
        Ok(LowerChain { group, lower })
    }

    /// Chain from the orders profile `G_i` given as a list of subgroups and
    /// multiplicities: `[(H, n)]` means `H` repeated `n` times.
    pub fn from_runs(group: Arc<FiniteGroup>, runs: &[(Subgroup, usize)]) -> Result<LowerChain, FilterError> {
        let lower = runs.iter().flat_map(|(h, n)| std::iter::repeat(h.clone()).take(*n)).collect();
        LowerChain::new(group, lower)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn lower(&self) -> &[Subgroup] {
        &self.lower
    }

    /// `G_i`, trivial past the stored terms.
    pub fn at(&self, i: usize) -> Subgroup {
        self.lower.get(i).cloned().unwrap_or_else(|| Subgroup::trivial(&self.group))
    }

    /// Indices `u` where `G_u != G_{u+1}`, including a possible tame jump at 0.
    pub fn jumps(&self) -> Vec<usize> {
        (0..self.lower.len()).filter(|&u| self.at(u).order() != self.at(u + 1).order()).collect()
    }

    fn index_ratio(&self, i: usize) -> Rational {
        Rational::new((self.at(i).order() as i64).into(), (self.group.order() as i64).into())
    }
}

/// Exact piecewise-linear function through `points`, continued past the last
/// point with `final_slope`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HerbrandFunction {
    points: Vec<(Rational, Rational)>,
    final_slope: Rational,
}

impl HerbrandFunction {
    pub fn breakpoints(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn final_slope(&self) -> &Rational {
        &self.final_slope
    }

    /// Slopes of consecutive segments, the unbounded one last.
    pub fn slopes(&self) -> Vec<Rational> {
        let mut s: Vec<Rational> = self.points.windows(2).map(|w| (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0)).collect();
        s.push(self.final_slope.clone());
        s
    }

    pub fn eval(&self, u: &Rational) -> Rational {
        let seg = self.points.iter().rposition(|(x, _)| x <= u).unwrap_or(0);
        let slope = match self.points.get(seg + 1) {
            Some(next) => (&next.1 - &self.points[seg].1) / (&next.0 - &self.points[seg].0),
            None => self.final_slope.clone(),
        };
        let (x, y) = &self.points[seg];
        y + slope * (u - x)
    }

    /// `psi`, the inverse function; slopes are positive so it exists.
    pub fn inverse(&self, v: &Rational) -> Rational {
        let seg = self.points.iter().rposition(|(_, y)| y <= v).unwrap_or(0);
        let (x, y) = &self.points[seg];
        let slope = match self.points.get(seg + 1) {
            Some(next) => (&next.1 - y) / (&next.0 - x),
            None => self.final_slope.clone(),
        };
        x + (v - y) / slope
    }
}

/// `phi(u) = integral_0^u dt / [G_0 : G_t]`, slope `|G_i|/|G_0|` on `(i-1, i]`.
pub fn herbrand_phi(c: &LowerChain) -> HerbrandFunction {
    let mut points = vec![(Rational::zero(), Rational::zero())];
    let mut last_u = 0usize;
    let mut last_v = Rational::zero();
    for u in c.jumps().into_iter().filter(|&u| u >= 1) {
        let v = &last_v + c.index_ratio(u) * Rational::from_integer(((u - last_u) as i64).into());
        points.push((Rational::from_integer((u as i64).into()), v.clone()));
        last_u = u;
        last_v = v;
    }
    HerbrandFunction { points, final_slope: c.index_ratio(last_u + 1) }
}

/// Upper numbering: a break `phi(u)` carrying `G_u` at every lower jump `u >= 1`.
pub fn upper_from_lower(c: &LowerChain) -> BreakChain {
    let phi = herbrand_phi(c);
    let (breaks, subgroups) = c
        .jumps()
        .into_iter()
        .filter(|&u| u >= 1)
        .map(|u| (phi.eval(&Rational::from_integer((u as i64).into())), c.at(u)))
        .unzip();
    BreakChain { group: c.group.clone(), breaks, subgroups }
}

/// `sum_{i>=1} (deg chi - dim V^{G_i}) / [G_0 : G_i]`, computed directly from
/// the lower numbering.
pub fn lower_numbering_swan(c: &LowerChain, chi: &ClassFunction) -> Result<Rational, FilterError> {
    if !same_group(chi.group(), &c.group) {
        return Err(FilterError::GroupMismatch);
    }
    let degree = chi.degree().ok_or(FilterError::NotCharacter)?;
    let mut total = Rational::zero();
    for i in 1..c.lower.len() {
        let g = c.at(i);
        let fixed = invariant_dimension(chi, &g)?;
        let codim = Rational::from_integer(((degree - fixed) as i64).into());
        total += codim * c.index_ratio(i);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::frac;
    use crate::filtered::swan;
    use crate::groups::library;
    use crate::Cyclotomic;

    fn c4_chain() -> LowerChain {
        let g = Arc::new(library::cyclic(4));
        let c2 = Subgroup::generated(&g, &[2]).unwrap();
        LowerChain::from_runs(g.clone(), &[(Subgroup::whole(&g), 3), (c2, 3)]).unwrap()
    }

    #[test]
    fn cyclic_p_wild() {
        let g = Arc::new(library::cyclic(5));
        let c = LowerChain::new(g.clone(), vec![Subgroup::whole(&g); 2]).unwrap();
        let phi = herbrand_phi(&c);
        assert_eq!(phi.breakpoints(), &[(frac(0, 1), frac(0, 1)), (frac(1, 1), frac(1, 1))]);
        assert_eq!(phi.final_slope(), &frac(1, 5));
        let f = upper_from_lower(&c);
        assert_eq!(f.breaks(), &[frac(1, 1)]);
        assert_eq!(f.wild().order(), 5);
    }

    #[test]
    fn c4_breaks() {
        let c = c4_chain();
        let phi = herbrand_phi(&c);
        let xs: Vec<Rational> = phi.breakpoints().iter().map(|p| p.0.clone()).collect();
        assert_eq!(xs, vec![frac(0, 1), frac(2, 1), frac(5, 1)]);
        assert_eq!(phi.slopes(), vec![frac(1, 1), frac(1, 2), frac(1, 4)]);
        let f = upper_from_lower(&c);
        assert_eq!(f.breaks(), &[frac(2, 1), frac(7, 2)]);
        assert_eq!(f.subgroups()[1].order(), 2);
        for u in [frac(0, 1), frac(3, 2), frac(4, 1), frac(9, 1)] {
            assert_eq!(phi.inverse(&phi.eval(&u)), u);
        }
    }

    #[test]
    fn trivial_wild_part() {
        // G_0 = G_1 = 1: phi is the identity
        let g = Arc::new(library::cyclic(1));
        let c = LowerChain::new(g.clone(), vec![Subgroup::whole(&g)]).unwrap();
        let phi = herbrand_phi(&c);
        assert_eq!(phi.slopes(), vec![frac(1, 1)]);
        assert_eq!(phi.eval(&frac(7, 3)), frac(7, 3));
        // tame C3: no upper breaks, slope 1/3
        let g = Arc::new(library::cyclic(3));
        let c = LowerChain::new(g.clone(), vec![Subgroup::whole(&g)]).unwrap();
        assert!(upper_from_lower(&c).breaks().is_empty());
        assert_eq!(herbrand_phi(&c).final_slope(), &frac(1, 3));
    }

    #[test]
    fn swan_matches_lower_formula_on_c4() {
        let c = c4_chain();
        let f = upper_from_lower(&c);
        let g = c.group().clone();
        for k in 0..4u64 {
            let chi = ClassFunction::from_fn(g.clone(), |x| Cyclotomic::root_of_unity(4, k * x as u64));
            assert_eq!(swan(&f, &chi).unwrap(), lower_numbering_swan(&c, &chi).unwrap());
        }
        let faithful = ClassFunction::from_fn(g.clone(), |x| Cyclotomic::root_of_unity(4, x as u64));
        assert_eq!(swan(&f, &faithful).unwrap(), frac(7, 2));
    }

    #[test]
    fn rejects_bad_chains() {
        let g = Arc::new(library::cyclic(4));
        let c2 = Subgroup::generated(&g, &[2]).unwrap();
        assert_eq!(LowerChain::new(g.clone(), vec![c2.clone()]).unwrap_err(), FilterError::BadBase);
        assert_eq!(
            LowerChain::new(g.clone(), vec![Subgroup::whole(&g), c2.clone(), Subgroup::whole(&g)]).unwrap_err(),
            FilterError::NotDescending(1)
        );
    }
}
