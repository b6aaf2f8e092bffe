//! Degree-indexed scaling functions `c(g, h)` relating `Omega^2_D` to the
//! bracket.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grading::{GroupElement, GroupSpec};
use crate::scalar::{Scalar, ScalarDomain};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CFunction {
    Constant(Scalar),
    /// `c(g, h) = (-1)^(s . (g + h))` for an integer functional `s`.
    SignAlternating { functional: Vec<i64> },
    /// Explicit values; pairs not listed are undefined.
    Table(BTreeMap<(GroupElement, GroupElement), Scalar>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFunctionViolation {
    pub g: GroupElement,
    pub h: GroupElement,
    /// `"left"` for `c(g,h) = -c(g+e,h)`, `"right"` for `c(g,h) = -c(g,h+e)`.
    pub side: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFunctionVerdict {
    pub pairs_checked: usize,
    pub violations: Vec<CFunctionViolation>,
}

impl CFunctionVerdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty() && self.pairs_checked > 0
    }
}

impl CFunction {
    pub fn sign_alternating(functional: Vec<i64>) -> Self {
        CFunction::SignAlternating { functional }
    }

    /// `c(g, h)`, or `None` where undefined.
    pub fn eval(&self, domain: &ScalarDomain, g: &GroupElement, h: &GroupElement) -> Option<Scalar> {
        match self {
            CFunction::Constant(s) => Some(s.clone()),
            CFunction::SignAlternating { functional } => {
                if functional.len() != g.0.len() || functional.len() != h.0.len() {
                    return None;
                }
                let exponent: i64 = functional
                    .iter()
                    .zip(g.0.iter().zip(&h.0))
                    .map(|(s, (a, b))| s * (a + b))
                    .sum();
                Some(domain.from_int(if exponent.rem_euclid(2) == 0 { 1 } else { -1 }))
            }
            CFunction::Table(t) => t.get(&(g.clone(), h.clone())).cloned(),
        }
    }

    pub fn eval_nonzero(&self, domain: &ScalarDomain, g: &GroupElement, h: &GroupElement) -> Result<Scalar> {
        match self.eval(domain, g, h) {
            Some(s) if !s.is_zero() => Ok(s),
            _ => Err(Error::ZeroScalingFunction(g.to_string(), h.to_string())),
        }
    }

    /// Checks `c(g,h) = -c(g+e,h)` and `c(g,h) = -c(g,h+e)` for all `g, h`
    /// in `window`.
    pub fn validate(
        &self,
        group: &GroupSpec,
        domain: &ScalarDomain,
        e: &GroupElement,
        window: &[GroupElement],
    ) -> Result<CFunctionVerdict> {
        let mut violations = Vec::new();
        let mut pairs_checked = 0;
        for g in window {
            for h in window {
                pairs_checked += 1;
                let base = self.eval(domain, g, h);
                let ge = group.add(g, e)?;
                let he = group.add(h, e)?;
                let flipped = |other: Option<Scalar>| match (&base, other) {
                    (Some(x), Some(y)) => !x.is_zero() && *x == -y,
                    _ => false,
                };
                if !flipped(self.eval(domain, &ge, h)) {
                    violations.push(CFunctionViolation {
                        g: g.clone(),
                        h: h.clone(),
                        side: "left",
                    });
                }
                if !flipped(self.eval(domain, g, &he)) {
                    violations.push(CFunctionViolation {
                        g: g.clone(),
                        h: h.clone(),
                        side: "right",
                    });
                }
            }
        }
        Ok(CFunctionVerdict {
            pairs_checked,
            violations,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn window() -> Vec<GroupElement> {
        (-3..=4).map(|g| GroupElement(vec![g])).collect()
    }

    #[test]
    fn sign_alternating_is_valid_for_odd_shift() {
        let c = CFunction::sign_alternating(vec![1]);
        let v = c
            .validate(&GroupSpec::free(1), &ScalarDomain::Rational, &GroupElement(vec![-1]), &window())
            .unwrap();
        assert!(v.is_valid());
    }

    #[test]
    fn constant_one_is_invalid() {
        let c = CFunction::Constant(ScalarDomain::Rational.one());
        let v = c
            .validate(&GroupSpec::free(1), &ScalarDomain::Rational, &GroupElement(vec![-1]), &window())
            .unwrap();
        assert_eq!(v.violations.len(), 2 * v.pairs_checked);
    }

    #[test]
    fn zero_shift_is_always_invalid() {
        let c = CFunction::sign_alternating(vec![1]);
        let v = c
            .validate(&GroupSpec::free(1), &ScalarDomain::Rational, &GroupElement(vec![0]), &window())
            .unwrap();
        assert!(!v.is_valid());
        assert_eq!(v.violations.len(), 2 * v.pairs_checked);
    }

    #[test]
    fn table_lookup() {
        let mut t = BTreeMap::new();
        let g = GroupElement(vec![1]);
        t.insert((g.clone(), g.clone()), ScalarDomain::Rational.from_int(3));
        let c = CFunction::Table(t);
        assert_eq!(c.eval(&ScalarDomain::Rational, &g, &g).unwrap().to_string(), "3");
        assert!(c
            .eval_nonzero(&ScalarDomain::Rational, &g, &GroupElement(vec![0]))
            .is_err());
    }
}
