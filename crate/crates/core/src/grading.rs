//! Finitely generated abelian groups `Z^r + Z_{n1} + ... + Z_{nt}` and
//! bicharacters on them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarDomain};

/// Shape of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub free_rank: usize,
    #[serde(rename = "torsion", default)]
    pub torsion_orders: Vec<u64>,
}

/// A group element as a coordinate vector, free coordinates first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl From<Vec<i64>> for GroupElement {
    fn from(v: Vec<i64>) -> Self {
        GroupElement(v)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl GroupSpec {
    pub fn new(free_rank: usize, torsion_orders: Vec<u64>) -> Result<Self> {
        if let Some(n) = torsion_orders.iter().find(|&&n| n < 2) {
            return Err(Error::Invalid(format!("torsion order {n} must be at least 2")));
        }
        Ok(GroupSpec {
            free_rank,
            torsion_orders,
        })
    }

    /// `Z^r`.
    pub fn free(rank: usize) -> Self {
        GroupSpec {
            free_rank: rank,
            torsion_orders: Vec::new(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.free_rank + self.torsion_orders.len()
    }

    /// Order of generator `i`; `None` for free generators.
    pub fn order_of(&self, i: usize) -> Option<u64> {
        i.checked_sub(self.free_rank)
            .and_then(|t| self.torsion_orders.get(t).copied())
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if g.0.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                got: g.0.len(),
            });
        }
        Ok(())
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.dimension()])
    }

    /// The `i`-th generator `e_i`.
    pub fn basis(&self, i: usize) -> GroupElement {
        let mut v = vec![0; self.dimension()];
        v[i] = 1;
        self.canonicalize_unchecked(GroupElement(v))
    }

    fn canonicalize_unchecked(&self, mut g: GroupElement) -> GroupElement {
        for (t, &n) in self.torsion_orders.iter().enumerate() {
            let c = &mut g.0[self.free_rank + t];
            *c = c.rem_euclid(n as i64);
        }
        g
    }

    /// Reduces torsion coordinates into `[0, n_i)`.
    pub fn canonicalize(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.canonicalize_unchecked(g.clone()))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let v = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.canonicalize_unchecked(GroupElement(v))
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.canonicalize_unchecked(GroupElement(a.0.iter().map(|x| -x).collect())))
    }

    /// Every element of a finite group, in lexicographic coordinate order.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &n in &self.torsion_orders {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..n as i64).map(move |c| {
                        let mut w = v.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(GroupElement).collect())
    }
}

/// A bicharacter given by its values on pairs of generators, extended
/// bilinearly: `chi(g, h) = prod M[i][j]^(g_i * h_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bicharacter {
    group: GroupSpec,
    domain: ScalarDomain,
    matrix: Vec<Vec<Scalar>>,
}

/// One torsion constraint `M[i][j]^n = 1` that fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionViolation {
    pub row: usize,
    pub col: usize,
    pub order: u64,
    pub power: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiValidation {
    pub violations: Vec<TorsionViolation>,
}

impl ChiValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A degree pair with `chi(g, h) * chi(h, g) != 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryFailure {
    pub g: GroupElement,
    pub h: GroupElement,
    pub product: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryVerdict {
    pub pairs_checked: usize,
    pub failures: Vec<SymmetryFailure>,
}

impl SymmetryVerdict {
    pub fn is_symmetric(&self) -> bool {
        self.failures.is_empty()
    }
}

impl Bicharacter {
    /// Builds a bicharacter from its generator matrix. Entries must be
    /// nonzero and share `domain`; torsion constraints are not enforced here
    /// (see [`Bicharacter::validate`]).
    pub fn new(group: GroupSpec, domain: ScalarDomain, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = group.dimension();
        if matrix.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: matrix.len(),
            });
        }
        for row in &matrix {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.domain() != domain {
                    return Err(Error::DomainMismatch(
                        domain.to_string(),
                        entry.domain().to_string(),
                    ));
                }
                if entry.is_zero() {
                    return Err(Error::Invalid("bicharacter entries must be nonzero".into()));
                }
            }
        }
        Ok(Bicharacter {
            group,
            domain,
            matrix,
        })
    }

    /// Parses a matrix of scalar expressions.
    pub fn parse(group: GroupSpec, domain: ScalarDomain, rows: &[Vec<&str>]) -> Result<Self> {
        let matrix = rows
            .iter()
            .map(|r| r.iter().map(|s| domain.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Bicharacter::new(group, domain, matrix)
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn domain(&self) -> &ScalarDomain {
        &self.domain
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    /// `chi(g, h)`.
    pub fn eval(&self, g: &GroupElement, h: &GroupElement) -> Result<Scalar> {
        self.group.check(g)?;
        self.group.check(h)?;
        Ok(self.eval_unchecked(g, h))
    }

    pub(crate) fn eval_unchecked(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        let mut acc = self.domain.one();
        for (i, &gi) in g.0.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (j, &hj) in h.0.iter().enumerate() {
                if hj == 0 {
                    continue;
                }
                let factor = self.matrix[i][j]
                    .pow(gi * hj)
                    .expect("bicharacter entries are nonzero");
                acc = &acc * &factor;
            }
        }
        acc
    }

    /// Checks `M[i][j]^{n_i} = 1` and `M[i][j]^{n_j} = 1` for torsion
    /// generators, listing every failing entry.
    pub fn validate(&self) -> ChiValidation {
        let mut violations = Vec::new();
        let dim = self.group.dimension();
        for i in 0..dim {
            for j in 0..dim {
                let orders: BTreeSet<u64> = [self.group.order_of(i), self.group.order_of(j)]
                    .into_iter()
                    .flatten()
                    .collect();
                for n in orders {
                    let power = self.matrix[i][j].pow(n as i64).expect("nonzero entry");
                    if !power.is_one() {
                        violations.push(TorsionViolation {
                            row: i,
                            col: j,
                            order: n,
                            power,
                        });
                    }
                }
            }
        }
        ChiValidation { violations }
    }

    /// Checks `chi(g, h) chi(h, g) = 1` over all ordered pairs of `degrees`.
    pub fn symmetry_check(&self, degrees: &[GroupElement]) -> Result<SymmetryVerdict> {
        let mut failures = Vec::new();
        let mut pairs_checked = 0;
        for (a, g) in degrees.iter().enumerate() {
            for h in &degrees[a..] {
                pairs_checked += 1;
                let product = &self.eval(g, h)? * &self.eval(h, g)?;
                if !product.is_one() {
                    failures.push(SymmetryFailure {
                        g: g.clone(),
                        h: h.clone(),
                        product,
                    });
                }
            }
        }
        Ok(SymmetryVerdict {
            pairs_checked,
            failures,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(v: &[i64]) -> GroupElement {
        GroupElement(v.to_vec())
    }

    fn qdom() -> ScalarDomain {
        ScalarDomain::rational_function("q")
    }

    #[test]
    fn group_arithmetic_in_z_plus_z2() {
        let spec = GroupSpec::new(1, vec![2]).unwrap();
        assert_eq!(spec.add(&g(&[1, 1]), &g(&[0, 1])).unwrap(), g(&[1, 0]));
        assert_eq!(spec.neg(&g(&[2, 1])).unwrap(), g(&[-2, 1]));
        assert_eq!(spec.zero(), g(&[0, 0]));
        assert_eq!(spec.canonicalize(&g(&[3, -3])).unwrap(), g(&[3, 1]));
        assert!(matches!(
            spec.add(&g(&[1]), &g(&[0, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(GroupSpec::new(0, vec![1]).is_err());
    }

    #[test]
    fn grassmann_sign() {
        let chi = Bicharacter::parse(GroupSpec::free(1), ScalarDomain::Rational, &[vec!["-1"]])
            .unwrap();
        assert!(chi.eval(&g(&[3]), &g(&[5])).unwrap().is_minus_one());
        assert!(chi.eval(&g(&[3]), &g(&[0])).unwrap().is_one());
    }

    #[test]
    fn quantum_plane_entries() {
        let chi = Bicharacter::parse(
            GroupSpec::free(2),
            qdom(),
            &[vec!["1", "q"], vec!["q^-1", "1"]],
        )
        .unwrap();
        assert_eq!(chi.eval(&g(&[1, 0]), &g(&[0, 1])).unwrap().to_string(), "q");
        assert_eq!(chi.eval(&g(&[0, 1]), &g(&[1, 0])).unwrap().to_string(), "1/q");
        let degs = vec![g(&[1, 0]), g(&[0, 1]), g(&[2, 1])];
        assert!(chi.symmetry_check(&degs).unwrap().is_symmetric());
    }

    #[test]
    fn torsion_validation() {
        let z2 = GroupSpec::new(0, vec![2]).unwrap();
        let bad = Bicharacter::parse(z2.clone(), qdom(), &[vec!["q"]]).unwrap();
        let report = bad.validate();
        assert!(!report.is_valid());
        assert_eq!(report.violations[0].power.to_string(), "q^2");
        let good = Bicharacter::parse(z2, ScalarDomain::Rational, &[vec!["-1"]]).unwrap();
        assert!(good.validate().is_valid());
        let free = Bicharacter::parse(GroupSpec::free(1), qdom(), &[vec!["q"]]).unwrap();
        assert!(free.validate().is_valid());
    }

    #[test]
    fn nonsymmetric_witness() {
        let chi = Bicharacter::parse(
            GroupSpec::free(2),
            qdom(),
            &[vec!["1", "q"], vec!["1", "1"]],
        )
        .unwrap();
        let v = chi.symmetry_check(&[g(&[1, 0]), g(&[0, 1])]).unwrap();
        assert!(!v.is_symmetric());
        assert_eq!(v.failures.len(), 1);
        assert_eq!(v.failures[0].product.to_string(), "q");
    }

    #[test]
    fn finite_group_elements() {
        let spec = GroupSpec::new(0, vec![2, 3]).unwrap();
        let els = spec.elements().unwrap();
        assert_eq!(els.len(), 6);
        assert_eq!(els[1], g(&[0, 1]));
        assert!(GroupSpec::free(1).elements().is_none());
    }
}
