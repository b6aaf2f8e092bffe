//! Exhaustive enumeration of bicharacters on finite groups.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::grading::{Bicharacter, GroupElement, GroupSpec};
use crate::scalar::{Scalar, ScalarDomain};

/// Largest number of candidate matrices enumerated by default.
pub const DEFAULT_SEARCH_BOUND: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchPredicate {
    /// `chi(e, e) = -1`.
    ChiEeMinusOne(GroupElement),
    Symmetric,
    Nonsymmetric,
}

impl fmt::Display for SearchPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchPredicate::ChiEeMinusOne(e) => write!(f, "chi_ee=-1 (e = {e})"),
            SearchPredicate::Symmetric => f.write_str("symmetric"),
            SearchPredicate::Nonsymmetric => f.write_str("nonsymmetric"),
        }
    }
}

impl FromStr for SearchPredicate {
    type Err = Error;

    /// Parses `symmetric` and `nonsymmetric`; `chi_ee=-1` needs a degree and
    /// is built with [`SearchPredicate::ChiEeMinusOne`].
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symmetric" => Ok(SearchPredicate::Symmetric),
            "nonsymmetric" => Ok(SearchPredicate::Nonsymmetric),
            _ => Err(Error::Invalid(format!("unknown predicate '{s}'"))),
        }
    }
}

/// The scalar domain holding every root of unity an entry may take:
/// rationals when all orders divide 2, else `Q(zeta_L)` for `L` the lcm of
/// the torsion orders.
pub fn search_domain(group: &GroupSpec) -> Result<ScalarDomain> {
    let lcm = group.torsion_orders.iter().fold(1u64, |acc, &n| acc.lcm(&n));
    if lcm <= 2 {
        Ok(ScalarDomain::Rational)
    } else {
        let order = u32::try_from(lcm).map_err(|_| Error::Invalid(format!("torsion lcm {lcm} too large")))?;
        ScalarDomain::cyclotomic(order)
    }
}

/// All generator matrices on a finite group satisfying the torsion
/// constraints and `predicate`, in lexicographic order of the entry
/// exponents (row-major).
pub fn bicharacter_search(group: &GroupSpec, predicate: &SearchPredicate, bound: u128) -> Result<Vec<Bicharacter>> {
    if group.free_rank != 0 {
        return Err(Error::Invalid("search needs a finite group".into()));
    }
    let orders = &group.torsion_orders;
    let r = orders.len();
    if let SearchPredicate::ChiEeMinusOne(e) = predicate {
        if e.0.len() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: e.0.len(),
            });
        }
    }
    let domain = search_domain(group)?;
    let lcm = orders.iter().fold(1u64, |acc, &n| acc.lcm(&n));
    let root = match &domain {
        ScalarDomain::Rational => domain.from_int(-1),
        _ => domain.generator()?,
    };
    let root_order = if lcm <= 2 { 2 } else { lcm };

    // entry (i, j) is a gcd(n_i, n_j)-th root of unity
    let mut cells: Vec<Vec<Scalar>> = Vec::with_capacity(r * r);
    let mut size: u128 = 1;
    for &ni in orders {
        for &nj in orders {
            let g = ni.gcd(&nj);
            let step = (root_order / g) as i64;
            let cands = (0..g as i64)
                .map(|k| root.pow(k * step))
                .collect::<Result<Vec<_>>>()?;
            size = size.saturating_mul(cands.len() as u128);
            cells.push(cands);
        }
    }
    if size > bound {
        return Err(Error::SearchSpaceTooLarge { size, bound });
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; cells.len()];
    loop {
        let matrix: Vec<Vec<Scalar>> = (0..r)
            .map(|i| (0..r).map(|j| cells[i * r + j][idx[i * r + j]].clone()).collect())
            .collect();
        let chi = Bicharacter::new(group.clone(), domain.clone(), matrix)?;
        if chi.validate().is_valid() && accepts(&chi, predicate)? {
            out.push(chi);
        }
        // odometer, last cell fastest
        let mut k = cells.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < cells[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn accepts(chi: &Bicharacter, predicate: &SearchPredicate) -> Result<bool> {
    let group = chi.group();
    let gens: Vec<GroupElement> = (0..group.dimension()).map(|i| group.basis(i)).collect();
    match predicate {
        SearchPredicate::ChiEeMinusOne(e) => Ok(chi.eval(e, e)?.is_minus_one()),
        SearchPredicate::Symmetric => Ok(chi.symmetry_check(&gens)?.is_symmetric()),
        SearchPredicate::Nonsymmetric => Ok(!chi.symmetry_check(&gens)?.is_symmetric()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(chi: &Bicharacter) -> Vec<Vec<String>> {
        chi.matrix()
            .iter()
            .map(|row| row.iter().map(|s| s.to_string()).collect())
            .collect()
    }

    #[test]
    fn z2_has_one_odd_bicharacter() {
        let z2 = GroupSpec::new(0, vec![2]).unwrap();
        let found = bicharacter_search(
            &z2,
            &SearchPredicate::ChiEeMinusOne(GroupElement(vec![1])),
            DEFAULT_SEARCH_BOUND,
        )
        .unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(rows(&found[0]), vec![vec!["-1".to_string()]]);
    }

    #[test]
    fn z3_has_none() {
        let z3 = GroupSpec::new(0, vec![3]).unwrap();
        let found = bicharacter_search(
            &z3,
            &SearchPredicate::ChiEeMinusOne(GroupElement(vec![1])),
            DEFAULT_SEARCH_BOUND,
        )
        .unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn z2_squared_symmetric_count() {
        let g = GroupSpec::new(0, vec![2, 2]).unwrap();
        let sym = bicharacter_search(&g, &SearchPredicate::Symmetric, DEFAULT_SEARCH_BOUND).unwrap();
        let non = bicharacter_search(&g, &SearchPredicate::Nonsymmetric, DEFAULT_SEARCH_BOUND).unwrap();
        // entries are signs, so M[i][j] M[j][i] = 1 forces M[0][1] = M[1][0]
        assert_eq!(sym.len(), 8);
        assert_eq!(non.len(), 8);
    }

    #[test]
    fn bound_is_enforced() {
        let g = GroupSpec::new(0, vec![5, 5]).unwrap();
        let err = bicharacter_search(&g, &SearchPredicate::Symmetric, 100).unwrap_err();
        assert_eq!(err, Error::SearchSpaceTooLarge { size: 625, bound: 100 });
    }
}
