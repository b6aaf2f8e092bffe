//! Exact scalars: rationals, cyclotomic numbers and univariate rational
//! functions over the rationals.
//!
//! Every value is kept in a canonical form, so structural equality is field
//! equality:
//!
//! * rationals are reduced fractions;
//! * cyclotomic numbers are polynomials in `zeta` reduced modulo the `N`-th
//!   cyclotomic polynomial;
//! * rational functions are `num/den` with integer coefficients, no common
//!   polynomial factor, jointly coprime contents and a positive leading
//!   coefficient in the denominator.

mod poly;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expr::{self, ExprSemantics};

pub use poly::QPoly;

/// The field a computation takes place in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    Rational,
    /// `Q(zeta_N)`.
    Cyclotomic(u32),
    /// `Q(var)`.
    RationalFunction(Arc<str>),
}

impl ScalarDomain {
    pub fn cyclotomic(order: u32) -> Result<Self> {
        if order == 0 {
            return Err(Error::Invalid("cyclotomic order must be at least 1".into()));
        }
        Ok(ScalarDomain::Cyclotomic(order))
    }

    pub fn rational_function(var: &str) -> Self {
        ScalarDomain::RationalFunction(Arc::from(var))
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(BigRational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(BigRational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: BigRational) -> Scalar {
        match self {
            ScalarDomain::Rational => Scalar::Rational(r),
            ScalarDomain::Cyclotomic(n) => Scalar::Cyclotomic {
                order: *n,
                value: reduce_cyclotomic(*n, QPoly::constant(r)),
            },
            ScalarDomain::RationalFunction(var) => Scalar::RationalFunction {
                var: var.clone(),
                num: QPoly::constant(r),
                den: QPoly::one(),
            },
        }
    }

    /// The adjoined element: `zeta` for cyclotomic domains, the formal
    /// variable for rational-function domains.
    pub fn generator(&self) -> Result<Scalar> {
        match self {
            ScalarDomain::Rational => Err(Error::DomainMismatch(
                "rational".into(),
                "domain has no generator".into(),
            )),
            ScalarDomain::Cyclotomic(n) => Ok(Scalar::Cyclotomic {
                order: *n,
                value: reduce_cyclotomic(*n, QPoly::monomial(1)),
            }),
            ScalarDomain::RationalFunction(var) => Ok(Scalar::RationalFunction {
                var: var.clone(),
                num: QPoly::monomial(1),
                den: QPoly::one(),
            }),
        }
    }

    /// Parses an expression over this domain.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        expr::parse(&ScalarGrammar(self), text)
    }
}

impl std::str::FromStr for ScalarDomain {
    type Err = Error;

    /// Inverse of `Display`: `rational`, `cyclotomic(N)`,
    /// `rational_function(VAR)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(ScalarDomain::Rational);
        }
        let arg = |head: &str| {
            s.strip_prefix(head)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .map(str::trim)
        };
        if let Some(n) = arg("cyclotomic") {
            let order = n
                .parse::<u32>()
                .map_err(|_| Error::Invalid(format!("bad cyclotomic order '{n}'")))?;
            return ScalarDomain::cyclotomic(order);
        }
        if let Some(v) = arg("rational_function") {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || v == "zeta" {
                return Err(Error::Invalid(format!("bad variable name '{v}'")));
            }
            return Ok(ScalarDomain::rational_function(v));
        }
        Err(Error::Invalid(format!("unknown scalar domain '{s}'")))
    }
}

impl fmt::Display for ScalarDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarDomain::Rational => write!(f, "rational"),
            ScalarDomain::Cyclotomic(n) => write!(f, "cyclotomic({n})"),
            ScalarDomain::RationalFunction(v) => write!(f, "rational_function({v})"),
        }
    }
}

/// An exact field element in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic {
        order: u32,
        value: QPoly,
    },
    RationalFunction {
        var: Arc<str>,
        num: QPoly,
        den: QPoly,
    },
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Arc<QPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<QPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial, obtained by dividing `x^n - 1` by every
/// `Phi_d` with `d | n`, `d < n`.
pub fn cyclotomic_polynomial(n: u32) -> Arc<QPoly> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if let Some(p) = cyclotomic_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = QPoly::monomial(n as usize).sub(&QPoly::one());
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        p = q;
    }
    let p = Arc::new(p);
    cyclotomic_cache().lock().unwrap().insert(n, p.clone());
    p
}

fn reduce_cyclotomic(order: u32, value: QPoly) -> QPoly {
    let phi = cyclotomic_polynomial(order);
    if value.degree().is_none_or(|d| d < phi.degree().unwrap()) {
        return value;
    }
    value.rem(&phi)
}

/// Canonical `num/den` for a rational function; `den` must be nonzero.
fn canonical_fraction(num: QPoly, den: QPoly) -> (QPoly, QPoly) {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return (QPoly::zero(), QPoly::one());
    }
    let (num, den) = if den.degree() == Some(0) {
        (num, den)
    } else {
        let g = num.gcd(&den);
        if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        }
    };
    let (sn, pn) = num.primitive_part();
    let (sd, pd) = den.primitive_part();
    let ratio = sn / sd;
    let mut n = QPoly::from_ints(&pn).scale(&BigRational::from_integer(ratio.numer().clone()));
    let mut d = QPoly::from_ints(&pd).scale(&BigRational::from_integer(ratio.denom().clone()));
    if d.leading().is_some_and(|l| l.is_negative()) {
        n = n.neg();
        d = d.neg();
    }
    (n, d)
}

/// Sign fix for a fraction already known to be reduced with coprime contents.
fn orient_fraction(num: QPoly, den: QPoly) -> (QPoly, QPoly) {
    if den.leading().is_some_and(|l| l.is_negative()) {
        (num.neg(), den.neg())
    } else {
        (num, den)
    }
}

impl Scalar {
    pub fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rational,
            Scalar::Cyclotomic { order, .. } => ScalarDomain::Cyclotomic(*order),
            Scalar::RationalFunction { var, .. } => ScalarDomain::RationalFunction(var.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic { value, .. } => value.is_zero(),
            Scalar::RationalFunction { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic { value, .. } => value.is_one(),
            Scalar::RationalFunction { num, den, .. } => num.is_one() && den.is_one(),
        }
    }

    /// True for the rational constant `-1`.
    pub fn is_minus_one(&self) -> bool {
        self.checked_add(&self.domain().one())
            .is_ok_and(|s| s.is_zero())
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::DomainMismatch(self.domain().to_string(), other.domain().to_string())
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Cyclotomic { order: n, value: a }, Scalar::Cyclotomic { order: m, value: b })
                if n == m =>
            {
                Ok(Scalar::Cyclotomic {
                    order: *n,
                    value: a.add(b),
                })
            }
            (
                Scalar::RationalFunction { var, num: n1, den: d1 },
                Scalar::RationalFunction { var: v2, num: n2, den: d2 },
            ) if var == v2 => {
                if n2.is_zero() {
                    return Ok(self.clone());
                }
                if n1.is_zero() {
                    return Ok(other.clone());
                }
                let (num, den) = if d1 == d2 {
                    canonical_fraction(n1.add(n2), d1.clone())
                } else {
                    canonical_fraction(n1.mul(d2).add(&n2.mul(d1)), d1.mul(d2))
                };
                Ok(Scalar::RationalFunction {
                    var: var.clone(),
                    num,
                    den,
                })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Cyclotomic { order: n, value: a }, Scalar::Cyclotomic { order: m, value: b })
                if n == m =>
            {
                Ok(Scalar::Cyclotomic {
                    order: *n,
                    value: reduce_cyclotomic(*n, a.mul(b)),
                })
            }
            (
                Scalar::RationalFunction { var, num: n1, den: d1 },
                Scalar::RationalFunction { var: v2, num: n2, den: d2 },
            ) if var == v2 => {
                let (num, den) = if d1.is_one() && d2.is_one() {
                    let (s, p) = n1.mul(n2).primitive_part();
                    // Constant denominators stay folded into the numerator
                    // only when the product is integral.
                    if s.is_integer() {
                        (QPoly::from_ints(&p).scale(&s), QPoly::one())
                    } else {
                        canonical_fraction(n1.mul(n2), QPoly::one())
                    }
                } else {
                    canonical_fraction(n1.mul(n2), d1.mul(d2))
                };
                Ok(Scalar::RationalFunction {
                    var: var.clone(),
                    num,
                    den,
                })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Cyclotomic { order, value } => Scalar::Cyclotomic {
                order: *order,
                value: value.neg(),
            },
            Scalar::RationalFunction { var, num, den } => Scalar::RationalFunction {
                var: var.clone(),
                num: num.neg(),
                den: den.clone(),
            },
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Cyclotomic { order, value } => {
                let phi = cyclotomic_polynomial(*order);
                let inv = value
                    .inverse_mod(&phi)
                    .expect("nonzero element of a field is invertible");
                Scalar::Cyclotomic {
                    order: *order,
                    value: inv,
                }
            }
            Scalar::RationalFunction { var, num, den } => {
                let (num, den) = orient_fraction(den.clone(), num.clone());
                Scalar::RationalFunction {
                    var: var.clone(),
                    num,
                    den,
                }
            }
        })
    }

    /// Integer power; `a^0 = 1`, negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<Scalar> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let k: u32 = k
            .try_into()
            .map_err(|_| Error::Invalid(format!("exponent {k} too large")))?;
        Ok(match self {
            Scalar::RationalFunction { var, num, den } => {
                // Powers of a reduced fraction stay reduced.
                let (num, den) = orient_fraction(num.pow(k), den.pow(k));
                Scalar::RationalFunction {
                    var: var.clone(),
                    num,
                    den,
                }
            }
            Scalar::Rational(a) => Scalar::Rational(num_traits::Pow::pow(a, k)),
            Scalar::Cyclotomic { .. } => {
                let mut base = self.clone();
                let mut acc = self.domain().one();
                let mut k = k;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = &acc * &base;
                    }
                    k >>= 1;
                    if k > 0 {
                        base = &base * &base;
                    }
                }
                acc
            }
        })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Cyclotomic { value, .. } => f.write_str(&poly::render(value.coeffs(), "zeta")),
            Scalar::RationalFunction { var, num, den } => {
                let n = poly::render(num.coeffs(), var);
                if den.is_one() {
                    return f.write_str(&n);
                }
                let d = poly::render(den.coeffs(), var);
                let n = if poly::term_count(num.coeffs()) > 1 {
                    format!("({n})")
                } else {
                    n
                };
                let d = if poly::term_count(den.coeffs()) > 1 || d.contains('*') {
                    format!("({d})")
                } else {
                    d
                };
                write!(f, "{n}/{d}")
            }
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    /// Panics when the operands live in different domains.
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar domain mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar domain mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar domain mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

struct ScalarGrammar<'a>(&'a ScalarDomain);

impl ExprSemantics for ScalarGrammar<'_> {
    type Value = Scalar;

    fn integer(&self, n: BigInt) -> Result<Scalar> {
        Ok(self.0.from_rational(BigRational::from_integer(n)))
    }

    fn symbol(&self, name: &str, offset: usize) -> Result<Scalar> {
        scalar_symbol(self.0, name).unwrap_or_else(|| {
            Err(Error::parse(offset, format!("unknown symbol '{name}'")))
        })
    }

    fn add(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        a.checked_add(&b)
    }

    fn sub(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        a.checked_sub(&b)
    }

    fn mul(&self, a: Scalar, b: Scalar) -> Result<Scalar> {
        a.checked_mul(&b)
    }

    fn div(&self, a: Scalar, b: Scalar, _offset: usize) -> Result<Scalar> {
        a.checked_div(&b)
    }

    fn neg(&self, a: Scalar) -> Result<Scalar> {
        Ok(-a)
    }

    fn pow(&self, a: Scalar, k: i64, _offset: usize) -> Result<Scalar> {
        a.pow(k)
    }
}

/// Resolves `zeta` / the formal variable against `domain`. `None` when the
/// name is not a scalar symbol at all.
pub(crate) fn scalar_symbol(domain: &ScalarDomain, name: &str) -> Option<Result<Scalar>> {
    match domain {
        ScalarDomain::Cyclotomic(_) if name == "zeta" => Some(domain.generator()),
        ScalarDomain::RationalFunction(v) if **v == *name => Some(domain.generator()),
        _ if name == "zeta" || name == "q" => Some(Err(Error::DomainMismatch(
            domain.to_string(),
            format!("symbol '{name}'"),
        ))),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qdom() -> ScalarDomain {
        ScalarDomain::rational_function("q")
    }

    #[test]
    fn rational_inversion() {
        let d = ScalarDomain::Rational;
        assert_eq!(d.parse("2/3").unwrap().inv().unwrap(), d.parse("3/2").unwrap());
        assert_eq!(d.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn zeta_squared_in_order_four() {
        let d = ScalarDomain::Cyclotomic(4);
        let z = d.generator().unwrap();
        assert_eq!(&z * &z, d.from_int(-1));
        assert!(z.pow(4).unwrap().is_one());
    }

    #[test]
    fn polynomial_identity_in_q() {
        let d = qdom();
        let q = d.generator().unwrap();
        let lhs = &(&q + &d.one()) * &(&q - &d.one());
        assert_eq!(lhs.to_string(), "-1+q^2");
    }

    #[test]
    fn integer_powers() {
        assert!(ScalarDomain::Rational.from_int(-1).pow(15).unwrap().is_minus_one());
        let q = qdom().generator().unwrap();
        assert_eq!(q.pow(-2).unwrap().to_string(), "1/q^2");
        assert!(q.pow(0).unwrap().is_one());
        assert_eq!(qdom().zero().pow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_cancels_common_factors() {
        assert_eq!(qdom().parse("(q^2-1)/(q-1)").unwrap().to_string(), "1+q");
        for d in [ScalarDomain::Rational, ScalarDomain::Cyclotomic(5), qdom()] {
            assert!(d.parse("-1").unwrap().is_minus_one());
        }
        assert_eq!(
            ScalarDomain::Cyclotomic(3).parse("zeta^2").unwrap().to_string(),
            "-1-zeta"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            ScalarDomain::Rational.parse("zeta"),
            Err(Error::DomainMismatch(..))
        ));
        assert!(matches!(
            ScalarDomain::Rational.parse("1 +"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(ScalarDomain::Rational.parse("x"), Err(Error::Parse { .. })));
        assert_eq!(ScalarDomain::Rational.parse("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_domains_are_rejected() {
        let a = ScalarDomain::Rational.one();
        let b = ScalarDomain::Cyclotomic(4).one();
        assert!(matches!(a.checked_add(&b), Err(Error::DomainMismatch(..))));
        let c = ScalarDomain::Cyclotomic(3).one();
        assert!(b.checked_mul(&c).is_err());
    }

    #[test]
    fn canonical_denominator_is_content_normalized() {
        let d = qdom();
        let a = d.parse("1/(2*q)").unwrap();
        assert_eq!(a.to_string(), "1/(2*q)");
        let b = d.parse("(2*q+2)/(-4*q)").unwrap();
        assert_eq!(b, d.parse("-(1+q)/(2*q)").unwrap());
        assert_eq!(b.to_string(), "(-1-q)/(2*q)");
        assert_eq!(d.parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(poly::render(cyclotomic_polynomial(1).coeffs(), "x"), "-1+x");
        assert_eq!(poly::render(cyclotomic_polynomial(4).coeffs(), "x"), "1+x^2");
        assert_eq!(poly::render(cyclotomic_polynomial(6).coeffs(), "x"), "1-x+x^2");
        assert_eq!(
            poly::render(cyclotomic_polynomial(12).coeffs(), "x"),
            "1-x^2+x^4"
        );
    }
}
