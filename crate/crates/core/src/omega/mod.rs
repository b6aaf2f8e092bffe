//! The n-forms `Omega^n_E = m . (E (x) id) . Delta^n`, their closed
//! expansions for `n = 2, 3`, braided derivations, the bicharacter
//! conditions used by the Jacobi argument, and the scaled bracket.

mod cfun;
mod linmap;

pub use cfun::{CFunction, CFunctionVerdict, CFunctionViolation};
pub use linmap::GradedLinearMap;

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraElement, AlgebraSpec, Mismatch};
use crate::error::{Error, Result};
use crate::grading::{Bicharacter, GroupElement};
use crate::scalar::Scalar;
use crate::tensor::{self, TensorElement};

/// How an Omega value is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OmegaPath {
    /// The four- and eight-term expansions.
    Closed,
    /// `m . (E (x) id) . Delta^n` evaluated in the tensor square.
    Definitional,
}

/// `Omega^n_E(a_1, ..., a_n)` from the definition. Multilinear; arguments
/// need not be homogeneous.
pub fn omega_n(spec: &AlgebraSpec, e: &GradedLinearMap, args: &[AlgebraElement]) -> Result<AlgebraElement> {
    if args.is_empty() {
        return Err(Error::Invalid("Omega^n needs at least one argument".into()));
    }
    let t = tensor::delta_n(spec, args)?;
    let applied = t.map_left(|m| e.apply_monomial(m))?;
    tensor::contract(spec, &applied)
}

fn unit_image(spec: &AlgebraSpec, e: &GradedLinearMap) -> Result<AlgebraElement> {
    e.apply(&spec.unit())
}

/// `E(ab) - E(a) b - chi(|a|, |b|) E(b) a + E(1) ab`, extended bilinearly
/// over homogeneous components.
pub fn omega2_closed(
    spec: &AlgebraSpec,
    e: &GradedLinearMap,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    let e1 = unit_image(spec, e)?;
    let mut out = AlgebraElement::zero();
    for (ga, a) in spec.homogeneous_components(a) {
        for (gb, b) in spec.homogeneous_components(b) {
            let ab = spec.multiply(&a, &b)?;
            let chi_ab = spec.chi_eval(&ga, &gb);
            out.add_assign(&e.apply(&ab)?);
            out.add_assign(&spec.multiply(&e.apply(&a)?, &b)?.neg());
            out.add_assign(&spec.multiply(&e.apply(&b)?, &a)?.scale(&-&chi_ab));
            out.add_assign(&spec.multiply(&e1, &ab)?);
        }
    }
    Ok(out)
}

/// The eight-term expansion of `Omega^3_E(a, b, c)`:
///
/// ```text
/// E(abc) - chi(b,c) E(ac) b - chi(a,b+c) E(bc) a + chi(a+b,c) E(c) ab
///        - E(ab) c + E(a) bc + chi(a,b) E(b) ac - E(1) abc
/// ```
pub fn omega3_closed(
    spec: &AlgebraSpec,
    e: &GradedLinearMap,
    a: &AlgebraElement,
    b: &AlgebraElement,
    c: &AlgebraElement,
) -> Result<AlgebraElement> {
    let e1 = unit_image(spec, e)?;
    let mut out = AlgebraElement::zero();
    let mul = |x: &AlgebraElement, y: &AlgebraElement| spec.multiply(x, y);
    for (ga, a) in spec.homogeneous_components(a) {
        for (gb, b) in spec.homogeneous_components(b) {
            for (gc, c) in spec.homogeneous_components(c) {
                let chi_bc = spec.chi_eval(&gb, &gc);
                let chi_a_bc = spec.chi_eval(&ga, &spec.add_degrees(&gb, &gc));
                let chi_ab_c = spec.chi_eval(&spec.add_degrees(&ga, &gb), &gc);
                let chi_ab = spec.chi_eval(&ga, &gb);
                let ab = mul(&a, &b)?;
                let ac = mul(&a, &c)?;
                let bc = mul(&b, &c)?;
                let abc = mul(&ab, &c)?;
                out.add_assign(&e.apply(&abc)?);
                out.add_assign(&mul(&e.apply(&ac)?, &b)?.scale(&-&chi_bc));
                out.add_assign(&mul(&e.apply(&bc)?, &a)?.scale(&-&chi_a_bc));
                out.add_assign(&mul(&e.apply(&c)?, &ab)?.scale(&chi_ab_c));
                out.add_assign(&mul(&e.apply(&ab)?, &c)?.neg());
                out.add_assign(&mul(&e.apply(&a)?, &bc)?);
                out.add_assign(&mul(&e.apply(&b)?, &ac)?.scale(&chi_ab));
                out.add_assign(&mul(&e1, &abc)?.neg());
            }
        }
    }
    Ok(out)
}

pub fn omega2(
    path: OmegaPath,
    spec: &AlgebraSpec,
    e: &GradedLinearMap,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    match path {
        OmegaPath::Closed => omega2_closed(spec, e, a, b),
        OmegaPath::Definitional => omega_n(spec, e, &[a.clone(), b.clone()]),
    }
}

pub fn omega3(
    path: OmegaPath,
    spec: &AlgebraSpec,
    e: &GradedLinearMap,
    a: &AlgebraElement,
    b: &AlgebraElement,
    c: &AlgebraElement,
) -> Result<AlgebraElement> {
    match path {
        OmegaPath::Closed => omega3_closed(spec, e, a, b, c),
        OmegaPath::Definitional => omega_n(spec, e, &[a.clone(), b.clone(), c.clone()]),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationVerdict {
    pub pairs_checked: usize,
    pub failures: Vec<Mismatch>,
}

impl DerivationVerdict {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.pairs_checked > 0
    }
}

/// Both sides of the braided Leibniz rule on `a (x) b`:
/// `d(ab)` and `m(d (x) id)(a (x) b) + m B^-1 (d (x) id) B (a (x) b)`.
pub fn leibniz_sides(
    spec: &AlgebraSpec,
    d: &GradedLinearMap,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<(AlgebraElement, AlgebraElement)> {
    let lhs = d.apply(&spec.multiply(a, b)?)?;
    let ab = TensorElement::from_elements(a, b);
    let direct = ab.map_left(|m| d.apply_monomial(m))?;
    let braided = tensor::braiding_apply(spec, &ab, false).map_left(|m| d.apply_monomial(m))?;
    let unbraided = tensor::braiding_apply(spec, &braided, true);
    let rhs = tensor::contract(spec, &direct.add(&unbraided))?;
    Ok((lhs, rhs))
}

/// Checks the braided Leibniz rule on all basis pairs of length `<= max_len`.
pub fn check_braided_derivation(
    spec: &AlgebraSpec,
    d: &GradedLinearMap,
    max_len: usize,
) -> Result<DerivationVerdict> {
    let basis = spec.basis(max_len);
    let mut failures = Vec::new();
    let mut pairs_checked = 0;
    for a in &basis {
        for b in &basis {
            pairs_checked += 1;
            let ea = AlgebraElement::term(a.clone(), spec.one());
            let eb = AlgebraElement::term(b.clone(), spec.one());
            let (lhs, rhs) = leibniz_sides(spec, d, &ea, &eb)?;
            if lhs != rhs {
                failures.push(Mismatch {
                    inputs: vec![a.clone(), b.clone()],
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(DerivationVerdict {
        pairs_checked,
        failures,
    })
}

/// The bicharacter conditions of the Jacobi argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `chi(a,b) chi(Ea,Eb) chi(a,Eb)^-1 chi(Ea,b)^-1 = -1`
    C34,
    /// `chi(a, b+E(bc)) chi(a, E(b)+b+c)^-1 = 1`
    C35First,
    /// `chi(b,Ec) chi(a,E(bc)) chi(a+b,Ec)^-1 = 1`
    C35Second,
    /// `chi(a+b,c) chi(Omega(a,b),Ec) chi(a+b,Ec)^-1 = -1`
    C35Third,
    /// `chi(a,b) chi(Eb,c) chi(Omega(a,c),Eb) chi(a,Eb)^-1 chi(b,c)^-1 = -1`
    C35Fourth,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::C34,
        Condition::C35First,
        Condition::C35Second,
        Condition::C35Third,
        Condition::C35Fourth,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Condition::C34 => "c34",
            Condition::C35First => "c35_1",
            Condition::C35Second => "c35_2",
            Condition::C35Third => "c35_3",
            Condition::C35Fourth => "c35_4",
        }
    }

    /// The value the product is required to take: `-1` or `1`.
    pub fn required_sign(self) -> i64 {
        match self {
            Condition::C35First | Condition::C35Second => 1,
            _ => -1,
        }
    }

    pub fn needs_third_degree(self) -> bool {
        self != Condition::C34
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown condition '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionValue {
    pub condition: Condition,
    pub value: Scalar,
    pub satisfied: bool,
}

/// Evaluates a condition literally on formal degrees: `|E(x)| = |x| + e`
/// and `|Omega(x, y)| = |x| + |y| + e`.
pub fn condition_eval(
    chi: &Bicharacter,
    which: Condition,
    e: &GroupElement,
    ga: &GroupElement,
    gb: &GroupElement,
    gc: Option<&GroupElement>,
) -> Result<ConditionValue> {
    let group = chi.group();
    let add = |x: &GroupElement, y: &GroupElement| group.add(x, y);
    let x = |g: &GroupElement, h: &GroupElement| chi.eval(g, h);
    let inv = |s: Scalar| s.inv();
    let ea = add(ga, e)?;
    let eb = add(gb, e)?;
    let gc = match (which.needs_third_degree(), gc) {
        (true, None) => {
            return Err(Error::Invalid(format!("condition {which} needs three degrees")))
        }
        (_, c) => c.cloned().unwrap_or_else(|| group.zero()),
    };
    let ec = add(&gc, e)?;
    let value = match which {
        Condition::C34 => {
            &(&(&x(ga, gb)? * &x(&ea, &eb)?) * &inv(x(ga, &eb)?)?) * &inv(x(&ea, gb)?)?
        }
        Condition::C35First => {
            let bc = add(gb, &gc)?;
            let e_bc = add(&bc, e)?;
            let left = add(gb, &e_bc)?;
            let right = add(&add(&eb, gb)?, &gc)?;
            &x(ga, &left)? * &inv(x(ga, &right)?)?
        }
        Condition::C35Second => {
            let e_bc = add(&add(gb, &gc)?, e)?;
            &(&x(gb, &ec)? * &x(ga, &e_bc)?) * &inv(x(&add(ga, gb)?, &ec)?)?
        }
        Condition::C35Third => {
            let ab = add(ga, gb)?;
            let omega_ab = add(&ab, e)?;
            &(&x(&ab, &gc)? * &x(&omega_ab, &ec)?) * &inv(x(&ab, &ec)?)?
        }
        Condition::C35Fourth => {
            let omega_ac = add(&add(ga, &gc)?, e)?;
            let num = &(&x(ga, gb)? * &x(&eb, &gc)?) * &x(&omega_ac, &eb)?;
            &(&num * &inv(x(ga, &eb)?)?) * &inv(x(gb, &gc)?)?
        }
    };
    let required = chi.domain().from_int(which.required_sign());
    let satisfied = value == required;
    Ok(ConditionValue {
        condition: which,
        value,
        satisfied,
    })
}

/// `c(|a|, |b|)^-1 Omega^2_D(a, b)` for homogeneous `a`, `b`.
pub fn bracket(
    spec: &AlgebraSpec,
    d: &GradedLinearMap,
    c: &CFunction,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    bracket_with(OmegaPath::Closed, spec, d, c, a, b)
}

pub fn bracket_with(
    path: OmegaPath,
    spec: &AlgebraSpec,
    d: &GradedLinearMap,
    c: &CFunction,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    let (Some(ga), Some(gb)) = (spec.degree_of(a)?, spec.degree_of(b)?) else {
        return Ok(AlgebraElement::zero());
    };
    bracket_at(path, spec, d, c, &ga, &gb, a, b)
}

/// Bracket with the scaling taken at the given (formal) degrees.
#[allow(clippy::too_many_arguments)]
pub(crate) fn bracket_at(
    path: OmegaPath,
    spec: &AlgebraSpec,
    d: &GradedLinearMap,
    c: &CFunction,
    ga: &GroupElement,
    gb: &GroupElement,
    a: &AlgebraElement,
    b: &AlgebraElement,
) -> Result<AlgebraElement> {
    let scale = c.eval_nonzero(spec.domain(), ga, gb)?;
    Ok(omega2(path, spec, d, a, b)?.scale(&scale.inv()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::scalar::ScalarDomain;

    #[test]
    fn omega_one_is_e_minus_e1_a() {
        let inst = instances::qp();
        let spec = &inst.spec;
        let dx = inst.maps["dx"].clone();
        let id = GradedLinearMap::identity(spec);
        for (e, m) in [dx, id].iter().flat_map(|e| spec.basis(3).into_iter().map(move |m| (e, m))) {
            let a = AlgebraElement::term(m, spec.one());
            let expected = e
                .apply(&a)
                .unwrap()
                .sub(&spec.multiply(&e.apply(&spec.unit()).unwrap(), &a).unwrap());
            assert_eq!(omega_n(spec, e, &[a]).unwrap(), expected);
        }
    }

    #[test]
    fn omega_examples_on_grassmann() {
        let inst = instances::gr4();
        let spec = &inst.spec;
        let d = &inst.maps["D_odd"];
        let p = |s: &str| spec.parse_element(s).unwrap();
        assert_eq!(omega_n(spec, d, &[p("x2"), p("x3")]).unwrap(), p("x1"));
        assert_eq!(
            omega2_closed(spec, d, &p("x2*x3"), &p("x2*x3")).unwrap(),
            p("-2*x1*x2*x3")
        );
        let one = spec.unit();
        assert!(omega2_closed(spec, d, &one, &one).unwrap().is_zero());
        assert!(omega3_closed(spec, d, &one, &one, &one).unwrap().is_zero());
    }

    #[test]
    fn omega2_of_unit_vanishes_for_any_map() {
        let inst = instances::gr4();
        let spec = &inst.spec;
        let mut images = std::collections::BTreeMap::new();
        images.insert(crate::algebra::Monomial::unit(), spec.parse_element("1").unwrap());
        let e = GradedLinearMap::table(spec, GroupElement(vec![0]), images, 4).unwrap();
        let one = spec.unit();
        assert!(omega2_closed(spec, &e, &one, &one).unwrap().is_zero());
        assert!(omega_n(spec, &e, &[one.clone(), one]).unwrap().is_zero());
    }

    #[test]
    fn leibniz_check_witness() {
        let inst = instances::gr4();
        let spec = &inst.spec;
        let mut images = std::collections::BTreeMap::new();
        images.insert(spec.parse_monomial("x1").unwrap(), spec.unit());
        let e = GradedLinearMap::table(spec, GroupElement(vec![-1]), images, 4).unwrap();
        let v = check_braided_derivation(spec, &e, 4).unwrap();
        assert!(!v.holds());
        let first = &v.failures[0];
        let names: Vec<String> = first.inputs.iter().map(|m| spec.render_monomial(m)).collect();
        assert_eq!(names, ["x1", "x2"]);
        assert!(first.lhs.is_zero());
        assert_eq!(first.rhs, spec.parse_element("x2").unwrap());

        let zero = GradedLinearMap::zero(spec, GroupElement(vec![-1])).unwrap();
        assert!(check_braided_derivation(spec, &zero, 4).unwrap().holds());
        let qp = instances::qp();
        assert!(check_braided_derivation(&qp.spec, &qp.maps["dx"], 3).unwrap().holds());
    }

    #[test]
    fn condition_values() {
        let gr4 = instances::gr4();
        let chi = gr4.spec.chi();
        let g = |v: i64| GroupElement(vec![v]);
        let c34 = condition_eval(chi, Condition::C34, &g(-1), &g(2), &g(3), None).unwrap();
        assert!(c34.value.is_minus_one() && c34.satisfied);
        let c34 = condition_eval(chi, Condition::C34, &g(0), &g(1), &g(1), None).unwrap();
        assert!(c34.value.is_one() && !c34.satisfied);
        let c351 = condition_eval(chi, Condition::C35First, &g(-1), &g(1), &g(2), Some(&g(3))).unwrap();
        assert!(c351.value.is_one() && c351.satisfied);
        let c352 = condition_eval(chi, Condition::C35Second, &g(-1), &g(1), &g(1), Some(&g(1))).unwrap();
        assert!(c352.value.is_minus_one() && !c352.satisfied);
        assert!(condition_eval(chi, Condition::C35Third, &g(-1), &g(1), &g(1), None).is_err());
    }

    #[test]
    fn bracket_scaling() {
        let inst = instances::gr4();
        let spec = &inst.spec;
        let d = &inst.maps["D_odd"];
        let p = |s: &str| spec.parse_element(s).unwrap();
        let sign = CFunction::sign_alternating(vec![1]);
        assert_eq!(bracket(spec, d, &sign, &p("x2"), &p("x3")).unwrap(), p("x1"));
        let unit_c = CFunction::Constant(ScalarDomain::Rational.one());
        assert_eq!(
            bracket(spec, d, &unit_c, &p("x2*x3"), &p("x4")).unwrap(),
            omega2_closed(spec, d, &p("x2*x3"), &p("x4")).unwrap()
        );
        assert!(bracket(spec, d, &sign, &spec.unit(), &p("x2*x4")).unwrap().is_zero());
        let zero_c = CFunction::Constant(ScalarDomain::Rational.zero());
        assert!(matches!(
            bracket(spec, d, &zero_c, &p("x2"), &p("x3")),
            Err(Error::ZeroScalingFunction(..))
        ));
    }
}
