//! Both sides of every identity suite, evaluated on one basis tuple.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraElement, AlgebraSpec, Monomial};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::omega::{self, CFunction, GradedLinearMap, OmegaPath};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteId {
    Bcomm,
    DefnVsClosed2,
    DefnVsClosed3,
    Lemma31,
    Lemma32,
    Lemma33,
    Jacobi,
    LeibnizRight,
    LeibnizPaper,
    BracketDerivation,
    DerivationDef22,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// The identity must hold.
    Assert,
    /// The verdict is recorded only.
    Report,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Assert => "assert",
            Mode::Report => "report",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "assert" => Ok(Mode::Assert),
            "report" => Ok(Mode::Report),
            _ => Err(Error::Invalid(format!("unknown mode '{s}'"))),
        }
    }
}

impl SuiteId {
    pub const ALL: [SuiteId; 11] = [
        SuiteId::Bcomm,
        SuiteId::DefnVsClosed2,
        SuiteId::DefnVsClosed3,
        SuiteId::Lemma31,
        SuiteId::Lemma32,
        SuiteId::Lemma33,
        SuiteId::Jacobi,
        SuiteId::LeibnizRight,
        SuiteId::LeibnizPaper,
        SuiteId::BracketDerivation,
        SuiteId::DerivationDef22,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Bcomm => "bcomm",
            SuiteId::DefnVsClosed2 => "defn_vs_closed2",
            SuiteId::DefnVsClosed3 => "defn_vs_closed3",
            SuiteId::Lemma31 => "lemma31",
            SuiteId::Lemma32 => "lemma32",
            SuiteId::Lemma33 => "lemma33",
            SuiteId::Jacobi => "jacobi",
            SuiteId::LeibnizRight => "leibniz_right",
            SuiteId::LeibnizPaper => "leibniz_paper",
            SuiteId::BracketDerivation => "bracket_derivation",
            SuiteId::DerivationDef22 => "derivation_def22",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            SuiteId::Bcomm
            | SuiteId::DefnVsClosed2
            | SuiteId::Lemma31
            | SuiteId::BracketDerivation
            | SuiteId::DerivationDef22 => 2,
            _ => 3,
        }
    }

    /// Unconditional identities are asserted; condition- and
    /// convention-sensitive ones are reported.
    pub fn default_mode(self) -> Mode {
        match self {
            SuiteId::Bcomm
            | SuiteId::DefnVsClosed2
            | SuiteId::DefnVsClosed3
            | SuiteId::Lemma32
            | SuiteId::DerivationDef22 => Mode::Assert,
            _ => Mode::Report,
        }
    }

    pub fn needs_map(self) -> bool {
        self != SuiteId::Bcomm
    }

    /// Suites whose statement presumes `ab = chi(|a|,|b|) ba`.
    pub fn requires_bcomm(self) -> bool {
        !matches!(
            self,
            SuiteId::Bcomm | SuiteId::DefnVsClosed2 | SuiteId::DefnVsClosed3 | SuiteId::DerivationDef22
        )
    }

    /// Suites that presume `D(1) = 0`, `D^2 = 0` and `Omega^3_D = 0`.
    pub fn requires_special_map(self) -> bool {
        matches!(
            self,
            SuiteId::Jacobi | SuiteId::LeibnizRight | SuiteId::LeibnizPaper | SuiteId::BracketDerivation
        )
    }

    pub fn needs_cfun(self) -> bool {
        self == SuiteId::BracketDerivation
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite '{s}'")))
    }
}

/// Evaluation context shared by all tuples of one suite run.
pub(crate) struct Ctx<'a> {
    pub spec: &'a AlgebraSpec,
    pub map: Option<&'a GradedLinearMap>,
    pub map_sq: Option<GradedLinearMap>,
    pub cfun: Option<&'a CFunction>,
    pub path: OmegaPath,
}

impl<'a> Ctx<'a> {
    pub fn new(
        spec: &'a AlgebraSpec,
        map: Option<&'a GradedLinearMap>,
        cfun: Option<&'a CFunction>,
        path: OmegaPath,
    ) -> Self {
        Ctx {
            spec,
            map,
            map_sq: map.map(|m| m.power(2)),
            cfun,
            path,
        }
    }

    fn e(&self) -> Result<&GradedLinearMap> {
        self.map
            .ok_or_else(|| Error::Invalid("suite needs a linear map".into()))
    }

    fn e2(&self) -> Result<&GradedLinearMap> {
        self.map_sq
            .as_ref()
            .ok_or_else(|| Error::Invalid("suite needs a linear map".into()))
    }

    fn chi(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        self.spec.chi_eval(g, h)
    }

    fn chi_inv(&self, g: &GroupElement, h: &GroupElement) -> Scalar {
        self.chi(g, h).inv().expect("bicharacter values are units")
    }

    fn add(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.spec.add_degrees(g, h)
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        self.spec.multiply(a, b)
    }

    fn om2(&self, e: &GradedLinearMap, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        omega::omega2(self.path, self.spec, e, a, b)
    }

    fn om3(
        &self,
        e: &GradedLinearMap,
        a: &AlgebraElement,
        b: &AlgebraElement,
        c: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        omega::omega3(self.path, self.spec, e, a, b, c)
    }

    fn bracket(
        &self,
        ga: &GroupElement,
        gb: &GroupElement,
        a: &AlgebraElement,
        b: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        let c = self
            .cfun
            .ok_or_else(|| Error::Invalid("suite needs a c-function".into()))?;
        omega::bracket_at(self.path, self.spec, self.e()?, c, ga, gb, a, b)
    }

    /// `(lhs, rhs)` of `suite` on the basis tuple `inputs`.
    pub fn sides(&self, suite: SuiteId, inputs: &[Monomial]) -> Result<(AlgebraElement, AlgebraElement)> {
        let spec = self.spec;
        let els: Vec<AlgebraElement> = inputs
            .iter()
            .map(|m| AlgebraElement::term(m.clone(), spec.one()))
            .collect();
        let degs: Vec<GroupElement> = inputs.iter().map(|m| spec.monomial_degree(m)).collect();
        match suite {
            SuiteId::Bcomm => {
                let lhs = self.mul(&els[0], &els[1])?;
                let rhs = self.mul(&els[1], &els[0])?.scale(&self.chi(&degs[0], &degs[1]));
                Ok((lhs, rhs))
            }
            SuiteId::DefnVsClosed2 => {
                let e = self.e()?;
                Ok((
                    omega::omega_n(spec, e, &els)?,
                    omega::omega2_closed(spec, e, &els[0], &els[1])?,
                ))
            }
            SuiteId::DefnVsClosed3 => {
                let e = self.e()?;
                Ok((
                    omega::omega_n(spec, e, &els)?,
                    omega::omega3_closed(spec, e, &els[0], &els[1], &els[2])?,
                ))
            }
            SuiteId::DerivationDef22 => omega::leibniz_sides(spec, self.e()?, &els[0], &els[1]),
            SuiteId::Lemma31 => self.lemma31(&els, &degs),
            SuiteId::Lemma32 => self.lemma32(&els, &degs),
            SuiteId::Lemma33 => {
                let lhs = self.jacobi_sum(&els, &degs)?;
                let rhs = self.lemma33_rhs(&els, &degs)?;
                Ok((lhs, rhs))
            }
            SuiteId::Jacobi => Ok((self.jacobi_sum(&els, &degs)?, AlgebraElement::zero())),
            SuiteId::LeibnizRight => {
                let e = self.e()?;
                let (a, b, c) = (&els[0], &els[1], &els[2]);
                let lhs = self.om2(e, a, &self.mul(b, c)?)?;
                let rhs = self
                    .mul(&self.om2(e, a, b)?, c)?
                    .add(&self.mul(&self.om2(e, a, c)?, b)?.scale(&self.chi(&degs[1], &degs[2])));
                Ok((lhs, rhs))
            }
            SuiteId::LeibnizPaper => {
                let e = self.e()?;
                let (a, b, c) = (&els[0], &els[1], &els[2]);
                let (ga, gb, gc) = (&degs[0], &degs[1], &degs[2]);
                let omega_ac_deg = e.shift(&self.add(ga, gc));
                let coeff = &self.chi(gb, gc) * &self.chi_inv(&omega_ac_deg, gb);
                let lhs = self.om2(e, a, &self.mul(b, c)?)?;
                let rhs = self
                    .mul(&self.om2(e, a, b)?, c)?
                    .add(&self.mul(b, &self.om2(e, a, c)?)?.scale(&coeff));
                Ok((lhs, rhs))
            }
            SuiteId::BracketDerivation => {
                let e = self.e()?;
                let (a, b) = (&els[0], &els[1]);
                let (ga, gb) = (&degs[0], &degs[1]);
                let lhs = e.apply(&self.bracket(ga, gb, a, b)?)?;
                let first = self.bracket(&e.shift(ga), gb, &e.apply(a)?, b)?;
                let coeff = &self.chi(ga, gb) * &self.chi_inv(ga, &e.shift(gb));
                let second = self.bracket(ga, &e.shift(gb), a, &e.apply(b)?)?;
                Ok((lhs, first.add(&second.scale(&coeff))))
            }
        }
    }

    fn lemma31(&self, els: &[AlgebraElement], degs: &[GroupElement]) -> Result<(AlgebraElement, AlgebraElement)> {
        let e = self.e()?;
        let (a, b) = (&els[0], &els[1]);
        let (ga, gb) = (&degs[0], &degs[1]);
        let lhs = self.om2(self.e2()?, a, b)?;
        let coeff = &self.chi(ga, gb) * &self.chi_inv(ga, &e.shift(gb));
        let rhs = e
            .apply(&self.om2(e, a, b)?)?
            .add(&self.om2(e, &e.apply(a)?, b)?)
            .add(&self.om2(e, a, &e.apply(b)?)?.scale(&coeff));
        Ok((lhs, rhs))
    }

    fn lemma32(&self, els: &[AlgebraElement], degs: &[GroupElement]) -> Result<(AlgebraElement, AlgebraElement)> {
        let e = self.e()?;
        let (a, b, c) = (&els[0], &els[1], &els[2]);
        let lhs = self.om3(e, a, b, c)?;
        let rhs = self
            .om2(e, a, &self.mul(b, c)?)?
            .sub(&self.mul(&self.om2(e, a, b)?, c)?)
            .sub(&self.mul(&self.om2(e, a, c)?, b)?.scale(&self.chi(&degs[1], &degs[2])));
        Ok((lhs, rhs))
    }

    /// `Omega(Omega(a,b),c) + chi(b,c) Omega(Omega(a,c),b)
    ///  + chi(a,b+c) chi(a,|E(bc)|)^-1 Omega(a,Omega(b,c))`
    fn jacobi_sum(&self, els: &[AlgebraElement], degs: &[GroupElement]) -> Result<AlgebraElement> {
        let e = self.e()?;
        let (a, b, c) = (&els[0], &els[1], &els[2]);
        let (ga, gb, gc) = (&degs[0], &degs[1], &degs[2]);
        let bc_deg = self.add(gb, gc);
        let coeff = &self.chi(ga, &bc_deg) * &self.chi_inv(ga, &e.shift(&bc_deg));
        let first = self.om2(e, &self.om2(e, a, b)?, c)?;
        let second = self.om2(e, &self.om2(e, a, c)?, b)?.scale(&self.chi(gb, gc));
        let third = self.om2(e, a, &self.om2(e, b, c)?)?.scale(&coeff);
        Ok(first.add(&second).add(&third))
    }

    fn lemma33_rhs(&self, els: &[AlgebraElement], degs: &[GroupElement]) -> Result<AlgebraElement> {
        let e = self.e()?;
        let (a, b, c) = (&els[0], &els[1], &els[2]);
        let (ga, gb, gc) = (&degs[0], &degs[1], &degs[2]);
        let ab_deg = self.add(ga, gb);
        let coeff_b = &self.chi(ga, gb) * &self.chi_inv(ga, &e.shift(gb));
        let coeff_c = &self.chi(&ab_deg, gc) * &self.chi_inv(&ab_deg, &e.shift(gc));
        let mut rhs = self.om3(self.e2()?, a, b, c)?;
        rhs = rhs.sub(&e.apply(&self.om3(e, a, b, c)?)?);
        rhs = rhs.sub(&self.om3(e, &e.apply(a)?, b, c)?);
        rhs = rhs.sub(&self.om3(e, a, &e.apply(b)?, c)?.scale(&coeff_b));
        rhs = rhs.sub(&self.om3(e, a, b, &e.apply(c)?)?.scale(&coeff_c));
        Ok(rhs)
    }
}
