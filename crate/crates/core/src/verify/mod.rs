//! Exhaustive identity suites over truncated bases, special-map prechecks,
//! and the bicharacter search.

mod search;
mod suites;

pub use search::{bicharacter_search, search_domain, SearchPredicate, DEFAULT_SEARCH_BOUND};
pub use suites::{Mode, SuiteId};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::algebra::{AlgebraElement, AlgebraSpec, Mismatch, Monomial};
use crate::error::{Error, Result};
use crate::grading::GroupElement;
use crate::omega::{self, CFunction, CFunctionVerdict, GradedLinearMap, OmegaPath};
use suites::Ctx;

/// Which basis tuples a suite enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bounds {
    /// Maximal length of each argument monomial.
    pub per_arg: usize,
    /// Optional cap on the summed length of a tuple.
    pub total: Option<usize>,
}

impl Bounds {
    pub fn per_arg(per_arg: usize) -> Self {
        Bounds { per_arg, total: None }
    }

    pub fn with_total(per_arg: usize, total: usize) -> Self {
        Bounds {
            per_arg,
            total: Some(total),
        }
    }

    /// All tuples of basis monomials within the bounds, in lexicographic
    /// order of the basis order.
    pub fn tuples(&self, spec: &AlgebraSpec, arity: usize) -> Vec<Vec<Monomial>> {
        let basis = spec.basis(self.per_arg);
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(arity);
        self.extend(&basis, arity, 0, &mut current, &mut out);
        out
    }

    fn extend(
        &self,
        basis: &[Monomial],
        arity: usize,
        used: usize,
        current: &mut Vec<Monomial>,
        out: &mut Vec<Vec<Monomial>>,
    ) {
        if current.len() == arity {
            out.push(current.clone());
            return;
        }
        for m in basis {
            let used = used + m.len();
            if self.total.is_some_and(|t| used > t) {
                continue;
            }
            current.push(m.clone());
            self.extend(basis, arity, used, current, out);
            current.pop();
        }
    }
}

/// An algebra together with its named maps, optional scaling function and
/// default bounds.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub spec: Arc<AlgebraSpec>,
    pub maps: BTreeMap<String, GradedLinearMap>,
    pub cfun: Option<CFunction>,
    pub bounds: Bounds,
}

impl Instance {
    pub fn map(&self, name: &str) -> Result<&GradedLinearMap> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::Invalid(format!("unknown map '{name}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
    Skipped(String),
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Skipped(_) => "skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub suite: SuiteId,
    pub instance: String,
    pub map: Option<String>,
    pub mode: Mode,
    pub path: OmegaPath,
    pub bounds: Bounds,
    pub cases_checked: usize,
    pub failures: Vec<Mismatch>,
    pub status: Status,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    /// Whether this verdict lets an assert-mode run succeed. Report-mode
    /// verdicts never block; skipped assert-mode suites do.
    pub fn acceptable(&self) -> bool {
        self.mode == Mode::Report || self.holds()
    }
}

/// A suite invocation. Unset fields fall back to the suite and instance
/// defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteRequest {
    pub suite: SuiteId,
    pub map: Option<String>,
    pub mode: Option<Mode>,
    pub bounds: Option<Bounds>,
}

impl SuiteRequest {
    pub fn new(suite: SuiteId) -> Self {
        SuiteRequest {
            suite,
            map: None,
            mode: None,
            bounds: None,
        }
    }

    pub fn map(mut self, name: &str) -> Self {
        self.map = Some(name.to_string());
        self
    }

    pub fn mode(mut self, mode: Mode) -> Self {
        self.mode = Some(mode);
        self
    }

    pub fn bounds(mut self, bounds: Bounds) -> Self {
        self.bounds = Some(bounds);
        self
    }
}

/// Runs a suite with every Omega taken from the closed expansions.
pub fn run_suite(inst: &Instance, req: &SuiteRequest) -> Result<Verdict> {
    run_suite_via(inst, req, OmegaPath::Closed)
}

/// Runs a suite with Omega values computed along `path`. Errors are
/// reserved for unresolvable requests; anything the bounds or the map make
/// impossible to evaluate becomes a skipped verdict.
pub fn run_suite_via(inst: &Instance, req: &SuiteRequest, path: OmegaPath) -> Result<Verdict> {
    let suite = req.suite;
    let mode = req.mode.unwrap_or(suite.default_mode());
    let bounds = req.bounds.unwrap_or(inst.bounds);
    let map = match (&req.map, suite.needs_map()) {
        (Some(name), _) => Some(inst.map(name)?),
        (None, true) => return Err(Error::Invalid(format!("suite {suite} needs a map"))),
        (None, false) => None,
    };
    let mut verdict = Verdict {
        suite,
        instance: inst.name.clone(),
        map: req.map.clone(),
        mode,
        path,
        bounds,
        cases_checked: 0,
        failures: Vec::new(),
        status: Status::Holds,
    };
    if let Some(reason) = preconditions(inst, req, mode, &bounds)? {
        verdict.status = Status::Skipped(reason);
        return Ok(verdict);
    }
    let ctx = Ctx::new(&inst.spec, map, inst.cfun.as_ref(), path);
    for tuple in bounds.tuples(&inst.spec, suite.arity()) {
        match ctx.sides(suite, &tuple) {
            Ok((lhs, rhs)) => {
                verdict.cases_checked += 1;
                if lhs != rhs {
                    verdict.failures.push(Mismatch {
                        inputs: tuple,
                        lhs,
                        rhs,
                    });
                }
            }
            Err(err) if skippable(&err) => {
                let inputs: Vec<String> = tuple.iter().map(|m| inst.spec.render_monomial(m)).collect();
                verdict.status = Status::Skipped(format!(
                    "bound too small at ({}): {err}",
                    inputs.join(", ")
                ));
                verdict.cases_checked = 0;
                verdict.failures.clear();
                return Ok(verdict);
            }
            Err(err) => return Err(err),
        }
    }
    verdict.status = if verdict.cases_checked == 0 {
        Status::Skipped("no tuples within bounds".into())
    } else if verdict.failures.is_empty() {
        Status::Holds
    } else {
        Status::Fails
    };
    Ok(verdict)
}

fn skippable(err: &Error) -> bool {
    matches!(
        err,
        Error::TruncationExceeded { .. } | Error::OutOfBasis(_) | Error::ZeroScalingFunction(..)
    )
}

fn preconditions(inst: &Instance, req: &SuiteRequest, mode: Mode, bounds: &Bounds) -> Result<Option<String>> {
    let suite = req.suite;
    if mode == Mode::Assert && suite.requires_bcomm() {
        let check = inst.spec.validate_commutativity(bounds.per_arg);
        match check {
            Ok(v) if !v.holds() => {
                return Ok(Some("instance is not B-commutative within bounds".into()))
            }
            Err(err) if skippable(&err) => return Ok(Some(format!("bound too small: {err}"))),
            Err(err) => return Err(err),
            Ok(_) => {}
        }
    }
    if suite.requires_special_map() {
        let name = req.map.as_deref().unwrap_or_default();
        match precheck_special_map(inst, name, Some(bounds)) {
            Ok(report) if !report.passes() => {
                return Ok(Some(format!("map {name} fails {}", report.failed_facts().join(", "))))
            }
            Err(err) if skippable(&err) => return Ok(Some(format!("bound too small: {err}"))),
            Err(err) => return Err(err),
            Ok(_) => {}
        }
    }
    if suite.needs_cfun() && inst.cfun.is_none() {
        return Ok(Some("no scaling function configured".into()));
    }
    Ok(None)
}

/// Recomputes both sides of a stored failure and checks that they
/// reproduce the recorded mismatch.
pub fn recheck_failure(inst: &Instance, verdict: &Verdict, failure: &Mismatch) -> Result<bool> {
    let map = verdict.map.as_deref().map(|n| inst.map(n)).transpose()?;
    let ctx = Ctx::new(&inst.spec, map, inst.cfun.as_ref(), verdict.path);
    let (lhs, rhs) = ctx.sides(verdict.suite, &failure.inputs)?;
    Ok(lhs == failure.lhs && rhs == failure.rhs && lhs != rhs)
}

/// A checked fact with the inputs that violate it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub cases_checked: usize,
    pub witnesses: Vec<Mismatch>,
}

impl Fact {
    pub fn holds(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecheckReport {
    pub map: String,
    pub unit_vanishes: Fact,
    pub square_vanishes: Fact,
    pub omega3_vanishes: Fact,
}

impl PrecheckReport {
    pub fn passes(&self) -> bool {
        self.unit_vanishes.holds() && self.square_vanishes.holds() && self.omega3_vanishes.holds()
    }

    pub fn failed_facts(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.unit_vanishes.holds() {
            out.push("D(1) = 0");
        }
        if !self.square_vanishes.holds() {
            out.push("D^2 = 0");
        }
        if !self.omega3_vanishes.holds() {
            out.push("Omega^3_D = 0");
        }
        out
    }
}

/// Checks `D(1) = 0`, `D^2 = 0` on the basis of length `<= per_arg` and
/// `Omega^3_D = 0` on bounded triples, the latter through the definition.
pub fn precheck_special_map(inst: &Instance, map: &str, bounds: Option<&Bounds>) -> Result<PrecheckReport> {
    let spec = &inst.spec;
    let d = inst.map(map)?;
    let bounds = bounds.copied().unwrap_or(inst.bounds);
    let zero = AlgebraElement::zero();

    let unit_image = d.apply(&spec.unit())?;
    let unit_vanishes = Fact {
        cases_checked: 1,
        witnesses: if unit_image.is_zero() {
            Vec::new()
        } else {
            vec![Mismatch {
                inputs: vec![Monomial::unit()],
                lhs: unit_image,
                rhs: zero.clone(),
            }]
        },
    };

    let square = d.power(2);
    let basis = spec.basis(bounds.per_arg);
    let mut square_vanishes = Fact {
        cases_checked: 0,
        witnesses: Vec::new(),
    };
    for m in &basis {
        square_vanishes.cases_checked += 1;
        let image = square.apply_monomial(m)?;
        if !image.is_zero() {
            square_vanishes.witnesses.push(Mismatch {
                inputs: vec![m.clone()],
                lhs: image,
                rhs: zero.clone(),
            });
        }
    }

    let mut omega3_vanishes = Fact {
        cases_checked: 0,
        witnesses: Vec::new(),
    };
    for tuple in bounds.tuples(spec, 3) {
        omega3_vanishes.cases_checked += 1;
        let args: Vec<AlgebraElement> = tuple
            .iter()
            .map(|m| AlgebraElement::term(m.clone(), spec.one()))
            .collect();
        let value = omega::omega_n(spec, d, &args)?;
        if !value.is_zero() {
            omega3_vanishes.witnesses.push(Mismatch {
                inputs: tuple,
                lhs: value,
                rhs: zero.clone(),
            });
        }
    }

    Ok(PrecheckReport {
        map: map.to_string(),
        unit_vanishes,
        square_vanishes,
        omega3_vanishes,
    })
}

/// Degrees occupied by basis monomials within `bounds`, closed under the
/// shift by `e` once, so that both sides of the scaling constraint are
/// covered.
pub fn degree_window(inst: &Instance, e: &GroupElement, bounds: &Bounds) -> Vec<GroupElement> {
    let spec = &inst.spec;
    let mut out = BTreeSet::new();
    for m in spec.basis(bounds.per_arg) {
        let g = spec.monomial_degree(&m);
        out.insert(spec.add_degrees(&g, e));
        out.insert(g);
    }
    out.into_iter().collect()
}

/// Validates the instance's scaling function against the shift of `map`.
pub fn validate_cfun(inst: &Instance, map: &str, bounds: Option<&Bounds>) -> Result<Option<CFunctionVerdict>> {
    let Some(c) = &inst.cfun else {
        return Ok(None);
    };
    let d = inst.map(map)?;
    let bounds = bounds.copied().unwrap_or(inst.bounds);
    let window = degree_window(inst, d.degree(), &bounds);
    Ok(Some(c.validate(inst.spec.group(), inst.spec.domain(), d.degree(), &window)?))
}

/// Outcome of checking "`lemma31` holds and the prechecks pass implies
/// `bracket_derivation` holds".
#[derive(Debug, Clone)]
pub struct ImplicationReport {
    pub lemma31: Verdict,
    pub precheck: PrecheckReport,
    pub cfun: Option<CFunctionVerdict>,
    pub bracket_derivation: Verdict,
}

impl ImplicationReport {
    pub fn premise(&self) -> bool {
        self.lemma31.holds()
            && self.precheck.passes()
            && self.cfun.as_ref().is_some_and(|v| v.is_valid())
    }

    /// The implication itself: vacuous when the premise fails.
    pub fn consistent(&self) -> bool {
        !self.premise() || self.bracket_derivation.holds()
    }
}

pub fn check_implication(inst: &Instance, map: &str, bounds: Option<Bounds>) -> Result<ImplicationReport> {
    let bounds = bounds.unwrap_or(inst.bounds);
    let request = |suite| {
        SuiteRequest::new(suite)
            .map(map)
            .mode(Mode::Report)
            .bounds(bounds)
    };
    Ok(ImplicationReport {
        lemma31: run_suite(inst, &request(SuiteId::Lemma31))?,
        precheck: precheck_special_map(inst, map, Some(&bounds))?,
        cfun: validate_cfun(inst, map, Some(&bounds))?,
        bracket_derivation: run_suite(inst, &request(SuiteId::BracketDerivation))?,
    })
}

/// Runs a suite along both Omega paths and compares the verdicts tuple by
/// tuple. Returns both verdicts and whether they agree.
pub fn dual_path(inst: &Instance, req: &SuiteRequest) -> Result<(Verdict, Verdict, bool)> {
    let closed = run_suite_via(inst, req, OmegaPath::Closed)?;
    let defn = run_suite_via(inst, req, OmegaPath::Definitional)?;
    let agree = closed.status == defn.status
        && closed.cases_checked == defn.cases_checked
        && closed.failures == defn.failures;
    Ok((closed, defn, agree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn tuple_enumeration_respects_bounds() {
        let gr4 = instances::gr4();
        let pairs = Bounds::per_arg(1).tuples(&gr4.spec, 2);
        assert_eq!(pairs.len(), 25);
        assert_eq!(pairs[0], vec![Monomial::unit(), Monomial::unit()]);
        let capped = Bounds::with_total(4, 1).tuples(&gr4.spec, 2);
        assert_eq!(capped.len(), 9);
        assert_eq!(Bounds::per_arg(4).tuples(&gr4.spec, 3).len(), 16 * 16 * 16);
    }

    #[test]
    fn bcomm_witness_on_ns() {
        let ns = instances::ns();
        let v = run_suite(&ns, &SuiteRequest::new(SuiteId::Bcomm).bounds(Bounds::per_arg(1))).unwrap();
        assert_eq!(v.status, Status::Fails);
        let first = &v.failures[0];
        let names: Vec<String> = first.inputs.iter().map(|m| ns.spec.render_monomial(m)).collect();
        assert_eq!(names, ["x", "y"]);
        assert!(recheck_failure(&ns, &v, first).unwrap());
    }

    #[test]
    fn lemma32_holds_on_small_bounds() {
        let gr4 = instances::gr4();
        let req = SuiteRequest::new(SuiteId::Lemma32)
            .map("D_odd")
            .bounds(Bounds::with_total(4, 4));
        let v = run_suite(&gr4, &req).unwrap();
        assert_eq!(v.status, Status::Holds, "{:?}", v.failures.first());
    }

    #[test]
    fn special_suites_skip_for_bad_map() {
        let gr4 = instances::gr4();
        let req = SuiteRequest::new(SuiteId::Jacobi)
            .map("D_bad")
            .bounds(Bounds::with_total(4, 4));
        let v = run_suite(&gr4, &req).unwrap();
        assert!(matches!(v.status, Status::Skipped(ref r) if r.contains("D^2")));
        assert!(!v.acceptable() || v.mode == Mode::Report);
    }

    #[test]
    fn truncation_becomes_skipped() {
        let gr4 = instances::gr4_with_max_len(4);
        let req = SuiteRequest::new(SuiteId::Lemma32)
            .map("D_odd")
            .bounds(Bounds::per_arg(4));
        let v = run_suite(&gr4, &req).unwrap();
        assert!(matches!(v.status, Status::Skipped(ref r) if r.starts_with("bound too small")));
    }

    #[test]
    fn unknown_map_is_an_error() {
        let gr4 = instances::gr4();
        assert!(run_suite(&gr4, &SuiteRequest::new(SuiteId::Lemma32).map("nope")).is_err());
        assert!(run_suite(&gr4, &SuiteRequest::new(SuiteId::Lemma32)).is_err());
    }

    #[test]
    fn precheck_reports_square_witness() {
        let gr4 = instances::gr4();
        let r = precheck_special_map(&gr4, "D_bad", Some(&Bounds::with_total(4, 3))).unwrap();
        assert!(r.unit_vanishes.holds());
        assert!(!r.square_vanishes.holds());
        let w = &r.square_vanishes.witnesses[0];
        assert_eq!(gr4.spec.render_monomial(&w.inputs[0]), "x1*x2*x3*x4");
        assert_eq!(gr4.spec.render(&w.lhs), "2");
    }
}
