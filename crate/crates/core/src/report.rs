//! Executing a validated configuration and rendering the JSON report.

use std::time::Instant;

use serde::Serialize;

use crate::algebra::{AlgebraSpec, Mismatch};
use crate::config::{BoundsConfig, Loaded};
use crate::error::Result;
use crate::verify::{self, Bounds, Fact, Mode, SuiteId, SuiteRequest, Verdict};

/// Failures listed per suite; the total is always reported.
pub const MAX_LISTED_FAILURES: usize = 25;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Restrict to these suites; suites not in the configuration run
    /// against every configured map with default mode.
    pub suites: Vec<SuiteId>,
    /// Override the per-argument monomial length of every bound.
    pub max_len: Option<usize>,
    /// Add wall-clock timings (makes reports non-reproducible).
    pub timing: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config_digest: String,
    pub instance: String,
    pub chi: ChiSection,
    pub prechecks: Vec<PrecheckEntry>,
    pub cfun_checks: Vec<CFunEntry>,
    pub suites: Vec<SuiteEntry>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChiSection {
    pub domain: String,
    pub matrix: Vec<Vec<String>>,
    pub torsion_valid: bool,
    pub symmetric_on_generators: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct FailureEntry {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactEntry {
    pub holds: bool,
    pub cases_checked: usize,
    pub witnesses: Vec<FailureEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrecheckEntry {
    pub map: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_vanishes: Option<FactEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub square_vanishes: Option<FactEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega3_vanishes: Option<FactEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CFunEntry {
    pub map: String,
    pub valid: bool,
    pub pairs_checked: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    pub suite: SuiteId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
    pub mode: &'static str,
    pub bounds: BoundsConfig,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub cases_checked: usize,
    pub failures_total: usize,
    pub failures: Vec<FailureEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub suites_run: usize,
    pub assert_holding: usize,
    pub assert_not_holding: usize,
    pub exit_code: i32,
}

impl serde::Serialize for SuiteId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    /// Pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn failure_entry(spec: &AlgebraSpec, m: &Mismatch) -> FailureEntry {
    FailureEntry {
        inputs: m.inputs.iter().map(|x| spec.render_monomial(x)).collect(),
        lhs: spec.render(&m.lhs),
        rhs: spec.render(&m.rhs),
    }
}

fn fact_entry(spec: &AlgebraSpec, f: &Fact) -> FactEntry {
    FactEntry {
        holds: f.holds(),
        cases_checked: f.cases_checked,
        witnesses: f
            .witnesses
            .iter()
            .take(MAX_LISTED_FAILURES)
            .map(|m| failure_entry(spec, m))
            .collect(),
    }
}

fn override_bounds(b: Bounds, max_len: Option<usize>) -> Bounds {
    match max_len {
        Some(n) => Bounds { per_arg: n, ..b },
        None => b,
    }
}

fn requests(loaded: &Loaded, opts: &RunOptions) -> Vec<SuiteRequest> {
    let mut out: Vec<SuiteRequest> = if opts.suites.is_empty() {
        loaded.requests.clone()
    } else {
        let mut picked = Vec::new();
        for id in &opts.suites {
            let configured: Vec<_> = loaded.requests.iter().filter(|r| r.suite == *id).cloned().collect();
            if !configured.is_empty() {
                picked.extend(configured);
            } else if id.needs_map() {
                for name in loaded.instance.maps.keys() {
                    picked.push(SuiteRequest::new(*id).map(name));
                }
            } else {
                picked.push(SuiteRequest::new(*id));
            }
        }
        picked
    };
    if let Some(n) = opts.max_len {
        for r in &mut out {
            r.bounds = Some(override_bounds(r.bounds.unwrap_or(loaded.instance.bounds), Some(n)));
        }
    }
    out
}

/// Runs every requested suite and assembles the report.
pub fn run(loaded: &Loaded, opts: &RunOptions) -> Result<Report> {
    let inst = &loaded.instance;
    let spec = &inst.spec;
    let chi = spec.chi();
    let gen_degrees: Vec<_> = spec.generators().iter().map(|g| g.degree.clone()).collect();
    let chi_section = ChiSection {
        domain: spec.domain().to_string(),
        matrix: chi
            .matrix()
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect(),
        torsion_valid: chi.validate().is_valid(),
        symmetric_on_generators: chi.symmetry_check(&gen_degrees)?.is_symmetric(),
    };

    let requests = requests(loaded, opts);
    let default_bounds = override_bounds(inst.bounds, opts.max_len);

    let mut precheck_maps: Vec<String> = loaded.prechecks.clone();
    for r in &requests {
        if r.suite.requires_special_map() {
            precheck_maps.extend(r.map.clone());
        }
    }
    precheck_maps.sort();
    precheck_maps.dedup();
    let mut prechecks = Vec::new();
    for name in &precheck_maps {
        let entry = match verify::precheck_special_map(inst, name, Some(&default_bounds)) {
            Ok(r) => PrecheckEntry {
                map: name.clone(),
                error: None,
                unit_vanishes: Some(fact_entry(spec, &r.unit_vanishes)),
                square_vanishes: Some(fact_entry(spec, &r.square_vanishes)),
                omega3_vanishes: Some(fact_entry(spec, &r.omega3_vanishes)),
            },
            Err(e) => PrecheckEntry {
                map: name.clone(),
                error: Some(e.to_string()),
                unit_vanishes: None,
                square_vanishes: None,
                omega3_vanishes: None,
            },
        };
        prechecks.push(entry);
    }

    let mut cfun_maps: Vec<String> = requests
        .iter()
        .filter(|r| r.suite.needs_cfun())
        .filter_map(|r| r.map.clone())
        .collect();
    cfun_maps.sort();
    cfun_maps.dedup();
    let mut cfun_checks = Vec::new();
    for name in &cfun_maps {
        if let Some(v) = verify::validate_cfun(inst, name, Some(&default_bounds))? {
            cfun_checks.push(CFunEntry {
                map: name.clone(),
                valid: v.is_valid(),
                pairs_checked: v.pairs_checked,
                violations: v.violations.len(),
            });
        }
    }

    let mut suites = Vec::new();
    let mut verdicts: Vec<Verdict> = Vec::new();
    for req in &requests {
        let start = Instant::now();
        let v = verify::run_suite(inst, req)?;
        let elapsed = start.elapsed().as_millis();
        suites.push(SuiteEntry {
            suite: v.suite,
            map: v.map.clone(),
            mode: v.mode.as_str(),
            bounds: v.bounds.into(),
            status: v.status.as_str(),
            reason: match &v.status {
                verify::Status::Skipped(r) => Some(r.clone()),
                _ => None,
            },
            cases_checked: v.cases_checked,
            failures_total: v.failures.len(),
            failures: v
                .failures
                .iter()
                .take(MAX_LISTED_FAILURES)
                .map(|m| failure_entry(spec, m))
                .collect(),
            timing_ms: opts.timing.then_some(elapsed),
        });
        verdicts.push(v);
    }

    let asserted: Vec<&Verdict> = verdicts.iter().filter(|v| v.mode == Mode::Assert).collect();
    let assert_holding = asserted.iter().filter(|v| v.holds()).count();
    let assert_not_holding = asserted.len() - assert_holding;
    Ok(Report {
        tool: "bverify",
        version: env!("CARGO_PKG_VERSION"),
        config_digest: loaded.digest.clone(),
        instance: inst.name.clone(),
        chi: chi_section,
        prechecks,
        cfun_checks,
        suites,
        summary: Summary {
            suites_run: verdicts.len(),
            assert_holding,
            assert_not_holding,
            exit_code: if assert_not_holding == 0 { 0 } else { 1 },
        },
    })
}
