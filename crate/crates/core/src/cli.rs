//! Command-line front end. Exit codes: 0 when every assert-mode suite
//! holds, 1 when one does not, 2 on configuration or usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::grading::{GroupElement, GroupSpec};
use crate::report::{self, RunOptions};
use crate::verify::{self, SearchPredicate, SuiteId};

#[derive(Debug, Parser)]
#[command(name = "bverify", version, about = "Verify identities in bicharacter-braided graded algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate a configuration.
    Validate { config: PathBuf },
    /// Run the configured suites and write a JSON report.
    Run {
        config: PathBuf,
        /// Restrict to this suite (repeatable).
        #[arg(long = "suite", value_name = "ID")]
        suites: Vec<String>,
        /// Override the per-argument monomial length of every bound.
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
        /// Write the report here instead of the configured output or stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Enumerate bicharacters on a finite group.
    Search {
        /// Group such as `Z2` or `Z2xZ3`.
        #[arg(long)]
        group: String,
        /// `chi_ee=-1`, `symmetric` or `nonsymmetric`.
        #[arg(long)]
        predicate: String,
        /// Degree `e` for `chi_ee=-1`, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        e: Option<String>,
        /// Largest number of candidate matrices.
        #[arg(long, default_value_t = verify::DEFAULT_SEARCH_BOUND)]
        bound: u128,
    },
}

/// Parses `Z2xZ3`-style torsion groups.
pub fn parse_finite_group(text: &str) -> Result<GroupSpec> {
    let mut orders = Vec::new();
    for part in text.split(['x', '×']) {
        let n = part
            .trim()
            .strip_prefix('Z')
            .filter(|n| !n.is_empty())
            .and_then(|n| n.parse::<u64>().ok())
            .ok_or_else(|| Error::Invalid(format!("bad group factor '{part}' (expected Zn, n >= 2)")))?;
        if n < 2 {
            return Err(Error::Invalid(format!("bad group factor '{part}' (expected Zn, n >= 2)")));
        }
        orders.push(n);
    }
    GroupSpec::new(0, orders)
}

fn parse_predicate(text: &str, e: Option<&str>, group: &GroupSpec) -> Result<SearchPredicate> {
    let text = text.trim();
    if let Some(rhs) = text.strip_prefix("chi_ee=") {
        if rhs.trim() != "-1" {
            return Err(Error::Invalid(format!("unsupported predicate '{text}'")));
        }
        let coords = match e {
            Some(e) => e
                .split(',')
                .map(|c| c.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Invalid(format!("bad degree '{e}'")))?,
            None => vec![1; group.dimension()],
        };
        let e = group.canonicalize(&GroupElement(coords))?;
        return Ok(SearchPredicate::ChiEeMinusOne(e));
    }
    text.parse()
}

fn format_matrix(rows: &[Vec<String>]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", inner.join(", "))
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Validate { config } => {
            let loaded = Config::load(&config)?.validate()?;
            writeln!(
                out,
                "ok: {} ({} generators, {} maps, {} suites) {}",
                loaded.instance.name,
                loaded.instance.spec.generators().len(),
                loaded.instance.maps.len(),
                loaded.requests.len(),
                loaded.digest
            )
            .map_err(io)?;
            Ok(0)
        }
        Command::Run {
            config,
            suites,
            max_len,
            out: out_path,
            timing,
        } => {
            let loaded = Config::load(&config)?.validate()?;
            let suites = suites
                .iter()
                .map(|s| s.parse::<SuiteId>())
                .collect::<Result<Vec<_>>>()?;
            let opts = RunOptions {
                suites,
                max_len,
                timing,
            };
            let report = report::run(&loaded, &opts)?;
            let text = report.render();
            match out_path.or_else(|| loaded.config.output.as_ref().map(PathBuf::from)) {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    for s in &report.suites {
                        let map = s.map.as_deref().map(|m| format!(" [{m}]")).unwrap_or_default();
                        writeln!(out, "{}{map}: {} ({}, {} cases)", s.suite.as_str(), s.status, s.mode, s.cases_checked)
                            .map_err(io)?;
                    }
                    writeln!(out, "report written to {}", path.display()).map_err(io)?;
                }
                None => out.write_all(text.as_bytes()).map_err(io)?,
            }
            if report.exit_code() != 0 {
                writeln!(err, "{} assert-mode suite(s) did not hold", report.summary.assert_not_holding)
                    .map_err(io)?;
            }
            Ok(report.exit_code())
        }
        Command::Search {
            group,
            predicate,
            e,
            bound,
        } => {
            let group = parse_finite_group(&group)?;
            let predicate = parse_predicate(&predicate, e.as_deref(), &group)?;
            let found = verify::bicharacter_search(&group, &predicate, bound)?;
            let domain = verify::search_domain(&group)?;
            writeln!(out, "# predicate: {predicate}; domain: {domain}; matches: {}", found.len()).map_err(io)?;
            for chi in &found {
                let rows: Vec<Vec<String>> = chi
                    .matrix()
                    .iter()
                    .map(|r| r.iter().map(|s| s.to_string()).collect())
                    .collect();
                writeln!(out, "{}", format_matrix(&rows)).map_err(io)?;
            }
            Ok(0)
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
