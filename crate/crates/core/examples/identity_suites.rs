//! Running identity suites: prechecks, verdicts along both Omega paths,
//! and the bracket implication.

use bverify::verify::{self, Bounds, SuiteId, SuiteRequest};
use bverify::{instances, Result};

fn main() -> Result<()> {
    let gr4 = instances::gr4();
    let pre = verify::precheck_special_map(&gr4, "D_bad", None)?;
    println!("D_bad prechecks pass: {} (fails {:?})", pre.passes(), pre.failed_facts());

    for suite in [SuiteId::Lemma32, SuiteId::Lemma33, SuiteId::Jacobi, SuiteId::LeibnizPaper] {
        let req = SuiteRequest::new(suite).map("D_odd");
        let (closed, _, agree) = verify::dual_path(&gr4, &req)?;
        println!(
            "{:<14} {:<7} {:>5} cases, paths agree: {agree}",
            suite.as_str(),
            closed.status.as_str(),
            closed.cases_checked
        );
    }

    let imp = verify::check_implication(&gr4, "D_odd", None)?;
    println!("implication premise {}, consistent {}", imp.premise(), imp.consistent());

    let qp = instances::qp();
    let v = verify::run_suite(&qp, &SuiteRequest::new(SuiteId::Lemma31).map("dydx").bounds(Bounds::per_arg(2)))?;
    println!("QP lemma31 on dy.dx: {} ({} failures)", v.status.as_str(), v.failures.len());
    Ok(())
}
