//! Loading a JSON configuration and producing the report, as `bverify run`
//! does.

use std::path::Path;

use bverify::config::Config;
use bverify::report::{self, RunOptions};
use bverify::Result;

fn main() -> Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/configs/qp.json").to_string());
    let loaded = Config::load(Path::new(&path))?.validate()?;
    println!("{} {}", loaded.instance.name, loaded.digest);
    let report = report::run(&loaded, &RunOptions::default())?;
    for s in &report.suites {
        println!(
            "{:<18} {:<6} {:<7} {:>5} cases {:>4} failures",
            s.suite.as_str(),
            s.map.as_deref().unwrap_or("-"),
            s.status,
            s.cases_checked,
            s.failures_total
        );
    }
    println!("exit code {}", report.exit_code());
    Ok(())
}
