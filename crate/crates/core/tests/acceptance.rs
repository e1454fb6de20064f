//! One PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;

use slopeforge::suites::{run_all, SuiteConfig};

fn main() -> ExitCode {
    // libtest flags such as --nocapture are accepted and ignored
    let reports = run_all(&SuiteConfig::default());
    for r in &reports {
        println!("{}", r.line());
        if std::env::var_os("SLOPEFORGE_NOTES").is_some() {
            for n in &r.notes {
                println!("    {n}");
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", reports.len() - failed, reports.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
