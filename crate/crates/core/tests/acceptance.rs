//! Runs every acceptance criterion, printing one pass/fail line each.

use std::process::ExitCode;

use ffclass::cli::seed_from_env;
use ffclass::selftest;

fn main() -> ExitCode {
    let seed = seed_from_env();
    println!("acceptance criteria (seed {seed})");
    let outcomes = selftest::run_all(seed);
    for outcome in &outcomes {
        println!("{outcome}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
