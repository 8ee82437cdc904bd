//! Runs every verification sweep over a small range and prints one line each.

use qudit_ns::report::{render_report, Format};
use qudit_ns::verify::{run_check, Check, VerifyParams};

fn main() -> qudit_ns::Result<()> {
    let params = VerifyParams { nmax: Some(40), kmax: Some(20), ..VerifyParams::default() };
    let mut all_passed = true;
    for check in Check::ALL {
        let report = run_check(check, &params)?;
        all_passed &= report.passed();
        print!("{}", render_report(&report, Format::Table));
    }
    assert!(all_passed);
    Ok(())
}
