//! Qutrit optima from the exact threshold formulas, including the values at
//! which two partitions tie.

use qudit_ns::optimizer::{maximize_brute, maximize_qutrit_closed, qutrit_thresholds};
use qudit_ns::report::{render_optimum, Format};

fn main() -> qudit_ns::Result<()> {
    for n in [4, 7, 8, 11, 49, 50] {
        let closed = maximize_qutrit_closed(n)?;
        assert!(closed.same_result(&maximize_brute(3, n)?));
        print!("{}", render_optimum(&closed, Format::Table));
        println!();
    }

    // n = 3k + 2 with k = 3: which middle-row branch applies
    let t = qutrit_thresholds(3);
    println!(
        "k = 3: r1 = {:.4}, r2 = {:.4}, r4 = {:.4}, raised middle row: {}",
        t.r1.to_f64(),
        t.r2.to_f64(),
        t.r4.to_f64(),
        t.raised_middle_row()
    );
    Ok(())
}
