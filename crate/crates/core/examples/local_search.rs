//! Steepest-ascent search for d = 4 and 5, where no closed form is known, and
//! the single-box-move report for a qutrit optimum.

use qudit_ns::optimizer::{check_local_optimality, maximize_brute, maximize_local};
use qudit_ns::Partition;

fn main() -> qudit_ns::Result<()> {
    for (d, n) in [(4, 20), (4, 40), (5, 30)] {
        let local = maximize_local(d, n)?;
        let brute = maximize_brute(d, n)?;
        println!(
            "d = {d}, n = {n}: local {} (f = {}), brute force agrees: {}",
            local.primary(),
            local.max_multiplicity,
            local.same_result(&brute)
        );
    }

    let p = Partition::new(&[4, 2, 1], 3)?;
    let report = check_local_optimality(&p);
    println!("\n{p} locally optimal: {}", report.optimal);
    for m in &report.moves {
        let condition = m.condition.map_or_else(String::new, |c| format!("({c}) "));
        println!("  {condition}{} -> f(p) vs f(q): {:?}", m.neighbor, m.sign);
    }
    Ok(())
}
