//! Rates log_d f / n at the balanced partitions (k, ..., k), which approach 1
//! as k grows.

use qudit_ns::rates::{balanced_rate_series, code_rate};
use qudit_ns::report::{render_rate_series, Format};
use qudit_ns::Partition;

fn main() -> qudit_ns::Result<()> {
    for d in [2, 3] {
        print!("{}", render_rate_series(&balanced_rate_series(d, 10)?, Format::Csv));
        println!();
    }
    let p = Partition::new(&[21, 16, 12], 3)?;
    println!("rate of {p}: {:.6}", code_rate(&p)?);
    Ok(())
}
