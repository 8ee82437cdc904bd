//! The best qubit noiseless subsystem for n = 3..20, from the closed form for
//! the optimal second row, cross-checked against a brute-force scan.

use qudit_ns::cli::qubit_table;
use qudit_ns::optimizer::maximize_brute;
use qudit_ns::report::{render_qubit_table, Format};

fn main() -> qudit_ns::Result<()> {
    let rows = qubit_table(20)?;
    for row in &rows {
        assert_eq!(row.f, maximize_brute(2, row.n)?.max_multiplicity);
    }
    print!("{}", render_qubit_table(&rows, Format::Table));
    Ok(())
}
