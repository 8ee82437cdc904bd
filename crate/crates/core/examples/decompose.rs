//! Lists every block of the collective-rotation algebra for three qutrits and
//! checks that the block dimensions add up to the full Hilbert space.

use qudit_ns::report::{render_decomposition, Format};
use qudit_ns::schur_weyl::decomposition;

fn main() -> qudit_ns::Result<()> {
    let table = decomposition(3, 3)?;
    print!("{}", render_decomposition(&table, Format::Table));
    assert!(table.is_consistent());
    Ok(())
}
