//! Joint weight enumerators: the biweight enumerator of the extended
//! Hamming code, its collapse back to the ordinary weight enumerator, and
//! the swap symmetry.
//!
//! ```bash
//! cargo run -p masseyx --example biweight_enumerator
//! ```

use masseyx::catalog;
use masseyx::enumpoly::{joint_weight_enumerator, EnumOpts, JweArg};

fn main() -> masseyx::Result<()> {
    let ham = catalog::load("hamming8")?.code;
    let opts = EnumOpts::default();

    let bw = joint_weight_enumerator(&[JweArg::Code(&ham), JweArg::Code(&ham)], &opts)?;
    println!("biweight enumerator of the extended Hamming code:");
    println!("  {bw}");
    println!("  ({} terms; coefficients sum to |C|^2 = {})", bw.term_count(), bw.total());

    // x_1 records positions where only the second word is nonzero, x_2 only
    // the first, x_3 both. Merging x_1 -> x_0 and x_3 -> x_2 forgets the
    // second word entirely, leaving |C| copies of the weight enumerator.
    let collapsed = bw.specialize(&[0, 0, 2, 2])?;
    println!("\ncollapse onto the first argument: {collapsed}");

    let swapped = bw.specialize(&[0, 2, 1, 3])?;
    println!("\nswap symmetry holds: {}", swapped == bw);

    // A three-fold enumerator works the same way, over 8 pattern variables.
    let toy = catalog::load("toy6")?.code;
    let tri = joint_weight_enumerator(
        &[JweArg::Code(&toy), JweArg::Code(&toy), JweArg::Code(&toy)],
        &opts,
    )?;
    println!("\n3-fold enumerator of toy6 has {} terms, mass {}", tri.term_count(), tri.total());
    Ok(())
}
