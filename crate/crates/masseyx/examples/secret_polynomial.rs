//! The access-group counting polynomial Z, three ways: directly from
//! prefix-constrained dual-codeword tuples, read off for group counts, and
//! recovered from the biweight enumerator via the 2-transitive derivative
//! shortcut.
//!
//! ```bash
//! cargo run -p masseyx --example secret_polynomial
//! ```

use masseyx::catalog;
use masseyx::enumpoly::{
    count_bound, derivative_z, joint_weight_enumerator, secret_coefficient, EnumOpts, JweArg,
};

fn main() -> masseyx::Result<()> {
    let opts = EnumOpts::default();

    let ham = catalog::load("hamming8")?.code;
    let z = secret_coefficient(&ham, 2, &opts)?;
    println!("extended Hamming, l = 2:");
    println!("  Z = {z}");
    let d_dual = ham.dual()?.min_distance(opts.cap)?;
    for m in [4, 5, 6] {
        let (bound, exact) = count_bound(&z, m, d_dual);
        println!(
            "  access groups of size {m}: {bound}{}",
            if exact { " (exact)" } else { " (upper bound)" }
        );
    }

    // The Golay Z: a million tuple pairs, still instant.
    let golay = catalog::load("golay24")?.code;
    let zg = secret_coefficient(&golay, 2, &opts)?;
    println!("\nGolay, l = 2: Z has {} terms; the smallest access groups:", zg.term_count());
    for m in [10, 12] {
        let (bound, exact) = count_bound(&zg, m, 8);
        println!(
            "  size {m}: {bound}{}",
            if exact { " (exact)" } else { " (needs certification, see certified_counts)" }
        );
    }

    // Both codes have 2-transitive symmetry, so Z also falls out of the
    // biweight enumerator by a normalized mixed derivative.
    let bw = joint_weight_enumerator(&[JweArg::Code(&golay), JweArg::Code(&golay)], &opts)?;
    let z_from_bw = derivative_z(&bw, golay.len())?;
    println!("\nderivative of the Golay biweight equals Z: {}", z_from_bw == zg);
    Ok(())
}
