//! Generalized Hamming weights of the reference codes and how the dual
//! hierarchy turns into access-structure bounds for the Golay scheme.
//!
//! ```bash
//! cargo run -p masseyx --example weight_hierarchy
//! ```

use masseyx::access;
use masseyx::catalog;
use masseyx::code::DEFAULT_CAP;
use masseyx::scheme::SchemeInstance;

fn main() -> masseyx::Result<()> {
    for name in ["toy6", "c1_ternary", "hamming8"] {
        let code = catalog::load(name)?.code;
        let hierarchy: Vec<usize> = (1..=code.dim())
            .map(|r| code.generalized_hamming_weight(r, DEFAULT_CAP))
            .collect::<masseyx::Result<_>>()?;
        println!("{name:<12} weight hierarchy {hierarchy:?}");
    }

    // The Golay hierarchy past r = 2 needs more subcodes than the default
    // budget allows; d_1 and d_2 are what the scheme bounds use.
    let golay = catalog::load("golay24")?.code;
    let d1 = golay.generalized_hamming_weight(1, DEFAULT_CAP)?;
    let d2 = golay.generalized_hamming_weight(2, DEFAULT_CAP)?;
    println!("golay24      d_1 = {d1}, d_2 = {d2}");

    let scheme = SchemeInstance::new(golay, 2)?;
    let b = access::bounds(&scheme, DEFAULT_CAP, false)?;
    println!("\ngolay scheme with l = 2 ({} participants):", scheme.participants());
    println!("  groups of size <= {} learn nothing", b.noinfo_bound);
    println!(
        "  groups of size <= {} cannot recover (hierarchy bound d_2 - l - 1)",
        b.ghw_bound.expect("computed")
    );
    println!(
        "  groups of size <= {} cannot recover (simple bound from d_dual alone)",
        b.simple_bound.expect("l >= 2")
    );
    println!("  groups of size >= {} always recover", b.recover_threshold);
    println!("  smallest actual access groups have size 10");
    Ok(())
}
