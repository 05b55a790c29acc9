//! Enumerate the complete access structures of the two small reference
//! schemes: minimal access groups, group counts by size, and the size
//! bounds that frame them.
//!
//! ```bash
//! cargo run -p masseyx --example access_structure
//! ```

use masseyx::access::{self, AccessOpts};
use masseyx::catalog;
use masseyx::scheme::SchemeInstance;

fn show(name: &str, scheme: &SchemeInstance) -> masseyx::Result<()> {
    let report = access::enumerate_access_structure(scheme, &AccessOpts::default())?;
    println!("{name}: {} participants", scheme.participants());
    println!("  access groups by size: {:?}", report.histogram);
    println!("  minimal access groups:");
    for g in &report.minimal_groups {
        println!("    {g:?}");
    }
    let b = &report.bounds;
    println!(
        "  bounds: sizes <= {} learn nothing; sizes <= {:?}/{:?} cannot recover; sizes >= {} always recover\n",
        b.noinfo_bound, b.ghw_bound, b.simple_bound, b.recover_threshold
    );
    Ok(())
}

fn main() -> masseyx::Result<()> {
    let c1 = catalog::load("c1_ternary")?.code;
    show("ternary scheme (dual of c1, l = 2)", &SchemeInstance::new(c1.dual()?, 2)?)?;
    let ham = catalog::load("hamming8")?.code;
    show("extended Hamming scheme (l = 3)", &SchemeInstance::new(ham.clone(), 3)?)?;
    show("extended Hamming scheme (l = 2)", &SchemeInstance::new(ham, 2)?)?;
    Ok(())
}
