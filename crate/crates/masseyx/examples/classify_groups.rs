//! Walk every participant group of the toy scheme and show the two
//! equivalent classifications: by generator-column spans and through the
//! dual code.
//!
//! ```bash
//! cargo run -p masseyx --example classify_groups
//! ```

use masseyx::access;
use masseyx::catalog;
use masseyx::scheme::SchemeInstance;

fn main() -> masseyx::Result<()> {
    let scheme = SchemeInstance::new(catalog::load("toy6")?.code, 2)?;
    let n = scheme.participants();
    println!("toy scheme: {} participants, secret length 2\n", n);
    println!("{:<14} {:>8} {:>12} {:>10}", "group", "kind", "leaked dim", "dual says");
    for mask in 0u32..1 << n {
        let group: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let c = access::classify_span(&scheme, &group)?;
        let dual_full = access::classify_dual(&scheme, &group)?;
        println!(
            "{:<14} {:>8} {:>12} {:>10}",
            format!("{group:?}"),
            format!("{:?}", c.kind),
            c.leaked_dim,
            if dual_full { "full" } else { "not full" },
        );
    }
    Ok(())
}
