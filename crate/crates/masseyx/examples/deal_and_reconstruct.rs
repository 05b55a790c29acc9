//! Share a two-element secret through the ternary reference scheme and
//! rebuild it from an authorized group.
//!
//! ```bash
//! cargo run -p masseyx --example deal_and_reconstruct
//! ```

use std::collections::BTreeMap;

use masseyx::catalog;
use masseyx::scheme::{Reconstruction, SchemeInstance};

fn main() -> masseyx::Result<()> {
    // The scheme lives on the dual of the [8,3,4] ternary code: 8 = 2 + 6,
    // so a length-2 secret is split across 6 participants.
    let c1 = catalog::load("c1_ternary")?.code;
    let scheme = SchemeInstance::new(c1.dual()?, 2)?;
    println!(
        "scheme: [{},{}] code over GF({}), {} participants, detects {} cheater(s)",
        scheme.code().len(),
        scheme.code().dim(),
        scheme.code().field().order(),
        scheme.participants(),
        scheme.cheater_capacity(),
    );

    let secret = [1u16, 2];
    let shares = scheme.deal(&secret, 42)?;
    println!("secret {:?} dealt with seed 42:", secret);
    for (i, v) in shares.to_map() {
        println!("  participant {i} holds {v}");
    }

    // Authorized group: five participants suffice here.
    let group = [1usize, 2, 3, 4, 5];
    let held: BTreeMap<usize, u16> = group.iter().map(|&i| (i, shares.share(i))).collect();
    match scheme.reconstruct(&group, &held)? {
        Reconstruction::Secret(s) => println!("group {group:?} recovers {s:?}"),
        Reconstruction::NotAuthorized => println!("group {group:?} is not authorized"),
    }

    // A pair on its own learns only part of the secret and recovers nothing.
    let pair = [1usize, 2];
    let held: BTreeMap<usize, u16> = pair.iter().map(|&i| (i, shares.share(i))).collect();
    match scheme.reconstruct(&pair, &held)? {
        Reconstruction::Secret(s) => println!("group {pair:?} recovers {s:?}"),
        Reconstruction::NotAuthorized => println!("group {pair:?} is not authorized"),
    }
    Ok(())
}
