//! The plain-text matrix file format: build a code over GF(4), write it,
//! read it back, and run a scheme on it.
//!
//! ```bash
//! cargo run -p masseyx --example code_files
//! ```

use masseyx::code::LinearCode;
use masseyx::gf::make_field;
use masseyx::io::{parse_code, write_code};
use masseyx::scheme::SchemeInstance;

fn main() -> masseyx::Result<()> {
    // GF(4) with the built-in modulus x^2 + x + 1; elements 0..3 encode
    // 0, 1, a, a+1.
    let gf4 = make_field(2, 2, None)?;
    let code = LinearCode::from_rows(
        gf4,
        vec![vec![1, 0, 1, 1, 2], vec![0, 1, 1, 2, 3]],
    )?;
    let text = write_code(&code);
    println!("serialized [5,2] code over GF(4):\n{text}");

    let back = parse_code(&text)?;
    assert_eq!(back, code);
    println!("parse(write(code)) round-trips, and the writer is canonical:");
    assert_eq!(write_code(&back), text);
    println!("  write(parse(text)) == text: true\n");

    let d = back.min_distance(1 << 20)?;
    println!("minimum distance {d}; dealing a length-1 secret to 4 participants:");
    let scheme = SchemeInstance::new(back, 1)?;
    let shares = scheme.deal(&[3], 7)?;
    println!("  secret [3] -> shares {:?}", shares.shares());
    Ok(())
}
