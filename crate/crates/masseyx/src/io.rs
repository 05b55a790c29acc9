//! Plain-text matrix files, one code per file.
//!
//! ```text
//! field p e c0 c1 ... ce      modulus coefficients ascending; omitted for e = 1
//! code N k
//! <k rows of N element values>
//! ```
//!
//! The writer emits a canonical form (single spaces, trailing newline) so
//! that parse -> write round-trips byte-exactly.

use std::fmt::Write as _;
use std::path::Path;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{make_field, FieldSpec};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a `field p e ...` header line (1-based `line_no` for errors).
pub fn parse_field_header(line: &str, line_no: usize) -> Result<FieldSpec> {
    let mut it = line.split_whitespace();
    if it.next() != Some("field") {
        return Err(parse_err(line_no, "expected `field p e ...`"));
    }
    let p: u64 = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line_no, "bad characteristic"))?;
    let e: u32 = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(line_no, "bad extension degree"))?;
    let rest: Vec<u16> = it
        .map(|t| t.parse::<u16>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_err(line_no, "bad modulus coefficient"))?;
    if e == 1 {
        if !rest.is_empty() {
            return Err(parse_err(line_no, "prime fields take no modulus"));
        }
        make_field(p, 1, None)
    } else {
        if rest.is_empty() {
            return Err(parse_err(
                line_no,
                "extension fields need modulus coefficients",
            ));
        }
        make_field(p, e, Some(&rest))
    }
}

pub fn write_field_header(f: &FieldSpec) -> String {
    let mut s = format!("field {} {}", f.characteristic(), f.extension_degree());
    if let Some(m) = f.modulus() {
        for c in m {
            let _ = write!(s, " {c}");
        }
    }
    s
}

/// Parses a whole code file.
pub fn parse_code(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (ln, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let field = parse_field_header(header, ln + 1)?;

    let (ln, dims) = lines
        .next()
        .ok_or_else(|| parse_err(2, "missing `code N k` line"))?;
    let mut it = dims.split_whitespace();
    if it.next() != Some("code") {
        return Err(parse_err(ln + 1, "expected `code N k`"));
    }
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(ln + 1, "bad length"))?;
    let k: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(ln + 1, "bad dimension"))?;
    if it.next().is_some() {
        return Err(parse_err(ln + 1, "trailing tokens after `code N k`"));
    }

    let mut rows = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, row_line) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {k} generator rows")))?;
        let row: Vec<u16> = row_line
            .split_whitespace()
            .map(|t| t.parse::<u16>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(ln + 1, "bad element value"))?;
        if row.len() != n {
            return Err(parse_err(
                ln + 1,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(
            ln + 1,
            "trailing content after the generator rows",
        ));
    }
    LinearCode::from_rows(field, rows)
}

/// Canonical serialization; `parse_code(write_code(c))` is the identity and
/// round-trips files byte-exactly.
pub fn write_code(code: &LinearCode) -> String {
    let mut s = write_field_header(code.field());
    s.push('\n');
    let _ = writeln!(s, "code {} {}", code.len(), code.dim());
    for row in code.generator() {
        let mut first = true;
        for v in row {
            if !first {
                s.push(' ');
            }
            let _ = write!(s, "{v}");
            first = false;
        }
        s.push('\n');
    }
    s
}

pub fn read_code_file(path: impl AsRef<Path>) -> Result<LinearCode> {
    parse_code(&std::fs::read_to_string(path)?)
}

pub fn write_code_file(path: impl AsRef<Path>, code: &LinearCode) -> Result<()> {
    Ok(std::fs::write(path, write_code(code))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_CAP;
    use proptest::prelude::*;

    #[test]
    fn round_trip_is_byte_exact() {
        let text = "field 3 1\ncode 8 3\n1 0 0 0 2 2 1 1\n0 1 0 1 2 1 2 1\n0 0 1 2 0 1 0 2\n";
        let code = parse_code(text).unwrap();
        assert_eq!(write_code(&code), text);
        assert_eq!((code.len(), code.dim()), (8, 3));
    }

    #[test]
    fn extension_field_header() {
        let text = "field 2 2 1 1 1\ncode 3 1\n1 2 3\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.field().order(), 4);
        assert_eq!(write_code(&code), text);
        let f = parse_field_header("field 2 1", 1).unwrap();
        assert_eq!(write_field_header(&f), "field 2 1");
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_code("code 4 1\n1 1 1 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_code("field 2 1\ncode 4 2\n1 1 1 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_code("field 2 1\ncode 4 1\n1 1 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        // element out of range surfaces from code construction
        assert!(matches!(
            parse_code("field 2 1\ncode 2 1\n1 5\n"),
            Err(Error::ElementOutOfRange { value: 5, q: 2 })
        ));
        assert!(matches!(
            parse_code("field 2 1\ncode 2 2\n1 1\n1 1\n"),
            Err(Error::RankDeficient { .. })
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn random_codes_round_trip(
            n in 1usize..9,
            rows in proptest::collection::vec(proptest::collection::vec(0u16..3, 1..9), 1..4),
        ) {
            let field = crate::gf::make_field(3, 1, None).unwrap();
            let rows: Vec<Vec<u16>> = rows.iter().map(|r| {
                (0..n).map(|i| r.get(i).copied().unwrap_or(0)).collect()
            }).collect();
            if let Ok(code) = crate::code::LinearCode::from_span(field, rows) {
                let text = write_code(&code);
                let back = parse_code(&text).unwrap();
                prop_assert_eq!(&back, &code);
                prop_assert_eq!(write_code(&back), text);
                // same words exactly
                let a: Vec<_> = code.enumerate_codewords(DEFAULT_CAP).unwrap().collect();
                let b: Vec<_> = back.enumerate_codewords(DEFAULT_CAP).unwrap().collect();
                prop_assert_eq!(a, b);
            }
        }
    }
}
