//! Built-in, file-backed reference codes.
//!
//! Each entry is a checked-in matrix file plus asserted properties. The
//! self-duality / self-orthogonality flags and the expected minimum distance
//! are re-verified every time an entry is loaded; 2-transitivity of the
//! automorphism group is recorded as an unverified assertion (it is
//! cross-validated numerically by the enumerator tests, not proved here).
//!
//! Set `MASSEYX_DATA_DIR` to load the matrix files from a directory instead
//! of the embedded copies.

use crate::code::{LinearCode, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::io;

/// Environment variable that overrides the embedded data files.
pub const DATA_DIR_ENV: &str = "MASSEYX_DATA_DIR";

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub code: LinearCode,
    pub self_dual: bool,
    pub self_orthogonal: bool,
    /// Asserted only; consumers that rely on it (the biweight-derivative
    /// shortcut) fail loudly when the assertion is wrong.
    pub two_transitive: bool,
    pub provenance: &'static str,
}

struct EntrySpec {
    name: &'static str,
    file: &'static str,
    self_dual: bool,
    two_transitive: bool,
    expected_distance: usize,
    provenance: &'static str,
}

const ENTRIES: &[EntrySpec] = &[
    EntrySpec {
        name: "c1_ternary",
        file: include_str!("../data/c1_ternary.code"),
        self_dual: false,
        two_transitive: false,
        expected_distance: 4,
        provenance: "ternary [8,3,4] reference code; schemes use its dual",
    },
    EntrySpec {
        name: "hamming8",
        file: include_str!("../data/hamming8.code"),
        self_dual: true,
        two_transitive: true,
        expected_distance: 4,
        provenance: "[7,4] Hamming code extended by an overall parity bit",
    },
    EntrySpec {
        name: "golay24",
        file: include_str!("../data/golay24.code"),
        self_dual: true,
        two_transitive: true,
        expected_distance: 8,
        provenance: "binary Golay code, [I | B] bordered-circulant generator",
    },
    EntrySpec {
        name: "toy6",
        file: include_str!("../data/toy6.code"),
        self_dual: false,
        two_transitive: false,
        expected_distance: 3,
        provenance: "two-row toy code 101010 / 010101",
    },
];

/// Names of all catalog entries, in a fixed order.
pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Loads and re-validates a catalog entry.
pub fn load(name: &str) -> Result<CatalogEntry> {
    let spec = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))?;

    let code = match std::env::var_os(DATA_DIR_ENV) {
        Some(dir) => {
            let path = std::path::Path::new(&dir).join(format!("{}.code", spec.name));
            io::read_code_file(path)?
        }
        None => io::parse_code(spec.file)?,
    };

    let fail = |reason: String| Error::CatalogValidation {
        name: spec.name.to_string(),
        reason,
    };
    let self_orthogonal = code.is_self_orthogonal();
    if spec.self_dual {
        if !self_orthogonal {
            return Err(fail("G . G^T is not zero".into()));
        }
        if 2 * code.dim() != code.len() {
            return Err(fail(format!(
                "dimension {} is not half the length {}",
                code.dim(),
                code.len()
            )));
        }
    }
    let d = code.min_distance(DEFAULT_CAP)?;
    if d != spec.expected_distance {
        return Err(fail(format!(
            "minimum distance {d}, expected {}",
            spec.expected_distance
        )));
    }

    Ok(CatalogEntry {
        name: spec.name,
        code,
        self_dual: spec.self_dual,
        self_orthogonal,
        two_transitive: spec.two_transitive,
        provenance: spec.provenance,
    })
}

/// Loads a code by catalog name or, failing that, from a file path.
pub fn load_code_ref(spec: &str) -> Result<LinearCode> {
    match load(spec) {
        Ok(entry) => Ok(entry.code),
        Err(Error::UnknownCatalogEntry(_)) => io::read_code_file(spec),
        Err(e) => Err(e),
    }
}
