//! Pinned reference computations, shared by the `reproduce` CLI command and
//! the acceptance test suite: each target recomputes a published quantity
//! from scratch and compares it against the values recorded here.

use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::access::{self, AccessOpts};
use crate::catalog;
use crate::enumpoly::{self, EnumOpts, JweArg, SparseEnumerator};
use crate::error::Result;
use crate::scheme::SchemeInstance;

/// Biweight enumerator of the extended Hamming code, 11 terms as
/// `(coefficient, [e0, e1, e2, e3])`.
pub const HAMMING_BIWEIGHT_TERMS: &[(u64, [u16; 4])] = &[
    (1, [0, 0, 0, 8]),
    (14, [0, 0, 4, 4]),
    (1, [0, 0, 8, 0]),
    (14, [0, 4, 0, 4]),
    (14, [0, 4, 4, 0]),
    (1, [0, 8, 0, 0]),
    (168, [2, 2, 2, 2]),
    (14, [4, 0, 0, 4]),
    (14, [4, 0, 4, 0]),
    (14, [4, 4, 0, 0]),
    (1, [8, 0, 0, 0]),
];

/// Z of the extended Hamming scheme with a length-2 secret.
pub const HAMMING_Z_TERMS: &[(u64, [u16; 4])] = &[(4, [0, 3, 3, 0]), (12, [2, 1, 1, 2])];

/// Z of the Golay scheme with a length-2 secret: all 28 terms.
pub const GOLAY_Z_TERMS: &[(u64, [u16; 4])] = &[
    (6160, [12, 3, 3, 4]),
    (22176, [10, 5, 5, 2]),
    (7392, [10, 5, 1, 6]),
    (7392, [10, 1, 5, 6]),
    (2640, [8, 7, 7, 0]),
    (73920, [8, 7, 3, 4]),
    (73920, [8, 3, 7, 4]),
    (36960, [8, 3, 3, 8]),
    (36960, [6, 9, 5, 2]),
    (12320, [6, 9, 1, 6]),
    (36960, [6, 5, 9, 2]),
    (266112, [6, 5, 5, 6]),
    (7392, [6, 5, 1, 10]),
    (12320, [6, 1, 9, 6]),
    (7392, [6, 1, 5, 10]),
    (18480, [4, 11, 3, 4]),
    (147840, [4, 7, 7, 4]),
    (73920, [4, 7, 3, 8]),
    (18480, [4, 3, 11, 4]),
    (73920, [4, 3, 7, 8]),
    (6160, [4, 3, 3, 12]),
    (36960, [2, 9, 5, 6]),
    (36960, [2, 5, 9, 6]),
    (22176, [2, 5, 5, 10]),
    (176, [0, 15, 7, 0]),
    (672, [0, 11, 11, 0]),
    (176, [0, 7, 15, 0]),
    (2640, [0, 7, 7, 8]),
];

fn poly_from(terms: &[(u64, [u16; 4])]) -> SparseEnumerator {
    SparseEnumerator::from_terms(2, terms.iter().map(|&(c, e)| (e.to_vec(), c)))
}

pub fn hamming_biweight() -> SparseEnumerator {
    poly_from(HAMMING_BIWEIGHT_TERMS)
}

pub fn hamming_z() -> SparseEnumerator {
    poly_from(HAMMING_Z_TERMS)
}

pub fn golay_z() -> SparseEnumerator {
    poly_from(GOLAY_Z_TERMS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Example1,
    Example2,
    HammingZ,
    GolayZ,
    GolayM10,
    GolayM12,
}

impl Target {
    pub fn all() -> [Target; 6] {
        [
            Target::Example1,
            Target::Example2,
            Target::HammingZ,
            Target::GolayZ,
            Target::GolayM10,
            Target::GolayM12,
        ]
    }

    pub fn parse(s: &str) -> Option<Target> {
        Target::all().into_iter().find(|t| t.name() == s)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Target::Example1 => "example1",
            Target::Example2 => "example2",
            Target::HammingZ => "hamming-z",
            Target::GolayZ => "golay-z",
            Target::GolayM10 => "golay-m10",
            Target::GolayM12 => "golay-m12",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub target: &'static str,
    pub passed: bool,
    pub elapsed_ms: u128,
    pub checks: Vec<Check>,
}

impl Report {
    fn push(&mut self, name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let pass = expected == actual;
        self.passed &= pass;
        self.checks.push(Check {
            name: name.into(),
            expected,
            actual,
            pass,
        });
    }
}

fn histogram_string(histogram: &std::collections::BTreeMap<usize, u64>) -> String {
    let parts: Vec<String> = histogram.iter().map(|(s, c)| format!("{s}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Runs one reproduction target and reports every sub-check.
pub fn run(target: Target, opts: &EnumOpts) -> Result<Report> {
    let started = Instant::now();
    let mut report = Report {
        target: target.name(),
        passed: true,
        elapsed_ms: 0,
        checks: Vec::new(),
    };
    let access_opts = AccessOpts {
        cap: opts.cap,
        threads: opts.threads,
        ..AccessOpts::default()
    };
    match target {
        Target::Example1 => {
            let c1 = catalog::load("c1_ternary")?.code;
            let s = SchemeInstance::new(c1.dual()?, 2)?;
            let r = access::enumerate_access_structure(&s, &access_opts)?;
            report.push("participants", 6, s.participants());
            report.push("histogram", "{5:4, 6:1}", histogram_string(&r.histogram));
        }
        Target::Example2 => {
            let ham = catalog::load("hamming8")?.code;
            let s = SchemeInstance::new(ham, 3)?;
            let r = access::enumerate_access_structure(&s, &access_opts)?;
            report.push("participants", 5, s.participants());
            report.push("histogram", "{4:4, 5:1}", histogram_string(&r.histogram));
        }
        Target::HammingZ => {
            let ham = catalog::load("hamming8")?.code;
            let bw = enumpoly::joint_weight_enumerator(
                &[JweArg::Code(&ham), JweArg::Code(&ham)],
                opts,
            )?;
            report.push("biweight", hamming_biweight(), &bw);
            let z = enumpoly::secret_coefficient(&ham, 2, opts)?;
            report.push("z", hamming_z(), &z);
            let (bound, exact) = enumpoly::count_bound(&z, 4, 4);
            report.push("count(m=4)", 12, bound);
            report.push("count(m=4) exact", true, exact);
        }
        Target::GolayZ => {
            let golay = catalog::load("golay24")?.code;
            let z = enumpoly::secret_coefficient(&golay, 2, opts)?;
            report.push("terms", 28, z.term_count());
            report.push("z", golay_z(), &z);
            report.push("tuples", BigUint::from(1u64 << 20), z.total());
        }
        Target::GolayM10 => {
            let golay = catalog::load("golay24")?.code;
            let z = enumpoly::secret_coefficient(&golay, 2, opts)?;
            let (bound, exact) = enumpoly::count_bound(&z, 10, 8);
            report.push("count(m=10)", 6160, bound);
            report.push("count(m=10) exact", true, exact);
            let s = SchemeInstance::new(golay, 2)?;
            let (count, certified) = enumpoly::verify_exact_count(&s, 10, opts)?;
            report.push("distinct unions", 6160, count);
            report.push("certified", true, certified);
        }
        Target::GolayM12 => {
            let golay = catalog::load("golay24")?.code;
            let z = enumpoly::secret_coefficient(&golay, 2, opts)?;
            let (bound, exact) = enumpoly::count_bound(&z, 12, 8);
            report.push("bound(m=12)", 36960, bound);
            report.push("bound exactness needs certification", false, exact);
            let s = SchemeInstance::new(golay, 2)?;
            let (count, certified) = enumpoly::verify_exact_count(&s, 12, opts)?;
            report.push("count(m=12)", 36960, count);
            report.push("certified", true, certified);
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}
