//! Command-line front end.
//!
//! Every subcommand writes one JSON document to stdout (`--format pretty`
//! switches to a human rendering) and diagnostics to stderr. Exit status 0
//! means success, 1 a computation error (or a failed `reproduce` target),
//! 2 a usage error. Map keys are emitted sorted and polynomial terms in
//! graded-lex order, so outputs are byte-stable across runs and `--threads`
//! settings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::access::{self, AccessOpts};
use crate::catalog;
use crate::code::{LinearCode, DEFAULT_CAP};
use crate::enumpoly::{self, EnumOpts, JweArg};
use crate::error::{Error, Result};
use crate::reproduce::{self, Target};
use crate::scheme::{Reconstruction, SchemeInstance};

#[derive(Parser, Debug)]
#[command(
    name = "masseyx",
    version,
    about = "Secret sharing from linear codes: dealing, access structures, joint weight enumerators"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Enumeration budget (codewords, subcodes, tuples).
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Worker threads for the enumeration loops; the output is identical
    /// for every value.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

/// `--code` value: a catalog name or a matrix-file path.
#[derive(clap::Args, Debug)]
struct CodeArg {
    /// Catalog entry (c1_ternary, hamming8, golay24, toy6) or path to a
    /// matrix file.
    #[arg(long)]
    code: String,
    /// Use the dual of the loaded code.
    #[arg(long)]
    dual: bool,
}

impl CodeArg {
    fn load(&self) -> Result<LinearCode> {
        let code = catalog::load_code_ref(&self.code)?;
        if self.dual {
            code.dual()
        } else {
            Ok(code)
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the built-in reference codes.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Deal shares for a secret.
    Deal {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        /// Comma-separated secret coordinates, e.g. `1,2`.
        #[arg(long)]
        secret: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Rebuild the secret from a share subset.
    Reconstruct {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        /// JSON object {participant: element}, inline or `@path`.
        #[arg(long)]
        shares: String,
    },
    /// Classify one participant group (full / partial / none).
    Classify {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        /// Comma-separated participant indices; empty for the empty group.
        #[arg(long, default_value = "")]
        group: String,
    },
    /// Enumerate the access structure.
    Access {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        /// Ignore access groups larger than this.
        #[arg(long)]
        max_size: Option<usize>,
        /// Skip the weight-hierarchy bound.
        #[arg(long)]
        skip_ghw: bool,
    },
    /// Size bounds for the access structure.
    Bounds {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        skip_ghw: bool,
    },
    /// Joint weight enumerator of one or more codes.
    Jwe {
        /// Catalog names or matrix-file paths.
        #[arg(required = true)]
        codes: Vec<String>,
    },
    /// The access-group counting polynomial Z.
    Z {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
    },
    /// Bound (exact below 3/2 d_dual - 1) on the number of access groups of
    /// size m, read off Z.
    Count {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
    },
    /// Code extension enumerator P_D(t) of a self-orthogonal code.
    Extenum {
        #[command(flatten)]
        code: CodeArg,
    },
    /// Count access groups of size m and certify exactness via extension
    /// enumerators.
    VerifyCount {
        #[command(flatten)]
        code: CodeArg,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
    },
    /// Recover Z from the biweight enumerator (2-transitive codes).
    DeriveZ {
        #[command(flatten)]
        code: CodeArg,
    },
    /// Re-run a pinned reference computation and report pass/fail.
    Reproduce {
        /// example1 | example2 | hamming-z | golay-z | golay-m10 |
        /// golay-m12 | all
        target: String,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
}

struct Output {
    json: Value,
    pretty: String,
    status: i32,
}

impl Output {
    fn ok(json: Value, pretty: String) -> Self {
        Output {
            json,
            pretty,
            status: 0,
        }
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, O, E>(args: I, out: &mut O, log: &mut E) -> i32
where
    I: IntoIterator<Item = String>,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(log, "{e}");
                2
            } else {
                // --help / --version
                let _ = write!(out, "{e}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("serializable"),
                Format::Pretty => o.pretty,
            };
            let _ = writeln!(out, "{rendered}");
            o.status
        }
        Err(e) => {
            let _ = writeln!(log, "error: {e}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let enum_opts = EnumOpts {
        cap: cli.cap,
        threads: cli.threads,
    };
    match &cli.cmd {
        Cmd::Catalog { action } => match action {
            CatalogAction::List => catalog_list(),
        },
        Cmd::Deal {
            code,
            l,
            secret,
            seed,
        } => {
            let s = scheme_for(code, *l, cli.cap)?;
            let secret = parse_csv(secret)?;
            let shares = s.deal(&secret, *seed)?;
            let map = shares.to_map();
            let mut pretty = String::new();
            for (i, v) in &map {
                let _ = writeln!(pretty, "participant {i}: {v}");
            }
            Ok(Output::ok(json!(map), pretty.trim_end().to_string()))
        }
        Cmd::Reconstruct { code, l, shares } => {
            let s = scheme_for(code, *l, cli.cap)?;
            let share_map = parse_shares(shares)?;
            let group: Vec<usize> = share_map.keys().copied().collect();
            match s.reconstruct(&group, &share_map)? {
                Reconstruction::Secret(secret) => Ok(Output::ok(
                    json!({"authorized": true, "secret": secret}),
                    format!(
                        "secret: {}",
                        secret
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    ),
                )),
                Reconstruction::NotAuthorized => Ok(Output::ok(
                    json!({"authorized": false, "secret": Value::Null}),
                    "not authorized".to_string(),
                )),
            }
        }
        Cmd::Classify { code, l, group } => {
            let s = scheme_for(code, *l, cli.cap)?;
            let group: Vec<usize> = parse_csv::<usize>(group)?;
            let c = access::classify_span(&s, &group)?;
            let dual_full = access::classify_dual(&s, &group)?;
            Ok(Output::ok(
                json!({
                    "kind": format!("{:?}", c.kind),
                    "leaked_dim": c.leaked_dim,
                    "dual_full": dual_full,
                }),
                format!("{:?} (leaked dimension {})", c.kind, c.leaked_dim),
            ))
        }
        Cmd::Access {
            code,
            l,
            max_size,
            skip_ghw,
        } => {
            let s = scheme_for(code, *l, cli.cap)?;
            let opts = AccessOpts {
                cap: cli.cap,
                max_size: *max_size,
                threads: cli.threads,
                skip_ghw_bound: *skip_ghw,
            };
            let report = access::enumerate_access_structure(&s, &opts)?;
            let mut pretty = String::new();
            let _ = writeln!(pretty, "minimal access groups:");
            for g in &report.minimal_groups {
                let _ = writeln!(
                    pretty,
                    "  {{{}}}",
                    g.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                );
            }
            let _ = writeln!(pretty, "groups by size: {:?}", report.histogram);
            let _ = write!(pretty, "bounds: {}", bounds_pretty(&report.bounds));
            Ok(Output::ok(
                serde_json::to_value(&report).expect("serializable"),
                pretty,
            ))
        }
        Cmd::Bounds { code, l, skip_ghw } => {
            let s = scheme_for(code, *l, cli.cap)?;
            let b = access::bounds(&s, cli.cap, *skip_ghw)?;
            Ok(Output::ok(
                serde_json::to_value(&b).expect("serializable"),
                bounds_pretty(&b),
            ))
        }
        Cmd::Jwe { codes } => {
            let loaded: Vec<LinearCode> = codes
                .iter()
                .map(|c| catalog::load_code_ref(c))
                .collect::<Result<_>>()?;
            let args: Vec<JweArg> = loaded.iter().map(JweArg::Code).collect();
            let p = enumpoly::joint_weight_enumerator(&args, &enum_opts)?;
            Ok(Output::ok(p.to_json(), p.to_string()))
        }
        Cmd::Z { code, l } => {
            let scheme_code = code.load()?;
            let p = enumpoly::secret_coefficient(&scheme_code, *l, &enum_opts)?;
            Ok(Output::ok(p.to_json(), p.to_string()))
        }
        Cmd::Count { code, l, m } => {
            let scheme_code = code.load()?;
            let d_perp = scheme_code.dual()?.min_distance(cli.cap)?;
            let p = enumpoly::secret_coefficient(&scheme_code, *l, &enum_opts)?;
            let (bound, exact) = enumpoly::count_bound(&p, *m, d_perp);
            Ok(Output::ok(
                json!({"m": m, "bound": bound.to_string(), "exact": exact, "d_dual": d_perp}),
                format!(
                    "size-{m} access groups: {bound}{}",
                    if exact { " (exact)" } else { " (upper bound)" }
                ),
            ))
        }
        Cmd::Extenum { code } => {
            let d = code.load()?;
            let ext = enumpoly::extension_enumerator(&d, cli.cap)?;
            Ok(Output::ok(ext.to_json(), ext.to_string()))
        }
        Cmd::VerifyCount { code, l, m } => {
            let scheme_code = code.load()?;
            let s = SchemeInstance::with_cap(scheme_code, *l, cli.cap)?;
            let (count, certified) = enumpoly::verify_exact_count(&s, *m, &enum_opts)?;
            Ok(Output::ok(
                json!({"m": m, "count": count, "certified": certified}),
                format!(
                    "size-{m} access groups: {count}{}",
                    if certified {
                        " (certified exact)"
                    } else {
                        " (certificate failed; count is of distinct unions)"
                    }
                ),
            ))
        }
        Cmd::DeriveZ { code } => {
            let c = code.load()?;
            let n = c.len();
            let bw =
                enumpoly::joint_weight_enumerator(&[JweArg::Code(&c), JweArg::Code(&c)], &enum_opts)?;
            let z = enumpoly::derivative_z(&bw, n)?;
            Ok(Output::ok(z.to_json(), z.to_string()))
        }
        Cmd::Reproduce { target } => reproduce_cmd(target, &enum_opts),
    }
}

fn catalog_list() -> Result<Output> {
    let mut entries = Vec::new();
    let mut pretty = String::new();
    for name in catalog::names() {
        let e = catalog::load(name)?;
        entries.push(json!({
            "name": e.name,
            "length": e.code.len(),
            "dimension": e.code.dim(),
            "field_order": e.code.field().order(),
            "self_dual": e.self_dual,
            "self_orthogonal": e.self_orthogonal,
            "two_transitive": e.two_transitive,
            "provenance": e.provenance,
        }));
        let _ = writeln!(
            pretty,
            "{:<12} [{},{}] over GF({}){}  {}",
            e.name,
            e.code.len(),
            e.code.dim(),
            e.code.field().order(),
            if e.self_dual { "  self-dual" } else { "" },
            e.provenance
        );
    }
    Ok(Output::ok(
        json!({ "entries": entries }),
        pretty.trim_end().to_string(),
    ))
}

fn reproduce_cmd(target: &str, opts: &EnumOpts) -> Result<Output> {
    let targets: Vec<Target> = if target == "all" {
        Target::all().to_vec()
    } else {
        match Target::parse(target) {
            Some(t) => vec![t],
            None => {
                return Err(Error::UnknownCatalogEntry(format!(
                    "reproduce target `{target}` (expected one of example1, example2, hamming-z, golay-z, golay-m10, golay-m12, all)"
                )))
            }
        }
    };
    let mut reports = Vec::new();
    let mut pretty = String::new();
    let mut all_passed = true;
    for t in targets {
        let r = reproduce::run(t, opts)?;
        all_passed &= r.passed;
        let _ = writeln!(
            pretty,
            "{} {} ({} ms)",
            if r.passed { "PASS" } else { "FAIL" },
            r.target,
            r.elapsed_ms
        );
        for c in &r.checks {
            let _ = writeln!(
                pretty,
                "  {} {}: expected {}, got {}",
                if c.pass { "ok" } else { "MISMATCH" },
                c.name,
                c.expected,
                c.actual
            );
        }
        reports.push(serde_json::to_value(&r).expect("serializable"));
    }
    Ok(Output {
        json: if reports.len() == 1 {
            reports.pop().expect("one report")
        } else {
            json!({"passed": all_passed, "reports": reports})
        },
        pretty: pretty.trim_end().to_string(),
        status: i32::from(!all_passed),
    })
}

fn scheme_for(code: &CodeArg, l: usize, cap: u64) -> Result<SchemeInstance> {
    SchemeInstance::with_cap(code.load()?, l, cap)
}

fn bounds_pretty(b: &access::BoundsRecord) -> String {
    format!(
        "no-info <= {}, not-access <= {} (hierarchy) / {} (simple), recovery >= {}",
        b.noinfo_bound,
        b.ghw_bound.map_or("n/a".into(), |v| v.to_string()),
        b.simple_bound.map_or("n/a".into(), |v| v.to_string()),
        b.recover_threshold
    )
}

fn parse_csv<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<T>().map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad list entry `{t}`"),
            })
        })
        .collect()
}

fn parse_shares(arg: &str) -> Result<BTreeMap<usize, u16>> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)?,
        None => arg.to_string(),
    };
    let raw: BTreeMap<String, u16> = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: 1,
        msg: format!("bad shares JSON: {e}"),
    })?;
    raw.into_iter()
        .map(|(k, v)| {
            k.parse::<usize>().map(|i| (i, v)).map_err(|_| Error::Parse {
                line: 1,
                msg: format!("bad participant index `{k}`"),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("masseyx".to_string())
            .chain(args.iter().map(|s| s.to_string()));
        let status = run(argv, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn run_json(args: &[&str]) -> Value {
        let (status, out, err) = run_cli(args);
        assert_eq!(status, 0, "stderr: {err}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn classify_partial_group() {
        let v = run_json(&["classify", "--code", "toy6", "--l", "2", "--group", "1"]);
        assert_eq!(v["kind"], "Partial");
        assert_eq!(v["leaked_dim"], 1);
        assert_eq!(v["dual_full"], false);
    }

    #[test]
    fn deal_and_reconstruct_round_trip() {
        let shares = run_json(&[
            "deal", "--code", "c1_ternary", "--dual", "--l", "2", "--secret", "1,2", "--seed",
            "9",
        ]);
        // feed all six shares back
        let v = run_json(&[
            "reconstruct",
            "--code",
            "c1_ternary",
            "--dual",
            "--l",
            "2",
            "--shares",
            &shares.to_string(),
        ]);
        assert_eq!(v["authorized"], true);
        assert_eq!(v["secret"], json!([1, 2]));
    }

    #[test]
    fn access_and_bounds_output() {
        let v = run_json(&["access", "--code", "c1_ternary", "--dual", "--l", "2"]);
        assert_eq!(v["histogram"]["5"], 4);
        assert_eq!(v["histogram"]["6"], 1);
        assert_eq!(v["bounds"]["ghw_bound"], 4);
        let b = run_json(&["bounds", "--code", "golay24", "--l", "2"]);
        assert_eq!(b["recover_threshold"], 17);
        assert_eq!(b["simple_bound"], 8);
    }

    #[test]
    fn z_and_count_commands() {
        let v = run_json(&["z", "--code", "hamming8", "--l", "2"]);
        assert_eq!(v["g"], 2);
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        let c = run_json(&["count", "--code", "hamming8", "--l", "2", "--m", "4"]);
        assert_eq!(c["bound"], "12");
        assert_eq!(c["exact"], true);
    }

    #[test]
    fn extenum_and_derive_z() {
        let (status, out, _) = run_cli(&["extenum", "--code", "hamming8", "--format", "pretty"]);
        assert_eq!(status, 0);
        assert!(out.contains("t^"));
        let z = run_json(&["derive-z", "--code", "hamming8"]);
        let direct = run_json(&["z", "--code", "hamming8", "--l", "2"]);
        assert_eq!(z, direct);
    }

    #[test]
    fn jwe_accepts_files_and_catalog_names() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rep.code");
        std::fs::write(&path, "field 2 1\ncode 4 1\n1 1 1 1\n").unwrap();
        let v = run_json(&["jwe", path.to_str().unwrap()]);
        assert_eq!(v["terms"].as_array().unwrap().len(), 2);
        let v = run_json(&["jwe", "hamming8", "hamming8"]);
        assert_eq!(v["terms"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn reproduce_small_targets() {
        let v = run_json(&["reproduce", "example1"]);
        assert_eq!(v["passed"], true);
        let (status, _, _) = run_cli(&["reproduce", "example2"]);
        assert_eq!(status, 0);
    }

    #[test]
    fn exit_codes() {
        let (status, _, err) = run_cli(&["frobnicate"]);
        assert_eq!(status, 2, "usage errors exit 2");
        assert!(!err.is_empty());
        // d = 4 is not > l = 4: computation error
        let (status, _, err) = run_cli(&["deal", "--code", "hamming8", "--l", "4", "--secret", "1,0,0,1"]);
        assert_eq!(status, 1);
        assert!(err.contains("must exceed"));
        let (status, out, _) = run_cli(&["--help"]);
        assert_eq!(status, 0);
        assert!(out.contains("masseyx"));
        let (status, _, err) = run_cli(&["reproduce", "bogus"]);
        assert_eq!(status, 1);
        assert!(err.contains("reproduce target"));
    }

    #[test]
    fn catalog_list_shape() {
        let v = run_json(&["catalog", "list"]);
        let entries = v["entries"].as_array().unwrap();
        assert_eq!(entries.len(), 4);
        assert!(entries.iter().any(|e| e["name"] == "golay24"
            && e["self_dual"] == true
            && e["two_transitive"] == true));
    }

    #[test]
    fn shares_from_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("shares.json");
        let shares = run_json(&["deal", "--code", "toy6", "--l", "2", "--secret", "1,1"]);
        std::fs::write(&path, shares.to_string()).unwrap();
        let v = run_json(&[
            "reconstruct",
            "--code",
            "toy6",
            "--l",
            "2",
            "--shares",
            &format!("@{}", path.display()),
        ]);
        assert_eq!(v["secret"], json!([1, 1]));
    }

    #[test]
    fn not_authorized_is_a_valid_outcome() {
        let v = run_json(&[
            "reconstruct",
            "--code",
            "toy6",
            "--l",
            "2",
            "--shares",
            r#"{"1": 0}"#,
        ]);
        assert_eq!(v["authorized"], false);
    }
}
