//! Acceptance suite: every reference quantity the library must reproduce,
//! one test per criterion, each printing a PASS line with its runtime
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use masseyx::access::{self, AccessOpts, GroupKind};
use masseyx::catalog;
use masseyx::code::{LinearCode, DEFAULT_CAP};
use masseyx::enumpoly::{self, EnumOpts, JweArg, SparseEnumerator};
use masseyx::reproduce::{self, Target};
use masseyx::scheme::{Reconstruction, SchemeInstance};

fn finish(criterion: &str, t0: Instant, budget: Duration) {
    let elapsed = t0.elapsed();
    println!("{criterion}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its time budget: {elapsed:.2?} >= {budget:.2?}"
    );
}

fn example1_scheme() -> SchemeInstance {
    let c1 = catalog::load("c1_ternary").unwrap().code;
    SchemeInstance::new(c1.dual().unwrap(), 2).unwrap()
}

fn hamming_scheme(l: usize) -> SchemeInstance {
    SchemeInstance::new(catalog::load("hamming8").unwrap().code, l).unwrap()
}

fn toy_scheme() -> SchemeInstance {
    SchemeInstance::new(catalog::load("toy6").unwrap().code, 2).unwrap()
}

fn golay_scheme() -> SchemeInstance {
    SchemeInstance::new(catalog::load("golay24").unwrap().code, 2).unwrap()
}

/// The small schemes whose subset lattices are fully enumerable.
fn exhaustive_schemes() -> Vec<(&'static str, SchemeInstance)> {
    vec![
        ("toy6 l=2", toy_scheme()),
        ("example1 l=2", example1_scheme()),
        ("hamming8 l=2", hamming_scheme(2)),
        ("hamming8 l=3", hamming_scheme(3)),
    ]
}

fn subsets_of(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    })
}

/// Deterministic random `size`-subsets of `1..=n`.
fn sample_subset(rng: &mut ChaCha8Rng, n: usize, size: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (1..=n).collect();
    for i in 0..size {
        let j = i + (rng.next_u32() as usize) % (n - i);
        pool.swap(i, j);
    }
    let mut s: Vec<usize> = pool[..size].to_vec();
    s.sort_unstable();
    s
}

fn test_secrets(l: usize, q: u32) -> Vec<Vec<u16>> {
    (0..5)
        .map(|i| {
            (0..l)
                .map(|j| ((i * 3 + j * 5 + 1) as u32 % q) as u16)
                .collect()
        })
        .collect()
}

#[test]
fn criterion_01_example1_access_structure() {
    let t0 = Instant::now();
    let report = reproduce::run(Target::Example1, &EnumOpts::default()).unwrap();
    assert!(report.passed, "{:?}", report.checks);
    let r = access::enumerate_access_structure(&example1_scheme(), &AccessOpts::default()).unwrap();
    assert_eq!(r.histogram, BTreeMap::from([(5, 4), (6, 1)]));
    finish("criterion 01 example1 {5:4, 6:1}", t0, Duration::from_secs(1));
}

#[test]
fn criterion_02_example2_access_structure() {
    let t0 = Instant::now();
    let report = reproduce::run(Target::Example2, &EnumOpts::default()).unwrap();
    assert!(report.passed, "{:?}", report.checks);
    let r = access::enumerate_access_structure(&hamming_scheme(3), &AccessOpts::default()).unwrap();
    assert_eq!(r.histogram, BTreeMap::from([(4, 4), (5, 1)]));
    finish("criterion 02 example2 {4:4, 5:1}", t0, Duration::from_secs(1));
}

#[test]
fn criterion_03_hamming_biweight() {
    let t0 = Instant::now();
    let ham = catalog::load("hamming8").unwrap().code;
    let bw =
        enumpoly::joint_weight_enumerator(&[JweArg::Code(&ham), JweArg::Code(&ham)], &EnumOpts::default())
            .unwrap();
    assert_eq!(bw, reproduce::hamming_biweight());
    assert_eq!(bw.term_count(), 11);
    assert_eq!(bw.coefficient(&[2, 2, 2, 2]), BigUint::from(168u32));
    finish("criterion 03 hamming biweight (11 terms)", t0, Duration::from_secs(1));
}

#[test]
fn criterion_04_hamming_z_and_count() {
    let t0 = Instant::now();
    let report = reproduce::run(Target::HammingZ, &EnumOpts::default()).unwrap();
    assert!(report.passed, "{:?}", report.checks);
    finish("criterion 04 hamming Z and count(4) = 12 exact", t0, Duration::from_secs(1));
}

#[test]
fn criterion_05_golay_z_and_certified_counts() {
    let t0 = Instant::now();
    let golay = catalog::load("golay24").unwrap().code;
    let z = enumpoly::secret_coefficient(&golay, 2, &EnumOpts::default()).unwrap();
    assert_eq!(z, reproduce::golay_z(), "all 28 monomials, coefficient-exact");
    let z_elapsed = t0.elapsed();
    assert!(z_elapsed < Duration::from_secs(30), "Z took {z_elapsed:.2?}");

    let (b10, exact10) = enumpoly::count_bound(&z, 10, 8);
    assert_eq!((b10, exact10), (BigUint::from(6160u32), true));

    let t1 = Instant::now();
    let (count12, certified12) =
        enumpoly::verify_exact_count(&golay_scheme(), 12, &EnumOpts::default()).unwrap();
    assert_eq!((count12, certified12), (36960, true));
    let m12_elapsed = t1.elapsed();
    assert!(m12_elapsed < Duration::from_secs(300), "m=12 took {m12_elapsed:.2?}");
    println!(
        "criterion 05 golay Z (28 terms, {z_elapsed:.2?}), count(10) = 6160 exact, \
         verify(12) = 36960 certified ({m12_elapsed:.2?}): PASS"
    );
}

#[test]
fn criterion_06_derivative_equals_z() {
    let t0 = Instant::now();
    let opts = EnumOpts::default();
    let ham = catalog::load("hamming8").unwrap().code;
    let bw_h =
        enumpoly::joint_weight_enumerator(&[JweArg::Code(&ham), JweArg::Code(&ham)], &opts).unwrap();
    assert_eq!(
        enumpoly::derivative_z(&bw_h, 8).unwrap(),
        enumpoly::secret_coefficient(&ham, 2, &opts).unwrap()
    );

    let golay = catalog::load("golay24").unwrap().code;
    let t1 = Instant::now();
    let bw_g =
        enumpoly::joint_weight_enumerator(&[JweArg::Code(&golay), JweArg::Code(&golay)], &opts)
            .unwrap();
    let bw_elapsed = t1.elapsed();
    assert!(bw_elapsed < Duration::from_secs(120), "biweight took {bw_elapsed:.2?}");
    assert_eq!(
        enumpoly::derivative_z(&bw_g, 24).unwrap(),
        reproduce::golay_z(),
        "derivative of the 4096^2-pair biweight equals Z term-for-term"
    );
    finish(
        &format!("criterion 06 derivative = Z for hamming8 and golay24 (biweight {bw_elapsed:.2?})"),
        t0,
        Duration::from_secs(150),
    );
}

#[test]
fn criterion_07_bound_soundness() {
    let t0 = Instant::now();
    for (name, s) in exhaustive_schemes() {
        let b = access::bounds(&s, DEFAULT_CAP, false).unwrap();
        let not_access = b.ghw_bound.unwrap().max(b.simple_bound.unwrap());
        for group in subsets_of(s.participants()) {
            let size = group.len() as i64;
            let c = access::classify_span(&s, &group).unwrap();
            if size <= not_access {
                assert_ne!(c.kind, GroupKind::Full, "{name}: {group:?} within {not_access}");
            }
            if size >= b.recover_threshold {
                assert_eq!(c.kind, GroupKind::Full, "{name}: {group:?}");
            }
            if size <= b.noinfo_bound {
                assert_eq!(c.kind, GroupKind::None, "{name}: {group:?}");
            }
        }
    }

    // Golay: stratified sample, 50 groups of every size.
    let s = golay_scheme();
    let b = access::bounds(&s, DEFAULT_CAP, false).unwrap();
    assert_eq!((b.ghw_bound, b.simple_bound), (Some(9), Some(8)));
    assert_eq!((b.noinfo_bound, b.recover_threshold), (5, 17));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0u32;
    for size in 0..=s.participants() {
        for _ in 0..50 {
            let group = sample_subset(&mut rng, s.participants(), size);
            let c = access::classify_span(&s, &group).unwrap();
            if size as i64 <= 9 {
                assert_ne!(c.kind, GroupKind::Full, "golay {group:?}");
            }
            if size as i64 >= b.recover_threshold {
                assert_eq!(c.kind, GroupKind::Full, "golay {group:?}");
            }
            if size as i64 <= b.noinfo_bound {
                assert_eq!(c.kind, GroupKind::None, "golay {group:?}");
            }
            checked += 1;
        }
    }
    assert!(checked >= 1000);

    // No enumerated golay access group at m <= 12 undercuts the bound.
    let r = access::enumerate_access_structure(
        &s,
        &AccessOpts {
            max_size: Some(12),
            ..AccessOpts::default()
        },
    )
    .unwrap();
    assert!(r.histogram.keys().all(|&size| size as i64 > 9));
    finish("criterion 07 bound soundness (exhaustive small, 1150 golay samples)", t0, Duration::from_secs(120));
}

#[test]
fn criterion_08_classifier_equivalence() {
    let t0 = Instant::now();
    for (name, s) in exhaustive_schemes() {
        for group in subsets_of(s.participants()) {
            let span_full = access::classify_span(&s, &group).unwrap().kind == GroupKind::Full;
            let dual_full = access::classify_dual(&s, &group).unwrap();
            assert_eq!(span_full, dual_full, "{name}: {group:?}");
        }
    }
    let s = golay_scheme();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..1000 {
        let size = (rng.next_u32() as usize) % (s.participants() + 1);
        let group = sample_subset(&mut rng, s.participants(), size);
        let span_full = access::classify_span(&s, &group).unwrap().kind == GroupKind::Full;
        let dual_full = access::classify_dual(&s, &group).unwrap();
        assert_eq!(span_full, dual_full, "golay sample {i}: {group:?}");
    }
    finish("criterion 08 classifier equivalence (all small subsets + 1000 golay)", t0, Duration::from_secs(60));
}

#[test]
fn criterion_09_zero_knowledge_for_none_groups() {
    let t0 = Instant::now();
    for (name, s) in [("toy6", toy_scheme()), ("example1", example1_scheme())] {
        let code = s.code();
        let l = s.secret_len();
        let n = s.participants();
        let none_groups: Vec<Vec<usize>> = subsets_of(n)
            .filter(|g| access::classify_span(&s, g).unwrap().kind == GroupKind::None)
            .collect();
        assert!(!none_groups.is_empty());
        // codewords are exactly the dealings uG over all u
        let words: Vec<Vec<u16>> = code
            .enumerate_codewords(DEFAULT_CAP)
            .unwrap()
            .map(|w| w.into_coords())
            .collect();
        for group in &none_groups {
            let mut by_secret: BTreeMap<Vec<u16>, Vec<Vec<u16>>> = BTreeMap::new();
            for w in &words {
                let secret = w[..l].to_vec();
                let view: Vec<u16> = group.iter().map(|&i| w[l + i - 1]).collect();
                by_secret.entry(secret).or_default().push(view);
            }
            let q = code.field().order() as usize;
            assert_eq!(by_secret.len(), q.pow(l as u32));
            let mut distributions: Vec<Vec<Vec<u16>>> = by_secret.into_values().collect();
            for d in &mut distributions {
                d.sort();
            }
            for d in &distributions[1..] {
                assert_eq!(d, &distributions[0], "{name}: group {group:?} leaks");
            }
        }
    }
    finish("criterion 09 zero knowledge on every None-group (toy6, example1)", t0, Duration::from_secs(30));
}

#[test]
fn criterion_10_roundtrip_and_determinism() {
    let t0 = Instant::now();
    for (name, s) in exhaustive_schemes() {
        let q = s.code().field().order();
        let access_groups: Vec<Vec<usize>> = subsets_of(s.participants())
            .filter(|g| access::classify_span(&s, g).unwrap().kind == GroupKind::Full)
            .collect();
        for secret in test_secrets(s.secret_len(), q) {
            for seed in 0..10 {
                let sv = s.deal(&secret, seed).unwrap();
                assert_eq!(sv, s.deal(&secret, seed).unwrap(), "{name}: seed determinism");
                for group in &access_groups {
                    let shares: BTreeMap<usize, u16> =
                        group.iter().map(|&i| (i, sv.share(i))).collect();
                    assert_eq!(
                        s.reconstruct(group, &shares).unwrap(),
                        Reconstruction::Secret(secret.clone()),
                        "{name}: group {group:?}"
                    );
                }
            }
        }
    }

    // Golay: a deterministic sample of minimal access groups at m <= 12,
    // plus the full group.
    let s = golay_scheme();
    let r = access::enumerate_access_structure(
        &s,
        &AccessOpts {
            max_size: Some(12),
            skip_ghw_bound: true,
            ..AccessOpts::default()
        },
    )
    .unwrap();
    let step = (r.minimal_groups.len() / 200).max(1);
    let mut sample: Vec<Vec<usize>> = r.minimal_groups.iter().step_by(step).cloned().collect();
    sample.push((1..=s.participants()).collect());
    for secret in test_secrets(2, 2) {
        for seed in [1u64, 99] {
            let sv = s.deal(&secret, seed).unwrap();
            for group in &sample {
                let shares: BTreeMap<usize, u16> =
                    group.iter().map(|&i| (i, sv.share(i))).collect();
                assert_eq!(
                    s.reconstruct(group, &shares).unwrap(),
                    Reconstruction::Secret(secret.clone()),
                    "golay group {group:?}"
                );
            }
        }
    }
    finish(
        &format!(
            "criterion 10 roundtrip on all small access groups + {} golay groups, 10 seeds x 5 secrets",
            sample.len()
        ),
        t0,
        Duration::from_secs(240),
    );
}

#[test]
fn criterion_11_even_minimal_groups() {
    let t0 = Instant::now();
    let ham = hamming_scheme(2);
    assert!(access::check_even_minimal_groups(&ham, &AccessOpts::default()).unwrap());
    let r = access::enumerate_access_structure(&ham, &AccessOpts::default()).unwrap();
    assert!(r.minimal_groups.iter().all(|g| g.len() % 2 == 0));

    let golay = golay_scheme();
    let opts = AccessOpts {
        max_size: Some(12),
        skip_ghw_bound: true,
        ..AccessOpts::default()
    };
    assert!(access::check_even_minimal_groups(&golay, &opts).unwrap());
    let r = access::enumerate_access_structure(&golay, &opts).unwrap();
    assert_eq!(
        r.histogram.keys().copied().collect::<Vec<_>>(),
        vec![10, 12],
        "all golay access groups found at m <= 12"
    );
    finish("criterion 11 parity of minimal access groups (hamming8, golay24)", t0, Duration::from_secs(120));
}

/// Literal coefficient extraction from the full 2l-fold enumerator with
/// indicator-vector arguments: the independent route for Z.
fn literal_z_from_full_jwe(code: &LinearCode, l: usize) -> SparseEnumerator {
    let dual = code.dual().unwrap();
    let n = code.len();
    let indicators: Vec<Vec<u16>> = (0..l)
        .map(|j| {
            let mut v = vec![0u16; n];
            v[j] = 1;
            v
        })
        .collect();
    let mut args: Vec<JweArg> = indicators.iter().map(|v| JweArg::Vector(v)).collect();
    for _ in 0..l {
        args.push(JweArg::Code(&dual));
    }
    let full = enumpoly::joint_weight_enumerator(&args, &EnumOpts::default()).unwrap();

    // X2 variables: pattern (e_j, e_j), i.e. bit j set in both halves.
    let two_l = 2 * l;
    let x2: BTreeSet<usize> = (1..=l)
        .map(|j| (1usize << (two_l - j)) + (1usize << (l - j)))
        .collect();
    let vars_out = 1usize << l;
    let mut collected: Vec<(Vec<u16>, BigUint)> = Vec::new();
    'term: for (exp, coef) in full.terms() {
        let mut exps_out = vec![0u16; vars_out];
        for (idx, &e) in exp.iter().enumerate() {
            if idx < vars_out {
                // X1 variable: first half of the pattern is zero
                exps_out[idx] = e;
            } else if x2.contains(&idx) {
                if e != 1 {
                    continue 'term;
                }
            } else if e != 0 {
                continue 'term;
            }
        }
        collected.push((exps_out, coef.clone()));
    }
    SparseEnumerator::from_terms(l as u32, collected)
}

#[test]
fn criterion_12_oracle_equivalence_for_z() {
    let t0 = Instant::now();
    for (name, code, l) in [
        ("toy6", catalog::load("toy6").unwrap().code, 2usize),
        ("hamming8", catalog::load("hamming8").unwrap().code, 2),
    ] {
        let direct = enumpoly::secret_coefficient(&code, l, &EnumOpts::default()).unwrap();
        let literal = literal_z_from_full_jwe(&code, l);
        assert_eq!(direct, literal, "{name}");
        // sanity: the x_{10} x_5 coefficient route gives the reference Z
        if name == "hamming8" {
            assert_eq!(direct, reproduce::hamming_z());
        }
    }
    finish("criterion 12 Z equals the literal 2l-fold coefficient (toy6, hamming8)", t0, Duration::from_secs(30));
}

/// Theorem-level consistency: enumerated access-group counts never exceed
/// the polynomial bound, with equality whenever the bound is exact or the
/// extension-enumerator certificate holds.
#[test]
fn thm_inequality_between_enumeration_and_bound() {
    let t0 = Instant::now();
    for (name, s) in exhaustive_schemes() {
        let d_perp = s.dual_code().min_distance(DEFAULT_CAP).unwrap();
        let z = s.secret_coefficient(&EnumOpts::default()).unwrap();
        let r = access::enumerate_access_structure(&s, &AccessOpts::default()).unwrap();
        let max_m = s.participants();
        for m in 0..=max_m {
            let (bound, exact) = enumpoly::count_bound(&z, m, d_perp);
            let enumerated = BigUint::from(r.histogram.get(&m).copied().unwrap_or(0));
            assert!(enumerated <= bound, "{name}: m={m} {enumerated} > {bound}");
            if exact {
                assert_eq!(enumerated, bound, "{name}: m={m} must be exact");
            }
        }
    }
    finish("thm bound: enumerated counts <= polynomial bound, equal when exact", t0, Duration::from_secs(60));
}
