//! Group classification and access-structure enumeration.
//!
//! A group of participants is classified by the span criterion (ranks of
//! generator column sets) or, equivalently, through the dual code: the group
//! can recover the secret iff for every `j` there is a dual codeword with
//! prefix `e_j` supported inside `{j}` plus the group's share coordinates.
//! The access structure is enumerated from tuples `(v_1, .., v_l)` of such
//! dual words; each tuple's union support (minus the prefix) is an access
//! group, and the report counts the distinct unions by size.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::code::{mask_of, LinearCode, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{add_scaled, Mat};
use crate::scheme::SchemeInstance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    Full,
    Partial,
    None,
}

/// Span-criterion classification: `leaked_dim` is the dimension of the
/// intersection of the secret-column span with the group's column span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GroupClassification {
    pub kind: GroupKind,
    pub leaked_dim: usize,
}

/// Non-access guarantees and the recovery threshold (participant counts;
/// negative values mean the bound is vacuous).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRecord {
    /// `d_l(dual) - l - 1`; `None` when the weight-hierarchy computation was
    /// skipped or exceeds the cap.
    pub ghw_bound: Option<i64>,
    /// `ceil(3/2 (d_dual - l)) - 1`; defined for `l >= 2`.
    pub simple_bound: Option<i64>,
    /// `d_dual - l - 1`: groups this small have no information.
    pub noinfo_bound: i64,
    /// `n + l - d + 1`: groups this large always recover.
    pub recover_threshold: i64,
}

/// Enumeration budget and reporting options.
#[derive(Clone, Copy, Debug)]
pub struct AccessOpts {
    pub cap: u64,
    /// Ignore tuple unions larger than this (the full Golay structure is
    /// huge; the reference computations only need sizes up to 12).
    pub max_size: Option<usize>,
    pub threads: usize,
    pub skip_ghw_bound: bool,
}

impl Default for AccessOpts {
    fn default() -> Self {
        AccessOpts {
            cap: DEFAULT_CAP,
            max_size: None,
            threads: 1,
            skip_ghw_bound: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AccessReport {
    /// Minimal access groups, sorted by size then lexicographically.
    pub minimal_groups: Vec<Vec<usize>>,
    /// Distinct tuple-support unions by size.
    pub histogram: BTreeMap<usize, u64>,
    pub bounds: BoundsRecord,
}

/// Classifies `group` by ranks of generator columns.
pub fn classify_span(s: &SchemeInstance, group: &[usize]) -> Result<GroupClassification> {
    let members = s.validate_group(group)?;
    let l = s.secret_len();
    let f = s.code().field();
    let share_cols: Vec<usize> = members.iter().map(|&i| l + i - 1).collect();
    let gen = s.code().gen_mat();
    let r_b = gen.select_cols(&share_cols).rank(f);
    let mut all_cols: Vec<usize> = (0..l).collect();
    all_cols.extend(&share_cols);
    let r_u = gen.select_cols(&all_cols).rank(f);
    // dim(span_secret ∩ span_group) = l + r_b - r_u
    let leaked_dim = l + r_b - r_u;
    let kind = if r_u == r_b {
        GroupKind::Full
    } else if leaked_dim == 0 {
        GroupKind::None
    } else {
        GroupKind::Partial
    };
    Ok(GroupClassification { kind, leaked_dim })
}

/// Dual-code classification: `true` iff the group can recover the secret.
pub fn classify_dual(s: &SchemeInstance, group: &[usize]) -> Result<bool> {
    Ok(dual_witnesses(s, &s.validate_group(group)?)?.is_some())
}

/// For an authorized group, one dual codeword per `j` with prefix `e_j` and
/// support inside `{j}` plus the group's share coordinates. `None` when the
/// group is not authorized. `members` must be validated (sorted 1-based).
pub(crate) fn dual_witnesses(
    s: &SchemeInstance,
    members: &[usize],
) -> Result<Option<Vec<Vec<u16>>>> {
    let l = s.secret_len();
    let f = s.code().field();
    let h = s.dual_code().gen_mat();
    let in_group: Vec<bool> = {
        let mut v = vec![false; s.code().len()];
        for &i in members {
            v[l + i - 1] = true;
        }
        v
    };
    let mut witnesses = Vec::with_capacity(l);
    for j in 0..l {
        // Constrain every coordinate outside {j} ∪ shares(group) to zero and
        // coordinate j to one, over combinations x of dual generator rows.
        let mut rows: Vec<Vec<u16>> = Vec::new();
        let mut rhs: Vec<u16> = Vec::new();
        for t in 0..s.code().len() {
            let constrained = if t == j {
                true
            } else if t < l {
                true // other prefix coordinates must vanish
            } else {
                !in_group[t]
            };
            if !constrained {
                continue;
            }
            rows.push((0..h.rows).map(|r| h.at(r, t)).collect());
            rhs.push(if t == j { 1 } else { 0 });
        }
        let a = Mat::from_rows(rows);
        match a.solve(f, &rhs) {
            None => return Ok(None),
            Some(x) => {
                let mut v = vec![0u16; s.code().len()];
                for (r, &coeff) in x.iter().enumerate() {
                    add_scaled(f, &mut v, h.row(r), coeff);
                }
                witnesses.push(v);
            }
        }
    }
    Ok(Some(witnesses))
}

/// The affine tuple spaces of the access characterization: for each `j`, the
/// dual codewords with prefix exactly `e_j` form `p_j + K` where `K` is the
/// prefix-zero subcode of the dual.
#[derive(Clone, Debug)]
pub(crate) struct TupleSpace {
    pub l: usize,
    pub n_total: usize,
    particular: Vec<Vec<u16>>,
    kernel_words: Vec<Vec<u16>>,
    pub per_j_count: u64,
}

impl TupleSpace {
    /// `Ok(None)` when some unit prefix is unreachable (empty access
    /// structure, e.g. the dual is trivial).
    pub fn build(code: &LinearCode, l: usize, cap: u64) -> Result<Option<TupleSpace>> {
        let f = code.field();
        let n_total = code.len();
        if l == 0 || l >= n_total {
            return Err(Error::SecretLengthOutOfRange { l, n: n_total });
        }
        if code.dim() == n_total {
            return Ok(None); // dual is the zero code
        }
        let dual = code.dual()?;
        let h = dual.gen_mat();
        // prefix map: x -> first l coordinates of x . H
        let prefix = Mat::from_rows(
            (0..l)
                .map(|j| (0..h.rows).map(|r| h.at(r, j)).collect())
                .collect(),
        );
        let kernel = prefix.kernel(f);
        let q = f.order() as u64;
        let per_j_count = q
            .checked_pow(kernel.rows as u32)
            .filter(|&c| c <= cap)
            .ok_or_else(|| Error::SizeExceeded {
                size: format!("{q}^{}", kernel.rows),
                cap,
            })?;
        let mut particular = Vec::with_capacity(l);
        for j in 0..l {
            let mut e_j = vec![0u16; l];
            e_j[j] = 1;
            let Some(x) = prefix.solve(f, &e_j) else {
                return Ok(None);
            };
            let mut w = vec![0u16; n_total];
            for (r, &coeff) in x.iter().enumerate() {
                add_scaled(f, &mut w, h.row(r), coeff);
            }
            particular.push(w);
        }
        let kernel_words: Vec<Vec<u16>> = (0..kernel.rows)
            .map(|r| {
                let mut w = vec![0u16; n_total];
                for (i, &coeff) in kernel.row(r).iter().enumerate() {
                    add_scaled(f, &mut w, h.row(i), coeff);
                }
                w
            })
            .collect();
        Ok(Some(TupleSpace {
            l,
            n_total,
            particular,
            kernel_words,
            per_j_count,
        }))
    }

    /// All words with prefix `e_j` (1-based `j`), as coordinate vectors.
    pub fn words_for_j(&self, f: &FieldSpec, j: usize) -> Vec<Vec<u16>> {
        let q = f.order() as u16;
        let kdim = self.kernel_words.len();
        let mut out = Vec::with_capacity(self.per_j_count as usize);
        let mut coeffs = vec![0u16; kdim];
        let mut cur = self.particular[j - 1].clone();
        out.push(cur.clone());
        'outer: loop {
            let mut i = kdim;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                // as in CodewordIter: step by the encoding difference
                let old = coeffs[i];
                let new = if old + 1 == q { 0 } else { old + 1 };
                coeffs[i] = new;
                add_scaled(f, &mut cur, &self.kernel_words[i], f.sub(new, old));
                if new != 0 {
                    break;
                }
            }
            out.push(cur.clone());
        }
        out
    }

    /// Support masks of [`Self::words_for_j`]; needs `n_total <= 128`.
    pub fn masks_for_j(&self, f: &FieldSpec, j: usize) -> Result<Vec<u128>> {
        if self.n_total > 128 {
            return Err(Error::SupportTooWide);
        }
        Ok(self
            .words_for_j(f, j)
            .into_iter()
            .map(|w| mask_of(&w))
            .collect())
    }

    pub fn total_tuples(&self, cap: u64) -> Result<u64> {
        (0..self.l)
            .try_fold(1u64, |acc, _| acc.checked_mul(self.per_j_count))
            .filter(|&t| t <= cap)
            .ok_or_else(|| Error::SizeExceeded {
                size: format!("{}^{}", self.per_j_count, self.l),
                cap,
            })
    }
}

/// Distinct tuple-support unions as participant bitmasks (bit `i-1` for
/// participant `i`), via direct tuple enumeration.
fn unions_by_tuples(
    s: &SchemeInstance,
    ts: &TupleSpace,
    opts: &AccessOpts,
) -> Result<HashSet<u128>> {
    let f = s.code().field();
    let l = s.secret_len();
    let masks: Vec<Vec<u128>> = (1..=l)
        .map(|j| ts.masks_for_j(f, j))
        .collect::<Result<_>>()?;
    let keep = |u: u128| opts.max_size.map_or(true, |m| u.count_ones() as usize <= m);

    if l == 1 {
        return Ok(masks[0]
            .iter()
            .map(|&a| a >> l)
            .filter(|&u| keep(u))
            .collect());
    }

    let work = |first: &[u128]| {
        let mut local: HashSet<u128> = HashSet::new();
        let mut stack = vec![0u128; l];
        for &a in first {
            stack[0] = a;
            union_rec(&masks, 1, a, &mut stack, &mut |mask| {
                let u = mask >> l;
                if keep(u) {
                    local.insert(u);
                }
            });
        }
        local
    };

    if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        let chunk = masks[0].len().div_ceil(opts.threads).max(1);
        let parts: Vec<HashSet<u128>> = pool.install(|| {
            use rayon::prelude::*;
            masks[0].par_chunks(chunk).map(work).collect()
        });
        let mut out = HashSet::new();
        for p in parts {
            out.extend(p);
        }
        Ok(out)
    } else {
        Ok(work(&masks[0]))
    }
}

fn union_rec(
    masks: &[Vec<u128>],
    depth: usize,
    acc: u128,
    stack: &mut Vec<u128>,
    sink: &mut impl FnMut(u128),
) {
    if depth == masks.len() {
        sink(acc);
        return;
    }
    for &m in &masks[depth] {
        union_rec(masks, depth + 1, acc | m, stack, sink);
    }
}

/// Same set of unions through the subset lattice: count tuples with union
/// inside each subset, then Möbius-invert to get exact-union counts. Used
/// when the subset lattice is smaller than the tuple space, and as an
/// independent oracle in tests.
fn unions_by_lattice(s: &SchemeInstance, opts: &AccessOpts) -> Result<HashSet<u128>> {
    let n = s.participants();
    if n > 24 {
        return Err(Error::SizeExceeded {
            size: format!("2^{n}"),
            cap: opts.cap,
        });
    }
    let f = s.code().field();
    let l = s.secret_len();
    let h = s.dual_code().gen_mat();
    let q = f.order() as u128;

    // T[U] = number of tuples supported inside U = q^(l * dim ker_U) when
    // every unit prefix is reachable under U, else 0.
    let mut t = vec![0i128; 1usize << n];
    for (u, tu) in t.iter_mut().enumerate() {
        // rows: prefix coordinates, then every share coordinate outside U
        let mut rows: Vec<Vec<u16>> = Vec::new();
        for tcoord in 0..s.code().len() {
            let constrained = if tcoord < l {
                true
            } else {
                u >> (tcoord - l) & 1 == 0
            };
            if constrained {
                rows.push((0..h.rows).map(|r| h.at(r, tcoord)).collect());
            }
        }
        let a = Mat::from_rows(rows);
        let kernel_dim = h.rows - a.rank(f);
        let mut reachable = true;
        for j in 0..l {
            let mut rhs = vec![0u16; a.rows];
            rhs[j] = 1;
            if a.solve(f, &rhs).is_none() {
                reachable = false;
                break;
            }
        }
        if reachable {
            let count = q
                .checked_pow((kernel_dim * l) as u32)
                .filter(|&c| c <= i128::MAX as u128)
                .ok_or_else(|| Error::SizeExceeded {
                    size: format!("{q}^{}", kernel_dim * l),
                    cap: opts.cap,
                })?;
            *tu = count as i128;
        }
    }
    // subset Möbius transform: E[U] = sum_{V ⊆ U} (-1)^{|U\V|} T[V]
    for b in 0..n {
        for u in 0..1usize << n {
            if u >> b & 1 == 1 {
                t[u] -= t[u ^ (1 << b)];
            }
        }
    }
    Ok((0..1usize << n)
        .filter(|&u| t[u] > 0)
        .filter(|&u| {
            opts.max_size
                .map_or(true, |m| (u.count_ones() as usize) <= m)
        })
        .map(|u| u as u128)
        .collect())
}

fn group_of_mask(mask: u128) -> Vec<usize> {
    (0..128)
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// Enumerates the access structure: distinct tuple-support unions, their
/// minimal elements, a size histogram, and the bounds record.
pub fn enumerate_access_structure(s: &SchemeInstance, opts: &AccessOpts) -> Result<AccessReport> {
    let unions = enumerate_unions(s, opts)?;
    let mut sorted: Vec<u128> = unions.into_iter().collect();
    sorted.sort_by_key(|&m| (m.count_ones(), group_of_mask(m)));

    let mut histogram: BTreeMap<usize, u64> = BTreeMap::new();
    for &m in &sorted {
        *histogram.entry(m.count_ones() as usize).or_insert(0) += 1;
    }
    let mut minimal_masks: Vec<u128> = Vec::new();
    for &m in &sorted {
        if !minimal_masks.iter().any(|&p| p & m == p) {
            minimal_masks.push(m);
        }
    }
    Ok(AccessReport {
        minimal_groups: minimal_masks.into_iter().map(group_of_mask).collect(),
        histogram,
        bounds: bounds(s, opts.cap, opts.skip_ghw_bound)?,
    })
}

/// Distinct union masks, picking the cheaper backend.
pub(crate) fn enumerate_unions(s: &SchemeInstance, opts: &AccessOpts) -> Result<HashSet<u128>> {
    let ts = TupleSpace::build(s.code(), s.secret_len(), opts.cap)?;
    let n = s.participants();
    match ts {
        None => Ok(HashSet::new()),
        Some(ts) => match ts.total_tuples(opts.cap) {
            Ok(total) if n > 24 || (1u128 << n) >= total as u128 => unions_by_tuples(s, &ts, opts),
            Ok(_) => unions_by_lattice(s, opts),
            Err(e) => {
                if n <= 24 {
                    unions_by_lattice(s, opts)
                } else {
                    Err(e)
                }
            }
        },
    }
}

/// The four size bounds. A cap overflow in the weight-hierarchy computation
/// only clears `ghw_bound`; other errors propagate.
pub fn bounds(s: &SchemeInstance, cap: u64, skip_ghw: bool) -> Result<BoundsRecord> {
    let l = s.secret_len() as i64;
    let dual = s.dual_code();
    let d_perp = dual.min_distance(cap)? as i64;
    let ghw_bound = if skip_ghw {
        None
    } else {
        match dual.generalized_hamming_weight(s.secret_len(), cap) {
            Ok(dl) => Some(dl as i64 - l - 1),
            Err(Error::SizeExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    let simple_bound = if l >= 2 {
        // ceil(3(d_perp - l)/2) - 1
        let x = 3 * (d_perp - l);
        Some(x.div_euclid(2) + i64::from(x.rem_euclid(2) != 0) - 1)
    } else {
        None
    };
    Ok(BoundsRecord {
        ghw_bound,
        simple_bound,
        noinfo_bound: d_perp - l - 1,
        recover_threshold: s.participants() as i64 + l - s.min_distance() as i64 + 1,
    })
}

/// For a binary self-dual scheme code with `l = 2`: checks that every
/// minimal access group (optionally only those of size `<= max_size`) has
/// even size. `false` signals an implementation bug, not a property of the
/// code.
pub fn check_even_minimal_groups(s: &SchemeInstance, opts: &AccessOpts) -> Result<bool> {
    if !s.code().field().is_binary() || !s.code().is_self_dual() || s.secret_len() != 2 {
        return Err(Error::ParityCheckPrecondition);
    }
    let report = enumerate_access_structure(s, opts)?;
    Ok(report.minimal_groups.iter().all(|g| g.len() % 2 == 0))
}
