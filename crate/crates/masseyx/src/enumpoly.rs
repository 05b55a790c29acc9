//! Exact sparse polynomials over zero/nonzero pattern variables: g-fold
//! joint weight enumerators, the access-group counting polynomial Z, code
//! extension enumerators, and the 2-transitive derivative shortcut.
//!
//! Variable indexing is fixed once: the pattern vector `(a_1, .., a_g)` has
//! `a_j = 1` iff argument `j` is nonzero at a position, and is read as a
//! binary number with `a_1` most significant. For a pair of arguments the
//! variables are therefore `x_0` (both zero), `x_1` (second only), `x_2`
//! (first only), `x_3` (both nonzero).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::access::TupleSpace;
use crate::code::{mask_of, LinearCode, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scheme::SchemeInstance;

/// Enumeration budget and worker count for the heavy operations. Results
/// are identical for every thread count.
#[derive(Clone, Copy, Debug)]
pub struct EnumOpts {
    pub cap: u64,
    pub threads: usize,
}

impl Default for EnumOpts {
    fn default() -> Self {
        EnumOpts {
            cap: DEFAULT_CAP,
            threads: 1,
        }
    }
}

/// Exponent vector ordered graded-lexicographically (total degree first,
/// then entry-wise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact multivariate polynomial over `2^fold` pattern variables with
/// positive integer coefficients; the zero polynomial has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseEnumerator {
    fold: u32,
    terms: BTreeMap<Monomial, BigUint>,
}

impl SparseEnumerator {
    pub fn zero(fold: u32) -> Self {
        SparseEnumerator {
            fold,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I, C>(fold: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u16>, C)>,
        C: Into<BigUint>,
    {
        let mut out = Self::zero(fold);
        for (exp, coef) in terms {
            out.add_term(exp, coef.into());
        }
        out
    }

    pub fn fold(&self) -> u32 {
        self.fold
    }

    pub fn num_vars(&self) -> usize {
        1 << self.fold
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &BigUint)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn coefficient(&self, exp: &[u16]) -> BigUint {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Sum of all coefficients (evaluation at all-ones).
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub(crate) fn add_term(&mut self, exp: Vec<u16>, coef: BigUint) {
        debug_assert_eq!(exp.len(), self.num_vars());
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(Monomial(exp)).or_default();
        *entry += coef;
    }

    /// Substitutes variables along `merge` (old index -> new index) and
    /// recombines coefficients.
    pub fn specialize(&self, merge: &[usize]) -> Result<SparseEnumerator> {
        let vars = self.num_vars();
        if merge.len() != vars || merge.iter().any(|&t| t >= vars) {
            return Err(Error::BadMergeMap {
                expected: vars,
                got: merge.len(),
            });
        }
        let mut out = SparseEnumerator::zero(self.fold);
        for (m, c) in &self.terms {
            let mut exp = vec![0u16; vars];
            for (v, &e) in m.0.iter().enumerate() {
                exp[merge[v]] += e;
            }
            out.add_term(exp, c.clone());
        }
        Ok(out)
    }

    /// `{"g": fold, "terms": [{"exp": [..], "coef": "<decimal>"}, ..]}` in
    /// graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "g": self.fold,
            "terms": self
                .terms
                .iter()
                .map(|(m, c)| serde_json::json!({"exp": m.0, "coef": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for SparseEnumerator {
    /// Subscript notation, e.g. `4 x_1^3 x_2^3 + 12 x_0^2 x_1 x_2 x_3^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = BigUint::from(1u32);
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let constant = m.0.iter().all(|&e| e == 0);
            if *c != one || constant {
                write!(f, "{c}")?;
                if !constant {
                    write!(f, " ")?;
                }
            }
            let mut first = true;
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, " ")?;
                }
                first = false;
                write!(f, "x_{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// One argument of a joint weight enumerator: a whole code or a single
/// fixed vector (only its zero/nonzero pattern matters).
#[derive(Clone, Copy, Debug)]
pub enum JweArg<'a> {
    Code(&'a LinearCode),
    Vector(&'a [u16]),
}

impl JweArg<'_> {
    fn len(&self) -> usize {
        match self {
            JweArg::Code(c) => c.len(),
            JweArg::Vector(v) => v.len(),
        }
    }

    fn support_masks(&self, cap: u64) -> Result<Vec<u128>> {
        match self {
            JweArg::Code(c) => c.support_masks(cap),
            JweArg::Vector(v) => {
                if v.len() > 128 {
                    return Err(Error::SupportTooWide);
                }
                Ok(vec![mask_of(v)])
            }
        }
    }
}

/// The g-fold joint weight enumerator of the arguments: for every tuple of
/// codewords, the monomial recording how many positions show each
/// zero/nonzero pattern.
pub fn joint_weight_enumerator(args: &[JweArg], opts: &EnumOpts) -> Result<SparseEnumerator> {
    let g = args.len();
    if g == 0 || g > 16 {
        return Err(Error::FoldTooLarge(g));
    }
    let n = args[0].len();
    if args.iter().any(|a| a.len() != n) {
        return Err(Error::LengthMismatch);
    }
    let masks: Vec<Vec<u128>> = args
        .iter()
        .map(|a| a.support_masks(opts.cap))
        .collect::<Result<_>>()?;
    let total = masks
        .iter()
        .try_fold(1u64, |acc, m| acc.checked_mul(m.len() as u64))
        .filter(|&t| t <= opts.cap)
        .ok_or_else(|| Error::SizeExceeded {
            size: masks
                .iter()
                .map(|m| m.len().to_string())
                .collect::<Vec<_>>()
                .join("*"),
            cap: opts.cap,
        })?;
    let _ = total;

    if g == 2 {
        let counts = pair_pattern_counts(&masks[0], &masks[1], n, opts.threads);
        return Ok(counts_to_poly_g2(&counts, n, 0));
    }

    // General fold: walk the tuple product, bucketing pattern counts.
    let mut acc: HashMap<Vec<u16>, u64> = HashMap::new();
    let mut idx = vec![0usize; g];
    loop {
        let mut exp = vec![0u16; 1 << g];
        for pos in 0..n {
            let mut pattern = 0usize;
            for (a, &i) in idx.iter().enumerate() {
                if masks[a][i] >> pos & 1 == 1 {
                    pattern |= 1 << (g - 1 - a);
                }
            }
            exp[pattern] += 1;
        }
        *acc.entry(exp).or_insert(0) += 1;
        // advance the tuple odometer
        let mut a = g;
        loop {
            if a == 0 {
                let mut out = SparseEnumerator::zero(g as u32);
                for (exp, count) in acc {
                    out.add_term(exp, BigUint::from(count));
                }
                return Ok(out);
            }
            a -= 1;
            idx[a] += 1;
            if idx[a] == masks[a].len() {
                idx[a] = 0;
            } else {
                break;
            }
        }
    }
}

/// Dense pair-pattern counter: index `(n01 * (n+1) + n10) * (n+1) + n11`.
/// `n` is the number of positions considered after masking.
fn pair_pattern_counts(a: &[u128], b: &[u128], n: usize, threads: usize) -> Vec<u64> {
    let dim = n + 1;
    let b_weights: Vec<u32> = b.iter().map(|m| m.count_ones()).collect();
    let work = |rows: &[u128]| {
        let mut counts = vec![0u64; dim * dim * dim];
        for &am in rows {
            let wa = am.count_ones();
            for (&bm, &wb) in b.iter().zip(&b_weights) {
                let n11 = (am & bm).count_ones();
                let n10 = wa - n11;
                let n01 = wb - n11;
                counts[((n01 as usize * dim) + n10 as usize) * dim + n11 as usize] += 1;
            }
        }
        counts
    };
    if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        let chunk = a.len().div_ceil(threads).max(1);
        pool.install(|| {
            use rayon::prelude::*;
            a.par_chunks(chunk)
                .map(work)
                .reduce(
                    || vec![0u64; dim * dim * dim],
                    |mut x, y| {
                        for (xe, ye) in x.iter_mut().zip(y) {
                            *xe += ye;
                        }
                        x
                    },
                )
        })
    } else {
        work(a)
    }
}

/// Converts dense pair counts to a 4-variable polynomial. `skip` positions
/// were dropped before counting (the prefix in the Z computation), so
/// `n00 = n - skip - n01 - n10 - n11`.
fn counts_to_poly_g2(counts: &[u64], n: usize, skip: usize) -> SparseEnumerator {
    let dim = n + 1;
    let mut out = SparseEnumerator::zero(2);
    for n01 in 0..dim {
        for n10 in 0..dim {
            for n11 in 0..dim {
                let c = counts[(n01 * dim + n10) * dim + n11];
                if c == 0 {
                    continue;
                }
                let n00 = n - skip - n01 - n10 - n11;
                out.add_term(
                    vec![n00 as u16, n01 as u16, n10 as u16, n11 as u16],
                    BigUint::from(c),
                );
            }
        }
    }
    out
}

/// The coefficient polynomial Z: iterating tuples of dual codewords with
/// unit prefixes, it records the zero/nonzero patterns on the share
/// coordinates. Variables are indexed by the binary pattern of which tuple
/// members are nonzero (first member = most significant bit).
pub fn secret_coefficient(code: &LinearCode, l: usize, opts: &EnumOpts) -> Result<SparseEnumerator> {
    let Some(ts) = TupleSpace::build(code, l, opts.cap)? else {
        return Ok(SparseEnumerator::zero(l as u32));
    };
    ts.total_tuples(opts.cap)?;
    let f = code.field();
    let n = code.len();
    let suffix = |m: u128| m >> l;

    if l == 2 {
        let a: Vec<u128> = ts.masks_for_j(f, 1)?.into_iter().map(suffix).collect();
        let b: Vec<u128> = ts.masks_for_j(f, 2)?.into_iter().map(suffix).collect();
        let counts = pair_pattern_counts(&a, &b, n - l, opts.threads);
        return Ok(counts_to_poly_g2(&counts, n - l, 0));
    }

    let masks: Vec<Vec<u128>> = (1..=l)
        .map(|j| Ok(ts.masks_for_j(f, j)?.into_iter().map(suffix).collect()))
        .collect::<Result<_>>()?;
    let mut acc: HashMap<Vec<u16>, u64> = HashMap::new();
    let mut idx = vec![0usize; l];
    loop {
        let mut exp = vec![0u16; 1 << l];
        for pos in 0..n - l {
            let mut pattern = 0usize;
            for (j, &i) in idx.iter().enumerate() {
                if masks[j][i] >> pos & 1 == 1 {
                    pattern |= 1 << (l - 1 - j);
                }
            }
            exp[pattern] += 1;
        }
        *acc.entry(exp).or_insert(0) += 1;
        let mut j = l;
        loop {
            if j == 0 {
                let mut out = SparseEnumerator::zero(l as u32);
                for (exp, count) in acc {
                    out.add_term(exp, BigUint::from(count));
                }
                return Ok(out);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] == masks[j].len() {
                idx[j] = 0;
            } else {
                break;
            }
        }
    }
}

impl SchemeInstance {
    /// [`secret_coefficient`] for this scheme's code and secret length.
    pub fn secret_coefficient(&self, opts: &EnumOpts) -> Result<SparseEnumerator> {
        secret_coefficient(self.code(), self.secret_len(), opts)
    }
}

/// Sums the coefficients of monomials whose non-`x_0` exponents add to `m`:
/// an upper bound on the number of access groups of size `m`, exact when
/// `m < 3/2 d_perp - 1`.
pub fn count_bound(p: &SparseEnumerator, m: usize, d_perp: usize) -> (BigUint, bool) {
    let mut bound = BigUint::zero();
    for (exp, coef) in p.terms() {
        let weight: u64 = exp[1..].iter().map(|&e| e as u64).sum();
        if weight == m as u64 {
            bound += coef;
        }
    }
    (bound, 2 * m + 2 < 3 * d_perp)
}

/// `P_D(t)` for a self-orthogonal code `D`: degrees by coset count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionEnumerator {
    /// degree of `t` -> number of cosets contributing it.
    terms: BTreeMap<usize, u64>,
    code_distance: usize,
}

impl ExtensionEnumerator {
    pub fn terms(&self) -> &BTreeMap<usize, u64> {
        &self.terms
    }

    /// Total coset count `q^(n - 2k)`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn max_degree(&self) -> usize {
        *self.terms.keys().max().expect("at least the zero coset")
    }

    /// Largest degree among nonzero cosets, if any.
    pub fn max_nonzero_coset_degree(&self) -> Option<usize> {
        let mut t = self.terms.clone();
        if let Some(c) = t.get_mut(&self.code_distance) {
            *c -= 1; // the zero coset contributes t^{d(D)}
            if *c == 0 {
                t.remove(&self.code_distance);
            }
        }
        t.keys().next_back().copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "terms": self
                .terms
                .iter()
                .map(|(deg, count)| (deg.to_string(), count))
                .collect::<BTreeMap<String, _>>(),
            "cosets": self.total(),
        })
    }
}

impl fmt::Display for ExtensionEnumerator {
    /// Descending powers, e.g. `t^4 + 3 t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&deg, &count) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if count != 1 {
                write!(f, "{count} ")?;
            }
            write!(f, "t^{deg}")?;
        }
        Ok(())
    }
}

/// The code extension enumerator: one summand `t^{d(<c, D>)}` per coset
/// representative `c` of `D_perp / D`.
pub fn extension_enumerator(d: &LinearCode, cap: u64) -> Result<ExtensionEnumerator> {
    if !d.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let f = d.field();
    let n = d.len();
    let k = d.dim();
    let q = f.order() as u64;
    let cosets = q
        .checked_pow((n - 2 * k) as u32)
        .filter(|&c| c <= cap)
        .ok_or_else(|| Error::SizeExceeded {
            size: format!("{q}^{}", n - 2 * k),
            cap,
        })?;
    let code_distance = d.min_distance(cap)?;

    let mut terms: BTreeMap<usize, u64> = BTreeMap::new();
    if cosets == 1 {
        // self-dual: only the zero coset
        terms.insert(code_distance, 1);
        return Ok(ExtensionEnumerator {
            terms,
            code_distance,
        });
    }

    // Order a basis of D_perp as [completion | D-basis]: enumerating in
    // message order then walks each coset in one contiguous block.
    let kernel = d.gen_mat().kernel(f); // spans D_perp ⊇ D
    let mut basis: Vec<Vec<u16>> = Vec::with_capacity(n - k);
    let mut probe = d.generator();
    for r in 0..kernel.rows {
        probe.push(kernel.row(r).to_vec());
        if Mat::from_rows(probe.clone()).rank(f) == probe.len() {
            basis.push(kernel.row(r).to_vec());
        } else {
            probe.pop();
        }
    }
    debug_assert_eq!(basis.len(), n - 2 * k);
    basis.extend(d.generator());
    let dual_full = LinearCode::from_rows(f.clone(), basis)?;

    let block = q.pow(k as u32);
    let mut coset_min = vec![usize::MAX; cosets as usize];
    if n <= 128 {
        for (i, m) in dual_full.support_masks(cap)?.into_iter().enumerate() {
            if i == 0 {
                continue;
            }
            let coset = i as u64 / block;
            let w = m.count_ones() as usize;
            if w < coset_min[coset as usize] {
                coset_min[coset as usize] = w;
            }
        }
    } else {
        for (i, w) in dual_full.enumerate_codewords(cap)?.enumerate() {
            if i == 0 {
                continue;
            }
            let coset = i as u64 / block;
            let wt = w.weight();
            if wt < coset_min[coset as usize] {
                coset_min[coset as usize] = wt;
            }
        }
    }
    debug_assert_eq!(coset_min[0], code_distance);
    *terms.entry(code_distance).or_insert(0) += 1;
    for &m in &coset_min[1..] {
        *terms.entry(m.min(code_distance)).or_insert(0) += 1;
    }
    Ok(ExtensionEnumerator {
        terms,
        code_distance,
    })
}

/// Counts the distinct tuple-support unions of size `m` and certifies the
/// count exact when, for every tuple, all nonzero-coset extension degrees
/// stay below the dual distance.
pub fn verify_exact_count(
    s: &SchemeInstance,
    m: usize,
    opts: &EnumOpts,
) -> Result<(u64, bool)> {
    if !s.code().is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    let f = s.code().field();
    let l = s.secret_len();
    let n = s.code().len();
    let d_perp = s.dual_code().min_distance(opts.cap)?;
    let Some(ts) = TupleSpace::build(s.code(), l, opts.cap)? else {
        return Ok((0, true));
    };
    ts.total_tuples(opts.cap)?;

    let words: Vec<Vec<Vec<u16>>> = (1..=l).map(|j| ts.words_for_j(f, j)).collect();
    let masks: Vec<Vec<u128>> = words
        .iter()
        .map(|ws| {
            if n > 128 {
                Err(Error::SupportTooWide)
            } else {
                Ok(ws.iter().map(|w| mask_of(w)).collect())
            }
        })
        .collect::<Result<_>>()?;

    let work = |range: std::ops::Range<usize>| -> Result<(HashSet<u128>, bool)> {
        let mut unions = HashSet::new();
        let mut certified = true;
        let mut idx = vec![0usize; l];
        let mut scan = |idx: &[usize]| -> Result<()> {
            let mut mask = 0u128;
            for (j, &i) in idx.iter().enumerate() {
                mask |= masks[j][i];
            }
            let union = mask >> l;
            if union.count_ones() as usize != m {
                return Ok(());
            }
            unions.insert(union);
            if !certified {
                return Ok(());
            }
            // D: the tuple's words restricted to the union support columns
            let keep: Vec<usize> = (0..n).filter(|&c| mask >> c & 1 == 1).collect();
            let rows: Vec<Vec<u16>> = idx
                .iter()
                .enumerate()
                .map(|(j, &i)| keep.iter().map(|&c| words[j][i][c]).collect())
                .collect();
            let dcode = LinearCode::from_rows(f.clone(), rows)?;
            let ext = extension_enumerator(&dcode, opts.cap)?;
            if ext.max_nonzero_coset_degree().is_some_and(|deg| deg >= d_perp) {
                certified = false;
            }
            Ok(())
        };
        // walk tuples whose first index lies in `range`
        for first in range {
            idx[0] = first;
            for x in idx[1..].iter_mut() {
                *x = 0;
            }
            loop {
                scan(&idx)?;
                let mut j = l;
                let mut done = false;
                loop {
                    if j == 1 {
                        done = true;
                        break;
                    }
                    j -= 1;
                    idx[j] += 1;
                    if idx[j] == masks[j].len() {
                        idx[j] = 0;
                    } else {
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
        Ok((unions, certified))
    };

    let first_len = masks[0].len();
    let (unions, certified) = if opts.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        let chunk = first_len.div_ceil(opts.threads).max(1);
        let ranges: Vec<std::ops::Range<usize>> = (0..first_len)
            .step_by(chunk)
            .map(|s0| s0..(s0 + chunk).min(first_len))
            .collect();
        let parts: Vec<Result<(HashSet<u128>, bool)>> = pool.install(|| {
            use rayon::prelude::*;
            ranges.into_par_iter().map(work).collect()
        });
        let mut u = HashSet::new();
        let mut c = true;
        for p in parts {
            let (pu, pc) = p?;
            u.extend(pu);
            c &= pc;
        }
        (u, c)
    } else {
        work(0..first_len)?
    };
    Ok((unions.len() as u64, certified))
}

/// Recovers Z from a biweight enumerator of a 2-transitively symmetric code:
/// the mixed derivative in the `x_1` (01-pattern) and `x_2` (10-pattern)
/// variables, divided by `n(n-1)`. Every division must be exact; a failed
/// division means the 2-transitivity assertion was wrong.
pub fn derivative_z(biweight: &SparseEnumerator, n_len: usize) -> Result<SparseEnumerator> {
    if biweight.num_vars() != 4 {
        return Err(Error::NotABiweight(biweight.num_vars()));
    }
    let div = (n_len * (n_len - 1)) as u64;
    let divisor = BigUint::from(div);
    let mut out = SparseEnumerator::zero(2);
    for (exp, coef) in biweight.terms() {
        let (i, j, k, m2) = (exp[0], exp[1], exp[2], exp[3]);
        if j == 0 || k == 0 {
            continue;
        }
        let scaled = coef * (j as u64) * (k as u64);
        if (&scaled % &divisor) != BigUint::zero() {
            return Err(Error::InexactDerivative {
                i,
                j,
                k,
                m: m2,
                div,
            });
        }
        out.add_term(vec![i, j - 1, k - 1, m2], scaled / &divisor);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::gf::make_field;
    use crate::reproduce;

    fn gf2() -> crate::gf::FieldSpec {
        make_field(2, 1, None).unwrap()
    }

    fn repetition4() -> LinearCode {
        LinearCode::from_rows(gf2(), vec![vec![1, 1, 1, 1]]).unwrap()
    }

    #[test]
    fn one_fold_of_the_repetition_code() {
        let p = joint_weight_enumerator(&[JweArg::Code(&repetition4())], &EnumOpts::default())
            .unwrap();
        let expected =
            SparseEnumerator::from_terms(1, [(vec![4, 0], 1u32), (vec![0, 4], 1u32)]);
        assert_eq!(p, expected);
    }

    #[test]
    fn two_fold_of_repetition_pairs() {
        let rep = repetition4();
        let p = joint_weight_enumerator(
            &[JweArg::Code(&rep), JweArg::Code(&rep)],
            &EnumOpts::default(),
        )
        .unwrap();
        let expected = SparseEnumerator::from_terms(
            2,
            [
                (vec![4, 0, 0, 0], 1u32),
                (vec![0, 4, 0, 0], 1u32),
                (vec![0, 0, 4, 0], 1u32),
                (vec![0, 0, 0, 4], 1u32),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn hamming_biweight_matches_the_reference_terms() {
        let ham = catalog::load("hamming8").unwrap().code;
        let p = joint_weight_enumerator(
            &[JweArg::Code(&ham), JweArg::Code(&ham)],
            &EnumOpts::default(),
        )
        .unwrap();
        assert_eq!(p, reproduce::hamming_biweight());
        assert_eq!(p.total(), BigUint::from(256u32));
        // every monomial is homogeneous of degree 8
        for (exp, _) in p.terms() {
            assert_eq!(exp.iter().map(|&e| e as u32).sum::<u32>(), 8);
        }
        assert_eq!(
            p.coefficient(&[2, 2, 2, 2]),
            BigUint::from(168u32)
        );
    }

    #[test]
    fn biweight_swap_symmetry_and_collapse() {
        let ham = catalog::load("hamming8").unwrap().code;
        let p = joint_weight_enumerator(
            &[JweArg::Code(&ham), JweArg::Code(&ham)],
            &EnumOpts::default(),
        )
        .unwrap();
        // swapping the two identical arguments transposes patterns 01 and 10
        let swapped = p.specialize(&[0, 2, 1, 3]).unwrap();
        assert_eq!(p, swapped);
        // merging the second argument away collapses onto |C| * (1-fold JWE)
        let collapsed = p.specialize(&[0, 0, 2, 2]).unwrap();
        let expected = SparseEnumerator::from_terms(
            2,
            [
                (vec![8, 0, 0, 0], 16u32),
                (vec![4, 0, 4, 0], 224u32),
                (vec![0, 0, 8, 0], 16u32),
            ],
        );
        assert_eq!(collapsed, expected);
        // merging everything evaluates at all-ones
        let all = p.specialize(&[0, 0, 0, 0]).unwrap();
        assert_eq!(all.coefficient(&[8, 0, 0, 0]), BigUint::from(256u32));
    }

    #[test]
    fn fixed_vector_arguments() {
        let rep = repetition4();
        let ind = [1u16, 0, 0, 0];
        let p = joint_weight_enumerator(
            &[JweArg::Vector(&ind), JweArg::Code(&rep)],
            &EnumOpts::default(),
        )
        .unwrap();
        // tuples: (ind, 0000) -> x0^3 x2; (ind, 1111) -> x1^3 x3
        let expected = SparseEnumerator::from_terms(
            2,
            [(vec![3, 0, 1, 0], 1u32), (vec![0, 3, 0, 1], 1u32)],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn jwe_argument_errors() {
        let rep = repetition4();
        let short = [1u16, 0];
        assert!(matches!(
            joint_weight_enumerator(
                &[JweArg::Code(&rep), JweArg::Vector(&short)],
                &EnumOpts::default()
            ),
            Err(Error::LengthMismatch)
        ));
        let opts = EnumOpts {
            cap: 1,
            threads: 1,
        };
        assert!(matches!(
            joint_weight_enumerator(&[JweArg::Code(&rep), JweArg::Code(&rep)], &opts),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn hamming_z_and_count_bound() {
        let ham = catalog::load("hamming8").unwrap().code;
        let z = secret_coefficient(&ham, 2, &EnumOpts::default()).unwrap();
        assert_eq!(z, reproduce::hamming_z());
        let (bound, exact) = count_bound(&z, 4, 4);
        assert_eq!(bound, BigUint::from(12u32));
        assert!(exact);
        let (bound6, exact6) = count_bound(&z, 6, 4);
        assert_eq!(bound6, BigUint::from(4u32));
        assert!(!exact6);
        let (bound5, _) = count_bound(&z, 5, 4);
        assert_eq!(bound5, BigUint::zero());
    }

    #[test]
    fn z_of_the_full_space_is_zero() {
        let full = LinearCode::from_rows(
            gf2(),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        let z = secret_coefficient(&full, 1, &EnumOpts::default()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn z_threads_do_not_change_the_result() {
        let ham = catalog::load("hamming8").unwrap().code;
        let a = secret_coefficient(&ham, 2, &EnumOpts::default()).unwrap();
        let b = secret_coefficient(
            &ham,
            2,
            &EnumOpts {
                cap: DEFAULT_CAP,
                threads: 4,
            },
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(
            serde_json::to_string(&a.to_json()).unwrap(),
            serde_json::to_string(&b.to_json()).unwrap()
        );
    }

    #[test]
    fn extension_enumerator_examples() {
        let span1111 = repetition4();
        let ext = extension_enumerator(&span1111, DEFAULT_CAP).unwrap();
        assert_eq!(ext.terms(), &BTreeMap::from([(4, 1), (2, 3)]));
        assert_eq!(ext.total(), 4);
        assert_eq!(ext.max_degree(), 4);
        assert_eq!(ext.max_nonzero_coset_degree(), Some(2));
        assert_eq!(ext.to_string(), "t^4 + 3 t^2");

        let pair = LinearCode::from_rows(gf2(), vec![vec![1, 1]]).unwrap();
        let ext = extension_enumerator(&pair, DEFAULT_CAP).unwrap();
        assert_eq!(ext.terms(), &BTreeMap::from([(2, 1)]));
        assert_eq!(ext.max_nonzero_coset_degree(), None);

        let golay = catalog::load("golay24").unwrap().code;
        let ext = extension_enumerator(&golay, DEFAULT_CAP).unwrap();
        assert_eq!(ext.terms(), &BTreeMap::from([(8, 1)]));

        let toy = catalog::load("toy6").unwrap().code;
        assert!(matches!(
            extension_enumerator(&toy, DEFAULT_CAP),
            Err(Error::NotSelfOrthogonal)
        ));
    }

    #[test]
    fn hamming_verification_certificate_fails_at_the_full_group() {
        let s = SchemeInstance::new(catalog::load("hamming8").unwrap().code, 2).unwrap();
        let (count, certified) = verify_exact_count(&s, 6, &EnumOpts::default()).unwrap();
        assert_eq!(count, 1);
        assert!(!certified);
        let (count4, _) = verify_exact_count(&s, 4, &EnumOpts::default()).unwrap();
        assert_eq!(count4, 12);
        let (count5, _) = verify_exact_count(&s, 5, &EnumOpts::default()).unwrap();
        assert_eq!(count5, 0);
    }

    #[test]
    fn derivative_of_a_single_monomial() {
        let p = SparseEnumerator::from_terms(2, [(vec![0, 2, 2, 0], 1u32)]);
        let z = derivative_z(&p, 2).unwrap();
        assert_eq!(
            z,
            SparseEnumerator::from_terms(2, [(vec![0, 1, 1, 0], 2u32)])
        );
        // 1 * 1 * 1 is not divisible by 2 * 1
        let bad = SparseEnumerator::from_terms(2, [(vec![0, 1, 1, 0], 1u32)]);
        assert!(matches!(
            derivative_z(&bad, 2),
            Err(Error::InexactDerivative { .. })
        ));
        assert!(matches!(
            derivative_z(&SparseEnumerator::zero(3), 2),
            Err(Error::NotABiweight(8))
        ));
    }

    #[test]
    fn hamming_derivative_equals_z() {
        let ham = catalog::load("hamming8").unwrap().code;
        let bw = joint_weight_enumerator(
            &[JweArg::Code(&ham), JweArg::Code(&ham)],
            &EnumOpts::default(),
        )
        .unwrap();
        let z = derivative_z(&bw, 8).unwrap();
        assert_eq!(z, reproduce::hamming_z());
        assert_eq!(z.to_string(), "4 x_1^3 x_2^3 + 12 x_0^2 x_1 x_2 x_3^2");
    }

    #[test]
    fn monomial_ordering_is_graded_lex() {
        let a = Monomial(vec![1, 0, 0]);
        let b = Monomial(vec![0, 0, 2]);
        let c = Monomial(vec![0, 2, 0]);
        assert!(a < b, "lower total degree first");
        assert!(b < c, "same degree falls back to entry-wise order");
        let p = SparseEnumerator::from_terms(
            1,
            [(vec![0, 4], 1u32), (vec![4, 0], 2u32)],
        );
        let order: Vec<Vec<u16>> = p.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(order, vec![vec![0, 4], vec![4, 0]]);
    }

    #[test]
    fn specialize_validates_the_merge_map() {
        let p = SparseEnumerator::from_terms(1, [(vec![1, 1], 1u32)]);
        assert!(matches!(
            p.specialize(&[0]),
            Err(Error::BadMergeMap { expected: 2, got: 1 })
        ));
        assert!(matches!(
            p.specialize(&[0, 5]),
            Err(Error::BadMergeMap { .. })
        ));
        assert_eq!(p.specialize(&[0, 1]).unwrap(), p);
    }
}
