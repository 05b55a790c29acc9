//! Linear-code core: canonical forms, duals, codeword enumeration, minimum
//! distance, generalized Hamming weights, and support-restricted subcodes.
//!
//! A [`LinearCode`] keeps both the generator matrix it was built from and its
//! reduced row-echelon form; row-space equality is a comparison of the
//! canonical forms. Binary codes get bitset fast paths (support masks in a
//! `u128`) for the enumeration-heavy operations.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{add_scaled, Mat};

/// Default enumeration budget: at most 2^26 codewords / subcodes / tuples.
pub const DEFAULT_CAP: u64 = 1 << 26;

/// An `[n, k]` linear code over a finite field, held as a full-row-rank
/// generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: FieldSpec,
    n_len: usize,
    k_dim: usize,
    gen: Mat,
    rref: Mat,
    pivots: Vec<usize>,
}

impl PartialEq for LinearCode {
    /// Row-space equality: same field, same length, same canonical form.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.n_len == other.n_len && self.rref == other.rref
    }
}
impl Eq for LinearCode {}

impl LinearCode {
    /// Builds a code from generator rows, which must be linearly independent.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<u16>>) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if k == 0 || n == 0 || k > n {
            return Err(Error::BadDimensions { k, n });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadDimensions { k, n });
        }
        let q = field.order();
        for row in &rows {
            for &v in row {
                if v as u32 >= q {
                    return Err(Error::ElementOutOfRange { value: v as u32, q });
                }
            }
        }
        let gen = Mat::from_rows(rows);
        let (rref, pivots) = gen.rref(&field);
        if pivots.len() != k {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                k,
            });
        }
        Ok(LinearCode {
            field,
            n_len: n,
            k_dim: k,
            gen,
            rref,
            pivots,
        })
    }

    /// Builds the code spanned by the given rows, dropping dependent ones.
    /// The generator becomes the canonical basis.
    pub fn from_span(field: FieldSpec, rows: Vec<Vec<u16>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if n == 0 {
            return Err(Error::BadDimensions { k: rows.len(), n });
        }
        let (red, pivots) = Mat::from_rows(rows).rref(&field);
        if pivots.is_empty() {
            return Err(Error::ZeroCode);
        }
        let basis: Vec<Vec<u16>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Self::from_rows(field, basis)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.n_len
    }

    pub fn dim(&self) -> usize {
        self.k_dim
    }

    pub fn generator(&self) -> Vec<Vec<u16>> {
        self.gen.row_vecs()
    }

    pub(crate) fn gen_mat(&self) -> &Mat {
        &self.gen
    }

    /// Number of codewords, q^k.
    pub fn word_count(&self) -> BigUint {
        BigUint::from(self.field.order()).pow(self.k_dim as u32)
    }

    /// True when `word` lies in the row space.
    pub fn contains(&self, word: &[u16]) -> bool {
        if word.len() != self.n_len {
            return false;
        }
        let mut v = word.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                add_scaled(&self.field, &mut v, self.rref.row(r), self.field.neg(c));
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gen.mul(&self.field, &self.gen.transpose()).is_zero()
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k_dim == self.n_len && self.is_self_orthogonal()
    }

    /// The dual code under the standard inner product: an `[n, n-k]` code
    /// with `G · H^T = 0`.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k_dim == self.n_len {
            return Err(Error::ZeroCode);
        }
        let ker = self.gen.kernel(&self.field);
        LinearCode::from_rows(self.field.clone(), ker.row_vecs())
    }

    /// Streams all q^k codewords in lexicographic order of message vectors.
    pub fn enumerate_codewords(&self, cap: u64) -> Result<CodewordIter<'_>> {
        self.check_word_count(cap)?;
        Ok(CodewordIter {
            code: self,
            msg: vec![0; self.k_dim],
            current: vec![0; self.n_len],
            started: false,
            exhausted: false,
        })
    }

    fn check_word_count(&self, cap: u64) -> Result<u64> {
        let count = self.word_count();
        count
            .to_u64()
            .filter(|&c| c <= cap)
            .ok_or_else(|| Error::SizeExceeded {
                size: count.to_string(),
                cap,
            })
    }

    /// Support bitmasks of all codewords in message order (bit i-1 set iff
    /// coordinate i is nonzero). Needs n <= 128.
    pub(crate) fn support_masks(&self, cap: u64) -> Result<Vec<u128>> {
        let count = self.check_word_count(cap)? as usize;
        if self.n_len > 128 {
            return Err(Error::SupportTooWide);
        }
        let mut out = Vec::with_capacity(count);
        if self.field.is_binary() {
            let rows: Vec<u128> = (0..self.k_dim).map(|r| mask_of(self.gen.row(r))).collect();
            let mut msg = vec![0u8; self.k_dim];
            let mut cur = 0u128;
            out.push(cur);
            'outer: loop {
                let mut i = self.k_dim;
                loop {
                    if i == 0 {
                        break 'outer;
                    }
                    i -= 1;
                    cur ^= rows[i];
                    msg[i] ^= 1;
                    if msg[i] == 1 {
                        break;
                    }
                }
                out.push(cur);
            }
        } else {
            for w in self.enumerate_codewords(cap)? {
                out.push(mask_of(w.coords()));
            }
        }
        debug_assert_eq!(out.len(), count);
        Ok(out)
    }

    /// Minimum nonzero Hamming weight.
    pub fn min_distance(&self, cap: u64) -> Result<usize> {
        if self.n_len <= 128 {
            let masks = self.support_masks(cap)?;
            Ok(masks[1..]
                .iter()
                .map(|m| m.count_ones() as usize)
                .min()
                .expect("k >= 1 gives at least one nonzero word"))
        } else {
            let mut best = usize::MAX;
            for (i, w) in self.enumerate_codewords(cap)?.enumerate() {
                if i == 0 {
                    continue;
                }
                best = best.min(w.weight());
            }
            Ok(best)
        }
    }

    /// r-th generalized Hamming weight: the minimum support size over
    /// r-dimensional subcodes, by exhaustive subcode enumeration.
    pub fn generalized_hamming_weight(&self, r: usize, cap: u64) -> Result<usize> {
        if r == 0 || r > self.k_dim {
            return Err(Error::SubcodeRankOutOfRange { r, k: self.k_dim });
        }
        if r == self.k_dim {
            // The only subcode is the code itself.
            return Ok((0..self.n_len)
                .filter(|&c| (0..self.k_dim).any(|row| self.rref.at(row, c) != 0))
                .count());
        }
        let q = self.field.order() as u64;
        let subcodes = gaussian_binomial(q, self.k_dim as u32, r as u32);
        if subcodes > BigUint::from(cap) {
            return Err(Error::SizeExceeded {
                size: subcodes.to_string(),
                cap,
            });
        }
        self.check_word_count(cap)?;

        // Projective representatives: first nonzero coordinate scaled to 1.
        let mut reps: Vec<(Vec<u16>, u128)> = Vec::new();
        let wide = self.n_len > 128;
        for w in self.enumerate_codewords(cap)? {
            let coords = w.coords();
            let Some(first) = coords.iter().find(|&&x| x != 0) else {
                continue;
            };
            if *first != 1 {
                continue;
            }
            let mask = if wide { 0 } else { mask_of(coords) };
            reps.push((w.into_coords(), mask));
        }

        if self.field.is_binary() && r == 2 && !wide {
            // Two distinct nonzero binary words are always independent.
            let mut best = usize::MAX;
            for i in 0..reps.len() {
                let a = reps[i].1;
                for (_, b) in &reps[i + 1..] {
                    best = best.min((a | b).count_ones() as usize);
                }
            }
            return Ok(best);
        }

        let mut best = usize::MAX;
        let mut combo: Vec<usize> = (0..r).collect();
        loop {
            let independent = if r == 1 || (r == 2 && self.field.order() == 2) {
                true
            } else {
                let rows: Vec<Vec<u16>> = combo.iter().map(|&i| reps[i].0.clone()).collect();
                Mat::from_rows(rows).rank(&self.field) == r
            };
            if independent {
                let size = if wide {
                    (0..self.n_len)
                        .filter(|&c| combo.iter().any(|&i| reps[i].0[c] != 0))
                        .count()
                } else {
                    combo
                        .iter()
                        .fold(0u128, |acc, &i| acc | reps[i].1)
                        .count_ones() as usize
                };
                best = best.min(size);
            }
            // next r-combination
            let mut i = r;
            loop {
                if i == 0 {
                    return Ok(best);
                }
                i -= 1;
                if combo[i] != i + reps.len() - r {
                    combo[i] += 1;
                    for j in i + 1..r {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    /// Deletes every column outside `keep` (1-based) and re-reduces the rows
    /// to a basis; the dimension may drop.
    pub fn restrict_support(&self, keep: &[usize]) -> Result<LinearCode> {
        if keep.is_empty() {
            return Err(Error::EmptyColumnSelection);
        }
        let mut cols: Vec<usize> = Vec::with_capacity(keep.len());
        for &c in keep {
            if c == 0 || c > self.n_len {
                return Err(Error::ColumnOutOfRange {
                    index: c,
                    n: self.n_len,
                });
            }
            cols.push(c - 1);
        }
        cols.sort_unstable();
        cols.dedup();
        let sub = self.gen.select_cols(&cols);
        LinearCode::from_span(self.field.clone(), sub.row_vecs())
    }
}

/// A codeword with its derived weight and support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    coords: Vec<u16>,
}

impl Codeword {
    pub fn coords(&self) -> &[u16] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u16> {
        self.coords
    }

    pub fn weight(&self) -> usize {
        self.coords.iter().filter(|&&x| x != 0).count()
    }

    /// 1-based indices of the nonzero coordinates, sorted.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Bit `i` set iff coordinate `i+1` is nonzero.
pub(crate) fn mask_of(coords: &[u16]) -> u128 {
    let mut m = 0u128;
    for (i, &x) in coords.iter().enumerate() {
        if x != 0 {
            m |= 1 << i;
        }
    }
    m
}

/// Streaming codeword enumeration in message-lexicographic order; the first
/// item is always the zero word.
#[derive(Debug)]
pub struct CodewordIter<'a> {
    code: &'a LinearCode,
    msg: Vec<u16>,
    current: Vec<u16>,
    started: bool,
    exhausted: bool,
}

impl Iterator for CodewordIter<'_> {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Codeword {
                coords: self.current.clone(),
            });
        }
        let q = self.code.field.order() as u16;
        let f = &self.code.field;
        let mut i = self.code.k_dim;
        loop {
            if i == 0 {
                self.exhausted = true;
                return None;
            }
            i -= 1;
            // Stepping a message digit from encoding `old` to `new` changes
            // the word by (new - old) * row; integer increment is not field
            // "+1" in extension fields, so subtract the encodings.
            let old = self.msg[i];
            let new = if old + 1 == q { 0 } else { old + 1 };
            self.msg[i] = new;
            add_scaled(f, &mut self.current, self.code.gen.row(i), f.sub(new, old));
            if new != 0 {
                break;
            }
        }
        Some(Codeword {
            coords: self.current.clone(),
        })
    }
}

/// Number of r-dimensional subspaces of an k-dimensional space over GF(q).
pub fn gaussian_binomial(q: u64, k: u32, r: u32) -> BigUint {
    if r > k {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    let qk = q.pow(k);
    let qr = q.pow(r);
    for i in 0..r {
        let qi = q.pow(i);
        num *= &qk - &qi;
        den *= &qr - &qi;
    }
    num / den
}
