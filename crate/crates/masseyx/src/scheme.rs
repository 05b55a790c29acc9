//! The extended dealer and reconstructor.
//!
//! A secret `(s_1, .., s_l)` is dealt by picking `u` with `u G_i = s_i` for
//! the first `l` generator columns, uniformly over all solutions; the
//! codeword `c = uG` then carries the secret in its first `l` coordinates
//! and the share of participant `i` in coordinate `l + i`. Reconstruction
//! solves the dual-codeword system and combines shares linearly, so an
//! authorized group recovers the exact secret and everyone else gets
//! [`Reconstruction::NotAuthorized`], never a wrong answer.

use std::collections::BTreeMap;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::access;
use crate::code::{LinearCode, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::linalg::add_scaled;

/// A validated secret-sharing instance over an `[l+n, k, d]` code with
/// `d > l` and independent first-`l` generator columns.
#[derive(Clone, Debug)]
pub struct SchemeInstance {
    code: LinearCode,
    dual: LinearCode,
    l: usize,
    n: usize,
    d: usize,
}

/// Shares dealt from one codeword.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareVector {
    codeword: Vec<u16>,
    l: usize,
}

impl ShareVector {
    /// Shares in participant order (participant `i` at index `i - 1`).
    pub fn shares(&self) -> &[u16] {
        &self.codeword[self.l..]
    }

    /// Share of participant `i` (1-based).
    pub fn share(&self, participant: usize) -> u16 {
        self.codeword[self.l + participant - 1]
    }

    /// The full dealt codeword; its first `l` coordinates are the secret.
    pub fn codeword(&self) -> &[u16] {
        &self.codeword
    }

    pub fn secret(&self) -> &[u16] {
        &self.codeword[..self.l]
    }

    /// Shares keyed by 1-based participant index.
    pub fn to_map(&self) -> BTreeMap<usize, u16> {
        self.shares()
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1, v))
            .collect()
    }
}

/// Outcome of a reconstruction attempt with consistent shares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reconstruction {
    Secret(Vec<u16>),
    NotAuthorized,
}

/// Builds a scheme over `code` with secret length `l`; see
/// [`SchemeInstance::new`].
pub fn make_scheme(code: LinearCode, l: usize) -> Result<SchemeInstance> {
    SchemeInstance::new(code, l)
}

impl SchemeInstance {
    pub fn new(code: LinearCode, l: usize) -> Result<Self> {
        Self::with_cap(code, l, DEFAULT_CAP)
    }

    /// `cap` bounds the codeword enumeration needed for the distance check.
    pub fn with_cap(code: LinearCode, l: usize, cap: u64) -> Result<Self> {
        let n_total = code.len();
        if l == 0 || l >= n_total {
            return Err(Error::SecretLengthOutOfRange { l, n: n_total });
        }
        let d = code.min_distance(cap)?;
        if d <= l {
            return Err(Error::DistanceTooSmall { d, l });
        }
        let secret_cols: Vec<usize> = (0..l).collect();
        if code.gen_mat().select_cols(&secret_cols).rank(code.field()) != l {
            return Err(Error::DependentSecretColumns { l });
        }
        let dual = code.dual()?;
        Ok(SchemeInstance {
            n: n_total - l,
            code,
            dual,
            l,
            d,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// The dual of the scheme code; access questions are answered here.
    pub fn dual_code(&self) -> &LinearCode {
        &self.dual
    }

    pub fn secret_len(&self) -> usize {
        self.l
    }

    pub fn participants(&self) -> usize {
        self.n
    }

    pub fn min_distance(&self) -> usize {
        self.d
    }

    /// The scheme distributes `l` field elements through shares of one
    /// element each, so the information rate is `l`.
    pub fn information_rate(&self) -> usize {
        self.l
    }

    /// Number of cheaters the full participant group can detect.
    pub fn cheater_capacity(&self) -> usize {
        (self.d - self.l) / 2
    }

    fn check_secret(&self, secret: &[u16]) -> Result<()> {
        if secret.len() != self.l {
            return Err(Error::SecretLengthMismatch {
                got: secret.len(),
                expected: self.l,
            });
        }
        let q = self.code.field().order();
        for &v in secret {
            if v as u32 >= q {
                return Err(Error::ElementOutOfRange { value: v as u32, q });
            }
        }
        Ok(())
    }

    /// Deals shares for `secret`, picking the dealing vector uniformly among
    /// all solutions of the prefix constraints. The generator is ChaCha8
    /// seeded with `seed`, so equal seeds give equal shares.
    pub fn deal(&self, secret: &[u16], seed: u64) -> Result<ShareVector> {
        self.check_secret(secret)?;
        let f = self.code.field();
        let k = self.code.dim();
        // u . G_j = s_j for j < l, i.e. (first l columns)^T u = s.
        let prefix_t = self
            .code
            .gen_mat()
            .select_cols(&(0..self.l).collect::<Vec<_>>())
            .transpose();
        let mut u = prefix_t
            .solve(f, secret)
            .expect("prefix columns are independent, so every secret is dealable");
        let kernel = prefix_t.kernel(f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for r in 0..kernel.rows {
            let coeff = uniform_element(&mut rng, f.order());
            add_scaled(f, &mut u, kernel.row(r), coeff);
        }
        debug_assert_eq!(u.len(), k);
        let mut codeword = vec![0u16; self.code.len()];
        for (r, &coeff) in u.iter().enumerate() {
            add_scaled(f, &mut codeword, self.code.gen_mat().row(r), coeff);
        }
        debug_assert_eq!(&codeword[..self.l], secret);
        Ok(ShareVector {
            codeword,
            l: self.l,
        })
    }

    /// Reconstructs the secret from shares held by `group` (1-based
    /// participant indices). Shares must cover the group exactly and must be
    /// consistent with some codeword; unauthorized groups get
    /// [`Reconstruction::NotAuthorized`].
    pub fn reconstruct(
        &self,
        group: &[usize],
        shares: &BTreeMap<usize, u16>,
    ) -> Result<Reconstruction> {
        let members = self.validate_group(group)?;
        for &i in shares.keys() {
            if !members.contains(&i) {
                return Err(Error::ShareOutsideGroup(i));
            }
        }
        let q = self.code.field().order();
        for &i in &members {
            match shares.get(&i) {
                None => return Err(Error::MissingShare(i)),
                Some(&v) if (v as u32) < q => {}
                Some(&v) => return Err(Error::ElementOutOfRange { value: v as u32, q }),
            }
        }

        // Consistency: some codeword must carry exactly these shares.
        let f = self.code.field();
        let share_cols: Vec<usize> = members.iter().map(|&i| self.l + i - 1).collect();
        let values: Vec<u16> = members.iter().map(|&i| shares[&i]).collect();
        let system = self.code.gen_mat().select_cols(&share_cols).transpose();
        if system.solve(f, &values).is_none() {
            return Err(Error::InconsistentShares);
        }

        let Some(witnesses) = access::dual_witnesses(self, &members)? else {
            return Ok(Reconstruction::NotAuthorized);
        };
        // c . v_j = 0 and v_j has prefix e_j, so
        // s_j = -sum_i v_j[l+i-1] * share_i over the group.
        let mut secret = Vec::with_capacity(self.l);
        for v in &witnesses {
            let mut acc = 0u16;
            for &i in &members {
                acc = f.add(acc, f.mul(v[self.l + i - 1], shares[&i]));
            }
            secret.push(f.neg(acc));
        }
        Ok(Reconstruction::Secret(secret))
    }

    /// Validates 1-based participant indices, returning them sorted and
    /// deduplicated.
    pub(crate) fn validate_group(&self, group: &[usize]) -> Result<Vec<usize>> {
        let mut members: Vec<usize> = group.to_vec();
        for &i in &members {
            if i == 0 || i > self.n {
                return Err(Error::ParticipantOutOfRange { index: i, n: self.n });
            }
        }
        members.sort_unstable();
        members.dedup();
        Ok(members)
    }
}

/// Uniform value in `[0, q)` by rejection on the top bits of the stream;
/// this pins the sampling algorithm independent of RNG-crate internals.
fn uniform_element(rng: &mut ChaCha8Rng, q: u32) -> u16 {
    debug_assert!(q >= 2);
    let mask = (q - 1).next_power_of_two() - 1;
    loop {
        let x = rng.next_u32() & mask;
        if x < q {
            return x as u16;
        }
    }
}
