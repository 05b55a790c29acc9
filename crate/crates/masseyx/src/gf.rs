//! Exact arithmetic in GF(p^e), for orders q = p^e up to 2^16.
//!
//! Elements are canonical integers in `[0, q)`: the base-p digits of the
//! value are the polynomial-basis coordinates, least significant digit
//! first. Extension-field multiplication goes through per-field log/antilog
//! tables built at construction time.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u128 = 1 << 16;

/// Built-in irreducible moduli, ascending coefficients. Any other extension
/// field needs an explicit modulus.
const DEFAULT_MODULI: &[(u16, u32, &[u16])] = &[
    (2, 2, &[1, 1, 1]),       // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),    // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (3, 2, &[2, 2, 1]),       // x^2 + 2x + 2
    (3, 3, &[1, 2, 0, 1]),    // x^3 + 2x + 1
];

#[derive(Debug)]
struct FieldInner {
    p: u16,
    e: u32,
    q: u32,
    /// `None` for prime fields.
    modulus: Option<Vec<u16>>,
    /// Discrete logs base a fixed primitive element; `log[0]` is unused.
    log: Vec<u16>,
    /// Antilog table of length q-1.
    exp: Vec<u16>,
}

/// A finite field GF(p^e). Cheap to clone and safe to share across threads;
/// all arithmetic is pure.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec(GF({}))", self.order())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.e == other.0.e
                && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldSpec {}

/// Builds a validated field; deterministic for a given `(p, e, modulus)`.
pub fn make_field(p: u64, e: u32, modulus: Option<&[u16]>) -> Result<FieldSpec> {
    FieldSpec::new(p, e, modulus)
}

impl FieldSpec {
    pub fn new(p: u64, e: u32, modulus: Option<&[u16]>) -> Result<FieldSpec> {
        if e == 0 {
            return Err(Error::BadExtensionDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = (p as u128).checked_pow(e).filter(|&q| q <= MAX_FIELD_ORDER);
        let q = q.ok_or(Error::FieldTooLarge((p as u128).saturating_pow(e)))? as u32;
        let p = p as u16;

        if e == 1 {
            if modulus.is_some() {
                return Err(Error::ModulusForPrimeField);
            }
            return Ok(FieldSpec(Arc::new(FieldInner {
                p,
                e,
                q,
                modulus: None,
                log: Vec::new(),
                exp: Vec::new(),
            })));
        }

        let modulus: Vec<u16> = match modulus {
            Some(m) => m.to_vec(),
            None => DEFAULT_MODULI
                .iter()
                .find(|&&(dp, de, _)| dp == p && de == e)
                .map(|&(_, _, m)| m.to_vec())
                .ok_or(Error::NoDefaultModulus { p, e })?,
        };
        validate_modulus(p, e, &modulus)?;

        let mut inner = FieldInner {
            p,
            e,
            q,
            modulus: Some(modulus),
            log: Vec::new(),
            exp: Vec::new(),
        };
        build_tables(&mut inner);
        Ok(FieldSpec(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u16 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, ascending; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u16]> {
        self.0.modulus.as_deref()
    }

    /// True for GF(2) itself, not for its extensions.
    pub fn is_binary(&self) -> bool {
        self.0.q == 2
    }

    /// Wraps a canonical value as a checked element of this field.
    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if value >= self.0.q {
            return Err(Error::ElementOutOfRange { value, q: self.0.q });
        }
        Ok(FieldElement {
            value: value as u16,
            field: self.clone(),
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            value: 0,
            field: self.clone(),
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            value: 1,
            field: self.clone(),
        }
    }

    // Raw value arithmetic. Callers guarantee inputs are in [0, q); these are
    // the hot-path entry points used by the matrix and enumeration code.

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        let f = &*self.0;
        if f.p == 2 {
            a ^ b
        } else if f.e == 1 {
            let s = a as u32 + b as u32;
            (if s >= f.q { s - f.q } else { s }) as u16
        } else {
            digitwise(f, a, b, |x, y| (x + y) % f.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        let f = &*self.0;
        if f.p == 2 {
            a
        } else if f.e == 1 {
            if a == 0 {
                0
            } else {
                f.p - a
            }
        } else {
            digitwise(f, a, 0, |x, _| (f.p - x) % f.p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        let f = &*self.0;
        if a == 0 || b == 0 {
            return 0;
        }
        if f.e == 1 {
            ((a as u32 * b as u32) % f.q) as u16
        } else {
            let t = f.log[a as usize] as u32 + f.log[b as usize] as u32;
            let m = f.q - 1;
            f.exp[(if t >= m { t - m } else { t }) as usize]
        }
    }

    /// Multiplicative inverse of a nonzero value; panics on zero (checked
    /// callers go through [`FieldElement::inv`]).
    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "zero has no inverse");
        let f = &*self.0;
        if f.e == 1 {
            self.pow(a, (f.q - 2) as u64)
        } else {
            let m = f.q - 1;
            f.exp[((m - f.log[a as usize] as u32) % m) as usize]
        }
    }

    pub fn pow(&self, a: u16, mut n: u64) -> u16 {
        let mut base = a;
        let mut acc = 1u16;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }
}

#[inline]
fn digitwise(f: &FieldInner, a: u16, b: u16, op: impl Fn(u16, u16) -> u16) -> u16 {
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut scale = 1u32;
    for _ in 0..f.e {
        out += op(a % f.p, b % f.p) as u32 * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p as u32;
    }
    out as u16
}

/// One element of a specific field. Arithmetic never mixes fields: the
/// checked operations report [`Error::MixedFields`] instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    value: u16,
    field: FieldSpec,
}

impl FieldElement {
    pub fn value(&self) -> u16 {
        self.value
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Self {
            value: self.field.add(self.value, rhs.value),
            field: self.field.clone(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(Self {
            value: self.field.mul(self.value, rhs.value),
            field: self.field.clone(),
        })
    }

    pub fn neg(&self) -> Self {
        Self {
            value: self.field.neg(self.value),
            field: self.field.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(Self {
            value: self.field.inv(self.value),
            field: self.field.clone(),
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn validate_modulus(p: u16, e: u32, m: &[u16]) -> Result<()> {
    if m.len() != e as usize + 1 {
        return Err(Error::BadModulusDegree {
            expected: e,
            got: m.len().saturating_sub(1),
        });
    }
    for &c in m {
        if c >= p {
            return Err(Error::BadModulusCoefficient(c, p));
        }
    }
    if *m.last().unwrap() != 1 {
        return Err(Error::NotMonicModulus);
    }
    // Trial division by every monic polynomial of degree 1..=e/2.
    for d in 1..=(e as usize / 2) {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut divisor = vec![0u16; d + 1];
            let mut t = idx;
            for c in divisor.iter_mut().take(d) {
                *c = (t % p as u64) as u16;
                t /= p as u64;
            }
            divisor[d] = 1;
            if poly_rem(p, m, &divisor).iter().all(|&c| c == 0) {
                return Err(Error::ReducibleModulus(d));
            }
        }
    }
    Ok(())
}

/// Remainder of a mod b over GF(p); b monic.
fn poly_rem(p: u16, a: &[u16], b: &[u16]) -> Vec<u16> {
    let p = p as u32;
    let mut r: Vec<u32> = a.iter().map(|&c| c as u32).collect();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let t = (lead * bc as u32) % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r.iter().map(|&c| (c % p) as u16).collect()
}

/// Table-free polynomial-basis multiply, used only while building tables.
fn mul_slow(f: &FieldInner, a: u16, b: u16) -> u16 {
    let p = f.p as u32;
    let e = f.e as usize;
    let modulus = f.modulus.as_ref().unwrap();
    let to_digits = |mut v: u16| {
        let mut d = vec![0u32; e];
        for dd in d.iter_mut() {
            *dd = (v % f.p) as u32;
            v /= f.p;
        }
        d
    };
    let da = to_digits(a);
    let db = to_digits(b);
    let mut prod = vec![0u32; 2 * e - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // Reduce by the monic modulus.
    for i in (e..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for (j, &mc) in modulus.iter().enumerate().take(e) {
            let idx = i - e + j;
            prod[idx] = (prod[idx] + p - (c * mc as u32) % p) % p;
        }
    }
    let mut out = 0u32;
    for i in (0..e).rev() {
        out = out * p + prod[i];
    }
    out as u16
}

fn build_tables(f: &mut FieldInner) {
    let q = f.q;
    let m = (q - 1) as u64;
    let factors = prime_factors(m);
    let pow_slow = |g: u16, mut n: u64| {
        let mut base = g;
        let mut acc = 1u16;
        while n > 0 {
            if n & 1 == 1 {
                acc = mul_slow(f, acc, base);
            }
            base = mul_slow(f, base, base);
            n >>= 1;
        }
        acc
    };
    // The polynomial x (value p) is primitive for every built-in modulus;
    // scan upward for user-supplied ones.
    let mut generator = 0u16;
    for g in (f.p..q as u16).chain(2..f.p) {
        if factors.iter().all(|&r| pow_slow(g, m / r) != 1) {
            generator = g;
            break;
        }
    }
    debug_assert!(generator != 0, "a primitive element always exists");
    let mut exp = Vec::with_capacity(m as usize);
    let mut log = vec![0u16; q as usize];
    let mut acc = 1u16;
    for i in 0..m {
        exp.push(acc);
        log[acc as usize] = i as u16;
        acc = mul_slow(f, acc, generator);
    }
    f.exp = exp;
    f.log = log;
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(q: u32) -> FieldSpec {
        match q {
            2 => make_field(2, 1, None).unwrap(),
            3 => make_field(3, 1, None).unwrap(),
            4 => make_field(2, 2, None).unwrap(),
            5 => make_field(5, 1, None).unwrap(),
            7 => make_field(7, 1, None).unwrap(),
            8 => make_field(2, 3, None).unwrap(),
            9 => make_field(3, 2, None).unwrap(),
            13 => make_field(13, 1, None).unwrap(),
            16 => make_field(2, 4, None).unwrap(),
            27 => make_field(3, 3, None).unwrap(),
            251 => make_field(251, 1, None).unwrap(),
            // AES polynomial x^8 + x^4 + x^3 + x + 1
            256 => make_field(2, 8, Some(&[1, 1, 0, 1, 1, 0, 0, 0, 1])).unwrap(),
            _ => panic!("no test field of order {q}"),
        }
    }

    #[test]
    fn prime_field_examples() {
        let f3 = gf(3);
        assert_eq!(f3.mul(2, 2), 1);
        assert_eq!(f3.neg(1), 2);
        assert_eq!(f3.inv(2), 2);
        let f2 = gf(2);
        assert_eq!(f2.add(1, 1), 0);
        assert_eq!(f2.inv(1), 1);
    }

    #[test]
    fn gf4_from_modulus() {
        // a = x has value 2; a^2 = a + 1 which encodes as 3.
        let f4 = gf(4);
        assert_eq!(f4.order(), 4);
        assert_eq!(f4.mul(2, 2), 3);
        assert_eq!(f4.inv(2), 3); // a * (a+1) = a^2 + a = 1
        assert_eq!(f4.mul(2, 3), 1);
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 13, 16] {
            let f = gf(q);
            for a in 0..q as u16 {
                for b in 0..q as u16 {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, f.neg(a)), 0);
                    for c in 0..q as u16 {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity in GF({q}) at {a},{b},{c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn inverses_and_frobenius_up_to_256() {
        for q in [2u32, 3, 4, 8, 9, 16, 27, 251, 256] {
            let f = gf(q);
            for a in 1..q as u16 {
                assert_eq!(f.mul(a, f.inv(a)), 1, "inv in GF({q}) at {a}");
            }
            for a in 0..q as u16 {
                assert_eq!(f.pow(a, q as u64), a, "x^q = x in GF({q}) at {a}");
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(make_field(4, 1, None), Err(Error::NotPrime(4))));
        assert!(matches!(make_field(1, 1, None), Err(Error::NotPrime(1))));
        assert!(matches!(
            make_field(2, 17, None),
            Err(Error::FieldTooLarge(_))
        ));
        assert!(matches!(
            make_field(2, 5, None),
            Err(Error::NoDefaultModulus { p: 2, e: 5 })
        ));
        // x^2 + 1 = (x + 1)^2 over GF(2)
        assert!(matches!(
            make_field(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus(1))
        ));
        assert!(matches!(
            make_field(3, 2, Some(&[1, 1, 2])),
            Err(Error::NotMonicModulus)
        ));
        assert!(matches!(
            make_field(2, 2, Some(&[1, 2, 1])),
            Err(Error::BadModulusCoefficient(2, 2))
        ));
        assert!(matches!(
            make_field(3, 1, Some(&[1, 1])),
            Err(Error::ModulusForPrimeField)
        ));
        assert!(matches!(make_field(2, 0, None), Err(Error::BadExtensionDegree)));
    }

    #[test]
    fn element_checks() {
        let f2 = gf(2);
        let f3 = gf(3);
        assert!(matches!(
            f3.element(3),
            Err(Error::ElementOutOfRange { value: 3, q: 3 })
        ));
        let a = f2.one();
        let b = f3.one();
        assert!(matches!(a.add(&b), Err(Error::MixedFields)));
        assert!(matches!(a.mul(&b), Err(Error::MixedFields)));
        assert!(matches!(f3.zero().inv(), Err(Error::ZeroInverse)));
        assert_eq!(f3.element(2).unwrap().neg().value(), 1);
    }

    #[test]
    fn deterministic_construction() {
        let a = gf(9);
        let b = gf(9);
        assert_eq!(a, b);
        assert_ne!(gf(4), gf(2));
        // Same order, different modulus: distinct fields.
        let other = make_field(2, 8, Some(&[1, 0, 1, 1, 1, 0, 0, 0, 1]));
        if let Ok(other) = other {
            assert_ne!(other, gf(256));
        }
    }

    proptest! {
        #[test]
        fn axioms_random_gf256(a in 0u16..256, b in 0u16..256, c in 0u16..256) {
            let f = gf(256);
            prop_assert_eq!(f.add(a, b), f.add(b, a));
            prop_assert_eq!(f.mul(a, b), f.mul(b, a));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
        }
    }
}
