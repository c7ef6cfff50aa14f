//! Arithmetic in GF(p^m).
//!
//! Elements are stored as their base-p integer encoding: the polynomial-basis
//! coordinate vector `(c_0, ..., c_{m-1})` maps to `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
//! The same integer is used for I/O, so [`Gf::elem`] is the element constructor.
//!
//! Multiplication in proper extensions goes through exp/log tables built from a
//! primitive element found at construction time.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest accepted field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// Field element, as its base-p integer encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }
}

/// Description of a finite field: characteristic, degree, and (for m > 1)
/// the defining modulus as ascending coefficients over GF(p), leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Self {
        FieldSpec {
            p,
            m: 1,
            modulus: None,
        }
    }

    pub fn extension(p: u32, m: u32, modulus: Vec<u32>) -> Self {
        FieldSpec {
            p,
            m,
            modulus: Some(modulus),
        }
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    q: u32,
    tables: Option<Tables>,
}

/// A validated finite field. Cheap to clone; all clones compare equal.
#[derive(Clone)]
pub struct Gf {
    inner: Arc<Inner>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.inner.spec;
        match &s.modulus {
            Some(md) => write!(f, "GF({}^{} mod {:?})", s.p, s.m, md),
            None => write!(f, "GF({})", s.p),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over GF(p) as ascending u32 vectors; used only to vet
// moduli and build tables before a `Gf` exists.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p prime, a != 0: a^(p-2)
    pow_mod(a, p - 2, p)
}

fn pow_mod(base: u32, mut e: u32, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    let mut b = base as u64 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc as u32
}

fn prime_poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let inv_lead = inv_mod_p(b[db], p) as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr] as u64 * inv_lead % p as u64;
        for (i, &bi) in b.iter().enumerate() {
            let k = dr - db + i;
            let sub = f * bi as u64 % p as u64;
            r[k] = ((r[k] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

fn prime_poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    let out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    prime_poly_rem(&out, modulus, p)
}

fn digits(mut n: u32, p: u32, m: u32) -> Vec<u32> {
    let mut d = Vec::with_capacity(m as usize);
    for _ in 0..m {
        d.push(n % p);
        n /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() as u32 - 1;
    for deg in 1..=m / 2 {
        let count = p.pow(deg);
        for low in 0..count {
            let mut cand = digits(low, p, deg);
            cand.push(1);
            if prime_poly_rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// First monic irreducible of degree m, ordered by the base-p integer of its
/// lower coefficients. For GF(4), GF(8), GF(9), GF(16) this gives x^2+x+1,
/// x^3+x+1, x^2+1, x^4+x+1.
pub fn default_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    if m < 2 {
        return None;
    }
    let count = p.checked_pow(m)?;
    (0..count).find_map(|low| {
        let mut cand = digits(low, p, m);
        cand.push(1);
        is_irreducible(&cand, p).then_some(cand)
    })
}

fn build_tables(p: u32, m: u32, modulus: &[u32]) -> Tables {
    let q = p.pow(m);
    let order = q - 1;
    let mut exp = vec![0u32; 2 * order as usize];
    let mut log = vec![0u32; q as usize];
    for cand in 2..q {
        let g = digits(cand, p, m);
        let mut acc = trim(vec![1]);
        let mut k = 0u32;
        let ok;
        loop {
            let enc = undigits(&acc, p);
            if k > 0 && enc == 1 {
                ok = k == order;
                break;
            }
            if k >= order {
                ok = false;
                break;
            }
            exp[k as usize] = enc;
            k += 1;
            acc = prime_poly_mulmod(&acc, &trim(g.clone()), modulus, p);
        }
        if ok {
            for i in 0..order as usize {
                exp[i + order as usize] = exp[i];
                log[exp[i] as usize] = i as u32;
            }
            return Tables { exp, log };
        }
    }
    unreachable!("multiplicative group of a field is cyclic")
}

impl Gf {
    /// Validates the descriptor and builds the field. For m > 1 without a
    /// modulus, [`default_modulus`] is used.
    pub fn new(spec: FieldSpec) -> Result<Gf> {
        let FieldSpec { p, m, modulus } = spec;
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_SIZE)
            .ok_or(Error::FieldTooLarge { p, m })?;
        if m == 1 {
            if let Some(md) = &modulus {
                // Only the trivial degree-1 modulus x is meaningful here.
                if md.as_slice() != [0, 1] {
                    return Err(Error::BadModulus("a prime field takes no modulus"));
                }
            }
            return Ok(Gf {
                inner: Arc::new(Inner {
                    spec: FieldSpec::prime(p),
                    q,
                    tables: None,
                }),
            });
        }
        let modulus = match modulus {
            Some(md) => md,
            None => default_modulus(p, m).ok_or(Error::ReducibleModulus)?,
        };
        if modulus.len() != m as usize + 1 {
            return Err(Error::BadModulus("modulus must have m + 1 coefficients"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadModulus("modulus coefficient is not below p"));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::BadModulus("modulus must be monic"));
        }
        if !is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus);
        }
        let tables = build_tables(p, m, &modulus);
        Ok(Gf {
            inner: Arc::new(Inner {
                spec: FieldSpec {
                    p,
                    m,
                    modulus: Some(modulus),
                },
                q,
                tables: Some(tables),
            }),
        })
    }

    /// GF(p) for prime p.
    pub fn prime(p: u32) -> Result<Gf> {
        Gf::new(FieldSpec::prime(p))
    }

    /// GF(p^m) with the default modulus.
    pub fn with_default_modulus(p: u32, m: u32) -> Result<Gf> {
        Gf::new(FieldSpec {
            p,
            m,
            modulus: None,
        })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.spec.m
    }

    /// Number of elements q = p^m.
    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// The element whose encoding is `n mod q`.
    pub fn elem(&self, n: u64) -> Elem {
        Elem((n % self.inner.q as u64) as u32)
    }

    /// Checked decoding of an I/O integer.
    pub fn decode(&self, n: u64) -> Result<Elem> {
        if n < self.inner.q as u64 {
            Ok(Elem(n as u32))
        } else {
            Err(Error::ElementOutOfRange {
                value: n,
                q: self.inner.q,
            })
        }
    }

    /// Polynomial-basis coordinates of `a`, ascending.
    pub fn coords(&self, a: Elem) -> Vec<u32> {
        digits(a.0, self.inner.spec.p, self.inner.spec.m)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.inner.q).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.inner.spec.p;
        if self.inner.spec.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= p { s - p } else { s });
        }
        if p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.inner.spec.m {
            let d = (x % p + y % p) % p;
            out += d * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.inner.spec.p;
        if p == 2 || a.0 == 0 {
            return a;
        }
        if self.inner.spec.m == 1 {
            return Elem(p - a.0);
        }
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.inner.spec.m {
            let d = (p - x % p) % p;
            out += d * place;
            place *= p;
            x /= p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        match &self.inner.tables {
            None => Elem(((a.0 as u64 * b.0 as u64) % self.inner.spec.p as u64) as u32),
            Some(t) => Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.inner.tables {
            None => Elem(inv_mod_p(a.0, self.inner.spec.p)),
            Some(t) => {
                let order = self.inner.q - 1;
                let l = t.log[a.0 as usize];
                Elem(t.exp[((order - l) % order) as usize])
            }
        })
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// Binds an element to this field for checked arithmetic.
    pub fn bind(&self, a: Elem) -> FieldElement {
        FieldElement {
            field: self.clone(),
            value: self.elem(a.0 as u64),
        }
    }
}

/// A field element that carries its field, with mismatch-checked operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Gf,
    value: Elem,
}

impl FieldElement {
    pub fn new(field: &Gf, n: u64) -> Self {
        FieldElement {
            field: field.clone(),
            value: field.elem(n),
        }
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    fn same(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.with(self.field.inv(self.value)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Gf {
        Gf::new(FieldSpec::extension(2, 2, vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn make_reduces_mod_q() {
        assert_eq!(Gf::prime(2).unwrap().elem(3), Elem(1));
        assert_eq!(Gf::prime(3).unwrap().elem(5), Elem(2));
        let f = gf4();
        assert_eq!(f.elem(2), Elem(2));
        assert_eq!(f.coords(f.elem(2)), vec![0, 1]);
    }

    #[test]
    fn small_arithmetic() {
        let f2 = Gf::prime(2).unwrap();
        let f3 = Gf::prime(3).unwrap();
        let f5 = Gf::prime(5).unwrap();
        let f4 = gf4();
        let alpha = Elem(2);
        assert_eq!(f2.add(Elem(1), Elem(1)), Elem(0));
        assert_eq!(f3.add(Elem(2), Elem(2)), Elem(1));
        assert_eq!(f4.add(alpha, alpha), Elem(0));
        assert_eq!(f3.mul(Elem(2), Elem(2)), Elem(1));
        assert_eq!(f4.mul(alpha, alpha), Elem(3));
        assert_eq!(f3.inv(Elem(2)), Ok(Elem(2)));
        assert_eq!(f5.inv(Elem(3)), Ok(Elem(2)));
        assert_eq!(f4.inv(alpha), Ok(Elem(3)));
        assert_eq!(f5.inv(Elem(0)), Err(Error::ZeroInverse));
    }

    #[test]
    fn enumeration_order() {
        let f = gf4();
        let all: Vec<_> = f.elements().collect();
        assert_eq!(all, vec![Elem(0), Elem(1), Elem(2), Elem(3)]);
        assert_eq!(Gf::prime(3).unwrap().elements().count(), 3);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 2), Some(vec![1, 1, 1]));
        assert_eq!(default_modulus(2, 3), Some(vec![1, 1, 0, 1]));
        assert_eq!(default_modulus(3, 2), Some(vec![1, 0, 1]));
        assert_eq!(default_modulus(2, 4), Some(vec![1, 1, 0, 0, 1]));
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert_eq!(Gf::prime(4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Gf::prime(1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(
            Gf::new(FieldSpec::extension(2, 2, vec![1, 0, 1])).unwrap_err(),
            Error::ReducibleModulus
        );
        assert!(matches!(
            Gf::new(FieldSpec::extension(2, 2, vec![1, 1, 0])),
            Err(Error::BadModulus(_))
        ));
        assert_eq!(
            Gf::with_default_modulus(2, 17).unwrap_err(),
            Error::FieldTooLarge { p: 2, m: 17 }
        );
        assert!(Gf::with_default_modulus(2, 16).is_ok());
        assert_eq!(
            Gf::with_default_modulus(2, 0).unwrap_err(),
            Error::ZeroDegree
        );
    }

    #[test]
    fn bound_elements_check_fields() {
        let f2 = Gf::prime(2).unwrap();
        let f3 = Gf::prime(3).unwrap();
        let a = FieldElement::new(&f2, 1);
        let b = FieldElement::new(&f3, 1);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.add(&a).unwrap().value(), Elem(0));
        let c = FieldElement::new(&f3, 2);
        assert_eq!(c.inv().unwrap().value(), Elem(2));
        assert_eq!(c.mul(&c.inv().unwrap()).unwrap().value(), Elem::ONE);
    }

    fn small_fields() -> Vec<Gf> {
        let mut out = Vec::new();
        for p in [
            2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
        ] {
            for m in 1..7 {
                if p.checked_pow(m).is_some_and(|q| q <= 64) {
                    out.push(Gf::with_default_modulus(p, m).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let all: Vec<Elem> = f.elements().collect();
            for &a in &all {
                assert_eq!(f.add(a, Elem::ZERO), a);
                assert_eq!(f.mul(a, Elem::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), Elem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE, "{f:?} {a:?}");
                }
                for &b in &all {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &all {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn make_is_periodic() {
        for f in small_fields() {
            let q = f.order() as u64;
            for n in 0..2 * q {
                assert_eq!(f.elem(n), f.elem(n % q));
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for f in small_fields().into_iter().filter(|f| f.order() <= 16) {
            let p = f.characteristic() as u64;
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                }
            }
        }
    }
}
