//! Univariate polynomials over a [`Gf`] and the cyclic quotient ring
//! F\[x\]/(x^s - 1).
//!
//! Arithmetic operators on references (`&a + &b`, `&a * &b`) panic when the
//! operands live over different fields or different `s`; the `checked_*`
//! methods report [`Error::FieldMismatch`] / [`Error::ShapeMismatch`] instead.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};

/// Polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Gf,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<u32> = self.coeffs.iter().map(|c| c.0).collect();
        write!(f, "Poly{v:?}")
    }
}

impl Poly {
    pub fn new(field: &Gf, mut coeffs: Vec<Elem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// From integer encodings, reduced into the field.
    pub fn from_u32s(field: &Gf, coeffs: &[u32]) -> Poly {
        Poly::new(
            field,
            coeffs.iter().map(|&c| field.elem(c as u64)).collect(),
        )
    }

    pub fn zero(field: &Gf) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Gf) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Gf, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// c·x^deg
    pub fn monomial(field: &Gf, c: Elem, deg: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; deg + 1];
        coeffs[deg] = c;
        Poly::new(field, coeffs)
    }

    /// x^s - 1
    pub fn x_pow_minus_one(field: &Gf, s: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; s + 1];
        coeffs[0] = field.neg(Elem::ONE);
        coeffs[s] = field.add(coeffs[s], Elem::ONE);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn to_u32s(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.0).collect()
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    pub fn scale(&self, c: Elem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = f.inv(divisor.coeffs[db])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + db], inv_lead);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Quotient of an exact division, `None` if the remainder is nonzero.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Extended gcd: `(g, u, v)` with `u·self + v·other = g`, `g` monic.
    /// `xgcd(0, 0) = (0, 0, 0)`.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other)?;
        let f = &self.field;
        if self == other {
            let g = self.monic();
            let u = match self.leading() {
                Some(lc) => Poly::constant(f, f.inv(lc)?),
                None => Poly::zero(f),
            };
            return Ok((g, u, Poly::zero(f)));
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(f), Poly::zero(f));
        let (mut v0, mut v1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let u = &u0 - &(&q * &u1);
            let v = &v0 - &(&q * &v1);
            r0 = core::mem::replace(&mut r1, r);
            u0 = core::mem::replace(&mut u1, u);
            v0 = core::mem::replace(&mut v1, v);
        }
        match r0.leading() {
            None => Ok((r0, Poly::zero(f), Poly::zero(f))),
            Some(lc) => {
                let inv = f.inv(lc)?;
                Ok((r0.scale(inv), u0.scale(inv), v0.scale(inv)))
            }
        }
    }
}

fn zip_with(a: &Poly, b: &Poly, op: impl Fn(Elem, Elem) -> Elem) -> Poly {
    assert!(a.field == b.field, "polynomials over different fields");
    let n = a.coeffs.len().max(b.coeffs.len());
    Poly::new(
        &a.field,
        (0..n).map(|i| op(a.coeff(i), b.coeff(i))).collect(),
    )
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let f = self.field.clone();
        zip_with(self, rhs, |x, y| f.add(x, y))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let f = self.field.clone();
        zip_with(self, rhs, |x, y| f.sub(x, y))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![Elem::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

/// Element of S = F\[x\]/(x^s - 1) as a length-`s` coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Residue {
    field: Gf,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<u32> = self.coeffs.iter().map(|c| c.0).collect();
        write!(f, "Residue{v:?}")
    }
}

impl Residue {
    pub fn zero(field: &Gf, s: usize) -> Residue {
        assert!(s >= 1, "s must be positive");
        Residue {
            field: field.clone(),
            coeffs: vec![Elem::ZERO; s],
        }
    }

    pub fn one(field: &Gf, s: usize) -> Residue {
        let mut r = Residue::zero(field, s);
        r.coeffs[0] = Elem::ONE;
        r
    }

    /// x^t
    pub fn x_pow(field: &Gf, s: usize, t: usize) -> Residue {
        let mut r = Residue::zero(field, s);
        r.coeffs[t % s] = Elem::ONE;
        r
    }

    /// Folds coefficient i onto i mod s.
    pub fn from_poly(s: usize, p: &Poly) -> Residue {
        let f = p.field();
        let mut r = Residue::zero(f, s);
        for (i, &c) in p.coeffs().iter().enumerate() {
            r.coeffs[i % s] = f.add(r.coeffs[i % s], c);
        }
        r
    }

    /// Takes exactly `s` coefficients.
    pub fn from_coeffs(field: &Gf, coeffs: Vec<Elem>) -> Residue {
        assert!(!coeffs.is_empty(), "s must be positive");
        Residue {
            field: field.clone(),
            coeffs,
        }
    }

    /// Canonical representative of degree below `s`.
    pub fn lift(&self) -> Poly {
        Poly::new(&self.field, self.coeffs.clone())
    }

    pub fn s(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, c: Elem) {
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiplication by x^t: index i moves to (i + t) mod s.
    pub fn shift(&self, t: usize) -> Residue {
        let s = self.s();
        let mut out = vec![Elem::ZERO; s];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(i + t) % s] = c;
        }
        Residue {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    pub fn scale(&self, c: Elem) -> Residue {
        let f = &self.field;
        Residue {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    fn check(&self, other: &Residue) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else if self.s() != other.s() {
            Err(Error::ShapeMismatch)
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self * other)
    }

    /// `self += c · other`, in place.
    pub fn add_scaled(&mut self, c: Elem, other: &Residue) {
        assert!(self.s() == other.s(), "residues with different s");
        if c.is_zero() {
            return;
        }
        let f = &self.field;
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.add(*a, f.mul(c, b));
        }
    }
}

fn residue_zip(a: &Residue, b: &Residue, op: impl Fn(Elem, Elem) -> Elem) -> Residue {
    assert!(a.field == b.field, "residues over different fields");
    assert!(a.s() == b.s(), "residues with different s");
    Residue {
        field: a.field.clone(),
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| op(x, y))
            .collect(),
    }
}

impl Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        let f = self.field.clone();
        residue_zip(self, rhs, |x, y| f.add(x, y))
    }
}

impl Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        let f = self.field.clone();
        residue_zip(self, rhs, |x, y| f.sub(x, y))
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        let f = &self.field;
        Residue {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }
}

impl Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        assert!(self.field == rhs.field, "residues over different fields");
        assert!(self.s() == rhs.s(), "residues with different s");
        let f = &self.field;
        let s = self.s();
        let mut out = vec![Elem::ZERO; s];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) % s;
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        Residue {
            field: f.clone(),
            coeffs: out,
        }
    }
}

/// True iff `p` divides x^s - 1.
pub fn divides_x_pow_minus_one(s: usize, p: &Poly) -> Result<bool> {
    p.divides(&Poly::x_pow_minus_one(p.field(), s))
}

/// The exact quotient (x^s - 1) / p.
pub fn cofactor(s: usize, p: &Poly) -> Result<Poly> {
    Poly::x_pow_minus_one(p.field(), s)
        .exact_div(p)?
        .ok_or(Error::NotADivisor)
}
