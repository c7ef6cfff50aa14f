//! Elements of R = F\[x,y\]/(x^s - 1, y^ell - 1).
//!
//! A [`RingElem`] is stored as its y-expansion `f_0(x) + f_1(x) y + ... +
//! f_{ell-1}(x) y^{ell-1}` with each `f_j` a [`Residue`]. The s×ell codeword
//! array puts the coefficient of x^i y^j at row i, column j.
//!
//! Two flattenings exist and must not be confused:
//! [`FlatOrder::Internal`] groups by y-block (index `j*s + i`), which is what
//! the ideal engine eliminates over; [`FlatOrder::Codeword`] is the row-major
//! array (index `i*ell + j`) used for emitted matrices and codewords.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::poly::{Poly, Residue};

/// Largest accepted `s * ell`.
pub const MAX_LENGTH: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingShape {
    field: Gf,
    s: usize,
    ell: usize,
}

impl RingShape {
    pub fn new(field: &Gf, s: usize, ell: usize) -> Result<RingShape> {
        if s == 0 || ell == 0 || s.checked_mul(ell).is_none_or(|n| n > MAX_LENGTH) {
            return Err(Error::BadShape { s, ell });
        }
        Ok(RingShape {
            field: field.clone(),
            s,
            ell,
        })
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    /// Number of rows; the x-modulus exponent.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of columns; the y-modulus exponent.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Code length n = s·ell.
    pub fn n(&self) -> usize {
        self.s * self.ell
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlatOrder {
    /// `(i, j) -> j*s + i`
    Internal,
    /// `(i, j) -> i*ell + j`
    Codeword,
}

impl FlatOrder {
    #[inline]
    pub fn index(self, shape: &RingShape, i: usize, j: usize) -> usize {
        match self {
            FlatOrder::Internal => j * shape.s + i,
            FlatOrder::Codeword => i * shape.ell + j,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RingElem {
    shape: RingShape,
    coords: Vec<Residue>,
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coords.iter()).finish()
    }
}

impl RingElem {
    pub fn zero(shape: &RingShape) -> RingElem {
        RingElem {
            shape: shape.clone(),
            coords: vec![Residue::zero(&shape.field, shape.s); shape.ell],
        }
    }

    pub fn one(shape: &RingShape) -> RingElem {
        RingElem::monomial(shape, Elem::ONE, 0, 0)
    }

    /// c·x^a·y^b
    pub fn monomial(shape: &RingShape, c: Elem, a: usize, b: usize) -> RingElem {
        let mut e = RingElem::zero(shape);
        e.coords[b % shape.ell].set_coeff(a % shape.s, c);
        e
    }

    /// The element g(x) with no y-dependence.
    pub fn from_x_poly(shape: &RingShape, g: &Poly) -> RingElem {
        let mut e = RingElem::zero(shape);
        e.coords[0] = Residue::from_poly(shape.s, g);
        e
    }

    /// From the y-expansion coordinates `f_0, ..., f_{ell-1}`.
    pub fn from_coords(shape: &RingShape, coords: Vec<Residue>) -> Result<RingElem> {
        if coords.len() != shape.ell {
            return Err(Error::DimensionMismatch {
                expected: shape.ell,
                found: coords.len(),
            });
        }
        for c in &coords {
            if c.field() != &shape.field {
                return Err(Error::FieldMismatch);
            }
            if c.s() != shape.s {
                return Err(Error::DimensionMismatch {
                    expected: shape.s,
                    found: c.s(),
                });
            }
        }
        Ok(RingElem {
            shape: shape.clone(),
            coords,
        })
    }

    /// From the s×ell array; `array[i][j]` is the coefficient of x^i y^j.
    pub fn from_array(shape: &RingShape, array: &[Vec<Elem>]) -> Result<RingElem> {
        if array.len() != shape.s {
            return Err(Error::DimensionMismatch {
                expected: shape.s,
                found: array.len(),
            });
        }
        let mut e = RingElem::zero(shape);
        for (i, row) in array.iter().enumerate() {
            if row.len() != shape.ell {
                return Err(Error::DimensionMismatch {
                    expected: shape.ell,
                    found: row.len(),
                });
            }
            for (j, &c) in row.iter().enumerate() {
                if c.0 >= shape.field.order() {
                    return Err(Error::ElementOutOfRange {
                        value: c.0 as u64,
                        q: shape.field.order(),
                    });
                }
                e.coords[j].set_coeff(i, c);
            }
        }
        Ok(e)
    }

    pub fn to_array(&self) -> Vec<Vec<Elem>> {
        (0..self.shape.s)
            .map(|i| {
                (0..self.shape.ell)
                    .map(|j| self.coords[j].coeff(i))
                    .collect()
            })
            .collect()
    }

    pub fn shape(&self) -> &RingShape {
        &self.shape
    }

    pub fn coords(&self) -> &[Residue] {
        &self.coords
    }

    /// f_j(x), the coefficient of y^j.
    pub fn coord(&self, j: usize) -> &Residue {
        &self.coords[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Residue::is_zero)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coords
            .iter()
            .map(|c| c.coeffs().iter().filter(|e| !e.is_zero()).count())
            .sum()
    }

    pub fn to_vector(&self, order: FlatOrder) -> Vec<Elem> {
        let mut v = vec![Elem::ZERO; self.shape.n()];
        for (j, c) in self.coords.iter().enumerate() {
            for (i, &e) in c.coeffs().iter().enumerate() {
                v[order.index(&self.shape, i, j)] = e;
            }
        }
        v
    }

    pub fn from_vector(shape: &RingShape, order: FlatOrder, v: &[Elem]) -> Result<RingElem> {
        if v.len() != shape.n() {
            return Err(Error::DimensionMismatch {
                expected: shape.n(),
                found: v.len(),
            });
        }
        let mut e = RingElem::zero(shape);
        for j in 0..shape.ell {
            for i in 0..shape.s {
                e.coords[j].set_coeff(i, v[order.index(shape, i, j)]);
            }
        }
        Ok(e)
    }

    pub fn scale(&self, c: Elem) -> RingElem {
        RingElem {
            shape: self.shape.clone(),
            coords: self.coords.iter().map(|r| r.scale(c)).collect(),
        }
    }

    /// Multiplication by x: every f_j is cyclically shifted by one.
    pub fn shift_x(&self) -> RingElem {
        self.shift_x_by(1)
    }

    pub fn shift_x_by(&self, t: usize) -> RingElem {
        RingElem {
            shape: self.shape.clone(),
            coords: self.coords.iter().map(|r| r.shift(t)).collect(),
        }
    }

    /// Multiplication by y: new f_j = old f_{j-1 mod ell}.
    pub fn shift_y(&self) -> RingElem {
        self.shift_y_by(1)
    }

    pub fn shift_y_by(&self, t: usize) -> RingElem {
        let ell = self.shape.ell;
        let mut coords = self.coords.clone();
        coords.rotate_right(t % ell);
        RingElem {
            shape: self.shape.clone(),
            coords,
        }
    }

    /// Multiplication by an element of S (a polynomial in x alone).
    pub fn mul_residue(&self, q: &Residue) -> RingElem {
        RingElem {
            shape: self.shape.clone(),
            coords: self.coords.iter().map(|r| r * q).collect(),
        }
    }

    fn check(&self, other: &RingElem) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::ShapeMismatch)
        }
    }

    pub fn checked_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(self * other)
    }

    /// Checked scalar multiplication by a bound field element.
    pub fn checked_scale(&self, c: &crate::gf::FieldElement) -> Result<RingElem> {
        if c.field() != &self.shape.field {
            return Err(Error::FieldMismatch);
        }
        Ok(self.scale(c.value()))
    }
}

fn coordwise(a: &RingElem, b: &RingElem, op: impl Fn(&Residue, &Residue) -> Residue) -> RingElem {
    assert!(a.shape == b.shape, "ring elements with different shapes");
    RingElem {
        shape: a.shape.clone(),
        coords: a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| op(x, y))
            .collect(),
    }
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        coordwise(self, rhs, |x, y| x + y)
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        coordwise(self, rhs, |x, y| x - y)
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            shape: self.shape.clone(),
            coords: self.coords.iter().map(|r| -r).collect(),
        }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    /// Convolution in y modulo y^ell - 1 with products in S.
    fn mul(self, rhs: &RingElem) -> RingElem {
        assert!(
            self.shape == rhs.shape,
            "ring elements with different shapes"
        );
        let ell = self.shape.ell;
        let mut out = RingElem::zero(&self.shape);
        for (a, fa) in self.coords.iter().enumerate() {
            if fa.is_zero() {
                continue;
            }
            for (b, gb) in rhs.coords.iter().enumerate() {
                if gb.is_zero() {
                    continue;
                }
                let k = (a + b) % ell;
                out.coords[k] = &out.coords[k] + &(fa * gb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(p: u32, s: usize, ell: usize) -> RingShape {
        RingShape::new(&Gf::prime(p).unwrap(), s, ell).unwrap()
    }

    fn arr(rows: &[&[u32]]) -> Vec<Vec<Elem>> {
        rows.iter()
            .map(|r| r.iter().map(|&c| Elem(c)).collect())
            .collect()
    }

    fn res(sh: &RingShape, c: &[u32]) -> Residue {
        Residue::from_poly(sh.s(), &Poly::from_u32s(sh.field(), c))
    }

    #[test]
    fn array_bijection_examples() {
        let sh = shape(2, 2, 2);
        let e = RingElem::from_array(&sh, &arr(&[&[1, 0], &[1, 0]])).unwrap();
        assert_eq!(e.coords(), &[res(&sh, &[1, 1]), res(&sh, &[])]);
        let e2 = RingElem::from_array(&sh, &arr(&[&[0, 1], &[0, 1]])).unwrap();
        assert_eq!(e2.coords(), &[res(&sh, &[]), res(&sh, &[1, 1])]);
        assert!(RingElem::from_array(&sh, &arr(&[&[0, 0], &[0, 0]]))
            .unwrap()
            .is_zero());
        assert_eq!(e.to_array(), arr(&[&[1, 0], &[1, 0]]));
        assert_eq!(
            RingElem::from_array(&sh, &arr(&[&[0, 0, 0], &[0, 0, 0]])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            RingElem::from_array(&sh, &arr(&[&[0, 0]])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn linear_ops() {
        let sh2 = shape(2, 2, 2);
        let a = RingElem::from_array(&sh2, &arr(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(&a + &RingElem::zero(&sh2), a);
        assert!((&a + &a).is_zero());
        let sh3 = shape(3, 2, 2);
        let b = RingElem::from_array(&sh3, &arr(&[&[1, 2], &[0, 1]])).unwrap();
        assert!((&b.scale(Elem(2)) + &b).is_zero());
        assert_eq!(b.checked_add(&a), Err(Error::ShapeMismatch));
    }

    #[test]
    fn shifts() {
        let sh = shape(2, 2, 2);
        let one = RingElem::one(&sh);
        assert_eq!(one.shift_y().coords(), &[res(&sh, &[]), res(&sh, &[1])]);
        let e = RingElem::from_coords(&sh, vec![res(&sh, &[1, 1]), res(&sh, &[])]).unwrap();
        assert_eq!(e.shift_x(), e);
        let sh = shape(3, 3, 4);
        let g = RingElem::from_array(&sh, &arr(&[&[1, 2, 0, 1], &[0, 0, 1, 2], &[2, 1, 1, 0]]))
            .unwrap();
        let mut h = g.clone();
        for _ in 0..4 {
            h = h.shift_y();
        }
        assert_eq!(h, g);
        let mut h = g.clone();
        for _ in 0..3 {
            h = h.shift_x();
        }
        assert_eq!(h, g);
    }

    #[test]
    fn multiplication_examples() {
        let sh = shape(2, 2, 2);
        let a = RingElem::from_array(&sh, &arr(&[&[1, 1], &[0, 1]])).unwrap();
        assert_eq!(&a * &RingElem::one(&sh), a);
        let one_plus_x = RingElem::from_x_poly(&sh, &Poly::from_u32s(sh.field(), &[1, 1]));
        let y = RingElem::monomial(&sh, Elem::ONE, 0, 1);
        assert_eq!(
            (&one_plus_x * &y).coords(),
            &[res(&sh, &[]), res(&sh, &[1, 1])]
        );
        // (1+y)^2 = 1 + 2y + y^2 = 1 + 0 + 1 = 0 in char 2 with y^2 = 1
        let one_plus_y = &RingElem::one(&sh) + &y;
        assert!((&one_plus_y * &one_plus_y).is_zero());
    }

    #[test]
    fn flattening_orders() {
        let sh = shape(2, 2, 2);
        let e = RingElem::from_coords(&sh, vec![res(&sh, &[1, 1]), res(&sh, &[])]).unwrap();
        let ints = |v: Vec<Elem>| v.into_iter().map(|c| c.0).collect::<Vec<_>>();
        assert_eq!(ints(e.to_vector(FlatOrder::Internal)), vec![1, 1, 0, 0]);
        assert_eq!(ints(e.to_vector(FlatOrder::Codeword)), vec![1, 0, 1, 0]);
        let e2 = RingElem::from_coords(&sh, vec![res(&sh, &[]), res(&sh, &[1, 1])]).unwrap();
        assert_eq!(ints(e2.to_vector(FlatOrder::Internal)), vec![0, 0, 1, 1]);
        assert_eq!(ints(e2.to_vector(FlatOrder::Codeword)), vec![0, 1, 0, 1]);
        for order in [FlatOrder::Internal, FlatOrder::Codeword] {
            assert_eq!(
                RingElem::from_vector(&sh, order, &e.to_vector(order)).unwrap(),
                e
            );
        }
        assert!(RingElem::from_vector(&sh, FlatOrder::Internal, &[Elem(0); 3]).is_err());
        let z = RingElem::zero(&sh);
        assert!(z.to_vector(FlatOrder::Codeword).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn shape_bounds() {
        let f = Gf::prime(2).unwrap();
        assert!(RingShape::new(&f, 0, 3).is_err());
        assert!(RingShape::new(&f, 3, 0).is_err());
        assert!(RingShape::new(&f, 256, 256).is_ok());
        assert!(RingShape::new(&f, 257, 256).is_err());
    }
}
