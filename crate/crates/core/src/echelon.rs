//! Incremental reduced row-echelon form over a finite field.

use alloc::vec::Vec;

use crate::gf::{Elem, Gf};

/// A reduced row-echelon basis: rows sorted by strictly increasing pivot,
/// every pivot entry is 1, and every pivot column is zero in the other rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    field: Gf,
    width: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: &Gf, width: usize) -> Echelon {
        Echelon {
            field: field.clone(),
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Vec<Elem>>>(
        field: &Gf,
        width: usize,
        rows: I,
    ) -> Echelon {
        let mut e = Echelon::new(field, width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the basis from `v` in place, leaving the residual.
    pub fn reduce(&self, v: &mut [Elem]) {
        assert_eq!(v.len(), self.width, "vector width");
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            // Pivot columns of other rows are zero here, so each is read once.
            for (x, &r) in v.iter_mut().zip(row).skip(p) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Elem>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let f = self.field.clone();
        let inv = f.inv(v[p]).expect("nonzero pivot");
        for x in v.iter_mut().skip(p) {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[p];
            if c.is_zero() {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v).skip(p) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}
