//! Generator matrices, code parameters, encoding, and minimum distance.

use alloc::vec;
use alloc::vec::Vec;

use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::ideal::GeneratorSet;
use crate::ring2d::{FlatOrder, RingShape};

/// Default cap on q^k for [`min_distance`].
pub const DEFAULT_DISTANCE_CAP: u128 = 1 << 20;

/// Rows `x^a·gen_j` for every nonzero layer j and `0 <= a < s - a_j`, in
/// (j, a) order, flattened in codeword (row-major array) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    shape: RingShape,
    rows: Vec<Vec<Elem>>,
    labels: Vec<(usize, usize)>,
}

impl GeneratorMatrix {
    pub fn shape(&self) -> &RingShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    /// `(layer j, shift a)` for each row.
    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.shape.field(), self.n(), self.rows.iter().cloned()).rank()
    }

    /// Assembles a matrix without checks, for verification tooling.
    pub fn from_parts_unchecked(
        shape: RingShape,
        rows: Vec<Vec<Elem>>,
        labels: Vec<(usize, usize)>,
    ) -> GeneratorMatrix {
        GeneratorMatrix {
            shape,
            rows,
            labels,
        }
    }
}

pub fn generator_matrix(gs: &GeneratorSet) -> GeneratorMatrix {
    let shape = gs.shape().clone();
    let s = shape.s();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (layer, gen) in gs.layers().iter().zip(gs.gens()) {
        for a in 0..s - layer.degree {
            rows.push(gen.shift_x_by(a).to_vector(FlatOrder::Codeword));
            labels.push((layer.index, a));
        }
    }
    GeneratorMatrix {
        shape,
        rows,
        labels,
    }
}

/// k = sum over layers of (s - a_j).
pub fn dimension(gs: &GeneratorSet) -> usize {
    gs.dimension()
}

/// `msg · rows`
pub fn encode(gm: &GeneratorMatrix, msg: &[Elem]) -> Result<Vec<Elem>> {
    if msg.len() != gm.k() {
        return Err(Error::DimensionMismatch {
            expected: gm.k(),
            found: msg.len(),
        });
    }
    let f = gm.shape.field();
    let mut out = vec![Elem::ZERO; gm.n()];
    for (&c, row) in msg.iter().zip(&gm.rows) {
        axpy(f, &mut out, c, row);
    }
    Ok(out)
}

fn axpy(f: &Gf, acc: &mut [Elem], c: Elem, row: &[Elem]) {
    if c.is_zero() {
        return;
    }
    for (a, &r) in acc.iter_mut().zip(row) {
        *a = f.add(*a, f.mul(c, r));
    }
}

fn message_count(q: u32, k: usize) -> u128 {
    let mut n: u128 = 1;
    for _ in 0..k {
        n = n.saturating_mul(q as u128);
    }
    n
}

/// Least Hamming weight over all q^k - 1 nonzero codewords.
///
/// Messages are visited as a base-q odometer (first coordinate fastest), so
/// each step touches a single row on average.
pub fn min_distance(gm: &GeneratorMatrix, cap: u128) -> Result<usize> {
    let k = gm.k();
    if k == 0 {
        return Err(Error::Undefined);
    }
    let f = gm.shape.field();
    let q = f.order();
    let total = message_count(q, k);
    if total > cap {
        return Err(Error::TooLarge { size: total, cap });
    }
    // Adding `row` moves digit value v to v + 1 in encoding order, which is
    // not field addition for extension fields; track the codeword delta per
    // step instead: new - old = (e_{v+1} - e_v)·row.
    let step: Vec<Elem> = (0..q)
        .map(|v| f.sub(f.elem(v as u64 + 1), Elem(v)))
        .collect();
    let mut digits = vec![0u32; k];
    let mut word = vec![Elem::ZERO; gm.n()];
    let mut best = usize::MAX;
    loop {
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(best);
            }
            let d = digits[pos];
            axpy(f, &mut word, step[d as usize], &gm.rows[pos]);
            if d + 1 < q {
                digits[pos] = d + 1;
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        let w = word.iter().filter(|c| !c.is_zero()).count();
        if w < best {
            best = w;
            if best == 1 {
                return Ok(1);
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub q: u32,
}

/// n, k, q, and d when `with_distance` is set and the code is nonzero.
pub fn code_params(gs: &GeneratorSet, with_distance: bool, cap: u128) -> Result<CodeParams> {
    let gm = generator_matrix(gs);
    let d = if with_distance && gm.k() > 0 {
        Some(min_distance(&gm, cap)?)
    } else {
        None
    };
    Ok(CodeParams {
        n: gm.n(),
        k: gm.k(),
        d,
        q: gs.shape().field().order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::extract_generators;
    use crate::poly::Poly;
    use crate::ring2d::RingElem;

    fn one_plus_x() -> GeneratorSet {
        let sh = RingShape::new(&Gf::prime(2).unwrap(), 2, 2).unwrap();
        let g = RingElem::from_x_poly(&sh, &Poly::from_u32s(sh.field(), &[1, 1]));
        extract_generators(&sh, &[g]).unwrap()
    }

    fn ints(v: &[Elem]) -> Vec<u32> {
        v.iter().map(|c| c.0).collect()
    }

    #[test]
    fn matrix_of_one_plus_x() {
        let gm = generator_matrix(&one_plus_x());
        let rows: Vec<_> = gm.rows().iter().map(|r| ints(r)).collect();
        assert_eq!(rows, vec![vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        assert_eq!(gm.labels(), &[(0, 0), (1, 0)]);
        assert_eq!(gm.rank(), 2);
        assert_eq!(dimension(&one_plus_x()), 2);
    }

    #[test]
    fn encode_examples() {
        let gm = generator_matrix(&one_plus_x());
        assert_eq!(ints(&encode(&gm, &[Elem(0), Elem(0)]).unwrap()), vec![0; 4]);
        assert_eq!(
            ints(&encode(&gm, &[Elem(1), Elem(0)]).unwrap()),
            vec![1, 0, 1, 0]
        );
        assert_eq!(
            ints(&encode(&gm, &[Elem(1), Elem(1)]).unwrap()),
            vec![1, 1, 1, 1]
        );
        assert_eq!(
            encode(&gm, &[Elem(1)]).unwrap_err(),
            Error::DimensionMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn distance_and_params() {
        let gs = one_plus_x();
        let gm = generator_matrix(&gs);
        assert_eq!(min_distance(&gm, DEFAULT_DISTANCE_CAP), Ok(2));
        assert_eq!(
            code_params(&gs, true, DEFAULT_DISTANCE_CAP).unwrap(),
            CodeParams {
                n: 4,
                k: 2,
                d: Some(2),
                q: 2
            }
        );
        assert_eq!(
            min_distance(&gm, 3),
            Err(Error::TooLarge { size: 4, cap: 3 })
        );
    }

    #[test]
    fn unit_and_zero_codes() {
        let sh = RingShape::new(&Gf::prime(2).unwrap(), 2, 2).unwrap();
        let unit = extract_generators(&sh, &[RingElem::one(&sh)]).unwrap();
        let gm = generator_matrix(&unit);
        assert_eq!((gm.k(), gm.rank()), (4, 4));
        assert_eq!(
            code_params(&unit, true, DEFAULT_DISTANCE_CAP).unwrap(),
            CodeParams {
                n: 4,
                k: 4,
                d: Some(1),
                q: 2
            }
        );
        let zero = extract_generators(&sh, &[]).unwrap();
        let gm = generator_matrix(&zero);
        assert_eq!(gm.k(), 0);
        assert_eq!(
            min_distance(&gm, DEFAULT_DISTANCE_CAP),
            Err(Error::Undefined)
        );
        assert_eq!(
            code_params(&zero, true, DEFAULT_DISTANCE_CAP).unwrap(),
            CodeParams {
                n: 4,
                k: 0,
                d: None,
                q: 2
            }
        );
    }
}
