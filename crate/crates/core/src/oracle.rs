//! Brute-force reference path for checking the engine.
//!
//! The ideal is computed extensionally: start from the generator arrays and
//! keep adding row and column shifts of every newly independent vector until
//! nothing new appears. Vectors are in codeword order throughout, and the
//! elimination below is kept separate from [`crate::echelon`] so the two can
//! disagree if either is wrong.

use alloc::collections::BTreeMap;
use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::codegen::GeneratorMatrix;
use crate::error::{Error, Result};
use crate::gf::{Elem, Gf};
use crate::ideal::GeneratorSet;
use crate::poly::Poly;
use crate::ring2d::{RingElem, RingShape};

/// Largest s·ell the oracle accepts.
pub const MAX_ORACLE_LENGTH: usize = 64;
/// Largest q^dim for listing every vector of a space.
pub const MAX_ORACLE_SET: u128 = 1 << 20;

/// An F-subspace of F^(s·ell), codeword order, held in (unreduced) echelon
/// form keyed by pivot column.
#[derive(Debug, Clone)]
pub struct OracleSpace {
    field: Gf,
    s: usize,
    ell: usize,
    by_pivot: BTreeMap<usize, Vec<Elem>>,
}

impl OracleSpace {
    pub fn empty(shape: &RingShape) -> OracleSpace {
        OracleSpace {
            field: shape.field().clone(),
            s: shape.s(),
            ell: shape.ell(),
            by_pivot: BTreeMap::new(),
        }
    }

    /// Plain F-span, no shift closure.
    pub fn span_of(shape: &RingShape, vectors: &[Vec<Elem>]) -> OracleSpace {
        let mut sp = OracleSpace::empty(shape);
        for v in vectors {
            sp.absorb(v.clone());
        }
        sp
    }

    pub fn dim(&self) -> usize {
        self.by_pivot.len()
    }

    fn width(&self) -> usize {
        self.s * self.ell
    }

    /// Eliminates `v` left to right; returns the leftover (zero iff in span).
    fn residual(&self, mut v: Vec<Elem>) -> Vec<Elem> {
        let f = &self.field;
        let mut col = 0;
        while col < v.len() {
            if v[col].is_zero() {
                col += 1;
                continue;
            }
            match self.by_pivot.get(&col) {
                None => break,
                Some(row) => {
                    let factor = v[col];
                    for t in col..v.len() {
                        v[t] = f.sub(v[t], f.mul(factor, row[t]));
                    }
                    col += 1;
                }
            }
        }
        v
    }

    /// Adds `v`; true when it was independent.
    fn absorb(&mut self, v: Vec<Elem>) -> bool {
        assert_eq!(v.len(), self.width());
        let mut left = self.residual(v);
        let Some(lead) = left.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(left[lead]).expect("nonzero");
        for c in left.iter_mut() {
            *c = self.field.mul(*c, inv);
        }
        self.by_pivot.insert(lead, left);
        true
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let r = self.residual(v.to_vec());
        r.iter().all(|c| c.is_zero())
    }

    /// Fully reduced basis, sorted by pivot; equal spaces give equal output.
    pub fn canonical_basis(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let mut rows: Vec<(usize, Vec<Elem>)> =
            self.by_pivot.iter().map(|(&p, r)| (p, r.clone())).collect();
        // back-substitute from the last pivot upward
        for a in (0..rows.len()).rev() {
            let (pa, ra) = rows[a].clone();
            for (_, rb) in rows.iter_mut().take(a) {
                let c = rb[pa];
                if !c.is_zero() {
                    for t in pa..rb.len() {
                        rb[t] = f.sub(rb[t], f.mul(c, ra[t]));
                    }
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }

    pub fn same_span(&self, other: &OracleSpace) -> bool {
        self.dim() == other.dim() && self.canonical_basis() == other.canonical_basis()
    }

    /// A basis vector of `self` outside `other`, if any.
    pub fn witness_not_in(&self, other: &OracleSpace) -> Option<Vec<Elem>> {
        self.canonical_basis()
            .into_iter()
            .find(|v| !other.contains(v))
    }

    /// Every vector of the space, in no particular order.
    pub fn all_vectors(&self) -> Result<Vec<Vec<Elem>>> {
        let q = self.field.order() as u128;
        let total = (0..self.dim()).fold(1u128, |acc, _| acc.saturating_mul(q));
        if total > MAX_ORACLE_SET {
            return Err(Error::TooLarge {
                size: total,
                cap: MAX_ORACLE_SET,
            });
        }
        let mut out = vec![vec![Elem::ZERO; self.width()]];
        for row in self.by_pivot.values() {
            let mut next = Vec::with_capacity(out.len() * q as usize);
            for v in &out {
                for c in self.field.elements() {
                    let w: Vec<Elem> = v
                        .iter()
                        .zip(row)
                        .map(|(&a, &b)| self.field.add(a, self.field.mul(c, b)))
                        .collect();
                    next.push(w);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Row shift of a codeword-order vector: entry (i, j) moves to (i+1 mod s, j).
    pub fn row_shift(&self, v: &[Elem]) -> Vec<Elem> {
        let mut w = vec![Elem::ZERO; v.len()];
        for i in 0..self.s {
            for j in 0..self.ell {
                w[((i + 1) % self.s) * self.ell + j] = v[i * self.ell + j];
            }
        }
        w
    }

    /// Column shift: entry (i, j) moves to (i, j+1 mod ell).
    pub fn column_shift(&self, v: &[Elem]) -> Vec<Elem> {
        let mut w = vec![Elem::ZERO; v.len()];
        for i in 0..self.s {
            for j in 0..self.ell {
                w[i * self.ell + (j + 1) % self.ell] = v[i * self.ell + j];
            }
        }
        w
    }
}

fn flatten(e: &RingElem) -> Vec<Elem> {
    e.to_array().into_iter().flatten().collect()
}

fn check_size(shape: &RingShape) -> Result<()> {
    if shape.n() > MAX_ORACLE_LENGTH {
        return Err(Error::TooLarge {
            size: shape.n() as u128,
            cap: MAX_ORACLE_LENGTH as u128,
        });
    }
    Ok(())
}

/// Smallest subspace containing `generators` and closed under row and column
/// shifts, by fixed-point iteration.
pub fn bruteforce_ideal(shape: &RingShape, generators: &[RingElem]) -> Result<OracleSpace> {
    check_size(shape)?;
    if generators.iter().any(|g| g.shape() != shape) {
        return Err(Error::ShapeMismatch);
    }
    let mut space = OracleSpace::empty(shape);
    let mut pending: VecDeque<Vec<Elem>> = generators.iter().map(flatten).collect();
    while let Some(v) = pending.pop_front() {
        if space.absorb(v.clone()) {
            pending.push_back(space.row_shift(&v));
            pending.push_back(space.column_shift(&v));
        }
    }
    Ok(space)
}

/// True iff both shifts of every basis vector stay in the space.
pub fn check_shift_closure(space: &OracleSpace) -> bool {
    space
        .by_pivot
        .values()
        .all(|v| space.contains(&space.row_shift(v)) && space.contains(&space.column_shift(v)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Offending vector in codeword order.
    pub counterexample: Option<Vec<u32>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    fn push(&mut self, name: &str, failure: Option<Vec<Elem>>) {
        self.checks.push(Check {
            name: String::from(name),
            pass: failure.is_none(),
            counterexample: failure.map(|v| v.iter().map(|c| c.0).collect()),
        });
    }

    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && !c.pass)
    }
}

/// First offending generator for each of the triangular, layer, and
/// divisibility checks.
type StructuralFailures = (Option<Vec<Elem>>, Option<Vec<Elem>>, Option<Vec<Elem>>);

fn structural_failure(gs: &GeneratorSet) -> StructuralFailures {
    let shape = gs.shape();
    let (field, s) = (shape.field(), shape.s());
    let xs1 = Poly::x_pow_minus_one(field, s);
    let layers = gs.layers();
    let mut triangular = None;
    let mut layer_ok = None;
    let mut divisible = None;

    for (j, (layer, gen)) in layers.iter().zip(gs.gens()).enumerate() {
        let bad = || Some(flatten(gen));
        let p = layer.generator.lift();
        let zero_layer = layer.degree == s;
        let layer_valid = if zero_layer {
            p.is_zero() && layer.cofactor == Poly::one(field)
        } else {
            p.is_monic() && p.degree() == Some(layer.degree) && &layer.cofactor * &p == xs1
        };
        if !layer_valid && layer_ok.is_none() {
            layer_ok = bad();
        }
        let tri = gen.coords()[..j].iter().all(|c| c.is_zero())
            && if zero_layer {
                gen.is_zero()
            } else {
                gen.coord(j) == &layer.generator
            };
        let reduced = ((j + 1)..gen.coords().len()).all(|i| {
            let li = &layers[i];
            li.degree == s || gen.coord(i).lift().degree().is_none_or(|d| d < li.degree)
        });
        if !(tri && reduced) && triangular.is_none() {
            triangular = bad();
        }
        if divisible.is_none() && !layers[0].generator.lift().is_zero() {
            let p00 = layers[0].generator.lift();
            let ok = gen
                .coords()
                .iter()
                .all(|c| c.lift().rem(&p00).is_ok_and(|r| r.is_zero()));
            let t_ok = gs.t_table().get(j).is_some_and(|row| {
                if zero_layer {
                    row.is_empty()
                } else {
                    row.len() == gen.coords().len() - j
                        && row
                            .iter()
                            .enumerate()
                            .all(|(k, t)| &p00 * t == gen.coord(j + k).lift())
                }
            });
            if !(ok && t_ok) {
                divisible = bad();
            }
        }
    }
    (triangular, layer_ok, divisible)
}

/// Checks a generating set against the ideal of `generators`:
/// `members` (each layer generator lies in the ideal), `span` (they generate
/// the same ideal), and the structural checks `triangular`, `layer_divisor`,
/// `divisibility`.
pub fn verify_generator_set(gs: &GeneratorSet, generators: &[RingElem]) -> Result<Report> {
    let shape = gs.shape();
    let ideal = bruteforce_ideal(shape, generators)?;
    let mut report = Report::default();

    report.push(
        "members",
        gs.gens().iter().map(flatten).find(|v| !ideal.contains(v)),
    );

    let generated = bruteforce_ideal(shape, gs.gens())?;
    let span_gap = ideal
        .witness_not_in(&generated)
        .or_else(|| generated.witness_not_in(&ideal));
    report.push("span", span_gap);

    let (triangular, layer_ok, divisible) = structural_failure(gs);
    report.push("triangular", triangular);
    report.push("layer_divisor", layer_ok);
    report.push("divisibility", divisible);
    Ok(report)
}

/// Checks a generator matrix against the ideal of `generators`: `rank` (rows
/// independent, one per label), `row_membership`, and `row_space`.
pub fn verify_matrix(gm: &GeneratorMatrix, generators: &[RingElem]) -> Result<Report> {
    let shape = gm.shape();
    let ideal = bruteforce_ideal(shape, generators)?;
    let mut report = Report::default();

    let mut rowspace = OracleSpace::empty(shape);
    let mut dependent = None;
    for r in gm.rows() {
        if !rowspace.absorb(r.clone()) && dependent.is_none() {
            dependent = Some(r.clone());
        }
    }
    if dependent.is_none() && gm.rows().len() != gm.labels().len() {
        dependent = Some(Vec::new());
    }
    report.push("rank", dependent);
    report.push(
        "row_membership",
        gm.rows().iter().find(|r| !ideal.contains(r)).cloned(),
    );
    let gap = ideal
        .witness_not_in(&rowspace)
        .or_else(|| rowspace.witness_not_in(&ideal));
    report.push("row_space", gap);
    Ok(report)
}
