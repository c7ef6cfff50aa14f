//! Layered generating sets for ideals of R = S\[y\]/(y^ell - 1), S = F\[x\]/(x^s - 1).
//!
//! For an ideal I and each layer j, the coefficient ideal I_j collects the
//! y^j-coordinates of those elements of I whose coordinates below j vanish.
//! Each I_j is an ideal of the principal ideal ring S, generated by a unique
//! monic divisor p_j of x^s - 1. Picking, for every layer, an element of I
//! whose lowest nonzero coordinate is exactly p_j at position j gives a
//! triangular family that generates I, and whose x-shifts
//! `x^a·gen_j, 0 <= a < s - deg p_j` form an F-basis of I.
//!
//! Everything is read off one reduced row-echelon basis of I taken in
//! y-block order: the rows with pivot at or beyond column `j*s` span exactly
//! the elements of I that vanish below layer j.
//!
//! Layer generators are made unique by reducing each coordinate i > j of
//! generator j modulo p_i (subtracting multiples of generator i), so two
//! presentations of the same ideal give identical [`GeneratorSet`]s.

use alloc::vec;
use alloc::vec::Vec;

use crate::echelon::Echelon;
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::poly::{cofactor, Poly, Residue};
use crate::ring2d::{FlatOrder, RingElem, RingShape};

/// Reduced row-echelon F-basis of an ideal, in internal (y-block) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonBasis {
    shape: RingShape,
    echelon: Echelon,
}

impl EchelonBasis {
    pub fn shape(&self) -> &RingShape {
        &self.shape
    }

    /// Dimension of the ideal over F.
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Basis rows as internal-order vectors.
    pub fn rows(&self) -> &[Vec<Elem>] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn elements(&self) -> Vec<RingElem> {
        self.rows()
            .iter()
            .map(|r| RingElem::from_vector(&self.shape, FlatOrder::Internal, r).expect("row width"))
            .collect()
    }

    /// Membership by reduction against the basis.
    pub fn contains(&self, f: &RingElem) -> Result<bool> {
        if f.shape() != &self.shape {
            return Err(Error::ShapeMismatch);
        }
        Ok(self.echelon.contains(&f.to_vector(FlatOrder::Internal)))
    }

    /// Rows whose pivot falls in y-block j: their coordinates below j vanish
    /// and coordinate j is nonzero.
    fn block_rows(&self, j: usize) -> impl Iterator<Item = &Vec<Elem>> {
        let s = self.shape.s();
        self.rows()
            .iter()
            .zip(self.pivots())
            .filter(move |(_, &p)| p / s == j)
            .map(|(r, _)| r)
    }
}

/// F-basis of the ideal generated by `generators`, from the span of all
/// monomial multiples x^a y^b g.
pub fn span_basis(shape: &RingShape, generators: &[RingElem]) -> Result<EchelonBasis> {
    if generators.iter().any(|g| g.shape() != shape) {
        return Err(Error::ShapeMismatch);
    }
    let mut echelon = Echelon::new(shape.field(), shape.n());
    'gens: for g in generators.iter().filter(|g| !g.is_zero()) {
        for b in 0..shape.ell() {
            let gy = g.shift_y_by(b);
            for a in 0..shape.s() {
                echelon.insert(gy.shift_x_by(a).to_vector(FlatOrder::Internal));
                if echelon.is_full() {
                    break 'gens;
                }
            }
        }
    }
    Ok(EchelonBasis {
        shape: shape.clone(),
        echelon,
    })
}

/// Generator data for one coefficient ideal I_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerInfo {
    pub index: usize,
    /// p_j as an element of S; zero for the zero layer.
    pub generator: Residue,
    /// a_j = deg p_j, or s for the zero layer.
    pub degree: usize,
    /// (x^s - 1) / p_j, or 1 for the zero layer.
    pub cofactor: Poly,
}

impl LayerInfo {
    /// I_j = {0}; the layer contributes no basis rows.
    pub fn is_zero(&self) -> bool {
        self.degree == self.generator.s()
    }

    /// The monic generator as a polynomial of degree below s; x^s - 1 for the
    /// zero layer.
    pub fn generator_poly(&self) -> Poly {
        if self.is_zero() {
            Poly::x_pow_minus_one(self.generator.field(), self.generator.s())
        } else {
            self.generator.lift()
        }
    }
}

/// gcd of x^s - 1 and the block-j coordinates of the block-j rows, plus
/// S-coefficients `u_r` with `sum u_r·row_r` having coordinate j equal to
/// that gcd in S.
fn layer_fold(basis: &EchelonBasis, j: usize) -> Result<(LayerInfo, Vec<(RingElem, Residue)>)> {
    let shape = &basis.shape;
    if j >= shape.ell() {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: shape.ell(),
        });
    }
    let (field, s) = (shape.field(), shape.s());
    let modulus = Poly::x_pow_minus_one(field, s);
    let mut g = modulus.clone();
    let mut combo: Vec<(RingElem, Residue)> = Vec::new();
    for row in basis.block_rows(j) {
        let c = Poly::new(field, row[j * s..(j + 1) * s].to_vec());
        if g.divides(&c)? {
            continue;
        }
        // g ≡ sum u_r c_r (mod x^s - 1) holds before and after this step.
        let (next, u, v) = g.xgcd(&c)?;
        let u = Residue::from_poly(s, &u);
        for (_, coef) in combo.iter_mut() {
            *coef = &*coef * &u;
        }
        let elem = RingElem::from_vector(shape, FlatOrder::Internal, row)?;
        combo.push((elem, Residue::from_poly(s, &v)));
        g = next;
    }
    let info = LayerInfo {
        index: j,
        generator: Residue::from_poly(s, &g),
        degree: g.degree().expect("divisor of x^s - 1 is nonzero"),
        cofactor: cofactor(s, &g)?,
    };
    Ok((info, combo))
}

/// The monic generator of the coefficient ideal I_j.
pub fn layer_generator(basis: &EchelonBasis, j: usize) -> Result<LayerInfo> {
    Ok(layer_fold(basis, j)?.0)
}

/// Canonical triangular generating set of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    shape: RingShape,
    layers: Vec<LayerInfo>,
    gens: Vec<RingElem>,
    cofactors: Vec<Vec<Poly>>,
}

impl GeneratorSet {
    pub fn shape(&self) -> &RingShape {
        &self.shape
    }

    pub fn layers(&self) -> &[LayerInfo] {
        &self.layers
    }

    /// The layer generators, one per y-degree; zero for zero layers.
    pub fn gens(&self) -> &[RingElem] {
        &self.gens
    }

    /// `t[j][i - j]` is the minimal-degree t with coordinate i of generator j
    /// equal to p_0·t, for `j <= i < ell`; empty for zero layers.
    pub fn t_table(&self) -> &[Vec<Poly>] {
        &self.cofactors
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.layers.iter().all(LayerInfo::is_zero)
    }

    /// k = sum over layers of (s - a_j).
    pub fn dimension(&self) -> usize {
        let s = self.shape.s();
        self.layers.iter().map(|l| s - l.degree).sum()
    }

    /// Assembles a set from parts without checking any invariant. Intended
    /// for tooling that needs to present a hand-made or tampered set to the
    /// verifier.
    pub fn from_parts_unchecked(
        shape: RingShape,
        layers: Vec<LayerInfo>,
        gens: Vec<RingElem>,
        t: Vec<Vec<Poly>>,
    ) -> GeneratorSet {
        GeneratorSet {
            shape,
            layers,
            gens,
            cofactors: t,
        }
    }

    pub fn decompose(&self, f: &RingElem, want_trace: bool) -> Result<Decomposition> {
        decompose(f, self, want_trace)
    }
}

/// Builds the canonical generating set of the ideal generated by `generators`.
pub fn extract_generators(shape: &RingShape, generators: &[RingElem]) -> Result<GeneratorSet> {
    let basis = span_basis(shape, generators)?;
    generators_from_basis(&basis)
}

/// Same as [`extract_generators`]; two generator lists spanning the same
/// ideal yield equal results.
pub fn canonical_form(shape: &RingShape, generators: &[RingElem]) -> Result<GeneratorSet> {
    extract_generators(shape, generators)
}

pub fn generators_from_basis(basis: &EchelonBasis) -> Result<GeneratorSet> {
    let shape = basis.shape().clone();
    let (s, ell) = (shape.s(), shape.ell());
    let mut layers: Vec<Option<LayerInfo>> = vec![None; ell];
    let mut gens = vec![RingElem::zero(&shape); ell];

    // Top layer first so that generators above j are final when j is reduced.
    for j in (0..ell).rev() {
        let (info, combo) = layer_fold(basis, j)?;
        if !info.is_zero() {
            let mut w = RingElem::zero(&shape);
            for (row, coef) in &combo {
                w = &w + &row.mul_residue(coef);
            }
            debug_assert!(w.coords()[..j].iter().all(Residue::is_zero));
            debug_assert_eq!(w.coord(j), &info.generator);
            for i in j + 1..ell {
                let Some(layer_i) = layers[i].as_ref().filter(|l| !l.is_zero()) else {
                    continue;
                };
                let (q, _) = w.coord(i).lift().div_rem(&layer_i.generator.lift())?;
                if !q.is_zero() {
                    w = &w - &gens[i].mul_residue(&Residue::from_poly(s, &q));
                }
            }
            gens[j] = w;
        }
        layers[j] = Some(info);
    }
    let layers: Vec<LayerInfo> = layers
        .into_iter()
        .map(|l| l.expect("every layer visited"))
        .collect();

    let mut t = vec![Vec::new(); ell];
    if !layers[0].is_zero() {
        let p00 = layers[0].generator.lift();
        for j in (0..ell).filter(|&j| !layers[j].is_zero()) {
            t[j] = (j..ell)
                .map(|i| {
                    gens[j]
                        .coord(i)
                        .lift()
                        .exact_div(&p00)?
                        .ok_or(Error::InternalDivisibilityViolation { layer: j, coord: i })
                })
                .collect::<Result<Vec<_>>>()?;
        }
    }
    Ok(GeneratorSet {
        shape,
        layers,
        gens,
        cofactors: t,
    })
}

/// Result of writing f as `sum_j gen_j · q_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub qs: Vec<Residue>,
    /// Intermediate remainders h_1, ..., h_{ell-1}, when requested.
    pub trace: Option<Vec<RingElem>>,
}

/// Peels f layer by layer: `h_0 = f`, `h_{k+1} = h_k - gen_k·q_k` where q_k is
/// the exact quotient of coordinate k of h_k by p_k. Fails with
/// [`Error::NotMember`] at the first layer where that division is not exact.
pub fn decompose(f: &RingElem, gs: &GeneratorSet, want_trace: bool) -> Result<Decomposition> {
    let shape = gs.shape();
    if f.shape() != shape {
        return Err(Error::ShapeMismatch);
    }
    let s = shape.s();
    let mut h = f.clone();
    let mut qs = Vec::with_capacity(shape.ell());
    let mut trace = want_trace.then(Vec::new);
    for (k, layer) in gs.layers().iter().enumerate() {
        if k > 0 {
            if let Some(t) = trace.as_mut() {
                t.push(h.clone());
            }
        }
        let c = h.coord(k).lift();
        if layer.is_zero() {
            if !c.is_zero() {
                return Err(Error::NotMember { layer: k });
            }
            qs.push(Residue::zero(shape.field(), s));
            continue;
        }
        let q = c
            .exact_div(&layer.generator.lift())?
            .ok_or(Error::NotMember { layer: k })?;
        let q = Residue::from_poly(s, &q);
        if !q.is_zero() {
            h = &h - &gs.gens()[k].mul_residue(&q);
        }
        qs.push(q);
    }
    debug_assert!(h.is_zero());
    Ok(Decomposition { qs, trace })
}

/// `sum_j gen_j · q_j`
pub fn recombine(gs: &GeneratorSet, qs: &[Residue]) -> RingElem {
    gs.gens()
        .iter()
        .zip(qs)
        .fold(RingElem::zero(gs.shape()), |acc, (g, q)| {
            &acc + &g.mul_residue(q)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Gf;

    fn shape(p: u32, s: usize, ell: usize) -> RingShape {
        RingShape::new(&Gf::prime(p).unwrap(), s, ell).unwrap()
    }

    fn x_poly(sh: &RingShape, c: &[u32]) -> RingElem {
        RingElem::from_x_poly(sh, &Poly::from_u32s(sh.field(), c))
    }

    fn res(sh: &RingShape, c: &[u32]) -> Residue {
        Residue::from_poly(sh.s(), &Poly::from_u32s(sh.field(), c))
    }

    fn ints(v: &[Elem]) -> Vec<u32> {
        v.iter().map(|c| c.0).collect()
    }

    #[test]
    fn span_of_one_plus_x() {
        let sh = shape(2, 2, 2);
        let b = span_basis(&sh, &[x_poly(&sh, &[1, 1])]).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(ints(&b.rows()[0]), vec![1, 1, 0, 0]);
        assert_eq!(ints(&b.rows()[1]), vec![0, 0, 1, 1]);
        assert_eq!(span_basis(&sh, &[RingElem::zero(&sh)]).unwrap().dim(), 0);
        assert_eq!(span_basis(&sh, &[RingElem::one(&sh)]).unwrap().dim(), 4);
        assert_eq!(
            span_basis(&sh, &[RingElem::one(&shape(2, 2, 3))]).unwrap_err(),
            Error::ShapeMismatch
        );
    }

    #[test]
    fn layer_generators() {
        let sh = shape(2, 2, 2);
        let b = span_basis(&sh, &[x_poly(&sh, &[1, 1])]).unwrap();
        let l0 = layer_generator(&b, 0).unwrap();
        assert_eq!(l0.generator, res(&sh, &[1, 1]));
        assert_eq!(l0.degree, 1);
        assert_eq!(l0.cofactor, Poly::from_u32s(sh.field(), &[1, 1]));
        assert!(layer_generator(&b, 2).is_err());

        let zero = span_basis(&sh, &[]).unwrap();
        for j in 0..2 {
            let l = layer_generator(&zero, j).unwrap();
            assert!(l.is_zero());
            assert_eq!(l.degree, 2);
            assert_eq!(l.cofactor, Poly::one(sh.field()));
        }
        let unit = span_basis(&sh, &[RingElem::one(&sh)]).unwrap();
        for j in 0..2 {
            let l = layer_generator(&unit, j).unwrap();
            assert_eq!(l.generator, Residue::one(sh.field(), 2));
            assert_eq!(l.degree, 0);
            assert_eq!(l.cofactor, Poly::x_pow_minus_one(sh.field(), 2));
        }
    }

    #[test]
    fn generators_of_one_plus_x() {
        let sh = shape(2, 2, 2);
        let gs = extract_generators(&sh, &[x_poly(&sh, &[1, 1])]).unwrap();
        assert_eq!(gs.gens()[0].coords(), &[res(&sh, &[1, 1]), res(&sh, &[])]);
        assert_eq!(gs.gens()[1].coords(), &[res(&sh, &[]), res(&sh, &[1, 1])]);
        let f = sh.field();
        assert_eq!(
            gs.t_table(),
            &[vec![Poly::one(f), Poly::zero(f)], vec![Poly::one(f)]]
        );
        assert_eq!(gs.dimension(), 2);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let sh = shape(3, 2, 3);
        let gs = extract_generators(&sh, &[RingElem::one(&sh)]).unwrap();
        for j in 0..3 {
            assert_eq!(gs.gens()[j], RingElem::monomial(&sh, Elem::ONE, 0, j));
        }
        assert_eq!(gs.dimension(), 6);
        let gs = extract_generators(&sh, &[]).unwrap();
        assert!(gs.is_zero_ideal());
        assert!(gs.gens().iter().all(RingElem::is_zero));
        assert_eq!(gs.dimension(), 0);
        assert!(gs.t_table().iter().all(Vec::is_empty));
    }

    #[test]
    fn decompose_examples() {
        let sh = shape(2, 2, 2);
        let gs = extract_generators(&sh, &[x_poly(&sh, &[1, 1])]).unwrap();
        let f = RingElem::from_coords(&sh, vec![res(&sh, &[1, 1]), res(&sh, &[1, 1])]).unwrap();
        let d = gs.decompose(&f, true).unwrap();
        let one = Residue::one(sh.field(), 2);
        assert_eq!(d.qs, vec![one.clone(), one]);
        assert_eq!(recombine(&gs, &d.qs), f);
        let trace = d.trace.unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(trace[0].coords(), &[res(&sh, &[]), res(&sh, &[1, 1])]);

        let d = gs.decompose(&RingElem::zero(&sh), false).unwrap();
        assert!(d.qs.iter().all(Residue::is_zero));
        assert!(d.trace.is_none());

        assert_eq!(
            gs.decompose(&RingElem::one(&sh), false).unwrap_err(),
            Error::NotMember { layer: 0 }
        );
    }

    #[test]
    fn zero_ideal_rejects_nonzero() {
        let sh = shape(2, 3, 2);
        let gs = extract_generators(&sh, &[RingElem::zero(&sh)]).unwrap();
        assert_eq!(
            gs.decompose(&RingElem::monomial(&sh, Elem::ONE, 1, 1), false)
                .unwrap_err(),
            Error::NotMember { layer: 1 }
        );
    }

    #[test]
    fn canonical_examples() {
        let sh = shape(2, 2, 2);
        let g = x_poly(&sh, &[1, 1]);
        let aug = &g.shift_x() + &g.shift_y();
        assert_eq!(
            canonical_form(&sh, core::slice::from_ref(&g)).unwrap(),
            canonical_form(&sh, &[g.clone(), aug]).unwrap()
        );
        assert_eq!(
            canonical_form(&sh, core::slice::from_ref(&g)).unwrap(),
            canonical_form(&sh, &[g.shift_x()]).unwrap()
        );
        let sh3 = shape(2, 3, 2);
        let g = x_poly(&sh3, &[1, 0, 1]);
        assert_ne!(g.shift_x(), g);
        assert_eq!(
            canonical_form(&sh3, core::slice::from_ref(&g)).unwrap(),
            canonical_form(&sh3, &[g.shift_x()]).unwrap()
        );
        assert_eq!(
            canonical_form(&sh, &[]).unwrap(),
            canonical_form(&sh, &[RingElem::zero(&sh), RingElem::zero(&sh)]).unwrap()
        );
    }

    #[test]
    fn non_principal_layer_needs_bezout() {
        // I = <x + x^2> over GF(2), s = 3: the block-0 rows are not individually
        // monic divisors of x^3 - 1, so the witness is a genuine combination.
        let sh = shape(2, 3, 1);
        let gs = extract_generators(&sh, &[x_poly(&sh, &[0, 1, 1])]).unwrap();
        assert_eq!(gs.layers()[0].generator, res(&sh, &[1, 1]));
        assert_eq!(gs.gens()[0], x_poly(&sh, &[1, 1]));
        assert_eq!(gs.dimension(), 2);
    }
}
