//! Random ring elements and random ideals.

use rand::Rng;
use tdc_core::{Elem, FlatOrder, RingElem, RingShape};

/// Uniform element of R.
pub fn random_elem<R: Rng>(shape: &RingShape, rng: &mut R) -> RingElem {
    let q = shape.field().order();
    let v: Vec<Elem> = (0..shape.n()).map(|_| Elem(rng.gen_range(0..q))).collect();
    RingElem::from_vector(shape, FlatOrder::Codeword, &v).expect("length n")
}

/// A sum of one to three monomials with nonzero coefficients.
pub fn sparse_elem<R: Rng>(shape: &RingShape, rng: &mut R) -> RingElem {
    let q = shape.field().order();
    let mut e = RingElem::zero(shape);
    for _ in 0..rng.gen_range(1..=3) {
        let c = Elem(rng.gen_range(1..q));
        let m = RingElem::monomial(
            shape,
            c,
            rng.gen_range(0..shape.s()),
            rng.gen_range(0..shape.ell()),
        );
        e = &e + &m;
    }
    e
}

/// `c·(x^a y^b - x^a' y^b')`: coefficients sum to zero, so it is never a unit.
pub fn binomial_elem<R: Rng>(shape: &RingShape, rng: &mut R) -> RingElem {
    let field = shape.field();
    let c = Elem(rng.gen_range(1..field.order()));
    let mut mono = || {
        RingElem::monomial(
            shape,
            c,
            rng.gen_range(0..shape.s()),
            rng.gen_range(0..shape.ell()),
        )
    };
    &mono() - &mono()
}

/// Generators of a random ideal: one to three elements, each usually a
/// product of sparse and non-unit binomial factors so that proper nonzero
/// ideals are common, and occasionally a uniform element.
pub fn random_generators<R: Rng>(shape: &RingShape, rng: &mut R) -> Vec<RingElem> {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            if rng.gen_bool(0.1) {
                return random_elem(shape, rng);
            }
            let factor = |rng: &mut R| {
                if rng.gen_bool(0.5) {
                    binomial_elem(shape, rng)
                } else {
                    sparse_elem(shape, rng)
                }
            };
            let mut g = factor(rng);
            for _ in 0..rng.gen_range(0..=2) {
                g = &g * &factor(rng);
            }
            g
        })
        .collect()
}

/// `g · r` for a random `g` from `gens` and uniform `r`.
pub fn random_multiple<R: Rng>(shape: &RingShape, gens: &[RingElem], rng: &mut R) -> RingElem {
    let g = &gens[rng.gen_range(0..gens.len())];
    g * &random_elem(shape, rng)
}
