#![allow(dead_code)]

use rand::Rng;
use tdc_core::{Elem, Gf, RingElem, RingShape};

pub fn fields() -> Vec<Gf> {
    vec![
        Gf::prime(2).unwrap(),
        Gf::prime(3).unwrap(),
        Gf::with_default_modulus(2, 2).unwrap(),
    ]
}

pub fn random_elem<R: Rng>(shape: &RingShape, rng: &mut R) -> RingElem {
    let q = shape.field().order();
    let v: Vec<Elem> = (0..shape.n()).map(|_| Elem(rng.gen_range(0..q))).collect();
    RingElem::from_vector(shape, tdc_core::FlatOrder::Codeword, &v).unwrap()
}

fn sparse_elem<R: Rng>(shape: &RingShape, rng: &mut R) -> RingElem {
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

/// Generators of a random ideal: products of sparse factors, so that proper
/// nonzero ideals are common.
pub fn random_generators<R: Rng>(shape: &RingShape, rng: &mut R) -> Vec<RingElem> {
    (0..rng.gen_range(1..=3))
        .map(|_| {
            if rng.gen_bool(0.1) {
                return random_elem(shape, rng);
            }
            let mut g = sparse_elem(shape, rng);
            for _ in 0..rng.gen_range(0..=2) {
                g = &g * &sparse_elem(shape, rng);
            }
            g
        })
        .collect()
}

/// A random R-multiple of a random one of `gens`.
pub fn random_multiple<R: Rng>(shape: &RingShape, gens: &[RingElem], rng: &mut R) -> RingElem {
    let g = &gens[rng.gen_range(0..gens.len())];
    g * &random_elem(shape, rng)
}
