mod common;

use proptest::prelude::*;
use tdc_core::{Elem, FlatOrder, Gf, Poly, Residue, RingElem, RingShape};

fn all_polys(f: &Gf, max_deg: usize) -> Vec<Poly> {
    let q = f.order() as usize;
    let count = q.pow(max_deg as u32 + 1);
    (0..count)
        .map(|mut n| {
            let mut c = Vec::new();
            for _ in 0..=max_deg {
                c.push(Elem((n % q) as u32));
                n /= q;
            }
            Poly::new(f, c)
        })
        .collect()
}

#[test]
fn division_invariant_exhaustive() {
    for p in [2, 3] {
        let f = Gf::prime(p).unwrap();
        let polys = all_polys(&f, 4);
        for a in &polys {
            for b in polys.iter().filter(|b| !b.is_zero()) {
                let (q, r) = a.div_rem(b).unwrap();
                assert_eq!(&(&q * b) + &r, *a);
                assert!(r.degree() < b.degree() || r.is_zero());
            }
        }
    }
}

#[test]
fn gcd_and_bezout_exhaustive() {
    for p in [2, 3] {
        let f = Gf::prime(p).unwrap();
        let polys = all_polys(&f, if p == 2 { 4 } else { 3 });
        for a in &polys {
            for b in &polys {
                let g = a.gcd(b).unwrap();
                let (g2, u, v) = a.xgcd(b).unwrap();
                assert_eq!(g, g2);
                assert_eq!(&(&u * a) + &(&v * b), g);
                if g.is_zero() {
                    assert!(a.is_zero() && b.is_zero());
                } else {
                    assert!(g.is_monic());
                    assert!(g.divides(a).unwrap() && g.divides(b).unwrap());
                }
            }
        }
    }
}

#[test]
fn quotient_ring_is_commutative_and_associative() {
    let f = Gf::prime(2).unwrap();
    for s in 1..=3 {
        let elems: Vec<Residue> = all_polys(&f, s - 1)
            .iter()
            .map(|p| Residue::from_poly(s, p))
            .collect();
        for a in &elems {
            assert_eq!(a.shift(s), *a);
            assert_eq!(Residue::from_poly(s, &a.lift()), *a);
            for b in &elems {
                assert_eq!(a * b, b * a);
                for c in &elems {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                }
            }
        }
    }
}

#[test]
fn shifts_are_monomial_products() {
    let f = Gf::prime(2).unwrap();
    for s in 1..=3 {
        for ell in 1..=3 {
            let sh = RingShape::new(&f, s, ell).unwrap();
            let x = RingElem::monomial(&sh, Elem::ONE, 1, 0);
            let y = RingElem::monomial(&sh, Elem::ONE, 0, 1);
            for n in 0..(1usize << (s * ell)) {
                let v: Vec<Elem> = (0..s * ell).map(|i| Elem(((n >> i) & 1) as u32)).collect();
                let a = RingElem::from_vector(&sh, FlatOrder::Codeword, &v).unwrap();
                assert_eq!(a.shift_x(), &a * &x);
                assert_eq!(a.shift_y(), &a * &y);
                assert_eq!(a.shift_x_by(s), a);
                assert_eq!(a.shift_y_by(ell), a);
            }
        }
    }
}

fn arb_case() -> impl Strategy<Value = (u32, usize, usize, Vec<u32>, Vec<u32>, Vec<u32>)> {
    (prop_oneof![Just(2u32), Just(3u32)], 1usize..=4, 1usize..=4).prop_flat_map(|(p, s, ell)| {
        let n = s * ell;
        let v = prop::collection::vec(0..p, n);
        (Just(p), Just(s), Just(ell), v.clone(), v.clone(), v)
    })
}

fn elem(sh: &RingShape, v: &[u32]) -> RingElem {
    let v: Vec<Elem> = v.iter().map(|&c| Elem(c)).collect();
    RingElem::from_vector(sh, FlatOrder::Codeword, &v).unwrap()
}

proptest! {
    #[test]
    fn ring_multiplication_laws((p, s, ell, a, b, c) in arb_case()) {
        let sh = RingShape::new(&Gf::prime(p).unwrap(), s, ell).unwrap();
        let (a, b, c) = (elem(&sh, &a), elem(&sh, &b), elem(&sh, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn array_and_vector_views_round_trip((p, s, ell, a, _b, _c) in arb_case()) {
        let sh = RingShape::new(&Gf::prime(p).unwrap(), s, ell).unwrap();
        let e = elem(&sh, &a);
        prop_assert_eq!(RingElem::from_array(&sh, &e.to_array()).unwrap(), e.clone());
        for order in [FlatOrder::Internal, FlatOrder::Codeword] {
            prop_assert_eq!(RingElem::from_vector(&sh, order, &e.to_vector(order)).unwrap(), e.clone());
        }
        // the two flattenings agree entry by entry through the array view
        let arr = e.to_array();
        let internal = e.to_vector(FlatOrder::Internal);
        let codeword = e.to_vector(FlatOrder::Codeword);
        for i in 0..s {
            for j in 0..ell {
                prop_assert_eq!(internal[j * s + i], arr[i][j]);
                prop_assert_eq!(codeword[i * ell + j], arr[i][j]);
            }
        }
    }
}
