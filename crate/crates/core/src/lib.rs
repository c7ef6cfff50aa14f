//! Two-dimensional cyclic codes over finite fields.
//!
//! A two-dimensional cyclic code of size s×ell over F is a linear code of
//! s×ell arrays closed under cyclic row and column shifts; equivalently an
//! ideal of R = F\[x,y\]/(x^s - 1, y^ell - 1). This crate computes, for an
//! ideal given by generators, its canonical triangular generating set
//! ([`ideal::GeneratorSet`]) and the generator matrix of the code
//! ([`codegen::GeneratorMatrix`]), and ships an independent brute-force
//! [`oracle`] for cross-checking.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod codegen;
pub mod echelon;
pub mod error;
pub mod gf;
pub mod ideal;
pub mod oracle;
pub mod poly;
pub mod ring2d;

pub use codegen::{
    code_params, encode, generator_matrix, min_distance, CodeParams, GeneratorMatrix,
};
pub use error::{Error, Result};
pub use gf::{Elem, FieldElement, FieldSpec, Gf};
pub use ideal::{
    canonical_form, decompose, extract_generators, layer_generator, span_basis, Decomposition,
    EchelonBasis, GeneratorSet, LayerInfo,
};
pub use poly::{Poly, Residue};
pub use ring2d::{FlatOrder, RingElem, RingShape};
