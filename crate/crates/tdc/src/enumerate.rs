//! Tabulation of the distinct codes reached from a family of candidate
//! generators.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use tdc_core::{
    codegen::DEFAULT_DISTANCE_CAP, extract_generators, generator_matrix, min_distance, Elem, Error,
    FlatOrder, RingElem, RingShape,
};

use crate::error::CliError;
use crate::format::generator_set_json;
use crate::sample;

/// Cap on the number of candidates visited by exhaustive enumeration.
pub const MAX_EXHAUSTIVE: u128 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// Every single-generator ideal `<g>`, for all q^(s·ell) arrays g.
    Exhaustive,
    /// `count` random ideals drawn from a seeded generator.
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub k: usize,
    /// Empty for the zero code and when q^k exceeds the distance cap.
    pub d: Option<usize>,
    /// Hex SHA-256 of the canonical generator-set JSON.
    pub hash: String,
}

pub fn canonical_hash(json: &str) -> String {
    Sha256::digest(json.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

struct Table {
    seen: HashSet<String>,
    rows: Vec<Row>,
}

impl Table {
    fn add(&mut self, shape: &RingShape, gens: &[RingElem]) -> Result<(), CliError> {
        let gs =
            extract_generators(shape, gens).map_err(|e| CliError::from_core("enumerate", e))?;
        let json = generator_set_json(&gs);
        if !self.seen.insert(json.clone()) {
            return Ok(());
        }
        let gm = generator_matrix(&gs);
        let d = match min_distance(&gm, DEFAULT_DISTANCE_CAP) {
            Ok(d) => Some(d),
            Err(Error::Undefined | Error::TooLarge { .. }) => None,
            Err(e) => return Err(CliError::from_core("enumerate", e)),
        };
        self.rows.push(Row {
            n: gm.n(),
            k: gm.k(),
            d,
            hash: canonical_hash(&json),
        });
        Ok(())
    }
}

/// Distinct ideals in order of first appearance.
pub fn enumerate(
    shape: &RingShape,
    mode: Mode,
    count: usize,
    seed: u64,
) -> Result<Vec<Row>, CliError> {
    let mut table = Table {
        seen: HashSet::new(),
        rows: Vec::new(),
    };
    match mode {
        Mode::Exhaustive => {
            let q = shape.field().order() as u128;
            let n = shape.n();
            let total = (0..n).try_fold(1u128, |acc, _| {
                acc.checked_mul(q).filter(|&t| t <= MAX_EXHAUSTIVE)
            });
            let Some(total) = total else {
                return Err(CliError::TooLarge(format!(
                    "exhaustive enumeration of {q}^{n} candidates exceeds {MAX_EXHAUSTIVE}"
                )));
            };
            let mut v = vec![Elem::ZERO; n];
            for t in 0..total {
                // Base-q digits of t, least significant first, in codeword order.
                let mut r = t;
                for c in v.iter_mut() {
                    *c = Elem((r % q) as u32);
                    r /= q;
                }
                let g = RingElem::from_vector(shape, FlatOrder::Codeword, &v).expect("length n");
                table.add(shape, &[g])?;
            }
        }
        Mode::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let gens = sample::random_generators(shape, &mut rng);
                table.add(shape, &gens)?;
            }
        }
    }
    Ok(table.rows)
}

/// `n,k,d,hash` header followed by one line per row.
pub fn csv(rows: &[Row]) -> String {
    let mut out = String::from("n,k,d,hash\n");
    for r in rows {
        let d = r.d.map(|d| d.to_string()).unwrap_or_default();
        out.push_str(&format!("{},{},{},{}\n", r.n, r.k, d, r.hash));
    }
    out
}
