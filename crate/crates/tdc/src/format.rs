//! JSON problem files and the serialized forms of every CLI output.

use serde::{Deserialize, Serialize};
use tdc_core::codegen::{CodeParams, GeneratorMatrix};
use tdc_core::oracle::Report;
use tdc_core::{
    Decomposition, Elem, FieldSpec, GeneratorSet, Gf, Poly, Residue, RingElem, RingShape,
};

use crate::error::CliError;

/// `{"p": 2, "m": 1, "modulus": [1, 1, 1]}`; `m` defaults to 1 and the
/// modulus to the built-in default for the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDescriptor {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldDescriptor {
    pub fn build(&self) -> Result<Gf, CliError> {
        Gf::new(FieldSpec {
            p: self.p,
            m: self.m,
            modulus: self.modulus.clone(),
        })
        .map_err(|e| CliError::from_core("field", e))
    }
}

/// Array in codeword orientation: outer index = row = x-exponent.
pub type Array = Vec<Vec<u64>>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cap: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub with_distance: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub field: FieldDescriptor,
    pub s: usize,
    pub ell: usize,
    #[serde(default)]
    pub generators: Vec<Array>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<Array>,
    #[serde(default)]
    pub options: Options,
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub shape: RingShape,
    pub generators: Vec<RingElem>,
    pub element: Option<RingElem>,
    pub options: Options,
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<ProblemSpec, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("problem file: {e}")))
    }

    pub fn validate(&self) -> Result<Problem, CliError> {
        let field = self.field.build()?;
        let shape = RingShape::new(&field, self.s, self.ell)
            .map_err(|e| CliError::from_core("s/ell", e))?;
        let generators = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, a)| parse_array(&shape, a, &format!("generators[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let element = self
            .element
            .as_ref()
            .map(|a| parse_array(&shape, a, "element"))
            .transpose()?;
        Ok(Problem {
            shape,
            generators,
            element,
            options: self.options.clone(),
        })
    }
}

/// Checks dimensions and entry ranges, naming the offending location.
pub fn parse_array(shape: &RingShape, array: &Array, what: &str) -> Result<RingElem, CliError> {
    if array.len() != shape.s() {
        return Err(CliError::Parse(format!(
            "{what}: expected {} rows, found {}",
            shape.s(),
            array.len()
        )));
    }
    let field = shape.field();
    let mut rows = Vec::with_capacity(array.len());
    for (i, row) in array.iter().enumerate() {
        if row.len() != shape.ell() {
            return Err(CliError::Parse(format!(
                "{what}[{i}]: expected {} entries, found {}",
                shape.ell(),
                row.len()
            )));
        }
        let row = row
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                field
                    .decode(c)
                    .map_err(|e| CliError::Parse(format!("{what}[{i}][{j}]: {e}")))
            })
            .collect::<Result<Vec<Elem>, _>>()?;
        rows.push(row);
    }
    RingElem::from_array(shape, &rows).map_err(|e| CliError::from_core(what, e))
}

pub fn array_of(e: &RingElem) -> Array {
    e.to_array()
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.0 as u64).collect())
        .collect()
}

fn poly_ints(p: &Poly) -> Vec<u32> {
    p.to_u32s()
}

fn residue_ints(r: &Residue) -> Vec<u32> {
    r.lift().to_u32s()
}

#[derive(Debug, Serialize)]
struct LayerJson {
    j: usize,
    gen: Vec<u32>,
    a: usize,
    cof: Vec<u32>,
}

#[derive(Debug, Serialize)]
struct GeneratorSetJson {
    layers: Vec<LayerJson>,
    gens: Vec<Array>,
    t: Vec<Vec<Vec<u32>>>,
}

/// `{"layers":[{"j","gen","a","cof"}],"gens":[arrays],"t":[[[...]]]}`.
/// Polynomials are ascending coefficient lists without trailing zeros.
pub fn generator_set_json(gs: &GeneratorSet) -> String {
    let doc = GeneratorSetJson {
        layers: gs
            .layers()
            .iter()
            .map(|l| LayerJson {
                j: l.index,
                gen: residue_ints(&l.generator),
                a: l.degree,
                cof: poly_ints(&l.cofactor),
            })
            .collect(),
        gens: gs.gens().iter().map(array_of).collect(),
        t: gs
            .t_table()
            .iter()
            .map(|row| row.iter().map(poly_ints).collect())
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixFormat {
    Json,
    Text,
    Csv,
}

impl MatrixFormat {
    pub fn parse(s: &str) -> Result<MatrixFormat, CliError> {
        match s {
            "json" => Ok(MatrixFormat::Json),
            "text" => Ok(MatrixFormat::Text),
            "csv" => Ok(MatrixFormat::Csv),
            other => Err(CliError::Parse(format!(
                "options.format: unknown format {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Serialize)]
struct MatrixJson {
    n: usize,
    k: usize,
    rows: Vec<Vec<u32>>,
    labels: Vec<(usize, usize)>,
}

fn row_ints(gm: &GeneratorMatrix) -> Vec<Vec<u32>> {
    gm.rows()
        .iter()
        .map(|r| r.iter().map(|c| c.0).collect())
        .collect()
}

pub fn matrix_output(gm: &GeneratorMatrix, format: MatrixFormat) -> String {
    let rows = row_ints(gm);
    let join = |sep: &str| {
        rows.iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(sep) + "\n")
            .collect::<String>()
    };
    match format {
        MatrixFormat::Json => {
            let doc = MatrixJson {
                n: gm.n(),
                k: gm.k(),
                rows,
                labels: gm.labels().to_vec(),
            };
            serde_json::to_string(&doc).expect("serializable") + "\n"
        }
        MatrixFormat::Text => join(" "),
        MatrixFormat::Csv => join(","),
    }
}

#[derive(Debug, Serialize)]
struct ParamsJson {
    n: usize,
    k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    d: Option<usize>,
    q: u32,
}

pub fn params_json(p: &CodeParams) -> String {
    serde_json::to_string(&ParamsJson {
        n: p.n,
        k: p.k,
        d: p.d,
        q: p.q,
    })
    .expect("serializable")
}

#[derive(Debug, Serialize)]
struct MemberJson {
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    qs: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<Array>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    layer: Option<usize>,
}

pub fn member_json(d: &Decomposition) -> String {
    let doc = MemberJson {
        member: true,
        qs: Some(d.qs.iter().map(residue_ints).collect()),
        trace: d.trace.as_ref().map(|t| t.iter().map(array_of).collect()),
        layer: None,
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn nonmember_json(layer: usize) -> String {
    let doc = MemberJson {
        member: false,
        qs: None,
        trace: None,
        layer: Some(layer),
    };
    serde_json::to_string(&doc).expect("serializable")
}

#[derive(Debug, Serialize)]
struct CheckJson<'a> {
    name: &'a str,
    pass: bool,
    counterexample: &'a Option<Vec<u32>>,
}

#[derive(Debug, Serialize)]
struct ReportJson<'a> {
    checks: Vec<CheckJson<'a>>,
}

/// `{"checks":[{"name":..., "pass":bool, "counterexample":[...]|null}]}`
pub fn report_json(r: &Report) -> String {
    let doc = ReportJson {
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                name: &c.name,
                pass: c.pass,
                counterexample: &c.counterexample,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}
