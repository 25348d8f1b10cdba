//! The JSON exchange format for coalgebras, Hopf algebras, comodules,
//! bicomodules and subspaces.
//!
//! Scalars are strings `"p/q"` (reduced, q > 0) or `"p"` when q = 1.
//! Structure constants are triple lists `[i, j, k, "p/q"]`: for `delta`
//! the cⱼ⊗c_k coefficient of Δ(cᵢ), for `mult` the c_k coefficient of
//! cᵢcⱼ. Matrices are row-major arrays of scalar strings. Parsing
//! validates shapes, index ranges and scalar syntax; `emit ∘ parse` is
//! idempotent because emission always writes the canonical form (sorted
//! triples, zeros dropped, reduced scalars).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coalgebra::{Coalgebra, Comodule};
use crate::coextension::Bicomodule;
use crate::field::{parse_rational, Rational, ScalarParseError};
use crate::hopf::HopfAlgebra;
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::tensor::Tensor3;

type Triple = (usize, usize, usize, String);

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Coalgebra(CoalgebraDoc),
    Hopf(HopfDoc),
    Comodule(ComoduleDoc),
    Bicomodule(BicomoduleDoc),
    Subspace(SubspaceDoc),
}

impl Document {
    pub fn name(&self) -> &str {
        match self {
            Document::Coalgebra(d) => &d.name,
            Document::Hopf(d) => &d.name,
            Document::Comodule(d) => &d.name,
            Document::Bicomodule(d) => &d.name,
            Document::Subspace(d) => &d.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Coalgebra(_) => "coalgebra",
            Document::Hopf(_) => "hopf",
            Document::Comodule(_) => "comodule",
            Document::Bicomodule(_) => "bicomodule",
            Document::Subspace(_) => "subspace",
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CoalgebraDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub delta: Vec<Triple>,
    pub counit: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct HopfDoc {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub delta: Vec<Triple>,
    pub counit: Vec<String>,
    pub mult: Vec<Triple>,
    pub unit: Vec<String>,
    /// Row-major antipode matrix.
    pub antipode: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct ComoduleDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    pub parent_dim: usize,
    pub dim: usize,
    /// ρ(mᵢ) = Σ `rho[i][j][b]` mⱼ⊗c_b as triples [i, j, b, "p/q"].
    pub rho: Vec<Triple>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct BicomoduleDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    pub parent_dim: usize,
    pub dim: usize,
    /// λ(mᵢ) = Σ `left[i][a][j]` c_a⊗mⱼ as triples [i, a, j, "p/q"].
    pub left: Vec<Triple>,
    /// ρ(mᵢ) = Σ `right[i][j][b]` mⱼ⊗c_b as triples [i, j, b, "p/q"].
    pub right: Vec<Triple>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct SubspaceDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parent: Option<String>,
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum ExchangeError {
    #[error("syntax error: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("field `{field}`: {source}")]
    Scalar {
        field: String,
        source: ScalarParseError,
    },
    #[error("field `{field}`: index ({i},{j},{k}) out of range for dims {dims:?}")]
    IndexOutOfRange {
        field: String,
        i: usize,
        j: usize,
        k: usize,
        dims: (usize, usize, usize),
    },
    #[error("field `{field}`: expected {expected} entries, got {got}")]
    Shape {
        field: String,
        expected: usize,
        got: usize,
    },
    #[error("document has kind `{got}`, expected `{expected}`")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },
    #[error("dimension must be at least 1")]
    ZeroDimension,
}

fn parse_scalar_field(field: &str, s: &str) -> Result<Rational, ExchangeError> {
    parse_rational(s).map_err(|source| ExchangeError::Scalar {
        field: field.to_string(),
        source,
    })
}

fn parse_scalar_vec(
    field: &str,
    v: &[String],
    expected: usize,
) -> Result<Vec<Rational>, ExchangeError> {
    if v.len() != expected {
        return Err(ExchangeError::Shape {
            field: field.to_string(),
            expected,
            got: v.len(),
        });
    }
    v.iter().map(|s| parse_scalar_field(field, s)).collect()
}

fn parse_triples(
    field: &str,
    triples: &[Triple],
    dims: (usize, usize, usize),
) -> Result<Tensor3<Rational>, ExchangeError> {
    let mut t = Tensor3::zeros(dims.0, dims.1, dims.2);
    for (i, j, k, s) in triples {
        if *i >= dims.0 || *j >= dims.1 || *k >= dims.2 {
            return Err(ExchangeError::IndexOutOfRange {
                field: field.to_string(),
                i: *i,
                j: *j,
                k: *k,
                dims,
            });
        }
        let v = parse_scalar_field(field, s)?;
        t.add_at(*i, *j, *k, v);
    }
    Ok(t)
}

fn emit_triples(t: &Tensor3<Rational>) -> Vec<Triple> {
    t.iter_nonzero()
        .map(|(i, j, k, v)| (i, j, k, v.to_string()))
        .collect()
}

fn emit_scalar_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn emit_matrix(m: &Matrix<Rational>) -> Vec<Vec<String>> {
    m.rows_iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect())
        .collect()
}

fn parse_matrix(
    field: &str,
    rows: &[Vec<String>],
    nrows: usize,
    ncols: usize,
) -> Result<Matrix<Rational>, ExchangeError> {
    if rows.len() != nrows {
        return Err(ExchangeError::Shape {
            field: field.to_string(),
            expected: nrows,
            got: rows.len(),
        });
    }
    let mut out = Vec::with_capacity(nrows);
    for row in rows {
        out.push(parse_scalar_vec(field, row, ncols)?);
    }
    Ok(Matrix::from_rows(out))
}

/// Parses a document; shapes, index ranges and scalar syntax are
/// validated here, coalgebra axioms are the caller's concern.
pub fn parse_document(text: &str) -> Result<Document, ExchangeError> {
    let doc: Document = serde_json::from_str(text)?;
    // shape checks now so downstream conversion cannot panic
    match &doc {
        Document::Coalgebra(d) => {
            to_coalgebra(d)?;
        }
        Document::Hopf(d) => {
            to_hopf(d)?;
        }
        Document::Comodule(d) => {
            to_comodule(d)?;
        }
        Document::Bicomodule(d) => {
            to_bicomodule(d)?;
        }
        Document::Subspace(d) => {
            to_subspace(d)?;
        }
    }
    Ok(doc)
}

/// Emits the canonical form: sorted triples, zero entries dropped,
/// scalars reduced. Fails on documents that violate their own shape
/// invariants; anything produced by `parse_document` or a `from_*`
/// conversion emits cleanly.
pub fn emit_document(doc: &Document) -> Result<String, ExchangeError> {
    let canonical = match doc {
        Document::Coalgebra(d) => Document::Coalgebra(from_coalgebra(&to_coalgebra(d)?)),
        Document::Hopf(d) => Document::Hopf(from_hopf(&to_hopf(d)?)),
        Document::Comodule(d) => {
            let m = to_comodule(d)?;
            Document::Comodule(from_comodule(&d.name, d.parent.clone(), d.parent_dim, &m))
        }
        Document::Bicomodule(d) => {
            let m = to_bicomodule(d)?;
            Document::Bicomodule(from_bicomodule(&d.name, d.parent.clone(), d.parent_dim, &m))
        }
        Document::Subspace(d) => {
            let s = to_subspace(d)?;
            Document::Subspace(from_subspace(&d.name, d.parent.clone(), &s))
        }
    };
    let mut out = serde_json::to_string_pretty(&canonical).expect("serialization cannot fail");
    out.push('\n');
    Ok(out)
}

pub fn to_coalgebra(d: &CoalgebraDoc) -> Result<Coalgebra<Rational>, ExchangeError> {
    if d.dim == 0 {
        return Err(ExchangeError::ZeroDimension);
    }
    if d.basis.len() != d.dim {
        return Err(ExchangeError::Shape {
            field: "basis".into(),
            expected: d.dim,
            got: d.basis.len(),
        });
    }
    let delta = parse_triples("delta", &d.delta, (d.dim, d.dim, d.dim))?;
    let counit = parse_scalar_vec("counit", &d.counit, d.dim)?;
    Ok(Coalgebra::new(
        d.name.clone(),
        d.basis.clone(),
        delta,
        counit,
    ))
}

pub fn from_coalgebra(c: &Coalgebra<Rational>) -> CoalgebraDoc {
    CoalgebraDoc {
        name: c.name().to_string(),
        dim: c.dim(),
        basis: c.basis_names().to_vec(),
        delta: emit_triples(c.delta()),
        counit: emit_scalar_vec(c.counit()),
    }
}

pub fn to_hopf(d: &HopfDoc) -> Result<HopfAlgebra<Rational>, ExchangeError> {
    let coalgebra = to_coalgebra(&CoalgebraDoc {
        name: d.name.clone(),
        dim: d.dim,
        basis: d.basis.clone(),
        delta: d.delta.clone(),
        counit: d.counit.clone(),
    })?;
    let mult = parse_triples("mult", &d.mult, (d.dim, d.dim, d.dim))?;
    let unit = parse_scalar_vec("unit", &d.unit, d.dim)?;
    let antipode = parse_matrix("antipode", &d.antipode, d.dim, d.dim)?;
    Ok(HopfAlgebra::new(coalgebra, mult, unit, antipode))
}

pub fn from_hopf(h: &HopfAlgebra<Rational>) -> HopfDoc {
    HopfDoc {
        name: h.name().to_string(),
        dim: h.dim(),
        basis: h.coalgebra().basis_names().to_vec(),
        delta: emit_triples(h.coalgebra().delta()),
        counit: emit_scalar_vec(h.coalgebra().counit()),
        mult: emit_triples(h.mult()),
        unit: emit_scalar_vec(h.unit()),
        antipode: emit_matrix(h.antipode()),
    }
}

pub fn to_comodule(d: &ComoduleDoc) -> Result<Comodule<Rational>, ExchangeError> {
    if d.parent_dim == 0 {
        return Err(ExchangeError::ZeroDimension);
    }
    let rho = parse_triples("rho", &d.rho, (d.dim, d.dim, d.parent_dim))?;
    Ok(Comodule::new(d.parent_dim, d.dim, rho))
}

pub fn from_comodule(
    name: &str,
    parent: Option<String>,
    parent_dim: usize,
    m: &Comodule<Rational>,
) -> ComoduleDoc {
    ComoduleDoc {
        name: name.to_string(),
        parent,
        parent_dim,
        dim: m.dim(),
        rho: emit_triples(m.rho()),
    }
}

pub fn to_bicomodule(d: &BicomoduleDoc) -> Result<Bicomodule<Rational>, ExchangeError> {
    if d.parent_dim == 0 {
        return Err(ExchangeError::ZeroDimension);
    }
    let left = parse_triples("left", &d.left, (d.dim, d.parent_dim, d.dim))?;
    let right = parse_triples("right", &d.right, (d.dim, d.dim, d.parent_dim))?;
    Ok(Bicomodule::new(d.parent_dim, d.dim, left, right))
}

pub fn from_bicomodule(
    name: &str,
    parent: Option<String>,
    parent_dim: usize,
    m: &Bicomodule<Rational>,
) -> BicomoduleDoc {
    BicomoduleDoc {
        name: name.to_string(),
        parent,
        parent_dim,
        dim: m.dim(),
        left: emit_triples(m.left()),
        right: emit_triples(m.right()),
    }
}

pub fn to_subspace(d: &SubspaceDoc) -> Result<Subspace<Rational>, ExchangeError> {
    if d.ambient_dim == 0 {
        return Err(ExchangeError::ZeroDimension);
    }
    let mut rows = Vec::with_capacity(d.basis.len());
    for row in &d.basis {
        rows.push(parse_scalar_vec("basis", row, d.ambient_dim)?);
    }
    Ok(Subspace::span(d.ambient_dim, rows))
}

pub fn from_subspace(name: &str, parent: Option<String>, s: &Subspace<Rational>) -> SubspaceDoc {
    SubspaceDoc {
        name: name.to_string(),
        parent,
        ambient_dim: s.ambient_dim(),
        basis: s
            .basis_vectors()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect(),
    }
}

/// Scalars as a JSON array of strings, for report lines.
pub fn scalar_vec_json(v: &[Rational]) -> String {
    serde_json::to_string(&emit_scalar_vec(v)).expect("serialization cannot fail")
}

/// Row-major matrix as nested JSON arrays of scalar strings.
pub fn matrix_json(m: &Matrix<Rational>) -> String {
    serde_json::to_string(&emit_matrix(m)).expect("serialization cannot fail")
}

/// Structure-constant triples as a JSON list `[[i,j,k,"p/q"],…]`.
pub fn triples_json(t: &Tensor3<Rational>) -> String {
    serde_json::to_string(&emit_triples(t)).expect("serialization cannot fail")
}
