//! JSON schemas for quivers, polytopes, triangulations, polynomials, ideal
//! reports and classification reports.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ehrhart::{BinomialTerm, EhrhartPolynomial};
use crate::exact_math::Rational;
use crate::graphs::GraphError;
use crate::polytopes::{Facet, Fingerprint, LatticePolytope, PolytopeError};
use crate::quivers::{Bounds, Quiver, QuiverError, Weight};
use crate::subdivision::CompressedClass;
use crate::toric::Monomial;
use crate::triangulation::{minimal_nonfaces, Triangulation};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowJson {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UpperJson {
    Finite(i64),
    Symbol(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    pub weight: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lower: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub upper: BTreeMap<String, UpperJson>,
}

impl QuiverJson {
    pub fn new(q: &Quiver, theta: &Weight, b: &Bounds) -> Self {
        QuiverJson {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson { id: a.id.clone(), tail: a.tail.clone(), head: a.head.clone() })
                .collect(),
            weight: q.vertices().iter().map(|v| (v.clone(), theta.get(v).copied().unwrap_or(0))).collect(),
            lower: b.lower.iter().filter(|(_, v)| **v != 0).map(|(a, v)| (a.clone(), *v)).collect(),
            upper: b.upper.iter().map(|(a, v)| (a.clone(), UpperJson::Finite(*v))).collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<(Quiver, Weight, Bounds), IoError> {
        let q = Quiver::new(
            self.vertices.clone(),
            self.arrows.iter().map(|a| (a.id.clone(), a.tail.clone(), a.head.clone())).collect(),
        )?;
        for v in self.weight.keys() {
            if !self.vertices.contains(v) {
                return Err(IoError::Schema(format!("weight on unknown vertex {v}")));
            }
        }
        let known = |a: &String| q.arrows().iter().any(|x| &x.id == a);
        let mut b = Bounds::default();
        for (a, v) in &self.lower {
            if !known(a) {
                return Err(IoError::Schema(format!("bound on unknown arrow {a}")));
            }
            b.lower.insert(a.clone(), *v);
        }
        for (a, v) in &self.upper {
            if !known(a) {
                return Err(IoError::Schema(format!("bound on unknown arrow {a}")));
            }
            match v {
                UpperJson::Finite(x) => {
                    b.upper.insert(a.clone(), *x);
                }
                UpperJson::Symbol(s) if s == "inf" => {}
                UpperJson::Symbol(s) => return Err(IoError::Schema(format!("bad upper bound {s:?}"))),
            }
        }
        Ok((q, self.weight.clone(), b))
    }
}

pub fn parse_quiver(text: &str) -> Result<(Quiver, Weight, Bounds), IoError> {
    serde_json::from_str::<QuiverJson>(text)?.to_quiver()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<i64>,
    pub offset: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub ambient: usize,
    pub points: Vec<Vec<i64>>,
    pub facets: Vec<FacetJson>,
    pub dim: usize,
}

impl PolytopeJson {
    pub fn new(p: &LatticePolytope) -> Self {
        PolytopeJson {
            ambient: p.ambient_dim(),
            points: p.points().to_vec(),
            facets: p.facets().iter().map(|f: &Facet| FacetJson { normal: f.normal.clone(), offset: f.offset }).collect(),
            dim: p.dim(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PointsInput {
    Bare(Vec<Vec<i64>>),
    Object { points: Vec<Vec<i64>>, ambient: Option<usize> },
}

/// A point table: either a bare list of points or any object with a
/// `"points"` field (such as polytope JSON). Point order is kept.
pub fn parse_points(text: &str) -> Result<LatticePolytope, IoError> {
    let (points, ambient) = match serde_json::from_str::<PointsInput>(text)? {
        PointsInput::Bare(p) => (p, None),
        PointsInput::Object { points, ambient } => (points, ambient),
    };
    let ambient = ambient.or_else(|| points.first().map(Vec::len)).ok_or(PolytopeError::NoPoints)?;
    Ok(LatticePolytope::from_table(ambient, points)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationJson {
    pub cells: Vec<Vec<usize>>,
    pub nonfaces: Vec<Vec<usize>>,
    pub unimodular: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular_heights: Option<Vec<String>>,
}

impl TriangulationJson {
    pub fn new(t: &Triangulation, heights: Option<&BTreeMap<usize, Rational>>) -> Self {
        TriangulationJson {
            cells: t.maximal_cells().to_vec(),
            nonfaces: minimal_nonfaces(t).into_iter().map(|f| f.0).collect(),
            unimodular: crate::triangulation::is_unimodular(t),
            regular_heights: heights.map(|h| h.values().map(|r| r.to_string()).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub monomial_coeffs: Vec<String>,
    pub binomial_form: Vec<BinomialTerm>,
}

impl PolynomialJson {
    pub fn new(p: &EhrhartPolynomial) -> Self {
        PolynomialJson {
            monomial_coeffs: p.coefficients.iter().map(|c| c.to_string()).collect(),
            binomial_form: p.binomial_form(),
        }
    }

    pub fn to_polynomial(&self) -> Result<EhrhartPolynomial, IoError> {
        let coefficients = self
            .monomial_coeffs
            .iter()
            .map(|s| s.parse::<Rational>().map_err(|_| IoError::Schema(format!("bad rational {s:?}"))))
            .collect::<Result<_, _>>()?;
        Ok(EhrhartPolynomial { coefficients })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberJson {
    pub sum: Vec<i64>,
    pub monomials: Vec<Vec<usize>>,
}

impl FiberJson {
    pub fn new(p: &LatticePolytope, fiber: &[Monomial]) -> Self {
        FiberJson { sum: fiber[0].sum(p), monomials: fiber.iter().map(|m| m.0.clone()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub quadratic_generated: bool,
    pub cubic_generated: bool,
    pub initial_ideal: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_fiber: Option<FiberJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FingerprintJson {
    pub dim: usize,
    pub points: usize,
    pub facets: usize,
    pub normalized_volume: u64,
    pub facet_point_incidence: Vec<usize>,
    pub ehrhart_coeffs: Vec<String>,
}

impl FingerprintJson {
    pub fn new(f: &Fingerprint) -> Self {
        FingerprintJson {
            dim: f.dim,
            points: f.n_points,
            facets: f.n_facets,
            normalized_volume: f.normalized_volume,
            facet_point_incidence: f.facet_point_incidence.clone(),
            ehrhart_coeffs: f.ehrhart_coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceJson {
    pub graph: String,
    pub weight_label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub class_id: String,
    pub fingerprint: FingerprintJson,
    pub points: Vec<Vec<i64>>,
    pub facets: usize,
    pub provenance: Vec<ProvenanceJson>,
}

/// `v=θ(v)` in vertex order, leaving out `Γ*` sinks of weight 1.
pub fn weight_label(theta: &Weight) -> String {
    theta
        .iter()
        .filter(|(v, t)| !(v.starts_with('[') && **t == 1))
        .map(|(v, t)| format!("{v}={t}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn classification_json(classes: &[CompressedClass], class_id: impl Fn(usize, &CompressedClass) -> String) -> Vec<ClassJson> {
    classes
        .iter()
        .enumerate()
        .map(|(i, c)| ClassJson {
            class_id: class_id(i, c),
            fingerprint: FingerprintJson::new(&c.fingerprint),
            points: c.polytope.points().to_vec(),
            facets: c.polytope.facets().len(),
            provenance: c
                .provenance
                .iter()
                .map(|p| ProvenanceJson { graph: p.graph.to_text(), weight_label: weight_label(&p.weight) })
                .collect(),
        })
        .collect()
}
