//! Quivers, weights and their flow polytopes.
//!
//! `∇(Q,θ,ℓ,u)` is the set of `x ∈ ℝ^{Q₁}` with `ℓ ≤ x ≤ u` and, at every
//! vertex, inflow minus outflow equal to `θ(v)`. This module enumerates its
//! lattice points, detects removable and contractible arrows, and tightens.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact_math::{lp, IntMatrix, LpStatus, Rational, Sense};
use crate::graphs::{merged_id, Edge, Graph};
use crate::polytopes::{LatticePolytope, PolytopeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("duplicate arrow id {0}")]
    DuplicateArrow(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("unknown arrow {0}")]
    UnknownArrow(String),
    #[error("weight has no value at vertex {0}")]
    MissingWeight(String),
    #[error("empty affine space")]
    EmptyAffineSpace,
    #[error("unbounded")]
    Unbounded,
    #[error("empty")]
    Empty,
    #[error("quiver has an oriented cycle")]
    Cyclic,
    #[error("cannot acyclify: arrow {0} lies on a cycle and has no upper bound")]
    CannotAcyclify(String),
    #[error("invalid bounds for arrow {0}")]
    InvalidBounds(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

pub type Weight = BTreeMap<String, i64>;

/// Arrow bounds; a missing lower bound is 0 and a missing upper bound is +∞.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub lower: BTreeMap<String, i64>,
    pub upper: BTreeMap<String, i64>,
}

impl Bounds {
    pub fn lower(&self, a: &str) -> i64 {
        self.lower.get(a).copied().unwrap_or(0)
    }

    pub fn upper(&self, a: &str) -> Option<i64> {
        self.upper.get(a).copied()
    }

    /// The box `k ≤ x ≤ k + 1`.
    pub fn unit_box(k: &BTreeMap<String, i64>) -> Bounds {
        Bounds { lower: k.clone(), upper: k.iter().map(|(a, v)| (a.clone(), v + 1)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineForm {
    pub coeffs: Vec<i64>,
    pub constant: i64,
}

impl AffineForm {
    pub fn eval(&self, free: &[i64]) -> i64 {
        self.constant + self.coeffs.iter().zip(free).map(|(c, v)| c * v).sum::<i64>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineParametrization {
    pub free: Vec<String>,
    pub expressions: BTreeMap<String, AffineForm>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self, QuiverError> {
        let vset: BTreeSet<String> = vertices.into_iter().collect();
        let mut ids = BTreeSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (id, tail, head) in arrows {
            if tail == head {
                return Err(QuiverError::Loop(tail));
            }
            for x in [&tail, &head] {
                if !vset.contains(x) {
                    return Err(QuiverError::UnknownVertex(x.clone()));
                }
            }
            if !ids.insert(id.clone()) {
                return Err(QuiverError::DuplicateArrow(id));
            }
            out.push(Arrow { id, tail, head });
        }
        Ok(Quiver { vertices: vset.into_iter().collect(), arrows: out })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: &str) -> Result<&Arrow, QuiverError> {
        self.arrows.iter().find(|a| a.id == id).ok_or_else(|| QuiverError::UnknownArrow(id.into()))
    }

    pub fn arrow_ids(&self) -> Vec<String> {
        self.arrows.iter().map(|a| a.id.clone()).collect()
    }

    pub fn valency(&self, v: &str) -> usize {
        self.arrows.iter().filter(|a| a.tail == v || a.head == v).count()
    }

    /// The underlying undirected graph; edge ids are arrow ids.
    pub fn underlying_graph(&self) -> Graph {
        let edges =
            self.arrows.iter().map(|a| Edge { id: a.id.clone(), u: a.tail.clone(), v: a.head.clone() }).collect();
        Graph::new(self.vertices.clone(), edges).expect("quiver is loop-free")
    }

    pub fn chi(&self) -> i64 {
        crate::graphs::chi(&self.underlying_graph())
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    fn topological_order(&self) -> Option<Vec<String>> {
        let mut indeg: BTreeMap<&str, usize> = self.vertices.iter().map(|v| (v.as_str(), 0)).collect();
        for a in &self.arrows {
            *indeg.get_mut(a.head.as_str()).expect("vertex") += 1;
        }
        let mut queue: VecDeque<&str> = indeg.iter().filter(|(_, &d)| d == 0).map(|(v, _)| *v).collect();
        let mut order = Vec::new();
        while let Some(v) = queue.pop_front() {
            order.push(v.to_string());
            for a in self.arrows.iter().filter(|a| a.tail == v) {
                let d = indeg.get_mut(a.head.as_str()).expect("vertex");
                *d -= 1;
                if *d == 0 {
                    queue.push_back(a.head.as_str());
                }
            }
        }
        (order.len() == self.vertices.len()).then_some(order)
    }

    fn check_weight(&self, theta: &Weight) -> Result<(), QuiverError> {
        match self.vertices.iter().find(|v| !theta.contains_key(*v)) {
            Some(v) => Err(QuiverError::MissingWeight(v.clone())),
            None => Ok(()),
        }
    }

    /// Incidence rows: for each vertex, +1 on arrows into it and −1 on
    /// arrows out of it.
    fn incidence(&self) -> Vec<Vec<i64>> {
        self.vertices
            .iter()
            .map(|v| {
                self.arrows
                    .iter()
                    .map(|a| {
                        if a.head == *v {
                            1
                        } else if a.tail == *v {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// `ω_k(v) = Σ_{a⁺=v} k(a) − Σ_{a⁻=v} k(a)`; arrows missing from `k` count as 0.
pub fn omega(q: &Quiver, k: &BTreeMap<String, i64>) -> Result<Weight, QuiverError> {
    if let Some(bad) = k.keys().find(|id| q.arrows.iter().all(|a| &a.id != *id)) {
        return Err(QuiverError::UnknownArrow(bad.clone()));
    }
    let mut w: Weight = q.vertices.iter().map(|v| (v.clone(), 0)).collect();
    for a in &q.arrows {
        let val = k.get(&a.id).copied().unwrap_or(0);
        *w.get_mut(&a.head).expect("vertex") += val;
        *w.get_mut(&a.tail).expect("vertex") -= val;
    }
    Ok(w)
}

pub fn add_weights(a: &Weight, b: &Weight) -> Weight {
    let mut out = a.clone();
    for (v, x) in b {
        *out.entry(v.clone()).or_insert(0) += x;
    }
    out
}

/// Solve the flow equations along a spanning forest; the arrows off the
/// forest are free.
pub fn parametrize(q: &Quiver, theta: &Weight) -> Result<AffineParametrization, QuiverError> {
    q.check_weight(theta)?;
    let n = q.vertices.len();
    let idx: HashMap<&str, usize> = q.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in q.arrows.iter().enumerate() {
        incident[idx[a.tail.as_str()]].push(i);
        incident[idx[a.head.as_str()]].push(i);
    }
    // BFS forest preferring later arrows, so the free arrows come first;
    // `parent[v]` is the tree arrow joining v to its parent.
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut visited = vec![false; n];
    let mut in_tree = vec![false; q.arrows.len()];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &ai in incident[v].iter().rev() {
                let a = &q.arrows[ai];
                let w = idx[if idx[a.tail.as_str()] == v { a.head.as_str() } else { a.tail.as_str() }];
                if !visited[w] {
                    visited[w] = true;
                    parent[w] = Some(ai);
                    in_tree[ai] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        let total: i64 = comp.iter().map(|&v| theta[&q.vertices[v]]).sum();
        if total != 0 {
            return Err(QuiverError::EmptyAffineSpace);
        }
    }
    let free_idx: Vec<usize> = (0..q.arrows.len()).filter(|&i| !in_tree[i]).collect();
    let nf = free_idx.len();
    let mut forms: Vec<Option<AffineForm>> = vec![None; q.arrows.len()];
    for (k, &ai) in free_idx.iter().enumerate() {
        let mut coeffs = vec![0; nf];
        coeffs[k] = 1;
        forms[ai] = Some(AffineForm { coeffs, constant: 0 });
    }
    // Leaves first: the parent arrow of v balances the equation at v.
    for &v in order.iter().rev() {
        let Some(t) = parent[v] else { continue };
        let mut acc = AffineForm { coeffs: vec![0; nf], constant: theta[&q.vertices[v]] };
        // inflow − outflow = θ(v)  ⇒  contribution of t = θ(v) − rest
        for &ai in &incident[v] {
            if ai == t {
                continue;
            }
            let a = &q.arrows[ai];
            let f = forms[ai].as_ref().expect("child arrows are solved first");
            let sign = if idx[a.head.as_str()] == v { 1 } else { -1 };
            acc.constant -= sign * f.constant;
            for (c, x) in acc.coeffs.iter_mut().zip(&f.coeffs) {
                *c -= sign * x;
            }
        }
        if idx[q.arrows[t].tail.as_str()] == v {
            acc.constant = -acc.constant;
            acc.coeffs.iter_mut().for_each(|c| *c = -*c);
        }
        forms[t] = Some(acc);
    }
    Ok(AffineParametrization {
        free: free_idx.iter().map(|&i| q.arrows[i].id.clone()).collect(),
        expressions: q
            .arrows
            .iter()
            .zip(forms)
            .map(|(a, f)| (a.id.clone(), f.expect("every arrow solved")))
            .collect(),
    })
}

/// Supply `Σ_{θ(v)<0} |θ(v)|`; in an acyclic quiver no arrow carries more.
fn implied_bound(theta: &Weight) -> i64 {
    theta.values().filter(|v| **v < 0).map(|v| -v).sum()
}

/// All integer points of `∇(Q,θ,ℓ,u)` as vectors indexed like `q.arrows()`,
/// sorted lexicographically.
pub fn lattice_points(q: &Quiver, theta: &Weight, b: &Bounds) -> Result<Vec<Vec<i64>>, QuiverError> {
    q.check_weight(theta)?;
    let param = match parametrize(q, theta) {
        Ok(p) => p,
        Err(QuiverError::EmptyAffineSpace) => return Ok(vec![]),
        Err(e) => return Err(e),
    };
    let acyclic = q.is_acyclic();
    let implied = implied_bound(theta);
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for a in &q.arrows {
        let l = b.lower(&a.id);
        let u = match (b.upper(&a.id), acyclic) {
            (Some(u), true) => u.min(implied),
            (Some(u), false) => u,
            (None, true) => implied,
            (None, false) => return Err(QuiverError::Unbounded),
        };
        if l < 0 {
            return Err(QuiverError::InvalidBounds(a.id.clone()));
        }
        lo.push(l);
        hi.push(u);
    }
    let pos: HashMap<&str, usize> = q.arrows.iter().enumerate().map(|(i, a)| (a.id.as_str(), i)).collect();
    let nf = param.free.len();
    let forms: Vec<&AffineForm> = q.arrows.iter().map(|a| &param.expressions[&a.id]).collect();
    // Check each arrow as soon as the last free coordinate it depends on is set.
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); nf + 1];
    for (i, f) in forms.iter().enumerate() {
        let last = f.coeffs.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1);
        checks[last].push(i);
    }
    let ok = |i: usize, vals: &[i64]| {
        let mut full = vals.to_vec();
        full.resize(nf, 0);
        let v = forms[i].eval(&full);
        v >= lo[i] && v <= hi[i]
    };
    if !checks[0].iter().all(|&i| ok(i, &[])) {
        return Ok(vec![]);
    }
    let free_pos: Vec<usize> = param.free.iter().map(|a| pos[a.as_str()]).collect();
    let mut out = Vec::new();
    let mut vals = Vec::with_capacity(nf);
    fn rec(
        vals: &mut Vec<i64>,
        nf: usize,
        free_pos: &[usize],
        lo: &[i64],
        hi: &[i64],
        checks: &[Vec<usize>],
        ok: &dyn Fn(usize, &[i64]) -> bool,
        forms: &[&AffineForm],
        out: &mut Vec<Vec<i64>>,
    ) {
        let k = vals.len();
        if k == nf {
            out.push(forms.iter().map(|f| f.eval(vals)).collect());
            return;
        }
        let p = free_pos[k];
        for v in lo[p]..=hi[p] {
            vals.push(v);
            if checks[k + 1].iter().all(|&i| ok(i, vals)) {
                rec(vals, nf, free_pos, lo, hi, checks, ok, forms, out);
            }
            vals.pop();
        }
    }
    rec(&mut vals, nf, &free_pos, &lo, &hi, &checks, &ok, &forms, &mut out);
    out.sort();
    Ok(out)
}

pub fn flow_polytope(q: &Quiver, theta: &Weight, b: &Bounds) -> Result<LatticePolytope, QuiverError> {
    let pts = lattice_points(q, theta, b)?;
    if pts.is_empty() {
        return Err(QuiverError::Empty);
    }
    Ok(LatticePolytope::from_points(q.arrows.len(), pts)?)
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Optimize `sense · x(a)` over `𝒜(Q,θ)` with `x(b) ≥ 0` for every arrow `b`
/// except possibly `skip`.
fn arrow_lp(q: &Quiver, theta: &Weight, a: usize, sense: Sense, skip: Option<usize>) -> LpStatusValue {
    let m = q.arrows.len();
    let inc = q.incidence();
    let eq = IntMatrix::from_rows(m, &inc).expect("consistent");
    let rhs: Vec<BigInt> = q.vertices.iter().map(|v| BigInt::from(theta[v])).collect();
    let rows: Vec<Vec<i64>> = (0..m)
        .filter(|&b| Some(b) != skip)
        .map(|b| (0..m).map(|j| i64::from(j == b)).collect())
        .collect();
    let ineq = IntMatrix::from_rows(m, &rows).expect("consistent");
    let zeros = to_big(&vec![0; rows.len()]);
    let mut obj = vec![Rational::zero(); m];
    obj[a] = Rational::from_integer(BigInt::from(1));
    let r = lp(&obj, sense, &eq, &rhs, &ineq, &zeros).expect("dimensions are consistent");
    match r.status {
        LpStatus::Optimal => LpStatusValue::Value(r.value.expect("optimal has value")),
        LpStatus::Unbounded => LpStatusValue::Unbounded,
        LpStatus::Infeasible => LpStatusValue::Infeasible,
    }
}

enum LpStatusValue {
    Value(Rational),
    Unbounded,
    Infeasible,
}

fn arrow_index(q: &Quiver, a: &str) -> Result<usize, QuiverError> {
    q.arrows.iter().position(|x| x.id == a).ok_or_else(|| QuiverError::UnknownArrow(a.into()))
}

fn require_acyclic(q: &Quiver) -> Result<(), QuiverError> {
    if q.is_acyclic() {
        Ok(())
    } else {
        Err(QuiverError::Cyclic)
    }
}

/// Condition (R): `x(a) = 0` on all of `∇(Q,θ)` (vacuous when empty).
pub fn is_removable(q: &Quiver, theta: &Weight, a: &str) -> Result<bool, QuiverError> {
    require_acyclic(q)?;
    q.check_weight(theta)?;
    let i = arrow_index(q, a)?;
    Ok(match arrow_lp(q, theta, i, Sense::Max, None) {
        LpStatusValue::Infeasible => true,
        LpStatusValue::Value(v) => v.is_zero(),
        LpStatusValue::Unbounded => false,
    })
}

/// Condition (C): `x(a) ≥ 0` is implied on `𝒜(Q,θ)` by the other sign
/// constraints.
pub fn is_contractible(q: &Quiver, theta: &Weight, a: &str) -> Result<bool, QuiverError> {
    require_acyclic(q)?;
    q.check_weight(theta)?;
    let i = arrow_index(q, a)?;
    Ok(match arrow_lp(q, theta, i, Sense::Min, Some(i)) {
        LpStatusValue::Infeasible => true,
        LpStatusValue::Value(v) => !v.is_negative(),
        LpStatusValue::Unbounded => false,
    })
}

pub fn is_nonempty(q: &Quiver, theta: &Weight) -> bool {
    if q.arrows.is_empty() {
        return theta.values().all(|v| *v == 0);
    }
    !matches!(arrow_lp(q, theta, 0, Sense::Min, None), LpStatusValue::Infeasible)
}

/// Contract `a`, identifying its endpoints and adding their weights.
pub fn contract_arrow(q: &Quiver, theta: &Weight, a: &str) -> Result<(Quiver, Weight), QuiverError> {
    let arrow = q.arrow(a)?.clone();
    let merged = merged_id(&arrow.tail, &arrow.head);
    let rename = |x: &str| {
        if x == arrow.tail || x == arrow.head {
            merged.clone()
        } else {
            x.to_string()
        }
    };
    let vertices: Vec<String> = q.vertices.iter().map(|v| rename(v)).collect();
    let mut arrows = Vec::new();
    for b in q.arrows.iter().filter(|b| b.id != a) {
        let (t, h) = (rename(&b.tail), rename(&b.head));
        if t == h {
            return Err(QuiverError::Loop(merged));
        }
        arrows.push((b.id.clone(), t, h));
    }
    let mut w = Weight::new();
    for (v, x) in theta {
        *w.entry(rename(v)).or_insert(0) += x;
    }
    Ok((Quiver::new(vertices, arrows)?, w))
}

pub fn remove_arrow(q: &Quiver, theta: &Weight, a: &str) -> Result<(Quiver, Weight), QuiverError> {
    q.arrow(a)?;
    let arrows =
        q.arrows.iter().filter(|b| b.id != a).map(|b| (b.id.clone(), b.tail.clone(), b.head.clone())).collect();
    Ok((Quiver::new(q.vertices.clone(), arrows)?, theta.clone()))
}

/// Remove removable and contract contractible arrows until neither exists.
/// Arrows are scanned in id order, (R) before (C), restarting after each
/// change.
pub fn tighten(q: &Quiver, theta: &Weight) -> Result<(Quiver, Weight), QuiverError> {
    require_acyclic(q)?;
    q.check_weight(theta)?;
    if !is_nonempty(q, theta) {
        return Err(QuiverError::Empty);
    }
    let mut cur = (q.clone(), theta.clone());
    'scan: loop {
        let mut ids = cur.0.arrow_ids();
        ids.sort();
        for a in ids {
            if is_removable(&cur.0, &cur.1, &a)? {
                cur = remove_arrow(&cur.0, &cur.1, &a)?;
                continue 'scan;
            }
            if is_contractible(&cur.0, &cur.1, &a)? {
                cur = contract_arrow(&cur.0, &cur.1, &a)?;
                continue 'scan;
            }
        }
        return Ok(cur);
    }
}

pub fn is_tight(q: &Quiver, theta: &Weight) -> Result<bool, QuiverError> {
    for a in q.arrow_ids() {
        if is_removable(q, theta, &a)? || is_contractible(q, theta, &a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reverse the two arrows at a valency-2 source `v`: `θ'(v) = −θ(v)` and
/// both former heads gain `θ(v)`. A valency-2 sink is accepted too (the same
/// formulas apply), which makes the operation an involution.
pub fn reverse_valency2_source(q: &Quiver, theta: &Weight, v: &str) -> Result<(Quiver, Weight), QuiverError> {
    q.check_weight(theta)?;
    let at: Vec<&Arrow> = q.arrows.iter().filter(|a| a.tail == v || a.head == v).collect();
    let other = |a: &Arrow| if a.tail == v { a.head.clone() } else { a.tail.clone() };
    let source = at.iter().all(|a| a.tail == v);
    let sink = at.iter().all(|a| a.head == v);
    if at.len() != 2 || !(source || sink) || other(at[0]) == other(at[1]) {
        return Err(QuiverError::Precondition(format!(
            "{v} is not a valency-2 source or sink with distinct neighbours"
        )));
    }
    let tv = theta[v];
    let mut w = theta.clone();
    w.insert(v.to_string(), -tv);
    for a in &at {
        *w.get_mut(&other(a)).expect("vertex") += tv;
    }
    let arrows = q
        .arrows
        .iter()
        .map(|a| {
            if a.tail == v || a.head == v {
                (a.id.clone(), a.head.clone(), a.tail.clone())
            } else {
                (a.id.clone(), a.tail.clone(), a.head.clone())
            }
        })
        .collect();
    Ok((Quiver::new(q.vertices.clone(), arrows)?, w))
}

/// Reverse a feedback arc set (the back arcs of a depth-first search),
/// substituting `x(a) = u(a) − x'(a)` on each reversed arrow.
pub fn acyclify(q: &Quiver, theta: &Weight, b: &Bounds) -> Result<(Quiver, Weight, Bounds), QuiverError> {
    q.check_weight(theta)?;
    let idx: HashMap<&str, usize> = q.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let n = q.vertices.len();
    let mut out_arrows: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in q.arrows.iter().enumerate() {
        out_arrows[idx[a.tail.as_str()]].push(i);
    }
    // 0 = unvisited, 1 = on stack, 2 = finished
    let mut state = vec![0u8; n];
    let mut back = BTreeSet::new();
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        state[root] = 1;
        while let Some(&mut (v, ref mut k)) = stack.last_mut() {
            if *k < out_arrows[v].len() {
                let ai = out_arrows[v][*k];
                *k += 1;
                let w = idx[q.arrows[ai].head.as_str()];
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        back.insert(ai);
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    let mut w = theta.clone();
    let mut bounds = b.clone();
    let mut arrows = Vec::new();
    for (i, a) in q.arrows.iter().enumerate() {
        if back.contains(&i) {
            let u = b.upper(&a.id).ok_or_else(|| QuiverError::CannotAcyclify(a.id.clone()))?;
            let l = b.lower(&a.id);
            if l > u {
                return Err(QuiverError::InvalidBounds(a.id.clone()));
            }
            *w.get_mut(&a.head).expect("vertex") -= u;
            *w.get_mut(&a.tail).expect("vertex") += u;
            bounds.lower.insert(a.id.clone(), 0);
            bounds.upper.insert(a.id.clone(), u - l);
            arrows.push((a.id.clone(), a.head.clone(), a.tail.clone()));
        } else {
            arrows.push((a.id.clone(), a.tail.clone(), a.head.clone()));
        }
    }
    Ok((Quiver::new(q.vertices.clone(), arrows)?, w, bounds))
}
