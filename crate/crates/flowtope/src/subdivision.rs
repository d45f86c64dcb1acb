//! The subdivision of a flow polytope by integer coordinate hyperplanes, the
//! weight family `W(Γ)`, the cell family `P(Γ)`, and classification of
//! compressed flow polytopes in low dimension.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::exact_math::affine_rank;
use crate::graphs::{automorphisms, chi, contract_edge, enumerate_ld, merged_id, sink_id, star, Graph};
use crate::polytopes::{classify_indices, fingerprint, Fingerprint, LatticePolytope};
use crate::quivers::{flow_polytope, lattice_points, Bounds, Quiver, QuiverError, Weight};

#[derive(Debug, Error)]
pub enum SubdivisionError {
    #[error("unsupported (enumeration size)")]
    Unsupported,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub k: BTreeMap<String, i64>,
    pub polytope: LatticePolytope,
}

/// Cells `∇(Q,θ,k,k+1)` of full dimension, found by slicing along every
/// arrow whose coordinate takes at least three values.
pub fn cells(q: &Quiver, theta: &Weight) -> Result<Vec<Cell>, QuiverError> {
    let pts = lattice_points(q, theta, &Bounds::default())?;
    if pts.is_empty() {
        return Err(QuiverError::Empty);
    }
    let d = affine_rank(&pts).expect("nonempty");
    let m = q.arrows().len();
    let mut found: BTreeMap<Vec<Vec<i64>>, Vec<i64>> = BTreeMap::new();
    slice(&pts, 0, m, d, &mut Vec::new(), &mut found);
    let ids = q.arrow_ids();
    Ok(found
        .into_iter()
        .map(|(pts, k)| Cell {
            k: ids.iter().cloned().zip(k).collect(),
            polytope: LatticePolytope::from_points(m, pts).expect("cells are lattice polytopes"),
        })
        .collect())
}

fn slice(
    pts: &[Vec<i64>],
    arrow: usize,
    m: usize,
    d: usize,
    k: &mut Vec<i64>,
    found: &mut BTreeMap<Vec<Vec<i64>>, Vec<i64>>,
) {
    if arrow == m {
        found.entry(pts.to_vec()).or_insert_with(|| k.clone());
        return;
    }
    let lo = pts.iter().map(|p| p[arrow]).min().expect("nonempty");
    let hi = pts.iter().map(|p| p[arrow]).max().expect("nonempty");
    for v in lo..=(hi - 1).max(lo) {
        let sub: Vec<Vec<i64>> = pts.iter().filter(|p| p[arrow] >= v && p[arrow] <= v + 1).cloned().collect();
        if sub.is_empty() || affine_rank(&sub).expect("nonempty") < d {
            continue;
        }
        k.push(v);
        slice(&sub, arrow + 1, m, d, k, found);
        k.pop();
    }
}

/// `θ(v_e) = 1` on every sink, `−valency(v) < θ(v) < 0` on `Γ₀`, and
/// `Σ_{v ∈ Γ₀} θ(v) = −|Γ₁|`.
pub fn weights_w(g: &Graph) -> Vec<Weight> {
    let verts = g.vertices();
    let target = -(g.edges().len() as i64);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(verts.len());
    fn rec(g: &Graph, verts: &[String], i: usize, sum: i64, target: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == verts.len() {
            if sum == target {
                out.push(cur.clone());
            }
            return;
        }
        // Remaining vertices can contribute between −Σ(val−1) and −(#remaining).
        let rest_min: i64 = verts[i + 1..].iter().map(|v| -(g.valency(v) as i64 - 1)).sum();
        let rest_max = -((verts.len() - i - 1) as i64);
        for t in (-(g.valency(&verts[i]) as i64 - 1))..=-1 {
            let s = sum + t;
            if s + rest_min <= target && s + rest_max >= target {
                cur.push(t);
                rec(g, verts, i + 1, s, target, cur, out);
                cur.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(g, verts, 0, 0, target, &mut cur, &mut raw);
    for vals in raw {
        let mut w: Weight = verts.iter().cloned().zip(vals).collect();
        for e in g.edges() {
            w.insert(sink_id(&e.id), 1);
        }
        out.push(w);
    }
    out
}

/// One weight per orbit of graph automorphisms acting on `W(Γ)` (the first
/// member of each orbit in enumeration order).
pub fn weights_w_reduced(g: &Graph) -> Vec<Weight> {
    let autos = automorphisms(g);
    let verts = g.vertices();
    let all = weights_w(g);
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut out = Vec::new();
    for w in all {
        let key: Vec<i64> = verts.iter().map(|v| w[v]).collect();
        if seen.contains(&key) {
            continue;
        }
        for a in &autos {
            // the weight θ∘σ⁻¹: value at σ(v) is θ(v)
            let mut image = BTreeMap::new();
            for v in verts {
                image.insert(a[v].clone(), w[v]);
            }
            seen.insert(verts.iter().map(|v| image[v]).collect());
        }
        seen.insert(key);
        out.push(w);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub graph: Graph,
    pub weight: Weight,
}

/// `(Γ*, θ)` pairs of `W(Γ)` (automorphism-reduced) whose polytope has full
/// dimension `χ(Γ)`, with their polytopes.
fn full_dim_members(g: &Graph) -> Vec<(Weight, LatticePolytope)> {
    let q = star(g);
    let d = chi(g) as usize;
    weights_w_reduced(g)
        .into_par_iter()
        .filter_map(|w| {
            let p = flow_polytope(&q, &w, &Bounds::default()).ok()?;
            (p.dim() == d).then_some((w, p))
        })
        .collect()
}

/// Equivalence-class representatives of `P(Γ)` with the weights producing them.
pub fn cell_set_p_with_provenance(g: &Graph) -> Vec<(LatticePolytope, Vec<Weight>)> {
    let members = full_dim_members(g);
    let polys: Vec<LatticePolytope> = members.iter().map(|(_, p)| p.clone()).collect();
    let classes = classify_indices(&polys);
    let mut out: Vec<(LatticePolytope, Vec<Weight>)> = Vec::new();
    let mut slot: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, rep) in classes.into_iter().enumerate() {
        let s = *slot.entry(rep).or_insert_with(|| {
            out.push((polys[rep].clone(), Vec::new()));
            out.len() - 1
        });
        out[s].1.push(members[i].0.clone());
    }
    out
}

pub fn cell_set_p(g: &Graph) -> Vec<LatticePolytope> {
    cell_set_p_with_provenance(g).into_iter().map(|(p, _)| p).collect()
}

/// Lift a weight on `(Γ')*` to `Γ*`, where `Γ'` contracts the third edge at
/// `w1` (joined to `v` by a double edge) into `w2`.
pub fn lift_weight_reduction34(
    g: &Graph,
    g_prime: &Graph,
    theta_prime: &Weight,
    v: &str,
    w1: &str,
    w2: &str,
) -> Result<Weight, QuiverError> {
    let fail = |m: &str| Err(QuiverError::Precondition(m.to_string()));
    if g.valency(v) != 3 || g.valency(w1) != 3 {
        return fail("v and w1 must have valency 3");
    }
    let joins = |e: &crate::graphs::Edge, a: &str, b: &str| (e.u == a && e.v == b) || (e.u == b && e.v == a);
    if g.edges().iter().filter(|e| joins(e, v, w1)).count() != 2 {
        return fail("v and w1 must be joined by a double edge");
    }
    let Some(c) = g.edges().iter().find(|e| (e.u == w1 || e.v == w1) && !joins(e, v, w1)) else {
        return fail("w1 has no third edge");
    };
    if !joins(c, w1, w2) || w2 == v {
        return fail("third edge at w1 must end at w2 ≠ v");
    }
    let contracted = contract_edge(g, &c.id).map_err(|e| QuiverError::Precondition(e.to_string()))?;
    if &contracted != g_prime {
        return fail("Γ' is not Γ with the edge at w1 contracted");
    }
    let w = merged_id(w1, w2);
    for e in g_prime.edges() {
        if theta_prime.get(&sink_id(&e.id)) != Some(&1) {
            return fail("θ' must be 1 on every sink");
        }
    }
    let tw = *theta_prime.get(&w).ok_or_else(|| QuiverError::MissingWeight(w.clone()))?;
    let (t1, t2) = match theta_prime.get(v) {
        Some(-1) => (-2, tw + 1),
        Some(-2) => (-1, tw),
        _ => return fail("θ'(v) must be −1 or −2"),
    };
    let mut theta: Weight = theta_prime.iter().filter(|(k, _)| **k != w).map(|(k, x)| (k.clone(), *x)).collect();
    theta.insert(w1.to_string(), t1);
    theta.insert(w2.to_string(), t2);
    theta.insert(sink_id(&c.id), 1);
    Ok(theta)
}

/// Some vertex of valency 3 shares exactly two edges with a vertex of
/// valency at least 4.
pub fn has_reducible_double_edge(g: &Graph) -> bool {
    let vs = g.vertices();
    vs.iter().any(|a| {
        vs.iter().any(|b| {
            a != b
                && g.valency(a) == 3
                && g.valency(b) >= 4
                && g.edges().iter().filter(|e| (e.u == *a && e.v == *b) || (e.u == *b && e.v == *a)).count() == 2
        })
    })
}

/// Graphs swept by the classification in dimension `d`.
pub fn classification_graphs(d: usize) -> Vec<Graph> {
    let all = enumerate_ld(d, 2 * d.saturating_sub(1).max(1));
    if d >= 4 {
        all.into_iter().filter(|g| !has_reducible_double_edge(g)).collect()
    } else {
        all
    }
}

#[derive(Clone, Debug)]
pub struct CompressedClass {
    pub polytope: LatticePolytope,
    pub fingerprint: Fingerprint,
    pub provenance: Vec<Provenance>,
}

/// Prime compressed flow polytopes of dimension `d ≤ 4` up to equivalence,
/// sorted by (points, facets, fingerprint).
pub fn classify_compressed(d: usize) -> Result<Vec<CompressedClass>, SubdivisionError> {
    if d == 0 || d > 4 {
        return Err(SubdivisionError::Unsupported);
    }
    let graphs = classification_graphs(d);
    let members: Vec<(Provenance, LatticePolytope)> = graphs
        .par_iter()
        .flat_map(|g| {
            full_dim_members(g)
                .into_iter()
                .map(|(w, p)| (Provenance { graph: g.clone(), weight: w }, p))
                .collect::<Vec<_>>()
        })
        .collect();
    let polys: Vec<LatticePolytope> = members.iter().map(|(_, p)| p.clone()).collect();
    let classes = classify_indices(&polys);
    let mut grouped: BTreeMap<usize, Vec<Provenance>> = BTreeMap::new();
    for (i, rep) in classes.into_iter().enumerate() {
        grouped.entry(rep).or_default().push(members[i].0.clone());
    }
    let mut out: Vec<CompressedClass> = grouped
        .into_iter()
        .map(|(rep, provenance)| CompressedClass {
            polytope: polys[rep].clone(),
            fingerprint: fingerprint(&polys[rep]),
            provenance,
        })
        .collect();
    out.sort_by(|a, b| {
        (a.fingerprint.n_points, a.fingerprint.n_facets, &a.fingerprint).cmp(&(
            b.fingerprint.n_points,
            b.fingerprint.n_facets,
            &b.fingerprint,
        ))
    });
    Ok(out)
}
