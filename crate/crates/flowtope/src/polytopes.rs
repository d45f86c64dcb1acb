//! Lattice polytopes given by all of their lattice points.
//!
//! A polytope is stored together with a unimodular identification of the
//! lattice in its affine span with `ℤ^dim`; facets, widths, volumes and
//! equivalence tests all work in those normalized coordinates.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact_math::{affine_rank, det_i64, primitive, rank_i64, saturated_span, IntMatrix, Rational};
use crate::quivers::{is_tight, Quiver, QuiverError, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("no points")]
    NoPoints,
    #[error("point set not saturated")]
    NotSaturated,
    #[error("duplicate point in table")]
    DuplicatePoint,
    #[error("points have inconsistent dimension")]
    DimensionMismatch,
    #[error("requires tight pair")]
    RequiresTight,
}

/// `normal · x ≥ offset`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn value(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(a, b)| a * b).sum::<i64>() - self.offset
    }
}

/// An affine map `x ↦ linear·x + translation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLatticeMap {
    pub linear: IntMatrix,
    pub translation: Vec<BigInt>,
}

impl AffineLatticeMap {
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        (0..self.linear.rows())
            .map(|i| {
                let v: BigInt = self.linear.row(i).iter().zip(x).map(|(a, &b)| a * BigInt::from(b)).sum::<BigInt>()
                    + &self.translation[i];
                v.to_i64().expect("image fits in i64")
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
struct Normalization {
    /// Base point; `None` for full-dimensional polytopes (identity map).
    origin: Option<Vec<i64>>,
    /// dim × ambient; `y = coords · (x − origin)`.
    coords: Vec<Vec<i64>>,
    /// dim × ambient; `x = origin + Σ y_i basis_i`.
    basis: Vec<Vec<i64>>,
}

impl Normalization {
    fn apply(&self, x: &[i64]) -> Vec<i64> {
        let shifted: Vec<i64> = match &self.origin {
            Some(o) => x.iter().zip(o).map(|(a, b)| a - b).collect(),
            None => return x.to_vec(),
        };
        self.coords.iter().map(|c| c.iter().zip(&shifted).map(|(a, b)| a * b).sum()).collect()
    }

    fn as_map(&self, ambient: usize) -> AffineLatticeMap {
        let dim = self.coords.len();
        match &self.origin {
            None => AffineLatticeMap { linear: IntMatrix::identity(ambient), translation: vec![BigInt::zero(); ambient] },
            Some(o) => {
                let linear = IntMatrix::from_rows(ambient, &self.coords).expect("consistent");
                let translation = (0..dim)
                    .map(|i| -BigInt::from(self.coords[i].iter().zip(o).map(|(a, b)| a * b).sum::<i64>()))
                    .collect();
                AffineLatticeMap { linear, translation }
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient: usize,
    points: Vec<Vec<i64>>,
    facets: Vec<Facet>,
    dim: usize,
    norm: Normalization,
    norm_points: Vec<Vec<i64>>,
    norm_facets: Vec<Facet>,
    /// For each normalized facet, the indices of the points on it.
    facet_points: Vec<Vec<usize>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.points == other.points
    }
}

impl LatticePolytope {
    /// All lattice points of a polytope, in any order; they are sorted
    /// lexicographically.
    pub fn from_points(ambient: usize, mut points: Vec<Vec<i64>>) -> Result<Self, PolytopeError> {
        points.sort();
        points.dedup();
        Self::from_table(ambient, points)
    }

    /// Like `from_points` but keeps the given order, so that indices match an
    /// externally fixed point table.
    pub fn from_table(ambient: usize, points: Vec<Vec<i64>>) -> Result<Self, PolytopeError> {
        if points.is_empty() {
            return Err(PolytopeError::NoPoints);
        }
        if points.iter().any(|p| p.len() != ambient) {
            return Err(PolytopeError::DimensionMismatch);
        }
        if points.iter().collect::<HashSet<_>>().len() != points.len() {
            return Err(PolytopeError::DuplicatePoint);
        }
        let dim = affine_rank(&points).expect("non-empty");
        let norm = normalization(ambient, dim, &points);
        let norm_points: Vec<Vec<i64>> = points.iter().map(|p| norm.apply(p)).collect();
        let (norm_facets, facet_points) = facets_full_dim(&norm_points, dim);
        check_saturated(&norm_points, &norm_facets, dim)?;
        let facets = norm_facets.iter().map(|f| ambient_facet(&norm, f)).collect();
        Ok(LatticePolytope { ambient, points, facets, dim, norm, norm_points, norm_facets, facet_points })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Point indices on each facet (same order as `facets()`).
    pub fn facet_point_sets(&self) -> &[Vec<usize>] {
        &self.facet_points
    }

    /// Coordinates in the lattice of the affine span, indexed like `points()`.
    pub fn normalized_points(&self) -> &[Vec<i64>] {
        &self.norm_points
    }

    pub fn normalized_facets(&self) -> &[Facet] {
        &self.norm_facets
    }

    pub fn contains_point(&self, x: &[i64]) -> bool {
        self.points.iter().any(|p| p == x)
    }

    pub fn index_of(&self, x: &[i64]) -> Option<usize> {
        self.points.iter().position(|p| p == x)
    }

    /// The sub-polytope on a subset of the points (which must be all lattice
    /// points of their convex hull), preserving the given index order.
    pub fn sub_polytope(&self, indices: &[usize]) -> Result<LatticePolytope, PolytopeError> {
        LatticePolytope::from_table(self.ambient, indices.iter().map(|&i| self.points[i].clone()).collect())
    }
}

fn normalization(ambient: usize, dim: usize, points: &[Vec<i64>]) -> Normalization {
    if dim == ambient {
        let id: Vec<Vec<i64>> = (0..ambient).map(|i| (0..ambient).map(|j| i64::from(i == j)).collect()).collect();
        return Normalization { origin: None, coords: id.clone(), basis: id };
    }
    let p0 = &points[0];
    let diffs: Vec<Vec<BigInt>> =
        points[1..].iter().map(|p| p.iter().zip(p0).map(|(a, b)| BigInt::from(a - b)).collect()).collect();
    let lat = saturated_span(ambient, &diffs);
    let small = |rows: Vec<Vec<BigInt>>| -> Vec<Vec<i64>> {
        rows.into_iter().map(|r| r.into_iter().map(|v| v.to_i64().expect("small lattice basis")).collect()).collect()
    };
    Normalization { origin: Some(p0.clone()), coords: small(lat.coords), basis: small(lat.basis) }
}

fn ambient_facet(norm: &Normalization, f: &Facet) -> Facet {
    match &norm.origin {
        None => f.clone(),
        Some(o) => {
            let ambient = o.len();
            let normal: Vec<i64> = (0..ambient)
                .map(|l| f.normal.iter().zip(&norm.coords).map(|(e, row)| e * row[l]).sum())
                .collect();
            let shift: i64 = normal.iter().zip(o).map(|(a, b)| a * b).sum();
            Facet { normal, offset: f.offset + shift }
        }
    }
}

/// Normal of the hyperplane through `d` points in `ℤ^d` (generalized cross
/// product of the difference vectors), or `None` if they are dependent.
fn hyperplane_normal(pts: &[&Vec<i64>], d: usize) -> Option<Vec<i64>> {
    let base = pts[0];
    let diffs: Vec<Vec<i64>> = pts[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<i64>> =
            diffs.iter().map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| *v).collect()).collect();
        let det = det_i64(&minor);
        let det = det.to_i64().expect("small minor");
        normal.push(if j % 2 == 0 { det } else { -det });
    }
    if normal.iter().all(|v| *v == 0) {
        return None;
    }
    Some(primitive(&normal))
}

/// Facets of a full-dimensional point configuration in `ℤ^d`, by the double
/// description method on the homogenized points `(1, x)`. A facet is kept as
/// `h` with `h·(1, x) ≥ 0`.
fn facets_full_dim(points: &[Vec<i64>], d: usize) -> (Vec<Facet>, Vec<Vec<usize>>) {
    if d == 0 {
        return (vec![], vec![]);
    }
    let n = points.len();
    let lifted: Vec<Vec<i64>> = points.iter().map(|p| std::iter::once(1).chain(p.iter().copied()).collect()).collect();
    let eval = |h: &[i64], k: usize| -> i64 { h.iter().zip(&lifted[k]).map(|(a, b)| a * b).sum() };

    // Start from an affinely independent (d+1)-subset.
    let mut simplex: Vec<usize> = Vec::with_capacity(d + 1);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for k in 0..n {
        rows.push(lifted[k].clone());
        if rank_i64(&rows) == rows.len() {
            simplex.push(k);
            if simplex.len() == d + 1 {
                break;
            }
        } else {
            rows.pop();
        }
    }
    let mut hs: Vec<Vec<i64>> = (0..=d)
        .map(|skip| {
            let pts: Vec<&Vec<i64>> = simplex.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &k)| &points[k]).collect();
            let normal = hyperplane_normal(&pts, d).expect("independent");
            let offset: i64 = normal.iter().zip(pts[0]).map(|(a, b)| a * b).sum();
            let mut h: Vec<i64> = std::iter::once(-offset).chain(normal).collect();
            if eval(&h, simplex[skip]) < 0 {
                h.iter_mut().for_each(|v| *v = -*v);
            }
            h
        })
        .collect();
    let mut seen: Vec<usize> = simplex.clone();
    let in_simplex: HashSet<usize> = simplex.iter().copied().collect();
    for k in (0..n).filter(|k| !in_simplex.contains(k)) {
        let vals: Vec<i64> = hs.iter().map(|h| eval(h, k)).collect();
        if vals.iter().all(|v| *v >= 0) {
            seen.push(k);
            continue;
        }
        let tight: Vec<HashSet<usize>> =
            hs.iter().map(|h| seen.iter().copied().filter(|&j| eval(h, j) == 0).collect()).collect();
        let mut next: Vec<Vec<i64>> = Vec::new();
        for (i, h) in hs.iter().enumerate() {
            if vals[i] >= 0 {
                next.push(h.clone());
            }
        }
        for a in (0..hs.len()).filter(|&i| vals[i] > 0) {
            for b in (0..hs.len()).filter(|&i| vals[i] < 0) {
                let common: Vec<Vec<i64>> = tight[a].intersection(&tight[b]).map(|&j| lifted[j].clone()).collect();
                if common.len() + 1 < d || rank_i64(&common) != d - 1 {
                    continue;
                }
                let h: Vec<i64> = hs[a].iter().zip(&hs[b]).map(|(x, y)| vals[a] * y - vals[b] * x).collect();
                next.push(primitive(&h));
            }
        }
        next.sort();
        next.dedup();
        hs = next;
        seen.push(k);
    }
    let facets: Vec<Facet> = hs
        .into_iter()
        .map(|h| Facet { normal: h[1..].to_vec(), offset: -h[0] })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let on = facets.iter().map(|f| (0..n).filter(|&k| f.value(&points[k]) == 0).collect()).collect();
    (facets, on)
}

fn bounding_box(points: &[Vec<i64>], d: usize) -> (Vec<i64>, Vec<i64>) {
    let lo = (0..d).map(|j| points.iter().map(|p| p[j]).min().unwrap_or(0)).collect();
    let hi = (0..d).map(|j| points.iter().map(|p| p[j]).max().unwrap_or(0)).collect();
    (lo, hi)
}

/// Count integer points `y` in the box with `f.normal·y ≥ scale·f.offset`
/// for every facet; `visit` sees each of them.
pub(crate) fn box_points(
    lo: &[i64],
    hi: &[i64],
    facets: &[Facet],
    scale: i64,
    visit: &mut dyn FnMut(&[i64]),
) {
    let d = lo.len();
    let mut y = lo.to_vec();
    if d == 0 {
        visit(&y);
        return;
    }
    loop {
        if facets.iter().all(|f| f.normal.iter().zip(&y).map(|(a, b)| a * b).sum::<i64>() >= scale * f.offset) {
            visit(&y);
        }
        let mut j = 0;
        loop {
            if j == d {
                return;
            }
            if y[j] < hi[j] {
                y[j] += 1;
                break;
            }
            y[j] = lo[j];
            j += 1;
        }
    }
}

fn check_saturated(points: &[Vec<i64>], facets: &[Facet], d: usize) -> Result<(), PolytopeError> {
    let (lo, hi) = bounding_box(points, d);
    let mut count = 0usize;
    box_points(&lo, &hi, facets, 1, &mut |_| count += 1);
    if count != points.len() {
        return Err(PolytopeError::NotSaturated);
    }
    Ok(())
}

pub fn facets(p: &LatticePolytope) -> &[Facet] {
    p.facets()
}

/// Width one with respect to every facet.
pub fn is_compressed(p: &LatticePolytope) -> bool {
    p.norm_facets.iter().all(|f| p.norm_points.iter().map(|y| f.value(y)).max() == Some(1))
}

/// The same polytope in the coordinates of its affine lattice, together
/// with the normalizing map. Point order is preserved.
pub fn normalize_full_dim(p: &LatticePolytope) -> (LatticePolytope, AffineLatticeMap) {
    let q = LatticePolytope::from_table(p.dim, p.norm_points.clone()).expect("normalization preserves saturation");
    (q, p.norm.as_map(p.ambient))
}

/// Normalized volume: `dim!` times the Euclidean volume in the affine
/// lattice, summed over a pulling triangulation.
pub fn normalized_volume(p: &LatticePolytope) -> u64 {
    let t = crate::triangulation::pulling_triangulation(p, &[]);
    t.maximal_cells().iter().map(|c| simplex_volume(p, c)).sum()
}

/// Normalized volume of a full-dimensional simplex of `p` given by indices.
pub fn simplex_volume(p: &LatticePolytope, cell: &[usize]) -> u64 {
    let base = &p.norm_points[cell[0]];
    let rows: Vec<Vec<i64>> = cell[1..]
        .iter()
        .map(|&i| p.norm_points[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    det_i64(&rows).abs().to_u64().expect("volume fits")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dim: usize,
    pub n_points: usize,
    pub n_facets: usize,
    pub normalized_volume: u64,
    pub facet_point_incidence: Vec<usize>,
    pub ehrhart_coeffs: Vec<Rational>,
}

pub fn fingerprint(p: &LatticePolytope) -> Fingerprint {
    let mut incidence: Vec<usize> = p.facet_points.iter().map(|s| s.len()).collect();
    incidence.sort();
    Fingerprint {
        dim: p.dim,
        n_points: p.points.len(),
        n_facets: p.facets.len(),
        normalized_volume: normalized_volume(p),
        facet_point_incidence: incidence,
        ehrhart_coeffs: crate::ehrhart::interpolate_ehrhart(p).coefficients,
    }
}

/// A cheap prefix of the fingerprint, used for fast rejection.
fn quick_invariants(p: &LatticePolytope) -> (usize, usize, usize, Vec<usize>) {
    let mut incidence: Vec<usize> = p.facet_points.iter().map(|s| s.len()).collect();
    incidence.sort();
    (p.dim, p.points.len(), p.facets.len(), incidence)
}

/// Search for a lattice-affine isomorphism `P1 → P2`; the returned map acts
/// on ambient coordinates.
pub fn equivalent(p1: &LatticePolytope, p2: &LatticePolytope) -> Option<AffineLatticeMap> {
    if quick_invariants(p1) != quick_invariants(p2) {
        return None;
    }
    let (m, t) = equivalence_normalized(p1, p2)?;
    Some(compose_ambient(p1, p2, &m, &t))
}

/// Number of facets through each point: an equivalence invariant.
fn point_profiles(p: &LatticePolytope) -> Vec<usize> {
    let mut prof = vec![0; p.points.len()];
    for s in &p.facet_points {
        for &i in s {
            prof[i] += 1;
        }
    }
    prof
}

/// Returns `(M, t)` with `y ↦ M·y + t` mapping normalized P1 onto normalized P2.
fn equivalence_normalized(p1: &LatticePolytope, p2: &LatticePolytope) -> Option<(Vec<Vec<i64>>, Vec<i64>)> {
    let d = p1.dim;
    let a = &p1.norm_points;
    let b = &p2.norm_points;
    // Lexicographically first affinely independent tuple of P1.
    let mut anchor = vec![0usize];
    for i in 1..a.len() {
        if anchor.len() == d + 1 {
            break;
        }
        let mut trial: Vec<Vec<i64>> = anchor.iter().map(|&k| a[k].clone()).collect();
        trial.push(a[i].clone());
        if affine_rank(&trial).expect("non-empty") == anchor.len() {
            anchor.push(i);
        }
    }
    let target: HashSet<&Vec<i64>> = b.iter().collect();
    let prof1 = point_profiles(p1);
    let prof2 = point_profiles(p2);
    // Columns of A are a_i − a_0; M = B·adj(A)/det(A).
    let cols_a: Vec<Vec<i64>> =
        anchor[1..].iter().map(|&k| a[k].iter().zip(&a[anchor[0]]).map(|(x, y)| x - y).collect()).collect();
    let amat: Vec<Vec<i64>> = (0..d).map(|r| cols_a.iter().map(|c| c[r]).collect()).collect();
    let det_a = det_i64(&amat).to_i64().expect("small");
    let adj = adjugate(&amat);
    let mut chosen = Vec::with_capacity(d + 1);
    let mut used = vec![false; b.len()];
    let mut result = None;
    search_tuples(
        &anchor, &prof1, &prof2, b, &mut chosen, &mut used, &mut |tuple: &[usize]| {
            let cols_b: Vec<Vec<i64>> =
                tuple[1..].iter().map(|&k| b[k].iter().zip(&b[tuple[0]]).map(|(x, y)| x - y).collect()).collect();
            // M[r][c] = Σ_k B[r][k]·adj[k][c] / det_a, where B[r][k] = cols_b[k][r]
            let mut m = vec![vec![0i64; d]; d];
            for r in 0..d {
                for c in 0..d {
                    let s: i64 = (0..d).map(|k| cols_b[k][r] * adj[k][c]).sum();
                    if s % det_a != 0 {
                        return false;
                    }
                    m[r][c] = s / det_a;
                }
            }
            if det_i64(&m).abs() != BigInt::one() {
                return false;
            }
            let a0 = &a[anchor[0]];
            let b0 = &b[tuple[0]];
            let t: Vec<i64> = (0..d).map(|r| b0[r] - (0..d).map(|c| m[r][c] * a0[c]).sum::<i64>()).collect();
            let all = a.iter().all(|y| {
                let img: Vec<i64> = (0..d).map(|r| t[r] + (0..d).map(|c| m[r][c] * y[c]).sum::<i64>()).collect();
                target.contains(&img)
            });
            if all {
                result = Some((m, t));
            }
            all
        },
    );
    result
}

fn search_tuples(
    anchor: &[usize],
    prof1: &[usize],
    prof2: &[usize],
    b: &[Vec<i64>],
    chosen: &mut Vec<usize>,
    used: &mut [bool],
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let k = chosen.len();
    if k == anchor.len() {
        return accept(chosen);
    }
    for j in 0..b.len() {
        if used[j] || prof2[j] != prof1[anchor[k]] {
            continue;
        }
        chosen.push(j);
        used[j] = true;
        let done = search_tuples(anchor, prof1, prof2, b, chosen, used, accept);
        used[j] = false;
        chosen.pop();
        if done {
            return true;
        }
    }
    false
}

fn adjugate(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let d = a.len();
    if d == 0 {
        return vec![];
    }
    if d == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let minor: Vec<Vec<i64>> = (0..d)
                .filter(|&r| r != j)
                .map(|r| (0..d).filter(|&c| c != i).map(|c| a[r][c]).collect())
                .collect();
            let v = det_i64(&minor).to_i64().expect("small");
            adj[i][j] = if (i + j) % 2 == 0 { v } else { -v };
        }
    }
    adj
}

/// Lift `y ↦ M·y + t` on normalized coordinates to ambient coordinates.
fn compose_ambient(p1: &LatticePolytope, p2: &LatticePolytope, m: &[Vec<i64>], t: &[i64]) -> AffineLatticeMap {
    let d = p1.dim;
    let n1 = p1.norm.as_map(p1.ambient);
    // x2 = origin2 + basis2ᵀ·(M·(W1·x1 + s1) + t)
    let w1 = n1.linear.to_i64_rows();
    let s1: Vec<i64> = n1.translation.iter().map(|v| v.to_i64().expect("small")).collect();
    let (origin2, basis2): (Vec<i64>, Vec<Vec<i64>>) = match &p2.norm.origin {
        None => (vec![0; p2.ambient], p2.norm.basis.clone()),
        Some(o) => (o.clone(), p2.norm.basis.clone()),
    };
    let mw: Vec<Vec<i64>> =
        (0..d).map(|r| (0..p1.ambient).map(|c| (0..d).map(|k| m[r][k] * w1[k][c]).sum()).collect()).collect();
    let ms: Vec<i64> = (0..d).map(|r| (0..d).map(|k| m[r][k] * s1[k]).sum::<i64>() + t[r]).collect();
    let linear: Vec<Vec<i64>> = (0..p2.ambient)
        .map(|l| (0..p1.ambient).map(|c| (0..d).map(|r| basis2[r][l] * mw[r][c]).sum()).collect())
        .collect();
    let translation: Vec<BigInt> =
        (0..p2.ambient).map(|l| BigInt::from(origin2[l] + (0..d).map(|r| basis2[r][l] * ms[r]).sum::<i64>())).collect();
    AffineLatticeMap { linear: IntMatrix::from_rows(p1.ambient, &linear).expect("consistent"), translation }
}

pub fn product(p1: &LatticePolytope, p2: &LatticePolytope) -> LatticePolytope {
    let pts = p1
        .points
        .iter()
        .flat_map(|a| p2.points.iter().map(move |b| a.iter().chain(b).copied().collect::<Vec<i64>>()))
        .collect();
    LatticePolytope::from_points(p1.ambient + p2.ambient, pts).expect("products of saturated sets are saturated")
}

/// For a tight pair, the polytope is prime exactly when the underlying graph
/// of the quiver is prime.
pub fn is_prime_flow(q: &Quiver, theta: &Weight) -> Result<bool, QuiverError> {
    if !is_tight(q, theta)? || q.chi() <= 0 {
        return Err(QuiverError::Polytope(PolytopeError::RequiresTight));
    }
    Ok(crate::graphs::is_prime_graph(&q.underlying_graph()))
}

/// Greatest common divisor of a facet normal (1 for primitive normals).
pub fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, x| g.gcd(x))
}

/// Group polytopes into equivalence classes: fingerprint buckets first, then
/// full equivalence within a bucket. Returns, for each input, the index of
/// its class representative (the first member of the class).
pub fn classify_indices(polys: &[LatticePolytope]) -> Vec<usize> {
    let fps: Vec<Fingerprint> = polys.iter().map(fingerprint).collect();
    let mut reps: HashMap<Fingerprint, Vec<usize>> = HashMap::new();
    let mut out = Vec::with_capacity(polys.len());
    for (i, p) in polys.iter().enumerate() {
        let bucket = reps.entry(fps[i].clone()).or_default();
        match bucket.iter().find(|&&r| equivalent(&polys[r], p).is_some()) {
            Some(&r) => out.push(r),
            None => {
                bucket.push(i);
                out.push(i);
            }
        }
    }
    out
}

pub fn is_positive_volume(p: &LatticePolytope) -> bool {
    p.dim > 0 && !Rational::from_integer(BigInt::from(normalized_volume(p))).is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cube(d: usize) -> LatticePolytope {
        let pts = (0..1u32 << d).map(|m| (0..d).map(|i| i64::from((m >> i) & 1)).collect()).collect();
        LatticePolytope::from_points(d, pts).unwrap()
    }

    fn simplex(d: usize) -> LatticePolytope {
        let mut pts = vec![vec![0; d]];
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            pts.push(e);
        }
        LatticePolytope::from_points(d, pts).unwrap()
    }

    #[test]
    fn square_has_four_facets() {
        let sq = cube(2);
        assert_eq!(sq.facets().len(), 4);
        assert!(is_compressed(&sq));
        assert!(is_compressed(&cube(3)));
    }

    #[test]
    fn simplex_facets_and_volume() {
        for d in 1..5 {
            let s = simplex(d);
            assert_eq!(s.facets().len(), d + 1);
            assert_eq!(normalized_volume(&s), 1);
        }
    }

    #[test]
    fn wide_segment_is_not_compressed() {
        let seg = LatticePolytope::from_points(1, vec![vec![0], vec![1], vec![2]]).unwrap();
        assert!(!is_compressed(&seg));
        assert_eq!(
            LatticePolytope::from_points(1, vec![vec![0], vec![2]]).unwrap_err(),
            PolytopeError::NotSaturated
        );
    }

    #[test]
    fn embedded_polytope_normalizes() {
        // The unit square placed on the plane x + y + z = 1 inside ℤ³... as a
        // triangle: conv(e1, e2, e3).
        let tri = LatticePolytope::from_points(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(tri.dim(), 2);
        assert_eq!(tri.facets().len(), 3);
        for f in tri.facets() {
            assert_eq!(content(&f.normal), 1);
            assert!(tri.points().iter().all(|p| f.value(p) >= 0));
        }
        let (n, map) = normalize_full_dim(&tri);
        assert_eq!(n.ambient_dim(), 2);
        assert_eq!(normalized_volume(&n), 1);
        for (p, y) in tri.points().iter().zip(n.points()) {
            assert_eq!(&map.apply(p), y);
        }
    }

    #[test]
    fn equivalence_of_permuted_cube() {
        let a = cube(3);
        let pts = a.points().iter().map(|p| vec![p[2], p[0], 1 - p[1]]).collect();
        let b = LatticePolytope::from_points(3, pts).unwrap();
        let map = equivalent(&a, &b).expect("equivalent");
        let image: BTreeSet<Vec<i64>> = a.points().iter().map(|p| map.apply(p)).collect();
        assert_eq!(image, b.points().iter().cloned().collect());
        assert!(equivalent(&a, &simplex(3)).is_none());
    }

    #[test]
    fn products() {
        let seg = cube(1);
        let sq = product(&seg, &seg);
        assert!(equivalent(&sq, &cube(2)).is_some());
        let p = product(&seg, &simplex(3));
        assert_eq!((p.dim(), p.points().len()), (4, 8));
        assert!(is_compressed(&p));
    }
}
