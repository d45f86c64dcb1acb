//! Pulling triangulations, their face complexes and minimal non-faces,
//! unimodularity and regularity certificates.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exact_math::{affine_rank, det_i64, lp, IntMatrix, LpStatus, Rational, Sense};
use crate::polytopes::{simplex_volume, LatticePolytope, PolytopeError};
use crate::quivers::{Quiver, QuiverError, Weight};

#[derive(Debug, Error)]
pub enum TriangulationError {
    #[error("triangulation is not unimodular")]
    NotUnimodular,
    #[error("no regularity certificate")]
    NotRegular,
    #[error("incompatible pulls")]
    IncompatiblePulls,
    #[error("invalid pull order: {0}")]
    InvalidPullOrder(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Clone, Debug)]
pub struct Triangulation {
    polytope: LatticePolytope,
    cells: Vec<Vec<usize>>,
    /// Heights of a coarse regular subdivision and a pull rank refining it,
    /// when the triangulation was built that way.
    hint: Option<(Vec<i64>, Vec<usize>)>,
}

/// A set of point indices contained in no face whose proper subsets are faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonFace(pub Vec<usize>);

impl Triangulation {
    /// Cells are sorted internally; the list is sorted too.
    pub fn new(polytope: LatticePolytope, cells: Vec<Vec<usize>>) -> Self {
        let mut cells: Vec<Vec<usize>> = cells
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        cells.sort();
        cells.dedup();
        Triangulation { polytope, cells, hint: None }
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn maximal_cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// All nonempty faces (subsets of maximal cells), each sorted.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in &self.cells {
            for mask in 1u32..(1 << c.len()) {
                out.insert((0..c.len()).filter(|i| mask >> i & 1 == 1).map(|i| c[i]).collect());
            }
        }
        out
    }

    pub fn is_face(&self, set: &[usize]) -> bool {
        self.cells.iter().any(|c| set.iter().all(|i| c.contains(i)))
    }

    pub fn used_points(&self) -> BTreeSet<usize> {
        self.cells.iter().flatten().copied().collect()
    }
}

/// Complete a pull prefix to a full order; later points follow in index order.
fn full_order(n: usize, prefix: &[usize]) -> Result<Vec<usize>, TriangulationError> {
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for &i in prefix {
        if i >= n || seen[i] {
            return Err(TriangulationError::InvalidPullOrder(format!("index {i}")));
        }
        seen[i] = true;
        order.push(i);
    }
    order.extend((0..n).filter(|&i| !seen[i]));
    Ok(order)
}

/// Pull at the first point of `order` lying in `face` and cone over the
/// facets avoiding it. `face` lists point indices of `p`.
fn pull_face(p: &LatticePolytope, face: &[usize], rank: &[usize]) -> Vec<Vec<usize>> {
    let pts: Vec<Vec<i64>> = face.iter().map(|&i| p.points()[i].clone()).collect();
    let dim = affine_rank(&pts).expect("nonempty face");
    if face.len() == dim + 1 {
        return vec![face.to_vec()];
    }
    let apex = *face.iter().min_by_key(|&&i| rank[i]).expect("nonempty");
    let sub = LatticePolytope::from_table(p.ambient_dim(), pts).expect("faces of saturated polytopes are saturated");
    let mut out = Vec::new();
    for facet in sub.facet_point_sets() {
        let members: Vec<usize> = facet.iter().map(|&k| face[k]).collect();
        if members.contains(&apex) {
            continue;
        }
        for mut s in pull_face(p, &members, rank) {
            s.push(apex);
            out.push(s);
        }
    }
    out
}

fn rank_of(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    rank
}

/// Pulling triangulation for a prefix of a pull order.
pub fn pulling_triangulation(p: &LatticePolytope, pull_order: &[usize]) -> Triangulation {
    try_pulling_triangulation(p, pull_order).expect("valid pull order")
}

pub fn try_pulling_triangulation(p: &LatticePolytope, pull_order: &[usize]) -> Result<Triangulation, TriangulationError> {
    let order = full_order(p.points().len(), pull_order)?;
    let all: Vec<usize> = (0..p.points().len()).collect();
    let rank = rank_of(&order);
    let cells = pull_face(p, &all, &rank);
    let mut t = Triangulation::new(p.clone(), cells);
    t.hint = Some((vec![0; all.len()], rank));
    Ok(t)
}

/// Unused points appear as singleton non-faces; otherwise sizes run from 2
/// to `dim + 1`.
pub fn minimal_nonfaces(t: &Triangulation) -> Vec<NonFace> {
    let n = t.polytope.points().len();
    let faces = t.faces();
    let used = t.used_points();
    let mut nonfaces: Vec<NonFace> = (0..n).filter(|i| !used.contains(i)).map(|i| NonFace(vec![i])).collect();
    let mut neighbours: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for c in &t.cells {
        for &i in c {
            neighbours[i].extend(c.iter().copied().filter(|&j| j != i));
        }
    }
    let used: Vec<usize> = used.into_iter().collect();
    for (k, &i) in used.iter().enumerate() {
        for &j in &used[k + 1..] {
            if !neighbours[i].contains(&j) {
                nonfaces.push(NonFace(vec![i, j]));
            }
        }
    }
    // A larger minimal non-face is a face plus a later point adjacent to all
    // of it, with every facet of the union a face.
    for size in 3..=t.polytope.dim() + 1 {
        for f in faces.iter().filter(|f| f.len() == size - 1) {
            let last = *f.last().expect("nonempty");
            for &v in neighbours[f[0]].range(last + 1..) {
                if !f.iter().all(|x| neighbours[*x].contains(&v)) {
                    continue;
                }
                let mut set = f.clone();
                set.push(v);
                if faces.contains(&set) {
                    continue;
                }
                let proper_ok = (0..size - 1).all(|skip| {
                    let sub: Vec<usize> = set.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, v)| *v).collect();
                    faces.contains(&sub)
                });
                if proper_ok {
                    nonfaces.push(NonFace(set));
                }
            }
        }
    }
    nonfaces.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    nonfaces
}

pub fn is_unimodular(t: &Triangulation) -> bool {
    t.cells.iter().all(|c| c.len() == t.polytope.dim() + 1 && simplex_volume(&t.polytope, c) == 1)
}

pub fn f_vector(t: &Triangulation) -> Vec<u64> {
    let mut f = vec![0u64; t.polytope.dim() + 1];
    for face in t.faces() {
        f[face.len() - 1] += 1;
    }
    f
}

/// Row `r` with `r·h > 0` iff `h(q)` lies strictly above the affine
/// function interpolating `h` on `cell`, and the normalizing `|det|`. The
/// row is `None` when `q` lies outside the cell and `inside` is required.
fn lift_row(y: &[Vec<i64>], cell: &[usize], q: usize, inside: bool) -> Option<(Vec<(usize, i64)>, i64)> {
    let d = cell.len() - 1;
    let mat: Vec<Vec<i64>> =
        (0..=d).map(|r| cell.iter().map(|&c| if r == 0 { 1 } else { y[c][r - 1] }).collect()).collect();
    let det = det_i64(&mat).to_i64().expect("small");
    let sign = det.signum();
    let mut row = vec![(q, sign * det)];
    for (k, &c) in cell.iter().enumerate() {
        let mut m = mat.clone();
        for (r, line) in m.iter_mut().enumerate() {
            line[k] = if r == 0 { 1 } else { y[q][r - 1] };
        }
        let num = sign * det_i64(&m).to_i64().expect("small");
        if inside && num < 0 {
            return None;
        }
        row.push((c, -num));
    }
    Some((row, det.abs()))
}

/// Local convexity conditions: one per interior wall and one per point not
/// used by the triangulation. Together they say that the heights induce `t`.
fn wall_rows(t: &Triangulation) -> Option<Vec<(Vec<(usize, i64)>, i64)>> {
    let p = &t.polytope;
    let y = p.normalized_points();
    if t.cells.iter().any(|c| c.len() != p.dim() + 1) {
        return None;
    }
    let total: u64 = t.cells.iter().map(|c| simplex_volume(p, c)).sum();
    if total != crate::polytopes::normalized_volume(p) {
        return None;
    }
    let mut walls: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (ci, c) in t.cells.iter().enumerate() {
        for skip in 0..c.len() {
            let wall: Vec<usize> = c.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, v)| *v).collect();
            walls.entry(wall).or_default().push(ci);
        }
    }
    let mut rows = Vec::new();
    for (wall, cs) in &walls {
        match cs.as_slice() {
            [_] => {}
            [a, b] => {
                let q = *t.cells[*b].iter().find(|v| !wall.contains(v)).expect("simplex");
                let (row, det) = lift_row(y, &t.cells[*a], q, false)?;
                if det == 0 {
                    return None;
                }
                rows.push((row, det));
            }
            _ => return None,
        }
    }
    let used = t.used_points();
    for q in (0..p.points().len()).filter(|q| !used.contains(q)) {
        rows.push(t.cells.iter().find_map(|c| lift_row(y, c, q, true))?);
    }
    Some(rows)
}

/// Scale `h` so that every row is at least its `|det|`, or `None` if some
/// row is not strictly positive.
fn verify_heights(rows: &[(Vec<(usize, i64)>, i64)], h: &[BigInt]) -> Option<Vec<Rational>> {
    let mut scale: Option<Rational> = None;
    for (row, det) in rows {
        let v: BigInt = row.iter().map(|(i, c)| &h[*i] * BigInt::from(*c)).sum();
        if v <= BigInt::zero() {
            return None;
        }
        let ratio = Rational::new(v, BigInt::from(*det));
        if scale.as_ref().is_none_or(|s| ratio < *s) {
            scale = Some(ratio);
        }
    }
    let scale = scale.unwrap_or_else(|| Rational::from_integer(BigInt::from(1)));
    Some(h.iter().map(|x| Rational::from_integer(x.clone()) / &scale).collect())
}

/// Heights whose lower envelope induces `t`: every point outside a maximal
/// cell lifts at least 1 above the lifted cell's hyperplane. Triangulations
/// built by pulling are checked against their pulling heights first.
pub fn certify_regular(t: &Triangulation) -> Option<BTreeMap<usize, Rational>> {
    let n = t.polytope.points().len();
    let rows = wall_rows(t)?;
    if rows.is_empty() {
        return Some((0..n).map(|i| (i, Rational::zero())).collect());
    }
    if let Some((coarse, rank)) = &t.hint {
        for bits in [4u32, 16, 64, 256] {
            let m = BigInt::from(1) << bits;
            let top = num_traits::pow(m.clone(), n);
            let h: Vec<BigInt> = (0..n)
                .map(|i| &top * BigInt::from(coarse[i]) - num_traits::pow(m.clone(), n - 1 - rank[i]))
                .collect();
            if let Some(hs) = verify_heights(&rows, &h) {
                return Some(hs.into_iter().enumerate().collect());
            }
        }
    }
    let mut dense: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<BigInt> = Vec::new();
    for (row, det) in &rows {
        let mut r = vec![0i64; n];
        for (i, c) in row {
            r[*i] += c;
        }
        dense.push(r);
        rhs.push(BigInt::from(*det));
    }
    for q in 0..n {
        let mut row = vec![0i64; n];
        row[q] = 1;
        dense.push(row);
        rhs.push(BigInt::zero());
    }
    let ineq = IntMatrix::from_rows(n, &dense).ok()?;
    let objective = vec![Rational::from_integer(BigInt::from(1)); n];
    let res = lp(&objective, Sense::Min, &IntMatrix::zeros(0, n), &[], &ineq, &rhs).ok()?;
    if res.status != LpStatus::Optimal {
        return None;
    }
    Some(res.witness?.into_iter().enumerate().collect())
}

/// Triangulate `∇(q, θ)` by pulling each cell of its regular subdivision with
/// one global pull order (a prefix of indices into the polytope's points).
pub fn subdivide_and_triangulate(q: &Quiver, theta: &Weight, pull_rule: &[usize]) -> Result<Triangulation, TriangulationError> {
    let whole = crate::quivers::flow_polytope(q, theta, &Default::default())?;
    let order = full_order(whole.points().len(), pull_rule)?;
    let rank = rank_of(&order);
    let cells = crate::subdivision::cells(q, theta)?;
    let mut simplices = Vec::new();
    for cell in &cells {
        let idx: Vec<usize> = cell
            .polytope
            .points()
            .iter()
            .map(|x| whole.index_of(x).expect("cell points lie in the polytope"))
            .collect();
        simplices.extend(pull_face(&whole, &idx, &rank));
    }
    // The unit-box cells are the linearity domains of Σ_a x(a)².
    let coarse: Vec<i64> = whole.points().iter().map(|x| x.iter().map(|v| v * v).sum()).collect();
    let mut t = Triangulation::new(whole, simplices);
    check_glued(&t)?;
    t.hint = Some((coarse, rank));
    Ok(t)
}

/// Volumes must add up and simplices may not overlap in lattice points
/// beyond shared faces.
fn check_glued(t: &Triangulation) -> Result<(), TriangulationError> {
    let total: u64 = t.cells.iter().map(|c| simplex_volume(&t.polytope, c)).sum();
    if total != crate::polytopes::normalized_volume(&t.polytope) {
        return Err(TriangulationError::IncompatiblePulls);
    }
    Ok(())
}

/// Random pull orders are generated by callers; this helper checks that an
/// order is a permutation of the point indices.
pub fn is_permutation(order: &[usize], n: usize) -> bool {
    order.len() == n && order.iter().copied().collect::<HashSet<_>>().len() == n && order.iter().all(|&i| i < n)
}

/// Sorted sizes of the minimal non-faces.
pub fn nonface_degrees(t: &Triangulation) -> Vec<usize> {
    let mut d: Vec<usize> = minimal_nonfaces(t).into_iter().map(|f| f.0.len()).collect();
    d.sort();
    d
}
