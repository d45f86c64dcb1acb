//! Exact integer and rational linear algebra.
//!
//! Everything here is arbitrary precision: Hermite normal forms with their
//! unimodular transforms, integer kernels, affine ranks, and a rational
//! simplex solver using Bland's rule.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MathError {
    #[error("no points")]
    NoPoints,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible over the integers")]
    NotUnimodular,
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: &BigInt) -> Rational {
    Rational::from_integer(v.clone())
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Build from i64 rows. All rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self, MathError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MathError::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
            data.extend(r.iter().map(|&v| BigInt::from(v)));
        }
        Ok(IntMatrix { rows: rows.len(), cols, data })
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, MathError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(MathError::DimensionMismatch(format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
            data.extend(r);
        }
        Ok(IntMatrix { rows: n, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries as i64; panics on overflow (callers only use this on small data).
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|v| v.to_i64().expect("entry fits in i64")).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MathError> {
        if self.cols != other.rows {
            return Err(MathError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// row[target] -= q * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(target, j) - q * self.get(source, j);
            self.set(target, j, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt, MathError> {
        if self.rows != self.cols {
            return Err(MathError::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn rank(&self) -> usize {
        let (h, _) = hnf(self);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|v| !v.is_zero())).count()
    }

    /// Inverse of a unimodular matrix.
    pub fn unimodular_inverse(&self) -> Result<IntMatrix, MathError> {
        if self.rows != self.cols {
            return Err(MathError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r: Vec<Rational> = self.row(i).iter().map(rat_int).collect();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(MathError::NotUnimodular)?;
            a.swap(p, c);
            let inv = a[c][c].recip();
            for v in a[c].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..n {
                if i != c && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..2 * n {
                        let v = &a[i][j] - &f * &a[c][j];
                        a[i][j] = v;
                    }
                }
            }
        }
        let mut out = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = &a[i][n + j];
                if !v.is_integer() {
                    return Err(MathError::NotUnimodular);
                }
                out.set(i, j, v.to_integer());
            }
        }
        Ok(out)
    }
}

/// Row Hermite normal form: returns `(H, U)` with `H = U·M`, `U` unimodular,
/// `H` in echelon form with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut r = 0;
    for j in 0..m.cols {
        if r == m.rows {
            break;
        }
        loop {
            // Move the smallest nonzero entry of the column (rows r..) to row r.
            let best = (r..m.rows)
                .filter(|&i| !h.get(i, j).is_zero())
                .min_by(|&a, &b| h.get(a, j).abs().cmp(&h.get(b, j).abs()));
            let Some(best) = best else { break };
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut done = true;
            for i in r + 1..m.rows {
                if h.get(i, j).is_zero() {
                    continue;
                }
                let q = h.get(i, j).div_floor(h.get(r, j));
                h.sub_row_multiple(i, r, &q);
                u.sub_row_multiple(i, r, &q);
                if !h.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, j).is_zero() {
            continue;
        }
        if h.get(r, j).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let pivot = h.get(r, j).clone();
        for i in 0..r {
            let q = h.get(i, j).div_floor(&pivot);
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// A basis of the integer kernel `{x ∈ ℤⁿ : M·x = 0}`. The basis spans a
/// saturated sublattice and extends to a unimodular matrix.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    kernel_with_transform(m).0
}

/// Kernel basis plus the unimodular `U` with `H = U·Mᵀ`; the kernel is rows
/// `rank..n` of `U`.
fn kernel_with_transform(m: &IntMatrix) -> (Vec<Vec<BigInt>>, IntMatrix, usize) {
    let (h, u) = hnf(&m.transpose());
    let rank = (0..h.rows()).filter(|&i| h.row(i).iter().any(|v| !v.is_zero())).count();
    let basis = (rank..u.rows()).map(|i| u.row(i).to_vec()).collect();
    (basis, u, rank)
}

/// The lattice `ℤⁿ ∩ span(vectors)` presented by a basis together with an
/// integral coordinate map.
#[derive(Clone, Debug)]
pub struct SaturatedLattice {
    /// Basis vectors (rows), each of length n.
    pub basis: Vec<Vec<BigInt>>,
    /// `coords[i]` is a row of length n; the coordinates of a lattice vector
    /// v are `coords · v`.
    pub coords: Vec<Vec<BigInt>>,
}

pub fn saturated_span(n: usize, vectors: &[Vec<BigInt>]) -> SaturatedLattice {
    if vectors.is_empty() {
        return SaturatedLattice { basis: vec![], coords: vec![] };
    }
    let d = IntMatrix::from_big_rows(n, vectors.to_vec()).expect("consistent lengths");
    let complement = integer_kernel(&d);
    if complement.is_empty() {
        let id = IntMatrix::identity(n);
        return SaturatedLattice { basis: id.to_rows(), coords: id.to_rows() };
    }
    let c = IntMatrix::from_big_rows(n, complement).expect("consistent lengths");
    let (basis, u, rank) = kernel_with_transform(&c);
    let uinv = u.unimodular_inverse().expect("transform is unimodular");
    // v = (0,…,0,y)·U  ⇒  y = (v·U⁻¹)[rank..]
    let coords = (rank..n).map(|k| (0..n).map(|l| uinv.get(l, k).clone()).collect()).collect();
    SaturatedLattice { basis, coords }
}

/// Rank of the differences `p_i − p_0`.
pub fn affine_rank(points: &[Vec<i64>]) -> Result<usize, MathError> {
    let Some(first) = points.first() else { return Err(MathError::NoPoints) };
    let n = first.len();
    let diffs: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|p| {
            if p.len() != n {
                return Err(MathError::DimensionMismatch("points of different lengths".into()));
            }
            Ok(p.iter().zip(first).map(|(a, b)| a - b).collect())
        })
        .collect::<Result<_, _>>()?;
    Ok(rank_i64(&diffs))
}

/// Determinant of a small square i64 matrix (Bareiss over i128, with a
/// BigInt fallback on overflow).
pub fn det_i64(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)));
                match v {
                    Some(v) => a[i][j] = v / prev,
                    None => {
                        let m = IntMatrix::from_rows(n, rows).expect("square");
                        return m.det().expect("square");
                    }
                }
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if n == 0 {
        return BigInt::one();
    }
    BigInt::from(sign * a[n - 1][n - 1])
}

/// Rank of an i64 matrix by fraction-free elimination with row gcd
/// reduction (BigInt fallback on overflow).
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let Some(width) = rows.first().map(|r| r.len()) else { return 0 };
    let mut a: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, p);
        for i in rank + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (f, g) = (a[rank][c], a[i][c]);
            let mut row = Vec::with_capacity(width);
            for j in 0..width {
                match a[i][j].checked_mul(f).and_then(|x| a[rank][j].checked_mul(g).and_then(|y| x.checked_sub(y))) {
                    Some(v) => row.push(v),
                    None => return IntMatrix::from_rows(width, rows).expect("consistent").rank(),
                }
            }
            let gcd = row.iter().fold(0i128, |acc, &v| acc.gcd(&v));
            if gcd > 1 {
                row.iter_mut().for_each(|v| *v /= gcd);
            }
            a[i] = row;
        }
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// Linear programming

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpResult {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub witness: Option<Vec<Rational>>,
}

impl LpResult {
    fn bare(status: LpStatus) -> Self {
        LpResult { status, value: None, witness: None }
    }
}

/// Optimize `objective · x` over `{x : A·x = b, C·x ≥ d}` with `x` free.
///
/// Inequality rows of the form `c·x_j ≥ 0` with `c > 0` are turned into sign
/// constraints on `x_j` instead of slack rows.
pub fn lp(
    objective: &[Rational],
    sense: Sense,
    eq: &IntMatrix,
    eq_rhs: &[BigInt],
    ineq: &IntMatrix,
    ineq_rhs: &[BigInt],
) -> Result<LpResult, MathError> {
    let n = objective.len();
    if (eq.rows() > 0 && eq.cols() != n) || (ineq.rows() > 0 && ineq.cols() != n) {
        return Err(MathError::DimensionMismatch("constraint width differs from objective".into()));
    }
    if eq.rows() != eq_rhs.len() || ineq.rows() != ineq_rhs.len() {
        return Err(MathError::DimensionMismatch("rhs length differs from row count".into()));
    }

    let mut nonneg = vec![false; n];
    let mut general_rows = Vec::new();
    for i in 0..ineq.rows() {
        let row = ineq.row(i);
        let nz: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
        if nz.len() == 1 && row[nz[0]].is_positive() && ineq_rhs[i].is_zero() {
            nonneg[nz[0]] = true;
        } else if nz.is_empty() {
            if ineq_rhs[i].is_positive() {
                return Ok(LpResult::bare(LpStatus::Infeasible));
            }
        } else {
            general_rows.push(i);
        }
    }

    // Column layout: for each original variable a "plus" column, and a
    // "minus" column if it is free; then one slack per general inequality.
    let mut col_of = Vec::with_capacity(n);
    let mut ncols = 0;
    for &nn in nonneg.iter() {
        let plus = ncols;
        ncols += 1;
        let minus = if nn {
            None
        } else {
            ncols += 1;
            Some(ncols - 1)
        };
        col_of.push((plus, minus));
    }
    let nslack = general_rows.len();
    let slack0 = ncols;
    ncols += nslack;

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let expand = |src: &[BigInt]| {
        let mut r = vec![Rational::zero(); ncols];
        for j in 0..n {
            if src[j].is_zero() {
                continue;
            }
            let (p, m) = col_of[j];
            r[p] = rat_int(&src[j]);
            if let Some(m) = m {
                r[m] = -rat_int(&src[j]);
            }
        }
        r
    };
    for i in 0..eq.rows() {
        rows.push(expand(eq.row(i)));
        rhs.push(rat_int(&eq_rhs[i]));
    }
    for (k, &i) in general_rows.iter().enumerate() {
        let mut r = expand(ineq.row(i));
        r[slack0 + k] = -Rational::one();
        rows.push(r);
        rhs.push(rat_int(&ineq_rhs[i]));
    }
    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..n {
        let c = match sense {
            Sense::Min => objective[j].clone(),
            Sense::Max => -objective[j].clone(),
        };
        let (p, m) = col_of[j];
        if let Some(m) = m {
            cost[m] = -c.clone();
        }
        cost[p] = c;
    }

    let outcome = simplex_standard(rows, rhs, cost);
    match outcome {
        Standard::Infeasible => Ok(LpResult::bare(LpStatus::Infeasible)),
        Standard::Unbounded => Ok(LpResult::bare(LpStatus::Unbounded)),
        Standard::Optimal(y) => {
            let x: Vec<Rational> = (0..n)
                .map(|j| {
                    let (p, m) = col_of[j];
                    match m {
                        Some(m) => &y[p] - &y[m],
                        None => y[p].clone(),
                    }
                })
                .collect();
            let value = objective.iter().zip(&x).fold(Rational::zero(), |acc, (c, v)| acc + c * v);
            Ok(LpResult { status: LpStatus::Optimal, value: Some(value), witness: Some(x) })
        }
    }
}

enum Standard {
    Optimal(Vec<Rational>),
    Unbounded,
    Infeasible,
}

/// Two-phase tableau simplex for `min c·y, A·y = b, y ≥ 0` with Bland's rule.
fn simplex_standard(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, c: Vec<Rational>) -> Standard {
    let m = a.len();
    let n = c.len();
    for i in 0..m {
        if b[i].is_negative() {
            b[i] = -b[i].clone();
            for v in a[i].iter_mut() {
                *v = -v.clone();
            }
        }
    }
    // Tableau columns: n structural, m artificial, then rhs.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut r = a[i].clone();
            r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase 1 objective: minimise the sum of artificials.
    let mut z = vec![Rational::zero(); width];
    for k in n..n + m {
        z[k] = Rational::one();
    }
    for i in 0..m {
        for j in 0..width {
            let v = &z[j] - &t[i][j];
            z[j] = v;
        }
    }
    if !run_bland(&mut t, &mut z, &mut basis, n + m) {
        unreachable!("phase one is bounded below by zero");
    }
    if !z[width - 1].is_zero() {
        return Standard::Infeasible;
    }
    // Drive artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| !t[i][j].is_zero()) {
                pivot(&mut t, &mut z, &mut basis, i, j);
                i += 1;
            } else {
                t.remove(i);
                basis.remove(i);
            }
        } else {
            i += 1;
        }
    }
    // Phase 2: remove artificial columns and price out the real objective.
    for row in t.iter_mut() {
        row.drain(n..n + m);
    }
    let width = n + 1;
    let mut z = vec![Rational::zero(); width];
    z[..n].clone_from_slice(&c);
    for (i, &bv) in basis.iter().enumerate() {
        if !z[bv].is_zero() {
            let f = z[bv].clone();
            for j in 0..width {
                let v = &z[j] - &f * &t[i][j];
                z[j] = v;
            }
        }
    }
    if !run_bland(&mut t, &mut z, &mut basis, n) {
        return Standard::Unbounded;
    }
    let mut y = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        y[bv] = t[i][width - 1].clone();
    }
    Standard::Optimal(y)
}

/// Iterate pivots until optimal (true) or unbounded (false). Only columns
/// `< allowed` may enter.
fn run_bland(t: &mut [Vec<Rational>], z: &mut [Rational], basis: &mut [usize], allowed: usize) -> bool {
    let last = z.len() - 1;
    loop {
        let Some(e) = (0..allowed).find(|&j| z[j].is_negative()) else { return true };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..t.len() {
            if t[i][e].is_positive() {
                let ratio = &t[i][last] / &t[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((l, _)) = leave else { return false };
        pivot(t, z, basis, l, e);
    }
}

fn pivot(t: &mut [Vec<Rational>], z: &mut [Rational], basis: &mut [usize], r: usize, c: usize) {
    let inv = t[r][c].recip();
    for v in t[r].iter_mut() {
        if !v.is_zero() {
            *v = &*v * &inv;
        }
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (v, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v = &*v - &f * p;
            }
        }
    }
    if !z[c].is_zero() {
        let f = z[c].clone();
        for (v, p) in z.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *v = &*v - &f * p;
            }
        }
    }
    basis[r] = c;
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Divide by the gcd of the entries (zero vectors are returned unchanged).
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn binomial(n: i64, k: i64) -> Rational {
    // Generalized binomial coefficient for integer n (possibly negative).
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * rat(n - i, i + 1);
    }
    acc
}
