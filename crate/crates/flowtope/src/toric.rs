//! Toric ideals of lattice polytopes, seen through their fibers: low-degree
//! binomial moves, fiber-graph connectivity, and initial ideals read off from
//! regular unimodular triangulations.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::ehrhart::count_dilate;
use crate::exact_math::binomial;
use crate::polytopes::LatticePolytope;
use crate::triangulation::{certify_regular, is_unimodular, minimal_nonfaces, Triangulation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("triangulation is not unimodular")]
    NotUnimodular,
    #[error("no regularity certificate")]
    NotRegular,
    #[error("no shelling order found")]
    DecompositionFailed,
}

/// A multiset of point indices, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<usize>);

impl Monomial {
    pub fn new(mut idx: Vec<usize>) -> Self {
        idx.sort();
        Monomial(idx)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.dedup();
        s
    }

    pub fn sum(&self, p: &LatticePolytope) -> Vec<i64> {
        let mut acc = vec![0i64; p.ambient_dim()];
        for &i in &self.0 {
            for (a, x) in acc.iter_mut().zip(&p.points()[i]) {
                *a += x;
            }
        }
        acc
    }

    pub fn shares_variable(&self, other: &Monomial) -> bool {
        self.0.iter().any(|i| other.0.contains(i))
    }

    pub fn to_text(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|i| format!("t{i}")).collect::<Vec<_>>().join("")
    }
}

/// `plus − minus`, with `plus` the lexicographically larger side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Monomial,
    pub minus: Monomial,
}

impl Binomial {
    pub fn new(a: Monomial, b: Monomial) -> Self {
        if a >= b {
            Binomial { plus: a, minus: b }
        } else {
            Binomial { plus: b, minus: a }
        }
    }

    pub fn to_text(&self) -> String {
        format!("{} - {}", self.plus.to_text(), self.minus.to_text())
    }
}

fn multisets(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, visit);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), visit);
}

/// Degree-`n` monomials grouped by the sum of their points.
pub fn fibers(p: &LatticePolytope, n: usize) -> BTreeMap<Vec<i64>, Vec<Monomial>> {
    let mut out: BTreeMap<Vec<i64>, Vec<Monomial>> = BTreeMap::new();
    multisets(p.points().len(), n, &mut |m| {
        let mono = Monomial(m.to_vec());
        out.entry(mono.sum(p)).or_default().push(mono);
    });
    out
}

/// Binomials of degree ≤ `max_degree` whose two sides have disjoint support.
pub fn binomial_moves(p: &LatticePolytope, max_degree: usize) -> Vec<Binomial> {
    let mut out = BTreeSet::new();
    for deg in 2..=max_degree {
        for fiber in fibers(p, deg).values() {
            for (i, a) in fiber.iter().enumerate() {
                for b in &fiber[i + 1..] {
                    if !a.shares_variable(b) {
                        out.insert(Binomial::new(a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// A degree-3 fiber that moves of degree ≤ `g` fail to connect.
pub fn disconnected_cubic_fiber(p: &LatticePolytope, g: usize) -> Option<Vec<Monomial>> {
    if g >= 3 {
        return None;
    }
    // Two monomials of one degree-3 fiber are related by a quadratic move
    // exactly when they share a variable: the cofactors then form a
    // degree-2 binomial (or coincide).
    fibers(p, 3).into_values().find(|fiber| {
        let mut reached = vec![false; fiber.len()];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..fiber.len() {
                if !reached[j] && fiber[i].shares_variable(&fiber[j]) {
                    reached[j] = true;
                    stack.push(j);
                }
            }
        }
        !reached.iter().all(|r| *r)
    })
}

/// Whether the toric ideal is generated in degree ≤ `g`, given that flow
/// polytope ideals are generated in degree ≤ 3: it suffices that every
/// degree-3 fiber is connected under moves of degree ≤ `g`.
pub fn generated_in_degree(p: &LatticePolytope, g: usize) -> bool {
    disconnected_cubic_fiber(p, g).is_none()
}

/// Square-free generators of the initial ideal: one per minimal non-face.
pub fn initial_ideal_from_nonfaces(t: &Triangulation) -> Result<Vec<Monomial>, ToricError> {
    if !is_unimodular(t) {
        return Err(ToricError::NotUnimodular);
    }
    if certify_regular(t).is_none() {
        return Err(ToricError::NotRegular);
    }
    Ok(minimal_nonfaces(t).into_iter().map(|f| Monomial(f.0)).collect())
}

/// Degree-`n` monomials supported on a face of `t`.
pub fn count_standard_monomials(t: &Triangulation, n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    t.faces()
        .iter()
        .map(|f| binomial(n as i64 - 1, f.len() as i64 - 1).to_integer().to_u64().expect("count"))
        .sum()
}

/// Standard monomials, nonempty fibers and `L(n)` agree for `n = 1..=n_max`.
pub fn hilbert_consistency(p: &LatticePolytope, t: &Triangulation, n_max: usize) -> bool {
    (1..=n_max).all(|n| {
        let l = count_dilate(p, n as u64);
        count_standard_monomials(t, n) == l && fibers(p, n).len() as u64 == l
    })
}

/// Standard monomials as a disjoint union of shifted monoids `w_i·⟨t_z : z ∈ C_i⟩`,
/// found from a shelling order of the maximal cells.
pub fn standard_monomial_decomposition(t: &Triangulation) -> Result<Vec<(Monomial, Vec<usize>)>, ToricError> {
    let cells = t.maximal_cells();
    let mut order = Vec::with_capacity(cells.len());
    let mut used = vec![false; cells.len()];
    let mut shifts = Vec::with_capacity(cells.len());
    if !shell(cells, &mut order, &mut used, &mut shifts) {
        return Err(ToricError::DecompositionFailed);
    }
    Ok(order.iter().zip(shifts).map(|(&i, r)| (Monomial(r), cells[i].clone())).collect())
}

/// Degree-`n` count implied by a decomposition.
pub fn decomposition_count(decomp: &[(Monomial, Vec<usize>)], n: usize) -> u64 {
    decomp
        .iter()
        .map(|(w, c)| {
            let d = c.len() as i64 - 1;
            let k = n as i64 - w.degree() as i64;
            if k < 0 {
                0
            } else {
                binomial(k + d, d).to_integer().to_u64().expect("count")
            }
        })
        .sum()
}

/// Every face `F` of `t` lies in exactly one piece, i.e. exactly one `i` has
/// `supp(w_i) ⊆ F ⊆ C_i`; shifts must be square-free.
pub fn is_valid_decomposition(t: &Triangulation, decomp: &[(Monomial, Vec<usize>)]) -> bool {
    if decomp.iter().any(|(w, c)| w.support().len() != w.degree() || !t.is_face(c)) {
        return false;
    }
    t.faces().iter().all(|f| {
        decomp
            .iter()
            .filter(|(w, c)| w.0.iter().all(|z| f.contains(z)) && f.iter().all(|z| c.contains(z)))
            .count()
            == 1
    })
}

/// The restriction `R` of a cell: vertices whose opposite facet lies in an
/// earlier cell. Valid when the earlier faces of the cell are exactly the
/// subsets not containing `R`.
fn restriction(cells: &[Vec<usize>], earlier: &[usize], cell: &[usize]) -> Option<Vec<usize>> {
    let in_earlier = |s: &[usize]| earlier.iter().any(|&j| s.iter().all(|x| cells[j].contains(x)));
    let r: Vec<usize> = cell
        .iter()
        .copied()
        .filter(|z| {
            let rest: Vec<usize> = cell.iter().copied().filter(|x| x != z).collect();
            in_earlier(&rest)
        })
        .collect();
    let k = cell.len();
    for mask in 1u32..(1 << k) {
        let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| cell[i]).collect();
        let contains_r = r.iter().all(|z| s.contains(z));
        if in_earlier(&s) == contains_r {
            return None;
        }
    }
    Some(r)
}

fn shell(cells: &[Vec<usize>], order: &mut Vec<usize>, used: &mut [bool], shifts: &mut Vec<Vec<usize>>) -> bool {
    if order.len() == cells.len() {
        return true;
    }
    for i in 0..cells.len() {
        if used[i] {
            continue;
        }
        if !order.is_empty() {
            // must meet the earlier complex in a facet
            let touches = order.iter().any(|&j| cells[j].iter().filter(|x| cells[i].contains(x)).count() == cells[i].len() - 1);
            if !touches {
                continue;
            }
        }
        if let Some(r) = restriction(cells, order, &cells[i]) {
            order.push(i);
            used[i] = true;
            shifts.push(r);
            if shell(cells, order, used, shifts) {
                return true;
            }
            shifts.pop();
            used[i] = false;
            order.pop();
        }
    }
    false
}
