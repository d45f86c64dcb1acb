//! Ehrhart polynomials: dilate counting, interpolation and the f-vector
//! formula for unimodular triangulations.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::exact_math::{binomial, Rational};
use crate::polytopes::{box_points, LatticePolytope};
use crate::triangulation::{f_vector, is_unimodular, Triangulation, TriangulationError};

/// Coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub coefficients: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialTerm {
    /// The term is `coeff · C(n + shift, dim)`.
    pub shift: i64,
    pub coeff: i64,
}

impl EhrhartPolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, n: i64) -> Rational {
        let x = Rational::from_integer(BigInt::from(n));
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    /// From integer numerators over a common denominator, ascending degree.
    pub fn from_scaled(numerators: &[i64], denominator: i64) -> Self {
        EhrhartPolynomial {
            coefficients: numerators.iter().map(|&c| Rational::new(BigInt::from(c), BigInt::from(denominator))).collect(),
        }
    }

    /// `L(n) = Σ_i h_i · C(n + dim − i, dim)`; returned as `(dim − i, h_i)`.
    pub fn binomial_form(&self) -> Vec<BinomialTerm> {
        let d = self.degree() as i64;
        let mut h: Vec<Rational> = Vec::new();
        for n in 0..=d {
            let mut rest = self.eval(n);
            for (i, hi) in h.iter().enumerate() {
                rest -= hi * binomial(n + d - i as i64, d);
            }
            h.push(rest);
        }
        h.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| BinomialTerm { shift: d - i as i64, coeff: c.to_integer().to_i64().expect("small") })
            .collect()
    }

    pub fn h_star(&self) -> Vec<i64> {
        let d = self.degree();
        let mut h = vec![0; d + 1];
        for t in self.binomial_form() {
            h[(d as i64 - t.shift) as usize] = t.coeff;
        }
        h
    }
}

/// Lattice points of the `n`-th dilate, counted on the normalized polytope.
pub fn count_dilate(p: &LatticePolytope, n: u64) -> u64 {
    let n = n as i64;
    let pts = p.normalized_points();
    let facets = p.normalized_facets();
    let d = p.dim();
    if d == 0 {
        return 1;
    }
    let lo: Vec<i64> = (0..d).map(|j| n * pts.iter().map(|y| y[j]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..d).map(|j| n * pts.iter().map(|y| y[j]).max().unwrap()).collect();
    (lo[0]..=hi[0])
        .into_par_iter()
        .map(|x0| {
            let (mut l, mut h) = (lo.clone(), hi.clone());
            l[0] = x0;
            h[0] = x0;
            let mut count = 0u64;
            box_points(&l, &h, facets, n, &mut |_| count += 1);
            count
        })
        .sum()
}

/// Exact solve of the Vandermonde system on nodes `0..values.len()`.
pub fn interpolate(values: &[Rational]) -> EhrhartPolynomial {
    // Newton divided differences, then expand to monomial basis.
    let m = values.len();
    let mut dd: Vec<Rational> = values.to_vec();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / Rational::from_integer(BigInt::from(level as i64));
        }
    }
    let mut coeffs = vec![Rational::zero(); m.max(1)];
    let mut basis = vec![Rational::one()];
    for (k, c) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        // basis *= (x − k)
        let mut next = vec![Rational::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * Rational::from_integer(BigInt::from(k as i64));
        }
        basis = next;
    }
    EhrhartPolynomial { coefficients: coeffs }
}

pub fn interpolate_ehrhart(p: &LatticePolytope) -> EhrhartPolynomial {
    let values: Vec<Rational> =
        (0..=p.dim() as u64).map(|n| Rational::from_integer(BigInt::from(count_dilate(p, n)))).collect();
    interpolate(&values)
}

/// `L(n) = Σ_j f_j · C(n − 1, j)` for a unimodular triangulation.
pub fn ehrhart_from_fvector(t: &Triangulation) -> Result<EhrhartPolynomial, TriangulationError> {
    if !is_unimodular(t) {
        return Err(TriangulationError::NotUnimodular);
    }
    let f = f_vector(t);
    let d = t.polytope().dim() as i64;
    let values: Vec<Rational> = (0..=d)
        .map(|n| {
            f.iter()
                .enumerate()
                .map(|(j, &fj)| binomial(n - 1, j as i64) * Rational::from_integer(BigInt::from(fj)))
                .sum()
        })
        .collect();
    Ok(interpolate(&values))
}

/// Render with a common denominator, highest degree first.
pub fn format_polynomial(p: &EhrhartPolynomial) -> String {
    let den = p.coefficients.iter().fold(BigInt::one(), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let terms: Vec<String> = p
        .coefficients
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let num = (c * Rational::from_integer(den.clone())).to_integer();
            match i {
                0 => format!("{num}"),
                1 => format!("{num}n"),
                _ => format!("{num}n^{i}"),
            }
        })
        .collect();
    format!("({})/{}", terms.join(" + "), den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_and_simplex() {
        let seg = LatticePolytope::from_points(1, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(interpolate_ehrhart(&seg), EhrhartPolynomial::from_scaled(&[1, 1], 1));
        let s3 = LatticePolytope::from_points(3, vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(count_dilate(&s3, 2), 10);
        assert_eq!(count_dilate(&s3, 0), 1);
        let l = interpolate_ehrhart(&s3);
        assert_eq!(l, EhrhartPolynomial::from_scaled(&[6, 11, 6, 1], 6));
        assert_eq!(l.h_star(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn square_binomial_form() {
        let sq = LatticePolytope::from_points(2, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]).unwrap();
        let l = interpolate_ehrhart(&sq);
        assert_eq!(l, EhrhartPolynomial::from_scaled(&[1, 2, 1], 1));
        assert_eq!(l.binomial_form(), vec![BinomialTerm { shift: 2, coeff: 1 }, BinomialTerm { shift: 1, coeff: 1 }]);
        let t = crate::triangulation::pulling_triangulation(&sq, &[]);
        assert_eq!(ehrhart_from_fvector(&t).unwrap(), l);
    }
}
