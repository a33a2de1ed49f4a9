//! Gaussian quadrature nodes and weights via Golub–Welsch.
//!
//! Nodes are eigenvalues of the Jacobi matrix of the orthogonal-polynomial
//! recurrence; weights are μ₀ times the squared first components of the
//! normalized eigenvectors. Both Legendre (weight 1 on [−1,1]) and
//! probabilists' Hermite (standard normal weight on ℝ) rules are provided.

use nalgebra::{DMatrix, SymmetricEigen};
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

/// One quadrature rule: paired nodes and weights.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Golub–Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix
/// with diagonal `diag`, off-diagonal `offdiag`, and total weight mass `mu0`.
fn golub_welsch(diag: &[f64], offdiag: &[f64], mu0: f64) -> Rule {
    let n = diag.len();
    assert_eq!(offdiag.len(), n.saturating_sub(1));
    let mut j = DMatrix::zeros(n, n);
    for (i, &d) in diag.iter().enumerate() {
        j[(i, i)] = d;
    }
    for (i, &b) in offdiag.iter().enumerate() {
        j[(i, i + 1)] = b;
        j[(i + 1, i)] = b;
    }
    let eig = SymmetricEigen::new(j);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let v0 = eig.eigenvectors[(0, k)];
            (eig.eigenvalues[k], mu0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Rule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    }
}

fn cache() -> &'static Mutex<HashMap<(u8, usize), Rule>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, usize), Rule>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// n-point Gauss–Legendre rule on [−1, 1] (weight function 1).
///
/// Exact for polynomials of degree ≤ 2n−1; ∑ weights = 2.
pub fn legendre(n: usize) -> Rule {
    assert!(n >= 1, "Legendre rule needs at least one node");
    if let Some(r) = cache().lock().unwrap().get(&(0u8, n)) {
        return r.clone();
    }
    // Recurrence x P_k = a P_{k+1} + b_k P_{k-1} in orthonormal form:
    // off-diagonal entries k / sqrt(4k² − 1), k = 1..n−1.
    let diag = vec![0.0; n];
    let offdiag: Vec<f64> = (1..n)
        .map(|k| {
            let k = k as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        })
        .collect();
    let r = golub_welsch(&diag, &offdiag, 2.0);
    cache().lock().unwrap().insert((0u8, n), r.clone());
    r
}

/// n-point Gauss–Hermite rule for the standard normal weight on ℝ.
///
/// ∑ wᵢ f(xᵢ) ≈ E[f(Z)], Z ~ N(0,1); ∑ weights = 1; exact for
/// polynomial f of degree ≤ 2n−1.
pub fn hermite_probabilists(n: usize) -> Rule {
    assert!(n >= 1, "Hermite rule needs at least one node");
    if let Some(r) = cache().lock().unwrap().get(&(1u8, n)) {
        return r.clone();
    }
    // Probabilists' Hermite recurrence: off-diagonal entries sqrt(k).
    let diag = vec![0.0; n];
    let offdiag: Vec<f64> = (1..n).map(|k| (k as f64).sqrt()).collect();
    let r = golub_welsch(&diag, &offdiag, 1.0);
    cache().lock().unwrap().insert((1u8, n), r.clone());
    r
}

/// Gauss–Legendre rule mapped to [a, b].
pub fn legendre_on(n: usize, a: f64, b: f64) -> Rule {
    let base = legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    Rule {
        nodes: base.nodes.iter().map(|&x| mid + half * x).collect(),
        weights: base.weights.iter().map(|&w| w * half).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_weights_sum_to_interval_length() {
        for n in [1, 2, 5, 16, 64] {
            let r = legendre(n);
            let s: f64 = r.weights.iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n={n}: weight sum {s}");
        }
    }

    #[test]
    fn hermite_matches_normal_moments() {
        let r = hermite_probabilists(12);
        let m2: f64 = r
            .nodes
            .iter()
            .zip(&r.weights)
            .map(|(x, w)| w * x * x)
            .sum();
        let m4: f64 = r
            .nodes
            .iter()
            .zip(&r.weights)
            .map(|(x, w)| w * x.powi(4))
            .sum();
        assert!((m2 - 1.0).abs() < 1e-12, "E[Z²] = {m2}");
        assert!((m4 - 3.0).abs() < 1e-11, "E[Z⁴] = {m4}");
    }
}
