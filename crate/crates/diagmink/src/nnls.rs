//! Nonnegative least squares via the Lawson-Hanson active-set method.
//!
//! Solves `min_{x ≥ 0} ‖Ax - b‖²`, with the passive-set subproblems handled
//! by an SVD solve so rank-deficient candidate sets cannot derail the
//! iteration.

use nalgebra::{DMatrix, DVector};

/// Solution report for an NNLS problem.
#[derive(Clone, Debug)]
pub struct NnlsResult {
    pub x: Vec<f64>,
    /// `‖Ax - b‖₂` at the solution.
    pub residual_norm: f64,
    /// Infinity norm of the KKT-violating part of the gradient `Aᵀ(Ax - b)`.
    pub grad_inf: f64,
    pub iterations: usize,
}

/// Lawson-Hanson NNLS. `grad_tol` bounds the admissible KKT violation of
/// the gradient of the quadratic, relative to `max(1, ‖Aᵀb‖_∞)`.
pub fn nnls(a: &DMatrix<f64>, b: &DVector<f64>, grad_tol: f64) -> NnlsResult {
    let n = a.ncols();
    let at = a.transpose();
    let scale = (&at * b).abs().max().max(1.0);
    let tol = grad_tol * scale;

    let mut x = DVector::<f64>::zeros(n);
    let mut passive = vec![false; n];
    let max_outer = 4 * n + 16;
    let mut iterations = 0;

    for _ in 0..max_outer {
        iterations += 1;
        // Dual vector w = Aᵀ(b - Ax); optimal once no inactive coordinate
        // has positive dual.
        let w = &at * (b - a * &x);
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if !passive[j] && w[j] > tol {
                if best.map_or(true, |(_, bw)| w[j] > bw) {
                    best = Some((j, w[j]));
                }
            }
        }
        let Some((enter, _)) = best else { break };
        passive[enter] = true;

        // Inner loop: solve on the passive set, clip negative coordinates.
        loop {
            let cols: Vec<usize> = (0..n).filter(|&j| passive[j]).collect();
            let sub = a.select_columns(cols.iter());
            let svd = sub.svd(true, true);
            let z = svd.solve(b, 1e-12).expect("svd solve");

            if z.iter().all(|v| *v > 1e-14) {
                x.fill(0.0);
                for (k, &j) in cols.iter().enumerate() {
                    x[j] = z[k];
                }
                break;
            }
            // Interpolate toward z until the first passive coordinate hits 0.
            let mut alpha = f64::INFINITY;
            for (k, &j) in cols.iter().enumerate() {
                if z[k] <= 1e-14 {
                    let denom = x[j] - z[k];
                    if denom > 0.0 {
                        alpha = alpha.min(x[j] / denom);
                    } else {
                        alpha = 0.0;
                    }
                }
            }
            let alpha = alpha.clamp(0.0, 1.0);
            for (k, &j) in cols.iter().enumerate() {
                x[j] += alpha * (z[k] - x[j]);
            }
            for &j in &cols {
                if x[j] <= 1e-14 {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
            if cols.iter().all(|&j| !passive[j]) {
                // Everything left the passive set; re-enter the outer loop.
                break;
            }
        }
    }

    let grad = &at * (a * &x - b);
    let mut grad_inf = 0.0_f64;
    for j in 0..n {
        if x[j] > 0.0 {
            grad_inf = grad_inf.max(grad[j].abs());
        } else {
            grad_inf = grad_inf.max((-grad[j]).max(0.0));
        }
    }
    let residual_norm = (a * &x - b).norm();
    NnlsResult { x: x.iter().copied().collect(), residual_norm, grad_inf, iterations }
}
