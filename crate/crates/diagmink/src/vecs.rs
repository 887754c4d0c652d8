//! Small vector helpers shared across modules.

use crate::error::{Error, Result};

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn hadamard(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

pub fn norm2(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

pub fn scale(v: &[f64], c: f64) -> Vec<f64> {
    v.iter().map(|x| c * x).collect()
}

pub fn neg(v: &[f64]) -> Vec<f64> {
    v.iter().map(|x| -x).collect()
}

/// `ℓ_p`-norm for `p ∈ [1, ∞]`; the boundary exponents are handled
/// symbolically, never through `1/(1 - 1/q)` in floating point.
pub fn norm_p(v: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        v.iter().fold(0.0, |m, x| m.max(x.abs()))
    } else if p == 1.0 {
        v.iter().map(|x| x.abs()).sum()
    } else if p == 2.0 {
        norm2(v)
    } else {
        v.iter().map(|x| x.abs().powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

/// Conjugate exponent: `1/p + 1/q = 1` with `1 ↦ ∞` and `∞ ↦ 1`.
pub fn conjugate_exponent(q: f64) -> Result<f64> {
    if !(q >= 1.0) {
        return Err(Error::param(format!("exponent q={q} outside [1, inf]")));
    }
    Ok(if q == 1.0 {
        f64::INFINITY
    } else if q.is_infinite() {
        1.0
    } else {
        q / (q - 1.0)
    })
}

/// Componentwise signed power `t ↦ |t|^β · sign(t)`.
pub fn signed_pow(v: &[f64], beta: f64) -> Vec<f64> {
    v.iter()
        .map(|&t| t.abs().powf(beta) * t.signum())
        .map(|t| if t == 0.0 { 0.0 } else { t })
        .collect()
}

pub fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// Lexicographic comparison of coordinate vectors.
pub fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.partial_cmp(y) {
            Some(std::cmp::Ordering::Equal) | None => continue,
            Some(o) => return o,
        }
    }
    a.len().cmp(&b.len())
}
