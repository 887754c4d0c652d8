//! Deterministic, antipodally symmetric evaluation grids on the sphere.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vecs;

/// Grid construction scheme.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "kebab-case")]
pub enum GridScheme {
    /// Low-discrepancy deterministic layout (equal angles in 2-D, Fibonacci
    /// spiral in 3-D, fixed-seed directions in higher dimensions).
    FibonacciSymmetric,
    UniformSeeded { seed: u64 },
}

/// A fixed set of unit directions closed under `v ↦ -v`: points are stored
/// as consecutive antipodal pairs, so the closure holds exactly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DirectionGrid {
    pub dim: usize,
    #[serde(flatten)]
    pub scheme: GridScheme,
    pub points: Vec<Vec<f64>>,
}

impl DirectionGrid {
    /// Deterministic symmetric grid with at least `size` points.
    pub fn fibonacci(dim: usize, size: usize) -> Result<Self> {
        let reps = representative_count(dim, size)?;
        let points = match dim {
            1 => vec![vec![1.0], vec![-1.0]],
            2 => {
                let mut pts = Vec::with_capacity(2 * reps);
                for k in 0..reps {
                    let theta = std::f64::consts::PI * (k as f64 + 0.5) / reps as f64;
                    let p = vec![theta.cos(), theta.sin()];
                    pts.push(p.clone());
                    pts.push(vecs::neg(&p));
                }
                pts
            }
            3 => {
                // Fibonacci spiral on the upper hemisphere, mirrored.
                let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
                let mut pts = Vec::with_capacity(2 * reps);
                for k in 0..reps {
                    let z = (k as f64 + 0.5) / reps as f64;
                    let r = (1.0 - z * z).max(0.0).sqrt();
                    let phi = 2.0 * std::f64::consts::PI * (k as f64) / golden;
                    let p = vec![r * phi.cos(), r * phi.sin(), z];
                    pts.push(p.clone());
                    pts.push(vecs::neg(&p));
                }
                pts
            }
            _ => seeded_points(dim, reps, 0x4649_b5_u64),
        };
        Ok(DirectionGrid { dim, scheme: GridScheme::FibonacciSymmetric, points })
    }

    /// Seeded uniform directions (normalized Gaussians), symmetrized.
    pub fn uniform_seeded(dim: usize, size: usize, seed: u64) -> Result<Self> {
        let reps = representative_count(dim, size)?;
        Ok(DirectionGrid {
            dim,
            scheme: GridScheme::UniformSeeded { seed },
            points: seeded_points(dim, reps, seed),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// One representative per antipodal pair.
    pub fn representatives(&self) -> impl Iterator<Item = &Vec<f64>> {
        self.points.iter().step_by(2)
    }
}

fn representative_count(dim: usize, size: usize) -> Result<usize> {
    if dim == 0 {
        return Err(Error::param("grid dimension must be at least 1"));
    }
    if size == 0 {
        return Err(Error::param("grid size must be positive"));
    }
    Ok(size.div_ceil(2))
}

fn seeded_points(dim: usize, reps: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = crate::seeded_rng(seed);
    let mut pts = Vec::with_capacity(2 * reps);
    for _ in 0..reps {
        let p = random_unit(&mut rng, dim);
        pts.push(p.clone());
        pts.push(vecs::neg(&p));
    }
    pts
}

pub(crate) fn random_unit(rng: &mut impl Rng, dim: usize) -> Vec<f64> {
    loop {
        // Box-Muller pairs; isotropic after normalization.
        let v: Vec<f64> = (0..dim)
            .map(|_| {
                let u1: f64 = rng.random::<f64>().max(1e-12);
                let u2: f64 = rng.random::<f64>();
                (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
            })
            .collect();
        let len = vecs::norm2(&v);
        if len > 1e-6 {
            return vecs::scale(&v, 1.0 / len);
        }
    }
}

/// Deterministic candidate directions in the closed positive orthant,
/// starting with the coordinate axes and the main diagonal. Used as default
/// atom grids for nonnegative least-squares fits.
pub fn positive_orthant_candidates(dim: usize, count: usize) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(count.max(dim + 1));
    for i in 0..dim {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        out.push(e);
    }
    out.push(vec![1.0 / (dim as f64).sqrt(); dim]);
    let grid = DirectionGrid::fibonacci(dim, 4 * count).unwrap_or_else(|_| DirectionGrid {
        dim,
        scheme: GridScheme::FibonacciSymmetric,
        points: vec![],
    });
    for p in grid.points {
        if out.len() >= count.max(dim + 1) {
            break;
        }
        let folded: Vec<f64> = p.iter().map(|x| x.abs()).collect();
        let len = vecs::norm2(&folded);
        if len <= 1e-9 {
            continue;
        }
        let cand = vecs::scale(&folded, 1.0 / len);
        let dup = out.iter().any(|q| {
            q.iter()
                .zip(&cand)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
                <= 1e-9
        });
        if !dup {
            out.push(cand);
        }
    }
    out
}
