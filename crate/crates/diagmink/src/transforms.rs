//! The K-transform and its relatives: cosine transform, numerical
//! injectivity probes, surface-area-measure / mixed-volume transform, mean
//! width, and the finite-group transform.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bodies::ConvexBody;
use crate::error::{Error, Result};
use crate::grid::DirectionGrid;
use crate::measures::{SphereAtom, SphereMeasure};
use crate::vecs;

/// `(T_K μ)(u) = Σ_j w_j · h(v_j K, u)`.
pub fn k_transform(k: &ConvexBody, mu: &SphereMeasure, u: &[f64]) -> Result<f64> {
    vecs::check_dim(k.dim(), mu.dim)?;
    vecs::check_dim(k.dim(), u.len())?;
    let mut acc = 0.0;
    for a in &mu.atoms {
        acc += a.w * k.hadamard(&a.v)?.support(u)?;
    }
    Ok(acc)
}

/// Cosine transform `Σ_j w_j |⟨u, v_j⟩|`; the `K = I` special case of the
/// K-transform, computed directly.
pub fn cosine_transform(mu: &SphereMeasure, u: &[f64]) -> Result<f64> {
    vecs::check_dim(mu.dim, u.len())?;
    Ok(mu.atoms.iter().map(|a| a.w * vecs::dot(u, &a.v).abs()).sum())
}

/// `L_p`-variant `(Σ_j w_j h(v_j K, u)^p)^{1/p}` for nonnegative measures.
pub fn lp_k_transform(k: &ConvexBody, mu: &SphereMeasure, u: &[f64], p: f64) -> Result<f64> {
    if !(p >= 1.0) {
        return Err(Error::param(format!("lp transform exponent p={p} must be >= 1")));
    }
    if mu.atoms.iter().any(|a| a.w < 0.0) {
        return Err(Error::param("lp transform requires a nonnegative measure"));
    }
    vecs::check_dim(k.dim(), mu.dim)?;
    vecs::check_dim(k.dim(), u.len())?;
    if p == 1.0 {
        return k_transform(k, mu, u);
    }
    let mut acc = 0.0;
    for a in &mu.atoms {
        acc += a.w * k.hadamard(&a.v)?.support(u)?.powf(p);
    }
    Ok(acc.powf(1.0 / p))
}

/// One weighted linear map of a finite transformation family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupElement {
    /// Row-major square matrix.
    pub m: Vec<Vec<f64>>,
    pub w: f64,
}

/// `(T_{K,G} ν)(u) = Σ_g w_g · h(gK, u)` with `h(gK, u) = h(K, gᵀu)`.
pub fn g_transform(k: &ConvexBody, group: &[GroupElement], u: &[f64]) -> Result<f64> {
    let n = k.dim();
    vecs::check_dim(n, u.len())?;
    let mut acc = 0.0;
    for g in group {
        if g.m.len() != n || g.m.iter().any(|row| row.len() != n) {
            return Err(Error::param(format!(
                "group element must be a square {n}x{n} matrix"
            )));
        }
        let mut gt_u = vec![0.0; n];
        for (i, row) in g.m.iter().enumerate() {
            for (j, item) in gt_u.iter_mut().enumerate() {
                *item += row[j] * u[i];
            }
        }
        acc += g.w * k.support(&gt_u)?;
    }
    Ok(acc)
}

/// Surface area measure of an origin-symmetric convex polygon: one atom per
/// edge, outward unit normal weighted by edge length. Collinear vertex
/// triples are merged into a single edge.
pub fn surface_measure_2d(p: &ConvexBody) -> Result<SphereMeasure> {
    let vertices = match p {
        ConvexBody::Polygon2D { vertices } => vertices,
        _ => {
            return Err(Error::Unsupported {
                op: "surface_measure_2d",
                detail: "expects a polygon2d body".to_string(),
            })
        }
    };
    p.validate()?;
    let m = vertices.len();
    let mut atoms: Vec<SphereAtom> = Vec::with_capacity(m);
    for i in 0..m {
        let a = vertices[i];
        let b = vertices[(i + 1) % m];
        let e = [b[0] - a[0], b[1] - a[1]];
        let len = (e[0] * e[0] + e[1] * e[1]).sqrt();
        if len <= 1e-15 {
            continue;
        }
        // Outward normal of a CCW polygon: edge rotated by -90 degrees.
        let normal = vec![e[1] / len, -e[0] / len];
        if let Some(prev) = atoms.last_mut() {
            if prev.v.iter().zip(&normal).all(|(x, y)| (x - y).abs() <= 1e-12) {
                prev.w += len;
                continue;
            }
        }
        atoms.push(SphereAtom { v: normal, w: len });
    }
    // A closing edge collinear with the opening one can remain split.
    if atoms.len() >= 2 {
        let first = atoms[0].clone();
        let last = atoms.last().unwrap();
        if first.v.iter().zip(&last.v).all(|(x, y)| (x - y).abs() <= 1e-12) {
            atoms[0].w += last.w;
            atoms.pop();
        }
    }
    Ok(SphereMeasure { dim: 2, atoms, even: false })
}

/// Mixed-volume transform `(1/n) Σ_j S_j · h(uK, n_j) = V(L,…,L,uK)` where
/// `S` is the surface area measure of `L`.
pub fn mixed_volume_transform(s: &SphereMeasure, k: &ConvexBody, u: &[f64]) -> Result<f64> {
    vecs::check_dim(s.dim, k.dim())?;
    vecs::check_dim(s.dim, u.len())?;
    let n = s.dim as f64;
    let uk = k.hadamard(u)?;
    let mut acc = 0.0;
    for a in &s.atoms {
        acc += a.w * uk.support(&a.v)?;
    }
    Ok(acc / n)
}

/// Surface area of the unit sphere `S^{n-1}`, `2 π^{n/2} / Γ(n/2)`.
pub fn sphere_surface_area(n: usize) -> f64 {
    // Γ(n/2) by the half-integer recursion.
    let mut gamma = if n % 2 == 0 { 1.0 } else { std::f64::consts::PI.sqrt() };
    let mut x = if n % 2 == 0 { 1.0 } else { 0.5 };
    while x + 1.0 <= n as f64 / 2.0 + 1e-9 {
        gamma *= x;
        x += 1.0;
    }
    2.0 * std::f64::consts::PI.powf(n as f64 / 2.0) / gamma
}

/// Quadrature estimate of `(1/n) ∫ h(uK, v) dv`, proportional to the mean
/// width of `uK`: equal-weight average over the symmetric grid scaled by the
/// sphere surface area.
pub fn mean_width_transform(k: &ConvexBody, u: &[f64], grid: &DirectionGrid) -> Result<f64> {
    let n = k.dim();
    vecs::check_dim(n, u.len())?;
    vecs::check_dim(n, grid.dim)?;
    let uk = k.hadamard(u)?;
    let mut acc = 0.0;
    for v in &grid.points {
        acc += uk.support(v)?;
    }
    Ok(acc / grid.len() as f64 * sphere_surface_area(n) / n as f64)
}

/// Sampled matrix of the K-transform on a fixed atom set, with its singular
/// spectrum, numerical rank, and re-verified kernel.
#[derive(Clone, Debug)]
pub struct TransformMatrix {
    /// Row directions (one representative per antipodal grid pair).
    pub directions: Vec<Vec<f64>>,
    /// Column atoms (one representative per antipodal pair of the measure).
    pub atoms: Vec<Vec<f64>>,
    /// `entries[k][j] = h(v_j K, u_k)`.
    pub entries: Vec<Vec<f64>>,
    pub singular_values: Vec<f64>,
    pub rank: usize,
    pub rank_tol: f64,
    /// Orthonormal basis of the numerical kernel.
    pub kernel: Vec<Vec<f64>>,
    /// Max residual of kernel vectors re-evaluated on an independent grid.
    pub kernel_residual: f64,
}

/// JSON summary of a [`TransformMatrix`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransformSummary {
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub sigma_max: f64,
    pub sigma_min: f64,
    pub residual: f64,
    pub rank_tol: f64,
}

impl TransformMatrix {
    pub fn summary(&self) -> TransformSummary {
        TransformSummary {
            rows: self.directions.len(),
            cols: self.atoms.len(),
            rank: self.rank,
            kernel_dim: self.kernel.len(),
            sigma_max: self.singular_values.first().copied().unwrap_or(0.0),
            sigma_min: self.singular_values.last().copied().unwrap_or(0.0),
            residual: self.kernel_residual,
            rank_tol: self.rank_tol,
        }
    }

    /// CSV dump: one row per direction, one column per atom, preceded by the
    /// direction coordinates.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let n = self.directions.first().map_or(0, |d| d.len());
        for i in 0..n {
            out.push_str(&format!("u{},", i + 1));
        }
        for j in 0..self.atoms.len() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&format!("atom{}", j + 1));
        }
        out.push('\n');
        for (dir, row) in self.directions.iter().zip(&self.entries) {
            for x in dir {
                out.push_str(&format!("{x},"));
            }
            out.push_str(
                &row.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(","),
            );
            out.push('\n');
        }
        out
    }
}

/// Numerical surrogate for K-transform injectivity on a finite atom set.
///
/// Builds `M[k][j] = h(v_j K, u_k)` over the grid representatives, computes
/// the SVD, counts singular values above `rank_tol · σ_max`, and re-verifies
/// every kernel vector on a fresh, independently seeded grid.
pub fn injectivity_probe(
    k: &ConvexBody,
    atoms: &[Vec<f64>],
    grid: &DirectionGrid,
    rank_tol: f64,
) -> Result<TransformMatrix> {
    let n = k.dim();
    vecs::check_dim(n, grid.dim)?;
    if atoms.is_empty() {
        return Err(Error::param("injectivity probe needs at least one atom"));
    }
    for v in atoms {
        vecs::check_dim(n, v.len())?;
    }
    if grid.len() < 2 * atoms.len() {
        return Err(Error::GridTooSmall { got: grid.len(), need: 2 * atoms.len() });
    }
    if !(rank_tol > 0.0) {
        return Err(Error::param("rank tolerance must be positive"));
    }

    let transformed: Vec<ConvexBody> =
        atoms.iter().map(|v| k.hadamard(v)).collect::<Result<_>>()?;
    let directions: Vec<Vec<f64>> = grid.representatives().cloned().collect();
    let mut entries = Vec::with_capacity(directions.len());
    for u in &directions {
        let mut row = Vec::with_capacity(atoms.len());
        for body in &transformed {
            row.push(body.support(u)?);
        }
        entries.push(row);
    }

    let mat = DMatrix::from_fn(directions.len(), atoms.len(), |r, c| entries[r][c]);
    let svd = mat.clone().svd(false, true);
    let mut singular_values: Vec<f64> = svd.singular_values.iter().copied().collect();
    singular_values.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let sigma_max = singular_values.first().copied().unwrap_or(0.0);
    let threshold = rank_tol * sigma_max;
    let rank = singular_values.iter().filter(|s| **s > threshold).count();

    // Right singular vectors for the trailing singular values span the kernel.
    let v_t = svd.v_t.expect("svd computed with v_t");
    let mut kernel = Vec::new();
    for (idx, s) in svd.singular_values.iter().enumerate() {
        if *s <= threshold {
            kernel.push(v_t.row(idx).iter().copied().collect::<Vec<f64>>());
        }
    }
    // nalgebra returns min(rows, cols) singular values; any extra columns
    // beyond that are kernel vectors too (rows < cols case).
    for idx in svd.singular_values.len()..atoms.len() {
        if idx < v_t.nrows() {
            kernel.push(v_t.row(idx).iter().copied().collect::<Vec<f64>>());
        }
    }

    let fresh = DirectionGrid::uniform_seeded(n, grid.len(), 0x5EED_F00D)?;
    let mut kernel_residual = 0.0_f64;
    for c in &kernel {
        for u in fresh.representatives() {
            let mut acc = 0.0;
            for (coef, body) in c.iter().zip(&transformed) {
                acc += coef * body.support(u)?;
            }
            kernel_residual = kernel_residual.max(acc.abs());
        }
    }

    Ok(TransformMatrix {
        directions,
        atoms: atoms.to_vec(),
        entries,
        singular_values,
        rank,
        rank_tol,
        kernel,
        kernel_residual,
    })
}
