//! Origin-symmetric convex bodies and their support functions.
//!
//! The [`ConvexBody`] type is closed under the constructions used throughout
//! the crate: diagonal (Hadamard) transforms, Minkowski sums, nonnegative
//! scaling, and coordinate projections. Zonotopes additionally admit an exact
//! canonical form, which is the backend for every exact equality decision.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::SphereAtom;
use crate::vecs;
use crate::ZERO_TOL;

/// Serde adapter for exponents that may be infinite (`"inf"` in JSON,
/// since JSON has no literal for infinity).
pub(crate) mod exp_serde {
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
        if x.is_infinite() {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*x)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(x),
            Raw::Str(s) if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") => {
                Ok(f64::INFINITY)
            }
            Raw::Str(s) => Err(de::Error::custom(format!("expected number or \"inf\", got {s:?}"))),
        }
    }
}

/// Origin-symmetric zonotope `Σ_j [-g_j, g_j]` encoded by its generators.
///
/// Scalar weights of summands are folded into generator length, so one
/// generator list determines the body exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Zonotope {
    pub dim: usize,
    pub generators: Vec<Vec<f64>>,
}

impl Zonotope {
    pub fn new(dim: usize, generators: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::param("zonotope dimension must be at least 1"));
        }
        for g in &generators {
            vecs::check_dim(dim, g.len())?;
        }
        Ok(Zonotope { dim, generators })
    }

    /// The unit segment `I = [-(1,…,1), (1,…,1)]`.
    pub fn segment(dim: usize) -> Self {
        Zonotope { dim, generators: vec![vec![1.0; dim]] }
    }

    pub fn support(&self, u: &[f64]) -> f64 {
        self.generators.iter().map(|g| vecs::dot(g, u).abs()).sum()
    }

    /// Diagonal transform: rewrites generators `g_j ↦ u ∘ g_j` (exact).
    pub fn hadamard(&self, u: &[f64]) -> Zonotope {
        Zonotope {
            dim: self.dim,
            generators: self.generators.iter().map(|g| vecs::hadamard(u, g)).collect(),
        }
    }

    pub fn scale(&self, c: f64) -> Zonotope {
        self.hadamard(&vec![c; self.dim])
    }

    /// Minkowski sum: generator lists concatenate.
    pub fn minkowski_sum(&self, other: &Zonotope) -> Result<Zonotope> {
        vecs::check_dim(self.dim, other.dim)?;
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        Ok(Zonotope { dim: self.dim, generators })
    }

    pub fn project(&self, coords: &[usize]) -> Zonotope {
        Zonotope {
            dim: coords.len(),
            generators: self
                .generators
                .iter()
                .map(|g| coords.iter().map(|&j| g[j]).collect())
                .collect(),
        }
    }

    /// Canonical form: zero generators dropped, signs normalized so the first
    /// nonzero coordinate is positive, parallel generators merged (lengths add
    /// along the shared direction), result sorted lexicographically.
    ///
    /// Two zonotopes are equal as convex bodies iff their canonical forms
    /// match coordinatewise within `tol`.
    pub fn canonical(&self, tol: f64) -> Zonotope {
        let mut dirs: Vec<(Vec<f64>, f64)> = Vec::new();
        for g in &self.generators {
            let len = vecs::norm2(g);
            if len <= tol {
                continue;
            }
            let mut d = vecs::scale(g, 1.0 / len);
            if let Some(first) = d.iter().find(|x| x.abs() > ZERO_TOL) {
                if *first < 0.0 {
                    d = vecs::neg(&d);
                }
            }
            dirs.push((d, len));
        }

        // Union-find merge of near-parallel directions; O(m^2) is fine at the
        // generator counts this crate sees.
        let m = dirs.len();
        let mut root: Vec<usize> = (0..m).collect();
        fn find(root: &mut Vec<usize>, i: usize) -> usize {
            let mut i = i;
            while root[i] != i {
                root[i] = root[root[i]];
                i = root[i];
            }
            i
        }
        for i in 0..m {
            for j in (i + 1)..m {
                let (ri, rj) = (find(&mut root, i), find(&mut root, j));
                if ri == rj {
                    continue;
                }
                let diff: f64 = dirs[i]
                    .0
                    .iter()
                    .zip(&dirs[j].0)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt();
                if diff <= tol {
                    root[rj] = ri;
                }
            }
        }
        let mut clusters: Vec<(Vec<f64>, f64)> = Vec::new();
        let mut cluster_of = vec![usize::MAX; m];
        for i in 0..m {
            let r = find(&mut root, i);
            if cluster_of[r] == usize::MAX {
                cluster_of[r] = clusters.len();
                clusters.push((dirs[i].0.clone(), 0.0));
            }
            let c = cluster_of[r];
            // Keep the direction of the longest member as the representative.
            if dirs[i].1 > clusters[c].1 && i != r {
                clusters[c].0 = dirs[i].0.clone();
            }
            clusters[c].1 += dirs[i].1;
        }

        let mut generators: Vec<Vec<f64>> =
            clusters.iter().map(|(d, len)| vecs::scale(d, *len)).collect();
        generators.sort_by(|a, b| vecs::lex_cmp(a, b));
        Zonotope { dim: self.dim, generators }
    }

    /// Exact equality of convex bodies via canonical forms.
    pub fn canonical_eq(&self, other: &Zonotope, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let a = self.canonical(tol);
        let b = other.canonical(tol);
        a.generators.len() == b.generators.len()
            && a.generators
                .iter()
                .zip(&b.generators)
                .all(|(x, y)| x.iter().zip(y).all(|(p, q)| (p - q).abs() <= tol))
    }

    /// Vertices of a 2-D zonotope in counterclockwise order.
    pub fn vertices_2d(&self) -> Result<Vec<[f64; 2]>> {
        vecs::check_dim(2, self.dim)?;
        let z = self.canonical(crate::CANONICAL_TOL);
        if z.generators.is_empty() {
            return Ok(vec![[0.0, 0.0]]);
        }
        // Normalize each generator into the upper half-plane and sort by angle;
        // the boundary is then the edge sequence 2g_1,…,2g_m,-2g_1,…,-2g_m
        // starting from -Σ g_j.
        let mut gens: Vec<[f64; 2]> = z
            .generators
            .iter()
            .map(|g| {
                let v = [g[0], g[1]];
                if v[1] < 0.0 || (v[1] == 0.0 && v[0] < 0.0) {
                    [-v[0], -v[1]]
                } else {
                    v
                }
            })
            .collect();
        gens.sort_by(|a, b| {
            let ta = a[1].atan2(a[0]);
            let tb = b[1].atan2(b[0]);
            ta.partial_cmp(&tb).unwrap()
        });
        let start = gens.iter().fold([0.0, 0.0], |acc, g| [acc[0] - g[0], acc[1] - g[1]]);
        let mut vertices = Vec::with_capacity(2 * gens.len());
        let mut p = start;
        vertices.push(p);
        for g in &gens {
            p = [p[0] + 2.0 * g[0], p[1] + 2.0 * g[1]];
            vertices.push(p);
        }
        for g in &gens[..gens.len() - 1] {
            p = [p[0] - 2.0 * g[0], p[1] - 2.0 * g[1]];
            vertices.push(p);
        }
        Ok(vertices)
    }
}

/// Canonical form of a zonotope; see [`Zonotope::canonical`].
pub fn canonical_zonotope(z: &Zonotope, tol: f64) -> Zonotope {
    z.canonical(tol)
}

/// Tagged union of the body representations the crate works with. All
/// variants are origin-symmetric by construction.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum ConvexBody {
    /// Minkowski sum of segments `[-g_j, g_j]`.
    #[serde(rename = "zonotope")]
    Zonotope(Zonotope),
    /// Body with support function `Σ_j w_j |⟨u, v_j⟩|` for signed weights;
    /// the atoms are its representing measure.
    #[serde(rename = "genzonoid")]
    GenZonoid { dim: usize, atoms: Vec<SphereAtom> },
    /// Unit `ℓ_q`-ball.
    #[serde(rename = "lpball")]
    LpBall {
        dim: usize,
        #[serde(with = "exp_serde")]
        q: f64,
    },
    /// Hadamard image `scale ∘ K`.
    #[serde(rename = "diag")]
    DiagScaled { scale: Vec<f64>, inner: Box<ConvexBody> },
    /// Minkowski sum of parts.
    #[serde(rename = "minksum")]
    MinkSum { parts: Vec<ConvexBody> },
    /// Nonnegative scalar multiple.
    #[serde(rename = "scaled")]
    Scaled { c: f64, inner: Box<ConvexBody> },
    /// Origin-symmetric convex polygon, vertices in counterclockwise order.
    #[serde(rename = "polygon2d")]
    Polygon2D { vertices: Vec<[f64; 2]> },
}

impl ConvexBody {
    /// The unit segment `I` with end-points `±(1,…,1)`.
    pub fn segment(dim: usize) -> ConvexBody {
        ConvexBody::Zonotope(Zonotope::segment(dim))
    }

    pub fn lp_ball(dim: usize, q: f64) -> Result<ConvexBody> {
        if !(q >= 1.0) {
            return Err(Error::param(format!("lpball exponent q={q} outside [1, inf]")));
        }
        if dim == 0 {
            return Err(Error::param("lpball dimension must be at least 1"));
        }
        Ok(ConvexBody::LpBall { dim, q })
    }

    pub fn scaled(c: f64, inner: ConvexBody) -> Result<ConvexBody> {
        if !(c >= 0.0) {
            return Err(Error::param(format!("scale factor c={c} must be nonnegative")));
        }
        Ok(ConvexBody::Scaled { c, inner: Box::new(inner) })
    }

    pub fn dim(&self) -> usize {
        match self {
            ConvexBody::Zonotope(z) => z.dim,
            ConvexBody::GenZonoid { dim, .. } => *dim,
            ConvexBody::LpBall { dim, .. } => *dim,
            ConvexBody::DiagScaled { scale, .. } => scale.len(),
            ConvexBody::MinkSum { parts } => parts.first().map_or(0, |p| p.dim()),
            ConvexBody::Scaled { inner, .. } => inner.dim(),
            ConvexBody::Polygon2D { .. } => 2,
        }
    }

    /// Support function `h(K, u) = sup{⟨u, x⟩ : x ∈ K}`.
    pub fn support(&self, u: &[f64]) -> Result<f64> {
        vecs::check_dim(self.dim(), u.len())?;
        match self {
            ConvexBody::Zonotope(z) => Ok(z.support(u)),
            ConvexBody::GenZonoid { atoms, .. } => {
                Ok(atoms.iter().map(|a| a.w * vecs::dot(&a.v, u).abs()).sum())
            }
            ConvexBody::LpBall { q, .. } => {
                let p = vecs::conjugate_exponent(*q)?;
                Ok(vecs::norm_p(u, p))
            }
            ConvexBody::DiagScaled { scale, inner } => inner.support(&vecs::hadamard(scale, u)),
            ConvexBody::MinkSum { parts } => {
                if parts.is_empty() {
                    return Err(Error::param("minksum requires at least one part"));
                }
                parts.iter().map(|p| p.support(u)).sum()
            }
            ConvexBody::Scaled { c, inner } => {
                if !(*c >= 0.0) {
                    return Err(Error::param("scale factor must be nonnegative"));
                }
                Ok(c * inner.support(u)?)
            }
            ConvexBody::Polygon2D { vertices } => Ok(vertices
                .iter()
                .map(|v| u[0] * v[0] + u[1] * v[1])
                .fold(f64::NEG_INFINITY, f64::max)),
        }
    }

    /// Diagonal transform `u ∘ K`. Zonotopes are rewritten generator-wise
    /// (exact); every other variant is wrapped.
    pub fn hadamard(&self, u: &[f64]) -> Result<ConvexBody> {
        vecs::check_dim(self.dim(), u.len())?;
        Ok(match self {
            ConvexBody::Zonotope(z) => ConvexBody::Zonotope(z.hadamard(u)),
            other => {
                ConvexBody::DiagScaled { scale: u.to_vec(), inner: Box::new(other.clone()) }
            }
        })
    }

    /// Projection onto the coordinate subspace indexed by `coords` (0-based).
    ///
    /// The result lives in `R^{|coords|}`; its support at `u` equals the
    /// support of `self` at the zero-padded embedding of `u`.
    pub fn project(&self, coords: &[usize]) -> Result<ConvexBody> {
        if coords.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        let n = self.dim();
        for &j in coords {
            if j >= n {
                return Err(Error::param(format!("projection index {j} out of range for dim {n}")));
            }
        }
        Ok(match self {
            ConvexBody::Zonotope(z) => ConvexBody::Zonotope(z.project(coords)),
            ConvexBody::GenZonoid { atoms, .. } => {
                let mut out = Vec::new();
                for a in atoms {
                    let vj: Vec<f64> = coords.iter().map(|&j| a.v[j]).collect();
                    let len = vecs::norm2(&vj);
                    if len <= ZERO_TOL {
                        continue;
                    }
                    out.push(SphereAtom { v: vecs::scale(&vj, 1.0 / len), w: a.w * len });
                }
                ConvexBody::GenZonoid { dim: coords.len(), atoms: out }
            }
            ConvexBody::LpBall { q, .. } => ConvexBody::LpBall { dim: coords.len(), q: *q },
            ConvexBody::DiagScaled { scale, inner } => ConvexBody::DiagScaled {
                scale: coords.iter().map(|&j| scale[j]).collect(),
                inner: Box::new(inner.project(coords)?),
            },
            ConvexBody::MinkSum { parts } => ConvexBody::MinkSum {
                parts: parts.iter().map(|p| p.project(coords)).collect::<Result<_>>()?,
            },
            ConvexBody::Scaled { c, inner } => {
                ConvexBody::Scaled { c: *c, inner: Box::new(inner.project(coords)?) }
            }
            ConvexBody::Polygon2D { vertices } => {
                if coords.len() == 2 && coords[0] == 0 && coords[1] == 1 {
                    ConvexBody::Polygon2D { vertices: vertices.clone() }
                } else if coords.len() == 1 {
                    // 1-D shadow of a symmetric polygon is the segment [-h, h].
                    let j = coords[0];
                    let h = vertices.iter().map(|v| v[j]).fold(f64::NEG_INFINITY, f64::max);
                    ConvexBody::Zonotope(Zonotope { dim: 1, generators: vec![vec![h]] })
                } else {
                    return Err(Error::param(
                        "polygon projection supports {0}, {1} or {0,1} only".to_string(),
                    ));
                }
            }
        })
    }

    /// Whether the support set `F(K, e_i)` (0-based `i`) is a singleton.
    ///
    /// For zonotopes and generalised zonoids this holds iff no representing
    /// mass sits on the hyperplane `{v_i = 0}`; for `ℓ_q`-balls iff `q < ∞`.
    pub fn support_set_singleton(&self, i: usize) -> Result<bool> {
        let n = self.dim();
        if i >= n {
            return Err(Error::param(format!("coordinate index {i} out of range for dim {n}")));
        }
        match self {
            ConvexBody::Zonotope(z) => {
                Ok(z.generators.iter().all(|g| g[i].abs() > ZERO_TOL))
            }
            ConvexBody::GenZonoid { atoms, .. } => Ok(atoms
                .iter()
                .filter(|a| a.w.abs() > 1e-15)
                .all(|a| a.v[i].abs() > ZERO_TOL)),
            ConvexBody::LpBall { q, .. } => Ok(q.is_finite()),
            other => match other.as_zonotope() {
                Some(z) => Ok(z.generators.iter().all(|g| g[i].abs() > ZERO_TOL)),
                None => Err(Error::Unsupported {
                    op: "support_set_singleton",
                    detail: "expected zonotope, genzonoid, lpball, or a body reducible to a zonotope"
                        .to_string(),
                }),
            },
        }
    }

    /// Try to flatten this body into a single zonotope. Succeeds for
    /// zonotopes, nonnegative generalised zonoids, boxes, 2-D polygons and
    /// any diagonal transform / Minkowski sum / scaling of those.
    pub fn as_zonotope(&self) -> Option<Zonotope> {
        match self {
            ConvexBody::Zonotope(z) => Some(z.clone()),
            ConvexBody::GenZonoid { dim, atoms } => {
                if atoms.iter().any(|a| a.w < 0.0) {
                    return None;
                }
                Some(Zonotope {
                    dim: *dim,
                    generators: atoms.iter().map(|a| vecs::scale(&a.v, a.w)).collect(),
                })
            }
            ConvexBody::LpBall { dim, q } => {
                if *dim == 1 {
                    return Some(Zonotope { dim: 1, generators: vec![vec![1.0]] });
                }
                if q.is_infinite() {
                    // The box is the sum of the axis segments.
                    let generators = (0..*dim)
                        .map(|i| {
                            let mut e = vec![0.0; *dim];
                            e[i] = 1.0;
                            e
                        })
                        .collect();
                    return Some(Zonotope { dim: *dim, generators });
                }
                if *q == 1.0 && *dim == 2 {
                    // The 2-D cross-polytope is the rotated square.
                    return Some(Zonotope {
                        dim: 2,
                        generators: vec![vec![0.5, 0.5], vec![0.5, -0.5]],
                    });
                }
                None
            }
            ConvexBody::DiagScaled { scale, inner } => {
                Some(inner.as_zonotope()?.hadamard(scale))
            }
            ConvexBody::MinkSum { parts } => {
                let mut acc: Option<Zonotope> = None;
                for p in parts {
                    let z = p.as_zonotope()?;
                    acc = Some(match acc {
                        None => z,
                        Some(a) => a.minkowski_sum(&z).ok()?,
                    });
                }
                acc
            }
            ConvexBody::Scaled { c, inner } => Some(inner.as_zonotope()?.scale(*c)),
            ConvexBody::Polygon2D { vertices } => polygon_to_zonotope(vertices),
        }
    }

    /// Representing atoms of this body viewed as a generalised zonoid, with
    /// one atom per antipodal direction pair.
    pub fn genzonoid_atoms(&self) -> Option<Vec<SphereAtom>> {
        match self {
            ConvexBody::GenZonoid { atoms, .. } => Some(atoms.clone()),
            other => {
                let z = other.as_zonotope()?;
                Some(
                    z.generators
                        .iter()
                        .filter_map(|g| {
                            let len = vecs::norm2(g);
                            if len <= ZERO_TOL {
                                None
                            } else {
                                Some(SphereAtom { v: vecs::scale(g, 1.0 / len), w: len })
                            }
                        })
                        .collect(),
                )
            }
        }
    }

    /// Structural validation. Returns non-fatal warnings (e.g. a sampled
    /// subadditivity failure for signed generalised-zonoid weights, which
    /// cannot be certified either way from finitely many directions).
    pub fn validate(&self) -> Result<Vec<String>> {
        let mut warnings = Vec::new();
        self.validate_into(&mut warnings)?;
        Ok(warnings)
    }

    fn validate_into(&self, warnings: &mut Vec<String>) -> Result<()> {
        match self {
            ConvexBody::Zonotope(z) => {
                if z.dim == 0 {
                    return Err(Error::input("zonotope dimension must be at least 1"));
                }
                for g in &z.generators {
                    vecs::check_dim(z.dim, g.len())?;
                }
            }
            ConvexBody::GenZonoid { dim, atoms } => {
                for a in atoms {
                    vecs::check_dim(*dim, a.v.len())?;
                    if (vecs::norm2(&a.v) - 1.0).abs() > ZERO_TOL {
                        return Err(Error::input(format!(
                            "genzonoid atom direction {:?} is not unit within 1e-12",
                            a.v
                        )));
                    }
                }
                if atoms.iter().any(|a| a.w < 0.0) && !self.sampled_subadditive() {
                    warnings.push(
                        "genzonoid with signed weights failed a sampled subadditivity check; \
                         the atom list may not define a support function"
                            .to_string(),
                    );
                }
            }
            ConvexBody::LpBall { dim, q } => {
                if *dim == 0 {
                    return Err(Error::input("lpball dimension must be at least 1"));
                }
                if !(*q >= 1.0) {
                    return Err(Error::input(format!("lpball exponent q={q} outside [1, inf]")));
                }
            }
            ConvexBody::DiagScaled { scale, inner } => {
                vecs::check_dim(inner.dim(), scale.len())?;
                inner.validate_into(warnings)?;
            }
            ConvexBody::MinkSum { parts } => {
                if parts.is_empty() {
                    return Err(Error::input("minksum requires at least one part"));
                }
                let n = parts[0].dim();
                for p in parts {
                    vecs::check_dim(n, p.dim())?;
                    p.validate_into(warnings)?;
                }
            }
            ConvexBody::Scaled { c, inner } => {
                if !(*c >= 0.0) {
                    return Err(Error::input(format!("scale factor c={c} must be nonnegative")));
                }
                inner.validate_into(warnings)?;
            }
            ConvexBody::Polygon2D { vertices } => validate_polygon(vertices)?,
        }
        Ok(())
    }

    fn sampled_subadditive(&self) -> bool {
        let n = self.dim();
        let mut rng = crate::seeded_rng(0x5AB5);
        use rand::Rng;
        for _ in 0..200 {
            let u: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            let v: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            let w: Vec<f64> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
            let (hu, hv, hw) = match (self.support(&u), self.support(&v), self.support(&w)) {
                (Ok(a), Ok(b), Ok(c)) => (a, b, c),
                _ => return true,
            };
            if hw > hu + hv + 1e-9 * (1.0 + hu.abs() + hv.abs()) {
                return false;
            }
        }
        true
    }
}

/// `u ∘ K`; free-function form of [`ConvexBody::hadamard`].
pub fn hadamard(u: &[f64], k: &ConvexBody) -> Result<ConvexBody> {
    k.hadamard(u)
}

/// The diagonal body `c_1 v_1 K + ⋯ + c_m v_m K` as a Minkowski sum of
/// scaled diagonal transforms.
pub fn diag_body(terms: &[(f64, Vec<f64>)], k: &ConvexBody) -> Result<ConvexBody> {
    if terms.is_empty() {
        return Err(Error::param("diag_body requires at least one term"));
    }
    let mut parts = Vec::with_capacity(terms.len());
    for (c, v) in terms {
        if !(*c >= 0.0) {
            return Err(Error::param(format!("diag_body coefficient {c} must be nonnegative")));
        }
        vecs::check_dim(k.dim(), v.len())?;
        parts.push(ConvexBody::Scaled {
            c: *c,
            inner: Box::new(k.hadamard(v)?),
        });
    }
    Ok(ConvexBody::MinkSum { parts })
}

fn validate_polygon(vertices: &[[f64; 2]]) -> Result<()> {
    if vertices.len() < 2 {
        return Err(Error::input("polygon needs at least 2 vertices"));
    }
    if vertices.len() % 2 != 0 {
        return Err(Error::input("origin-symmetric polygon must have an even vertex count"));
    }
    let m = vertices.len();
    // Strict counterclockwise order: positive turns, positive total area.
    let mut area2 = 0.0;
    for i in 0..m {
        let a = vertices[i];
        let b = vertices[(i + 1) % m];
        let c = vertices[(i + 2) % m];
        let cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        if cross < -ZERO_TOL {
            return Err(Error::input(
                "polygon vertices must be in counterclockwise convex order".to_string(),
            ));
        }
        area2 += a[0] * b[1] - a[1] * b[0];
    }
    if area2 <= 0.0 && m > 2 {
        return Err(Error::input("polygon must have positive area in CCW order"));
    }
    // Central symmetry: x ↦ -x permutes the vertex set. For a convex CCW list
    // this means vertex i + m/2 is the antipode of vertex i.
    let half = m / 2;
    for i in 0..half {
        let a = vertices[i];
        let b = vertices[i + half];
        if (a[0] + b[0]).abs() > 1e-9 || (a[1] + b[1]).abs() > 1e-9 {
            return Err(Error::input(
                "polygon vertex set is not invariant under x ↦ -x".to_string(),
            ));
        }
    }
    Ok(())
}

/// Every origin-symmetric convex polygon is a zonotope: half of its edge
/// vectors, each halved, generate it.
fn polygon_to_zonotope(vertices: &[[f64; 2]]) -> Option<Zonotope> {
    if validate_polygon(vertices).is_err() {
        return None;
    }
    let half = vertices.len() / 2;
    let mut generators = Vec::with_capacity(half);
    for i in 0..half {
        let a = vertices[i];
        let b = vertices[(i + 1) % vertices.len()];
        generators.push(vec![(b[0] - a[0]) / 2.0, (b[1] - a[1]) / 2.0]);
    }
    Some(Zonotope { dim: 2, generators })
}
