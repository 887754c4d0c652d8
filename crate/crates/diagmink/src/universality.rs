//! Decision procedures: zonoid equivalence, the asymmetry condition,
//! unconditional and full D-universality, and the moment-based oracle that
//! cross-checks them.

use serde::{Deserialize, Serialize};

use crate::bodies::ConvexBody;
use crate::error::{Error, Result};
use crate::grid::DirectionGrid;
use crate::measures::DiscreteRandomVector;
use crate::vecs;
use crate::{CANONICAL_TOL, SAMPLED_TOL};

/// How equality of support functions is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EqMode {
    /// Exact when every operand reduces to a zonotope, otherwise sampled.
    Auto,
    /// Exact canonical-form comparison; errors if an operand is not a zonotope.
    Exact,
    /// Grid comparison with relative tolerance [`SAMPLED_TOL`]. Can only
    /// falsify equality; "equal" means "no witness found".
    Sampled,
}

/// Outcome of a yes/no support-function comparison.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Decision {
    pub holds: bool,
    /// Direction at which the two compared support functions differ, when
    /// one was located.
    pub witness: Option<Vec<f64>>,
    /// Whether the exact zonotope path decided the question.
    pub exact: bool,
}

/// A sign pattern `s ∈ {-1, 0, +1}^n` with its product over a subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPattern(pub Vec<i8>);

impl SignPattern {
    /// `σ(s) = Π_{j∈J} s_j`.
    pub fn sigma(&self, j_set: &[usize]) -> i8 {
        j_set.iter().map(|&j| self.0[j]).product()
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&s| s as f64).collect()
    }
}

/// All `2^m` full sign patterns over `m` slots.
pub fn sign_patterns(m: usize) -> Vec<SignPattern> {
    (0..(1u32 << m))
        .map(|mask| {
            SignPattern(
                (0..m)
                    .map(|i| if mask >> i & 1 == 1 { 1i8 } else { -1i8 })
                    .collect(),
            )
        })
        .collect()
}

fn sampled_grid(dim: usize) -> DirectionGrid {
    DirectionGrid::uniform_seeded(dim, 64 * dim * dim, 0xD1FF).expect("valid grid")
}

/// Decide `E|⟨u,ξ⟩| = E|⟨u,η⟩|` for all `u`.
///
/// Exact mode compares canonical forms of the two zonoids (always available
/// for finite-support laws); sampled mode scans a grid and reports the first
/// deviation beyond the relative tolerance. On inequality a direction where
/// the sides differ is returned.
pub fn zonoid_equivalent(
    xi: &DiscreteRandomVector,
    eta: &DiscreteRandomVector,
    mode: EqMode,
) -> Result<Decision> {
    vecs::check_dim(xi.dim, eta.dim)?;
    let za = ConvexBody::Zonotope(xi.zonoid());
    let zb = ConvexBody::Zonotope(eta.zonoid());
    let exact = mode != EqMode::Sampled;
    let equal = if exact {
        xi.zonoid().canonical_eq(&eta.zonoid(), CANONICAL_TOL)
    } else {
        let (dev, _, scale) = max_support_deviation(&za, &zb, &sampled_grid(xi.dim))?;
        dev <= SAMPLED_TOL * scale
    };
    if equal {
        return Ok(Decision { holds: true, witness: None, exact });
    }
    let (_, witness, _) = max_support_deviation(&za, &zb, &sampled_grid(xi.dim))?;
    Ok(Decision { holds: false, witness: Some(witness), exact })
}

fn max_support_deviation(
    a: &ConvexBody,
    b: &ConvexBody,
    grid: &DirectionGrid,
) -> Result<(f64, Vec<f64>, f64)> {
    let mut best = (f64::NEG_INFINITY, vec![0.0; a.dim()]);
    let mut scale = 1.0_f64;
    for u in grid.representatives() {
        let ha = a.support(u)?;
        let hb = b.support(u)?;
        scale = scale.max(ha.abs()).max(hb.abs());
        let dev = (ha - hb).abs();
        if dev > best.0 {
            best = (dev, u.clone());
        }
    }
    Ok((best.0, best.1, scale))
}

/// The asymmetry condition for `L_J`: whether the Minkowski sums of the
/// sign-reflected copies of the projection `L_J`, grouped by sign product,
/// differ. Always false for odd `|J|`.
pub fn as_condition(l: &ConvexBody, j_set: &[usize], mode: EqMode) -> Result<Decision> {
    if j_set.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let n = l.dim();
    for &j in j_set {
        if j >= n {
            return Err(Error::param(format!("index {j} out of range for dim {n}")));
        }
    }
    if j_set.len() % 2 == 1 {
        return Ok(Decision { holds: false, witness: None, exact: true });
    }
    let lj = l.project(j_set)?;
    let m = j_set.len();
    let full: Vec<usize> = (0..m).collect();
    let mut plus_parts: Vec<ConvexBody> = Vec::new();
    let mut minus_parts: Vec<ConvexBody> = Vec::new();
    for s in sign_patterns(m) {
        let reflected = lj.hadamard(&s.as_f64())?;
        if s.sigma(&full) == 1 {
            plus_parts.push(reflected);
        } else {
            minus_parts.push(reflected);
        }
    }
    let plus = ConvexBody::MinkSum { parts: plus_parts };
    let minus = ConvexBody::MinkSum { parts: minus_parts };

    let exact_available = plus.as_zonotope().is_some() && minus.as_zonotope().is_some();
    let use_exact = match mode {
        EqMode::Exact => {
            if !exact_available {
                return Err(Error::Unsupported {
                    op: "as_condition",
                    detail: "exact mode requires bodies reducible to zonotopes".to_string(),
                });
            }
            true
        }
        EqMode::Auto => exact_available,
        EqMode::Sampled => false,
    };

    let grid = sampled_grid(m);
    if use_exact {
        let zp = plus.as_zonotope().unwrap();
        let zm = minus.as_zonotope().unwrap();
        if zp.canonical_eq(&zm, CANONICAL_TOL) {
            Ok(Decision { holds: false, witness: None, exact: true })
        } else {
            let (_, witness, _) = max_support_deviation(&plus, &minus, &grid)?;
            Ok(Decision { holds: true, witness: Some(witness), exact: true })
        }
    } else {
        let (dev, witness, scale) = max_support_deviation(&plus, &minus, &grid)?;
        if dev > SAMPLED_TOL * scale {
            Ok(Decision { holds: true, witness: Some(witness), exact: false })
        } else {
            // Sampling cannot certify equality; this is "no witness found".
            Ok(Decision { holds: false, witness: None, exact: false })
        }
    }
}

/// Whether `h(K, s∘u) = h(K, u)` for all sign vectors, i.e. `K` is symmetric
/// with respect to every coordinate hyperplane.
pub fn is_unconditional(k: &ConvexBody, mode: EqMode) -> Result<bool> {
    let n = k.dim();
    let exact_available = k.as_zonotope().is_some();
    let use_exact = match mode {
        EqMode::Exact => {
            if !exact_available {
                return Err(Error::Unsupported {
                    op: "is_unconditional",
                    detail: "exact mode requires a body reducible to a zonotope".to_string(),
                });
            }
            true
        }
        EqMode::Auto => exact_available,
        EqMode::Sampled => false,
    };
    if use_exact {
        let z = k.as_zonotope().unwrap();
        for s in sign_patterns(n) {
            if !z.hadamard(&s.as_f64()).canonical_eq(&z, CANONICAL_TOL) {
                return Ok(false);
            }
        }
        Ok(true)
    } else {
        let grid = sampled_grid(n);
        for s in sign_patterns(n) {
            let sv = s.as_f64();
            for u in grid.representatives() {
                let h = k.support(u)?;
                let hs = k.support(&vecs::hadamard(&sv, u))?;
                if (h - hs).abs() > SAMPLED_TOL * (1.0 + h.abs().max(hs.abs())) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// One asymmetry check inside a universality report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AsCheckEntry {
    /// 1-based coordinate indices, matching the CLI convention.
    pub j: Vec<usize>,
    pub holds: bool,
}

/// Outcome of a universality decision.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniversalityReport {
    pub verdict: bool,
    /// First even subset failing the asymmetry condition (1-based indices).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_j: Option<Vec<usize>>,
    /// Coordinate axis (1-based) whose support set is not a singleton.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_axis: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
    pub checks: Vec<AsCheckEntry>,
    pub note: String,
}

/// Sufficient condition for unconditional D-universality of a generalised
/// zonoid: every coordinate support set `F(K, e_i)` is a singleton
/// (equivalently, no representing mass on `S_0`).
///
/// The criterion is sufficiency-only, so a failed check is reported as
/// "sufficient condition fails", never as a converse claim.
pub fn unconditionally_d_universal(k: &ConvexBody) -> Result<UniversalityReport> {
    if k.genzonoid_atoms().is_none() {
        return Err(Error::Unsupported {
            op: "unconditionally_d_universal",
            detail: "expects a generalised zonoid given by its representing atoms".to_string(),
        });
    }
    let n = k.dim();
    for i in 0..n {
        if !k.support_set_singleton(i)? {
            return Ok(UniversalityReport {
                verdict: false,
                failing_j: None,
                failing_axis: Some(i + 1),
                witness: None,
                checks: vec![],
                note: format!(
                    "sufficient condition fails: support set at e_{} is not a singleton",
                    i + 1
                ),
            });
        }
    }
    Ok(UniversalityReport {
        verdict: true,
        failing_j: None,
        failing_axis: None,
        witness: None,
        checks: vec![],
        note: "sufficient condition holds: all coordinate support sets are singletons"
            .to_string(),
    })
}

/// Full D-universality of a generalised zonoid with singleton coordinate
/// support sets: holds iff every projection `K_J` with `|J|` even satisfies
/// the asymmetry condition. `2^{n-1}` checks; intended for `n ≤ 10`.
pub fn d_universal(k: &ConvexBody) -> Result<UniversalityReport> {
    if k.genzonoid_atoms().is_none() {
        return Err(Error::Unsupported {
            op: "d_universal",
            detail: "expects a generalised zonoid given by its representing atoms".to_string(),
        });
    }
    let n = k.dim();
    for i in 0..n {
        if !k.support_set_singleton(i)? {
            return Err(Error::Precondition(format!(
                "support set at e_{} is not a singleton",
                i + 1
            )));
        }
    }

    let mut checks = Vec::new();
    let mut failing: Option<(Vec<usize>, Option<Vec<f64>>)> = None;
    for size in (2..=n).step_by(2) {
        for j_set in subsets_of_size(n, size) {
            let decision = as_condition(k, &j_set, EqMode::Auto)?;
            let one_based: Vec<usize> = j_set.iter().map(|j| j + 1).collect();
            checks.push(AsCheckEntry { j: one_based.clone(), holds: decision.holds });
            if !decision.holds && failing.is_none() {
                failing = Some((one_based, decision.witness));
            }
        }
    }
    Ok(match failing {
        None => UniversalityReport {
            verdict: true,
            failing_j: None,
            failing_axis: None,
            witness: None,
            checks,
            note: "asymmetry condition holds for every even-cardinality subset".to_string(),
        },
        Some((j, witness)) => UniversalityReport {
            verdict: false,
            failing_j: Some(j.clone()),
            failing_axis: None,
            witness,
            checks,
            note: format!("asymmetry condition fails for J = {j:?}"),
        },
    })
}

/// All 0-based subsets of `{0..n-1}` of the given size, in lexicographic
/// order (deterministic "first failing J").
pub(crate) fn subsets_of_size(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(
        start: usize,
        n: usize,
        size: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, size, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    rec(0, n, size, &mut current, &mut out);
    out
}

/// Independent oracle for zonoid equivalence of two symmetric laws: checks
/// the sign-conditioned moment identity for every `J ⊆ E ⊆ {1..n}` over a
/// barycentric grid of `α` in the relative interior of the simplex `Δ_E`.
///
/// `depth` is the barycentric lattice depth (default 4); it is raised to
/// `|E|` when needed so every simplex contributes interior points.
pub fn moment_equivalence_oracle(
    xi: &DiscreteRandomVector,
    eta: &DiscreteRandomVector,
    depth: usize,
) -> Result<bool> {
    vecs::check_dim(xi.dim, eta.dim)?;
    if !xi.verify_symmetric() || !eta.verify_symmetric() {
        return Err(Error::Precondition(
            "moment oracle requires symmetric laws".to_string(),
        ));
    }
    let n = xi.dim;
    for e_size in 1..=n {
        for e_set in subsets_of_size(n, e_size) {
            let d = depth.max(e_size).max(1);
            for alpha_e in compositions(d, e_size) {
                let mut alpha = vec![0.0; n];
                for (&idx, &k) in e_set.iter().zip(&alpha_e) {
                    alpha[idx] = k as f64 / d as f64;
                }
                for j_size in 0..=e_size {
                    for j_rel in subsets_of_size(e_size, j_size) {
                        let j_set: Vec<usize> = j_rel.iter().map(|&r| e_set[r]).collect();
                        let a = xi.moment_f(&alpha, &j_set, &e_set)?;
                        let b = eta.moment_f(&alpha, &j_set, &e_set)?;
                        if (a - b).abs() > 1e-9 * 1.0_f64.max(a.abs()).max(b.abs()) {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Compositions of `total` into `parts` strictly positive integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn rec(
        remaining: usize,
        parts_left: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts_left == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for k in 1..=(remaining + 1 - parts_left) {
            current.push(k);
            rec(remaining - k, parts_left - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    if parts >= 1 && total >= parts {
        rec(total, parts, &mut current, &mut out);
    }
    out
}

/// Both sides of the segment-summand identity for `K = K_0 + w B_∞`:
/// `E h(u(K_0 + wB_∞), ξ)` and `E h(uK_0, ξ) + Σ_i w_i |u_i| E|ξ_i|`.
pub fn segment_summand_identity(
    k0: &ConvexBody,
    w: &[f64],
    xi: &DiscreteRandomVector,
    u: &[f64],
) -> Result<(f64, f64)> {
    let n = k0.dim();
    vecs::check_dim(n, w.len())?;
    vecs::check_dim(n, u.len())?;
    vecs::check_dim(n, xi.dim)?;
    if w.iter().any(|x| *x < 0.0) {
        return Err(Error::param("segment weights must be nonnegative"));
    }
    let box_part = ConvexBody::lp_ball(n, f64::INFINITY)?.hadamard(w)?;
    let k = ConvexBody::MinkSum { parts: vec![k0.clone(), box_part] };
    let lhs = xi.expected_support(&k, u)?;
    let mut rhs = xi.expected_support(k0, u)?;
    for i in 0..n {
        rhs += w[i] * u[i].abs() * xi.mean_abs_coord(i);
    }
    Ok((lhs, rhs))
}
