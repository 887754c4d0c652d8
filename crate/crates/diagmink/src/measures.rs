//! Discrete signed measures on the sphere and finitely supported random
//! vectors, together with the moment functionals connecting them.

use serde::{Deserialize, Serialize};

use crate::bodies::{ConvexBody, Zonotope};
use crate::error::{Error, Result};
use crate::vecs;
use crate::ZERO_TOL;

/// Weighted direction on the unit sphere.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphereAtom {
    pub v: Vec<f64>,
    pub w: f64,
}

/// Finite discrete signed measure on the unit sphere.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SphereMeasure {
    pub dim: usize,
    pub atoms: Vec<SphereAtom>,
    /// Certifies invariance under `v ↦ -v`; set by [`SphereMeasure::evenize`]
    /// or verified by atom pairing.
    #[serde(default)]
    pub even: bool,
}

/// `v` lies on `S_0`, i.e. some coordinate vanishes (within `1e-12`).
pub fn on_s0(v: &[f64]) -> bool {
    v.iter().any(|x| x.abs() <= ZERO_TOL)
}

/// `v` lies in the closed positive orthant part of the sphere `S_+`.
pub fn in_splus(v: &[f64]) -> bool {
    v.iter().all(|x| *x >= -ZERO_TOL)
}

impl SphereMeasure {
    pub fn new(dim: usize, atoms: Vec<SphereAtom>) -> Result<Self> {
        let m = SphereMeasure { dim, atoms, even: false };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::input("measure dimension must be at least 1"));
        }
        for a in &self.atoms {
            vecs::check_dim(self.dim, a.v.len())?;
            if (vecs::norm2(&a.v) - 1.0).abs() > ZERO_TOL {
                return Err(Error::input(format!(
                    "sphere atom {:?} is not unit within 1e-12",
                    a.v
                )));
            }
        }
        Ok(())
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.w).sum()
    }

    /// Drop atoms with negligible weight.
    pub fn drop_tiny(mut self) -> Self {
        self.atoms.retain(|a| a.w.abs() > 1e-15);
        self
    }

    /// The even part `(μ + reflection of μ)/2`, with antipodal atoms merged.
    pub fn evenize(&self) -> SphereMeasure {
        let mut merged: Vec<SphereAtom> = Vec::new();
        for a in &self.atoms {
            for half in [
                SphereAtom { v: a.v.clone(), w: a.w / 2.0 },
                SphereAtom { v: vecs::neg(&a.v), w: a.w / 2.0 },
            ] {
                if let Some(existing) = merged
                    .iter_mut()
                    .find(|e| e.v.iter().zip(&half.v).all(|(x, y)| (x - y).abs() <= ZERO_TOL))
                {
                    existing.w += half.w;
                } else {
                    merged.push(half);
                }
            }
        }
        merged.retain(|a| a.w.abs() > 1e-15);
        SphereMeasure { dim: self.dim, atoms: merged, even: true }
    }

    /// Check invariance under `v ↦ -v` by pairing atoms.
    pub fn verify_even(&self) -> bool {
        let mut residual: Vec<(Vec<f64>, f64)> = Vec::new();
        for a in &self.atoms {
            if let Some(pos) = residual.iter().position(|(v, _)| {
                v.iter().zip(&vecs::neg(&a.v)).all(|(x, y)| (x - y).abs() <= ZERO_TOL)
            }) {
                residual[pos].1 -= a.w;
                if residual[pos].1.abs() <= 1e-12 {
                    residual.remove(pos);
                }
            } else if let Some(pos) = residual
                .iter()
                .position(|(v, _)| v.iter().zip(&a.v).all(|(x, y)| (x - y).abs() <= ZERO_TOL))
            {
                residual[pos].1 += a.w;
            } else {
                residual.push((a.v.clone(), a.w));
            }
        }
        residual.iter().all(|(_, w)| w.abs() <= 1e-12)
    }
}

/// One atom of a finitely supported probability law.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RvAtom {
    pub x: Vec<f64>,
    pub p: f64,
}

/// Finitely supported probability law on `R^n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiscreteRandomVector {
    pub dim: usize,
    pub atoms: Vec<RvAtom>,
    /// Certifies the law is invariant under `x ↦ -x`.
    #[serde(default)]
    pub symmetric: bool,
}

impl DiscreteRandomVector {
    /// Build a law; probabilities are renormalized when `Σp` deviates from 1
    /// by at most `1e-9` and rejected beyond that.
    pub fn new(dim: usize, atoms: Vec<RvAtom>, symmetric: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("law dimension must be at least 1"));
        }
        if atoms.is_empty() {
            return Err(Error::input("law needs at least one atom"));
        }
        for a in &atoms {
            vecs::check_dim(dim, a.x.len())?;
            if !(a.p > 0.0) {
                return Err(Error::input(format!("atom probability {} must be positive", a.p)));
            }
        }
        let total: f64 = atoms.iter().map(|a| a.p).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::input(format!(
                "atom probabilities sum to {total}, beyond the 1e-9 renormalization window"
            )));
        }
        let atoms = atoms
            .into_iter()
            .map(|a| RvAtom { x: a.x, p: a.p / total })
            .collect();
        Ok(DiscreteRandomVector { dim, atoms, symmetric })
    }

    /// A point mass at `x`.
    pub fn dirac(x: Vec<f64>) -> Self {
        DiscreteRandomVector { dim: x.len(), atoms: vec![RvAtom { x, p: 1.0 }], symmetric: false }
    }

    /// The symmetric law `½δ_x + ½δ_{-x}` extended over the given atoms:
    /// each entry `(x, p)` contributes `±x` with probability `p/2` each.
    pub fn symmetrized(dim: usize, pairs: &[(Vec<f64>, f64)]) -> Result<Self> {
        let mut atoms = Vec::with_capacity(2 * pairs.len());
        for (x, p) in pairs {
            atoms.push(RvAtom { x: x.clone(), p: p / 2.0 });
            atoms.push(RvAtom { x: vecs::neg(x), p: p / 2.0 });
        }
        DiscreteRandomVector::new(dim, atoms, true)
    }

    /// Check that the law is invariant under `x ↦ -x` by mass pairing.
    pub fn verify_symmetric(&self) -> bool {
        let mut residual: Vec<(Vec<f64>, f64)> = Vec::new();
        for a in &self.atoms {
            let neg = vecs::neg(&a.x);
            if let Some(pos) = residual
                .iter()
                .position(|(v, _)| v.iter().zip(&neg).all(|(x, y)| (x - y).abs() <= ZERO_TOL))
            {
                residual[pos].1 -= a.p;
                if residual[pos].1.abs() <= 1e-12 {
                    residual.remove(pos);
                }
            } else if let Some(pos) = residual
                .iter()
                .position(|(v, _)| v.iter().zip(&a.x).all(|(x, y)| (x - y).abs() <= ZERO_TOL))
            {
                residual[pos].1 += a.p;
            } else {
                // Atoms at the origin are their own antipode.
                if a.x.iter().all(|x| x.abs() <= ZERO_TOL) {
                    continue;
                }
                residual.push((a.x.clone(), a.p));
            }
        }
        residual.iter().all(|(_, w)| w.abs() <= 1e-12)
    }

    /// The law of `u ∘ ξ`.
    pub fn hadamard(&self, u: &[f64]) -> Result<Self> {
        vecs::check_dim(self.dim, u.len())?;
        Ok(DiscreteRandomVector {
            dim: self.dim,
            atoms: self
                .atoms
                .iter()
                .map(|a| RvAtom { x: vecs::hadamard(u, &a.x), p: a.p })
                .collect(),
            symmetric: self.symmetric,
        })
    }

    /// The measure `μ_ξ(A) = E(‖ξ‖ 1_{ξ/‖ξ‖ ∈ A})`; zero atoms are dropped.
    ///
    /// Satisfies `E h(uK, ξ) = (T_K μ_ξ)(u)` for every body `K`.
    pub fn sphere_measure(&self) -> SphereMeasure {
        let atoms = self
            .atoms
            .iter()
            .filter_map(|a| {
                let len = vecs::norm2(&a.x);
                if len <= ZERO_TOL {
                    None
                } else {
                    Some(SphereAtom { v: vecs::scale(&a.x, 1.0 / len), w: a.p * len })
                }
            })
            .collect();
        SphereMeasure { dim: self.dim, atoms, even: false }
    }

    /// `E h(uK, ξ)`, evaluated per atom through the diagonal symmetry
    /// `h(uK, x) = h(xK, u)`.
    pub fn expected_support(&self, k: &ConvexBody, u: &[f64]) -> Result<f64> {
        vecs::check_dim(self.dim, k.dim())?;
        vecs::check_dim(self.dim, u.len())?;
        let uk = k.hadamard(u)?;
        let mut acc = 0.0;
        for a in &self.atoms {
            acc += a.p * uk.support(&a.x)?;
        }
        Ok(acc)
    }

    /// The zonoid of `ξ`: generators `p_i · x_i`, support `E|⟨u, ξ⟩|`.
    pub fn zonoid(&self) -> Zonotope {
        Zonotope {
            dim: self.dim,
            generators: self.atoms.iter().map(|a| vecs::scale(&a.x, a.p)).collect(),
        }
    }

    /// Mean absolute coordinate `E|ξ_i|`.
    pub fn mean_abs_coord(&self, i: usize) -> f64 {
        self.atoms.iter().map(|a| a.p * a.x[i].abs()).sum()
    }

    /// The sign-conditioned moment functional
    /// `E([ξ]^α · Π_{j∈J} sign(ξ_j) · 1{ξ ∈ A_E})` with the convention
    /// `0^0 = 1`, where `A_E = {x : x_j ≠ 0 on E, x_j = 0 off E}`.
    ///
    /// `alpha` must lie in the simplex `Δ_E` (nonnegative, unit sum within
    /// `1e-9`, zero off `E`); `j_set ⊆ e_set` with 0-based indices.
    pub fn moment_f(&self, alpha: &[f64], j_set: &[usize], e_set: &[usize]) -> Result<f64> {
        vecs::check_dim(self.dim, alpha.len())?;
        let in_e = |i: usize| e_set.contains(&i);
        for j in j_set {
            if !in_e(*j) {
                return Err(Error::param(format!("J index {j} not contained in E")));
            }
        }
        let sum: f64 = alpha.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::param(format!("alpha sums to {sum}, not 1 within 1e-9")));
        }
        for (i, a) in alpha.iter().enumerate() {
            if *a < -1e-9 {
                return Err(Error::param(format!("alpha[{i}] = {a} negative")));
            }
            if !in_e(i) && a.abs() > 1e-9 {
                return Err(Error::param(format!("alpha[{i}] = {a} nonzero outside E")));
            }
        }
        let mut acc = 0.0;
        for atom in &self.atoms {
            if !in_a_e(&atom.x, e_set) {
                continue;
            }
            let mut term = atom.p * bracket_power(&atom.x, alpha);
            for &j in j_set {
                term *= atom.x[j].signum();
            }
            acc += term;
        }
        Ok(acc)
    }

    /// `E|⟨u, ξ⟩|^α`.
    pub fn alpha_moment(&self, u: &[f64], alpha: f64) -> Result<f64> {
        vecs::check_dim(self.dim, u.len())?;
        if !(alpha > 0.0) {
            return Err(Error::param(format!("moment exponent alpha={alpha} must be positive")));
        }
        Ok(self
            .atoms
            .iter()
            .map(|a| a.p * vecs::dot(u, &a.x).abs().powf(alpha))
            .sum())
    }

    /// `E(max_i u_i ξ_i)^α` for laws supported in the positive orthant.
    pub fn max_moment(&self, u: &[f64], alpha: f64) -> Result<f64> {
        vecs::check_dim(self.dim, u.len())?;
        if !(alpha > 0.0) {
            return Err(Error::param(format!("moment exponent alpha={alpha} must be positive")));
        }
        if self.atoms.iter().any(|a| a.x.iter().any(|x| *x < -ZERO_TOL)) {
            return Err(Error::Precondition(
                "max_moment requires a law supported in the positive orthant".to_string(),
            ));
        }
        Ok(self
            .atoms
            .iter()
            .map(|a| {
                let m = u
                    .iter()
                    .zip(&a.x)
                    .map(|(ui, xi)| ui * xi)
                    .fold(f64::NEG_INFINITY, f64::max);
                a.p * m.powf(alpha)
            })
            .sum())
    }
}

/// `x ∈ A_E`: nonzero exactly on `E` (0-based indices, zero tested at 1e-12).
pub fn in_a_e(x: &[f64], e_set: &[usize]) -> bool {
    x.iter().enumerate().all(|(i, xi)| {
        if e_set.contains(&i) {
            xi.abs() > ZERO_TOL
        } else {
            xi.abs() <= ZERO_TOL
        }
    })
}

/// `[x]^α = Π |x_i|^{α_i}` with the convention `0^0 = 1`.
pub fn bracket_power(x: &[f64], alpha: &[f64]) -> f64 {
    x.iter()
        .zip(alpha)
        .map(|(xi, ai)| {
            if *ai == 0.0 {
                1.0
            } else {
                xi.abs().powf(*ai)
            }
        })
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{cosine_transform, k_transform};
    use approx::assert_relative_eq;
    use rand::Rng;

    fn random_unit(rng: &mut impl Rng, n: usize) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            let len = vecs::norm2(&v);
            if len > 0.1 {
                return vecs::scale(&v, 1.0 / len);
            }
        }
    }

    #[test]
    fn evenize_splits_dirac() {
        let m = SphereMeasure::new(2, vec![SphereAtom { v: vec![1.0, 0.0], w: 1.0 }]).unwrap();
        let e = m.evenize();
        assert!(e.even);
        assert_eq!(e.atoms.len(), 2);
        assert!(e.atoms.iter().all(|a| (a.w - 0.5).abs() < 1e-15));
        assert!(e.verify_even());
    }

    #[test]
    fn evenize_fixes_even_measures() {
        let m = SphereMeasure::new(
            2,
            vec![
                SphereAtom { v: vec![0.0, 1.0], w: 0.5 },
                SphereAtom { v: vec![0.0, -1.0], w: 0.5 },
            ],
        )
        .unwrap();
        let e = m.evenize();
        assert_eq!(e.atoms.len(), 2);
        assert!(e.atoms.iter().all(|a| (a.w - 0.5).abs() < 1e-15));
    }

    #[test]
    fn evenize_preserves_cosine_transform() {
        let mut rng = crate::seeded_rng(31);
        for _ in 0..100 {
            let n = 2 + (rng.random::<u32>() % 2) as usize;
            let atoms: Vec<SphereAtom> = (0..3)
                .map(|_| SphereAtom {
                    v: random_unit(&mut rng, n),
                    w: rng.random::<f64>() * 2.0 - 1.0,
                })
                .collect();
            let m = SphereMeasure::new(n, atoms).unwrap();
            let e = m.evenize();
            let u: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            assert_relative_eq!(
                cosine_transform(&m, &u).unwrap(),
                cosine_transform(&e, &u).unwrap(),
                epsilon = 1e-12,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn sphere_measure_of_dirac() {
        let xi = DiscreteRandomVector::dirac(vec![3.0, 4.0]);
        let m = xi.sphere_measure();
        assert_eq!(m.atoms.len(), 1);
        assert_relative_eq!(m.atoms[0].v[0], 0.6);
        assert_relative_eq!(m.atoms[0].v[1], 0.8);
        assert_relative_eq!(m.atoms[0].w, 5.0);
    }

    #[test]
    fn sphere_measure_of_symmetric_pair() {
        let xi = DiscreteRandomVector::symmetrized(2, &[(vec![1.0, 0.0], 1.0)]).unwrap();
        let m = xi.sphere_measure();
        assert!(m.verify_even());
        assert_relative_eq!(m.total_mass(), 1.0);
    }

    #[test]
    fn sphere_measure_contract_with_k_transform() {
        let mut rng = crate::seeded_rng(37);
        for _ in 0..40 {
            let n = 2 + (rng.random::<u32>() % 2) as usize;
            let atoms: Vec<RvAtom> = (0..3)
                .map(|_| RvAtom {
                    x: (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect(),
                    p: 1.0 / 3.0,
                })
                .collect();
            let xi = DiscreteRandomVector::new(n, atoms, false).unwrap();
            let k = if rng.random::<bool>() {
                ConvexBody::lp_ball(n, 2.0).unwrap()
            } else {
                ConvexBody::segment(n)
            };
            let u: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            let lhs = xi.expected_support(&k, &u).unwrap();
            let rhs = k_transform(&k, &xi.sphere_measure(), &u).unwrap();
            assert_relative_eq!(lhs, rhs, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn expected_support_examples() {
        // K = I: degenerate direction annihilates the diagonal atom.
        let xi = DiscreteRandomVector::dirac(vec![1.0, 1.0]);
        let seg = ConvexBody::segment(2);
        assert_eq!(xi.expected_support(&seg, &[1.0, -1.0]).unwrap(), 0.0);

        // K = B_inf: only first absolute moments survive.
        let xi = DiscreteRandomVector::new(
            2,
            vec![
                RvAtom { x: vec![1.0, 2.0], p: 0.25 },
                RvAtom { x: vec![-2.0, 0.5], p: 0.75 },
            ],
            false,
        )
        .unwrap();
        let binf = ConvexBody::lp_ball(2, f64::INFINITY).unwrap();
        let u = [0.7_f64, -1.3];
        let expect = u[0].abs() * xi.mean_abs_coord(0) + u[1].abs() * xi.mean_abs_coord(1);
        assert_relative_eq!(xi.expected_support(&binf, &u).unwrap(), expect, epsilon = 1e-12);

        // K = B_2: expected Euclidean norm of u∘ξ, checked atomwise.
        let b2 = ConvexBody::lp_ball(2, 2.0).unwrap();
        let direct: f64 = xi
            .atoms
            .iter()
            .map(|a| a.p * vecs::norm2(&vecs::hadamard(&u, &a.x)))
            .sum();
        assert_relative_eq!(xi.expected_support(&b2, &u).unwrap(), direct, epsilon = 1e-12);
    }

    #[test]
    fn zonoid_examples() {
        let xi = DiscreteRandomVector::dirac(vec![2.0, -1.0]);
        assert_eq!(xi.zonoid().generators, vec![vec![2.0, -1.0]]);

        let xi = DiscreteRandomVector::symmetrized(2, &[(vec![1.0, 0.0], 1.0)]).unwrap();
        let c = xi.zonoid().canonical(1e-9);
        assert_eq!(c.generators.len(), 1);
        assert_relative_eq!(c.generators[0][0], 1.0, epsilon = 1e-12);

        let mut rng = crate::seeded_rng(41);
        for _ in 0..20 {
            let atoms: Vec<RvAtom> = (0..4)
                .map(|_| RvAtom {
                    x: (0..3).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect(),
                    p: 0.25,
                })
                .collect();
            let xi = DiscreteRandomVector::new(3, atoms, false).unwrap();
            let u: Vec<f64> = (0..3).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
            let zonoid = ConvexBody::Zonotope(xi.zonoid());
            assert_relative_eq!(
                zonoid.support(&u).unwrap(),
                xi.expected_support(&ConvexBody::segment(3), &u).unwrap(),
                epsilon = 1e-12,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn moment_f_single_atom() {
        let xi = DiscreteRandomVector::dirac(vec![2.0, 3.0]);
        let v = xi.moment_f(&[0.5, 0.5], &[], &[0, 1]).unwrap();
        assert_relative_eq!(v, 6.0_f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn moment_f_odd_j_vanishes_exactly() {
        // Atoms ordered in antipodal pairs so the cancellation is exact.
        let xi = DiscreteRandomVector::symmetrized(
            2,
            &[(vec![1.5, 2.0], 0.5), (vec![0.25, -1.0], 0.5)],
        )
        .unwrap();
        let v = xi.moment_f(&[0.3, 0.7], &[0], &[0, 1]).unwrap();
        assert_eq!(v, 0.0);
        let v = xi.moment_f(&[1.0, 0.0], &[0], &[0, 1]).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn moment_f_restricted_support() {
        let xi = DiscreteRandomVector::new(
            2,
            vec![
                RvAtom { x: vec![2.0, 0.0], p: 0.5 },
                RvAtom { x: vec![1.0, 1.0], p: 0.5 },
            ],
            false,
        )
        .unwrap();
        // E = {0}: only the atom vanishing on coordinate 1 contributes.
        let v = xi.moment_f(&[1.0, 0.0], &[], &[0]).unwrap();
        assert_relative_eq!(v, 0.5 * 2.0, epsilon = 1e-15);
    }

    #[test]
    fn moment_f_rejects_bad_alpha() {
        let xi = DiscreteRandomVector::dirac(vec![1.0, 1.0]);
        assert!(xi.moment_f(&[0.7, 0.7], &[], &[0, 1]).is_err());
        assert!(xi.moment_f(&[0.5, 0.5], &[], &[0]).is_err());
        assert!(xi.moment_f(&[1.0, 0.0], &[1], &[0]).is_err());
    }

    #[test]
    fn moment_f_linear_in_law() {
        let mut rng = crate::seeded_rng(43);
        for _ in 0..20 {
            let mk = |rng: &mut rand_chacha::ChaCha12Rng| {
                let atoms: Vec<RvAtom> = (0..3)
                    .map(|_| RvAtom {
                        x: (0..2).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect(),
                        p: 1.0 / 3.0,
                    })
                    .collect();
                DiscreteRandomVector::new(2, atoms, false).unwrap()
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let t = rng.random::<f64>();
            let mut atoms: Vec<RvAtom> =
                a.atoms.iter().map(|at| RvAtom { x: at.x.clone(), p: at.p * t }).collect();
            atoms.extend(b.atoms.iter().map(|at| RvAtom { x: at.x.clone(), p: at.p * (1.0 - t) }));
            let mix = DiscreteRandomVector::new(2, atoms, false).unwrap();
            let alpha = [0.25, 0.75];
            let e_set = [0usize, 1];
            let va = a.moment_f(&alpha, &[], &e_set).unwrap();
            let vb = b.moment_f(&alpha, &[], &e_set).unwrap();
            let vm = mix.moment_f(&alpha, &[], &e_set).unwrap();
            assert_relative_eq!(vm, t * va + (1.0 - t) * vb, epsilon = 1e-12);
        }
    }

    #[test]
    fn sign_partition_identity() {
        // Σ over sign patterns of the sign-conditioned masses reconstructs
        // the unconditioned moment.
        let mut rng = crate::seeded_rng(47);
        let xi = DiscreteRandomVector::symmetrized(
            3,
            &[
                (vec![1.0, 2.0, 0.5], 0.4),
                (vec![-0.5, 1.5, 1.0], 0.6),
            ],
        )
        .unwrap();
        for _ in 0..10 {
            let raw: Vec<f64> = (0..3).map(|_| rng.random::<f64>() + 0.1).collect();
            let s: f64 = raw.iter().sum();
            let alpha: Vec<f64> = raw.iter().map(|x| x / s).collect();
            let e_set = [0usize, 1, 2];
            let total = xi.moment_f(&alpha, &[], &e_set).unwrap();
            // Direct conditioning oracle over all sign patterns.
            let mut acc = 0.0;
            for mask in 0..(1u32 << 3) {
                let s: Vec<f64> = (0..3)
                    .map(|i| if mask >> i & 1 == 1 { 1.0 } else { -1.0 })
                    .collect();
                for atom in &xi.atoms {
                    if in_a_e(&atom.x, &e_set)
                        && atom.x.iter().zip(&s).all(|(x, si)| x.signum() == *si)
                    {
                        acc += atom.p * bracket_power(&atom.x, &alpha);
                    }
                }
            }
            assert_relative_eq!(acc, total, epsilon = 1e-12, max_relative = 1e-12);
        }
    }

    #[test]
    fn alpha_and_max_moment_examples() {
        let x = vec![1.0, 2.0];
        let xi = DiscreteRandomVector::dirac(x.clone());
        let u = [0.5, 0.25];
        let alpha = 0.7;
        assert_relative_eq!(
            xi.alpha_moment(&u, alpha).unwrap(),
            vecs::dot(&u, &x).abs().powf(alpha),
            epsilon = 1e-15
        );
        assert_relative_eq!(
            xi.max_moment(&u, alpha).unwrap(),
            0.5_f64.powf(alpha),
            epsilon = 1e-15
        );

        // Completely dependent law: moments factor through E ζ^α.
        let v = vec![1.0, 3.0];
        let zeta = [(0.5, 0.3), (2.0, 0.7)];
        let atoms: Vec<RvAtom> = zeta
            .iter()
            .map(|(z, p)| RvAtom { x: vecs::scale(&v, *z), p: *p })
            .collect();
        let law = DiscreteRandomVector::new(2, atoms, false).unwrap();
        let ez_alpha: f64 = zeta.iter().map(|(z, p)| p * z.powf(alpha)).sum();
        assert_relative_eq!(
            law.alpha_moment(&u, alpha).unwrap(),
            ez_alpha * vecs::dot(&u, &v).abs().powf(alpha),
            epsilon = 1e-12
        );
        let det_max = u.iter().zip(&v).map(|(a, b)| a * b).fold(f64::NEG_INFINITY, f64::max);
        assert_relative_eq!(
            law.max_moment(&u, alpha).unwrap(),
            ez_alpha * det_max.powf(alpha),
            epsilon = 1e-12
        );

        // alpha = 1 on the positive orthant reduces to the expected support.
        let seg = ConvexBody::segment(2);
        assert_relative_eq!(
            law.alpha_moment(&u, 1.0).unwrap(),
            law.expected_support(&seg, &u).unwrap(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn moment_guards() {
        let xi = DiscreteRandomVector::dirac(vec![1.0, -1.0]);
        assert!(xi.alpha_moment(&[1.0, 1.0], 0.0).is_err());
        assert!(xi.max_moment(&[1.0, 1.0], 0.5).is_err());
    }

    #[test]
    fn probability_window() {
        let atoms = vec![RvAtom { x: vec![1.0], p: 0.5 + 3e-10 }, RvAtom { x: vec![-1.0], p: 0.5 }];
        let xi = DiscreteRandomVector::new(1, atoms, false).unwrap();
        let total: f64 = xi.atoms.iter().map(|a| a.p).sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-15);

        let atoms = vec![RvAtom { x: vec![1.0], p: 0.6 }, RvAtom { x: vec![-1.0], p: 0.5 }];
        assert!(DiscreteRandomVector::new(1, atoms, false).is_err());
    }

    #[test]
    fn measure_scaling_property() {
        let mut rng = crate::seeded_rng(53);
        for _ in 0..20 {
            let atoms: Vec<RvAtom> = (0..3)
                .map(|_| RvAtom {
                    x: (0..2).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect(),
                    p: 1.0 / 3.0,
                })
                .collect();
            let xi = DiscreteRandomVector::new(2, atoms, false).unwrap();
            let c = 0.1 + 3.0 * rng.random::<f64>();
            let scaled = DiscreteRandomVector {
                dim: 2,
                atoms: xi
                    .atoms
                    .iter()
                    .map(|a| RvAtom { x: vecs::scale(&a.x, c), p: a.p })
                    .collect(),
                symmetric: false,
            };
            let m = xi.sphere_measure();
            let ms = scaled.sphere_measure();
            assert_relative_eq!(ms.total_mass(), c * m.total_mass(), epsilon = 1e-12);
            for (a, b) in m.atoms.iter().zip(&ms.atoms) {
                for (x, y) in a.v.iter().zip(&b.v) {
                    assert_relative_eq!(x, y, epsilon = 1e-12);
                }
            }
        }
    }
}
