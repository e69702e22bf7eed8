//! Spectral inequalities for admissible elements: the multiplicative
//! (Thompson-type) inequality on `(AN)_adm`, its linear counterpart on
//! `q_adm`, and closure of admissibles under products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::maps::{adm_spectrum_an, adm_spectrum_slc, dress};
use crate::spaces::{ANPoint, GElement, MatrixRealization, QStarPoint};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub lambda: f64,
    pub seed: u64,
    /// Upper end of the rapidity `r` in `u = cosh(r) e^{iα}`, `v = sinh(r) e^{iβ}`.
    pub boost_range: f64,
}

/// Draws `g ∈ SU(1,1)` from `spec.seed` and dresses `diag(e^{λ/2}, e^{−λ/2})`
/// by it, so the result has admissible spectrum `λ`.
pub fn sample_admissible_an(spec: &SampleSpec) -> Result<ANPoint> {
    if !(spec.lambda > 0.0 && spec.boost_range >= 0.0 && spec.boost_range.is_finite()) {
        return Err(Error::InvalidArgument(format!("invalid sample spec {spec:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Ok(dress(spec.lambda, &random_group_element(&mut rng, spec.boost_range))?.b_prime)
}

/// `α, β` uniform in `[0, 2π)`, `r` uniform in `[0, boost_range]`.
pub fn random_group_element<R: Rng>(rng: &mut R, boost_range: f64) -> GElement {
    use std::f64::consts::TAU;
    let alpha = rng.gen::<f64>() * TAU;
    let beta = rng.gen::<f64>() * TAU;
    let r = rng.gen::<f64>() * boost_range;
    GElement::from_boost(r, alpha, beta)
}

fn spectrum_of(b: &ANPoint, which: &str) -> Result<f64> {
    adm_spectrum_an(b).map_err(|e| match e {
        Error::NotAdmissible { reason, .. } => Error::NotAdmissible { space: "AN", reason: format!("{which}: {reason}") },
        other => other,
    })
}

/// `γ(b₁b₂) − γ(b₁) − γ(b₂)`, with `γ(b₁b₂)` from the spectrum of
/// `(b₁b₂)†(b₁b₂)`.
pub fn thompson_defect(b1: &ANPoint, b2: &ANPoint) -> Result<f64> {
    let g1 = spectrum_of(b1, "first factor")?;
    let g2 = spectrum_of(b2, "second factor")?;
    let g = adm_spectrum_slc(&(b1.to_matrix() * b2.to_matrix()))?;
    Ok(g - g1 - g2)
}

/// `λ(M₁ + M₂) − λ₁ − λ₂` on `q_adm`.
pub fn linear_defect(m1: &QStarPoint, m2: &QStarPoint) -> Result<f64> {
    m1.require_admissible()?;
    m2.require_admissible()?;
    let sum = QStarPoint::new(m1.x + m2.x, m1.y + m2.y, m1.z + m2.z)?;
    Ok(sum.lambda() - m1.lambda() - m2.lambda())
}

/// Whether `b₁b₂` is admissible. Both factors must be admissible.
pub fn product_admissible(b1: &ANPoint, b2: &ANPoint) -> Result<bool> {
    spectrum_of(b1, "first factor")?;
    spectrum_of(b2, "second factor")?;
    Ok(adm_spectrum_slc(&(b1.to_matrix() * b2.to_matrix())).is_ok())
}

/// `Tr(b†b)` for `b = (a₁.g)·a₂` with `a₁² = diag(e^{z₁}, e^{−z₁})` and
/// `a₂² = diag(e^{z₂}, e^{−z₂})`:
/// `r²ρ²|u|² − r⁻²ρ²|v|² + r⁻²ρ⁻²|u|² − r²ρ⁻²|v|²`.
pub fn proof_trace(z1: f64, z2: f64, g: &GElement) -> f64 {
    let (r2, p2) = (z1.exp(), z2.exp());
    let (u2, v2) = (g.u.norm_sqr(), g.v.norm_sqr());
    r2 * p2 * u2 - p2 / r2 * v2 + u2 / (r2 * p2) - r2 / p2 * v2
}

/// `ln μ − ln(r²ρ²)` where `μ` is the larger root of
/// `μ + 1/μ = r²ρ² + r⁻²ρ⁻² + |v|²(ρ² − ρ⁻²)(r² − r⁻²)`.
pub fn proof_defect(z1: f64, z2: f64, v_sq: f64) -> f64 {
    let s = 2.0 * (z1 + z2).cosh() + v_sq * 4.0 * z2.sinh() * z1.sinh();
    let mu = 0.5 * (s + ((s - 2.0) * (s + 2.0)).sqrt());
    mu.ln() - (z1 + z2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::sym;

    #[test]
    fn zero_boost_gives_diagonal() {
        let b = sample_admissible_an(&SampleSpec { lambda: 0.7, seed: 3, boost_range: 0.0 }).unwrap();
        assert!((b.z - 0.7).abs() < 1e-15 && b.x == 0.0 && b.y == 0.0);
    }

    #[test]
    fn sampling_is_deterministic_and_keeps_spectrum() {
        let spec = SampleSpec { lambda: 1.3, seed: 99, boost_range: 2.0 };
        let a = sample_admissible_an(&spec).unwrap();
        assert_eq!(a, sample_admissible_an(&spec).unwrap());
        assert!((adm_spectrum_an(&a).unwrap() - 1.3).abs() < 1e-11);
    }

    #[test]
    fn diagonal_pair_has_zero_defect() {
        let d = thompson_defect(&ANPoint::diagonal(0.4), &ANPoint::diagonal(1.1)).unwrap();
        assert!(d.abs() < 1e-12);
        assert!(product_admissible(&ANPoint::diagonal(0.4), &ANPoint::diagonal(1.1)).unwrap());
    }

    #[test]
    fn identity_is_rejected() {
        assert!(product_admissible(&ANPoint::diagonal(0.0), &ANPoint::diagonal(1.0)).is_err());
        assert!(thompson_defect(&ANPoint::diagonal(1.0), &ANPoint::diagonal(0.0)).is_err());
    }

    #[test]
    fn linear_defect_examples() {
        let m = QStarPoint::new(0.0, 0.0, 0.6).unwrap();
        assert_eq!(linear_defect(&m, &m).unwrap(), 0.0);
        let a = QStarPoint::new(0.3, 0.1, 1.0).unwrap();
        let b = QStarPoint::new(-0.4, 0.5, 1.2).unwrap();
        let d = linear_defect(&a, &b).unwrap();
        assert!(d >= 0.0);
        let t = 3.5;
        assert!((linear_defect(&a.scaled(t), &b.scaled(t)).unwrap() - t * d).abs() < 1e-12);
    }

    #[test]
    fn trace_formula_matches_matrices() {
        let g = GElement::from_boost(0.8, 0.3, 2.2);
        let (z1, z2) = (0.7, 1.2);
        let b1 = dress(z1, &g).unwrap().b_prime;
        let b = b1.to_matrix() * ANPoint::diagonal(z2).to_matrix();
        let tr = (b.dagger() * b).trace();
        assert!((tr.re - proof_trace(z1, z2, &g)).abs() < 1e-11 * tr.re.abs().max(1.0));
        let d = thompson_defect(&b1, &ANPoint::diagonal(z2)).unwrap();
        assert!((d - proof_defect(z1, z2, g.v.norm_sqr())).abs() < 1e-11);
    }

    #[test]
    fn defect_grows_with_boost() {
        let mut last = -1.0;
        for k in 0..6 {
            let d = proof_defect(0.5, 0.9, 0.3 * k as f64);
            assert!(d > last);
            last = d;
        }
        assert!(proof_defect(0.5, 0.9, 0.0).abs() < 1e-15);
    }

    #[test]
    fn dressed_sample_symmetrizes_to_conjugate() {
        let spec = SampleSpec { lambda: 0.9, seed: 5, boost_range: 1.0 };
        let b = sample_admissible_an(&spec).unwrap();
        let q = sym(&b).to_matrix();
        assert!((q.trace().re - 2.0 * 0.9f64.cosh()).abs() < 1e-12);
    }
}
