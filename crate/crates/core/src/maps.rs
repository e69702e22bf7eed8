//! Symmetrization `AN → Q`, the exponential and logarithm between the
//! admissible loci of `q` and `Q`, the right dressing action of `SU(1,1)`
//! on `AN`, the Flaschka-Ratiu map, and admissible spectra.

use num_complex::Complex64;

use crate::algebra::{eig2, Mat2C};
use crate::error::{Error, Result};
use crate::spaces::{
    gtq_of_qpoint, gtstar_of_rect, hyp_of_rect, ANPoint, Chart, GElement, QPoint, QStarPoint,
};
use crate::special::{inv_sinhc, sinhc};
use crate::tensors::{DiffMap, Mat3};

/// Output of [`dress`]: `a·g = g′·b′` with `a = diag(e^{z/2}, e^{−z/2})`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DressResult {
    pub g_prime: GElement,
    pub b_prime: ANPoint,
}

/// `M ↦ M†M`, i.e. `a = x e^{z/2}`, `b = y e^{z/2}`, `c = e^z`.
pub fn sym(p: &ANPoint) -> QPoint {
    let h = (0.5 * p.z).exp();
    QPoint { a: p.x * h, b: p.y * h, c: h * h }
}

/// Inverse of [`sym`] on `c > 0`: `z = ln c`, `(x, y) = (a, b)/√c`.
pub fn sym_inverse(q: &QPoint) -> Result<ANPoint> {
    let h = q.c.sqrt();
    ANPoint::new(q.c.ln(), q.a / h, q.b / h)
}

/// `cosh λ · I + (sinh λ / λ) · M`, using `M² = λ² I`.
pub fn exp_q(p: &QStarPoint) -> Result<QPoint> {
    p.require_admissible()?;
    let l = p.lambda();
    let k = sinhc(l);
    QPoint::new(k * p.x, k * p.y, l.cosh() + k * p.z)
}

/// Inverse of [`exp_q`] on `Q_adm`.
///
/// `λ` is taken from `sinh²λ = ((c − d)/2)² − a² − b²` rather than from
/// `cosh⁻¹(T/2)`, which loses digits near the cone.
pub fn log_q(q: &QPoint) -> Result<QStarPoint> {
    q.require_admissible()?;
    let half = 0.5 * (q.c - q.d());
    let r = q.a.hypot(q.b);
    let l = ((half - r) * (half + r)).max(0.0).sqrt().asinh();
    let k = inv_sinhc(l);
    QStarPoint::new(k * q.a, k * q.b, k * half)
}

/// Right dressing of `diag(e^{z/2}, e^{−z/2})` by `g`.
pub fn dress(z: f64, g: &GElement) -> Result<DressResult> {
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::InvalidArgument(format!("dressing needs z > 0, got {z}")));
    }
    let (eu, ev) = ((0.5 * z).exp(), (-0.5 * z).exp());
    let rho2 = g.u.norm_sqr() * eu * eu - g.v.norm_sqr() * ev * ev;
    let rho = rho2.sqrt();
    let u = g.u * (eu / rho);
    let v = g.v * (ev / rho);
    let m: Complex64 = g.u.conj() * g.v * (2.0 * z.sinh() / rho);
    Ok(DressResult {
        g_prime: GElement { u, v },
        b_prime: ANPoint::new(rho2.ln(), m.re, m.im)?,
    })
}

/// `(e^z − e^λ)(e^z − e^{−λ})` on the closed cone, with `z − λ` written as
/// `r² / (z + λ)`.
fn fr_radicand(p: &QStarPoint) -> f64 {
    let l = p.lambda();
    let r2 = p.x * p.x + p.y * p.y;
    let gap = r2 / (p.z + l);
    let v = l.exp() * gap.exp_m1() * (p.z.exp() - (-l).exp());
    if v < 0.0 && v > -1e-12 {
        0.0
    } else {
        v
    }
}

/// The Flaschka-Ratiu map `q_adm → Q_adm`: `c = e^z`, and `(a, b)` points
/// along `(x, y)` with length `√((e^z − e^λ)(e^z − e^{−λ}))`.
pub fn fr_map(p: &QStarPoint) -> Result<QPoint> {
    p.require_admissible()?;
    let r = p.radius();
    if r == 0.0 {
        return QPoint::new(0.0, 0.0, p.z.exp());
    }
    let len = fr_radicand(p).sqrt();
    QPoint::new(len * p.x / r, len * p.y / r, p.z.exp())
}

const SPECTRUM_MARGIN: f64 = 1e-12;

/// `γ` with `spec(b†b) = (e^γ, e^{−γ})`, from `Δ = tr(b†b)`.
pub fn adm_spectrum_an(p: &ANPoint) -> Result<f64> {
    let delta = p.delta();
    if !(p.z > 0.0 && delta > 2.0 + SPECTRUM_MARGIN) {
        return Err(Error::NotAdmissible { space: "AN", reason: format!("Δ = {delta}, z = {}", p.z) });
    }
    Ok((0.5 * (delta + ((delta - 2.0) * (delta + 2.0)).sqrt())).ln())
}

/// `γ` for `M ∈ SL(2, ℂ)` with `M†M ∈ Q_adm`.
pub fn adm_spectrum_slc(m: &Mat2C) -> Result<f64> {
    let det_residual = (m.det() - 1.0).norm();
    if !(det_residual <= 1e-10) {
        return Err(Error::InvalidArgument(format!("det(M) differs from 1 by {det_residual:.3e}")));
    }
    let p = m.dagger() * *m;
    let t = p.trace();
    let c = p.m11;
    if !(t.re > 2.0 + SPECTRUM_MARGIN && c.re > 0.5 * t.re) {
        return Err(Error::NotAdmissible {
            space: "SL(2,C)",
            reason: format!("tr(M†M) = {}, c = {}", t.re, c.re),
        });
    }
    let (big, small) = eig2(&p);
    let scale = big.norm().max(1.0);
    if big.im.abs() > 1e-12 * scale || small.im.abs() > 1e-12 * scale || !(big.re > 1.0) {
        return Err(Error::NotAdmissible { space: "SL(2,C)", reason: format!("spectrum of M†M is {big}, {small}") });
    }
    Ok(big.re.ln())
}

/// Product in `AN`.
pub fn an_product(b1: &ANPoint, b2: &ANPoint) -> ANPoint {
    let w1 = Complex64::new(b1.x, b1.y);
    let w2 = Complex64::new(b2.x, b2.y);
    let w = w2 * (0.5 * b1.z).exp() + w1 * (-0.5 * b2.z).exp();
    ANPoint { z: b1.z + b2.z, x: w.re, y: w.im }
}

/// `Sym` as a map `RectAN → RectQ`, with its analytic Jacobian.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymMap;

impl DiffMap for SymMap {
    fn source_chart(&self) -> Chart {
        Chart::RectAN
    }
    fn target_chart(&self) -> Chart {
        Chart::RectQ
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(sym(&ANPoint::from_chart_coords(*p)?).to_array())
    }
    fn jacobian(&self, p: &[f64; 3]) -> Option<Result<Mat3>> {
        let [x, y, z] = *p;
        let h = (0.5 * z).exp();
        Some(Ok([[h, 0.0, 0.5 * x * h], [0.0, h, 0.5 * y * h], [0.0, 0.0, h * h]]))
    }
}

/// `log_q ∘ Sym : RectAN → RectQStar`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LogSymMap;

impl DiffMap for LogSymMap {
    fn source_chart(&self) -> Chart {
        Chart::RectAN
    }
    fn target_chart(&self) -> Chart {
        Chart::RectQStar
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(log_q(&sym(&ANPoint::from_chart_coords(*p)?))?.to_array())
    }
}

/// [`fr_map`] as a map `RectQStar → RectQ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FrMap;

impl DiffMap for FrMap {
    fn source_chart(&self) -> Chart {
        Chart::RectQStar
    }
    fn target_chart(&self) -> Chart {
        Chart::RectQ
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(fr_map(&QStarPoint::from_array(*p)?)?.to_array())
    }
}

/// `RectQStar → Hyperbolic`.
#[derive(Clone, Copy, Debug, Default)]
pub struct HypChartMap;

impl DiffMap for HypChartMap {
    fn source_chart(&self) -> Chart {
        Chart::RectQStar
    }
    fn target_chart(&self) -> Chart {
        Chart::Hyperbolic
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(hyp_of_rect(&QStarPoint::from_array(*p)?)?.to_array())
    }
}

/// `RectQStar → GTStar`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GTStarChartMap;

impl DiffMap for GTStarChartMap {
    fn source_chart(&self) -> Chart {
        Chart::RectQStar
    }
    fn target_chart(&self) -> Chart {
        Chart::GTStar
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(gtstar_of_rect(&QStarPoint::from_array(*p)?)?.to_array())
    }
}

/// `RectQ → GTQ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct GTQChartMap;

impl DiffMap for GTQChartMap {
    fn source_chart(&self) -> Chart {
        Chart::RectQ
    }
    fn target_chart(&self) -> Chart {
        Chart::GTQ
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(gtq_of_qpoint(&QPoint::from_array(*p)?)?.to_array())
    }
}
