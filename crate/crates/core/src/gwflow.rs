//! The time-dependent vector field whose time-one flow carries the linear
//! structure `π₀` on the admissible cone to `π = (λ coth λ + z) π₀`.
//!
//! In hyperbolic coordinates `(λ, φ, s)` the field is `f(s) ∂/∂s`. Writing
//! `u = cosh s − 1`, `q = u / (coth λ + 1)`, `r = q / (1 + q)` and
//! `m = 2λ / (e^{2λ} − 1)`, the closed form rearranges to
//!
//! ```text
//! f(s) / sinh s = −(r·H(r) + 1 − m) / (u + 2),   H(r) = Σ_{n≥2} r^{n−2}/n
//! ```
//!
//! which has no cancellation at small `s` or small `λ`, and gives the
//! rectangular field `F/λ · (zx, zy, x² + y²)` since `u = r²/(λ(z + λ))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spaces::{hyp_of_rect, rect_of_hyp, Bivector3, Chart, HypCoords, QStarPoint};
use crate::special::{inv_sinhc, lcoth, log_remainder, one_minus_bernoulli};
use crate::tensors::{fd_jacobian_fn, tensor_at, tensor_jet, transform_bivector, StructureId};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowConfig {
    pub t_start: f64,
    pub steps: usize,
    pub fd_step: f64,
}

impl Default for FlowConfig {
    fn default() -> Self {
        Self { t_start: 1e-6, steps: 2000, fd_step: 1e-5 }
    }
}

impl FlowConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t_start > 0.0 && self.t_start <= 0.01) {
            return Err(Error::InvalidArgument(format!("t_start must lie in (0, 0.01], got {}", self.t_start)));
        }
        if self.steps == 0 {
            return Err(Error::InvalidArgument("steps must be positive".into()));
        }
        if !(self.fd_step > 0.0 && self.fd_step.is_finite()) {
            return Err(Error::InvalidArgument(format!("fd_step must be positive, got {}", self.fd_step)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Vector3 {
    pub chart: Chart,
    pub components: [f64; 3],
}

impl Vector3 {
    pub fn norm_inf(&self) -> f64 {
        self.components.iter().fold(0.0, |a, v| a.max(v.abs()))
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// `π_t(p) = π(tp)/t`, with coefficient `tλ coth(tλ) + tz` on `π₀`.
pub fn pi_t_tensor(t: f64, p: &QStarPoint) -> Result<Bivector3> {
    tensor_at(StructureId::pi_t(t)?, Chart::RectQStar, &p.to_array())
}

/// `d/dt π_t` at `t = 1`: `(λ coth λ + z − λ²/sinh²λ) π₀`.
pub fn pi_dot_tensor(p: &QStarPoint) -> Result<Bivector3> {
    p.require_admissible()?;
    let l = p.lambda();
    let k = inv_sinhc(l);
    let coeff = lcoth(l) + p.z - k * k;
    Ok(tensor_at(StructureId::Pi0, Chart::RectQStar, &p.to_array())?.scale(coeff))
}

/// `r·H(r) + 1 − m` with `r = q/(1 + q)`.
fn bracket_term(lambda: f64, q: f64) -> f64 {
    let r = q / (1.0 + q);
    let rh = if r < 0.1 { r * log_remainder(r) } else { (q.ln_1p() - r) / r };
    rh + one_minus_bernoulli(lambda)
}

/// `f(s)/sinh s` in terms of `u = cosh s − 1`.
fn field_ratio(lambda: f64, u: f64) -> f64 {
    let a = -0.5 * (-2.0 * lambda).exp_m1();
    -bracket_term(lambda, a * u) / (u + 2.0)
}

/// The coefficient `f(s)` of `∂/∂s`.
pub fn gw_field_hyp(h: &HypCoords) -> Result<f64> {
    if !(h.lambda > 0.0 && h.s >= 0.0 && h.lambda.is_finite() && h.s.is_finite()) {
        return Err(Error::InvalidArgument(format!("field needs λ > 0 and s ≥ 0: {h:?}")));
    }
    let u = 2.0 * (0.5 * h.s).sinh().powi(2);
    Ok(field_ratio(h.lambda, u) * h.s.sinh())
}

/// The closed form as displayed, before rearrangement. Loses accuracy for
/// small `s`; kept as a reference.
pub fn gw_field_closed_form(lambda: f64, s: f64) -> f64 {
    let coth = 1.0 / lambda.tanh();
    let shl = lambda.sinh();
    let g = coth + s.cosh();
    let g0 = coth + 1.0;
    -(g / s.sinh()) * ((g / g0).ln() + (lambda / (shl * shl)) * (1.0 / g - 1.0 / g0))
}

/// `f(s) = c₁ s + c₃ s³ + O(s⁵)`.
pub fn gw_field_taylor(lambda: f64, s: f64) -> f64 {
    let one_m = one_minus_bernoulli(lambda);
    let m = 1.0 - one_m;
    let a = -0.5 * (-2.0 * lambda).exp_m1();
    let c1 = -0.5 * one_m;
    let c3 = -(one_m / 24.0 + (m - 0.5) * a / 4.0 + one_m * (a / 2.0 - 1.0 / 6.0) / 2.0);
    c1 * s + c3 * s * s * s
}

/// `F(tλ, s)/(tλ) · (zx, zy, x² + y²)`, which is `X(tp)/t²`.
fn field_rect_scaled(t: f64, p: &QStarPoint) -> Result<Vector3> {
    let r2 = p.x * p.x + p.y * p.y;
    if r2 == 0.0 && p.z > 0.0 {
        return Ok(Vector3 { chart: Chart::RectQStar, components: [0.0; 3] });
    }
    p.require_admissible()?;
    let l = p.lambda();
    let u = r2 / (l * (p.z + l));
    let k = field_ratio(t * l, u) / (t * l);
    let v = [k * p.z * p.x, k * p.z * p.y, k * r2];
    if v.iter().all(|c| c.is_finite()) {
        Ok(Vector3 { chart: Chart::RectQStar, components: v })
    } else {
        Err(Error::NonFinite("vector field"))
    }
}

/// `X` in `(x, y, z)`; zero on the positive `z`-axis.
pub fn gw_field_rect(p: &QStarPoint) -> Result<Vector3> {
    field_rect_scaled(1.0, p)
}

/// `X_t(p) = X(tp)/t²`.
pub fn scaled_field(t: f64, p: &QStarPoint) -> Result<Vector3> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument(format!("scaled field needs t > 0, got {t}")));
    }
    field_rect_scaled(t, p)
}

fn velocity(t: f64, p: &[f64; 3]) -> Result<[f64; 3]> {
    let q = QStarPoint::from_array(*p)?;
    if !(q.is_admissible() || (q.z > 0.0 && q.x == 0.0 && q.y == 0.0)) {
        return Err(Error::LeftAdmissibleCone { t });
    }
    let v = scaled_field(t, &q)?.components;
    Ok([-v[0], -v[1], -v[2]])
}

/// `ds/dt` for the flow of `−X_t` on the leaf `λ`: `−f_{tλ}(s)/t`.
fn s_velocity(t: f64, lambda: f64, s: f64) -> f64 {
    let u = 2.0 * (0.5 * s).sinh().powi(2);
    let tl = t * lambda;
    -lambda * field_ratio(tl, u) / tl * s.sinh()
}

fn rk4<const N: usize>(
    y0: [f64; N],
    cfg: &FlowConfig,
    f: impl Fn(f64, &[f64; N]) -> Result<[f64; N]>,
) -> Result<[f64; N]> {
    let dt = (1.0 - cfg.t_start) / cfg.steps as f64;
    let axpy = |y: &[f64; N], k: &[f64; N], h: f64| {
        let mut out = *y;
        for i in 0..N {
            out[i] += h * k[i];
        }
        out
    };
    let mut y = y0;
    for n in 0..cfg.steps {
        let t = cfg.t_start + n as f64 * dt;
        let k1 = f(t, &y)?;
        let k2 = f(t + 0.5 * dt, &axpy(&y, &k1, 0.5 * dt))?;
        let k3 = f(t + 0.5 * dt, &axpy(&y, &k2, 0.5 * dt))?;
        let k4 = f(t + dt, &axpy(&y, &k3, dt))?;
        for i in 0..N {
            y[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }
    Ok(y)
}

/// Time-one map on a leaf, in hyperbolic coordinates. The field is a
/// multiple of `∂/∂s`, so `λ` and `φ` are carried through unchanged and
/// only `s` is integrated.
pub fn gw_flow_hyp(h: &HypCoords, cfg: &FlowConfig) -> Result<HypCoords> {
    cfg.validate()?;
    if !(h.lambda > 0.0 && h.s >= 0.0 && h.lambda.is_finite() && h.s.is_finite()) {
        return Err(Error::InvalidArgument(format!("flow needs λ > 0 and s ≥ 0: {h:?}")));
    }
    if h.s == 0.0 {
        return Ok(*h);
    }
    let [s] = rk4([h.s], cfg, |t, y| {
        let v = s_velocity(t, h.lambda, y[0]);
        if v.is_finite() && y[0] >= 0.0 {
            Ok([v])
        } else {
            Err(Error::LeftAdmissibleCone { t })
        }
    })?;
    Ok(HypCoords { s, ..*h })
}

/// Time-one map `φ₁` of `dp/dt = −X_t(p)` over `[t_start, 1]`, starting
/// from `p`, by classical RK4 with fixed steps.
///
/// The minus sign follows from `L_X π = π̇`: the flow of a time-dependent
/// field `V_t` transports bivectors by `d/dt (φ_t)_*π₀ = −L_{V_t} (φ_t)_*π₀`.
///
/// The integration runs in hyperbolic coordinates. `φ₁` grows like
/// `z ↦ e^{λ cosh s}`, and in `(x, y, z)` the leaf is lost to rounding
/// once the image leaves the range where `z − √(x² + y²)` is resolved.
pub fn gw_flow(p: &QStarPoint, cfg: &FlowConfig) -> Result<QStarPoint> {
    p.require_admissible()?;
    if p.radius() == 0.0 {
        cfg.validate()?;
        return Ok(*p);
    }
    let h = gw_flow_hyp(&hyp_of_rect(p)?, cfg)?;
    let out = rect_of_hyp(&h)?;
    if !out.is_admissible() {
        return Err(Error::LeftAdmissibleCone { t: 1.0 });
    }
    Ok(out)
}

/// The same flow integrated directly in `(x, y, z)`.
pub fn gw_flow_rect(p: &QStarPoint, cfg: &FlowConfig) -> Result<QStarPoint> {
    cfg.validate()?;
    p.require_admissible()?;
    let y = rk4(p.to_array(), cfg, velocity)?;
    let out = QStarPoint::from_array(y)?;
    if !(out.is_admissible() || (out.z > 0.0 && out.radius() == 0.0)) {
        return Err(Error::LeftAdmissibleCone { t: 1.0 });
    }
    Ok(out)
}

/// Central-difference Jacobian of the time-one map with step `cfg.fd_step`.
pub fn flow_jacobian(p: &QStarPoint, cfg: &FlowConfig) -> Result<[[f64; 3]; 3]> {
    let base = p.to_array();
    let h = cfg.fd_step;
    let mut j = [[0.0; 3]; 3];
    for col in 0..3 {
        let mut fwd = base;
        let mut bwd = base;
        fwd[col] += h;
        bwd[col] -= h;
        let a = gw_flow(&QStarPoint::from_array(fwd)?, cfg)?.to_array();
        let b = gw_flow(&QStarPoint::from_array(bwd)?, cfg)?.to_array();
        for row in 0..3 {
            j[row][col] = (a[row] - b[row]) / (2.0 * h);
        }
    }
    Ok(j)
}

/// `‖(φ₁)_*π₀(p) − π(φ₁(p))‖∞ / max(1, ‖π(φ₁(p))‖∞)`.
pub fn verify_gw(p: &QStarPoint, cfg: &FlowConfig) -> Result<f64> {
    let image = gw_flow(p, cfg)?;
    let j = flow_jacobian(p, cfg)?;
    let pushed = transform_bivector(&j, &tensor_at(StructureId::Pi0, Chart::RectQStar, &p.to_array())?, Chart::RectQStar);
    let target = tensor_at(StructureId::PiAdm, Chart::RectQStar, &image.to_array())?;
    Ok(pushed.dist_inf(&target) / target.norm_inf().max(1.0))
}

/// The [`verify_gw`] defect in hyperbolic coordinates, where `φ₁` is
/// `s ↦ s′(λ, s)` and `π₀ = 1/(λ sinh s) ∂φ∧∂s`. Needs `s > 0`.
///
/// Stays meaningful when the image is too far out for `(x, y, z)` to
/// resolve the leaf.
pub fn verify_gw_hyp(h: &HypCoords, cfg: &FlowConfig) -> Result<f64> {
    if !(h.s > 0.0) {
        return Err(Error::InvalidArgument(format!("hyperbolic verification needs s > 0: {h:?}")));
    }
    let image = gw_flow_hyp(h, cfg)?;
    let step = cfg.fd_step.min(0.5 * h.s);
    let fwd = gw_flow_hyp(&HypCoords { s: h.s + step, ..*h }, cfg)?.s;
    let bwd = gw_flow_hyp(&HypCoords { s: h.s - step, ..*h }, cfg)?.s;
    let ds = (fwd - bwd) / (2.0 * step);
    let pushed = ds / (h.lambda * h.s.sinh());
    let target = tensor_at(StructureId::PiAdm, Chart::Hyperbolic, &image.to_array())?.p23;
    Ok((pushed - target).abs() / target.abs().max(1.0))
}

/// `‖L_X π − π̇‖∞`, with `π` and its partials analytic and `∂X` by finite
/// differences.
pub fn lie_derivative_residual(p: &QStarPoint) -> Result<f64> {
    let c = p.to_array();
    let jet = tensor_jet(StructureId::PiAdm, Chart::RectQStar, &c)?;
    let x = gw_field_rect(p)?.components;
    let dx = fd_jacobian_fn(|q| Ok(gw_field_rect(&QStarPoint::from_array(*q)?)?.components), &c, [false; 3])?;
    let pm = jet.value.to_matrix();
    let dp = jet.matrix_partials();
    let mut lie = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut v = 0.0;
            for k in 0..3 {
                v += x[k] * dp[i][j][k] - pm[k][j] * dx[i][k] - pm[i][k] * dx[j][k];
            }
            lie[i][j] = v;
        }
    }
    let lie = Bivector3::from_matrix(Chart::RectQStar, &lie);
    Ok(lie.dist_inf(&pi_dot_tensor(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyp(lambda: f64, s: f64) -> HypCoords {
        HypCoords { lambda, phi: 0.0, s, on_axis: s == 0.0 }
    }

    fn pt(x: f64, y: f64, z: f64) -> QStarPoint {
        QStarPoint::new(x, y, z).unwrap()
    }

    #[test]
    fn field_vanishes_at_s_zero() {
        assert_eq!(gw_field_hyp(&hyp(1.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn rearranged_form_matches_closed_form() {
        for &l in &[0.1, 0.7, 1.0, 2.5] {
            for &s in &[0.05, 0.3, 1.0, 2.0, 4.0] {
                let a = gw_field_hyp(&hyp(l, s)).unwrap();
                let b = gw_field_closed_form(l, s);
                assert!((a - b).abs() < 1e-11 * b.abs().max(1.0), "λ={l} s={s}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn taylor_agrees_near_zero() {
        let s = 1e-3;
        let direct = gw_field_closed_form(1.0, s);
        assert!((direct - gw_field_taylor(1.0, s)).abs() < 1e-10);
        assert!((gw_field_hyp(&hyp(1.0, s)).unwrap() - gw_field_taylor(1.0, s)).abs() < 1e-15);
    }

    #[test]
    fn asymptotically_linear_with_negative_sign() {
        let f = gw_field_hyp(&hyp(1.0, 20.0)).unwrap();
        assert!(f < 0.0);
        assert!(((f / 20.0).abs() - 1.0).abs() < 0.15);
    }

    #[test]
    fn rect_field_is_chain_rule_of_hyperbolic_form() {
        let h = HypCoords { lambda: 0.8, phi: 1.1, s: 0.7, on_axis: false };
        let p = rect_of_hyp(&h).unwrap();
        let f = gw_field_hyp(&h).unwrap();
        let expect = [
            f * h.lambda * h.s.cosh() * h.phi.cos(),
            f * h.lambda * h.s.cosh() * h.phi.sin(),
            f * h.lambda * h.s.sinh(),
        ];
        let v = gw_field_rect(&p).unwrap().components;
        for i in 0..3 {
            assert!((v[i] - expect[i]).abs() < 1e-13);
        }
    }

    #[test]
    fn axis_and_tangency() {
        assert_eq!(gw_field_rect(&pt(0.0, 0.0, 3.0)).unwrap().components, [0.0; 3]);
        let p = pt(0.4, -0.3, 1.2);
        let v = gw_field_rect(&p).unwrap().components;
        assert!((p.z * v[2] - p.x * v[0] - p.y * v[1]).abs() < 1e-12);
    }

    #[test]
    fn second_order_vanishing_at_origin() {
        let ratio = |e: f64| {
            let p = pt(0.3 * e, 0.4 * e, e);
            gw_field_rect(&p).unwrap().norm() / (e * (0.09f64 + 0.16 + 1.0).sqrt())
        };
        let (a, b) = (ratio(1e-2), ratio(1e-3));
        assert!((a / b - 10.0).abs() < 1.0, "{a} {b}");
    }

    #[test]
    fn scaled_field_is_bounded_as_t_shrinks() {
        let p = pt(0.5, 0.2, 1.4);
        let n: Vec<f64> = [1e-2, 1e-3, 1e-4].iter().map(|&t| scaled_field(t, &p).unwrap().norm()).collect();
        let (lo, hi) = n.iter().fold((f64::MAX, 0.0f64), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
        assert!(hi / lo < 1.1);
        let x = gw_field_rect(&p).unwrap().components;
        assert_eq!(scaled_field(1.0, &p).unwrap().components, x);
    }

    #[test]
    fn pi_t_at_one_is_pi() {
        let p = pt(0.1, 0.2, 1.0);
        let a = pi_t_tensor(1.0, &p).unwrap();
        let b = tensor_at(StructureId::PiAdm, Chart::RectQStar, &p.to_array()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pi_t_matches_rescaled_pi() {
        let p = pt(0.1, 0.2, 1.0);
        for &t in &[0.3, 2.0] {
            let a = pi_t_tensor(t, &p).unwrap();
            let b = tensor_at(StructureId::PiAdm, Chart::RectQStar, &p.scaled(t).to_array()).unwrap().scale(1.0 / t);
            assert!(a.dist_inf(&b) < 1e-13);
        }
    }

    #[test]
    fn pi_t_near_zero_differs_from_pi0_at_first_order() {
        // the coefficient is 1 + t z + O(t²)
        let p = pt(0.1, 0.2, 1.0);
        let t = 1e-6;
        let a = pi_t_tensor(t, &p).unwrap();
        let b = tensor_at(StructureId::Pi0, Chart::RectQStar, &p.to_array()).unwrap();
        let expect = b.scale(1.0 + t * p.z);
        assert!(a.dist_inf(&expect) < 1e-11);
        assert!(a.dist_inf(&b) > 0.5 * t);
    }

    #[test]
    fn pi_dot_identity_and_fd() {
        let p = pt(0.3, -0.1, 0.9);
        let pi = tensor_at(StructureId::PiAdm, Chart::RectQStar, &p.to_array()).unwrap();
        let pi0 = tensor_at(StructureId::Pi0, Chart::RectQStar, &p.to_array()).unwrap();
        let l = p.lambda();
        let s = l.sinh();
        let alt = Bivector3::new(Chart::RectQStar, pi.p12 - l * l / (s * s) * pi0.p12, pi.p13 - l * l / (s * s) * pi0.p13, pi.p23 - l * l / (s * s) * pi0.p23);
        let dot = pi_dot_tensor(&p).unwrap();
        assert!(dot.dist_inf(&alt) < 1e-13);
        let h = 1e-4;
        let fd = |t: f64| pi_t_tensor(t, &p).unwrap();
        let (a, b) = (fd(1.0 + h), fd(1.0 - h));
        let num = Bivector3::new(Chart::RectQStar, (a.p12 - b.p12) / (2.0 * h), (a.p13 - b.p13) / (2.0 * h), (a.p23 - b.p23) / (2.0 * h));
        assert!(num.dist_inf(&dot) < 1e-6);
    }

    #[test]
    fn pi_dot_on_axis() {
        let z: f64 = 0.8;
        let dot = pi_dot_tensor(&pt(0.0, 0.0, z)).unwrap();
        let coeff = z / z.tanh() + z - z * z / z.sinh().powi(2);
        assert!((dot.p12 - coeff * -z).abs() < 1e-14);
    }

    #[test]
    fn lie_derivative_identity() {
        for p in [pt(0.3, 0.2, 1.0), pt(-1.0, 2.0, 3.0), pt(0.0, 0.0, 0.5)] {
            assert!(lie_derivative_residual(&p).unwrap() < 1e-5);
        }
    }

    #[test]
    fn flow_fixes_axis_and_conserves_lambda() {
        let cfg = FlowConfig::default();
        let a = pt(0.0, 0.0, 1.3);
        assert_eq!(gw_flow(&a, &cfg).unwrap(), a);
        let p = rect_of_hyp(&HypCoords { lambda: 1.2, phi: 0.4, s: 1.5, on_axis: false }).unwrap();
        let out = gw_flow(&p, &cfg).unwrap();
        assert!((out.lambda() - p.lambda()).abs() < 1e-6);
        let h = hyp_of_rect(&out).unwrap();
        assert!((h.phi - 0.4).abs() < 1e-12);
    }

    #[test]
    fn flow_carries_pi0_to_pi() {
        let cfg = FlowConfig::default();
        for p in [pt(0.5, 0.3, 1.2), pt(0.0, 0.0, 0.7)] {
            let d = verify_gw(&p, &cfg).unwrap();
            assert!(d < 1e-3, "{d}");
        }
    }

    /// `φ₁` keeps `λ, φ` and must match leaf areas:
    /// `ln((coth λ + cosh s′)/(coth λ + 1)) = λ (cosh s − 1)`.
    fn area_matching_image(lambda: f64, s: f64) -> f64 {
        let c = 1.0 / lambda.tanh();
        ((c + 1.0) * (lambda * (s.cosh() - 1.0)).exp() - c).acosh()
    }

    #[test]
    fn flow_matches_area_matching() {
        // a small t_start removes the O(t_start · z) bias of starting at π_{t_start}
        let cfg = FlowConfig { t_start: 1e-10, ..FlowConfig::default() };
        for &(l, s) in &[(0.1, 0.5), (1.0, 1.0), (2.0, 2.0), (3.0, 3.0)] {
            let out = gw_flow_hyp(&hyp(l, s), &cfg).unwrap();
            let expect = area_matching_image(l, s);
            assert!((out.s - expect).abs() < 1e-8 * expect.max(1.0), "λ={l} s={s}: {} vs {expect}", out.s);
        }
    }

    #[test]
    fn hyperbolic_verification_reaches_far_images() {
        let cfg = FlowConfig::default();
        for &(l, s) in &[(0.5, 0.2), (3.0, 3.0)] {
            assert!(verify_gw_hyp(&hyp(l, s), &cfg).unwrap() < 1e-3);
        }
    }

    #[test]
    fn rect_and_hyperbolic_integration_agree() {
        let cfg = FlowConfig::default();
        let p = pt(0.4, -0.2, 0.9);
        let a = gw_flow(&p, &cfg).unwrap();
        let b = gw_flow_rect(&p, &cfg).unwrap();
        assert!((a.x - b.x).abs().max((a.y - b.y).abs()).max((a.z - b.z).abs()) < 1e-9);
    }

    #[test]
    fn config_validation() {
        assert!(FlowConfig { t_start: 0.0, ..FlowConfig::default() }.validate().is_err());
        assert!(FlowConfig { steps: 0, ..FlowConfig::default() }.validate().is_err());
        assert!(FlowConfig::default().validate().is_ok());
    }
}
