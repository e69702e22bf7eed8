//! Poisson bivectors in their native charts, with first partials of every
//! coefficient written out by hand so that Jacobi and Casimir defects reach
//! machine precision.

mod group;
mod pushforward;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spaces::{Bivector3, Chart, QStarPoint, QPoint};
use crate::special::{lcoth, lcoth_slope};

pub use group::{
    fitted_normalization, induced_bracket, left_translation_jacobian, multiplicativity_defect,
    pig_bracket, pig_tensor, right_translation_jacobian, Bivector4, GroupEntry,
};
pub use pushforward::{
    fd_jacobian, fd_jacobian_fn, fd_step, pushforward, pushforward_with, transform_bivector, DiffMap,
    IdentityMap, JacobianMode, Mat3,
};

/// The Poisson structures that have closed coordinate forms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum StructureId {
    /// Linear structure on `q`.
    Pi0,
    /// Quadratic-exponential structure on `AN`.
    PiAN,
    /// Image of `π_AN` on `Q`.
    PiQ,
    /// `(λ coth λ + z) π₀` on `q_adm`.
    PiAdm,
    /// `π_t(v) = π(tv)/t`, defined for `t > 0`.
    PiT(f64),
}

impl fmt::Display for StructureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureId::Pi0 => f.write_str("pi0"),
            StructureId::PiAN => f.write_str("pi_an"),
            StructureId::PiQ => f.write_str("pi_q"),
            StructureId::PiAdm => f.write_str("pi"),
            StructureId::PiT(t) => write!(f, "pi_t({t})"),
        }
    }
}

impl StructureId {
    pub fn pi_t(t: f64) -> Result<Self> {
        if t > 0.0 && t.is_finite() {
            Ok(StructureId::PiT(t))
        } else {
            Err(Error::InvalidArgument(format!("π_t needs t > 0, got {t}")))
        }
    }

    pub fn supports(&self, chart: Chart) -> bool {
        matches!(
            (self, chart),
            (StructureId::Pi0, Chart::RectQStar | Chart::GTStar)
                | (StructureId::PiAN, Chart::RectAN)
                | (StructureId::PiQ, Chart::RectQ | Chart::GTQ)
                | (StructureId::PiAdm, Chart::RectQStar | Chart::Hyperbolic)
                | (StructureId::PiT(_), Chart::RectQStar)
        )
    }
}

/// Bivector coefficients together with their first partials.
/// `grad[k][l]` is the derivative of the k-th stored coefficient
/// (`p12`, `p13`, `p23`) with respect to the l-th chart coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BivectorJet {
    pub value: Bivector3,
    pub grad: [[f64; 3]; 3],
}

impl BivectorJet {
    /// `∂ₗ P^{ij}` over the full antisymmetric matrix.
    pub fn matrix_partials(&self) -> [[[f64; 3]; 3]; 3] {
        let mut d = [[[0.0; 3]; 3]; 3];
        for l in 0..3 {
            let (a, b, c) = (self.grad[0][l], self.grad[1][l], self.grad[2][l]);
            d[0][1][l] = a;
            d[1][0][l] = -a;
            d[0][2][l] = b;
            d[2][0][l] = -b;
            d[1][2][l] = c;
            d[2][1][l] = -c;
        }
        d
    }
}

fn unsupported(s: StructureId, chart: Chart) -> Error {
    Error::UnsupportedChart { structure: s.to_string(), chart }
}

fn require_admissible_rect(p: &[f64; 3]) -> Result<QStarPoint> {
    let q = QStarPoint::from_array(*p)?;
    q.require_admissible()?;
    Ok(q)
}

/// π₀ in `(x, y, z)`: `−z ∂x∧∂y + y ∂z∧∂x + x ∂y∧∂z`.
fn pi0_rect(p: &[f64; 3]) -> BivectorJet {
    let [x, y, z] = *p;
    BivectorJet {
        value: Bivector3::new(Chart::RectQStar, -z, -y, x),
        grad: [[0.0, 0.0, -1.0], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]],
    }
}

/// `(tλ coth(tλ) + t z) π₀`; `t = 1` gives π on `q_adm`.
fn pi_t_rect(t: f64, p: &[f64; 3]) -> Result<BivectorJet> {
    let q = require_admissible_rect(p)?;
    let [x, y, z] = *p;
    let tl = t * q.lambda();
    let k = lcoth(tl) + t * z;
    let slope = t * t * lcoth_slope(tl);
    let dk = [-slope * x, -slope * y, slope * z + t];
    let base = pi0_rect(p);
    let b = [base.value.p12, base.value.p13, base.value.p23];
    let mut grad = [[0.0; 3]; 3];
    for i in 0..3 {
        for l in 0..3 {
            grad[i][l] = dk[l] * b[i] + k * base.grad[i][l];
        }
    }
    Ok(BivectorJet { value: base.value.scale(k), grad })
}

/// Coefficients and partials of structure `s` in `chart` at chart coordinates `p`.
pub fn tensor_jet(s: StructureId, chart: Chart, p: &[f64; 3]) -> Result<BivectorJet> {
    if !p.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite("chart coordinates"));
    }
    let zero = [[0.0; 3]; 3];
    match (s, chart) {
        (StructureId::Pi0, Chart::RectQStar) => Ok(pi0_rect(p)),
        // ∂θ∧∂z in (z, λ, θ)
        (StructureId::Pi0, Chart::GTStar) => {
            Ok(BivectorJet { value: Bivector3::new(chart, 0.0, -1.0, 0.0), grad: zero })
        }
        (StructureId::PiAN, Chart::RectAN) => {
            let [x, y, z] = *p;
            Ok(BivectorJet {
                value: Bivector3::new(chart, -z.sinh(), -y, x),
                grad: [[0.0, 0.0, -z.cosh()], [0.0, -1.0, 0.0], [1.0, 0.0, 0.0]],
            })
        }
        (StructureId::PiQ, Chart::RectQ) => {
            let [a, b, c] = *p;
            Ok(BivectorJet {
                value: Bivector3::new(chart, 0.5 * (1.0 - a * a - b * b - c * c), -b * c, a * c),
                grad: [[-a, -b, -c], [0.0, -c, -b], [c, 0.0, a]],
            })
        }
        // ∂θ∧∂w in (w, λ, θ)
        (StructureId::PiQ, Chart::GTQ) => {
            Ok(BivectorJet { value: Bivector3::new(chart, 0.0, -1.0, 0.0), grad: zero })
        }
        (StructureId::PiAdm, Chart::RectQStar) => pi_t_rect(1.0, p),
        // (coth λ + cosh s)/sinh s ∂φ∧∂s in (λ, φ, s)
        (StructureId::PiAdm, Chart::Hyperbolic) => {
            let [l, _, s] = *p;
            if !(l > 0.0 && s > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "hyperbolic form of π needs λ > 0 and s > 0 (got λ = {l}, s = {s})"
                )));
            }
            let (sh, ch) = (s.sinh(), s.cosh());
            let coth = 1.0 / l.tanh();
            let shl = l.sinh();
            let g = (coth + ch) / sh;
            let dl = -1.0 / (shl * shl * sh);
            let ds = -(1.0 + coth * ch) / (sh * sh);
            Ok(BivectorJet {
                value: Bivector3::new(chart, 0.0, 0.0, g),
                grad: [[0.0; 3], [0.0; 3], [dl, 0.0, ds]],
            })
        }
        (StructureId::PiT(t), Chart::RectQStar) => {
            StructureId::pi_t(t)?;
            pi_t_rect(t, p)
        }
        _ => Err(unsupported(s, chart)),
    }
}

pub fn tensor_at(s: StructureId, chart: Chart, p: &[f64; 3]) -> Result<Bivector3> {
    Ok(tensor_jet(s, chart, p)?.value)
}

type ValueFn = dyn Fn(&[f64; 3]) -> f64 + Send + Sync;
type GradFn = dyn Fn(&[f64; 3]) -> [f64; 3] + Send + Sync;

/// A function on a 3-dimensional chart, optionally carrying its gradient.
#[derive(Clone)]
pub struct ScalarField {
    name: String,
    value: Arc<ValueFn>,
    gradient: Option<Arc<GradFn>>,
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarField")
            .field("name", &self.name)
            .field("analytic_gradient", &self.gradient.is_some())
            .finish()
    }
}

/// How gradients are obtained when a bracket is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GradientMode {
    /// Use the analytic gradient when the field has one.
    Analytic,
    /// Always use central differences with one Richardson level.
    FiniteDifference,
}

impl ScalarField {
    pub fn new(name: impl Into<String>, f: impl Fn(&[f64; 3]) -> f64 + Send + Sync + 'static) -> Self {
        Self { name: name.into(), value: Arc::new(f), gradient: None }
    }

    pub fn with_gradient(mut self, g: impl Fn(&[f64; 3]) -> [f64; 3] + Send + Sync + 'static) -> Self {
        self.gradient = Some(Arc::new(g));
        self
    }

    /// The i-th chart coordinate.
    pub fn coordinate(i: usize) -> Self {
        assert!(i < 3, "coordinate index out of range");
        let mut e = [0.0; 3];
        e[i] = 1.0;
        Self::new(format!("x{}", i + 1), move |p| p[i]).with_gradient(move |_| e)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, p: &[f64; 3]) -> f64 {
        (self.value)(p)
    }

    pub fn has_gradient(&self) -> bool {
        self.gradient.is_some()
    }

    pub fn gradient(&self, p: &[f64; 3], mode: GradientMode) -> [f64; 3] {
        match (&self.gradient, mode) {
            (Some(g), GradientMode::Analytic) => g(p),
            _ => {
                let j = fd_jacobian_fn(|q| Ok([(self.value)(q), 0.0, 0.0]), p, [false; 3])
                    .expect("scalar field evaluation is infallible");
                j[0]
            }
        }
    }
}

/// `{f, g}(p) = Σ πⁱʲ ∂ᵢf ∂ⱼg`.
pub fn bracket(
    s: StructureId,
    chart: Chart,
    f: &ScalarField,
    g: &ScalarField,
    p: &[f64; 3],
    mode: GradientMode,
) -> Result<f64> {
    let pm = tensor_at(s, chart, p)?.to_matrix();
    let df = f.gradient(p, mode);
    let dg = if Arc::ptr_eq(&f.value, &g.value) { df } else { g.gradient(p, mode) };
    let mut acc = 0.0;
    for i in 0..3 {
        for j in (i + 1)..3 {
            acc += pm[i][j] * (df[i] * dg[j] - df[j] * dg[i]);
        }
    }
    Ok(acc)
}

/// `|{x₁,{x₂,x₃}} + {x₂,{x₃,x₁}} + {x₃,{x₁,x₂}}|` from the analytic partials.
pub fn jacobi_defect(s: StructureId, chart: Chart, p: &[f64; 3]) -> Result<f64> {
    Ok(jacobiator(&tensor_jet(s, chart, p)?).abs())
}

/// Signed Jacobiator of the coordinate functions for a bivector jet.
pub fn jacobiator(jet: &BivectorJet) -> f64 {
    let m = jet.value.to_matrix();
    let d = jet.matrix_partials();
    let (i, j, k) = (0, 1, 2);
    (0..3)
        .map(|l| m[i][l] * d[j][k][l] + m[j][l] * d[k][i][l] + m[k][l] * d[i][j][l])
        .sum()
}

/// The Casimir registered for each supported (structure, chart) pair.
pub fn registered_casimir(s: StructureId, chart: Chart) -> Option<ScalarField> {
    match (s, chart) {
        (StructureId::Pi0, Chart::RectQStar) => Some(
            ScalarField::new("z^2-x^2-y^2", |p| p[2] * p[2] - p[0] * p[0] - p[1] * p[1])
                .with_gradient(|p| [-2.0 * p[0], -2.0 * p[1], 2.0 * p[2]]),
        ),
        (StructureId::PiAdm | StructureId::PiT(_), Chart::RectQStar) => Some(
            ScalarField::new("x^2+y^2-z^2", |p| p[0] * p[0] + p[1] * p[1] - p[2] * p[2])
                .with_gradient(|p| [2.0 * p[0], 2.0 * p[1], -2.0 * p[2]]),
        ),
        (StructureId::PiAN, Chart::RectAN) => Some(
            ScalarField::new("2cosh(z)-x^2-y^2", |p| 2.0 * p[2].cosh() - p[0] * p[0] - p[1] * p[1])
                .with_gradient(|p| [-2.0 * p[0], -2.0 * p[1], 2.0 * p[2].sinh()]),
        ),
        (StructureId::PiQ, Chart::RectQ) => Some(
            ScalarField::new("(1+c^2-a^2-b^2)/c", |p| {
                let q = QPoint { a: p[0], b: p[1], c: p[2] };
                q.trace()
            })
            .with_gradient(|p| {
                let [a, b, c] = *p;
                [-2.0 * a / c, -2.0 * b / c, (c * c - 1.0 + a * a + b * b) / (c * c)]
            }),
        ),
        (StructureId::Pi0, Chart::GTStar) | (StructureId::PiQ, Chart::GTQ) => {
            Some(ScalarField::coordinate(1))
        }
        (StructureId::PiAdm, Chart::Hyperbolic) => Some(ScalarField::coordinate(0)),
        _ => None,
    }
}

/// `max_i |{C, xᵢ}|` for a given Casimir candidate.
pub fn casimir_defect_of(
    s: StructureId,
    chart: Chart,
    casimir: &ScalarField,
    p: &[f64; 3],
    mode: GradientMode,
) -> Result<f64> {
    let pm = tensor_at(s, chart, p)?.to_matrix();
    let dc = casimir.gradient(p, mode);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let v: f64 = (0..3).map(|j| dc[j] * pm[j][i]).sum();
        worst = worst.max(v.abs());
    }
    Ok(worst)
}

/// Casimir defect for the registered Casimir of `s` in `chart`.
pub fn casimir_defect(s: StructureId, chart: Chart, p: &[f64; 3], mode: GradientMode) -> Result<f64> {
    let c = registered_casimir(s, chart).ok_or_else(|| unsupported(s, chart))?;
    casimir_defect_of(s, chart, &c, p, mode)
}

/// Coefficient of `i ∂w∧∂w̄` in the sphere family:
/// `(1 − |w|²)|w|² + τ(1 − |w|²)²`.
pub fn sphere_family_coeff(w: crate::algebra::ComplexScalar, tau: f64) -> f64 {
    let n = w.norm_sqr();
    let m = 1.0 - n;
    m * n + tau * m * m
}
