//! Coordinate points on `q ≅ su(1,1)*`, the dual group `AN`, the symmetric
//! space `Q` and the group `SU(1,1)`, together with the hyperbolic and
//! Gelfand-Tsetlin charts on the admissible loci.
//!
//! Matrix realizations:
//!
//! ```text
//! q  : [[z, x+iy], [-x+iy, -z]]
//! AN : [[e^{z/2}, x+iy], [0, e^{-z/2}]]
//! Q' : [[c, a+ib], [-a+ib, (1-a²-b²)/c]]
//! G  : [[u, v], [v̄, ū]],  |u|² − |v|² = 1
//! ```

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{ComplexScalar, Mat2C};
use crate::error::{finite, Error, Result};
use crate::special::{wrap_angle, wrap_difference};

/// Tolerance used by `from_matrix` when checking that a matrix has the
/// required shape, relative to `max(1, ‖M‖∞)`.
pub const SHAPE_TOLERANCE: f64 = 1e-10;

/// Identifies a coordinate chart. Coordinate order within each chart:
///
/// | chart        | coordinates   |
/// |--------------|---------------|
/// | `RectQStar`  | `(x, y, z)`   |
/// | `RectAN`     | `(x, y, z)`   |
/// | `RectQ`      | `(a, b, c)`   |
/// | `Hyperbolic` | `(λ, φ, s)`   |
/// | `GTStar`     | `(z, λ, θ)`   |
/// | `GTQ`        | `(w, λ, θ)`   |
/// | `Group`      | `(Re u, Im u, Re v, Im v)` |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chart {
    RectQStar,
    RectAN,
    RectQ,
    Hyperbolic,
    GTStar,
    GTQ,
    Group,
}

impl Chart {
    /// Positions of angular coordinates, which live in `[0, 2π)`.
    pub fn angular(self) -> [bool; 3] {
        match self {
            Chart::Hyperbolic => [false, true, false],
            Chart::GTStar | Chart::GTQ => [false, false, true],
            _ => [false; 3],
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Chart::RectQStar => "rect-q*",
            Chart::RectAN => "rect-an",
            Chart::RectQ => "rect-q",
            Chart::Hyperbolic => "hyperbolic",
            Chart::GTStar => "gt-q*",
            Chart::GTQ => "gt-q",
            Chart::Group => "group",
        };
        f.write_str(name)
    }
}

/// A point of `q ≅ su(1,1)*`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QStarPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl QStarPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Ok(Self { x: finite(x, "q* point")?, y: finite(y, "q* point")?, z: finite(z, "q* point")? })
    }

    pub fn from_array(p: [f64; 3]) -> Result<Self> {
        Self::new(p[0], p[1], p[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// `√(x² + y²)`.
    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// The Casimir `z² − x² − y²`, evaluated as `(z − r)(z + r)`.
    pub fn minkowski_sq(&self) -> f64 {
        let r = self.radius();
        (self.z - r) * (self.z + r)
    }

    /// `λ = √(z² − x² − y²)`; zero outside the closed cone.
    pub fn lambda(&self) -> f64 {
        self.minkowski_sq().max(0.0).sqrt()
    }

    /// Open cone `z > 0, z² > x² + y²`.
    pub fn is_admissible(&self) -> bool {
        self.z > 0.0 && self.z > self.radius()
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible {
                space: "q*",
                reason: format!("z = {}, z² − x² − y² = {}", self.z, self.minkowski_sq()),
            })
        }
    }

    pub fn scaled(&self, t: f64) -> QStarPoint {
        QStarPoint { x: t * self.x, y: t * self.y, z: t * self.z }
    }
}

/// A point of the dual group `AN`, stored in the order `(z, x, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ANPoint {
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl ANPoint {
    pub fn new(z: f64, x: f64, y: f64) -> Result<Self> {
        Ok(Self { z: finite(z, "AN point")?, x: finite(x, "AN point")?, y: finite(y, "AN point")? })
    }

    /// A diagonal element `diag(e^{z/2}, e^{-z/2})`.
    pub fn diagonal(z: f64) -> Self {
        Self { z, x: 0.0, y: 0.0 }
    }

    /// Coordinates in the `RectAN` chart order `(x, y, z)`.
    pub fn chart_coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn from_chart_coords(p: [f64; 3]) -> Result<Self> {
        Self::new(p[2], p[0], p[1])
    }

    /// `Δ = e^z + e^{-z} − (x² + y²)`, the trace of `b†b`.
    pub fn delta(&self) -> f64 {
        2.0 * self.z.cosh() - (self.x * self.x + self.y * self.y)
    }

    /// `z > 0` and `Δ > 2`.
    pub fn is_admissible(&self) -> bool {
        self.z > 0.0 && self.delta() > 2.0
    }
}

/// A point of `Q` in the chart `Q'` (where `c ≠ 0`); only `c > 0` is used.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QPoint {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl QPoint {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let p = Self { a: finite(a, "Q point")?, b: finite(b, "Q point")?, c: finite(c, "Q point")? };
        if c > 0.0 {
            Ok(p)
        } else {
            Err(Error::InvalidArgument(format!("Q point needs c > 0, got {c}")))
        }
    }

    pub fn from_array(p: [f64; 3]) -> Result<Self> {
        Self::new(p[0], p[1], p[2])
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// Lower-right entry `(1 − a² − b²) / c`.
    pub fn d(&self) -> f64 {
        (1.0 - self.a * self.a - self.b * self.b) / self.c
    }

    /// The trace `c + d`, a Casimir of `π_Q`.
    pub fn trace(&self) -> f64 {
        self.c + self.d()
    }

    /// `T > 2` and `c > T/2`, i.e. the image of the admissible cone under exp.
    pub fn is_admissible(&self) -> bool {
        let t = self.trace();
        t > 2.0 && self.c > 0.5 * t
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible {
                space: "Q",
                reason: format!("trace = {}, c = {}", self.trace(), self.c),
            })
        }
    }
}

/// An element `[[u, v], [v̄, ū]]` of `SU(1,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GElement {
    pub u: ComplexScalar,
    pub v: ComplexScalar,
}

impl GElement {
    /// Accepts `(u, v)` when `|u|² − |v|² = 1` to `1e-12 · max(1, |u|²)`.
    pub fn new(u: ComplexScalar, v: ComplexScalar) -> Result<Self> {
        if !(u.re.is_finite() && u.im.is_finite() && v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::NonFinite("group element"));
        }
        let nu = u.norm_sqr();
        let residual = (nu - v.norm_sqr() - 1.0).abs();
        if residual > 1e-12 * nu.max(1.0) {
            return Err(Error::ShapeViolation { space: "SU(1,1)", residual });
        }
        Ok(Self { u, v })
    }

    pub fn identity() -> Self {
        Self { u: Complex64::new(1.0, 0.0), v: Complex64::new(0.0, 0.0) }
    }

    /// `u = cosh(r) e^{iα}`, `v = sinh(r) e^{iβ}`.
    pub fn from_boost(r: f64, alpha: f64, beta: f64) -> Self {
        Self { u: Complex64::from_polar(r.cosh(), alpha), v: Complex64::from_polar(r.sinh(), beta) }
    }

    pub fn inverse(&self) -> Self {
        Self { u: self.u.conj(), v: -self.v }
    }

    pub fn chart_coords(&self) -> [f64; 4] {
        [self.u.re, self.u.im, self.v.re, self.v.im]
    }
}

/// Hyperbolic coordinates `(λ, φ, s)` on the admissible cone.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypCoords {
    pub lambda: f64,
    pub phi: f64,
    pub s: f64,
    /// Set when `x = y = 0`; `φ` is then 0 by convention.
    pub on_axis: bool,
}

impl HypCoords {
    pub fn to_array(self) -> [f64; 3] {
        [self.lambda, self.phi, self.s]
    }
}

/// Gelfand-Tsetlin coordinates `(z, λ, θ)` on `q_adm`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GTStarCoords {
    pub z: f64,
    pub lambda: f64,
    pub theta: f64,
    pub on_axis: bool,
}

impl GTStarCoords {
    pub fn to_array(self) -> [f64; 3] {
        [self.z, self.lambda, self.theta]
    }
}

/// Gelfand-Tsetlin coordinates `(w, λ, θ)` on `Q_adm`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GTQCoords {
    pub w: f64,
    pub lambda: f64,
    pub theta: f64,
    pub on_axis: bool,
}

impl GTQCoords {
    pub fn to_array(self) -> [f64; 3] {
        [self.w, self.lambda, self.theta]
    }
}

/// An antisymmetric 2-tensor on a 3-dimensional chart, stored by its
/// independent coefficients of `∂₁∧∂₂`, `∂₁∧∂₃`, `∂₂∧∂₃`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bivector3 {
    pub chart: Chart,
    pub p12: f64,
    pub p13: f64,
    pub p23: f64,
}

impl Bivector3 {
    pub fn new(chart: Chart, p12: f64, p13: f64, p23: f64) -> Self {
        Self { chart, p12, p13, p23 }
    }

    pub fn zero(chart: Chart) -> Self {
        Self::new(chart, 0.0, 0.0, 0.0)
    }

    /// Coefficient of `∂ᵢ∧∂ⱼ` (0-based), extended by antisymmetry.
    pub fn component(&self, i: usize, j: usize) -> f64 {
        self.to_matrix()[i][j]
    }

    pub fn to_matrix(&self) -> [[f64; 3]; 3] {
        [[0.0, self.p12, self.p13], [-self.p12, 0.0, self.p23], [-self.p13, -self.p23, 0.0]]
    }

    /// Reads the upper triangle of `m`.
    pub fn from_matrix(chart: Chart, m: &[[f64; 3]; 3]) -> Self {
        Self::new(chart, m[0][1], m[0][2], m[1][2])
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.chart, k * self.p12, k * self.p13, k * self.p23)
    }

    pub fn norm_inf(&self) -> f64 {
        self.p12.abs().max(self.p13.abs()).max(self.p23.abs())
    }

    /// `‖self − other‖∞`; both must be expressed in the same chart.
    pub fn dist_inf(&self, other: &Bivector3) -> f64 {
        debug_assert_eq!(self.chart, other.chart, "comparing bivectors across charts");
        (self.p12 - other.p12)
            .abs()
            .max((self.p13 - other.p13).abs())
            .max((self.p23 - other.p23).abs())
    }
}

/// Matrix realization of a point, with its inverse.
pub trait MatrixRealization: Sized {
    const SPACE: &'static str;
    fn to_matrix(&self) -> Mat2C;
    /// Inverts `to_matrix`, failing with the shape residual when `m` is not
    /// in the space to within [`SHAPE_TOLERANCE`].
    fn from_matrix(m: &Mat2C) -> Result<Self>;
}

fn check_shape(space: &'static str, m: &Mat2C, residual: f64) -> Result<()> {
    if !m.is_finite() {
        return Err(Error::NonFinite("matrix entry"));
    }
    if residual > SHAPE_TOLERANCE * m.norm_inf().max(1.0) || residual.is_nan() {
        Err(Error::ShapeViolation { space, residual })
    } else {
        Ok(())
    }
}

impl MatrixRealization for QStarPoint {
    const SPACE: &'static str = "q*";

    fn to_matrix(&self) -> Mat2C {
        Mat2C::new(
            self.z.into(),
            Complex64::new(self.x, self.y),
            Complex64::new(-self.x, self.y),
            (-self.z).into(),
        )
    }

    fn from_matrix(m: &Mat2C) -> Result<Self> {
        let residual = m.m11.im.abs()
            .max(m.m22.im.abs())
            .max((m.m11.re + m.m22.re).abs())
            .max((m.m21 + m.m12.conj()).norm());
        check_shape(Self::SPACE, m, residual)?;
        QStarPoint::new(m.m12.re, m.m12.im, m.m11.re)
    }
}

impl MatrixRealization for ANPoint {
    const SPACE: &'static str = "AN";

    fn to_matrix(&self) -> Mat2C {
        let h = 0.5 * self.z;
        Mat2C::new(h.exp().into(), Complex64::new(self.x, self.y), 0.0.into(), (-h).exp().into())
    }

    fn from_matrix(m: &Mat2C) -> Result<Self> {
        if m.m11.re <= 0.0 {
            return Err(Error::ShapeViolation { space: Self::SPACE, residual: m.m11.re.abs() });
        }
        let residual = m.m21.norm()
            .max(m.m11.im.abs())
            .max(m.m22.im.abs())
            .max((m.m11.re * m.m22.re - 1.0).abs());
        check_shape(Self::SPACE, m, residual)?;
        ANPoint::new(2.0 * m.m11.re.ln(), m.m12.re, m.m12.im)
    }
}

impl MatrixRealization for QPoint {
    const SPACE: &'static str = "Q";

    fn to_matrix(&self) -> Mat2C {
        Mat2C::new(
            self.c.into(),
            Complex64::new(self.a, self.b),
            Complex64::new(-self.a, self.b),
            self.d().into(),
        )
    }

    fn from_matrix(m: &Mat2C) -> Result<Self> {
        if m.m11.re <= 0.0 {
            return Err(Error::ShapeViolation { space: Self::SPACE, residual: m.m11.re.abs() });
        }
        let residual = m.m11.im.abs()
            .max(m.m22.im.abs())
            .max((m.m21 + m.m12.conj()).norm())
            .max((m.det() - 1.0).norm());
        check_shape(Self::SPACE, m, residual)?;
        QPoint::new(m.m12.re, m.m12.im, m.m11.re)
    }
}

impl MatrixRealization for GElement {
    const SPACE: &'static str = "SU(1,1)";

    fn to_matrix(&self) -> Mat2C {
        Mat2C::new(self.u, self.v, self.v.conj(), self.u.conj())
    }

    fn from_matrix(m: &Mat2C) -> Result<Self> {
        let residual = (m.m21 - m.m12.conj()).norm()
            .max((m.m22 - m.m11.conj()).norm())
            .max((m.det() - 1.0).norm());
        check_shape(Self::SPACE, m, residual)?;
        GElement::new(m.m11, m.m12)
    }
}

/// Rectangular to hyperbolic coordinates. `s` is computed as
/// `asinh(r/λ)`, which equals `cosh⁻¹(z/λ)` on the cone.
pub fn hyp_of_rect(p: &QStarPoint) -> Result<HypCoords> {
    p.require_admissible()?;
    let lambda = p.lambda();
    let r = p.radius();
    let on_axis = r == 0.0;
    let phi = if on_axis { 0.0 } else { wrap_angle(p.y.atan2(p.x)) };
    Ok(HypCoords { lambda, phi, s: (r / lambda).asinh(), on_axis })
}

pub fn rect_of_hyp(h: &HypCoords) -> Result<QStarPoint> {
    if !(h.lambda > 0.0 && h.s >= 0.0) {
        return Err(Error::InvalidArgument(format!("hyperbolic coordinates need λ > 0, s ≥ 0: {h:?}")));
    }
    let rho = h.lambda * h.s.sinh();
    QStarPoint::new(rho * h.phi.cos(), rho * h.phi.sin(), h.lambda * h.s.cosh())
}

pub fn gtstar_of_rect(p: &QStarPoint) -> Result<GTStarCoords> {
    p.require_admissible()?;
    let on_axis = p.radius() == 0.0;
    let theta = if on_axis { 0.0 } else { wrap_angle(p.y.atan2(p.x)) };
    Ok(GTStarCoords { z: p.z, lambda: p.lambda(), theta, on_axis })
}

pub fn rect_of_gtstar(g: &GTStarCoords) -> Result<QStarPoint> {
    if !(g.lambda > 0.0 && g.z >= g.lambda) {
        return Err(Error::InvalidArgument(format!("GT coordinates need z ≥ λ > 0: {g:?}")));
    }
    let rho = ((g.z - g.lambda) * (g.z + g.lambda)).sqrt();
    QStarPoint::new(rho * g.theta.cos(), rho * g.theta.sin(), g.z)
}

pub fn gtq_of_qpoint(q: &QPoint) -> Result<GTQCoords> {
    q.require_admissible()?;
    let on_axis = q.a == 0.0 && q.b == 0.0;
    let theta = if on_axis { 0.0 } else { wrap_angle(q.b.atan2(q.a)) };
    Ok(GTQCoords { w: q.c.ln(), lambda: (0.5 * q.trace()).acosh(), theta, on_axis })
}

pub fn qpoint_of_gtq(g: &GTQCoords) -> Result<QPoint> {
    if !(g.lambda > 0.0 && g.w >= g.lambda) {
        return Err(Error::InvalidArgument(format!("GT coordinates need w ≥ λ > 0: {g:?}")));
    }
    // (e^w − e^λ)(e^w − e^{−λ}) with the first factor written as e^λ·expm1(w − λ)
    let radicand = g.lambda.exp() * (g.w - g.lambda).exp_m1() * (g.w.exp() - (-g.lambda).exp());
    let rho = radicand.max(0.0).sqrt();
    QPoint::new(rho * g.theta.cos(), rho * g.theta.sin(), g.w.exp())
}

/// Largest component-wise difference between two chart coordinate triples,
/// with angular components compared modulo 2π.
pub fn chart_distance(chart: Chart, p: &[f64; 3], q: &[f64; 3]) -> f64 {
    let angular = chart.angular();
    (0..3)
        .map(|i| {
            let d = p[i] - q[i];
            if angular[i] { wrap_difference(d).abs() } else { d.abs() }
        })
        .fold(0.0, f64::max)
}
