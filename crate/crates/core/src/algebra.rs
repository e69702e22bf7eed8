//! Plain double-precision 2×2 complex linear algebra.
//!
//! Everything in the crate lives inside `sl(2, C)` or `SL(2, C)`, so a fixed
//! size matrix type with closed-form determinant, trace and eigenvalues is all
//! that is needed. The named constants are the basis `X, Y, H` of `su(1,1)`
//! and the signature matrix `J = diag(1, -1)` that defines the involution
//! `M† = J M̄ᵀ J`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used throughout the crate.
pub type ComplexScalar = Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Builds a complex scalar, rejecting NaN and infinities.
pub fn complex(re: f64, im: f64) -> Result<ComplexScalar> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::NonFinite("complex scalar"))
    }
}

/// A 2×2 complex matrix `[[m11, m12], [m21, m22]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2C {
    pub m11: Complex64,
    pub m12: Complex64,
    pub m21: Complex64,
    pub m22: Complex64,
}

/// `X = [[0, 1], [1, 0]]`.
pub const BASIS_X: Mat2C = Mat2C::new(ZERO, ONE, ONE, ZERO);
/// `Y = [[0, i], [-i, 0]]`.
pub const BASIS_Y: Mat2C = Mat2C::new(ZERO, I, Complex64::new(0.0, -1.0), ZERO);
/// `H = [[i, 0], [0, -i]]`.
pub const BASIS_H: Mat2C = Mat2C::new(I, ZERO, ZERO, Complex64::new(0.0, -1.0));
/// Signature matrix `J = diag(1, -1)` of the form `z1 w̄1 − z2 w̄2`.
pub const SIGNATURE_J: Mat2C = Mat2C::new(ONE, ZERO, ZERO, Complex64::new(-1.0, 0.0));

impl Mat2C {
    pub const IDENTITY: Mat2C = Mat2C::new(ONE, ZERO, ZERO, ONE);
    pub const ZERO: Mat2C = Mat2C::new(ZERO, ZERO, ZERO, ZERO);

    /// Unchecked constructor, for entries already known to be finite.
    pub const fn new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    /// Checked constructor: every entry must be finite.
    pub fn try_new(m11: Complex64, m12: Complex64, m21: Complex64, m22: Complex64) -> Result<Self> {
        let m = Self::new(m11, m12, m21, m22);
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    pub fn from_real(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Self::new(m11.into(), m12.into(), m21.into(), m22.into())
    }

    pub fn diag(a: Complex64, b: Complex64) -> Self {
        Self::new(a, ZERO, ZERO, b)
    }

    pub fn real_diag(a: f64, b: f64) -> Self {
        Self::diag(a.into(), b.into())
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.m11, self.m12, self.m21, self.m22]
    }

    pub fn det(&self) -> Complex64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    pub fn trace(&self) -> Complex64 {
        self.m11 + self.m22
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.m11, self.m21, self.m12, self.m22)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.m11.conj(), self.m12.conj(), self.m21.conj(), self.m22.conj())
    }

    /// `J M̄ᵀ J`; conjugate-transpose with the off-diagonal entries negated.
    pub fn dagger(&self) -> Self {
        Self::new(self.m11.conj(), -self.m21.conj(), -self.m12.conj(), self.m22.conj())
    }

    /// Inverse of a unimodular matrix by the adjugate formula.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.norm() == 0.0 {
            return Err(Error::InvalidArgument("singular matrix".into()));
        }
        Ok(Self::new(self.m22 / det, -self.m12 / det, -self.m21 / det, self.m11 / det))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::new(self.m11 * k, self.m12 * k, self.m21 * k, self.m22 * k)
    }

    /// Largest entry modulus.
    pub fn norm_inf(&self) -> f64 {
        self.entries().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn dist_inf(&self, other: &Mat2C) -> f64 {
        (*self - *other).norm_inf()
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Mat2C) -> Self {
        *self * *other - *other * *self
    }
}

impl Add for Mat2C {
    type Output = Mat2C;
    fn add(self, o: Mat2C) -> Mat2C {
        Mat2C::new(self.m11 + o.m11, self.m12 + o.m12, self.m21 + o.m21, self.m22 + o.m22)
    }
}

impl Sub for Mat2C {
    type Output = Mat2C;
    fn sub(self, o: Mat2C) -> Mat2C {
        Mat2C::new(self.m11 - o.m11, self.m12 - o.m12, self.m21 - o.m21, self.m22 - o.m22)
    }
}

impl Neg for Mat2C {
    type Output = Mat2C;
    fn neg(self) -> Mat2C {
        Mat2C::new(-self.m11, -self.m12, -self.m21, -self.m22)
    }
}

impl Mul for Mat2C {
    type Output = Mat2C;
    fn mul(self, o: Mat2C) -> Mat2C {
        Mat2C::new(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
        )
    }
}

impl Mul<f64> for Mat2C {
    type Output = Mat2C;
    fn mul(self, k: f64) -> Mat2C {
        self.scale(k.into())
    }
}

impl fmt::Display for Mat2C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

pub fn matmul(a: &Mat2C, b: &Mat2C) -> Mat2C {
    *a * *b
}

pub fn dagger(m: &Mat2C) -> Mat2C {
    m.dagger()
}

/// Roots of `μ² − tr(M) μ + det(M)`, ordered by descending real part and
/// then descending imaginary part.
///
/// The larger-magnitude root comes from the quadratic formula and the other
/// from `det / μ₁`, so tiny eigenvalues of badly scaled matrices keep their
/// relative accuracy.
pub fn eig2(m: &Mat2C) -> (ComplexScalar, ComplexScalar) {
    let tr = m.trace();
    let det = m.det();
    let sq = (tr * tr - det * 4.0).sqrt();
    let big = if (tr.conj() * sq).re >= 0.0 { (tr + sq) * 0.5 } else { (tr - sq) * 0.5 };
    let small = if big.norm() == 0.0 { tr - big } else { det / big };
    let first_is_larger = big.re > small.re || (big.re == small.re && big.im >= small.im);
    if first_is_larger {
        (big, small)
    } else {
        (small, big)
    }
}

/// The two invariant pairings of the Manin triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualPairing {
    /// `su(1,1)` against `q ≅ su(1,1)*`: `Im Tr(AB)`.
    Coadjoint,
    /// `su(1,1)` against `a + n`: `2 Im Tr(AB)`.
    Manin,
}

impl DualPairing {
    pub fn factor(self) -> f64 {
        match self {
            DualPairing::Coadjoint => 1.0,
            DualPairing::Manin => 2.0,
        }
    }
}

pub fn pairing(a: &Mat2C, b: &Mat2C, kind: DualPairing) -> f64 {
    kind.factor() * (*a * *b).trace().im
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn matmul_examples() {
        assert_eq!(Mat2C::IDENTITY * Mat2C::IDENTITY, Mat2C::IDENTITY);
        assert_eq!(Mat2C::real_diag(2.0, 0.5) * Mat2C::real_diag(0.5, 2.0), Mat2C::IDENTITY);
        let a = Mat2C::from_real(0.0, 1.0, 1.0, 0.0);
        let b = Mat2C::new(ZERO, I, ZERO, ZERO);
        assert_eq!(matmul(&a, &b), Mat2C::new(ZERO, ZERO, ZERO, I));
    }

    #[test]
    fn dagger_examples() {
        let q = Mat2C::new(c(0.7, 0.0), c(0.3, -1.1), c(-0.3, -1.1), c(-0.7, 0.0));
        assert_eq!(q.dagger(), q);
        let g = Mat2C::new(c(0.0, 0.4), c(1.5, 2.0), c(1.5, -2.0), c(0.0, -0.4));
        assert_eq!(g.dagger(), -g);
        let n = Mat2C::from_real(0.0, 1.0, 0.0, 0.0);
        assert_eq!(n.dagger(), Mat2C::from_real(0.0, 0.0, -1.0, 0.0));
        assert_eq!(n.dagger(), SIGNATURE_J * n.conj().transpose() * SIGNATURE_J);
    }

    #[test]
    fn eig2_examples() {
        let (a, b) = eig2(&Mat2C::real_diag(0.5, 2.0));
        assert_eq!((a, b), (c(2.0, 0.0), c(0.5, 0.0)));
        let m = Mat2C::new(c(1.0, 2.0), c(-0.5, 0.25), c(3.0, -1.0), c(0.1, 0.0));
        let (a, b) = eig2(&m);
        assert!((a + b - m.trace()).norm() < 1e-13);
        assert!((a * b - m.det()).norm() < 1e-13);
        assert!(a.re >= b.re);
    }

    #[test]
    fn eig2_orders_by_imaginary_part_on_ties() {
        let (a, b) = eig2(&Mat2C::diag(c(1.0, -1.0), c(1.0, 1.0)));
        assert_eq!(a, c(1.0, 1.0));
        assert_eq!(b, c(1.0, -1.0));
    }

    #[test]
    fn pairing_examples() {
        let h = BASIS_H;
        assert_eq!(pairing(&h, &Mat2C::real_diag(1.0, -1.0), DualPairing::Coadjoint), 2.0);
        let n = Mat2C::new(ZERO, I, ZERO, ZERO);
        assert_eq!(pairing(&BASIS_X, &n, DualPairing::Coadjoint), 1.0);
        assert_eq!(pairing(&BASIS_X, &n, DualPairing::Manin), 2.0);
        assert_eq!(pairing(&BASIS_X, &Mat2C::real_diag(1.0, -1.0), DualPairing::Coadjoint), 0.0);
    }

    #[test]
    fn bracket_relations_hold_exactly() {
        // the displayed matrices give [X, Y] = −2H
        assert_eq!(BASIS_X.commutator(&BASIS_Y), BASIS_H * -2.0);
        assert_eq!(BASIS_X.commutator(&BASIS_H), BASIS_Y * -2.0);
        assert_eq!(BASIS_Y.commutator(&BASIS_H), BASIS_X * 2.0);
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert!(complex(f64::NAN, 0.0).is_err());
        assert!(complex(0.0, f64::INFINITY).is_err());
        assert!(Mat2C::try_new(ONE, ZERO, c(f64::NAN, 0.0), ONE).is_err());
        assert!(Mat2C::try_new(ONE, ZERO, ZERO, ONE).is_ok());
    }
}
