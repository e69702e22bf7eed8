//! The quadratic Poisson structure on `SU(1,1)`, both from its entrywise
//! bracket table and as `(r_g)_*Λ − (l_g)_*Λ` with `Λ = ½ X∧Y`.
//!
//! Tangent vectors are written in the real chart `(Re u, Im u, Re v, Im v)`;
//! the set of matrices `[[α, β], [β̄, ᾱ]]` is closed under products, so left
//! and right translations act on it as real 4×4 linear maps.

use num_complex::Complex64;

use crate::algebra::{ComplexScalar, Mat2C, BASIS_X, BASIS_Y};
use crate::spaces::{GElement, MatrixRealization};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupEntry {
    U,
    UBar,
    V,
    VBar,
}

impl GroupEntry {
    pub const ALL: [GroupEntry; 4] = [GroupEntry::U, GroupEntry::UBar, GroupEntry::V, GroupEntry::VBar];

    fn covector(self) -> [Complex64; 4] {
        let (o, z, i) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0));
        match self {
            GroupEntry::U => [o, i, z, z],
            GroupEntry::UBar => [o, -i, z, z],
            GroupEntry::V => [z, z, o, i],
            GroupEntry::VBar => [z, z, o, -i],
        }
    }
}

/// Antisymmetric 4×4 coefficient matrix in the group chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bivector4 {
    pub m: [[f64; 4]; 4],
}

impl Bivector4 {
    pub fn zero() -> Self {
        Self { m: [[0.0; 4]; 4] }
    }

    /// `a ∧ b = a bᵀ − b aᵀ`.
    pub fn wedge(a: &[f64; 4], b: &[f64; 4]) -> Self {
        let mut m = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = a[i] * b[j] - b[i] * a[j];
            }
        }
        Self { m }
    }

    pub fn norm_inf(&self) -> f64 {
        self.m.iter().flatten().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn dist_inf(&self, other: &Bivector4) -> f64 {
        (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .fold(0.0, |acc, (i, j)| acc.max((self.m[i][j] - other.m[i][j]).abs()))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.m[i][j] == -self.m[j][i]))
    }

    /// `A B Aᵀ`.
    pub fn transform(&self, a: &[[f64; 4]; 4]) -> Self {
        let mut out = [[0.0; 4]; 4];
        for r in 0..4 {
            for c in 0..4 {
                let mut acc = 0.0;
                for k in 0..4 {
                    for l in 0..4 {
                        acc += a[r][k] * self.m[k][l] * a[c][l];
                    }
                }
                out[r][c] = acc;
            }
        }
        Self { m: out }
    }
}

impl std::ops::Sub for Bivector4 {
    type Output = Bivector4;
    fn sub(self, o: Bivector4) -> Bivector4 {
        let mut m = self.m;
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] -= o.m[i][j];
            }
        }
        Bivector4 { m }
    }
}

impl std::ops::Add for Bivector4 {
    type Output = Bivector4;
    fn add(self, o: Bivector4) -> Bivector4 {
        let mut m = self.m;
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] += o.m[i][j];
            }
        }
        Bivector4 { m }
    }
}

fn coords(m: &Mat2C) -> [f64; 4] {
    [m.m11.re, m.m11.im, m.m12.re, m.m12.im]
}

fn basis() -> [Mat2C; 4] {
    let c = Complex64::new;
    [
        Mat2C::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)),
        Mat2C::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)),
        Mat2C::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)),
        Mat2C::new(c(0.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0)),
    ]
}

fn linear_map_matrix(f: impl Fn(&Mat2C) -> Mat2C) -> [[f64; 4]; 4] {
    let mut j = [[0.0; 4]; 4];
    for (col, e) in basis().iter().enumerate() {
        let image = coords(&f(e));
        for row in 0..4 {
            j[row][col] = image[row];
        }
    }
    j
}

/// Differential of `h ↦ g h`.
pub fn left_translation_jacobian(g: &GElement) -> [[f64; 4]; 4] {
    let gm = g.to_matrix();
    linear_map_matrix(|t| gm * *t)
}

/// Differential of `h ↦ h g`.
pub fn right_translation_jacobian(g: &GElement) -> [[f64; 4]; 4] {
    let gm = g.to_matrix();
    linear_map_matrix(|t| *t * gm)
}

fn lambda_at_identity() -> Bivector4 {
    let mut b = Bivector4::wedge(&coords(&BASIS_X), &coords(&BASIS_Y));
    for row in b.m.iter_mut() {
        for v in row.iter_mut() {
            *v *= 0.5;
        }
    }
    b
}

/// `π_G(g) = (r_g)_*Λ − (l_g)_*Λ`.
pub fn pig_tensor(g: &GElement) -> Bivector4 {
    let lam = lambda_at_identity();
    lam.transform(&right_translation_jacobian(g)) - lam.transform(&left_translation_jacobian(g))
}

/// Entrywise bracket table, extended by antisymmetry.
pub fn pig_bracket(i: GroupEntry, j: GroupEntry, g: &GElement) -> ComplexScalar {
    use GroupEntry::*;
    let (u, v) = (g.u, g.v);
    let (ub, vb) = (u.conj(), v.conj());
    let i_unit = Complex64::new(0.0, 1.0);
    let table = |a: GroupEntry, b: GroupEntry| -> Option<Complex64> {
        match (a, b) {
            (U, UBar) => Some(-2.0 * i_unit * v.norm_sqr()),
            (U, V) => Some(-i_unit * u * v),
            (U, VBar) => Some(-i_unit * u * vb),
            (UBar, V) => Some(i_unit * ub * v),
            (UBar, VBar) => Some(i_unit * ub * vb),
            (V, VBar) => Some(Complex64::new(0.0, 0.0)),
            _ => None,
        }
    };
    if i == j {
        return Complex64::new(0.0, 0.0);
    }
    table(i, j).or_else(|| table(j, i).map(|w| -w)).expect("every unordered pair is tabulated")
}

/// `{i, j}` read off a 4×4 bivector through complex coordinate differentials.
pub fn induced_bracket(b: &Bivector4, i: GroupEntry, j: GroupEntry) -> ComplexScalar {
    let (ci, cj) = (i.covector(), j.covector());
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..4 {
        for l in 0..4 {
            acc += ci[k] * b.m[k][l] * cj[l];
        }
    }
    acc
}

/// Ratio `{u, ū}_Λ / {u, ū}_table` at a point with `v ≠ 0`.
pub fn fitted_normalization(g: &GElement) -> Option<f64> {
    let table = pig_bracket(GroupEntry::U, GroupEntry::UBar, g);
    if table.norm() < 1e-8 {
        return None;
    }
    let induced = induced_bracket(&pig_tensor(g), GroupEntry::U, GroupEntry::UBar);
    Some(induced.im / table.im)
}

/// `‖π_G(gh) − (l_g)_*π_G(h) − (r_h)_*π_G(g)‖∞`.
pub fn multiplicativity_defect(g: &GElement, h: &GElement) -> f64 {
    let gh_m = g.to_matrix() * h.to_matrix();
    let gh = GElement { u: gh_m.m11, v: gh_m.m12 };
    let lhs = pig_tensor(&gh);
    let rhs = pig_tensor(h).transform(&left_translation_jacobian(g))
        + pig_tensor(g).transform(&right_translation_jacobian(h));
    lhs.dist_inf(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gives_zero_bivector() {
        assert_eq!(pig_tensor(&GElement::identity()).norm_inf(), 0.0);
    }

    #[test]
    fn table_examples() {
        let g = GElement::from_boost(0.8, 0.4, 2.1);
        assert_eq!(pig_bracket(GroupEntry::V, GroupEntry::VBar, &g), Complex64::new(0.0, 0.0));
        let torus = GElement::from_boost(0.0, 1.1, 0.0);
        assert_eq!(pig_bracket(GroupEntry::U, GroupEntry::UBar, &torus).norm(), 0.0);
        let g = GElement::new(Complex64::new(2f64.sqrt(), 0.0), Complex64::new(1.0, 0.0)).unwrap();
        let uv = pig_bracket(GroupEntry::U, GroupEntry::V, &g);
        assert!((uv - Complex64::new(0.0, -(2f64.sqrt()))).norm() < 1e-15);
    }

    #[test]
    fn table_is_antisymmetric() {
        let g = GElement::from_boost(0.3, -0.4, 1.0);
        for i in GroupEntry::ALL {
            for j in GroupEntry::ALL {
                assert_eq!(pig_bracket(i, j, &g), -pig_bracket(j, i, &g));
            }
        }
    }

    #[test]
    fn lambda_construction_is_antisymmetric_and_normalized() {
        let g = GElement::from_boost(1.3, 0.2, -2.0);
        assert!(pig_tensor(&g).is_antisymmetric());
        let k = fitted_normalization(&g).unwrap();
        assert!((k - 1.0).abs() < 1e-12);
        let vv = induced_bracket(&pig_tensor(&g), GroupEntry::V, GroupEntry::VBar);
        assert!(vv.norm() < 1e-12);
    }

    #[test]
    fn translations_preserve_group_shape() {
        let g = GElement::from_boost(0.6, 0.1, 0.9);
        let l = left_translation_jacobian(&g);
        let r = right_translation_jacobian(&g);
        // image of the identity direction (column 0) is g itself under both maps
        let gc = g.chart_coords();
        for row in 0..4 {
            assert!((l[row][0] - gc[row]).abs() < 1e-15);
            assert!((r[row][0] - gc[row]).abs() < 1e-15);
        }
    }
}
