use serde::{Deserialize, Serialize};

use super::{tensor_at, StructureId};
use crate::error::{Error, Result};
use crate::spaces::{Bivector3, Chart};
use crate::special::wrap_difference;

pub type Mat3 = [[f64; 3]; 3];

/// A smooth map between two 3-dimensional charts.
pub trait DiffMap: Sync {
    fn source_chart(&self) -> Chart;
    fn target_chart(&self) -> Chart;
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]>;

    /// Analytic Jacobian `∂ outᵢ / ∂ inⱼ`, when the map provides one.
    fn jacobian(&self, _p: &[f64; 3]) -> Option<Result<Mat3>> {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum JacobianMode {
    Analytic,
    FiniteDifference,
}

/// Identity on a chart.
#[derive(Clone, Copy, Debug)]
pub struct IdentityMap(pub Chart);

impl DiffMap for IdentityMap {
    fn source_chart(&self) -> Chart {
        self.0
    }
    fn target_chart(&self) -> Chart {
        self.0
    }
    fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
        Ok(*p)
    }
    fn jacobian(&self, _p: &[f64; 3]) -> Option<Result<Mat3>> {
        Some(Ok([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]))
    }
}

/// Base step `h = 1e-5 · max(1, ‖p‖)`.
pub fn fd_step(p: &[f64; 3]) -> f64 {
    let n = p.iter().map(|v| v * v).sum::<f64>().sqrt();
    1e-5 * n.max(1.0)
}

/// Central-difference Jacobian with one Richardson level (steps `h`, `h/2`).
/// Output components flagged in `periodic` are differenced modulo 2π.
pub fn fd_jacobian_fn<F>(f: F, p: &[f64; 3], periodic: [bool; 3]) -> Result<Mat3>
where
    F: Fn(&[f64; 3]) -> Result<[f64; 3]>,
{
    let h = fd_step(p);
    let central = |col: usize, step: f64| -> Result<[f64; 3]> {
        let mut plus = *p;
        let mut minus = *p;
        plus[col] += step;
        minus[col] -= step;
        let (fp, fm) = (f(&plus)?, f(&minus)?);
        let mut d = [0.0; 3];
        for i in 0..3 {
            let diff = if periodic[i] { wrap_difference(fp[i] - fm[i]) } else { fp[i] - fm[i] };
            d[i] = diff / (2.0 * step);
        }
        Ok(d)
    };
    let mut j = [[0.0; 3]; 3];
    for col in 0..3 {
        let coarse = central(col, h)?;
        let fine = central(col, 0.5 * h)?;
        for row in 0..3 {
            let v = (4.0 * fine[row] - coarse[row]) / 3.0;
            if !v.is_finite() {
                return Err(Error::SingularJacobian { row, col });
            }
            j[row][col] = v;
        }
    }
    Ok(j)
}

pub fn fd_jacobian(map: &dyn DiffMap, p: &[f64; 3]) -> Result<Mat3> {
    fd_jacobian_fn(|q| map.apply(q), p, map.target_chart().angular())
}

/// `J B Jᵀ` re-tagged with the target chart.
pub fn transform_bivector(j: &Mat3, b: &Bivector3, target: Chart) -> Bivector3 {
    let m = b.to_matrix();
    let mut out = [[0.0; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            let mut acc = 0.0;
            for k in 0..3 {
                for l in 0..3 {
                    acc += j[r][k] * m[k][l] * j[c][l];
                }
            }
            out[r][c] = acc;
        }
    }
    Bivector3::from_matrix(target, &out)
}

/// Pushes an explicit bivector at `p` forward along `map`.
pub fn pushforward_with(map: &dyn DiffMap, b: &Bivector3, p: &[f64; 3], mode: JacobianMode) -> Result<Bivector3> {
    if b.chart != map.source_chart() {
        return Err(Error::InvalidArgument(format!(
            "bivector is in chart {} but the map starts in {}",
            b.chart,
            map.source_chart()
        )));
    }
    let j = match mode {
        JacobianMode::Analytic => map
            .jacobian(p)
            .ok_or_else(|| Error::InvalidArgument("map has no analytic Jacobian".into()))??,
        JacobianMode::FiniteDifference => fd_jacobian(map, p)?,
    };
    for (row, r) in j.iter().enumerate() {
        for (col, v) in r.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::SingularJacobian { row, col });
            }
        }
    }
    Ok(transform_bivector(&j, b, map.target_chart()))
}

/// `(F_* π)(F(p)) = J(p) π(p) J(p)ᵀ`, expressed in the map's target chart.
pub fn pushforward(map: &dyn DiffMap, s: StructureId, p: &[f64; 3], mode: JacobianMode) -> Result<Bivector3> {
    let b = tensor_at(s, map.source_chart(), p)?;
    pushforward_with(map, &b, p, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    struct RotateZ(f64);

    impl DiffMap for RotateZ {
        fn source_chart(&self) -> Chart {
            Chart::RectQStar
        }
        fn target_chart(&self) -> Chart {
            Chart::RectQStar
        }
        fn apply(&self, p: &[f64; 3]) -> Result<[f64; 3]> {
            let (s, c) = self.0.sin_cos();
            Ok([c * p[0] - s * p[1], s * p[0] + c * p[1], p[2]])
        }
    }

    #[test]
    fn identity_leaves_tensor_unchanged() {
        let p = [0.3, -0.1, 1.2];
        for mode in [JacobianMode::Analytic, JacobianMode::FiniteDifference] {
            let b = pushforward(&IdentityMap(Chart::RectQStar), StructureId::PiAdm, &p, mode).unwrap();
            let expect = tensor_at(StructureId::PiAdm, Chart::RectQStar, &p).unwrap();
            assert!(b.dist_inf(&expect) < 1e-10);
        }
    }

    #[test]
    fn rotation_preserves_linear_structure() {
        let map = RotateZ(0.9);
        let p = [0.7, -1.2, 0.4];
        let b = pushforward(&map, StructureId::Pi0, &p, JacobianMode::FiniteDifference).unwrap();
        let q = map.apply(&p).unwrap();
        let expect = tensor_at(StructureId::Pi0, Chart::RectQStar, &q).unwrap();
        assert!(b.dist_inf(&expect) < 1e-10);
    }

    #[test]
    fn analytic_mode_requires_a_jacobian() {
        let r = pushforward(&RotateZ(0.1), StructureId::Pi0, &[0.0, 0.0, 1.0], JacobianMode::Analytic);
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn periodic_outputs_are_unwrapped() {
        // atan2 crosses its branch cut at (−1, 0).
        let f = |p: &[f64; 3]| Ok([crate::special::wrap_angle(p[1].atan2(p[0])), 0.0, 0.0]);
        let j = fd_jacobian_fn(f, &[1.0, 0.0, 0.0], [true, false, false]).unwrap();
        assert!((j[0][1] - 1.0).abs() < 1e-9);
    }
}
