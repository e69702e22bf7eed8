//! Named verification suites. Each suite is a list of checks; a check
//! sweeps seeded sample points in parallel and keeps the largest defect.
//!
//! Report semantics: every check has its own tolerance. The report-level
//! `tolerance` is the tolerance of the suite's first check, `max_defect`
//! is the worst check defect expressed on that scale, and `--tol` rescales
//! all check tolerances by the same factor, so `pass ⟺ max_defect ≤
//! tolerance` holds at both levels. For `all`, the scale is 1 at the
//! default tolerances.

use std::collections::BTreeMap;
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::eig2;
use crate::error::{Error, Result};
use crate::gwflow::{gw_field_rect, gw_flow, lie_derivative_residual, verify_gw, verify_gw_hyp, FlowConfig};
use crate::maps::{
    adm_spectrum_an, dress, exp_q, fr_map, log_q, sym, sym_inverse, FrMap, GTQChartMap, GTStarChartMap, HypChartMap,
    LogSymMap, SymMap,
};
use crate::sampling::{
    admissible_an, admissible_hyp, admissible_qstar, box_point, group_element, log_uniform, point_rng, uniform,
    LambdaLaw,
};
use crate::spaces::{
    chart_distance, gtq_of_qpoint, gtstar_of_rect, hyp_of_rect, rect_of_hyp, ANPoint, Chart, GElement, MatrixRealization,
    QPoint, QStarPoint,
};
use crate::tensors::{
    casimir_defect, fitted_normalization, induced_bracket, jacobi_defect, multiplicativity_defect, pig_bracket,
    pig_tensor, pushforward, tensor_at, GradientMode, GroupEntry, JacobianMode, StructureId,
};
use crate::thompson::{linear_defect, product_admissible, proof_defect, proof_trace, thompson_defect};

pub const SUITES: [&str; 12] = [
    "jacobi",
    "casimir",
    "sym-pushforward",
    "logsym-pushforward",
    "fr-map",
    "gw-flow",
    "pig",
    "dressing",
    "thompson",
    "linear-thompson",
    "charts",
    "all",
];

/// Default sample count of a suite (points for its first check).
pub fn default_samples(suite: &str) -> Option<usize> {
    Some(match suite {
        "jacobi" | "casimir" | "sym-pushforward" | "logsym-pushforward" | "fr-map" | "pig" | "dressing" | "charts" => 1000,
        "gw-flow" => 100,
        "thompson" | "linear-thompson" => 100_000,
        "all" => 0,
        _ => return None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub samples: usize,
    pub max_defect: f64,
    pub tolerance: f64,
    pub worst_point: Option<Vec<f64>>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub max_defect: f64,
    pub worst_point: Option<Vec<f64>>,
    pub pass: bool,
    pub wall_time_ms: u64,
    pub checks: Vec<CheckReport>,
    pub diagnostics: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Recorded for a sample whose evaluation failed or was not finite.
pub const FAILED_DEFECT: f64 = f64::MAX;

struct Sweep {
    max_defect: f64,
    worst: Option<(usize, Vec<f64>)>,
}

/// Evaluates `f` at `n` points in parallel and keeps the largest defect
/// (first index wins ties). Errors count as [`FAILED_DEFECT`].
fn sweep<F>(n: usize, seed: u64, salt: u64, f: F) -> Sweep
where
    F: Fn(&mut ChaCha8Rng) -> (Result<f64>, Vec<f64>) + Sync,
{
    let results: Vec<(f64, Vec<f64>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = point_rng(seed, salt, i as u64);
            let (d, point) = f(&mut rng);
            let d = match d {
                Ok(v) if v.is_finite() => v,
                _ => FAILED_DEFECT,
            };
            (d, point)
        })
        .collect();
    let mut out = Sweep { max_defect: 0.0, worst: None };
    for (i, (d, point)) in results.into_iter().enumerate() {
        if out.worst.is_none() || d > out.max_defect {
            out.max_defect = d;
            out.worst = Some((i, point));
        }
    }
    out
}

fn salt_of(name: &str) -> u64 {
    // FNV-1a; stable across platforms and releases
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

/// Shared state for building the checks of one suite.
struct Ctx {
    suite: &'static str,
    n: usize,
    seed: u64,
    scale: f64,
    checks: Vec<CheckReport>,
    diagnostics: BTreeMap<String, f64>,
}

impl Ctx {
    fn count(&self, ratio: f64) -> usize {
        (self.n as f64 * ratio).round() as usize
    }

    fn run<F>(&mut self, name: &str, tolerance: f64, ratio: f64, f: F)
    where
        F: Fn(&mut ChaCha8Rng) -> (Result<f64>, Vec<f64>) + Sync,
    {
        let n = self.count(ratio);
        let salt = salt_of(&format!("{}/{}", self.suite, name));
        let s = sweep(n, self.seed, salt, f);
        let tolerance = tolerance * self.scale;
        self.checks.push(CheckReport {
            name: name.to_string(),
            samples: n,
            max_defect: s.max_defect,
            tolerance,
            worst_point: s.worst.map(|(_, p)| p),
            pass: s.max_defect <= tolerance,
        });
    }
}

fn normalized(c: &CheckReport) -> f64 {
    if c.tolerance > 0.0 {
        c.max_defect / c.tolerance
    } else if c.max_defect <= 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn finish(
    suite: &str,
    seed: u64,
    tolerance: f64,
    checks: Vec<CheckReport>,
    diagnostics: BTreeMap<String, f64>,
    started: Instant,
) -> VerificationReport {
    let mut max_defect: f64 = 0.0;
    let mut worst_point = None;
    let mut worst_ratio = -1.0;
    for c in &checks {
        let r = normalized(c);
        if r > worst_ratio {
            worst_ratio = r;
            worst_point = c.worst_point.clone();
            max_defect = if r.is_finite() { (r * tolerance).min(FAILED_DEFECT) } else { FAILED_DEFECT };
        }
    }
    VerificationReport {
        suite: suite.to_string(),
        samples: checks.iter().map(|c| c.samples).sum(),
        seed,
        tolerance,
        max_defect,
        worst_point,
        pass: checks.iter().all(|c| c.pass),
        wall_time_ms: started.elapsed().as_millis() as u64,
        checks,
        diagnostics,
    }
}

/// Runs `suite` with base sample count `samples` (suite default when
/// `None`) and primary tolerance `tol` (suite default when `None`).
pub fn run_suite(suite: &str, samples: Option<usize>, seed: u64, tol: Option<f64>) -> Result<VerificationReport> {
    let started = Instant::now();
    if let Some(t) = tol {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::InvalidArgument(format!("tolerance must be finite and non-negative, got {t}")));
        }
    }
    if suite == "all" {
        let scale = tol.unwrap_or(1.0);
        let mut checks = Vec::new();
        let mut diagnostics = BTreeMap::new();
        for name in SUITES.iter().filter(|s| **s != "all") {
            let primary = primary_tolerance(name);
            let r = run_suite(name, samples, seed, Some(primary * scale))?;
            for mut c in r.checks {
                c.name = format!("{name}/{}", c.name);
                checks.push(c);
            }
            for (k, v) in r.diagnostics {
                diagnostics.insert(format!("{name}/{k}"), v);
            }
        }
        return Ok(finish("all", seed, scale, checks, diagnostics, started));
    }
    let n = samples.or_else(|| default_samples(suite)).ok_or_else(|| unknown(suite))?;
    let suite_static: &'static str = SUITES.iter().find(|s| **s == suite).ok_or_else(|| unknown(suite))?;
    let primary = primary_tolerance(suite);
    let tolerance = tol.unwrap_or(primary);
    let scale = if primary > 0.0 { tolerance / primary } else { 1.0 };
    let mut ctx = Ctx { suite: suite_static, n, seed, scale, checks: Vec::new(), diagnostics: BTreeMap::new() };
    match suite {
        "jacobi" => jacobi(&mut ctx),
        "casimir" => casimir(&mut ctx),
        "sym-pushforward" => sym_pushforward(&mut ctx),
        "logsym-pushforward" => logsym_pushforward(&mut ctx),
        "fr-map" => fr(&mut ctx),
        "gw-flow" => gw(&mut ctx),
        "pig" => pig(&mut ctx),
        "dressing" => dressing(&mut ctx),
        "thompson" => thompson(&mut ctx),
        "linear-thompson" => linear_thompson(&mut ctx),
        "charts" => charts(&mut ctx),
        _ => return Err(unknown(suite)),
    }
    Ok(finish(suite, seed, tolerance, ctx.checks, ctx.diagnostics, started))
}

fn unknown(suite: &str) -> Error {
    Error::InvalidArgument(format!("unknown suite '{suite}' (expected one of {})", SUITES.join(", ")))
}

fn primary_tolerance(suite: &str) -> f64 {
    match suite {
        "jacobi" | "casimir" => 1e-12,
        "sym-pushforward" => 1e-10,
        "logsym-pushforward" | "fr-map" => 1e-6,
        "gw-flow" => 1e-3,
        "pig" => 1e-10,
        "dressing" => 1e-12,
        "thompson" => 1e-9,
        "linear-thompson" => 1e-12,
        "charts" => 1e-8,
        _ => 1.0,
    }
}

// Sampling ranges. Magnitudes are kept moderate so absolute tolerances
// near machine precision stay meaningful.
const ADM_LAMBDA: LambdaLaw = LambdaLaw::LogUniform(0.05, 3.0);
const ADM_S: (f64, f64) = (0.0, 2.0);
const BOX: ([f64; 3], [f64; 3]) = ([-2.0, -2.0, -2.0], [2.0, 2.0, 2.0]);
// The trace of a Q point grows like 1/c as c → 0.
const Q_BOX: ([f64; 3], [f64; 3]) = ([-2.0, -2.0, 0.5], [2.0, 2.0, 3.0]);

fn qstar_sample(rng: &mut ChaCha8Rng) -> Result<QStarPoint> {
    admissible_qstar(rng, ADM_LAMBDA, ADM_S)
}

// Narrower ranges for checks with absolute tolerances whose defect grows
// with the magnitude of the point (finite differences, and the entries of
// the image matrix, which grow like e^z).
fn qstar_sample_fd(rng: &mut ChaCha8Rng) -> Result<QStarPoint> {
    admissible_qstar(rng, LambdaLaw::LogUniform(0.05, 2.0), (0.0, 1.0))
}

// Comparable in size to the box used for the linear structures.
fn qstar_sample_small(rng: &mut ChaCha8Rng) -> Result<QStarPoint> {
    admissible_qstar(rng, LambdaLaw::LogUniform(0.05, 1.5), (0.0, 1.0))
}

fn an_sample(rng: &mut ChaCha8Rng) -> Result<ANPoint> {
    admissible_an(rng, LambdaLaw::LogUniform(0.05, 2.0), 1.0)
}

fn with_point<T>(p: Result<T>, coords: impl Fn(&T) -> Vec<f64>, f: impl FnOnce(&T) -> Result<f64>) -> (Result<f64>, Vec<f64>) {
    match p {
        Ok(p) => (f(&p), coords(&p)),
        Err(e) => (Err(e), Vec::new()),
    }
}

fn qs(p: &QStarPoint) -> Vec<f64> {
    p.to_array().to_vec()
}

fn an(b: &ANPoint) -> Vec<f64> {
    vec![b.z, b.x, b.y]
}

fn ge(g: &GElement) -> Vec<f64> {
    g.chart_coords().to_vec()
}

fn jacobi(ctx: &mut Ctx) {
    let tol = 1e-12;
    ctx.run("pi0", tol, 1.0, |rng| {
        let p = box_point(rng, BOX.0, BOX.1);
        (jacobi_defect(StructureId::Pi0, Chart::RectQStar, &p), p.to_vec())
    });
    ctx.run("pi_an", tol, 1.0, |rng| {
        let p = box_point(rng, BOX.0, BOX.1);
        (jacobi_defect(StructureId::PiAN, Chart::RectAN, &p), p.to_vec())
    });
    ctx.run("pi_q", tol, 1.0, |rng| {
        let p = box_point(rng, Q_BOX.0, Q_BOX.1);
        (jacobi_defect(StructureId::PiQ, Chart::RectQ, &p), p.to_vec())
    });
    ctx.run("pi", tol, 1.0, |rng| {
        with_point(qstar_sample(rng), qs, |p| jacobi_defect(StructureId::PiAdm, Chart::RectQStar, &p.to_array()))
    });
    ctx.run("pi_t", tol, 1.0, |rng| {
        let t = uniform(rng, 0.01, 2.0);
        match qstar_sample(rng) {
            Ok(p) => {
                let d = StructureId::pi_t(t).and_then(|s| jacobi_defect(s, Chart::RectQStar, &p.to_array()));
                (d, vec![p.x, p.y, p.z, t])
            }
            Err(e) => (Err(e), vec![t]),
        }
    });
}

fn casimir(ctx: &mut Ctx) {
    for (mode, suffix, tol) in [(GradientMode::Analytic, "", 1e-12), (GradientMode::FiniteDifference, "-fd", 1e-9)] {
        ctx.run(&format!("pi0{suffix}"), tol, 1.0, |rng| {
            let p = box_point(rng, BOX.0, BOX.1);
            (casimir_defect(StructureId::Pi0, Chart::RectQStar, &p, mode), p.to_vec())
        });
        ctx.run(&format!("pi_an{suffix}"), tol, 1.0, |rng| {
            let p = box_point(rng, BOX.0, BOX.1);
            (casimir_defect(StructureId::PiAN, Chart::RectAN, &p, mode), p.to_vec())
        });
        ctx.run(&format!("pi_q{suffix}"), tol, 1.0, |rng| {
            let p = box_point(rng, Q_BOX.0, Q_BOX.1);
            (casimir_defect(StructureId::PiQ, Chart::RectQ, &p, mode), p.to_vec())
        });
        ctx.run(&format!("pi{suffix}"), tol, 1.0, |rng| {
            let p = if mode == GradientMode::Analytic { qstar_sample(rng) } else { qstar_sample_small(rng) };
            with_point(p, qs, |p| casimir_defect(StructureId::PiAdm, Chart::RectQStar, &p.to_array(), mode))
        });
    }
}

fn sym_pushforward(ctx: &mut Ctx) {
    ctx.run("pushforward", 1e-10, 1.0, |rng| {
        with_point(an_sample(rng), an, |b| {
            let pushed = pushforward(&SymMap, StructureId::PiAN, &b.chart_coords(), JacobianMode::Analytic)?;
            let target = tensor_at(StructureId::PiQ, Chart::RectQ, &sym(b).to_array())?;
            Ok(pushed.dist_inf(&target))
        })
    });
    ctx.run("matrix-oracle", 1e-13, 1.0, |rng| {
        let p = box_point(rng, BOX.0, BOX.1);
        let d = ANPoint::from_chart_coords(p).and_then(|b| {
            let m = b.to_matrix();
            Ok(sym(&b).to_matrix().dist_inf(&(m.dagger() * m)))
        });
        (d, p.to_vec())
    });
    ctx.run("inverse", 1e-11, 1.0, |rng| {
        with_point(an_sample(rng), an, |b| {
            let back = sym_inverse(&QPoint::from_matrix(&sym(b).to_matrix())?)?;
            Ok((back.z - b.z).abs().max((back.x - b.x).abs()).max((back.y - b.y).abs()))
        })
    });
}

fn logsym_pushforward(ctx: &mut Ctx) {
    ctx.run("pushforward", 1e-6, 1.0, |rng| {
        with_point(an_sample(rng), an, |b| {
            let pushed = pushforward(&LogSymMap, StructureId::PiAN, &b.chart_coords(), JacobianMode::FiniteDifference)?;
            let image = log_q(&sym(b))?;
            let target = tensor_at(StructureId::PiAdm, Chart::RectQStar, &image.to_array())?;
            Ok(pushed.dist_inf(&target))
        })
    });
}

fn fr(ctx: &mut Ctx) {
    ctx.run("poisson", 1e-6, 1.0, |rng| {
        with_point(qstar_sample_fd(rng), qs, |p| {
            let pushed = pushforward(&FrMap, StructureId::Pi0, &p.to_array(), JacobianMode::FiniteDifference)?;
            let target = tensor_at(StructureId::PiQ, Chart::RectQ, &fr_map(p)?.to_array())?;
            Ok(pushed.dist_inf(&target))
        })
    });
    ctx.run("eigenvalues", 1e-10, 1.0, |rng| {
        with_point(qstar_sample_fd(rng), qs, |p| {
            let (e1, e2) = eig2(&fr_map(p)?.to_matrix());
            let l = p.lambda();
            Ok((e1 - l.exp()).norm().max((e2 - (-l).exp()).norm()))
        })
    });
    ctx.run("gt-chart", 1e-10, 1.0, |rng| {
        with_point(qstar_sample_fd(rng), qs, |p| {
            let gq = gtq_of_qpoint(&fr_map(p)?)?;
            let gs = gtstar_of_rect(p)?;
            Ok(chart_distance(Chart::GTQ, &gq.to_array(), &gs.to_array()))
        })
    });
}

const GW_LAMBDA: LambdaLaw = LambdaLaw::Uniform(0.1, 3.0);
const GW_S: (f64, f64) = (0.0, 3.0);

fn gw(ctx: &mut Ctx) {
    let cfg = FlowConfig::default();
    let fine = FlowConfig { steps: 2 * cfg.steps, ..cfg };
    let gw_point = |rng: &mut ChaCha8Rng| admissible_qstar(rng, GW_LAMBDA, GW_S);
    ctx.run("verify", 1e-3, 1.0, |rng| with_point(gw_point(rng), qs, |p| verify_gw(p, &cfg)));
    ctx.run("lambda-conservation", 1e-6, 1.0, |rng| {
        with_point(gw_point(rng), qs, |p| Ok((gw_flow(p, &cfg)?.lambda() - p.lambda()).abs()))
    });
    ctx.run("step-halving", 1e-8, 1.0, |rng| {
        with_point(gw_point(rng), qs, |p| {
            let (a, b) = (gw_flow(p, &cfg)?, gw_flow(p, &fine)?);
            Ok((a.x - b.x).abs().max((a.y - b.y).abs()).max((a.z - b.z).abs()))
        })
    });
    ctx.run("commutator", 1e-5, 1.0, |rng| with_point(gw_point(rng), qs, lie_derivative_residual));
    // rounding in z·X_z − x·X_x − y·X_y scales with the size of the terms
    ctx.run("tangency", 1e-12, 1.0, |rng| {
        with_point(gw_point(rng), qs, |p| {
            let [vx, vy, vz] = gw_field_rect(p)?.components;
            let terms = [p.z * vz, p.x * vx, p.y * vy];
            let scale = terms.iter().map(|t| t.abs()).sum::<f64>().max(1.0);
            Ok((terms[0] - terms[1] - terms[2]).abs() / scale)
        })
    });
    ctx.run("axis-vanishing", 0.0, 1.0, |rng| {
        let z = uniform(rng, 1e-6, 10.0);
        let d = QStarPoint::new(0.0, 0.0, z).and_then(|p| gw_field_rect(&p)).map(|v| v.norm_inf());
        (d, vec![0.0, 0.0, z])
    });
    // the same flow verified in hyperbolic coordinates (informational)
    let hyp_max = (0..ctx.n)
        .into_par_iter()
        .map(|i| {
            let mut rng = point_rng(ctx.seed, salt_of("gw-flow/verify"), i as u64);
            let h = admissible_hyp(&mut rng, GW_LAMBDA, GW_S);
            if h.s > 0.0 {
                verify_gw_hyp(&h, &cfg).unwrap_or(FAILED_DEFECT)
            } else {
                0.0
            }
        })
        .reduce(|| 0.0, f64::max);
    ctx.diagnostics.insert("verify_hyperbolic_max".into(), hyp_max);
    let failures = ctx.checks[0].samples;
    let failed = (0..failures)
        .into_par_iter()
        .filter(|&i| {
            let mut rng = point_rng(ctx.seed, salt_of("gw-flow/verify"), i as u64);
            gw_point(&mut rng).and_then(|p| gw_flow(&p, &cfg)).is_err()
        })
        .count();
    ctx.diagnostics.insert("flow_unrepresentable_points".into(), failed as f64);
}

fn pig(ctx: &mut Ctx) {
    let reference = GElement::from_boost(0.7, 0.4, 1.9);
    let kappa = fitted_normalization(&reference).unwrap_or(f64::NAN);
    ctx.diagnostics.insert("kappa".into(), kappa);
    ctx.run("bracket-table", 1e-10, 1.0, |rng| {
        let g = group_element(rng, 1.5);
        let b = pig_tensor(&g);
        let mut worst: f64 = 0.0;
        for (k, i) in GroupEntry::ALL.iter().enumerate() {
            for j in &GroupEntry::ALL[k + 1..] {
                let d = (induced_bracket(&b, *i, *j) - pig_bracket(*i, *j, &g) * kappa).norm();
                worst = worst.max(d);
            }
        }
        (Ok(worst), ge(&g))
    });
    ctx.run("multiplicativity", 1e-8, 0.1, |rng| {
        let g = group_element(rng, 1.5);
        let h = group_element(rng, 1.5);
        let mut point = ge(&g);
        point.extend(ge(&h));
        (Ok(multiplicativity_defect(&g, &h)), point)
    });
}

fn dress_sample(rng: &mut ChaCha8Rng) -> (f64, GElement) {
    let z = log_uniform(rng, 0.05, 3.0);
    (z, group_element(rng, 2.0))
}

fn dress_point(z: f64, g: &GElement) -> Vec<f64> {
    let mut v = vec![z];
    v.extend(ge(g));
    v
}

fn dressing(ctx: &mut Ctx) {
    ctx.run("factorization", 1e-12, 1.0, |rng| {
        let (z, g) = dress_sample(rng);
        let d = dress(z, &g).map(|r| {
            let lhs = ANPoint::diagonal(z).to_matrix() * g.to_matrix();
            lhs.dist_inf(&(r.g_prime.to_matrix() * r.b_prime.to_matrix()))
        });
        (d, dress_point(z, &g))
    });
    ctx.run("spectrum-invariance", 1e-11, 1.0, |rng| {
        let (z, g) = dress_sample(rng);
        let d = dress(z, &g).and_then(|r| Ok((adm_spectrum_an(&r.b_prime)? - z).abs()));
        (d, dress_point(z, &g))
    });
    ctx.run("conjugation", 1e-11, 1.0, |rng| {
        let (z, g) = dress_sample(rng);
        let d = dress(z, &g).map(|r| {
            let conj = g.inverse().to_matrix() * sym(&ANPoint::diagonal(z)).to_matrix() * g.to_matrix();
            sym(&r.b_prime).to_matrix().dist_inf(&conj)
        });
        (d, dress_point(z, &g))
    });
}

fn thompson_pair(rng: &mut ChaCha8Rng) -> Result<(ANPoint, ANPoint)> {
    let law = LambdaLaw::LogUniform(0.05, 3.0);
    Ok((admissible_an(rng, law, 2.0)?, admissible_an(rng, law, 2.0)?))
}

fn pair_point(p: &(ANPoint, ANPoint)) -> Vec<f64> {
    let mut v = an(&p.0);
    v.extend(an(&p.1));
    v
}

fn thompson(ctx: &mut Ctx) {
    ctx.run("inequality", 1e-9, 1.0, |rng| with_point(thompson_pair(rng), pair_point, |(a, b)| Ok(-thompson_defect(a, b)?)));
    ctx.run("closure", 0.0, 1.0, |rng| {
        with_point(thompson_pair(rng), pair_point, |(a, b)| Ok(if product_admissible(a, b)? { 0.0 } else { 1.0 }))
    });
    ctx.run("diagonal-equality", 1e-12, 0.01, |rng| {
        let (z1, z2) = (log_uniform(rng, 0.05, 3.0), log_uniform(rng, 0.05, 3.0));
        (thompson_defect(&ANPoint::diagonal(z1), &ANPoint::diagonal(z2)).map(f64::abs), vec![z1, z2])
    });
    let proof_sample = |rng: &mut ChaCha8Rng| {
        let (z1, z2) = (uniform(rng, 0.05, 2.0), uniform(rng, 0.05, 2.0));
        (z1, z2, group_element(rng, 1.0))
    };
    ctx.run("proof-trace", 1e-11, 0.01, |rng| {
        let (z1, z2, g) = proof_sample(rng);
        let d = dress(z1, &g).map(|r| {
            let b = r.b_prime.to_matrix() * ANPoint::diagonal(z2).to_matrix();
            ((b.dagger() * b).trace().re - proof_trace(z1, z2, &g)).abs()
        });
        (d, vec![z1, z2, g.u.re, g.u.im, g.v.re, g.v.im])
    });
    ctx.run("proof-closed-form", 1e-11, 0.01, |rng| {
        let (z1, z2, g) = proof_sample(rng);
        let d = dress(z1, &g)
            .and_then(|r| thompson_defect(&r.b_prime, &ANPoint::diagonal(z2)))
            .map(|d| (d - proof_defect(z1, z2, g.v.norm_sqr())).abs());
        (d, vec![z1, z2, g.u.re, g.u.im, g.v.re, g.v.im])
    });
    let interval = |rng: &mut ChaCha8Rng| admissible_an(rng, LambdaLaw::LogUniform(0.05, 3.0), 2.0);
    // as stated: the admissible spectrum is at least z
    ctx.run("interval-lower-bound", 1e-12, 0.1, |rng| with_point(interval(rng), an, |b| Ok(b.z - adm_spectrum_an(b)?)));
    ctx.run("interval-upper-bound", 1e-12, 0.1, |rng| with_point(interval(rng), an, |b| Ok(adm_spectrum_an(b)? - b.z)));
}

fn linear_thompson(ctx: &mut Ctx) {
    ctx.run("inequality", 1e-12, 1.0, |rng| {
        let pair = qstar_sample(rng).and_then(|a| Ok((a, qstar_sample(rng)?)));
        with_point(pair, |(a, b)| [qs(a), qs(b)].concat(), |(a, b)| Ok(-linear_defect(a, b)?))
    });
}

const CHART_LAMBDA: LambdaLaw = LambdaLaw::LogUniform(0.2, 2.0);
const CHART_S: (f64, f64) = (0.1, 1.5);

fn charts(ctx: &mut Ctx) {
    ctx.run("pi0-gtstar", 1e-8, 1.0, |rng| {
        with_point(admissible_qstar(rng, CHART_LAMBDA, CHART_S), qs, |p| {
            let c = p.to_array();
            let pushed = pushforward(&GTStarChartMap, StructureId::Pi0, &c, JacobianMode::FiniteDifference)?;
            let target = tensor_at(StructureId::Pi0, Chart::GTStar, &gtstar_of_rect(p)?.to_array())?;
            Ok(pushed.dist_inf(&target))
        })
    });
    ctx.run("piq-gtq", 1e-8, 1.0, |rng| {
        let q = admissible_qstar(rng, CHART_LAMBDA, CHART_S).and_then(|p| exp_q(&p));
        with_point(q, |q| q.to_array().to_vec(), |q| {
            let pushed = pushforward(&GTQChartMap, StructureId::PiQ, &q.to_array(), JacobianMode::FiniteDifference)?;
            let target = tensor_at(StructureId::PiQ, Chart::GTQ, &gtq_of_qpoint(q)?.to_array())?;
            Ok(pushed.dist_inf(&target))
        })
    });
    ctx.run("pi-hyperbolic", 1e-8, 1.0, |rng| {
        let h = admissible_hyp(rng, CHART_LAMBDA, CHART_S);
        with_point(rect_of_hyp(&h), qs, |p| {
            let pushed = pushforward(&HypChartMap, StructureId::PiAdm, &p.to_array(), JacobianMode::FiniteDifference)?;
            let target = tensor_at(StructureId::PiAdm, Chart::Hyperbolic, &hyp_of_rect(p)?.to_array())?;
            Ok(pushed.dist_inf(&target))
        })
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", Some(1), 0, None).is_err());
        assert!(default_samples("nope").is_none());
    }

    #[test]
    fn empty_sweep_passes_trivially() {
        let r = run_suite("all", Some(0), 5, None).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_defect, 0.0);
        assert_eq!(r.samples, 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("dressing", Some(50), 11, None).unwrap();
        let b = run_suite("dressing", Some(50), 11, None).unwrap();
        assert_eq!(VerificationReport { wall_time_ms: 0, ..a }, VerificationReport { wall_time_ms: 0, ..b });
    }

    #[test]
    fn tolerance_override_rescales_every_check() {
        let r = run_suite("pig", Some(20), 1, Some(1e-6)).unwrap();
        assert_eq!(r.tolerance, 1e-6);
        let m = r.check("multiplicativity").unwrap();
        assert!((m.tolerance - 1e-4).abs() < 1e-18);
        assert_eq!(r.pass, r.max_defect <= r.tolerance);
    }

    #[test]
    fn jacobi_small_run_passes() {
        let r = run_suite("jacobi", Some(100), 42, Some(1e-9)).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.checks.len(), 5);
    }

    #[test]
    fn failed_samples_count_as_worst() {
        let s = sweep(3, 0, 0, |_| (Err(Error::NonFinite("x")), vec![1.0]));
        assert_eq!(s.max_defect, FAILED_DEFECT);
    }
}
