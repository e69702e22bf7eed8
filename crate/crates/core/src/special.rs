//! Cancellation-free evaluations of the elementary functions that appear in
//! the structure coefficients. Each switches to a short even power series
//! near the origin.

/// `λ coth λ`, equal to 1 at λ = 0.
pub fn lcoth(l: f64) -> f64 {
    if l.abs() < 1e-4 {
        let l2 = l * l;
        1.0 + l2 / 3.0 - l2 * l2 / 45.0
    } else {
        l / l.tanh()
    }
}

/// `(d/dλ (λ coth λ)) / λ = (coth λ − λ / sinh²λ) / λ`, equal to 2/3 at 0.
pub fn lcoth_slope(l: f64) -> f64 {
    let l = l.abs();
    if l < 0.1 {
        let l2 = l * l;
        2.0 / 3.0 - 4.0 * l2 / 45.0 + 12.0 * l2 * l2 / 945.0 - 8.0 * l2 * l2 * l2 / 4725.0
            + 20.0 * l2 * l2 * l2 * l2 / 93555.0
    } else {
        let sh = l.sinh();
        (1.0 / l.tanh() - l / (sh * sh)) / l
    }
}

/// `sinh λ / λ`.
pub fn sinhc(l: f64) -> f64 {
    if l.abs() < 1e-4 {
        1.0 + l * l / 6.0
    } else {
        l.sinh() / l
    }
}

/// `λ / sinh λ`.
pub fn inv_sinhc(l: f64) -> f64 {
    1.0 / sinhc(l)
}

/// `1 − 2λ / (e^{2λ} − 1)`, which behaves like λ near 0.
pub fn one_minus_bernoulli(l: f64) -> f64 {
    if l.abs() < 1e-3 {
        let l2 = l * l;
        l - l2 / 3.0 + l2 * l2 / 45.0 - 2.0 * l2 * l2 * l2 / 945.0
    } else {
        1.0 - 2.0 * l / (2.0 * l).exp_m1()
    }
}

/// `(−ln(1 − r) − r) / r² = Σ_{n≥2} r^{n−2} / n` for `0 ≤ r < 1`.
pub fn log_remainder(r: f64) -> f64 {
    if r < 0.1 {
        let mut sum = 0.0;
        let mut pow = 1.0;
        for n in 2..=22 {
            sum += pow / n as f64;
            pow *= r;
        }
        sum
    } else {
        (-(-r).ln_1p() - r) / (r * r)
    }
}

/// Maps an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(std::f64::consts::TAU);
    if t >= std::f64::consts::TAU {
        0.0
    } else {
        t
    }
}

/// Maps an angle difference into `(−π, π]`.
pub fn wrap_difference(d: f64) -> f64 {
    use std::f64::consts::{PI, TAU};
    let w = d.rem_euclid(TAU);
    if w > PI {
        w - TAU
    } else {
        w
    }
}
