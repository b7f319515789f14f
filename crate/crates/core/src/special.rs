//! Riemann ζ(3) and the trilogarithm on the unit interval.

use crate::error::{Error, Result};

/// Apéry's constant ζ(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

const ZETA2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;

/// Switch-over point between the direct power series and the logarithmic
/// expansion around x = 1.
const SERIES_LIMIT: f64 = 0.5;

/// Non-zero ζ(3 − k)/k! coefficients for k ≥ 3 in the expansion
/// Li₃(e^μ) = ζ(3) + ζ(2)μ + μ²(3/2 − ln(−μ))/2 + Σ_{k≥3} ζ(3−k) μ^k / k!.
/// ζ at negative even integers vanishes, so only k = 3, 4, 6, 8, … appear.
const LOG_SERIES: [(i32, f64); 10] = [
    (3, -0.5 / 6.0),
    (4, -1.0 / 12.0 / 24.0),
    (6, 1.0 / 120.0 / 720.0),
    (8, -1.0 / 252.0 / 40_320.0),
    (10, 1.0 / 240.0 / 3_628_800.0),
    (12, -1.0 / 132.0 / 479_001_600.0),
    (14, 691.0 / 32_760.0 / 87_178_291_200.0),
    (16, -1.0 / 12.0 / 20_922_789_888_000.0),
    (18, 3617.0 / 8160.0 / 6_402_373_705_728_000.0),
    (20, -43_867.0 / 14_364.0 / 2_432_902_008_176_640_000.0),
];

/// Trilogarithm Li₃(x) = Σ_{k≥1} x^k / k³ for 0 ≤ x ≤ 1.
///
/// Uses the power series below x = 0.5 and the expansion in μ = ln x above,
/// which converges for |μ| < 2π and needs ten terms for |μ| ≤ ln 2.
pub fn polylog3(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("polylog3 needs 0 <= x <= 1, got {x}")));
    }
    if x == 1.0 {
        return Ok(ZETA3);
    }
    if x <= SERIES_LIMIT {
        return Ok(power_series(x));
    }
    let mu = x.ln();
    let mut sum = ZETA3 + ZETA2 * mu + 0.5 * mu * mu * (1.5 - (-mu).ln());
    for &(k, coeff) in LOG_SERIES.iter() {
        sum += coeff * mu.powi(k);
    }
    Ok(sum)
}

fn power_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 1..200 {
        power *= x;
        let kf = k as f64;
        let term = power / (kf * kf * kf);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}
