//! Gauss–Laguerre quadrature for integrals of the form ∫₀^∞ e^{−t} g(t) dt.
//!
//! Nodes are found by Newton iteration on the three-term Laguerre recurrence
//! with the usual asymptotic starting guesses. The recurrence is rescaled on
//! the fly so that rules with a few hundred nodes (node values near 1000) stay
//! inside f64 range; weights are assembled in log space from L_{n+1} and
//! underflow to zero where they are negligible.

use crate::error::{Error, Result};

const RESCALE_THRESHOLD: f64 = 1e100;
const MAX_NEWTON: usize = 100;

/// Default node count for the transverse-momentum integral.
pub const DEFAULT_NODES: usize = 120;

#[derive(Debug, Clone, PartialEq)]
pub struct GaussLaguerre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// L_n(x) and L_{n-1}(x), each as (mantissa, log scale).
fn laguerre_pair(n: usize, x: f64) -> (f64, f64, f64) {
    let mut p1 = 1.0;
    let mut p2 = 0.0;
    let mut log_scale = 0.0;
    for j in 0..n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = ((2.0 * jf + 1.0 - x) * p2 - jf * p3) / (jf + 1.0);
        if p1.abs() > RESCALE_THRESHOLD {
            p1 /= RESCALE_THRESHOLD;
            p2 /= RESCALE_THRESHOLD;
            log_scale += RESCALE_THRESHOLD.ln();
        }
    }
    (p1, p2, log_scale)
}

impl GaussLaguerre {
    pub fn new(n: usize) -> Result<Self> {
        if !(2..=1000).contains(&n) {
            return Err(Error::InvalidParameter(format!(
                "Gauss-Laguerre node count must be in [2, 1000], got {n}"
            )));
        }
        let nf = n as f64;
        let mut nodes: Vec<f64> = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let mut z = 0.0;
        for i in 0..n {
            z = match i {
                0 => 3.0 / (1.0 + 2.4 * nf),
                1 => z + 15.0 / (1.0 + 2.5 * nf),
                _ => {
                    let ai = (i - 1) as f64;
                    z + (1.0 + 2.55 * ai) / (1.9 * ai) * (z - nodes[i - 2])
                }
            };
            let mut converged = false;
            let mut last_step = f64::INFINITY;
            for _ in 0..MAX_NEWTON {
                let (p1, p2, _) = laguerre_pair(n, z);
                let pp = nf * (p1 - p2) / z;
                let step = p1 / pp;
                z -= step;
                let tol = 4.0 * f64::EPSILON * z.abs().max(1.0);
                // Stop at machine precision, or once rounding noise stalls the iteration.
                if step.abs() <= tol || (step.abs() >= last_step && step.abs() <= 1e-10 * z.abs()) {
                    converged = true;
                    break;
                }
                last_step = step.abs();
            }
            if !converged || !z.is_finite() {
                return Err(Error::Domain(format!(
                    "Gauss-Laguerre root {i} of {n} did not converge"
                )));
            }
            // w = x / ((n+1)² L_{n+1}(x)²)
            let (q1, _, scale) = laguerre_pair(n + 1, z);
            let log_w = z.ln() - 2.0 * (nf + 1.0).ln() - 2.0 * (q1.abs().ln() + scale);
            weights.push(log_w.exp());
            nodes.push(z);
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Domain(format!(
                "Gauss-Laguerre nodes for n = {n} are not strictly increasing"
            )));
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Σ wᵢ g(tᵢ) ≈ ∫₀^∞ e^{−t} g(t) dt. Summation runs in node order.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut g: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w != 0.0)
            .map(|(&t, &w)| w * g(t))
            .sum()
    }
}
