//! Tabulated absorption spectra and their transform to the imaginary axis.
//!
//! ε(iξ) = 1 + (2/π) ∫₀^∞ ω Im ε(ω) / (ω² + ξ²) dω
//!
//! Inside the table the integrand is integrated with the trapezoidal rule on
//! the tabulated grid. Below the first row Im ε is held constant; above the
//! last row it falls off as ω⁻³. Both extrapolated pieces are integrated in
//! closed form.

use std::f64::consts::FRAC_2_PI;
use std::path::Path;

use super::Permittivity;
use crate::constants::ev_to_rad_s;
use crate::error::{Error, Result};

/// Rows of (ω in rad/s, Im ε(ω)), strictly increasing in ω.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalDataTable {
    omega: Vec<f64>,
    eps_imag: Vec<f64>,
}

impl OpticalDataTable {
    pub fn new(rows: Vec<(f64, f64)>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "optical table needs at least 2 rows, got {}",
                rows.len()
            )));
        }
        for (i, &(w, im)) in rows.iter().enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "row {i}: frequency must be positive, got {w}"
                )));
            }
            if !(im.is_finite() && im >= 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "row {i}: Im eps must be >= 0, got {im}"
                )));
            }
        }
        if rows.windows(2).any(|p| p[1].0 <= p[0].0) {
            return Err(Error::InvalidParameter(
                "optical table frequencies must be strictly increasing".into(),
            ));
        }
        let (omega, eps_imag) = rows.into_iter().unzip();
        Ok(Self { omega, eps_imag })
    }

    /// Rows given as (photon energy in eV, Im ε).
    pub fn from_ev_rows(rows: &[(f64, f64)]) -> Result<Self> {
        Self::new(rows.iter().map(|&(e, im)| (ev_to_rad_s(e), im)).collect())
    }

    /// Parses the two-column text format: `omega_eV  im_eps`, whitespace
    /// separated, `#` starts a comment, blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected 2 columns, found {}",
                    lineno + 1,
                    fields.len()
                )));
            }
            let num = |s: &str| {
                s.parse::<f64>()
                    .map_err(|e| Error::Parse(format!("line {}: '{s}': {e}", lineno + 1)))
            };
            rows.push((num(fields[0])?, num(fields[1])?));
        }
        Self::from_ev_rows(&rows)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.omega.iter().copied().zip(self.eps_imag.iter().copied())
    }

    /// Closed-form integral of the ω⁻³ tail, ∫_{ω_N}^∞ ω·Im ε / (ω² + ξ²).
    fn upper_tail(&self, xi: f64) -> f64 {
        let w_n = *self.omega.last().expect("validated table");
        let im_n = *self.eps_imag.last().expect("validated table");
        let a = xi / w_n;
        if a < 1e-2 {
            let a2 = a * a;
            im_n * (1.0 / 3.0 - a2 / 5.0 + a2 * a2 / 7.0 - a2 * a2 * a2 / 9.0)
        } else {
            im_n / (a * a) * (1.0 - a.atan() / a)
        }
    }

    fn interior(&self, xi: f64) -> f64 {
        let xi2 = xi * xi;
        let f = |w: f64, im: f64| w * im / (w * w + xi2);
        self.omega
            .windows(2)
            .zip(self.eps_imag.windows(2))
            .map(|(w, im)| 0.5 * (w[1] - w[0]) * (f(w[0], im[0]) + f(w[1], im[1])))
            .sum()
    }
}

/// ε(iξ) from the tabulated spectrum, ξ > 0.
pub fn kk_to_imaginary_axis(table: &OpticalDataTable, xi: f64) -> Result<f64> {
    if !(xi.is_finite() && xi > 0.0) {
        return Err(Error::Domain(format!(
            "Kramers-Kronig transform needs xi > 0, got {xi}"
        )));
    }
    if table.len() < 2 {
        return Err(Error::InvalidParameter("optical table needs at least 2 rows".into()));
    }
    let w0 = table.omega[0];
    // ∫₀^{ω₀} ω c / (ω² + ξ²) dω with constant c
    let lower = 0.5 * table.eps_imag[0] * (w0 / xi * (w0 / xi)).ln_1p();
    Ok(1.0 + FRAC_2_PI * (lower + table.interior(xi) + table.upper_tail(xi)))
}

/// ξ → 0 limit of the transform. Any absorption at the lowest tabulated
/// frequency is extrapolated down to ω = 0, which makes the integral
/// ∫ Im ε / ω diverge; such tables are treated as conducting.
pub fn kk_static_limit(table: &OpticalDataTable) -> Permittivity {
    if table.eps_imag[0] > 0.0 {
        return Permittivity::Infinite;
    }
    let interior: f64 = table
        .omega
        .windows(2)
        .zip(table.eps_imag.windows(2))
        .map(|(w, im)| 0.5 * (w[1] - w[0]) * (im[0] / w[0] + im[1] / w[1]))
        .sum();
    Permittivity::Finite(1.0 + FRAC_2_PI * (interior + table.upper_tail(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_spectrum_is_vacuum() {
        let t = OpticalDataTable::new(vec![(1e14, 0.0), (1e15, 0.0), (1e16, 0.0)]).unwrap();
        for xi in [1e10, 1e15, 1e20] {
            assert_eq!(kk_to_imaginary_axis(&t, xi).unwrap(), 1.0);
        }
        assert_eq!(kk_static_limit(&t), Permittivity::Finite(1.0));
    }

    #[test]
    fn tail_series_matches_closed_form_at_switch() {
        let t = OpticalDataTable::new(vec![(1e14, 0.0), (1e15, 2.0)]).unwrap();
        let below = t.upper_tail(0.999e-2 * 1e15);
        let above = t.upper_tail(1.001e-2 * 1e15);
        assert!((below - above).abs() < 1e-6 * below);
    }

    #[test]
    fn rejects_invalid_tables() {
        assert!(OpticalDataTable::new(vec![(1.0, 0.0)]).is_err());
        assert!(OpticalDataTable::new(vec![(2.0, 0.0), (1.0, 0.0)]).is_err());
        assert!(OpticalDataTable::new(vec![(1.0, -0.1), (2.0, 0.0)]).is_err());
        let t = OpticalDataTable::new(vec![(1.0, 0.0), (2.0, 0.0)]).unwrap();
        assert!(kk_to_imaginary_axis(&t, 0.0).is_err());
        assert!(kk_to_imaginary_axis(&t, -1.0).is_err());
    }

    #[test]
    fn parses_text_format() {
        let text = "# energy im_eps\n0.5 0.0\n\n1.0 0.25  # peak\n2.0 0.1\n";
        let t = OpticalDataTable::parse(text).unwrap();
        assert_eq!(t.len(), 3);
        let rows: Vec<_> = t.rows().collect();
        assert!((rows[1].0 - ev_to_rad_s(1.0)).abs() < 1.0);
        assert_eq!(rows[1].1, 0.25);
        assert!(OpticalDataTable::parse("1.0 2.0 3.0").is_err());
        assert!(OpticalDataTable::parse("1.0 abc").is_err());
    }

    #[test]
    fn absorbing_lowest_row_is_conducting() {
        let t = OpticalDataTable::new(vec![(1e13, 1.0), (1e15, 0.0)]).unwrap();
        assert_eq!(kk_static_limit(&t), Permittivity::Infinite);
    }
}
