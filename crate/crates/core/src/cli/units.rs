//! Quantities with unit suffixes, converted to SI at the boundary.
//!
//! Every physical input must name its unit: `100 nm`, `0.1um`, `300 K`,
//! `9 eV`, `1.5e15 rad/s`. A bare number is rejected.

use crate::constants::ev_to_rad_s;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Length,
    Temperature,
    /// Angular frequency; eV is accepted and converted via ħω = E.
    AngularFrequency,
    /// Cyclic frequency, Hz.
    Frequency,
    Stiffness,
}

impl Dimension {
    fn expected(self) -> &'static str {
        match self {
            Dimension::Length => "m, mm, um, nm",
            Dimension::Temperature => "K",
            Dimension::AngularFrequency => "rad/s, eV, meV",
            Dimension::Frequency => "Hz, kHz",
            Dimension::Stiffness => "N/m",
        }
    }

    fn scale(self, unit: &str) -> Option<Scale> {
        use Scale::*;
        Some(match (self, unit) {
            (Dimension::Length, "m") => Factor(1.0),
            (Dimension::Length, "mm") => Factor(1e-3),
            (Dimension::Length, "um" | "μm" | "µm") => Factor(1e-6),
            (Dimension::Length, "nm") => Factor(1e-9),
            (Dimension::Temperature, "K") => Factor(1.0),
            (Dimension::AngularFrequency, "rad/s") => Factor(1.0),
            (Dimension::AngularFrequency, "eV") => Ev(1.0),
            (Dimension::AngularFrequency, "meV") => Ev(1e-3),
            (Dimension::Frequency, "Hz") => Factor(1.0),
            (Dimension::Frequency, "kHz") => Factor(1e3),
            (Dimension::Stiffness, "N/m") => Factor(1.0),
            _ => return None,
        })
    }
}

enum Scale {
    Factor(f64),
    Ev(f64),
}

/// Parses `"<number><unit>"` (whitespace optional) into SI units.
pub fn parse_quantity(text: &str, dim: Dimension) -> Result<f64> {
    let s = text.trim();
    let split = s
        .char_indices()
        .find(|&(i, c)| {
            let numeric = c.is_ascii_digit() || matches!(c, '.' | '+' | '-');
            // an exponent marker belongs to the number only if a digit or sign follows
            let exponent = matches!(c, 'e' | 'E')
                && s[i + 1..]
                    .chars()
                    .next()
                    .is_some_and(|n| n.is_ascii_digit() || n == '-' || n == '+');
            !(numeric || exponent)
        })
        .map(|(i, _)| i)
        .unwrap_or(s.len());
    let (num, unit) = s.split_at(split);
    let unit = unit.trim();
    if unit.is_empty() {
        return Err(Error::Parse(format!(
            "'{text}' has no unit (expected one of: {})",
            dim.expected()
        )));
    }
    let value: f64 = num
        .parse()
        .map_err(|_| Error::Parse(format!("'{text}': cannot read number '{num}'")))?;
    if !value.is_finite() {
        return Err(Error::Parse(format!("'{text}' is not finite")));
    }
    match dim.scale(unit) {
        Some(Scale::Factor(f)) => Ok(value * f),
        Some(Scale::Ev(f)) => Ok(ev_to_rad_s(value * f)),
        None => Err(Error::Parse(format!(
            "'{text}': unit '{unit}' is not a {dim:?} unit (expected one of: {})",
            dim.expected()
        ))),
    }
}

pub fn parse_length(text: &str) -> Result<f64> {
    parse_quantity(text, Dimension::Length)
}

pub fn parse_temperature(text: &str) -> Result<f64> {
    parse_quantity(text, Dimension::Temperature)
}

pub fn parse_angular_frequency(text: &str) -> Result<f64> {
    parse_quantity(text, Dimension::AngularFrequency)
}

pub fn parse_frequency(text: &str) -> Result<f64> {
    parse_quantity(text, Dimension::Frequency)
}

pub fn parse_stiffness(text: &str) -> Result<f64> {
    parse_quantity(text, Dimension::Stiffness)
}

/// Fixed 12-significant-digit scientific notation.
pub fn sci(x: f64) -> String {
    format!("{x:.11e}")
}

/// Rounds to the 12 significant digits that [`sci`] prints.
pub fn round12(x: f64) -> f64 {
    sci(x).parse().unwrap_or(x)
}
