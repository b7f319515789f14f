//! Dielectric permittivity models evaluated on the imaginary frequency axis.
//!
//! Every force and pressure computation consumes a [`PermittivityModel`]. A
//! model is a background response (Lorentz oscillators with a high-frequency
//! tail, a single-resonance dielectric core, or a Kramers–Kronig transformed
//! optical table) plus an optional Drude free-carrier term. All frequencies
//! are angular frequencies in rad/s.

mod carriers;
mod catalog;
mod optical;

pub use carriers::{plasma_frequency, scattering_time, CarrierParams};
pub use catalog::{build_material, catalog_names, lookup, params, MaterialSpec};
pub use optical::{kk_static_limit, kk_to_imaginary_axis, OpticalDataTable};

use crate::constants::{ev_to_rad_s, rad_s_to_ev};
use crate::error::{ensure_non_negative, ensure_positive, Error, Result};

/// Value of ε on the imaginary axis, with an explicit marker for the
/// divergent zero-frequency limit of conducting models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Permittivity {
    Finite(f64),
    Infinite,
}

impl Permittivity {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Permittivity::Infinite)
    }

    pub fn finite(&self) -> Option<f64> {
        match *self {
            Permittivity::Finite(v) => Some(v),
            Permittivity::Infinite => None,
        }
    }
}

/// Free-carrier (Drude) parameters, both in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeParams {
    omega_p: f64,
    gamma: f64,
}

impl DrudeParams {
    pub fn new(omega_p: f64, gamma: f64) -> Result<Self> {
        ensure_positive("plasma frequency", omega_p)?;
        ensure_non_negative("relaxation parameter", gamma)?;
        Ok(Self { omega_p, gamma })
    }

    pub fn from_ev(omega_p_ev: f64, gamma_ev: f64) -> Result<Self> {
        Self::new(ev_to_rad_s(omega_p_ev), ev_to_rad_s(gamma_ev))
    }

    pub fn omega_p(&self) -> f64 {
        self.omega_p
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// ω_p² / [ξ(ξ + γ)] for ξ > 0.
    #[inline]
    pub fn term(&self, xi: f64) -> f64 {
        self.omega_p * self.omega_p / (xi * (xi + self.gamma))
    }
}

/// One Lorentz oscillator: s / (1 + ξ²/ω² + Γ ξ/ω).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    omega: f64,
    damping: f64,
    strength: f64,
}

impl OscillatorParams {
    /// `omega` in rad/s; `damping` Γ and `strength` s are dimensionless.
    pub fn new(omega: f64, damping: f64, strength: f64) -> Result<Self> {
        ensure_positive("oscillator frequency", omega)?;
        ensure_non_negative("oscillator damping", damping)?;
        // A zero strength is an inert oscillator; only negative values are rejected.
        ensure_non_negative("oscillator strength", strength)?;
        Ok(Self {
            omega,
            damping,
            strength,
        })
    }

    pub fn from_ev(omega_ev: f64, damping: f64, strength: f64) -> Result<Self> {
        Self::new(ev_to_rad_s(omega_ev), damping, strength)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn omega_ev(&self) -> f64 {
        rad_s_to_ev(self.omega)
    }

    pub fn damping(&self) -> f64 {
        self.damping
    }

    pub fn strength(&self) -> f64 {
        self.strength
    }

    #[inline]
    pub fn term(&self, xi: f64) -> f64 {
        let r = xi / self.omega;
        self.strength / (1.0 + r * r + self.damping * r)
    }
}

/// High-frequency electronic transitions: (ε_∞ − 1)/(1 + ξ²/ω_∞²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HighFreqTail {
    eps_inf: f64,
    omega_inf: f64,
}

impl HighFreqTail {
    pub fn new(eps_inf: f64, omega_inf: f64) -> Result<Self> {
        if !(eps_inf.is_finite() && eps_inf >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "eps_inf must be >= 1, got {eps_inf}"
            )));
        }
        ensure_positive("tail cutoff frequency", omega_inf)?;
        Ok(Self { eps_inf, omega_inf })
    }

    pub fn eps_inf(&self) -> f64 {
        self.eps_inf
    }

    pub fn omega_inf(&self) -> f64 {
        self.omega_inf
    }

    #[inline]
    pub fn term(&self, xi: f64) -> f64 {
        let r = xi / self.omega_inf;
        (self.eps_inf - 1.0) / (1.0 + r * r)
    }
}

/// Core (non-Drude) part of a permittivity model.
#[derive(Debug, Clone, PartialEq)]
pub enum Background {
    /// 1 + Σ oscillators + high-frequency tail.
    Oscillators {
        oscillators: Vec<OscillatorParams>,
        tail: HighFreqTail,
    },
    /// 1 + (ε(0) − 1)/(1 + ξ²/ω_UV²): dielectric core pinned to its static value.
    SingleResonance { static_value: f64, omega_uv: f64 },
    /// Kramers–Kronig transform of tabulated absorption.
    Tabulated(OpticalDataTable),
}

impl Background {
    pub fn single_resonance(static_value: f64, omega_uv: f64) -> Result<Self> {
        if !(static_value.is_finite() && static_value >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "static permittivity must be >= 1, got {static_value}"
            )));
        }
        ensure_positive("UV resonance frequency", omega_uv)?;
        Ok(Background::SingleResonance {
            static_value,
            omega_uv,
        })
    }

    fn value(&self, xi: f64) -> Result<f64> {
        Ok(match self {
            Background::Oscillators { oscillators, tail } => {
                1.0 + oscillators.iter().map(|o| o.term(xi)).sum::<f64>() + tail.term(xi)
            }
            Background::SingleResonance {
                static_value,
                omega_uv,
            } => {
                let r = xi / omega_uv;
                1.0 + (static_value - 1.0) / (1.0 + r * r)
            }
            Background::Tabulated(table) => kk_to_imaginary_axis(table, xi)?,
        })
    }

    fn static_value(&self) -> Permittivity {
        match self {
            Background::Oscillators { oscillators, tail } => Permittivity::Finite(
                oscillators
                    .iter()
                    .fold(tail.eps_inf(), |acc, o| acc + o.strength()),
            ),
            Background::SingleResonance { static_value, .. } => {
                Permittivity::Finite(*static_value)
            }
            Background::Tabulated(table) => kk_static_limit(table),
        }
    }
}

/// Convention for the transverse-electric reflection amplitude of a
/// conducting model at ξ = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroFrequencyTe {
    /// r_TE(0, k) = 0, the dissipative Drude limit.
    #[default]
    Vanishing,
    /// r_TE(0, k) from the dissipationless plasma model with the Drude ω_p.
    PlasmaLimit,
}

/// Dielectric response along the imaginary frequency axis.
///
/// Immutable once built; evaluation is a pure function so a model can be
/// shared freely between worker threads.
#[derive(Debug, Clone, PartialEq)]
pub struct PermittivityModel {
    label: String,
    background: Option<Background>,
    drude: Option<DrudeParams>,
    dc_conducting: bool,
    perfect_conductor: bool,
    zero_te: ZeroFrequencyTe,
}

impl PermittivityModel {
    pub fn new(
        label: impl Into<String>,
        background: Option<Background>,
        drude: Option<DrudeParams>,
    ) -> Self {
        Self {
            label: label.into(),
            background,
            drude,
            dc_conducting: false,
            perfect_conductor: false,
            zero_te: ZeroFrequencyTe::Vanishing,
        }
    }

    /// ε ≡ 1.
    pub fn vacuum() -> Self {
        Self::new("vacuum", None, None)
    }

    /// ε → ∞ at every frequency: r_TM = r_TE = 1.
    pub fn perfect_conductor() -> Self {
        Self {
            perfect_conductor: true,
            ..Self::new("ideal-metal", None, None)
        }
    }

    /// Keeps ε(iξ) at every ξ > 0 but replaces the static value by the
    /// divergent limit of a dc-conducting medium, so the model differs from
    /// `self` only through the zero-frequency Matsubara term.
    pub fn with_dc_conductivity(mut self) -> Self {
        self.dc_conducting = true;
        self.label = format!("{}+dc", self.label);
        self
    }

    /// Selects the zero-frequency TE convention. The plasma limit needs a
    /// Drude term to take ω_p from.
    pub fn with_zero_frequency_te(mut self, rule: ZeroFrequencyTe) -> Result<Self> {
        if rule == ZeroFrequencyTe::PlasmaLimit && self.drude.is_none() {
            return Err(Error::InvalidParameter(format!(
                "material '{}' has no Drude term; plasma-limit TE needs one",
                self.label
            )));
        }
        self.zero_te = rule;
        Ok(self)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn background(&self) -> Option<&Background> {
        self.background.as_ref()
    }

    pub fn drude(&self) -> Option<&DrudeParams> {
        self.drude.as_ref()
    }

    pub fn is_perfect_conductor(&self) -> bool {
        self.perfect_conductor
    }

    pub fn is_dc_conducting(&self) -> bool {
        self.dc_conducting
    }

    pub fn zero_frequency_te(&self) -> ZeroFrequencyTe {
        self.zero_te
    }

    pub fn oscillators(&self) -> &[OscillatorParams] {
        match &self.background {
            Some(Background::Oscillators { oscillators, .. }) => oscillators,
            _ => &[],
        }
    }

    /// ε(iξ) at ξ ≥ 0, with ξ = 0 mapped to the static value or marker.
    pub fn permittivity_at(&self, xi: f64) -> Result<Permittivity> {
        if !(xi >= 0.0) || xi.is_infinite() {
            return Err(Error::Domain(format!(
                "frequency must be finite and >= 0, got {xi}"
            )));
        }
        if self.perfect_conductor {
            return Ok(Permittivity::Infinite);
        }
        if xi == 0.0 {
            return Ok(static_permittivity(self));
        }
        let core = match &self.background {
            Some(bg) => bg.value(xi)?,
            None => 1.0,
        };
        let free = self.drude.map_or(0.0, |d| d.term(xi));
        Ok(Permittivity::Finite(core + free))
    }
}

/// ε(iξ) as a plain number.
///
/// Fails for ξ < 0, and at ξ = 0 for any model whose static permittivity
/// diverges (Drude or dc-conducting); those callers need the zero-frequency
/// reflection limits instead.
pub fn eval_permittivity(model: &PermittivityModel, xi: f64) -> Result<f64> {
    match model.permittivity_at(xi)? {
        Permittivity::Finite(v) => Ok(v),
        Permittivity::Infinite => Err(Error::Domain(format!(
            "permittivity of '{}' diverges at xi = {xi}",
            model.label()
        ))),
    }
}

/// ε(0): ε_∞ + Σ sᵢ for oscillator models, the pinned value for the
/// dielectric core, and [`Permittivity::Infinite`] whenever free carriers
/// are present.
pub fn static_permittivity(model: &PermittivityModel) -> Permittivity {
    if model.perfect_conductor || model.dc_conducting || model.drude.is_some() {
        return Permittivity::Infinite;
    }
    match &model.background {
        Some(bg) => bg.static_value(),
        None => Permittivity::Finite(1.0),
    }
}
