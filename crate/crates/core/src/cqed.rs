//! Circuit-QED design estimators for a trapped surface electron.
//!
//! Frequencies are ordinary frequencies (Hz family) at the API; the spin
//! coupling converts to angular frequency where ħω appears.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::constants::{BOHR_MAGNETON_J_PER_T, ELECTRON_MASS_KG, HBAR_J_S, PLANCK_J_S};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinCouplingInput {
    /// Charge-photon coupling, MHz.
    pub g_charge: f64,
    /// Lateral trap frequency ω_x/2π, GHz.
    pub omega_x: f64,
    /// Larmor frequency ω_L/2π, GHz.
    pub omega_l: f64,
    /// ∂B_z/∂x, T/m.
    pub grad_bz: f64,
    /// Effective mass in units of m_e.
    #[serde(default = "unit_mass")]
    pub mass: f64,
}

fn unit_mass() -> f64 {
    1.0
}

impl SpinCouplingInput {
    pub fn new(g_charge: f64, omega_x: f64, omega_l: f64, grad_bz: f64) -> Self {
        Self {
            g_charge,
            omega_x,
            omega_l,
            grad_bz,
            mass: 1.0,
        }
    }

    /// Zero-point length a_x = √(ħ / m ω_x), m.
    pub fn oscillator_length(&self) -> f64 {
        let omega = 2.0 * std::f64::consts::PI * self.omega_x * 1e9;
        (HBAR_J_S / (self.mass * ELECTRON_MASS_KG * omega)).sqrt()
    }

    fn validate(&self) -> Result<()> {
        if !(self.omega_x > 0.0 && self.omega_x.is_finite()) {
            return Err(Error::invalid(
                "omega_x",
                format!("must be > 0 GHz, got {}", self.omega_x),
            ));
        }
        if !(self.g_charge >= 0.0 && self.g_charge.is_finite()) {
            return Err(Error::invalid(
                "g_charge",
                format!("must be >= 0 MHz, got {}", self.g_charge),
            ));
        }
        if !(self.mass > 0.0 && self.mass.is_finite()) {
            return Err(Error::invalid("mass", format!("must be > 0, got {}", self.mass)));
        }
        if !(self.omega_l.is_finite() && self.grad_bz.is_finite()) {
            return Err(Error::invalid(
                "spin coupling input",
                "omega_L and grad_Bz must be finite",
            ));
        }
        Ok(())
    }
}

/// Effective spin-photon coupling
/// g_s = μ_B a_x ∂B g √2 / (ħω_x |1 − ω_L²/ω_x²|), in MHz.
///
/// Only the magnitude is returned. The expression assumes a detuned spin,
/// so ω_L = ω_x is rejected.
pub fn spin_coupling(input: &SpinCouplingInput) -> Result<f64> {
    input.validate()?;
    let ratio = input.omega_l / input.omega_x;
    let detuning = (1.0 - ratio * ratio).abs();
    if detuning == 0.0 {
        return Err(Error::invalid(
            "omega_L",
            format!(
                "Larmor frequency equals the trap frequency ({} GHz); the dispersive coupling diverges on resonance",
                input.omega_x
            ),
        ));
    }
    let hbar_omega = HBAR_J_S * 2.0 * std::f64::consts::PI * input.omega_x * 1e9;
    let zeeman = BOHR_MAGNETON_J_PER_T * input.oscillator_length() * input.grad_bz.abs();
    Ok(zeeman * input.g_charge * std::f64::consts::SQRT_2 / (hbar_omega * detuning))
}

/// Induced charge fraction δq/e = Δz/D for a parallel-plate pickup.
/// Both lengths in the same unit.
pub fn image_charge_delta(dz: f64, d: f64) -> Result<f64> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::invalid(
            "electrode distance",
            format!("must be > 0, got {d}"),
        ));
    }
    if !(dz >= 0.0 && dz.is_finite()) {
        return Err(Error::invalid("dz", format!("must be >= 0, got {dz}")));
    }
    Ok(dz / d)
}

/// Free-electron Larmor frequency 2μ_B B / h, GHz.
pub fn larmor(b_tesla: f64) -> Result<f64> {
    if !(b_tesla >= 0.0 && b_tesla.is_finite()) {
        return Err(Error::invalid("B", format!("must be >= 0 T, got {b_tesla}")));
    }
    Ok(2.0 * BOHR_MAGNETON_J_PER_T * b_tesla / PLANCK_J_S * 1e-9)
}

/// Coupling and loss rates, all in MHz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingBudget {
    pub g: f64,
    pub kappa: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StrongCoupling {
    pub strong: bool,
    /// g − max(κ, γ), MHz.
    pub margin: f64,
}

/// g > κ and g > γ.
pub fn strong_coupling(budget: &CouplingBudget) -> Result<StrongCoupling> {
    for (name, v) in [("g", budget.g), ("kappa", budget.kappa), ("gamma", budget.gamma)] {
        if !(v >= 0.0 && v.is_finite()) {
            return Err(Error::InvalidArgument {
                parameter: name,
                reason: format!("must be >= 0 MHz, got {v}"),
            });
        }
    }
    let loss = budget.kappa.max(budget.gamma);
    Ok(StrongCoupling {
        strong: budget.g > loss,
        margin: budget.g - loss,
    })
}
