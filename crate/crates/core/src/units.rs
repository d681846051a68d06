//! Physical constants and unit conversions.
//!
//! The numerical kernels work in Hartree atomic units (hbar = m_e = e = 1,
//! lengths in Bohr radii, energies in Hartree). Values cross into laboratory
//! units only at API boundaries, through the factors in [`constants`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CODATA 2018 recommended values.
///
/// | constant                  | value               | unit       |
/// |---------------------------|---------------------|------------|
/// | Hartree energy            | 27.211386245988     | eV         |
/// | Bohr radius               | 0.529177210903      | Å          |
/// | Boltzmann constant        | 8.617333262e-5      | eV/K       |
/// | Planck constant           | 4.135667696e-15     | eV·s       |
/// | reduced Planck constant   | 6.582119569e-16     | eV·s       |
/// | Planck constant (SI)      | 6.62607015e-34      | J·s        |
/// | reduced Planck (SI)       | 1.054571817e-34     | J·s        |
/// | Boltzmann constant (SI)   | 1.380649e-23        | J/K        |
/// | electron mass             | 9.1093837015e-31    | kg         |
/// | electron mass             | 5.48579909065e-4    | u          |
/// | atomic mass constant      | 1.66053906660e-27   | kg         |
/// | Bohr magneton             | 9.2740100783e-24    | J/T        |
/// | Bohr magneton             | 5.7883818060e-5     | eV/T       |
/// | elementary charge         | 1.602176634e-19     | C          |
pub mod constants {
    pub const HARTREE_EV: f64 = 27.211_386_245_988;
    pub const BOHR_ANGSTROM: f64 = 0.529_177_210_903;
    pub const BOLTZMANN_EV_PER_K: f64 = 8.617_333_262e-5;
    pub const PLANCK_EV_S: f64 = 4.135_667_696e-15;
    pub const HBAR_EV_S: f64 = 6.582_119_569e-16;
    pub const PLANCK_J_S: f64 = 6.626_070_15e-34;
    pub const HBAR_J_S: f64 = 1.054_571_817e-34;
    pub const BOLTZMANN_J_PER_K: f64 = 1.380_649e-23;
    pub const ELECTRON_MASS_KG: f64 = 9.109_383_701_5e-31;
    pub const ELECTRON_MASS_AMU: f64 = 5.485_799_090_65e-4;
    pub const AMU_KG: f64 = 1.660_539_066_60e-27;
    pub const BOHR_MAGNETON_J_PER_T: f64 = 9.274_010_078_3e-24;
    pub const BOHR_MAGNETON_EV_PER_T: f64 = 5.788_381_806_0e-5;
    pub const ELEMENTARY_CHARGE_C: f64 = 1.602_176_634e-19;

    /// e^2 in eV·Å, the Gaussian-units coupling used by image potentials.
    pub const E2_EV_ANGSTROM: f64 = HARTREE_EV * BOHR_ANGSTROM;
    /// hbar^2 / m_e in eV·Å^2.
    pub const HBAR2_OVER_ME_EV_ANGSTROM2: f64 = HARTREE_EV * BOHR_ANGSTROM * BOHR_ANGSTROM;
    /// Bohr radius in cm.
    pub const BOHR_CM: f64 = BOHR_ANGSTROM * 1e-8;
}

use constants::*;

/// Unit tags understood by [`convert`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Unit {
    #[serde(rename = "eV")]
    ElectronVolt,
    #[serde(rename = "meV")]
    MilliElectronVolt,
    #[serde(rename = "K")]
    Kelvin,
    #[serde(rename = "THz")]
    Terahertz,
    #[serde(rename = "GHz")]
    Gigahertz,
    #[serde(rename = "MHz")]
    Megahertz,
    #[serde(rename = "Å")]
    Angstrom,
    #[serde(rename = "nm")]
    Nanometre,
    #[serde(rename = "a_B")]
    Bohr,
    #[serde(rename = "cm⁻²")]
    PerSquareCentimetre,
    #[serde(rename = "Å⁻³")]
    PerCubicAngstrom,
    #[serde(rename = "T")]
    Tesla,
    #[serde(rename = "T/m")]
    TeslaPerMetre,
    #[serde(rename = "Hartree")]
    Hartree,
    #[serde(rename = "amu")]
    Amu,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dimension {
    Energy,
    Temperature,
    Frequency,
    Length,
    AreaDensity,
    VolumeDensity,
    MagneticField,
    FieldGradient,
    Mass,
}

impl Unit {
    pub const ALL: [Unit; 15] = [
        Unit::ElectronVolt,
        Unit::MilliElectronVolt,
        Unit::Kelvin,
        Unit::Terahertz,
        Unit::Gigahertz,
        Unit::Megahertz,
        Unit::Angstrom,
        Unit::Nanometre,
        Unit::Bohr,
        Unit::PerSquareCentimetre,
        Unit::PerCubicAngstrom,
        Unit::Tesla,
        Unit::TeslaPerMetre,
        Unit::Hartree,
        Unit::Amu,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Unit::ElectronVolt => "eV",
            Unit::MilliElectronVolt => "meV",
            Unit::Kelvin => "K",
            Unit::Terahertz => "THz",
            Unit::Gigahertz => "GHz",
            Unit::Megahertz => "MHz",
            Unit::Angstrom => "Å",
            Unit::Nanometre => "nm",
            Unit::Bohr => "a_B",
            Unit::PerSquareCentimetre => "cm⁻²",
            Unit::PerCubicAngstrom => "Å⁻³",
            Unit::Tesla => "T",
            Unit::TeslaPerMetre => "T/m",
            Unit::Hartree => "Hartree",
            Unit::Amu => "amu",
        }
    }

    fn dimension(self) -> Dimension {
        match self {
            Unit::ElectronVolt | Unit::MilliElectronVolt | Unit::Hartree => Dimension::Energy,
            Unit::Kelvin => Dimension::Temperature,
            Unit::Terahertz | Unit::Gigahertz | Unit::Megahertz => Dimension::Frequency,
            Unit::Angstrom | Unit::Nanometre | Unit::Bohr => Dimension::Length,
            Unit::PerSquareCentimetre => Dimension::AreaDensity,
            Unit::PerCubicAngstrom => Dimension::VolumeDensity,
            Unit::Tesla => Dimension::MagneticField,
            Unit::TeslaPerMetre => Dimension::FieldGradient,
            Unit::Amu => Dimension::Mass,
        }
    }

    /// Size of one unit in the base unit of its dimension
    /// (eV, K, Hz, Å, cm⁻², Å⁻³, T, T/m, amu).
    fn scale(self) -> f64 {
        match self {
            Unit::ElectronVolt => 1.0,
            Unit::MilliElectronVolt => 1e-3,
            Unit::Hartree => HARTREE_EV,
            Unit::Kelvin => 1.0,
            Unit::Terahertz => 1e12,
            Unit::Gigahertz => 1e9,
            Unit::Megahertz => 1e6,
            Unit::Angstrom => 1.0,
            Unit::Nanometre => 10.0,
            Unit::Bohr => BOHR_ANGSTROM,
            Unit::PerSquareCentimetre
            | Unit::PerCubicAngstrom
            | Unit::Tesla
            | Unit::TeslaPerMetre
            | Unit::Amu => 1.0,
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Which cross-dimension bridges a conversion may use.
///
/// `thermal` identifies a temperature with the energy k_B T; `photon`
/// identifies a frequency with the energy h f.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Equivalences {
    pub thermal: bool,
    pub photon: bool,
}

impl Equivalences {
    pub const NONE: Self = Self {
        thermal: false,
        photon: false,
    };
    pub const THERMAL: Self = Self {
        thermal: true,
        photon: false,
    };
    pub const PHOTON: Self = Self {
        thermal: false,
        photon: true,
    };
    pub const SPECTROSCOPIC: Self = Self {
        thermal: true,
        photon: true,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    pub value: f64,
    pub unit: Unit,
}

impl Quantity {
    pub const fn new(value: f64, unit: Unit) -> Self {
        Self { value, unit }
    }

    pub fn to(self, target: Unit) -> Result<Quantity> {
        convert(self, target, Equivalences::NONE)
    }

    pub fn to_with(self, target: Unit, equivalences: Equivalences) -> Result<Quantity> {
        convert(self, target, equivalences)
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.value, self.unit)
    }
}

/// Energy in eV of one base unit of a dimension that can bridge to energy.
fn energy_bridge(dimension: Dimension, equivalences: Equivalences) -> Option<f64> {
    match dimension {
        Dimension::Energy => Some(1.0),
        Dimension::Temperature if equivalences.thermal => Some(BOLTZMANN_EV_PER_K),
        Dimension::Frequency if equivalences.photon => Some(PLANCK_EV_S),
        _ => None,
    }
}

/// Rescales `q` into `target`. Units of the same dimension always convert;
/// temperature and frequency reach energy only through the requested
/// equivalences.
pub fn convert(q: Quantity, target: Unit, equivalences: Equivalences) -> Result<Quantity> {
    if q.unit == target {
        return Ok(q);
    }
    let (from_dim, to_dim) = (q.unit.dimension(), target.dimension());
    let factor = if from_dim == to_dim {
        q.unit.scale() / target.scale()
    } else {
        let incompatible = || Error::IncompatibleUnits {
            from: q.unit,
            to: target,
        };
        let from_ev = energy_bridge(from_dim, equivalences).ok_or_else(incompatible)?;
        let to_ev = energy_bridge(to_dim, equivalences).ok_or_else(incompatible)?;
        (q.unit.scale() * from_ev) / (target.scale() * to_ev)
    };
    Ok(Quantity::new(q.value * factor, target))
}

// Shorthands used at module boundaries.

pub fn ev_to_hartree(ev: f64) -> f64 {
    ev / HARTREE_EV
}

pub fn hartree_to_ev(ha: f64) -> f64 {
    ha * HARTREE_EV
}

pub fn hartree_to_mev(ha: f64) -> f64 {
    ha * HARTREE_EV * 1e3
}

pub fn kelvin_to_hartree(kelvin: f64) -> f64 {
    kelvin * BOLTZMANN_EV_PER_K / HARTREE_EV
}

pub fn hartree_to_kelvin(ha: f64) -> f64 {
    ha * HARTREE_EV / BOLTZMANN_EV_PER_K
}

pub fn angstrom_to_bohr(angstrom: f64) -> f64 {
    angstrom / BOHR_ANGSTROM
}

pub fn bohr_to_angstrom(bohr: f64) -> f64 {
    bohr * BOHR_ANGSTROM
}

/// Areal density cm⁻² → a_B⁻².
pub fn per_cm2_to_atomic(n_cm2: f64) -> f64 {
    n_cm2 * BOHR_CM * BOHR_CM
}

/// Areal density a_B⁻² → cm⁻².
pub fn atomic_to_per_cm2(n_atomic: f64) -> f64 {
    n_atomic / (BOHR_CM * BOHR_CM)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn hartree_in_ev() {
        let q = Quantity::new(1.0, Unit::Hartree).to(Unit::ElectronVolt).unwrap();
        assert_relative_eq!(q.value, 27.211386, max_relative = 1e-7);
    }

    #[test]
    fn thermal_kelvin_to_ev() {
        let q = Quantity::new(10.2, Unit::Kelvin)
            .to_with(Unit::ElectronVolt, Equivalences::THERMAL)
            .unwrap();
        assert_relative_eq!(q.value, 10.2 * 8.617333e-5, max_relative = 1e-6);
        assert_relative_eq!(q.value, 8.789e-4, max_relative = 1e-3);
    }

    #[test]
    fn photon_terahertz_to_kelvin() {
        let q = Quantity::new(1.0, Unit::Terahertz)
            .to_with(Unit::Kelvin, Equivalences::SPECTROSCOPIC)
            .unwrap();
        assert_relative_eq!(q.value, 47.992, max_relative = 1e-4);
    }

    #[test]
    fn helium_transition_frequency_matches_gap() {
        let q = Quantity::new(0.124, Unit::Terahertz)
            .to_with(Unit::Kelvin, Equivalences::SPECTROSCOPIC)
            .unwrap();
        assert!((q.value - 5.9).abs() / 5.9 < 0.02, "{q}");
    }

    #[test]
    fn kelvin_needs_thermal_equivalence() {
        let err = Quantity::new(1.0, Unit::Kelvin)
            .to(Unit::ElectronVolt)
            .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains('K') && msg.contains("eV"), "{msg}");
        // photon alone is not enough either
        assert!(Quantity::new(1.0, Unit::Kelvin)
            .to_with(Unit::Terahertz, Equivalences::PHOTON)
            .is_err());
    }

    #[test]
    fn length_to_field_is_rejected() {
        assert!(matches!(
            Quantity::new(1.0, Unit::Nanometre).to(Unit::Tesla),
            Err(Error::IncompatibleUnits { .. })
        ));
    }

    #[test]
    fn identity_is_exact() {
        for unit in Unit::ALL {
            let q = Quantity::new(0.1 + 0.2, unit);
            assert_eq!(q.to(unit).unwrap().value, q.value);
        }
    }

    #[test]
    fn mixed_unit_couplings() {
        assert_relative_eq!(E2_EV_ANGSTROM, 14.39964, max_relative = 1e-6);
        assert_relative_eq!(HBAR2_OVER_ME_EV_ANGSTROM2, 7.6200, max_relative = 1e-4);
        assert_relative_eq!(PLANCK_EV_S, PLANCK_J_S / ELEMENTARY_CHARGE_C, max_relative = 1e-9);
        assert_relative_eq!(
            HBAR_J_S,
            PLANCK_J_S / (2.0 * std::f64::consts::PI),
            max_relative = 1e-9
        );
        assert_relative_eq!(ELECTRON_MASS_AMU, ELECTRON_MASS_KG / AMU_KG, max_relative = 1e-9);
    }

    const ENERGY_LIKE: [Unit; 7] = [
        Unit::ElectronVolt,
        Unit::MilliElectronVolt,
        Unit::Hartree,
        Unit::Kelvin,
        Unit::Terahertz,
        Unit::Gigahertz,
        Unit::Megahertz,
    ];

    proptest! {
        #[test]
        fn round_trip(value in -1e6f64..1e6, a in 0usize..7, b in 0usize..7) {
            let eq = Equivalences::SPECTROSCOPIC;
            let (ua, ub) = (ENERGY_LIKE[a], ENERGY_LIKE[b]);
            let there = convert(Quantity::new(value, ua), ub, eq).unwrap();
            let back = convert(there, ua, eq).unwrap();
            prop_assert!((back.value - value).abs() <= 1e-12 * value.abs());
        }

        #[test]
        fn composition_matches_direct(a in 0usize..7, b in 0usize..7, c in 0usize..7) {
            let eq = Equivalences::SPECTROSCOPIC;
            let (ua, ub, uc) = (ENERGY_LIKE[a], ENERGY_LIKE[b], ENERGY_LIKE[c]);
            let direct = convert(Quantity::new(1.0, ua), uc, eq).unwrap().value;
            let via = convert(convert(Quantity::new(1.0, ua), ub, eq).unwrap(), uc, eq).unwrap().value;
            prop_assert!((via - direct).abs() <= 1e-12 * direct.abs());
        }
    }
}
