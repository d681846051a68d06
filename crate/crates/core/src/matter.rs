//! Species and substance data: Lennard-Jones pair parameters, de Boer
//! quantumness, and the bulk surface data consumed by the surface-state
//! solver.
//!
//! # Substance file format
//!
//! A UTF-8 JSON document with two top-level arrays. Units are fixed.
//!
//! ```json
//! {
//!   "species": [
//!     { "name": "4He", "mass": 4.0026, "sigma": 2.556, "epsilon": 10.2 }
//!   ],
//!   "surfaces": [
//!     {
//!       "name": "4He",
//!       "number_density": 0.0218,
//!       "scattering_length": 0.62,
//!       "dielectric_constant": 1.056,
//!       "barrier_V0": 1.1,
//!       "reference": { "E_z1": -0.676, "E_z2": -0.163, "dE_K": 5.9,
//!                      "f_THz": 0.124, "z1_nm": 10.8, "z2_nm": 45.0 },
//!       "density_limit": 2.4e9
//!     }
//!   ]
//! }
//! ```
//!
//! | field                 | unit | constraint          |
//! |-----------------------|------|---------------------|
//! | `mass`                | amu  | > 0                 |
//! | `sigma`               | Å    | > 0                 |
//! | `epsilon`             | K    | > 0                 |
//! | `number_density`      | Å⁻³  | > 0                 |
//! | `scattering_length`   | Å    | finite              |
//! | `dielectric_constant` | 1    | ≥ 1                 |
//! | `barrier_V0`          | eV   | > 0                 |
//! | `reference.E_z1/E_z2` | meV  | optional block      |
//! | `reference.dE_K`      | K    |                     |
//! | `reference.f_THz`     | THz  |                     |
//! | `reference.z1_nm/z2_nm` | nm |                     |
//! | `density_limit`       | cm⁻² | optional, > 0       |
//!
//! Either array may be omitted. Names must be unique within each array,
//! compared case-insensitively. Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::units::constants::{AMU_KG, BOLTZMANN_J_PER_K, HBAR2_OVER_ME_EV_ANGSTROM2, PLANCK_J_S};

const BUNDLED: &str = include_str!("../data/substances.json");

/// A nonpolar atom or molecule with Lennard-Jones pair parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParticleSpecies {
    pub name: String,
    /// amu
    pub mass: f64,
    /// Å
    pub sigma: f64,
    /// K
    pub epsilon: f64,
}

/// Published surface-state values kept alongside a substance for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceRow {
    #[serde(rename = "E_z1")]
    pub e_z1_mev: f64,
    #[serde(rename = "E_z2")]
    pub e_z2_mev: f64,
    #[serde(rename = "dE_K")]
    pub de_kelvin: f64,
    #[serde(rename = "f_THz")]
    pub f_thz: f64,
    pub z1_nm: f64,
    pub z2_nm: f64,
}

/// Bulk data for the condensed phase an electron is bound to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubstanceSurface {
    pub name: String,
    /// Å⁻³
    pub number_density: f64,
    /// Å
    pub scattering_length: f64,
    pub dielectric_constant: f64,
    /// eV
    #[serde(rename = "barrier_V0")]
    pub barrier_v0: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ReferenceRow>,
    /// cm⁻²
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density_limit: Option<f64>,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubstanceFile {
    #[serde(default)]
    species: Vec<ParticleSpecies>,
    #[serde(default)]
    surfaces: Vec<SubstanceSurface>,
}

/// Immutable, name-keyed collection of species and surfaces.
#[derive(Debug, Clone, PartialEq)]
pub struct SubstanceRegistry {
    species: Vec<ParticleSpecies>,
    surfaces: Vec<SubstanceSurface>,
}

fn require(entry: &str, field: &'static str, ok: bool, reason: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidField {
            entry: entry.to_owned(),
            field,
            reason: reason.to_owned(),
        })
    }
}

fn positive(v: f64) -> bool {
    v.is_finite() && v > 0.0
}

impl ParticleSpecies {
    pub fn validate(&self) -> Result<()> {
        require(
            &self.name,
            "name",
            !self.name.trim().is_empty(),
            "must not be empty",
        )?;
        require(
            &self.name,
            "mass",
            positive(self.mass),
            "must be a positive number (amu)",
        )?;
        require(
            &self.name,
            "sigma",
            positive(self.sigma),
            "must be a positive number (Å)",
        )?;
        require(
            &self.name,
            "epsilon",
            positive(self.epsilon),
            "must be a positive number (K)",
        )
    }
}

impl SubstanceSurface {
    pub fn validate(&self) -> Result<()> {
        let n = &self.name;
        require(n, "name", !n.trim().is_empty(), "must not be empty")?;
        require(
            n,
            "number_density",
            positive(self.number_density),
            "must be a positive number (Å⁻³)",
        )?;
        require(
            n,
            "scattering_length",
            self.scattering_length.is_finite(),
            "must be a finite number (Å)",
        )?;
        require(
            n,
            "dielectric_constant",
            self.dielectric_constant.is_finite() && self.dielectric_constant >= 1.0,
            "must be at least 1",
        )?;
        require(
            n,
            "barrier_V0",
            positive(self.barrier_v0),
            "must be a positive number (eV)",
        )?;
        if let Some(limit) = self.density_limit {
            require(
                n,
                "density_limit",
                positive(limit),
                "must be a positive number (cm⁻²)",
            )?;
        }
        if let Some(r) = &self.reference {
            let all_finite = [r.e_z1_mev, r.e_z2_mev, r.de_kelvin, r.f_thz, r.z1_nm, r.z2_nm]
                .iter()
                .all(|v| v.is_finite());
            require(n, "reference", all_finite, "must contain only finite numbers")?;
        }
        Ok(())
    }
}

fn check_unique<'a>(kind: &'static str, names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for name in names {
        if !seen.insert(name.to_lowercase()) {
            return Err(Error::DuplicateName {
                kind,
                name: name.to_owned(),
            });
        }
    }
    Ok(())
}

impl SubstanceRegistry {
    pub fn new(species: Vec<ParticleSpecies>, surfaces: Vec<SubstanceSurface>) -> Result<Self> {
        species.iter().try_for_each(ParticleSpecies::validate)?;
        surfaces.iter().try_for_each(SubstanceSurface::validate)?;
        check_unique("species", species.iter().map(|s| s.name.as_str()))?;
        check_unique("surface", surfaces.iter().map(|s| s.name.as_str()))?;
        Ok(Self { species, surfaces })
    }

    /// The six species and six surfaces shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_json(BUNDLED).expect("bundled substance data is valid")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SubstanceFile = serde_json::from_str(text)?;
        Self::new(file.species, file.surfaces)
    }

    pub fn to_json(&self) -> String {
        let file = SubstanceFile {
            species: self.species.clone(),
            surfaces: self.surfaces.clone(),
        };
        serde_json::to_string_pretty(&file).expect("registry serializes")
    }

    pub fn species(&self) -> &[ParticleSpecies] {
        &self.species
    }

    pub fn surfaces(&self) -> &[SubstanceSurface] {
        &self.surfaces
    }

    pub fn find_species(&self, name: &str) -> Option<&ParticleSpecies> {
        self.species.iter().find(|s| s.name.eq_ignore_ascii_case(name))
    }

    pub fn find_surface(&self, name: &str) -> Option<&SubstanceSurface> {
        self.surfaces.iter().find(|s| s.name.eq_ignore_ascii_case(name))
    }
}

/// Loads a registry from `source`, or the bundled data when `source` is `None`.
pub fn load_registry(source: Option<&Path>) -> Result<SubstanceRegistry> {
    match source {
        None => Ok(SubstanceRegistry::bundled()),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.display().to_string(),
                source,
            })?;
            SubstanceRegistry::from_json(&text)
        }
    }
}

/// Lennard-Jones pair energy 4ε[(σ/r)¹² − (σ/r)⁶] at separation `r_angstrom`, in K.
pub fn lj_potential(r_angstrom: f64, species: &ParticleSpecies) -> Result<f64> {
    if r_angstrom.is_nan() || r_angstrom <= 0.0 {
        return Err(Error::invalid(
            "separation",
            format!("r must be > 0 Å, got {r_angstrom}"),
        ));
    }
    let s6 = (species.sigma / r_angstrom).powi(6);
    Ok(4.0 * species.epsilon * (s6 * s6 - s6))
}

/// de Boer parameter h / (σ √(m ε)), taking d ≈ σ and the zero-point
/// kinetic energy ≈ ε.
pub fn de_boer(species: &ParticleSpecies) -> f64 {
    let mass_kg = species.mass * AMU_KG;
    let epsilon_j = species.epsilon * BOLTZMANN_J_PER_K;
    let sigma_m = species.sigma * 1e-10;
    PLANCK_J_S / (sigma_m * (mass_kg * epsilon_j).sqrt())
}

/// Weak-scattering Pauli barrier 2πħ² n a_s / m_e in eV, with `n` in Å⁻³ and `a_s` in Å.
pub fn v0_weak_scattering(n: f64, a_s: f64) -> f64 {
    2.0 * std::f64::consts::PI * HBAR2_OVER_ME_EV_ANGSTROM2 * n * a_s
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn unit_species() -> ParticleSpecies {
        ParticleSpecies {
            name: "unit".into(),
            mass: 1.0,
            sigma: 1.0,
            epsilon: 1.0,
        }
    }

    #[test]
    fn lj_landmarks() {
        let s = unit_species();
        assert!(lj_potential(1.0, &s).unwrap().abs() < 1e-15);
        let rmin = 2f64.powf(1.0 / 6.0);
        assert_relative_eq!(lj_potential(rmin, &s).unwrap(), -1.0, max_relative = 1e-12);
        // 4(0.9^-12 - 0.9^-6)
        let expected = 4.0 * (0.9f64.powi(-12) - 0.9f64.powi(-6));
        assert_relative_eq!(lj_potential(0.9, &s).unwrap(), expected, max_relative = 1e-12);
        assert_relative_eq!(expected, 6.636, max_relative = 1e-3);
    }

    #[test]
    fn lj_rejects_nonpositive_separation() {
        let s = unit_species();
        assert!(lj_potential(0.0, &s).is_err());
        assert!(lj_potential(-1.0, &s).is_err());
    }

    #[test]
    fn de_boer_table_values() {
        let reg = SubstanceRegistry::bundled();
        for (name, lambda) in [("3He", 3.09), ("4He", 2.68), ("Ne", 0.59)] {
            let s = reg.find_species(name).unwrap();
            assert!((de_boer(s) - lambda).abs() < 0.01, "{name}: {}", de_boer(s));
        }
    }

    #[test]
    fn de_boer_decreases_with_mass() {
        let reg = SubstanceRegistry::bundled();
        let l: Vec<f64> = ["H2", "HD", "D2"]
            .iter()
            .map(|n| de_boer(reg.find_species(n).unwrap()))
            .collect();
        assert!(l[0] > l[1] && l[1] > l[2], "{l:?}");
    }

    #[test]
    fn weak_scattering_barrier() {
        assert_eq!(v0_weak_scattering(0.0218, 0.0), 0.0);
        // 2π · 7.6200 eV Å² · n · a_s
        let he = 2.0 * std::f64::consts::PI * 7.6200 * 0.0218 * 0.62;
        assert_relative_eq!(v0_weak_scattering(0.0218, 0.62), he, max_relative = 1e-4);
        assert_relative_eq!(v0_weak_scattering(0.0218, 0.62), 0.647, max_relative = 2e-3);
        assert_relative_eq!(v0_weak_scattering(0.0460, 0.38), 0.837, max_relative = 2e-3);
    }

    #[test]
    fn bundled_registry_contents() {
        let reg = load_registry(None).unwrap();
        assert_eq!(reg.species().len(), 6);
        assert_eq!(reg.surfaces().len(), 6);
        assert!(reg.surfaces().iter().all(|s| s.reference.is_some()));
        assert!(reg.surfaces().iter().all(|s| s.scattering_length > 0.0));
        assert!(reg.find_surface("ne").is_some());
        assert!(reg.find_species("unknownium").is_none());
    }

    #[test]
    fn duplicate_names_rejected() {
        let text = r#"{"species": [
            {"name": "Ne", "mass": 20.18, "sigma": 2.749, "epsilon": 35.6},
            {"name": "ne", "mass": 22.0, "sigma": 2.749, "epsilon": 35.6}
        ]}"#;
        let err = SubstanceRegistry::from_json(text).unwrap_err();
        assert!(matches!(&err, Error::DuplicateName { name, .. } if name == "ne"));
        assert!(err.to_string().contains("ne"));
    }

    #[test]
    fn negative_density_names_field() {
        let text = r#"{"surfaces": [{"name": "X", "number_density": -0.01,
            "scattering_length": 0.5, "dielectric_constant": 1.1, "barrier_V0": 1.0}]}"#;
        let err = SubstanceRegistry::from_json(text).unwrap_err();
        assert!(err.to_string().contains("number_density"), "{err}");
    }

    #[test]
    fn missing_field_reports_location() {
        let text = "{\"species\": [\n {\"name\": \"X\", \"mass\": 1.0, \"sigma\": 2.0}\n]}";
        let err = SubstanceRegistry::from_json(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("epsilon") && msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn unknown_key_rejected() {
        let text = r#"{"species": [{"name": "X", "mass": 1, "sigma": 1, "epsilon": 1, "colour": 3}]}"#;
        assert!(SubstanceRegistry::from_json(text).is_err());
    }

    #[test]
    fn json_round_trip() {
        let reg = SubstanceRegistry::bundled();
        assert_eq!(SubstanceRegistry::from_json(&reg.to_json()).unwrap(), reg);
    }

    proptest! {
        #[test]
        fn lj_sign_follows_sigma(r in 0.05f64..20.0, sigma in 0.5f64..5.0) {
            let s = ParticleSpecies { name: "p".into(), mass: 1.0, sigma, epsilon: 3.0 };
            let v = lj_potential(r, &s).unwrap();
            if r < sigma * (1.0 - 1e-9) { prop_assert!(v > 0.0); }
            if r > sigma * (1.0 + 1e-9) { prop_assert!(v < 0.0); }
        }

        #[test]
        fn weak_scattering_is_bilinear(n in 0.0f64..0.1, a in -1.0f64..1.0, k in 0.1f64..10.0) {
            let base = v0_weak_scattering(n, a);
            prop_assert!((v0_weak_scattering(k * n, a) - k * base).abs() <= 1e-12 * (1.0 + base.abs() * k));
            prop_assert!((v0_weak_scattering(n, k * a) - k * base).abs() <= 1e-12 * (1.0 + base.abs() * k));
        }
    }
}
