//! Batch pipelines: de Boer parameters for every species and surface-state
//! rows for every substance, with residuals against stored reference values.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matter::{de_boer, ParticleSpecies, ReferenceRow, SubstanceRegistry, SubstanceSurface};
use crate::zstates::{build_potential, solve_bound_states, transition, ConvergenceReport, PotentialSpec};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeBoerRow {
    pub name: String,
    /// amu
    pub mass: f64,
    /// Å
    pub sigma: f64,
    /// K
    pub epsilon: f64,
    pub lambda: f64,
}

pub fn de_boer_table(species: &[ParticleSpecies]) -> Vec<DeBoerRow> {
    species
        .iter()
        .map(|s| DeBoerRow {
            name: s.name.clone(),
            mass: s.mass,
            sigma: s.sigma,
            epsilon: s.epsilon,
            lambda: de_boer(s),
        })
        .collect()
}

/// Per-run replacements for the stored cutoff and barrier.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SurfaceOverrides {
    /// Å; defaults to the scattering length.
    pub cutoff: Option<f64>,
    /// eV; defaults to the stored barrier.
    pub barrier_v0: Option<f64>,
}

/// Computed columns in the same units as [`ReferenceRow`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SurfaceStateRow {
    /// meV
    pub e_z1: f64,
    /// meV
    pub e_z2: f64,
    /// K
    pub de_kelvin: f64,
    /// THz
    pub f_thz: f64,
    /// nm
    pub z1_nm: f64,
    /// nm
    pub z2_nm: f64,
}

impl SurfaceStateRow {
    pub const COLUMNS: [&'static str; 6] = ["E_z1_meV", "E_z2_meV", "dE_K", "f_THz", "z1_nm", "z2_nm"];

    pub fn values(&self) -> [f64; 6] {
        [
            self.e_z1,
            self.e_z2,
            self.de_kelvin,
            self.f_thz,
            self.z1_nm,
            self.z2_nm,
        ]
    }
}

fn reference_values(r: &ReferenceRow) -> [f64; 6] {
    [r.e_z1_mev, r.e_z2_mev, r.de_kelvin, r.f_thz, r.z1_nm, r.z2_nm]
}

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceStateEntry {
    pub name: String,
    /// Å
    pub cutoff: f64,
    /// eV
    pub barrier_v0: f64,
    pub dielectric_constant: f64,
    pub computed: SurfaceStateRow,
    pub reference: Option<ReferenceRow>,
    pub convergence: Option<ConvergenceReport>,
}

impl SurfaceStateEntry {
    /// (computed − reference) / |reference| per column.
    pub fn residuals(&self) -> Option<[f64; 6]> {
        let reference = reference_values(self.reference.as_ref()?);
        let computed = self.computed.values();
        Some(std::array::from_fn(|i| {
            (computed[i] - reference[i]) / reference[i].abs()
        }))
    }

    pub fn max_abs_residual(&self) -> Option<f64> {
        self.residuals()
            .map(|r| r.iter().fold(0.0f64, |m, x| m.max(x.abs())))
    }
}

/// Regularized-image solve for one substance, two lowest states.
pub fn surface_state_row(
    surface: &SubstanceSurface,
    overrides: SurfaceOverrides,
) -> Result<SurfaceStateEntry> {
    let cutoff = overrides.cutoff.unwrap_or(surface.scattering_length);
    let barrier_v0 = overrides.barrier_v0.unwrap_or(surface.barrier_v0);
    let spec = PotentialSpec::regularized(barrier_v0, surface.dielectric_constant, cutoff);
    let grid = spec.default_grid()?;
    let profile = build_potential(&spec, &grid)?;
    let solution = solve_bound_states(&profile, 2)?;
    if solution.states.len() < 2 {
        return Err(Error::MissingState {
            level: 2,
            available: solution.states.len(),
        });
    }
    let (s1, s2) = (&solution.states[0], &solution.states[1]);
    let t = transition(&solution.states, 1, 2)?;
    Ok(SurfaceStateEntry {
        name: surface.name.clone(),
        cutoff,
        barrier_v0,
        dielectric_constant: surface.dielectric_constant,
        computed: SurfaceStateRow {
            e_z1: s1.energy,
            e_z2: s2.energy,
            de_kelvin: t.de_kelvin,
            f_thz: t.f_thz,
            z1_nm: s1.mean_z,
            z2_nm: s2.mean_z,
        },
        reference: surface.reference,
        convergence: solution.convergence,
    })
}

/// Surface-state rows for the named substances (all when `names` is empty),
/// in registry order.
pub fn surface_state_table(
    registry: &SubstanceRegistry,
    names: &[String],
    overrides: SurfaceOverrides,
) -> Result<Vec<SurfaceStateEntry>> {
    let selected: Vec<&SubstanceSurface> = if names.is_empty() {
        registry.surfaces().iter().collect()
    } else {
        names
            .iter()
            .map(|n| {
                registry.find_surface(n).ok_or_else(|| Error::UnknownSubstance {
                    name: n.clone(),
                    available: registry.surfaces().iter().map(|s| s.name.clone()).collect(),
                })
            })
            .collect::<Result<_>>()?
    };
    selected
        .par_iter()
        .map(|s| surface_state_row(s, overrides))
        .collect()
}
