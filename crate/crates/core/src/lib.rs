//! Numerics for electrons bound to quantum liquids and solids: image-potential
//! surface states, the 2D electron phase diagram and circuit-QED coupling
//! estimates.
//!
//! Everything is computed in Hartree atomic units internally and converted
//! at the API boundary; each function documents the units it accepts.

pub mod cqed;
pub mod error;
pub mod matter;
pub mod phases;
pub mod quad;
pub mod tables;
pub mod tridiag;
pub mod units;
pub mod zstates;

pub use cqed::{
    image_charge_delta, larmor, spin_coupling, strong_coupling, CouplingBudget, SpinCouplingInput,
    StrongCoupling,
};
pub use error::{Error, Result};
pub use matter::{
    de_boer, lj_potential, load_registry, v0_weak_scattering, ParticleSpecies, ReferenceRow,
    SubstanceRegistry, SubstanceSurface,
};
pub use phases::{
    chemical_potential, classify, coulomb_energy, critical_point, fermi_energy, kinetic_energy,
    log_temperature_grid, melting_curve, melting_densities, plasma_parameter, quantum_critical_density,
    CriticalPoint, ElectronGasPoint, MeltingCurve, MeltingPoint, MeltingRoots, PhaseLabel,
};
pub use tables::{
    de_boer_table, surface_state_row, surface_state_table, DeBoerRow, SurfaceOverrides, SurfaceStateEntry,
    SurfaceStateRow,
};
pub use units::{convert, Equivalences, Quantity, Unit};
pub use zstates::{
    build_potential, hydrogenic_levels, mean_z, solve_bound_states, solve_bound_states_with, stark_scan,
    transition, BoundState, GridSpec, PotentialKind, PotentialProfile, PotentialSpec, Solution, SolveOptions,
    Transition,
};
