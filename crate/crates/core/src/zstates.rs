//! Vertical (out-of-plane) bound states of an electron above a dielectric
//! surface.
//!
//! A [`PotentialSpec`] is sampled on a uniform [`GridSpec`] to give a
//! [`PotentialProfile`]. [`solve_bound_states`] discretizes
//! `-½ψ'' + Vψ = Eψ` (atomic units) with second-order centred differences
//! and Dirichlet ends, then extracts the lowest eigenpairs by Sturm
//! bisection and inverse iteration.
//!
//! Where a grid node sits exactly on the surface plane (z = 0) and the
//! potential jumps there, the node carries the mean of the two one-sided
//! limits. This keeps the discretization second order across the step.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tridiag::SymTridiagonal;
use crate::units::constants::{BOHR_ANGSTROM, BOLTZMANN_EV_PER_K, E2_EV_ANGSTROM, PLANCK_EV_S};
use crate::units::{ev_to_hartree, hartree_to_ev};

/// Depth of the barrier side in default grids, Å.
pub const DEFAULT_Z_MIN: f64 = -20.0;
/// Upper bound on the default grid spacing, Å.
pub const DEFAULT_MAX_SPACING: f64 = 0.05;

/// Image-charge strength (ε − 1)/(ε + 1).
pub fn image_strength(eps_r: f64) -> f64 {
    (eps_r - 1.0) / (eps_r + 1.0)
}

/// Effective nuclear charge Z = (ε − 1)/(4(ε + 1)) of the image problem.
pub fn effective_charge(eps_r: f64) -> f64 {
    0.25 * image_strength(eps_r)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum PotentialKind {
    /// Flat barrier for z < 0, image potential shifted by `cutoff` for z > 0.
    RegularizedImage {
        /// eV
        barrier_v0: f64,
        eps_r: f64,
        /// Å
        cutoff: f64,
    },
    /// Hard wall at z = 0, bare image potential above it.
    InfiniteBarrierImage { eps_r: f64 },
    /// Electron between a polarizable solid (z < 0) and a liquid that fills
    /// in over the length `zeta` above it.
    Interface {
        /// eV, solid side
        barrier_below: f64,
        /// eV, liquid side, reached for z ≫ zeta
        barrier_above: f64,
        eps_r_below: f64,
        /// Å
        zeta: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    /// Vertical pressing field, V/m. Acts for z > 0 only.
    #[serde(default)]
    pub pressing_field: f64,
}

impl PotentialSpec {
    pub fn new(kind: PotentialKind) -> Self {
        Self {
            kind,
            pressing_field: 0.0,
        }
    }

    pub fn regularized(barrier_v0: f64, eps_r: f64, cutoff: f64) -> Self {
        Self::new(PotentialKind::RegularizedImage {
            barrier_v0,
            eps_r,
            cutoff,
        })
    }

    pub fn infinite_barrier(eps_r: f64) -> Self {
        Self::new(PotentialKind::InfiniteBarrierImage { eps_r })
    }

    pub fn interface(barrier_below: f64, barrier_above: f64, eps_r_below: f64, zeta: f64) -> Self {
        Self::new(PotentialKind::Interface {
            barrier_below,
            barrier_above,
            eps_r_below,
            zeta,
        })
    }

    pub fn with_field(mut self, pressing_field: f64) -> Self {
        self.pressing_field = pressing_field;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let eps_ok = |eps: f64| eps.is_finite() && eps >= 1.0;
        match self.kind {
            PotentialKind::RegularizedImage {
                barrier_v0,
                eps_r,
                cutoff,
            } => {
                if !eps_ok(eps_r) {
                    return Err(Error::invalid("eps_r", format!("must be >= 1, got {eps_r}")));
                }
                if !(cutoff > 0.0 && cutoff.is_finite()) {
                    return Err(Error::invalid("cutoff b", format!("must be > 0 Å, got {cutoff}")));
                }
                if !barrier_v0.is_finite() {
                    return Err(Error::invalid("V0", "must be finite"));
                }
            }
            PotentialKind::InfiniteBarrierImage { eps_r } => {
                if !eps_ok(eps_r) {
                    return Err(Error::invalid("eps_r", format!("must be >= 1, got {eps_r}")));
                }
            }
            PotentialKind::Interface {
                barrier_below,
                barrier_above,
                eps_r_below,
                zeta,
            } => {
                if !eps_ok(eps_r_below) {
                    return Err(Error::invalid(
                        "eps_r",
                        format!("must be >= 1, got {eps_r_below}"),
                    ));
                }
                if !(zeta > 0.0 && zeta.is_finite()) {
                    return Err(Error::invalid("zeta", format!("must be > 0 Å, got {zeta}")));
                }
                if !(barrier_below.is_finite() && barrier_above.is_finite()) {
                    return Err(Error::invalid("barrier", "must be finite"));
                }
            }
        }
        if !self.pressing_field.is_finite() {
            return Err(Error::invalid("pressing field", "must be finite"));
        }
        Ok(())
    }

    /// Potential energy far from the surface in the absence of a field, eV.
    pub fn base_asymptote(&self) -> f64 {
        match self.kind {
            PotentialKind::Interface { barrier_above, .. } => barrier_above,
            _ => 0.0,
        }
    }

    /// Rough size of the ground state, Å: the hydrogenic ⟨z⟩₁ = 3a_B/(2Z)
    /// for image variants, ζ for the interface.
    pub fn expected_extent(&self) -> f64 {
        match self.kind {
            PotentialKind::RegularizedImage { eps_r, .. } | PotentialKind::InfiniteBarrierImage { eps_r } => {
                1.5 * BOHR_ANGSTROM / effective_charge(eps_r)
            }
            PotentialKind::Interface { zeta, .. } => zeta,
        }
    }

    /// Grid sized for this potential: z_min = −20 Å, z_max = 20 ⟨z⟩₁ and a
    /// spacing no larger than (a_B/Z)/200, 0.05 Å or half the cutoff, with a
    /// node on z = 0.
    pub fn default_grid(&self) -> Result<GridSpec> {
        self.validate()?;
        match self.kind {
            PotentialKind::RegularizedImage { eps_r, cutoff, .. } => {
                let (z_max, h) = image_grid(eps_r)?;
                GridSpec::aligned(DEFAULT_Z_MIN, z_max, h.min(0.5 * cutoff))
            }
            PotentialKind::InfiniteBarrierImage { eps_r } => {
                let (z_max, h) = image_grid(eps_r)?;
                GridSpec::aligned(DEFAULT_Z_MIN, z_max, h)
            }
            PotentialKind::Interface { zeta, .. } => {
                GridSpec::aligned(DEFAULT_Z_MIN, (40.0 * zeta).max(40.0), zeta / 50.0)
            }
        }
    }

    /// Potential at a point strictly off the surface plane, eV. `spacing` is
    /// the grid spacing used to cap the interface singularity.
    fn value_off_plane(&self, z: f64, spacing: f64) -> f64 {
        debug_assert!(z != 0.0);
        let field = if z > 0.0 {
            self.pressing_field * z * 1e-10
        } else {
            0.0
        };
        let base = match self.kind {
            PotentialKind::RegularizedImage {
                barrier_v0,
                eps_r,
                cutoff,
            } => {
                if z < 0.0 {
                    barrier_v0
                } else {
                    -image_strength(eps_r) * E2_EV_ANGSTROM / (4.0 * (z + cutoff))
                }
            }
            PotentialKind::InfiniteBarrierImage { eps_r } => {
                if z < 0.0 {
                    f64::INFINITY
                } else {
                    -image_strength(eps_r) * E2_EV_ANGSTROM / (4.0 * z)
                }
            }
            PotentialKind::Interface {
                barrier_below,
                barrier_above,
                eps_r_below,
                zeta,
            } => {
                if z < 0.0 {
                    barrier_below
                } else {
                    let zc = z.max(0.5 * spacing);
                    -image_strength(eps_r_below) * E2_EV_ANGSTROM / (4.0 * zc)
                        + barrier_above * (zc / zeta).tanh().powi(2)
                }
            }
        };
        base + field
    }

    /// Potential sampled at a grid node, eV.
    fn node_value(&self, z: f64, spacing: f64) -> f64 {
        if z != 0.0 {
            return self.value_off_plane(z, spacing);
        }
        match self.kind {
            PotentialKind::RegularizedImage {
                barrier_v0,
                eps_r,
                cutoff,
            } => 0.5 * (barrier_v0 - image_strength(eps_r) * E2_EV_ANGSTROM / (4.0 * cutoff)),
            PotentialKind::InfiniteBarrierImage { .. } => f64::INFINITY,
            PotentialKind::Interface { barrier_below, .. } => {
                0.5 * (barrier_below + self.value_off_plane(0.5 * spacing, spacing))
            }
        }
    }
}

fn image_grid(eps_r: f64) -> Result<(f64, f64)> {
    let z = effective_charge(eps_r);
    if z <= 0.0 {
        return Err(Error::invalid(
            "eps_r",
            "eps_r = 1 gives no image attraction and no natural grid; supply one explicitly",
        ));
    }
    let bohr_over_z = BOHR_ANGSTROM / z;
    Ok((
        20.0 * 1.5 * bohr_over_z,
        (bohr_over_z / 200.0).min(DEFAULT_MAX_SPACING),
    ))
}

/// Uniform grid on [z_min, z_max] (Å) with `points` nodes, ends included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub z_min: f64,
    pub z_max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(z_min: f64, z_max: f64, points: usize) -> Result<Self> {
        if !(z_min < 0.0 && z_max > 0.0 && z_min.is_finite() && z_max.is_finite()) {
            return Err(Error::invalid(
                "grid",
                format!("need z_min < 0 < z_max, got [{z_min}, {z_max}]"),
            ));
        }
        if points < 3 {
            return Err(Error::invalid(
                "grid",
                format!("need at least 3 points, got {points}"),
            ));
        }
        Ok(Self { z_min, z_max, points })
    }

    /// Grid whose spacing does not exceed `max_spacing` and which has a node
    /// exactly at z = 0. `z_max` is rounded up to a whole number of steps.
    pub fn aligned(z_min: f64, z_max: f64, max_spacing: f64) -> Result<Self> {
        if max_spacing.is_nan() || max_spacing <= 0.0 {
            return Err(Error::invalid("grid", "spacing must be positive"));
        }
        let below = (-z_min / max_spacing).ceil().max(1.0);
        let h = -z_min / below;
        let above = (z_max / h).ceil().max(1.0);
        Self::new(z_min, above * h, (below + above) as usize + 1)
    }

    pub fn spacing(&self) -> f64 {
        (self.z_max - self.z_min) / (self.points - 1) as f64
    }

    /// Index of the node on z = 0, if there is one.
    pub fn surface_node(&self) -> Option<usize> {
        let h = self.spacing();
        let i = (-self.z_min / h).round();
        let z = self.z_min + i * h;
        (z.abs() <= 1e-9 * h).then_some(i as usize)
    }

    pub fn node(&self, i: usize) -> f64 {
        if Some(i) == self.surface_node() {
            return 0.0;
        }
        if i + 1 == self.points {
            return self.z_max;
        }
        self.z_min + i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.node(i))
    }

    /// Same extent with the spacing halved.
    pub fn halved(&self) -> Self {
        Self {
            points: 2 * self.points - 1,
            ..*self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum ProfileWarning {
    /// z_max is below ten times the expected extent of the ground state.
    ShortDomain { z_max: f64, recommended: f64 },
}

impl std::fmt::Display for ProfileWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProfileWarning::ShortDomain { z_max, recommended } => write!(
                f,
                "z_max = {z_max} Å is short of the recommended {recommended} Å; tail states may be squeezed"
            ),
        }
    }
}

/// A potential sampled on a grid (eV per node).
///
/// For [`PotentialKind::InfiniteBarrierImage`] the nodes with z ≤ 0 lie
/// behind the hard wall: their samples are `+∞` and the wavefunction is
/// pinned to zero there. All other samples are finite.
#[derive(Debug, Clone)]
pub struct PotentialProfile {
    pub spec: PotentialSpec,
    pub grid: GridSpec,
    pub samples: Vec<f64>,
    /// Energy as z → +∞ (or at z_max when a field is applied), eV.
    pub asymptote: f64,
    pub warnings: Vec<ProfileWarning>,
}

impl PotentialProfile {
    /// First node the wavefunction may occupy.
    fn first_active(&self) -> usize {
        self.samples
            .iter()
            .position(|v| v.is_finite())
            .unwrap_or(self.samples.len())
    }
}

pub fn build_potential(spec: &PotentialSpec, grid: &GridSpec) -> Result<PotentialProfile> {
    spec.validate()?;
    let grid = GridSpec::new(grid.z_min, grid.z_max, grid.points)?;
    let h = grid.spacing();
    let samples: Vec<f64> = grid.nodes().map(|z| spec.node_value(z, h)).collect();

    let asymptote = if spec.pressing_field == 0.0 {
        spec.base_asymptote()
    } else {
        *samples.last().expect("grid has nodes")
    };

    let mut warnings = Vec::new();
    let recommended = 10.0 * spec.expected_extent();
    if grid.z_max < recommended {
        warnings.push(ProfileWarning::ShortDomain {
            z_max: grid.z_max,
            recommended,
        });
    }
    Ok(PotentialProfile {
        spec: *spec,
        grid,
        samples,
        asymptote,
        warnings,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundState {
    /// 1-based level number.
    pub level: usize,
    /// meV
    pub energy: f64,
    /// Samples on `grid`, normalized so that Σ ψ² h = 1 with h in Å.
    pub wavefunction: Vec<f64>,
    pub node_count: usize,
    /// nm
    pub mean_z: f64,
    pub grid: GridSpec,
}

impl BoundState {
    pub fn norm(&self) -> f64 {
        self.wavefunction.iter().map(|v| v * v).sum::<f64>() * self.grid.spacing()
    }

    /// Writes the two-column dump: z in nm, ψ in nm^-1/2.
    pub fn dump<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(
            out,
            "# z_nm psi_nm^-1/2  level={} energy_meV={:.6e} nodes={}",
            self.level, self.energy, self.node_count
        )?;
        let scale = 10f64.sqrt();
        for (z, psi) in self.grid.nodes().zip(&self.wavefunction) {
            writeln!(out, "{:.6e} {:.6e}", z / 10.0, psi * scale)?;
        }
        Ok(())
    }
}

/// Energy change of each state when the grid spacing is halved.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceReport {
    pub points: usize,
    pub halved_points: usize,
    /// E(h/2) − E(h) per state, meV. Missing entries mean the state was not
    /// found on the finer grid.
    pub energy_shift: Vec<Option<f64>>,
}

impl ConvergenceReport {
    pub fn max_abs_shift(&self) -> f64 {
        self.energy_shift
            .iter()
            .map(|s| s.map_or(f64::INFINITY, f64::abs))
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Solution {
    pub states: Vec<BoundState>,
    pub requested: usize,
    /// Requested states that do not exist below the asymptote.
    pub shortfall: usize,
    pub convergence: Option<ConvergenceReport>,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Re-solve on a grid with half the spacing and report energy shifts.
    pub convergence_check: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            convergence_check: true,
        }
    }
}

/// The `count` lowest bound states of `profile`, with a convergence report.
pub fn solve_bound_states(profile: &PotentialProfile, count: usize) -> Result<Solution> {
    solve_bound_states_with(profile, count, SolveOptions::default())
}

pub fn solve_bound_states_with(
    profile: &PotentialProfile,
    count: usize,
    options: SolveOptions,
) -> Result<Solution> {
    if count == 0 {
        return Err(Error::invalid("count", "at least one state must be requested"));
    }
    let states = eigenstates(profile, count)?;
    let convergence = if options.convergence_check {
        let fine = build_potential(&profile.spec, &profile.grid.halved())?;
        let fine_states = eigenstates(&fine, states.len().max(1))?;
        Some(ConvergenceReport {
            points: profile.grid.points,
            halved_points: fine.grid.points,
            energy_shift: states
                .iter()
                .enumerate()
                .map(|(k, s)| fine_states.get(k).map(|f| f.energy - s.energy))
                .collect(),
        })
    } else {
        None
    };
    Ok(Solution {
        shortfall: count - states.len(),
        requested: count,
        states,
        convergence,
    })
}

fn eigenstates(profile: &PotentialProfile, count: usize) -> Result<Vec<BoundState>> {
    let grid = profile.grid;
    let h = grid.spacing();
    let h_bohr = h / BOHR_ANGSTROM;
    let kinetic = 1.0 / (h_bohr * h_bohr);

    // Unknowns are the nodes strictly inside the Dirichlet ends (and above
    // any hard wall).
    let first = profile.first_active().max(1);
    let last = grid.points - 1;
    if last <= first {
        return Ok(Vec::new());
    }
    let diagonal: Vec<f64> = profile.samples[first..last]
        .iter()
        .map(|v| kinetic + ev_to_hartree(*v))
        .collect();
    let off = vec![-0.5 * kinetic; diagonal.len() - 1];
    let matrix = SymTridiagonal::new(diagonal, off);

    let ceiling = ev_to_hartree(profile.asymptote);
    let energies = matrix.lowest_eigenvalues_below(count, ceiling);

    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(energies.len());
    for (k, &energy) in energies.iter().enumerate() {
        let v = matrix
            .inverse_iteration(energy, &vectors)
            .ok_or(Error::InverseIteration { state: k + 1 })?;
        vectors.push(v);
    }

    let nodes: Vec<f64> = grid.nodes().collect();
    Ok(energies
        .iter()
        .zip(vectors)
        .enumerate()
        .map(|(k, (&energy, v))| {
            let mut psi = vec![0.0; grid.points];
            psi[first..last].copy_from_slice(&v);
            let norm = (psi.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
            let peak = psi
                .iter()
                .fold(0.0f64, |m, x| if x.abs() > m.abs() { *x } else { m });
            let sign = if peak < 0.0 { -1.0 } else { 1.0 };
            psi.iter_mut().for_each(|x| *x *= sign / norm);
            let mean_z = nodes.iter().zip(&psi).map(|(z, p)| z * p * p).sum::<f64>() * h / 10.0;
            BoundState {
                level: k + 1,
                energy: hartree_to_ev(energy) * 1e3,
                node_count: count_nodes(&psi),
                mean_z,
                wavefunction: psi,
                grid,
            }
        })
        .collect())
}

/// Sign changes of `psi`, ignoring samples below 1e-10 of the peak.
pub fn count_nodes(psi: &[f64]) -> usize {
    let peak = psi.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let floor = 1e-10 * peak;
    let mut last_sign = 0.0;
    let mut nodes = 0;
    for &x in psi {
        if x.abs() <= floor {
            continue;
        }
        let s = x.signum();
        if last_sign != 0.0 && s != last_sign {
            nodes += 1;
        }
        last_sign = s;
    }
    nodes
}

/// Infinite-barrier energies E_n = −Z²/(2n²) Hartree, in meV, n = 1..=n_max.
pub fn hydrogenic_levels(eps_r: f64, n_max: usize) -> Vec<f64> {
    let z = effective_charge(eps_r);
    (1..=n_max)
        .map(|n| -z * z / (2.0 * (n * n) as f64) * crate::units::constants::HARTREE_EV * 1e3)
        .collect()
}

/// ⟨z⟩ of a normalized state, nm.
pub fn mean_z(state: &BoundState) -> f64 {
    state.mean_z
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Transition {
    /// K
    pub de_kelvin: f64,
    /// THz
    pub f_thz: f64,
}

/// Transition between 1-based levels `lower` < `upper` of a solved set.
pub fn transition(states: &[BoundState], lower: usize, upper: usize) -> Result<Transition> {
    if lower == 0 || lower >= upper {
        return Err(Error::invalid(
            "transition levels",
            format!("need 1 <= lower < upper, got {lower} -> {upper}"),
        ));
    }
    let find = |level: usize| {
        states
            .iter()
            .find(|s| s.level == level)
            .ok_or(Error::MissingState {
                level,
                available: states.len(),
            })
    };
    let gap_ev = (find(upper)?.energy - find(lower)?.energy) * 1e-3;
    Ok(Transition {
        de_kelvin: gap_ev / BOLTZMANN_EV_PER_K,
        f_thz: gap_ev / PLANCK_EV_S * 1e-12,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarkPoint {
    /// V/m
    pub field: f64,
    /// Ground-state energy in meV, `None` when no state lies below the
    /// asymptote for this field.
    pub ground: Option<f64>,
}

/// Ground-state energy for each pressing field on the given grid.
pub fn stark_scan(spec: &PotentialSpec, grid: &GridSpec, fields: &[f64]) -> Result<Vec<StarkPoint>> {
    if let Some(bad) = fields.iter().find(|f| !f.is_finite()) {
        return Err(Error::invalid("field", format!("must be finite, got {bad}")));
    }
    fields
        .par_iter()
        .map(|&field| {
            let profile = build_potential(&spec.with_field(field), grid)?;
            let solution = solve_bound_states_with(
                &profile,
                1,
                SolveOptions {
                    convergence_check: false,
                },
            )?;
            Ok(StarkPoint {
                field,
                ground: solution.states.first().map(|s| s.energy),
            })
        })
        .collect()
}
