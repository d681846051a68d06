//! Two-dimensional electron liquid/solid phases from the plasma parameter
//! Γ = U_e / K_e, with the kinetic energy taken from the full Fermi–Dirac
//! integral so that the classical (K_e ≈ k_BT) and degenerate
//! (K_e ≈ E_F/2) regimes join smoothly.
//!
//! Densities cross the API in cm⁻², temperatures in K and energies in eV.
//! Internally everything is in Hartree atomic units, where
//! E_F = πn, U_e = √(πn) and the classical/quantum melting densities are
//! (Γ₀ k_BT)²/π and 4/(πΓ₀²).

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad;
use crate::units::{atomic_to_per_cm2, hartree_to_ev, kelvin_to_hartree, per_cm2_to_atomic};

/// Requested relative accuracy of the kinetic-energy quadrature.
pub const KINETIC_REL_TOL: f64 = 1e-12;
/// Relative accuracy of the melting densities.
pub const ROOT_REL_TOL: f64 = 1e-12;
/// Relative accuracy of the critical temperature.
pub const CRITICAL_T_REL_TOL: f64 = 1e-7;

/// Classical-limit melting parameter from classical Monte Carlo.
pub const GAMMA0_CLASSICAL: f64 = 127.0;
/// Quantum-melting parameter from quantum Monte Carlo.
pub const GAMMA0_QUANTUM: f64 = 72.0;

fn check_density(n: f64) -> Result<()> {
    if n > 0.0 && n.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("density", format!("must be > 0 cm⁻², got {n}")))
    }
}

fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("temperature", format!("must be > 0 K, got {t}")))
    }
}

fn check_gamma0(g: f64) -> Result<()> {
    if g > 0.0 && g.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid("gamma0", format!("must be > 0, got {g}")))
    }
}

// --- atomic-unit kernels -------------------------------------------------

/// μ / k_BT as a function of x = E_F / k_BT: ln(eˣ − 1).
fn reduced_chemical_potential(x: f64) -> f64 {
    if x > 1.0 {
        x + (-(-x).exp()).ln_1p()
    } else {
        x.exp_m1().ln()
    }
}

/// ∫₀^∞ u / (e^(u−m) + 1) du, i.e. −Li₂(−eᵐ).
fn fermi_first_moment(m: f64) -> Result<f64> {
    let occupied = move |u: f64| {
        let y = u - m;
        if y > 0.0 {
            let e = (-y).exp();
            u * e / (1.0 + e)
        } else {
            u / (1.0 + y.exp())
        }
    };
    const WIDTH: f64 = 40.0;
    let edge = m.max(0.0);
    let mut breaks = vec![0.0];
    if edge > WIDTH {
        breaks.push(edge - WIDTH);
    }
    if edge > 0.0 {
        breaks.push(edge);
    }
    breaks.push(edge + WIDTH);
    let body = quad::integrate(occupied, &breaks, KINETIC_REL_TOL)?;
    // Beyond edge + WIDTH the occupation is e^(m−u) to within e^-40.
    let a = edge + WIDTH;
    let tail = (m - a).exp() * (a + 1.0);
    Ok(body.value + tail)
}

/// K_e / k_BT for x = E_F / k_BT.
fn reduced_kinetic_energy(x: f64) -> Result<f64> {
    let m = reduced_chemical_potential(x);
    Ok(fermi_first_moment(m)? / x)
}

/// Γ for density `n` (a_B⁻²) and temperature `t` (Hartree).
fn gamma_atomic(n: f64, t: f64) -> Result<f64> {
    let x = std::f64::consts::PI * n / t;
    let kinetic = t * reduced_kinetic_energy(x)?;
    Ok((std::f64::consts::PI * n).sqrt() / kinetic)
}

// --- public API ------------------------------------------------------------

/// E_F = πħ²n/m_e for areal density `n` in cm⁻², in eV.
pub fn fermi_energy(n: f64) -> f64 {
    hartree_to_ev(std::f64::consts::PI * per_cm2_to_atomic(n))
}

/// μ = k_BT ln(exp(E_F/k_BT) − 1), eV.
pub fn chemical_potential(n: f64, temperature: f64) -> Result<f64> {
    check_density(n)?;
    check_temperature(temperature)?;
    let t = kelvin_to_hartree(temperature);
    let x = std::f64::consts::PI * per_cm2_to_atomic(n) / t;
    Ok(hartree_to_ev(t * reduced_chemical_potential(x)))
}

/// Mean kinetic energy per electron of the ideal 2D Fermi gas, eV.
pub fn kinetic_energy(n: f64, temperature: f64) -> Result<f64> {
    check_density(n)?;
    check_temperature(temperature)?;
    let t = kelvin_to_hartree(temperature);
    let x = std::f64::consts::PI * per_cm2_to_atomic(n) / t;
    Ok(hartree_to_ev(t * reduced_kinetic_energy(x)?))
}

/// U_e = e²√(πn), eV.
pub fn coulomb_energy(n: f64) -> f64 {
    hartree_to_ev((std::f64::consts::PI * per_cm2_to_atomic(n)).sqrt())
}

/// Γ = U_e / K_e.
pub fn plasma_parameter(n: f64, temperature: f64) -> Result<f64> {
    check_density(n)?;
    check_temperature(temperature)?;
    gamma_atomic(per_cm2_to_atomic(n), kelvin_to_hartree(temperature))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ElectronGasPoint {
    /// cm⁻²
    pub density: f64,
    /// K
    pub temperature: f64,
    /// eV
    pub fermi_energy: f64,
    /// eV
    pub chemical_potential: f64,
    /// eV
    pub kinetic_energy: f64,
    /// eV
    pub coulomb_energy: f64,
    pub gamma: f64,
}

impl ElectronGasPoint {
    pub fn evaluate(n: f64, temperature: f64) -> Result<Self> {
        let kinetic = kinetic_energy(n, temperature)?;
        let coulomb = coulomb_energy(n);
        Ok(Self {
            density: n,
            temperature,
            fermi_energy: fermi_energy(n),
            chemical_potential: chemical_potential(n, temperature)?,
            kinetic_energy: kinetic,
            coulomb_energy: coulomb,
            gamma: coulomb / kinetic,
        })
    }

    pub fn is_quantum(&self) -> bool {
        self.fermi_energy >= self.temperature * crate::units::constants::BOLTZMANN_EV_PER_K
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseLabel {
    ClassicalCoulombGas,
    ClassicalCoulombLiquid,
    ClassicalWignerSolid,
    QuantumFermiGas,
    QuantumFermiLiquid,
    QuantumWignerSolid,
}

impl PhaseLabel {
    pub fn is_solid(self) -> bool {
        matches!(
            self,
            PhaseLabel::ClassicalWignerSolid | PhaseLabel::QuantumWignerSolid
        )
    }

    pub fn is_quantum(self) -> bool {
        matches!(
            self,
            PhaseLabel::QuantumFermiGas | PhaseLabel::QuantumFermiLiquid | PhaseLabel::QuantumWignerSolid
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PhaseLabel::ClassicalCoulombGas => "classical Coulomb gas",
            PhaseLabel::ClassicalCoulombLiquid => "classical Coulomb liquid",
            PhaseLabel::ClassicalWignerSolid => "classical Wigner solid",
            PhaseLabel::QuantumFermiGas => "quantum Fermi gas",
            PhaseLabel::QuantumFermiLiquid => "quantum Fermi liquid",
            PhaseLabel::QuantumWignerSolid => "quantum Wigner solid",
        }
    }
}

impl fmt::Display for PhaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Phase of the 2D electron system at density `n` (cm⁻²) and temperature (K).
/// Quantum when E_F ≥ k_BT; solid when Γ ≥ Γ₀, gas when Γ ≤ 1.
pub fn classify(n: f64, temperature: f64, gamma0: f64) -> Result<PhaseLabel> {
    check_gamma0(gamma0)?;
    let point = ElectronGasPoint::evaluate(n, temperature)?;
    Ok(label_for(point.is_quantum(), point.gamma, gamma0))
}

fn label_for(quantum: bool, gamma: f64, gamma0: f64) -> PhaseLabel {
    use PhaseLabel::*;
    match (quantum, gamma >= gamma0, gamma <= 1.0) {
        (false, true, _) => ClassicalWignerSolid,
        (false, false, true) => ClassicalCoulombGas,
        (false, false, false) => ClassicalCoulombLiquid,
        (true, true, _) => QuantumWignerSolid,
        (true, false, true) => QuantumFermiGas,
        (true, false, false) => QuantumFermiLiquid,
    }
}

/// T = 0 quantum melting density n* = 4e⁴m_e²/(πħ⁴Γ₀²), cm⁻².
pub fn quantum_critical_density(gamma0: f64) -> f64 {
    atomic_to_per_cm2(quantum_critical_atomic(gamma0))
}

fn quantum_critical_atomic(gamma0: f64) -> f64 {
    4.0 / (std::f64::consts::PI * gamma0 * gamma0)
}

fn classical_root_atomic(gamma0: f64, t: f64) -> f64 {
    (gamma0 * t).powi(2) / std::f64::consts::PI
}

/// Maximum of Γ(·, t) over ln n in [lo, hi], by golden-section search.
/// Returns (ln n at the maximum, Γ there).
fn gamma_peak(t: f64, mut lo: f64, mut hi: f64) -> Result<(f64, f64)> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let g = |ln_n: f64| gamma_atomic(ln_n.exp(), t);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut g1 = g(x1)?;
    let mut g2 = g(x2)?;
    while hi - lo > 1e-9 {
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + INV_PHI * (hi - lo);
            g2 = g(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - INV_PHI * (hi - lo);
            g1 = g(x1)?;
        }
    }
    Ok(if g1 > g2 { (x1, g1) } else { (x2, g2) })
}

/// Bisection in ln n for Γ(n, t) = gamma0 between `below` (Γ < Γ₀ side)
/// and `above` (Γ ≥ Γ₀ side).
fn bisect_root(t: f64, gamma0: f64, mut below: f64, mut above: f64) -> Result<f64> {
    let tol = ROOT_REL_TOL;
    while (above - below).abs() > tol {
        let mid = 0.5 * (below + above);
        if gamma_atomic(mid.exp(), t)? >= gamma0 {
            above = mid;
        } else {
            below = mid;
        }
    }
    Ok(0.5 * (below + above))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MeltingRoots {
    /// n_c1 < n_c2, cm⁻².
    Pair { n_c1: f64, n_c2: f64 },
    /// Γ < Γ₀ at every density: above the critical temperature.
    NoSolid,
    /// The root search could not bracket a sign change.
    Flagged { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeltingPoint {
    /// K
    pub temperature: f64,
    pub roots: MeltingRoots,
}

/// Both melting densities at one temperature.
pub fn melting_densities(gamma0: f64, temperature: f64) -> Result<MeltingRoots> {
    check_gamma0(gamma0)?;
    check_temperature(temperature)?;
    let t = kelvin_to_hartree(temperature);
    let n_classical = classical_root_atomic(gamma0, t);
    let n_star = quantum_critical_atomic(gamma0);
    // Γ ≤ √(πn)/k_BT and Γ ≤ 2/√(πn), so no solid exists unless n_cl < n*.
    if n_classical >= n_star {
        return Ok(MeltingRoots::NoSolid);
    }
    let (ln_lo, ln_hi) = (n_classical.ln(), n_star.ln());
    let (ln_peak, peak) = gamma_peak(t, ln_lo, ln_hi)?;
    if peak < gamma0 {
        return Ok(MeltingRoots::NoSolid);
    }
    let low_side = (n_classical / 10.0).ln();
    let high_side = (n_star * 10.0).ln();
    let g_low = gamma_atomic(low_side.exp(), t)?;
    let g_high = gamma_atomic(high_side.exp(), t)?;
    if !(g_low < gamma0 && g_high < gamma0) {
        return Ok(MeltingRoots::Flagged {
            reason: format!(
                "no sign change at T = {temperature} K: Γ = {g_low:.6e} / {peak:.6e} / {g_high:.6e}"
            ),
        });
    }
    let n_c1 = bisect_root(t, gamma0, low_side, ln_peak)?.exp();
    let n_c2 = bisect_root(t, gamma0, high_side, ln_peak)?.exp();
    Ok(MeltingRoots::Pair {
        n_c1: atomic_to_per_cm2(n_c1),
        n_c2: atomic_to_per_cm2(n_c2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalPoint {
    /// K
    pub t_c: f64,
    /// cm⁻²
    pub n_c: f64,
}

/// Apex of the solid dome: the highest temperature at which Γ reaches Γ₀.
pub fn critical_point(gamma0: f64) -> Result<CriticalPoint> {
    check_gamma0(gamma0)?;
    let n_star = quantum_critical_atomic(gamma0);
    // Above t_hi the classical bound already exceeds n*.
    let t_hi = 2.0 / (gamma0 * gamma0);
    let peak_at = |t: f64| -> Result<(f64, f64)> {
        let lo = classical_root_atomic(gamma0, t).ln();
        gamma_peak(t, lo, n_star.ln())
    };
    let mut lo = t_hi * 1e-3;
    let mut hi = t_hi;
    let (mut ln_n_apex, peak) = peak_at(lo)?;
    if peak < gamma0 {
        return Err(Error::invalid(
            "gamma0",
            format!("no solid phase found for Γ₀ = {gamma0}"),
        ));
    }
    while hi - lo > CRITICAL_T_REL_TOL * hi {
        let mid = 0.5 * (lo + hi);
        let (ln_n, g) = peak_at(mid)?;
        if g >= gamma0 {
            lo = mid;
            ln_n_apex = ln_n;
        } else {
            hi = mid;
        }
    }
    Ok(CriticalPoint {
        t_c: crate::units::hartree_to_kelvin(0.5 * (lo + hi)),
        n_c: atomic_to_per_cm2(ln_n_apex.exp()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalSummary {
    /// K
    pub t_c: f64,
    /// cm⁻²
    pub n_c: f64,
    /// cm⁻²
    pub n_star: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeltingCurve {
    pub gamma0: f64,
    pub points: Vec<MeltingPoint>,
    pub critical: CriticalSummary,
}

impl MeltingCurve {
    /// (T, n_c1, n_c2) for every temperature that has a solid phase.
    pub fn pairs(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        self.points.iter().filter_map(|p| match p.roots {
            MeltingRoots::Pair { n_c1, n_c2 } => Some((p.temperature, n_c1, n_c2)),
            _ => None,
        })
    }

    pub fn flagged(&self) -> impl Iterator<Item = &MeltingPoint> + '_ {
        self.points
            .iter()
            .filter(|p| matches!(p.roots, MeltingRoots::Flagged { .. }))
    }
}

/// Melting densities on a temperature grid plus the dome's critical summary.
pub fn melting_curve(gamma0: f64, temperatures: &[f64]) -> Result<MeltingCurve> {
    check_gamma0(gamma0)?;
    if let Some(w) = temperatures
        .windows(2)
        .find(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
    {
        return Err(Error::invalid(
            "temperature grid",
            format!("must be strictly ascending, found {} then {}", w[0], w[1]),
        ));
    }
    temperatures.iter().try_for_each(|t| check_temperature(*t))?;
    let points = temperatures
        .par_iter()
        .map(|&temperature| {
            let roots = match melting_densities(gamma0, temperature) {
                Ok(r) => r,
                Err(e) if e.is_numerical() => MeltingRoots::Flagged {
                    reason: e.to_string(),
                },
                Err(e) => return Err(e),
            };
            Ok(MeltingPoint { temperature, roots })
        })
        .collect::<Result<Vec<_>>>()?;
    let apex = critical_point(gamma0)?;
    Ok(MeltingCurve {
        gamma0,
        points,
        critical: CriticalSummary {
            t_c: apex.t_c,
            n_c: apex.n_c,
            n_star: quantum_critical_density(gamma0),
        },
    })
}

/// `points` temperatures spaced logarithmically on [t_min, t_max], K.
pub fn log_temperature_grid(t_min: f64, t_max: f64, points: usize) -> Result<Vec<f64>> {
    check_temperature(t_min)?;
    check_temperature(t_max)?;
    if points == 0 || (points > 1 && t_max <= t_min) {
        return Err(Error::invalid(
            "temperature grid",
            format!("need t_min < t_max and points >= 1, got [{t_min}, {t_max}] x {points}"),
        ));
    }
    if points == 1 {
        return Ok(vec![t_min]);
    }
    let (a, b) = (t_min.ln(), t_max.ln());
    Ok((0..points)
        .map(|i| {
            if i == 0 {
                t_min
            } else if i + 1 == points {
                t_max
            } else {
                (a + (b - a) * i as f64 / (points - 1) as f64).exp()
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::constants::BOLTZMANN_EV_PER_K;
    use approx::assert_relative_eq;

    /// Density (cm⁻²) at which E_F / k_BT equals `ratio`.
    fn density_for_ratio(ratio: f64, temperature: f64) -> f64 {
        ratio * temperature * BOLTZMANN_EV_PER_K / fermi_energy(1.0)
    }

    #[test]
    fn fermi_energy_values() {
        assert_eq!(fermi_energy(0.0), 0.0);
        assert_relative_eq!(fermi_energy(2e10), 2.0 * fermi_energy(1e10), max_relative = 1e-14);
        let ef = fermi_energy(2.8e12);
        assert_relative_eq!(ef, 6.70e-3, max_relative = 2e-3);
        assert_relative_eq!(ef / BOLTZMANN_EV_PER_K, 77.8, max_relative = 2e-3);
    }

    #[test]
    fn coulomb_energy_values() {
        assert_eq!(coulomb_energy(0.0), 0.0);
        assert_relative_eq!(
            coulomb_energy(4e9),
            2.0 * coulomb_energy(1e9),
            max_relative = 1e-14
        );
        assert_relative_eq!(coulomb_energy(1e9) * 1e3, 8.07, max_relative = 1e-3);
    }

    #[test]
    fn chemical_potential_limits() {
        let t = 2.0;
        let kt = t * BOLTZMANN_EV_PER_K;
        let n = density_for_ratio(1e3, t);
        assert_relative_eq!(
            chemical_potential(n, t).unwrap(),
            fermi_energy(n),
            max_relative = 1e-6
        );
        let n = density_for_ratio(1.0, t);
        let expected = kt * (std::f64::consts::E - 1.0).ln();
        assert_relative_eq!(chemical_potential(n, t).unwrap(), expected, max_relative = 1e-10);
        assert_relative_eq!(expected / kt, 0.5413, max_relative = 1e-4);
        let n = density_for_ratio(1e-6, t);
        let mu = chemical_potential(n, t).unwrap();
        assert!(mu < 0.0);
        assert_relative_eq!(mu, kt * (1e-6f64).ln(), max_relative = 1e-5);
        // far degenerate: no overflow
        let n = density_for_ratio(1e6, t);
        assert!(chemical_potential(n, t).unwrap().is_finite());
    }

    #[test]
    fn kinetic_energy_limits() {
        let t = 1.0;
        let kt = t * BOLTZMANN_EV_PER_K;
        let n = density_for_ratio(1e-3, t);
        assert!((kinetic_energy(n, t).unwrap() / kt - 1.0).abs() < 1e-3);
        let n = density_for_ratio(1e3, t);
        assert!((kinetic_energy(n, t).unwrap() / (0.5 * fermi_energy(n)) - 1.0).abs() < 1e-3);
        let n = density_for_ratio(1e6, t);
        assert!((kinetic_energy(n, t).unwrap() / (0.5 * fermi_energy(n)) - 1.0).abs() < 1e-5);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(kinetic_energy(0.0, 1.0).is_err());
        assert!(kinetic_energy(1e9, 0.0).is_err());
        assert!(chemical_potential(-1.0, 1.0).is_err());
        assert!(classify(1e9, 1.0, 0.0).is_err());
        assert!(melting_curve(127.0, &[2.0, 1.0]).is_err());
    }

    #[test]
    fn plasma_parameter_examples() {
        // classical: E_F/k_BT = 1e-3
        let t = 1.0;
        let n = density_for_ratio(1e-3, t);
        let classical = coulomb_energy(n) / (t * BOLTZMANN_EV_PER_K);
        assert!((plasma_parameter(n, t).unwrap() / classical - 1.0).abs() < 2e-3);
        // degenerate: Γ → 2 r_s with r_s = 1/√(πn a_B²)
        let n = density_for_ratio(1e3, t);
        let rs = 1.0 / (std::f64::consts::PI * per_cm2_to_atomic(n)).sqrt();
        assert!((plasma_parameter(n, t).unwrap() / (2.0 * rs) - 1.0).abs() < 2e-3);
        let g = plasma_parameter(1e9, 1.0).unwrap();
        assert!((g - 94.0).abs() < 2.0, "{g}");
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(1e9, 1.0, 127.0).unwrap(),
            PhaseLabel::ClassicalCoulombLiquid
        );
        assert_eq!(
            classify(1e8, 0.1, 127.0).unwrap(),
            PhaseLabel::ClassicalWignerSolid
        );
        assert_eq!(
            classify(1e3, 10.0, 127.0).unwrap(),
            PhaseLabel::ClassicalCoulombGas
        );
        assert_eq!(
            classify(1e14, 1.0, 127.0).unwrap(),
            PhaseLabel::QuantumFermiLiquid
        );
        assert_eq!(
            classify(1e12, 1.0, 127.0).unwrap(),
            PhaseLabel::QuantumWignerSolid
        );
    }

    #[test]
    fn boundary_equality_is_quantum() {
        assert_eq!(label_for(true, 0.5, 127.0), PhaseLabel::QuantumFermiGas);
        assert_eq!(label_for(false, 1.0, 127.0), PhaseLabel::ClassicalCoulombGas);
        assert_eq!(label_for(false, 127.0, 127.0), PhaseLabel::ClassicalWignerSolid);
    }

    #[test]
    fn critical_density_values() {
        assert_relative_eq!(quantum_critical_density(127.0), 2.82e12, max_relative = 2e-3);
        assert_relative_eq!(quantum_critical_density(72.0), 8.77e12, max_relative = 2e-3);
        let c = quantum_critical_density(100.0) * 1e4;
        assert_relative_eq!(
            quantum_critical_density(37.0) * 37.0 * 37.0,
            c,
            max_relative = 1e-12
        );
    }

    #[test]
    fn melting_at_one_kelvin() {
        match melting_densities(127.0, 1.0).unwrap() {
            MeltingRoots::Pair { n_c1, n_c2 } => {
                // seed: classical-limit root (Γ₀ k_BT / e²)² / π
                let t = kelvin_to_hartree(1.0);
                let seed = atomic_to_per_cm2(classical_root_atomic(127.0, t));
                assert!(n_c1 > seed);
                assert_relative_eq!(n_c1, 1.8e9, max_relative = 0.05);
                assert!(n_c2 < quantum_critical_density(127.0));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(melting_densities(127.0, 20.0).unwrap(), MeltingRoots::NoSolid);
    }

    #[test]
    fn upper_root_tends_to_n_star() {
        match melting_densities(127.0, 1e-3).unwrap() {
            MeltingRoots::Pair { n_c2, .. } => {
                assert_relative_eq!(n_c2, quantum_critical_density(127.0), max_relative = 1e-3)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dome_grows_as_gamma0_shrinks() {
        let a = critical_point(127.0).unwrap();
        let b = critical_point(72.0).unwrap();
        assert!(b.t_c > a.t_c);
        assert!(a.n_c > 0.0 && a.n_c < quantum_critical_density(127.0));
    }

    #[test]
    fn log_grid_endpoints() {
        let g = log_temperature_grid(0.01, 20.0, 5).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[0], 0.01);
        assert_eq!(g[4], 20.0);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
        assert!(log_temperature_grid(2.0, 1.0, 3).is_err());
    }
}
