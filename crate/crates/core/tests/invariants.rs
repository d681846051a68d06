use proptest::prelude::*;
use qls_core::units::constants::BOLTZMANN_EV_PER_K;
use qls_core::*;

fn solve_two(spec: &PotentialSpec) -> Solution {
    let grid = spec.default_grid().unwrap();
    let profile = build_potential(spec, &grid).unwrap();
    solve_bound_states_with(
        &profile,
        2,
        SolveOptions {
            convergence_check: false,
        },
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kinetic_energy_bounds(log_n in 6.0f64..14.0, log_t in -2.0f64..2.0) {
        let n = 10f64.powf(log_n);
        let t = 10f64.powf(log_t);
        let k = kinetic_energy(n, t).unwrap();
        let kt = t * BOLTZMANN_EV_PER_K;
        prop_assert!(k >= kt * (1.0 - 1e-12));
        prop_assert!(k >= 0.5 * fermi_energy(n) * (1.0 - 1e-12));
        prop_assert!(k <= (kt + 0.5 * fermi_energy(n)) * (1.0 + 1e-3));
    }

    #[test]
    fn kinetic_energy_increases(log_n in 6.0f64..14.0, log_t in -2.0f64..2.0, step in 1.001f64..3.0) {
        let n = 10f64.powf(log_n);
        let t = 10f64.powf(log_t);
        let k = kinetic_energy(n, t).unwrap();
        prop_assert!(kinetic_energy(n * step, t).unwrap() > k);
        prop_assert!(kinetic_energy(n, t * step).unwrap() > k);
    }

    #[test]
    fn chemical_potential_increases_with_density(log_n in 6.0f64..14.0, log_t in -2.0f64..2.0) {
        let n = 10f64.powf(log_n);
        let t = 10f64.powf(log_t);
        prop_assert!(chemical_potential(1.01 * n, t).unwrap() > chemical_potential(n, t).unwrap());
        prop_assert!(chemical_potential(n, t).unwrap() <= fermi_energy(n) * (1.0 + 1e-12));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn eigenstates_are_normalized_and_ordered(eps in 1.03f64..1.4, v0 in 0.5f64..3.0, b in 0.3f64..1.0) {
        let sol = solve_two(&PotentialSpec::regularized(v0, eps, b));
        prop_assert_eq!(sol.states.len(), 2);
        for (k, s) in sol.states.iter().enumerate() {
            prop_assert_eq!(s.node_count, k);
            prop_assert!((s.norm() - 1.0).abs() <= 1e-8);
            prop_assert!(s.energy < 0.0);
        }
        prop_assert!(sol.states[0].energy < sol.states[1].energy);
        prop_assert!(sol.states[0].mean_z < sol.states[1].mean_z);
    }

    #[test]
    fn deeper_image_lowers_ground_state(eps in 1.03f64..1.35, bump in 0.005f64..0.1) {
        let shallow = solve_two(&PotentialSpec::regularized(1.0, eps, 0.6));
        let deep = solve_two(&PotentialSpec::regularized(1.0, eps + bump, 0.6));
        prop_assert!(deep.states[0].energy < shallow.states[0].energy);
    }
}

#[test]
fn classification_agrees_with_melting_roots() {
    let gamma0 = 127.0;
    let apex = critical_point(gamma0).unwrap();
    let temps = log_temperature_grid(0.05, 0.95 * apex.t_c, 20).unwrap();
    let densities: Vec<f64> = (0..20).map(|i| 10f64.powf(8.0 + 5.0 * i as f64 / 19.0)).collect();
    for &t in &temps {
        let (n_c1, n_c2) = match melting_densities(gamma0, t).unwrap() {
            MeltingRoots::Pair { n_c1, n_c2 } => (n_c1, n_c2),
            other => panic!("T={t}: {other:?}"),
        };
        for &n in &densities {
            let solid = classify(n, t, gamma0).unwrap().is_solid();
            assert_eq!(
                solid,
                n >= n_c1 && n <= n_c2,
                "T={t} n={n} roots=({n_c1}, {n_c2})"
            );
        }
    }
}

#[test]
fn quantum_label_follows_degeneracy() {
    for &(n, t) in &[(1e8, 0.01), (1e10, 1.0), (1e12, 5.0), (1e13, 50.0), (1e9, 10.0)] {
        let label = classify(n, t, 127.0).unwrap();
        let quantum = fermi_energy(n) >= t * BOLTZMANN_EV_PER_K;
        assert_eq!(label.is_quantum(), quantum, "{n} {t}");
    }
}

#[test]
fn melting_curve_output_order_is_input_order() {
    let temps = log_temperature_grid(0.1, 30.0, 16).unwrap();
    let curve = melting_curve(127.0, &temps).unwrap();
    let got: Vec<f64> = curve.points.iter().map(|p| p.temperature).collect();
    assert_eq!(got, temps);
    assert_eq!(curve.flagged().count(), 0);
}
