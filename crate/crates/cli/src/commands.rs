use std::fs;
use std::path::Path;

use qls_core::tables::SurfaceStateRow;
use qls_core::*;

use crate::args::{ClassifyArgs, CoupleCommand, PhaseDiagramArgs, StatesArgs, Table2Args, Variant};
use crate::output::{Cell, Table};
use crate::CliError;

/// What a subcommand produced: a table, or a single line of text with a
/// table form for machine formats.
pub enum Report {
    Table(Table),
    Single { text: String, table: Table },
}

fn find_surface<'a>(registry: &'a SubstanceRegistry, name: &str) -> Result<&'a SubstanceSurface> {
    registry
        .find_surface(name)
        .ok_or_else(|| Error::UnknownSubstance {
            name: name.to_owned(),
            available: registry.surfaces().iter().map(|s| s.name.clone()).collect(),
        })
}

pub fn table1(registry: &SubstanceRegistry) -> Report {
    let mut t = Table::new(["name", "mass_amu", "sigma_A", "epsilon_K", "lambda"]);
    for row in de_boer_table(registry.species()) {
        t.push(vec![
            row.name.into(),
            row.mass.into(),
            row.sigma.into(),
            row.epsilon.into(),
            row.lambda.into(),
        ]);
    }
    Report::Table(t)
}

pub fn table2(registry: &SubstanceRegistry, args: &Table2Args, verbose: u8) -> Result<Report> {
    let overrides = SurfaceOverrides {
        cutoff: args.b,
        barrier_v0: args.v0,
    };
    if verbose > 0 {
        eprintln!("solving surface states...");
    }
    let entries = surface_state_table(registry, &args.names, overrides)?;
    let mut columns: Vec<String> = ["name", "b_A", "V0_eV", "eps_r"].map(String::from).to_vec();
    columns.extend(SurfaceStateRow::COLUMNS.iter().map(|c| c.to_string()));
    columns.extend(SurfaceStateRow::COLUMNS.iter().map(|c| format!("ref_{c}")));
    if args.residuals {
        columns.extend(SurfaceStateRow::COLUMNS.iter().map(|c| format!("res_{c}")));
    }
    columns.push("conv_shift_meV".into());
    let mut t = Table::new(columns);
    for e in &entries {
        let mut row: Vec<Cell> = vec![
            e.name.clone().into(),
            e.cutoff.into(),
            e.barrier_v0.into(),
            e.dielectric_constant.into(),
        ];
        row.extend(e.computed.values().map(Cell::Num));
        let reference = e
            .reference
            .map(|r| [r.e_z1_mev, r.e_z2_mev, r.de_kelvin, r.f_thz, r.z1_nm, r.z2_nm]);
        row.extend((0..6).map(|i| Cell::from(reference.map(|r| r[i]))));
        if args.residuals {
            let res = e.residuals();
            row.extend((0..6).map(|i| Cell::from(res.map(|r| r[i]))));
        }
        row.push(e.convergence.as_ref().map(|c| c.max_abs_shift()).into());
        t.push(row);
    }
    Ok(Report::Table(t))
}

pub fn states(registry: &SubstanceRegistry, args: &StatesArgs, verbose: u8) -> Result<Report, CliError> {
    let surface = find_surface(registry, &args.substance)?;
    let base = match args.variant {
        Variant::Regularized => PotentialSpec::regularized(
            args.v0.unwrap_or(surface.barrier_v0),
            surface.dielectric_constant,
            args.b.unwrap_or(surface.scattering_length),
        ),
        Variant::InfiniteBarrier => PotentialSpec::infinite_barrier(surface.dielectric_constant),
    };
    let spec = base.with_field(args.field);
    let grid = match &args.grid {
        Some(g) => {
            let points = g[2];
            if !(points >= 3.0 && points.fract() == 0.0) {
                return Err(Error::InvalidArgument {
                    parameter: "grid",
                    reason: format!("POINTS must be an integer >= 3, got {points}"),
                }
                .into());
            }
            GridSpec::new(g[0], g[1], points as usize)?
        }
        None => spec.default_grid()?,
    };
    let profile = build_potential(&spec, &grid)?;
    for w in &profile.warnings {
        eprintln!("warning: {w}");
    }
    let solution = solve_bound_states(&profile, args.levels)?;
    if solution.shortfall > 0 {
        eprintln!(
            "warning: only {} of {} requested states are bound",
            solution.states.len(),
            solution.requested
        );
    }
    if verbose > 0 {
        eprintln!("grid: {} points, spacing {:.4e} Å", grid.points, grid.spacing());
        if let Some(c) = &solution.convergence {
            eprintln!(
                "halved grid: {} points, max |ΔE| {:.3e} meV",
                c.halved_points,
                c.max_abs_shift()
            );
        }
    }
    if let Some(dir) = &args.dump_psi {
        dump_states(dir, &surface.name, &solution.states)?;
    }
    let mut t = Table::new(["level", "energy_meV", "nodes", "mean_z_nm", "conv_shift_meV"]);
    for (k, s) in solution.states.iter().enumerate() {
        let shift = solution.convergence.as_ref().and_then(|c| c.energy_shift[k]);
        t.push(vec![
            s.level.into(),
            s.energy.into(),
            s.node_count.into(),
            s.mean_z.into(),
            shift.into(),
        ]);
    }
    Ok(Report::Table(t))
}

fn dump_states(dir: &Path, name: &str, states: &[BoundState]) -> Result<(), CliError> {
    let io = |path: &Path| {
        let path = path.display().to_string();
        move |source| CliError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io(dir))?;
    for s in states {
        let path = dir.join(format!("{name}_level{}.dat", s.level));
        let mut buf = Vec::new();
        s.dump(&mut buf).expect("writing to memory");
        fs::write(&path, buf).map_err(io(&path))?;
    }
    Ok(())
}

pub fn phase_diagram(args: &PhaseDiagramArgs, verbose: u8) -> Result<Report> {
    let temps = log_temperature_grid(args.t_min, args.t_max, args.points)?;
    eprintln!(
        "phase-diagram: {} temperatures in [{}, {}] K, gamma0 = {}",
        temps.len(),
        args.t_min,
        args.t_max,
        args.gamma0
    );
    let curve = melting_curve(args.gamma0, &temps)?;
    for p in curve.flagged() {
        if let MeltingRoots::Flagged { reason } = &p.roots {
            eprintln!("warning: T = {} K flagged: {reason}", p.temperature);
        }
    }
    if verbose > 0 {
        eprintln!(
            "critical point: T_c = {:.4} K, n_c = {:.4e} cm^-2",
            curve.critical.t_c, curve.critical.n_c
        );
    }
    let mut t = Table::new(["T_K", "n_c1_cm2", "n_c2_cm2"]);
    for (temp, n1, n2) in curve.pairs() {
        t.push(vec![temp.into(), n1.into(), n2.into()]);
    }
    t.summary = vec![
        ("T_c_K".into(), curve.critical.t_c),
        ("n_c_cm2".into(), curve.critical.n_c),
        ("n_star_cm2".into(), curve.critical.n_star),
    ];
    Ok(Report::Table(t))
}

pub fn classify_point(args: &ClassifyArgs) -> Result<Report> {
    let label = classify(args.density, args.temperature, args.gamma0)?;
    let p = ElectronGasPoint::evaluate(args.density, args.temperature)?;
    let mut t = Table::new([
        "density_cm2",
        "temperature_K",
        "fermi_energy_eV",
        "kinetic_energy_eV",
        "coulomb_energy_eV",
        "gamma",
        "phase",
    ]);
    t.push(vec![
        p.density.into(),
        p.temperature.into(),
        p.fermi_energy.into(),
        p.kinetic_energy.into(),
        p.coulomb_energy.into(),
        p.gamma.into(),
        label.as_str().into(),
    ]);
    Ok(Report::Single {
        text: label.to_string(),
        table: t,
    })
}

fn single(name: &str, unit: &str, value: f64) -> Report {
    let mut t = Table::new([format!("{name}_{unit}")]);
    t.push(vec![value.into()]);
    Report::Single {
        text: format!("{value:.6} {unit}"),
        table: t,
    }
}

pub fn couple(cmd: &CoupleCommand) -> Result<Report> {
    Ok(match *cmd {
        CoupleCommand::Gs {
            g_charge,
            omega_x,
            omega_l,
            grad_bz,
            mass,
        } => {
            let input = SpinCouplingInput {
                g_charge,
                omega_x,
                omega_l,
                grad_bz,
                mass,
            };
            single("g_s", "MHz", spin_coupling(&input)?)
        }
        CoupleCommand::Imagecharge { dz, d } => {
            let v = image_charge_delta(dz, d)?;
            let mut t = Table::new(["delta_q_e"]);
            t.push(vec![v.into()]);
            Report::Single {
                text: format!("{v:.6e} e"),
                table: t,
            }
        }
        CoupleCommand::Larmor { b } => single("f_L", "GHz", larmor(b)?),
        CoupleCommand::Strong { g, kappa, gamma } => {
            let r = strong_coupling(&CouplingBudget { g, kappa, gamma })?;
            let mut t = Table::new(["strong", "margin_MHz"]);
            t.push(vec![r.strong.into(), r.margin.into()]);
            Report::Single {
                text: format!(
                    "{} (margin {:.6} MHz)",
                    if r.strong {
                        "strong coupling"
                    } else {
                        "not strong coupling"
                    },
                    r.margin
                ),
                table: t,
            }
        }
    })
}
