use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qls",
    version,
    about = "Surface states, phase diagrams and cQED estimates for electrons on quantum liquids and solids"
)]
pub struct Cli {
    /// Output format. Tables default to csv; single values print plain text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the result to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Substance data file (JSON). Defaults to the bundled data.
    #[arg(long, global = true, env = "QLS_SUBSTANCES")]
    pub substances: Option<PathBuf>,

    /// Progress and diagnostics on standard error (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// de Boer parameter for every species.
    Table1,
    /// Surface-state energies, transition and ⟨z⟩ against stored reference rows.
    Table2(Table2Args),
    /// Bound states of one substance.
    States(StatesArgs),
    /// Melting densities over a temperature grid plus the critical point.
    PhaseDiagram(PhaseDiagramArgs),
    /// Phase label for one density and temperature.
    Classify(ClassifyArgs),
    /// Circuit-QED estimators.
    #[command(subcommand)]
    Couple(CoupleCommand),
}

#[derive(Debug, Args)]
pub struct Table2Args {
    /// Restrict to these substances (repeatable). Default: all.
    #[arg(long = "substance", value_name = "NAME")]
    pub names: Vec<String>,
    /// Potential cutoff b in Å for every substance (default: scattering length).
    #[arg(long)]
    pub b: Option<f64>,
    /// Barrier height V0 in eV for every substance (default: stored value).
    #[arg(long)]
    pub v0: Option<f64>,
    /// Add relative residual columns (computed − reference) / |reference|.
    #[arg(long)]
    pub residuals: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Regularized,
    InfiniteBarrier,
}

#[derive(Debug, Args)]
pub struct StatesArgs {
    #[arg(long)]
    pub substance: String,
    /// Number of lowest states.
    #[arg(long, default_value_t = 2)]
    pub levels: usize,
    /// Pressing field, V/m.
    #[arg(long, default_value_t = 0.0)]
    pub field: f64,
    #[arg(long, value_enum, default_value_t = Variant::Regularized)]
    pub variant: Variant,
    /// Cutoff b in Å (default: scattering length).
    #[arg(long)]
    pub b: Option<f64>,
    /// Barrier V0 in eV (default: stored value).
    #[arg(long)]
    pub v0: Option<f64>,
    /// Override the grid: z_min, z_max (Å) and number of points.
    #[arg(long, num_args = 3, value_names = ["Z_MIN", "Z_MAX", "POINTS"])]
    pub grid: Option<Vec<f64>>,
    /// Write one wavefunction file per state into this directory.
    #[arg(long)]
    pub dump_psi: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PhaseDiagramArgs {
    #[arg(long, default_value_t = 127.0)]
    pub gamma0: f64,
    /// Lowest temperature, K.
    #[arg(long, default_value_t = 0.01)]
    pub t_min: f64,
    /// Highest temperature, K.
    #[arg(long, default_value_t = 20.0)]
    pub t_max: f64,
    /// Number of log-spaced temperatures.
    #[arg(long, default_value_t = 40)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Areal density, cm⁻².
    #[arg(long)]
    pub density: f64,
    /// Temperature, K.
    #[arg(long)]
    pub temperature: f64,
    #[arg(long, default_value_t = 127.0)]
    pub gamma0: f64,
}

#[derive(Debug, Subcommand)]
pub enum CoupleCommand {
    /// Effective spin-photon coupling g_s, MHz.
    Gs {
        /// Charge-photon coupling, MHz.
        #[arg(long)]
        g_charge: f64,
        /// Trap frequency ω_x/2π, GHz.
        #[arg(long)]
        omega_x: f64,
        /// Larmor frequency ω_L/2π, GHz.
        #[arg(long)]
        omega_l: f64,
        /// Field gradient ∂B_z/∂x, T/m.
        #[arg(long)]
        grad_bz: f64,
        /// Effective mass in units of m_e.
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
    },
    /// Induced charge fraction Δz/D.
    Imagecharge {
        /// Height change, nm.
        #[arg(long)]
        dz: f64,
        /// Electrode distance, nm.
        #[arg(long)]
        d: f64,
    },
    /// Larmor frequency, GHz.
    Larmor {
        /// Magnetic field, T.
        #[arg(long)]
        b: f64,
    },
    /// Strong-coupling check g > κ, γ (all MHz).
    Strong {
        #[arg(long)]
        g: f64,
        #[arg(long, default_value_t = 0.0)]
        kappa: f64,
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
    },
}
