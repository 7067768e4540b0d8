use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use otto_core::DrivingScheme;

#[derive(Debug, Parser)]
#[command(
    name = "otto",
    version,
    about = "Thermodynamics of asymmetrically driven harmonic quantum Otto cycles"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Output format (compute defaults to json, everything else to csv)
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for grids and sampling (0 = one per core)
    #[arg(long, env = "OTTO_THREADS", global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    Ad,
    Se,
    Sc,
    Ss,
}

impl From<SchemeArg> for DrivingScheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::Ad => Self::Ad,
            SchemeArg::Se => Self::Se,
            SchemeArg::Sc => Self::Sc,
            SchemeArg::Ss => Self::Ss,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RampArg {
    Linear,
    Exponential,
    Sudden,
    Constant,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Heats, work, efficiency and mode of one cycle at finite temperature
    Compute {
        #[arg(long, value_enum, default_value = "se")]
        scheme: SchemeArg,
        /// Cold-stroke frequency
        #[arg(long)]
        wc: f64,
        /// Hot-stroke frequency
        #[arg(long)]
        wh: f64,
        /// Inverse temperature of the cold bath
        #[arg(long)]
        bc: f64,
        /// Inverse temperature of the hot bath
        #[arg(long)]
        bh: f64,
    },
    /// High-temperature work and efficiency of all schemes versus z = wc/wh
    Sweep {
        /// Temperature ratio beta_h / beta_c
        #[arg(long, default_value_t = 0.36)]
        tau: f64,
        #[arg(long, default_value_t = 0.01)]
        z_min: f64,
        #[arg(long, default_value_t = 1.0)]
        z_max: f64,
        /// Number of rows, endpoints included
        #[arg(long, default_value_t = 100)]
        res: usize,
    },
    /// Maximum efficiency and efficiency at maximum work versus Carnot efficiency
    Bounds {
        #[arg(long, default_value_t = 0.0)]
        eta_min: f64,
        #[arg(long, default_value_t = 0.99)]
        eta_max: f64,
        /// Number of rows, endpoints included
        #[arg(long, default_value_t = 100)]
        res: usize,
    },
    /// Operational-mode map over the unit (tau, z) square
    Phase {
        #[arg(long, value_enum, default_value = "se")]
        scheme: SchemeArg,
        /// Cells per axis
        #[arg(long, default_value_t = 200)]
        res: usize,
    },
    /// Monte-Carlo efficiency histogram with exact finite-temperature cycles
    Histogram {
        #[arg(long, value_enum, default_value = "se")]
        scheme: SchemeArg,
        #[arg(long, default_value_t = 1.0)]
        bc: f64,
        #[arg(long, default_value_t = 0.1)]
        bh: f64,
        /// Number of frequency pairs drawn
        #[arg(long, default_value_t = 1_000_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100.0)]
        omega_max: f64,
        #[arg(long, default_value_t = 0.01)]
        bin_width: f64,
    },
    /// Adiabaticity parameter of a frequency ramp
    Lambda {
        #[arg(long, value_enum, default_value = "linear")]
        ramp: RampArg,
        /// Initial frequency
        #[arg(long)]
        wi: f64,
        /// Final frequency
        #[arg(long)]
        wf: f64,
        #[arg(long)]
        duration: f64,
        /// Integrator steps (checked against twice as many)
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
    },
    /// Run the acceptance checks
    Verify {
        /// Run only this criterion (1-9)
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
