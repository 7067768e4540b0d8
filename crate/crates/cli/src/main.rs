mod args;
mod commands;
mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use error::{CliError, CliResult};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    if let Some(n) = cli.common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Invalid(format!("cannot configure {n} threads: {e}")))?;
    }
    let default_format = match cli.command {
        Command::Compute { .. } => Format::Json,
        _ => Format::Csv,
    };
    let format = cli.common.format.unwrap_or(default_format);

    let mut failures = 0;
    let text = match cli.command {
        Command::Compute {
            scheme,
            wc,
            wh,
            bc,
            bh,
        } => commands::compute(scheme, wc, wh, bc, bh, format)?,
        Command::Sweep {
            tau,
            z_min,
            z_max,
            res,
        } => commands::sweep(tau, z_min, z_max, res, format)?,
        Command::Bounds {
            eta_min,
            eta_max,
            res,
        } => commands::bounds(eta_min, eta_max, res, format)?,
        Command::Phase { scheme, res } => commands::phase(scheme, res, format)?,
        Command::Histogram {
            scheme,
            bc,
            bh,
            n,
            seed,
            omega_max,
            bin_width,
        } => commands::histogram(scheme, bc, bh, n, seed, omega_max, bin_width, format)?,
        Command::Lambda {
            ramp,
            wi,
            wf,
            duration,
            steps,
        } => commands::lambda(ramp, wi, wf, duration, steps, format)?,
        Command::Verify { criterion } => {
            let (text, failed) = commands::verify(criterion, format)?;
            failures = failed;
            text
        }
    };

    match &cli.common.output {
        Some(path) => std::fs::write(path, text)?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            // a closed pipe (e.g. `| head`) is not an error for a filter-style tool
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            other => other?,
        },
    }
    if failures > 0 {
        return Err(CliError::AcceptanceFailed(failures));
    }
    Ok(())
}
