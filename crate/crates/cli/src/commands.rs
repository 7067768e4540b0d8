//! One function per subcommand; each returns the fully rendered output.

use otto_core::acceptance::{self, CriterionReport};
use otto_core::adiabaticity::lambda_sudden_between;
use otto_core::phase::FLUX_ZERO_TOL;
use otto_core::{
    heats_and_work, ht_quantities, lambda_numeric, phase_grid, sample_efficiencies, BathPair,
    BoundCurve, DrivingScheme, FrequencyPair, FrequencyProtocol, IntegratorConfig, OperationalMode,
    ReducedParams, SamplingPlan,
};
use serde_json::{json, Value};

use crate::args::{Format, RampArg, SchemeArg};
use crate::error::{CliError, CliResult};
use crate::output::{json_g12, Cell, Table};

fn render(table: &Table, format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Csv => table.to_csv(),
        Format::Json => to_json_line(&table.to_json())?,
    })
}

fn to_json_line(v: &Value) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// `n` evenly spaced points from `lo` to `hi`, both included.
fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 {
        (hi - lo) / (n - 1) as f64
    } else {
        0.0
    };
    (0..n).map(move |i| {
        if i + 1 == n && n > 1 {
            hi
        } else {
            lo + step * i as f64
        }
    })
}

fn check_res(res: usize) -> CliResult<()> {
    if res == 0 {
        return Err(CliError::Invalid("--res must be at least 1".into()));
    }
    Ok(())
}

pub fn compute(
    scheme: SchemeArg,
    wc: f64,
    wh: f64,
    bc: f64,
    bh: f64,
    format: Format,
) -> CliResult<String> {
    let scheme = DrivingScheme::from(scheme);
    let freq = FrequencyPair::new(wc, wh)?;
    let bath = BathPair::new(bc, bh)?;
    let outcome = heats_and_work(&freq, &bath, &scheme.adiabaticity(&freq));
    let scale = outcome
        .q_h
        .abs()
        .max(outcome.q_c.abs())
        .max(f64::MIN_POSITIVE);
    let mode = OperationalMode::from_signs(
        outcome.w_ext,
        outcome.q_h,
        outcome.q_c,
        FLUX_ZERO_TOL * scale,
    )
    .map_or("unclassified", OperationalMode::as_str);

    let mut table = Table::new(vec!["scheme", "qh", "qc", "w", "eta", "mode"]);
    table.push(vec![
        Cell::Text(scheme.label().into()),
        Cell::Num(outcome.q_h),
        Cell::Num(outcome.q_c),
        Cell::Num(outcome.w_ext),
        Cell::opt(outcome.eta),
        Cell::Text(mode.into()),
    ]);
    match format {
        Format::Csv => Ok(table.to_csv()),
        Format::Json => to_json_line(&table.record(&table.rows[0])),
    }
}

pub fn sweep(tau: f64, z_min: f64, z_max: f64, res: usize, format: Format) -> CliResult<String> {
    use DrivingScheme::*;
    check_res(res)?;
    if !(z_min > 0.0 && z_min <= z_max && z_max <= 1.0) {
        return Err(CliError::Invalid(format!(
            "z range must satisfy 0 < z-min <= z-max <= 1, got [{z_min}, {z_max}]"
        )));
    }
    let mut table = Table::new(vec![
        "z", "w_ad", "w_se", "w_sc", "w_ss", "eta_se", "eta_sc", "eta_ss",
    ]);
    for z in linspace(z_min, z_max, res) {
        let p = ReducedParams::new(z, tau)?;
        let q = |s| ht_quantities(&p, s);
        let mut row = vec![Cell::Num(z)];
        row.extend([Ad, Se, Sc, Ss].map(|s| Cell::Num(q(s).w)));
        row.extend([Se, Sc, Ss].map(|s| Cell::opt(q(s).eta)));
        table.push(row);
    }
    render(&table, format)
}

pub fn bounds(eta_min: f64, eta_max: f64, res: usize, format: Format) -> CliResult<String> {
    check_res(res)?;
    if !(eta_min >= 0.0 && eta_min <= eta_max && eta_max < 1.0) {
        return Err(CliError::Invalid(format!(
            "Carnot range must satisfy 0 <= eta-min <= eta-max < 1, got [{eta_min}, {eta_max}]"
        )));
    }
    let mut table = Table::new(vec![
        "eta_c",
        "eta_up_se",
        "eta_mw_se",
        "eta_up_sc",
        "eta_mw_sc",
        "delta",
        "delta_prime",
    ]);
    for eta_c in linspace(eta_min, eta_max, res) {
        let [up_se, mw_se, up_sc, mw_sc] = [
            BoundCurve::UpSe,
            BoundCurve::MwSe,
            BoundCurve::UpSc,
            BoundCurve::MwSc,
        ]
        .map(|c| c.eval(eta_c));
        let (up_se, mw_se, up_sc, mw_sc) = (up_se?, mw_se?, up_sc?, mw_sc?);
        table.push(
            [
                eta_c,
                up_se,
                mw_se,
                up_sc,
                mw_sc,
                up_se - mw_se,
                up_sc - mw_sc,
            ]
            .map(Cell::Num)
            .to_vec(),
        );
    }
    render(&table, format)
}

pub fn phase(scheme: SchemeArg, res: usize, format: Format) -> CliResult<String> {
    let grid = phase_grid(scheme.into(), (0.0, 1.0), (0.0, 1.0), (res, res))?;
    let mut table = Table::new(vec!["tau", "z", "mode"]);
    for (tau, z, mode) in grid.iter() {
        table.push(vec![
            Cell::Num(tau),
            Cell::Num(z),
            Cell::Text(mode.as_str().into()),
        ]);
    }
    render(&table, format)
}

#[allow(clippy::too_many_arguments)]
pub fn histogram(
    scheme: SchemeArg,
    bc: f64,
    bh: f64,
    n: usize,
    seed: u64,
    omega_max: f64,
    bin_width: f64,
    format: Format,
) -> CliResult<String> {
    let plan = SamplingPlan {
        scheme: scheme.into(),
        beta_c: bc,
        beta_h: bh,
        omega_max,
        n_samples: n,
        seed,
        bin_width,
    };
    let hist = sample_efficiencies(&plan)?;
    let mut table = Table::new(vec!["bin_lo", "bin_hi", "count"]);
    for bin in &hist.bins {
        table.push(vec![
            Cell::Num(bin.lo),
            Cell::Num(bin.hi),
            Cell::Int(bin.count),
        ]);
    }
    let opt = |x: Option<f64>| x.map_or(Value::Null, json_g12);
    let summary = json!({
        "max_eta": opt(hist.max_eta),
        "accepted": hist.accepted,
        "rejected": hist.rejected,
        "bound": json_g12(hist.bound),
        "margin": opt(hist.margin()),
    });
    match format {
        Format::Csv => {
            let fmt = |x: Option<f64>| x.map_or(String::new(), crate::output::fmt_g12);
            Ok(format!(
                "{}# max_eta={},accepted={},rejected={},bound={},margin={}\n",
                table.to_csv(),
                fmt(hist.max_eta),
                hist.accepted,
                hist.rejected,
                crate::output::fmt_g12(hist.bound),
                fmt(hist.margin()),
            ))
        }
        Format::Json => to_json_line(&json!({ "summary": summary, "bins": table.to_json() })),
    }
}

pub fn lambda(
    ramp: RampArg,
    wi: f64,
    wf: f64,
    duration: f64,
    steps: usize,
    format: Format,
) -> CliResult<String> {
    let protocol = match ramp {
        RampArg::Linear => FrequencyProtocol::linear(wi, wf, duration),
        RampArg::Exponential => FrequencyProtocol::exponential(wi, wf, duration),
        RampArg::Sudden => FrequencyProtocol::sudden_step(wi, wf, duration),
        RampArg::Constant => {
            if wi != wf {
                return Err(CliError::Invalid(format!(
                    "constant ramp needs --wi == --wf, got {wi} and {wf}"
                )));
            }
            FrequencyProtocol::constant(wi, duration)
        }
    }?;
    let value = lambda_numeric(&protocol, IntegratorConfig::new(steps)?)?;
    let ramp_name = match ramp {
        RampArg::Linear => "linear",
        RampArg::Exponential => "exponential",
        RampArg::Sudden => "sudden",
        RampArg::Constant => "constant",
    };
    let mut table = Table::new(vec![
        "ramp",
        "wi",
        "wf",
        "duration",
        "steps",
        "lambda",
        "lambda_sudden",
    ]);
    table.push(vec![
        Cell::Text(ramp_name.into()),
        Cell::Num(wi),
        Cell::Num(wf),
        Cell::Num(duration),
        Cell::Int(steps as u64),
        Cell::Num(value),
        Cell::Num(lambda_sudden_between(wi, wf)),
    ]);
    match format {
        Format::Csv => Ok(table.to_csv()),
        Format::Json => to_json_line(&table.record(&table.rows[0])),
    }
}

/// Runs the acceptance checks; the rendered report is returned alongside the
/// number of failures so it is written out even when something is red.
pub fn verify(criterion: Option<u8>, format: Format) -> CliResult<(String, usize)> {
    let reports: Vec<CriterionReport> = match criterion {
        Some(id) => vec![acceptance::run(id)
            .ok_or_else(|| CliError::Invalid(format!("unknown criterion {id}, expected 1-9")))?],
        None => acceptance::run_all(),
    };
    let failed = reports.iter().filter(|r| !r.passed).count();
    let text = match format {
        Format::Csv => {
            let mut table = Table::new(vec!["id", "passed", "title", "detail"]);
            for r in &reports {
                table.push(vec![
                    Cell::Int(r.id.into()),
                    Cell::Text(r.passed.to_string()),
                    Cell::Text(r.title.into()),
                    Cell::Text(r.detail.clone()),
                ]);
            }
            table.to_csv()
        }
        Format::Json => to_json_line(&serde_json::to_value(&reports)?)?,
    };
    Ok((text, failed))
}
