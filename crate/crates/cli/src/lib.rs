//! Command handlers for the `su11` binary.
//!
//! Exit codes: 0 success, 1 failed verification or invalid domain input,
//! 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use su11_core::gwflow::{gw_flow, verify_gw, FlowConfig};
use su11_core::maps::{adm_spectrum_an, exp_q, fr_map, log_q, sym};
use su11_core::spaces::{rect_of_hyp, ANPoint, HypCoords, QPoint, QStarPoint};
use su11_core::verify::{run_suite, VerificationReport, SUITES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const CSV_HEADER: [&str; 8] = ["x", "y", "z", "gw_x", "gw_y", "gw_z", "lambda", "defect"];

#[derive(Parser, Debug)]
#[command(name = "su11", version, about = "Numerical checks for the Poisson geometry of SU(1,1)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite and print its JSON report
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Base number of sample points (suite default when omitted)
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Tolerance of the suite's primary check; other checks scale with it
        #[arg(long)]
        tol: Option<f64>,
        /// Also write the report to this file
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Apply one map to a point given as three comma-separated numbers
    Map {
        #[arg(long, value_enum)]
        which: MapKind,
        /// sym: x,y,z of an AN element; exp, fr, gw: x,y,z in q*; log: a,b,c in Q
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        point: Vec<f64>,
    },
    /// Admissible spectrum of an AN element
    Spectrum {
        /// z,x,y
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        point: Vec<f64>,
    },
    /// Tabulate the flow on a grid of hyperbolic coordinates at φ = 0
    Flow {
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        lambdas: Vec<f64>,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',', required = true)]
        s: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Sym,
    Exp,
    Log,
    Fr,
    Gw,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify { suite, samples, seed, tol, json } => verify(&suite, samples, seed, tol, json, out, err),
        Command::Map { which, point } => with_triple(&point, err, |p| map(which, p, out)),
        Command::Spectrum { point } => with_triple(&point, err, |p| spectrum(p, out)),
        Command::Flow { lambdas, s, out: path } => flow(&lambdas, &s, &path),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

type CmdResult = Result<i32, String>;

fn with_triple(v: &[f64], err: &mut dyn Write, f: impl FnOnce([f64; 3]) -> CmdResult) -> CmdResult {
    match v {
        [a, b, c] => f([*a, *b, *c]),
        _ => {
            let _ = writeln!(err, "error: --point needs exactly three comma-separated numbers, got {}", v.len());
            Ok(EXIT_USAGE)
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn verify(
    suite: &str,
    samples: Option<usize>,
    seed: u64,
    tol: Option<f64>,
    json: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let report = run_suite(suite, samples, seed, tol).map_err(|e| e.to_string())?;
    let text = serde_json::to_string(&report).map_err(io_err)?;
    writeln!(out, "{text}").map_err(io_err)?;
    if let Some(path) = json {
        std::fs::write(&path, format!("{text}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    summarize(&report, err).map_err(io_err)?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAILURE })
}

fn summarize(r: &VerificationReport, err: &mut dyn Write) -> std::io::Result<()> {
    for c in &r.checks {
        writeln!(
            err,
            "  {:<32} {:>4}  defect {:>10.3e}  tol {:>9.1e}  n={}",
            c.name,
            if c.pass { "ok" } else { "FAIL" },
            c.max_defect,
            c.tolerance,
            c.samples
        )?;
    }
    for (k, v) in &r.diagnostics {
        writeln!(err, "  [{k}] {v}")?;
    }
    writeln!(
        err,
        "{}: {} (max defect {:.3e}, tolerance {:.1e}, {} samples, {} ms)",
        r.suite,
        if r.pass { "PASS" } else { "FAIL" },
        r.max_defect,
        r.tolerance,
        r.samples,
        r.wall_time_ms
    )
}

fn map(which: MapKind, p: [f64; 3], out: &mut dyn Write) -> CmdResult {
    let e = |e: su11_core::Error| e.to_string();
    let line = |v: [f64; 3]| format!("{} {} {}", v[0], v[1], v[2]);
    let text = match which {
        MapKind::Sym => line(sym(&ANPoint::from_chart_coords(p).map_err(e)?).to_array()),
        MapKind::Exp => line(exp_q(&QStarPoint::from_array(p).map_err(e)?).map_err(e)?.to_array()),
        MapKind::Log => line(log_q(&QPoint::from_array(p).map_err(e)?).map_err(e)?.to_array()),
        MapKind::Fr => line(fr_map(&QStarPoint::from_array(p).map_err(e)?).map_err(e)?.to_array()),
        MapKind::Gw => {
            let q = QStarPoint::from_array(p).map_err(e)?;
            let image = gw_flow(&q, &FlowConfig::default()).map_err(e)?;
            format!("{}\nlambda {} {}", line(image.to_array()), q.lambda(), image.lambda())
        }
    };
    writeln!(out, "{text}").map_err(io_err)?;
    Ok(EXIT_OK)
}

fn spectrum(p: [f64; 3], out: &mut dyn Write) -> CmdResult {
    let b = ANPoint::new(p[0], p[1], p[2]).map_err(|e| e.to_string())?;
    let gamma = adm_spectrum_an(&b).map_err(|e| e.to_string())?;
    writeln!(out, "{gamma}").map_err(io_err)?;
    Ok(EXIT_OK)
}

/// One CSV row per `(λ, s)` pair, `λ`-major.
pub fn flow_rows(lambdas: &[f64], s: &[f64]) -> Result<Vec<[f64; 8]>, String> {
    let cfg = FlowConfig::default();
    let mut rows = Vec::with_capacity(lambdas.len() * s.len());
    for &lambda in lambdas {
        for &sv in s {
            let h = HypCoords { lambda, phi: 0.0, s: sv, on_axis: sv == 0.0 };
            let p = rect_of_hyp(&h).map_err(|e| e.to_string())?;
            let ctx = |e: su11_core::Error| format!("λ = {lambda}, s = {sv}: {e}");
            let image = gw_flow(&p, &cfg).map_err(ctx)?;
            let defect = verify_gw(&p, &cfg).map_err(ctx)?;
            rows.push([p.x, p.y, p.z, image.x, image.y, image.z, lambda, defect]);
        }
    }
    Ok(rows)
}

fn flow(lambdas: &[f64], s: &[f64], path: &PathBuf) -> CmdResult {
    let rows = flow_rows(lambdas, s)?;
    let ctx = |e: csv::Error| format!("{}: {e}", path.display());
    let mut w = csv::Writer::from_path(path).map_err(ctx)?;
    w.write_record(CSV_HEADER).map_err(ctx)?;
    for r in &rows {
        w.write_record(r.iter().map(|v| v.to_string())).map_err(ctx)?;
    }
    w.flush().map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(EXIT_OK)
}
