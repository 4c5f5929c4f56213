use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use trilevel_cli::config::{parse_base, parse_cases, PRESETS};
use trilevel_cli::{preset, run_scenario, CliError, Mode, ScenarioConfig};

/// Three-level atom scenarios: Bloch flows, invariants, qutrit states and
/// quantized-field entanglement dynamics, written as CSV.
#[derive(Parser, Debug)]
#[command(name = "trilevel", version)]
struct Args {
    /// bloch | invariants | qutrit | quantized | revival (default: from preset or config)
    mode: Option<String>,
    /// Flat `key = value` file
    #[arg(long)]
    config: Option<PathBuf>,
    /// fig2 | fig3 | fig4 | fig5 | fig6 | invariants
    #[arg(long)]
    preset: Option<String>,
    #[arg(long)]
    out: Option<String>,
    /// I | II | III | all
    #[arg(long)]
    case: Option<String>,
    #[arg(long)]
    tmax: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    cutoff: Option<usize>,
    /// Entropy logarithm base: e | 2
    #[arg(long)]
    base: Option<String>,
}

fn build(args: &Args) -> Result<ScenarioConfig, CliError> {
    let mut cfg = match &args.preset {
        Some(p) => preset(p)?,
        None => ScenarioConfig::default(),
    };
    if let Some(path) = &args.config {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        cfg.apply_text(&text)?;
    }
    if let Some(m) = &args.mode {
        cfg.mode = m.parse::<Mode>()?;
    }
    if let Some(c) = &args.case {
        cfg.cases = parse_cases(c)?;
        cfg.atom = None;
    }
    if let Some(t) = args.tmax {
        cfg.tmax = t;
    }
    if let Some(n) = args.samples {
        cfg.samples = n;
    }
    if args.cutoff.is_some() {
        cfg.cutoff = args.cutoff;
    }
    if let Some(b) = &args.base {
        cfg.base = parse_base(b)?;
    }
    if let Some(o) = &args.out {
        cfg.out = Some(o.clone());
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = build(&args).and_then(|cfg| run_scenario(&cfg));
    match result {
        Ok(files) => {
            for f in files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("trilevel: {e}");
            if matches!(e, CliError::Config(_)) && args.preset.is_some() {
                eprintln!("known presets: {}", PRESETS.join(", "));
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
