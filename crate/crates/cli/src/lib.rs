//! Scenario runner behind the `trilevel` binary.

pub mod config;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use num_complex::Complex64 as C64;
use trilevel::bloch::{
    bloch_from_density, bloch_matrix, propagator, subset_sum, BlochVector8, SemiclassicalParams,
};
use trilevel::dressed::QuantizedParams;
use trilevel::field::CoherentField;
use trilevel::invariants::{conserved_subsets, InvariantSubset};
use trilevel::observables::{linspace, simulate_observables, ObservableSeries};
use trilevel::qutrit::{qutrit_bloch_norm, qutrit_density, qutrit_wavefunction, QutritAngles, StateVector3};
use trilevel::revival::{
    collapse_revival_times, default_window, extract_revival_times_numeric, linearized_revival_time,
    RevivalMeasurement,
};
use trilevel::{Configuration, Level};

pub use config::{preset, Case, Mode, ScenarioConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Io { .. } => 2,
        }
    }
}

impl From<trilevel::Error> for CliError {
    fn from(e: trilevel::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

/// 12 significant digits.
fn num(x: f64) -> String {
    format!("{x:.11e}")
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Writes `t,entropy,w12,w23,w13` rows.
pub fn emit_plot_data(series: &ObservableSeries, path: &Path) -> Result<(), CliError> {
    if series.is_empty() {
        return Err(CliError::Config("refusing to write an empty series".into()));
    }
    let mut s = String::from("t,entropy,w12,w23,w13\n");
    for i in 0..series.len() {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            num(series.times[i]),
            num(series.entropy[i]),
            num(series.w12[i]),
            num(series.w23[i]),
            num(series.w13[i])
        );
    }
    write_file(path, &s)
}

fn default_out(cfg: &ScenarioConfig) -> PathBuf {
    PathBuf::from(format!("{}.csv", cfg.preset.as_deref().unwrap_or(cfg.mode.name())))
}

/// `dir/stem.csv` -> `dir/stem_caseII.csv`.
fn case_path(base: &Path, case: Case) -> PathBuf {
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("out");
    let ext = base.extension().and_then(|s| s.to_str()).unwrap_or("csv");
    base.with_file_name(format!("{stem}_case{case}.{ext}"))
}

fn meta_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_os_string();
    s.push(".meta.txt");
    PathBuf::from(s)
}

fn configuration(cfg: &ScenarioConfig) -> Configuration {
    cfg.configuration.expect("validated")
}

fn quantized_params(cfg: &ScenarioConfig) -> Result<QuantizedParams, CliError> {
    Ok(match configuration(cfg) {
        Configuration::Cascade => {
            if cfg.g1 != cfg.g2 {
                return Err(CliError::Config("cascade needs g1 == g2 (use 'g')".into()));
            }
            QuantizedParams::cascade(cfg.g1)?
        }
        c => QuantizedParams::new(c, cfg.g1, cfg.g2)?,
    })
}

fn field(cfg: &ScenarioConfig) -> Result<CoherentField, CliError> {
    Ok(match (configuration(cfg), cfg.cutoff) {
        (Configuration::Cascade, Some(k)) => CoherentField::single_mode(cfg.alpha_n, k)?,
        (Configuration::Cascade, None) => CoherentField::single_mode_default(cfg.alpha_n)?,
        (_, Some(k)) => CoherentField::new(cfg.alpha_m, cfg.alpha_n, k)?,
        (_, None) => CoherentField::with_default_cutoff(cfg.alpha_m, cfg.alpha_n)?,
    })
}

/// Runs of the quantized pipeline: explicit amplitudes, or one per selected case.
fn initial_states(cfg: &ScenarioConfig) -> Result<Vec<(Option<Case>, StateVector3)>, CliError> {
    if let Some([cm, c0, cp]) = cfg.atom {
        return Ok(vec![(None, StateVector3::normalized(cm, c0, cp)?)]);
    }
    Ok(cfg.cases.iter().map(|&k| (Some(k), StateVector3::basis(k.level()))).collect())
}

fn outputs(cfg: &ScenarioConfig, n_runs: usize, case: Option<Case>) -> PathBuf {
    let base = cfg.out.as_ref().map(PathBuf::from).unwrap_or_else(|| default_out(cfg));
    match case {
        Some(k) if n_runs > 1 => case_path(&base, k),
        _ => base,
    }
}

/// Executes a scenario and returns the data files written (sidecars excluded).
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    cfg.validate()?;
    match cfg.mode {
        Mode::Quantized => run_quantized(cfg),
        Mode::Revival => run_revival(cfg),
        Mode::Bloch => run_bloch(cfg),
        Mode::Invariants => run_invariants(cfg),
        Mode::Qutrit => run_qutrit(cfg),
    }
}

fn write_meta(cfg: &ScenarioConfig, out: &Path, extra: &str) -> Result<(), CliError> {
    write_file(&meta_path(out), &format!("{}{extra}", cfg.describe()))
}

fn series_meta(case: Option<Case>, atom: &StateVector3, field: &CoherentField, s: &ObservableSeries) -> String {
    let mut m = String::new();
    match case {
        Some(k) => m += &format!("case = {k}\n"),
        None => {
            let a = [atom.c_minus, atom.c_zero, atom.c_plus];
            m += &format!(
                "atom = {},{} {},{} {},{}\n",
                a[0].re, a[0].im, a[1].re, a[1].im, a[2].re, a[2].im
            )
        }
    }
    m += &format!("cutoff = {}\n", field.cutoff);
    m += &format!("max_norm_deficit = {:e}\n", s.max_norm_deficit);
    m += &format!("truncation_warning = {}\n", s.truncation_warning());
    m
}

fn simulate(
    cfg: &ScenarioConfig,
    atom: &StateVector3,
) -> Result<(QuantizedParams, CoherentField, ObservableSeries), CliError> {
    let p = quantized_params(cfg)?;
    let f = field(cfg)?;
    let grid = linspace(0.0, cfg.tmax, cfg.samples);
    let s = simulate_observables(&p, atom, &f, &grid, cfg.base)?;
    if s.truncation_warning() {
        eprintln!(
            "warning: photon-number truncation lost {:e} of the norm; raise --cutoff",
            s.max_norm_deficit
        );
    }
    Ok((p, f, s))
}

fn run_quantized(cfg: &ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    let runs = initial_states(cfg)?;
    let mut written = vec![];
    for (case, atom) in &runs {
        let (_, f, s) = simulate(cfg, atom)?;
        let out = outputs(cfg, runs.len(), *case);
        emit_plot_data(&s, &out)?;
        write_meta(cfg, &out, &series_meta(*case, atom, &f, &s))?;
        written.push(out);
    }
    Ok(written)
}

fn revival_rows(s: &mut String, channel: &str, r: &RevivalMeasurement) {
    if let Some(t) = r.collapse_time {
        let _ = writeln!(s, "measured,{channel},collapse,1,{}", num(t));
    }
    for (i, t) in r.revival_times.iter().enumerate() {
        let _ = writeln!(s, "measured,{channel},revival,{},{}", i + 1, num(*t));
    }
}

fn run_revival(cfg: &ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    let runs = initial_states(cfg)?;
    let mut written = vec![];
    for (case, atom) in &runs {
        let level = case.map(Case::level).unwrap_or(Level::Lower);
        let (p, f, series) = simulate(cfg, atom)?;
        let (nm, nn) = (f.nbar_m(), f.nbar_n());
        let mut s = String::from("source,channel,quantity,index,t\n");
        if configuration(cfg) == Configuration::Cascade {
            let e = collapse_revival_times(level, nn, cfg.g1)?;
            let _ = writeln!(s, "predicted,all,collapse,1,{}", num(e.t_collapse_1));
            if let Some(t) = e.t_collapse_2 {
                let _ = writeln!(s, "predicted,all,collapse,2,{}", num(t));
            }
            let _ = writeln!(s, "predicted,all,revival,1,{}", num(e.t_revival_1));
            if let Some(t) = e.t_revival_2 {
                let _ = writeln!(s, "predicted,all,revival,2,{}", num(t));
            }
        }
        let _ = writeln!(s, "linearized,all,revival,1,{}", num(linearized_revival_time(&p, level, nm, nn)?));
        let r = extract_revival_times_numeric(&series, default_window(&p, level, nm, nn)?)?;
        revival_rows(&mut s, "w12", &r.w12);
        revival_rows(&mut s, "w23", &r.w23);
        revival_rows(&mut s, "w13", &r.w13);
        let out = outputs(cfg, runs.len(), *case);
        write_file(&out, &s)?;
        write_meta(cfg, &out, &series_meta(*case, atom, &f, &series))?;
        written.push(out);
    }
    Ok(written)
}

fn semiclassical(cfg: &ScenarioConfig, c: Configuration) -> Result<SemiclassicalParams, CliError> {
    Ok(SemiclassicalParams::new(c, cfg.kappa1, cfg.kappa2, cfg.delta1, cfg.delta2)?)
}

fn angles(cfg: &ScenarioConfig) -> Result<QutritAngles, CliError> {
    let [a, b, c, d] = cfg.angles;
    Ok(QutritAngles::new(a, b, c, d)?)
}

fn subset_label(s: &InvariantSubset) -> String {
    let idx: Vec<String> = s.indices().iter().map(|i| i.to_string()).collect();
    idx.join("_")
}

fn run_bloch(cfg: &ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    let m = bloch_matrix(&semiclassical(cfg, configuration(cfg))?);
    let s0: BlochVector8 = bloch_from_density(&qutrit_density(&angles(cfg)?))?;
    let subsets = conserved_subsets(&m, &[1, 2, 3, 4, 5, 6, 7])?;
    let mut s = String::from("t,s1,s2,s3,s4,s5,s6,s7,s8");
    for sub in &subsets {
        let _ = write!(s, ",sum_{}", subset_label(sub));
    }
    s += ",norm_sq\n";
    for t in linspace(0.0, cfg.tmax, cfg.samples) {
        let v = propagator(&m, t) * s0;
        s += &num(t);
        for x in v.iter() {
            s.push(',');
            s += &num(*x);
        }
        for sub in &subsets {
            s.push(',');
            s += &num(subset_sum(&v, sub.indices()));
        }
        s.push(',');
        s += &num(v.norm_squared());
        s.push('\n');
    }
    let out = outputs(cfg, 1, None);
    write_file(&out, &s)?;
    write_meta(cfg, &out, "")?;
    Ok(vec![out])
}

fn run_invariants(cfg: &ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    let configs = match cfg.configuration {
        Some(c) => vec![c],
        None => Configuration::ALL.to_vec(),
    };
    let mut s = String::from("configuration,kappa1,kappa2,delta1,delta2,size,subset\n");
    for c in configs {
        let m = bloch_matrix(&semiclassical(cfg, c)?);
        for sub in conserved_subsets(&m, &[1, 2, 3, 4, 5, 6, 7, 8])? {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{},\"{}\"",
                c.name(),
                cfg.kappa1,
                cfg.kappa2,
                cfg.delta1,
                cfg.delta2,
                sub.size(),
                sub
            );
        }
    }
    let out = outputs(cfg, 1, None);
    write_file(&out, &s)?;
    write_meta(cfg, &out, "")?;
    Ok(vec![out])
}

fn run_qutrit(cfg: &ScenarioConfig) -> Result<Vec<PathBuf>, CliError> {
    let a = angles(cfg)?;
    let psi = qutrit_wavefunction(&a);
    let bloch = bloch_from_density(&qutrit_density(&a))?;
    let mut s = String::from(
        "theta0,theta1,theta2,phi,minus_re,minus_im,zero_re,zero_im,plus_re,plus_im,s1,s2,s3,s4,s5,s6,s7,s8,norm_sq\n",
    );
    let amps: [C64; 3] = [psi.c_minus, psi.c_zero, psi.c_plus];
    let mut row: Vec<String> = cfg.angles.iter().map(|x| num(*x)).collect();
    for z in amps {
        row.push(num(z.re));
        row.push(num(z.im));
    }
    row.extend(bloch.iter().map(|x| num(*x)));
    row.push(num(qutrit_bloch_norm(&a)));
    s += &row.join(",");
    s.push('\n');
    let out = outputs(cfg, 1, None);
    write_file(&out, &s)?;
    write_meta(cfg, &out, "")?;
    Ok(vec![out])
}
