//! Scenario description: defaults, presets, `key = value` files and overrides.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64 as C64;
use trilevel::observables::EntropyBase;
use trilevel::{Configuration, Level};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Bloch,
    Invariants,
    Qutrit,
    Quantized,
    Revival,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Bloch => "bloch",
            Mode::Invariants => "invariants",
            Mode::Qutrit => "qutrit",
            Mode::Quantized => "quantized",
            Mode::Revival => "revival",
        }
    }
}

impl FromStr for Mode {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "bloch" => Mode::Bloch,
            "invariants" => Mode::Invariants,
            "qutrit" => Mode::Qutrit,
            "quantized" => Mode::Quantized,
            "revival" => Mode::Revival,
            other => return Err(CliError::Config(format!("unknown mode '{other}'"))),
        })
    }
}

/// Initial atomic condition: lower (I), middle (II) or upper (III) level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    I,
    II,
    III,
}

impl Case {
    pub const ALL: [Case; 3] = [Case::I, Case::II, Case::III];

    pub fn level(self) -> Level {
        match self {
            Case::I => Level::Lower,
            Case::II => Level::Middle,
            Case::III => Level::Upper,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "I",
            Case::II => "II",
            Case::III => "III",
        })
    }
}

/// Parses `I`, `II`, `III` or `all`.
pub fn parse_cases(s: &str) -> Result<Vec<Case>, CliError> {
    Ok(match s.trim().to_ascii_uppercase().as_str() {
        "I" | "1" => vec![Case::I],
        "II" | "2" => vec![Case::II],
        "III" | "3" => vec![Case::III],
        "ALL" => Case::ALL.to_vec(),
        other => return Err(CliError::Config(format!("unknown case '{other}'"))),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub mode: Mode,
    /// `None` selects every configuration (invariants mode only).
    pub configuration: Option<Configuration>,
    pub g1: f64,
    pub g2: f64,
    pub kappa1: f64,
    pub kappa2: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub cases: Vec<Case>,
    /// Explicit `(c_minus, c_zero, c_plus)`; overrides `cases`.
    pub atom: Option<[C64; 3]>,
    /// Qutrit angles `(theta0, theta1, theta2, phi)` used by bloch and qutrit modes.
    pub angles: [f64; 4],
    pub alpha_m: C64,
    pub alpha_n: C64,
    pub cutoff: Option<usize>,
    pub tmax: f64,
    pub samples: usize,
    pub base: EntropyBase,
    pub out: Option<String>,
    pub preset: Option<String>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            mode: Mode::Quantized,
            configuration: Some(Configuration::Cascade),
            g1: 0.1,
            g2: 0.1,
            kappa1: 1.0,
            kappa2: 1.0,
            delta1: 0.0,
            delta2: 0.0,
            cases: vec![Case::I],
            atom: None,
            angles: [PI / 2.0, PI / 2.0, PI / 2.0, 0.0],
            alpha_m: C64::new(0.0, 0.0),
            alpha_n: C64::new(35f64.sqrt(), 0.0),
            cutoff: None,
            tmax: 1200.0,
            samples: 12000,
            base: EntropyBase::Natural,
            out: None,
            preset: None,
        }
    }
}

pub const PRESETS: [&str; 6] = ["fig2", "fig3", "fig4", "fig5", "fig6", "invariants"];

/// Built-in scenarios: `fig2`..`fig6` and the resonant `invariants` sweep.
pub fn preset(name: &str) -> Result<ScenarioConfig, CliError> {
    let mut c = ScenarioConfig { preset: Some(name.to_string()), ..Default::default() };
    match name {
        "fig2" | "fig3" => {
            c.configuration = Some(if name == "fig2" { Configuration::Lambda } else { Configuration::Vee });
            c.g1 = 0.2;
            c.g2 = 0.1;
            c.alpha_m = C64::new(30f64.sqrt(), 0.0);
            c.alpha_n = C64::new(20f64.sqrt(), 0.0);
            c.cases = Case::ALL.to_vec();
            c.tmax = 400.0;
            c.samples = 4000;
        }
        "fig4" | "fig5" | "fig6" => {
            c.cases = vec![match name {
                "fig4" => Case::I,
                "fig5" => Case::II,
                _ => Case::III,
            }];
        }
        "invariants" => {
            c.mode = Mode::Invariants;
            c.configuration = None;
        }
        other => {
            return Err(CliError::Config(format!("unknown preset '{other}' (expected one of {})", PRESETS.join(", "))))
        }
    }
    Ok(c)
}

fn real(key: &str, v: &str) -> Result<f64, CliError> {
    let x: f64 = v.trim().parse().map_err(|_| CliError::Config(format!("{key}: '{v}' is not a number")))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Config(format!("{key}: value must be finite")))
    }
}

/// `re` or `re,im`.
fn complex(key: &str, v: &str) -> Result<C64, CliError> {
    let mut parts = v.split(',');
    let re = real(key, parts.next().unwrap_or(""))?;
    let im = match parts.next() {
        Some(s) => real(key, s)?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(CliError::Config(format!("{key}: expected 're' or 're,im'")));
    }
    Ok(C64::new(re, im))
}

pub fn parse_base(v: &str) -> Result<EntropyBase, CliError> {
    match v.trim() {
        "e" | "ln" => Ok(EntropyBase::Natural),
        "2" => Ok(EntropyBase::Two),
        other => Err(CliError::Config(format!("base: expected 'e' or '2', got '{other}'"))),
    }
}

impl ScenarioConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let v = value.trim();
        match key.trim() {
            "mode" => self.mode = v.parse()?,
            "configuration" | "config" => {
                self.configuration = if v.eq_ignore_ascii_case("all") {
                    None
                } else {
                    Some(v.parse().map_err(|e: trilevel::Error| CliError::Config(e.to_string()))?)
                }
            }
            "g" => {
                self.g1 = real(key, v)?;
                self.g2 = self.g1;
            }
            "g1" => self.g1 = real(key, v)?,
            "g2" => self.g2 = real(key, v)?,
            "kappa1" => self.kappa1 = real(key, v)?,
            "kappa2" => self.kappa2 = real(key, v)?,
            "delta1" => self.delta1 = real(key, v)?,
            "delta2" => self.delta2 = real(key, v)?,
            "case" => self.cases = parse_cases(v)?,
            "atom_minus" | "atom_zero" | "atom_plus" => {
                let slot = ["atom_minus", "atom_zero", "atom_plus"].iter().position(|k| *k == key.trim()).unwrap();
                let mut a = self.atom.unwrap_or([C64::new(0.0, 0.0); 3]);
                a[slot] = complex(key, v)?;
                self.atom = Some(a);
            }
            "theta0" => self.angles[0] = real(key, v)?,
            "theta1" => self.angles[1] = real(key, v)?,
            "theta2" => self.angles[2] = real(key, v)?,
            "phi" => self.angles[3] = real(key, v)?,
            "alpha_m" => self.alpha_m = complex(key, v)?,
            "alpha_n" => self.alpha_n = complex(key, v)?,
            "nbar_m" => self.alpha_m = C64::new(nonneg(key, v)?.sqrt(), 0.0),
            "nbar_n" => self.alpha_n = C64::new(nonneg(key, v)?.sqrt(), 0.0),
            "cutoff" => {
                self.cutoff = Some(v.parse().map_err(|_| CliError::Config(format!("cutoff: '{v}' is not a count")))?)
            }
            "tmax" => self.tmax = real(key, v)?,
            "samples" => {
                self.samples = v.parse().map_err(|_| CliError::Config(format!("samples: '{v}' is not a count")))?
            }
            "base" => self.base = parse_base(v)?,
            "out" => self.out = Some(v.to_string()),
            other => return Err(CliError::Config(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// Applies a flat `key = value` text; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<(), CliError> {
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected 'key = value'", no + 1)))?;
            self.set(k, v).map_err(|e| CliError::Config(format!("line {}: {e}", no + 1)))?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.configuration.is_none() && self.mode != Mode::Invariants {
            return Err(CliError::Config("configuration 'all' is only valid in invariants mode".into()));
        }
        if !(self.tmax >= 0.0) {
            return Err(CliError::Config("tmax must be non-negative".into()));
        }
        if matches!(self.mode, Mode::Bloch | Mode::Quantized | Mode::Revival) && self.samples < 2 {
            return Err(CliError::Config("samples must be at least 2".into()));
        }
        if self.cases.is_empty() {
            return Err(CliError::Config("no case selected".into()));
        }
        Ok(())
    }

    /// Settings echoed into metadata sidecars, one `key = value` per line.
    pub fn describe(&self) -> String {
        let cfg = self.configuration.map_or("all", |c| c.name());
        let mut s = format!("mode = {}\nconfiguration = {cfg}\n", self.mode.name());
        if let Some(p) = &self.preset {
            s += &format!("preset = {p}\n");
        }
        s += &format!("g1 = {}\ng2 = {}\n", self.g1, self.g2);
        s += &format!(
            "kappa1 = {}\nkappa2 = {}\ndelta1 = {}\ndelta2 = {}\n",
            self.kappa1, self.kappa2, self.delta1, self.delta2
        );
        s += &format!(
            "alpha_m = {},{}\nalpha_n = {},{}\n",
            self.alpha_m.re, self.alpha_m.im, self.alpha_n.re, self.alpha_n.im
        );
        s += &format!("tmax = {}\nsamples = {}\n", self.tmax, self.samples);
        s += &format!("base = {}\n", if self.base == EntropyBase::Two { "2" } else { "e" });
        s
    }
}

fn nonneg(key: &str, v: &str) -> Result<f64, CliError> {
    let x = real(key, v)?;
    if x < 0.0 {
        return Err(CliError::Config(format!("{key} must be non-negative")));
    }
    Ok(x)
}
