//! High-field envelopes of the equidistant cascade and collapse/revival
//! timescales, analytic and measured.
//!
//! Cases I, II, III are the atom starting in the lower, middle and upper
//! level; they are named here by [`Level`].

use crate::dressed::{rabi_frequency, QuantizedParams};
use crate::observables::ObservableSeries;
use crate::{Configuration, Error, Level, Result};
use std::f64::consts::PI;

fn check(nbar: f64, g: f64) -> Result<()> {
    if !(nbar >= 1.0) || !nbar.is_finite() {
        return Err(Error::Argument(format!("mean photon number must be >= 1, got {nbar}")));
    }
    if !g.is_finite() {
        return Err(Error::Argument("coupling must be finite".into()));
    }
    Ok(())
}

/// `b` in `Omega = g sqrt(2n + b)` for the cascade block of each case.
fn offset_b(level: Level) -> f64 {
    match level {
        Level::Lower => -1.0,
        Level::Middle => 1.0,
        Level::Upper => 3.0,
    }
}

/// `Omega(n) ~ slope * n + offset`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearRabi {
    pub slope: f64,
    pub offset: f64,
}

impl LinearRabi {
    pub fn at(&self, n: f64) -> f64 {
        self.slope * n + self.offset
    }
}

/// Linearized cascade Rabi frequencies as tabulated:
/// `g(n + nbar - 1)/sqrt(2 nbar - 1)`, `g(n + nbar + 1)/sqrt(2 nbar + 1)` and,
/// for the upper level, `g(n + 3 nbar)/sqrt(2 nbar + 3)`.
pub fn rabi_expansion(nbar: f64, g: f64, level: Level) -> Result<LinearRabi> {
    check(nbar, g)?;
    Ok(match level {
        Level::Lower => {
            let r = (2.0 * nbar - 1.0).sqrt();
            LinearRabi { slope: g / r, offset: g * (nbar - 1.0) / r }
        }
        Level::Middle => {
            let r = (2.0 * nbar + 1.0).sqrt();
            LinearRabi { slope: g / r, offset: g * (nbar + 1.0) / r }
        }
        Level::Upper => {
            let r = (2.0 * nbar + 3.0).sqrt();
            LinearRabi { slope: g / r, offset: 3.0 * g * nbar / r }
        }
    })
}

/// First-order Taylor expansion of `g sqrt(2n + b)` about `nbar`:
/// `g(n + nbar + b)/sqrt(2 nbar + b)`. Agrees with [`rabi_expansion`] for the
/// lower and middle levels.
pub fn rabi_expansion_first_order(nbar: f64, g: f64, level: Level) -> Result<LinearRabi> {
    check(nbar, g)?;
    let b = offset_b(level);
    let r = (2.0 * nbar + b).sqrt();
    Ok(LinearRabi { slope: g / r, offset: g * (nbar + b) / r })
}

/// Which upper-level `w12` envelope to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EnvelopeForm {
    /// Exponents follow the lower-level pattern, `-nbar(1 - cos(k g t / sqrt(2 nbar + 3)))`.
    #[default]
    Patterned,
    /// Exponents as tabulated: `sqrt(3 nbar + 2)` and `-2 nbar(1 - cos(2 g t / sqrt(nbar + 3)))`.
    Tabulated,
}

/// `exp(-nbar (1 - cos(g t / sqrt(2 nbar + b))))`, the collapse/revival factor.
pub fn envelope_factor(level: Level, nbar: f64, g: f64, t: f64) -> Result<f64> {
    check(nbar, g)?;
    let r = (2.0 * nbar + offset_b(level)).sqrt();
    Ok((-nbar * (1.0 - (g * t / r).cos())).exp())
}

/// High-field inversions `(w12, w23, w13)` from the closed-form
/// tabulated expressions (only their timescales are meaningful; their
/// constant parts do not match the exact inversions).
pub fn analytic_envelope(level: Level, nbar: f64, g: f64, t: f64, form: EnvelopeForm) -> Result<(f64, f64, f64)> {
    check(nbar, g)?;
    let x = g * t;
    let nb = nbar;
    let e = |k: f64, r: f64| (-nb * (1.0 - (k * x / r).cos())).exp();
    Ok(match level {
        Level::Lower => {
            let r = (2.0 * nb - 1.0).sqrt();
            let ph1 = g * (nb - 1.0) * t / r + nb * (x / r).sin();
            let ph2 = 2.0 * g * (nb - 1.0) * t / r + nb * (2.0 * x / r).sin();
            let w12 = 0.125 + 0.5 * e(1.0, r) * ph1.cos() + 0.375 * e(2.0, r) * ph2.cos();
            let ph23 = g * (2.0 * nb - 1.0) * t / (nb - 1.0).sqrt() + nb * (x / r).sin();
            let w23 = -0.125 + 0.5 * e(1.0, r) * ph23.cos() - 0.375 * e(2.0, r) * ph2.cos();
            let w13 = e(1.0, r) * ph1.cos();
            (w12, w23, w13)
        }
        Level::Middle => {
            let r = (2.0 * nb + 1.0).sqrt();
            let ph1 = g * (nb + 1.0) * t / r + nb * (x / r).sin();
            let ph2 = 2.0 * g * (nb + 1.0) * t / r + nb * (2.0 * x / r).sin();
            let w12 = -0.375 - 0.625 * e(1.0, r) * ph1.cos();
            let w23 = 0.25 + 0.75 * e(1.0, r) * ph2.cos();
            let w13 = -0.125 + 0.125 * e(1.0, r) * ph2.cos();
            (w12, w23, w13)
        }
        Level::Upper => {
            let r = (2.0 * nb + 3.0).sqrt();
            let ph1 = g * (nb + 3.0) * t / r + nb * (x / r).sin();
            let ph2 = 2.0 * g * (nb + 3.0) * t / r + nb * (2.0 * x / r).sin();
            let (e1, e2) = match form {
                EnvelopeForm::Patterned => (e(1.0, r), e(2.0, r)),
                EnvelopeForm::Tabulated => (
                    e(1.0, (3.0 * nb + 2.0).sqrt()),
                    (-2.0 * nb * (1.0 - (2.0 * x / (nb + 3.0).sqrt()).cos())).exp(),
                ),
            };
            let w12 = 0.125 - 0.5 * e1 * ph1.cos() + 0.375 * e2 * ph2.cos();
            let ph2b = 2.0 * g * (nb + 3.0) * t / r + nb * (2.0 * x / (nb - 1.0).sqrt()).sin();
            let w23 = -0.125 - 0.5 * e(1.0, r) * ph1.cos() - 0.375 * e(2.0, r) * ph2b.cos();
            let ph13 = 2.0 * g * (nb + 3.0) * t / r + nb * (x / r).sin();
            let w13 = -e(1.0, r) * ph13.cos();
            (w12, w23, w13)
        }
    })
}

/// Collapse and revival times of the high-field envelopes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RevivalEstimate {
    pub level: Level,
    pub nbar: f64,
    pub g: f64,
    pub t_collapse_1: f64,
    pub t_collapse_2: Option<f64>,
    pub t_revival_1: f64,
    pub t_revival_2: Option<f64>,
}

/// `t^c_1 = sqrt(2(2 nbar + b))/(g sqrt(nbar))`, `t^r_1 = 2 pi sqrt(2 nbar + b)/g`;
/// the lower and upper cases also have halved second times.
pub fn collapse_revival_times(level: Level, nbar: f64, g: f64) -> Result<RevivalEstimate> {
    check(nbar, g)?;
    if !(g > 0.0) {
        return Err(Error::Argument(format!("coupling must be positive, got {g}")));
    }
    let r = (2.0 * nbar + offset_b(level)).sqrt();
    let tc1 = (2.0f64).sqrt() * r / (g * nbar.sqrt());
    let tr1 = 2.0 * PI * r / g;
    let two = level != Level::Middle;
    Ok(RevivalEstimate {
        level,
        nbar,
        g,
        t_collapse_1: tc1,
        t_collapse_2: two.then_some(tc1 / 2.0),
        t_revival_1: tr1,
        t_revival_2: two.then_some(tr1 / 2.0),
    })
}

/// `2 pi / max(dOmega/dm, dOmega/dn)` at the mean photon numbers: the time
/// after which neighbouring photon-number components rephase.
pub fn linearized_revival_time(p: &QuantizedParams, level: Level, nbar_m: f64, nbar_n: f64) -> Result<f64> {
    let (m, n) = (nbar_m.round().max(0.0) as u32, nbar_n.round().max(0.0) as u32);
    let omega = rabi_frequency(p, level, m, n)?;
    if omega == 0.0 {
        return Err(Error::Domain("Rabi frequency vanishes at the mean photon numbers".into()));
    }
    let (dm, dn) = match p.config {
        Configuration::Cascade => (0.0, p.g1 * p.g1 / omega),
        _ => (p.g1 * p.g1 / (2.0 * omega), p.g2 * p.g2 / (2.0 * omega)),
    };
    Ok(2.0 * PI / dm.max(dn))
}

/// Collapse and revival times found in one sampled signal.
#[derive(Debug, Clone, PartialEq)]
pub struct RevivalMeasurement {
    /// Envelope at the first full window.
    pub initial_amplitude: f64,
    pub collapse_time: Option<f64>,
    /// Envelope maxima of successive revivals.
    pub revival_times: Vec<f64>,
}

impl RevivalMeasurement {
    pub fn first_revival(&self) -> Option<f64> {
        self.revival_times.first().copied()
    }
}

/// Sliding-window RMS about the window mean. Returns `(centre times, envelope)`.
pub fn sliding_rms(times: &[f64], x: &[f64], window: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if times.len() != x.len() || times.len() < 3 {
        return Err(Error::Argument("need matching time and signal arrays of length >= 3".into()));
    }
    let dt = (times[times.len() - 1] - times[0]) / (times.len() - 1) as f64;
    if !(dt > 0.0) {
        return Err(Error::Argument("time grid must be increasing".into()));
    }
    let h = ((window / dt / 2.0).round() as usize).max(1);
    if 2 * h + 1 > x.len() {
        return Err(Error::Argument("window longer than the series".into()));
    }
    let mut s1 = vec![0.0; x.len() + 1];
    let mut s2 = vec![0.0; x.len() + 1];
    for (i, v) in x.iter().enumerate() {
        s1[i + 1] = s1[i] + v;
        s2[i + 1] = s2[i] + v * v;
    }
    let w = (2 * h + 1) as f64;
    let mut tc = Vec::with_capacity(x.len() - 2 * h);
    let mut env = Vec::with_capacity(x.len() - 2 * h);
    for i in h..x.len() - h {
        let (a, b) = (i - h, i + h + 1);
        let mean = (s1[b] - s1[a]) / w;
        let var = (s2[b] - s2[a]) / w - mean * mean;
        tc.push(times[i]);
        env.push(var.max(0.0).sqrt());
    }
    Ok((tc, env))
}

/// Collapse: envelope first below 10% of its initial value. Revival: the
/// envelope climbs back above 25% of the initial value; its time is the
/// envelope maximum before the next drop below 10%.
pub fn extract_revival_times(times: &[f64], x: &[f64], window: f64) -> Result<RevivalMeasurement> {
    let (tc, env) = sliding_rms(times, x, window)?;
    let a0 = env[0];
    let (lo, hi) = (0.1 * a0, 0.25 * a0);
    let mut collapse_time = None;
    let mut revivals = Vec::new();
    let mut peak: Option<(f64, f64)> = None;
    for (&t, &e) in tc.iter().zip(&env) {
        if collapse_time.is_none() {
            if e < lo {
                collapse_time = Some(t);
            }
            continue;
        }
        match peak {
            None if e > hi => peak = Some((t, e)),
            Some((_, pe)) if e > pe => peak = Some((t, e)),
            Some((pt, _)) if e < lo => {
                revivals.push(pt);
                peak = None;
            }
            _ => {}
        }
    }
    if let Some((pt, _)) = peak {
        revivals.push(pt);
    }
    Ok(RevivalMeasurement { initial_amplitude: a0, collapse_time, revival_times: revivals })
}

/// Per-inversion measurements of a simulated series.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRevivals {
    pub w12: RevivalMeasurement,
    pub w23: RevivalMeasurement,
    pub w13: RevivalMeasurement,
}

/// Runs [`extract_revival_times`] on each inversion channel with a window of
/// `window` time units (five Rabi periods is the usual choice).
pub fn extract_revival_times_numeric(series: &ObservableSeries, window: f64) -> Result<ChannelRevivals> {
    Ok(ChannelRevivals {
        w12: extract_revival_times(&series.times, &series.w12, window)?,
        w23: extract_revival_times(&series.times, &series.w23, window)?,
        w13: extract_revival_times(&series.times, &series.w13, window)?,
    })
}

/// `5 * 2 pi / Omega` at the mean photon numbers.
pub fn default_window(p: &QuantizedParams, level: Level, nbar_m: f64, nbar_n: f64) -> Result<f64> {
    let (m, n) = (nbar_m.round().max(0.0) as u32, nbar_n.round().max(0.0) as u32);
    let omega = rabi_frequency(p, level, m, n)?;
    if omega == 0.0 {
        return Err(Error::Domain("Rabi frequency vanishes at the mean photon numbers".into()));
    }
    Ok(5.0 * 2.0 * PI / omega)
}
