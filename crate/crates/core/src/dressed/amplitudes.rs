use super::block::{block, BasisState};
use super::euler::euler_solution;
use super::QuantizedParams;
use crate::{c, Configuration, Error, Level, Result, C64};
use nalgebra::{Matrix3, Vector3};

/// Amplitudes of the three bare states of one block, in slot order
/// `|+>, |0>, |->`, after starting in `states[start]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeTriple {
    pub states: [BasisState; 3],
    pub amplitudes: [C64; 3],
    pub start: usize,
    pub t: f64,
}

impl AmplitudeTriple {
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn max_deviation(&self, other: &AmplitudeTriple) -> f64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// `d(t) = a + b cos(Omega t) - i s sin(Omega t)` for each slot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct ClosedForm {
    pub omega: f64,
    pub a: [f64; 3],
    pub b: [f64; 3],
    pub s: [f64; 3],
}

impl ClosedForm {
    pub fn eval(&self, t: f64) -> [C64; 3] {
        let (sn, cs) = (self.omega * t).sin_cos();
        std::array::from_fn(|k| c(self.a[k] + self.b[k] * cs, -self.s[k] * sn))
    }
}

/// Closed-form coefficients per configuration and initial level.
pub(crate) fn closed_form(p: &QuantizedParams, level: Level, m: u32, n: u32) -> Result<ClosedForm> {
    let b = block(p, level, m, n)?;
    let om = b.omega();
    if om == 0.0 {
        let mut a = [0.0; 3];
        a[b.start()] = 1.0;
        return Ok(ClosedForm { omega: 0.0, a, b: [0.0; 3], s: [0.0; 3] });
    }
    let o2 = om * om;
    let (m, n) = (m as f64, n as f64);
    let (g1, g2) = (p.g1, p.g2);
    let g = g1;
    // slot order (+, 0, -); each row is (a, b, s)
    let rows: [[f64; 3]; 3] = match (p.config, level) {
        (Configuration::Lambda, Level::Lower) => [
            [0.0, 0.0, g1 * m.sqrt() / om],
            [-g1 * g2 * (m * (n + 1.0)).sqrt() / o2, g1 * g2 * (m * (n + 1.0)).sqrt() / o2, 0.0],
            [g2 * g2 * (n + 1.0) / o2, g1 * g1 * m / o2, 0.0],
        ],
        (Configuration::Lambda, Level::Middle) => [
            [0.0, 0.0, g2 * n.sqrt() / om],
            [g1 * g1 * (m + 1.0) / o2, g2 * g2 * n / o2, 0.0],
            [-g1 * g2 * ((m + 1.0) * n).sqrt() / o2, g1 * g2 * ((m + 1.0) * n).sqrt() / o2, 0.0],
        ],
        (Configuration::Lambda, Level::Upper) => [
            [0.0, 1.0, 0.0],
            [0.0, 0.0, g2 * (n + 1.0).sqrt() / om],
            [0.0, 0.0, g1 * (m + 1.0).sqrt() / om],
        ],
        (Configuration::Vee, Level::Lower) => [
            [0.0, 0.0, g1 * m.sqrt() / om],
            [0.0, 0.0, g2 * n.sqrt() / om],
            [0.0, 1.0, 0.0],
        ],
        (Configuration::Vee, Level::Middle) => [
            [-g1 * g2 * (m * (n + 1.0)).sqrt() / o2, g1 * g2 * (m * (n + 1.0)).sqrt() / o2, 0.0],
            [g1 * g1 * m / o2, g2 * g2 * (n + 1.0) / o2, 0.0],
            [0.0, 0.0, g2 * (n + 1.0).sqrt() / om],
        ],
        (Configuration::Vee, Level::Upper) => [
            [g2 * g2 * n / o2, g1 * g1 * (m + 1.0) / o2, 0.0],
            [-g1 * g2 * ((m + 1.0) * n).sqrt() / o2, g1 * g2 * ((m + 1.0) * n).sqrt() / o2, 0.0],
            [0.0, 0.0, g1 * (m + 1.0).sqrt() / om],
        ],
        (Configuration::Cascade, Level::Lower) => [
            [-g * g * ((n - 1.0) * n).max(0.0).sqrt() / o2, g * g * ((n - 1.0) * n).max(0.0).sqrt() / o2, 0.0],
            [0.0, 0.0, g * n.sqrt() / om],
            [g * g * (n - 1.0) / o2, g * g * n / o2, 0.0],
        ],
        (Configuration::Cascade, Level::Middle) => [
            [0.0, 0.0, g * n.sqrt() / om],
            [0.0, 1.0, 0.0],
            [0.0, 0.0, g * (n + 1.0).sqrt() / om],
        ],
        (Configuration::Cascade, Level::Upper) => [
            [g * g * (n + 2.0) / o2, g * g * (n + 1.0) / o2, 0.0],
            [0.0, 0.0, g * (n + 1.0).sqrt() / om],
            [-g * g * ((n + 1.0) * (n + 2.0)).sqrt() / o2, g * g * ((n + 1.0) * (n + 2.0)).sqrt() / o2, 0.0],
        ],
    };
    Ok(ClosedForm {
        omega: om,
        a: [rows[0][0], rows[1][0], rows[2][0]],
        b: [rows[0][1], rows[1][1], rows[2][1]],
        s: [rows[0][2], rows[1][2], rows[2][2]],
    })
}

fn check_time(t: f64) -> Result<()> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Argument(format!("time must be finite and non-negative, got {t}")));
    }
    Ok(())
}

/// Analytic cosine/sine amplitudes of one block.
pub fn amplitudes_closed_form(p: &QuantizedParams, level: Level, m: u32, n: u32, t: f64) -> Result<AmplitudeTriple> {
    check_time(t)?;
    let b = block(p, level, m, n)?;
    let cf = closed_form(p, level, m, n)?;
    Ok(AmplitudeTriple { states: b.states, amplitudes: cf.eval(t), start: b.start(), t })
}

/// Amplitudes from the dressed basis, `T^T diag(exp(-i lambda t)) T e_start`.
pub fn amplitudes_spectral(p: &QuantizedParams, level: Level, m: u32, n: u32, t: f64) -> Result<AmplitudeTriple> {
    check_time(t)?;
    let b = block(p, level, m, n)?;
    let sol = euler_solution(p, level, m, n)?;
    let tc: Matrix3<C64> = sol.transform.map(|x| c(x, 0.0));
    let diag = sol.diagonal();
    let phases = Matrix3::from_diagonal(&Vector3::from_fn(|k, _| c(0.0, -diag[(k, k)] * t).exp()));
    let mut e = Vector3::zeros();
    e[b.start()] = c(1.0, 0.0);
    let v = tc.transpose() * phases * tc * e;
    Ok(AmplitudeTriple { states: b.states, amplitudes: [v[0], v[1], v[2]], start: b.start(), t })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_lower_at_zero() {
        let p = QuantizedParams::new(Configuration::Lambda, 1.0, 1.0).unwrap();
        let a = amplitudes_closed_form(&p, Level::Lower, 3, 2, 0.0).unwrap();
        assert!((a.amplitudes[2] - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(a.amplitudes[0].norm(), 0.0);
        assert!(a.amplitudes[1].norm() < 1e-15);
        assert_eq!(a.states[2], BasisState { level: Level::Lower, m: 3, n: 2 });
        assert_eq!(a.states[1], BasisState { level: Level::Middle, m: 2, n: 3 });
        assert_eq!(a.states[0], BasisState { level: Level::Upper, m: 2, n: 2 });
    }

    #[test]
    fn lambda_upper_start_is_cosine() {
        let p = QuantizedParams::new(Configuration::Lambda, 0.3, 0.8).unwrap();
        let om = crate::dressed::rabi_frequency(&p, Level::Upper, 4, 6).unwrap();
        for t in [0.2, 1.9, 7.0] {
            let a = amplitudes_closed_form(&p, Level::Upper, 4, 6, t).unwrap();
            assert!((a.amplitudes[0] - c((om * t).cos(), 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn cascade_middle_quarter_period() {
        let p = QuantizedParams::cascade(0.5).unwrap();
        let n = 7u32;
        let om = crate::dressed::rabi_frequency(&p, Level::Middle, 0, n).unwrap();
        let t = std::f64::consts::FRAC_PI_2 / om;
        let a = amplitudes_closed_form(&p, Level::Middle, 0, n, t).unwrap();
        let nf = n as f64;
        assert!(a.amplitudes[1].norm() < 1e-15);
        assert!((a.amplitudes[2].norm_sqr() - (nf + 1.0) / (2.0 * nf + 1.0)).abs() < 1e-14);
        assert!((a.amplitudes[0].norm_sqr() - nf / (2.0 * nf + 1.0)).abs() < 1e-14);
        assert_eq!(a.states[2].n, n as i64 + 1);
        assert_eq!(a.states[0].n, n as i64 - 1);
    }

    #[test]
    fn spectral_examples() {
        let p = QuantizedParams::new(Configuration::Lambda, 1.0, 1.0).unwrap();
        let s = amplitudes_spectral(&p, Level::Lower, 4, 2, 0.7).unwrap();
        let cf = amplitudes_closed_form(&p, Level::Lower, 4, 2, 0.7).unwrap();
        assert!(s.max_deviation(&cf) < 1e-10);
        let x = QuantizedParams::cascade(0.1).unwrap();
        let s = amplitudes_spectral(&x, Level::Upper, 0, 35, 3.0).unwrap();
        let cf = amplitudes_closed_form(&x, Level::Upper, 0, 35, 3.0).unwrap();
        assert!(s.max_deviation(&cf) < 1e-10);
        for cfg in Configuration::ALL {
            let q = if cfg == Configuration::Cascade { x } else { p };
            for level in Level::ALL {
                let s = amplitudes_spectral(&q, level, 2, 3, 0.0).unwrap();
                for k in 0..3 {
                    let want = if k == s.start { 1.0 } else { 0.0 };
                    assert!((s.amplitudes[k] - c(want, 0.0)).norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn negative_time_rejected() {
        let p = QuantizedParams::cascade(0.1).unwrap();
        assert!(amplitudes_closed_form(&p, Level::Upper, 0, 3, -1.0).is_err());
        assert!(amplitudes_spectral(&p, Level::Upper, 0, 3, f64::NAN).is_err());
    }
}
