//! Coherent-state cavity fields truncated in photon number.

use crate::{c, Error, Result, C64};

/// One or two coherent modes; the single-mode cascade uses `alpha_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentField {
    pub alpha_m: C64,
    pub alpha_n: C64,
    /// Largest photon number kept per mode.
    pub cutoff: usize,
}

/// `ceil(nbar + 10 sqrt(nbar))`.
pub fn default_cutoff(nbar: f64) -> usize {
    (nbar + 10.0 * nbar.sqrt()).ceil().max(1.0) as usize
}

impl CoherentField {
    pub fn new(alpha_m: C64, alpha_n: C64, cutoff: usize) -> Result<Self> {
        if !(alpha_m.re.is_finite() && alpha_m.im.is_finite() && alpha_n.re.is_finite() && alpha_n.im.is_finite()) {
            return Err(Error::Argument("coherent amplitudes must be finite".into()));
        }
        Ok(CoherentField { alpha_m, alpha_n, cutoff })
    }

    /// Two-mode field with the cutoff chosen from the larger mean photon number.
    pub fn with_default_cutoff(alpha_m: C64, alpha_n: C64) -> Result<Self> {
        let nbar = alpha_m.norm_sqr().max(alpha_n.norm_sqr());
        Self::new(alpha_m, alpha_n, default_cutoff(nbar))
    }

    pub fn single_mode(alpha: C64, cutoff: usize) -> Result<Self> {
        Self::new(c(0.0, 0.0), alpha, cutoff)
    }

    pub fn single_mode_default(alpha: C64) -> Result<Self> {
        Self::single_mode(alpha, default_cutoff(alpha.norm_sqr()))
    }

    pub fn nbar_m(&self) -> f64 {
        self.alpha_m.norm_sqr()
    }

    pub fn nbar_n(&self) -> f64 {
        self.alpha_n.norm_sqr()
    }

    pub fn coefficients_m(&self) -> Vec<C64> {
        coherent_coefficients(self.alpha_m, self.cutoff)
    }

    pub fn coefficients_n(&self) -> Vec<C64> {
        coherent_coefficients(self.alpha_n, self.cutoff)
    }
}

/// `C_k = exp(-|alpha|^2/2) alpha^k / sqrt(k!)` for `k = 0..=cutoff`, in log
/// space so large mean photon numbers do not underflow.
pub fn coherent_coefficients(alpha: C64, cutoff: usize) -> Vec<C64> {
    let mut out = vec![c(0.0, 0.0); cutoff + 1];
    let r = alpha.norm();
    if r == 0.0 {
        out[0] = c(1.0, 0.0);
        return out;
    }
    let (ln_r, arg) = (r.ln(), alpha.arg());
    let mut ln_fact = 0.0;
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            ln_fact += (k as f64).ln();
        }
        let kf = k as f64;
        let mag = (-0.5 * r * r + kf * ln_r - 0.5 * ln_fact).exp();
        *slot = C64::from_polar(mag, kf * arg);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poisson_weights() {
        let nbar: f64 = 30.0;
        let cs = coherent_coefficients(c(nbar.sqrt(), 0.0), default_cutoff(nbar));
        let p: Vec<f64> = cs.iter().map(|z| z.norm_sqr()).collect();
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-10);
        let mean: f64 = p.iter().enumerate().map(|(k, w)| k as f64 * w).sum();
        assert!((mean - nbar).abs() < 1e-8);
        // direct product formula for a small index
        let direct = (-nbar / 2.0).exp() * nbar.sqrt().powi(3) / 6f64.sqrt();
        assert!((cs[3].re - direct).abs() < 1e-15);
    }

    #[test]
    fn phase_and_vacuum() {
        let cs = coherent_coefficients(c(0.0, 2.0), 40);
        assert!((cs[1].arg() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        let v = coherent_coefficients(c(0.0, 0.0), 5);
        assert_eq!(v[0], c(1.0, 0.0));
        assert!(v[1..].iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn default_cutoffs() {
        assert_eq!(default_cutoff(35.0), 95);
        assert_eq!(default_cutoff(30.0), 85);
        assert_eq!(default_cutoff(0.0), 1);
        let f = CoherentField::with_default_cutoff(c(30f64.sqrt(), 0.0), c(20f64.sqrt(), 0.0)).unwrap();
        assert_eq!(f.cutoff, 85);
    }
}
