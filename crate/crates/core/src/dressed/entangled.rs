use super::amplitudes::{closed_form, ClosedForm};
use super::block::block;
use super::QuantizedParams;
use crate::field::CoherentField;
use crate::qutrit::StateVector3;
use crate::{c, Configuration, Error, Level, Result, C64};
use ndarray::Array3;

/// Atom-field amplitudes `C^i_{m,n}(t)` on a truncated photon grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EntangledState {
    pub config: Configuration,
    pub t: f64,
    /// Indexed `[level.index(), m, n]` (level order `|+>, |0>, |->`).
    pub amplitudes: Array3<C64>,
    /// `1 - sum |C|^2`, the weight lost to the photon cutoff.
    pub norm_deficit: f64,
}

impl EntangledState {
    pub fn amplitude(&self, level: Level, m: usize, n: usize) -> C64 {
        self.amplitudes.get((level.index(), m, n)).copied().unwrap_or(c(0.0, 0.0))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Deficits above `1e-6` mean the cutoff is too small.
    pub fn truncation_warning(&self) -> bool {
        self.norm_deficit > 1e-6
    }
}

struct Term {
    weight: C64,
    form: ClosedForm,
    targets: [Option<(usize, usize, usize)>; 3],
}

/// Precomputed block superposition for a fixed atom, field and coupling set;
/// evaluating at many times only needs one `sin`/`cos` per term.
pub struct EntangledEvolver {
    config: Configuration,
    shape: (usize, usize, usize),
    terms: Vec<Term>,
    initial_deficit: f64,
}

impl EntangledEvolver {
    pub fn new(p: &QuantizedParams, atom0: &StateVector3, field: &CoherentField) -> Result<Self> {
        let na = atom0.norm_sqr();
        if (na - 1.0).abs() > 1e-10 {
            return Err(Error::Validation(format!("atomic state not normalized (|c|^2 = {na})")));
        }
        let cn = field.coefficients_n();
        let single = p.config == Configuration::Cascade;
        let cm = if single { vec![c(1.0, 0.0)] } else { field.coefficients_m() };
        let shape = (3, if single { 1 } else { field.cutoff + 3 }, field.cutoff + 3);
        let mut terms = Vec::new();
        let mut kept = 0.0;
        for level in Level::ALL {
            let ca = atom0.amplitude(level);
            if ca.norm() == 0.0 {
                continue;
            }
            for (m, &wm) in cm.iter().enumerate() {
                for (n, &wn) in cn.iter().enumerate() {
                    let weight = ca * wm * wn;
                    kept += weight.norm_sqr();
                    if weight.norm() == 0.0 {
                        continue;
                    }
                    let (m32, n32) = (m as u32, n as u32);
                    match block(p, level, m32, n32) {
                        Ok(b) => {
                            let form = closed_form(p, level, m32, n32)?;
                            let targets = std::array::from_fn(|k| {
                                let s = b.states[k];
                                (s.m >= 0 && s.n >= 0).then(|| (s.level.index(), s.m as usize, s.n as usize))
                            });
                            terms.push(Term { weight, form, targets });
                        }
                        // a start whose own coupling vanishes and whose block is cut off is stationary
                        Err(Error::Domain(_)) => {
                            let mut a = [0.0; 3];
                            a[level.index()] = 1.0;
                            let mut targets = [None; 3];
                            targets[level.index()] = Some((level.index(), m, n));
                            let form = ClosedForm { omega: 0.0, a, b: [0.0; 3], s: [0.0; 3] };
                            terms.push(Term { weight, form, targets });
                        }
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Ok(EntangledEvolver { config: p.config, shape, terms, initial_deficit: 1.0 - kept })
    }

    pub fn state(&self, t: f64) -> Result<EntangledState> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Argument(format!("time must be finite and non-negative, got {t}")));
        }
        let mut amps = Array3::from_elem(self.shape, c(0.0, 0.0));
        for term in &self.terms {
            let d = term.form.eval(t);
            for (k, target) in term.targets.iter().enumerate() {
                if let Some(idx) = *target {
                    amps[idx] += term.weight * d[k];
                }
            }
        }
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        Ok(EntangledState { config: self.config, t, amplitudes: amps, norm_deficit: 1.0 - norm })
    }

    /// Weight of the initial product state lost to the cutoff.
    pub fn initial_deficit(&self) -> f64 {
        self.initial_deficit
    }
}

/// Atom-field state at time `t` for a product initial state
/// `atom0 (x) |alpha_m> (x) |alpha_n>`.
pub fn entangled_amplitudes(
    p: &QuantizedParams,
    atom0: &StateVector3,
    field: &CoherentField,
    t: f64,
) -> Result<EntangledState> {
    EntangledEvolver::new(p, atom0, field)?.state(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::coherent_coefficients;

    #[test]
    fn factorized_start() {
        let p = QuantizedParams::new(Configuration::Lambda, 0.2, 0.1).unwrap();
        let f = CoherentField::new(c(2.0, 0.0), c(1.5, 0.0), 30).unwrap();
        let s = entangled_amplitudes(&p, &StateVector3::basis(Level::Lower), &f, 0.0).unwrap();
        let (cm, cn) = (f.coefficients_m(), f.coefficients_n());
        for m in 0..=30 {
            for n in 0..=30 {
                assert!((s.amplitude(Level::Lower, m, n) - cm[m] * cn[n]).norm() < 1e-15);
                assert_eq!(s.amplitude(Level::Middle, m, n), c(0.0, 0.0));
                assert_eq!(s.amplitude(Level::Upper, m, n), c(0.0, 0.0));
            }
        }
        assert!(s.norm_deficit.abs() < 1e-10);
    }

    #[test]
    fn cascade_middle_start_carries_cosine_term() {
        let g = 0.1;
        let p = QuantizedParams::cascade(g).unwrap();
        let f = CoherentField::single_mode_default(c(35f64.sqrt(), 0.0)).unwrap();
        let t = 13.0;
        let s = entangled_amplitudes(&p, &StateVector3::basis(Level::Middle), &f, t).unwrap();
        let cn = coherent_coefficients(f.alpha_n, f.cutoff);
        for n in [20usize, 35, 50] {
            let om = g * (2.0 * n as f64 + 1.0).sqrt();
            assert!((s.amplitude(Level::Middle, 0, n) - cn[n] * (om * t).cos()).norm() < 1e-15);
        }
    }

    #[test]
    fn unitarity_at_default_cutoff() {
        let p = QuantizedParams::cascade(0.1).unwrap();
        let f = CoherentField::single_mode_default(c(35f64.sqrt(), 0.0)).unwrap();
        let ev = EntangledEvolver::new(&p, &StateVector3::basis(Level::Lower), &f).unwrap();
        let n0 = ev.state(0.0).unwrap().norm_sqr();
        for t in [10.0, 250.0, 900.0] {
            let s = ev.state(t).unwrap();
            assert!((s.norm_sqr() - n0).abs() <= 1e-8);
            assert!(!s.truncation_warning());
        }
    }

    #[test]
    fn small_cutoff_warns() {
        let p = QuantizedParams::cascade(0.1).unwrap();
        let f = CoherentField::single_mode(c(35f64.sqrt(), 0.0), 20).unwrap();
        let s = entangled_amplitudes(&p, &StateVector3::basis(Level::Upper), &f, 5.0).unwrap();
        assert!(s.truncation_warning());
    }

    #[test]
    fn stationary_starts() {
        // vacuum in mode 1 leaves the lambda lower level uncoupled
        let p = QuantizedParams::new(Configuration::Lambda, 0.5, 0.5).unwrap();
        let f = CoherentField::new(c(0.0, 0.0), c(1.0, 0.0), 20).unwrap();
        let s = entangled_amplitudes(&p, &StateVector3::basis(Level::Lower), &f, 7.0).unwrap();
        let cn = f.coefficients_n();
        for n in 0..=20 {
            assert!((s.amplitude(Level::Lower, 0, n) - cn[n]).norm() < 1e-15);
        }
    }
}
