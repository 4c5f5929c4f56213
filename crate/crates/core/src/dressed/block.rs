use super::QuantizedParams;
use crate::{c, ComplexMatrix3, Configuration, Error, Level, Result};
use nalgebra::Matrix3;

/// Bare atom-field state `|m, n, level>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisState {
    pub level: Level,
    pub m: i64,
    pub n: i64,
}

/// One closed three-state block of the interaction Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub config: Configuration,
    pub initial_level: Level,
    pub m: u32,
    pub n: u32,
    /// Real symmetric coupling matrix in slot order `|+>, |0>, |->`.
    pub hamiltonian: Matrix3<f64>,
    pub states: [BasisState; 3],
}

impl Block {
    /// Slot of the initial state.
    pub fn start(&self) -> usize {
        self.initial_level.index()
    }

    pub fn omega(&self) -> f64 {
        let h = &self.hamiltonian;
        (h[(0, 1)].powi(2) + h[(0, 2)].powi(2) + h[(1, 2)].powi(2)).sqrt()
    }
}

fn state(level: Level, m: i64, n: i64) -> BasisState {
    BasisState { level, m, n }
}

/// Builds the block reached from `|m, n, level>` (cascade: `|n, level>`).
///
/// Fails when a bare state with a negative photon number would carry a
/// nonzero coupling, e.g. the lambda lower-level block at `m = 0`.
pub fn block(p: &QuantizedParams, level: Level, m: u32, n: u32) -> Result<Block> {
    let (mi, ni) = (m as i64, n as i64);
    let (g1, g2) = (p.g1, p.g2);
    let mut h = Matrix3::zeros();
    let root = |k: i64| -> Result<f64> {
        if k < 0 {
            Err(Error::Domain(format!("{:?} {:?} block at (m={m}, n={n}) needs sqrt of {k}", p.config, level)))
        } else {
            Ok((k as f64).sqrt())
        }
    };
    let states = match p.config {
        Configuration::Lambda => {
            // keyed by the |+> slot (a, b); |0> = (a, b+1), |-> = (a+1, b)
            let (a, b) = match level {
                Level::Lower => (mi - 1, ni),
                Level::Middle => (mi, ni - 1),
                Level::Upper => (mi, ni),
            };
            h[(0, 1)] = g2 * root(b + 1)?;
            h[(0, 2)] = g1 * root(a + 1)?;
            [state(Level::Upper, a, b), state(Level::Middle, a, b + 1), state(Level::Lower, a + 1, b)]
        }
        Configuration::Vee => {
            // keyed by the |-> slot (a, b); |+> = (a-1, b), |0> = (a, b-1)
            let (a, b) = match level {
                Level::Lower => (mi, ni),
                Level::Middle => (mi, ni + 1),
                Level::Upper => (mi + 1, ni),
            };
            h[(0, 2)] = g1 * root(a)?;
            h[(1, 2)] = g2 * root(b)?;
            [state(Level::Upper, a - 1, b), state(Level::Middle, a, b - 1), state(Level::Lower, a, b)]
        }
        Configuration::Cascade => {
            // keyed by the |-> photon number k; |0> = k-1, |+> = k-2
            let k = match level {
                Level::Lower => ni,
                Level::Middle => ni + 1,
                Level::Upper => ni + 2,
            };
            h[(0, 1)] = g1 * root(k - 1)?;
            h[(1, 2)] = g1 * root(k)?;
            [state(Level::Upper, 0, k - 2), state(Level::Middle, 0, k - 1), state(Level::Lower, 0, k)]
        }
    };
    let hs = h + h.transpose();
    for (slot, st) in states.iter().enumerate() {
        let touched = (0..3).any(|o| o != slot && hs[(slot, o)] != 0.0);
        if (st.m < 0 || st.n < 0) && touched {
            return Err(Error::Domain(format!(
                "{:?} {:?} block at (m={m}, n={n}) couples a state with negative photon number",
                p.config, level
            )));
        }
    }
    Ok(Block { config: p.config, initial_level: level, m, n, hamiltonian: hs, states })
}

pub fn number_state_hamiltonian(p: &QuantizedParams, level: Level, m: u32, n: u32) -> Result<ComplexMatrix3> {
    Ok(block(p, level, m, n)?.hamiltonian.map(|x| c(x, 0.0)))
}

/// Block Rabi frequency `Omega` (eigenvalues are `-Omega, 0, Omega`).
pub fn rabi_frequency(p: &QuantizedParams, level: Level, m: u32, n: u32) -> Result<f64> {
    let (m, n) = (m as f64, n as f64);
    let (g1, g2) = (p.g1, p.g2);
    let sq = match (p.config, level) {
        (Configuration::Lambda, Level::Lower) => g1 * g1 * m + g2 * g2 * (n + 1.0),
        (Configuration::Lambda, Level::Middle) => g1 * g1 * (m + 1.0) + g2 * g2 * n,
        (Configuration::Lambda, Level::Upper) => g1 * g1 * (m + 1.0) + g2 * g2 * (n + 1.0),
        (Configuration::Vee, Level::Lower) => g1 * g1 * m + g2 * g2 * n,
        (Configuration::Vee, Level::Middle) => g1 * g1 * m + g2 * g2 * (n + 1.0),
        (Configuration::Vee, Level::Upper) => g1 * g1 * (m + 1.0) + g2 * g2 * n,
        (Configuration::Cascade, Level::Lower) => g1 * g1 * (2.0 * n - 1.0),
        (Configuration::Cascade, Level::Middle) => g1 * g1 * (2.0 * n + 1.0),
        (Configuration::Cascade, Level::Upper) => g1 * g1 * (2.0 * n + 3.0),
    };
    if sq < 0.0 {
        return Err(Error::Domain(format!("negative squared Rabi frequency {sq}")));
    }
    Ok(sq.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_lower_entries() {
        let p = QuantizedParams::new(Configuration::Lambda, 0.7, 0.3).unwrap();
        let h = number_state_hamiltonian(&p, Level::Lower, 4, 2).unwrap();
        assert!((h[(0, 1)].re - 0.3 * 3f64.sqrt()).abs() < 1e-15);
        assert!((h[(0, 2)].re - 0.7 * 2.0).abs() < 1e-15);
        assert_eq!(h[(1, 2)].re, 0.0);
        let b = block(&p, Level::Lower, 4, 2).unwrap();
        assert_eq!(b.states[2], BasisState { level: Level::Lower, m: 4, n: 2 });
        assert_eq!(b.states[1], BasisState { level: Level::Middle, m: 3, n: 3 });
        assert_eq!(b.states[0], BasisState { level: Level::Upper, m: 3, n: 2 });
    }

    #[test]
    fn cascade_middle_entries() {
        let p = QuantizedParams::cascade(1.0).unwrap();
        let h = number_state_hamiltonian(&p, Level::Middle, 0, 5).unwrap();
        assert!((h[(0, 1)].re - 5f64.sqrt()).abs() < 1e-15);
        assert!((h[(1, 2)].re - 6f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn uncoupled_vee_is_zero() {
        let p = QuantizedParams::new(Configuration::Vee, 0.0, 0.0).unwrap();
        assert_eq!(number_state_hamiltonian(&p, Level::Upper, 3, 1).unwrap(), ComplexMatrix3::zeros());
    }

    #[test]
    fn domain_errors() {
        let l = QuantizedParams::new(Configuration::Lambda, 1.0, 1.0).unwrap();
        assert!(matches!(block(&l, Level::Lower, 0, 3), Err(Error::Domain(_))));
        assert!(matches!(block(&l, Level::Middle, 3, 0), Err(Error::Domain(_))));
        let x = QuantizedParams::cascade(1.0).unwrap();
        assert!(matches!(block(&x, Level::Lower, 0, 0), Err(Error::Domain(_))));
        assert!(block(&x, Level::Lower, 0, 1).is_ok());
        let v = QuantizedParams::new(Configuration::Vee, 1.0, 1.0).unwrap();
        assert!(block(&v, Level::Lower, 0, 0).is_ok());
    }

    #[test]
    fn rabi_examples() {
        let l = QuantizedParams::new(Configuration::Lambda, 1.0, 1.0).unwrap();
        assert!((rabi_frequency(&l, Level::Lower, 1, 0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        let x = QuantizedParams::cascade(1.0).unwrap();
        assert!((rabi_frequency(&x, Level::Lower, 0, 1).unwrap() - 1.0).abs() < 1e-15);
        let x = QuantizedParams::cascade(0.1).unwrap();
        assert!((rabi_frequency(&x, Level::Upper, 0, 35).unwrap() - 0.1 * 73f64.sqrt()).abs() < 1e-15);
        assert!(rabi_frequency(&x, Level::Lower, 0, 0).is_err());
    }

    #[test]
    fn rabi_matches_block_norm() {
        for cfg in Configuration::ALL {
            let p = if cfg == Configuration::Cascade {
                QuantizedParams::cascade(0.37).unwrap()
            } else {
                QuantizedParams::new(cfg, 0.37, 0.81).unwrap()
            };
            for level in Level::ALL {
                for (m, n) in [(1, 1), (3, 7), (10, 2)] {
                    let b = block(&p, level, m, n).unwrap();
                    assert!((b.omega() - rabi_frequency(&p, level, m, n).unwrap()).abs() < 1e-14);
                }
            }
        }
    }
}
