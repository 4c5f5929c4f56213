//! Dressed-state solution of the resonant quantized lambda, vee and cascade
//! atoms: number-state blocks, Euler-angle diagonalization, per-block
//! amplitudes and the superposed atom-field state.
//!
//! Every block is written in the slot order `|+>, |0>, |->` of the atomic
//! level occupied by each bare state. Photon labels are `(m, n)` for the two
//! modes; the single-mode cascade keeps its photon number in `n` and `m = 0`.

mod amplitudes;
mod block;
mod entangled;
mod euler;

pub use amplitudes::{amplitudes_closed_form, amplitudes_spectral, AmplitudeTriple};
pub use block::{block, number_state_hamiltonian, rabi_frequency, BasisState, Block};
pub use entangled::{entangled_amplitudes, EntangledEvolver, EntangledState};
pub use euler::{euler_matrix, euler_solution, tabulated_euler_angles, DressedBasisSolution};

use crate::{Configuration, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantizedParams {
    pub config: Configuration,
    pub g1: f64,
    pub g2: f64,
}

impl QuantizedParams {
    /// The cascade is equidistant and single-mode, so it needs `g1 == g2`.
    pub fn new(config: Configuration, g1: f64, g2: f64) -> Result<Self> {
        if !g1.is_finite() || !g2.is_finite() {
            return Err(Error::Argument("couplings must be finite".into()));
        }
        if config == Configuration::Cascade && g1 != g2 {
            return Err(Error::Argument(format!("cascade requires g1 == g2 (got {g1}, {g2})")));
        }
        Ok(QuantizedParams { config, g1, g2 })
    }

    pub fn cascade(g: f64) -> Result<Self> {
        Self::new(Configuration::Cascade, g, g)
    }
}
