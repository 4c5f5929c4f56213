//! Reduced atomic density matrix, atomic entropy and population inversions.

use crate::dressed::{EntangledEvolver, EntangledState, QuantizedParams};
use crate::field::CoherentField;
use crate::qutrit::StateVector3;
use crate::{c, ComplexMatrix3, Error, Result};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyBase {
    #[default]
    Natural,
    Two,
}

impl EntropyBase {
    fn log(self, x: f64) -> f64 {
        match self {
            EntropyBase::Natural => x.ln(),
            EntropyBase::Two => x.log2(),
        }
    }
}

/// Time series of entropy and the three inversions.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableSeries {
    pub times: Vec<f64>,
    pub entropy: Vec<f64>,
    pub w12: Vec<f64>,
    pub w23: Vec<f64>,
    pub w13: Vec<f64>,
    pub base: EntropyBase,
    /// Largest `1 - norm` seen over the grid.
    pub max_norm_deficit: f64,
}

impl ObservableSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn truncation_warning(&self) -> bool {
        self.max_norm_deficit > 1e-6
    }
}

/// `rho_A[i][j] = sum_{m,n} C^i_{m,n} conj(C^j_{m,n})`.
pub fn reduced_atomic_density(s: &EntangledState) -> ComplexMatrix3 {
    let a = &s.amplitudes;
    ComplexMatrix3::from_fn(|i, j| {
        a.index_axis(ndarray::Axis(0), i)
            .iter()
            .zip(a.index_axis(ndarray::Axis(0), j).iter())
            .map(|(x, y)| x * y.conj())
            .sum()
    })
}

/// Von Neumann entropy in nats.
pub fn atomic_entropy(rho: &ComplexMatrix3) -> Result<f64> {
    atomic_entropy_in(rho, EntropyBase::Natural)
}

/// `-sum p log p` over the eigenvalues of `rho`, `0 log 0 = 0`.
/// Eigenvalues in `[-1e-10, 0)` are treated as zero; anything more negative
/// is rejected.
pub fn atomic_entropy_in(rho: &ComplexMatrix3, base: EntropyBase) -> Result<f64> {
    let eig = nalgebra::SymmetricEigen::new(*rho).eigenvalues;
    let mut s = 0.0;
    for &p in eig.iter() {
        if p < -1e-10 {
            return Err(Error::Validation(format!("density matrix has eigenvalue {p}")));
        }
        let p = p.clamp(0.0, 1.0);
        if p > 0.0 {
            s -= p * base.log(p);
        }
    }
    Ok(s.max(0.0))
}

/// `(Tr rho T3, Tr rho U3, Tr rho V3) = (P+ - P0, P0 - P-, P+ - P-)`.
pub fn inversions_from_density(rho: &ComplexMatrix3) -> (f64, f64, f64) {
    let (pp, p0, pm) = (rho[(0, 0)].re, rho[(1, 1)].re, rho[(2, 2)].re);
    (pp - p0, p0 - pm, pp - pm)
}

pub fn population_inversions(s: &EntangledState) -> (f64, f64, f64) {
    inversions_from_density(&reduced_atomic_density(s))
}

/// `samples` evenly spaced points on `[t0, t1]`.
pub fn linspace(t0: f64, t1: f64, samples: usize) -> Vec<f64> {
    match samples {
        0 => vec![],
        1 => vec![t0],
        _ => (0..samples).map(|k| t0 + (t1 - t0) * k as f64 / (samples - 1) as f64).collect(),
    }
}

/// Entropy and inversions over a time grid, evaluated in parallel.
pub fn simulate_observables(
    p: &QuantizedParams,
    atom0: &StateVector3,
    field: &CoherentField,
    grid: &[f64],
    base: EntropyBase,
) -> Result<ObservableSeries> {
    if grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Argument("time grid must be strictly increasing".into()));
    }
    let ev = EntangledEvolver::new(p, atom0, field)?;
    let rows: Vec<Result<(f64, f64, f64, f64, f64)>> = grid
        .par_iter()
        .map(|&t| {
            let s = ev.state(t)?;
            let rho = reduced_atomic_density(&s);
            // renormalize so truncation loss does not bias the entropy
            let tr = rho.trace().re;
            let rho = rho / c(tr, 0.0);
            let (w12, w23, w13) = inversions_from_density(&rho);
            Ok((atomic_entropy_in(&rho, base)?, w12, w23, w13, s.norm_deficit))
        })
        .collect();
    let mut out = ObservableSeries {
        times: grid.to_vec(),
        entropy: Vec::with_capacity(grid.len()),
        w12: Vec::with_capacity(grid.len()),
        w23: Vec::with_capacity(grid.len()),
        w13: Vec::with_capacity(grid.len()),
        base,
        max_norm_deficit: ev.initial_deficit(),
    };
    for r in rows {
        let (e, a, b, d, def) = r?;
        out.entropy.push(e);
        out.w12.push(a);
        out.w23.push(b);
        out.w13.push(d);
        out.max_norm_deficit = out.max_norm_deficit.max(def);
    }
    Ok(out)
}
