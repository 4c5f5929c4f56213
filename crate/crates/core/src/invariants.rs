//! Search for conserved quadratic forms `sum_{i in T} S_i^2`.
//!
//! For an antisymmetric generator, `sum_{i in T} S_i^2` is conserved for every
//! initial state iff `M_ij = 0` for all `i in T`, `j not in T`. The minimal such
//! `T` are the connected components of the coupling graph of `M`.

use crate::bloch::{
    bloch_from_amplitudes, bloch_matrix, propagator, subset_sum, BlochMatrix, SemiclassicalParams,
};
use crate::{c, Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Non-empty, strictly increasing set of 1-based Bloch component indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantSubset {
    indices: Vec<usize>,
}

impl InvariantSubset {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() || indices.iter().any(|&i| !(1..=8).contains(&i)) {
            return Err(Error::Argument(format!("invalid component set {indices:?}")));
        }
        Ok(InvariantSubset { indices })
    }

    fn from_mask(mask: u16) -> Self {
        InvariantSubset { indices: (0..8).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect() }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn size(&self) -> usize {
        self.indices.len()
    }
}

impl fmt::Display for InvariantSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn decoupled(m: &BlochMatrix, mask: u16) -> bool {
    for i in 0..8 {
        if mask >> i & 1 == 0 {
            continue;
        }
        for j in 0..8 {
            if mask >> j & 1 == 0 && (m[(i, j)] != 0.0 || m[(j, i)] != 0.0) {
                return false;
            }
        }
    }
    true
}

/// Minimal decoupled subsets of the requested sizes, sorted by size then indices.
pub fn conserved_subsets(m: &BlochMatrix, sizes: &[usize]) -> Result<Vec<InvariantSubset>> {
    let scale = m.amax().max(1.0);
    let asym = (m + m.transpose()).amax();
    if asym > 1e-12 * scale {
        return Err(Error::Validation(format!("generator not antisymmetric (residual {asym:e})")));
    }
    let closed: Vec<u16> = (1u16..256).filter(|&mask| decoupled(m, mask)).collect();
    let mut out: Vec<InvariantSubset> = closed
        .iter()
        .filter(|&&mask| !closed.iter().any(|&other| other != mask && other & mask == other))
        .map(|&mask| InvariantSubset::from_mask(mask))
        .filter(|s| sizes.contains(&s.size()))
        .collect();
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.indices.cmp(&b.indices)));
    Ok(out)
}

/// Subsets determined by which generator entries vanish identically for the
/// given zero/nonzero pattern of couplings and detunings. Two random draws
/// preserving that pattern are combined so accidental cancellations cannot
/// split a block.
pub fn structural_conserved_subsets(
    p: &SemiclassicalParams,
    sizes: &[usize],
    seed: u64,
) -> Result<Vec<InvariantSubset>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |x: f64| if x == 0.0 { 0.0 } else { rng.random_range(0.5..2.0) * x.signum() };
    let mut pattern = BlochMatrix::zeros();
    for _ in 0..2 {
        let q = SemiclassicalParams {
            config: p.config,
            kappa1: draw(p.kappa1),
            kappa2: draw(p.kappa2),
            delta1: draw(p.delta1),
            delta2: draw(p.delta2),
        };
        pattern += bloch_matrix(&q).abs();
    }
    let structural = BlochMatrix::from_fn(|i, j| {
        if i < j {
            pattern[(i, j)].max(pattern[(j, i)])
        } else {
            -pattern[(i, j)].max(pattern[(j, i)])
        }
    });
    conserved_subsets(&structural, sizes)
}

/// Largest drift of `sum_{i in T} s_i^2` over random pure initial states and
/// `t in [0, 100 / max|M_ij|]` (or `[0, 100]` for a vanishing generator).
pub fn verify_invariant_numerically(
    m: &BlochMatrix,
    subset: &InvariantSubset,
    trials: usize,
    seed: u64,
) -> Result<f64> {
    if trials == 0 {
        return Err(Error::Argument("trials must be at least 1".into()));
    }
    let scale = m.amax();
    let t_end = if scale > 0.0 { 100.0 / scale } else { 100.0 };
    let samples = 400;
    let props: Vec<BlochMatrix> =
        (1..=samples).map(|k| propagator(m, t_end * k as f64 / samples as f64)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        let s0 = random_pure_bloch(&mut rng);
        let base = subset_sum(&s0, subset.indices());
        for u in &props {
            let s = u * s0;
            worst = worst.max((subset_sum(&s, subset.indices()) - base).abs());
        }
    }
    Ok(worst)
}

/// Bloch vector of a Haar-random pure state.
pub fn random_pure_bloch<R: Rng>(rng: &mut R) -> crate::bloch::BlochVector8 {
    let mut z = [c(0.0, 0.0); 3];
    loop {
        for v in z.iter_mut() {
            *v = c(gauss(rng), gauss(rng));
        }
        let n = z.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-8 {
            for v in z.iter_mut() {
                *v /= n;
            }
            return bloch_from_amplitudes(z[0], z[1], z[2]);
        }
    }
}

fn gauss<R: Rng>(rng: &mut R) -> f64 {
    // Box-Muller
    let u1: f64 = rng.random_range(f64::EPSILON..1.0);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Configuration;

    fn subsets(cfg: Configuration) -> Vec<Vec<usize>> {
        let m = bloch_matrix(&SemiclassicalParams::resonant(cfg, 0.8, 1.3));
        conserved_subsets(&m, &[3, 5]).unwrap().into_iter().map(|s| s.indices().to_vec()).collect()
    }

    #[test]
    fn resonant_splits() {
        assert_eq!(subsets(Configuration::Lambda), vec![vec![1, 4, 7], vec![2, 3, 5, 6, 8]]);
        assert_eq!(subsets(Configuration::Cascade), vec![vec![1, 5, 6], vec![2, 3, 4, 7, 8]]);
        assert_eq!(subsets(Configuration::Vee), vec![vec![2, 4, 6], vec![1, 3, 5, 7, 8]]);
    }

    #[test]
    fn off_resonance_only_full_set() {
        for cfg in Configuration::ALL {
            let m = bloch_matrix(&SemiclassicalParams::new(cfg, 0.8, 1.3, 0.3, 0.7).unwrap());
            let all: Vec<usize> = (1..=8).collect();
            let found = conserved_subsets(&m, &all).unwrap();
            assert_eq!(found.len(), 1);
            assert_eq!(found[0].indices(), &all[..]);
        }
    }

    #[test]
    fn rejects_non_antisymmetric() {
        let mut m = BlochMatrix::zeros();
        m[(0, 1)] = 1.0;
        assert!(matches!(conserved_subsets(&m, &[3]), Err(Error::Validation(_))));
    }

    #[test]
    fn numeric_drift_examples() {
        let t = InvariantSubset::new(vec![1, 4, 7]).unwrap();
        let res = bloch_matrix(&SemiclassicalParams::resonant(Configuration::Lambda, 1.0, 0.6));
        assert!(verify_invariant_numerically(&res, &t, 5, 1).unwrap() <= 1e-9);
        let off = bloch_matrix(&SemiclassicalParams::new(Configuration::Lambda, 1.0, 0.6, 0.3, 0.7).unwrap());
        assert!(verify_invariant_numerically(&off, &t, 5, 1).unwrap() > 1e-3);
        let full = InvariantSubset::new((1..=8).collect()).unwrap();
        assert!(verify_invariant_numerically(&off, &full, 5, 1).unwrap() <= 1e-9);
        assert!(verify_invariant_numerically(&off, &full, 0, 1).is_err());
    }

    #[test]
    fn structural_matches_numeric_search() {
        for cfg in Configuration::ALL {
            let p = SemiclassicalParams::resonant(cfg, 0.8, 1.3);
            let a = structural_conserved_subsets(&p, &[3, 5], 7).unwrap();
            let b = conserved_subsets(&bloch_matrix(&p), &[3, 5]).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn subset_validation() {
        assert!(InvariantSubset::new(vec![]).is_err());
        assert!(InvariantSubset::new(vec![0, 3]).is_err());
        assert!(InvariantSubset::new(vec![9]).is_err());
        let s = InvariantSubset::new(vec![7, 1, 4]).unwrap();
        assert_eq!(s.indices(), &[1, 4, 7]);
        assert_eq!(s.to_string(), "{1,4,7}");
    }
}
