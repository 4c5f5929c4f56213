//! Rotating-frame Hamiltonians, 8x8 Bloch generators and Bloch-vector flow.
//!
//! Sign convention: the tabulated generators produce `dS/dt = M S` for
//! `rho(t) = exp(iHt) rho(0) exp(-iHt)`, i.e. `d rho/dt = i[H, rho]`.
//! [`liouville_oracle`] uses the same convention so both routes agree.

use crate::su3::{gell_mann_all, structure_constants};
use crate::{c, ComplexMatrix3, Configuration, Error, Result};
use nalgebra::{SMatrix, SVector};

pub type BlochVector8 = SVector<f64, 8>;
pub type BlochMatrix = SMatrix<f64, 8, 8>;

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiclassicalParams {
    pub config: Configuration,
    pub kappa1: f64,
    pub kappa2: f64,
    pub delta1: f64,
    pub delta2: f64,
}

impl SemiclassicalParams {
    pub fn new(config: Configuration, kappa1: f64, kappa2: f64, delta1: f64, delta2: f64) -> Result<Self> {
        if ![kappa1, kappa2, delta1, delta2].iter().all(|x| x.is_finite()) {
            return Err(Error::Argument("couplings and detunings must be finite".into()));
        }
        Ok(SemiclassicalParams { config, kappa1, kappa2, delta1, delta2 })
    }

    pub fn resonant(config: Configuration, kappa1: f64, kappa2: f64) -> Self {
        SemiclassicalParams { config, kappa1, kappa2, delta1: 0.0, delta2: 0.0 }
    }

    pub fn is_resonant(&self) -> bool {
        self.delta1 == 0.0 && self.delta2 == 0.0
    }
}

/// Time-independent rotating-frame Hamiltonian (hbar = 1).
pub fn rotating_frame_hamiltonian(p: &SemiclassicalParams) -> ComplexMatrix3 {
    let (k1, k2, d1, d2) = (p.kappa1, p.kappa2, p.delta1, p.delta2);
    let m = match p.config {
        Configuration::Lambda => nalgebra::Matrix3::new(
            (d1 + d2) / 3.0, k2, k1,
            k2, (d1 - 2.0 * d2) / 3.0, 0.0,
            k1, 0.0, (d2 - 2.0 * d1) / 3.0,
        ),
        Configuration::Vee => nalgebra::Matrix3::new(
            (2.0 * d1 - d2) / 3.0, 0.0, k1,
            0.0, (2.0 * d2 - d1) / 3.0, k2,
            k1, k2, -(d1 + d2) / 3.0,
        ),
        Configuration::Cascade => nalgebra::Matrix3::new(
            (d1 + 2.0 * d2) / 3.0, k2, 0.0,
            k2, (d1 - d2) / 3.0, k1,
            0.0, k1, -(2.0 * d1 + d2) / 3.0,
        ),
    };
    m.map(|x| c(x, 0.0))
}

/// Tabulated Bloch generator, rows/columns 1..8 mapped to 0..7.
pub fn bloch_matrix(p: &SemiclassicalParams) -> BlochMatrix {
    let (k1, k2, d1, d2) = (p.kappa1, p.kappa2, p.delta1, p.delta2);
    let s3 = SQRT3;
    #[rustfmt::skip]
    let rows: [[f64; 8]; 8] = match p.config {
        Configuration::Lambda => [
            [0.0, d2, 0.0, 0.0, 0.0, 0.0, -k1, 0.0],
            [-d2, 0.0, 2.0 * k2, 0.0, 0.0, -k1, 0.0, 0.0],
            [0.0, -2.0 * k2, 0.0, 0.0, -k1, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, d1, 0.0, k2, 0.0],
            [0.0, 0.0, k1, -d1, 0.0, -k2, 0.0, s3 * k1],
            [0.0, k1, 0.0, 0.0, k2, 0.0, d1 - d2, 0.0],
            [k1, 0.0, 0.0, -k2, 0.0, -(d1 - d2), 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, -s3 * k1, 0.0, 0.0, 0.0],
        ],
        Configuration::Vee => [
            [0.0, d1 - d2, 0.0, 0.0, -k2, 0.0, -k1, 0.0],
            [-(d1 - d2), 0.0, 0.0, k2, 0.0, -k1, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, -k1, 0.0, k2, 0.0],
            [0.0, -k2, 0.0, 0.0, d1, 0.0, 0.0, 0.0],
            [k2, 0.0, k1, -d1, 0.0, 0.0, 0.0, s3 * k1],
            [0.0, k1, 0.0, 0.0, 0.0, 0.0, d2, 0.0],
            [k1, 0.0, -k2, 0.0, 0.0, -d2, 0.0, s3 * k2],
            [0.0, 0.0, 0.0, 0.0, -s3 * k1, 0.0, -s3 * k2, 0.0],
        ],
        Configuration::Cascade => [
            [0.0, d2, 0.0, 0.0, -k1, 0.0, 0.0, 0.0],
            [-d2, 0.0, 2.0 * k2, k1, 0.0, 0.0, 0.0, 0.0],
            [0.0, -2.0 * k2, 0.0, 0.0, 0.0, 0.0, k1, 0.0],
            [0.0, -k1, 0.0, 0.0, d1 + d2, 0.0, k2, 0.0],
            [k1, 0.0, 0.0, -(d1 + d2), 0.0, -k2, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.0, k2, 0.0, d1, 0.0],
            [0.0, 0.0, -k1, -k2, 0.0, -d1, 0.0, s3 * k1],
            [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -s3 * k1, 0.0],
        ],
    };
    BlochMatrix::from_fn(|i, j| rows[i][j])
}

/// Generator computed from a Hamiltonian via the structure constants,
/// `M_ij = 2 sum_k f_ijk h_k` with `h_k = Tr(H l_k)/2`.
pub fn bloch_matrix_from_hamiltonian(h: &ComplexMatrix3) -> BlochMatrix {
    let l = gell_mann_all();
    let sc = structure_constants();
    let hk: [f64; 8] = std::array::from_fn(|k| (h * l[k]).trace().re / 2.0);
    BlochMatrix::from_fn(|i, j| 2.0 * (0..8).map(|k| sc.f[i][j][k] * hk[k]).sum::<f64>())
}

/// `s_i = Tr(rho l_i)`.
pub fn bloch_from_density(rho: &ComplexMatrix3) -> Result<BlochVector8> {
    let herm = (rho - rho.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    if herm > 1e-10 {
        return Err(Error::Validation(format!("density matrix not Hermitian (residual {herm:e})")));
    }
    let tr = rho.trace();
    if (tr - c(1.0, 0.0)).norm() > 1e-10 {
        return Err(Error::Validation(format!("density matrix trace {tr} != 1")));
    }
    let l = gell_mann_all();
    Ok(BlochVector8::from_fn(|i, _| (rho * l[i]).trace().re))
}

/// `rho = (I + (3/2) sum_i s_i l_i) / 3`.
pub fn density_from_bloch(s: &BlochVector8) -> ComplexMatrix3 {
    let l = gell_mann_all();
    let mut rho = ComplexMatrix3::identity() * c(1.0 / 3.0, 0.0);
    for i in 0..8 {
        rho += l[i] * c(0.5 * s[i], 0.0);
    }
    rho
}

/// `s(t) = exp(M t) s0`.
pub fn evolve_bloch(m: &BlochMatrix, s0: &BlochVector8, t: f64) -> Result<BlochVector8> {
    if !(t >= 0.0) {
        return Err(Error::Argument(format!("time must be non-negative, got {t}")));
    }
    Ok(propagator(m, t) * s0)
}

/// `exp(M t)`; valid for any real `t`.
pub fn propagator(m: &BlochMatrix, t: f64) -> BlochMatrix {
    (m * t).exp()
}

/// Density-matrix evolution `exp(iHt) rho0 exp(-iHt)` through the Hermitian
/// eigendecomposition of `h` (independent of the Bloch route).
pub fn liouville_oracle(h: &ComplexMatrix3, rho0: &ComplexMatrix3, t: f64) -> ComplexMatrix3 {
    let eig = nalgebra::SymmetricEigen::new(*h);
    let v = eig.eigenvectors;
    let phases = ComplexMatrix3::from_diagonal(&eig.eigenvalues.map(|e| c(0.0, e * t).exp()));
    let u = v * phases * v.adjoint();
    u * rho0 * u.adjoint()
}

/// `sum_{i in subset} s_i^2`, subset given with 1-based indices.
pub fn subset_sum(s: &BlochVector8, subset: &[usize]) -> f64 {
    subset.iter().map(|&i| s[i - 1] * s[i - 1]).sum()
}

/// Tabulated 3-/5-component subsets for a configuration at resonance.
pub fn tabulated_subsets(config: Configuration) -> ([usize; 3], [usize; 5]) {
    match config {
        Configuration::Lambda => ([1, 4, 7], [2, 3, 5, 6, 8]),
        Configuration::Vee => ([1, 4, 6], [2, 3, 5, 7, 8]),
        Configuration::Cascade => ([1, 5, 6], [2, 3, 4, 7, 8]),
    }
}

/// Tabulated closed forms `(three-sum, five-sum)` in the initial real
/// amplitudes, evaluated as written.
pub fn tabulated_invariant_values(config: Configuration, cm: f64, c0: f64, cp: f64) -> (f64, f64) {
    let (m2, z2, p2) = (cm * cm, c0 * c0, cp * cp);
    let norm = 4.0 / 3.0 * (m2 + z2 + p2).powi(2);
    match config {
        Configuration::Lambda | Configuration::Cascade => {
            (4.0 * m2 * z2 + 4.0 * z2 * p2, norm - 3.0 * m2 * z2 - 3.0 * z2 * p2)
        }
        Configuration::Vee => (4.0 * z2 * p2 + 4.0 * p2 * m2, norm - 3.0 * z2 * p2 - 3.0 * p2 * m2),
    }
}

/// Exact subsets of the resonant generators (the structure found by
/// [`crate::invariants::conserved_subsets`]).
pub fn exact_subsets(config: Configuration) -> ([usize; 3], [usize; 5]) {
    match config {
        Configuration::Lambda => ([1, 4, 7], [2, 3, 5, 6, 8]),
        Configuration::Vee => ([2, 4, 6], [1, 3, 5, 7, 8]),
        Configuration::Cascade => ([1, 5, 6], [2, 3, 4, 7, 8]),
    }
}

/// Correct closed forms for [`exact_subsets`] with real amplitudes: the
/// three-sum is `4 C_h^2 (C_a^2 + C_b^2)` where `h` is the level coupled to
/// both others (`|+>` lambda, `|->` vee, `|0>` cascade).
pub fn exact_invariant_values(config: Configuration, cm: f64, c0: f64, cp: f64) -> (f64, f64) {
    let (m2, z2, p2) = (cm * cm, c0 * c0, cp * cp);
    let (h, a, b) = match config {
        Configuration::Lambda => (p2, z2, m2),
        Configuration::Vee => (m2, p2, z2),
        Configuration::Cascade => (z2, m2, p2),
    };
    let three = 4.0 * h * (a + b);
    (three, 4.0 / 3.0 * (m2 + z2 + p2).powi(2) - three)
}

/// Bloch vector of a pure state with amplitudes on `|+>, |0>, |->`.
pub fn bloch_from_amplitudes(cp: crate::C64, c0: crate::C64, cm: crate::C64) -> BlochVector8 {
    let psi = nalgebra::Vector3::new(cp, c0, cm);
    let rho = psi * psi.adjoint();
    let l = gell_mann_all();
    BlochVector8::from_fn(|i, _| (rho * l[i]).trace().re)
}
