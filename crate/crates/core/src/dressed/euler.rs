use super::block::block;
use super::QuantizedParams;
use crate::{Configuration, Level, Result};
use nalgebra::Matrix3;
use std::f64::consts::PI;

/// Orthogonal Euler matrix with `s_k = sin(a_k)`, `c_k = cos(a_k)`:
///
/// ```text
/// [ c1 c2 - c3 s2 s1    c1 s2 + c3 c2 s1   s1 s3 ]
/// [-s1 c2 - c3 s2 c1   -s1 s2 + c3 c2 c1   c1 s3 ]
/// [ s3 s2              -s3 c2              c3    ]
/// ```
pub fn euler_matrix(a1: f64, a2: f64, a3: f64) -> Matrix3<f64> {
    let (s1, c1) = a1.sin_cos();
    let (s2, c2) = a2.sin_cos();
    let (s3, c3) = a3.sin_cos();
    Matrix3::new(
        c1 * c2 - c3 * s2 * s1,
        c1 * s2 + c3 * c2 * s1,
        s1 * s3,
        -s1 * c2 - c3 * s2 * c1,
        -s1 * s2 + c3 * c2 * c1,
        c1 * s3,
        s3 * s2,
        -s3 * c2,
        c3,
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct DressedBasisSolution {
    pub config: Configuration,
    pub initial_level: Level,
    pub m: u32,
    pub n: u32,
    /// `(lambda_1, lambda_2, lambda_3) = (-Omega, 0, Omega)`.
    pub eigenvalues: [f64; 3],
    /// Mixing angles `(theta_1, theta_2, theta_3)`.
    pub euler_angles: [f64; 3],
    /// `T` with `T H T^T = diag(lambda_3, lambda_2, lambda_1)`.
    pub transform: Matrix3<f64>,
}

impl DressedBasisSolution {
    pub fn omega(&self) -> f64 {
        self.eigenvalues[2]
    }

    pub fn diagonal(&self) -> Matrix3<f64> {
        Matrix3::from_diagonal(&nalgebra::Vector3::new(
            self.eigenvalues[2],
            self.eigenvalues[1],
            self.eigenvalues[0],
        ))
    }
}

fn acos(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).acos()
}

fn angles(p: &QuantizedParams, level: Level, m: u32, n: u32, omega: f64, cascade_lower_denominator: f64) -> [f64; 3] {
    let (m, n) = (m as f64, n as f64);
    match p.config {
        Configuration::Lambda => {
            let (mm, nn) = match level {
                Level::Lower => (m, n + 1.0),
                Level::Middle => (m + 1.0, n),
                Level::Upper => (m + 1.0, n + 1.0),
            };
            let b2 = p.g2 * p.g2 * nn;
            let den = omega * omega + b2;
            [
                acos(p.g1 / omega * (mm / 2.0).sqrt()),
                -acos(-p.g2 * (nn / den).sqrt()),
                acos(-p.g2 * (2.0 * nn / den).sqrt()),
            ]
        }
        Configuration::Vee => {
            let nn = match level {
                Level::Middle => n + 1.0,
                _ => n,
            };
            [-PI / 4.0, acos(-p.g2 / omega * nn.sqrt()), -PI / 2.0]
        }
        Configuration::Cascade => match level {
            Level::Lower => [
                -acos((n / (4.0 * n - 2.0)).sqrt()),
                -acos(-((2.0 * n - 1.0) / cascade_lower_denominator).sqrt()),
                -acos(-((2.0 * n - 2.0) / (3.0 * n - 2.0)).sqrt()),
            ],
            Level::Middle => [
                -acos(((n + 1.0) / (4.0 * n + 2.0)).sqrt()),
                -acos(-((2.0 * n + 1.0) / (3.0 * n + 1.0)).sqrt()),
                -acos(-(2.0 * n / (3.0 * n + 1.0)).sqrt()),
            ],
            Level::Upper => [
                -acos(((n + 2.0) / (4.0 * n + 6.0)).sqrt()),
                -acos(-((2.0 * n + 3.0) / (3.0 * n + 4.0)).sqrt()),
                -acos(-((2.0 * n + 2.0) / (3.0 * n + 4.0)).sqrt()),
            ],
        },
    }
}

/// Reference mixing-angle table. Its cascade
/// lower-level `theta_2` carries `3n - 1` in its denominator, which does
/// not diagonalize the block; [`euler_solution`] uses `3n - 2`.
pub fn tabulated_euler_angles(p: &QuantizedParams, level: Level, m: u32, n: u32) -> Result<[f64; 3]> {
    let omega = block(p, level, m, n)?.omega();
    Ok(angles(p, level, m, n, omega, 3.0 * n as f64 - 1.0))
}

/// Eigenvalues, mixing angles and the diagonalizing orthogonal transform.
///
/// The transform is the Euler matrix evaluated with the angles in reverse
/// order, `euler_matrix(theta_3, theta_2, theta_1)`; this is the order that
/// reproduces the tabulated lambda transforms entry by entry. A block with
/// all couplings zero gets the identity and zero eigenvalues.
pub fn euler_solution(p: &QuantizedParams, level: Level, m: u32, n: u32) -> Result<DressedBasisSolution> {
    let b = block(p, level, m, n)?;
    let omega = b.omega();
    let (euler_angles, transform) = if omega == 0.0 {
        ([0.0; 3], Matrix3::identity())
    } else {
        let th = angles(p, level, m, n, omega, 3.0 * n as f64 - 2.0);
        (th, euler_matrix(th[2], th[1], th[0]))
    };
    Ok(DressedBasisSolution {
        config: p.config,
        initial_level: level,
        m,
        n,
        eigenvalues: [-omega, 0.0, omega],
        euler_angles,
        transform,
    })
}
