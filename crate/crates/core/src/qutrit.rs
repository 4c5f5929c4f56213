//! Four-angle qutrit wavefunction and its density matrix.

use crate::su3::gell_mann_all;
use crate::{c, ComplexMatrix3, Error, Level, Result, C64};
use nalgebra::Vector3;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QutritAngles {
    theta0: f64,
    theta1: f64,
    theta2: f64,
    phi: f64,
}

impl QutritAngles {
    /// Polar angles must lie in `[0, pi]`; `phi` is reduced to `[0, 2pi)`.
    pub fn new(theta0: f64, theta1: f64, theta2: f64, phi: f64) -> Result<Self> {
        for (name, v) in [("theta0", theta0), ("theta1", theta1), ("theta2", theta2)] {
            if !(0.0..=PI).contains(&v) {
                return Err(Error::Argument(format!("{name} = {v} outside [0, pi]")));
            }
        }
        if !phi.is_finite() {
            return Err(Error::Argument(format!("phi = {phi} not finite")));
        }
        let phi = phi.rem_euclid(2.0 * PI);
        Ok(QutritAngles { theta0, theta1, theta2, phi })
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }
    pub fn theta1(&self) -> f64 {
        self.theta1
    }
    pub fn theta2(&self) -> f64 {
        self.theta2
    }
    pub fn phi(&self) -> f64 {
        self.phi
    }
}

/// Normalized amplitudes on `|->`, `|0>`, `|+>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector3 {
    pub c_minus: C64,
    pub c_zero: C64,
    pub c_plus: C64,
}

impl StateVector3 {
    pub fn new(c_minus: C64, c_zero: C64, c_plus: C64) -> Result<Self> {
        let s = StateVector3 { c_minus, c_zero, c_plus };
        let n = s.norm_sqr();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::Validation(format!("amplitudes not normalized (|c|^2 = {n})")));
        }
        Ok(s)
    }

    /// Rescales to unit norm; fails on the zero vector.
    pub fn normalized(c_minus: C64, c_zero: C64, c_plus: C64) -> Result<Self> {
        let n = (c_minus.norm_sqr() + c_zero.norm_sqr() + c_plus.norm_sqr()).sqrt();
        if !(n > 0.0) || !n.is_finite() {
            return Err(Error::Argument("amplitudes must be finite and not all zero".into()));
        }
        Ok(StateVector3 { c_minus: c_minus / n, c_zero: c_zero / n, c_plus: c_plus / n })
    }

    pub fn basis(level: Level) -> Self {
        let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
        match level {
            Level::Lower => StateVector3 { c_minus: o, c_zero: z, c_plus: z },
            Level::Middle => StateVector3 { c_minus: z, c_zero: o, c_plus: z },
            Level::Upper => StateVector3 { c_minus: z, c_zero: z, c_plus: o },
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c_minus.norm_sqr() + self.c_zero.norm_sqr() + self.c_plus.norm_sqr()
    }

    pub fn amplitude(&self, level: Level) -> C64 {
        match level {
            Level::Lower => self.c_minus,
            Level::Middle => self.c_zero,
            Level::Upper => self.c_plus,
        }
    }

    /// Column vector in `|+>, |0>, |->` order.
    pub fn to_vector(&self) -> Vector3<C64> {
        Vector3::new(self.c_plus, self.c_zero, self.c_minus)
    }

    pub fn density(&self) -> ComplexMatrix3 {
        let v = self.to_vector();
        v * v.adjoint()
    }
}

pub fn qutrit_wavefunction(a: &QutritAngles) -> StateVector3 {
    let (h0, h1, h2) = (a.theta0 / 2.0, a.theta1 / 2.0, a.theta2 / 2.0);
    StateVector3 {
        c_minus: c(h0.cos(), 0.0),
        c_zero: c(0.0, a.phi).exp() * (h0.sin() * h1.sin() * h2.sin()),
        c_plus: c(h0.sin() * h1.cos(), h0.sin() * h1.sin() * h2.cos()),
    }
}

/// `|q><q|` in `|+>, |0>, |->` order.
pub fn qutrit_density(a: &QutritAngles) -> ComplexMatrix3 {
    qutrit_wavefunction(a).density()
}

/// `sum_i Tr(rho l_i)^2`; 4/3 for every pure state.
pub fn qutrit_bloch_norm(a: &QutritAngles) -> f64 {
    let rho = qutrit_density(a);
    gell_mann_all().iter().map(|l| (rho * l).trace().re.powi(2)).sum()
}

/// State at `theta1 = theta2 = pi`, which lives in `span{|->, |0>}`.
pub fn qubit_reduction(a: &QutritAngles) -> Result<StateVector3> {
    if (a.theta1 - PI).abs() > 1e-12 || (a.theta2 - PI).abs() > 1e-12 {
        return Err(Error::Argument("qubit reduction requires theta1 = theta2 = pi".into()));
    }
    let mut s = qutrit_wavefunction(a);
    // cos(pi/2) leaves ~6e-17 on |+>
    if s.c_plus.norm() < 1e-12 {
        s.c_plus = c(0.0, 0.0);
    }
    Ok(s)
}

/// Closed-form density entries `r[i][j] = conj(psi_i) psi_j` with
/// index 0 = `|->`, 1 = `|0>`, 2 = `|+>`, in the reference table layout
/// (which has `cos^2(theta1/2)` as its first diagonal entry).
pub fn tabulated_density_entries(a: &QutritAngles) -> [[C64; 3]; 3] {
    let (t0, t1, t2, phi) = (a.theta0, a.theta1, a.theta2, a.phi);
    let (h0, h1, h2) = (t0 / 2.0, t1 / 2.0, t2 / 2.0);
    let r11 = c(h1.cos().powi(2), 0.0);
    let r22 = c((h0.sin() * h1.sin() * h2.sin()).powi(2), 0.0);
    let r33 = c((3.0 + t1.cos() + t2.cos() - t1.cos() * t2.cos()) / 4.0 * h0.sin().powi(2), 0.0);
    let r12 = c(0.0, phi).exp() * (0.5 * t0.sin() * h1.sin() * h2.sin());
    let r23 = c(0.0, -phi).exp()
        * h0.sin().powi(2)
        * h1.sin()
        * c(h1.cos(), h1.sin() * h2.cos())
        * h2.sin();
    let r13 = c(h1.cos(), h1.sin() * h2.cos()) * (0.5 * t0.sin());
    [[r11, r12, r13], [r12.conj(), r22, r23], [r13.conj(), r23.conj(), r33]]
}
