//! Gell-Mann matrices, shift operators and structure constants of SU(3).

use crate::{c, ComplexMatrix3, Error, Result, C64};
use nalgebra::Matrix3;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Gell-Mann matrix `lambda_i`, `i` in `1..=8`.
pub fn gell_mann(i: usize) -> Result<ComplexMatrix3> {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let im = c(0.0, 1.0);
    let m = match i {
        1 => Matrix3::new(z, o, z, o, z, z, z, z, z),
        2 => Matrix3::new(z, -im, z, im, z, z, z, z, z),
        3 => Matrix3::new(o, z, z, z, -o, z, z, z, z),
        4 => Matrix3::new(z, z, o, z, z, z, o, z, z),
        5 => Matrix3::new(z, z, -im, z, z, z, im, z, z),
        6 => Matrix3::new(z, z, z, z, z, o, z, o, z),
        7 => Matrix3::new(z, z, z, z, z, -im, z, im, z),
        8 => {
            let a = c(1.0 / SQRT3, 0.0);
            Matrix3::new(a, z, z, z, a, z, z, z, -a * 2.0)
        }
        _ => return Err(Error::Argument(format!("Gell-Mann index {i} not in 1..=8"))),
    };
    Ok(m)
}

/// All eight Gell-Mann matrices, `out[k]` is `lambda_{k+1}`.
pub fn gell_mann_all() -> [ComplexMatrix3; 8] {
    std::array::from_fn(|k| gell_mann(k + 1).expect("index in range"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShiftOperatorSet {
    pub t_plus: ComplexMatrix3,
    pub t_minus: ComplexMatrix3,
    pub u_plus: ComplexMatrix3,
    pub u_minus: ComplexMatrix3,
    pub v_plus: ComplexMatrix3,
    pub v_minus: ComplexMatrix3,
    pub t3: ComplexMatrix3,
    pub u3: ComplexMatrix3,
    pub v3: ComplexMatrix3,
}

pub fn shift_operators() -> ShiftOperatorSet {
    let l = gell_mann_all();
    let i = c(0.0, 1.0);
    let half = |a: ComplexMatrix3| a * c(0.5, 0.0);
    ShiftOperatorSet {
        t_plus: half(l[0] + l[1] * i),
        t_minus: half(l[0] - l[1] * i),
        u_plus: half(l[5] + l[6] * i),
        u_minus: half(l[5] - l[6] * i),
        v_plus: half(l[3] + l[4] * i),
        v_minus: half(l[3] - l[4] * i),
        t3: l[2],
        u3: half(l[7] * c(SQRT3, 0.0) - l[2]),
        v3: half(l[7] * c(SQRT3, 0.0) + l[2]),
    }
}

/// `f` (antisymmetric) and `d` (symmetric) structure constants, stored 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    pub f: [[[f64; 8]; 8]; 8],
    pub d: [[[f64; 8]; 8]; 8],
}

impl StructureConstants {
    /// `f_ijk` with 1-based indices.
    pub fn f(&self, i: usize, j: usize, k: usize) -> f64 {
        self.f[i - 1][j - 1][k - 1]
    }

    /// `d_ijk` with 1-based indices.
    pub fn d(&self, i: usize, j: usize, k: usize) -> f64 {
        self.d[i - 1][j - 1][k - 1]
    }
}

/// `f_ijk = Tr([l_i,l_j] l_k) / 4i`, `d_ijk = Tr({l_i,l_j} l_k) / 4`.
pub fn structure_constants() -> StructureConstants {
    let l = gell_mann_all();
    let mut f = [[[0.0; 8]; 8]; 8];
    let mut d = [[[0.0; 8]; 8]; 8];
    for i in 0..8 {
        for j in 0..8 {
            let comm = l[i] * l[j] - l[j] * l[i];
            let anti = l[i] * l[j] + l[j] * l[i];
            for k in 0..8 {
                let fc: C64 = (comm * l[k]).trace() / c(0.0, 4.0);
                let dc: C64 = (anti * l[k]).trace() / 4.0;
                f[i][j][k] = snap(fc.re);
                d[i][j][k] = snap(dc.re);
            }
        }
    }
    StructureConstants { f, d }
}

// round-off from the trace products is ~1e-17; clean exact zeros
fn snap(x: f64) -> f64 {
    if x.abs() < 1e-14 {
        0.0
    } else {
        x
    }
}

/// Largest entrywise residual of `[l_i,l_j] = 2i sum_k f_ijk l_k` over all pairs.
pub fn commutator_residual(sc: &StructureConstants) -> f64 {
    let l = gell_mann_all();
    let mut worst: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let mut rhs = ComplexMatrix3::zeros();
            for k in 0..8 {
                rhs += l[k] * c(0.0, 2.0 * sc.f[i][j][k]);
            }
            let r = l[i] * l[j] - l[j] * l[i] - rhs;
            worst = worst.max(r.iter().map(|z| z.norm()).fold(0.0, f64::max));
        }
    }
    worst
}

/// Largest entrywise residual of `{l_i,l_j} = (4/3) delta_ij I + 2 sum_k d_ijk l_k`.
pub fn anticommutator_residual(sc: &StructureConstants) -> f64 {
    let l = gell_mann_all();
    let mut worst: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let mut rhs = ComplexMatrix3::zeros();
            if i == j {
                rhs += ComplexMatrix3::identity() * c(4.0 / 3.0, 0.0);
            }
            for k in 0..8 {
                rhs += l[k] * c(2.0 * sc.d[i][j][k], 0.0);
            }
            let r = l[i] * l[j] + l[j] * l[i] - rhs;
            worst = worst.max(r.iter().map(|z| z.norm()).fold(0.0, f64::max));
        }
    }
    worst
}
