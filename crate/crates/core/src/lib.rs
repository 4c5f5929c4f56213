//! Three-level atoms (lambda, vee, cascade) in the SU(3) basis.
//!
//! Semiclassical Bloch dynamics and their quadratic invariants, the
//! four-angle qutrit, dressed-state solutions of the quantized atom-field
//! blocks, and entropy / inversion / collapse-revival analysis.
//!
//! Basis ordering everywhere is `|+>, |0>, |->` (index 0, 1, 2).

pub mod bloch;
pub mod dressed;
pub mod field;
pub mod invariants;
pub mod observables;
pub mod qutrit;
pub mod revival;
pub mod su3;

pub use num_complex::Complex64 as C64;

/// 3x3 complex matrix: Hamiltonians, density matrices, unitaries.
pub type ComplexMatrix3 = nalgebra::Matrix3<C64>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("argument error: {0}")]
    Argument(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Level topology of the atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Configuration {
    Lambda,
    Vee,
    Cascade,
}

impl Configuration {
    pub const ALL: [Configuration; 3] =
        [Configuration::Lambda, Configuration::Vee, Configuration::Cascade];

    pub fn name(self) -> &'static str {
        match self {
            Configuration::Lambda => "lambda",
            Configuration::Vee => "vee",
            Configuration::Cascade => "cascade",
        }
    }
}

impl std::str::FromStr for Configuration {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lambda" => Ok(Configuration::Lambda),
            "vee" | "v" => Ok(Configuration::Vee),
            "cascade" | "xi" | "ladder" => Ok(Configuration::Cascade),
            _ => Err(Error::Argument(format!("unknown configuration '{s}'"))),
        }
    }
}

/// Atomic level; also names the initial condition of a dressed block
/// (lower = `|->`, middle = `|0>`, upper = `|+>`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Level {
    Lower,
    Middle,
    Upper,
}

impl Level {
    pub const ALL: [Level; 3] = [Level::Lower, Level::Middle, Level::Upper];

    /// Index in the `|+>, |0>, |->` ordering.
    pub fn index(self) -> usize {
        match self {
            Level::Upper => 0,
            Level::Middle => 1,
            Level::Lower => 2,
        }
    }

    pub fn from_index(i: usize) -> Level {
        match i {
            0 => Level::Upper,
            1 => Level::Middle,
            _ => Level::Lower,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Level::Lower => "-",
            Level::Middle => "0",
            Level::Upper => "+",
        }
    }
}

pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
