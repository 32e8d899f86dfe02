use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Floating-point working precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Precision {
    Double,
    #[default]
    Extended,
}

impl FromStr for Precision {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "double" | "f64" => Ok(Precision::Double),
            "extended" | "double-double" | "dd" => Ok(Precision::Extended),
            other => Err(Error::Parse(format!("unknown precision '{other}'"))),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precision::Double => f.write_str("double"),
            Precision::Extended => f.write_str("extended"),
        }
    }
}

/// Tolerances and reproducibility knobs shared by every check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub precision: Precision,
    /// Seed for modular-rank primes and sampled identities.
    pub seed: u64,
    /// Largest rounding residue accepted from the Verlinde formula.
    pub integrality_tol: f64,
    /// Largest entry of S S^* - 1 accepted.
    pub unitarity_tol: f64,
    /// Generators must vanish on the fusion variety to this accuracy.
    pub variety_tol: f64,
    /// Residual bound for the Verlinde eigenvector identity.
    pub eigen_tol: f64,
    /// Agreement of quantum dimensions with Perron-Frobenius eigenvalues.
    pub pf_tol: f64,
    /// Relative margin for positivity decisions: `d(x) > margin * (1 + |x|_1)`.
    pub sign_margin: f64,
    /// Tolerance for the sampled Weyl character identity.
    pub character_tol: f64,
    /// Verlinde triple sums are refused above this many simples.
    pub verlinde_limit: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: Precision::Extended,
            seed: 0x5eed_2024,
            integrality_tol: 1e-6,
            unitarity_tol: 1e-8,
            variety_tol: 1e-7,
            eigen_tol: 1e-8,
            pf_tol: 1e-9,
            sign_margin: 1e-8,
            character_tol: 1e-9,
            verlinde_limit: 600,
        }
    }
}

impl Config {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }
}
