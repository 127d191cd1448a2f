use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::HermitianWeighting;
use crate::error::Error;
use crate::graph::Graph;

/// Distribution of each edge weight in [`random_weighting`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightLaw {
    /// `e^{iθ}`, θ uniform.
    UnitComplex,
    /// Standard normal, real.
    GaussianReal,
    /// `(X + iY)/√2` with independent standard normals.
    GaussianComplex,
}

impl WeightLaw {
    pub const ALL: [WeightLaw; 3] =
        [WeightLaw::UnitComplex, WeightLaw::GaussianReal, WeightLaw::GaussianComplex];

    pub(crate) fn sample<R: Rng>(self, rng: &mut R) -> Complex64 {
        match self {
            WeightLaw::UnitComplex => {
                Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
            }
            WeightLaw::GaussianReal => Complex64::new(rng.sample(StandardNormal), 0.0),
            WeightLaw::GaussianComplex => {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im) / std::f64::consts::SQRT_2
            }
        }
    }
}

impl fmt::Display for WeightLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightLaw::UnitComplex => "unit-complex",
            WeightLaw::GaussianReal => "gaussian-real",
            WeightLaw::GaussianComplex => "gaussian-complex",
        })
    }
}

impl FromStr for WeightLaw {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "unit-complex" => Ok(WeightLaw::UnitComplex),
            "gaussian-real" => Ok(WeightLaw::GaussianReal),
            "gaussian-complex" => Ok(WeightLaw::GaussianComplex),
            other => Err(Error::InvalidInput(format!("unknown weight law {other:?}"))),
        }
    }
}

/// Independent weight per edge, drawn in lexicographic edge order.
pub fn random_weighting(g: &Graph, seed: u64, law: WeightLaw) -> HermitianWeighting {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries: Vec<_> = g.edges().map(|(i, j)| (i, j, law.sample(&mut rng))).collect();
    HermitianWeighting::from_entries(g.clone(), entries).expect("edges of the host")
}
