use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Pass iff `residual <= absolute + relative * scale`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub absolute: f64,
    pub relative: f64,
}

impl Tolerance {
    pub const fn new(absolute: f64, relative: f64) -> Self {
        Self { absolute, relative }
    }

    pub const fn absolute(absolute: f64) -> Self {
        Self::new(absolute, 0.0)
    }

    pub fn accepts(&self, residual: f64, scale: f64) -> bool {
        residual <= self.absolute + self.relative * scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::new(1e-10, 1e-12)
    }
}

/// Campaign seed; trial `i` runs on `value + i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    pub fn derive(self, trial: u64) -> Seed {
        Seed(self.0.wrapping_add(trial))
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}
