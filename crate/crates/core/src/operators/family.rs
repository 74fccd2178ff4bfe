use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::random::gaussian_complex;
use crate::su2::{fixed_gate, FixedGate};
use crate::tensor::{frobenius_distance, DenseOperator};

/// Minimum median `||[Q(mu), Q(nu)]||_F` accepted for a built-in family.
pub const NONCOMMUTING_THRESHOLD: f64 = 0.01;
const PROBE_PAIRS: usize = 16;
const PROBE_SEED: u64 = 0x5eed_c0de;

/// Deterministic map `mu -> Q(mu)` from complex spectral parameters to 2x2
/// operators.
#[derive(Debug, Clone, PartialEq)]
pub enum QFamily {
    /// `Q(mu) = exp(mu N(mu))` with `N(mu) = cos|mu| X + sin|mu| Z`, an
    /// involution whose axis turns with `|mu|`.
    PauliExp,
    /// `Q(mu)` a pseudo-random Gaussian 2x2 matrix keyed by `mu` and `seed`.
    SeededRandom { seed: u64 },
    /// Explicit lookup table; `mu` must match an entry exactly.
    Custom(Vec<(Complex64, DenseOperator)>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QFamilyKind {
    PauliExp,
    SeededRandom,
}

impl QFamily {
    pub fn pauli_exp() -> Result<Self> {
        Self::PauliExp.checked()
    }

    pub fn seeded_random(seed: u64) -> Result<Self> {
        Self::SeededRandom { seed }.checked()
    }

    pub fn custom(table: Vec<(Complex64, DenseOperator)>) -> Result<Self> {
        if let Some((_, op)) = table.iter().find(|(_, op)| op.arity() != 1) {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: op.arity(),
            });
        }
        Ok(Self::Custom(table))
    }

    pub fn q(&self, mu: Complex64) -> Result<DenseOperator> {
        match self {
            Self::PauliExp => Ok(pauli_exp(mu)),
            Self::SeededRandom { seed } => Ok(seeded_matrix(*seed, mu)),
            Self::Custom(table) => table
                .iter()
                .find(|(key, _)| *key == mu)
                .map(|(_, op)| op.clone())
                .ok_or_else(|| Error::MissingFamilyEntry(mu.to_string())),
        }
    }

    /// Median commutator norm over a fixed set of parameter pairs.
    pub fn noncommutativity(&self) -> Result<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
        let mut norms = Vec::with_capacity(PROBE_PAIRS);
        for _ in 0..PROBE_PAIRS {
            let a = self.q(sample_mu(&mut rng))?;
            let b = self.q(sample_mu(&mut rng))?;
            norms.push(frobenius_distance(&(&a * &b), &(&b * &a))?);
        }
        norms.sort_by(f64::total_cmp);
        Ok(norms[PROBE_PAIRS / 2])
    }

    fn checked(self) -> Result<Self> {
        let median = self.noncommutativity()?;
        if median > NONCOMMUTING_THRESHOLD {
            Ok(self)
        } else {
            Err(Error::CommutingFamily(median))
        }
    }
}

/// Spectral parameter with real and imaginary parts uniform in `[-1, 1)`.
pub fn sample_mu(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn pauli_exp(mu: Complex64) -> DenseOperator {
    let (s, c) = mu.norm().sin_cos();
    let x = fixed_gate(FixedGate::X).scale(Complex64::new(c, 0.0));
    let z = fixed_gate(FixedGate::Z).scale(Complex64::new(s, 0.0));
    let axis = &x + &z;
    // N^2 = 1, so exp(mu N) = cosh(mu) + sinh(mu) N
    &DenseOperator::identity(1).scale(mu.cosh()) + &axis.scale(mu.sinh())
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn seeded_matrix(seed: u64, mu: Complex64) -> DenseOperator {
    let key = splitmix64(seed ^ splitmix64(mu.re.to_bits() ^ splitmix64(mu.im.to_bits())));
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    let half = Complex64::new(0.5, 0.0);
    let entries = (0..4).map(|_| gaussian_complex(&mut rng) * half).collect();
    DenseOperator::new(1, entries).expect("four entries")
}
