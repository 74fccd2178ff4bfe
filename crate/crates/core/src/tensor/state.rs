use num_complex::Complex64;

use super::{ONE, ZERO};
use crate::error::{Error, Result};

/// `2^n` amplitudes over an `n`-site register. Not required to be normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    register_size: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(register_size: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let expected = 1usize << register_size;
        if amplitudes.len() != expected {
            return Err(Error::EntryCount {
                expected,
                found: amplitudes.len(),
            });
        }
        Ok(Self {
            register_size,
            amplitudes,
        })
    }

    pub fn basis(register_size: usize, index: usize) -> Self {
        let mut amplitudes = vec![ZERO; 1 << register_size];
        amplitudes[index] = ONE;
        Self {
            register_size,
            amplitudes,
        }
    }

    /// Basis state from its bit string, site 1 first, e.g. `"110101"`.
    pub fn from_bits(bits: &str) -> Result<Self> {
        let index = usize::from_str_radix(bits, 2)
            .map_err(|_| Error::Format(format!("not a bit string: {bits:?}")))?;
        Ok(Self::basis(bits.len(), index))
    }

    pub fn register_size(&self) -> usize {
        self.register_size
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        assert_eq!(self.register_size, other.register_size);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Index of the single basis state carrying all the weight, if any.
    pub fn as_basis_state(&self, tol: f64) -> Option<usize> {
        let mut found = None;
        for (i, a) in self.amplitudes.iter().enumerate() {
            if (a - ONE).norm() <= tol {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            } else if a.norm() > tol {
                return None;
            }
        }
        found
    }

    /// Bit string of a basis state index, site 1 first.
    pub fn bits_of(register_size: usize, index: usize) -> String {
        format!("{index:0register_size$b}")
    }
}
