use serde::{Deserialize, Serialize};

use super::provider::OperatorProvider;
use super::scheme::{edge_tuples_3, index_scheme};
use crate::error::{Error, Result};
use crate::operators::SpectralAssignment;
use crate::random::random_state;
use crate::tensor::{apply, embed, DenseOperator, Seed, SiteTuple, StateVector};

/// Largest register for which dense `2^n x 2^n` products are formed.
pub const DENSE_SITE_LIMIT: usize = 12;

/// Default number of random vectors in matrix-free mode.
pub const DEFAULT_VECTORS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Dense,
    #[serde(rename = "matrixfree")]
    MatrixFree {
        vectors: usize,
    },
}

impl Mode {
    pub fn label(&self) -> String {
        match self {
            Mode::Dense => "dense".to_string(),
            Mode::MatrixFree { vectors } => format!("matrixfree({vectors})"),
        }
    }
}

/// `raw = ||L - R||`; `normalized = raw / ||L||` (Frobenius for dense, the
/// worst sampled vector for matrix-free).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub raw: f64,
    pub normalized: f64,
}

impl Residual {
    pub fn new(raw: f64, reference: f64) -> Self {
        let normalized = if reference > 0.0 {
            raw / reference
        } else {
            raw
        };
        Self { raw, normalized }
    }

    pub fn max(self, other: Self) -> Self {
        Self {
            raw: self.raw.max(other.raw),
            normalized: self.normalized.max(other.normalized),
        }
    }

    pub const ZERO: Residual = Residual {
        raw: 0.0,
        normalized: 0.0,
    };
}

fn operators(
    tuples: &[SiteTuple],
    provider: &dyn OperatorProvider,
    assignment: &SpectralAssignment,
) -> Result<Vec<DenseOperator>> {
    tuples
        .iter()
        .map(|t| {
            let op = provider.operator(t, assignment)?;
            if op.arity() != t.len() {
                return Err(Error::ArityMismatch {
                    expected: t.len(),
                    found: op.arity(),
                });
            }
            Ok(op)
        })
        .collect()
}

/// Dense products `(L, R)` with `L = E_1 ... E_m` and `R = E_m ... E_1`.
pub fn dense_sides(
    tuples: &[SiteTuple],
    provider: &dyn OperatorProvider,
    assignment: &SpectralAssignment,
) -> Result<(DenseOperator, DenseOperator)> {
    let register_size = tuples[0].register_size();
    if register_size > DENSE_SITE_LIMIT {
        return Err(Error::DenseTooLarge {
            sites: register_size,
            limit: DENSE_SITE_LIMIT,
        });
    }
    let embedded = operators(tuples, provider, assignment)?
        .iter()
        .zip(tuples)
        .map(|(op, t)| embed(op, t))
        .collect::<Result<Vec<_>>>()?;
    // accumulate from the right so the sparse embedded factor is always on
    // the left of each product
    let (last, rest) = embedded.split_last().expect("non-empty");
    let lhs = rest
        .iter()
        .rev()
        .try_fold(last.clone(), |acc, e| e.matmul(&acc))?;
    let (first, rest) = embedded.split_first().expect("non-empty");
    let rhs = rest
        .iter()
        .try_fold(first.clone(), |acc, e| e.matmul(&acc))?;
    Ok((lhs, rhs))
}

fn apply_all<'a>(
    mut ops: impl Iterator<Item = (&'a DenseOperator, &'a SiteTuple)>,
    v: &StateVector,
) -> Result<StateVector> {
    ops.try_fold(v.clone(), |acc, (op, t)| apply(op, t, &acc))
}

/// `(L v, R v)`, each evaluated rightmost factor first.
pub fn matrix_free_sides(
    tuples: &[SiteTuple],
    ops: &[DenseOperator],
    v: &StateVector,
) -> Result<(StateVector, StateVector)> {
    let lhs = apply_all(ops.iter().zip(tuples).rev(), v)?;
    let rhs = apply_all(ops.iter().zip(tuples), v)?;
    Ok((lhs, rhs))
}

/// Residual of `E_1 E_2 ... E_m = E_m ... E_2 E_1` over the given tuples.
pub fn equation_residual(
    tuples: &[SiteTuple],
    provider: &dyn OperatorProvider,
    assignment: &SpectralAssignment,
    mode: Mode,
    seed: Seed,
) -> Result<Residual> {
    let register_size = tuples[0].register_size();
    match mode {
        Mode::Dense => {
            let (lhs, rhs) = dense_sides(tuples, provider, assignment)?;
            Ok(Residual::new(
                (&lhs - &rhs).frobenius_norm(),
                lhs.frobenius_norm(),
            ))
        }
        Mode::MatrixFree { vectors } => {
            let ops = operators(tuples, provider, assignment)?;
            let mut rng = seed.rng();
            let mut worst = Residual::ZERO;
            for _ in 0..vectors {
                let v = random_state(register_size, &mut rng);
                let (lhs, rhs) = matrix_free_sides(tuples, &ops, &v)?;
                worst = worst.max(Residual::new(lhs.distance(&rhs), lhs.norm()));
            }
            Ok(worst)
        }
    }
}

/// n-simplex vertex equation on the pair-labelled register of
/// `n(n+1)/2` sites.
pub fn vertex_residual(
    n: usize,
    provider: &dyn OperatorProvider,
    assignment: &SpectralAssignment,
    mode: Mode,
    seed: Seed,
) -> Result<Residual> {
    let scheme = index_scheme(n)?;
    equation_residual(&scheme.tuples, provider, assignment, mode, seed)
}

/// Edge form `T123 T124 T134 T234 = T234 T134 T124 T123` on 4 sites.
pub fn edge_residual_3(
    provider: &dyn OperatorProvider,
    assignment: &SpectralAssignment,
    mode: Mode,
    seed: Seed,
) -> Result<Residual> {
    equation_residual(&edge_tuples_3(), provider, assignment, mode, seed)
}

/// Rebuilds `L - R` column by column from the matrix-free kernel applied to
/// every basis vector and returns its Frobenius norm.
pub fn column_reconstructed_residual(
    tuples: &[SiteTuple],
    provider: &dyn OperatorProvider,
    assignment: &SpectralAssignment,
) -> Result<f64> {
    let register_size = tuples[0].register_size();
    let ops = operators(tuples, provider, assignment)?;
    let mut total = 0.0;
    for col in 0..1usize << register_size {
        let (lhs, rhs) = matrix_free_sides(tuples, &ops, &StateVector::basis(register_size, col))?;
        total += lhs.distance(&rhs).powi(2);
    }
    Ok(total.sqrt())
}
