//! Dense complex operators on qubit registers.
//!
//! Site 1 is the most significant bit and the leftmost tensor factor: the
//! basis state `|b1 b2 ... bn>` sits at index `sum_i b_i 2^(n-i)`.

mod kernel;
mod sites;
mod state;
mod tolerance;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use kernel::{apply, embed};
pub use sites::SiteTuple;
pub use state::StateVector;
pub use tolerance::{Seed, Tolerance};

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix acting on `arity` qubit sites, stored row-major.
#[derive(Clone, PartialEq)]
pub struct DenseOperator {
    arity: usize,
    entries: Vec<Complex64>,
}

impl DenseOperator {
    pub fn new(arity: usize, entries: Vec<Complex64>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let expected = 1usize << (2 * arity);
        if entries.len() != expected {
            return Err(Error::EntryCount {
                expected,
                found: entries.len(),
            });
        }
        Ok(Self { arity, entries })
    }

    /// Builds a 2x2 operator from its rows.
    pub fn single(rows: [[Complex64; 2]; 2]) -> Self {
        Self {
            arity: 1,
            entries: vec![rows[0][0], rows[0][1], rows[1][0], rows[1][1]],
        }
    }

    pub fn zeros(arity: usize) -> Self {
        assert!(arity > 0, "operator arity must be at least 1");
        Self {
            arity,
            entries: vec![ZERO; 1 << (2 * arity)],
        }
    }

    pub fn identity(arity: usize) -> Self {
        let mut op = Self::zeros(arity);
        let dim = op.dim();
        for i in 0..dim {
            op.entries[i * dim + i] = ONE;
        }
        op
    }

    pub fn diagonal(arity: usize, diag: &[Complex64]) -> Result<Self> {
        let mut op = Self::zeros(arity);
        let dim = op.dim();
        if diag.len() != dim {
            return Err(Error::EntryCount {
                expected: dim,
                found: diag.len(),
            });
        }
        for (i, d) in diag.iter().enumerate() {
            op.entries[i * dim + i] = *d;
        }
        Ok(op)
    }

    /// Projector `|b><b|` onto a computational basis state.
    pub fn basis_projector(arity: usize, index: usize) -> Self {
        let mut op = Self::zeros(arity);
        let dim = op.dim();
        assert!(index < dim, "basis index out of range");
        op.entries[index * dim + index] = ONE;
        op
    }

    /// Permutation matrix sending basis state `c` to `image(c)`.
    pub fn permutation(arity: usize, image: impl Fn(usize) -> usize) -> Self {
        let mut op = Self::zeros(arity);
        let dim = op.dim();
        for c in 0..dim {
            let r = image(c);
            assert!(r < dim, "permutation image out of range");
            op.entries[r * dim + c] = ONE;
        }
        op
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        1 << self.arity
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Complex64> {
        self.entries
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim() + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: Complex64) {
        let dim = self.dim();
        self.entries[row * dim + col] = value;
    }

    pub fn adjoint(&self) -> Self {
        let dim = self.dim();
        let mut entries = vec![ZERO; dim * dim];
        for r in 0..dim {
            for c in 0..dim {
                entries[c * dim + r] = self.entries[r * dim + c].conj();
            }
        }
        Self {
            arity: self.arity,
            entries,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            arity: self.arity,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        let dim = self.dim();
        (0..dim).map(|i| self.entries[i * dim + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn kron(&self, other: &Self) -> Self {
        kron(self, other)
    }

    /// Matrix product `self * rhs`.
    ///
    /// Zero entries of `self` are skipped, so left-multiplying by an embedded
    /// few-site operator costs `O(dim^2 * 2^k)` instead of `O(dim^3)`.
    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.arity != rhs.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: rhs.arity,
            });
        }
        let dim = self.dim();
        let mut out = vec![ZERO; dim * dim];
        for r in 0..dim {
            let out_row = &mut out[r * dim..(r + 1) * dim];
            for k in 0..dim {
                let a = self.entries[r * dim + k];
                if a == ZERO {
                    continue;
                }
                let rhs_row = &rhs.entries[k * dim..(k + 1) * dim];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            arity: self.arity,
            entries: out,
        })
    }

    /// Coefficients of `det(x I - A)`, highest degree first (monic).
    ///
    /// Faddeev-LeVerrier recursion; adequate for the small dimensions used
    /// when comparing spectra of gates.
    pub fn characteristic_polynomial(&self) -> Vec<Complex64> {
        let dim = self.dim();
        let mut coeffs = vec![ZERO; dim + 1];
        coeffs[0] = ONE;
        let mut m = Self::zeros(self.arity);
        for k in 1..=dim {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = self * &m;
            for i in 0..dim {
                next.entries[i * dim + i] += coeffs[k - 1];
            }
            let am = self * &next;
            coeffs[k] = -am.trace() / k as f64;
            m = next;
        }
        coeffs
    }
}

impl fmt::Debug for DenseOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.dim();
        writeln!(f, "DenseOperator(arity={}) [", self.arity)?;
        for r in 0..dim {
            write!(f, "  ")?;
            for c in 0..dim {
                let e = self.get(r, c);
                write!(f, "{:+.4}{:+.4}i ", e.re, e.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

fn assert_same_arity(a: &DenseOperator, b: &DenseOperator) {
    assert_eq!(
        a.arity, b.arity,
        "arity mismatch: {} vs {}",
        a.arity, b.arity
    );
}

impl Add for &DenseOperator {
    type Output = DenseOperator;

    fn add(self, rhs: Self) -> DenseOperator {
        assert_same_arity(self, rhs);
        DenseOperator {
            arity: self.arity,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &DenseOperator {
    type Output = DenseOperator;

    fn sub(self, rhs: Self) -> DenseOperator {
        assert_same_arity(self, rhs);
        DenseOperator {
            arity: self.arity,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &DenseOperator {
    type Output = DenseOperator;

    fn neg(self) -> DenseOperator {
        self.scale(-ONE)
    }
}

/// Matrix product; panics on arity mismatch. Use [`DenseOperator::matmul`]
/// for the fallible form.
impl Mul for &DenseOperator {
    type Output = DenseOperator;

    fn mul(self, rhs: Self) -> DenseOperator {
        assert_same_arity(self, rhs);
        self.matmul(rhs).expect("arity checked")
    }
}

impl Mul<Complex64> for &DenseOperator {
    type Output = DenseOperator;

    fn mul(self, rhs: Complex64) -> DenseOperator {
        self.scale(rhs)
    }
}

/// Kronecker product; `a` occupies the more significant tensor slots.
pub fn kron(a: &DenseOperator, b: &DenseOperator) -> DenseOperator {
    let (da, db) = (a.dim(), b.dim());
    let dim = da * db;
    let mut entries = vec![ZERO; dim * dim];
    for ar in 0..da {
        for ac in 0..da {
            let x = a.entries[ar * da + ac];
            for br in 0..db {
                let row = ar * db + br;
                for bc in 0..db {
                    entries[row * dim + ac * db + bc] = x * b.entries[br * db + bc];
                }
            }
        }
    }
    DenseOperator {
        arity: a.arity + b.arity,
        entries,
    }
}

/// Kronecker product of a non-empty list, left to right.
pub fn kron_all<'a>(ops: impl IntoIterator<Item = &'a DenseOperator>) -> DenseOperator {
    let mut iter = ops.into_iter();
    let first = iter
        .next()
        .expect("kron_all needs at least one operator")
        .clone();
    iter.fold(first, |acc, op| kron(&acc, op))
}

pub fn frobenius_distance(a: &DenseOperator, b: &DenseOperator) -> Result<f64> {
    if a.arity != b.arity {
        return Err(Error::ArityMismatch {
            expected: a.arity,
            found: b.arity,
        });
    }
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

/// True iff `||a a^dagger - 1||_F` is within `tol` (scale: `||1||_F`).
pub fn is_unitary(a: &DenseOperator, tol: Tolerance) -> bool {
    let product = a * &a.adjoint();
    let identity = DenseOperator::identity(a.arity);
    let residual = frobenius_distance(&product, &identity).expect("same arity");
    tol.accepts(residual, identity.frobenius_norm())
}

/// Tests `a = e^{i phi} b` and returns the fitted `phi` in `(-pi, pi]`.
///
/// The phase comes from the largest-magnitude entry of `a` and is then
/// checked against every entry. Returns `(false, None)` when the arities
/// differ or `b` vanishes where `a` peaks.
pub fn equal_up_to_global_phase(
    a: &DenseOperator,
    b: &DenseOperator,
    tol: Tolerance,
) -> (bool, Option<f64>) {
    if a.arity != b.arity {
        return (false, None);
    }
    let scale = b.frobenius_norm();
    let (peak, peak_mag) = a
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| (i, e.norm()))
        .fold(
            (0, 0.0),
            |best, cur| if cur.1 > best.1 { cur } else { best },
        );
    if peak_mag == 0.0 {
        // a = 0: any phase fits iff b is negligible.
        let ok = tol.accepts(scale, scale);
        return (ok, ok.then_some(0.0));
    }
    let denom = b.entries[peak];
    if denom.norm() <= f64::EPSILON * peak_mag {
        return (false, None);
    }
    let phi = (a.entries[peak] / denom).arg();
    let rotated = b.scale(Complex64::from_polar(1.0, phi));
    let residual = frobenius_distance(a, &rotated).expect("same arity");
    if tol.accepts(residual, scale) {
        (true, Some(phi))
    } else {
        (false, None)
    }
}
