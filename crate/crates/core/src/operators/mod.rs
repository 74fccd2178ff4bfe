//! Constructors for the tetrahedron, 4-simplex and n-simplex operator
//! families, the Toffoli families they contain, and twisted permutations.
//!
//! Every constructor depends on each of its sites through a single
//! site-local 2x2 operator, which is what makes the simplex equations hold.

mod assignment;
mod family;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

pub use assignment::{SiteParams, SpectralAssignment};
pub use family::{sample_mu, QFamily, QFamilyKind, NONCOMMUTING_THRESHOLD};

use crate::error::{Error, Result};
use crate::gates::{reference_gate, GateName};
use crate::random::gaussian_complex;
use crate::su2::{self, fixed_gate, projector_pm, rotation, x_tilde, AxisAngle, FixedGate, Sign};
use crate::tensor::{kron_all, DenseOperator, I, ONE, ZERO};

/// Couplings of the general site-local tetrahedron operator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CouplingConstants {
    /// Single-site terms on slots `i`, `j`, `k`.
    pub alpha: [Complex64; 3],
    /// Pair terms `ij`, `jk`, `ki`.
    pub beta: [Complex64; 3],
    pub gamma: Complex64,
}

impl CouplingConstants {
    pub fn zero() -> Self {
        Self::uniform(ZERO)
    }

    pub fn uniform(c: Complex64) -> Self {
        Self {
            alpha: [c; 3],
            beta: [c; 3],
            gamma: c,
        }
    }

    pub fn random(rng: &mut impl Rng) -> Self {
        Self {
            alpha: [(); 3].map(|_| gaussian_complex(rng)),
            beta: [(); 3].map(|_| gaussian_complex(rng)),
            gamma: gaussian_complex(rng),
        }
    }
}

/// Which reading of the SU(2) 4-simplex operator to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FourSimplexVariant {
    /// `1 - A_i A_j A_k + e^{i alpha} A_i A_j (i R_l)`, the three-factor
    /// product missing from the phase term.
    PaperLiteral,
    /// `1 - A_i A_j A_k (1 - e^{i alpha} i R_l)`, which reduces to the
    /// 4-qubit Toffoli gate at the special point.
    ToffoliReducing,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantSpec {
    /// `1 - (1/4)(1-Z)(1-Z)(1 - e^{i alpha} Z)`
    Alpha(f64),
    /// `1 - (1/4)(1-Z)(1-Z)(1 - U(alpha, beta) Z)`, `U = diag(e^{i alpha}, e^{i beta})`
    AlphaBeta(f64, f64),
    /// `a 1 + b |111><111|`
    Linear(Complex64, Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NSimplexKind {
    /// `1 - P1^{(n-1)} (1 - e^{i alpha} Z)`, spectral parameters ignored.
    Constant(f64),
    /// `1 - Pi^-(p_1) ... Pi^-(p_{n-1}) (1 - X~(p_n))`.
    Su2Toffoli,
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn id1() -> DenseOperator {
    DenseOperator::identity(1)
}

/// `|1><1| = (1 - Z)/2`
fn p1() -> DenseOperator {
    DenseOperator::diagonal(1, &[ZERO, ONE]).expect("2 entries")
}

/// `(1 + s i R)/2` for `s = +-1`.
fn half_shift(r: &DenseOperator, s: f64) -> DenseOperator {
    (&id1() + &r.scale(Complex64::new(0.0, s))).scale(c(0.5))
}

/// General site-local solution: the identity plus every product of
/// `Q(mu_i)`, `Q(mu_j)`, `Q(mu_k)` over distinct slots, weighted by `c`.
pub fn generic_tetrahedron(
    family: &QFamily,
    mu: [Complex64; 3],
    c: &CouplingConstants,
) -> Result<DenseOperator> {
    let qi = family.q(mu[0])?;
    let qj = family.q(mu[1])?;
    let qk = family.q(mu[2])?;
    let e = id1();
    let terms: [(Complex64, [&DenseOperator; 3]); 7] = [
        (c.alpha[0], [&qi, &e, &e]),
        (c.alpha[1], [&e, &qj, &e]),
        (c.alpha[2], [&e, &e, &qk]),
        (c.beta[0], [&qi, &qj, &e]),
        (c.beta[1], [&e, &qj, &qk]),
        (c.beta[2], [&qi, &e, &qk]),
        (c.gamma, [&qi, &qj, &qk]),
    ];
    Ok(terms
        .iter()
        .fold(DenseOperator::identity(3), |acc, (w, slots)| {
            &acc + &kron_all(*slots).scale(*w)
        }))
}

/// SU(2) tetrahedron operator on slots `(i, j, k)`:
/// `(1+iR_i)/2 (1+iR_j)/2 + (1 + R_i R_j)/2 + e^{i alpha} (1-iR_i)/2 (1-iR_j)/2 iR_k`.
pub fn su2_tetrahedron(
    pi: &AxisAngle,
    pj: &AxisAngle,
    pk: &AxisAngle,
    alpha: f64,
) -> DenseOperator {
    let (ri, rj, rk) = (rotation(pi), rotation(pj), rotation(pk));
    let e = id1();
    let first = kron_all([&half_shift(&ri, 1.0), &half_shift(&rj, 1.0), &e]);
    let second = (&DenseOperator::identity(3) + &kron_all([&ri, &rj, &e])).scale(c(0.5));
    let third = kron_all([&half_shift(&ri, -1.0), &half_shift(&rj, -1.0), &rk.scale(I)])
        .scale(Complex64::from_polar(1.0, alpha));
    &(&first + &second) + &third
}

/// Unitary Toffoli family
/// `P0 P0 1 + (1 - Z Z)/2 1 + e^{i alpha} P1 P1 X`; CCNOT at `alpha = 0`.
pub fn toffoli_family(alpha: f64) -> DenseOperator {
    let z = fixed_gate(FixedGate::Z);
    let e = id1();
    let p0 = DenseOperator::diagonal(1, &[ONE, ZERO]).expect("2 entries");
    let both_zero = kron_all([&p0, &p0, &e]);
    let differ = (&DenseOperator::identity(3) - &kron_all([&z, &z, &e])).scale(c(0.5));
    let flip = kron_all([&p1(), &p1(), &fixed_gate(FixedGate::X)])
        .scale(Complex64::from_polar(1.0, alpha));
    &(&both_zero + &differ) + &flip
}

/// `1 - Pi^-(p_i) Pi^-(p_j) (1 - X~(p_k))`.
pub fn general_toffoli(pi: &AxisAngle, pj: &AxisAngle, pk: &AxisAngle) -> Result<DenseOperator> {
    n_toffoli_from(&[*pi, *pj, *pk])
}

fn n_toffoli_from(params: &[AxisAngle]) -> Result<DenseOperator> {
    let (target, controls) = params.split_last().expect("at least one site");
    let mut factors = controls
        .iter()
        .map(|p| projector_pm(p, Sign::Minus))
        .collect::<Result<Vec<_>>>()?;
    factors.push(&id1() - &x_tilde(target));
    let arity = params.len();
    Ok(&DenseOperator::identity(arity) - &kron_all(&factors))
}

/// `1 - (1/4)(1-Z)(1-Z)(1-Z) = diag(1, ..., 1, -1)`.
pub fn constant_ccz() -> DenseOperator {
    constant_family(ConstantSpec::Alpha(0.0))
}

pub fn constant_family(spec: ConstantSpec) -> DenseOperator {
    match spec {
        ConstantSpec::Alpha(alpha) => phased_constant(3, alpha),
        ConstantSpec::AlphaBeta(alpha, beta) => {
            let u = DenseOperator::diagonal(
                1,
                &[
                    Complex64::from_polar(1.0, alpha),
                    Complex64::from_polar(1.0, beta),
                ],
            )
            .expect("2 entries");
            let uz = &u * &fixed_gate(FixedGate::Z);
            let p = p1();
            &DenseOperator::identity(3) - &kron_all([&p, &p, &(&id1() - &uz)])
        }
        ConstantSpec::Linear(a, b) => {
            &DenseOperator::identity(3).scale(a) + &DenseOperator::basis_projector(3, 7).scale(b)
        }
    }
}

/// `1 - (1/2^{n-1}) (1-Z)^{(n-1)} (1 - e^{i alpha} Z)`.
fn phased_constant(arity: usize, alpha: f64) -> DenseOperator {
    let z = fixed_gate(FixedGate::Z);
    let one_minus_z = &id1() - &z;
    let mut factors = vec![one_minus_z; arity - 1];
    factors.push(&id1() - &z.scale(Complex64::from_polar(1.0, alpha)));
    let weight = c(1.0 / (1u64 << (arity - 1)) as f64);
    &DenseOperator::identity(arity) - &kron_all(&factors).scale(weight)
}

/// Two-site constant solution `1 - (1/2)(1-Z)(1-Z) = diag(1, 1, 1, -1)`.
pub fn cz_yangbaxter() -> DenseOperator {
    phased_constant(2, 0.0)
}

/// SU(2) 4-simplex operator with `A_m = (1 - iR_m)/2` on slot `m`.
pub fn su2_4simplex(
    params: &[AxisAngle; 4],
    alpha: f64,
    variant: FourSimplexVariant,
) -> DenseOperator {
    let [ai, aj, ak] = [0, 1, 2].map(|m| half_shift(&rotation(&params[m]), -1.0));
    let irl = rotation(&params[3]).scale(I);
    let phase = Complex64::from_polar(1.0, alpha);
    let e = id1();
    let id4 = DenseOperator::identity(4);
    match variant {
        FourSimplexVariant::PaperLiteral => {
            let three = kron_all([&ai, &aj, &ak, &e]);
            let phased = kron_all([&ai, &aj, &e, &irl]).scale(phase);
            &(&id4 - &three) + &phased
        }
        FourSimplexVariant::ToffoliReducing => {
            let last = &e - &irl.scale(phase);
            &id4 - &kron_all([&ai, &aj, &ak, &last])
        }
    }
}

/// n-site generalization; `params` supplies sites `1..=n` for `Su2Toffoli`
/// and is ignored by `Constant`.
pub fn n_simplex_operator(
    n: usize,
    params: &SpectralAssignment,
    kind: NSimplexKind,
) -> Result<DenseOperator> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    match kind {
        NSimplexKind::Constant(alpha) => Ok(phased_constant(n, alpha)),
        NSimplexKind::Su2Toffoli => {
            let sites = (1..=n)
                .map(|s| params.su2_at(s))
                .collect::<Result<Vec<_>>>()?;
            n_toffoli_from(&sites)
        }
    }
}

/// `(R_1 R_2) SWAP (R_1 R_2)^dagger`.
pub fn twisted_permutation(p1: &AxisAngle, p2: &AxisAngle) -> DenseOperator {
    let w = kron_all([&rotation(p1), &rotation(p2)]);
    let swap = reference_gate(GateName::Swap).expect("fixed gate");
    &(&w * &swap) * &w.adjoint()
}

/// `R(p) d R(p)^dagger`.
pub fn conjugated_site_operator(p: &AxisAngle, d: &DenseOperator) -> Result<DenseOperator> {
    if d.arity() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: d.arity(),
        });
    }
    Ok(su2::conjugate(p, d))
}

/// The controlled^{n-1}-NOT `1 - P1^{(n-1)} (1 - X)`, built independently
/// of [`reference_gate`] so the two can be checked against each other.
pub fn n_toffoli_reference(n: usize) -> DenseOperator {
    let mut factors = vec![p1(); n - 1];
    factors.push(&id1() - &fixed_gate(FixedGate::X));
    &DenseOperator::identity(n) - &kron_all(&factors)
}
