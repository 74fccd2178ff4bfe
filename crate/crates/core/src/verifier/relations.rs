use std::time::Instant;

use super::report::{Measure, Predicate, VerificationReport};
use super::residual::Residual;
use crate::error::Result;
use crate::operators::{conjugated_site_operator, twisted_permutation};
use crate::random::random_unitary;
use crate::su2::{fixed_gate, AxisAngle, FixedGate};
use crate::tensor::{embed, kron, DenseOperator, Seed, SiteTuple, Tolerance};

pub const RELATION_TOLERANCE: Tolerance = Tolerance::absolute(1e-13);

pub const RELATION_LABELS: [&str; 6] = [
    "braid",
    "involution",
    "distant-commutation",
    "conjugation-X",
    "conjugation-H",
    "conjugation-random-unitary",
];

fn residual(lhs: &DenseOperator, rhs: &DenseOperator) -> Residual {
    Residual::new((lhs - rhs).frobenius_norm(), lhs.frobenius_norm())
}

fn on(op: &DenseOperator, sites: &[usize], n: usize) -> Result<DenseOperator> {
    embed(op, &SiteTuple::new(sites.to_vec(), n)?)
}

/// Residuals of the permutation-group relations for twisted permutations,
/// in the order of [`RELATION_LABELS`].
///
/// Sites 1, 2, 3 carry `p1`, `p2`, `p3`; the distant-commutation register
/// adds a fourth site carrying `p1` again. The random unitary in the last
/// conjugation check is drawn from `seed`.
pub fn relation_residuals(
    p1: &AxisAngle,
    p2: &AxisAngle,
    p3: &AxisAngle,
    seed: Seed,
) -> Result<[Residual; 6]> {
    let p12 = on(&twisted_permutation(p1, p2), &[1, 2], 3)?;
    let p23 = on(&twisted_permutation(p2, p3), &[2, 3], 3)?;
    let braid = residual(&(&(&p12 * &p23) * &p12), &(&(&p23 * &p12) * &p23));
    let id3 = DenseOperator::identity(3);
    let involution = residual(&(&p12 * &p12), &id3).max(residual(&(&p23 * &p23), &id3));

    let q12 = on(&twisted_permutation(p1, p2), &[1, 2], 4)?;
    let q34 = on(&twisted_permutation(p3, p1), &[3, 4], 4)?;
    let distant = residual(&(&q12 * &q34), &(&q34 * &q12));

    let p = twisted_permutation(p1, p2);
    let id1 = DenseOperator::identity(1);
    let conj = |d: &DenseOperator| -> Result<Residual> {
        let m1 = kron(&conjugated_site_operator(p1, d)?, &id1);
        let m2 = kron(&id1, &conjugated_site_operator(p2, d)?);
        Ok(residual(&(&(&p * &m1) * &p), &m2))
    };
    let random = random_unitary(1, &mut seed.rng());
    Ok([
        braid,
        involution,
        distant,
        conj(&fixed_gate(FixedGate::X))?,
        conj(&fixed_gate(FixedGate::H))?,
        conj(&random)?,
    ])
}

/// Braid, involution, distant commutation and the conjugation property of
/// twisted permutations, one residual per relation.
pub fn permutation_relation_suite(
    p1: &AxisAngle,
    p2: &AxisAngle,
    p3: &AxisAngle,
    seed: Seed,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let results = relation_residuals(p1, p2, p3, seed)?;
    let mut report = VerificationReport::from_residuals(
        "perm-relations",
        "twisted permutation relations",
        None,
        "dense".to_string(),
        seed.0,
        Measure::Raw,
        Predicate::AtMost,
        RELATION_TOLERANCE,
        &results,
        start.elapsed().as_millis() as u64,
    );
    report.labels = RELATION_LABELS.iter().map(|s| s.to_string()).collect();
    Ok(report)
}
