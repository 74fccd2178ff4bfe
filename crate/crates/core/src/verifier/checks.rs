use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::provider::{
    Constant, GeneralToffoli, GenericTetrahedron, NSimplex, Su2FourSimplex, Su2Tetrahedron,
};
use super::relations::{relation_residuals, RELATION_TOLERANCE};
use super::report::{CampaignReport, Measure, Predicate, Verdict, VerificationReport};
use super::residual::{
    edge_residual_3, vertex_residual, Mode, Residual, DEFAULT_VECTORS, DENSE_SITE_LIMIT,
};
use crate::error::{Error, Result};
use crate::gates::{local_conjugate, reference_gate, GateName};
use crate::operators::{
    constant_ccz, constant_family, cz_yangbaxter, general_toffoli, n_simplex_operator,
    su2_4simplex, su2_tetrahedron, toffoli_family, ConstantSpec, CouplingConstants,
    FourSimplexVariant, NSimplexKind, QFamily, SpectralAssignment,
};
use crate::random::gaussian_complex;
use crate::su2::{fixed_gate, AxisAngle, FixedGate};
use crate::tensor::{frobenius_distance, DenseOperator, Seed, Tolerance};

use std::f64::consts::{FRAC_PI_2, PI};

/// Everything one trial of a check needs.
#[derive(Debug, Clone, Copy)]
pub struct TrialContext {
    pub seed: Seed,
    pub n: usize,
    pub mode: Mode,
}

type Runner = fn(&TrialContext) -> Result<Residual>;

/// A named, registered verification.
pub struct Check {
    pub name: &'static str,
    pub description: &'static str,
    pub equation: &'static str,
    pub measure: Measure,
    pub predicate: Predicate,
    pub tolerance: Tolerance,
    /// Simplex order; `None` for checks that are not simplex equations.
    pub n: Option<usize>,
    /// Whether `--n` may override `n`.
    pub variable_n: bool,
    run: Runner,
}

impl Check {
    pub fn run_trial(&self, ctx: &TrialContext) -> Result<Residual> {
        (self.run)(ctx)
    }
}

const fn at_most(absolute: f64) -> Tolerance {
    Tolerance::absolute(absolute)
}

pub static CHECKS: &[Check] = &[
    Check {
        name: "toffoli-reduction",
        description: "toffoli_family(0) and general_toffoli at the special point equal CCNOT",
        equation: "gate distance",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-15),
        n: None,
        variable_n: false,
        run: toffoli_reduction,
    },
    Check {
        name: "su2-tetra-reduction",
        description: "SU(2) tetrahedron operator at the special point equals toffoli_family(alpha)",
        equation: "gate distance",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-14),
        n: None,
        variable_n: false,
        run: su2_tetra_reduction,
    },
    Check {
        name: "su2-tetra-vertex",
        description: "SU(2) tetrahedron operator solves the spectral vertex tetrahedron equation",
        equation: "vertex n=3 spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-11),
        n: Some(3),
        variable_n: false,
        run: su2_tetra_vertex,
    },
    Check {
        name: "generic-tetra-vertex",
        description: "general site-local solution (seeded random Q family) solves the vertex equation",
        equation: "vertex n=3 spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-11),
        n: Some(3),
        variable_n: false,
        run: generic_tetra_vertex,
    },
    Check {
        name: "edge-form-3",
        description: "general and SU(2) tetrahedron operators solve the 4-site edge form",
        equation: "edge n=3 spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-11),
        n: Some(3),
        variable_n: false,
        run: edge_form_3,
    },
    Check {
        name: "general-toffoli-vertex",
        description: "generalized unitary Toffoli operator solves the spectral vertex equation",
        equation: "vertex n=3 spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-11),
        n: Some(3),
        variable_n: false,
        run: general_toffoli_vertex,
    },
    Check {
        name: "general-toffoli-unitary",
        description: "generalized Toffoli operator is unitary for random valid parameters",
        equation: "unitarity defect",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-12),
        n: None,
        variable_n: false,
        run: general_toffoli_unitary,
    },
    Check {
        name: "constant-vertex",
        description: "constant CCZ, alpha, alpha-beta and linear families solve the constant vertex equation",
        equation: "vertex n=3 constant",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-12),
        n: Some(3),
        variable_n: false,
        run: constant_vertex,
    },
    Check {
        name: "constant-unitary",
        description: "alpha and alpha-beta constant families are unitary",
        equation: "unitarity defect",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-12),
        n: None,
        variable_n: false,
        run: constant_unitary,
    },
    Check {
        name: "hadamard-bridge",
        description: "Hadamard on the target maps CCZ to CCNOT, the alpha family to toffoli_family, CZ to CNOT",
        equation: "gate distance",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-14),
        n: None,
        variable_n: false,
        run: hadamard_bridge,
    },
    Check {
        name: "cz-yang-baxter",
        description: "two-site constant operator solves the Yang-Baxter (2-simplex) equation",
        equation: "vertex n=2 constant",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-13),
        n: Some(2),
        variable_n: false,
        run: cz_yang_baxter,
    },
    Check {
        name: "su2-4simplex-literal",
        description: "4-simplex operator as printed solves the spectral 4-simplex equation (10 sites)",
        equation: "vertex n=4 spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-10),
        n: Some(4),
        variable_n: false,
        run: four_simplex_literal,
    },
    Check {
        name: "su2-4simplex-reducing",
        description: "Toffoli-reducing 4-simplex operator solves the spectral 4-simplex equation (10 sites)",
        equation: "vertex n=4 spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-10),
        n: Some(4),
        variable_n: false,
        run: four_simplex_reducing,
    },
    Check {
        name: "ntoffoli-reduction",
        description: "Toffoli-reducing 4-simplex and su2 n-simplex operators equal the n-Toffoli gates (n = 3, 4, 5)",
        equation: "gate distance",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-14),
        n: None,
        variable_n: false,
        run: ntoffoli_reduction,
    },
    Check {
        name: "nsimplex-constant",
        description: "constant n-simplex operator solves the n-simplex equation",
        equation: "vertex constant",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-10),
        n: Some(5),
        variable_n: true,
        run: nsimplex_constant,
    },
    Check {
        name: "nsimplex-su2-toffoli",
        description: "SU(2) n-Toffoli operator solves the spectral n-simplex equation",
        equation: "vertex spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-10),
        n: Some(5),
        variable_n: true,
        run: nsimplex_su2_toffoli,
    },
    Check {
        name: "nsimplex-su2-toffoli-x-axis",
        description: "SU(2) n-Toffoli operator with every axis along x solves the n-simplex equation",
        equation: "vertex spectral",
        measure: Measure::Normalized,
        predicate: Predicate::AtMost,
        tolerance: at_most(1e-10),
        n: Some(5),
        variable_n: true,
        run: nsimplex_su2_toffoli_x_axis,
    },
    Check {
        name: "perm-relations",
        description: "twisted permutations: braid, involution, distant commutation, conjugation property",
        equation: "permutation relations",
        measure: Measure::Raw,
        predicate: Predicate::AtMost,
        tolerance: RELATION_TOLERANCE,
        n: None,
        variable_n: false,
        run: perm_relations,
    },
    Check {
        name: "ccnot-negative-control",
        description: "CCNOT used as a constant tetrahedron operator violates the vertex equation (passes when residual > 0.5)",
        equation: "vertex n=3 constant",
        measure: Measure::Normalized,
        predicate: Predicate::Exceeds,
        tolerance: at_most(0.5),
        n: Some(3),
        variable_n: false,
        run: ccnot_negative_control,
    },
];

pub fn find_check(name: &str) -> Result<&'static Check> {
    CHECKS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

fn distance(a: &DenseOperator, b: &DenseOperator) -> Result<Residual> {
    Ok(Residual::new(frobenius_distance(a, b)?, b.frobenius_norm()))
}

fn unitarity_defect(u: &DenseOperator) -> Residual {
    let id = DenseOperator::identity(u.arity());
    Residual::new(
        (&(u * &u.adjoint()) - &id).frobenius_norm(),
        id.frobenius_norm(),
    )
}

fn ccnot() -> DenseOperator {
    reference_gate(GateName::Ccnot).expect("fixed gate")
}

fn special_controls() -> AxisAngle {
    AxisAngle::z(FRAC_PI_2)
}

fn toffoli_reduction(_: &TrialContext) -> Result<Residual> {
    let c = special_controls();
    let general = general_toffoli(&c, &c, &AxisAngle::x(0.0))?;
    Ok(distance(&toffoli_family(0.0), &ccnot())?.max(distance(&general, &ccnot())?))
}

fn su2_tetra_reduction(ctx: &TrialContext) -> Result<Residual> {
    let alpha = ctx.seed.rng().gen_range(-PI..PI);
    let c = special_controls();
    let t = su2_tetrahedron(&c, &c, &AxisAngle::x(FRAC_PI_2), alpha);
    distance(&t, &toffoli_family(alpha))
}

fn su2_tetra_vertex(ctx: &TrialContext) -> Result<Residual> {
    let a = SpectralAssignment::random_su2(6, &mut ctx.seed.rng());
    vertex_residual(3, &Su2Tetrahedron, &a, ctx.mode, ctx.seed)
}

fn generic_provider(rng: &mut impl Rng, seed: Seed) -> Result<GenericTetrahedron> {
    Ok(GenericTetrahedron {
        family: QFamily::seeded_random(seed.0)?,
        couplings: CouplingConstants::random(rng),
    })
}

fn generic_tetra_vertex(ctx: &TrialContext) -> Result<Residual> {
    let mut rng = ctx.seed.rng();
    let provider = generic_provider(&mut rng, ctx.seed)?;
    let a = SpectralAssignment::random_complex(6, &mut rng);
    vertex_residual(3, &provider, &a, ctx.mode, ctx.seed)
}

fn edge_form_3(ctx: &TrialContext) -> Result<Residual> {
    let mut rng = ctx.seed.rng();
    let provider = generic_provider(&mut rng, ctx.seed)?;
    let generic = edge_residual_3(
        &provider,
        &SpectralAssignment::random_complex(4, &mut rng),
        ctx.mode,
        ctx.seed,
    )?;
    let su2 = edge_residual_3(
        &Su2Tetrahedron,
        &SpectralAssignment::random_su2(4, &mut rng),
        ctx.mode,
        ctx.seed,
    )?;
    Ok(generic.max(su2))
}

fn general_toffoli_vertex(ctx: &TrialContext) -> Result<Residual> {
    let a = SpectralAssignment::random_su2(6, &mut ctx.seed.rng());
    vertex_residual(3, &GeneralToffoli, &a, ctx.mode, ctx.seed)
}

fn general_toffoli_unitary(ctx: &TrialContext) -> Result<Residual> {
    let mut rng = ctx.seed.rng();
    let p: Vec<_> = (0..3).map(|_| AxisAngle::random(&mut rng)).collect();
    Ok(unitarity_defect(&general_toffoli(&p[0], &p[1], &p[2])?))
}

fn constant_ops(rng: &mut impl Rng) -> Vec<DenseOperator> {
    vec![
        constant_ccz(),
        constant_family(ConstantSpec::Alpha(rng.gen_range(-PI..PI))),
        constant_family(ConstantSpec::AlphaBeta(
            rng.gen_range(-PI..PI),
            rng.gen_range(-PI..PI),
        )),
        constant_family(ConstantSpec::Linear(
            gaussian_complex(rng),
            gaussian_complex(rng),
        )),
    ]
}

fn constant_vertex(ctx: &TrialContext) -> Result<Residual> {
    let empty = SpectralAssignment::new(Vec::new());
    constant_ops(&mut ctx.seed.rng())
        .into_iter()
        .try_fold(Residual::ZERO, |worst, op| {
            Ok(worst.max(vertex_residual(
                3,
                &Constant(op),
                &empty,
                ctx.mode,
                ctx.seed,
            )?))
        })
}

fn constant_unitary(ctx: &TrialContext) -> Result<Residual> {
    let ops = constant_ops(&mut ctx.seed.rng());
    Ok(ops[..3]
        .iter()
        .map(unitarity_defect)
        .fold(Residual::ZERO, Residual::max))
}

fn hadamard_bridge(ctx: &TrialContext) -> Result<Residual> {
    let alpha = ctx.seed.rng().gen_range(-PI..PI);
    let id = DenseOperator::identity(1);
    let h = fixed_gate(FixedGate::H);
    let target_h = [id.clone(), id.clone(), h.clone()];
    let ccz = distance(&local_conjugate(&constant_ccz(), &target_h)?, &ccnot())?;
    let family = distance(
        &local_conjugate(&constant_family(ConstantSpec::Alpha(alpha)), &target_h)?,
        &toffoli_family(alpha),
    )?;
    let cz = distance(
        &local_conjugate(&cz_yangbaxter(), &[id, h])?,
        &reference_gate(GateName::Cnot)?,
    )?;
    Ok(ccz.max(family).max(cz))
}

fn cz_yang_baxter(ctx: &TrialContext) -> Result<Residual> {
    let empty = SpectralAssignment::new(Vec::new());
    vertex_residual(2, &Constant(cz_yangbaxter()), &empty, ctx.mode, ctx.seed)
}

fn four_simplex(ctx: &TrialContext, variant: FourSimplexVariant) -> Result<Residual> {
    let a = SpectralAssignment::random_su2(10, &mut ctx.seed.rng());
    vertex_residual(4, &Su2FourSimplex(variant), &a, ctx.mode, ctx.seed)
}

fn four_simplex_literal(ctx: &TrialContext) -> Result<Residual> {
    four_simplex(ctx, FourSimplexVariant::PaperLiteral)
}

fn four_simplex_reducing(ctx: &TrialContext) -> Result<Residual> {
    four_simplex(ctx, FourSimplexVariant::ToffoliReducing)
}

fn ntoffoli_reduction(_: &TrialContext) -> Result<Residual> {
    let c = special_controls();
    let reducing = su2_4simplex(
        &[c, c, c, AxisAngle::x(FRAC_PI_2)],
        0.0,
        FourSimplexVariant::ToffoliReducing,
    );
    let mut worst = distance(&reducing, &reference_gate(GateName::NToffoli(4))?)?;
    for n in 3..=5 {
        let mut sites = vec![c; n - 1];
        sites.push(AxisAngle::x(0.0));
        let op = n_simplex_operator(n, &SpectralAssignment::su2(sites), NSimplexKind::Su2Toffoli)?;
        worst = worst.max(distance(&op, &reference_gate(GateName::NToffoli(n))?)?);
    }
    Ok(worst)
}

fn nsimplex_constant(ctx: &TrialContext) -> Result<Residual> {
    let alpha = ctx.seed.rng().gen_range(-PI..PI);
    let empty = SpectralAssignment::new(Vec::new());
    vertex_residual(
        ctx.n,
        &NSimplex(NSimplexKind::Constant(alpha)),
        &empty,
        ctx.mode,
        ctx.seed,
    )
}

fn nsimplex_su2_toffoli(ctx: &TrialContext) -> Result<Residual> {
    let sites = ctx.n * (ctx.n + 1) / 2;
    let a = SpectralAssignment::random_su2(sites, &mut ctx.seed.rng());
    vertex_residual(
        ctx.n,
        &NSimplex(NSimplexKind::Su2Toffoli),
        &a,
        ctx.mode,
        ctx.seed,
    )
}

/// Random angles, every axis along x: the control projectors and the
/// conjugated flip of a site are then both diagonal in the X eigenbasis.
fn nsimplex_su2_toffoli_x_axis(ctx: &TrialContext) -> Result<Residual> {
    let sites = ctx.n * (ctx.n + 1) / 2;
    let mut rng = ctx.seed.rng();
    let params: Vec<_> = (0..sites)
        .map(|_| AxisAngle::x(AxisAngle::random(&mut rng).angle()))
        .collect();
    let a = SpectralAssignment::su2(params);
    vertex_residual(
        ctx.n,
        &NSimplex(NSimplexKind::Su2Toffoli),
        &a,
        ctx.mode,
        ctx.seed,
    )
}

fn perm_relations(ctx: &TrialContext) -> Result<Residual> {
    let mut rng = ctx.seed.rng();
    let p: Vec<_> = (0..3).map(|_| AxisAngle::random(&mut rng)).collect();
    Ok(relation_residuals(&p[0], &p[1], &p[2], ctx.seed)?
        .into_iter()
        .fold(Residual::ZERO, Residual::max))
}

fn ccnot_negative_control(ctx: &TrialContext) -> Result<Residual> {
    let empty = SpectralAssignment::new(Vec::new());
    vertex_residual(3, &Constant(ccnot()), &empty, ctx.mode, ctx.seed)
}

/// Fully determines a campaign run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub checks: Vec<String>,
    pub trials: usize,
    pub seed: Seed,
    /// Replaces each check's own tolerance when set.
    pub tolerance: Option<Tolerance>,
    /// Replaces the default mode (dense up to the site limit, then
    /// matrix-free with [`DEFAULT_VECTORS`]) for simplex-equation checks.
    pub mode: Option<Mode>,
    /// Simplex order for checks that accept one.
    pub n: Option<usize>,
}

impl CampaignConfig {
    pub fn new(
        checks: impl IntoIterator<Item = impl Into<String>>,
        trials: usize,
        seed: Seed,
    ) -> Self {
        Self {
            checks: checks.into_iter().map(Into::into).collect(),
            trials,
            seed,
            tolerance: None,
            mode: None,
            n: None,
        }
    }
}

fn default_mode(n: usize) -> Mode {
    if n * (n + 1) / 2 > DENSE_SITE_LIMIT {
        Mode::MatrixFree {
            vectors: DEFAULT_VECTORS,
        }
    } else {
        Mode::Dense
    }
}

/// Runs one registered check for `trials` trials; trial `i` uses
/// `seed.derive(i)`.
pub fn run_check(check: &Check, config: &CampaignConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = match (check.variable_n, config.n) {
        (true, Some(n)) => {
            if n < 2 {
                return Err(Error::InvalidOrder(n));
            }
            n
        }
        _ => check.n.unwrap_or(0),
    };
    let mode = match (check.n, config.mode) {
        (Some(_), Some(mode)) => mode,
        (Some(_), None) => default_mode(n),
        (None, _) => Mode::Dense,
    };
    let results = (0..config.trials as u64)
        .into_par_iter()
        .map(|i| {
            check.run_trial(&TrialContext {
                seed: config.seed.derive(i),
                n,
                mode,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let tolerance = match check.predicate {
        Predicate::AtMost => config.tolerance.unwrap_or(check.tolerance),
        Predicate::Exceeds => check.tolerance,
    };
    Ok(VerificationReport::from_residuals(
        check.name,
        check.equation,
        check.n.map(|_| n),
        mode.label(),
        config.seed.0,
        check.measure,
        check.predicate,
        tolerance,
        &results,
        start.elapsed().as_millis() as u64,
    ))
}

/// Runs every named check; the verdict is the conjunction.
pub fn campaign(config: &CampaignConfig) -> Result<CampaignReport> {
    let checks = config
        .checks
        .iter()
        .map(|name| find_check(name))
        .collect::<Result<Vec<_>>>()?;
    let reports = checks
        .into_iter()
        .map(|c| run_check(c, config))
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(|r| r.verdict.passed());
    Ok(CampaignReport {
        seed: config.seed.0,
        trials: config.trials,
        verdict: Verdict::from_bool(ok),
        checks: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = CHECKS.iter().map(|c| c.name).collect();
        names.sort_unstable();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len());
    }

    #[test]
    fn empty_campaign_passes() {
        let report = campaign(&CampaignConfig::new(Vec::<String>::new(), 10, Seed(1))).unwrap();
        assert!(report.verdict.passed());
        assert!(report.checks.is_empty());
    }

    #[test]
    fn unknown_check_is_rejected() {
        let r = campaign(&CampaignConfig::new(["no-such-check"], 1, Seed(1)));
        assert!(matches!(r, Err(Error::UnknownCheck(_))));
    }

    #[test]
    fn negative_control_passes_inverted() {
        let report =
            campaign(&CampaignConfig::new(["ccnot-negative-control"], 2, Seed(0))).unwrap();
        assert!(report.verdict.passed(), "{report:?}");
        assert!(report.checks[0].max_residual > 0.5);
    }

    /// Checks whose operator uses two non-commuting operators on the same
    /// site (projector as control, conjugated flip as target).
    const GENERIC_AXIS_VIOLATIONS: [&str; 2] = ["general-toffoli-vertex", "nsimplex-su2-toffoli"];

    #[test]
    fn generalized_toffoli_violates_vertex_equation_for_generic_axes() {
        for name in GENERIC_AXIS_VIOLATIONS {
            let mut config = CampaignConfig::new([name], 3, Seed(3));
            config.n = Some(3);
            let report = campaign(&config).unwrap();
            assert!(!report.verdict.passed());
            assert!(
                report.checks[0].residuals.iter().all(|r| *r > 1e-3),
                "{report:?}"
            );
        }
    }

    #[test]
    fn every_check_passes_a_short_run() {
        for check in CHECKS
            .iter()
            .filter(|c| !GENERIC_AXIS_VIOLATIONS.contains(&c.name))
        {
            let mut config = CampaignConfig::new([check.name], 2, Seed(3));
            if check.variable_n {
                config.n = Some(3);
            }
            let report = run_check(check, &config).unwrap();
            assert!(report.verdict.passed(), "{}: {report:?}", check.name);
        }
    }

    #[test]
    fn dense_refused_beyond_limit() {
        let mut config = CampaignConfig::new(["nsimplex-constant"], 1, Seed(1));
        config.n = Some(5);
        config.mode = Some(Mode::Dense);
        assert!(matches!(
            campaign(&config),
            Err(Error::DenseTooLarge { sites: 15, .. })
        ));
    }

    #[test]
    fn reports_reproduce_except_timing() {
        let config = CampaignConfig::new(["su2-tetra-vertex", "perm-relations"], 3, Seed(42));
        let mut a = campaign(&config).unwrap();
        let mut b = campaign(&config).unwrap();
        for r in a.checks.iter_mut().chain(b.checks.iter_mut()) {
            r.ms = 0;
        }
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
