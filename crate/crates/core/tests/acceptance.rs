//! Exit criteria, one line per criterion. Runs under `cargo test` with a
//! custom harness and exits non-zero if any criterion fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::Rng;

use simplex_core::gates::{local_conjugate, reference_gate, GateName};
use simplex_core::operators::{
    constant_ccz, constant_family, cz_yangbaxter, general_toffoli, su2_4simplex, toffoli_family,
    ConstantSpec, FourSimplexVariant, SpectralAssignment,
};
use simplex_core::random::{gaussian_complex, random_operator, random_state};
use simplex_core::su2::{fixed_gate, AxisAngle, FixedGate};
use simplex_core::tensor::{apply, embed, frobenius_distance, is_unitary, I};
use simplex_core::verifier::{
    campaign, column_reconstructed_residual, index_scheme, vertex_residual, CampaignConfig,
    Constant, Mode, OperatorProvider, Su2Tetrahedron,
};
use simplex_core::{DenseOperator, Seed, SiteTuple, StateVector, Tolerance};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn within(elapsed: Duration, limit_s: f64) -> bool {
    elapsed.as_secs_f64() < limit_s
}

fn dist(a: &DenseOperator, b: &DenseOperator) -> f64 {
    frobenius_distance(a, b).unwrap()
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, f64::max)
}

fn c1_toffoli_reduction() -> Outcome {
    let ccnot = reference_gate(GateName::Ccnot).unwrap();
    let d_family = dist(&toffoli_family(0.0), &ccnot);
    let z = AxisAngle::z(FRAC_PI_2);
    let d_general = dist(
        &general_toffoli(&z, &z, &AxisAngle::x(0.0)).unwrap(),
        &ccnot,
    );
    Outcome::new(
        d_family < 1e-15 && d_general < 1e-15,
        format!("toffoli_family(0) {d_family:.1e}, general_toffoli {d_general:.1e} (< 1e-15)"),
    )
}

fn c2_su2_vertex() -> Outcome {
    let start = Instant::now();
    let report = campaign(&CampaignConfig::new(["su2-tetra-vertex"], 100, Seed(42))).unwrap();
    let elapsed = start.elapsed();
    let r = &report.checks[0];
    let ok = r.trials == 100 && r.residuals.iter().all(|x| *x < 1e-11) && within(elapsed, 5.0);
    Outcome::new(
        ok,
        format!(
            "100 trials, max normalized {:.2e} (< 1e-11), {:.2}s (< 5s)",
            r.max_residual,
            elapsed.as_secs_f64()
        ),
    )
}

fn c3_generic_solution() -> Outcome {
    let start = Instant::now();
    let report = campaign(&CampaignConfig::new(
        ["generic-tetra-vertex", "edge-form-3"],
        100,
        Seed(7),
    ))
    .unwrap();
    let elapsed = start.elapsed();
    let (v, e) = (&report.checks[0], &report.checks[1]);
    let ok = v.residuals.iter().chain(&e.residuals).all(|x| *x < 1e-11)
        && v.trials == 100
        && e.trials == 100
        && within(elapsed, 5.0);
    Outcome::new(
        ok,
        format!(
            "vertex max {:.2e}, edge max {:.2e} (< 1e-11), {:.2}s (< 5s)",
            v.max_residual,
            e.max_residual,
            elapsed.as_secs_f64()
        ),
    )
}

fn c4_constant_solutions() -> Outcome {
    let start = Instant::now();
    let mut rng = Seed(4).rng();
    let empty = SpectralAssignment::new(Vec::new());
    let residual = |op: DenseOperator| {
        vertex_residual(3, &Constant(op), &empty, Mode::Dense, Seed(0))
            .unwrap()
            .normalized
    };
    let unimodular = [
        constant_ccz(),
        constant_family(ConstantSpec::Alpha(rng.gen_range(-PI..PI))),
        constant_family(ConstantSpec::AlphaBeta(
            rng.gen_range(-PI..PI),
            rng.gen_range(-PI..PI),
        )),
    ];
    let linear: Vec<_> = (0..20)
        .map(|_| {
            constant_family(ConstantSpec::Linear(
                gaussian_complex(&mut rng),
                gaussian_complex(&mut rng),
            ))
        })
        .collect();
    let worst = max_of(
        unimodular
            .iter()
            .chain(&linear)
            .map(|op| residual(op.clone())),
    );
    let exact = Tolerance::absolute(1e-15);
    let unitary_ok = unimodular.iter().all(|op| is_unitary(op, exact));
    let non_unitary_detected = linear
        .iter()
        .all(|op| !is_unitary(op, Tolerance::default()));
    let elapsed = start.elapsed();
    Outcome::new(
        worst < 1e-12 && unitary_ok && non_unitary_detected && within(elapsed, 2.0),
        format!(
            "max vertex residual {worst:.1e} (< 1e-12), unimodular unitary: {unitary_ok}, generic linear flagged non-unitary: {non_unitary_detected}, {:.2}s (< 2s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn c5_hadamard_bridges() -> Outcome {
    let id = DenseOperator::identity(1);
    let h = fixed_gate(FixedGate::H);
    let target_h = [id.clone(), id.clone(), h.clone()];
    let ccnot = reference_gate(GateName::Ccnot).unwrap();
    let mut worst = dist(
        &local_conjugate(&constant_ccz(), &target_h).unwrap(),
        &ccnot,
    );
    let mut rng = Seed(5).rng();
    for _ in 0..20 {
        let alpha = rng.gen_range(-PI..PI);
        let bridged =
            local_conjugate(&constant_family(ConstantSpec::Alpha(alpha)), &target_h).unwrap();
        worst = worst.max(dist(&bridged, &toffoli_family(alpha)));
    }
    let cnot = reference_gate(GateName::Cnot).unwrap();
    worst = worst.max(dist(
        &local_conjugate(&cz_yangbaxter(), &[id, h]).unwrap(),
        &cnot,
    ));
    Outcome::new(worst < 1e-14, format!("max distance {worst:.1e} (< 1e-14)"))
}

fn c6_four_simplex() -> Outcome {
    let start = Instant::now();
    let report = campaign(&CampaignConfig::new(
        ["su2-4simplex-literal", "su2-4simplex-reducing"],
        20,
        Seed(6),
    ))
    .unwrap();
    let elapsed = start.elapsed();
    let equations_ok = report
        .checks
        .iter()
        .all(|r| r.mode == "dense" && r.trials == 20 && r.residuals.iter().all(|x| *x < 1e-10));

    let z = AxisAngle::z(FRAC_PI_2);
    let point = [z, z, z, AxisAngle::x(FRAC_PI_2)];
    let cccnot = reference_gate(GateName::NToffoli(4)).unwrap();
    let d_reducing = dist(
        &su2_4simplex(&point, 0.0, FourSimplexVariant::ToffoliReducing),
        &cccnot,
    );
    let d_literal = dist(
        &su2_4simplex(&point, 0.0, FourSimplexVariant::PaperLiteral),
        &cccnot,
    );
    Outcome::new(
        equations_ok && d_reducing < 1e-14 && d_literal > 0.5 && within(elapsed, 60.0),
        format!(
            "literal max {:.2e}, reducing max {:.2e} (< 1e-10, 1024x1024), {:.1}s (< 60s); reducing vs CCCNOT {d_reducing:.1e} (< 1e-14), literal vs CCCNOT {d_literal:.4} (> 0.5)",
            report.checks[0].max_residual,
            report.checks[1].max_residual,
            elapsed.as_secs_f64()
        ),
    )
}

fn c7_five_simplex_matrix_free() -> Outcome {
    let start = Instant::now();
    let mut config =
        CampaignConfig::new(["nsimplex-constant", "nsimplex-su2-toffoli"], 3, Seed(11));
    config.n = Some(5);
    config.mode = Some(Mode::MatrixFree { vectors: 20 });
    let report = campaign(&config).unwrap();
    let elapsed = start.elapsed();
    let parts: Vec<String> = report
        .checks
        .iter()
        .map(|r| {
            let worst = max_of(r.raw_residuals.iter().copied());
            format!(
                "{} max per-vector {worst:.2e} [{}]",
                r.check,
                if r.verdict.passed() { "ok" } else { "VIOLATED" }
            )
        })
        .collect();
    let ok = report
        .checks
        .iter()
        .all(|r| r.n == Some(5) && r.raw_residuals.iter().all(|x| *x < 1e-10))
        && within(elapsed, 60.0);
    Outcome::new(
        ok,
        format!(
            "15 sites, 20 vectors: {} (< 1e-10), {:.1}s (< 60s)",
            parts.join("; "),
            elapsed.as_secs_f64()
        ),
    )
}

fn c8_twisted_permutations() -> Outcome {
    let start = Instant::now();
    let report = campaign(&CampaignConfig::new(["perm-relations"], 100, Seed(8))).unwrap();
    let elapsed = start.elapsed();
    let r = &report.checks[0];
    Outcome::new(
        r.trials == 100 && r.residuals.iter().all(|x| *x < 1e-13) && within(elapsed, 5.0),
        format!(
            "100 draws, max residual {:.1e} (< 1e-13), {:.2}s (< 5s)",
            r.max_residual,
            elapsed.as_secs_f64()
        ),
    )
}

fn c9_negative_control() -> Outcome {
    let ccnot = reference_gate(GateName::Ccnot).unwrap();
    let empty = SpectralAssignment::new(Vec::new());
    let residual =
        vertex_residual(3, &Constant(ccnot.clone()), &empty, Mode::Dense, Seed(0)).unwrap();

    let scheme = index_scheme(3).unwrap();
    let start = StateVector::from_bits("111111").unwrap();
    let run = |order: &mut dyn Iterator<Item = &SiteTuple>| {
        order.fold(start.clone(), |v, t| apply(&ccnot, t, &v).unwrap())
    };
    // rightmost factor acts first
    let lhs = run(&mut scheme.tuples.iter().rev());
    let rhs = run(&mut scheme.tuples.iter());
    let bits = |v: &StateVector| v.as_basis_state(0.0).map(|i| StateVector::bits_of(6, i));
    let (l, r) = (bits(&lhs), bits(&rhs));
    let ok = residual.normalized > 0.5
        && l.as_deref() == Some("110101")
        && r.as_deref() == Some("110100");
    Outcome::new(
        ok,
        format!(
            "normalized residual {:.4} (raw {:.4}) > 0.5; |111111> -> LHS {:?}, RHS {:?}",
            residual.normalized, residual.raw, l, r
        ),
    )
}

fn c10_oracle_equivalence() -> Outcome {
    let mut rng = Seed(10).rng();
    let mut worst_apply: f64 = 0.0;
    for _ in 0..100 {
        let op = random_operator(3, &mut rng);
        let mut sites: Vec<usize> = (1..=8).collect();
        for i in 0..3 {
            let j = rng.gen_range(i..8);
            sites.swap(i, j);
        }
        let at = SiteTuple::new(sites[..3].to_vec(), 8).unwrap();
        let v = random_state(8, &mut rng);
        let fast = apply(&op, &at, &v).unwrap();
        let dense = embed(&op, &at).unwrap();
        let slow: Vec<Complex64> = (0..256)
            .map(|r| (0..256).map(|c| dense.get(r, c) * v.amplitudes()[c]).sum())
            .collect();
        worst_apply = worst_apply.max(fast.distance(&StateVector::new(8, slow).unwrap()));
    }

    let scheme = index_scheme(3).unwrap();
    let a = SpectralAssignment::random_su2(6, &mut rng);
    // a deliberately non-solution so both residuals are O(1)
    let perturbed =
        |t: &SiteTuple, a: &SpectralAssignment| -> simplex_core::Result<DenseOperator> {
            let base = Su2Tetrahedron.operator(t, a)?;
            Ok(&base + &reference_gate(GateName::Ccnot)?.scale(I))
        };
    let dense = vertex_residual(3, &perturbed, &a, Mode::Dense, Seed(0))
        .unwrap()
        .raw;
    let columns = column_reconstructed_residual(&scheme.tuples, &perturbed, &a).unwrap();
    let gap = (dense - columns).abs();
    Outcome::new(
        worst_apply < 1e-13 && gap < 1e-12,
        format!("apply vs embed max {worst_apply:.1e} (< 1e-13); column reconstruction {columns:.6} vs dense {dense:.6}, gap {gap:.1e} (< 1e-12)"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 Toffoli reduction", c1_toffoli_reduction),
        (
            "2 SU(2) tetrahedron spectral vertex equation",
            c2_su2_vertex,
        ),
        (
            "3 generic trivial solution (vertex + edge)",
            c3_generic_solution,
        ),
        ("4 constant solutions", c4_constant_solutions),
        ("5 Hadamard bridges", c5_hadamard_bridges),
        ("6 4-simplex (both variants)", c6_four_simplex),
        ("7 n = 5 matrix-free scaling", c7_five_simplex_matrix_free),
        ("8 twisted permutations", c8_twisted_permutations),
        ("9 negative control", c9_negative_control),
        ("10 oracle equivalence", c10_oracle_equivalence),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        let outcome = criterion();
        println!(
            "[{}] {name}: {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
        if !outcome.pass {
            failed.push(name);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} failed: {}", failed.len(), failed.join(", "));
        ExitCode::FAILURE
    }
}
