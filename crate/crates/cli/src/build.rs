//! Operator construction for `simplex build`.

use std::f64::consts::FRAC_PI_2;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use num_complex::Complex64;

use simplex_core::gates::{reference_gate, GateName};
use simplex_core::operators::{
    conjugated_site_operator, constant_ccz, constant_family, cz_yangbaxter, general_toffoli,
    generic_tetrahedron, n_simplex_operator, n_toffoli_reference, su2_4simplex, su2_tetrahedron,
    toffoli_family, twisted_permutation, ConstantSpec, CouplingConstants, FourSimplexVariant,
    NSimplexKind, QFamily, SpectralAssignment,
};
use simplex_core::su2::{fixed_gate, AxisAngle, FixedGate};
use simplex_core::{DenseOperator, Seed};

use crate::{parse, CliError};

#[allow(clippy::enum_variant_names)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    GenericTetrahedron,
    Su2Tetrahedron,
    ToffoliFamily,
    GeneralToffoli,
    ConstantCcz,
    ConstantFamily,
    CzYangbaxter,
    Su2_4simplex,
    NSimplex,
    TwistedPermutation,
    ConjugatedSiteOperator,
    NToffoliReference,
}

impl Family {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    pub fn description(self) -> &'static str {
        match self {
            Self::GenericTetrahedron => {
                "site-local tetrahedron operator from a Q family and coupling constants"
            }
            Self::Su2Tetrahedron => {
                "SU(2) tetrahedron operator; Toffoli family at the special point"
            }
            Self::ToffoliFamily => "unitary Toffoli family with phase alpha; CCNOT at alpha = 0",
            Self::GeneralToffoli => "1 - Pi^-(i) Pi^-(j) (1 - X~(k)); CCNOT at the special point",
            Self::ConstantCcz => "constant tetrahedron solution diag(1, ..., 1, -1)",
            Self::ConstantFamily => {
                "constant solutions: --alpha, --alpha with --beta, or --a/--b linear"
            }
            Self::CzYangbaxter => "two-site constant Yang-Baxter solution (CZ)",
            Self::Su2_4simplex => {
                "SU(2) 4-simplex operator (--variant); 4-qubit Toffoli at the special point"
            }
            Self::NSimplex => "n-simplex operator (--n, --kind constant|su2-toffoli)",
            Self::TwistedPermutation => "(R_1 R_2) SWAP (R_1 R_2)^dagger from slots i and j",
            Self::ConjugatedSiteOperator => {
                "R D R^dagger for a fixed one-site gate D (--gate) and slot i"
            }
            Self::NToffoliReference => "controlled^(n-1)-NOT built from projectors (--n)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    PaperLiteral,
    ToffoliReducing,
}

impl From<Variant> for FourSimplexVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::PaperLiteral => FourSimplexVariant::PaperLiteral,
            Variant::ToffoliReducing => FourSimplexVariant::ToffoliReducing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Constant,
    Su2Toffoli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum QFamilyArg {
    PauliExp,
    SeededRandom,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Operator family (see `simplex list`).
    #[arg(value_enum)]
    pub family: Family,

    /// Phase alpha (radians or a fraction of pi such as pi/2).
    #[arg(long, value_parser = parse::angle, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Second phase of the constant family.
    #[arg(long, value_parser = parse::angle, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    #[arg(long, value_enum, default_value = "toffoli-reducing")]
    pub variant: Variant,
    /// Use the parameter point at which the family reduces to a Toffoli gate.
    #[arg(long)]
    pub special_point: bool,

    /// Rotation axis of slot i, as x,y,z.
    #[arg(long, value_parser = parse::axis, allow_hyphen_values = true)]
    pub axis_i: Option<[f64; 3]>,
    #[arg(long, value_parser = parse::axis, allow_hyphen_values = true)]
    pub axis_j: Option<[f64; 3]>,
    #[arg(long, value_parser = parse::axis, allow_hyphen_values = true)]
    pub axis_k: Option<[f64; 3]>,
    #[arg(long, value_parser = parse::axis, allow_hyphen_values = true)]
    pub axis_l: Option<[f64; 3]>,
    /// Rotation angle of slot i.
    #[arg(long, value_parser = parse::angle, allow_hyphen_values = true)]
    pub theta_i: Option<f64>,
    #[arg(long, value_parser = parse::angle, allow_hyphen_values = true)]
    pub theta_j: Option<f64>,
    #[arg(long, value_parser = parse::angle, allow_hyphen_values = true)]
    pub theta_k: Option<f64>,
    #[arg(long, value_parser = parse::angle, allow_hyphen_values = true)]
    pub theta_l: Option<f64>,
    /// Per-site parameter `x,y,z:theta` for n-simplex su2-toffoli; repeat once per site.
    #[arg(long, allow_hyphen_values = true)]
    pub site: Vec<String>,

    /// Number of sites for n-simplex and n-toffoli-reference.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "constant")]
    pub kind: Kind,

    /// Coefficient of the identity in the linear constant family.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub a: Option<Complex64>,
    /// Coefficient of |111><111| in the linear constant family.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub b: Option<Complex64>,

    /// Spectral parameters of slots i, j, k for generic-tetrahedron; give three times.
    #[arg(long, value_parser = parse::complex, allow_hyphen_values = true)]
    pub mu: Vec<Complex64>,
    #[arg(long = "family", value_enum, default_value = "pauli-exp")]
    pub q_family: QFamilyArg,
    #[arg(long, default_value_t = 0)]
    pub family_seed: u64,
    /// Seed for random coupling constants of generic-tetrahedron.
    #[arg(long, default_value_t = 0)]
    pub couplings_seed: u64,

    /// One-site gate for conjugated-site-operator.
    #[arg(long, default_value = "X")]
    pub gate: FixedGate,

    /// Output file; defaults to `<family>.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub struct Built {
    pub operator: DenseOperator,
    /// Gate the family is claimed to reduce to, with its label.
    pub reference: Option<(String, DenseOperator)>,
}

fn gate(g: GateName) -> (String, DenseOperator) {
    (
        g.to_string(),
        reference_gate(g).expect("valid reference gate"),
    )
}

fn site_param(spec: &str) -> Result<AxisAngle, CliError> {
    let (axis, theta) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("bad --site `{spec}`: expected x,y,z:theta")))?;
    let axis = parse::axis(axis).map_err(CliError::Usage)?;
    let theta = parse::angle(theta).map_err(CliError::Usage)?;
    AxisAngle::new(axis, theta).map_err(|e| CliError::Usage(e.to_string()))
}

impl BuildArgs {
    fn slot_flags_given(&self) -> bool {
        [self.axis_i, self.axis_j, self.axis_k, self.axis_l]
            .iter()
            .any(Option::is_some)
            || [self.theta_i, self.theta_j, self.theta_k, self.theta_l]
                .iter()
                .any(Option::is_some)
            || !self.site.is_empty()
    }

    /// Slot parameters; unset values fall back to `default`.
    fn slot(&self, slot: usize, default: AxisAngle) -> Result<AxisAngle, CliError> {
        let axis =
            [self.axis_i, self.axis_j, self.axis_k, self.axis_l][slot].unwrap_or(default.axis());
        let theta = [self.theta_i, self.theta_j, self.theta_k, self.theta_l][slot]
            .unwrap_or(default.angle());
        AxisAngle::new(axis, theta).map_err(|e| CliError::Usage(e.to_string()))
    }

    fn alpha(&self) -> f64 {
        if self.special_point {
            0.0
        } else {
            self.alpha.unwrap_or(0.0)
        }
    }

    pub fn output_path(&self) -> PathBuf {
        self.out
            .clone()
            .unwrap_or_else(|| PathBuf::from(format!("{}.json", self.family.name())))
    }

    pub fn build(&self) -> Result<Built, CliError> {
        if self.special_point && (self.slot_flags_given() || self.alpha.is_some()) {
            return Err(CliError::Usage(
                "--special-point fixes every slot and alpha; drop the explicit values".into(),
            ));
        }
        // controls default to (z, pi/2) and targets to (x, pi/2), the special point
        let control = AxisAngle::z(FRAC_PI_2);
        let target = AxisAngle::x(FRAC_PI_2);
        let alpha = self.alpha();
        let plain = |operator| Built {
            operator,
            reference: None,
        };
        let with = |operator, reference| Built {
            operator,
            reference: Some(reference),
        };
        Ok(match self.family {
            Family::GenericTetrahedron => {
                let mu: [Complex64; 3] = match self.mu.len() {
                    0 => [0.3, -0.2, 0.5].map(|x| Complex64::new(x, 0.1)),
                    3 => [self.mu[0], self.mu[1], self.mu[2]],
                    k => return Err(CliError::Usage(format!("--mu given {k} times, need 3"))),
                };
                let family = match self.q_family {
                    QFamilyArg::PauliExp => QFamily::pauli_exp(),
                    QFamilyArg::SeededRandom => QFamily::seeded_random(self.family_seed),
                }?;
                let couplings = CouplingConstants::random(&mut Seed(self.couplings_seed).rng());
                plain(generic_tetrahedron(&family, mu, &couplings)?)
            }
            Family::Su2Tetrahedron => {
                let op = su2_tetrahedron(
                    &self.slot(0, control)?,
                    &self.slot(1, control)?,
                    &self.slot(2, target)?,
                    alpha,
                );
                with(
                    op,
                    (
                        format!("toffoli-family(alpha = {alpha:.6})"),
                        toffoli_family(alpha),
                    ),
                )
            }
            Family::ToffoliFamily => with(toffoli_family(alpha), gate(GateName::Ccnot)),
            Family::GeneralToffoli => {
                let op = general_toffoli(
                    &self.slot(0, control)?,
                    &self.slot(1, control)?,
                    &self.slot(2, target)?,
                )?;
                with(op, gate(GateName::Ccnot))
            }
            Family::ConstantCcz => with(constant_ccz(), gate(GateName::Ccz)),
            Family::ConstantFamily => {
                let spec =
                    match (self.alpha, self.beta, self.a, self.b) {
                        (_, None, None, None) => ConstantSpec::Alpha(alpha),
                        (Some(a), Some(b), None, None) => ConstantSpec::AlphaBeta(a, b),
                        (None, None, Some(a), Some(b)) => ConstantSpec::Linear(a, b),
                        _ => return Err(CliError::Usage(
                            "constant-family takes --alpha, --alpha with --beta, or --a with --b"
                                .into(),
                        )),
                    };
                plain(constant_family(spec))
            }
            Family::CzYangbaxter => with(cz_yangbaxter(), gate(GateName::Cz)),
            Family::Su2_4simplex => {
                let params = [
                    self.slot(0, control)?,
                    self.slot(1, control)?,
                    self.slot(2, control)?,
                    self.slot(3, target)?,
                ];
                with(
                    su2_4simplex(&params, alpha, self.variant.into()),
                    gate(GateName::NToffoli(4)),
                )
            }
            Family::NSimplex => {
                let n = self.n;
                match self.kind {
                    Kind::Constant => plain(n_simplex_operator(
                        n,
                        &SpectralAssignment::new(Vec::new()),
                        NSimplexKind::Constant(alpha),
                    )?),
                    Kind::Su2Toffoli => {
                        let params = if self.site.is_empty() {
                            let mut p = vec![control; n.saturating_sub(1)];
                            p.push(target);
                            p
                        } else if self.site.len() == n {
                            self.site
                                .iter()
                                .map(|s| site_param(s))
                                .collect::<Result<_, _>>()?
                        } else {
                            return Err(CliError::Usage(format!(
                                "--site given {} times, need n = {n}",
                                self.site.len()
                            )));
                        };
                        let op = n_simplex_operator(
                            n,
                            &SpectralAssignment::su2(params),
                            NSimplexKind::Su2Toffoli,
                        )?;
                        with(op, gate(GateName::NToffoli(n)))
                    }
                }
            }
            Family::TwistedPermutation => plain(twisted_permutation(
                &self.slot(0, control)?,
                &self.slot(1, target)?,
            )),
            Family::ConjugatedSiteOperator => plain(conjugated_site_operator(
                &self.slot(0, control)?,
                &fixed_gate(self.gate),
            )?),
            Family::NToffoliReference => {
                if self.n < 2 {
                    return Err(simplex_core::Error::InvalidOrder(self.n).into());
                }
                with(
                    n_toffoli_reference(self.n),
                    gate(GateName::NToffoli(self.n)),
                )
            }
        })
    }
}
