//! n-simplex equation instances and their residuals, in dense and
//! matrix-free form, plus the registered verification campaign.

mod checks;
mod provider;
mod relations;
mod report;
mod residual;
mod scheme;

pub use checks::{campaign, find_check, run_check, CampaignConfig, Check, TrialContext, CHECKS};
pub use provider::{
    Constant, GeneralToffoli, GenericTetrahedron, NSimplex, OperatorProvider, Su2FourSimplex,
    Su2Tetrahedron,
};
pub use relations::{
    permutation_relation_suite, relation_residuals, RELATION_LABELS, RELATION_TOLERANCE,
};
pub use report::{CampaignReport, Measure, Predicate, Verdict, VerificationReport, CONVENTION};
pub use residual::{
    column_reconstructed_residual, dense_sides, edge_residual_3, equation_residual,
    matrix_free_sides, vertex_residual, Mode, Residual, DEFAULT_VECTORS, DENSE_SITE_LIMIT,
};
pub use scheme::{edge_tuples_3, index_scheme, SimplexIndexScheme};
