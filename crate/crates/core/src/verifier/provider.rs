use num_complex::Complex64;

use crate::error::Result;
use crate::operators::{
    general_toffoli, generic_tetrahedron, n_simplex_operator, su2_4simplex, su2_tetrahedron,
    CouplingConstants, FourSimplexVariant, NSimplexKind, QFamily, SpectralAssignment,
};
use crate::tensor::{DenseOperator, SiteTuple};

/// Builds the operator that acts on `sites`, reading the spectral
/// parameters of those sites from the assignment.
pub trait OperatorProvider: Sync {
    fn operator(&self, sites: &SiteTuple, assignment: &SpectralAssignment)
        -> Result<DenseOperator>;
}

impl<F> OperatorProvider for F
where
    F: Fn(&SiteTuple, &SpectralAssignment) -> Result<DenseOperator> + Sync,
{
    fn operator(
        &self,
        sites: &SiteTuple,
        assignment: &SpectralAssignment,
    ) -> Result<DenseOperator> {
        self(sites, assignment)
    }
}

/// Same operator at every tuple; spectral parameters are ignored.
pub struct Constant(pub DenseOperator);

impl OperatorProvider for Constant {
    fn operator(&self, _: &SiteTuple, _: &SpectralAssignment) -> Result<DenseOperator> {
        Ok(self.0.clone())
    }
}

pub struct GenericTetrahedron {
    pub family: QFamily,
    pub couplings: CouplingConstants,
}

impl OperatorProvider for GenericTetrahedron {
    fn operator(&self, sites: &SiteTuple, a: &SpectralAssignment) -> Result<DenseOperator> {
        let s = sites.sites();
        let mu: [Complex64; 3] = [
            a.complex_at(s[0])?,
            a.complex_at(s[1])?,
            a.complex_at(s[2])?,
        ];
        generic_tetrahedron(&self.family, mu, &self.couplings)
    }
}

/// SU(2) tetrahedron operator with the assignment's `alpha`.
pub struct Su2Tetrahedron;

impl OperatorProvider for Su2Tetrahedron {
    fn operator(&self, sites: &SiteTuple, a: &SpectralAssignment) -> Result<DenseOperator> {
        let s = sites.sites();
        Ok(su2_tetrahedron(
            &a.su2_at(s[0])?,
            &a.su2_at(s[1])?,
            &a.su2_at(s[2])?,
            a.alpha,
        ))
    }
}

pub struct GeneralToffoli;

impl OperatorProvider for GeneralToffoli {
    fn operator(&self, sites: &SiteTuple, a: &SpectralAssignment) -> Result<DenseOperator> {
        let s = sites.sites();
        general_toffoli(&a.su2_at(s[0])?, &a.su2_at(s[1])?, &a.su2_at(s[2])?)
    }
}

pub struct Su2FourSimplex(pub FourSimplexVariant);

impl OperatorProvider for Su2FourSimplex {
    fn operator(&self, sites: &SiteTuple, a: &SpectralAssignment) -> Result<DenseOperator> {
        let s = sites.sites();
        let p = [
            a.su2_at(s[0])?,
            a.su2_at(s[1])?,
            a.su2_at(s[2])?,
            a.su2_at(s[3])?,
        ];
        Ok(su2_4simplex(&p, a.alpha, self.0))
    }
}

/// n-simplex operator whose slot `j` reads the parameters of `sites[j]`.
pub struct NSimplex(pub NSimplexKind);

impl OperatorProvider for NSimplex {
    fn operator(&self, sites: &SiteTuple, a: &SpectralAssignment) -> Result<DenseOperator> {
        match self.0 {
            NSimplexKind::Constant(_) => n_simplex_operator(sites.len(), a, self.0),
            NSimplexKind::Su2Toffoli => {
                let local = a.relabeled(sites.sites())?;
                n_simplex_operator(sites.len(), &local, self.0)
            }
        }
    }
}
