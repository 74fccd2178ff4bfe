use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::family::sample_mu;
use crate::error::{Error, Result};
use crate::su2::AxisAngle;

/// Spectral data attached to one site.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SiteParams {
    Complex(Complex64),
    Su2(AxisAngle),
}

impl SiteParams {
    fn kind(&self) -> &'static str {
        match self {
            Self::Complex(_) => "complex",
            Self::Su2(_) => "su2",
        }
    }
}

/// Per-site spectral parameters for a whole register, plus the global
/// phase parameters `alpha` and `beta` shared by every operator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralAssignment {
    pub sites: Vec<SiteParams>,
    pub alpha: f64,
    pub beta: f64,
}

impl SpectralAssignment {
    pub fn new(sites: Vec<SiteParams>) -> Self {
        Self {
            sites,
            alpha: 0.0,
            beta: 0.0,
        }
    }

    pub fn complex(mus: impl IntoIterator<Item = Complex64>) -> Self {
        Self::new(mus.into_iter().map(SiteParams::Complex).collect())
    }

    pub fn su2(params: impl IntoIterator<Item = AxisAngle>) -> Self {
        Self::new(params.into_iter().map(SiteParams::Su2).collect())
    }

    pub fn random_complex(register_size: usize, rng: &mut impl Rng) -> Self {
        Self::complex(
            (0..register_size)
                .map(|_| sample_mu(rng))
                .collect::<Vec<_>>(),
        )
    }

    /// Random axis-angle on every site and `alpha` uniform in `[-pi, pi)`.
    pub fn random_su2(register_size: usize, rng: &mut impl Rng) -> Self {
        let sites: Vec<_> = (0..register_size).map(|_| AxisAngle::random(rng)).collect();
        let alpha = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        Self::su2(sites).with_alpha(alpha)
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = beta;
        self
    }

    pub fn register_size(&self) -> usize {
        self.sites.len()
    }

    /// Parameters of a 1-based site.
    pub fn get(&self, site: usize) -> Result<&SiteParams> {
        site.checked_sub(1)
            .and_then(|i| self.sites.get(i))
            .ok_or(Error::UnassignedSite(site))
    }

    pub fn complex_at(&self, site: usize) -> Result<Complex64> {
        match self.get(site)? {
            SiteParams::Complex(mu) => Ok(*mu),
            other => Err(Error::WrongParameterKind {
                site,
                expected: "complex",
                found: other.kind(),
            }),
        }
    }

    pub fn su2_at(&self, site: usize) -> Result<AxisAngle> {
        match self.get(site)? {
            SiteParams::Su2(p) => Ok(*p),
            other => Err(Error::WrongParameterKind {
                site,
                expected: "su2",
                found: other.kind(),
            }),
        }
    }

    /// Copy with site `s` taking the parameters of site `relabel[s - 1]`
    /// of `self`.
    pub fn relabeled(&self, relabel: &[usize]) -> Result<Self> {
        let sites = relabel
            .iter()
            .map(|&s| self.get(s).copied())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            sites,
            alpha: self.alpha,
            beta: self.beta,
        })
    }
}
