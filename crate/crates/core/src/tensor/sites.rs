use crate::error::{Error, Result};

/// Ordered, distinct 1-based site indices inside an `n`-site register.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SiteTuple {
    sites: Vec<usize>,
    register_size: usize,
}

impl SiteTuple {
    pub fn new(sites: Vec<usize>, register_size: usize) -> Result<Self> {
        for (i, &s) in sites.iter().enumerate() {
            if s == 0 || s > register_size {
                return Err(Error::SiteOutOfRange {
                    site: s,
                    register_size,
                });
            }
            if sites[..i].contains(&s) {
                return Err(Error::DuplicateSite(s));
            }
        }
        Ok(Self {
            sites,
            register_size,
        })
    }

    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn register_size(&self) -> usize {
        self.register_size
    }

    /// Bit position (counted from the least significant bit) of a site.
    pub(crate) fn bit_of(&self, site: usize) -> usize {
        self.register_size - site
    }

    /// Mask with the bits of every listed site set.
    pub(crate) fn mask(&self) -> usize {
        self.sites.iter().fold(0, |m, &s| m | (1 << self.bit_of(s)))
    }

    /// `offsets[sub]` is the register index contribution of the local basis
    /// state `sub`, whose most significant bit belongs to `sites[0]`.
    pub(crate) fn offsets(&self) -> Vec<usize> {
        let k = self.sites.len();
        (0..1usize << k)
            .map(|sub| {
                self.sites.iter().enumerate().fold(0, |acc, (j, &s)| {
                    if (sub >> (k - 1 - j)) & 1 == 1 {
                        acc | (1 << self.bit_of(s))
                    } else {
                        acc
                    }
                })
            })
            .collect()
    }
}
