use crate::error::{Error, Result};
use crate::tensor::SiteTuple;

/// Site tuples of one n-simplex equation instance.
///
/// Sites are the 2-subsets `{a, b}` of `{1, ..., n+1}` numbered in
/// lexicographic order; operator `a` acts on every site whose pair contains
/// `a`, in increasing site order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexIndexScheme {
    pub n: usize,
    pub register_size: usize,
    pub tuples: Vec<SiteTuple>,
}

pub fn index_scheme(n: usize) -> Result<SimplexIndexScheme> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let pairs: Vec<(usize, usize)> = (1..=n + 1)
        .flat_map(|a| (a + 1..=n + 1).map(move |b| (a, b)))
        .collect();
    let register_size = pairs.len();
    let tuples = (1..=n + 1)
        .map(|a| {
            let sites = pairs
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| x == a || y == a)
                .map(|(i, _)| i + 1)
                .collect();
            SiteTuple::new(sites, register_size)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimplexIndexScheme {
        n,
        register_size,
        tuples,
    })
}

/// Tuples of the 4-site edge form `T123 T124 T134 T234`.
pub fn edge_tuples_3() -> Vec<SiteTuple> {
    [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
        .into_iter()
        .map(|s| SiteTuple::new(s.to_vec(), 4).expect("valid sites"))
        .collect()
}
