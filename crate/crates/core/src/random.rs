//! Seeded sampling of operators, states, and unitaries for randomized checks.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::tensor::{DenseOperator, StateVector, ZERO};

pub fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Operator with independent standard complex Gaussian entries.
pub fn random_operator(arity: usize, rng: &mut impl Rng) -> DenseOperator {
    let n = 1usize << (2 * arity);
    let entries = (0..n).map(|_| gaussian_complex(rng)).collect();
    DenseOperator::new(arity, entries).expect("entry count matches arity")
}

/// Uniformly random unit vector.
pub fn random_state(register_size: usize, rng: &mut impl Rng) -> StateVector {
    let mut amps: Vec<Complex64> = (0..1usize << register_size)
        .map(|_| gaussian_complex(rng))
        .collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    StateVector::new(register_size, amps).expect("length matches register")
}

/// Unitary from Gram-Schmidt on the columns of a Gaussian matrix.
pub fn random_unitary(arity: usize, rng: &mut impl Rng) -> DenseOperator {
    let g = random_operator(arity, rng);
    let dim = g.dim();
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    for c in 0..dim {
        let mut v: Vec<Complex64> = (0..dim).map(|r| g.get(r, c)).collect();
        for q in &cols {
            let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            v.iter_mut().zip(q).for_each(|(x, qi)| *x -= proj * qi);
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|x| *x /= norm);
        cols.push(v);
    }
    let mut entries = vec![ZERO; dim * dim];
    for (c, col) in cols.iter().enumerate() {
        for (r, x) in col.iter().enumerate() {
            entries[r * dim + c] = *x;
        }
    }
    DenseOperator::new(arity, entries).expect("square")
}

/// Unit vector uniform on the sphere (normalized Gaussian triple).
pub fn random_axis(rng: &mut impl Rng) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        ];
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return [v[0] / norm, v[1] / norm, v[2] / norm];
        }
    }
}
