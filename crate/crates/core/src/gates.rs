//! Reference gates and local-unitary conjugation. Controls occupy the leading
//! sites and the target the last one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{kron_all, DenseOperator, ONE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateName {
    Cnot,
    Cz,
    Swap,
    Ccnot,
    Ccz,
    /// Controlled^{n-1}-NOT on `n` sites.
    NToffoli(usize),
}

impl fmt::Display for GateName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cnot => f.write_str("CNOT"),
            Self::Cz => f.write_str("CZ"),
            Self::Swap => f.write_str("SWAP"),
            Self::Ccnot => f.write_str("CCNOT"),
            Self::Ccz => f.write_str("CCZ"),
            Self::NToffoli(n) => write!(f, "NTOFFOLI({n})"),
        }
    }
}

impl FromStr for GateName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        match upper.as_str() {
            "CNOT" => Ok(Self::Cnot),
            "CZ" => Ok(Self::Cz),
            "SWAP" => Ok(Self::Swap),
            "CCNOT" | "TOFFOLI" => Ok(Self::Ccnot),
            "CCZ" => Ok(Self::Ccz),
            _ => upper
                .strip_prefix("NTOFFOLI(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|n| n.parse().ok())
                .map(Self::NToffoli)
                .ok_or_else(|| Error::UnknownGate(s.to_string())),
        }
    }
}

fn controlled_flip(arity: usize) -> DenseOperator {
    // swap the last two basis states
    let dim = 1usize << arity;
    DenseOperator::permutation(arity, |c| if c >= dim - 2 { c ^ 1 } else { c })
}

fn controlled_phase(arity: usize) -> DenseOperator {
    let dim = 1usize << arity;
    let mut diag = vec![ONE; dim];
    diag[dim - 1] = -ONE;
    DenseOperator::diagonal(arity, &diag).expect("dimension matches")
}

pub fn reference_gate(g: GateName) -> Result<DenseOperator> {
    Ok(match g {
        GateName::Cnot => controlled_flip(2),
        GateName::Cz => controlled_phase(2),
        GateName::Swap => DenseOperator::permutation(2, |c| ((c & 1) << 1) | (c >> 1)),
        GateName::Ccnot => controlled_flip(3),
        GateName::Ccz => controlled_phase(3),
        GateName::NToffoli(n) if n >= 2 => controlled_flip(n),
        GateName::NToffoli(n) => return Err(Error::InvalidOrder(n)),
    })
}

/// `(s_1 x ... x s_k) op (s_1 x ... x s_k)^dagger`.
pub fn local_conjugate(op: &DenseOperator, singles: &[DenseOperator]) -> Result<DenseOperator> {
    if singles.len() != op.arity() {
        return Err(Error::ArityMismatch {
            expected: op.arity(),
            found: singles.len(),
        });
    }
    if let Some(bad) = singles.iter().find(|s| s.arity() != 1) {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: bad.arity(),
        });
    }
    let u = kron_all(singles);
    Ok(&(&u * op) * &u.adjoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_unitary;
    use crate::su2::{fixed_gate, FixedGate};
    use crate::tensor::{frobenius_distance, is_unitary, Seed, Tolerance, ZERO};

    fn h() -> DenseOperator {
        fixed_gate(FixedGate::H)
    }

    fn id() -> DenseOperator {
        DenseOperator::identity(1)
    }

    #[test]
    fn ccnot_swaps_last_two_rows() {
        let g = reference_gate(GateName::Ccnot).unwrap();
        for r in 0..8 {
            for c in 0..8 {
                let want = match (r, c) {
                    (6, 7) | (7, 6) => ONE,
                    (6, 6) | (7, 7) => ZERO,
                    _ if r == c => ONE,
                    _ => ZERO,
                };
                assert_eq!(g.get(r, c), want);
            }
        }
        assert_eq!(reference_gate(GateName::NToffoli(3)).unwrap(), g);
    }

    #[test]
    fn n_toffoli_and_phase_gates() {
        let g = reference_gate(GateName::NToffoli(4)).unwrap();
        assert_eq!(g.dim(), 16);
        assert_eq!(g.get(14, 15), ONE);
        assert_eq!(g.get(15, 14), ONE);
        assert_eq!(g.get(13, 13), ONE);
        let ccz = reference_gate(GateName::Ccz).unwrap();
        assert_eq!(ccz.get(7, 7), -ONE);
        assert_eq!(ccz.get(6, 6), ONE);
        assert_eq!(
            reference_gate(GateName::NToffoli(2)).unwrap(),
            reference_gate(GateName::Cnot).unwrap()
        );
        assert!(matches!(
            reference_gate(GateName::NToffoli(1)),
            Err(Error::InvalidOrder(1))
        ));
    }

    #[test]
    fn swap_exchanges_sites() {
        let s = reference_gate(GateName::Swap).unwrap();
        // |01> <-> |10>
        assert_eq!(s.get(2, 1), ONE);
        assert_eq!(s.get(1, 2), ONE);
        assert_eq!(s.get(0, 0), ONE);
        assert_eq!(s.get(3, 3), ONE);
    }

    #[test]
    fn hadamard_conjugation_gives_not_gates() {
        let ccz = reference_gate(GateName::Ccz).unwrap();
        let ccnot = reference_gate(GateName::Ccnot).unwrap();
        let conj = local_conjugate(&ccz, &[id(), id(), h()]).unwrap();
        assert!(frobenius_distance(&conj, &ccnot).unwrap() < 1e-15);

        let cz = reference_gate(GateName::Cz).unwrap();
        let cnot = reference_gate(GateName::Cnot).unwrap();
        let conj = local_conjugate(&cz, &[id(), h()]).unwrap();
        assert!(frobenius_distance(&conj, &cnot).unwrap() < 1e-15);
    }

    #[test]
    fn identity_conjugation_is_exact() {
        let mut rng = Seed(5).rng();
        let op = random_unitary(3, &mut rng);
        assert_eq!(local_conjugate(&op, &[id(), id(), id()]).unwrap(), op);
    }

    #[test]
    fn conjugation_arity_errors() {
        let ccz = reference_gate(GateName::Ccz).unwrap();
        assert!(matches!(
            local_conjugate(&ccz, &[id(), h()]),
            Err(Error::ArityMismatch {
                expected: 3,
                found: 2
            })
        ));
        assert!(local_conjugate(&ccz, &[id(), id(), DenseOperator::identity(2)]).is_err());
    }

    #[test]
    fn conjugation_preserves_unitarity_and_spectrum() {
        let mut rng = Seed(6).rng();
        for _ in 0..10 {
            let op = random_unitary(3, &mut rng);
            let singles: Vec<_> = (0..3).map(|_| random_unitary(1, &mut rng)).collect();
            let conj = local_conjugate(&op, &singles).unwrap();
            assert!(is_unitary(&conj, Tolerance::default()));
            let a = op.characteristic_polynomial();
            let b = conj.characteristic_polynomial();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).norm() < 1e-12, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for g in [
            GateName::Cnot,
            GateName::Cz,
            GateName::Swap,
            GateName::Ccnot,
            GateName::Ccz,
            GateName::NToffoli(5),
        ] {
            assert_eq!(g.to_string().parse::<GateName>().unwrap(), g);
        }
        assert!("FOO".parse::<GateName>().is_err());
    }
}
