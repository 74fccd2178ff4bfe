use num_complex::Complex64;

use super::{DenseOperator, SiteTuple, StateVector, ZERO};
use crate::error::{Error, Result};

fn check_arity(op: &DenseOperator, at: &SiteTuple) -> Result<()> {
    if op.arity() != at.len() {
        return Err(Error::ArityMismatch {
            expected: at.len(),
            found: op.arity(),
        });
    }
    Ok(())
}

/// Materializes `op` acting on `at` (slot `j` of `op` on `at.sites()[j]`)
/// and identity on the rest of the register.
pub fn embed(op: &DenseOperator, at: &SiteTuple) -> Result<DenseOperator> {
    check_arity(op, at)?;
    let n = at.register_size();
    let dim = 1usize << n;
    let local = op.dim();
    let offsets = at.offsets();
    let mask = at.mask();

    let mut out = DenseOperator::zeros(n);
    for col in 0..dim {
        let rest = col & !mask;
        let sub_col = offsets
            .iter()
            .position(|&o| o == col & mask)
            .expect("offsets cover every masked pattern");
        for (sub_row, &row_off) in offsets.iter().enumerate() {
            let value = op.entries()[sub_row * local + sub_col];
            if value != ZERO {
                out.set(rest | row_off, col, value);
            }
        }
    }
    Ok(out)
}

/// `embed(op, at) * v` without forming the embedded matrix.
///
/// Walks the `2^(n-k)` amplitude groups that share the untouched bits and
/// applies the `2^k x 2^k` block to each, writing into one output buffer.
pub fn apply(op: &DenseOperator, at: &SiteTuple, v: &StateVector) -> Result<StateVector> {
    check_arity(op, at)?;
    if at.register_size() != v.register_size() {
        return Err(Error::ArityMismatch {
            expected: at.register_size(),
            found: v.register_size(),
        });
    }
    let n = v.register_size();
    let dim = 1usize << n;
    let local = op.dim();
    let offsets = at.offsets();
    let mask = at.mask();
    let entries = op.entries();
    let input = v.amplitudes();

    let mut out = vec![ZERO; dim];
    let mut gathered = vec![ZERO; local];
    let mut base = 0usize;
    loop {
        for (g, &off) in gathered.iter_mut().zip(&offsets) {
            *g = input[base | off];
        }
        for (row, &off) in offsets.iter().enumerate() {
            let coeffs = &entries[row * local..(row + 1) * local];
            out[base | off] = coeffs
                .iter()
                .zip(&gathered)
                .map(|(a, x)| a * x)
                .sum::<Complex64>();
        }
        // next index with all target bits clear
        base = ((base | mask) + 1) & !mask;
        if base >= dim || base == 0 {
            break;
        }
    }
    StateVector::new(n, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{reference_gate, GateName};
    use crate::random::{random_operator, random_state};
    use crate::su2::{fixed_gate, FixedGate};
    use crate::tensor::{kron, Seed};

    fn sites(s: &[usize], n: usize) -> SiteTuple {
        SiteTuple::new(s.to_vec(), n).unwrap()
    }

    fn dense_apply(m: &DenseOperator, v: &StateVector) -> StateVector {
        let dim = m.dim();
        let amps = (0..dim)
            .map(|r| (0..dim).map(|c| m.get(r, c) * v.amplitudes()[c]).sum())
            .collect();
        StateVector::new(v.register_size(), amps).unwrap()
    }

    #[test]
    fn embed_single_site() {
        let z = fixed_gate(FixedGate::Z);
        let e = embed(&z, &sites(&[1], 2)).unwrap();
        assert_eq!(e, kron(&z, &DenseOperator::identity(1)));
    }

    #[test]
    fn embed_swap_is_slot_symmetric() {
        let swap = reference_gate(GateName::Swap).unwrap();
        assert_eq!(embed(&swap, &sites(&[2, 1], 2)).unwrap(), swap);
    }

    #[test]
    fn embed_matches_basis_relabeling() {
        // CNOT with control on site 3 and target on site 1 of a 3-site
        // register, written out as a relabeling of |b1 b2 b3>.
        let cnot = reference_gate(GateName::Cnot).unwrap();
        let e = embed(&cnot, &sites(&[3, 1], 3)).unwrap();
        let oracle = DenseOperator::permutation(3, |c| {
            let (b1, b2, b3) = ((c >> 2) & 1, (c >> 1) & 1, c & 1);
            let t = b1 ^ b3;
            (t << 2) | (b2 << 1) | b3
        });
        assert_eq!(e, oracle);
    }

    #[test]
    fn embed_errors() {
        let x = fixed_gate(FixedGate::X);
        assert!(matches!(
            embed(&x, &sites(&[1, 2], 2)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn apply_examples() {
        let x = fixed_gate(FixedGate::X);
        let out = apply(&x, &sites(&[1], 3), &StateVector::from_bits("000").unwrap()).unwrap();
        assert_eq!(out, StateVector::from_bits("100").unwrap());

        let ccnot = reference_gate(GateName::Ccnot).unwrap();
        let out = apply(
            &ccnot,
            &sites(&[1, 2, 3], 3),
            &StateVector::from_bits("110").unwrap(),
        )
        .unwrap();
        assert_eq!(out, StateVector::from_bits("111").unwrap());
    }

    #[test]
    fn apply_register_mismatch() {
        let x = fixed_gate(FixedGate::X);
        let r = apply(&x, &sites(&[1], 3), &StateVector::basis(2, 0));
        assert!(matches!(r, Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn apply_matches_dense_embedding() {
        let mut rng = Seed(7).rng();
        let op = random_operator(3, &mut rng);
        let v = random_state(8, &mut rng);
        let at = sites(&[7, 2, 5], 8);
        let fast = apply(&op, &at, &v).unwrap();
        let slow = dense_apply(&embed(&op, &at).unwrap(), &v);
        assert!(fast.distance(&slow) < 1e-13);
    }

    #[test]
    fn apply_on_full_register() {
        let mut rng = Seed(8).rng();
        let op = random_operator(2, &mut rng);
        let v = random_state(2, &mut rng);
        let fast = apply(&op, &sites(&[2, 1], 2), &v).unwrap();
        let slow = dense_apply(&embed(&op, &sites(&[2, 1], 2)).unwrap(), &v);
        assert!(fast.distance(&slow) < 1e-14);
    }
}
