//! SU(2) rotations `R(u; theta) = exp(-i theta sigma.u)`, their eigenprojectors,
//! conjugated flips, and the fixed single-qubit gates.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::random::random_axis;
use crate::tensor::{DenseOperator, I, ONE, ZERO};

const AXIS_TOLERANCE: f64 = 1e-12;

/// Below this `|e^{i theta} - e^{-i theta}|` the projectors are undefined.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// Unit rotation axis and angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisAngle {
    axis: [f64; 3],
    angle: f64,
}

impl AxisAngle {
    pub fn new(axis: [f64; 3], angle: f64) -> Result<Self> {
        let norm = axis.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > AXIS_TOLERANCE || !angle.is_finite() {
            return Err(Error::NonUnitAxis { norm });
        }
        Ok(Self { axis, angle })
    }

    pub fn x(angle: f64) -> Self {
        Self {
            axis: [1.0, 0.0, 0.0],
            angle,
        }
    }

    pub fn z(angle: f64) -> Self {
        Self {
            axis: [0.0, 0.0, 1.0],
            angle,
        }
    }

    /// Axis uniform on the sphere, angle uniform in `(0.1, pi - 0.1)`.
    pub fn random(rng: &mut impl Rng) -> Self {
        Self {
            axis: random_axis(rng),
            angle: rng.gen_range(0.1..std::f64::consts::PI - 0.1),
        }
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FixedGate {
    I,
    X,
    Y,
    Z,
    H,
}

impl FixedGate {
    pub const ALL: [FixedGate; 5] = [Self::I, Self::X, Self::Y, Self::Z, Self::H];
}

impl fmt::Display for FixedGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::I => "I",
            Self::X => "X",
            Self::Y => "Y",
            Self::Z => "Z",
            Self::H => "H",
        };
        f.write_str(s)
    }
}

impl FromStr for FixedGate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" => Ok(Self::I),
            "X" | "x" => Ok(Self::X),
            "Y" | "y" => Ok(Self::Y),
            "Z" | "z" => Ok(Self::Z),
            "H" | "h" => Ok(Self::H),
            other => Err(Error::UnknownGate(other.to_string())),
        }
    }
}

pub fn fixed_gate(gate: FixedGate) -> DenseOperator {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let rows = match gate {
        FixedGate::I => [[ONE, ZERO], [ZERO, ONE]],
        FixedGate::X => [[ZERO, ONE], [ONE, ZERO]],
        FixedGate::Y => [[ZERO, -I], [I, ZERO]],
        FixedGate::Z => [[ONE, ZERO], [ZERO, -ONE]],
        FixedGate::H => {
            let a = Complex64::new(h, 0.0);
            [[a, a], [a, -a]]
        }
    };
    DenseOperator::single(rows)
}

/// `cos(theta) 1 - i sin(theta) (ux X + uy Y + uz Z)`.
pub fn rotation(p: &AxisAngle) -> DenseOperator {
    let (s, c) = p.angle.sin_cos();
    let [ux, uy, uz] = p.axis;
    // sigma.u = [[uz, ux - i uy], [ux + i uy, -uz]]
    let n00 = Complex64::new(uz, 0.0);
    let n01 = Complex64::new(ux, -uy);
    let n10 = Complex64::new(ux, uy);
    let n11 = Complex64::new(-uz, 0.0);
    let mis = Complex64::new(0.0, -s);
    DenseOperator::single([[c + mis * n00, mis * n01], [mis * n10, c + mis * n11]])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `Pi^{+-} = (R - e^{+-i theta}) / (e^{-+i theta} - e^{+-i theta})`.
///
/// `Pi^+` projects onto the `e^{-i theta}` eigenspace of `R` and `Pi^-` onto
/// the `e^{+i theta}` one, so `R = e^{-i theta} Pi^+ + e^{i theta} Pi^-`.
pub fn projector_pm(p: &AxisAngle, sign: Sign) -> Result<DenseOperator> {
    let theta = p.angle;
    let plus = Complex64::from_polar(1.0, theta);
    let minus = Complex64::from_polar(1.0, -theta);
    if (plus - minus).norm() < DEGENERACY_THRESHOLD {
        return Err(Error::DegenerateEigenvalues { theta });
    }
    let (shift, other) = match sign {
        Sign::Plus => (plus, minus),
        Sign::Minus => (minus, plus),
    };
    let r = rotation(p);
    let shifted = &r - &DenseOperator::identity(1).scale(shift);
    Ok(shifted.scale(ONE / (other - shift)))
}

/// `R X R^dagger`.
pub fn x_tilde(p: &AxisAngle) -> DenseOperator {
    conjugate(p, &fixed_gate(FixedGate::X))
}

/// `R d R^dagger` for a single-site `d`.
pub(crate) fn conjugate(p: &AxisAngle, d: &DenseOperator) -> DenseOperator {
    let r = rotation(p);
    &(&r * d) * &r.adjoint()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{frobenius_distance, is_unitary, Seed, Tolerance};
    use std::f64::consts::{FRAC_PI_2, PI};

    fn close(a: &DenseOperator, b: &DenseOperator, tol: f64) -> bool {
        frobenius_distance(a, b).unwrap() < tol
    }

    fn det(a: &DenseOperator) -> Complex64 {
        a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0)
    }

    #[test]
    fn axis_validation() {
        assert!(AxisAngle::new([0.0, 0.0, 1.0], 1.0).is_ok());
        assert!(matches!(
            AxisAngle::new([0.0, 0.0, 1.1], 1.0),
            Err(Error::NonUnitAxis { .. })
        ));
        assert!(AxisAngle::new([0.6, 0.8, 0.0], 0.3).is_ok());
    }

    #[test]
    fn rotation_closed_forms() {
        let rz = rotation(&AxisAngle::z(FRAC_PI_2));
        let expected = DenseOperator::diagonal(1, &[-I, I]).unwrap();
        assert!(close(&rz, &expected, 1e-15));

        let rx = rotation(&AxisAngle::x(FRAC_PI_2));
        assert!(close(&rx, &fixed_gate(FixedGate::X).scale(-I), 1e-15));

        let mut rng = Seed(1).rng();
        let axis = AxisAngle::random(&mut rng).axis();
        let r0 = rotation(&AxisAngle::new(axis, 0.0).unwrap());
        assert_eq!(r0, DenseOperator::identity(1));
    }

    #[test]
    fn rotation_matches_exponential_series() {
        // exp(-i theta sigma.u) summed term by term
        let mut rng = Seed(2).rng();
        let p = AxisAngle::random(&mut rng);
        let [ux, uy, uz] = p.axis();
        let x = fixed_gate(FixedGate::X).scale(Complex64::new(ux, 0.0));
        let y = fixed_gate(FixedGate::Y).scale(Complex64::new(uy, 0.0));
        let z = fixed_gate(FixedGate::Z).scale(Complex64::new(uz, 0.0));
        let gen = (&(&x + &y) + &z).scale(Complex64::new(0.0, -p.angle()));
        let mut term = DenseOperator::identity(1);
        let mut sum = term.clone();
        for k in 1..40 {
            term = (&term * &gen).scale(Complex64::new(1.0 / k as f64, 0.0));
            sum = &sum + &term;
        }
        assert!(close(&rotation(&p), &sum, 1e-13));
    }

    #[test]
    fn projector_examples() {
        let p = AxisAngle::z(FRAC_PI_2);
        let minus = projector_pm(&p, Sign::Minus).unwrap();
        let plus = projector_pm(&p, Sign::Plus).unwrap();
        assert!(close(
            &minus,
            &DenseOperator::diagonal(1, &[ZERO, ONE]).unwrap(),
            1e-15
        ));
        assert!(close(
            &plus,
            &DenseOperator::diagonal(1, &[ONE, ZERO]).unwrap(),
            1e-15
        ));

        for theta in [0.0, PI, -PI, 2.0 * PI] {
            let p = AxisAngle::z(theta);
            assert!(matches!(
                projector_pm(&p, Sign::Minus),
                Err(Error::DegenerateEigenvalues { .. })
            ));
        }
    }

    #[test]
    fn x_tilde_examples() {
        let x = fixed_gate(FixedGate::X);
        let mut rng = Seed(3).rng();
        let axis = AxisAngle::random(&mut rng).axis();
        assert!(close(
            &x_tilde(&AxisAngle::new(axis, 0.0).unwrap()),
            &x,
            1e-15
        ));
        assert!(close(
            &x_tilde(&AxisAngle::z(FRAC_PI_2)),
            &x.scale(-ONE),
            1e-15
        ));
        for _ in 0..20 {
            let xt = x_tilde(&AxisAngle::random(&mut rng));
            assert!(close(&(&xt * &xt), &DenseOperator::identity(1), 1e-14));
            assert!(close(&xt, &xt.adjoint(), 1e-14));
        }
    }

    #[test]
    fn fixed_gates() {
        let h = fixed_gate(FixedGate::H);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let expected = DenseOperator::single([
            [Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
            [Complex64::new(s, 0.0), Complex64::new(-s, 0.0)],
        ]);
        assert_eq!(h, expected);
        let xz =
            (&fixed_gate(FixedGate::X) + &fixed_gate(FixedGate::Z)).scale(Complex64::new(s, 0.0));
        assert!(close(&h, &xz, 1e-16));
        assert!(close(&(&h * &h), &DenseOperator::identity(1), 1e-15));
        assert_eq!(
            fixed_gate(FixedGate::Z),
            DenseOperator::diagonal(1, &[ONE, -ONE]).unwrap()
        );
        assert!(matches!(
            "Q".parse::<FixedGate>(),
            Err(Error::UnknownGate(_))
        ));
        for g in FixedGate::ALL {
            assert_eq!(g.to_string().parse::<FixedGate>().unwrap(), g);
        }
    }

    #[test]
    fn projector_properties_over_random_samples() {
        let mut rng = Seed(100).rng();
        let id = DenseOperator::identity(1);
        for _ in 0..100 {
            let p = AxisAngle::random(&mut rng);
            let plus = projector_pm(&p, Sign::Plus).unwrap();
            let minus = projector_pm(&p, Sign::Minus).unwrap();
            for pr in [&plus, &minus] {
                assert!(close(&(pr * pr), pr, 1e-13), "idempotent");
                assert!(close(&pr.adjoint(), pr, 1e-13), "hermitian");
            }
            assert!(close(&(&plus * &minus), &DenseOperator::zeros(1), 1e-13));
            assert!(close(&(&plus + &minus), &id, 1e-13));
            let theta = p.angle();
            let spectral = &plus.scale(Complex64::from_polar(1.0, -theta))
                + &minus.scale(Complex64::from_polar(1.0, theta));
            assert!(close(&spectral, &rotation(&p), 1e-13));
        }
    }

    #[test]
    fn rotation_group_properties() {
        let mut rng = Seed(101).rng();
        for _ in 0..100 {
            let p = AxisAngle::random(&mut rng);
            let r = rotation(&p);
            assert!(is_unitary(&r, Tolerance::absolute(1e-13)));
            assert!((det(&r) - ONE).norm() < 1e-13);
            let t2 = rng.gen_range(-3.0..3.0);
            let q = AxisAngle::new(p.axis(), t2).unwrap();
            let sum = AxisAngle::new(p.axis(), p.angle() + t2).unwrap();
            assert!(close(&(&r * &rotation(&q)), &rotation(&sum), 1e-13));
        }
    }
}
