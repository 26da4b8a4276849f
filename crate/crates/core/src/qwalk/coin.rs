use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Per-entry tolerance for `C^dagger C = I`.
pub const UNITARY_TOLERANCE: f64 = 1e-12;

/// A 2x2 unitary acting on the coin space, stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoinOperator {
    entries: [[Complex64; 2]; 2],
}

impl CoinOperator {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let coin = Self { entries };
        let deviation = coin.unitarity_deviation();
        if deviation > UNITARY_TOLERANCE || deviation.is_nan() {
            return Err(Error::NonUnitaryCoin { deviation });
        }
        Ok(coin)
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            entries: [[one, zero], [zero, one]],
        }
    }

    pub fn hadamard() -> Self {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Self {
            entries: [[h, h], [h, -h]],
        }
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    /// Largest entry-wise deviation of `C^dagger C` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let m = &self.entries;
        let mut worst: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let dot = m[0][i].conj() * m[0][j] + m[1][i].conj() * m[1][j];
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - expected).norm());
            }
        }
        worst
    }

    /// Applies the coin to the amplitude pair `(A, B)` of one site.
    #[inline]
    pub fn apply(&self, a: Complex64, b: Complex64) -> (Complex64, Complex64) {
        let m = &self.entries;
        (m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b)
    }
}

/// The Hadamard coin `(1/sqrt 2) [[1, 1], [1, -1]]`.
pub fn hadamard_coin() -> CoinOperator {
    CoinOperator::hadamard()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    #[allow(clippy::approx_constant)]
    fn hadamard_entries() {
        let h = hadamard_coin();
        let e = h.entries();
        assert_eq!(e[0][0], c(0.7071067811865476, 0.0));
        assert_eq!(e[0][1], c(0.7071067811865476, 0.0));
        assert_eq!(e[1][0], c(0.7071067811865476, 0.0));
        assert_eq!(e[1][1], c(-0.7071067811865476, 0.0));
        assert!(h.unitarity_deviation() <= UNITARY_TOLERANCE);
    }

    #[test]
    fn hadamard_is_an_involution() {
        let h = hadamard_coin();
        for (a, b) in [
            (c(1.0, 0.0), c(0.0, 0.0)),
            (c(FRAC_1_SQRT_2, 0.0), c(0.0, FRAC_1_SQRT_2)),
            (c(0.3, -0.4), c(-0.1, 0.2)),
        ] {
            let (a1, b1) = h.apply(a, b);
            let (a2, b2) = h.apply(a1, b1);
            assert!((a2 - a).norm() < 1e-15);
            assert!((b2 - b).norm() < 1e-15);
        }
    }

    #[test]
    fn rejects_non_unitary() {
        let err = CoinOperator::new([[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert!(matches!(err, Err(Error::NonUnitaryCoin { .. })));
    }

    #[test]
    fn accepts_phase_coin() {
        let phase = c(0.0, 1.0);
        let coin = CoinOperator::new([[c(0.0, 0.0), phase], [phase, c(0.0, 0.0)]]).unwrap();
        assert_eq!(coin.apply(c(1.0, 0.0), c(0.0, 0.0)), (c(0.0, 0.0), phase));
    }
}
