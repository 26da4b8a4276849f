//! Explicit-matrix evolution, kept independent of the propagator's in-place
//! update so the two can be checked against each other.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::profile::PotentialProfile;
use super::state::WalkerState;

/// Square complex matrix, row-major.
#[derive(Clone, Debug)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim);
        self.data
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
            .collect()
    }

    /// Largest entry-wise deviation of `M^dagger M` from the identity.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let dot: Complex64 = (0..n).map(|k| self.get(k, i).conj() * self.get(k, j)).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - expected).norm());
            }
        }
        worst
    }
}

/// Basis index of `|x> (x) |coin>` on the lattice `[-halfwidth, halfwidth]`.
fn basis_index(x: i64, coin: usize, halfwidth: i64) -> usize {
    2 * (x + halfwidth) as usize + coin
}

/// The one-step operator `sum_x S_x (C(x) (x) I)` on a ring of `2 * halfwidth + 1`
/// sites. The wrap-around keeps the matrix exactly unitary; it is never reached
/// by walks that fit the lattice.
pub fn one_step_matrix(profile: &PotentialProfile, halfwidth: usize) -> DenseMatrix {
    let w = halfwidth as i64;
    let sites = 2 * w + 1;
    let mut m = DenseMatrix::zeros(2 * sites as usize);
    let wrap = |y: i64| (y + w).rem_euclid(sites) - w;
    for x in -w..=w {
        let coin = profile.coin_at(x).entries();
        #[allow(clippy::needless_range_loop)]
        for src in 0..2 {
            let col = basis_index(x, src, w);
            // S_x: |0><0| (x) |x+1><x|  +  |1><1| (x) |x-1><x|
            m.set(basis_index(wrap(x + 1), 0, w), col, coin[0][src]);
            m.set(basis_index(wrap(x - 1), 1, w), col, coin[1][src]);
        }
    }
    m
}

/// Evolves `initial` by repeated multiplication with the explicit one-step
/// matrix. The returned state spans the whole lattice `[-halfwidth, halfwidth]`.
pub fn brute_force_oracle(
    initial: &WalkerState,
    profile: &PotentialProfile,
    steps: usize,
    halfwidth: usize,
) -> Result<WalkerState> {
    let reach = initial.window_min().abs().max(initial.window_max().abs()) as usize + steps;
    if halfwidth < reach {
        return Err(Error::LatticeTooSmall {
            halfwidth,
            steps: reach,
        });
    }
    let w = halfwidth as i64;
    let matrix = one_step_matrix(profile, halfwidth);
    let mut v = vec![Complex64::new(0.0, 0.0); matrix.dim()];
    for x in initial.positions() {
        let (a, b) = initial.amplitude(x);
        v[basis_index(x, 0, w)] = a;
        v[basis_index(x, 1, w)] = b;
    }
    for _ in 0..steps {
        v = matrix.mul_vec(&v);
    }
    let (coin0, coin1) = v.chunks_exact(2).map(|pair| (pair[0], pair[1])).unzip();
    WalkerState::from_amplitudes(initial.step() + steps, -w, coin0, coin1)
}
