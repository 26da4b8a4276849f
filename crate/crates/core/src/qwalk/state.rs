use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::profile::PotentialProfile;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Normalization tolerance after `t` steps.
fn norm_tolerance(t: usize) -> f64 {
    1e-10 + 1e-13 * t as f64
}

/// Amplitudes `(A_x, B_x)` for coin states `|0>`, `|1>` over a contiguous
/// window of positions. Positions outside the window have zero amplitude.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkerState {
    step: usize,
    window_min: i64,
    coin0: Vec<Complex64>,
    coin1: Vec<Complex64>,
}

impl WalkerState {
    /// A walker at `x` with coin state `a|0> + b|1>`, at step 0.
    pub fn localized(x: i64, a: Complex64, b: Complex64) -> Result<Self> {
        Self::from_amplitudes(0, x, vec![a], vec![b])
    }

    pub fn from_amplitudes(
        step: usize,
        window_min: i64,
        coin0: Vec<Complex64>,
        coin1: Vec<Complex64>,
    ) -> Result<Self> {
        if coin0.len() != coin1.len() || coin0.is_empty() {
            return Err(Error::InvalidProfile(
                "amplitude arrays must be non-empty and of equal length".into(),
            ));
        }
        let state = Self {
            step,
            window_min,
            coin0,
            coin1,
        };
        let norm = state.norm_sqr();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidProfile(format!(
                "state is not normalized (sum of probabilities {norm})"
            )));
        }
        Ok(state)
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn window_min(&self) -> i64 {
        self.window_min
    }

    pub fn window_max(&self) -> i64 {
        self.window_min + self.coin0.len() as i64 - 1
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> {
        self.window_min..=self.window_max()
    }

    /// `(A_x, B_x)`; zero outside the window.
    pub fn amplitude(&self, x: i64) -> (Complex64, Complex64) {
        match self.index(x) {
            Some(i) => (self.coin0[i], self.coin1[i]),
            None => (ZERO, ZERO),
        }
    }

    pub fn coin0_amplitudes(&self) -> &[Complex64] {
        &self.coin0
    }

    pub fn coin1_amplitudes(&self) -> &[Complex64] {
        &self.coin1
    }

    /// `sum_x |A_x|^2 + |B_x|^2`
    pub fn norm_sqr(&self) -> f64 {
        self.coin0
            .iter()
            .zip(&self.coin1)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }

    fn index(&self, x: i64) -> Option<usize> {
        let offset = x.checked_sub(self.window_min)?;
        usize::try_from(offset).ok().filter(|&i| i < self.coin0.len())
    }
}

/// `(|0> + i|1>) / sqrt 2` at the origin.
pub fn symmetric_initial_state() -> WalkerState {
    WalkerState {
        step: 0,
        window_min: 0,
        coin0: vec![Complex64::new(FRAC_1_SQRT_2, 0.0)],
        coin1: vec![Complex64::new(0.0, FRAC_1_SQRT_2)],
    }
}

/// One application of the walk operator.
pub fn step(state: &WalkerState, profile: &PotentialProfile) -> WalkerState {
    let len = state.coin0.len();
    let mut coin0 = vec![ZERO; len + 2];
    let mut coin1 = vec![ZERO; len + 2];
    for (k, x) in state.positions().enumerate() {
        let (a, b) = profile.coin_at(x).apply(state.coin0[k], state.coin1[k]);
        // New window starts at window_min - 1: site x sits at index k + 1.
        coin0[k + 2] = a;
        coin1[k] = b;
    }
    let next = WalkerState {
        step: state.step + 1,
        window_min: state.window_min - 1,
        coin0,
        coin1,
    };
    debug_assert!((next.norm_sqr() - 1.0).abs() <= norm_tolerance(next.step));
    next
}

/// `steps` applications of the walk operator.
pub fn evolve(state: &WalkerState, profile: &PotentialProfile, steps: usize) -> WalkerState {
    let mut propagator = Propagator::new(state, profile, steps);
    propagator.advance_by(steps);
    propagator.state()
}

/// In-place evolution over a buffer preallocated for a fixed step budget.
///
/// The buffer spans every site reachable within the budget; the live window
/// grows by one site per side per step.
#[derive(Clone, Debug)]
pub struct Propagator<'p> {
    profile: &'p PotentialProfile,
    /// Position of buffer index 0.
    base: i64,
    coin0: Vec<Complex64>,
    coin1: Vec<Complex64>,
    first_coin: Vec<bool>,
    lo: usize,
    hi: usize,
    step: usize,
    remaining: usize,
}

impl<'p> Propagator<'p> {
    pub fn new(initial: &WalkerState, profile: &'p PotentialProfile, max_steps: usize) -> Self {
        let len = initial.coin0.len() + 2 * max_steps;
        let base = initial.window_min - max_steps as i64;
        let mut coin0 = vec![ZERO; len];
        let mut coin1 = vec![ZERO; len];
        let lo = max_steps;
        let hi = lo + initial.coin0.len() - 1;
        coin0[lo..=hi].copy_from_slice(&initial.coin0);
        coin1[lo..=hi].copy_from_slice(&initial.coin1);
        let first_coin = (0..len as i64)
            .map(|i| profile.uses_first_coin(base + i))
            .collect();
        Self {
            profile,
            base,
            coin0,
            coin1,
            first_coin,
            lo,
            hi,
            step: initial.step,
            remaining: max_steps,
        }
    }

    pub fn step(&self) -> usize {
        self.step
    }

    pub fn remaining(&self) -> usize {
        self.remaining
    }

    /// Advances one step.
    ///
    /// # Panics
    /// If the step budget given to [`Propagator::new`] is exhausted.
    pub fn advance(&mut self) {
        assert!(self.remaining > 0, "propagator step budget exhausted");
        let (c1, c2) = (self.profile.coin1(), self.profile.coin2());
        for i in self.lo..=self.hi {
            let coin = if self.first_coin[i] { c1 } else { c2 };
            let (a, b) = coin.apply(self.coin0[i], self.coin1[i]);
            self.coin0[i] = a;
            self.coin1[i] = b;
        }
        // |0> moves right, |1> moves left.
        for i in (self.lo..=self.hi).rev() {
            self.coin0[i + 1] = self.coin0[i];
        }
        self.coin0[self.lo] = ZERO;
        for i in self.lo..=self.hi {
            self.coin1[i - 1] = self.coin1[i];
        }
        self.coin1[self.hi] = ZERO;

        self.lo -= 1;
        self.hi += 1;
        self.step += 1;
        self.remaining -= 1;

        if cfg!(debug_assertions) || self.step.is_multiple_of(100) {
            let norm = self.norm_sqr();
            assert!(
                (norm - 1.0).abs() <= norm_tolerance(self.step),
                "normalization drifted to {norm} at step {}",
                self.step
            );
        }
    }

    pub fn advance_by(&mut self, steps: usize) {
        for _ in 0..steps {
            self.advance();
        }
    }

    pub fn window_min(&self) -> i64 {
        self.base + self.lo as i64
    }

    pub fn coin0_amplitudes(&self) -> &[Complex64] {
        &self.coin0[self.lo..=self.hi]
    }

    pub fn coin1_amplitudes(&self) -> &[Complex64] {
        &self.coin1[self.lo..=self.hi]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coin0_amplitudes()
            .iter()
            .zip(self.coin1_amplitudes())
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }

    /// Copies the live window out as a [`WalkerState`].
    pub fn state(&self) -> WalkerState {
        WalkerState {
            step: self.step,
            window_min: self.window_min(),
            coin0: self.coin0_amplitudes().to_vec(),
            coin1: self.coin1_amplitudes().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qwalk::{build_case, CaseKind, CoinOperator, WalkCase};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn hadamard_profile() -> PotentialProfile {
        build_case(WalkCase::new(CaseKind::Hadamard, 1)).unwrap()
    }

    #[test]
    fn symmetric_initial_state_values() {
        let s = symmetric_initial_state();
        assert_eq!(s.step(), 0);
        assert!((s.norm_sqr() - 1.0).abs() <= f64::EPSILON);
        let (a, b) = s.amplitude(0);
        assert!((a.norm_sqr() - 0.5).abs() <= f64::EPSILON);
        assert!((b.norm_sqr() - 0.5).abs() <= f64::EPSILON);
        assert_eq!(b.re, 0.0);
        assert_eq!(s.amplitude(1), (ZERO, ZERO));
    }

    #[test]
    fn identity_coin_moves_up_state_right() {
        let profile = PotentialProfile::uniform(CoinOperator::identity());
        let s = WalkerState::localized(0, c(1.0, 0.0), ZERO).unwrap();
        let s1 = step(&s, &profile);
        assert_eq!(s1.amplitude(1), (c(1.0, 0.0), ZERO));
        assert_eq!(s1.amplitude(-1), (ZERO, ZERO));
        assert_eq!(s1.amplitude(0), (ZERO, ZERO));
        assert_eq!((s1.window_min(), s1.window_max()), (-1, 1));
    }

    #[test]
    fn hadamard_first_step_by_hand() {
        let s1 = step(&symmetric_initial_state(), &hadamard_profile());
        let (a, _) = s1.amplitude(1);
        let (_, b) = s1.amplitude(-1);
        assert!((a - c(0.5, 0.5)).norm() < 1e-15);
        assert!((b - c(0.5, -0.5)).norm() < 1e-15);
        assert_eq!(s1.amplitude(0), (ZERO, ZERO));
    }

    #[test]
    fn evolve_zero_is_identity() {
        let s = symmetric_initial_state();
        assert_eq!(evolve(&s, &hadamard_profile(), 0), s);
    }

    #[test]
    fn evolve_matches_repeated_step_bitwise() {
        let profile = build_case(WalkCase::new(CaseKind::IIIB, 5)).unwrap();
        let mut by_step = symmetric_initial_state();
        for _ in 0..60 {
            by_step = step(&by_step, &profile);
        }
        assert_eq!(evolve(&symmetric_initial_state(), &profile, 60), by_step);
    }

    #[test]
    fn evolve_composes() {
        let profile = build_case(WalkCase::new(CaseKind::IB, 4)).unwrap();
        let s = symmetric_initial_state();
        let whole = evolve(&s, &profile, 37);
        let split = evolve(&evolve(&s, &profile, 15), &profile, 22);
        assert_eq!(whole.window_min(), split.window_min());
        for x in whole.positions() {
            let (a1, b1) = whole.amplitude(x);
            let (a2, b2) = split.amplitude(x);
            assert!((a1 - a2).norm() <= 1e-12 && (b1 - b2).norm() <= 1e-12);
        }
    }

    #[test]
    fn hadamard_400_steps_stays_normalized() {
        let s = evolve(&symmetric_initial_state(), &hadamard_profile(), 400);
        assert!((s.norm_sqr() - 1.0).abs() < 1e-10);
        assert_eq!((s.window_min(), s.window_max()), (-400, 400));
    }

    #[test]
    fn off_origin_start() {
        let profile = build_case(WalkCase::new(CaseKind::IA, 3)).unwrap();
        let s = WalkerState::localized(5, c(0.0, 1.0), ZERO).unwrap();
        let out = evolve(&s, &profile, 10);
        assert_eq!((out.window_min(), out.window_max()), (-5, 15));
    }

    #[test]
    fn rejects_unnormalized() {
        assert!(WalkerState::localized(0, c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(WalkerState::from_amplitudes(0, 0, vec![], vec![]).is_err());
    }

    #[test]
    #[should_panic(expected = "budget")]
    fn propagator_budget_is_enforced() {
        let profile = hadamard_profile();
        let mut p = Propagator::new(&symmetric_initial_state(), &profile, 2);
        p.advance_by(3);
    }
}
