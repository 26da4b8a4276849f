use super::state::WalkerState;

/// `p(x) = |A_x|^2 + |B_x|^2` for every position in the state's window.
pub fn position_distribution(state: &WalkerState) -> Vec<(i64, f64)> {
    state
        .positions()
        .zip(state.coin0_amplitudes().iter().zip(state.coin1_amplitudes()))
        .map(|(x, (a, b))| (x, a.norm_sqr() + b.norm_sqr()))
        .collect()
}

/// `<x>`
pub fn mean_position(dist: &[(i64, f64)]) -> f64 {
    dist.iter().map(|&(x, p)| x as f64 * p).sum()
}

/// `<x^2>`
pub fn second_moment(dist: &[(i64, f64)]) -> f64 {
    dist.iter().map(|&(x, p)| (x as f64).powi(2) * p).sum()
}

/// `sqrt(<x^2>)`. Not centered: for the symmetric walks `<x>` vanishes, and
/// [`mean_position`] reports it separately.
pub fn std_dev(dist: &[(i64, f64)]) -> f64 {
    second_moment(dist).sqrt()
}

/// `P0(t) = p(0, t)`.
pub fn origin_probability(state: &WalkerState) -> f64 {
    let (a, b) = state.amplitude(0);
    a.norm_sqr() + b.norm_sqr()
}
