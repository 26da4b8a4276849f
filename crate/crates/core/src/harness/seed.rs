/// SplitMix64 output function (Steele, Lea & Flood, 2014).
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of ensemble member `run_index`:
/// `splitmix64(splitmix64(base_seed) ^ run_index)`.
///
/// `splitmix64` is a bijection on `u64`, so for a fixed base distinct indices
/// always give distinct seeds.
pub fn derive_seed(base_seed: u64, run_index: u64) -> u64 {
    splitmix64(splitmix64(base_seed) ^ run_index)
}
