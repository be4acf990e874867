//! Separating automata for the combined objectives.

mod disjmp;
mod parity_mp;
mod sequence;

pub use disjmp::{
    disjmp_scc_separator, disjmp_separator, disjmp_state_count_formula, naive_general_separator, ComponentLift,
};
pub use parity_mp::{parity_mp_separator, ComboState, ParityMpSeparator};
pub use sequence::{embeds, universal_sequence, UniversalSequence};

/// The constant `c` in `states ≤ c · n · log₂(n+1) · d · N` for
/// [`disjmp_separator`], checked for every `n ≤ 256`. It is attained at
/// `n = 1`.
pub const DISJMP_SIZE_CONSTANT: f64 = 1.0;

/// `c · n · log₂(n+1) · d · N` with `c` = [`DISJMP_SIZE_CONSTANT`].
pub fn disjmp_size_bound(n: usize, dim: usize, max_weight: i64) -> f64 {
    DISJMP_SIZE_CONSTANT * n as f64 * ((n + 1) as f64).log2() * dim as f64 * max_weight as f64
}
