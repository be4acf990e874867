//! Separating automata for the two atomic objectives: parity (leaves of a
//! universal tree) and mean payoff (a bounded counter).

mod meanpayoff;
mod parity;
pub mod tree;

pub use meanpayoff::{mp_separator, MeanPayoffSeparator};
pub use parity::{parity_separator, ParitySeparator};
pub use tree::{Leaf, OrderedTree, UniversalTree};

/// `⌈log₂ n⌉`, with `⌈log₂ 1⌉ = 0`.
pub fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// `binom(n, k)` in exact arithmetic, saturating.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// `n · binom(⌈log₂ n⌉ + h - 1, ⌈log₂ n⌉)` with `h = ⌈d/2⌉`: the size bound
/// for parity separators.
pub fn parity_size_bound(n: usize, d: u32) -> u128 {
    let h = d.div_ceil(2) as u64;
    if h == 0 {
        return n as u128;
    }
    let k = ceil_log2(n) as u64;
    (n as u128).saturating_mul(binomial(k + h - 1, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logs_and_binomials() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(3), 2);
        assert_eq!(ceil_log2(32), 5);
        assert_eq!(ceil_log2(33), 6);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(40, 20), 137_846_528_820);
    }

    #[test]
    fn bound_values() {
        assert_eq!(parity_size_bound(1, 8), 1);
        // n = 2: 2 · binom(h, 1) = 2h
        assert_eq!(parity_size_bound(2, 6), 6);
        assert_eq!(parity_size_bound(8, 4), 8 * 4);
    }
}
