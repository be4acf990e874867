use crate::automaton::{AutomatonError, SafetyAutomaton, StateId};
use crate::color::{Alphabet, ColorRef};

/// Separating automaton for mean payoff over weights `[-N, N]`: a counter
/// in `[0, (n-1)N]` starting at the top, adding each weight, capped at the
/// top and undefined below zero.
///
/// In a graph with at most `n` vertices and no negative cycle every finite
/// path weighs at least `-(n-1)N`, so the counter never underflows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeanPayoffSeparator {
    n: usize,
    max_weight: i64,
    top: i64,
}

pub fn mp_separator(n: usize, max_weight: i64) -> Result<MeanPayoffSeparator, AutomatonError> {
    if n == 0 || max_weight < 0 {
        return Err(AutomatonError::InvalidParameter(format!(
            "mean payoff separator needs n >= 1 and N >= 0, got n={n} N={max_weight}"
        )));
    }
    let top = (n as i64 - 1)
        .checked_mul(max_weight)
        .filter(|&t| t < u32::MAX as i64)
        .ok_or_else(|| AutomatonError::TooLarge(format!("counter bound ({n}-1)*{max_weight}")))?;
    Ok(MeanPayoffSeparator { n, max_weight, top })
}

impl MeanPayoffSeparator {
    /// The largest counter value, `(n-1)N`.
    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn step(&self, state: StateId, weight: i64) -> Option<StateId> {
        let next = state as i64 + weight;
        (next >= 0).then(|| next.min(self.top) as StateId)
    }
}

impl SafetyAutomaton for MeanPayoffSeparator {
    fn alphabet(&self) -> Alphabet {
        Alphabet::Weights { max_weight: self.max_weight }
    }

    fn state_count(&self) -> usize {
        self.top as usize + 1
    }

    fn initial(&self) -> StateId {
        self.top as StateId
    }

    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        match letter {
            ColorRef::Weight(w) => self.step(state, w),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::run;
    use crate::color::Color;

    fn weights(ws: &[i64]) -> Vec<Color> {
        ws.iter().map(|&w| Color::Weight(w)).collect()
    }

    #[test]
    fn single_vertex_counter() {
        let a = mp_separator(1, 3).unwrap();
        assert_eq!(a.state_count(), 1);
        assert_eq!(run(&a, &weights(&[0, 3, 1, 0])).unwrap(), Some(0));
        assert_eq!(run(&a, &weights(&[2, -1])).unwrap(), None);
    }

    #[test]
    fn counter_runs() {
        let a = mp_separator(3, 2).unwrap();
        assert_eq!(a.initial(), 4);
        assert_eq!(run(&a, &weights(&[-2, -2])).unwrap(), Some(0));
        assert_eq!(run(&a, &weights(&[-2, -2, -1])).unwrap(), None);
        assert_eq!(run(&a, &weights(&[-2, -2, -1])).unwrap(), None);
        assert_eq!(a.step(3, 2), Some(4));
    }

    #[test]
    fn state_count_formula() {
        for n in 1..10 {
            for big_n in 0..5 {
                let a = mp_separator(n, big_n).unwrap();
                assert_eq!(a.state_count() as i64, (n as i64 - 1) * big_n + 1);
            }
        }
        assert!(mp_separator(0, 1).is_err());
        assert!(mp_separator(2, -1).is_err());
    }
}
