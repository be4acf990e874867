use std::sync::Arc;

use crate::automaton::{
    sequential_fold, AutomatonError, SafetyAutomaton, SequentialProduct, SharedAutomaton, StateId,
};
use crate::color::{Alphabet, ColorRef};
use crate::separators::mp_separator;

use super::sequence::universal_sequence;

/// Runs a weight automaton on one coordinate of weight vectors, ignoring the
/// others.
pub struct ComponentLift {
    inner: SharedAutomaton,
    component: usize,
    dim: usize,
    max_weight: i64,
}

impl ComponentLift {
    pub fn new(inner: SharedAutomaton, component: usize, dim: usize) -> Result<ComponentLift, AutomatonError> {
        let Alphabet::Weights { max_weight } = inner.alphabet() else {
            return Err(AutomatonError::AlphabetMismatch {
                left: Alphabet::Weights { max_weight: 0 },
                right: inner.alphabet(),
            });
        };
        if component >= dim {
            return Err(AutomatonError::InvalidParameter(format!(
                "component {component} out of dimension {dim}"
            )));
        }
        Ok(ComponentLift { inner, component, dim, max_weight })
    }
}

impl SafetyAutomaton for ComponentLift {
    fn alphabet(&self) -> Alphabet {
        Alphabet::Vectors { dim: self.dim, max_weight: self.max_weight }
    }

    fn state_count(&self) -> usize {
        self.inner.state_count()
    }

    fn initial(&self) -> StateId {
        self.inner.initial()
    }

    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        match letter {
            ColorRef::Vector(v) if v.len() == self.dim => {
                self.inner.delta(state, ColorRef::Weight(v[self.component]))
            }
            _ => None,
        }
    }

    fn describe_state(&self, state: StateId) -> String {
        format!("{}@{}", self.inner.describe_state(state), self.component + 1)
    }
}

fn check_params(dim: usize, max_weight: i64) -> Result<(), AutomatonError> {
    if dim == 0 || max_weight < 0 {
        return Err(AutomatonError::InvalidParameter(format!(
            "disjunction needs d >= 1 and N >= 0, got d={dim} N={max_weight}"
        )));
    }
    Ok(())
}

/// Separating automaton for `∨_i MP_N^i` on strongly connected graphs with
/// at most `k` vertices: the sequential product of `d` counters, copy `i`
/// reading coordinate `i`. A strongly connected graph satisfying the
/// disjunction satisfies one disjunct outright, and the copies before that
/// one are merely passed through.
pub fn disjmp_scc_separator(k: usize, dim: usize, max_weight: i64) -> Result<SequentialProduct, AutomatonError> {
    check_params(dim, max_weight)?;
    let counter: SharedAutomaton = Arc::new(mp_separator(k, max_weight)?);
    let copies = (0..dim)
        .map(|i| ComponentLift::new(counter.clone(), i, dim).map(|c| Arc::new(c) as SharedAutomaton))
        .collect::<Result<Vec<_>, _>>()?;
    sequential_fold(copies)
}

/// Separating automaton for `∨_i MP_N^i` on all graphs with at most `n`
/// vertices: `⟨A_x1, ..., A_xk⟩` over the universal sequence
/// `u_n = (x_1, ..., x_k)`, with `A_x` the strongly connected separator for
/// size `x`. Its state count is `Σ_{x ∈ u_n} d·((x-1)N + 1)`.
pub fn disjmp_separator(n: usize, dim: usize, max_weight: i64) -> Result<SequentialProduct, AutomatonError> {
    check_params(dim, max_weight)?;
    if n == 0 {
        return Err(AutomatonError::InvalidParameter("disjunction separator needs n >= 1".into()));
    }
    let mut parts = Vec::new();
    for &x in universal_sequence(n).as_slice() {
        // ⟨⟨..⟩, ⟨..⟩⟩ flattens to one fold
        parts.extend(disjmp_scc_separator(x, dim, max_weight)?.parts().iter().cloned());
    }
    sequential_fold(parts)
}

/// `⟨A, ..., A⟩` with `n` copies: separating for all graphs of size `n`
/// whenever `A` is separating for strongly connected ones.
pub fn naive_general_separator(aut: SharedAutomaton, n: usize) -> Result<SequentialProduct, AutomatonError> {
    if n == 0 {
        return Err(AutomatonError::InvalidParameter("need at least one copy".into()));
    }
    sequential_fold(vec![aut; n])
}

/// `Σ_{x ∈ u_n} d·((x-1)N + 1)`.
pub fn disjmp_state_count_formula(n: usize, dim: usize, max_weight: i64) -> u128 {
    universal_sequence(n)
        .as_slice()
        .iter()
        .map(|&x| dim as u128 * ((x as u128 - 1) * max_weight as u128 + 1))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::run;
    use crate::color::Color;

    fn vectors(ws: &[[i64; 2]]) -> Vec<Color> {
        ws.iter().map(|w| Color::vector(w)).collect()
    }

    #[test]
    fn single_dimension_is_the_counter() {
        let a = disjmp_scc_separator(3, 1, 2).unwrap();
        let c = mp_separator(3, 2).unwrap();
        assert_eq!(a.state_count(), c.state_count());
        for q in 0..a.state_count() {
            for w in -2..=2 {
                assert_eq!(a.delta(q, ColorRef::Vector(&[w])), c.delta(q, ColorRef::Weight(w)));
            }
        }
    }

    #[test]
    fn second_copy_takes_over() {
        let a = disjmp_scc_separator(2, 2, 1).unwrap();
        let word = vectors(&[[-1, 0]; 40]);
        // copy 1: 1 -> 0 -> stuck (jump); copy 2 reads zeros forever
        assert_eq!(run(&a, &word[..1]).unwrap(), Some(0));
        assert_eq!(run(&a, &word[..2]).unwrap(), Some(a.state_of(1, 1)));
        assert_eq!(run(&a, &word).unwrap(), Some(a.state_of(1, 1)));
    }

    #[test]
    fn alternating_word_stays_in_first_copy() {
        let a = disjmp_scc_separator(2, 2, 1).unwrap();
        let word: Vec<Color> = (0..30).flat_map(|_| vectors(&[[-1, 1], [1, -1]])).collect();
        let end = run(&a, &word).unwrap().unwrap();
        assert_eq!(a.locate(end).0, 0);
    }

    #[test]
    fn state_counts() {
        assert_eq!(disjmp_separator(1, 1, 1).unwrap().state_count(), 1);
        assert_eq!(disjmp_separator(4, 2, 1).unwrap().state_count(), 16);
        for n in 1..30 {
            for dim in 1..4 {
                for big_n in 0..4 {
                    assert_eq!(
                        disjmp_separator(n, dim, big_n).unwrap().state_count() as u128,
                        disjmp_state_count_formula(n, dim, big_n)
                    );
                }
            }
        }
    }

    #[test]
    fn naive_fold_sizes() {
        let a: SharedAutomaton = Arc::new(mp_separator(4, 1).unwrap());
        assert_eq!(naive_general_separator(a.clone(), 1).unwrap().state_count(), 4);
        assert_eq!(naive_general_separator(a.clone(), 3).unwrap().state_count(), 12);
        assert!(naive_general_separator(a, 0).is_err());
    }
}
