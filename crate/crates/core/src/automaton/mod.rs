//! Deterministic safety automata.
//!
//! An automaton has a partial transition function; a word is accepted iff
//! its run never hits an undefined transition. Generated families (counters,
//! universal-tree leaves, products) compute transitions on the fly through
//! the [`SafetyAutomaton`] trait; [`TableAutomaton`] is the stored-table
//! backend for hand-written or tabulated automata.

mod chained;
mod dot;
mod product;
mod table;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::color::{Alphabet, Color, ColorRef};
use crate::graph::{Graph, GraphError};

pub use chained::{chained_game, solve_via_separating, winning_region_via_separating, ChainedGame};
pub use dot::{automaton_to_dot, chained_game_to_dot};
pub use product::{sequential_fold, sequential_product, SequentialProduct};
pub use table::TableAutomaton;

/// Index of an automaton state, in `0..state_count()`.
pub type StateId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("letter {letter} is not in the alphabet {alphabet}")]
    LetterOutsideAlphabet { letter: Color, alphabet: Alphabet },
    #[error("alphabets do not match: {left} vs {right}")]
    AlphabetMismatch { left: Alphabet, right: Alphabet },
    #[error("cannot fold an empty list of automata")]
    EmptyFold,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A deterministic safety automaton `(Q, q0, δ)` over a finite alphabet.
///
/// Implementations must be pure: `delta` is called concurrently and
/// repeatedly with the same arguments.
pub trait SafetyAutomaton: Send + Sync {
    fn alphabet(&self) -> Alphabet;

    fn state_count(&self) -> usize;

    fn initial(&self) -> StateId;

    /// `δ(state, letter)`, or `None` where undefined. Letters outside the
    /// alphabet give unspecified results; callers validate words first.
    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId>;

    /// Human-readable name of a state, used in DOT output.
    fn describe_state(&self, state: StateId) -> String {
        state.to_string()
    }
}

/// Automata are shared between products by reference counting.
pub type SharedAutomaton = Arc<dyn SafetyAutomaton>;

impl<A: SafetyAutomaton + ?Sized> SafetyAutomaton for Arc<A> {
    fn alphabet(&self) -> Alphabet {
        (**self).alphabet()
    }
    fn state_count(&self) -> usize {
        (**self).state_count()
    }
    fn initial(&self) -> StateId {
        (**self).initial()
    }
    fn delta(&self, state: StateId, letter: ColorRef<'_>) -> Option<StateId> {
        (**self).delta(state, letter)
    }
    fn describe_state(&self, state: StateId) -> String {
        (**self).describe_state(state)
    }
}

/// `δ*(q0, word)`: the state reached after reading `word`, or `None` if some
/// step is undefined.
pub fn run<A: SafetyAutomaton + ?Sized>(aut: &A, word: &[Color]) -> Result<Option<StateId>, AutomatonError> {
    run_from(aut, aut.initial(), word)
}

/// `δ*(state, word)`.
pub fn run_from<A: SafetyAutomaton + ?Sized>(
    aut: &A,
    state: StateId,
    word: &[Color],
) -> Result<Option<StateId>, AutomatonError> {
    let alphabet = aut.alphabet();
    if let Some(bad) = word.iter().find(|c| !alphabet.contains(c.as_ref())) {
        return Err(AutomatonError::LetterOutsideAlphabet { letter: bad.clone(), alphabet });
    }
    let mut q = state;
    for letter in word {
        match aut.delta(q, letter.as_ref()) {
            Some(next) => q = next,
            None => return Ok(None),
        }
    }
    Ok(Some(q))
}

pub(crate) fn check_graph_alphabet<A: SafetyAutomaton + ?Sized>(
    aut: &A,
    graph: &Graph,
) -> Result<(), AutomatonError> {
    let alphabet = aut.alphabet();
    match graph.edges().find(|e| !alphabet.contains(e.color)) {
        Some(e) => Err(AutomatonError::LetterOutsideAlphabet { letter: e.color.to_owned(), alphabet }),
        None => Ok(()),
    }
}

/// Whether the run of every finite path of `graph`, from any vertex, is
/// defined. Explores the synchronized product from all `(v, q0)`.
pub fn accepts_all_paths<A: SafetyAutomaton + ?Sized>(aut: &A, graph: &Graph) -> Result<bool, AutomatonError> {
    check_graph_alphabet(aut, graph)?;
    let q0 = aut.initial();
    let mut seen: HashSet<(usize, StateId)> = HashSet::new();
    let mut queue = VecDeque::new();
    for v in 0..graph.vertex_count() {
        seen.insert((v, q0));
        queue.push_back((v, q0));
    }
    while let Some((v, q)) = queue.pop_front() {
        for e in graph.out_edges(v) {
            let Some(next) = aut.delta(q, graph.color(e)) else {
                return Ok(false);
            };
            let pair = (graph.target(e), next);
            if seen.insert(pair) {
                queue.push_back(pair);
            }
        }
    }
    Ok(true)
}

/// The part of an automaton's graph reachable from its initial state.
#[derive(Clone, Debug)]
pub struct ReachableGraph {
    /// Vertex `i` stands for automaton state `states[i]`; edges are labeled
    /// with the letter read. Vertex 0 is the initial state.
    pub graph: Graph,
    pub states: Vec<StateId>,
}

/// Explores every letter of the alphabet from the initial state. Fails if
/// more than `max_edges` edges would be produced.
pub fn reachable_graph<A: SafetyAutomaton + ?Sized>(aut: &A, max_edges: usize) -> Result<ReachableGraph, AutomatonError> {
    let alphabet = aut.alphabet();
    let letters = alphabet.letters();
    let mut index: HashMap<StateId, usize> = HashMap::new();
    let mut states = vec![aut.initial()];
    index.insert(aut.initial(), 0);
    let mut edges = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let q = states[next];
        for letter in &letters {
            if let Some(target) = aut.delta(q, letter.as_ref()) {
                let id = *index.entry(target).or_insert_with(|| {
                    states.push(target);
                    states.len() - 1
                });
                edges.push((next, letter.clone(), id));
                if edges.len() > max_edges {
                    return Err(AutomatonError::TooLarge(format!(
                        "reachable graph exceeds {max_edges} edges"
                    )));
                }
            }
        }
        next += 1;
    }
    let graph = Graph::new(states.len(), alphabet.kind(), edges)?;
    Ok(ReachableGraph { graph, states })
}

/// Number of states reachable from the initial state.
pub fn reachable_state_count<A: SafetyAutomaton + ?Sized>(aut: &A) -> usize {
    let letters = aut.alphabet().letters();
    let mut seen = HashSet::from([aut.initial()]);
    let mut stack = vec![aut.initial()];
    while let Some(q) = stack.pop() {
        for letter in &letters {
            if let Some(t) = aut.delta(q, letter.as_ref()) {
                if seen.insert(t) {
                    stack.push(t);
                }
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::ColorKind;

    fn counter() -> TableAutomaton {
        // states 0..=2, weights in [-1,1], capped counter starting at 2
        let mut transitions = Vec::new();
        for q in 0..=2i64 {
            for w in -1..=1 {
                let t = (q + w).min(2);
                if t >= 0 {
                    transitions.push((q as usize, Color::Weight(w), t as usize));
                }
            }
        }
        TableAutomaton::new(Alphabet::Weights { max_weight: 1 }, 3, 2, transitions).unwrap()
    }

    #[test]
    fn empty_word_gives_initial() {
        assert_eq!(run(&counter(), &[]).unwrap(), Some(2));
    }

    #[test]
    fn run_reports_alphabet_mismatch() {
        let err = run(&counter(), &[Color::Weight(5)]).unwrap_err();
        assert!(matches!(err, AutomatonError::LetterOutsideAlphabet { .. }));
        let err = run(&counter(), &[Color::Priority(0)]).unwrap_err();
        assert!(matches!(err, AutomatonError::LetterOutsideAlphabet { .. }));
    }

    #[test]
    fn run_stops_when_undefined() {
        let word = [Color::Weight(-1), Color::Weight(-1), Color::Weight(-1)];
        assert_eq!(run(&counter(), &word).unwrap(), None);
        assert_eq!(run(&counter(), &word[..2]).unwrap(), Some(0));
    }

    #[test]
    fn accepts_all_paths_basics() {
        let aut = counter();
        assert!(accepts_all_paths(&aut, &Graph::empty(3, ColorKind::Weight)).unwrap());
        let zero = Graph::new(1, ColorKind::Weight, vec![(0, Color::Weight(0), 0)]).unwrap();
        assert!(accepts_all_paths(&aut, &zero).unwrap());
        let neg = Graph::new(1, ColorKind::Weight, vec![(0, Color::Weight(-1), 0)]).unwrap();
        assert!(!accepts_all_paths(&aut, &neg).unwrap());
    }

    #[test]
    fn reachable_graph_of_counter() {
        let r = reachable_graph(&counter(), 1000).unwrap();
        assert_eq!(r.states[0], 2);
        assert_eq!(r.graph.vertex_count(), 3);
        // 3 letters from each state, minus the undefined 0 -(-1)->
        assert_eq!(r.graph.edge_count(), 8);
        assert!(reachable_graph(&counter(), 4).is_err());
        assert_eq!(reachable_state_count(&counter()), 3);
    }
}
