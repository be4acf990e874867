//! Game solving with separating automata.
//!
//! A deterministic safety automaton `A` is `(n, Ω)`-separating when it
//! accepts every infinite word produced by a graph of at most `n` vertices
//! that satisfies `Ω`, and only words in `Ω`. Chaining a game with such an
//! automaton gives a safety game that Eve wins exactly when she wins the
//! original one. This crate builds separators for parity, mean payoff, their
//! disjunction, and disjunctions of mean payoff objectives, and checks them
//! against brute-force oracles.
//!
//! ```
//! use sepgame::{solve, Algorithm, Color, Game, Objective, Player};
//!
//! let game = Game::from_edges(
//!     vec![Player::Eve, Player::Adam],
//!     Objective::MeanPayoff { max_weight: 2 },
//!     [
//!         (0, Color::Weight(-1), 1),
//!         (1, Color::Weight(2), 0),
//!         (1, Color::Weight(-2), 1),
//!     ],
//! )?;
//! assert!(!solve(&game, 0, Algorithm::Separating)?);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod automaton;
pub mod color;
pub mod combos;
pub mod cycles;
pub mod frontend;
pub mod game;
pub mod graph;
pub mod oracle;
pub mod path;
pub mod safety;
pub mod scc;
pub mod separators;
pub mod solver;
pub mod stats;

pub use automaton::{accepts_all_paths, chained_game, run, SafetyAutomaton, SharedAutomaton, StateId};
pub use color::{Alphabet, Color, ColorKind, ColorRef};
pub use game::{Game, GameError, Objective, Player, PositionalStrategy};
pub use graph::{EdgeId, Graph, GraphError, VertexId};
pub use safety::{solve_safety, VertexSet};
pub use solver::{separator_for, solve, winning_region, Algorithm, SolveError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/games.md")]
    mod games {}
    #[doc = include_str!("../../../book/src/safety.md")]
    mod safety {}
    #[doc = include_str!("../../../book/src/separating.md")]
    mod separating {}
    #[doc = include_str!("../../../book/src/parity.md")]
    mod parity {}
    #[doc = include_str!("../../../book/src/mean-payoff.md")]
    mod mean_payoff {}
    #[doc = include_str!("../../../book/src/parity-or-mp.md")]
    mod parity_or_mp {}
    #[doc = include_str!("../../../book/src/disjunctions.md")]
    mod disjunctions {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
