use std::sync::Arc;

use thiserror::Error;

use crate::automaton::{
    chained_game, winning_region_via_separating, AutomatonError, SafetyAutomaton, SharedAutomaton, TableAutomaton,
};
use crate::color::{Alphabet, Color};
use crate::combos::{disjmp_separator, parity_mp_separator};
use crate::game::{Game, GameError, Objective};
use crate::graph::VertexId;
use crate::oracle::{eve_wins_bruteforce, winning_region_bruteforce, OracleError};
use crate::safety::{solve_safety, VertexSet};
use crate::separators::{mp_separator, parity_separator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    /// Chain the game with a separating automaton and solve the safety game.
    #[default]
    Separating,
    /// Enumerate Eve's positional strategies.
    Oracle,
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// An `(n, objective)`-separating automaton from the constructions in this
/// crate. Safety uses the one-state automaton looping on the unit color.
pub fn separator_for(objective: Objective, n: usize) -> Result<SharedAutomaton, AutomatonError> {
    let n = n.max(1);
    Ok(match objective {
        Objective::Safety => Arc::new(TableAutomaton::new(Alphabet::Unit, 1, 0, [(0, Color::Unit, 0)])?),
        Objective::Parity { d } => Arc::new(parity_separator(n, d)?),
        Objective::MeanPayoff { max_weight } => Arc::new(mp_separator(n, max_weight)?),
        Objective::ParityOrMp { d, max_weight } => Arc::new(parity_mp_separator(
            Arc::new(parity_separator(n, d)?),
            Arc::new(mp_separator(n, max_weight)?),
            d,
        )?),
        Objective::DisjMp { dim, max_weight } => Arc::new(disjmp_separator(n, dim, max_weight)?),
    })
}

/// Sizes from one run of the separating pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveStats {
    pub automaton_states: usize,
    pub product_vertices: usize,
    pub product_edges: usize,
}

/// Decides whether Eve wins `game` from `start`.
pub fn solve(game: &Game, start: VertexId, algorithm: Algorithm) -> Result<bool, SolveError> {
    solve_with_stats(game, start, algorithm).map(|(win, _)| win)
}

/// As [`solve`], with product sizes when the separating pipeline ran.
pub fn solve_with_stats(
    game: &Game,
    start: VertexId,
    algorithm: Algorithm,
) -> Result<(bool, Option<SolveStats>), SolveError> {
    game.ensure_vertex(start)?;
    match algorithm {
        Algorithm::Oracle => Ok((eve_wins_bruteforce(game, start)?, None)),
        Algorithm::Separating => {
            let aut = separator_for(game.objective(), game.vertex_count())?;
            let product = chained_game(game, &aut, start)?;
            let region = solve_safety(product.game())?;
            let stats = SolveStats {
                automaton_states: aut.state_count(),
                product_vertices: product.vertex_count(),
                product_edges: product.game().graph().edge_count(),
            };
            Ok((region.eve_wins.contains(0), Some(stats)))
        }
    }
}

/// The set of vertices from which Eve wins.
pub fn winning_region(game: &Game, algorithm: Algorithm) -> Result<VertexSet, SolveError> {
    match algorithm {
        Algorithm::Oracle => Ok(winning_region_bruteforce(game)?),
        Algorithm::Separating => {
            let aut = separator_for(game.objective(), game.vertex_count())?;
            Ok(winning_region_via_separating(game, &aut)?.0)
        }
    }
}
