use std::collections::HashMap;

use crate::game::{Game, Objective, Player};
use crate::graph::{Graph, VertexId};
use crate::safety::{solve_arena, VertexSet, WinningRegion};

use super::{check_graph_alphabet, AutomatonError, SafetyAutomaton, StateId};

/// Products larger than this many vertices are refused.
const MAX_PRODUCT_VERTICES: usize = 1 << 28;
/// Below this many `(vertex, state)` pairs the id lookup is a dense array.
const DENSE_INDEX_LIMIT: usize = 1 << 24;

/// The safety game `G ▷ A`.
///
/// From `(v, q)` the owner of `v` picks an edge `(v, c, v')`; the play moves
/// to `(v', δ(q, c))` if that is defined and to the Eve sink `⊥` otherwise.
/// Only pairs reachable from the root pairs are built, and `⊥` only exists if
/// some undefined transition is reachable. Edge colors are dropped.
#[derive(Clone, Debug)]
pub struct ChainedGame {
    game: Game,
    pairs: Vec<Option<(VertexId, StateId)>>,
    bottom: Option<VertexId>,
    index: PairIndex,
}

#[derive(Clone, Debug)]
enum PairIndex {
    Dense { states: usize, ids: Vec<u32> },
    Sparse { states: usize, ids: HashMap<u64, u32> },
}

impl PairIndex {
    fn new(vertices: usize, states: usize) -> PairIndex {
        match vertices.checked_mul(states) {
            Some(cells) if cells <= DENSE_INDEX_LIMIT => {
                PairIndex::Dense { states, ids: vec![u32::MAX; cells] }
            }
            _ => PairIndex::Sparse { states, ids: HashMap::new() },
        }
    }

    fn get(&self, v: VertexId, q: StateId) -> Option<usize> {
        match self {
            PairIndex::Dense { states, ids } => match ids[v * states + q] {
                u32::MAX => None,
                id => Some(id as usize),
            },
            PairIndex::Sparse { states, ids } => {
                ids.get(&(v as u64 * *states as u64 + q as u64)).map(|&id| id as usize)
            }
        }
    }

    fn insert(&mut self, v: VertexId, q: StateId, id: usize) {
        match self {
            PairIndex::Dense { states, ids } => ids[v * *states + q] = id as u32,
            PairIndex::Sparse { states, ids } => {
                ids.insert(v as u64 * *states as u64 + q as u64, id as u32);
            }
        }
    }
}

impl ChainedGame {
    /// The underlying safety game.
    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn vertex_count(&self) -> usize {
        self.pairs.len()
    }

    /// The product vertex standing for `(v, q)`, if it was reached.
    pub fn vertex_of(&self, v: VertexId, q: StateId) -> Option<VertexId> {
        self.index.get(v, q)
    }

    /// The `(v, q)` pair behind a product vertex; `None` for `⊥`.
    pub fn pair(&self, vertex: VertexId) -> Option<(VertexId, StateId)> {
        self.pairs[vertex]
    }

    /// The losing sink, if it is reachable.
    pub fn bottom(&self) -> Option<VertexId> {
        self.bottom
    }
}

/// Builds `game ▷ aut` from the root `(start, q0)`, which gets id 0.
pub fn chained_game<A: SafetyAutomaton + ?Sized>(
    game: &Game,
    aut: &A,
    start: VertexId,
) -> Result<ChainedGame, AutomatonError> {
    chained_game_from(game, aut, &[start])
}

/// Builds `game ▷ aut` from the roots `(v, q0)`, `v ∈ starts`, which get ids
/// `0..starts.len()`.
pub(crate) fn chained_game_from<A: SafetyAutomaton + ?Sized>(
    game: &Game,
    aut: &A,
    starts: &[VertexId],
) -> Result<ChainedGame, AutomatonError> {
    let graph = game.graph();
    if game.objective().alphabet().kind() != aut.alphabet().kind() {
        return Err(AutomatonError::AlphabetMismatch {
            left: game.objective().alphabet(),
            right: aut.alphabet(),
        });
    }
    check_graph_alphabet(aut, graph)?;
    if let Some(&bad) = starts.iter().find(|&&v| v >= graph.vertex_count()) {
        return Err(AutomatonError::InvalidParameter(format!("start vertex {bad} out of range")));
    }

    let q0 = aut.initial();
    let mut index = PairIndex::new(graph.vertex_count(), aut.state_count());
    let mut pairs: Vec<Option<(VertexId, StateId)>> = Vec::new();
    for &v in starts {
        if index.get(v, q0).is_none() {
            index.insert(v, q0, pairs.len());
            pairs.push(Some((v, q0)));
        }
    }
    let mut bottom = None;
    let mut offsets = vec![0usize];
    let mut targets: Vec<u32> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();
    let mut next = 0;
    while next < pairs.len() {
        if let Some((v, q)) = pairs[next] {
            scratch.clear();
            for e in graph.out_edges(v) {
                let target = match aut.delta(q, graph.color(e)) {
                    Some(q2) => {
                        let w = graph.target(e);
                        match index.get(w, q2) {
                            Some(id) => id,
                            None => {
                                let id = pairs.len();
                                index.insert(w, q2, id);
                                pairs.push(Some((w, q2)));
                                id
                            }
                        }
                    }
                    None => *bottom.get_or_insert_with(|| {
                        pairs.push(None);
                        pairs.len() - 1
                    }),
                };
                scratch.push(target as u32);
            }
            if pairs.len() > MAX_PRODUCT_VERTICES {
                return Err(AutomatonError::TooLarge(format!(
                    "chained game exceeds {MAX_PRODUCT_VERTICES} vertices"
                )));
            }
            scratch.sort_unstable();
            scratch.dedup();
            targets.extend_from_slice(&scratch);
        }
        offsets.push(targets.len());
        next += 1;
    }

    let owners = pairs
        .iter()
        .map(|pair| pair.map_or(Player::Eve, |(v, _)| game.owner(v)))
        .collect();
    let game = Game::new(Graph::from_unit_adjacency(offsets, targets), owners, Objective::Safety)
        .expect("chained game is a valid safety game");
    Ok(ChainedGame { game, pairs, bottom, index })
}

/// Solves `game` from `start` through the chained game with `aut`, which must
/// be separating for the game's objective and size.
pub fn solve_via_separating<A: SafetyAutomaton + ?Sized>(
    game: &Game,
    start: VertexId,
    aut: &A,
) -> Result<bool, AutomatonError> {
    let chained = chained_game(game, aut, start)?;
    let region = solve_arena(chained.game.graph(), chained.game.owners());
    Ok(region.eve_wins.contains(0))
}

/// Eve's winning vertices in `game`, computed on one chained game rooted at
/// every `(v, q0)`.
pub fn winning_region_via_separating<A: SafetyAutomaton + ?Sized>(
    game: &Game,
    aut: &A,
) -> Result<(VertexSet, ChainedGame), AutomatonError> {
    let starts: Vec<VertexId> = (0..game.vertex_count()).collect();
    let chained = chained_game_from(game, aut, &starts)?;
    let WinningRegion { eve_wins, .. } = solve_arena(chained.game.graph(), chained.game.owners());
    let region = VertexSet::from_vertices(game.vertex_count(), starts.into_iter().filter(|&v| eve_wins.contains(v)));
    Ok((region, chained))
}
