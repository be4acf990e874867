//! Arenas, objectives, games and positional strategies.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::color::{Alphabet, Color, ColorKind};
use crate::graph::{EdgeId, Graph, GraphError, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Eve,
    Adam,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Eve => Player::Adam,
            Player::Adam => Player::Eve,
        }
    }
}

/// The winning condition of a game, with the bounds of its colors.
///
/// All objectives here are prefix independent and positionally determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Every infinite play is winning.
    Safety,
    /// The largest priority seen infinitely often is even. Priorities in `[0, d]`.
    Parity { d: u32 },
    /// `liminf` of the running average weight is at least 0. Weights in `[-N, N]`.
    MeanPayoff { max_weight: i64 },
    /// Parity on the first component or mean payoff on the second.
    ParityOrMp { d: u32, max_weight: i64 },
    /// Mean payoff holds in at least one of `dim` weight coordinates.
    DisjMp { dim: usize, max_weight: i64 },
}

impl Objective {
    pub fn alphabet(&self) -> Alphabet {
        match *self {
            Objective::Safety => Alphabet::Unit,
            Objective::Parity { d } => Alphabet::Priorities { d },
            Objective::MeanPayoff { max_weight } => Alphabet::Weights { max_weight },
            Objective::ParityOrMp { d, max_weight } => Alphabet::Pairs { d, max_weight },
            Objective::DisjMp { dim, max_weight } => Alphabet::Vectors { dim, max_weight },
        }
    }

    pub fn color_kind(&self) -> ColorKind {
        self.alphabet().kind()
    }

    /// Number of numbers an edge line carries in the text format.
    pub fn color_arity(&self) -> usize {
        match *self {
            Objective::Safety => 0,
            Objective::Parity { .. } | Objective::MeanPayoff { .. } => 1,
            Objective::ParityOrMp { .. } => 2,
            Objective::DisjMp { dim, .. } => dim,
        }
    }

    fn validate(&self) -> Result<(), GameError> {
        match *self {
            Objective::MeanPayoff { max_weight }
            | Objective::ParityOrMp { max_weight, .. }
            | Objective::DisjMp { max_weight, .. }
                if max_weight < 0 =>
            {
                Err(GameError::InvalidObjective(*self, "weight bound must be nonnegative"))
            }
            Objective::DisjMp { dim: 0, .. } => {
                Err(GameError::InvalidObjective(*self, "dimension must be at least 1"))
            }
            _ => Ok(()),
        }
    }
}

/// Formats as the objective line of the game file, e.g. `parity-mp 4 10`.
impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Objective::Safety => write!(f, "safety"),
            Objective::Parity { d } => write!(f, "parity {d}"),
            Objective::MeanPayoff { max_weight } => write!(f, "mp {max_weight}"),
            Objective::ParityOrMp { d, max_weight } => write!(f, "parity-mp {d} {max_weight}"),
            Objective::DisjMp { dim, max_weight } => write!(f, "disj-mp {dim} {max_weight}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{found} owners given for {expected} vertices")]
    OwnerCount { expected: usize, found: usize },
    #[error("edge {edge} has color {color} outside {alphabet}")]
    ColorOutOfBounds { edge: EdgeId, color: Color, alphabet: Alphabet },
    #[error("invalid objective {0}: {1}")]
    InvalidObjective(Objective, &'static str),
    #[error("expected a {expected} game, got {found}")]
    WrongObjective { expected: &'static str, found: Objective },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),
    #[error("edge {edge} is not an out-edge of Eve vertex {vertex}")]
    InvalidChoice { vertex: VertexId, edge: EdgeId },
}

/// A graph, an ownership partition and an objective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Game {
    graph: Graph,
    owners: Vec<Player>,
    objective: Objective,
}

impl Game {
    /// Checks that every vertex has an owner and every color lies in the
    /// objective's alphabet.
    pub fn new(graph: Graph, owners: Vec<Player>, objective: Objective) -> Result<Game, GameError> {
        objective.validate()?;
        if owners.len() != graph.vertex_count() {
            return Err(GameError::OwnerCount { expected: graph.vertex_count(), found: owners.len() });
        }
        let alphabet = objective.alphabet();
        if graph.edge_count() > 0 && graph.kind() != alphabet.kind() {
            return Err(GraphError::ColorKindMismatch {
                expected: alphabet.kind(),
                found: graph.color(0).to_owned(),
            }
            .into());
        }
        if let Some(e) = graph.edges().find(|e| !alphabet.contains(e.color)) {
            return Err(GameError::ColorOutOfBounds { edge: e.id, color: e.color.to_owned(), alphabet });
        }
        Ok(Game { graph, owners, objective })
    }

    /// Convenience constructor from an edge list.
    pub fn from_edges<I>(owners: Vec<Player>, objective: Objective, edges: I) -> Result<Game, GameError>
    where
        I: IntoIterator<Item = (VertexId, Color, VertexId)>,
    {
        let graph = Graph::new(owners.len(), objective.color_kind(), edges)?;
        Game::new(graph, owners, objective)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn owner(&self, vertex: VertexId) -> Player {
        self.owners[vertex]
    }

    pub fn owners(&self) -> &[Player] {
        &self.owners
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub(crate) fn ensure_vertex(&self, vertex: VertexId) -> Result<(), GameError> {
        if vertex < self.vertex_count() {
            Ok(())
        } else {
            Err(GameError::VertexOutOfRange(vertex))
        }
    }
}

/// A positional strategy for Eve: at most one chosen out-edge per Eve vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionalStrategy {
    choice: Vec<Option<EdgeId>>,
}

impl PositionalStrategy {
    /// The strategy defined nowhere.
    pub fn empty(vertex_count: usize) -> PositionalStrategy {
        PositionalStrategy { choice: vec![None; vertex_count] }
    }

    pub fn set(&mut self, game: &Game, vertex: VertexId, edge: EdgeId) -> Result<(), GameError> {
        game.ensure_vertex(vertex)?;
        if game.owner(vertex) != Player::Eve || !game.graph().out_edges(vertex).contains(&edge) {
            return Err(GameError::InvalidChoice { vertex, edge });
        }
        self.choice[vertex] = Some(edge);
        Ok(())
    }

    pub(crate) fn set_unchecked(&mut self, vertex: VertexId, edge: EdgeId) {
        self.choice[vertex] = Some(edge);
    }

    pub fn get(&self, vertex: VertexId) -> Option<EdgeId> {
        self.choice.get(vertex).copied().flatten()
    }

    /// `(vertex, edge)` for every vertex where the strategy is defined.
    pub fn choices(&self) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.choice.iter().enumerate().filter_map(|(v, e)| e.map(|e| (v, e)))
    }
}

/// The graph `G[σ, v0]` together with the way back to the original game.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub graph: Graph,
    /// `original[i]` is the game vertex behind restricted vertex `i`.
    pub original: Vec<VertexId>,
    /// Owner of each restricted vertex.
    pub owners: Vec<Player>,
}

impl Restriction {
    /// Whether some Eve vertex of the restriction has no move.
    pub fn has_eve_sink(&self) -> bool {
        (0..self.graph.vertex_count())
            .any(|v| self.owners[v] == Player::Eve && self.graph.is_sink(v))
    }
}

/// Restricts `game` to the vertices reachable from `start` when Eve plays
/// `strategy`, keeping every Adam edge and only the chosen Eve edges.
///
/// Vertices are renumbered in breadth-first order, so `start` becomes 0.
/// Eve vertices where the strategy is undefined become sinks.
pub fn restrict_to_strategy(
    game: &Game,
    strategy: &PositionalStrategy,
    start: VertexId,
) -> Result<Restriction, GameError> {
    game.ensure_vertex(start)?;
    let graph = game.graph();
    let moves = |v: VertexId| -> Vec<EdgeId> {
        match game.owner(v) {
            Player::Adam => graph.out_edges(v).collect(),
            Player::Eve => strategy
                .get(v)
                .filter(|e| graph.source(*e) == v)
                .into_iter()
                .collect(),
        }
    };
    let mut index = vec![usize::MAX; game.vertex_count()];
    let mut original = vec![start];
    index[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut edges = Vec::new();
    while let Some(v) = queue.pop_front() {
        for e in moves(v) {
            let w = graph.target(e);
            if index[w] == usize::MAX {
                index[w] = original.len();
                original.push(w);
                queue.push_back(w);
            }
            edges.push((index[v], graph.color(e).to_owned(), index[w]));
        }
    }
    let owners = original.iter().map(|&v| game.owner(v)).collect();
    let graph = Graph::new(original.len(), graph.kind(), edges)?;
    Ok(Restriction { graph, original, owners })
}
