//! Linear-time safety game solving.
//!
//! In a safety game Eve loses only by getting stuck: a play ending in an Eve
//! sink is lost, one ending in an Adam sink is won, and every infinite play
//! is won. The losing region is Adam's attractor to the Eve sinks, computed
//! with one decrementing counter per Eve vertex.

use std::collections::VecDeque;

use crate::game::{Game, GameError, Objective, Player, PositionalStrategy};
use crate::graph::{Graph, VertexId};

/// A set of vertices of a fixed graph, stored as a membership mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn empty(vertex_count: usize) -> VertexSet {
        VertexSet { mask: vec![false; vertex_count] }
    }

    pub fn from_vertices(vertex_count: usize, vertices: impl IntoIterator<Item = VertexId>) -> VertexSet {
        let mut set = VertexSet::empty(vertex_count);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        !std::mem::replace(&mut self.mask[v], true)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.mask.iter().enumerate().filter_map(|(v, &b)| b.then_some(v))
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet { mask: self.mask.iter().map(|b| !b).collect() }
    }
}

/// Vertices from which Eve wins a safety game, with a positional witness.
#[derive(Clone, Debug)]
pub struct WinningRegion {
    pub eve_wins: VertexSet,
    /// For each winning Eve vertex with moves, the first out-edge staying in
    /// the winning region.
    pub witness: PositionalStrategy,
}

/// Least set containing `target` that is closed under: an Adam vertex with
/// some edge into the set joins it, and an Eve vertex whose edges all lead
/// into the set joins it. Eve sinks therefore always belong to the result.
pub fn adam_attractor(game: &Game, target: &VertexSet) -> Result<VertexSet, GameError> {
    require_safety(game)?;
    Ok(attractor(game.graph(), game.owners(), target))
}

/// Solves a safety game: Eve wins exactly outside Adam's attractor to her own
/// sinks.
pub fn solve_safety(game: &Game) -> Result<WinningRegion, GameError> {
    require_safety(game)?;
    Ok(solve_arena(game.graph(), game.owners()))
}

fn require_safety(game: &Game) -> Result<(), GameError> {
    match game.objective() {
        Objective::Safety => Ok(()),
        found => Err(GameError::WrongObjective { expected: "safety", found }),
    }
}

pub(crate) fn solve_arena(graph: &Graph, owners: &[Player]) -> WinningRegion {
    let losing = attractor(graph, owners, &VertexSet::empty(graph.vertex_count()));
    let eve_wins = losing.complement();
    let mut witness = PositionalStrategy::empty(graph.vertex_count());
    for v in eve_wins.iter().filter(|&v| owners[v] == Player::Eve) {
        if let Some(e) = graph.out_edges(v).find(|&e| eve_wins.contains(graph.target(e))) {
            witness.set_unchecked(v, e);
        }
    }
    WinningRegion { eve_wins, witness }
}

pub(crate) fn attractor(graph: &Graph, owners: &[Player], target: &VertexSet) -> VertexSet {
    let n = graph.vertex_count();
    // reverse adjacency in CSR form
    let mut offsets = vec![0usize; n + 1];
    for e in 0..graph.edge_count() {
        offsets[graph.target(e) + 1] += 1;
    }
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    let mut fill = offsets.clone();
    let mut preds = vec![0u32; graph.edge_count()];
    for e in 0..graph.edge_count() {
        let t = graph.target(e);
        preds[fill[t]] = graph.source(e) as u32;
        fill[t] += 1;
    }

    let mut remaining: Vec<usize> = (0..n).map(|v| graph.out_degree(v)).collect();
    let mut set = target.clone();
    let mut queue: VecDeque<VertexId> = set.iter().collect();
    for v in 0..n {
        if owners[v] == Player::Eve && remaining[v] == 0 && set.insert(v) {
            queue.push_back(v);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &u in &preds[offsets[x]..offsets[x + 1]] {
            let u = u as usize;
            if set.contains(u) {
                continue;
            }
            let joins = match owners[u] {
                Player::Adam => true,
                Player::Eve => {
                    remaining[u] -= 1;
                    remaining[u] == 0
                }
            };
            if joins {
                set.insert(u);
                queue.push_back(u);
            }
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;
    use Player::{Adam, Eve};

    fn safety(owners: Vec<Player>, edges: &[(usize, usize)]) -> Game {
        Game::from_edges(owners, Objective::Safety, edges.iter().map(|&(a, b)| (a, Color::Unit, b)))
            .unwrap()
    }

    #[test]
    fn empty_target_with_self_loops() {
        let g = safety(vec![Eve, Eve], &[(0, 0), (1, 1)]);
        assert!(adam_attractor(&g, &VertexSet::empty(2)).unwrap().is_empty());
    }

    #[test]
    fn forced_move_into_sink() {
        let g = safety(vec![Eve, Eve], &[(1, 0)]);
        let attr = adam_attractor(&g, &VertexSet::empty(2)).unwrap();
        assert_eq!(attr.iter().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn adam_escapes_to_target() {
        // Adam 0 -> safe 1 (self-loop), Adam 0 -> target 2
        let g = safety(vec![Adam, Eve, Eve], &[(0, 1), (0, 2), (1, 1), (2, 2)]);
        let attr = adam_attractor(&g, &VertexSet::from_vertices(3, [2])).unwrap();
        assert!(attr.contains(0));
        assert!(!attr.contains(1));
    }

    #[test]
    fn sink_conventions() {
        assert!(solve_safety(&safety(vec![Adam], &[])).unwrap().eve_wins.contains(0));
        assert!(!solve_safety(&safety(vec![Eve], &[])).unwrap().eve_wins.contains(0));
    }

    #[test]
    fn eve_avoids_her_sink() {
        let g = safety(vec![Eve, Eve], &[(0, 1), (0, 0)]);
        let region = solve_safety(&g).unwrap();
        assert!(region.eve_wins.contains(0));
        assert!(!region.eve_wins.contains(1));
        let e = region.witness.get(0).unwrap();
        assert_eq!(g.graph().target(e), 0);
    }

    #[test]
    fn rejects_other_objectives() {
        let g = Game::from_edges(vec![Eve], Objective::Parity { d: 1 }, vec![]).unwrap();
        assert!(solve_safety(&g).is_err());
    }
}
