//! Brute-force ground truth.
//!
//! The polynomial satisfaction checkers here decide whether every infinite
//! path of a finite graph satisfies an objective. The exponential procedures
//! ([`violating_subset_exists`], [`eve_wins_bruteforce`]) share no code with
//! the checkers beyond the graph type and exist to validate them and the
//! separating-automaton pipeline.

use thiserror::Error;

use crate::color::{ColorKind, ColorRef};
use crate::cycles::{graph_satisfies_mp, graph_satisfies_parity, negative_cycle_where, negative_cycles_by_component, scalar_weights};
use crate::game::{restrict_to_strategy, Game, GameError, Objective, Player, PositionalStrategy};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::safety::VertexSet;
use crate::scc::{component_map, components_where};

pub const MAX_SUBSET_EDGES: usize = 16;
pub const MAX_STRATEGIES: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("subset enumeration needs at most {limit} edges, graph has {edges}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("strategy enumeration needs at most {limit} strategies, game has {strategies}")]
    TooManyStrategies { strategies: u128, limit: u128 },
    #[error("graph colors are {found:?} but the objective expects {expected:?}")]
    ColorMismatch { expected: ColorKind, found: ColorKind },
    #[error(transparent)]
    Game(#[from] GameError),
}

impl OracleError {
    /// Whether the error is a size guard rather than a malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(self, OracleError::TooManyEdges { .. } | OracleError::TooManyStrategies { .. })
    }
}

fn priorities(graph: &Graph) -> Vec<u32> {
    graph
        .edges()
        .map(|e| e.color.priority().expect("checker needs priority colors"))
        .collect()
}

/// True iff every infinite path satisfies parity on the first coordinate or
/// mean payoff on the second.
///
/// A graph fails iff for some odd `p`, some strongly connected component of
/// the edges of priority at most `p` contains an internal edge of priority
/// `p` and a negative cycle.
pub fn graph_satisfies_parity_or_mp(graph: &Graph) -> bool {
    let priorities = priorities(graph);
    let weights = scalar_weights(graph, None);
    let max = priorities.iter().copied().max().unwrap_or(0);
    (1..=max).step_by(2).all(|p| {
        let components = components_where(graph, |e| priorities[e] <= p);
        let map = component_map(graph.vertex_count(), &components);
        let mut hot = vec![false; components.len()];
        for e in graph.edges() {
            if priorities[e.id] == p && map[e.source] == map[e.target] {
                hot[map[e.source]] = true;
            }
        }
        let keep = |e: EdgeId| {
            let c = map[graph.source(e)];
            priorities[e] <= p && hot[c] && map[graph.target(e)] == c
        };
        negative_cycle_where(graph, keep, |e| weights[e]).is_none()
    })
}

/// True iff every infinite path satisfies mean payoff in some coordinate.
///
/// Holds iff every strongly connected component has a coordinate with no
/// negative cycle inside the component.
pub fn graph_satisfies_disjmp(graph: &Graph) -> bool {
    let ColorKind::Vector(dim) = graph.kind() else {
        panic!("disjunction checker needs vector colors, got {:?}", graph.kind());
    };
    let mut open: Option<Vec<bool>> = None;
    for i in 0..dim {
        let weights = scalar_weights(graph, Some(i));
        let (_, cycles) = negative_cycles_by_component(graph, |_| true, |e| weights[e]);
        let bad = open.get_or_insert_with(|| vec![true; cycles.len()]);
        for (flag, cycle) in bad.iter_mut().zip(&cycles) {
            *flag &= cycle.is_some();
        }
    }
    !open.is_some_and(|bad| bad.contains(&true))
}

fn check_kind(graph: &Graph, objective: Objective) -> Result<(), OracleError> {
    let expected = objective.color_kind();
    if graph.edge_count() > 0 && graph.kind() != expected {
        return Err(OracleError::ColorMismatch { expected, found: graph.kind() });
    }
    Ok(())
}

/// Whether every infinite path of `graph` satisfies `objective`.
pub fn satisfies(graph: &Graph, objective: Objective) -> Result<bool, OracleError> {
    check_kind(graph, objective)?;
    Ok(match objective {
        Objective::Safety => true,
        Objective::Parity { .. } => graph_satisfies_parity(graph),
        Objective::MeanPayoff { .. } => graph_satisfies_mp(graph),
        Objective::ParityOrMp { .. } => graph_satisfies_parity_or_mp(graph),
        Objective::DisjMp { .. } => graph_satisfies_disjmp(graph),
    })
}

/// Searches all nonempty edge subsets `S` that are strongly connected as
/// edge sets for one on which some infinite path visiting exactly `S`
/// infinitely often violates `objective`.
///
/// Negative cycles inside `S` are found with a Floyd–Warshall closure, not
/// with the Bellman–Ford routine the checkers use.
pub fn violating_subset_exists(graph: &Graph, objective: Objective) -> Result<bool, OracleError> {
    check_kind(graph, objective)?;
    let m = graph.edge_count();
    if m > MAX_SUBSET_EDGES {
        return Err(OracleError::TooManyEdges { edges: m, limit: MAX_SUBSET_EDGES });
    }
    if objective == Objective::Safety {
        return Ok(false);
    }
    let edges: Vec<(VertexId, VertexId)> = graph.edges().map(|e| (e.source, e.target)).collect();
    let colors: Vec<ColorRef<'_>> = graph.edges().map(|e| e.color).collect();
    let mut weights: Vec<Vec<i64>> = Vec::new();
    match objective {
        Objective::MeanPayoff { .. } | Objective::ParityOrMp { .. } => {
            weights.push(colors.iter().map(|c| c.weight(None).expect("weighted color")).collect());
        }
        Objective::DisjMp { dim, .. } => {
            for i in 0..dim {
                weights.push(colors.iter().map(|c| c.weight(Some(i)).expect("vector color")).collect());
            }
        }
        _ => {}
    }
    for mask in 1u32..(1u32 << m) {
        let subset: Vec<usize> = (0..m).filter(|&e| mask & (1 << e) != 0).collect();
        let Some(local) = strongly_connected_edge_set(&subset, &edges) else { continue };
        let violated = match objective {
            Objective::Parity { .. } => max_priority(&subset, &colors) % 2 == 1,
            Objective::MeanPayoff { .. } => has_negative_closed_walk(&subset, &edges, &local, &weights[0]),
            Objective::ParityOrMp { .. } => {
                max_priority(&subset, &colors) % 2 == 1
                    && has_negative_closed_walk(&subset, &edges, &local, &weights[0])
            }
            Objective::DisjMp { .. } => weights
                .iter()
                .all(|w| has_negative_closed_walk(&subset, &edges, &local, w)),
            Objective::Safety => false,
        };
        if violated {
            return Ok(true);
        }
    }
    Ok(false)
}

fn max_priority(subset: &[usize], colors: &[ColorRef<'_>]) -> u32 {
    subset.iter().map(|&e| colors[e].priority().expect("priority color")).max().unwrap_or(0)
}

/// The endpoint set of `subset` numbered densely, if every endpoint reaches
/// every other one using only edges of `subset`.
fn strongly_connected_edge_set(subset: &[usize], edges: &[(VertexId, VertexId)]) -> Option<Vec<(VertexId, usize)>> {
    let mut local: Vec<(VertexId, usize)> = Vec::new();
    let id = |v: VertexId, local: &mut Vec<(VertexId, usize)>| match local.iter().find(|&&(w, _)| w == v) {
        Some(&(_, i)) => i,
        None => {
            local.push((v, local.len()));
            local.len() - 1
        }
    };
    let pairs: Vec<(usize, usize)> = subset
        .iter()
        .map(|&e| {
            let (s, t) = edges[e];
            let s = id(s, &mut local);
            (s, id(t, &mut local))
        })
        .collect();
    let k = local.len();
    let reach_all = |forward: bool| {
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for &(s, t) in &pairs {
                let (a, b) = if forward { (s, t) } else { (t, s) };
                if seen[a] && !seen[b] {
                    seen[b] = true;
                    changed = true;
                }
            }
        }
        seen.iter().all(|&x| x)
    };
    (reach_all(true) && reach_all(false)).then_some(local)
}

fn has_negative_closed_walk(
    subset: &[usize],
    edges: &[(VertexId, VertexId)],
    local: &[(VertexId, usize)],
    weights: &[i64],
) -> bool {
    let k = local.len();
    let index = |v: VertexId| local.iter().find(|&&(w, _)| w == v).expect("endpoint").1;
    let mut dist: Vec<Vec<Option<i64>>> = vec![vec![None; k]; k];
    for &e in subset {
        let (s, t) = (index(edges[e].0), index(edges[e].1));
        let w = weights[e];
        if dist[s][t].is_none_or(|d| w < d) {
            dist[s][t] = Some(w);
        }
    }
    for via in 0..k {
        for i in 0..k {
            let Some(a) = dist[i][via] else { continue };
            for j in 0..k {
                let Some(b) = dist[via][j] else { continue };
                let through = a.saturating_add(b);
                if dist[i][j].is_none_or(|d| through < d) {
                    dist[i][j] = Some(through);
                }
            }
        }
    }
    (0..k).any(|i| dist[i][i].is_some_and(|d| d < 0))
}

/// Number of positional Eve strategies, with vertices of out-degree 0
/// counting as a factor 1.
pub fn strategy_count(game: &Game) -> u128 {
    (0..game.vertex_count())
        .filter(|&v| game.owner(v) == Player::Eve)
        .map(|v| game.graph().out_degree(v).max(1) as u128)
        .fold(1u128, |acc, d| acc.saturating_mul(d))
}

/// Whether some positional Eve strategy `σ` makes the restriction of the
/// game to `σ` from `start` free of Eve sinks and satisfying the objective.
pub fn eve_wins_bruteforce(game: &Game, start: VertexId) -> Result<bool, OracleError> {
    game.ensure_vertex(start)?;
    let strategies = strategy_count(game);
    if strategies > MAX_STRATEGIES {
        return Err(OracleError::TooManyStrategies { strategies, limit: MAX_STRATEGIES });
    }
    let graph = game.graph();
    let choosers: Vec<VertexId> = (0..game.vertex_count())
        .filter(|&v| game.owner(v) == Player::Eve && graph.out_degree(v) > 0)
        .collect();
    let mut digits = vec![0usize; choosers.len()];
    let mut sigma = PositionalStrategy::empty(game.vertex_count());
    loop {
        for (&v, &d) in choosers.iter().zip(&digits) {
            sigma.set_unchecked(v, graph.out_edges(v).start + d);
        }
        let r = restrict_to_strategy(game, &sigma, start)?;
        if !r.has_eve_sink() && satisfies(&r.graph, game.objective())? {
            return Ok(true);
        }
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(false);
            }
            digits[i] += 1;
            if digits[i] < graph.out_degree(choosers[i]) {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// [`eve_wins_bruteforce`] from every vertex.
pub fn winning_region_bruteforce(game: &Game) -> Result<VertexSet, OracleError> {
    let mut region = VertexSet::empty(game.vertex_count());
    for v in 0..game.vertex_count() {
        if eve_wins_bruteforce(game, v)? {
            region.insert(v);
        }
    }
    Ok(region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;

    fn pairs(n: usize, edges: &[(usize, u32, i64, usize)]) -> Graph {
        Graph::new(
            n,
            ColorKind::Pair,
            edges.iter().map(|&(s, p, w, t)| (s, Color::Pair(p, w), t)),
        )
        .unwrap()
    }

    fn vectors(n: usize, edges: &[(usize, [i64; 2], usize)]) -> Graph {
        Graph::new(
            n,
            ColorKind::Vector(2),
            edges.iter().map(|&(s, w, t)| (s, Color::vector(&w), t)),
        )
        .unwrap()
    }

    const PMP: Objective = Objective::ParityOrMp { d: 2, max_weight: 3 };
    const DMP: Objective = Objective::DisjMp { dim: 2, max_weight: 1 };

    #[test]
    fn parity_or_mp_examples() {
        let g = pairs(1, &[(0, 1, -1, 0)]);
        assert!(!graph_satisfies_parity_or_mp(&g));
        assert!(violating_subset_exists(&g, PMP).unwrap());

        let g = pairs(1, &[(0, 1, 0, 0)]);
        assert!(graph_satisfies_parity_or_mp(&g));
        assert!(!violating_subset_exists(&g, PMP).unwrap());

        let g = pairs(2, &[(0, 1, 1, 1), (1, 0, 1, 0), (0, 0, -3, 0)]);
        assert!(!graph_satisfies_parity_or_mp(&g));
        assert!(violating_subset_exists(&g, PMP).unwrap());
    }

    #[test]
    fn higher_even_priority_covers() {
        // odd loop and negative loop are joined by an even-2 cycle only
        let g = pairs(2, &[(0, 1, 5, 0), (0, 0, 0, 1), (1, 2, 0, 0), (1, 0, -1, 1)]);
        assert!(graph_satisfies_parity_or_mp(&g));
        assert!(!violating_subset_exists(&g, PMP).unwrap());
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0, ColorKind::Pair);
        assert!(graph_satisfies_parity_or_mp(&g));
        assert!(!violating_subset_exists(&g, PMP).unwrap());
    }

    #[test]
    fn disjmp_examples() {
        let g = vectors(1, &[(0, [-1, 1], 0), (0, [1, -1], 0)]);
        assert!(!graph_satisfies_disjmp(&g));
        assert!(violating_subset_exists(&g, DMP).unwrap());

        let g = vectors(1, &[(0, [-1, 1], 0)]);
        assert!(graph_satisfies_disjmp(&g));

        let g = vectors(2, &[(0, [-1, 1], 0), (0, [0, 0], 1), (1, [1, -1], 1)]);
        assert!(graph_satisfies_disjmp(&g));
        assert!(!violating_subset_exists(&g, DMP).unwrap());
    }

    #[test]
    fn subset_guard() {
        let edges = (0..17).map(|i| (0, Color::Weight(0), i % 17));
        let g = Graph::new(17, ColorKind::Weight, edges).unwrap();
        let err = violating_subset_exists(&g, Objective::MeanPayoff { max_weight: 0 }).unwrap_err();
        assert!(err.is_guard());
    }

    fn one_vertex(owner: Player, weights: &[i64]) -> Game {
        Game::from_edges(
            vec![owner],
            Objective::MeanPayoff { max_weight: 1 },
            weights.iter().map(|&w| (0, Color::Weight(w), 0)),
        )
        .unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        assert!(eve_wins_bruteforce(&one_vertex(Player::Eve, &[1, -1]), 0).unwrap());
        assert!(!eve_wins_bruteforce(&one_vertex(Player::Adam, &[1, -1]), 0).unwrap());
        assert!(!eve_wins_bruteforce(&one_vertex(Player::Eve, &[]), 0).unwrap());
        assert!(eve_wins_bruteforce(&one_vertex(Player::Adam, &[]), 0).unwrap());
    }

    #[test]
    fn strategy_guard() {
        let n = 21;
        let edges = (0..n).flat_map(|v| [(v, Color::Unit, v), (v, Color::Unit, (v + 1) % n)]);
        let game = Game::from_edges(vec![Player::Eve; n], Objective::Safety, edges).unwrap();
        assert_eq!(strategy_count(&game), 1 << 21);
        assert!(eve_wins_bruteforce(&game, 0).unwrap_err().is_guard());
    }

    #[test]
    fn kind_mismatch() {
        let g = pairs(1, &[(0, 1, 0, 0)]);
        assert!(matches!(
            satisfies(&g, Objective::Parity { d: 2 }),
            Err(OracleError::ColorMismatch { .. })
        ));
    }

    /// Mean-payoff value iteration: the k-step game value divided by k
    /// converges to the mean-payoff value, which is nonnegative iff Eve wins.
    /// Sinks become self-loops of extreme weight.
    fn mp_value_nonnegative(game: &Game, start: VertexId) -> bool {
        let graph = game.graph();
        let n = game.vertex_count();
        let big = match game.objective() {
            Objective::MeanPayoff { max_weight } => max_weight + 1,
            _ => unreachable!(),
        };
        let steps = 4 * n * n * big as usize + 1;
        let mut value = vec![0i64; n];
        for _ in 0..steps {
            value = (0..n)
                .map(|v| {
                    let options = graph
                        .out_edges(v)
                        .map(|e| graph.color(e).weight(None).unwrap() + value[graph.target(e)]);
                    match (game.owner(v), graph.is_sink(v)) {
                        (Player::Eve, true) => -big + value[v],
                        (Player::Adam, true) => big + value[v],
                        (Player::Eve, false) => options.max().unwrap(),
                        (Player::Adam, false) => options.min().unwrap(),
                    }
                })
                .collect();
        }
        // |value_k / k - ν| <= 2nW / k, and ν has denominator at most n
        let k = steps as f64;
        let nu = value[start] as f64 / k;
        nu > -1.0 / (2.0 * n as f64)
    }

    #[test]
    fn bruteforce_matches_value_iteration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=4);
            let owners = (0..n).map(|_| if rng.gen() { Player::Eve } else { Player::Adam }).collect();
            let mut edges = std::collections::BTreeSet::new();
            for v in 0..n {
                for _ in 0..rng.gen_range(0..=2) {
                    edges.insert((v, rng.gen_range(-2..=2), rng.gen_range(0..n)));
                }
            }
            let game = Game::from_edges(
                owners,
                Objective::MeanPayoff { max_weight: 2 },
                edges.into_iter().map(|(s, w, t)| (s, Color::Weight(w), t)),
            )
            .unwrap();
            for v in 0..n {
                assert_eq!(eve_wins_bruteforce(&game, v).unwrap(), mp_value_nonnegative(&game, v), "{v}");
            }
        }
    }
}
