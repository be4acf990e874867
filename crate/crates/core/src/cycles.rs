//! Cycle-level satisfaction checks for parity and mean-payoff graphs.
//!
//! A finite graph satisfies the mean-payoff objective iff it has no negative
//! cycle, and satisfies the parity objective iff no cycle has an odd maximal
//! priority. Both checks work component by component.

use crate::color::ColorKind;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::path::Path;
use crate::scc::{component_map, components_where};

/// Some cycle of strictly negative total weight, if one exists.
///
/// Weights are read from `Weight` and `Pair` colors when `component` is
/// `None`, and from the given coordinate of `Vector` colors otherwise.
///
/// # Panics
///
/// If the graph's colors carry no weight in the requested position.
pub fn find_negative_cycle(graph: &Graph, component: Option<usize>) -> Option<Path> {
    let weights = scalar_weights(graph, component);
    negative_cycle_where(graph, |_| true, |e| weights[e])
        .map(|edges| Path::from_edges(graph, &edges).expect("cycle edges chain"))
}

/// True iff `graph` has no negative cycle, which for finite graphs is the
/// same as every infinite path satisfying the mean-payoff objective.
pub fn graph_satisfies_mp(graph: &Graph) -> bool {
    find_negative_cycle(graph, None).is_none()
}

/// True iff no cycle of `graph` has an odd maximal priority.
///
/// For each odd `p`, restrict to edges of priority at most `p`; the graph
/// fails iff some component of that subgraph contains an edge of priority
/// exactly `p`.
///
/// # Panics
///
/// If the graph's colors carry no priority.
pub fn graph_satisfies_parity(graph: &Graph) -> bool {
    let priorities: Vec<u32> = graph
        .edges()
        .map(|e| e.color.priority().expect("parity check needs priority colors"))
        .collect();
    let max = priorities.iter().copied().max().unwrap_or(0);
    (1..=max).step_by(2).all(|p| {
        let components = components_where(graph, |e| priorities[e] <= p);
        let map = component_map(graph.vertex_count(), &components);
        !graph
            .edges()
            .any(|e| priorities[e.id] == p && map[e.source] == map[e.target])
    })
}

pub(crate) fn scalar_weights(graph: &Graph, component: Option<usize>) -> Vec<i64> {
    if graph.edge_count() == 0 {
        return Vec::new();
    }
    if let (ColorKind::Vector(dim), Some(i)) = (graph.kind(), component) {
        assert!(i < dim, "component {i} out of range for dimension {dim}");
    }
    graph
        .edges()
        .map(|e| {
            e.color
                .weight(component)
                .unwrap_or_else(|| panic!("color {} has no weight at {component:?}", e.color))
        })
        .collect()
}

/// Bellman–Ford from a virtual source, run separately inside each strongly
/// connected component of the kept edges. Returns the edges of the first
/// negative cycle found, in path order.
pub(crate) fn negative_cycle_where(
    graph: &Graph,
    keep: impl Fn(EdgeId) -> bool,
    weight: impl Fn(EdgeId) -> i64,
) -> Option<Vec<EdgeId>> {
    let mut found = None;
    scan_components(graph, keep, weight, |_, cycle| {
        found = Some(cycle);
        false
    });
    found
}

/// The strongly connected components of the kept edges, each paired with a
/// negative cycle inside it when one exists.
pub(crate) fn negative_cycles_by_component(
    graph: &Graph,
    keep: impl Fn(EdgeId) -> bool,
    weight: impl Fn(EdgeId) -> i64,
) -> (Vec<Vec<VertexId>>, Vec<Option<Vec<EdgeId>>>) {
    let components = components_where(graph, &keep);
    let mut cycles = vec![None; components.len()];
    scan_components(graph, keep, weight, |c, cycle| {
        cycles[c] = Some(cycle);
        true
    });
    (components, cycles)
}

fn scan_components(
    graph: &Graph,
    keep: impl Fn(EdgeId) -> bool,
    weight: impl Fn(EdgeId) -> i64,
    mut found: impl FnMut(usize, Vec<EdgeId>) -> bool,
) {
    let components = components_where(graph, &keep);
    let map = component_map(graph.vertex_count(), &components);
    let mut local = vec![usize::MAX; graph.vertex_count()];
    for (c, component) in components.iter().enumerate() {
        let internal: Vec<EdgeId> = component
            .iter()
            .flat_map(|&v| graph.out_edges(v))
            .filter(|&e| keep(e) && map[graph.target(e)] == c)
            .collect();
        if internal.is_empty() {
            continue;
        }
        for (i, &v) in component.iter().enumerate() {
            local[v] = i;
        }
        if let Some(cycle) = bellman_ford(graph, &internal, &local, component.len(), &weight) {
            if !found(c, cycle) {
                return;
            }
        }
    }
}

fn bellman_ford(
    graph: &Graph,
    internal: &[EdgeId],
    local: &[usize],
    k: usize,
    weight: &impl Fn(EdgeId) -> i64,
) -> Option<Vec<EdgeId>> {
    let mut dist = vec![0i64; k];
    let mut pred: Vec<Option<EdgeId>> = vec![None; k];
    let mut witness = None;
    for round in 0..k {
        let mut last_relaxed = None;
        for &e in internal {
            let (u, v) = (local[graph.source(e)], local[graph.target(e)]);
            let candidate = dist[u] + weight(e);
            if candidate < dist[v] {
                dist[v] = candidate;
                pred[v] = Some(e);
                last_relaxed = Some(v);
            }
        }
        match last_relaxed {
            None => break,
            Some(v) if round + 1 == k => witness = Some(v),
            Some(_) => {}
        }
    }
    let mut x = witness?;
    for _ in 0..k {
        x = local[graph.source(pred[x].expect("relaxed vertex has a predecessor"))];
    }
    let mut cycle = Vec::new();
    let mut y = x;
    loop {
        let e = pred[y].expect("vertex on the predecessor cycle");
        cycle.push(e);
        y = local[graph.source(e)];
        if y == x {
            break;
        }
    }
    cycle.reverse();
    debug_assert!(cycle.iter().map(|&e| weight(e)).sum::<i64>() < 0);
    Some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color;

    fn weighted(n: usize, edges: &[(usize, i64, usize)]) -> Graph {
        Graph::new(n, ColorKind::Weight, edges.iter().map(|&(a, w, b)| (a, Color::Weight(w), b)))
            .unwrap()
    }

    fn prioritized(n: usize, edges: &[(usize, u32, usize)]) -> Graph {
        Graph::new(n, ColorKind::Priority, edges.iter().map(|&(a, p, b)| (a, Color::Priority(p), b)))
            .unwrap()
    }

    #[test]
    fn negative_self_loop_found() {
        let g = weighted(1, &[(0, -1, 0)]);
        let cycle = find_negative_cycle(&g, None).unwrap();
        assert!(cycle.is_cycle());
        assert_eq!(cycle.colors(), &[Color::Weight(-1)]);
    }

    #[test]
    fn zero_loop_is_not_negative() {
        assert!(find_negative_cycle(&weighted(1, &[(0, 0, 0)]), None).is_none());
    }

    #[test]
    fn picks_the_only_negative_cycle() {
        // 2-cycle of total +2, separate self-loop -2
        let g = weighted(3, &[(0, 3, 1), (1, -1, 0), (2, -2, 2)]);
        let cycle = find_negative_cycle(&g, None).unwrap();
        assert_eq!(cycle.vertices(), &[2, 2]);
        assert!(cycle.is_valid_in(&g));
    }

    #[test]
    fn vector_component_selection() {
        let g = Graph::new(1, ColorKind::Vector(2), vec![(0, Color::vector(&[-1, 1]), 0)]).unwrap();
        assert!(find_negative_cycle(&g, Some(0)).is_some());
        assert!(find_negative_cycle(&g, Some(1)).is_none());
    }

    #[test]
    fn mp_satisfaction_examples() {
        assert!(graph_satisfies_mp(&weighted(1, &[(0, 0, 0)])));
        assert!(!graph_satisfies_mp(&weighted(1, &[(0, -1, 0)])));
        // 2-cycle total +1 and 3-cycle total -1 sharing vertex 0
        let g = weighted(4, &[(0, 2, 1), (1, -1, 0), (0, -1, 2), (2, 0, 3), (3, 0, 0)]);
        assert!(!graph_satisfies_mp(&g));
    }

    #[test]
    fn parity_satisfaction_examples() {
        assert!(graph_satisfies_parity(&prioritized(1, &[(0, 2, 0)])));
        assert!(!graph_satisfies_parity(&prioritized(1, &[(0, 1, 0)])));
        // 2-cycle {1,2} is fine, but a 1-loop reachable from it is not
        let g = prioritized(3, &[(0, 1, 1), (1, 2, 0), (1, 0, 2), (2, 1, 2)]);
        assert!(!graph_satisfies_parity(&g));
        let fixed = prioritized(3, &[(0, 1, 1), (1, 2, 0), (1, 0, 2), (2, 0, 2)]);
        assert!(graph_satisfies_parity(&fixed));
    }

    #[test]
    fn odd_edge_off_cycle_is_harmless() {
        let g = prioritized(2, &[(0, 3, 1), (1, 0, 1)]);
        assert!(graph_satisfies_parity(&g));
    }
}
