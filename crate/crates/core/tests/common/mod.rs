#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use sepgame::{Color, Graph, Objective};

pub fn random_color(rng: &mut impl Rng, objective: Objective) -> Color {
    match objective {
        Objective::Safety => Color::Unit,
        Objective::Parity { d } => Color::Priority(rng.gen_range(0..=d)),
        Objective::MeanPayoff { max_weight: n } => Color::Weight(rng.gen_range(-n..=n)),
        Objective::ParityOrMp { d, max_weight: n } => Color::Pair(rng.gen_range(0..=d), rng.gen_range(-n..=n)),
        Objective::DisjMp { dim, max_weight: n } => {
            let ws: Vec<i64> = (0..dim).map(|_| rng.gen_range(-n..=n)).collect();
            Color::vector(&ws)
        }
    }
}

/// `m` edge draws on `n` vertices; repeated draws collapse, so the graph
/// may have fewer edges.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize, objective: Objective) -> Graph {
    let mut edges = BTreeSet::new();
    for _ in 0..m {
        edges.insert((rng.gen_range(0..n), random_color(rng, objective), rng.gen_range(0..n)));
    }
    Graph::new(n, objective.color_kind(), edges).unwrap()
}

/// Deletes uniformly random edges until `keep` accepts the graph.
pub fn prune_until(rng: &mut impl Rng, graph: Graph, keep: impl Fn(&Graph) -> bool) -> Graph {
    let mut edges = graph.edge_list();
    let n = graph.vertex_count();
    let mut current = graph;
    while !keep(&current) {
        edges.shuffle(rng);
        edges.pop();
        current = Graph::new(n, current.kind(), edges.iter().cloned()).unwrap();
    }
    current
}

/// Whether some cycle exists, so the graph has at least one infinite path.
pub fn has_cycle(graph: &Graph) -> bool {
    sepgame::scc::scc_decompose(graph).iter().any(|c| {
        c.len() > 1 || graph.successors(c[0]).any(|w| w == c[0])
    })
}

/// Exhaustive embedding search, independent of the greedy scan.
pub fn embeds_bruteforce(v: &[usize], u: &[usize]) -> bool {
    match v.split_first() {
        None => true,
        Some((&x, rest)) => (0..u.len()).any(|j| x <= u[j] && embeds_bruteforce(rest, &u[j + 1..])),
    }
}

/// All sequences of positive integers with sum at most `n`.
pub fn compositions_up_to(n: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for x in 1..=left {
            prefix.push(x);
            go(left - x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}
