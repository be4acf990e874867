use std::collections::BTreeMap;
use std::fmt::Write;

use crate::game::Player;

use super::{reachable_graph, AutomatonError, ChainedGame, SafetyAutomaton};

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering of the reachable part of `aut`. Parallel transitions
/// between two states are merged into one edge listing every letter.
pub fn automaton_to_dot<A: SafetyAutomaton + ?Sized>(aut: &A, max_edges: usize) -> Result<String, AutomatonError> {
    let reach = reachable_graph(aut, max_edges)?;
    let graph = &reach.graph;
    let mut out = String::new();
    writeln!(out, "digraph automaton {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  init [shape=point];").unwrap();
    for (i, &q) in reach.states.iter().enumerate() {
        writeln!(out, "  q{i} [shape=circle, label=\"{}\"];", escape(&aut.describe_state(q))).unwrap();
    }
    writeln!(out, "  init -> q0;").unwrap();
    for v in 0..graph.vertex_count() {
        let mut by_target: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for e in graph.out_edges(v) {
            by_target.entry(graph.target(e)).or_default().push(graph.color(e).to_string());
        }
        for (t, letters) in by_target {
            writeln!(out, "  q{v} -> q{t} [label=\"{}\"];", escape(&letters.join(" "))).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    Ok(out)
}

/// DOT rendering of a chained game. Eve vertices are boxes, Adam vertices
/// diamonds, and `⊥` a double octagon.
pub fn chained_game_to_dot(chained: &ChainedGame) -> String {
    let game = chained.game();
    let graph = game.graph();
    let mut out = String::new();
    writeln!(out, "digraph chained {{").unwrap();
    for v in 0..graph.vertex_count() {
        match chained.pair(v) {
            Some((vertex, state)) => {
                let shape = match game.owner(v) {
                    Player::Eve => "box",
                    Player::Adam => "diamond",
                };
                writeln!(out, "  n{v} [shape={shape}, label=\"({vertex},{state})\"];").unwrap();
            }
            None => writeln!(out, "  n{v} [shape=doubleoctagon, label=\"⊥\"];").unwrap(),
        }
    }
    for e in graph.edges() {
        writeln!(out, "  n{} -> n{};", e.source, e.target).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::{chained_game, TableAutomaton};
    use crate::color::{Alphabet, Color};
    use crate::game::{Game, Objective};

    #[test]
    fn automaton_dot_merges_letters() {
        let aut = TableAutomaton::new(
            Alphabet::Priorities { d: 1 },
            1,
            0,
            vec![(0, Color::Priority(0), 0), (0, Color::Priority(1), 0)],
        )
        .unwrap();
        let dot = automaton_to_dot(&aut, 100).unwrap();
        assert!(dot.contains("q0 -> q0 [label=\"0 1\"];"), "{dot}");
        assert!(dot.starts_with("digraph automaton {"));
    }

    #[test]
    fn bottom_is_a_double_octagon() {
        let game = Game::from_edges(vec![Player::Adam], Objective::Parity { d: 0 }, vec![(0, Color::Priority(0), 0)])
            .unwrap();
        let aut = TableAutomaton::new(Alphabet::Priorities { d: 0 }, 1, 0, vec![]).unwrap();
        let dot = chained_game_to_dot(&chained_game(&game, &aut, 0).unwrap());
        assert!(dot.contains("n0 [shape=diamond, label=\"(0,0)\"];"));
        assert!(dot.contains("n1 [shape=doubleoctagon, label=\"⊥\"];"));
        assert!(dot.contains("n0 -> n1;"));
    }
}
