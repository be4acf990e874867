//! Finite paths and lassos (ultimately periodic infinite paths).

use crate::color::Color;
use crate::graph::{EdgeId, Graph, VertexId};

/// A finite path `v0 c0 v1 c1 ... vk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    vertices: Vec<VertexId>,
    colors: Vec<Color>,
}

impl Path {
    /// The path of length zero sitting at `start`.
    pub fn new(start: VertexId) -> Path {
        Path { vertices: vec![start], colors: Vec::new() }
    }

    /// The path following `edges` in order, or `None` if they do not chain.
    pub fn from_edges(graph: &Graph, edges: &[EdgeId]) -> Option<Path> {
        let first = *edges.first()?;
        let mut path = Path::new(graph.source(first));
        for &e in edges {
            if graph.source(e) != path.last() {
                return None;
            }
            path.push(graph.color(e).to_owned(), graph.target(e));
        }
        Some(path)
    }

    pub fn push(&mut self, color: Color, vertex: VertexId) {
        self.colors.push(color);
        self.vertices.push(vertex);
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("paths have at least one vertex")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// The color sequence `col(π)`.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// A cycle is a path of length at least one returning to its start.
    pub fn is_cycle(&self) -> bool {
        !self.is_empty() && self.start() == self.last()
    }

    /// Whether every step `(v_i, c_i, v_{i+1})` is an edge of `graph`.
    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < graph.vertex_count())
            && self.colors.iter().enumerate().all(|(i, c)| {
                graph
                    .find_edge(self.vertices[i], c.as_ref(), self.vertices[i + 1])
                    .is_some()
            })
    }
}

/// An infinite path `stem · cycle^ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lasso {
    stem: Path,
    cycle: Path,
}

impl Lasso {
    /// `None` unless `cycle` is a cycle starting where `stem` ends.
    pub fn new(stem: Path, cycle: Path) -> Option<Lasso> {
        (cycle.is_cycle() && stem.last() == cycle.start()).then_some(Lasso { stem, cycle })
    }

    pub fn stem(&self) -> &Path {
        &self.stem
    }

    pub fn cycle(&self) -> &Path {
        &self.cycle
    }

    pub fn is_valid_in(&self, graph: &Graph) -> bool {
        self.stem.is_valid_in(graph) && self.cycle.is_valid_in(graph)
    }

    /// The color word of the stem followed by `repetitions` turns of the cycle.
    pub fn unroll(&self, repetitions: usize) -> Vec<Color> {
        let mut word = self.stem.colors().to_vec();
        for _ in 0..repetitions {
            word.extend_from_slice(self.cycle.colors());
        }
        word
    }
}
