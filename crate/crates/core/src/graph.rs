//! Finite edge-colored directed graphs.

use std::collections::HashSet;
use std::ops::Range;

use thiserror::Error;

use crate::color::{Color, ColorKind, ColorRef};

/// Index of a vertex. Vertices of a graph are `0..vertex_count`.
pub type VertexId = usize;
/// Index of an edge. Edges are numbered in order of their source vertex.
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("color {found} does not have the graph's kind {expected:?}")]
    ColorKindMismatch { expected: ColorKind, found: Color },
    #[error("duplicate edge {from} -> {to} with color {color}")]
    DuplicateEdge { from: VertexId, to: VertexId, color: Color },
    #[error("graph too large: {0} vertices or edges exceed the 32-bit index space")]
    TooLarge(usize),
}

/// Per-variant color storage, one entry per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
enum ColorColumn {
    Unit,
    Priority(Vec<u32>),
    Weight(Vec<i64>),
    Pair(Vec<(u32, i64)>),
    Vector { dim: usize, data: Vec<i64> },
}

impl ColorColumn {
    fn with_kind(kind: ColorKind, capacity: usize) -> ColorColumn {
        match kind {
            ColorKind::Unit => ColorColumn::Unit,
            ColorKind::Priority => ColorColumn::Priority(Vec::with_capacity(capacity)),
            ColorKind::Weight => ColorColumn::Weight(Vec::with_capacity(capacity)),
            ColorKind::Pair => ColorColumn::Pair(Vec::with_capacity(capacity)),
            ColorKind::Vector(dim) => ColorColumn::Vector {
                dim,
                data: Vec::with_capacity(capacity * dim),
            },
        }
    }

    fn push(&mut self, color: ColorRef<'_>) {
        match (self, color) {
            (ColorColumn::Unit, ColorRef::Unit) => {}
            (ColorColumn::Priority(v), ColorRef::Priority(p)) => v.push(p),
            (ColorColumn::Weight(v), ColorRef::Weight(w)) => v.push(w),
            (ColorColumn::Pair(v), ColorRef::Pair(p, w)) => v.push((p, w)),
            (ColorColumn::Vector { data, .. }, ColorRef::Vector(w)) => data.extend_from_slice(w),
            _ => unreachable!("color kind checked before push"),
        }
    }

    fn get(&self, edge: EdgeId) -> ColorRef<'_> {
        match self {
            ColorColumn::Unit => ColorRef::Unit,
            ColorColumn::Priority(v) => ColorRef::Priority(v[edge]),
            ColorColumn::Weight(v) => ColorRef::Weight(v[edge]),
            ColorColumn::Pair(v) => {
                let (p, w) = v[edge];
                ColorRef::Pair(p, w)
            }
            ColorColumn::Vector { dim, data } => ColorRef::Vector(&data[edge * dim..(edge + 1) * dim]),
        }
    }
}

/// A borrowed view of one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeRef<'a> {
    pub id: EdgeId,
    pub source: VertexId,
    pub color: ColorRef<'a>,
    pub target: VertexId,
}

/// A finite directed graph whose edges all carry colors of one kind.
///
/// Edges form a set: two edges with the same source, color and target are
/// rejected, while parallel edges with distinct colors are fine. Edges are
/// stored grouped by source vertex, so the out-edges of a vertex are a
/// contiguous range of edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    kind: ColorKind,
    sources: Vec<u32>,
    targets: Vec<u32>,
    colors: ColorColumn,
    offsets: Vec<usize>,
}

impl Graph {
    /// Builds a graph. Out-edges of each vertex keep their input order.
    pub fn new<I>(vertex_count: usize, kind: ColorKind, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, Color, VertexId)>,
    {
        if vertex_count > u32::MAX as usize {
            return Err(GraphError::TooLarge(vertex_count));
        }
        let mut edges: Vec<(VertexId, Color, VertexId)> = edges.into_iter().collect();
        let mut seen = HashSet::with_capacity(edges.len());
        for (source, color, target) in &edges {
            for v in [*source, *target] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: v, count: vertex_count });
                }
            }
            if color.kind() != kind {
                return Err(GraphError::ColorKindMismatch { expected: kind, found: color.clone() });
            }
            if !seen.insert((*source, color, *target)) {
                return Err(GraphError::DuplicateEdge {
                    from: *source,
                    to: *target,
                    color: color.clone(),
                });
            }
        }
        if edges.len() > u32::MAX as usize {
            return Err(GraphError::TooLarge(edges.len()));
        }
        edges.sort_by_key(|(source, _, _)| *source);

        let mut colors = ColorColumn::with_kind(kind, edges.len());
        let mut sources = Vec::with_capacity(edges.len());
        let mut targets = Vec::with_capacity(edges.len());
        let mut offsets = vec![0; vertex_count + 1];
        for (source, color, target) in &edges {
            sources.push(*source as u32);
            targets.push(*target as u32);
            colors.push(color.as_ref());
            offsets[*source + 1] += 1;
        }
        for v in 0..vertex_count {
            offsets[v + 1] += offsets[v];
        }
        Ok(Graph { vertex_count, kind, sources, targets, colors, offsets })
    }

    /// A uncolored graph from adjacency lists that are already grouped by
    /// source and free of duplicates.
    pub(crate) fn from_unit_adjacency(offsets: Vec<usize>, targets: Vec<u32>) -> Graph {
        let vertex_count = offsets.len() - 1;
        let mut sources = Vec::with_capacity(targets.len());
        for v in 0..vertex_count {
            sources.extend(std::iter::repeat_n(v as u32, offsets[v + 1] - offsets[v]));
        }
        debug_assert_eq!(sources.len(), targets.len());
        Graph {
            vertex_count,
            kind: ColorKind::Unit,
            sources,
            targets,
            colors: ColorColumn::Unit,
            offsets,
        }
    }

    pub fn empty(vertex_count: usize, kind: ColorKind) -> Graph {
        Graph::new(vertex_count, kind, std::iter::empty()).expect("empty graph is valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn kind(&self) -> ColorKind {
        self.kind
    }

    pub fn source(&self, edge: EdgeId) -> VertexId {
        self.sources[edge] as usize
    }

    pub fn target(&self, edge: EdgeId) -> VertexId {
        self.targets[edge] as usize
    }

    pub fn color(&self, edge: EdgeId) -> ColorRef<'_> {
        self.colors.get(edge)
    }

    pub fn edge(&self, edge: EdgeId) -> EdgeRef<'_> {
        EdgeRef {
            id: edge,
            source: self.source(edge),
            color: self.color(edge),
            target: self.target(edge),
        }
    }

    /// Ids of the edges leaving `vertex`.
    pub fn out_edges(&self, vertex: VertexId) -> Range<EdgeId> {
        self.offsets[vertex]..self.offsets[vertex + 1]
    }

    pub fn out_degree(&self, vertex: VertexId) -> usize {
        self.offsets[vertex + 1] - self.offsets[vertex]
    }

    pub fn is_sink(&self, vertex: VertexId) -> bool {
        self.out_degree(vertex) == 0
    }

    pub fn successors(&self, vertex: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_edges(vertex).map(move |e| self.target(e))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef<'_>> + '_ {
        (0..self.edge_count()).map(move |e| self.edge(e))
    }

    /// Owned copy of the edge list, in edge-id order.
    pub fn edge_list(&self) -> Vec<(VertexId, Color, VertexId)> {
        self.edges().map(|e| (e.source, e.color.to_owned(), e.target)).collect()
    }

    /// The subgraph on the same vertices keeping the edges selected by `keep`.
    pub fn filter_edges(&self, mut keep: impl FnMut(EdgeRef<'_>) -> bool) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .filter(|e| keep(*e))
            .map(|e| (e.source, e.color.to_owned(), e.target))
            .collect();
        Graph::new(self.vertex_count, self.kind, edges).expect("subgraph of a valid graph")
    }

    /// Finds the edge `source -color-> target`.
    pub fn find_edge(&self, source: VertexId, color: ColorRef<'_>, target: VertexId) -> Option<EdgeId> {
        self.out_edges(source)
            .find(|&e| self.target(e) == target && self.color(e) == color)
    }
}
