//! Strongly connected components (iterative Tarjan).

use crate::graph::{EdgeId, Graph, VertexId};

/// Maximal strongly connected components of `graph`, ordered so that every
/// edge between two components goes from an earlier one to a later one.
/// Vertices inside a component are sorted.
pub fn scc_decompose(graph: &Graph) -> Vec<Vec<VertexId>> {
    components_where(graph, |_| true)
}

/// Like [`scc_decompose`], on the subgraph made of the edges selected by `keep`.
pub fn components_where(graph: &Graph, keep: impl Fn(EdgeId) -> bool) -> Vec<Vec<VertexId>> {
    const UNVISITED: usize = usize::MAX;
    let n = graph.vertex_count();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut components = Vec::new();
    let mut next_index = 0;
    // (vertex, next out-edge to look at)
    let mut call_stack: Vec<(VertexId, EdgeId)> = Vec::new();

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        call_stack.push((root, graph.out_edges(root).start));

        while let Some(&mut (v, ref mut cursor)) = call_stack.last_mut() {
            let end = graph.out_edges(v).end;
            let mut descended = false;
            while *cursor < end {
                let e = *cursor;
                *cursor += 1;
                if !keep(e) {
                    continue;
                }
                let w = graph.target(e);
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    lowlink[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call_stack.push((w, graph.out_edges(w).start));
                    descended = true;
                    break;
                } else if on_stack[w] {
                    lowlink[v] = lowlink[v].min(index[w]);
                }
            }
            if descended {
                continue;
            }
            call_stack.pop();
            if let Some(&(parent, _)) = call_stack.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[v]);
            }
            if lowlink[v] == index[v] {
                let mut component = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    component.push(w);
                    if w == v {
                        break;
                    }
                }
                component.sort_unstable();
                components.push(component);
            }
        }
    }
    // Tarjan emits sink components first.
    components.reverse();
    components
}

/// Maps every vertex to the position of its component in `components`.
pub fn component_map(vertex_count: usize, components: &[Vec<VertexId>]) -> Vec<usize> {
    let mut map = vec![usize::MAX; vertex_count];
    for (i, component) in components.iter().enumerate() {
        for &v in component {
            map[v] = i;
        }
    }
    map
}
