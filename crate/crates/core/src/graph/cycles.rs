use super::{edge, Edge, Graph, GraphError};

/// The unique cycle of `tree + e`, as a vertex sequence starting at `e.0` and
/// ending at `e.1` (the closing edge is `e` itself).
pub fn spanning_tree_fundamental_cycle(
    g: &Graph,
    tree: &[Edge],
    e: Edge,
) -> Result<Vec<usize>, GraphError> {
    let e = edge(e.0, e.1);
    let tree_norm: Vec<Edge> = tree.iter().map(|&(a, b)| edge(a, b)).collect();
    if tree_norm.contains(&e) {
        return Err(GraphError::EdgeInTree(e.0, e.1));
    }
    if tree_norm.len() + 1 != g.n() || tree_norm.iter().any(|&(a, b)| !g.has_edge(a, b)) {
        return Err(GraphError::NotASpanningTree);
    }
    let t = Graph::from_edges(g.n(), &tree_norm).map_err(|_| GraphError::NotASpanningTree)?;
    if !t.is_connected() {
        return Err(GraphError::NotASpanningTree);
    }
    t.shortest_path_between_sets(&[e.0], &[e.1], |_| true)
        .ok_or(GraphError::NotASpanningTree)
}
