//! Simple undirected graphs on the vertex set `0..n` and the classical
//! subroutines the recognizer is built from.

mod blocks;
mod connectivity;
mod cycles;
mod flow;
mod iso;
mod named;

pub use blocks::{blocks, BlockDecomposition};
pub use connectivity::{find_two_separation, is_three_connected, is_two_connected, Separation};
pub use cycles::spanning_tree_fundamental_cycle;
pub use flow::{
    edge_disjoint_paths, fan_paths, min_edge_cut_between, vertex_disjoint_paths, EdgeCut,
};
pub use iso::{is_isomorphic_small, ISO_MAX_VERTICES};
pub use named::{make_named, NamedGraph};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An undirected edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {0}-{1} is already a tree edge")]
    EdgeInTree(usize, usize),
    #[error("edge set is not a spanning tree")]
    NotASpanningTree,
    #[error("graph has {0} vertices, more than the isomorphism guard of {1}")]
    TooLarge(usize, usize),
    #[error("graph is 3-connected, no separation of order 2 exists")]
    NoTwoSeparation,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Undirected simple graph with sorted adjacency lists.
///
/// Values are immutable once built; every transforming operation returns a
/// fresh graph together with the vertex relabelling it applied.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from edges, silently dropping loops and repeated edges.
    pub fn from_edges_simplified(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        (Graph { adj }, vertices.to_vec())
    }

    /// Graph with vertex `v` removed; returns the new-to-old map.
    pub fn remove_vertex(&self, v: usize) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Same vertex set, with the listed edges removed (absent edges are ignored).
    pub fn remove_edges(&self, edges: &[Edge]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in edges {
            if let Ok(i) = adj[u].binary_search(&v) {
                adj[u].remove(i);
            }
            if let Ok(i) = adj[v].binary_search(&u) {
                adj[v].remove(i);
            }
        }
        Graph { adj }
    }

    /// Same vertex set plus edge `uv`; a no-op when the edge exists or `u == v`.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        if u != v {
            if let Err(i) = adj[u].binary_search(&v) {
                adj[u].insert(i, v);
            }
            if let Err(i) = adj[v].binary_search(&u) {
                adj[v].insert(i, u);
            }
        }
        Graph { adj }
    }

    /// Merges `v` into `u`. The returned map sends every old vertex to its new
    /// index; parallel edges collapse and the edge `uv`, if any, disappears.
    pub fn identify_vertices(&self, u: usize, v: usize) -> (Graph, Vec<usize>) {
        assert_ne!(u, v, "identify_vertices needs two distinct vertices");
        self.identify_set(&[u, v])
    }

    /// Merges every vertex of `set` into one vertex (placed at the position of
    /// the smallest member among the survivors).
    pub fn identify_set(&self, set: &[usize]) -> (Graph, Vec<usize>) {
        let rep = *set.iter().min().expect("nonempty set");
        let mut in_set = vec![false; self.n()];
        for &s in set {
            in_set[s] = true;
        }
        let mut map = vec![0; self.n()];
        let mut next = 0;
        for w in 0..self.n() {
            if in_set[w] && w != rep {
                continue;
            }
            map[w] = next;
            next += 1;
        }
        for &s in set {
            map[s] = map[rep];
        }
        let edges = self.edges().into_iter().map(|(a, b)| (map[a], map[b]));
        (Graph::from_edges_simplified(next, edges), map)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = self.reach(s, &mut seen, |_| true);
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// BFS from `s` through vertices accepted by `allowed`, marking `seen`.
    pub(crate) fn reach(
        &self,
        s: usize,
        seen: &mut [bool],
        allowed: impl Fn(usize) -> bool,
    ) -> Vec<usize> {
        let mut out = vec![s];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] && allowed(y) {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Shortest path from any vertex of `sources` to any vertex of `targets`
    /// using only vertices accepted by `allowed` (sources and targets are always
    /// allowed). Ties break towards smaller vertex indices.
    pub fn shortest_path_between_sets(
        &self,
        sources: &[usize],
        targets: &[usize],
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let mut is_target = vec![false; self.n()];
        for &t in targets {
            is_target[t] = true;
        }
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        let mut srcs = sources.to_vec();
        srcs.sort_unstable();
        for &s in &srcs {
            if is_target[s] {
                return Some(vec![s]);
            }
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if seen[y] || !(is_target[y] || allowed(y)) {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                if is_target[y] {
                    let mut path = vec![y];
                    let mut c = y;
                    while parent[c] != usize::MAX {
                        c = parent[c];
                        path.push(c);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
        None
    }

    /// True iff no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }

    /// An induced claw `(centre, [leaves])`, lexicographically first.
    pub fn find_claw(&self) -> Option<(usize, [usize; 3])> {
        for c in 0..self.n() {
            let nb = self.neighbors(c);
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.has_edge(a, b) {
                        continue;
                    }
                    for &d in &nb[j + 1..] {
                        if !self.has_edge(a, d) && !self.has_edge(b, d) {
                            return Some((c, [a, b, d]));
                        }
                    }
                }
            }
        }
        None
    }

    /// Checks the simple-graph invariants: sorted, duplicate-free, loop-free,
    /// symmetric adjacency.
    pub fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&v| v != u && v < self.n() && self.adj[v].binary_search(&u).is_ok())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claw_detection() {
        let claw = make_named(NamedGraph::Claw).unwrap();
        assert_eq!(claw.find_claw(), Some((0, [1, 2, 3])));
        assert_eq!(make_named(NamedGraph::W5).unwrap().find_claw(), None);
        let star4 = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        assert_eq!(star4.find_claw(), Some((0, [1, 3, 4])));
    }

    #[test]
    fn rejects_malformed_edge_lists() {
        assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn identify_ends_of_p3_gives_single_edge() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let (g, map) = p3.identify_vertices(0, 2);
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(map[0], map[2]);
    }

    #[test]
    fn identify_opposite_vertices_of_c4() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (g, _) = c4.identify_vertices(0, 2);
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.is_well_formed());
    }

    #[test]
    fn identify_nonadjacent_in_c5_creates_cut_vertex() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (g, map) = c5.identify_vertices(0, 2);
        assert_eq!((g.n(), g.m()), (4, 4));
        let bd = blocks(&g);
        assert_eq!(bd.cut_vertices, vec![map[0]]);
    }

    #[test]
    fn identify_adjacent_pair_drops_the_loop() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (g, _) = k3.identify_vertices(0, 1);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn induced_subgraph_keeps_only_inner_edges() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let (g, map) = k4.induced(&[1, 3, 2]);
        assert_eq!(g.m(), 3);
        assert_eq!(map, vec![1, 3, 2]);
    }
}
