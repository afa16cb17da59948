//! Line graphs and root reconstruction.
//!
//! Recognition processes the vertices of each component in BFS order and
//! keeps every partial root consistent with the graph induced so far. A
//! partial root is a Krausz-style cover: each processed vertex owns a root
//! edge `xy`, and the processed neighbourhood of a new vertex must be exactly
//! the set of edges at `x` plus the set of edges at `y`. Partial roots that
//! differ only by renaming root vertices are merged, so the state set stays
//! tiny once the processed part is past Whitney's small exceptions.
//!
//! For the triangle both K3 and K1,3 are roots; the reconstruction emits
//! K1,3 (the state with the lexicographically smallest cover wins).

use serde::{Deserialize, Serialize};

use crate::graph::{edge, Edge, Graph, GraphError};

/// A root `H` with `L(H) = G`: vertex `v` of `G` is the root edge
/// `vertex_edges[v]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootMapping {
    pub root: Graph,
    pub vertex_edges: Vec<Edge>,
}

impl RootMapping {
    /// The bijection in the other direction, sorted by root edge.
    pub fn edge_to_vertex(&self) -> Vec<(Edge, usize)> {
        let mut out: Vec<(Edge, usize)> = self.vertex_edges.iter().copied().zip(0..).collect();
        out.sort_unstable();
        out
    }

    /// Re-derives `L(root)` through the mapping and compares with `g`.
    pub fn verifies(&self, g: &Graph) -> bool {
        if self.vertex_edges.len() != g.n() || self.root.m() != g.n() {
            return false;
        }
        let mut at: Vec<Vec<usize>> = vec![Vec::new(); self.root.n()];
        for (v, &(a, b)) in self.vertex_edges.iter().enumerate() {
            if !self.root.has_edge(a, b) {
                return false;
            }
            at[a].push(v);
            at[b].push(v);
        }
        (0..g.n()).all(|v| {
            let (a, b) = self.vertex_edges[v];
            let mut nb: Vec<usize> = at[a].iter().chain(&at[b]).copied().filter(|&w| w != v).collect();
            nb.sort_unstable();
            nb.dedup();
            nb == g.neighbors(v)
        })
    }
}

/// `L(h)`: vertex `i` stands for the `i`-th edge of `h.edges()`.
pub fn line_graph(h: &Graph) -> Result<(Graph, Vec<Edge>), GraphError> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(GraphError::InvalidParameter("line graph of an edgeless graph".into()));
    }
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, &(a, b)) in edges.iter().enumerate() {
        at[a].push(i);
        at[b].push(i);
    }
    let mut pairs = Vec::new();
    for list in &at {
        for (k, &i) in list.iter().enumerate() {
            for &j in &list[k + 1..] {
                pairs.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges_simplified(edges.len(), pairs), edges))
}

#[derive(Clone)]
struct Cover {
    ends: Vec<[usize; 2]>,
    members: Vec<Vec<usize>>,
}

impl Cover {
    fn key(&self) -> Vec<Vec<usize>> {
        let mut k = self.members.clone();
        k.sort_unstable();
        k
    }

    /// All ways to give `w` a root edge matching its processed neighbourhood
    /// `nb` (sorted, nonempty).
    fn extensions(&self, w: usize, nb: &[usize]) -> Vec<Cover> {
        let mut out = Vec::new();
        for x in self.ends[nb[0]] {
            let mx = &self.members[x];
            if !mx.iter().all(|z| nb.binary_search(z).is_ok()) {
                continue;
            }
            let rest: Vec<usize> = nb.iter().copied().filter(|z| mx.binary_search(z).is_err()).collect();
            let ys: Vec<Option<usize>> = match rest.first() {
                None => vec![None],
                Some(&r) => self.ends[r]
                    .iter()
                    .copied()
                    .filter(|&y| y != x && self.members[y] == rest)
                    .map(Some)
                    .collect(),
            };
            for y in ys {
                let mut c = self.clone();
                let y = y.unwrap_or_else(|| {
                    c.members.push(Vec::new());
                    c.members.len() - 1
                });
                c.ends[w] = [x, y];
                c.members[x].push(w);
                c.members[y].push(w);
                c.members[x].sort_unstable();
                c.members[y].sort_unstable();
                out.push(c);
            }
        }
        out
    }
}

fn bfs_order(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = vec![comp[0]];
    seen[comp[0]] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                order.push(w);
            }
        }
        i += 1;
    }
    order
}

/// Root cover of one component, with root vertices numbered from 0.
fn component_cover(g: &Graph, comp: &[usize]) -> Option<Cover> {
    let order = bfs_order(g, comp);
    let mut pos = vec![usize::MAX; g.n()];
    let first = order[0];
    let mut start = Cover {
        ends: vec![[usize::MAX; 2]; g.n()],
        members: vec![vec![first], vec![first]],
    };
    start.ends[first] = [0, 1];
    pos[first] = 0;
    let mut states = vec![start];
    for (i, &w) in order.iter().enumerate().skip(1) {
        let nb: Vec<usize> = {
            let mut v: Vec<usize> = g.neighbors(w).iter().copied().filter(|&z| pos[z] < i).collect();
            v.sort_unstable();
            v
        };
        pos[w] = i;
        let mut next: Vec<Cover> = Vec::new();
        let mut keys: Vec<Vec<Vec<usize>>> = Vec::new();
        for s in &states {
            for c in s.extensions(w, &nb) {
                let k = c.key();
                if !keys.contains(&k) {
                    keys.push(k);
                    next.push(c);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        states = next;
    }
    states.into_iter().min_by_key(Cover::key)
}

/// A root of `g`, or `None` when `g` is not a line graph. Components are
/// reconstructed separately and their roots placed side by side.
pub fn recognize_line_graph(g: &Graph) -> Option<RootMapping> {
    let mut vertex_edges = vec![(0, 0); g.n()];
    let mut root_edges = Vec::new();
    let mut offset = 0;
    for comp in g.components() {
        let cover = component_cover(g, &comp)?;
        for &v in &comp {
            let [a, b] = cover.ends[v];
            let e = edge(a + offset, b + offset);
            vertex_edges[v] = e;
            root_edges.push(e);
        }
        offset += cover.members.len();
    }
    let root = Graph::from_edges(offset, &root_edges).ok()?;
    let mapping = RootMapping { root, vertex_edges };
    mapping.verifies(g).then_some(mapping)
}
