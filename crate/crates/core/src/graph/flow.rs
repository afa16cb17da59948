//! Unit-capacity augmenting-path flows: minimum edge cuts, edge-disjoint
//! paths, and vertex-disjoint paths through split vertices.

use std::collections::VecDeque;

use super::{edge, Edge, Graph};

const INF: i64 = i64::MAX / 4;

/// An edge cut `E(X, Y)` together with the vertex bipartition it separates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCut {
    pub edges: Vec<Edge>,
    pub side_x: Vec<usize>,
    pub side_y: Vec<usize>,
}

impl EdgeCut {
    /// The cut `E(X, V - X)` of `g`.
    pub fn from_side(g: &Graph, side_x: &[usize]) -> EdgeCut {
        let mut in_x = vec![false; g.n()];
        for &x in side_x {
            in_x[x] = true;
        }
        let edges = g
            .edges()
            .into_iter()
            .filter(|&(a, b)| in_x[a] != in_x[b])
            .collect();
        let mut sx: Vec<usize> = (0..g.n()).filter(|&v| in_x[v]).collect();
        sx.sort_unstable();
        let sy = (0..g.n()).filter(|&v| !in_x[v]).collect();
        EdgeCut {
            edges,
            side_x: sx,
            side_y: sy,
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&edge(e.0, e.1))
    }
}

struct Arc {
    to: usize,
    cap: i64,
    orig: i64,
    rev: usize,
}

impl Arc {
    /// Units pushed along this arc (negative on reverse arcs).
    fn flow(&self) -> i64 {
        self.orig - self.cap
    }
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network {
            arcs: (0..n).map(|_| Vec::new()).collect(),
        }
    }

    /// Adds `a -> b` with capacity `cap` and returns its position in `arcs[a]`.
    fn add(&mut self, a: usize, b: usize, cap: i64) -> usize {
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, cap, orig: cap, rev: ra });
        self.arcs[b].push(Arc { to: a, cap: 0, orig: 0, rev: rb });
        rb
    }

    /// An undirected unit edge: two arcs that are each other's reverse.
    fn add_undirected(&mut self, a: usize, b: usize) -> usize {
        let ra = self.arcs[b].len();
        let rb = self.arcs[a].len();
        self.arcs[a].push(Arc { to: b, cap: 1, orig: 1, rev: ra });
        self.arcs[b].push(Arc { to: a, cap: 1, orig: 1, rev: rb });
        rb
    }

    /// Augments one unit at a time along BFS paths until `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut flow = 0;
        while flow < limit {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut seen = vec![false; self.arcs.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                if x == t {
                    break;
                }
                for (i, a) in self.arcs[x].iter().enumerate() {
                    if a.cap > 0 && !seen[a.to] {
                        seen[a.to] = true;
                        prev[a.to] = Some((x, i));
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut v = t;
            while let Some((u, i)) = prev[v] {
                let rev = self.arcs[u][i].rev;
                self.arcs[u][i].cap -= 1;
                self.arcs[v][rev].cap += 1;
                v = u;
            }
            flow += 1;
        }
        flow
    }

    fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for a in &self.arcs[x] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }
}

fn edge_network(g: &Graph, sources: &[usize], sinks: &[usize]) -> (Network, Vec<(Edge, usize)>) {
    let n = g.n();
    let mut net = Network::new(n + 2);
    let mut handles = Vec::with_capacity(g.m());
    for (a, b) in g.edges() {
        let h = net.add_undirected(a, b);
        handles.push(((a, b), h));
    }
    for &s in sources {
        net.add(n, s, INF);
    }
    for &t in sinks {
        net.add(t, n + 1, INF);
    }
    (net, handles)
}

/// Minimum edge cut separating `sources` from `sinks`. `side_x` is the set
/// of vertices reachable from the sources in the final residual network.
pub fn min_edge_cut_between(g: &Graph, sources: &[usize], sinks: &[usize]) -> EdgeCut {
    let n = g.n();
    let (mut net, _) = edge_network(g, sources, sinks);
    net.max_flow(n, n + 1, INF);
    let reach = net.residual_reach(n);
    let side: Vec<usize> = (0..n).filter(|&v| reach[v]).collect();
    EdgeCut::from_side(g, &side)
}

/// `k` pairwise edge-disjoint paths, each running from a vertex of `sources`
/// to a vertex of `sinks` with no interior vertex in either set.
pub fn edge_disjoint_paths(
    g: &Graph,
    sources: &[usize],
    sinks: &[usize],
    k: usize,
) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let (mut net, handles) = edge_network(g, sources, sinks);
    if net.max_flow(n, n + 1, k as i64) < k as i64 {
        return None;
    }
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for ((a, b), h) in handles {
        match net.arcs[a][h].flow() {
            1 => out_arcs[a].push(b),
            -1 => out_arcs[b].push(a),
            _ => {}
        }
    }
    for list in out_arcs.iter_mut() {
        list.sort_unstable_by(|x, y| y.cmp(x));
    }
    let mut supply = vec![0usize; n];
    for a in &net.arcs[n] {
        if a.to < n && a.flow() > 0 {
            supply[a.to] += a.flow() as usize;
        }
    }
    let mut is_source = vec![false; n];
    let mut is_sink = vec![false; n];
    sources.iter().for_each(|&s| is_source[s] = true);
    sinks.iter().for_each(|&t| is_sink[t] = true);

    let mut paths = Vec::with_capacity(k);
    let mut src_order: Vec<usize> = (0..n).filter(|&v| supply[v] > 0).collect();
    src_order.sort_unstable();
    'units: for s in src_order {
        while supply[s] > 0 && paths.len() < k {
            supply[s] -= 1;
            let mut walk = vec![s];
            let mut cur = s;
            loop {
                if is_sink[cur] {
                    break;
                }
                let Some(next) = out_arcs[cur].pop() else {
                    continue 'units;
                };
                // drop any closed loop so the walk stays a path
                if let Some(pos) = walk.iter().position(|&w| w == next) {
                    walk.truncate(pos + 1);
                } else {
                    walk.push(next);
                }
                cur = next;
            }
            paths.push(trim_to_set_path(&walk, &is_source, &is_sink));
        }
    }
    (paths.len() == k).then_some(paths)
}

/// Cuts a source-to-sink walk down to the segment between its last source
/// vertex and the first sink vertex after it.
fn trim_to_set_path(walk: &[usize], is_source: &[bool], is_sink: &[bool]) -> Vec<usize> {
    let end = walk.iter().position(|&w| is_sink[w]).unwrap_or(walk.len() - 1);
    let start = walk[..=end].iter().rposition(|&w| is_source[w]).unwrap_or(0);
    walk[start..=end].to_vec()
}

/// `k` pairwise vertex-disjoint paths from `sources` to `sinks`. A vertex in
/// both sets may serve as a one-vertex path.
pub fn vertex_disjoint_paths(
    g: &Graph,
    sources: &[usize],
    sinks: &[usize],
    k: usize,
) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = Network::new(2 * n + 2);
    for v in 0..n {
        net.add(2 * v, 2 * v + 1, 1);
    }
    for (a, b) in g.edges() {
        net.add(2 * a + 1, 2 * b, 1);
        net.add(2 * b + 1, 2 * a, 1);
    }
    let mut srcs = sources.to_vec();
    srcs.sort_unstable();
    srcs.dedup();
    let mut snks = sinks.to_vec();
    snks.sort_unstable();
    snks.dedup();
    for &x in &srcs {
        net.add(s, 2 * x, 1);
    }
    for &y in &snks {
        net.add(2 * y + 1, t, 1);
    }
    if net.max_flow(s, t, k as i64) < k as i64 {
        return None;
    }
    Some(split_paths(&net, s, t, n))
}

/// `k` paths from `z` to distinct vertices of `targets` that pairwise share
/// only `z`. If `z` is itself a target it contributes the one-vertex path.
pub fn fan_paths(g: &Graph, z: usize, targets: &[usize], k: usize) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut tgts = targets.to_vec();
    tgts.sort_unstable();
    tgts.dedup();
    let mut paths = Vec::new();
    if let Ok(i) = tgts.binary_search(&z) {
        tgts.remove(i);
        paths.push(vec![z]);
    }
    let need = k.saturating_sub(paths.len());
    if need == 0 {
        paths.truncate(k);
        return Some(paths);
    }
    let t = 2 * n;
    let mut net = Network::new(2 * n + 1);
    for v in 0..n {
        if v != z {
            net.add(2 * v, 2 * v + 1, 1);
        }
    }
    for (a, b) in g.edges() {
        net.add(2 * a + 1, 2 * b, 1);
        net.add(2 * b + 1, 2 * a, 1);
    }
    for &y in &tgts {
        net.add(2 * y + 1, t, 1);
    }
    if net.max_flow(2 * z + 1, t, need as i64) < need as i64 {
        return None;
    }
    let mut rest = Vec::new();
    for a in &net.arcs[2 * z + 1] {
        if a.to % 2 == 0 && a.to < 2 * n && a.flow() > 0 {
            let mut path = vec![z];
            follow(&net, a.to, t, n, &mut path);
            rest.push(path);
        }
    }
    rest.sort();
    paths.extend(rest);
    Some(paths)
}

/// Walks saturated forward arcs from split node `v_in` towards `t`, pushing
/// original vertex ids onto `path`.
fn follow(net: &Network, mut node: usize, t: usize, n: usize, path: &mut Vec<usize>) {
    loop {
        let v = node / 2;
        path.push(v);
        let out = 2 * v + 1;
        let next = net.arcs[out]
            .iter()
            .find(|a| a.flow() > 0 && (a.to == t || (a.to < 2 * n && a.to % 2 == 0)));
        match next {
            Some(a) if a.to == t => return,
            Some(a) => node = a.to,
            None => return,
        }
    }
}

fn split_paths(net: &Network, s: usize, t: usize, n: usize) -> Vec<Vec<usize>> {
    let mut paths = Vec::new();
    for a in &net.arcs[s] {
        if a.flow() > 0 {
            let mut path = Vec::new();
            follow(net, a.to, t, n, &mut path);
            paths.push(path);
        }
    }
    paths.sort();
    paths
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    fn theta(lengths: &[usize]) -> Graph {
        // branch vertices 0 and 1, paths of the given lengths between them
        let mut edges = Vec::new();
        let mut n = 2;
        for &len in lengths {
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn edge_cut_sizes() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(min_edge_cut_between(&p3, &[0], &[2]).len(), 1);
        let k4 = make_named(NamedGraph::K4).unwrap();
        assert_eq!(min_edge_cut_between(&k4, &[0], &[1]).len(), 3);
        assert_eq!(min_edge_cut_between(&theta(&[2, 3, 3]), &[0], &[1]).len(), 3);
    }

    #[test]
    fn cut_of_disconnected_sets_is_empty() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(min_edge_cut_between(&g, &[0], &[3]).is_empty());
    }

    #[test]
    fn edge_disjoint_examples() {
        let c4 = make_named(NamedGraph::Cycle(4)).unwrap();
        let paths = edge_disjoint_paths(&c4, &[0], &[2], 2).unwrap();
        assert_eq!(paths.len(), 2);
        assert!(paths.iter().all(|p| p.len() == 3));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(edge_disjoint_paths(&p3, &[0], &[2], 2).is_none());
        let k4 = make_named(NamedGraph::K4).unwrap();
        assert_eq!(edge_disjoint_paths(&k4, &[0], &[1], 3).unwrap().len(), 3);
    }

    #[test]
    fn fan_examples() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let fan = fan_paths(&k4, 0, &[1, 2, 3], 3).unwrap();
        assert_eq!(fan, vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        assert!(fan_paths(&c5, 0, &[1, 2, 3], 3).is_none());
    }

    #[test]
    fn fan_counts_the_trivial_path() {
        let c5 = make_named(NamedGraph::Cycle(5)).unwrap();
        let fan = fan_paths(&c5, 0, &[0, 2, 3], 3).unwrap();
        assert_eq!(fan.len(), 3);
        assert_eq!(fan[0], vec![0]);
    }

    #[test]
    fn two_pairs_on_a_cycle() {
        let c6 = make_named(NamedGraph::Cycle(6)).unwrap();
        let paths = vertex_disjoint_paths(&c6, &[0, 1], &[3, 2], 2).unwrap();
        assert_eq!(paths.len(), 2);
        let mut used = [0; 6];
        for p in &paths {
            for &v in p {
                used[v] += 1;
            }
        }
        assert!(used.iter().all(|&c| c <= 1));
    }

    #[test]
    fn overlapping_terminal_sets_allow_a_point_path() {
        let c4 = make_named(NamedGraph::Cycle(4)).unwrap();
        let paths = vertex_disjoint_paths(&c4, &[0, 1], &[1, 2], 2).unwrap();
        assert!(paths.contains(&vec![1]));
    }
}
