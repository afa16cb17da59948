//! Given three odd edges, either certify a skewed theta or produce an edge cut
//! with more odd than even edges.

use std::collections::{BTreeSet, VecDeque};

use super::{crossing_on_cycle, precondition, OddEdgeView, ThetaCtx, ThetaError};
use crate::graph::{edge, edge_disjoint_paths, min_edge_cut_between, Edge, EdgeCut, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriadsOutcome {
    SkewedTheta,
    Cut(EdgeCut),
}

/// BFS spanning tree of a connected graph as a parent array rooted at 0.
fn bfs_tree(gp: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = gp.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &y in gp.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
    }
    (parent, depth)
}

fn tree_path_edges(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    while a != b {
        if depth[a] >= depth[b] {
            out.insert(edge(a, parent[a]));
            a = parent[a];
        } else {
            out.insert(edge(b, parent[b]));
            b = parent[b];
        }
    }
    out
}

fn path_edges(path: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    path.windows(2).map(|w| edge(w[0], w[1]))
}

fn component_of(h: &Graph, v: usize) -> Vec<usize> {
    let mut seen = vec![false; h.n()];
    let mut c = h.reach(v, &mut seen, |_| true);
    c.sort_unstable();
    c
}

/// Strips leaves that are not terminals from the subgraph of `h` on `tree`.
fn prune(h: &Graph, tree: &[usize], terminal: &[bool]) -> Vec<usize> {
    let mut alive = vec![false; h.n()];
    tree.iter().for_each(|&v| alive[v] = true);
    let mut deg: Vec<usize> = (0..h.n())
        .map(|v| h.neighbors(v).iter().filter(|&&w| alive[w]).count())
        .collect();
    let mut stack: Vec<usize> = tree.iter().copied().filter(|&v| deg[v] <= 1 && !terminal[v]).collect();
    let mut left = tree.len();
    while let Some(v) = stack.pop() {
        if !alive[v] || left == 1 {
            continue;
        }
        alive[v] = false;
        left -= 1;
        for &w in h.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] <= 1 && !terminal[w] {
                    stack.push(w);
                }
            }
        }
    }
    tree.iter().copied().filter(|&v| alive[v]).collect()
}

/// The two trees seeded at `a` and `b` inside the forest `forest`, pruned to
/// their terminals, then separated in `G_P` by a minimum cut. Three or more
/// edge-disjoint paths between the trees certify a skewed theta.
fn tree_pair_cut(
    g: &Graph,
    gp: &Graph,
    forest: &BTreeSet<Edge>,
    a: usize,
    b: usize,
    odd: &[Edge; 3],
    ctx: &mut ThetaCtx,
) -> Result<TriadsOutcome, ThetaError> {
    let h = Graph::from_edges(g.n(), &forest.iter().copied().collect::<Vec<_>>())
        .map_err(|e| precondition(format!("tree edges: {e}")))?;
    let mut terminal = vec![false; g.n()];
    for &(u, v) in odd {
        terminal[u] = true;
        terminal[v] = true;
    }
    let t1 = prune(&h, &component_of(&h, a), &terminal);
    let t2 = prune(&h, &component_of(&h, b), &terminal);
    if t1.iter().any(|v| t2.binary_search(v).is_ok()) {
        return Err(precondition("the two trees are not disjoint"));
    }
    for &(u, v) in odd {
        let ok = |t: &[usize]| t.binary_search(&u).is_ok() || t.binary_search(&v).is_ok();
        ctx.check(ok(&t1) && ok(&t2), || format!("odd edge {u}-{v} misses a tree"));
    }
    let cut = min_edge_cut_between(gp, &t1, &t2);
    if cut.len() >= 3 {
        ctx.note("triads:three-paths-between-trees", g);
        return Ok(TriadsOutcome::SkewedTheta);
    }
    ctx.note("triads:small-cut-between-trees", g);
    Ok(TriadsOutcome::Cut(EdgeCut::from_side(g, &cut.side_x)))
}

/// The vertex sequence of the cycle formed by `edges`.
fn cycle_sequence(n: usize, edges: &BTreeSet<Edge>) -> Result<Vec<usize>, ThetaError> {
    let h = Graph::from_edges(n, &edges.iter().copied().collect::<Vec<_>>())
        .map_err(|e| precondition(format!("cycle edges: {e}")))?;
    let start = edges.iter().next().ok_or_else(|| precondition("empty cycle"))?.0;
    let mut seq = vec![start];
    let (mut prev, mut cur) = (usize::MAX, start);
    loop {
        if h.degree(cur) != 2 {
            return Err(precondition("odd-edge cycle is not a simple cycle"));
        }
        let next = h.neighbors(cur).iter().copied().find(|&w| w != prev).expect("degree two");
        if next == start {
            break;
        }
        seq.push(next);
        prev = cur;
        cur = next;
    }
    if seq.len() != (0..n).filter(|&v| h.degree(v) > 0).count() {
        return Err(precondition("odd-edge cycle is not connected"));
    }
    Ok(seq)
}

/// Runs the three-odd-edge procedure on a 2-connected subcubic graph.
pub fn triads(g: &Graph, view: &OddEdgeView, odd: [Edge; 3], ctx: &mut ThetaCtx) -> Result<TriadsOutcome, ThetaError> {
    let odd = odd.map(|(u, v)| edge(u, v));
    if odd.iter().any(|&(u, v)| !g.has_edge(u, v) || !view.is_odd(u, v)) {
        return Err(precondition("triads needs three odd edges of the graph"));
    }
    let gp = view.even_subgraph(g);
    if !gp.is_connected() {
        ctx.note("triads:even-subgraph-disconnected", g);
        return Ok(TriadsOutcome::Cut(EdgeCut::from_side(g, &component_of(&gp, 0))));
    }

    let (parent, depth) = bfs_tree(&gp);
    let paths: Vec<BTreeSet<Edge>> = odd.iter().map(|&(u, v)| tree_path_edges(&parent, &depth, u, v)).collect();
    for i in 0..3 {
        for j in i + 1..3 {
            if paths[i].is_disjoint(&paths[j]) {
                ctx.note("triads:disjoint-odd-cycles", g);
                return Ok(TriadsOutcome::SkewedTheta);
            }
        }
    }

    let common = paths[0].iter().find(|e| paths[1].contains(e) && paths[2].contains(e)).copied();
    if let Some(e) = common {
        let mut forest: BTreeSet<Edge> = paths.iter().flatten().copied().collect();
        forest.remove(&e);
        return tree_pair_cut(g, &gp, &forest, e.0, e.1, &odd, ctx);
    }

    // edges lying on exactly one fundamental cycle form a cycle D through
    // all three odd edges
    let mut d: BTreeSet<Edge> = odd.iter().copied().collect();
    for (i, p) in paths.iter().enumerate() {
        for e in p {
            if !paths.iter().enumerate().any(|(j, q)| j != i && q.contains(e)) {
                d.insert(*e);
            }
        }
    }
    let d_seq = cycle_sequence(g.n(), &d)?;
    let segments: Vec<Edge> = d.iter().copied().filter(|e| !odd.contains(e)).collect();
    let seg_graph = Graph::from_edges(g.n(), &segments).map_err(|e| precondition(e.to_string()))?;
    let mut s: Vec<Vec<usize>> = Vec::new();
    for &(u, v) in &odd {
        for x in [u, v] {
            let c = component_of(&seg_graph, x);
            if !s.contains(&c) {
                s.push(c);
            }
        }
    }
    if s.len() != 3 {
        return Err(precondition(format!("odd-edge cycle splits into {} segments", s.len())));
    }
    s.sort_unstable();
    let rest: Vec<usize> = s[1].iter().chain(&s[2]).copied().collect();

    let single = min_edge_cut_between(&gp, &s[0], &rest);
    if single.len() == 1 {
        ctx.note("triads:single-even-edge-cut", g);
        let side = component_of(&gp.remove_edges(&single.edges), s[0][0]);
        return Ok(TriadsOutcome::Cut(EdgeCut::from_side(g, &side)));
    }

    let found = edge_disjoint_paths(&gp, &s[0], &rest, 2)
        .ok_or_else(|| precondition("no two edge-disjoint paths between segments"))?;
    let (mut p, mut q) = (found[0].clone(), found[1].clone());
    let seg_of = |v: usize| s.iter().position(|c| c.binary_search(&v).is_ok());
    let (sp, sq) = (seg_of(*p.last().unwrap()), seg_of(*q.last().unwrap()));
    if sp == sq {
        let same = sp.expect("path ends in a segment");
        let other = 3 - same;
        let blocked = &s[same];
        let r = gp
            .shortest_path_between_sets(&s[0], &s[other], |v| blocked.binary_search(&v).is_err())
            .ok_or_else(|| precondition("no path between segments avoiding the third"))?;
        let last = r.iter().rposition(|v| p.contains(v) || q.contains(v));
        match last {
            None => q = r,
            Some(i) => {
                let at = r[i];
                let target = if p.contains(&at) { &mut p } else { &mut q };
                let cut_at = target.iter().position(|&v| v == at).expect("vertex on path");
                target.truncate(cut_at);
                target.extend_from_slice(&r[i..]);
            }
        }
        ctx.note("triads:rerouted-path", g);
    }
    let (p1, p2, q1, q2) = (p[0], *p.last().unwrap(), q[0], *q.last().unwrap());
    ctx.check(seg_of(p2) != seg_of(q2), || "paths end in the same segment".to_string());
    if !crossing_on_cycle(&d_seq, (p1, p2), (q1, q2))? {
        ctx.note("triads:non-crossing-paths", g);
        return Ok(TriadsOutcome::SkewedTheta);
    }

    let s1_path = seg_graph
        .shortest_path_between_sets(&[p1], &[q1], |_| true)
        .ok_or_else(|| precondition("segment is not a path"))?;
    let e2 = edge(s1_path[0], s1_path[1]);
    let mut forest: BTreeSet<Edge> = segments.iter().copied().collect();
    forest.remove(&e2);
    forest.extend(path_edges(&p));
    forest.extend(path_edges(&q));
    ctx.note("triads:crossing-paths", g);
    tree_pair_cut(g, &gp, &forest, p1, q1, &odd, ctx)
}
