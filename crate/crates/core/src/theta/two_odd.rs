//! Skewed-theta detection with exactly two odd edges.
//!
//! A small cut `F` through both odd edges splits the graph into two sides.
//! Once every cheaper outcome is ruled out, each side is kept whole while the
//! other collapses to at most two short paths of the right parity, and the
//! search recurses on both halves.

use super::{decide_few_odd_edges, flip, one_odd_edge, precondition, OddEdgeView, ThetaCtx, ThetaError};
use crate::graph::{edge, min_edge_cut_between, vertex_disjoint_paths, Edge, EdgeCut, Graph};
use crate::parity::has_two_disjoint_odd_cycles;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoOddCut {
    SkewedTheta,
    Cut(EdgeCut),
}

fn two_odd(g: &Graph, view: &OddEdgeView) -> Result<[Edge; 2], ThetaError> {
    match view.odd_edges(g).as_slice() {
        &[a, b] => Ok([a, b]),
        other => Err(precondition(format!("{} odd edges, expected two", other.len()))),
    }
}

/// On a 2-connected subcubic graph with two odd edges, either certifies a
/// skewed theta or returns a minimal cut through both odd edges with at most
/// four edges.
pub fn two_odd_cut(g: &Graph, view: &OddEdgeView, ctx: &mut ThetaCtx) -> Result<TwoOddCut, ThetaError> {
    let [(a, b), (c, d)] = two_odd(g, view)?;
    let paths = vertex_disjoint_paths(g, &[a, b], &[c, d], 2)
        .ok_or_else(|| precondition("odd edges are not linked by two disjoint paths"))?;
    let cut = min_edge_cut_between(g, &paths[0], &paths[1]);
    if cut.len() >= 5 {
        ctx.note("two-odd:wide-cut", g);
        return Ok(TwoOddCut::SkewedTheta);
    }
    ctx.note("two-odd:cut", g);
    Ok(TwoOddCut::Cut(cut))
}

/// Decides a 2-connected subcubic graph with two odd edges given the cut from
/// [`two_odd_cut`].
pub fn two_odd_decide(g: &Graph, view: &OddEdgeView, cut: &EdgeCut, ctx: &mut ThetaCtx) -> Result<bool, ThetaError> {
    ctx.calls += 1;
    let odd = two_odd(g, view)?;
    let [o1, o2] = odd;

    // a cut of at most three edges holding both odd edges
    for e in g.edges() {
        let h = g.remove_edges(&[o1, o2, e]);
        for comp in h.components() {
            let side = EdgeCut::from_side(g, &comp);
            let (co, ce) = view.count_in(&side.edges);
            if co > ce {
                ctx.note("two-odd:three-edge-cut", g);
                let flipped = flip(g, view, &side)?;
                return one_odd_edge(g, &flipped, ctx);
            }
        }
    }

    for o in odd {
        if one_odd_edge(&g.remove_edges(&[o]), view, ctx)? {
            ctx.note("two-odd:theta-avoiding-an-odd-edge", g);
            return Ok(true);
        }
    }

    let others: Vec<Edge> = cut.edges.iter().copied().filter(|e| !odd.contains(e)).collect();
    ctx.check(cut.len() == 4 && others.len() == 2 && cut.contains(o1) && cut.contains(o2), || {
        format!("cut {:?} is not two odd edges plus two others", cut.edges)
    });
    if others.len() != 2 {
        return Err(precondition("cut through both odd edges must have four edges here"));
    }
    for &e in &others {
        let h = g.remove_edges(&[e]);
        let side = EdgeCut::from_side(&h, &cut.side_x);
        let flipped = flip(&h, view, &side)?;
        if one_odd_edge(&h, &flipped, ctx)? {
            ctx.note("two-odd:theta-avoiding-a-cut-edge", g);
            return Ok(true);
        }
    }

    if has_two_disjoint_odd_cycles(g, &odd)? {
        ctx.note("two-odd:disjoint-odd-cycles", g);
        return Ok(true);
    }

    let mut in_x = vec![false; g.n()];
    cut.side_x.iter().for_each(|&v| in_x[v] = true);
    let side_ends = |side: bool| -> [usize; 4] {
        [o1, o2, others[0], others[1]].map(|(p, q)| if in_x[p] == side { p } else { q })
    };
    let (ends1, ends2) = (side_ends(true), side_ends(false));
    let linked1 = link_side(g, &cut.side_x, ends1, ctx)?;
    let linked2 = link_side(g, &cut.side_y, ends2, ctx)?;
    let (Some(l1), Some(l2)) = (linked1, linked2) else {
        return Err(precondition("sides lack linking paths"));
    };

    // the cut edge at the end of P on one side must reach the end of Q on the
    // other, or the two halves close two disjoint odd cycles
    let crossed = [others[0], others[1]]
        .iter()
        .all(|&(p, q)| [l1.u, l1.v].contains(&p) || [l1.u, l1.v].contains(&q))
        && others.contains(&edge(l1.u, l2.v))
        && others.contains(&edge(l1.v, l2.u));
    if !crossed {
        ctx.check(false, || "linking paths close two disjoint odd cycles".to_string());
        return Ok(true);
    }

    let children = [
        half(g, view, &cut.side_x, &l1, &l2),
        half(g, view, &cut.side_y, &l2, &l1),
    ];
    let total: usize = children.iter().map(|(c, _)| c.m()).sum();
    ctx.check(total <= g.m() + 4, || format!("halves hold {total} edges from {}", g.m()));
    for (child, cview) in &children {
        ctx.check(child.m() < g.m() && child.max_degree() <= 3, || {
            format!("half has {} edges and max degree {} from {} edges", child.m(), child.max_degree(), g.m())
        });
        ctx.check(cview.odd_edges(child).len() == 2, || {
            format!("half has {} odd edges", cview.odd_edges(child).len())
        });
    }
    ctx.note("two-odd:split-into-halves", g);
    for (child, cview) in &children {
        if decide_few_odd_edges(child, cview, ctx)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Disjoint paths `x..u` and `y..v` inside one side, from the ends of the two
/// odd edges to the ends of the two other cut edges.
struct Linked {
    x: usize,
    y: usize,
    u: usize,
    v: usize,
    p_len: usize,
    q_len: usize,
}

fn link_side(g: &Graph, side: &[usize], ends: [usize; 4], ctx: &mut ThetaCtx) -> Result<Option<Linked>, ThetaError> {
    let [x, y, e1, e2] = ends;
    ctx.check(x != y && e1 != e2, || format!("cut edges share ends on one side: {ends:?}"));
    let (h, back) = g.induced(side);
    let local = |w: usize| back.binary_search(&w).expect("end on this side");
    let Some(paths) = vertex_disjoint_paths(&h, &[local(x), local(y)], &[local(e1), local(e2)], 2) else {
        return Ok(None);
    };
    let (mut p, mut q) = (paths[0].clone(), paths[1].clone());
    if back[p[0]] != x {
        std::mem::swap(&mut p, &mut q);
    }
    Ok(Some(Linked {
        x,
        y,
        u: back[*p.last().unwrap()],
        v: back[*q.last().unwrap()],
        p_len: p.len() - 1,
        q_len: q.len() - 1,
    }))
}

/// `keep` with the far side replaced by paths of the same parity as
/// `x x' P' u' v` and `y y' Q' v' u`.
fn half(g: &Graph, view: &OddEdgeView, keep: &[usize], near: &Linked, far: &Linked) -> (Graph, OddEdgeView) {
    let mut verts: Vec<usize> = keep.to_vec();
    let mut edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| keep.binary_search(&a).is_ok() && keep.binary_search(&b).is_ok())
        .collect();
    let routes = [(near.x, far.x, far.p_len, far.u, near.v), (near.y, far.y, far.q_len, far.v, near.u)];
    for (start, far_start, len, far_end, end) in routes {
        if len % 2 == 1 && !edges.contains(&edge(start, end)) {
            edges.push(edge(start, end));
        } else if len % 2 == 1 {
            verts.extend([far_start, far_end]);
            edges.extend([edge(start, far_start), edge(far_start, far_end), edge(far_end, end)]);
        } else {
            verts.push(far_start);
            edges.extend([edge(start, far_start), edge(far_start, end)]);
        }
    }
    verts.sort_unstable();
    verts.dedup();
    let pos = |v: usize| verts.binary_search(&v).expect("vertex kept");
    let h = Graph::from_edges_simplified(verts.len(), edges.iter().map(|&(a, b)| (pos(a), pos(b))));
    (h, view.restrict(&verts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::corpus::{all_connected_subcubic, random_subcubic, rng_from_seed};
    use crate::oracle::has_skewed_theta_bruteforce;
    use rand::Rng;

    /// Every bipartition of a small graph that leaves exactly two odd edges,
    /// found by 2-colouring `g - {e, f}`.
    fn two_odd_views(g: &Graph) -> Vec<OddEdgeView> {
        let edges = g.edges();
        let mut out = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let h = g.remove_edges(&[e, f]);
                let Some(class) = two_colour(&h) else { continue };
                let view = OddEdgeView { class };
                if view.odd_edges(g) == vec![e, f] {
                    out.push(view);
                }
            }
        }
        out
    }

    fn two_colour(h: &Graph) -> Option<Vec<bool>> {
        let mut class = vec![None; h.n()];
        for s in 0..h.n() {
            if class[s].is_some() {
                continue;
            }
            class[s] = Some(false);
            let mut stack = vec![s];
            while let Some(a) = stack.pop() {
                for &b in h.neighbors(a) {
                    let want = !class[a].unwrap();
                    match class[b] {
                        None => {
                            class[b] = Some(want);
                            stack.push(b);
                        }
                        Some(c) if c != want => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(class.into_iter().map(Option::unwrap).collect())
    }

    fn check(g: &Graph) {
        let expected = has_skewed_theta_bruteforce(g).unwrap();
        for view in two_odd_views(g) {
            let mut ctx = ThetaCtx::default();
            let got = decide_few_odd_edges(g, &view, &mut ctx).unwrap();
            assert!(ctx.diagnostics.is_empty(), "{g:?} {view:?} {:?}", ctx.diagnostics);
            assert_eq!(got, expected, "{g:?} {view:?}");
        }
    }

    #[test]
    fn agrees_with_oracle_on_small_subcubic_graphs() {
        for g in all_connected_subcubic(9) {
            check(&g);
        }
    }

    #[test]
    fn agrees_with_oracle_on_random_subcubic_graphs() {
        let mut rng = rng_from_seed(5);
        for _ in 0..150 {
            let n = rng.gen_range(8..=13);
            check(&random_subcubic(n, &mut rng));
        }
    }
}
