use super::{Graph, GraphError};

/// Largest graph accepted by [`is_isomorphic_small`].
pub const ISO_MAX_VERTICES: usize = 16;

/// Exact isomorphism test by backtracking over degree-compatible images.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.n() > ISO_MAX_VERTICES {
            return Err(GraphError::TooLarge(x.n(), ISO_MAX_VERTICES));
        }
    }
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    // map high-degree vertices first: they constrain the search most
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut image = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    Ok(extend(g, h, &order, 0, &mut image, &mut used))
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..h.n() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}
