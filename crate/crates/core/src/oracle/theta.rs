use super::OracleError;
use crate::graph::Graph;

pub const THETA_MAX_VERTICES: usize = 14;

/// Every simple `a`–`b` path as (edge bitmask, odd length).
fn paths_between(g: &Graph, index: &[Vec<usize>], a: usize, b: usize) -> Vec<(u128, bool)> {
    fn walk(
        g: &Graph,
        index: &[Vec<usize>],
        cur: usize,
        b: usize,
        on_path: &mut [bool],
        mask: u128,
        len: usize,
        out: &mut Vec<(u128, bool)>,
    ) {
        if cur == b {
            out.push((mask, len % 2 == 1));
            return;
        }
        for (i, &w) in g.neighbors(cur).iter().enumerate() {
            if on_path[w] {
                continue;
            }
            on_path[w] = true;
            walk(g, index, w, b, on_path, mask | 1u128 << index[cur][i], len + 1, out);
            on_path[w] = false;
        }
    }
    let mut on_path = vec![false; g.n()];
    on_path[a] = true;
    let mut out = Vec::new();
    walk(g, index, a, b, &mut on_path, 0, 0, &mut out);
    out
}

/// Exhaustive search for two branch vertices joined by three pairwise
/// edge-disjoint paths, two odd and one even.
pub fn has_skewed_theta_bruteforce(h: &Graph) -> Result<bool, OracleError> {
    if h.n() > THETA_MAX_VERTICES {
        return Err(OracleError::TooLarge(h.n(), THETA_MAX_VERTICES));
    }
    // index[v][i] is the bit of the edge from v to its i-th neighbour
    let edges = h.edges();
    let index: Vec<Vec<usize>> = (0..h.n())
        .map(|v| {
            h.neighbors(v)
                .iter()
                .map(|&w| edges.binary_search(&crate::graph::edge(v, w)).expect("edge"))
                .collect()
        })
        .collect();
    for a in 0..h.n() {
        if h.degree(a) < 3 {
            continue;
        }
        for b in a + 1..h.n() {
            if h.degree(b) < 3 {
                continue;
            }
            let paths = paths_between(h, &index, a, b);
            let (odd, even): (Vec<_>, Vec<_>) = paths.into_iter().partition(|p| p.1);
            if odd.len() < 2 || even.is_empty() {
                continue;
            }
            for &(e, _) in &even {
                let free: Vec<u128> = odd.iter().map(|p| p.0).filter(|&m| m & e == 0).collect();
                for (i, &p) in free.iter().enumerate() {
                    if free[i + 1..].iter().any(|&q| p & q == 0) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    /// Theta graph with internally disjoint paths of the given lengths
    /// between vertices 0 and 1.
    pub(crate) fn theta(lengths: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &len in lengths {
            let mut prev = 0;
            for _ in 1..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert!(!has_skewed_theta_bruteforce(&make_named(NamedGraph::K4).unwrap()).unwrap());
        assert!(has_skewed_theta_bruteforce(&theta(&[2, 3, 3])).unwrap());
        assert!(has_skewed_theta_bruteforce(&theta(&[1, 2, 3])).unwrap());
        assert!(!has_skewed_theta_bruteforce(&theta(&[1, 3, 3])).unwrap());
        assert!(!has_skewed_theta_bruteforce(&theta(&[2, 2, 3])).unwrap());
        assert!(!has_skewed_theta_bruteforce(&make_named(NamedGraph::Cycle(8)).unwrap()).unwrap());
    }

    #[test]
    fn two_triangles_joined_by_a_path() {
        // odd cycles sharing nothing but a connecting path give a skewed theta
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
            .unwrap();
        assert!(!has_skewed_theta_bruteforce(&g).unwrap());
        let g2 = g.with_edge(0, 5);
        assert!(has_skewed_theta_bruteforce(&g2).unwrap());
    }

    #[test]
    fn guard() {
        assert!(has_skewed_theta_bruteforce(&Graph::new(15)).is_err());
    }
}
