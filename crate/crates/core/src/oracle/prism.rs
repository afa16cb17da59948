use super::OracleError;
use crate::graph::Graph;

pub const PRISM_MAX_VERTICES: usize = 12;

/// Searches for an induced skewed prism: triangles `a1a2a3` and `b1b2b3`
/// joined by vertex-disjoint paths `ai`–`bi`, with `P1`, `P2` even and `P3`
/// odd, and no edges besides the triangles and the paths. Even paths may have
/// length 0 (`ai = bi`), so K4 qualifies.
pub fn has_skewed_prism_bruteforce(g: &Graph) -> Result<bool, OracleError> {
    if g.n() > PRISM_MAX_VERTICES {
        return Err(OracleError::TooLarge(g.n(), PRISM_MAX_VERTICES));
    }
    let triangles = triangles(g);
    for t1 in &triangles {
        for t2 in &triangles {
            for a in permutations(t1) {
                for odd_slot in 0..3 {
                    if try_shape(g, a, *t2, odd_slot) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.has_edge(a, c) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn permutations(t: &[usize; 3]) -> [[usize; 3]; 6] {
    let [x, y, z] = *t;
    [[x, y, z], [x, z, y], [y, x, z], [y, z, x], [z, x, y], [z, y, x]]
}

/// Paths go from `a[i]` to `b[i]`; `b` is taken in its stored order, so all
/// matchings are covered by permuting `a`.
fn try_shape(g: &Graph, a: [usize; 3], b: [usize; 3], odd_slot: usize) -> bool {
    for i in 0..3 {
        let shared = a[i] == b[i];
        if shared && i == odd_slot {
            return false;
        }
        // a vertex in both triangles must be the endpoint of a trivial path
        if !shared && (b.contains(&a[i]) || a.contains(&b[i])) {
            return false;
        }
    }
    let mut used = vec![false; g.n()];
    for v in a.iter().chain(b.iter()) {
        used[*v] = true;
    }
    let mut structure: Vec<(usize, usize)> = Vec::new();
    for t in [a, b] {
        structure.extend([(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
    }
    extend_slot(g, &a, &b, odd_slot, 0, &mut used, &mut structure)
}

fn extend_slot(
    g: &Graph,
    a: &[usize; 3],
    b: &[usize; 3],
    odd_slot: usize,
    slot: usize,
    used: &mut [bool],
    structure: &mut Vec<(usize, usize)>,
) -> bool {
    if slot == 3 {
        return is_exact(g, used, structure);
    }
    if a[slot] == b[slot] {
        return extend_slot(g, a, b, odd_slot, slot + 1, used, structure);
    }
    let want_odd = slot == odd_slot;
    let mut path = vec![a[slot]];
    walk(g, a, b, odd_slot, slot, want_odd, &mut path, used, structure)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    g: &Graph,
    a: &[usize; 3],
    b: &[usize; 3],
    odd_slot: usize,
    slot: usize,
    want_odd: bool,
    path: &mut Vec<usize>,
    used: &mut [bool],
    structure: &mut Vec<(usize, usize)>,
) -> bool {
    let cur = *path.last().expect("path starts at a triangle vertex");
    let target = b[slot];
    for &w in g.neighbors(cur) {
        if w == target {
            if (path.len() % 2 == 1) == want_odd {
                structure.push((cur, w));
                let found = extend_slot(g, a, b, odd_slot, slot + 1, used, structure);
                structure.pop();
                if found {
                    return true;
                }
            }
            continue;
        }
        if used[w] {
            continue;
        }
        used[w] = true;
        path.push(w);
        structure.push((cur, w));
        let found = walk(g, a, b, odd_slot, slot, want_odd, path, used, structure);
        structure.pop();
        path.pop();
        used[w] = false;
        if found {
            return true;
        }
    }
    false
}

/// The subgraph induced on `used` has exactly the structure's edges.
fn is_exact(g: &Graph, used: &[bool], structure: &[(usize, usize)]) -> bool {
    let induced: usize = (0..g.n())
        .filter(|&v| used[v])
        .map(|v| g.neighbors(v).iter().filter(|&&w| w > v && used[w]).count())
        .sum();
    let mut own: Vec<(usize, usize)> = structure
        .iter()
        .map(|&(x, y)| (x.min(y), x.max(y)))
        .filter(|&(x, y)| x != y)
        .collect();
    own.sort_unstable();
    own.dedup();
    induced == own.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    fn prism_with_rungs(subdivide_third: usize) -> Graph {
        // triangles 0,1,2 and 3,4,5; rungs 0-3, 1-4 and 2..5 subdivided
        let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)];
        let mut prev = 2;
        let mut next = 6;
        for _ in 0..subdivide_third {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 5));
        Graph::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn examples() {
        assert!(has_skewed_prism_bruteforce(&make_named(NamedGraph::K4).unwrap()).unwrap());
        assert!(!has_skewed_prism_bruteforce(&make_named(NamedGraph::Cycle(6)).unwrap()).unwrap());
        // the plain prism has three odd rungs
        assert!(!has_skewed_prism_bruteforce(&prism_with_rungs(0)).unwrap());
        // one rung of length 2 gives parities even, odd, odd: take a different
        // matching of triangle vertices
        assert!(!has_skewed_prism_bruteforce(&prism_with_rungs(1)).unwrap());
    }

    #[test]
    fn two_even_rungs_make_a_skewed_prism() {
        let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 5)];
        edges.extend([(0, 6), (6, 3), (1, 7), (7, 4)]);
        let g = Graph::from_edges(8, &edges).unwrap();
        assert!(has_skewed_prism_bruteforce(&g).unwrap());
    }

    #[test]
    fn guard() {
        assert!(has_skewed_prism_bruteforce(&Graph::new(13)).is_err());
    }
}
