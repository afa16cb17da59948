use crate::graph::{Graph, GraphError};

/// Largest graph [`canonical_form`] accepts; the code is packed into a `u128`.
pub const CANON_MAX_VERTICES: usize = 16;

/// An isomorphism-invariant key: two graphs have equal keys iff they are
/// isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey {
    pub n: u8,
    pub code: u128,
}

/// Canonical key together with the labelling that realises it:
/// `order[i]` is the vertex placed at position `i`.
pub fn canonical_labelling(g: &Graph) -> Result<(CanonKey, Vec<usize>), GraphError> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(GraphError::TooLarge(n, CANON_MAX_VERTICES));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut search = Search {
        adj: &adj,
        best: None,
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    if n == 0 {
        cells.clear();
    }
    refine(&adj, &mut cells);
    search.descend(cells);
    let (code, order) = search.best.unwrap_or((0, Vec::new()));
    Ok((CanonKey { n: n as u8, code }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonKey, GraphError> {
    canonical_labelling(g).map(|(k, _)| k)
}

/// The graph relabelled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    let (_, order) = canonical_labelling(g)?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges: Vec<_> = g.edges().iter().map(|&(a, b)| (pos[a], pos[b])).collect();
    Graph::from_edges(g.n(), &edges)
}

struct Search<'a> {
    adj: &'a [u32],
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = leaf_code(self.adj, &order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return;
        };
        // twins inside one cell are swapped by an automorphism fixing the
        // partition, so their subtrees produce identical leaf codes
        let cell = &cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for &v in cell {
            if tried.iter().any(|&w| twins(self.adj, v, w)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            refine(self.adj, &mut next);
            self.descend(next);
        }
    }
}

fn twins(adj: &[u32], a: usize, b: usize) -> bool {
    let strip = !((1u32 << a) | (1u32 << b));
    adj[a] & strip == adj[b] & strip
}

fn leaf_code(adj: &[u32], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code = code << 1 | u128::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

/// Equitable refinement: split every cell by neighbour counts into each other
/// cell until stable. New pieces are ordered by count, so the result depends
/// only on the partition, never on vertex names.
fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mask = cells[s].iter().fold(0u32, |m, &w| m | 1 << w);
            let mut i = 0;
            while i < cells.len() {
                if cells[i].len() > 1 {
                    let mut keyed: Vec<(u32, usize)> = cells[i]
                        .iter()
                        .map(|&v| ((adj[v] & mask).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    if keyed[0].0 != keyed[keyed.len() - 1].0 {
                        let mut pieces: Vec<Vec<usize>> = Vec::new();
                        let mut last = u32::MAX;
                        for (k, v) in keyed {
                            if k != last {
                                pieces.push(Vec::new());
                                last = k;
                            }
                            pieces.last_mut().expect("just pushed").push(v);
                        }
                        let added = pieces.len() - 1;
                        cells.splice(i..=i, pieces);
                        i += added;
                        changed = true;
                    }
                }
                i += 1;
            }
            s += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_isomorphic_small, make_named, NamedGraph};
    use rand::{Rng, SeedableRng};

    fn shuffle(g: &Graph, rng: &mut impl Rng) -> Graph {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let edges: Vec<_> = g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelling_invariance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(0..=12);
            let g = random_graph(n, rng.gen_range(0.1..0.9), &mut rng);
            let h = shuffle(&g, &mut rng);
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            assert_eq!(canonical_graph(&g).unwrap(), canonical_graph(&h).unwrap());
        }
    }

    #[test]
    fn separates_non_isomorphic_graphs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..300 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(n, 0.5, &mut rng);
            let h = random_graph(n, 0.5, &mut rng);
            let same = canonical_form(&g).unwrap() == canonical_form(&h).unwrap();
            assert_eq!(same, is_isomorphic_small(&g, &h).unwrap());
        }
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        for g in [
            Graph::new(16),
            make_named(NamedGraph::CycleSquare(10)).unwrap(),
            Graph::from_edges(
                12,
                &(0..12)
                    .flat_map(|a| (a + 1..12).map(move |b| (a, b)))
                    .collect::<Vec<_>>(),
            )
            .unwrap(),
        ] {
            canonical_form(&g).unwrap();
        }
    }

    #[test]
    fn guard() {
        assert!(canonical_form(&Graph::new(17)).is_err());
    }
}
