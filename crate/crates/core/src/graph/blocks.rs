use super::{edge, Edge, Graph};

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cut
/// vertices of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex sets, ordered by smallest vertex.
    pub blocks: Vec<Vec<usize>>,
    /// Edges of each block, parallel to `blocks`.
    pub block_edges: Vec<Vec<Edge>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// Incidence pairs `(block index, cut vertex)` of the block tree.
    pub fn block_tree(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for &c in &self.cut_vertices {
                if b.binary_search(&c).is_ok() {
                    out.push((i, c));
                }
            }
        }
        out
    }

    /// Index of the block containing edge `uv`.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        let e = edge(u, v);
        self.block_edges
            .iter()
            .position(|es| es.binary_search(&e).is_ok())
    }

    /// Blocks with at least three vertices, i.e. the 2-connected ones.
    pub fn nontrivial(&self) -> impl Iterator<Item = (usize, &Vec<usize>)> {
        self.blocks.iter().enumerate().filter(|(_, b)| b.len() >= 3)
    }
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    stack: Vec<Edge>,
    is_cut: Vec<bool>,
    found: Vec<Vec<Edge>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        let mut children = 0;
        for &w in self.g.neighbors(u) {
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push(edge(u, w));
                self.visit(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX || children > 1 {
                        self.is_cut[u] = true;
                    }
                    let mut comp = Vec::new();
                    while let Some(e) = self.stack.pop() {
                        comp.push(e);
                        if e == edge(u, w) {
                            break;
                        }
                    }
                    self.found.push(comp);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push(edge(u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.is_cut[u] = true;
        }
    }
}

/// Computes the block decomposition. Every edge lands in exactly one block.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.n();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        timer: 0,
        stack: Vec::new(),
        is_cut: vec![false; n],
        found: Vec::new(),
    };
    let mut raw: Vec<(Vec<usize>, Vec<Edge>)> = Vec::new();
    for s in 0..n {
        if t.disc[s] != 0 {
            continue;
        }
        if g.degree(s) == 0 {
            t.timer += 1;
            t.disc[s] = t.timer;
            raw.push((vec![s], Vec::new()));
            continue;
        }
        t.visit(s, usize::MAX);
    }
    for mut es in t.found.drain(..) {
        es.sort_unstable();
        let mut vs: Vec<usize> = es.iter().flat_map(|&(a, b)| [a, b]).collect();
        vs.sort_unstable();
        vs.dedup();
        raw.push((vs, es));
    }
    raw.sort();
    let cut_vertices = (0..n).filter(|&v| t.is_cut[v]).collect();
    let (blocks, block_edges) = raw.into_iter().unzip();
    BlockDecomposition {
        blocks,
        block_edges,
        cut_vertices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedGraph};

    #[test]
    fn path_blocks_are_bridges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let bd = blocks(&g);
        assert_eq!(bd.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(bd.cut_vertices, vec![1]);
    }

    #[test]
    fn bowtie_has_two_triangles() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let bd = blocks(&g);
        assert_eq!(bd.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(bd.cut_vertices, vec![2]);
        assert_eq!(bd.block_tree(), vec![(0, 2), (1, 2)]);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = make_named(NamedGraph::Cycle(5)).unwrap();
        let bd = blocks(&g);
        assert_eq!(bd.blocks.len(), 1);
        assert!(bd.cut_vertices.is_empty());
    }

    #[test]
    fn isolated_vertex_is_its_own_block() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let bd = blocks(&g);
        assert_eq!(bd.blocks, vec![vec![0, 1], vec![2]]);
    }
}
