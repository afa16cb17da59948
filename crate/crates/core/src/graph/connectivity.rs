use super::{blocks, Graph, GraphError};

/// An order-`k` separation: two proper induced subgraphs covering the graph
/// whose vertex sets meet exactly in `cut`, with no edge between the two
/// private parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
    pub cut: Vec<usize>,
}

impl Separation {
    pub fn order(&self) -> usize {
        self.cut.len()
    }
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && blocks(g).cut_vertices.is_empty()
}

/// True iff `g` has at least four vertices, is connected, and no set of at
/// most two vertices disconnects it. Graphs with fewer than four vertices
/// report `false`.
pub fn is_three_connected(g: &Graph) -> bool {
    if g.n() < 4 || !is_two_connected(g) {
        return false;
    }
    (0..g.n()).all(|u| {
        let (h, _) = g.remove_vertex(u);
        blocks(&h).cut_vertices.is_empty()
    })
}

/// Lexicographically smallest 2-vertex cut `{u, v}` and the separation it
/// induces: side 1 is the component of `g - {u, v}` holding the smallest
/// vertex, side 2 everything else; both contain `u` and `v`.
pub fn find_two_separation(g: &Graph) -> Result<Separation, GraphError> {
    if g.n() < 4 || !g.is_connected() {
        return Err(GraphError::InvalidParameter(
            "separation search needs a connected graph on at least 4 vertices".into(),
        ));
    }
    for u in 0..g.n() {
        let (h, map) = g.remove_vertex(u);
        let Some(v) = blocks(&h)
            .cut_vertices
            .iter()
            .map(|&c| map[c])
            .filter(|&v| v > u)
            .min()
        else {
            continue;
        };
        let mut seen = vec![false; g.n()];
        seen[u] = true;
        seen[v] = true;
        let start = (0..g.n()).find(|&w| !seen[w]).expect("at least four vertices");
        let mut first = g.reach(start, &mut seen, |_| true);
        first.extend([u, v]);
        first.sort_unstable();
        let mut second: Vec<usize> = (0..g.n())
            .filter(|&w| w == u || w == v || first.binary_search(&w).is_err())
            .collect();
        second.sort_unstable();
        return Ok(Separation {
            side1: first,
            side2: second,
            cut: vec![u, v],
        });
    }
    Err(GraphError::NoTwoSeparation)
}
