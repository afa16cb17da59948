use super::{Graph, GraphError};

/// Fixed graphs used by the recognizer's screens and the test corpus.
///
/// Squares of cycles live on `v1..vn` (indices `0..n-1` here) with `vi ~ vj`
/// iff their cyclic distance is at most 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    K4,
    /// The 5-wheel: a 5-cycle plus a hub (vertex 5) adjacent to all of it.
    W5,
    Claw,
    Cycle(usize),
    CycleSquare(usize),
    /// `C_n^2 - v_n`.
    CycleSquareMinusVertex(usize),
    /// `C_6^2 - v_1 v_6`.
    C6SquareMinusEdge,
}

impl NamedGraph {
    /// The graphs the recognizer tests by isomorphism plus the small
    /// forbidden ones.
    pub const CATALOGUE: [NamedGraph; 8] = [
        NamedGraph::K4,
        NamedGraph::W5,
        NamedGraph::CycleSquare(7),
        NamedGraph::CycleSquare(10),
        NamedGraph::C6SquareMinusEdge,
        NamedGraph::CycleSquareMinusVertex(7),
        NamedGraph::CycleSquareMinusVertex(10),
        NamedGraph::Claw,
    ];

    pub fn label(&self) -> String {
        match self {
            NamedGraph::K4 => "K4".into(),
            NamedGraph::W5 => "W5".into(),
            NamedGraph::Claw => "claw".into(),
            NamedGraph::Cycle(n) => format!("C{n}"),
            NamedGraph::CycleSquare(n) => format!("C{n}^2"),
            NamedGraph::CycleSquareMinusVertex(n) => format!("C{n}^2-v{n}"),
            NamedGraph::C6SquareMinusEdge => "C6^2-v1v6".into(),
        }
    }
}

fn cycle_power(n: usize, reach: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i).min(n - (j - i));
            if d <= reach {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("cycle powers are simple")
}

pub fn make_named(name: NamedGraph) -> Result<Graph, GraphError> {
    let bad = |msg: &str| Err(GraphError::InvalidParameter(msg.to_string()));
    match name {
        NamedGraph::K4 => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        NamedGraph::W5 => {
            let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend((0..5).map(|i| (i, 5)));
            Graph::from_edges(6, &edges)
        }
        NamedGraph::Claw => Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]),
        NamedGraph::Cycle(n) if n >= 3 => Ok(cycle_power(n, 1)),
        NamedGraph::Cycle(_) => bad("a cycle needs at least 3 vertices"),
        NamedGraph::CycleSquare(n) if n >= 5 => Ok(cycle_power(n, 2)),
        NamedGraph::CycleSquareMinusVertex(n) if n >= 5 => Ok(cycle_power(n, 2).remove_vertex(n - 1).0),
        NamedGraph::CycleSquare(_) | NamedGraph::CycleSquareMinusVertex(_) => {
            bad("squares of cycles need n >= 5")
        }
        NamedGraph::C6SquareMinusEdge => Ok(cycle_power(6, 2).remove_edges(&[(0, 5)])),
    }
}
