//! Exponential reference procedures. Nothing here feeds the recognizer; the
//! test suites and the `oracle` subcommand compare against these.

mod canon;
mod prism;
mod theta;

use std::collections::{HashSet, VecDeque};

use thiserror::Error;

use crate::graph::{make_named, Graph, GraphError, NamedGraph};

pub use canon::{canonical_form, canonical_graph, canonical_labelling, CanonKey, CANON_MAX_VERTICES};
pub use prism::{has_skewed_prism_bruteforce, PRISM_MAX_VERTICES};
pub use theta::{has_skewed_theta_bruteforce, THETA_MAX_VERTICES};

pub const TMINOR_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {0} vertices; this oracle accepts at most {1}")]
    TooLarge(usize, usize),
    #[error("graph contains a claw centred at {0}")]
    NotClawFree(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Contracts every edge at `v` when `N(v)` is stable; `None` otherwise.
/// The merged vertex takes the smallest index of `{v} ∪ N(v)`.
pub fn t_contract(g: &Graph, v: usize) -> Option<Graph> {
    let nb = g.neighbors(v);
    if !g.is_independent(nb) {
        return None;
    }
    let mut set = nb.to_vec();
    set.push(v);
    Some(g.identify_set(&set).0)
}

fn forbidden_keys(names: &[NamedGraph]) -> Vec<CanonKey> {
    names
        .iter()
        .map(|&k| canonical_form(&make_named(k).expect("fixed graph")).expect("small"))
        .collect()
}

/// Breadth-first closure under vertex deletion and t-contraction, up to
/// isomorphism. Stops as soon as a graph with a key in `targets` appears.
/// Only connected graphs are kept since every target is connected.
fn reaches_any(g: &Graph, targets: &[CanonKey]) -> Result<bool, OracleError> {
    let smallest = targets.iter().map(|k| k.n as usize).min().unwrap_or(0);
    let mut seen: HashSet<CanonKey> = HashSet::new();
    let mut queue: VecDeque<Graph> = VecDeque::new();
    let mut push = |h: Graph, queue: &mut VecDeque<Graph>| -> Result<bool, OracleError> {
        for comp in h.components() {
            if comp.len() < smallest {
                continue;
            }
            let part = if comp.len() == h.n() { h.clone() } else { h.induced(&comp).0 };
            let key = canonical_form(&part)?;
            if targets.contains(&key) {
                return Ok(true);
            }
            if seen.insert(key) {
                queue.push_back(part);
            }
        }
        Ok(false)
    };
    if push(g.clone(), &mut queue)? {
        return Ok(true);
    }
    while let Some(h) = queue.pop_front() {
        for v in 0..h.n() {
            if push(h.remove_vertex(v).0, &mut queue)? {
                return Ok(true);
            }
            if h.degree(v) >= 2 {
                if let Some(c) = t_contract(&h, v) {
                    if push(c, &mut queue)? {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}

fn guard_claw_free(g: &Graph) -> Result<(), OracleError> {
    if g.n() > TMINOR_MAX_VERTICES {
        return Err(OracleError::TooLarge(g.n(), TMINOR_MAX_VERTICES));
    }
    match g.find_claw() {
        Some((c, _)) => Err(OracleError::NotClawFree(c)),
        None => Ok(()),
    }
}

/// A claw-free graph is t-perfect iff none of K4, W5, C7², C10² is a
/// t-minor of it.
pub fn is_t_perfect_bruteforce(g: &Graph) -> Result<bool, OracleError> {
    guard_claw_free(g)?;
    let targets = forbidden_keys(&[
        NamedGraph::K4,
        NamedGraph::W5,
        NamedGraph::CycleSquare(7),
        NamedGraph::CycleSquare(10),
    ]);
    Ok(!reaches_any(g, &targets)?)
}

/// Whether K4 is a t-minor of `g`.
pub fn has_k4_tminor_bruteforce(g: &Graph) -> Result<bool, OracleError> {
    if g.n() > TMINOR_MAX_VERTICES {
        return Err(OracleError::TooLarge(g.n(), TMINOR_MAX_VERTICES));
    }
    reaches_any(g, &forbidden_keys(&[NamedGraph::K4]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(k: NamedGraph) -> Graph {
        make_named(k).unwrap()
    }

    #[test]
    fn t_contract_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(t_contract(&p3, 1).unwrap(), Graph::new(1));
        let k3 = named(NamedGraph::Cycle(3));
        assert!(t_contract(&k3, 0).is_none());
        let c5 = named(NamedGraph::Cycle(5));
        for v in 0..5 {
            assert_eq!(canonical_form(&t_contract(&c5, v).unwrap()), canonical_form(&k3));
        }
    }

    #[test]
    fn forbidden_graphs_and_exceptions() {
        for k in [NamedGraph::K4, NamedGraph::W5, NamedGraph::CycleSquare(7), NamedGraph::CycleSquare(10)] {
            assert!(!is_t_perfect_bruteforce(&named(k)).unwrap(), "{}", k.label());
        }
        for k in [
            NamedGraph::C6SquareMinusEdge,
            NamedGraph::CycleSquareMinusVertex(7),
            NamedGraph::CycleSquareMinusVertex(10),
            NamedGraph::Cycle(5),
        ] {
            assert!(is_t_perfect_bruteforce(&named(k)).unwrap(), "{}", k.label());
        }
    }

    #[test]
    fn guards() {
        assert_eq!(
            is_t_perfect_bruteforce(&named(NamedGraph::Claw)),
            Err(OracleError::NotClawFree(0))
        );
        assert!(matches!(
            is_t_perfect_bruteforce(&Graph::new(13)),
            Err(OracleError::TooLarge(13, 12))
        ));
    }
}
