//! Parity-constrained path questions consumed by the recognizer and the
//! skewed-theta search.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{edge, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(len: usize) -> Parity {
        if len % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ParityBackend {
    #[default]
    Exhaustive,
    /// Reserved for a polynomial induced-path-parity algorithm; selecting it
    /// makes every query fail with [`ParityError::BackendUnavailable`].
    Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityConfig {
    pub backend: ParityBackend,
    pub max_exhaustive_n: usize,
}

pub const DEFAULT_MAX_EXHAUSTIVE_N: usize = 20;

impl Default for ParityConfig {
    fn default() -> Self {
        ParityConfig {
            backend: ParityBackend::Exhaustive,
            max_exhaustive_n: DEFAULT_MAX_EXHAUSTIVE_N,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("the polynomial parity backend is not available in this build")]
    BackendUnavailable,
    #[error("graph has {0} vertices, above the exhaustive threshold {1}")]
    TooLarge(usize, usize),
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityQuery {
    pub u: usize,
    pub v: usize,
    pub parity: Parity,
}

/// Which parities of induced `u`–`v` paths exist, as `(even, odd)`.
pub fn induced_path_parities(g: &Graph, u: usize, v: usize, cfg: &ParityConfig) -> Result<(bool, bool), ParityError> {
    if cfg.backend == ParityBackend::Polynomial {
        return Err(ParityError::BackendUnavailable);
    }
    if g.n() > cfg.max_exhaustive_n {
        return Err(ParityError::TooLarge(g.n(), cfg.max_exhaustive_n));
    }
    if u == v || u >= g.n() || v >= g.n() {
        return Err(ParityError::InvalidQuery(format!("endpoints {u}, {v}")));
    }
    let mut search = InducedSearch {
        g,
        target: v,
        blocked: vec![0; g.n()],
        found: [false; 2],
    };
    search.block(u, 1);
    search.extend(u, 0);
    Ok((search.found[0], search.found[1]))
}

pub fn exists_induced_path_with_parity(g: &Graph, q: ParityQuery, cfg: &ParityConfig) -> Result<bool, ParityError> {
    let (even, odd) = induced_path_parities(g, q.u, q.v, cfg)?;
    Ok(match q.parity {
        Parity::Even => even,
        Parity::Odd => odd,
    })
}

/// Depth-first growth of induced paths from `u`. `blocked[w]` counts the path
/// vertices in the closed neighbourhood of `w` other than the current end, so
/// a vertex is a legal next step iff it is adjacent to the end and has count
/// zero.
struct InducedSearch<'a> {
    g: &'a Graph,
    target: usize,
    blocked: Vec<u32>,
    found: [bool; 2],
}

impl InducedSearch<'_> {
    fn block(&mut self, v: usize, delta: i32) {
        let apply = |b: &mut u32| *b = (*b as i32 + delta) as u32;
        apply(&mut self.blocked[v]);
        for &w in self.g.neighbors(v) {
            apply(&mut self.blocked[w]);
        }
    }

    fn extend(&mut self, cur: usize, len: usize) {
        if self.found[0] && self.found[1] {
            return;
        }
        // the current end's neighbourhood is counted in `blocked`; lift it
        // while choosing the next vertex
        self.block(cur, -1);
        if !self.target_reachable(cur) {
            self.block(cur, 1);
            return;
        }
        let candidates: Vec<usize> = self
            .g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&w| self.blocked[w] == 0)
            .collect();
        self.block(cur, 1);
        for w in candidates {
            if w == self.target {
                self.found[(len + 1) % 2] = true;
                continue;
            }
            // w is now on the path; cur stops being the end
            self.block(w, 1);
            self.extend(w, len + 1);
            self.block(w, -1);
            if self.found[0] && self.found[1] {
                return;
            }
        }
    }

    /// Some route from `cur` to the target through unblocked vertices.
    fn target_reachable(&self, cur: usize) -> bool {
        let n = self.g.n();
        let mut seen = vec![false; n];
        let mut stack = vec![cur];
        seen[cur] = true;
        while let Some(x) = stack.pop() {
            for &w in self.g.neighbors(x) {
                if w == self.target {
                    return true;
                }
                if !seen[w] && self.blocked[w] == 0 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageQuery {
    pub s1: usize,
    pub t1: usize,
    pub s2: usize,
    pub t2: usize,
    pub forbidden_edges: Vec<Edge>,
}

/// Vertex-disjoint `s1`–`t1` and `s2`–`t2` paths avoiding the forbidden
/// edges. Enumerates `s1`–`t1` paths that keep `t1` reachable and `s2`, `t2`
/// connected in what is left.
pub fn two_disjoint_paths(g: &Graph, q: &LinkageQuery) -> Result<bool, ParityError> {
    let t = [q.s1, q.t1, q.s2, q.t2];
    if t.iter().any(|&x| x >= g.n()) {
        return Err(ParityError::InvalidQuery("terminal out of range".into()));
    }
    if (0..4).any(|i| (i + 1..4).any(|j| t[i] == t[j])) {
        return Err(ParityError::InvalidQuery("terminals must be distinct".into()));
    }
    let h = g.remove_edges(&q.forbidden_edges.iter().map(|&(a, b)| edge(a, b)).collect::<Vec<_>>());
    let mut used = vec![false; h.n()];
    used[q.s1] = true;
    let mut search = Linkage { g: &h, q, used };
    Ok(search.extend(q.s1))
}

struct Linkage<'a> {
    g: &'a Graph,
    q: &'a LinkageQuery,
    used: Vec<bool>,
}

impl Linkage<'_> {
    fn connected_avoiding(&self, a: usize, b: usize) -> bool {
        let mut seen = self.used.clone();
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &w in self.g.neighbors(x) {
                if w == b {
                    return true;
                }
                if !seen[w] && w != self.q.s2 && w != self.q.t2 {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn second_pair_linked(&self) -> bool {
        let mut seen = self.used.clone();
        seen[self.q.s2] = true;
        seen[self.q.t1] = true;
        let mut stack = vec![self.q.s2];
        while let Some(x) = stack.pop() {
            for &w in self.g.neighbors(x) {
                if w == self.q.t2 {
                    return true;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    fn extend(&mut self, cur: usize) -> bool {
        if !self.second_pair_linked() || !self.connected_avoiding(cur, self.q.t1) {
            return false;
        }
        let next: Vec<usize> = self.g.neighbors(cur).to_vec();
        for w in next {
            if w == self.q.t1 {
                return true;
            }
            if self.used[w] || w == self.q.s2 || w == self.q.t2 {
                continue;
            }
            self.used[w] = true;
            if self.extend(w) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

/// With exactly two odd edges `ab` and `cd`, every odd cycle uses exactly one
/// of them, so two disjoint odd cycles exist iff `G - {ab, cd}` links `a`–`b`
/// and `c`–`d` disjointly.
pub fn has_two_disjoint_odd_cycles(g: &Graph, odd_edges: &[Edge]) -> Result<bool, ParityError> {
    let [(a, b), (c, d)] = odd_edges else {
        return Err(ParityError::InvalidQuery(format!("expected two odd edges, got {}", odd_edges.len())));
    };
    if [c, d].contains(&a) || [c, d].contains(&b) {
        return Ok(false);
    }
    two_disjoint_paths(
        g,
        &LinkageQuery {
            s1: *a,
            t1: *b,
            s2: *c,
            t2: *d,
            forbidden_edges: odd_edges.to_vec(),
        },
    )
}
