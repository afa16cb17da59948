//! Skewed-theta detection in subcubic graphs.
//!
//! A bipartition `P` of the vertex set labels an edge odd when both ends lie
//! in the same class. A cycle is odd iff it has an odd number of odd edges, so
//! `P` is pure bookkeeping: the first phase flips classes across cuts to
//! shrink the odd-edge count, and the second phase decides instances with at
//! most two odd edges directly.

mod one_odd;
mod triads;
mod two_odd;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{blocks, edge, Edge, EdgeCut, Graph};
use crate::parity::ParityError;

pub use one_odd::one_odd_edge;
pub use triads::{triads, TriadsOutcome};
pub use two_odd::{two_odd_cut, two_odd_decide, TwoOddCut};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThetaError {
    #[error("vertex {vertex} has degree {degree}; skewed-theta search needs a subcubic graph")]
    NotSubcubic { vertex: usize, degree: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Parity(#[from] ParityError),
}

fn precondition(msg: impl Into<String>) -> ThetaError {
    ThetaError::Precondition(msg.into())
}

/// A bipartition `(A, B)`; `class[v]` is true for `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddEdgeView {
    pub class: Vec<bool>,
}

impl OddEdgeView {
    /// Everything in `A`: every edge is odd.
    pub fn all_in_a(n: usize) -> Self {
        OddEdgeView { class: vec![false; n] }
    }

    pub fn is_odd(&self, u: usize, v: usize) -> bool {
        self.class[u] == self.class[v]
    }

    pub fn odd_edges(&self, g: &Graph) -> Vec<Edge> {
        g.edges().into_iter().filter(|&(u, v)| self.is_odd(u, v)).collect()
    }

    /// `G_P`: the same vertices with only the even edges.
    pub fn even_subgraph(&self, g: &Graph) -> Graph {
        g.remove_edges(&self.odd_edges(g))
    }

    pub fn count_in(&self, cut: &[Edge]) -> (usize, usize) {
        let odd = cut.iter().filter(|&&(u, v)| self.is_odd(u, v)).count();
        (odd, cut.len() - odd)
    }

    pub fn restrict(&self, new_to_old: &[usize]) -> OddEdgeView {
        OddEdgeView {
            class: new_to_old.iter().map(|&o| self.class[o]).collect(),
        }
    }
}

/// Toggles the classes of `cut.side_x`. Every cut edge changes parity and no
/// other edge does, so the odd count drops when the cut holds more odd than
/// even edges.
pub fn flip(g: &Graph, view: &OddEdgeView, cut: &EdgeCut) -> Result<OddEdgeView, ThetaError> {
    let (odd, even) = view.count_in(&cut.edges);
    if odd <= even {
        return Err(precondition(format!("flip needs more odd than even cut edges, got {odd} odd and {even} even")));
    }
    let mut next = view.clone();
    for &v in &cut.side_x {
        next.class[v] = !next.class[v];
    }
    debug_assert_eq!(
        next.odd_edges(g).len() + odd,
        view.odd_edges(g).len() + even,
        "only cut edges change parity"
    );
    Ok(next)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub rule: String,
    pub vertices: usize,
    pub edges: usize,
}

/// Bookkeeping threaded through one search: the rule trace, structural
/// assertions that failed, and the number of sub-instances visited.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaCtx {
    pub trace: Vec<TraceEntry>,
    pub diagnostics: Vec<String>,
    pub calls: usize,
    pub keep_trace: bool,
}

impl ThetaCtx {
    pub fn with_trace() -> Self {
        ThetaCtx {
            keep_trace: true,
            ..Default::default()
        }
    }

    pub(crate) fn note(&mut self, rule: &str, g: &Graph) {
        if self.keep_trace {
            self.trace.push(TraceEntry {
                rule: rule.to_string(),
                vertices: g.n(),
                edges: g.m(),
            });
        }
    }

    pub(crate) fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.diagnostics.push(what());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaVerdict {
    pub contains_skewed_theta: bool,
    pub trace: Vec<TraceEntry>,
    pub diagnostics: Vec<String>,
    pub calls: usize,
}

fn check_subcubic(h: &Graph) -> Result<(), ThetaError> {
    match (0..h.n()).find(|&v| h.degree(v) > 3) {
        Some(v) => Err(ThetaError::NotSubcubic {
            vertex: v,
            degree: h.degree(v),
        }),
        None => Ok(()),
    }
}

/// Decides whether a subcubic graph contains a skewed theta, block by block.
pub fn has_skewed_theta(h: &Graph) -> Result<ThetaVerdict, ThetaError> {
    let mut ctx = ThetaCtx::with_trace();
    let found = has_skewed_theta_with(h, &mut ctx)?;
    Ok(ThetaVerdict {
        contains_skewed_theta: found,
        trace: ctx.trace,
        diagnostics: ctx.diagnostics,
        calls: ctx.calls,
    })
}

pub fn has_skewed_theta_with(h: &Graph, ctx: &mut ThetaCtx) -> Result<bool, ThetaError> {
    check_subcubic(h)?;
    for (_, block) in blocks(h).nontrivial() {
        let (b, _) = h.induced(block);
        if block_has_skewed_theta(&b, ctx)? {
            return Ok(true);
        }
    }
    ctx.note("no-block-has-theta", h);
    Ok(false)
}

/// Phase one on a 2-connected block: start with every vertex in `A` and
/// flip along triads cuts while three or more odd edges remain.
fn block_has_skewed_theta(b: &Graph, ctx: &mut ThetaCtx) -> Result<bool, ThetaError> {
    let mut view = OddEdgeView::all_in_a(b.n());
    let mut odd = view.odd_edges(b);
    let mut rounds = 0;
    while odd.len() >= 3 {
        rounds += 1;
        ctx.calls += 1;
        let (o1, o2, o3) = (odd[0], odd[1], odd[2]);
        match triads(b, &view, [o1, o2, o3], ctx)? {
            TriadsOutcome::SkewedTheta => return Ok(true),
            TriadsOutcome::Cut(cut) => {
                let (co, ce) = view.count_in(&cut.edges);
                ctx.check(co > ce, || format!("triads cut has {co} odd and {ce} even edges"));
                if co <= ce {
                    return Err(precondition("triads returned a cut that cannot be flipped"));
                }
                view = flip(b, &view, &cut)?;
                let next = view.odd_edges(b);
                ctx.check(next.len() < odd.len(), || {
                    format!("flip did not reduce odd edges ({} -> {})", odd.len(), next.len())
                });
                odd = next;
            }
        }
    }
    ctx.check(rounds <= b.m(), || format!("phase one took {rounds} rounds on {} edges", b.m()));
    ctx.note("phase-one-done", b);
    decide_few_odd_edges(b, &view, ctx)
}

/// Decides graphs with at most two odd edges, block by block.
pub fn decide_few_odd_edges(g: &Graph, view: &OddEdgeView, ctx: &mut ThetaCtx) -> Result<bool, ThetaError> {
    ctx.calls += 1;
    let odd = view.odd_edges(g);
    if odd.len() > 2 {
        return Err(precondition(format!("{} odd edges, at most two allowed", odd.len())));
    }
    let dec = blocks(g);
    for (bi, block) in dec.blocks.iter().enumerate() {
        if block.len() < 3 {
            continue;
        }
        let inside: Vec<Edge> = odd
            .iter()
            .copied()
            .filter(|&(u, v)| dec.block_edges[bi].contains(&edge(u, v)))
            .collect();
        if inside.is_empty() {
            continue;
        }
        let (b, map) = g.induced(block);
        let bview = view.restrict(&map);
        let found = if inside.len() == 1 {
            ctx.note("few-odd:one", &b);
            one_odd_edge(&b, &bview, ctx)?
        } else {
            ctx.note("few-odd:two", &b);
            match two_odd_cut(&b, &bview, ctx)? {
                TwoOddCut::SkewedTheta => true,
                TwoOddCut::Cut(cut) => two_odd_decide(&b, &bview, &cut, ctx)?,
            }
        };
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether the chords `p` and `q` interleave on the cycle given by its
/// vertex sequence.
pub fn crossing_on_cycle(cycle: &[usize], p: (usize, usize), q: (usize, usize)) -> Result<bool, ThetaError> {
    let pos = |v: usize| {
        cycle
            .iter()
            .position(|&c| c == v)
            .ok_or_else(|| precondition(format!("vertex {v} is not on the cycle")))
    };
    let (a, b) = (pos(p.0)?, pos(p.1)?);
    let (c, d) = (pos(q.0)?, pos(q.1)?);
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    if [a, b].contains(&c) || [a, b].contains(&d) {
        return Err(precondition("crossing test needs four distinct endpoints"));
    }
    Ok(inside(c) != inside(d))
}
