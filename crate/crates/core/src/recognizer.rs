//! t-perfection of claw-free graphs.
//!
//! Line graphs are settled through their root; everything else is split at
//! cut vertices and 2-separations until a screen fires. Each separation asks
//! which parities of induced `u`–`v` paths exist on either side, and either
//! rejects outright or replaces the sides by smaller graphs that keep the
//! answer.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    blocks, find_two_separation, is_isomorphic_small, is_three_connected, make_named, Graph, NamedGraph,
};
use crate::linegraph::recognize_line_graph;
use crate::parity::{induced_path_parities, ParityConfig, ParityError};
use crate::theta::{has_skewed_theta_with, ThetaCtx, ThetaError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    TPerfect,
    NotTPerfect,
}

impl Verdict {
    pub fn is_t_perfect(self) -> bool {
        self == Verdict::TPerfect
    }

    fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::TPerfect
        } else {
            Verdict::NotTPerfect
        }
    }
}

/// An induced claw: `centre` adjacent to three pairwise nonadjacent leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub centre: usize,
    pub leaves: [usize; 3],
}

pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    g.find_claw().map(|(centre, leaves)| ClawWitness { centre, leaves })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("graph is not claw-free: vertex {} with leaves {:?}", .0.centre, .0.leaves)]
    NotClawFree(ClawWitness),
    #[error(transparent)]
    Parity(#[from] ParityError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Components,
    LineGraph,
    RootMaxDegree,
    RootSkewedTheta,
    Blocks,
    MaxDegree,
    ForbiddenSquare,
    ExceptionalGraph,
    ThreeConnected,
    Separation,
    /// Closes a split: the verdict is the conjunction of the children.
    Conjunction,
    Trivial,
}

impl Rule {
    pub fn is_terminal(self) -> bool {
        !matches!(self, Rule::Separation | Rule::LineGraph)
    }
}

/// How the two sides of a 2-separation are rebuilt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeparationCase {
    /// Both sides have induced `u`–`v` paths of both parities.
    BothParitiesBothSides,
    /// One side has an odd induced path and the other has none: identify `u`
    /// and `v` on the first, join them on the second.
    OddOnOneSide,
    NoOddPath,
    /// Even counterpart of [`SeparationCase::OddOnOneSide`].
    EvenOnOneSide,
    NoEvenPath,
    /// `u` and `v` are adjacent, so both sides are kept and conjoined.
    AdjacentCut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: Rule,
    /// Input vertices covered by the subgraph this rule looked at.
    pub vertices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separation: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<SeparationCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub trace: Vec<Step>,
    pub diagnostics: Vec<String>,
    /// Recognizer invocations plus skewed-theta sub-instances.
    pub recursion_calls: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecognizerConfig {
    pub parity: ParityConfig,
}

/// A graph whose vertex `i` stands for the input vertices `origin[i]`.
#[derive(Debug, Clone)]
struct Labelled {
    g: Graph,
    origin: Vec<Vec<usize>>,
}

impl Labelled {
    fn covered(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.origin.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    fn induced(&self, vertices: &[usize]) -> Labelled {
        let (g, map) = self.g.induced(vertices);
        let origin = map.iter().map(|&o| self.origin[o].clone()).collect();
        Labelled { g, origin }
    }
}

struct Run<'a> {
    cfg: &'a RecognizerConfig,
    trace: Vec<Step>,
    diagnostics: Vec<String>,
    calls: usize,
    theta: ThetaCtx,
}

impl Run<'_> {
    fn step(&mut self, rule: Rule, at: &Labelled, verdict: Option<Verdict>) {
        self.trace.push(Step {
            rule,
            vertices: at.covered(),
            separation: None,
            case: None,
            verdict,
        });
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.diagnostics.push(what());
        }
    }
}

pub fn is_t_perfect(g: &Graph) -> Result<Decision, RecognizeError> {
    is_t_perfect_with(g, &RecognizerConfig::default())
}

pub fn is_t_perfect_with(g: &Graph, cfg: &RecognizerConfig) -> Result<Decision, RecognizeError> {
    if let Some(w) = find_claw(g) {
        return Err(RecognizeError::NotClawFree(w));
    }
    let mut run = Run {
        cfg,
        trace: Vec::new(),
        diagnostics: Vec::new(),
        calls: 0,
        theta: ThetaCtx::default(),
    };
    let root = Labelled {
        g: g.clone(),
        origin: (0..g.n()).map(|v| vec![v]).collect(),
    };
    let ok = decide(&root, &mut run)?;
    let n = g.n().max(1);
    let limit = 4 * n * n;
    let calls = run.calls;
    run.check(calls <= limit, || format!("{calls} recognizer calls exceed {limit}"));
    let mut diagnostics = run.diagnostics;
    diagnostics.extend(run.theta.diagnostics);
    Ok(Decision {
        verdict: Verdict::from_bool(ok),
        trace: run.trace,
        diagnostics,
        recursion_calls: run.calls + run.theta.calls,
    })
}

fn decide(at: &Labelled, run: &mut Run) -> Result<bool, RecognizeError> {
    run.calls += 1;
    let g = &at.g;
    if g.n() <= 2 {
        run.step(Rule::Trivial, at, Some(Verdict::TPerfect));
        return Ok(true);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut ok = true;
        for c in &comps {
            if !decide(&at.induced(c), run)? {
                ok = false;
                break;
            }
        }
        run.step(Rule::Components, at, Some(Verdict::from_bool(ok)));
        return Ok(ok);
    }

    if let Some(mapping) = recognize_line_graph(g) {
        run.step(Rule::LineGraph, at, None);
        let root = &mapping.root;
        if root.max_degree() >= 4 {
            run.step(Rule::RootMaxDegree, at, Some(Verdict::NotTPerfect));
            return Ok(false);
        }
        let theta = has_skewed_theta_with(root, &mut run.theta)?;
        run.step(Rule::RootSkewedTheta, at, Some(Verdict::from_bool(!theta)));
        return Ok(!theta);
    }

    let dec = blocks(g);
    if dec.blocks.len() > 1 {
        let mut ok = true;
        for b in &dec.blocks {
            if !decide(&at.induced(b), run)? {
                ok = false;
                break;
            }
        }
        run.step(Rule::Blocks, at, Some(Verdict::from_bool(ok)));
        return Ok(ok);
    }

    if g.max_degree() >= 5 {
        run.step(Rule::MaxDegree, at, Some(Verdict::NotTPerfect));
        return Ok(false);
    }
    if matches_any(g, &[NamedGraph::CycleSquare(7), NamedGraph::CycleSquare(10)]) {
        run.step(Rule::ForbiddenSquare, at, Some(Verdict::NotTPerfect));
        return Ok(false);
    }
    if matches_any(
        g,
        &[
            NamedGraph::C6SquareMinusEdge,
            NamedGraph::CycleSquareMinusVertex(7),
            NamedGraph::CycleSquareMinusVertex(10),
        ],
    ) {
        run.step(Rule::ExceptionalGraph, at, Some(Verdict::TPerfect));
        return Ok(true);
    }
    if is_three_connected(g) {
        run.step(Rule::ThreeConnected, at, Some(Verdict::NotTPerfect));
        return Ok(false);
    }

    let sep = find_two_separation(g).expect("2-connected, not 3-connected, at least four vertices");
    let [u, v] = [sep.cut[0], sep.cut[1]];
    let side1 = at.induced(&sep.side1);
    let side2 = at.induced(&sep.side2);
    let local = |s: &[usize]| {
        let at = |w: usize| s.binary_search(&w).expect("cut vertex on both sides");
        [at(u), at(v)]
    };
    let (uv1, uv2) = (local(&sep.side1), local(&sep.side2));
    let (case, parities) = if g.has_edge(u, v) {
        // the edge is the only induced u-v path
        (SeparationCase::AdjacentCut, [false, true, false, true])
    } else {
        let (e1, o1) = induced_path_parities(&side1.g, uv1[0], uv1[1], &run.cfg.parity)?;
        let (e2, o2) = induced_path_parities(&side2.g, uv2[0], uv2[1], &run.cfg.parity)?;
        let p = [e1, o1, e2, o2];
        (classify(p), p)
    };
    run.trace.push(Step {
        rule: Rule::Separation,
        vertices: at.covered(),
        separation: Some([at.origin[u][0], at.origin[v][0]]),
        case: Some(case),
        verdict: (case == SeparationCase::BothParitiesBothSides).then_some(Verdict::NotTPerfect),
    });
    if case == SeparationCase::BothParitiesBothSides {
        return Ok(false);
    }
    let (c1, c2) = match plan(case, parities) {
        Some([j1, j2]) => (reshape_labelled(side1, uv1, j1), reshape_labelled(side2, uv2, j2)),
        None => (side1, side2),
    };
    for c in [&c1, &c2] {
        run.check(c.g.find_claw().is_none(), || format!("child on {:?} has a claw", c.covered()));
    }
    let (k1, k2) = (c1.covered(), c2.covered());
    run.check(k1.iter().any(|w| k2.binary_search(w).is_err()), || {
        format!("child on {k1:?} adds no vertex beyond its sibling")
    });
    run.check(k2.iter().any(|w| k1.binary_search(w).is_err()), || {
        format!("child on {k2:?} adds no vertex beyond its sibling")
    });
    let ok = decide(&c1, run)? && decide(&c2, run)?;
    run.step(Rule::Conjunction, at, Some(Verdict::from_bool(ok)));
    Ok(ok)
}

fn matches_any(g: &Graph, kinds: &[NamedGraph]) -> bool {
    kinds.iter().any(|&k| {
        let h = make_named(k).expect("fixed catalogue graph");
        h.n() == g.n() && h.m() == g.m() && is_isomorphic_small(g, &h).unwrap_or(false)
    })
}

/// Picks the case from `[even1, odd1, even2, odd2]`.
fn classify(p: [bool; 4]) -> SeparationCase {
    let [e1, o1, e2, o2] = p;
    if e1 && o1 && e2 && o2 {
        SeparationCase::BothParitiesBothSides
    } else if o1 != o2 {
        SeparationCase::OddOnOneSide
    } else if !o1 {
        SeparationCase::NoOddPath
    } else if e1 != e2 {
        SeparationCase::EvenOnOneSide
    } else {
        SeparationCase::NoEvenPath
    }
}

/// Which side gains the edge `uv` (`true`) and which has `u` and `v`
/// identified (`false`), or `None` when both sides stay as they are. With an
/// odd path on one side only, that side is identified; with an even path on
/// one side only, that side gains the edge.
fn plan(case: SeparationCase, [e1, o1, _, _]: [bool; 4]) -> Option<[bool; 2]> {
    match case {
        SeparationCase::OddOnOneSide => Some([!o1, o1]),
        SeparationCase::EvenOnOneSide => Some([e1, !e1]),
        _ => None,
    }
}

/// `g + uv` when `join`, otherwise `g` with `u` and `v` identified, plus the
/// old-to-new vertex map.
fn reshape(g: &Graph, [u, v]: [usize; 2], join: bool) -> (Graph, Vec<usize>) {
    if join {
        (g.with_edge(u, v), (0..g.n()).collect())
    } else {
        g.identify_vertices(u, v)
    }
}

/// The reduced sides of a separation at `{u, v}`. `g1` and `g2` are the two
/// sides (each containing `u` and `v`, at `uv1` and `uv2`), and `parities` is
/// `[even1, odd1, even2, odd2]` for their induced `u`–`v` paths.
pub fn build_reduced_sides(
    g1: &Graph,
    g2: &Graph,
    uv1: [usize; 2],
    uv2: [usize; 2],
    parities: [bool; 4],
) -> Result<(SeparationCase, Graph, Graph), RecognizeError> {
    let case = if g1.has_edge(uv1[0], uv1[1]) {
        SeparationCase::AdjacentCut
    } else {
        classify(parities)
    };
    if case == SeparationCase::BothParitiesBothSides {
        return Err(RecognizeError::Parity(ParityError::InvalidQuery(
            "both sides carry both parities; there is nothing to reduce".into(),
        )));
    }
    Ok(match plan(case, parities) {
        Some([j1, j2]) => (case, reshape(g1, uv1, j1).0, reshape(g2, uv2, j2).0),
        None => (case, g1.clone(), g2.clone()),
    })
}

fn reshape_labelled(side: Labelled, uv: [usize; 2], join: bool) -> Labelled {
    let (g, map) = reshape(&side.g, uv, join);
    let mut origin = vec![Vec::new(); g.n()];
    for (old, &new) in map.iter().enumerate() {
        origin[new].extend(side.origin[old].iter().copied());
    }
    origin.iter_mut().for_each(|o| o.sort_unstable());
    Labelled { g, origin }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::corpus::all_connected_claw_free;
    use crate::linegraph::line_graph;
    use crate::oracle::is_t_perfect_bruteforce;

    fn verdict(g: &Graph) -> Verdict {
        let d = is_t_perfect(g).unwrap();
        assert!(d.diagnostics.is_empty(), "{:?}", d.diagnostics);
        assert!(d.trace.last().unwrap().rule.is_terminal());
        d.verdict
    }

    #[test]
    fn named_graphs() {
        use NamedGraph::*;
        for k in [K4, W5, CycleSquare(7), CycleSquare(10)] {
            assert_eq!(verdict(&make_named(k).unwrap()), Verdict::NotTPerfect, "{}", k.label());
        }
        for k in [C6SquareMinusEdge, CycleSquareMinusVertex(7), CycleSquareMinusVertex(10), Cycle(4), Cycle(5)] {
            assert_eq!(verdict(&make_named(k).unwrap()), Verdict::TPerfect, "{}", k.label());
        }
        let (oct, _) = line_graph(&make_named(K4).unwrap()).unwrap();
        let d = is_t_perfect(&oct).unwrap();
        assert_eq!(d.verdict, Verdict::TPerfect);
        assert_eq!(d.trace[0].rule, Rule::LineGraph);
    }

    #[test]
    fn claw_is_rejected_with_witness() {
        let claw = make_named(NamedGraph::Claw).unwrap();
        assert_eq!(
            is_t_perfect(&claw),
            Err(RecognizeError::NotClawFree(ClawWitness {
                centre: 0,
                leaves: [1, 2, 3]
            }))
        );
        assert!(find_claw(&make_named(NamedGraph::CycleSquare(7)).unwrap()).is_none());
    }

    #[test]
    fn reduced_sides_examples() {
        // two triangles on the shared edge 0-1
        let t = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let (case, a, b) = build_reduced_sides(&t, &t, [0, 1], [0, 1], [false, true, false, true]).unwrap();
        assert_eq!(case, SeparationCase::AdjacentCut);
        assert_eq!((a, b), (t.clone(), t));
        // C6 cut at antipodal vertices: two even paths of length 3 each side
        let p = Graph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap();
        let (case, a, _) = build_reduced_sides(&p, &p, [0, 1], [0, 1], [false, true, false, true]).unwrap();
        assert_eq!(case, SeparationCase::NoEvenPath);
        assert_eq!(a, p);
        // C5 cut into a 2-path and a 3-path
        let two = Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        let three = Graph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap();
        let (case, a, b) = build_reduced_sides(&two, &three, [0, 1], [0, 1], [true, false, false, true]).unwrap();
        assert_eq!(case, SeparationCase::OddOnOneSide);
        // the even side gains uv and the odd side collapses u and v
        assert_eq!(a, two.with_edge(0, 1));
        assert_eq!((b.n(), b.m()), (3, 3));
        for h in [a, b] {
            assert!(is_t_perfect_bruteforce(&h).unwrap());
        }
        // both parities on the first side, only odd on the second: the
        // first side gains uv and the second collapses u and v
        let c5 = Graph::from_edges(5, &[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
        let (case, a, b) = build_reduced_sides(&c5, &three, [0, 1], [0, 1], [true, true, false, true]).unwrap();
        assert_eq!(case, SeparationCase::EvenOnOneSide);
        assert_eq!(a, c5.with_edge(0, 1));
        assert_eq!((b.n(), b.m()), (3, 3));
        assert!(build_reduced_sides(&two, &three, [0, 1], [0, 1], [true; 4]).is_err());
    }

    #[test]
    fn agrees_with_oracle_on_small_claw_free_graphs() {
        for g in all_connected_claw_free(7) {
            assert_eq!(verdict(&g).is_t_perfect(), is_t_perfect_bruteforce(&g).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn disconnected_input_is_conjoined() {
        let k4 = make_named(NamedGraph::K4).unwrap();
        let mut edges = k4.edges();
        edges.extend([(4, 5), (5, 6), (4, 6)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let d = is_t_perfect(&g).unwrap();
        assert_eq!(d.verdict, Verdict::NotTPerfect);
        assert_eq!(d.trace.last().unwrap().rule, Rule::Components);
    }
}
