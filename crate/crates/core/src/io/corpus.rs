use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::{make_named, Graph, NamedGraph};
use crate::linegraph::line_graph;
use crate::oracle::canonical_form;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    RandomSubcubic,
    RandomClawfreeViaLinegraph,
    /// Greedy edge insertion that never creates a claw.
    RandomClawfree,
    Named,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn shuffled_pairs(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut pairs: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    pairs
}

/// Degree-capped random insertion towards a random edge count. The result may
/// be disconnected.
pub fn random_subcubic(n: usize, rng: &mut impl Rng) -> Graph {
    let target = rng.gen_range(n / 2..=(3 * n / 2).max(n / 2));
    random_capped(n, 3, target, rng)
}

fn random_capped(n: usize, cap: usize, target: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(n);
    for (a, b) in shuffled_pairs(n, rng) {
        if g.m() >= target {
            break;
        }
        if g.degree(a) < cap && g.degree(b) < cap {
            g = g.with_edge(a, b);
        }
    }
    g
}

fn claw_at(g: &Graph, c: usize) -> bool {
    let nb = g.neighbors(c);
    nb.iter().enumerate().any(|(i, &a)| {
        nb[i + 1..].iter().enumerate().any(|(j, &b)| {
            !g.has_edge(a, b)
                && nb[i + 1 + j + 1..]
                    .iter()
                    .any(|&d| !g.has_edge(a, d) && !g.has_edge(b, d))
        })
    })
}

/// Random claw-free graph: edges arrive in random order and are kept when
/// they respect a random degree cap (3 to 5) and create no claw. Adding `ab`
/// can only create claws centred at `a` or `b`.
pub fn random_claw_free(n: usize, rng: &mut impl Rng) -> Graph {
    let cap = rng.gen_range(3..=5);
    let target = rng.gen_range(n.saturating_sub(1)..=(cap * n / 2).max(n));
    let mut g = Graph::new(n);
    for (a, b) in shuffled_pairs(n, rng) {
        if g.m() >= target {
            break;
        }
        if g.degree(a) >= cap || g.degree(b) >= cap {
            continue;
        }
        let h = g.with_edge(a, b);
        if !claw_at(&h, a) && !claw_at(&h, b) {
            g = h;
        }
    }
    g
}

/// Line graph of a random graph with maximum degree at most `root_cap`,
/// having at most `max_vertices` edges (so the line graph fits the bound).
pub fn random_line_graph(max_vertices: usize, root_cap: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let r = rng.gen_range(2..=max_vertices.max(2));
        let target = rng.gen_range(1..=max_vertices.max(1));
        let h = random_capped(r, root_cap, target, rng);
        if h.m() > 0 {
            return line_graph(&h).expect("root has an edge").0;
        }
    }
}

pub fn named_catalogue() -> Vec<Instance> {
    NamedGraph::CATALOGUE
        .iter()
        .map(|&k| Instance {
            name: k.label(),
            graph: make_named(k).expect("catalogue graphs are valid"),
        })
        .collect()
}

/// Deterministic corpus. `max_n` bounds the vertex count of every random
/// instance (ignored for `Named`).
pub fn generate_corpus(kind: CorpusKind, count: usize, seed: u64, max_n: usize) -> Vec<Instance> {
    if kind == CorpusKind::Named {
        return named_catalogue();
    }
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n.max(1));
            let graph = match kind {
                CorpusKind::RandomSubcubic => random_subcubic(n, &mut rng),
                CorpusKind::RandomClawfree => random_claw_free(n, &mut rng),
                CorpusKind::RandomClawfreeViaLinegraph => random_line_graph(max_n.max(1), 3, &mut rng),
                CorpusKind::Named => unreachable!("handled above"),
            };
            if kind != CorpusKind::RandomSubcubic {
                assert!(graph.find_claw().is_none(), "claw-free generator produced a claw");
            }
            Instance {
                name: format!("{kind:?}-{seed}-{i}"),
                graph,
            }
        })
        .collect()
}

/// All graphs on `0..=max_n` vertices in a hereditary class, one per
/// isomorphism type, grouped by order. Each graph on `n` vertices extends one
/// on `n - 1` vertices by a new vertex, so growing level by level and
/// filtering with `keep` reaches the whole class.
pub fn enumerate_hereditary(max_n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::new(0)]];
    for n in 1..=max_n {
        let mut seen = HashSet::new();
        let mut level = Vec::new();
        for g in &levels[n - 1] {
            let old = g.edges();
            for mask in 0u32..1 << (n - 1) {
                let mut edges = old.clone();
                edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                let h = Graph::from_edges(n, &edges).expect("fresh edges");
                if !keep(&h) {
                    continue;
                }
                if seen.insert(canonical_form(&h).expect("small graph")) {
                    level.push(h);
                }
            }
        }
        levels.push(level);
    }
    levels
}

pub fn all_connected_claw_free(max_n: usize) -> Vec<Graph> {
    connected(enumerate_hereditary(max_n, |g| g.find_claw().is_none()))
}

pub fn all_connected_subcubic(max_n: usize) -> Vec<Graph> {
    connected(enumerate_hereditary(max_n, |g| g.max_degree() <= 3))
}

fn connected(levels: Vec<Vec<Graph>>) -> Vec<Graph> {
    levels
        .into_iter()
        .flatten()
        .filter(|g| g.n() >= 1 && g.is_connected())
        .collect()
}
