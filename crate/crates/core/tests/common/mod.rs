#![allow(dead_code)]

use std::collections::VecDeque;
use std::sync::Arc;

use kolchin::axes::{condition, essential_data, MapGroup};
use kolchin::golden::corpus;
use kolchin::graph::{FilteredGraph, GraphDecl, OrientedEdge, VertexId};
use kolchin::io::parse;
use kolchin::letter::Letter;
use kolchin::map::FilteredMap;
use kolchin::path::{tighten, EdgePath};
use kolchin::EssentialData;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const ABELIAN_CORPUS: &[&str] = &[
    "rose",
    "dehn",
    "rose3_pair",
    "rose3_single",
    "rose3_slide",
    "rose4",
    "collapse",
    "valence_one",
    "loop_slide",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn group(name: &str) -> MapGroup {
    let doc = parse(corpus(name)).unwrap();
    doc.select_group(None).unwrap().1
}

/// Conditioned group and its essential data.
pub fn prepared(name: &str) -> (MapGroup, EssentialData) {
    let k = group(name);
    let c = condition(&k).unwrap();
    let data = essential_data(&c.group, 8).unwrap();
    (k, data)
}

/// A connected graph with at most `max_vertices` vertices and at most
/// `max_edges` edges.
pub fn random_graph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Arc<FilteredGraph> {
    loop {
        let nv = rng.gen_range(1..=max_vertices);
        let ne = rng.gen_range(nv.max(2)..=max_edges.max(nv));
        let mut d = GraphDecl::new();
        for v in 0..nv {
            d = d.vertex(&format!("v{v}"));
        }
        for e in 0..ne {
            let (i, t) = (rng.gen_range(0..nv), rng.gen_range(0..nv));
            d = d.edge(&format!("e{e}"), &format!("v{i}"), &format!("v{t}"));
        }
        let g = FilteredGraph::new(&d).unwrap();
        if g.components() == 1 {
            return Arc::new(g);
        }
    }
}

fn path_back(g: &FilteredGraph, level: usize, from: VertexId, to: VertexId) -> Option<Vec<OrientedEdge>> {
    let mut prev: Vec<Option<(VertexId, OrientedEdge)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            let mut out = Vec::new();
            let mut at = to;
            while at != from {
                let (p, e) = prev[at].unwrap();
                out.push(e);
                at = p;
            }
            out.reverse();
            return Some(out);
        }
        for e in g.directions(v).into_iter().filter(|e| e.edge < level) {
            let w = g.term(e);
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    None
}

/// A reduced loop at `v` in the first `level` edges, of length at most
/// `max_len`.
pub fn random_loop(rng: &mut impl Rng, g: &FilteredGraph, level: usize, v: VertexId, max_len: usize) -> EdgePath {
    for _ in 0..20 {
        let steps = rng.gen_range(0..=max_len);
        let mut walk = Vec::new();
        let mut at = v;
        for _ in 0..steps {
            let dirs: Vec<OrientedEdge> = g
                .directions(at)
                .into_iter()
                .filter(|e| e.edge < level && walk.last() != Some(&e.inverse()))
                .collect();
            let Some(e) = dirs.choose(rng) else { break };
            walk.push(*e);
            at = g.term(*e);
        }
        let Some(back) = path_back(g, level, at, v) else { continue };
        walk.extend(back);
        let p = tighten(g, v, walk).unwrap();
        if p.len() <= max_len {
            return p;
        }
    }
    EdgePath::trivial(v)
}

pub fn random_map(rng: &mut impl Rng, g: &Arc<FilteredGraph>, max_suffix: usize) -> FilteredMap {
    let suffixes = (0..g.edge_count())
        .map(|i| random_loop(rng, g, i, g.edge_term(i), max_suffix))
        .collect();
    FilteredMap::new(g.clone(), suffixes).unwrap()
}

/// A reduced path from `v` of length at most `max_len`, not necessarily
/// closed.
pub fn random_path(rng: &mut impl Rng, g: &FilteredGraph, v: VertexId, max_len: usize) -> EdgePath {
    let mut walk: Vec<OrientedEdge> = Vec::new();
    let mut at = v;
    for _ in 0..rng.gen_range(0..=max_len) {
        let dirs: Vec<OrientedEdge> = g
            .directions(at)
            .into_iter()
            .filter(|e| walk.last() != Some(&e.inverse()))
            .collect();
        let Some(e) = dirs.choose(rng) else { break };
        walk.push(*e);
        at = g.term(*e);
    }
    EdgePath::new(g, v, walk).unwrap()
}

/// An unreduced walk from `v`: backtracking allowed.
pub fn random_walk(rng: &mut impl Rng, g: &FilteredGraph, v: VertexId, max_len: usize) -> EdgePath {
    let mut walk = Vec::new();
    let mut at = v;
    for _ in 0..rng.gen_range(0..=max_len) {
        let dirs = g.directions(at);
        let Some(e) = dirs.choose(rng) else { break };
        walk.push(*e);
        at = g.term(*e);
    }
    EdgePath::new(g, v, walk).unwrap()
}

/// A random group word such as `f^2.~g.h`.
pub fn random_group_word(rng: &mut impl Rng, labels: &[String], max_factors: usize) -> String {
    let n = rng.gen_range(0..=max_factors);
    if n == 0 {
        return "1".into();
    }
    (0..n)
        .map(|_| {
            let l = labels.choose(rng).unwrap();
            let e: i64 = rng.gen_range(-3..=3);
            format!("{l}^{e}")
        })
        .collect::<Vec<_>>()
        .join(".")
}
