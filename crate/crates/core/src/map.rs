//! Filtration-respecting homotopy equivalences `E_i ↦ E_i·u_i`.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::automorphism::FreeGroupAutomorphism;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FilteredGraph, OrientedEdge};
use crate::letter;
use crate::matrix::IntegerMatrix;
use crate::path::{Basis, EdgePath};

#[derive(Clone, Debug)]
pub struct FilteredMap {
    graph: Arc<FilteredGraph>,
    suffixes: Vec<EdgePath>,
}

impl PartialEq for FilteredMap {
    fn eq(&self, other: &Self) -> bool {
        same_graph(&self.graph, &other.graph) && self.suffixes == other.suffixes
    }
}

impl Eq for FilteredMap {}

pub(crate) fn same_graph(a: &Arc<FilteredGraph>, b: &Arc<FilteredGraph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FilteredMap {
    /// Checks that each suffix is a reduced loop at the terminal vertex of
    /// its edge and uses only lower edges.
    pub fn new(graph: Arc<FilteredGraph>, suffixes: Vec<EdgePath>) -> Result<Self> {
        if suffixes.len() != graph.edge_count() {
            return Err(Error::domain(format!(
                "expected {} suffixes, got {}",
                graph.edge_count(),
                suffixes.len()
            )));
        }
        for (i, u) in suffixes.iter().enumerate() {
            let name = graph.edge_name(i);
            if u.start() != graph.edge_term(i) || u.end() != graph.edge_term(i) {
                return Err(Error::domain(format!(
                    "suffix of `{name}` is not a loop at `{}`",
                    graph.vertex_name(graph.edge_term(i))
                )));
            }
            if !u.is_reduced() {
                return Err(Error::domain(format!("suffix of `{name}` is not reduced")));
            }
            if u.edges().iter().any(|e| e.edge >= i) {
                return Err(Error::domain(format!("suffix of `{name}` escapes G_{i}")));
            }
        }
        Ok(FilteredMap { graph, suffixes })
    }

    pub fn identity(graph: Arc<FilteredGraph>) -> Self {
        let suffixes = (0..graph.edge_count())
            .map(|e| EdgePath::trivial(graph.edge_term(e)))
            .collect();
        FilteredMap { graph, suffixes }
    }

    /// Builds a map from `(edge, suffix)` pairs; other edges are fixed.
    pub fn from_suffixes(graph: Arc<FilteredGraph>, given: &[(EdgeId, EdgePath)]) -> Result<Self> {
        let mut suffixes: Vec<EdgePath> = (0..graph.edge_count())
            .map(|e| EdgePath::trivial(graph.edge_term(e)))
            .collect();
        for (e, u) in given {
            suffixes[*e] = u.clone();
        }
        Self::new(graph, suffixes)
    }

    pub fn graph(&self) -> &Arc<FilteredGraph> {
        &self.graph
    }

    pub fn suffixes(&self) -> &[EdgePath] {
        &self.suffixes
    }

    /// `u_{i,f}` for `1 ≤ i ≤ K`.
    pub fn suffix(&self, i: usize) -> Result<&EdgePath> {
        if i == 0 || i > self.suffixes.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.suffixes.len(),
            });
        }
        Ok(&self.suffixes[i - 1])
    }

    pub fn suffix_of(&self, e: EdgeId) -> &EdgePath {
        &self.suffixes[e]
    }

    pub fn is_identity(&self) -> bool {
        self.suffixes.iter().all(EdgePath::is_empty)
    }

    pub(crate) fn push_edge_image(&self, out: &mut Vec<OrientedEdge>, e: OrientedEdge) {
        let u = self.suffixes[e.edge].edges();
        if e.reversed {
            letter::extend_reduced(out, u.iter().rev().map(|x| letter::Letter::inverse(*x)));
            letter::push_reduced(out, e);
        } else {
            letter::push_reduced(out, e);
            letter::extend_reduced(out, u.iter().copied());
        }
    }

    /// `f_#(p)` without checks; `p` must live in this map's graph.
    pub fn image(&self, p: &EdgePath) -> EdgePath {
        let mut out = Vec::with_capacity(p.len() * 2);
        for e in p.edges() {
            self.push_edge_image(&mut out, *e);
        }
        EdgePath::from_raw(p.start(), p.end(), out)
    }

    /// `f_#(p)`: substitute and tighten.
    pub fn apply(&self, p: &EdgePath) -> Result<EdgePath> {
        if let Some(e) = p.edges().iter().find(|e| e.edge >= self.graph.edge_count()) {
            return Err(Error::domain(format!("edge {} is not in the map's graph", e.edge)));
        }
        EdgePath::new(&self.graph, p.start(), p.edges().to_vec())?;
        Ok(self.image(p))
    }

    fn check_graph(&self, other: &FilteredMap) -> Result<()> {
        if same_graph(&self.graph, &other.graph) {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    /// `self ∘ other`, by `u_{i,f∘g} = [u_{i,f} · f_#(u_{i,g})]`.
    pub fn compose(&self, other: &FilteredMap) -> Result<FilteredMap> {
        self.check_graph(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &FilteredMap) -> FilteredMap {
        let suffixes = self
            .suffixes
            .iter()
            .zip(&other.suffixes)
            .map(|(uf, ug)| uf.join(&self.image(ug)))
            .collect();
        FilteredMap {
            graph: self.graph.clone(),
            suffixes,
        }
    }

    /// Bottom-up: `u_{i,h} = [h_#(ū_{i,f})]`, using `h` on `G_{i−1}`.
    pub fn invert(&self) -> FilteredMap {
        let mut h = FilteredMap::identity(self.graph.clone());
        for i in 0..self.suffixes.len() {
            h.suffixes[i] = h.image(&self.suffixes[i].reverse());
        }
        h
    }

    pub fn equal(&self, other: &FilteredMap) -> Result<bool> {
        self.check_graph(other)?;
        Ok(self.suffixes == other.suffixes)
    }

    pub fn pow(&self, k: i64) -> FilteredMap {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = FilteredMap::identity(self.graph.clone());
        let mut sq = base;
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                out = out.compose_unchecked(&sq);
            }
            n >>= 1;
            if n > 0 {
                sq = sq.compose_unchecked(&sq);
            }
        }
        out
    }

    pub fn commutes_with(&self, other: &FilteredMap) -> Result<bool> {
        Ok(self.compose(other)?.suffixes == other.compose(self)?.suffixes)
    }

    /// The automorphism of `π₁(G, base)` in the basis's generators.
    pub fn induced_automorphism(&self, basis: &Basis) -> Result<FreeGroupAutomorphism> {
        if !same_graph(basis.graph(), &self.graph) {
            return Err(Error::GraphMismatch);
        }
        Ok(FreeGroupAutomorphism::from_images(
            basis
                .loops()
                .iter()
                .map(|l| basis.word_of(&self.image(&l.path)))
                .collect(),
        ))
    }

    /// Raw edge-space action: `M[j][i]` is the signed count of `E_j` in
    /// `E_i·u_i`.
    pub fn homology_action(&self) -> IntegerMatrix {
        let k = self.suffixes.len();
        let mut m = IntegerMatrix::identity(k);
        for (i, u) in self.suffixes.iter().enumerate() {
            for e in u.edges() {
                let d = if e.reversed { -1 } else { 1 };
                m[(e.edge, i)] += d;
            }
        }
        m
    }

    /// Action on the cycle space in the basis's generators: entry `[k][l]` is
    /// the exponent sum of generator `k` in the image of generator `l`.
    pub fn cycle_action(&self, basis: &Basis) -> Result<IntegerMatrix> {
        let aut = self.induced_automorphism(basis)?;
        let n = aut.rank();
        let mut m = IntegerMatrix::zeros(n, n);
        for (l, w) in aut.images().iter().enumerate() {
            for x in w.letters() {
                m[(x.index(), l)] += if x.inv { -1 } else { 1 };
            }
        }
        Ok(m)
    }

    pub fn is_unipotent(&self) -> bool {
        self.homology_action().is_unipotent()
    }

    pub fn is_identity_mod3(&self, basis: &Basis) -> Result<bool> {
        Ok(self.cycle_action(basis)?.is_identity_mod(&BigInt::from(3)))
    }

    pub fn growth_degree(&self) -> GrowthReport {
        growth_degree(self, GROWTH_ITERATIONS)
    }
}

pub const GROWTH_ITERATIONS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeGrowth {
    pub edge: String,
    pub combinatorial: u32,
    pub empirical: u32,
    /// `|f^k_#(E_i)|` for `k = 0..=iterations`.
    pub lengths: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub edges: Vec<EdgeGrowth>,
    pub discrepancies: Vec<String>,
}

impl GrowthReport {
    pub fn combinatorial(&self) -> Vec<u32> {
        self.edges.iter().map(|e| e.combinatorial).collect()
    }

    pub fn empirical(&self) -> Vec<u32> {
        self.edges.iter().map(|e| e.empirical).collect()
    }
}

pub fn growth_degree(f: &FilteredMap, iterations: usize) -> GrowthReport {
    let g = f.graph();
    let mut comb: Vec<u32> = Vec::with_capacity(g.edge_count());
    for u in f.suffixes() {
        let d = u.edges().iter().map(|e| comb[e.edge] + 1).max().unwrap_or(0);
        comb.push(d);
    }

    let mut lengths = vec![vec![1usize]; g.edge_count()];
    let mut power = FilteredMap::identity(g.clone());
    for _ in 0..iterations {
        power = f.compose_unchecked(&power);
        for (e, u) in power.suffixes().iter().enumerate() {
            lengths[e].push(1 + u.len());
        }
    }

    let mut edges = Vec::new();
    let mut discrepancies = Vec::new();
    for e in 0..g.edge_count() {
        let empirical = fit_degree(&lengths[e]);
        if empirical != comb[e] {
            discrepancies.push(format!(
                "{}: combinatorial bound {} but fitted degree {}",
                g.edge_name(e),
                comb[e],
                empirical
            ));
        }
        edges.push(EdgeGrowth {
            edge: g.edge_name(e).to_string(),
            combinatorial: comb[e],
            empirical,
            lengths: std::mem::take(&mut lengths[e]),
        });
    }
    GrowthReport { edges, discrepancies }
}

/// Smallest `d` whose `(d+1)`-th finite differences vanish on the tail of
/// the sequence; falls back to a log-ratio estimate.
fn fit_degree(seq: &[usize]) -> u32 {
    let tail: Vec<i128> = seq.iter().skip(seq.len().min(4)).map(|&x| x as i128).collect();
    let mut diffs = tail.clone();
    for d in 0..tail.len().saturating_sub(1) {
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
        if diffs.iter().all(|&x| x == 0) {
            return d as u32;
        }
    }
    let n = seq.len();
    if n < 3 {
        return 0;
    }
    let (a, b) = (seq[n / 2] as f64, seq[n - 1] as f64);
    let ratio = (b / a).ln() / (((n - 1) as f64) / ((n / 2) as f64)).ln();
    ratio.round().max(0.0) as u32
}
