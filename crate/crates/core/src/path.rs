//! Edge paths, tightening, graph rewrites and spanning-tree bases.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FilteredGraph, OrientedEdge, VertexId};
use crate::letter::{self, Letter};
use crate::word::{FreeWord, GenLetter};

/// A sequence of oriented edges with explicit endpoints, so the empty path
/// still knows where it sits.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct EdgePath {
    start: VertexId,
    end: VertexId,
    edges: Vec<OrientedEdge>,
}

impl EdgePath {
    pub fn trivial(v: VertexId) -> Self {
        EdgePath {
            start: v,
            end: v,
            edges: Vec::new(),
        }
    }

    /// Checks incidence; does not reduce.
    pub fn new(graph: &FilteredGraph, start: VertexId, edges: Vec<OrientedEdge>) -> Result<Self> {
        if start >= graph.vertex_count() {
            return Err(Error::MalformedPath(format!("unknown vertex {start}")));
        }
        let mut at = start;
        for (k, e) in edges.iter().enumerate() {
            if e.edge >= graph.edge_count() {
                return Err(Error::MalformedPath(format!("unknown edge {}", e.edge)));
            }
            if graph.init(*e) != at {
                return Err(Error::MalformedPath(format!(
                    "edge {} at position {k} starts at `{}`, expected `{}`",
                    graph.oriented_name(*e),
                    graph.vertex_name(graph.init(*e)),
                    graph.vertex_name(at)
                )));
            }
            at = graph.term(*e);
        }
        Ok(EdgePath {
            start,
            end: at,
            edges,
        })
    }

    /// Nonempty edge sequence; the start vertex is read off the first edge.
    pub fn from_edges(graph: &FilteredGraph, edges: Vec<OrientedEdge>) -> Result<Self> {
        let start = edges
            .first()
            .map(|e| graph.init(*e))
            .ok_or_else(|| Error::MalformedPath("empty edge list without a vertex".into()))?;
        Self::new(graph, start, edges)
    }

    /// Parses space separated `E` / `~E` tokens, starting at `start`.
    pub fn parse(graph: &FilteredGraph, start: VertexId, text: &str) -> Result<Self> {
        let edges = text
            .split_whitespace()
            .map(|t| {
                graph
                    .parse_oriented(t)
                    .ok_or_else(|| Error::MalformedPath(format!("unknown edge `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, start, edges)
    }

    pub(crate) fn from_raw(start: VertexId, end: VertexId, edges: Vec<OrientedEdge>) -> Self {
        EdgePath { start, end, edges }
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.end
    }

    pub fn edges(&self) -> &[OrientedEdge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end
    }

    pub fn is_reduced(&self) -> bool {
        letter::is_reduced(&self.edges)
    }

    pub fn reverse(&self) -> EdgePath {
        EdgePath {
            start: self.end,
            end: self.start,
            edges: letter::inverse(&self.edges),
        }
    }

    /// The reduced path homotopic rel endpoints.
    pub fn tighten(&self) -> EdgePath {
        EdgePath {
            start: self.start,
            end: self.end,
            edges: letter::reduce(&self.edges),
        }
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &EdgePath) -> Result<EdgePath> {
        if self.end != other.start {
            return Err(Error::MalformedPath(format!(
                "cannot concatenate: path ends at vertex {} but next starts at {}",
                self.end, other.start
            )));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        Ok(EdgePath {
            start: self.start,
            end: other.end,
            edges,
        })
    }

    /// Tightened concatenation. Panics on an endpoint mismatch, which is
    /// always a logic error at the call sites that use it.
    pub fn join(&self, other: &EdgePath) -> EdgePath {
        assert_eq!(
            self.end, other.start,
            "join: endpoint mismatch ({} vs {})",
            self.end, other.start
        );
        let mut edges = self.edges.clone();
        letter::extend_reduced(&mut edges, other.edges.iter().copied());
        EdgePath {
            start: self.start,
            end: other.end,
            edges,
        }
    }

    pub fn join_all<'a>(parts: impl IntoIterator<Item = &'a EdgePath>, start: VertexId) -> EdgePath {
        parts
            .into_iter()
            .fold(EdgePath::trivial(start), |acc, p| acc.join(p))
    }

    /// First `k` edges; `graph` supplies the new end vertex.
    pub fn prefix(&self, graph: &FilteredGraph, k: usize) -> EdgePath {
        let k = k.min(self.edges.len());
        let end = if k == 0 {
            self.start
        } else {
            graph.term(self.edges[k - 1])
        };
        EdgePath {
            start: self.start,
            end,
            edges: self.edges[..k].to_vec(),
        }
    }

    pub fn pow(&self, k: i64) -> EdgePath {
        assert!(self.is_loop() || k == 0 || k == 1);
        EdgePath {
            start: self.start,
            end: if k == 0 { self.start } else { self.end },
            edges: letter::power(&self.edges, k),
        }
    }

    pub fn max_edge(&self) -> Option<EdgeId> {
        self.edges.iter().map(|e| e.edge).max()
    }

    /// Signed occurrence count of `edge`.
    pub fn signed_count(&self, edge: EdgeId) -> i64 {
        self.edges
            .iter()
            .filter(|e| e.edge == edge)
            .map(|e| if e.reversed { -1 } else { 1 })
            .sum()
    }

    pub fn render(&self, graph: &FilteredGraph) -> String {
        if self.edges.is_empty() {
            return format!("1@{}", graph.vertex_name(self.start));
        }
        self.edges
            .iter()
            .map(|e| graph.oriented_name(*e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Free-standing form of [`EdgePath::new`] followed by [`EdgePath::tighten`].
pub fn tighten(graph: &FilteredGraph, start: VertexId, edges: Vec<OrientedEdge>) -> Result<EdgePath> {
    Ok(EdgePath::new(graph, start, edges)?.tighten())
}

/// A cellular map between graphs sending vertices to vertices and edges to
/// paths. Used to transport paths across collapses, deletions and slides.
#[derive(Clone, Debug)]
pub struct PathRewriter {
    target: Arc<FilteredGraph>,
    vertex_map: Vec<VertexId>,
    images: Vec<EdgePath>,
}

impl PathRewriter {
    pub fn new(target: Arc<FilteredGraph>, vertex_map: Vec<VertexId>, images: Vec<EdgePath>) -> Self {
        PathRewriter {
            target,
            vertex_map,
            images,
        }
    }

    pub fn identity(graph: Arc<FilteredGraph>) -> Self {
        let vertex_map = (0..graph.vertex_count()).collect();
        let images = (0..graph.edge_count())
            .map(|e| {
                EdgePath::from_raw(
                    graph.edge_init(e),
                    graph.edge_term(e),
                    vec![OrientedEdge::forward(e)],
                )
            })
            .collect();
        PathRewriter {
            target: graph,
            vertex_map,
            images,
        }
    }

    pub fn target(&self) -> &Arc<FilteredGraph> {
        &self.target
    }

    pub fn map_vertex(&self, v: VertexId) -> VertexId {
        self.vertex_map[v]
    }

    pub fn edge_image(&self, e: OrientedEdge) -> EdgePath {
        let img = &self.images[e.edge];
        if e.reversed {
            img.reverse()
        } else {
            img.clone()
        }
    }

    /// Image of a path, tightened.
    pub fn apply(&self, p: &EdgePath) -> EdgePath {
        let mut edges = Vec::new();
        for e in p.edges() {
            let img = &self.images[e.edge];
            if e.reversed {
                letter::extend_reduced(&mut edges, img.edges.iter().rev().map(|x| x.inverse()));
            } else {
                letter::extend_reduced(&mut edges, img.edges.iter().copied());
            }
        }
        EdgePath::from_raw(self.map_vertex(p.start()), self.map_vertex(p.end()), edges)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &PathRewriter) -> PathRewriter {
        PathRewriter {
            target: other.target.clone(),
            vertex_map: self.vertex_map.iter().map(|&v| other.map_vertex(v)).collect(),
            images: self.images.iter().map(|p| other.apply(p)).collect(),
        }
    }
}

/// Collapses a non-loop edge, keeping the named endpoint. Surviving vertices
/// and edges keep their relative order.
pub(crate) fn collapse_keeping(
    graph: &FilteredGraph,
    edge: EdgeId,
    keep: VertexId,
) -> Result<(Arc<FilteredGraph>, PathRewriter)> {
    if graph.is_loop(edge) {
        return Err(Error::domain(format!(
            "cannot collapse loop `{}`: it would change the rank",
            graph.edge_name(edge)
        )));
    }
    let (a, b) = (graph.edge_init(edge), graph.edge_term(edge));
    assert!(keep == a || keep == b);
    let drop = if keep == a { b } else { a };

    let mut new_id = vec![0; graph.vertex_count()];
    let mut names = Vec::new();
    for v in 0..graph.vertex_count() {
        if v != drop {
            new_id[v] = names.len();
            names.push(graph.vertex_name(v).to_string());
        }
    }
    new_id[drop] = new_id[keep];

    let mut edge_id = vec![None; graph.edge_count()];
    let mut edges = Vec::new();
    for e in 0..graph.edge_count() {
        if e != edge {
            edge_id[e] = Some(edges.len());
            edges.push((
                graph.edge_name(e).to_string(),
                new_id[graph.edge_init(e)],
                new_id[graph.edge_term(e)],
            ));
        }
    }
    let target = Arc::new(FilteredGraph::from_parts(names, edges));
    let images = (0..graph.edge_count())
        .map(|e| match edge_id[e] {
            Some(ne) => EdgePath::from_raw(
                target.edge_init(ne),
                target.edge_term(ne),
                vec![OrientedEdge::forward(ne)],
            ),
            None => EdgePath::trivial(new_id[keep]),
        })
        .collect();
    let rw = PathRewriter::new(target.clone(), new_id, images);
    Ok((target, rw))
}

/// Quotient by a non-loop edge. The earlier-declared endpoint survives.
pub fn collapse_edge(graph: &FilteredGraph, edge: EdgeId) -> Result<(Arc<FilteredGraph>, PathRewriter)> {
    if edge >= graph.edge_count() {
        return Err(Error::IndexOutOfRange {
            index: edge + 1,
            len: graph.edge_count(),
        });
    }
    let keep = graph.edge_init(edge).min(graph.edge_term(edge));
    collapse_keeping(graph, edge, keep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisLoop {
    pub label: String,
    pub edge: EdgeId,
    pub path: EdgePath,
}

/// A marking of π₁(G, base) by a spanning tree: one free generator per
/// non-tree edge.
#[derive(Clone, Debug)]
pub struct Basis {
    graph: Arc<FilteredGraph>,
    base: VertexId,
    tree_paths: Vec<EdgePath>,
    generator_of_edge: Vec<Option<usize>>,
    loops: Vec<BasisLoop>,
}

impl Basis {
    pub fn graph(&self) -> &Arc<FilteredGraph> {
        &self.graph
    }

    pub fn base(&self) -> VertexId {
        self.base
    }

    pub fn rank(&self) -> usize {
        self.loops.len()
    }

    pub fn loops(&self) -> &[BasisLoop] {
        &self.loops
    }

    pub fn labels(&self) -> Vec<String> {
        self.loops.iter().map(|l| l.label.clone()).collect()
    }

    pub fn is_tree_edge(&self, e: EdgeId) -> bool {
        self.generator_of_edge[e].is_none()
    }

    /// Tree path from the base to `v`.
    pub fn tree_path(&self, v: VertexId) -> &EdgePath {
        &self.tree_paths[v]
    }

    /// Reads a closed path as a word; for loops away from the base this is
    /// the word of its conjugate by the tree path.
    pub fn word_of(&self, p: &EdgePath) -> FreeWord {
        let letters: Vec<GenLetter> = p
            .edges()
            .iter()
            .filter_map(|e| self.generator_of_edge[e.edge].map(|g| GenLetter::new(g, e.reversed)))
            .collect();
        FreeWord::new(&letters)
    }

    /// The reduced loop at the base representing `w`.
    pub fn loop_of(&self, w: &FreeWord) -> EdgePath {
        let mut edges = Vec::new();
        for l in w.letters() {
            let lp = &self.loops[l.index()].path;
            if l.inv {
                letter::extend_reduced(&mut edges, lp.edges().iter().rev().map(|x| x.inverse()));
            } else {
                letter::extend_reduced(&mut edges, lp.edges().iter().copied());
            }
        }
        EdgePath::from_raw(self.base, self.base, edges)
    }
}

/// Breadth-first spanning tree from `base`, edges tried in filtration order.
pub fn spanning_tree_basis(graph: &Arc<FilteredGraph>, base: VertexId) -> Result<Basis> {
    let n = graph.vertex_count();
    let mut tree_paths: Vec<Option<EdgePath>> = vec![None; n];
    let mut in_tree = vec![false; graph.edge_count()];
    tree_paths[base] = Some(EdgePath::trivial(base));
    let mut queue = VecDeque::from([base]);
    while let Some(x) = queue.pop_front() {
        for e in 0..graph.edge_count() {
            let (a, b) = (graph.edge_init(e), graph.edge_term(e));
            let step = if a == x && tree_paths[b].is_none() {
                Some((b, OrientedEdge::forward(e)))
            } else if b == x && tree_paths[a].is_none() {
                Some((a, OrientedEdge::backward(e)))
            } else {
                None
            };
            if let Some((y, oe)) = step {
                let mut p = tree_paths[x].clone().unwrap();
                p.edges.push(oe);
                p.end = y;
                tree_paths[y] = Some(p);
                in_tree[e] = true;
                queue.push_back(y);
            }
        }
    }
    if let Some(v) = tree_paths.iter().position(|p| p.is_none()) {
        return Err(Error::domain(format!(
            "graph is disconnected: `{}` is unreachable from `{}`",
            graph.vertex_name(v),
            graph.vertex_name(base)
        )));
    }
    let tree_paths: Vec<EdgePath> = tree_paths.into_iter().map(Option::unwrap).collect();

    let mut generator_of_edge = vec![None; graph.edge_count()];
    let mut loops = Vec::new();
    for e in 0..graph.edge_count() {
        if in_tree[e] {
            continue;
        }
        generator_of_edge[e] = Some(loops.len());
        let edge = EdgePath::from_raw(graph.edge_init(e), graph.edge_term(e), vec![OrientedEdge::forward(e)]);
        let path = tree_paths[graph.edge_init(e)]
            .join(&edge)
            .join(&tree_paths[graph.edge_term(e)].reverse());
        loops.push(BasisLoop {
            label: graph.edge_name(e).to_string(),
            edge: e,
            path,
        });
    }
    Ok(Basis {
        graph: graph.clone(),
        base,
        tree_paths,
        generator_of_edge,
        loops,
    })
}
