use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FilteredGraph, OrientedEdge, VertexId};
use crate::letter;
use crate::map::FilteredMap;
use crate::oracle::{self, Outcome};
use crate::path::{collapse_edge, collapse_keeping, EdgePath, PathRewriter};

use super::group::MapGroup;
use super::slide::{certify, Certificate, REWRITE_DEPTH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepKind {
    RemoveIsolatedVertex,
    DeleteValenceOne,
    CollapseFixedEdge,
    LoopSlide,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionStep {
    pub kind: StepKind,
    /// The edge removed or, for a loop slide, the edge whose twist is zeroed.
    pub edge: Option<String>,
    pub vertex: String,
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Debug)]
pub struct Conditioned {
    pub group: MapGroup,
    pub steps: Vec<ConditionStep>,
    /// From the input graph to the conditioned one.
    pub rewriter: PathRewriter,
    /// Vertices that are the initial vertex of fewer than two edges but
    /// match none of the rewrite patterns.
    pub unresolved: Vec<String>,
}

impl Conditioned {
    pub fn changed(&self) -> bool {
        !self.steps.is_empty()
    }
}

pub fn condition(k: &MapGroup) -> Result<Conditioned> {
    condition_with_depth(k, REWRITE_DEPTH)
}

pub fn condition_with_depth(k: &MapGroup, depth: usize) -> Result<Conditioned> {
    let mut group = k.clone();
    let mut rewriter = PathRewriter::identity(k.graph().clone());
    let mut steps = Vec::new();
    loop {
        let g = group.graph().clone();
        if let Some(v) = isolated_vertex(&g) {
            let (target, theta) = remove_vertex(&g, v);
            let next = push_through(&group, &target, &theta, None)?;
            steps.push(ConditionStep {
                kind: StepKind::RemoveIsolatedVertex,
                edge: None,
                vertex: g.vertex_name(v).to_string(),
                certificates: Vec::new(),
            });
            rewriter = rewriter.then(&theta);
            group = next;
            continue;
        }
        if let Some((e, keep, v)) = valence_one_edge(&g) {
            let (target, theta) = collapse_keeping(&g, e, keep)?;
            let next = push_through(&group, &target, &theta, Some(e))?;
            let certificates = certify("deleting a valence-one edge", &group, &next, &theta, depth)?;
            steps.push(ConditionStep {
                kind: StepKind::DeleteValenceOne,
                edge: Some(g.edge_name(e).to_string()),
                vertex: g.vertex_name(v).to_string(),
                certificates,
            });
            rewriter = rewriter.then(&theta);
            group = next;
            continue;
        }
        if let Some(e) = fixed_non_loop(&group) {
            let (target, theta) = collapse_edge(&g, e)?;
            let next = push_through(&group, &target, &theta, Some(e))?;
            let certificates = certify("collapsing a fixed edge", &group, &next, &theta, depth)?;
            let dropped = g.edge_init(e).max(g.edge_term(e));
            steps.push(ConditionStep {
                kind: StepKind::CollapseFixedEdge,
                edge: Some(g.edge_name(e).to_string()),
                vertex: g.vertex_name(dropped).to_string(),
                certificates,
            });
            rewriter = rewriter.then(&theta);
            group = next;
            continue;
        }
        if let Some((v, loop_edge, j0)) = loop_slide_site(&group) {
            let next = loop_slide(&group, v, loop_edge, j0)?;
            let mut certificates = Vec::new();
            for ((label, f), h) in group.labels().iter().zip(group.generators()).zip(next.generators()) {
                let verdict = oracle::same_outer_class(f, h, depth)?;
                if let Outcome::Fails { witness } = &verdict.outcome {
                    return Err(Error::Internal {
                        message: format!("loop slide changed the outer class of `{label}`"),
                        witness: witness.clone(),
                    });
                }
                certificates.push(Certificate {
                    generator: label.clone(),
                    verdict,
                });
            }
            steps.push(ConditionStep {
                kind: StepKind::LoopSlide,
                edge: Some(g.edge_name(j0).to_string()),
                vertex: g.vertex_name(v).to_string(),
                certificates,
            });
            group = next;
            continue;
        }
        break;
    }
    let g = group.graph();
    let unresolved = (0..g.vertex_count())
        .filter(|&v| (0..g.edge_count()).filter(|&e| g.edge_init(e) == v).count() < 2)
        .map(|v| g.vertex_name(v).to_string())
        .collect();
    Ok(Conditioned {
        group,
        steps,
        rewriter,
        unresolved,
    })
}

/// Pushes every suffix through `θ`, dropping the removed edge.
fn push_through(
    k: &MapGroup,
    target: &Arc<FilteredGraph>,
    theta: &PathRewriter,
    removed: Option<EdgeId>,
) -> Result<MapGroup> {
    let mut gens = Vec::new();
    for f in k.generators() {
        let suffixes = f
            .suffixes()
            .iter()
            .enumerate()
            .filter(|(e, _)| Some(*e) != removed)
            .map(|(_, u)| theta.apply(u))
            .collect();
        gens.push(FilteredMap::new(target.clone(), suffixes)?);
    }
    Ok(k.with_generators(target.clone(), gens))
}

fn isolated_vertex(g: &FilteredGraph) -> Option<VertexId> {
    if g.vertex_count() < 2 {
        return None;
    }
    (0..g.vertex_count()).find(|&v| g.valence(v) == 0)
}

fn remove_vertex(g: &FilteredGraph, v: VertexId) -> (Arc<FilteredGraph>, PathRewriter) {
    let names = (0..g.vertex_count())
        .filter(|&x| x != v)
        .map(|x| g.vertex_name(x).to_string())
        .collect();
    let renum = |x: VertexId| if x > v { x - 1 } else { x };
    let edges = (0..g.edge_count())
        .map(|e| (g.edge_name(e).to_string(), renum(g.edge_init(e)), renum(g.edge_term(e))))
        .collect();
    let target = Arc::new(FilteredGraph::from_parts(names, edges));
    let images = (0..g.edge_count())
        .map(|e| EdgePath::from_raw(target.edge_init(e), target.edge_term(e), vec![OrientedEdge::forward(e)]))
        .collect();
    let vmap = (0..g.vertex_count()).map(|x| if x == v { 0 } else { renum(x) }).collect();
    (target.clone(), PathRewriter::new(target, vmap, images))
}

/// `(edge, surviving endpoint, deleted vertex)`.
fn valence_one_edge(g: &FilteredGraph) -> Option<(EdgeId, VertexId, VertexId)> {
    for v in 0..g.vertex_count() {
        if g.valence(v) == 1 {
            let d = g.directions(v)[0];
            return Some((d.edge, g.term(d), v));
        }
    }
    None
}

fn fixed_non_loop(k: &MapGroup) -> Option<EdgeId> {
    let g = k.graph();
    (0..g.edge_count()).find(|&e| !g.is_loop(e) && k.generators().iter().all(|f| f.suffix_of(e).is_empty()))
}

/// A vertex whose first edge is a loop `E_i`, which is the initial vertex of
/// no other edge, and where every other edge ends with a suffix that is a
/// power of `E_i`. Returns `(v, E_i, E_{j0})`.
fn loop_slide_site(k: &MapGroup) -> Option<(VertexId, EdgeId, EdgeId)> {
    let g = k.graph();
    for v in 0..g.vertex_count() {
        let at: Vec<EdgeId> = (0..g.edge_count())
            .filter(|&e| g.edge_init(e) == v || g.edge_term(e) == v)
            .collect();
        let Some(&first) = at.first() else { continue };
        if !g.is_loop(first) {
            continue;
        }
        let others = &at[1..];
        if others.is_empty() {
            continue;
        }
        let pattern = others.iter().all(|&e| {
            !g.is_loop(e)
                && g.edge_term(e) == v
                && k.generators().iter().all(|f| loop_power(f.suffix_of(e), first).is_some())
        });
        if pattern {
            return Some((v, first, others[0]));
        }
    }
    None
}

fn loop_power(u: &EdgePath, loop_edge: EdgeId) -> Option<i64> {
    letter::power_exponent(u.edges(), &[OrientedEdge::forward(loop_edge)])
}

/// Replaces `k_j(f)` by `k_j(f) - k_{j0}(f)` on the edges ending at `v`.
fn loop_slide(k: &MapGroup, v: VertexId, loop_edge: EdgeId, j0: EdgeId) -> Result<MapGroup> {
    let g = k.graph();
    let mut gens = Vec::new();
    for f in k.generators() {
        let shift = loop_power(f.suffix_of(j0), loop_edge).unwrap_or(0);
        let suffixes = (0..g.edge_count())
            .map(|e| {
                let u = f.suffix_of(e);
                if e != loop_edge && g.edge_term(e) == v && !g.is_loop(e) {
                    let kj = loop_power(u, loop_edge).unwrap_or(0);
                    EdgePath::from_raw(v, v, vec![OrientedEdge::forward(loop_edge)]).pow(kj - shift)
                } else {
                    u.clone()
                }
            })
            .collect();
        gens.push(FilteredMap::new(g.clone(), suffixes)?);
    }
    Ok(k.with_generators(g.clone(), gens))
}
