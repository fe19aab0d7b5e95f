use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FilteredGraph, OrientedEdge};
use crate::map::FilteredMap;
use crate::oracle::{self, Outcome, Verdict};
use crate::path::{EdgePath, PathRewriter};

use super::group::MapGroup;

/// Depth at which every rewrite is checked against the outer-class oracle.
pub const REWRITE_DEPTH: usize = 6;

/// Outer-class check of one generator across a rewrite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub generator: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct Slid {
    pub group: MapGroup,
    pub rewriter: PathRewriter,
    pub certificates: Vec<Certificate>,
}

/// Checks `[θ f(w)] = [f' θ(w)]` for every generator; a failure is a bug.
pub(crate) fn certify(
    what: &str,
    before: &MapGroup,
    after: &MapGroup,
    theta: &PathRewriter,
    depth: usize,
) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for ((label, f), g) in before.labels().iter().zip(before.generators()).zip(after.generators()) {
        let verdict = oracle::same_outer_class_across(f, g, theta, depth)?;
        if let Outcome::Fails { witness } = &verdict.outcome {
            return Err(Error::Internal {
                message: format!("{what} changed the outer class of `{label}`"),
                witness: witness.clone(),
            });
        }
        out.push(Certificate {
            generator: label.clone(),
            verdict,
        });
    }
    Ok(out)
}

/// Reattaches the terminal end of `E_i` at the far end of `σ`, a path in
/// `G_{i-1}` starting at the old terminal vertex.
pub fn slide(k: &MapGroup, edge: EdgeId, sigma: &EdgePath) -> Result<Slid> {
    slide_with_depth(k, edge, sigma, REWRITE_DEPTH)
}

pub fn slide_with_depth(k: &MapGroup, edge: EdgeId, sigma: &EdgePath, depth: usize) -> Result<Slid> {
    let g = k.graph();
    if edge >= g.edge_count() {
        return Err(Error::IndexOutOfRange {
            index: edge + 1,
            len: g.edge_count(),
        });
    }
    let name = g.edge_name(edge);
    if sigma.start() != g.edge_term(edge) {
        return Err(Error::domain(format!(
            "slide path must start at the terminal vertex of `{name}`"
        )));
    }
    if let Some(e) = sigma.edges().iter().find(|e| e.edge >= edge) {
        return Err(Error::domain(format!(
            "slide path for `{name}` escapes G_{edge}: it crosses `{}`",
            g.edge_name(e.edge)
        )));
    }
    let sigma = sigma.tighten();
    if sigma.is_empty() {
        return Ok(Slid {
            group: k.clone(),
            rewriter: PathRewriter::identity(g.clone()),
            certificates: Vec::new(),
        });
    }

    let vertices = (0..g.vertex_count()).map(|v| g.vertex_name(v).to_string()).collect();
    let edges = (0..g.edge_count())
        .map(|e| {
            let term = if e == edge { sigma.end() } else { g.edge_term(e) };
            (g.edge_name(e).to_string(), g.edge_init(e), term)
        })
        .collect();
    let target = Arc::new(FilteredGraph::from_parts(vertices, edges));

    let images = (0..g.edge_count())
        .map(|e| {
            let mut p = EdgePath::from_raw(target.edge_init(e), target.edge_term(e), vec![OrientedEdge::forward(e)]);
            if e == edge {
                p = p.join(&sigma.reverse());
            }
            p
        })
        .collect();
    let theta = PathRewriter::new(target.clone(), (0..g.vertex_count()).collect(), images);

    let mut gens = Vec::new();
    for f in k.generators() {
        let suffixes = (0..g.edge_count())
            .map(|e| {
                let u = f.suffix_of(e);
                if e < edge {
                    u.clone()
                } else if e == edge {
                    sigma.reverse().join(u).join(&f.image(&sigma))
                } else {
                    theta.apply(u)
                }
            })
            .collect();
        gens.push(FilteredMap::new(target.clone(), suffixes)?);
    }
    let group = k.with_generators(target, gens);
    let certificates = certify(&format!("slide of `{name}`"), k, &group, &theta, depth)?;
    Ok(Slid {
        group,
        rewriter: theta,
        certificates,
    })
}
