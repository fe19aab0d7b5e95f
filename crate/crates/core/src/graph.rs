//! Filtered graphs: edges in declaration order, where the `i`-th edge is the
//! single edge added at filtration level `i`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::letter::Letter;

pub type VertexId = usize;
pub type EdgeId = usize;

/// An edge traversed forwards or backwards. Serialized as `E` or `~E`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrientedEdge {
    pub edge: EdgeId,
    pub reversed: bool,
}

impl OrientedEdge {
    pub fn forward(edge: EdgeId) -> Self {
        OrientedEdge { edge, reversed: false }
    }

    pub fn backward(edge: EdgeId) -> Self {
        OrientedEdge { edge, reversed: true }
    }
}

impl Letter for OrientedEdge {
    #[inline]
    fn inverse(self) -> Self {
        OrientedEdge {
            edge: self.edge,
            reversed: !self.reversed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeDecl {
    pub name: String,
    pub init: String,
    pub term: String,
}

/// Unvalidated graph description, as it comes out of the parser.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphDecl {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDecl>,
}

impl GraphDecl {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, name: &str) -> Self {
        self.vertices.push(name.to_string());
        self
    }

    pub fn edge(mut self, name: &str, init: &str, term: &str) -> Self {
        self.edges.push(EdgeDecl {
            name: name.to_string(),
            init: init.to_string(),
            term: term.to_string(),
        });
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Fatal,
    Flag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
    /// `(edge name, filtration index)`, indices starting at 1.
    pub filtration: Vec<(String, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.findings.iter().all(|f| f.severity != Severity::Fatal)
    }

    pub fn flags(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Flag)
    }
}

/// Report-only validation: duplicate names, dangling endpoints and
/// valence-one vertices (the last is a flag, not fatal).
pub fn validate(decl: &GraphDecl) -> ValidationReport {
    let mut findings = Vec::new();
    let mut fatal = |message: String| {
        findings.push(Finding {
            severity: Severity::Fatal,
            message,
        })
    };

    let mut seen = HashSet::new();
    for v in &decl.vertices {
        if !seen.insert(v.as_str()) {
            fatal(format!("duplicate vertex `{v}`"));
        }
    }
    let mut seen_edges = HashSet::new();
    for e in &decl.edges {
        if !seen_edges.insert(e.name.as_str()) {
            fatal(format!("duplicate edge `{}`", e.name));
        }
        if seen.contains(e.name.as_str()) {
            fatal(format!("edge `{}` shares its name with a vertex", e.name));
        }
        for end in [&e.init, &e.term] {
            if !seen.contains(end.as_str()) {
                fatal(format!("edge `{}` uses undeclared vertex `{end}`", e.name));
            }
        }
    }

    for v in &decl.vertices {
        let valence: usize = decl
            .edges
            .iter()
            .map(|e| (e.init == *v) as usize + (e.term == *v) as usize)
            .sum();
        if valence == 1 {
            findings.push(Finding {
                severity: Severity::Flag,
                message: format!("vertex `{v}` has valence one"),
            });
        } else if valence == 0 {
            findings.push(Finding {
                severity: Severity::Flag,
                message: format!("vertex `{v}` is isolated"),
            });
        }
    }

    let filtration = decl
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.name.clone(), i + 1))
        .collect();
    ValidationReport {
        findings,
        filtration,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Edge {
    name: String,
    init: VertexId,
    term: VertexId,
}

/// A validated filtered graph. Edge `i` (0-based) is `E_{i+1}` and
/// `G_j` consists of the first `j` edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilteredGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl FilteredGraph {
    pub fn new(decl: &GraphDecl) -> Result<Self> {
        let report = validate(decl);
        if let Some(f) = report.findings.iter().find(|f| f.severity == Severity::Fatal) {
            return Err(Error::domain(f.message.clone()));
        }
        let index = |name: &str| decl.vertices.iter().position(|v| v == name).unwrap();
        Ok(FilteredGraph {
            vertices: decl.vertices.clone(),
            edges: decl
                .edges
                .iter()
                .map(|e| Edge {
                    name: e.name.clone(),
                    init: index(&e.init),
                    term: index(&e.term),
                })
                .collect(),
        })
    }

    pub(crate) fn from_parts(vertices: Vec<String>, edges: Vec<(String, VertexId, VertexId)>) -> Self {
        FilteredGraph {
            vertices,
            edges: edges
                .into_iter()
                .map(|(name, init, term)| Edge { name, init, term })
                .collect(),
        }
    }

    pub fn decl(&self) -> GraphDecl {
        GraphDecl {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDecl {
                    name: e.name.clone(),
                    init: self.vertices[e.init].clone(),
                    term: self.vertices[e.term].clone(),
                })
                .collect(),
        }
    }

    pub fn report(&self) -> ValidationReport {
        validate(&self.decl())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e].name
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// The base vertex for all deck arithmetic: the first declared vertex.
    pub fn base(&self) -> VertexId {
        0
    }

    pub fn edge_init(&self, e: EdgeId) -> VertexId {
        self.edges[e].init
    }

    pub fn edge_term(&self, e: EdgeId) -> VertexId {
        self.edges[e].term
    }

    pub fn init(&self, e: OrientedEdge) -> VertexId {
        if e.reversed {
            self.edges[e.edge].term
        } else {
            self.edges[e.edge].init
        }
    }

    pub fn term(&self, e: OrientedEdge) -> VertexId {
        self.init(e.inverse())
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        self.edges[e].init == self.edges[e].term
    }

    /// Oriented edges leaving `v`, in filtration order (forward before reversed).
    pub fn directions(&self, v: VertexId) -> Vec<OrientedEdge> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.init == v {
                out.push(OrientedEdge::forward(i));
            }
            if e.term == v {
                out.push(OrientedEdge::backward(i));
            }
        }
        out
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| (e.init == v) as usize + (e.term == v) as usize)
            .sum()
    }

    /// Whether `v` is touched by one of the first `level` edges.
    pub fn in_subgraph(&self, v: VertexId, level: usize) -> bool {
        self.edges[..level].iter().any(|e| e.init == v || e.term == v)
    }

    /// First Betti number of the component containing the base vertex plus
    /// any other components; equals `#E - #V + #components`.
    pub fn rank(&self) -> usize {
        let comps = self.components();
        (self.edges.len() + comps) - self.vertices.len()
    }

    pub fn components(&self) -> usize {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut comps = n;
        for e in &self.edges {
            let a = find(&mut parent, e.init);
            let b = find(&mut parent, e.term);
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps
    }

    pub fn oriented_name(&self, e: OrientedEdge) -> String {
        if e.reversed {
            format!("~{}", self.edges[e.edge].name)
        } else {
            self.edges[e.edge].name.clone()
        }
    }

    pub fn parse_oriented(&self, token: &str) -> Option<OrientedEdge> {
        match token.strip_prefix('~') {
            Some(rest) => self.edge_id(rest).map(OrientedEdge::backward),
            None => self.edge_id(token).map(OrientedEdge::forward),
        }
    }
}

impl fmt::Display for FilteredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {:?}; edges", self.vertices)?;
        for e in &self.edges {
            write!(f, " {}:{}->{}", e.name, self.vertices[e.init], self.vertices[e.term])?;
        }
        Ok(())
    }
}
