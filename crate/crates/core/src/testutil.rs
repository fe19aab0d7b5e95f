use std::sync::Arc;

use crate::graph::{FilteredGraph, GraphDecl};
use crate::map::FilteredMap;
use crate::path::EdgePath;

pub fn rose(names: &[&str]) -> Arc<FilteredGraph> {
    let mut d = GraphDecl::new().vertex("v");
    for n in names {
        d = d.edge(n, "v", "v");
    }
    Arc::new(FilteredGraph::new(&d).unwrap())
}

/// A path from the base vertex.
pub fn p(g: &FilteredGraph, s: &str) -> EdgePath {
    EdgePath::parse(g, g.base(), s).unwrap()
}

pub fn map(g: &Arc<FilteredGraph>, rules: &[(&str, &str)]) -> FilteredMap {
    let given: Vec<_> = rules
        .iter()
        .map(|(e, u)| {
            let id = g.edge_id(e).unwrap();
            (id, EdgePath::parse(g, g.edge_term(id), u).unwrap())
        })
        .collect();
    FilteredMap::from_suffixes(g.clone(), &given).unwrap()
}

/// The rose on `a, b` with `b ↦ b a`.
pub fn dehn_rose() -> (Arc<FilteredGraph>, FilteredMap) {
    let g = rose(&["a", "b"]);
    let d = map(&g, &[("b", "a")]);
    (g, d)
}

pub fn dehn_graph() -> Arc<FilteredGraph> {
    Arc::new(
        FilteredGraph::new(
            &GraphDecl::new()
                .vertex("v1")
                .vertex("v2")
                .edge("E1", "v1", "v1")
                .edge("E2", "v2", "v1")
                .edge("E3", "v1", "v1")
                .edge("E4", "v2", "v2")
                .edge("E5", "v2", "v2"),
        )
        .unwrap(),
    )
}

/// The twist `E2 ↦ E2 E1` on the two-vertex graph.
pub fn dehn_example() -> (Arc<FilteredGraph>, FilteredMap) {
    let g = dehn_graph();
    let f = map(&g, &[("E2", "E1")]);
    (g, f)
}
