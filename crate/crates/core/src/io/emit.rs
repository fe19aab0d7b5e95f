use std::fmt::Write;

use crate::axes::MapGroup;
use crate::graph::FilteredGraph;
use crate::map::FilteredMap;

use super::parse::Document;

pub fn emit_graph(out: &mut String, name: &str, g: &FilteredGraph) {
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  vertex {}", g.vertex_name(v)).unwrap();
    }
    for e in 0..g.edge_count() {
        writeln!(
            out,
            "  edge {} {} {}",
            g.edge_name(e),
            g.vertex_name(g.edge_init(e)),
            g.vertex_name(g.edge_term(e))
        )
        .unwrap();
    }
    out.push_str("}\n");
}

/// Only edges with a nontrivial suffix are listed.
pub fn emit_map(out: &mut String, name: &str, graph: &str, f: &FilteredMap) {
    let g = f.graph();
    writeln!(out, "map {name} on {graph} {{").unwrap();
    for e in 0..g.edge_count() {
        let u = f.suffix_of(e);
        if !u.is_empty() {
            writeln!(out, "  {0} -> {0} {1}", g.edge_name(e), u.render(g)).unwrap();
        }
    }
    out.push_str("}\n");
}

pub fn emit_group(out: &mut String, name: &str, graph: &str, gens: &[String]) {
    writeln!(out, "group {name} on {graph} {{").unwrap();
    writeln!(out, "  gens {}", gens.join(" ")).unwrap();
    out.push_str("}\n");
}

/// Canonical text: one statement per line, two-space indent, blocks
/// separated by a blank line.
pub fn emit(doc: &Document) -> String {
    let mut blocks = Vec::new();
    for (name, g) in &doc.graphs {
        let mut s = String::new();
        emit_graph(&mut s, name, &g.graph);
        blocks.push(s);
    }
    for (name, m) in &doc.maps {
        let mut s = String::new();
        emit_map(&mut s, name, &m.graph, &m.map);
        blocks.push(s);
    }
    for (name, k) in &doc.groups {
        let mut s = String::new();
        emit_group(&mut s, name, &k.graph, &k.gens);
        blocks.push(s);
    }
    blocks.join("\n")
}

/// A self-contained document for a group: its graph, generators and the
/// group block.
pub fn emit_map_group(name: &str, graph: &str, k: &MapGroup) -> String {
    let mut s = String::new();
    emit_graph(&mut s, graph, k.graph());
    for (label, f) in k.labels().iter().zip(k.generators()) {
        s.push('\n');
        emit_map(&mut s, label, graph, f);
    }
    s.push('\n');
    emit_group(&mut s, name, graph, k.labels());
    s
}
