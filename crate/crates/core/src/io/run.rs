use std::fmt::Write;

use serde_json::{json, Value};

use crate::axes::{
    abelian_certificate, condition, essential_data, index_bound, interesting_lifts, twist_coordinates,
    verify_property_a, AbelianCertificate, Conditioned, EssentialData, MapGroup,
};
use crate::boundary::ClassifyBounds;
use crate::error::{Error, Result};
use crate::graph::Severity;
use crate::map::FilteredMap;
use crate::path::spanning_tree_basis;

use super::emit::emit_map_group;
use super::parse::{parse, Document};
use super::report::{envelope, error_json, exit_code, render_json, Format, EXIT_OK, EXIT_VIOLATION};

pub const DEFAULT_SEARCH_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlArgs {
    pub group: Option<String>,
    pub element: String,
    pub axis: Option<String>,
    pub exp_bound: i64,
    pub radius: usize,
    pub depth: usize,
    pub search_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Upg { group: Option<String> },
    Abelian { group: Option<String> },
    Condition { group: Option<String> },
    Axes { group: Option<String>, search_bound: usize },
    Embed { group: Option<String>, words: Vec<String>, search_bound: usize },
    Il(IlArgs),
    Bound { rank: u32 },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Upg { .. } => "upg",
            Command::Abelian { .. } => "abelian",
            Command::Condition { .. } => "condition",
            Command::Axes { .. } => "axes",
            Command::Embed { .. } => "embed",
            Command::Il(_) => "il",
            Command::Bound { .. } => "bound",
        }
    }

    pub fn needs_document(&self) -> bool {
        !matches!(self, Command::Bound { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
}

struct Done {
    exit: i32,
    json: Value,
    text: String,
}

fn ok(json: Value, text: String) -> Result<Done> {
    Ok(Done { exit: EXIT_OK, json, text })
}

/// Parses the document (unless the command needs none), runs the command
/// and renders the report.
pub fn run(doc_text: &str, cmd: &Command, format: Format) -> Outcome {
    let done = if cmd.needs_document() {
        parse(doc_text).and_then(|doc| dispatch(&doc, cmd))
    } else {
        dispatch(&Document::default(), cmd)
    };
    match done {
        Ok(d) => Outcome {
            exit_code: d.exit,
            stdout: match format {
                Format::Json => render_json(&envelope(cmd.name(), d.exit, Some(d.json), None)),
                Format::Text => d.text,
            },
        },
        Err(e) => {
            let code = exit_code(&e);
            Outcome {
                exit_code: code,
                stdout: match format {
                    Format::Json => render_json(&envelope(cmd.name(), code, None, Some(error_json(&e)))),
                    Format::Text => format!("error: {e}\n"),
                },
            }
        }
    }
}

fn dispatch(doc: &Document, cmd: &Command) -> Result<Done> {
    match cmd {
        Command::Check => check(doc),
        Command::Upg { group } => upg(doc, group.as_deref()),
        Command::Abelian { group } => abelian(doc, group.as_deref()),
        Command::Condition { group } => conditioned(doc, group.as_deref()),
        Command::Axes { group, search_bound } => axes(doc, group.as_deref(), *search_bound),
        Command::Embed {
            group,
            words,
            search_bound,
        } => embed(doc, group.as_deref(), words, *search_bound),
        Command::Il(args) => il(doc, args),
        Command::Bound { rank } => bound(*rank),
    }
}

fn check(doc: &Document) -> Result<Done> {
    let mut text = String::new();
    let mut graphs = Vec::new();
    for (name, g) in &doc.graphs {
        let report = g.graph.report();
        let flags: Vec<&str> = report
            .findings
            .iter()
            .filter(|f| f.severity == Severity::Flag)
            .map(|f| f.message.as_str())
            .collect();
        writeln!(
            text,
            "graph {name}: {} vertices, {} edges, rank {}",
            g.graph.vertex_count(),
            g.graph.edge_count(),
            g.graph.rank()
        )
        .unwrap();
        for f in &flags {
            writeln!(text, "  flag: {f}").unwrap();
        }
        graphs.push(json!({
            "name": name,
            "vertices": g.graph.vertex_count(),
            "edges": g.graph.edge_count(),
            "rank": g.graph.rank(),
            "flags": flags,
        }));
    }
    let mut maps = Vec::new();
    for (name, m) in &doc.maps {
        let moved = m.map.suffixes().iter().filter(|u| !u.is_empty()).count();
        writeln!(text, "map {name} on {}: {moved} edge(s) moved", m.graph).unwrap();
        maps.push(json!({ "name": name, "graph": m.graph, "moved_edges": moved }));
    }
    let mut groups = Vec::new();
    let mut failures = 0;
    for name in doc.groups.keys() {
        let k = doc.group(name)?;
        let laws = group_laws(&k)?;
        failures += laws.iter().filter(|l| l.1.is_some()).count();
        let passed = laws.iter().all(|l| l.1.is_none());
        writeln!(
            text,
            "group {name}: {} generator(s), group laws {}",
            k.rank(),
            if passed { "hold" } else { "FAIL" }
        )
        .unwrap();
        for (law, w) in &laws {
            if let Some(w) = w {
                writeln!(text, "  {law}: {w}").unwrap();
            }
        }
        groups.push(json!({
            "name": name,
            "generators": k.labels(),
            "laws": laws.iter().map(|(law, w)| json!({"law": law, "passed": w.is_none(), "witness": w})).collect::<Vec<_>>(),
        }));
    }
    Ok(Done {
        exit: if failures == 0 { EXIT_OK } else { EXIT_VIOLATION },
        json: json!({ "graphs": graphs, "maps": maps, "groups": groups }),
        text,
    })
}

/// Inverse and associativity laws on the generators.
fn group_laws(k: &MapGroup) -> Result<Vec<(String, Option<String>)>> {
    let mut out = Vec::new();
    let gens = k.generators();
    let labels = k.labels();
    for (l, f) in labels.iter().zip(gens) {
        let inv = f.invert();
        let bad = !f.compose(&inv)?.is_identity() || !inv.compose(f)?.is_identity();
        out.push((format!("inverse of {l}"), bad.then(|| l.clone())));
    }
    for a in 0..gens.len() {
        for b in 0..gens.len() {
            for c in 0..gens.len() {
                let lhs = gens[a].compose(&gens[b])?.compose(&gens[c])?;
                let rhs = gens[a].compose(&gens[b].compose(&gens[c])?)?;
                if lhs != rhs {
                    out.push((
                        "associativity".into(),
                        Some(format!("{}.{}.{}", labels[a], labels[b], labels[c])),
                    ));
                }
            }
        }
    }
    if !gens.is_empty() {
        out.push(("associativity".into(), None));
    }
    Ok(out)
}

fn upg_maps(doc: &Document, group: Option<&str>) -> Result<Vec<(String, FilteredMap)>> {
    match group {
        Some(n) => {
            let k = doc.group(n)?;
            Ok(k.labels().iter().cloned().zip(k.generators().iter().cloned()).collect())
        }
        None => Ok(doc.maps.iter().map(|(n, m)| (n.clone(), m.map.clone())).collect()),
    }
}

fn upg(doc: &Document, group: Option<&str>) -> Result<Done> {
    let mut text = String::new();
    let mut maps = Vec::new();
    for (name, f) in upg_maps(doc, group)? {
        let g = f.graph();
        let basis = spanning_tree_basis(g, g.base())?;
        let m = f.homology_action();
        let cycle = f.cycle_action(&basis)?;
        let unipotent = m.is_unipotent();
        let mod3 = f.is_identity_mod3(&basis)?;
        let growth = f.growth_degree();
        writeln!(text, "map {name}").unwrap();
        writeln!(text, "  edge action:").unwrap();
        for row in m.to_strings() {
            writeln!(text, "    [{}]", row.join(" ")).unwrap();
        }
        writeln!(text, "  cycle action:").unwrap();
        for row in cycle.to_strings() {
            writeln!(text, "    [{}]", row.join(" ")).unwrap();
        }
        writeln!(text, "  unipotent: {}", yes(unipotent)).unwrap();
        writeln!(text, "  identity mod 3: {}", yes(mod3)).unwrap();
        for e in &growth.edges {
            writeln!(
                text,
                "  growth {}: degree {} (empirical {})",
                e.edge, e.combinatorial, e.empirical
            )
            .unwrap();
        }
        for d in &growth.discrepancies {
            writeln!(text, "  discrepancy: {d}").unwrap();
        }
        maps.push(json!({
            "name": name,
            "edge_action": m.to_strings(),
            "cycle_action": cycle.to_strings(),
            "unipotent": unipotent,
            "identity_mod_3": mod3,
            "growth": growth,
        }));
    }
    ok(json!({ "maps": maps }), text)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn abelian(doc: &Document, group: Option<&str>) -> Result<Done> {
    let (name, k) = doc.select_group(group)?;
    let cert = abelian_certificate(&k);
    let text = match &cert {
        AbelianCertificate::Commuting { pairs } => {
            format!("group {name}: abelian ({pairs} generator pair(s) commute)\n")
        }
        AbelianCertificate::NonCommuting(w) => format!("group {name}: not abelian; {}\n", w.render()),
    };
    ok(json!({ "group": name, "certificate": cert }), text)
}

fn condition_json(c: &Conditioned) -> Value {
    json!({
        "changed": c.changed(),
        "steps": c.steps,
        "unresolved": c.unresolved,
    })
}

fn condition_text(text: &mut String, c: &Conditioned) {
    if !c.changed() {
        writeln!(text, "conditioning: unchanged").unwrap();
    } else {
        writeln!(text, "conditioning: {} step(s)", c.steps.len()).unwrap();
        for s in &c.steps {
            let held = s.certificates.iter().filter(|x| x.verdict.holds()).count();
            writeln!(
                text,
                "  {} {} at {} (outer class checked for {} generator(s))",
                serde_json::to_value(s.kind).unwrap().as_str().unwrap(),
                s.edge.as_deref().unwrap_or("-"),
                s.vertex,
                held
            )
            .unwrap();
        }
    }
    for v in &c.unresolved {
        writeln!(text, "  unresolved vertex: {v}").unwrap();
    }
}

fn conditioned(doc: &Document, group: Option<&str>) -> Result<Done> {
    let (name, k) = doc.select_group(group)?;
    let c = condition(&k)?;
    let graph = doc.groups[&name].graph.clone();
    let out = emit_map_group(&name, &graph, &c.group);
    let mut text = String::new();
    condition_text(&mut text, &c);
    text.push('\n');
    text.push_str(&out);
    let mut json = condition_json(&c);
    json["group"] = json!(name);
    json["document"] = json!(out);
    ok(json, text)
}

fn prepare(doc: &Document, group: Option<&str>, search_bound: usize) -> Result<(String, Conditioned, EssentialData)> {
    let (name, k) = doc.select_group(group)?;
    let cert = abelian_certificate(&k);
    if let Some(w) = cert.witness() {
        return Err(Error::NotAbelian(w.render()));
    }
    let c = condition(&k)?;
    let data = essential_data(&c.group, search_bound)?;
    Ok((name, c, data))
}

fn axes_json(data: &EssentialData) -> Value {
    let g = data.group.graph();
    json!({
        "essential_edges": data.edges.iter().map(|e| json!({
            "edge": e.label,
            "axis": data.axis_of(e).render(g),
            "anchor": e.anchor.render(g),
            "route": e.route,
        })).collect::<Vec<_>>(),
        "axes": data.axes.iter().map(|a| json!({
            "axis": a.render(g),
            "translation": a.translation.render(g),
            "anchor": a.anchor.render(g),
            "multiplicity": a.multiplicity(),
            "edges": a.edges.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "slides": data.slides,
    })
}

fn axes(doc: &Document, group: Option<&str>, search_bound: usize) -> Result<Done> {
    let (name, c, data) = prepare(doc, group, search_bound)?;
    let g = data.group.graph();
    let report = verify_property_a(&data.group, &data);
    let mut text = String::new();
    writeln!(text, "group {name}: {} generator(s)", data.group.rank()).unwrap();
    condition_text(&mut text, &c);
    writeln!(text, "essential edges: {}", data.edges.len()).unwrap();
    for e in &data.edges {
        writeln!(
            text,
            "  {}  axis {}  anchor {}  route {}",
            e.label,
            data.axis_of(e).render(g),
            e.anchor.render(g),
            serde_json::to_value(e.route).unwrap().as_str().unwrap()
        )
        .unwrap();
    }
    writeln!(text, "essential axes: {}", data.axes.len()).unwrap();
    for a in &data.axes {
        let edges: Vec<&str> = a.edges.iter().map(|&e| g.edge_name(e)).collect();
        writeln!(
            text,
            "  {}  translation {}  anchor {}  multiplicity {}  edges {}",
            a.render(g),
            a.translation.render(g),
            a.anchor.render(g),
            a.multiplicity(),
            edges.join(" ")
        )
        .unwrap();
    }
    for s in &data.slides {
        writeln!(text, "slide {} along {}", s.edge, s.path).unwrap();
    }
    let passed = report.passed();
    writeln!(
        text,
        "property A: {} ({} check(s))",
        if passed { "holds" } else { "FAILS" },
        report.items.len()
    )
    .unwrap();
    for f in report.failures() {
        writeln!(
            text,
            "  {} {:?} {}: {}",
            f.edge,
            f.check,
            f.generator.as_deref().unwrap_or("-"),
            f.witness.as_deref().unwrap_or("")
        )
        .unwrap();
    }
    let mut json = axes_json(&data);
    json["group"] = json!(name);
    json["conditioning"] = condition_json(&c);
    json["property_a"] = json!({ "passed": passed, "items": report.items });
    Ok(Done {
        exit: if passed { EXIT_OK } else { EXIT_VIOLATION },
        json,
        text,
    })
}

fn embed(doc: &Document, group: Option<&str>, words: &[String], search_bound: usize) -> Result<Done> {
    let (name, _, data) = prepare(doc, group, search_bound)?;
    let labels = data.labels();
    let width = words.iter().map(|w| w.len()).max().unwrap_or(0).max(4);
    let mut text = format!("{:width$}  {}\n", "word", labels.join(" "));
    let mut rows = Vec::new();
    for w in words {
        let v = twist_coordinates(w, &data)?;
        writeln!(text, "{:width$}  {}", w, v).unwrap();
        rows.push(json!({ "word": w, "coordinates": v.values }));
    }
    ok(
        json!({ "group": name, "essential_edges": labels, "rows": rows }),
        text,
    )
}

fn il(doc: &Document, args: &IlArgs) -> Result<Done> {
    let (name, _, data) = prepare(doc, args.group.as_deref(), args.search_bound)?;
    let axis = match &args.axis {
        Some(a) => data.find_axis(a)?,
        None if !data.axes.is_empty() => 0,
        None => return Err(Error::domain("the group has no essential axis")),
    };
    let bounds = ClassifyBounds {
        radius: args.radius,
        depth: args.depth,
        ..ClassifyBounds::default()
    };
    let r = interesting_lifts(&args.element, &data, axis, args.exp_bound, bounds)?;
    let mut text = format!("group {name}, element {}, axis {}\n", r.element, r.axis);
    if r.identity {
        text.push_str("identity element: every lift commutes and fixes everything; skipped\n");
    } else {
        writeln!(text, "{:>4}  {:>8}  {:>4}  {:>6}  interesting", "k", "commutes", "ends", "fixed").unwrap();
        for c in &r.candidates {
            writeln!(
                text,
                "{:>4}  {:>8}  {:>4}  {:>6}  {}",
                c.exponent,
                yes(c.commutes),
                c.lower_bound,
                c.fixed_vertices,
                yes(c.interesting)
            )
            .unwrap();
        }
        let list = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        writeln!(text, "found: {}", list(&r.found)).unwrap();
        writeln!(text, "predicted: {}", list(&r.predicted)).unwrap();
        writeln!(text, "match: {}", yes(r.matches)).unwrap();
        writeln!(text, "p-differences: {}", list(&r.differences)).unwrap();
        if !r.complete {
            text.push_str("incomplete: a predicted exponent lies outside the window\n");
        }
    }
    let mut json = serde_json::to_value(&r).expect("il report serializes");
    json["group"] = json!(name);
    json["bounds"] = json!({ "radius": args.radius, "depth": args.depth, "exp_bound": args.exp_bound });
    ok(json, text)
}

fn bound(rank: u32) -> Result<Done> {
    let b = index_bound(rank)?;
    let text = format!(
        "rank {}\nD(n) = {}\nD(n) < 3^(n^2) = {}: {}\nvcd bound 2n-3 = {}\nD(n)*D(2n-3) = {}\nD(n)*D(2n-3) < 3^(5n^2): {}\n",
        b.rank,
        b.d_n,
        b.three_n2,
        yes(b.d_n_below),
        b.vcd,
        b.index,
        yes(b.index_below)
    );
    Ok(Done {
        exit: if b.holds() { EXIT_OK } else { EXIT_VIOLATION },
        json: serde_json::to_value(&b).expect("bound serializes"),
        text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const ROSE: &str = "graph R { vertex v; edge a v v; edge b v v }\nmap D on R { b -> b a }\nmap D2 on R { b -> b a a }\ngroup K on R { gens D }\n";

    #[test]
    fn embed_rows() {
        let cmd = Command::Embed {
            group: None,
            words: vec!["D".into(), "D^2".into()],
            search_bound: DEFAULT_SEARCH_BOUND,
        };
        let out = run(ROSE, &cmd, Format::Text);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.stdout, "word  b\nD     (1)\nD^2   (2)\n");
    }

    #[test]
    fn bound_json() {
        let out = run("", &Command::Bound { rank: 2 }, Format::Json);
        assert_eq!(out.exit_code, 0);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["schema"], "kolchin-report/1");
        assert_eq!(v["result"]["d_n"], "48");
        assert_eq!(run("", &Command::Bound { rank: 1 }, Format::Text).exit_code, 1);
    }

    #[test]
    fn parse_errors_exit_one() {
        let out = run("graph R {", &Command::Check, Format::Json);
        assert_eq!(out.exit_code, 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["error"]["kind"], "parse");
    }
}
