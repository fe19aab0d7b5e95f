use std::sync::Arc;

use indexmap::IndexMap;

use crate::axes::MapGroup;
use crate::error::{Error, Result};
use crate::graph::{FilteredGraph, GraphDecl, OrientedEdge};
use crate::map::FilteredMap;
use crate::path::EdgePath;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct GraphEntry {
    pub graph: Arc<FilteredGraph>,
    pub span: Span,
}

#[derive(Clone, Debug)]
pub struct MapEntry {
    pub graph: String,
    pub map: FilteredMap,
    pub span: Span,
}

#[derive(Clone, Debug)]
pub struct GroupEntry {
    pub graph: String,
    pub gens: Vec<String>,
    pub span: Span,
}

/// Parsed graphs, maps and groups, in declaration order. Equality ignores
/// source positions.
#[derive(Clone, Debug, Default)]
pub struct Document {
    pub graphs: IndexMap<String, GraphEntry>,
    pub maps: IndexMap<String, MapEntry>,
    pub groups: IndexMap<String, GroupEntry>,
}

impl PartialEq for Document {
    fn eq(&self, other: &Self) -> bool {
        self.graphs.len() == other.graphs.len()
            && self.maps.len() == other.maps.len()
            && self.groups.len() == other.groups.len()
            && self
                .graphs
                .iter()
                .zip(&other.graphs)
                .all(|((a, x), (b, y))| a == b && x.graph == y.graph)
            && self
                .maps
                .iter()
                .zip(&other.maps)
                .all(|((a, x), (b, y))| a == b && x.graph == y.graph && x.map == y.map)
            && self
                .groups
                .iter()
                .zip(&other.groups)
                .all(|((a, x), (b, y))| a == b && x.graph == y.graph && x.gens == y.gens)
    }
}

impl Eq for Document {}

impl Document {
    pub fn graph(&self, name: &str) -> Result<&Arc<FilteredGraph>> {
        self.graphs
            .get(name)
            .map(|g| &g.graph)
            .ok_or_else(|| Error::domain(format!("unknown graph `{name}`")))
    }

    pub fn map(&self, name: &str) -> Result<&FilteredMap> {
        self.maps
            .get(name)
            .map(|m| &m.map)
            .ok_or_else(|| Error::domain(format!("unknown map `{name}`")))
    }

    pub fn group(&self, name: &str) -> Result<MapGroup> {
        let entry = self
            .groups
            .get(name)
            .ok_or_else(|| Error::domain(format!("unknown group `{name}`")))?;
        let graph = self.graph(&entry.graph)?.clone();
        let gens = entry
            .gens
            .iter()
            .map(|m| Ok((m.clone(), self.map(m)?.clone())))
            .collect::<Result<Vec<_>>>()?;
        MapGroup::new(graph, gens)
    }

    /// The named group, or the only group when no name is given.
    pub fn select_group(&self, name: Option<&str>) -> Result<(String, MapGroup)> {
        match name {
            Some(n) => Ok((n.to_string(), self.group(n)?)),
            None if self.groups.len() == 1 => {
                let n = self.groups.keys().next().unwrap().clone();
                let k = self.group(&n)?;
                Ok((n, k))
            }
            None if self.groups.is_empty() => Err(Error::domain("the document declares no group")),
            None => Err(Error::domain("the document declares several groups; pass --group")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Open,
    Close,
    Semi,
    Newline,
    Arrow,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: Span,
}

fn err(span: Span, message: impl Into<String>) -> Error {
    Error::Parse {
        line: span.line,
        col: span.col,
        message: message.into(),
    }
}

fn lex(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    for (l, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (_, c) = chars[i];
            let span = Span {
                line: l + 1,
                col: line[..chars[i].0].chars().count() + 1,
            };
            let single = match c {
                '{' => Some(Tok::Open),
                '}' => Some(Tok::Close),
                ';' => Some(Tok::Semi),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Token { tok, span });
                i += 1;
            } else if c.is_whitespace() {
                i += 1;
            } else {
                let start = i;
                while i < chars.len() && !chars[i].1.is_whitespace() && !"{};".contains(chars[i].1) {
                    i += 1;
                }
                let from = chars[start].0;
                let to = chars.get(i).map_or(line.len(), |x| x.0);
                let word = &line[from..to];
                let tok = if word == "->" { Tok::Arrow } else { Tok::Word(word.to_string()) };
                out.push(Token { tok, span });
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            span: Span {
                line: l + 1,
                col: line.chars().count() + 1,
            },
        });
    }
    out
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn end_span(&self) -> Span {
        self.toks.last().map_or(Span { line: 1, col: 1 }, |t| t.span)
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Token { tok: Tok::Newline, .. })) {
            self.pos += 1;
        }
    }

    fn word(&mut self, what: &str) -> Result<(String, Span)> {
        match self.toks.get(self.pos) {
            Some(Token {
                tok: Tok::Word(w),
                span,
            }) => {
                self.pos += 1;
                Ok((w.clone(), *span))
            }
            Some(t) => Err(err(t.span, format!("expected {what}"))),
            None => Err(err(self.end_span(), format!("expected {what}, found end of input"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Span> {
        let (w, span) = self.word(&format!("`{kw}`"))?;
        if w != kw {
            return Err(err(span, format!("expected `{kw}`, found `{w}`")));
        }
        Ok(span)
    }

    fn open(&mut self) -> Result<()> {
        self.skip_newlines();
        match self.peek() {
            Some(Token { tok: Tok::Open, .. }) => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(err(t.span, "expected `{`")),
            None => Err(err(self.end_span(), "expected `{`, found end of input")),
        }
    }

    /// Statements up to the closing brace; each is a non-empty token run.
    fn block(&mut self) -> Result<Vec<Vec<Token>>> {
        let mut stmts = Vec::new();
        let mut cur = Vec::new();
        loop {
            let Some(t) = self.toks.get(self.pos).cloned() else {
                return Err(err(self.end_span(), "unclosed `{`"));
            };
            self.pos += 1;
            match t.tok {
                Tok::Close => {
                    if !cur.is_empty() {
                        stmts.push(cur);
                    }
                    return Ok(stmts);
                }
                Tok::Semi | Tok::Newline => {
                    if !cur.is_empty() {
                        stmts.push(std::mem::take(&mut cur));
                    }
                }
                Tok::Open => return Err(err(t.span, "unexpected `{`")),
                _ => cur.push(t),
            }
        }
    }
}

fn word_of(t: &Token) -> Result<&str> {
    match &t.tok {
        Tok::Word(w) => Ok(w),
        Tok::Arrow => Err(err(t.span, "unexpected `->`")),
        _ => Err(err(t.span, "unexpected token")),
    }
}

pub fn parse(text: &str) -> Result<Document> {
    let mut p = Parser { toks: lex(text), pos: 0 };
    let mut doc = Document::default();
    loop {
        p.skip_newlines();
        let Some(t) = p.peek().cloned() else { break };
        let (kw, span) = p.word("`graph`, `map` or `group`")?;
        match kw.as_str() {
            "graph" => parse_graph(&mut p, &mut doc, span)?,
            "map" => parse_map(&mut p, &mut doc, span)?,
            "group" => parse_group(&mut p, &mut doc, span)?,
            other => {
                return Err(err(
                    t.span,
                    format!("expected `graph`, `map` or `group`, found `{other}`"),
                ))
            }
        }
    }
    Ok(doc)
}

fn parse_graph(p: &mut Parser, doc: &mut Document, span: Span) -> Result<()> {
    let (name, name_span) = p.word("a graph name")?;
    if doc.graphs.contains_key(&name) {
        return Err(err(name_span, format!("duplicate graph `{name}`")));
    }
    p.open()?;
    let mut decl = GraphDecl::new();
    for stmt in p.block()? {
        let head = word_of(&stmt[0])?;
        match head {
            "vertex" => {
                if stmt.len() < 2 {
                    return Err(err(stmt[0].span, "`vertex` needs a name"));
                }
                for t in &stmt[1..] {
                    let v = word_of(t)?;
                    if decl.vertices.iter().any(|x| x == v) {
                        return Err(err(t.span, format!("duplicate vertex `{v}`")));
                    }
                    decl = decl.vertex(v);
                }
            }
            "edge" => {
                if stmt.len() != 4 {
                    return Err(err(stmt[0].span, "expected `edge <name> <init> <term>`"));
                }
                let (e, a, b) = (word_of(&stmt[1])?, word_of(&stmt[2])?, word_of(&stmt[3])?);
                if e.starts_with('~') {
                    return Err(err(stmt[1].span, "edge names may not start with `~`"));
                }
                if decl.edges.iter().any(|x| x.name == e) {
                    return Err(err(stmt[1].span, format!("duplicate edge `{e}`")));
                }
                for (v, t) in [(a, &stmt[2]), (b, &stmt[3])] {
                    if !decl.vertices.iter().any(|x| x == v) {
                        return Err(err(t.span, format!("unknown vertex `{v}`")));
                    }
                }
                decl = decl.edge(e, a, b);
            }
            other => {
                return Err(err(
                    stmt[0].span,
                    format!("expected `vertex` or `edge`, found `{other}`"),
                ))
            }
        }
    }
    if decl.vertices.is_empty() {
        return Err(err(span, format!("graph `{name}` has no vertices")));
    }
    let graph = FilteredGraph::new(&decl).map_err(|e| err(span, e.to_string()))?;
    doc.graphs.insert(
        name,
        GraphEntry {
            graph: Arc::new(graph),
            span,
        },
    );
    Ok(())
}

fn on_graph(p: &mut Parser, doc: &Document) -> Result<(String, Arc<FilteredGraph>)> {
    p.keyword("on")?;
    let (g, gspan) = p.word("a graph name")?;
    let graph = doc
        .graphs
        .get(&g)
        .ok_or_else(|| err(gspan, format!("unknown graph `{g}`")))?
        .graph
        .clone();
    Ok((g, graph))
}

fn parse_map(p: &mut Parser, doc: &mut Document, span: Span) -> Result<()> {
    let (name, name_span) = p.word("a map name")?;
    if doc.maps.contains_key(&name) {
        return Err(err(name_span, format!("duplicate map `{name}`")));
    }
    let (gname, graph) = on_graph(p, doc)?;
    p.open()?;
    let mut given: Vec<(usize, EdgePath)> = Vec::new();
    for stmt in p.block()? {
        let lhs = word_of(&stmt[0])?;
        let e = graph
            .edge_id(lhs)
            .ok_or_else(|| err(stmt[0].span, format!("unknown edge `{lhs}`")))?;
        if given.iter().any(|(x, _)| *x == e) {
            return Err(err(stmt[0].span, format!("edge `{lhs}` is mapped twice")));
        }
        if stmt.get(1).map(|t| &t.tok) != Some(&Tok::Arrow) {
            return Err(err(stmt.get(1).map_or(stmt[0].span, |t| t.span), "expected `->`"));
        }
        let rhs = &stmt[2..];
        let first_ok = rhs
            .first()
            .map(|t| word_of(t).ok() == Some(lhs))
            .unwrap_or(false);
        if !first_ok {
            let at = rhs.first().map_or(stmt[1].span, |t| t.span);
            return Err(err(at, format!("image of `{lhs}` must begin with `{lhs}`")));
        }
        let mut suffix = Vec::new();
        for t in &rhs[1..] {
            let w = word_of(t)?;
            let oe: OrientedEdge = graph
                .parse_oriented(w)
                .ok_or_else(|| err(t.span, format!("unknown edge `{w}`")))?;
            if oe.edge >= e {
                return Err(err(
                    t.span,
                    format!("suffix of `{lhs}` escapes G_{e}: `{w}` is not below `{lhs}`"),
                ));
            }
            suffix.push(oe);
        }
        let at = rhs.get(1).map_or(rhs[0].span, |t| t.span);
        let path = EdgePath::new(&graph, graph.edge_term(e), suffix).map_err(|x| err(at, x.to_string()))?;
        if !path.is_loop() {
            return Err(err(at, format!("suffix of `{lhs}` must be a loop at its terminal vertex")));
        }
        if !path.is_reduced() {
            return Err(err(at, format!("suffix of `{lhs}` is not reduced")));
        }
        given.push((e, path));
    }
    let map = FilteredMap::from_suffixes(graph, &given).map_err(|x| err(span, x.to_string()))?;
    doc.maps.insert(
        name,
        MapEntry {
            graph: gname,
            map,
            span,
        },
    );
    Ok(())
}

fn parse_group(p: &mut Parser, doc: &mut Document, span: Span) -> Result<()> {
    let (name, name_span) = p.word("a group name")?;
    if doc.groups.contains_key(&name) {
        return Err(err(name_span, format!("duplicate group `{name}`")));
    }
    let (gname, _) = on_graph(p, doc)?;
    p.open()?;
    let mut gens = Vec::new();
    for stmt in p.block()? {
        let head = word_of(&stmt[0])?;
        if head != "gens" {
            return Err(err(stmt[0].span, format!("expected `gens`, found `{head}`")));
        }
        for t in &stmt[1..] {
            let m = word_of(t)?;
            let entry = doc
                .maps
                .get(m)
                .ok_or_else(|| err(t.span, format!("unknown map `{m}`")))?;
            if entry.graph != gname {
                return Err(err(t.span, format!("map `{m}` is on `{}`, not `{gname}`", entry.graph)));
            }
            if gens.iter().any(|x| x == m) {
                return Err(err(t.span, format!("generator `{m}` listed twice")));
            }
            gens.push(m.to_string());
        }
    }
    doc.groups.insert(
        name,
        GroupEntry {
            graph: gname,
            gens,
            span,
        },
    );
    Ok(())
}
