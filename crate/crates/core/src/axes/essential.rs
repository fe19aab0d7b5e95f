use serde::Serialize;

use crate::boundary::lift::{deck_difference, lift_fixing_vertex, power_of, DeckElement};
use crate::boundary::ray::LineSpec;
use crate::boundary::splitting::{periodic_splitting, position_on_line, line_vertex};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, FilteredGraph, OrientedEdge, VertexId};
use crate::letter::{self, Letter};
use crate::map::FilteredMap;
use crate::matrix::{big, IntegerMatrix};
use crate::path::{spanning_tree_basis, EdgePath, PathRewriter};

use super::abelian::abelian_certificate;
use super::group::MapGroup;
use super::slide::{slide, Certificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Common root of the suffixes of the restriction kernel.
    Kernel,
    /// Shortest loop fixed by every canonical lift, found by search.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialEdge {
    pub edge: EdgeId,
    pub label: String,
    /// `p_i`: path from the base to the initial vertex of `Ẽ_i^*`.
    pub anchor: EdgePath,
    /// Index into `EssentialData::axes`.
    pub axis: usize,
    pub route: Route,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialAxis {
    /// `ρ`, rotated to start at the preferred splitting vertex.
    pub period: Vec<OrientedEdge>,
    /// `p_α`: path from the base to `ṽ_α`.
    pub anchor: EdgePath,
    /// `T_α = p_α·ρ·p̄_α`.
    pub translation: DeckElement,
    pub edges: Vec<EdgeId>,
}

impl EssentialAxis {
    pub fn multiplicity(&self) -> usize {
        self.edges.len()
    }

    pub fn line(&self) -> LineSpec {
        LineSpec::Periodic {
            anchor: self.anchor.edges().to_vec(),
            period: self.period.clone(),
        }
    }

    pub fn render(&self, g: &FilteredGraph) -> String {
        let v = g.init(self.period[0]);
        EdgePath::from_raw(v, v, self.period.clone()).render(g)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SlideRecord {
    pub edge: String,
    pub path: String,
    pub certificates: Vec<Certificate>,
}

#[derive(Clone, Debug)]
pub struct EssentialData {
    /// The group after the normalizing slides; coordinates refer to it.
    pub group: MapGroup,
    pub edges: Vec<EssentialEdge>,
    pub axes: Vec<EssentialAxis>,
    pub slides: Vec<SlideRecord>,
    /// From the input graph to `group`'s graph.
    pub rewriter: PathRewriter,
}

impl EssentialData {
    pub fn rank(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn axis_of(&self, edge: &EssentialEdge) -> &EssentialAxis {
        &self.axes[edge.axis]
    }

    /// Finds an axis by its rendered period, up to rotation and inversion.
    pub fn find_axis(&self, text: &str) -> Result<usize> {
        let g = self.group.graph();
        for (i, a) in self.axes.iter().enumerate() {
            if a.render(g) == text {
                return Ok(i);
            }
        }
        let v = self.axes.iter().map(|a| g.init(a.period[0])).collect::<Vec<_>>();
        for (i, a) in self.axes.iter().enumerate() {
            if let Ok(p) = EdgePath::parse(g, v[i], text) {
                if letter::cyclic_class(p.edges()) == letter::cyclic_class(&a.period) {
                    return Ok(i);
                }
            }
        }
        Err(Error::domain(format!("`{text}` is not an essential axis")))
    }
}

fn edge_path(g: &FilteredGraph, e: EdgeId) -> EdgePath {
    EdgePath::from_raw(g.edge_init(e), g.edge_term(e), vec![OrientedEdge::forward(e)])
}

/// The coordinate `k` with `s_i(f) = T_α^k ∘ s_α(f)`.
pub(crate) fn coordinate(f: &FilteredMap, anchor: &EdgePath, axis: &EssentialAxis, label: &str) -> Result<i64> {
    let si = lift_fixing_vertex(f, anchor)?;
    let sa = lift_fixing_vertex(f, &axis.anchor)?;
    let delta = deck_difference(&si, &sa)?;
    power_of(&delta, &axis.translation)?.ok_or_else(|| Error::PropertyViolation {
        message: format!("s_{label}(f) and s_alpha(f) do not differ by a power of T_alpha"),
        witness: delta.render(f.graph()),
    })
}

/// `c` with `c·u·c̄ = v` for cyclic words given as plain letter sequences.
fn conjugator<L: Letter>(u: &[L], v: &[L]) -> Option<Vec<L>> {
    let (tu, cu) = letter::cyclic_split(u);
    let (tv, cv) = letter::cyclic_split(v);
    let r = letter::rotation_to(&cu, &cv)?;
    let mut c = tv;
    letter::extend_reduced(&mut c, letter::inverse(&cu[..r]));
    letter::extend_reduced(&mut c, letter::inverse(&tu));
    Some(c)
}

/// A primitive loop at `v`: `t·ρ·t̄` with `ρ` cyclically reduced.
struct Root {
    conjugator: Vec<OrientedEdge>,
    period: Vec<OrientedEdge>,
}

impl Root {
    fn of(w: &[OrientedEdge]) -> Root {
        let (t, c) = letter::cyclic_split(w);
        let d = letter::primitive_period(&c);
        Root {
            conjugator: t,
            period: c[..d].to_vec(),
        }
    }

    fn word(&self) -> Vec<OrientedEdge> {
        let mut w = self.conjugator.clone();
        letter::extend_reduced(&mut w, self.period.iter().copied());
        letter::extend_reduced(&mut w, letter::inverse(&self.conjugator));
        w
    }

    fn invert(self) -> Root {
        Root {
            conjugator: self.conjugator,
            period: letter::inverse(&self.period),
        }
    }
}

pub fn essential_data(k: &MapGroup, search_bound: usize) -> Result<EssentialData> {
    let cert = abelian_certificate(k);
    if let Some(w) = cert.witness() {
        return Err(Error::NotAbelian(w.render()));
    }
    let mut group = k.clone();
    let mut rewriter = PathRewriter::identity(k.graph().clone());
    let mut edges: Vec<EssentialEdge> = Vec::new();
    let mut axes: Vec<EssentialAxis> = Vec::new();
    let mut slides = Vec::new();

    for i in 0..group.graph().edge_count() {
        if group.generators().iter().all(|f| f.suffix_of(i).is_empty()) {
            continue;
        }
        let g = group.graph().clone();
        let name = g.edge_name(i).to_string();
        let basis = spanning_tree_basis(&g, g.base())?;
        let mut p_i = basis.tree_path(g.edge_init(i)).clone();
        let q_i = p_i.join(&edge_path(&g, i));
        let v_i = g.edge_term(i);

        let (root, route) = match kernel_root(&group, i, &edges, &axes)? {
            Some(r) => (r, Route::Kernel),
            None => (search_root(&group, i, v_i, search_bound)?, Route::Search),
        };
        let w = root.word();
        if w.iter().any(|e| e.edge >= i) {
            return Err(Error::Internal {
                message: format!("invariant line for `{name}` leaves G_{i}"),
                witness: EdgePath::from_raw(v_i, v_i, w).render(&g),
            });
        }
        let mut based = q_i.edges().to_vec();
        letter::extend_reduced(&mut based, w.iter().copied());
        letter::extend_reduced(&mut based, letter::inverse(q_i.edges()));

        let class = letter::cyclic_class(&root.period);
        let existing = axes.iter().position(|a| letter::cyclic_class(&a.period) == class);
        let (axis_index, sigma) = match existing {
            Some(ai) => {
                let t = axes[ai].translation.edges();
                let d = conjugator(&based, t)
                    .or_else(|| conjugator(&based, &letter::inverse(t)))
                    .ok_or_else(|| Error::Internal {
                        message: format!("axis of `{name}` projects to an existing axis but is not conjugate to it"),
                        witness: EdgePath::from_raw(g.base(), g.base(), based.clone()).render(&g),
                    })?;
                let d = EdgePath::from_raw(g.base(), g.base(), d);
                p_i = d.join(&p_i);
                let q = p_i.join(&edge_path(&g, i));
                (ai, q.reverse().join(&axes[ai].anchor))
            }
            None => {
                let mut line_anchor = q_i.edges().to_vec();
                letter::extend_reduced(&mut line_anchor, root.conjugator.iter().copied());
                let (anchor, period) = preferred_vertex(&g, &line_anchor, &root.period)?;
                let mut t = anchor.edges().to_vec();
                letter::extend_reduced(&mut t, period.iter().copied());
                letter::extend_reduced(&mut t, letter::inverse(anchor.edges()));
                let sigma = q_i.reverse().join(&anchor);
                axes.push(EssentialAxis {
                    period,
                    anchor,
                    translation: EdgePath::from_raw(g.base(), g.base(), t),
                    edges: Vec::new(),
                });
                (axes.len() - 1, sigma)
            }
        };
        if sigma.edges().iter().any(|e| e.edge >= i) {
            return Err(Error::Internal {
                message: format!("slide path for `{name}` leaves G_{i}"),
                witness: sigma.render(&g),
            });
        }
        if !sigma.is_empty() {
            let s = slide(&group, i, &sigma)?;
            let theta = &s.rewriter;
            p_i = theta.apply(&p_i);
            for e in edges.iter_mut() {
                e.anchor = theta.apply(&e.anchor);
            }
            for a in axes.iter_mut() {
                a.anchor = theta.apply(&a.anchor);
                a.translation = theta.apply(&a.translation);
            }
            slides.push(SlideRecord {
                edge: name.clone(),
                path: sigma.render(&g),
                certificates: s.certificates,
            });
            rewriter = rewriter.then(theta);
            group = s.group;
        }
        let g = group.graph();
        let q = p_i.join(&edge_path(g, i));
        if q != axes[axis_index].anchor {
            return Err(Error::Internal {
                message: format!("terminal vertex of `{name}` misses the splitting vertex after sliding"),
                witness: q.render(g),
            });
        }
        axes[axis_index].edges.push(i);
        edges.push(EssentialEdge {
            edge: i,
            label: name,
            anchor: p_i,
            axis: axis_index,
            route,
        });
    }

    Ok(EssentialData {
        group,
        edges,
        axes,
        slides,
        rewriter,
    })
}

/// Integer kernel of the restriction to `G_{i-1}`, read through the twist
/// coordinates of the lower essential edges.
fn restriction_kernel(group: &MapGroup, edges: &[EssentialEdge], axes: &[EssentialAxis]) -> Result<Vec<Vec<i64>>> {
    let n = group.rank();
    if edges.is_empty() {
        return Ok((0..n).map(|j| (0..n).map(|x| (x == j) as i64).collect()).collect());
    }
    let mut rows = Vec::new();
    for e in edges {
        let mut row = Vec::new();
        for f in group.generators() {
            row.push(big(coordinate(f, &e.anchor, &axes[e.axis], &e.label)?));
        }
        rows.push(row);
    }
    let m = IntegerMatrix::from_rows(rows);
    m.integer_kernel()
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    i64::try_from(x).map_err(|_| Error::Internal {
                        message: "kernel vector entry overflows i64".into(),
                        witness: x.to_string(),
                    })
                })
                .collect()
        })
        .collect()
}

fn kernel_root(group: &MapGroup, i: EdgeId, edges: &[EssentialEdge], axes: &[EssentialAxis]) -> Result<Option<Root>> {
    let g = group.graph();
    let mut suffixes = Vec::new();
    for v in restriction_kernel(group, edges, axes)? {
        let f = group.evaluate_exponents(&v);
        if (0..i).any(|l| !f.suffix_of(l).is_empty()) {
            return Err(Error::Internal {
                message: "kernel element moves a lower edge".into(),
                witness: format!("{v:?}"),
            });
        }
        let u = f.suffix_of(i);
        if !u.is_empty() {
            suffixes.push(u.clone());
        }
    }
    let Some(first) = suffixes.first() else {
        return Ok(None);
    };
    let root = Root::of(first.edges());
    let w = root.word();
    let based = EdgePath::from_raw(g.edge_term(i), g.edge_term(i), w);
    for u in &suffixes {
        if power_of(u, &based)?.is_none() {
            return Err(Error::PropertyViolation {
                message: format!("kernel suffixes at `{}` have no common root", g.edge_name(i)),
                witness: u.render(g),
            });
        }
    }
    Ok(Some(root))
}

/// Shortest reduced loop at `v` in `G_{i-1}` fixed by `x ↦ [u_f·f(x)·ū_f]`
/// for every generator.
fn search_root(group: &MapGroup, i: EdgeId, v: VertexId, bound: usize) -> Result<Root> {
    let g = group.graph();
    let fixed = |x: &EdgePath| {
        group.generators().iter().all(|f| {
            let u = f.suffix_of(i);
            u.join(&f.image(x)).join(&u.reverse()) == *x
        })
    };
    let mut layer = vec![EdgePath::trivial(v)];
    for _ in 0..bound {
        let mut next = Vec::new();
        for p in &layer {
            for d in g.directions(p.end()) {
                if d.edge >= i || p.edges().last() == Some(&d.inverse()) {
                    continue;
                }
                let mut edges = p.edges().to_vec();
                edges.push(d);
                next.push(EdgePath::from_raw(v, g.term(d), edges));
            }
        }
        if let Some(x) = next.iter().find(|x| x.end() == v && fixed(x)) {
            let root = Root::of(x.edges());
            let fwd = letter::lex_min_rotation(&root.period);
            let bwd = letter::lex_min_rotation(&letter::inverse(&root.period));
            return Ok(if bwd < fwd { root.invert() } else { root });
        }
        layer = next;
    }
    Err(Error::SearchExhausted {
        stratum: g.edge_name(i).to_string(),
        bound,
    })
}

/// The splitting vertex of the line `…ρρ·ρρ…` through `anchor` closest to
/// the base, and `ρ` rotated to start there.
fn preferred_vertex(
    g: &FilteredGraph,
    anchor: &[OrientedEdge],
    period: &[OrientedEdge],
) -> Result<(EdgePath, Vec<OrientedEdge>)> {
    let split = periodic_splitting(period)?;
    let n = period.len() as i64;
    let reach = anchor.len() as i64 + 2 * n;
    let mut best: Option<(Vec<OrientedEdge>, i64)> = None;
    for j in -reach..=reach {
        if !split.positions.contains(&(j.rem_euclid(n) as usize)) {
            continue;
        }
        let v = line_vertex(anchor, period, j);
        let better = match &best {
            None => true,
            Some((b, _)) => (v.len(), &v) < (b.len(), b),
        };
        if better {
            best = Some((v, j));
        }
    }
    let (v, j) = best.expect("a periodic line has splitting vertices");
    let rotated = letter::rotate(period, j.rem_euclid(n) as usize);
    let base = g.base();
    let end = v.last().map(|e| g.term(*e)).unwrap_or(base);
    Ok((EdgePath::from_raw(base, end, v), rotated))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Axis,
    Splitting,
    Invariance,
    Coincidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyItem {
    pub edge: String,
    pub generator: Option<String>,
    pub check: CheckKind,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub items: Vec<PropertyItem>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyItem> {
        self.items.iter().filter(|i| !i.passed)
    }
}

pub fn verify_property_a(k: &MapGroup, data: &EssentialData) -> PropertyReport {
    let g = k.graph();
    let mut items = Vec::new();
    let mut item = |edge: &str, generator: Option<&str>, check, witness: Option<String>| {
        items.push(PropertyItem {
            edge: edge.to_string(),
            generator: generator.map(str::to_string),
            check,
            passed: witness.is_none(),
            witness,
        });
    };
    for e in &data.edges {
        let axis = data.axis_of(e);
        let rho = &axis.period;

        let mut t = axis.anchor.edges().to_vec();
        letter::extend_reduced(&mut t, rho.iter().copied());
        letter::extend_reduced(&mut t, letter::inverse(axis.anchor.edges()));
        let axis_bad = if rho.is_empty()
            || !letter::is_cyclically_reduced(rho)
            || letter::primitive_period(rho) != rho.len()
        {
            Some("period is not a primitive cyclically reduced loop".to_string())
        } else if let Some(x) = rho.iter().find(|x| x.edge >= e.edge) {
            Some(format!("period crosses {}", g.oriented_name(*x)))
        } else if t != axis.translation.edges() {
            Some(format!("translation {} is not based at the anchor", axis.translation.render(g)))
        } else {
            None
        };
        item(&e.label, None, CheckKind::Axis, axis_bad);

        let q = e.anchor.join(&edge_path(g, e.edge));
        let split_bad = match periodic_splitting(rho) {
            Err(err) => Some(err.to_string()),
            Ok(split) => match position_on_line(axis.anchor.edges(), rho, q.edges()) {
                None => Some(format!("{} is off the line", q.render(g))),
                Some(j) if !split.positions.contains(&(j.rem_euclid(rho.len() as i64) as usize)) => {
                    Some(format!("{} is not a splitting vertex", q.render(g)))
                }
                Some(0) => None,
                Some(_) => Some(format!("{} differs from {}", q.render(g), axis.anchor.render(g))),
            },
        };
        item(&e.label, None, CheckKind::Splitting, split_bad);

        for (label, f) in k.labels().iter().zip(k.generators()) {
            let bad = match lift_fixing_vertex(f, &e.anchor) {
                Err(err) => Some(err.to_string()),
                Ok(s) => {
                    let moved = s.act_on_deck(&axis.translation);
                    (moved != axis.translation).then(|| {
                        format!("{} -> {}", axis.translation.render(g), moved.render(g))
                    })
                }
            };
            item(&e.label, Some(label), CheckKind::Invariance, bad);
        }
    }
    for (x, a) in data.axes.iter().enumerate() {
        for b in &data.axes[x + 1..] {
            if letter::cyclic_class(&a.period) == letter::cyclic_class(&b.period) {
                let label = g.edge_name(b.edges.first().copied().unwrap_or(0));
                item(label, None, CheckKind::Coincidence, Some(format!("{} duplicated", a.render(g))));
            }
        }
    }
    PropertyReport { items }
}
