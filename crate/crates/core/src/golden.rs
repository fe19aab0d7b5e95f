//! Frozen reference values. Each record is one line,
//! `op_id<TAB>input<TAB>output`, with inputs and outputs in the canonical
//! single-line renderings used throughout the crate.

use crate::automorphism::FreeGroupAutomorphism;
use crate::axes::{essential_data, index_bound, interesting_lifts, twist_coordinates};
use crate::boundary::{classify_fixed_points, fixed_vertices, splitting_translation, ClassifyBounds, Lift, LineSpec};
use crate::io::parse;
use crate::oracle::{brute_fixed_words, conjugate_in_free_group, primitive_root, same_outer_class, Outcome};
use crate::path::EdgePath;
use crate::word::FreeWord;

pub const CORPUS: &[(&str, &str)] = &[
    ("rose", include_str!("../corpus/rose.kg")),
    ("dehn", include_str!("../corpus/dehn.kg")),
    ("rose3_pair", include_str!("../corpus/rose3_pair.kg")),
    ("rose3_single", include_str!("../corpus/rose3_single.kg")),
    ("rose3_slide", include_str!("../corpus/rose3_slide.kg")),
    ("rose4", include_str!("../corpus/rose4.kg")),
    ("nonabelian", include_str!("../corpus/nonabelian.kg")),
    ("quadratic", include_str!("../corpus/quadratic.kg")),
    ("stem", include_str!("../corpus/stem.kg")),
    ("collapse", include_str!("../corpus/collapse.kg")),
    ("valence_one", include_str!("../corpus/valence_one.kg")),
    ("loop_slide", include_str!("../corpus/loop_slide.kg")),
];

pub fn corpus(name: &str) -> &'static str {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .unwrap_or_else(|| panic!("no corpus document `{name}`"))
}

const AB: &[&str] = &["a", "b"];

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn word(ints: &[i32]) -> FreeWord {
    FreeWord::from_ints(ints)
}

fn words(ws: &[FreeWord], l: &[String]) -> String {
    let v: Vec<String> = ws.iter().map(|w| w.render(l)).collect();
    format!("[{}]", v.join(", "))
}

fn render_aut(phi: &FreeGroupAutomorphism, l: &[String]) -> String {
    let parts: Vec<String> = phi.render(l).into_iter().map(|(g, w)| format!("{g}->{w}")).collect();
    parts.join(", ")
}

struct Records(Vec<String>);

impl Records {
    fn push(&mut self, op: &str, input: impl AsRef<str>, output: impl AsRef<str>) {
        let clean = |s: &str| s.replace(['\t', '\n'], " ");
        self.0.push(format!("{op}\t{}\t{}", clean(input.as_ref()), clean(output.as_ref())));
    }
}

/// Every golden record, in a fixed order.
pub fn generate() -> String {
    let mut r = Records(Vec::new());
    let l = labels(AB);
    let dehn = FreeGroupAutomorphism::new(vec![word(&[1]), word(&[2, 1])]).unwrap();

    for len in [2, 3, 4] {
        r.push(
            "brute_fixed_words",
            format!("{} L={len}", render_aut(&dehn, &l)),
            words(&brute_fixed_words(&dehn, len), &l),
        );
    }
    r.push(
        "brute_fixed_words",
        "a->a, b->b L=1",
        words(&brute_fixed_words(&FreeGroupAutomorphism::identity(2), 1), &l),
    );

    let pairs: &[(&[i32], &[i32])] = &[(&[1, 2], &[2, 1]), (&[1], &[2]), (&[1, 2], &[1, 2]), (&[1, 2, -1], &[2]), (&[2, 1, 1, -2], &[1, 1])];
    for (u, v) in pairs {
        let (u, v) = (word(u), word(v));
        let out = conjugate_in_free_group(&u, &v).map_or("none".to_string(), |c| c.render(&l));
        r.push("conjugate", format!("{} ~ {}", u.render(&l), v.render(&l)), out);
    }

    let roots: &[&[i32]] = &[&[1, 2, 1, 2], &[1], &[1, 2, 2, 2, -1], &[2, 1, -2, 2, 1, -2]];
    for w in roots {
        let w = word(w);
        let p = primitive_root(&w).unwrap();
        r.push(
            "primitive_root",
            w.render(&l),
            format!("{} {} ^{}", p.conjugator.render(&l), p.root.render(&l), p.exponent),
        );
    }

    let doc = parse(corpus("rose")).unwrap();
    let d = doc.map("D").unwrap().clone();
    let g = d.graph().clone();
    let path = |s: &str| EdgePath::parse(&g, g.base(), s).unwrap();
    for (name, other) in [("D", d.clone()), ("D^2", d.pow(2)), ("1", crate::map::FilteredMap::identity(g.clone()))] {
        let v = same_outer_class(&d, &other, 4).unwrap();
        let out = match v.outcome {
            Outcome::Holds => format!("holds@{}", v.bound),
            Outcome::Fails { witness } => format!("fails {witness}@{}", v.bound),
            Outcome::Inconclusive => format!("inconclusive@{}", v.bound),
        };
        r.push("same_outer_class", format!("rose D vs {name} L=4"), out);
    }

    for twist in ["1@v", "a a", "a"] {
        let gamma = if twist == "1@v" { EdgePath::trivial(g.base()) } else { path(twist) };
        let lift = Lift::new(d.clone(), gamma).unwrap();
        let fixed: Vec<String> = fixed_vertices(&lift, 3).iter().map(|p| p.render(&g)).collect();
        r.push("fixed_vertices", format!("rose D twist {twist} radius 3"), format!("[{}]", fixed.join(", ")));
        let c = classify_fixed_points(
            &lift,
            ClassifyBounds {
                radius: 4,
                ..ClassifyBounds::default()
            },
        )
        .unwrap();
        let ends: Vec<String> = c.witnesses.iter().map(|w| w.render(&g)).collect();
        r.push(
            "classify",
            format!("rose D twist {twist} radius 4"),
            format!("ends>={} exactly_two={} [{}]", c.lower_bound, c.exactly_two, ends.join(", ")),
        );
    }

    let axis = LineSpec::axis_of(&path("a")).unwrap();
    for twist in ["1@v", "a", "~a ~a", "a a a"] {
        let gamma = if twist == "1@v" { EdgePath::trivial(g.base()) } else { path(twist) };
        let lift = Lift::new(d.clone(), gamma).unwrap();
        r.push(
            "splitting_translation",
            format!("rose D twist {twist} line (a)"),
            splitting_translation(&lift, &axis).unwrap().to_string(),
        );
    }

    for name in ["rose", "dehn", "rose3_pair", "rose3_single", "rose3_slide", "rose4", "collapse", "loop_slide"] {
        let doc = parse(corpus(name)).unwrap();
        let (_, k) = doc.select_group(None).unwrap();
        let c = crate::axes::condition(&k).unwrap();
        let data = essential_data(&c.group, 8).unwrap();
        let h = data.group.graph();
        let edges: Vec<String> = data
            .edges
            .iter()
            .map(|e| format!("{}:{}", e.label, data.axis_of(e).render(h)))
            .collect();
        let axes: Vec<String> = data
            .axes
            .iter()
            .map(|a| format!("{} T={} m={}", a.render(h), a.translation.render(h), a.multiplicity()))
            .collect();
        r.push(
            "essential_data",
            name,
            format!("edges [{}] axes [{}]", edges.join(", "), axes.join("; ")),
        );
        for gen in data.group.labels().to_vec() {
            let v = twist_coordinates(&gen, &data).unwrap();
            r.push("twist_coordinates", format!("{name} {gen}"), v.to_string());
        }
    }

    let doc = parse(corpus("rose")).unwrap();
    let (_, k) = doc.select_group(None).unwrap();
    let data = essential_data(&k, 8).unwrap();
    for e in -3..=3 {
        let w = format!("D^{e}");
        r.push("twist_coordinates", format!("rose {w}"), twist_coordinates(&w, &data).unwrap().to_string());
    }
    let il = interesting_lifts(
        "D",
        &data,
        0,
        3,
        ClassifyBounds {
            radius: 4,
            ..ClassifyBounds::default()
        },
    )
    .unwrap();
    r.push(
        "interesting_lifts",
        "rose D axis a exp 3 radius 4",
        format!("found {:?} predicted {:?} p {:?}", il.found, il.predicted, il.differences),
    );

    for n in 2..=8 {
        let b = index_bound(n).unwrap();
        r.push(
            "index_bound",
            format!("n={n}"),
            format!("D={} D*D(2n-3)={} below={}", b.d_n, b.index, b.holds()),
        );
    }

    for name in ["rose", "dehn", "quadratic"] {
        let doc = parse(corpus(name)).unwrap();
        for (m, entry) in &doc.maps {
            let f = &entry.map;
            let gr = f.growth_degree();
            let m_rows: Vec<String> = f.homology_action().to_strings().iter().map(|r| r.join(" ")).collect();
            r.push("homology", format!("{name} {m}"), format!("[{}]", m_rows.join("; ")));
            r.push(
                "growth_degree",
                format!("{name} {m}"),
                format!("{:?} empirical {:?}", gr.combinatorial(), gr.empirical()),
            );
        }
    }

    let mut out = r.0.join("\n");
    out.push('\n');
    out
}
