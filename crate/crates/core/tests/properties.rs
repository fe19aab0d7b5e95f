mod common;

use kolchin::automorphism::FreeGroupAutomorphism;
use kolchin::axes::{essential_data, twist_coordinates, MapGroup};
use kolchin::boundary::{deck_difference, lift_fixing_vertex, Lift};
use kolchin::io::{emit, parse};
use kolchin::io::emit::emit_map_group;
use kolchin::letter;
use kolchin::oracle::{brute_fixed_words, conjugate_in_free_group, primitive_root};
use kolchin::path::{collapse_edge, spanning_tree_basis, tighten, EdgePath};
use kolchin::{FilteredMap, FreeWord, IntegerMatrix};
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn word(rng: &mut impl Rng, rank: i32, max_len: usize) -> FreeWord {
    let xs: Vec<i32> = (0..rng.gen_range(0..=max_len))
        .map(|_| {
            let g = rng.gen_range(1..=rank);
            if rng.gen() { g } else { -g }
        })
        .collect();
    FreeWord::from_ints(&xs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tighten_normal_form(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let v = rng.gen_range(0..g.vertex_count());
        let p = random_walk(&mut rng, &g, v, 12);
        let t = p.tighten();
        prop_assert!(t.is_reduced());
        prop_assert_eq!(t.tighten(), t.clone());
        prop_assert_eq!((t.start(), t.end()), (p.start(), p.end()));
        let back = tighten(&g, v, [p.edges(), p.reverse().edges()].concat()).unwrap();
        prop_assert_eq!(back, EdgePath::trivial(v));
    }

    #[test]
    fn collapse_keeps_rank(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        for e in (0..g.edge_count()).filter(|&e| !g.is_loop(e)) {
            let (h, theta) = collapse_edge(&g, e).unwrap();
            prop_assert_eq!(h.rank(), g.rank());
            let b = spanning_tree_basis(&g, g.base()).unwrap();
            let hb = spanning_tree_basis(&h, h.base()).unwrap();
            let images: Vec<FreeWord> = b.loops().iter().map(|l| hb.word_of(&theta.apply(&l.path))).collect();
            prop_assert!(images.iter().all(|w| !w.is_identity()));
        }
    }

    #[test]
    fn basis_is_deterministic(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let a = spanning_tree_basis(&g, g.base()).unwrap();
        let b = spanning_tree_basis(&g, g.base()).unwrap();
        prop_assert_eq!(a.labels(), b.labels());
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn map_group_laws(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let (f, h, k) = (random_map(&mut rng, &g, 8), random_map(&mut rng, &g, 8), random_map(&mut rng, &g, 8));
        let fh = f.compose(&h).unwrap();
        for i in 0..g.edge_count() {
            prop_assert_eq!(&fh.suffixes()[i], &f.suffixes()[i].join(&f.image(&h.suffixes()[i])));
        }
        prop_assert_eq!(fh.compose(&k).unwrap(), f.compose(&h.compose(&k).unwrap()).unwrap());
        let id = FilteredMap::identity(g.clone());
        prop_assert_eq!(f.compose(&f.invert()).unwrap(), id.clone());
        prop_assert_eq!(f.invert().compose(&f).unwrap(), id);
        prop_assert!(f.equal(&f).unwrap());
        let f2 = f.compose(&h).unwrap().compose(&h.invert()).unwrap();
        prop_assert!(f2.equal(&f).unwrap());
        prop_assert_eq!(f2.compose(&k).unwrap(), f.compose(&k).unwrap());
    }

    #[test]
    fn homology_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let (f, h) = (random_map(&mut rng, &g, 8), random_map(&mut rng, &g, 8));
        let m = f.compose(&h).unwrap().homology_action();
        prop_assert_eq!(m, f.homology_action().mul(&h.homology_action()));
        let a = f.homology_action();
        prop_assert!(a.is_unit_upper_triangular());
        let n = g.edge_count();
        prop_assert!(a.sub(&IntegerMatrix::identity(n)).pow(n as u32).is_zero());
        prop_assert!(f.is_unipotent());
    }

    #[test]
    fn apply_respects_tightening(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let f = random_map(&mut rng, &g, 8);
        let v = rng.gen_range(0..g.vertex_count());
        let p = random_walk(&mut rng, &g, v, 10);
        let image = f.apply(&p).unwrap();
        prop_assert!(image.is_reduced());
        prop_assert_eq!((image.start(), image.end()), (p.start(), p.end()));
        prop_assert_eq!(f.apply(&p.tighten()).unwrap(), image);
    }

    #[test]
    fn induced_automorphism_is_functorial(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let (f, h) = (random_map(&mut rng, &g, 6), random_map(&mut rng, &g, 6));
        let b = spanning_tree_basis(&g, g.base()).unwrap();
        let fh = f.compose(&h).unwrap().induced_automorphism(&b).unwrap();
        let composed = f.induced_automorphism(&b).unwrap().compose(&h.induced_automorphism(&b).unwrap());
        prop_assert_eq!(fh, composed);
    }

    #[test]
    fn lift_composition_and_deck_difference(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        prop_assume!(g.rank() > 0);
        let (f, h) = (random_map(&mut rng, &g, 6), random_map(&mut rng, &g, 6));
        let b = spanning_tree_basis(&g, g.base()).unwrap();
        let deck = |rng: &mut rand_chacha::ChaCha8Rng| b.loop_of(&word(rng, b.rank() as i32, 4));
        let l1 = Lift::new(f.clone(), deck(&mut rng)).unwrap();
        let l2 = Lift::new(h, deck(&mut rng)).unwrap();
        let lhs = l1.compose(&l2).unwrap().automorphism(&b).unwrap();
        let rhs = l1.automorphism(&b).unwrap().compose(&l2.automorphism(&b).unwrap());
        for _ in 0..8 {
            let w = word(&mut rng, b.rank() as i32, 8);
            prop_assert_eq!(lhs.apply(&w), rhs.apply(&w));
        }

        let p = random_path(&mut rng, &g, g.base(), 6);
        let lp = lift_fixing_vertex(&f, &p).unwrap();
        prop_assert!(lp.fixes_vertex(&p));
        let delta = deck_difference(&l1, &lp).unwrap();
        let inner = FreeGroupAutomorphism::inner(b.rank(), &b.word_of(&delta));
        let expected = inner.compose(&lp.automorphism(&b).unwrap());
        for _ in 0..8 {
            let w = word(&mut rng, b.rank() as i32, 8);
            prop_assert_eq!(l1.automorphism(&b).unwrap().apply(&w), expected.apply(&w));
        }
    }

    #[test]
    fn fixed_words_form_a_subgroup(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = rose_of(3);
        let f = random_map(&mut rng, &g, 4);
        let b = spanning_tree_basis(&g, g.base()).unwrap();
        let phi = f.induced_automorphism(&b).unwrap();
        let fixed = brute_fixed_words(&phi, 3);
        for u in &fixed {
            prop_assert_eq!(phi.apply(u), u.clone());
            prop_assert!(fixed.contains(&u.inverse()));
            for v in &fixed {
                let uv = u.mul(v);
                prop_assert!(uv.len() > 3 || fixed.contains(&uv));
            }
        }
    }

    #[test]
    fn primitive_root_round_trip(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let rho = word(&mut rng, 3, 5);
        prop_assume!(!rho.is_identity() && letter::is_cyclically_reduced(rho.letters()));
        let r = primitive_root(&rho).unwrap();
        let tau = word(&mut rng, 3, 4);
        let k = rng.gen_range(1..=4u64);
        let w = r.root.pow((r.exponent * k) as i64).conjugate_by(&r.conjugator.mul(&tau));
        let again = primitive_root(&w).unwrap();
        prop_assert_eq!(again.exponent, r.exponent * k);
        prop_assert_eq!(again.assemble(), w);
        prop_assert_eq!(letter::cyclic_class(again.root.letters()), letter::cyclic_class(r.root.letters()));
    }

    #[test]
    fn conjugacy_is_symmetric_and_transitive(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let u = word(&mut rng, 3, 6);
        let (c1, c2) = (word(&mut rng, 3, 4), word(&mut rng, 3, 4));
        let v = u.conjugate_by(&c1);
        let w = v.conjugate_by(&c2);
        let uv = conjugate_in_free_group(&u, &v).unwrap();
        let vu = conjugate_in_free_group(&v, &u).unwrap();
        prop_assert_eq!(u.conjugate_by(&uv), v.clone());
        prop_assert_eq!(v.conjugate_by(&vu), u.clone());
        let vw = conjugate_in_free_group(&v, &w).unwrap();
        prop_assert_eq!(u.conjugate_by(&vw.mul(&uv)), w.clone());
        prop_assert!(conjugate_in_free_group(&u, &w).is_some());
    }

    #[test]
    fn emit_then_parse_is_identity(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let g = random_graph(&mut rng, 3, 6);
        let gens: Vec<(String, FilteredMap)> =
            (0..rng.gen_range(1..=3)).map(|i| (format!("f{i}"), random_map(&mut rng, &g, 8))).collect();
        let k = MapGroup::new(g, gens).unwrap();
        let text = emit_map_group("K", "G", &k);
        let doc = parse(&text).unwrap();
        prop_assert_eq!(doc.group("K").unwrap(), k);
        let canon = emit(&doc);
        prop_assert_eq!(parse(&canon).unwrap(), doc);
        prop_assert_eq!(emit(&parse(&canon).unwrap()), canon);
    }
}

fn rose_of(n: usize) -> std::sync::Arc<kolchin::FilteredGraph> {
    let mut d = kolchin::GraphDecl::new().vertex("v");
    for i in 0..n {
        d = d.edge(&format!("x{i}"), "v", "v");
    }
    std::sync::Arc::new(kolchin::FilteredGraph::new(&d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn twist_coordinates_are_additive(seed in any::<u64>(), which in 0..ABELIAN_CORPUS.len()) {
        let mut rng = rng(seed);
        let (_, data) = prepared(ABELIAN_CORPUS[which]);
        let labels = data.group.labels().to_vec();
        let (w1, w2) = (random_group_word(&mut rng, &labels, 4), random_group_word(&mut rng, &labels, 4));
        let t = |w: &str| twist_coordinates(w, &data).unwrap();
        prop_assert_eq!(t(&format!("{w1}.{w2}")), t(&w1).add(&t(&w2)));
        if t(&w1).is_zero() {
            prop_assert!(data.group.evaluate_str(&w1).unwrap().is_identity());
        }
    }
}

#[test]
fn essential_data_ignores_generator_order() {
    for name in ABELIAN_CORPUS {
        let (_, data) = prepared(name);
        let k = &data.group;
        let reversed: Vec<(String, FilteredMap)> = k
            .labels()
            .iter()
            .cloned()
            .zip(k.generators().iter().cloned())
            .rev()
            .collect();
        let r = MapGroup::new(k.graph().clone(), reversed).unwrap();
        let other = essential_data(&r, 8).unwrap();
        let h = k.graph();
        let edges = |d: &kolchin::EssentialData| -> Vec<(String, String)> {
            let mut v: Vec<_> = d.edges.iter().map(|e| (e.label.clone(), d.axis_of(e).render(h))).collect();
            v.sort();
            v
        };
        let axes = |d: &kolchin::EssentialData| -> Vec<(String, usize)> {
            let mut v: Vec<_> = d.axes.iter().map(|a| (a.render(h), a.multiplicity())).collect();
            v.sort();
            v
        };
        assert_eq!(edges(&data), edges(&other), "{name}");
        assert_eq!(axes(&data), axes(&other), "{name}");
    }
}

#[test]
fn interesting_lifts_match_prediction_on_the_corpus() {
    use kolchin::axes::interesting_lifts;
    use kolchin::boundary::ClassifyBounds;
    let bounds = ClassifyBounds {
        radius: 5,
        ..ClassifyBounds::default()
    };
    for name in ["rose", "dehn", "rose3_pair", "rose4"] {
        let (_, data) = prepared(name);
        for axis in 0..data.axes.len() {
            for label in data.group.labels() {
                let r = interesting_lifts(label, &data, axis, 4, bounds).unwrap();
                if r.identity || !r.complete {
                    continue;
                }
                assert_eq!(r.found, r.predicted, "{name} {label} axis {axis}");
            }
        }
    }
}
