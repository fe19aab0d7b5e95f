use kolchin::golden::{corpus, CORPUS};
use kolchin::io::{emit, parse, run, Command, Format, IlArgs, DEFAULT_SEARCH_BOUND};
use kolchin::Error;

fn axes() -> Command {
    Command::Axes {
        group: None,
        search_bound: DEFAULT_SEARCH_BOUND,
    }
}

#[test]
fn corpus_round_trips() {
    for (name, text) in CORPUS {
        let doc = parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let canon = emit(&doc);
        let again = parse(&canon).unwrap();
        assert_eq!(again, doc, "{name}");
        assert_eq!(emit(&again), canon, "{name}");
    }
}

#[test]
fn dehn_document_parses() {
    let doc = parse(corpus("dehn")).unwrap();
    let f = doc.map("f").unwrap();
    let g = f.graph();
    assert_eq!(g.edge_count(), 5);
    let e2 = g.edge_id("E2").unwrap();
    assert_eq!(f.suffix_of(e2).render(g), "E1");
    for e in ["E1", "E3", "E4", "E5"] {
        assert!(f.suffix_of(g.edge_id(e).unwrap()).is_empty());
    }
}

#[test]
fn parse_rejects_non_triangular_input() {
    let bad = [
        ("graph R { vertex v; edge a v v; edge b v v }\nmap D on R { b -> a b }", 2, 19),
        ("graph R { vertex v; edge a v v; edge b v v }\nmap D on R { a -> a b }", 2, 21),
        ("graph R { vertex v; edge a v v }\nmap D on S { a -> a }", 2, 10),
        ("graph R { vertex v; edge a v w }", 1, 30),
    ];
    for (text, line, col) in bad {
        match parse(text) {
            Err(Error::Parse { line: l, col: c, .. }) => assert_eq!((l, c), (line, col), "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn reports_are_deterministic() {
    let commands = [
        Command::Check,
        Command::Upg { group: None },
        Command::Abelian { group: None },
        Command::Condition { group: None },
        axes(),
        Command::Embed {
            group: None,
            words: vec!["f".into(), "g^2.~f".into()],
            search_bound: DEFAULT_SEARCH_BOUND,
        },
    ];
    for cmd in &commands {
        for format in [Format::Text, Format::Json] {
            let a = run(corpus("rose3_slide"), cmd, format);
            let b = run(corpus("rose3_slide"), cmd, format);
            assert_eq!(a, b, "{}", cmd.name());
            assert_eq!(a.exit_code, 0, "{}: {}", cmd.name(), a.stdout);
        }
    }
}

#[test]
fn json_envelope() {
    let out = run(corpus("rose"), &axes(), Format::Json);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema"], "kolchin-report/1");
    assert_eq!(v["command"], "axes");
    assert_eq!(v["exit_code"], 0);
    assert!(v["error"].is_null());
    assert_eq!(v["result"]["property_a"]["passed"], true);
}

#[test]
fn exit_codes() {
    let code = |doc: &str, cmd: &Command| run(doc, cmd, Format::Json).exit_code;
    assert_eq!(code(corpus("dehn"), &axes()), 0);
    assert_eq!(code("graph {", &Command::Check), 1);
    assert_eq!(code(corpus("quadratic"), &axes()), 2);
    assert_eq!(code(corpus("nonabelian"), &axes()), 3);
    assert_eq!(code(corpus("nonabelian"), &Command::Abelian { group: None }), 0);
    assert_eq!(code("", &Command::Bound { rank: 1 }), 1);
    let il = Command::Il(IlArgs {
        group: None,
        element: "D".into(),
        axis: Some("b".into()),
        exp_bound: 2,
        radius: 4,
        depth: 64,
        search_bound: DEFAULT_SEARCH_BOUND,
    });
    assert_eq!(code(corpus("rose"), &il), 1);
}

#[test]
fn search_exhaustion_names_the_stratum() {
    let out = run(corpus("quadratic"), &axes(), Format::Json);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "search-exhausted");
    assert_eq!(v["error"]["stratum"], "c");
    assert_eq!(v["error"]["bound"], 8);
}
