use std::io::Write;
use std::process::{Command, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_kolchin");

fn corpus(name: &str) -> String {
    format!("{}/../core/corpus/{name}.kg", env!("CARGO_MANIFEST_DIR"))
}

fn kolchin(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out) = kolchin(&all);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn embed_table() {
    let (code, out) = kolchin(&["embed", &corpus("rose"), "--words", "D,D^2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "word  b\nD     (1)\nD^2   (2)\n");
}

#[test]
fn dehn_axes() {
    let (code, v) = json(&["axes", &corpus("dehn")]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "kolchin-report/1");
    assert_eq!(v["status"], "ok");
    let r = &v["result"];
    assert_eq!(r["essential_edges"].as_array().unwrap().len(), 1);
    assert_eq!(r["essential_edges"][0]["edge"], "E2");
    assert_eq!(r["axes"].as_array().unwrap().len(), 1);
    assert_eq!(r["axes"][0]["axis"], "E1");
    assert_eq!(r["axes"][0]["multiplicity"], 1);
}

#[test]
fn bound_rank_two() {
    let (code, v) = json(&["bound", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["d_n"], "48");
    assert_eq!(v["result"]["index_below"], true);
}

#[test]
fn exit_codes() {
    let (code, v) = json(&["axes", &corpus("nonabelian")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "not-abelian");
    assert_eq!(v["error"]["witness"], "f.g and g.f differ at c: b a vs b");

    let (code, v) = json(&["axes", &corpus("quadratic")]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "search-exhausted");

    let (code, _) = kolchin(&["bound", "--rank", "1"]);
    assert_eq!(code, 1);

    let (code, out) = kolchin(&["embed", &corpus("rose"), "--words", "X"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error:"));
}

#[test]
fn stdin_and_parse_errors() {
    let mut child = Command::new(BIN)
        .args(["check", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"graph R { vertex v; edge a v v; edge b v v }\nmap D on R {\n  b -> a b\n}\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["line"], 3);
}

#[test]
fn il_on_rose_and_dehn() {
    for (name, element) in [("rose", "D"), ("dehn", "f")] {
        let (code, v) = json(&["il", &corpus(name), "--element", element]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(v["result"]["found"], serde_json::json!([0, 1]), "{name}");
        assert_eq!(v["result"]["matches"], true, "{name}");
    }
}

#[test]
fn json_is_deterministic() {
    let path = corpus("rose3_slide");
    for args in [
        vec!["upg", "--group", "K"],
        vec!["condition"],
        vec!["axes"],
        vec!["abelian"],
    ] {
        let mut a = args.clone();
        a.push(&path);
        let first = kolchin(&a);
        let second = kolchin(&a);
        assert_eq!(first, second);
        assert_eq!(json(&a), json(&a));
    }
}

#[test]
fn condition_output_reparses() {
    let (code, out) = kolchin(&["condition", &corpus("collapse")]);
    assert_eq!(code, 0);
    let doc = out.split_once("\n\n").map_or(out.as_str(), |(_, d)| d);
    let path = std::env::temp_dir().join(format!("kolchin-cli-{}.kg", std::process::id()));
    std::fs::write(&path, doc).unwrap();
    let (code, check) = kolchin(&["check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0, "{out}\n{check}");
}
