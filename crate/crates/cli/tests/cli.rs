use std::io::Write;
use std::process::{Command, Output, Stdio};

use egpkit::{corpus, hopf, Limits};
use egpkit_cli::doc::{Document, FnDoc, PreDoc};

fn egpkit(args: &[&str], stdin: &str) -> Output {
    egpkit_env(args, stdin, &[])
}

fn egpkit_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_egpkit"));
    cmd.args(args)
        .env_remove("EGPKIT_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Runs a command that must succeed and returns its standard output.
fn ok(args: &[&str], stdin: &str) -> String {
    let out = egpkit(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn gen(family: &str, params: &str) -> String {
    ok(&["gen", family, params], "")
}

#[test]
fn hexagon_faces_and_chi() {
    let hexagon = gen("permutahedron", "3,2,1");
    let faces = ok(&["faces"], &hexagon);
    assert_eq!(faces.lines().next(), Some("f-vector: 6,6,1"));
    let chi = ok(&["chi"], &hexagon);
    assert_eq!(chi.lines().next(), Some("k^3 - 3k^2 + 2k"));
}

#[test]
fn chain_cone_chi_is_a_binomial() {
    let chi = ok(&["chi"], &gen("preorder-cone", "chain:3"));
    assert_eq!(chi.lines().nth(1), Some("C(k,3)"));
}

#[test]
fn face_lattice_document_lists_every_face() {
    let json = ok(
        &["faces", "--format", "json"],
        &gen("permutahedron", "3,2,1"),
    );
    let Document::Facelattice(lattice) = Document::parse(&json).unwrap() else {
        panic!("not a face lattice")
    };
    assert_eq!(lattice.faces.len(), 13);
    assert_eq!(lattice.preorders().unwrap().len(), 13);
    // Each edge covers two vertices and is covered by the hexagon.
    assert_eq!(lattice.covers.len(), 18);
}

#[test]
fn generated_documents_round_trip() {
    for name in egpkit_cli::family::corpus_names() {
        let json = gen("corpus", &name);
        let doc = Document::parse(&json).unwrap();
        assert_eq!(doc.to_json() + "\n", json, "{name}");
        let Document::Submodfn(f) = doc else {
            panic!("kind")
        };
        assert_eq!(f.to_fn().unwrap(), corpus::by_name(&name).unwrap());
    }
}

#[test]
fn infinite_values_round_trip() {
    let text = r#"{"kind":"submodfn","ground":["a","b"],
        "finite":[{"set":["a"],"value":"1/2"},{"set":["b"],"value":"inf"},{"set":["a","b"],"value":2}]}"#;
    let json = ok(&["pre", "--format", "json"], text);
    let Document::Preorder(p) = Document::parse(&json).unwrap() else {
        panic!("kind")
    };
    assert_eq!(p.relations, [("a".to_string(), "b".to_string())]);
    let Document::Submodfn(f) = Document::parse(text).unwrap() else {
        panic!("kind")
    };
    let z = f.to_fn().unwrap();
    assert!(z.value(egpkit::Subset(0b10)).is_infinite());
    assert_eq!(FnDoc::of(&z).finite.len(), 2);
}

#[test]
fn formal_sums_parse_back() {
    let z = corpus::by_name("low-chain-2").unwrap();
    let doc = Document::Submodfn(FnDoc::of(&z)).to_json();
    let json = ok(&["delta", "--format", "json"], &doc);
    let Document::Formalsum(sum) = Document::parse(&json).unwrap() else {
        panic!("kind")
    };
    let expected = hopf::internal_delta(&z, &Limits::default()).unwrap();
    assert_eq!(sum.to_sum().unwrap(), expected);
}

#[test]
fn coproduct_at_a_split() {
    let text = ok(
        &["coproduct", "--split", "a"],
        &gen("standard-permutahedron", "3"),
    );
    assert_eq!(text.trim(), "[{a}:3] ⊗ [{b}:2 {c}:2 {b,c}:3]");
    let all = ok(&["coproduct"], &gen("standard-permutahedron", "3"));
    assert_eq!(all.lines().count(), 8);
}

#[test]
fn preorder_inputs() {
    let v = PreDoc::of(&corpus::v_poset());
    let v = Document::Preorder(v).to_json();
    let ehr = ok(&["ehrhart"], &v);
    assert!(ehr.contains("Ehr*: (1/3)k^3 - (1/2)k^2 + (1/6)k"), "{ehr}");
    let delta = ok(&["delta"], &v);
    assert!(!delta.trim().is_empty());
    let split = ok(&["coproduct", "--split", "a"], &v);
    assert_eq!(split.trim(), "<a> ⊗ <b, c>");
}

#[test]
fn closure_and_glue() {
    let hexagon = gen("standard-permutahedron", "3");
    assert_eq!(
        ok(&["closure", "--relations", "a<b<c"], &hexagon).trim(),
        "a<b, b<c"
    );
    let glued = ok(&["glue", "--split", "a", "--right", "c<b"], &hexagon);
    assert_eq!(glued.trim(), "a<c, c<b");
    let pentagon = Document::Submodfn(FnDoc::of(&corpus::pentagon())).to_json();
    let closed = ok(&["closure", "--relations", "c<a<b"], &pentagon);
    assert_eq!(closed, ok(&["closure", "--relations", "a<c<b"], &pentagon));
}

#[test]
fn check_reports_structure() {
    let text = ok(&["check"], &gen("corpus", "half-hexagon"));
    assert!(text.contains("finite: no"));
    assert!(text.contains("pre: a<b, c"));
    let json = ok(
        &["check", "--format", "json"],
        &gen("matroid", "uniform:1,2"),
    );
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["modular"], false);
    assert_eq!(v["components"], serde_json::json!([["a", "b"]]));
}

#[test]
fn building_set_forests() {
    assert!(ok(&["bforests", "path:3"], "").starts_with("11 forests"));
    assert_eq!(
        ok(&["bforests", "a-b,b-c"], ""),
        ok(&["bforests", "sets:a,b;b,c"], "")
    );
}

#[test]
fn oracle_on_one_input() {
    let out = ok(&["oracle", "-"], &gen("corpus", "pentagon"));
    assert!(out.lines().take(5).all(|l| l.starts_with("PASS")), "{out}");
    assert!(out.ends_with("5 checks, 0 failed\n"));
}

#[test]
fn output_is_deterministic() {
    let z = gen("nestohedron", "path:4");
    assert_eq!(ok(&["phi"], &z), ok(&["phi"], &z));
    assert_eq!(
        ok(&["faces", "--format", "json"], &z),
        ok(&["faces", "--format", "json"], &z)
    );
}

#[test]
fn validation_errors_exit_with_one() {
    let cases = [
        r#"{"kind":"submodfn","ground":["a"],"finite":[{"set":["b"],"value":"1"}]}"#,
        r#"{"kind":"submodfn","ground":["a"],"finite":[{"set":[],"value":"1"}]}"#,
        r#"{"kind":"submodfn","ground":["a","b"],"finite":[{"set":["a","b"],"value":"inf"}]}"#,
        r#"{"kind":"submodfn","ground":["a"],"finite":[{"set":["a"],"value":"x"}]}"#,
        r#"{"kind":"nosuch"}"#,
        "{",
    ];
    for doc in cases {
        let out = egpkit(&["pre"], doc);
        assert_eq!(out.status.code(), Some(1), "{doc}");
        assert!(!out.stderr.is_empty());
    }
    let not_submodular = r#"{"kind":"submodfn","ground":["a","b"],
        "finite":[{"set":["a"],"value":"1"},{"set":["b"],"value":"1"},{"set":["a","b"],"value":"3"}]}"#;
    assert_eq!(egpkit(&["check"], not_submodular).status.code(), Some(1));
    assert_eq!(egpkit(&["faces"], not_submodular).status.code(), Some(1));
    assert_eq!(
        egpkit(&["gen", "permutahedron", "1,2"], "").status.code(),
        Some(1)
    );
    assert_eq!(egpkit(&["faces", "--bogus"], "").status.code(), Some(1));
    let hexagon = gen("standard-permutahedron", "3");
    let out = egpkit(&["closure", "--relations", "a<b"], &hexagon);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn caps_exit_with_two_and_can_be_raised() {
    let big = gen("standard-permutahedron", "9");
    assert_eq!(egpkit(&["faces"], &big).status.code(), Some(2));
    let hexagon = gen("standard-permutahedron", "3");
    let low = [("EGPKIT_MAX_N", "2")];
    assert_eq!(
        egpkit_env(&["faces"], &hexagon, &low).status.code(),
        Some(2)
    );
    let raised = egpkit_env(&["faces", "--max-n", "3"], &hexagon, &low);
    assert!(raised.status.success());
    assert!(stdout(&raised).starts_with("f-vector: 6,6,1"));
}

#[test]
fn documented_examples_parse() {
    let examples = [
        r#"{"kind":"submodfn","ground":["a","b"],"finite":[{"set":["a"],"value":"2"},{"set":["b"],"value":"2"},{"set":["a","b"],"value":"3"}]}"#,
        r#"{"kind":"preorder","ground":["a","b","c"],"relations":[["a","b"],["a","c"]]}"#,
        r#"{"kind":"polynomial","coeffs":["0","2","-3","1"]}"#,
        r#"{"kind":"facelattice","faces":[{"preorder":{"ground":["a"],"relations":[]},"dim":0}],"covers":[]}"#,
        r#"{"kind":"formalsum","terms":[{"coeff":"1","factors":[{"kind":"submodfn","ground":[],"finite":[]}]}]}"#,
    ];
    for text in examples {
        match Document::parse(text).unwrap() {
            Document::Submodfn(f) => assert_eq!(f.to_fn().unwrap(), corpus::segment()),
            Document::Preorder(p) => assert_eq!(p.to_preorder().unwrap(), corpus::v_poset()),
            Document::Polynomial(p) => {
                assert_eq!(p.to_poly().unwrap().to_string(), "k^3 - 3k^2 + 2k")
            }
            Document::Facelattice(l) => assert_eq!(l.preorders().unwrap().len(), 1),
            Document::Formalsum(s) => assert_eq!(s.to_sum().unwrap().len(), 1),
        }
    }
}
