mod common;

use common::*;
use unified_cli::machine_section;
use unified_core::groups::{group_algebra, GroupTable};
use unified_core::io::{parse, Object};

#[test]
fn exit_code_contract() {
    for (args, code) in contract() {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (got, text) = run_cli(&argv);
        assert_eq!(got, code, "{args:?}\n{text}");
    }
}

#[test]
fn outputs_are_deterministic() {
    for (args, _) in contract()
        .into_iter()
        .filter(|(a, _)| a[0] != "build" && a[0] != "factorize")
    {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(run_cli(&argv), run_cli(&argv), "{args:?}");
    }
}

#[test]
fn verify_trivial_datum_prints_nine_conditions() {
    let (code, text) = run_cli(&["verify", &path("trivial-datum.json")]);
    assert_eq!(code, 0);
    let table = text.split("compatibility conditions\n").nth(1).unwrap();
    let rows: Vec<&str> = table.lines().take_while(|l| l.starts_with("  ")).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().all(|r| r.trim_start().starts_with("PASS")));
}

#[test]
fn verify_names_the_failing_condition() {
    let (_, text) = run_cli(&["verify", &path("a4-corrupted.json")]);
    assert!(text.contains("FAIL  2c  witness"));
    let json: serde_json::Value = serde_json::from_str(machine_section(&text).unwrap()).unwrap();
    assert_eq!(json["status"], "fail");
}

#[test]
fn build_z4_crossed_gives_the_cyclic_group_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z4.json");
    let (code, _) = run_cli(&["build", &path("z4-crossed.json"), "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let Object::Hopf(h) = parse(&std::fs::read_to_string(&out).unwrap()).unwrap() else {
        panic!("expected a hopf document");
    };
    // a⊗x sits at 2a + x and (0⊗x)^k runs through 0⊗1, 0⊗x, 1⊗1, 1⊗x
    let z4 = group_algebra(&GroupTable::cyclic(4), q());
    assert!(h.bialgebra().same_structure(z4.bialgebra()));
}

#[test]
fn factorize_z4_recovers_the_element_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.json");
    let (code, _) = run_cli(&[
        "factorize",
        &path("z4-hopf.json"),
        "--sub-a",
        &path("z4-sub-a.json"),
        "--sub-h",
        &path("z4-sub-h.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let Object::Datum(d) = parse(&std::fs::read_to_string(&out).unwrap()).unwrap() else {
        panic!("expected a datum");
    };
    let two = d.a().space().index_of("2").unwrap();
    assert_eq!(d.cocycle().column(3), &[(two, q().one())]);
    assert!(d.has_trivial_ract() && d.has_trivial_lact());
}

#[test]
fn enum_cocycles_lists_pointed_maps() {
    let (_, text) = run_cli(&["enum-cocycles", &path("z4-datum.json"), &path("c2-group-algebra.json")]);
    let json: serde_json::Value = serde_json::from_str(machine_section(&text).unwrap()).unwrap();
    assert_eq!(json["count"], 2);
    assert_eq!(json["images"], serde_json::json!([["0", "0"], ["0", "1"]]));
}

#[test]
fn example_documents_parse() {
    for name in ["s3-bicrossed", "z4-crossed", "a4-unified"] {
        let (_, text) = run_cli(&["example", name]);
        let doc = machine_section(&text).unwrap();
        assert!(parse(doc).is_ok(), "{name}");
    }
}
