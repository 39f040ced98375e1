#![allow(dead_code)]

use std::path::PathBuf;

use unified_core::coalgebra::{Coalgebra, Hopf};
use unified_core::datum::{trivial_lact, trivial_ract, ExtendingDatum};
use unified_core::groups::{dual_group_algebra, group_algebra, symmetric3, GroupTable};
use unified_core::io::{serialize, Object};
use unified_core::report::{Check, Report};
use unified_core::special::MatchedPair;
use unified_core::{witnesses, BasedSpace, Field, LinMap};

pub fn q() -> Field {
    Field::Rational
}

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixture_dir().join(name)
}

pub fn trivial_datum(a: &Hopf, h: &Hopf) -> ExtendingDatum {
    let (ab, sa) = a.clone().into_parts();
    let (hb, sh) = h.clone().into_parts();
    let ract = trivial_ract(hb.coalgebra(), &ab);
    let lact = trivial_lact(hb.coalgebra(), &ab);
    MatchedPair::new(ab, Some(sa), hb, Some(sh), ract, lact)
        .unwrap()
        .to_datum()
}

/// The A4 datum with one cocycle value moved to another group element.
pub fn corrupted_a4() -> ExtendingDatum {
    let d = witnesses::a4_datum(q()).unwrap();
    let mut cols = d.cocycle().columns().to_vec();
    // f(x1, x1) ↦ the other element of A
    let nh = d.dim_h();
    let k = nh + 1;
    let current = cols[k][0].0;
    cols[k] = vec![(1 - current, q().one())];
    let f = LinMap::new(q(), d.cocycle().domain().clone(), d.cocycle().codomain().clone(), cols).unwrap();
    d.with_cocycle(f).unwrap()
}

fn inclusion(g: &GroupTable, elements: &[usize]) -> LinMap {
    let (e, _) = group_algebra(g, q()).into_parts();
    let sp = BasedSpace::new(elements.iter().map(|&i| g.label(i).to_string())).unwrap();
    LinMap::from_basis_fn(q(), sp, e.space().clone(), |i| elements[i]).unwrap()
}

fn c2_cocycle(image_of_x: usize) -> LinMap {
    let d = witnesses::c2_extension(q(), true).to_datum();
    LinMap::from_basis_fn(q(), d.h().space().clone(), d.a().space().clone(), |i| {
        if i == 0 {
            0
        } else {
            image_of_x
        }
    })
    .unwrap()
}

/// Canonical fixtures: file name and object.
pub fn canonical_fixtures() -> Vec<(&'static str, Object)> {
    let c2 = group_algebra(&GroupTable::cyclic(2), q());
    let z4 = GroupTable::cyclic(4);
    let mut report = Report::new("compatibility conditions");
    report.push(Check::pass("2a"));
    report.push(Check::fail("2c", Some(vec![1, 0, 2])).with_detail("first counterexample"));
    vec![
        (
            "trivial-coalgebra.json",
            Object::Coalgebra(Coalgebra::ground(q(), "1"), None),
        ),
        ("s3-group-algebra.json", Object::Hopf(group_algebra(&symmetric3(), q()))),
        ("s3-group.json", Object::GroupTable(symmetric3())),
        ("c2-group-algebra.json", Object::Hopf(c2.clone())),
        ("trivial-datum.json", Object::Datum(trivial_datum(&c2, &c2))),
        (
            "dual-trivial-datum.json",
            Object::Datum(trivial_datum(&dual_group_algebra(&GroupTable::cyclic(3), q()), &c2)),
        ),
        (
            "s3-bicrossed.json",
            Object::MatchedPair(witnesses::s3_matched_pair(q())),
        ),
        (
            "z4-crossed.json",
            Object::CrossedDatum(witnesses::c2_extension(q(), true)),
        ),
        (
            "klein-crossed.json",
            Object::CrossedDatum(witnesses::c2_extension(q(), false)),
        ),
        (
            "z4-datum.json",
            Object::Datum(witnesses::c2_extension(q(), true).to_datum()),
        ),
        (
            "klein-datum.json",
            Object::Datum(witnesses::c2_extension(q(), false).to_datum()),
        ),
        ("a4-datum.json", Object::Datum(witnesses::a4_datum(q()).unwrap())),
        ("a4-corrupted.json", Object::Datum(corrupted_a4())),
        ("z4-hopf.json", Object::Hopf(group_algebra(&z4, q()))),
        ("z4-sub-a.json", Object::LinearMap(inclusion(&z4, &[0, 2]))),
        ("z4-sub-h.json", Object::LinearMap(inclusion(&z4, &[0, 1]))),
        ("z4-sub-h-singular.json", Object::LinearMap(inclusion(&z4, &[0, 2]))),
        ("c2-cocycle-trivial.json", Object::Cocycle(c2_cocycle(0))),
        ("c2-cocycle-flip.json", Object::Cocycle(c2_cocycle(1))),
        ("check-report.json", Object::Report(report)),
    ]
}

/// Hand-written malformed inputs.
pub fn malformed_fixtures() -> Vec<(&'static str, String)> {
    let good = serialize(&Object::Hopf(group_algebra(&GroupTable::cyclic(2), q())));
    vec![
        ("malformed-not-json.json", "{\"format_version\": \"1\",".to_string()),
        (
            "malformed-index.json",
            good.replacen("[1, 1, 0, \"1\", \"1\"]", "[1, 1, 5, \"1\", \"1\"]", 1),
        ),
        ("malformed-kind.json", good.replacen("\"hopf\"", "\"teapot\"", 1)),
        ("malformed-field.json", good.replacen("\"rational\"", "\"mod 4\"", 1)),
        (
            "malformed-version.json",
            good.replacen("\"format_version\": \"1\"", "\"format_version\": \"0\"", 1),
        ),
    ]
}

pub fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["unified"];
    argv.extend_from_slice(args);
    let code = unified_cli::run(argv, &mut out);
    (code, String::from_utf8(out).unwrap())
}

pub fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

/// Every command of the exit-code contract: arguments and expected code.
pub fn contract() -> Vec<(Vec<String>, i32)> {
    let mut rows: Vec<(Vec<String>, i32)> = Vec::new();
    let mut row = |args: &[&str], code: i32| {
        rows.push((
            args.iter()
                .map(|a| if a.ends_with(".json") { path(a) } else { a.to_string() })
                .collect(),
            code,
        ))
    };
    for f in [
        "trivial-coalgebra.json",
        "s3-group-algebra.json",
        "s3-group.json",
        "c2-group-algebra.json",
        "trivial-datum.json",
        "dual-trivial-datum.json",
        "s3-bicrossed.json",
        "z4-crossed.json",
        "klein-crossed.json",
        "z4-datum.json",
        "klein-datum.json",
        "a4-datum.json",
        "z4-hopf.json",
    ] {
        row(&["verify", f], 0);
    }
    row(&["verify", "a4-corrupted.json"], 1);
    for f in [
        "z4-sub-a.json",
        "c2-cocycle-trivial.json",
        "check-report.json",
        "malformed-not-json.json",
        "malformed-index.json",
        "malformed-kind.json",
        "malformed-field.json",
        "malformed-version.json",
        "missing.json",
    ] {
        row(&["verify", f], 2);
    }
    let out = std::env::temp_dir().join(format!("unified-cli-test-{}.json", std::process::id()));
    let out = out.to_str().unwrap().to_string();
    for (f, code) in [
        ("z4-crossed.json", 0),
        ("s3-bicrossed.json", 0),
        ("a4-datum.json", 0),
        ("dual-trivial-datum.json", 0),
        ("a4-corrupted.json", 1),
        ("s3-group.json", 2),
        ("malformed-index.json", 2),
    ] {
        row(&["build", f, "--out", &out], code);
    }
    row(
        &[
            "factorize",
            "z4-hopf.json",
            "--sub-a",
            "z4-sub-a.json",
            "--sub-h",
            "z4-sub-h.json",
            "--out",
            &out,
        ],
        0,
    );
    row(
        &[
            "factorize",
            "z4-hopf.json",
            "--sub-a",
            "z4-sub-a.json",
            "--sub-h",
            "z4-sub-h-singular.json",
            "--out",
            &out,
        ],
        1,
    );
    row(
        &[
            "factorize",
            "z4-hopf.json",
            "--sub-a",
            "z4-datum.json",
            "--sub-h",
            "z4-sub-h.json",
            "--out",
            &out,
        ],
        2,
    );
    row(
        &[
            "equiv",
            "z4-datum.json",
            "z4-datum.json",
            "--cocycle",
            "c2-cocycle-trivial.json",
        ],
        0,
    );
    row(
        &[
            "equiv",
            "z4-datum.json",
            "z4-datum.json",
            "--cocycle",
            "c2-cocycle-flip.json",
        ],
        0,
    );
    row(
        &[
            "equiv",
            "z4-datum.json",
            "klein-datum.json",
            "--cocycle",
            "c2-cocycle-trivial.json",
        ],
        1,
    );
    row(&["equiv", "z4-datum.json", "klein-datum.json", "--search"], 1);
    row(&["equiv", "klein-datum.json", "klein-datum.json", "--search"], 0);
    row(
        &[
            "equiv",
            "dual-trivial-datum.json",
            "dual-trivial-datum.json",
            "--search",
        ],
        3,
    );
    row(
        &["equiv", "a4-datum.json", "a4-datum.json", "--search", "--cap", "5"],
        3,
    );
    row(&["equiv", "a4-datum.json", "z4-datum.json", "--search"], 1);
    row(&["equiv", "z4-datum.json", "z4-datum.json"], 2);
    row(&["enum-cocycles", "z4-datum.json", "c2-group-algebra.json"], 0);
    row(&["enum-cocycles", "s3-group-algebra.json", "c2-group-algebra.json"], 0);
    row(
        &[
            "enum-cocycles",
            "a4-datum.json",
            "s3-group-algebra.json",
            "--cap",
            "100",
        ],
        3,
    );
    row(&["enum-cocycles", "trivial-coalgebra.json", "c2-group-algebra.json"], 2);
    row(&["enum-cocycles", "z4-datum.json", "s3-group.json"], 2);
    for name in ["s3-bicrossed", "z4-crossed", "a4-unified"] {
        row(&["example", name], 0);
    }
    row(&["example", "teapot"], 2);
    row(&["frobnicate"], 2);
    rows
}
