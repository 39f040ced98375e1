//! The `unified` command line: verify, build, factorize, compare and
//! enumerate, over the document format of `unified_core::io`.
//!
//! Every command prints a human-readable part, then a line `--- json ---`,
//! then one canonical JSON value. Exit codes: 0 all checks passed, 1 some
//! check failed, 2 malformed input, 3 cap exceeded or undecided.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use unified_core::classification::{check_equivalence, enumerate_cocycles, search_equivalence};
use unified_core::coalgebra::{antipode_solve, check_bialgebra, check_coalgebra, Bialgebra, Coalgebra};
use unified_core::datum::{build_unified_product, check_compatibility, validate_datum, ExtendingDatum};
use unified_core::factorization::{certify_isomorphism, recover_datum, FactorizationInput};
use unified_core::io::{parse, serialize, write_value, Object};
use unified_core::special::{check_crossed, check_matched_pair};
use unified_core::{witnesses, Check, Error, Field, LinMap, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

const DEFAULT_CAP: u128 = 100_000;

#[derive(Parser, Debug)]
#[command(name = "unified", about = "Unified products of finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of any document (normalizations and compatibility
    /// conditions for an extending datum).
    Verify { file: PathBuf },
    /// Build the unified product of a datum, matched pair or crossed datum.
    Build {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the datum of a factorization E = A·H.
    Factorize {
        hopf: PathBuf,
        #[arg(long)]
        sub_a: PathBuf,
        #[arg(long)]
        sub_h: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide whether the product of the second datum maps isomorphically
    /// onto the product of the first.
    Equiv {
        target: PathBuf,
        source: PathBuf,
        #[arg(long, conflicts_with = "search", required_unless_present = "search")]
        cocycle: Option<PathBuf>,
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// List all lazy cocycles between group-like bases.
    EnumCocycles {
        h: PathBuf,
        a: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Emit a built-in object.
    Example {
        name: ExampleName,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum ExampleName {
    S3Bicrossed,
    Z4Crossed,
    A4Unified,
    A6GroupLevel,
}

/// What a command produced, before printing.
struct Outcome {
    code: i32,
    human: String,
    machine: Value,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::Undecided(_) => EXIT_UNDECIDED,
        Error::ChecksFailed(_)
        | Error::NotAssociative(_)
        | Error::NoAntipode(_)
        | Error::NotAntipode(_)
        | Error::NotAFactorization { .. }
        | Error::Precondition(_)
        | Error::Group(_) => EXIT_FAIL,
        _ => EXIT_MALFORMED,
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = exit_code(e);
    let status = match code {
        EXIT_FAIL => "fail",
        EXIT_UNDECIDED => "undecided",
        _ => "malformed",
    };
    Outcome {
        code,
        human: format!("error: {e}\n"),
        machine: json!({"status": status, "error": e.to_string()}),
    }
}

fn read(path: &Path) -> Result<Object, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    parse(&text)
}

fn write(path: &Path, x: &Object) -> Result<(), Error> {
    fs::write(path, serialize(x)).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

fn reports_outcome(reports: Vec<Report>, mut extra: serde_json::Map<String, Value>) -> Outcome {
    let pass = reports.iter().all(Report::all_passed);
    let human: String = reports.iter().map(Report::render).collect();
    let mut machine = serde_json::Map::new();
    machine.insert("status".into(), Value::from(status(pass)));
    machine.append(&mut extra);
    machine.insert(
        "reports".into(),
        serde_json::to_value(&reports).expect("reports serialize"),
    );
    Outcome {
        code: if pass { EXIT_PASS } else { EXIT_FAIL },
        human,
        machine: Value::Object(machine),
    }
}

fn as_datum(x: Object) -> Result<ExtendingDatum, Error> {
    match x {
        Object::Datum(d) => Ok(d),
        Object::MatchedPair(mp) => Ok(mp.to_datum()),
        Object::CrossedDatum(cd) => Ok(cd.to_datum()),
        other => Err(Error::Format(format!(
            "expected an extending datum, matched pair or crossed datum, got {}",
            other.kind()
        ))),
    }
}

fn verify(path: &Path) -> Result<Outcome, Error> {
    let reports = match read(path)? {
        Object::Datum(d) => {
            let mut n = validate_datum(&d);
            n.subject = "normalization".into();
            vec![n, check_compatibility(&d)]
        }
        Object::Coalgebra(c, _) => vec![check_coalgebra(&c)],
        Object::Bialgebra(b) => vec![check_bialgebra(&b)],
        Object::Hopf(h) => {
            let mut r = check_bialgebra(h.bialgebra());
            r.push(Check::pass("antipode"));
            vec![r]
        }
        Object::MatchedPair(mp) => vec![check_matched_pair(&mp)],
        Object::CrossedDatum(cd) => vec![check_crossed(&cd)],
        Object::GroupTable(_) => {
            let mut r = Report::new("group table");
            r.push(Check::pass("group-axioms"));
            vec![r]
        }
        other => {
            return Err(Error::Format(format!(
                "nothing to verify in a {} document",
                other.kind()
            )))
        }
    };
    Ok(reports_outcome(reports, serde_json::Map::new()))
}

fn build(path: &Path, out: &Path) -> Result<Outcome, Error> {
    let d = as_datum(read(path)?)?;
    let p = build_unified_product(&d)?;
    let dim = p.bialgebra().dim();
    let doc = match d.a_antipode().map(|_| antipode_solve(p.bialgebra())) {
        Some(Ok(s)) => Object::Hopf(p.with_antipode(s)?.hopf().expect("attached")),
        _ => Object::Bialgebra(p.bialgebra().clone()),
    };
    write(out, &doc)?;
    Ok(Outcome {
        code: EXIT_PASS,
        human: format!("built a {dim}-dimensional {} into {}\n", doc.kind(), out.display()),
        machine: json!({"status": "pass", "kind": doc.kind(), "dim": dim}),
    })
}

fn expect_map(x: Object, what: &str) -> Result<LinMap, Error> {
    match x {
        Object::LinearMap(m) => Ok(m),
        other => Err(Error::Format(format!(
            "{what}: expected a linear-map, got {}",
            other.kind()
        ))),
    }
}

fn factorize(hopf: &Path, sub_a: &Path, sub_h: &Path, out: &Path) -> Result<Outcome, Error> {
    let (e, s) = match read(hopf)? {
        Object::Hopf(h) => {
            let (b, s) = h.into_parts();
            (b, Some(s))
        }
        Object::Bialgebra(b) => (b, None),
        other => {
            return Err(Error::Format(format!(
                "expected a hopf or bialgebra, got {}",
                other.kind()
            )))
        }
    };
    let incl_a = expect_map(read(sub_a)?, "--sub-a")?;
    let incl_h = expect_map(read(sub_h)?, "--sub-h")?;
    let fi = FactorizationInput::new(e, s, incl_a, incl_h)?;
    let d = recover_datum(&fi)?;
    let cert = certify_isomorphism(&fi, &d)?;
    write(out, &Object::Datum(d.clone()))?;
    let mut extra = serde_json::Map::new();
    extra.insert("trivial_ract".into(), Value::from(d.has_trivial_ract()));
    extra.insert("trivial_cocycle".into(), Value::from(d.has_trivial_cocycle()));
    Ok(reports_outcome(vec![cert], extra))
}

fn equiv(target: &Path, source: &Path, cocycle: Option<&Path>, cap: u128) -> Result<Outcome, Error> {
    let d = as_datum(read(target)?)?;
    let d2 = as_datum(read(source)?)?;
    let u = match cocycle {
        Some(p) => match read(p)? {
            Object::Cocycle(m) | Object::LinearMap(m) => m,
            other => return Err(Error::Format(format!("expected a cocycle, got {}", other.kind()))),
        },
        None => {
            if !d.h().is_grouplike_basis() || !d.a().coalgebra().is_grouplike_basis() {
                return Err(Error::Undecided(
                    "exhaustive search needs group-like bases; supply --cocycle".into(),
                ));
            }
            match search_equivalence(&d, &d2, cap)? {
                Some(u) => u,
                None => {
                    let mut r = Report::new("equivalence search");
                    r.push(Check::fail("cocycle-found", None).with_detail("no lazy cocycle satisfies the conditions"));
                    return Ok(reports_outcome(vec![r], serde_json::Map::new()));
                }
            }
        }
    };
    let outcome = check_equivalence(&d, &d2, &u)?;
    let mut extra = serde_json::Map::new();
    extra.insert(
        "cocycle".into(),
        unified_core::io::to_value(&Object::Cocycle(u))["payload"].clone(),
    );
    Ok(reports_outcome(vec![outcome.report], extra))
}

fn pointed(x: Object, what: &str) -> Result<(Coalgebra, LinMap), Error> {
    match x {
        Object::Coalgebra(c, Some(unit)) => Ok((c, unit)),
        Object::Bialgebra(b) => Ok((b.coalgebra().clone(), b.unit().clone())),
        Object::Hopf(h) => Ok((h.bialgebra().coalgebra().clone(), h.bialgebra().unit().clone())),
        Object::Datum(d) => Ok((d.h().clone(), d.h_unit().clone())),
        Object::Coalgebra(_, None) => Err(Error::Format(format!("{what}: coalgebra needs a unit"))),
        other => Err(Error::Format(format!("{what}: cannot take H from a {}", other.kind()))),
    }
}

fn bialgebra_of(x: Object, what: &str) -> Result<Bialgebra, Error> {
    match x {
        Object::Bialgebra(b) => Ok(b),
        Object::Hopf(h) => Ok(h.into_parts().0),
        other => Err(Error::Format(format!(
            "{what}: expected a bialgebra, got {}",
            other.kind()
        ))),
    }
}

fn enum_cocycles(h: &Path, a: &Path, cap: u128) -> Result<Outcome, Error> {
    let (hc, unit) = pointed(read(h)?, "H")?;
    let ab = bialgebra_of(read(a)?, "A")?;
    let all = enumerate_cocycles(&hc, &unit, &ab, cap)?;
    let mut human = format!("{} lazy cocycles\n", all.len());
    let mut images = Vec::with_capacity(all.len());
    for u in &all {
        let img: Vec<String> = u
            .map()
            .as_basis_map()
            .expect("group-like images")
            .into_iter()
            .map(|g| ab.space().label(g).to_string())
            .collect();
        let pairs: Vec<String> = hc
            .space()
            .labels()
            .iter()
            .zip(&img)
            .map(|(x, g)| format!("{x}↦{g}"))
            .collect();
        human.push_str(&format!("  {}\n", pairs.join("  ")));
        images.push(img);
    }
    Ok(Outcome {
        code: EXIT_PASS,
        human,
        machine: json!({"status": "pass", "count": all.len(), "images": images}),
    })
}

fn example(name: ExampleName, out: Option<&Path>) -> Result<Outcome, Error> {
    let q = Field::Rational;
    let (doc, summary) = match name {
        ExampleName::S3Bicrossed => (
            Object::MatchedPair(witnesses::s3_matched_pair(q)),
            "matched pair k[C3], k[C2] with product k[S3]".to_string(),
        ),
        ExampleName::Z4Crossed => (
            Object::CrossedDatum(witnesses::c2_extension(q, true)),
            "crossed datum k[C2] by k[C2] with product k[Z4]".to_string(),
        ),
        ExampleName::A4Unified => (
            Object::Datum(witnesses::a4_datum(q)?),
            "extending datum of k[A4] over an order-two subgroup".to_string(),
        ),
        ExampleName::A6GroupLevel => {
            let dec = witnesses::a6_decomposition();
            let check = dec.structure.check();
            if !check.all_passed() {
                return Err(Error::ChecksFailed(check.failed_ids()));
            }
            let g = dec.structure.unified_group()?;
            if !dec.reproduces_ambient(&g) {
                return Err(Error::Undecided("the unified group does not reproduce A6".into()));
            }
            (
                Object::GroupTable(g),
                "unified group A4 ⋉ S with |S| = 30, isomorphic to A6".to_string(),
            )
        }
    };
    match out {
        Some(path) => {
            write(path, &doc)?;
            Ok(Outcome {
                code: EXIT_PASS,
                human: format!("{summary}\nwritten to {}\n", path.display()),
                machine: json!({"status": "pass", "kind": doc.kind()}),
            })
        }
        None => Ok(Outcome {
            code: EXIT_PASS,
            human: format!("{summary}\n"),
            machine: unified_core::io::to_value(&doc),
        }),
    }
}

fn dispatch(cli: Cli) -> Outcome {
    let result = match &cli.command {
        Command::Verify { file } => verify(file),
        Command::Build { file, out } => build(file, out),
        Command::Factorize {
            hopf,
            sub_a,
            sub_h,
            out,
        } => factorize(hopf, sub_a, sub_h, out),
        Command::Equiv {
            target,
            source,
            cocycle,
            search: _,
            cap,
        } => equiv(target, source, cocycle.as_deref(), *cap),
        Command::EnumCocycles { h, a, cap } => enum_cocycles(h, a, *cap),
        Command::Example { name, out } => example(*name, out.as_deref()),
    };
    result.unwrap_or_else(|e| error_outcome(&e))
}

/// Runs the command line `args` (program name first), writing to `out`.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_MALFORMED,
            };
        }
    };
    let outcome = dispatch(cli);
    let mut json = String::new();
    write_value(&outcome.machine, 0, &mut json);
    let _ = write!(out, "{}--- json ---\n{json}\n", outcome.human);
    outcome.code
}

/// The JSON section of a command's output.
pub fn machine_section(output: &str) -> Option<&str> {
    output.split_once("--- json ---\n").map(|(_, j)| j)
}
