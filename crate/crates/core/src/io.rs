//! Canonical JSON documents for every object kind.
//!
//! A document is `{format_version, field, kind, payload}` in that key order.
//! Structure maps are lists of records `[i.., j.., "num", "den"]`: domain
//! indices (one per tensor factor), then codomain indices, then the reduced
//! coefficient as decimal strings. Records are sorted and zero-free, so equal
//! objects serialize to identical bytes.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::coalgebra::{Algebra, Associativity, Bialgebra, Coalgebra, Hopf};
use crate::datum::{DatumParts, ExtendingDatum};
use crate::error::{Error, Result};
use crate::groups::GroupTable;
use crate::linmap::{Entry, LinMap};
use crate::report::Report;
use crate::scalar::Field;
use crate::space::BasedSpace;
use crate::special::{CrossedDatum, MatchedPair};

pub const FORMAT_VERSION: &str = "1";

/// Everything the document format can carry.
#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    /// A coalgebra, optionally with a distinguished unit vector.
    Coalgebra(Coalgebra, Option<LinMap>),
    Bialgebra(Bialgebra),
    Hopf(Hopf),
    Datum(ExtendingDatum),
    MatchedPair(MatchedPair),
    CrossedDatum(CrossedDatum),
    GroupTable(GroupTable),
    /// A map `H → A` meant as a lazy cocycle.
    Cocycle(LinMap),
    Report(Report),
    LinearMap(LinMap),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Coalgebra(..) => "coalgebra",
            Object::Bialgebra(_) => "bialgebra",
            Object::Hopf(_) => "hopf",
            Object::Datum(_) => "extending-datum",
            Object::MatchedPair(_) => "matched-pair",
            Object::CrossedDatum(_) => "crossed-datum",
            Object::GroupTable(_) => "group-table",
            Object::Cocycle(_) => "cocycle",
            Object::Report(_) => "report",
            Object::LinearMap(_) => "linear-map",
        }
    }

    /// `None` for kinds that carry no scalars.
    pub fn field(&self) -> Option<Field> {
        match self {
            Object::Coalgebra(c, _) => Some(c.field()),
            Object::Bialgebra(b) => Some(b.field()),
            Object::Hopf(h) => Some(h.field()),
            Object::Datum(d) => Some(d.field()),
            Object::MatchedPair(mp) => Some(mp.field()),
            Object::CrossedDatum(cd) => Some(cd.field()),
            Object::Cocycle(m) | Object::LinearMap(m) => Some(m.field()),
            Object::GroupTable(_) | Object::Report(_) => None,
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

// ---------------------------------------------------------------- writing

fn labels(space: &BasedSpace) -> Value {
    json!(space.labels())
}

/// Records of `m`, splitting the domain into `dom` factors and the codomain
/// into `cod` factors.
fn records(m: &LinMap, dom: &[usize], cod: &[usize]) -> Value {
    let split = |mut idx: usize, dims: &[usize]| {
        let mut out = vec![0; dims.len()];
        for (slot, d) in dims.iter().enumerate().rev() {
            out[slot] = idx % d;
            idx /= d;
        }
        out
    };
    let mut out = Vec::with_capacity(m.nnz());
    for (c, col) in m.columns().iter().enumerate() {
        for (r, s) in col {
            let mut rec: Vec<Value> = split(c, dom).into_iter().map(Value::from).collect();
            rec.extend(split(*r, cod).into_iter().map(Value::from));
            rec.push(Value::from(s.numerator().to_string()));
            rec.push(Value::from(s.denominator().to_string()));
            out.push(Value::Array(rec));
        }
    }
    Value::Array(out)
}

fn coalgebra_fields(c: &Coalgebra, obj: &mut Map<String, Value>) {
    let n = c.dim();
    obj.insert("labels".into(), labels(c.space()));
    obj.insert("delta".into(), records(c.delta(), &[n], &[n, n]));
    obj.insert("counit".into(), records(c.counit(), &[n], &[]));
}

fn algebra_fields(a: &Algebra, obj: &mut Map<String, Value>) {
    let n = a.dim();
    obj.insert("mult".into(), records(a.mult(), &[n, n], &[n]));
    obj.insert("unit".into(), records(a.unit(), &[], &[n]));
}

fn bialgebra_payload(b: &Bialgebra, antipode: Option<&LinMap>) -> Map<String, Value> {
    let mut obj = Map::new();
    coalgebra_fields(b.coalgebra(), &mut obj);
    algebra_fields(b.algebra(), &mut obj);
    if let Some(s) = antipode {
        let n = b.dim();
        obj.insert("antipode".into(), records(s, &[n], &[n]));
    }
    obj
}

fn map_payload(m: &LinMap) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("domain".into(), labels(m.domain()));
    obj.insert("codomain".into(), labels(m.codomain()));
    obj.insert("entries".into(), records(m, &[m.domain().dim()], &[m.codomain().dim()]));
    obj
}

fn datum_payload(d: &ExtendingDatum) -> Map<String, Value> {
    let (na, nh) = (d.dim_a(), d.dim_h());
    let mut h = Map::new();
    coalgebra_fields(d.h(), &mut h);
    algebra_fields(d.h_algebra(), &mut h);
    let mut obj = Map::new();
    obj.insert("a".into(), Value::Object(bialgebra_payload(d.a(), d.a_antipode())));
    obj.insert("h".into(), Value::Object(h));
    obj.insert("ract".into(), records(d.ract(), &[nh, na], &[nh]));
    obj.insert("lact".into(), records(d.lact(), &[nh, na], &[na]));
    obj.insert("cocycle".into(), records(d.cocycle(), &[nh, nh], &[na]));
    obj
}

fn payload(x: &Object) -> Value {
    let obj = match x {
        Object::Coalgebra(c, unit) => {
            let mut obj = Map::new();
            coalgebra_fields(c, &mut obj);
            if let Some(u) = unit {
                obj.insert("unit".into(), records(u, &[], &[c.dim()]));
            }
            obj
        }
        Object::Bialgebra(b) => bialgebra_payload(b, None),
        Object::Hopf(h) => bialgebra_payload(h.bialgebra(), Some(h.antipode())),
        Object::Datum(d) => datum_payload(d),
        Object::MatchedPair(mp) => {
            let (na, nh) = (mp.a().dim(), mp.h().dim());
            let mut obj = Map::new();
            obj.insert("a".into(), Value::Object(bialgebra_payload(mp.a(), mp.a_antipode())));
            obj.insert("h".into(), Value::Object(bialgebra_payload(mp.h(), mp.h_antipode())));
            obj.insert("ract".into(), records(mp.ract(), &[nh, na], &[nh]));
            obj.insert("lact".into(), records(mp.lact(), &[nh, na], &[na]));
            obj
        }
        Object::CrossedDatum(cd) => {
            let (na, nh) = (cd.a().dim(), cd.h().dim());
            let mut obj = Map::new();
            obj.insert("a".into(), Value::Object(bialgebra_payload(cd.a(), cd.a_antipode())));
            obj.insert("h".into(), Value::Object(bialgebra_payload(cd.h(), None)));
            obj.insert("lact".into(), records(cd.lact(), &[nh, na], &[na]));
            obj.insert("cocycle".into(), records(cd.cocycle(), &[nh, nh], &[na]));
            obj
        }
        Object::GroupTable(g) => {
            let mut obj = Map::new();
            obj.insert("labels".into(), json!(g.labels()));
            obj.insert("table".into(), json!(g.table()));
            obj
        }
        Object::Cocycle(m) | Object::LinearMap(m) => map_payload(m),
        Object::Report(r) => {
            return serde_json::to_value(r).expect("reports serialize");
        }
    };
    Value::Object(obj)
}

/// The canonical document as a JSON value.
pub fn to_value(x: &Object) -> Value {
    let mut doc = Map::new();
    doc.insert("format_version".into(), Value::from(FORMAT_VERSION));
    let field = x.field().map(Field::descriptor).unwrap_or_else(|| "none".into());
    doc.insert("field".into(), Value::from(field));
    doc.insert("kind".into(), Value::from(x.kind()));
    doc.insert("payload".into(), payload(x));
    Value::Object(doc)
}

/// Canonical text: two-space indentation, arrays of scalars on one line,
/// trailing newline.
pub fn serialize(x: &Object) -> String {
    let mut out = String::new();
    write_value(&to_value(x), 0, &mut out);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Pretty-prints a value in canonical layout.
pub fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::from(key.as_str()).to_string());
                out.push_str(": ");
                write_value(val, indent + 1, out);
                if k + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_flat) => {
            out.push_str("[\n");
            for (k, val) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(val, indent + 1, out);
                if k + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

// ---------------------------------------------------------------- reading

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| bad(format!("missing key {key:?}")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| bad(format!("{what} is not an object")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| bad(format!("{what} is not a string")))
}

fn read_space(v: &Value, what: &str) -> Result<BasedSpace> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("{what} labels are not a list")))?;
    let labels = arr
        .iter()
        .map(|l| as_str(l, "label").map(str::to_string))
        .collect::<Result<Vec<_>>>()?;
    if labels.is_empty() {
        return Err(bad(format!("{what} has no basis")));
    }
    BasedSpace::new(labels).map_err(|e| bad(format!("{what}: {e}")))
}

/// Reads records into a map between spaces with the given factor sizes.
fn read_records(
    v: &Value,
    field: Field,
    domain: BasedSpace,
    codomain: BasedSpace,
    dom: &[usize],
    cod: &[usize],
    what: &str,
) -> Result<LinMap> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad(format!("{what} is not a list of records")))?;
    let arity = dom.len() + cod.len();
    let mut columns: Vec<Vec<Entry>> = vec![Vec::new(); domain.dim()];
    let mut seen = std::collections::BTreeSet::new();
    for rec in arr {
        let rec = rec
            .as_array()
            .ok_or_else(|| bad(format!("{what}: record is not a list")))?;
        if rec.len() != arity + 2 {
            return Err(bad(format!(
                "{what}: record has {} fields, expected {}",
                rec.len(),
                arity + 2
            )));
        }
        let mut idx = Vec::with_capacity(arity);
        for (k, bound) in dom.iter().chain(cod).enumerate() {
            let i = rec[k]
                .as_u64()
                .ok_or_else(|| bad(format!("{what}: index is not a non-negative integer")))?
                as usize;
            if i >= *bound {
                return Err(bad(format!("{what}: index {i} out of range {bound}")));
            }
            idx.push(i);
        }
        let parse = |v: &Value| -> Result<BigInt> {
            as_str(v, "coefficient")?
                .parse::<BigInt>()
                .map_err(|_| bad(format!("{what}: bad coefficient")))
        };
        let s = field
            .from_ratio(&parse(&rec[arity])?, &parse(&rec[arity + 1])?)
            .map_err(|_| bad(format!("{what}: zero denominator")))?;
        if !seen.insert(idx.clone()) {
            return Err(bad(format!("{what}: duplicate record {idx:?}")));
        }
        let join = |parts: &[usize], dims: &[usize]| parts.iter().zip(dims).fold(0, |acc, (p, d)| acc * d + p);
        let c = join(&idx[..dom.len()], dom);
        let r = join(&idx[dom.len()..], cod);
        columns[c].push((r, s));
    }
    LinMap::new(field, domain, codomain, columns)
}

fn read_coalgebra(obj: &Map<String, Value>, field: Field) -> Result<Coalgebra> {
    let sp = read_space(get(obj, "labels")?, "coalgebra")?;
    let n = sp.dim();
    let delta = read_records(
        get(obj, "delta")?,
        field,
        sp.clone(),
        BasedSpace::tensor(&sp.flat(), &sp.flat()),
        &[n],
        &[n, n],
        "delta",
    )?;
    let counit = read_records(
        get(obj, "counit")?,
        field,
        sp.clone(),
        BasedSpace::ground(),
        &[n],
        &[],
        "counit",
    )?;
    Coalgebra::new(sp, delta, counit)
}

fn read_algebra(obj: &Map<String, Value>, sp: &BasedSpace, field: Field) -> Result<Algebra> {
    let n = sp.dim();
    let mult = read_records(
        get(obj, "mult")?,
        field,
        BasedSpace::tensor(sp, sp),
        sp.flat(),
        &[n, n],
        &[n],
        "mult",
    )?;
    let unit = read_unit(get(obj, "unit")?, sp, field)?;
    Algebra::new(sp.clone(), mult, unit, Associativity::Unknown)
}

fn read_unit(v: &Value, sp: &BasedSpace, field: Field) -> Result<LinMap> {
    read_records(v, field, BasedSpace::ground(), sp.flat(), &[], &[sp.dim()], "unit")
}

fn read_bialgebra(obj: &Map<String, Value>, field: Field) -> Result<(Bialgebra, Option<LinMap>)> {
    let c = read_coalgebra(obj, field)?;
    let sp = c.space().clone();
    let a = read_algebra(obj, &sp, field)?;
    let b = Bialgebra::new(c, a)?;
    let s = match obj.get("antipode") {
        Some(v) => Some(read_records(
            v,
            field,
            sp.clone(),
            sp.flat(),
            &[sp.dim()],
            &[sp.dim()],
            "antipode",
        )?),
        None => None,
    };
    Ok((b, s))
}

fn read_map(obj: &Map<String, Value>, field: Field) -> Result<LinMap> {
    let dom = read_space(get(obj, "domain")?, "domain")?;
    let cod = read_space(get(obj, "codomain")?, "codomain")?;
    let (m, n) = (dom.dim(), cod.dim());
    read_records(get(obj, "entries")?, field, dom, cod, &[m], &[n], "entries")
}

/// Reads `name` as a map `left ⊗ right → target`.
fn read_binary(
    obj: &Map<String, Value>,
    name: &str,
    field: Field,
    left: &BasedSpace,
    right: &BasedSpace,
    target: &BasedSpace,
) -> Result<LinMap> {
    read_records(
        get(obj, name)?,
        field,
        BasedSpace::tensor(left, right),
        target.flat(),
        &[left.dim(), right.dim()],
        &[target.dim()],
        name,
    )
}

fn read_datum(obj: &Map<String, Value>, field: Field) -> Result<ExtendingDatum> {
    let (a, a_antipode) = read_bialgebra(as_object(get(obj, "a")?, "a")?, field)?;
    let hobj = as_object(get(obj, "h")?, "h")?;
    let h = read_coalgebra(hobj, field)?;
    let hs = h.space().clone();
    let h_algebra = read_algebra(hobj, &hs, field)?;
    let as_ = a.space().clone();
    let ract = read_binary(obj, "ract", field, &hs, &as_, &hs)?;
    let lact = read_binary(obj, "lact", field, &hs, &as_, &as_)?;
    let cocycle = read_binary(obj, "cocycle", field, &hs, &hs, &as_)?;
    ExtendingDatum::new(DatumParts {
        a,
        a_antipode,
        h,
        h_algebra,
        ract,
        lact,
        cocycle,
    })
}

fn read_group(obj: &Map<String, Value>) -> Result<GroupTable> {
    let labels = read_space(get(obj, "labels")?, "group")?.labels().to_vec();
    let rows = get(obj, "table")?
        .as_array()
        .ok_or_else(|| bad("table is not a list"))?;
    let table = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("table row is not a list"))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| bad("table entry is not an index"))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let n = labels.len();
    if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(bad("table shape does not match the labels"));
    }
    GroupTable::new(labels, table)
}

/// Parses a document. Shape problems are [`Error::Format`]; structural
/// failures (a non-associative algebra, a wrong antipode, a table that is
/// not a group) keep their own error kinds.
pub fn parse(text: &str) -> Result<Object> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("not JSON: {e}")))?;
    let doc = as_object(&v, "document")?;
    let version = as_str(get(doc, "format_version")?, "format_version")?;
    if version != FORMAT_VERSION {
        return Err(bad(format!("unsupported format_version {version:?}")));
    }
    let kind = as_str(get(doc, "kind")?, "kind")?;
    let field_text = as_str(get(doc, "field")?, "field")?;
    let payload = get(doc, "payload")?;
    if kind == "report" {
        let r: Report = serde_json::from_value(payload.clone()).map_err(|e| bad(format!("report: {e}")))?;
        return Ok(Object::Report(r));
    }
    let obj = as_object(payload, "payload")?;
    if kind == "group-table" {
        return read_group(obj).map(Object::GroupTable);
    }
    let field = Field::parse_descriptor(field_text).map_err(|e| match e {
        Error::NotPrime(p) => bad(format!("modulus {p} is not prime")),
        other => other,
    })?;
    Ok(match kind {
        "coalgebra" => {
            let c = read_coalgebra(obj, field)?;
            let unit = match obj.get("unit") {
                Some(v) => Some(read_unit(v, c.space(), field)?),
                None => None,
            };
            Object::Coalgebra(c, unit)
        }
        "bialgebra" => Object::Bialgebra(read_bialgebra(obj, field)?.0),
        "hopf" => {
            let (b, s) = read_bialgebra(obj, field)?;
            let s = s.ok_or_else(|| bad("hopf document without antipode"))?;
            Object::Hopf(Hopf::new(b, s)?)
        }
        "extending-datum" => Object::Datum(read_datum(obj, field)?),
        "matched-pair" => {
            let (a, sa) = read_bialgebra(as_object(get(obj, "a")?, "a")?, field)?;
            let (h, sh) = read_bialgebra(as_object(get(obj, "h")?, "h")?, field)?;
            let (as_, hs) = (a.space().clone(), h.space().clone());
            let ract = read_binary(obj, "ract", field, &hs, &as_, &hs)?;
            let lact = read_binary(obj, "lact", field, &hs, &as_, &as_)?;
            Object::MatchedPair(MatchedPair::new(a, sa, h, sh, ract, lact)?)
        }
        "crossed-datum" => {
            let (a, sa) = read_bialgebra(as_object(get(obj, "a")?, "a")?, field)?;
            let (h, _) = read_bialgebra(as_object(get(obj, "h")?, "h")?, field)?;
            let (as_, hs) = (a.space().clone(), h.space().clone());
            let lact = read_binary(obj, "lact", field, &hs, &as_, &as_)?;
            let cocycle = read_binary(obj, "cocycle", field, &hs, &hs, &as_)?;
            Object::CrossedDatum(CrossedDatum::new(a, sa, h, lact, cocycle)?)
        }
        "cocycle" => Object::Cocycle(read_map(obj, field)?),
        "linear-map" => Object::LinearMap(read_map(obj, field)?),
        other => return Err(bad(format!("unknown kind {other:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{group_algebra, symmetric3};

    #[test]
    fn group_algebra_round_trip() {
        let h = group_algebra(&symmetric3(), Field::Rational);
        let text = serialize(&Object::Hopf(h.clone()));
        assert!(text.starts_with("{\n  \"format_version\": \"1\",\n  \"field\": \"rational\",\n  \"kind\": \"hopf\""));
        let back = parse(&text).unwrap();
        assert_eq!(back, Object::Hopf(h));
        assert_eq!(serialize(&back), text);
    }

    #[test]
    fn modular_scalars_and_fractions() {
        let f = Field::prime(5).unwrap();
        let sp = BasedSpace::numbered("v", 2).unwrap();
        let m = LinMap::from_fn(f, sp.clone(), sp, |i| vec![(1 - i, f.from_i64(3 + i as i64))]).unwrap();
        let text = serialize(&Object::LinearMap(m.clone()));
        assert!(text.contains("\"mod 5\""));
        assert_eq!(parse(&text).unwrap(), Object::LinearMap(m));

        let q = Field::Rational;
        let sp = BasedSpace::numbered("w", 1).unwrap();
        let half = q.from_ratio(&BigInt::from(-2), &BigInt::from(4)).unwrap();
        let m = LinMap::from_fn(q, sp.clone(), sp, |_| vec![(0, half.clone())]).unwrap();
        let text = serialize(&Object::LinearMap(m));
        assert!(text.contains("[0, 0, \"-1\", \"2\"]"));
    }

    #[test]
    fn malformed_documents() {
        let h = group_algebra(&symmetric3(), Field::Rational);
        let text = serialize(&Object::Hopf(h));
        for (from, to) in [
            ("\"format_version\": \"1\"", "\"format_version\": \"9\""),
            ("\"rational\"", "\"mod 4\""),
            ("\"kind\": \"hopf\"", "\"kind\": \"teapot\""),
            ("[0, 0, 0, \"1\", \"1\"]", "[0, 0, 7, \"1\", \"1\"]"),
            ("[0, 0, 0, \"1\", \"1\"]", "[0, 0, 0, \"1\", \"0\"]"),
            ("[0, 0, 0, \"1\", \"1\"]", "[0, 0, \"1\", \"1\"]"),
        ] {
            assert!(text.contains(from), "{from}");
            let broken = text.replacen(from, to, 1);
            assert!(matches!(parse(&broken), Err(Error::Format(_))), "{to}");
        }
        assert!(matches!(parse("{"), Err(Error::Format(_))));
    }

    #[test]
    fn group_tables_and_reports() {
        let g = symmetric3();
        let text = serialize(&Object::GroupTable(g.clone()));
        assert!(text.contains("\"field\": \"none\""));
        assert_eq!(parse(&text).unwrap(), Object::GroupTable(g));
        let mut r = Report::new("x");
        r.push(crate::report::Check::fail("2c", Some(vec![0, 1, 1])).with_detail("d"));
        let text = serialize(&Object::Report(r.clone()));
        assert_eq!(parse(&text).unwrap(), Object::Report(r));
    }
}
