//! Acceptance suite. Every criterion is exact; each prints one line.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use unified_core::classification::{
    check_bicrossed_equivalence, check_equivalence, cocycle_convolve, deform_datum, enumerate_cocycles,
    lazy_cocycle_report, quotient_classes, search_equivalence, EquivalenceCertificate, LazyCocycle,
};
use unified_core::coalgebra::{antipode_solve, Bialgebra};
use unified_core::datum::{
    antipode_prext, build_unified_product, check_compatibility, raw_product_report, validate_datum, ExtendingDatum,
};
use unified_core::factorization::{
    certify_isomorphism, group_factorization, mult_map, recover_datum, roundtrip_check, transfer_hopf,
    FactorizationInput, Roundtrip,
};
use unified_core::groups::{
    corpus, coset_extending_structure, group_algebra, grouplike_coalgebra, transversal_extending_structure,
    CosetDecomposition, GroupExtendingStructure, GroupTable,
};
use unified_core::io::{parse, serialize, Object};
use unified_core::special::{build_bicrossed, build_crossed, group_matched_pair};
use unified_core::{witnesses, Field, LinMap};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------------
// test-side oracles

/// `(a, x)(b, y) = (a (x ▷ b) f(x ◁ b, y), (x ◁ b) ⋆ y)` checked directly
/// for a two-sided unit `(1, base)` and associativity.
fn monoid_oracle(s: &GroupExtendingStructure) -> bool {
    let g = &s.g;
    let m = s.x_size();
    let size = g.order() * m;
    let mul = |p: usize, q: usize| {
        let (a, x) = (p / m, p % m);
        let (b, y) = (q / m, q % m);
        let xb = s.ract[x][b];
        g.mul(g.mul(a, s.lact[x][b]), s.cocyc[xb][y]) * m + s.star[xb][y]
    };
    let one = g.identity() * m + s.basepoint;
    (0..size).all(|p| mul(one, p) == p && mul(p, one) == p)
        && (0..size).all(|p| (0..size).all(|q| (0..size).all(|r| mul(mul(p, q), r) == mul(p, mul(q, r)))))
}

fn is_bialgebra_map(phi: &LinMap, src: &Bialgebra, dst: &Bialgebra) -> bool {
    let pp = phi.tensor(phi).unwrap();
    phi.compose(src.mult())
        .unwrap()
        .same_matrix(&dst.mult().compose(&pp).unwrap())
        && dst
            .delta()
            .compose(phi)
            .unwrap()
            .same_matrix(&pp.compose(src.delta()).unwrap())
        && dst.counit().compose(phi).unwrap().same_matrix(src.counit())
        && phi.compose(src.unit()).unwrap().same_matrix(dst.unit())
}

/// `k[A ⊗ X] → k[G]`, `(a, x) ↦ a·x`.
fn product_map(dec: &CosetDecomposition, f: Field, unified: &Bialgebra) -> LinMap {
    let m = dec.representatives.len();
    let (e, _) = group_algebra(&dec.ambient, f).into_parts();
    LinMap::from_basis_fn(f, unified.space().clone(), e.space().clone(), |p| {
        dec.product_in_ambient(p / m, p % m)
    })
    .unwrap()
}

/// Structure constants carried exactly onto `k[G]` by `(a, x) ↦ a·x`.
fn equals_group_algebra(dec: &CosetDecomposition, f: Field, unified: &Bialgebra) -> bool {
    let phi = product_map(dec, f, unified);
    let (e, _) = group_algebra(&dec.ambient, f).into_parts();
    phi.rank() == e.dim() && is_bialgebra_map(&phi, unified, &e)
}

fn certificate_is_sound(cert: &EquivalenceCertificate) -> Result<(), String> {
    let src = build_unified_product(&cert.source).map_err(|e| e.to_string())?;
    let dst = build_unified_product(&cert.target).map_err(|e| e.to_string())?;
    let (phi, psi) = (&cert.phi, &cert.psi);
    let (bs, bd) = (src.bialgebra(), dst.bialgebra());
    ensure!(phi.rank() == bd.dim() && bs.dim() == bd.dim(), "φ not bijective");
    ensure!(is_bialgebra_map(phi, bs, bd), "φ not a bialgebra map");
    ensure!(psi.compose(phi).unwrap().is_identity(), "ψ∘φ ≠ id");
    ensure!(phi.compose(psi).unwrap().is_identity(), "φ∘ψ ≠ id");
    let id = LinMap::identity(bs.field(), bs.space().clone());
    let left = phi
        .compose(&bs.mult().compose(&src.i_a().tensor(&id).unwrap()).unwrap())
        .unwrap();
    let right = bd.mult().compose(&dst.i_a().tensor(phi).unwrap()).unwrap();
    ensure!(left.same_matrix(&right), "φ not left A-linear");
    let id_h = LinMap::identity(bs.field(), cert.source.h().space().clone());
    let left = phi.tensor(&id_h).unwrap().compose(src.coaction()).unwrap();
    let right = dst.coaction().compose(phi).unwrap();
    ensure!(left.same_matrix(&right), "φ not right H-colinear");
    Ok(())
}

// ---------------------------------------------------------------------------
// criterion 1

fn free_positions(s: &GroupExtendingStructure) -> Vec<(usize, usize, usize)> {
    let (n, m, e, b) = (s.g.order(), s.x_size(), s.g.identity(), s.basepoint);
    let mut out = Vec::new();
    for x in (0..m).filter(|&x| x != b) {
        for a in (0..n).filter(|&a| a != e) {
            out.push((0, x, a));
            out.push((1, x, a));
        }
        for y in (0..m).filter(|&y| y != b) {
            out.push((2, x, y));
            out.push((3, x, y));
        }
    }
    out
}

fn table_mut(s: &mut GroupExtendingStructure, t: usize) -> (&mut Vec<Vec<usize>>, usize) {
    let (n, m) = (s.g.order(), s.x_size());
    match t {
        0 => (&mut s.ract, m),
        1 => (&mut s.lact, n),
        2 => (&mut s.cocyc, n),
        _ => (&mut s.star, m),
    }
}

fn random_transversal(g: &GroupTable, sub: &[usize], rng: &mut StdRng) -> Vec<usize> {
    let mut seen = BTreeSet::new();
    let mut reps = vec![g.identity()];
    let mut base: Vec<usize> = sub.to_vec();
    base.sort_unstable();
    seen.insert(base);
    for t in 0..g.order() {
        let mut coset: Vec<usize> = sub.iter().map(|&a| g.mul(a, t)).collect();
        coset.sort_unstable();
        if seen.insert(coset.clone()) {
            reps.push(coset[rng.gen_range(0..coset.len())]);
        }
    }
    reps
}

fn valid_pool(rng: &mut StdRng) -> Vec<GroupExtendingStructure> {
    let mut pool = Vec::new();
    for (_, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 16) {
        for sub in g.subgroups() {
            if sub.len() > 4 || g.order() / sub.len() > 4 {
                continue;
            }
            pool.push(coset_extending_structure(&g, &sub).unwrap().structure);
            let reps = random_transversal(&g, &sub, rng);
            pool.push(transversal_extending_structure(&g, &sub, &reps).unwrap().structure);
        }
    }
    pool
}

fn random_structure(rng: &mut StdRng) -> GroupExtendingStructure {
    let c2 = GroupTable::cyclic(2);
    let groups = [
        GroupTable::cyclic(1),
        GroupTable::cyclic(2),
        GroupTable::cyclic(3),
        GroupTable::cyclic(4),
        GroupTable::direct_product(&c2, &c2),
    ];
    let g = groups[rng.gen_range(0..groups.len())].clone();
    let (n, m) = (g.order(), rng.gen_range(1..=4));
    let e = g.identity();
    let mut s = GroupExtendingStructure {
        x_labels: (0..m).map(|i| format!("x{i}")).collect(),
        basepoint: 0,
        ract: (0..m).map(|x| vec![x; n]).collect(),
        lact: (0..m).map(|_| (0..n).collect()).collect(),
        cocyc: vec![vec![e; m]; m],
        star: (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        if x == 0 {
                            y
                        } else if y == 0 {
                            x
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect(),
        g,
    };
    for (t, x, y) in free_positions(&s) {
        let (table, bound) = table_mut(&mut s, t);
        table[x][y] = rng.gen_range(0..bound);
    }
    s
}

fn perturb(mut s: GroupExtendingStructure, rng: &mut StdRng) -> Option<GroupExtendingStructure> {
    let free = free_positions(&s);
    if free.is_empty() {
        return None;
    }
    let (t, x, y) = free[rng.gen_range(0..free.len())];
    let (table, bound) = table_mut(&mut s, t);
    if bound < 2 {
        return None;
    }
    let old = table[x][y];
    table[x][y] = (old + rng.gen_range(1..bound)) % bound;
    Some(s)
}

fn criterion_compatibility_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x0075_6e69);
    let pool = valid_pool(&mut rng);
    let f = Field::Rational;
    let mut tally: BTreeMap<(&str, bool), usize> = BTreeMap::new();
    let mut samples = 0;
    while samples < 240 {
        let (origin, s) = match samples % 3 {
            0 => ("valid", pool[rng.gen_range(0..pool.len())].clone()),
            1 => match perturb(pool[rng.gen_range(0..pool.len())].clone(), &mut rng) {
                Some(s) => ("perturbed", s),
                None => continue,
            },
            _ => ("random", random_structure(&mut rng)),
        };
        let d = s.lift(f).map_err(|e| e.to_string())?;
        ensure!(validate_datum(&d).all_passed(), "sample {samples} is not normalized");
        let conditions = check_compatibility(&d).all_passed();
        let brute = raw_product_report(&d).all_passed();
        let oracle = monoid_oracle(&s);
        let set_level = s.check().all_passed();
        ensure!(
            conditions == brute && brute == oracle && oracle == set_level,
            "sample {samples} ({origin}): conditions {conditions}, bialgebra {brute}, monoid {oracle}, set level {set_level}"
        );
        *tally.entry((origin, conditions)).or_default() += 1;
        samples += 1;
    }
    let passing: usize = tally.iter().filter(|((_, ok), _)| *ok).map(|(_, c)| c).sum();
    ensure!(passing > 0 && passing < samples, "no mix of outcomes: {tally:?}");
    Ok(format!("{samples} samples, {passing} valid, all agree"))
}

// ---------------------------------------------------------------------------
// criteria 2 to 4

fn criterion_bicrossed() -> Outcome {
    let f = Field::Rational;
    let dec = witnesses::s3_decomposition();
    let mp = group_matched_pair(&dec.structure, f).map_err(|e| e.to_string())?;
    let p = build_bicrossed(&mp).map_err(|e| e.to_string())?;
    ensure!(
        equals_group_algebra(&dec, f, p.bialgebra()),
        "not k[S3] under (a, h) ↦ ah"
    );
    let s = p.antipode().ok_or("no antipode")?;
    ensure!(
        s.same_matrix(&antipode_solve(p.bialgebra()).unwrap()),
        "antipode differs from the solved one"
    );
    let phi = product_map(&dec, f, p.bialgebra());
    let s_g = group_algebra(&dec.ambient, f).antipode().clone();
    ensure!(
        phi.compose(s).unwrap().same_matrix(&s_g.compose(&phi).unwrap()),
        "antipode is not g ↦ g⁻¹"
    );
    Ok("k[S3] exactly, antipode matches".into())
}

fn criterion_crossed() -> Outcome {
    let f = Field::Rational;
    let c2 = GroupTable::cyclic(2);
    let z4 = witnesses::c2_extension(f, true);
    let klein = witnesses::c2_extension(f, false);
    let pz = build_crossed(&z4).map_err(|e| e.to_string())?;
    let pk = build_crossed(&klein).map_err(|e| e.to_string())?;
    ensure!(
        pz.bialgebra()
            .same_structure(group_algebra(&GroupTable::cyclic(4), f).bialgebra()),
        "twisted extension is not k[Z4]"
    );
    ensure!(
        pk.bialgebra()
            .same_structure(group_algebra(&GroupTable::direct_product(&c2, &c2), f).bialgebra()),
        "trivial extension is not k[Z2×Z2]"
    );
    let d = z4.to_datum();
    let count = enumerate_cocycles(d.h(), d.h_unit(), d.a(), 100)
        .map_err(|e| e.to_string())?
        .len();
    ensure!(count == 2, "{count} cocycles");
    let classes = quotient_classes(&[z4.to_datum(), klein.to_datum()], 100).map_err(|e| e.to_string())?;
    ensure!(
        classes.classes == vec![vec![0], vec![1]],
        "classes {:?}",
        classes.classes
    );
    Ok("k[Z4] and k[Z2×Z2], 2 cocycles, 2 classes".into())
}

fn criterion_neither() -> Outcome {
    let f = Field::Rational;
    let dec = witnesses::a4_decomposition();
    let fi = group_factorization(&dec, f).map_err(|e| e.to_string())?;
    let d = recover_datum(&fi).map_err(|e| e.to_string())?;
    ensure!(!d.has_trivial_cocycle(), "f is trivial");
    ensure!(!d.has_trivial_ract(), "◁ is trivial");
    ensure!(
        d.same_maps(&dec.structure.lift(f).unwrap()),
        "recovered datum differs from the coset datum"
    );
    let p = build_unified_product(&d).map_err(|e| e.to_string())?;
    ensure!(
        equals_group_algebra(&dec, f, p.bialgebra()),
        "rebuilt product is not k[A4]"
    );
    ensure!(
        certify_isomorphism(&fi, &d).unwrap().all_passed(),
        "multiplication map not certified"
    );
    ensure!(
        roundtrip_check(&d).unwrap() == Roundtrip::Identical,
        "roundtrip differs"
    );
    Ok("f and ◁ nontrivial, k[A4] exactly, roundtrip identical".into())
}

// ---------------------------------------------------------------------------
// criterion 5

fn criterion_functoriality() -> Outcome {
    let f = Field::Rational;
    let mut count = 0;
    for (name, g) in corpus() {
        for sub in g.subgroups() {
            let ges = coset_extending_structure(&g, &sub).unwrap().structure;
            ensure!(ges.check().all_passed(), "{name} {sub:?}: set-level check fails");
            let table = ges.unified_group().map_err(|e| e.to_string())?;
            let d = ges.lift(f).map_err(|e| e.to_string())?;
            let p = build_unified_product(&d).map_err(|e| format!("{name} {sub:?}: {e}"))?;
            ensure!(
                p.bialgebra().same_structure(group_algebra(&table, f).bialgebra()),
                "{name} {sub:?}: lift and product disagree"
            );
            count += 1;
        }
    }
    let a6 = witnesses::a6_decomposition();
    ensure!(a6.structure.check().all_passed(), "A6 structure fails its check");
    let table = a6.structure.unified_group().map_err(|e| e.to_string())?;
    ensure!(a6.reproduces_ambient(&table), "A6 table not reproduced");
    Ok(format!("{count} subgroups, A6 = A4·S with |S| = 30 reproduced"))
}

// ---------------------------------------------------------------------------
// criterion 6

/// `x ↦ y` with `x ⋆ y = y ⋆ x = base`, if every `x` has one.
fn magma_inverse(s: &GroupExtendingStructure) -> Option<Vec<usize>> {
    let b = s.basepoint;
    (0..s.x_size())
        .map(|x| (0..s.x_size()).find(|&y| s.star[x][y] == b && s.star[y][x] == b))
        .collect()
}

fn transfer_agrees(fi: &FactorizationInput) -> Result<(), String> {
    let d = recover_datum(fi).map_err(|e| e.to_string())?;
    let p = build_unified_product(&d).map_err(|e| e.to_string())?;
    let e = unified_core::coalgebra::Hopf::new(fi.e().clone(), fi.e_antipode().ok_or("no S_E")?.clone())
        .map_err(|e| e.to_string())?;
    let t = transfer_hopf(p.bialgebra().coalgebra(), &e, &mult_map(fi)).map_err(|e| e.to_string())?;
    ensure!(
        t.bialgebra().same_structure(p.bialgebra()),
        "transferred structure differs from the product"
    );
    let solved = antipode_solve(p.bialgebra()).map_err(|e| e.to_string())?;
    ensure!(
        t.antipode().same_matrix(&solved),
        "transferred antipode differs from the solved one"
    );
    Ok(())
}

fn read_fixture(name: &str) -> Object {
    parse(&fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

fn criterion_antipodes() -> Outcome {
    let f = Field::Rational;
    let mut compared = 0;
    // S3 and Z4 with the antipode of H as supplied
    let mp = witnesses::s3_matched_pair(f);
    let p = build_bicrossed(&mp).unwrap();
    let s = antipode_prext(&p, mp.h_antipode().unwrap()).map_err(|e| e.to_string())?;
    ensure!(s.same_matrix(&antipode_solve(p.bialgebra()).unwrap()), "S3");
    compared += 1;
    for twisted in [true, false] {
        let cd = witnesses::c2_extension(f, twisted);
        let p = build_crossed(&cd).unwrap();
        let s_h = group_algebra(&GroupTable::cyclic(2), f).antipode().clone();
        let s = antipode_prext(&p, &s_h).map_err(|e| e.to_string())?;
        ensure!(
            s.same_matrix(&antipode_solve(p.bialgebra()).unwrap()),
            "C2 by C2, twisted {twisted}"
        );
        compared += 1;
    }
    // group cases: inverse in the representative magma, where it qualifies
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 12) {
        for sub in g.subgroups() {
            let ges = coset_extending_structure(&g, &sub).unwrap().structure;
            let Some(inv) = magma_inverse(&ges) else { continue };
            let d = ges.lift(f).unwrap();
            let p = build_unified_product(&d).unwrap();
            let s_h = LinMap::from_basis_fn(f, d.h().space().clone(), d.h().space().clone(), |x| inv[x]).unwrap();
            match antipode_prext(&p, &s_h) {
                Ok(s) => {
                    ensure!(s.same_matrix(&antipode_solve(p.bialgebra()).unwrap()), "{name} {sub:?}");
                    compared += 1;
                }
                Err(unified_core::Error::Precondition(_)) => {}
                Err(e) => return Err(format!("{name} {sub:?}: {e}")),
            }
        }
    }
    // factorization fixtures
    let (Object::Hopf(z4), Object::LinearMap(sub_a), Object::LinearMap(sub_h)) = (
        read_fixture("z4-hopf.json"),
        read_fixture("z4-sub-a.json"),
        read_fixture("z4-sub-h.json"),
    ) else {
        return Err("factorization fixtures have the wrong kinds".into());
    };
    let (e, s_e) = z4.into_parts();
    let mut inputs = vec![FactorizationInput::new(e, Some(s_e), sub_a, sub_h).unwrap()];
    for dec in [
        witnesses::s3_decomposition(),
        witnesses::s3_decomposition_flipped(),
        witnesses::a4_decomposition(),
    ] {
        inputs.push(group_factorization(&dec, f).unwrap());
    }
    for (i, fi) in inputs.iter().enumerate() {
        transfer_agrees(fi).map_err(|e| format!("factorization {i}: {e}"))?;
    }
    Ok(format!("{compared} formula antipodes, {} transfers", inputs.len()))
}

// ---------------------------------------------------------------------------
// criterion 7

fn cocycle_group_axioms() -> Result<usize, String> {
    let f = Field::Rational;
    let mut cases = 0;
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 6) {
        let (a, s_a) = group_algebra(&g, f).into_parts();
        for m in 1..=3usize {
            let labels: Vec<String> = (0..m).map(|i| format!("x{i}")).collect();
            let (h, unit) = grouplike_coalgebra(&labels, 0, f).unwrap();
            let all = enumerate_cocycles(&h, &unit, &a, 1000).map_err(|e| e.to_string())?;
            let k = all.len();
            ensure!(k == g.order().pow(m as u32 - 1), "{name}, |X| = {m}: {k} cocycles");
            let index: BTreeMap<Vec<usize>, usize> = all
                .iter()
                .enumerate()
                .map(|(i, u)| (u.map().as_basis_map().unwrap(), i))
                .collect();
            for u in &all {
                ensure!(
                    lazy_cocycle_report(u.map(), &h, &unit, &a).all_passed(),
                    "{name}: not lazy"
                );
            }
            let find = |u: &LazyCocycle| u.map().as_basis_map().and_then(|v| index.get(&v).copied());
            let one = find(&LazyCocycle::trivial(&h, &a)).ok_or("trivial cocycle missing")?;
            let mut table = vec![vec![0; k]; k];
            for i in 0..k {
                for j in 0..k {
                    let w = cocycle_convolve(&all[i], &all[j], &h, &unit, &a).map_err(|e| e.to_string())?;
                    table[i][j] = find(&w).ok_or(format!("{name}: not closed"))?;
                }
                ensure!(table[i][one] == i && table[one][i] == i, "{name}: no identity");
                let inv = find(&all[i].inverse(&s_a)).ok_or("inverse missing")?;
                ensure!(table[i][inv] == one && table[inv][i] == one, "{name}: no inverse");
            }
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        ensure!(
                            table[table[i][j]][l] == table[i][table[j][l]],
                            "{name}: not associative"
                        );
                    }
                }
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn certificates() -> Result<usize, String> {
    let f = Field::Rational;
    let mut sound = 0;
    let mut families: Vec<Vec<ExtendingDatum>> = Vec::new();
    let a4 = witnesses::a4_datum(f).unwrap();
    let us = enumerate_cocycles(a4.h(), a4.h_unit(), a4.a(), 100).unwrap();
    families.push(vec![
        a4.clone(),
        deform_datum(&a4, us[5].map()).unwrap(),
        deform_datum(&a4, us[22].map()).unwrap(),
    ]);
    families.push(vec![
        witnesses::c2_extension(f, true).to_datum(),
        witnesses::c2_extension(f, false).to_datum(),
    ]);
    for dec in [witnesses::s3_decomposition(), witnesses::s3_decomposition_flipped()] {
        families.push(vec![dec.structure.lift(f).unwrap()]);
    }
    for family in &families {
        let d0 = &family[0];
        let all = enumerate_cocycles(d0.h(), d0.h_unit(), d0.a(), 100).unwrap();
        for d in family {
            for d2 in family {
                for u in &all {
                    let out = check_equivalence(d, d2, u.map()).map_err(|e| e.to_string())?;
                    ensure!(
                        out.certificate.is_some() == out.report.all_passed(),
                        "certificate without a pass"
                    );
                    if let Some(cert) = out.certificate {
                        certificate_is_sound(&cert)?;
                        sound += 1;
                    }
                }
            }
        }
    }
    ensure!(sound > 0, "no certificate issued");
    Ok(sound)
}

fn relation_is_an_equivalence() -> Result<usize, String> {
    let f = Field::Rational;
    let mut data_count = 0;
    let mut family_sets: Vec<Vec<ExtendingDatum>> = vec![vec![
        witnesses::c2_extension(f, true).to_datum(),
        witnesses::c2_extension(f, false).to_datum(),
    ]];
    for (_, g) in corpus().into_iter().filter(|(_, g)| g.order() <= 12) {
        for sub in g.subgroups() {
            if sub.len() > 4 || g.order() / sub.len() > 4 {
                continue;
            }
            let d = coset_extending_structure(&g, &sub).unwrap().structure.lift(f).unwrap();
            let us = enumerate_cocycles(d.h(), d.h_unit(), d.a(), 1000).unwrap();
            let mut family = vec![d.clone()];
            family.extend(
                us.iter()
                    .skip(1)
                    .step_by(7)
                    .take(2)
                    .map(|u| deform_datum(&d, u.map()).unwrap()),
            );
            family_sets.push(family);
        }
    }
    for family in &family_sets {
        let k = family.len();
        let rel: Vec<Vec<bool>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| search_equivalence(&family[i], &family[j], 1 << 16).unwrap().is_some())
                    .collect()
            })
            .collect();
        for i in 0..k {
            ensure!(rel[i][i], "not reflexive");
            for j in 0..k {
                ensure!(rel[i][j] == rel[j][i], "not symmetric");
                for l in 0..k {
                    ensure!(!(rel[i][j] && rel[j][l]) || rel[i][l], "not transitive");
                }
            }
        }
        let part = quotient_classes(family, 1 << 16).map_err(|e| e.to_string())?;
        let expected = (0..k).filter(|&i| (0..i).all(|j| !rel[j][i])).count();
        ensure!(part.classes.len() == expected, "partition disagrees with the relation");
        data_count += k;
    }
    Ok(data_count)
}

fn only_trivial_cocycle() -> Result<(), String> {
    let f = Field::Rational;
    let passing = |dec: CosetDecomposition| -> Vec<bool> {
        let mp = group_matched_pair(&dec.structure, f).unwrap();
        let d = mp.to_datum();
        enumerate_cocycles(d.h(), d.h_unit(), d.a(), 10)
            .unwrap()
            .iter()
            .map(|u| check_bicrossed_equivalence(&mp, &mp, u.map()).unwrap().all_passed())
            .collect()
    };
    let flipped = passing(witnesses::s3_decomposition_flipped());
    ensure!(flipped == vec![true, false, false, false], "A = ⟨(12)⟩: {flipped:?}");
    let normal = passing(witnesses::s3_decomposition());
    ensure!(normal == vec![true, true, true], "A = C3: {normal:?}");
    Ok(())
}

fn criterion_classification() -> Outcome {
    let cases = cocycle_group_axioms()?;
    let sound = certificates()?;
    let data = relation_is_an_equivalence()?;
    only_trivial_cocycle()?;
    Ok(format!(
        "{cases} cocycle groups, {sound} certificates verified, ≈ checked on {data} data, S3 trivial-only"
    ))
}

// ---------------------------------------------------------------------------
// criterion 8

fn criterion_io() -> Outcome {
    let fixtures = canonical_fixtures();
    for (name, x) in &fixtures {
        let on_disk = fs::read_to_string(fixture(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            serialize(x) == on_disk,
            "{name}: serialization differs from the golden file"
        );
        let back = parse(&on_disk).map_err(|e| format!("{name}: {e}"))?;
        ensure!(serialize(&back) == on_disk, "{name}: round trip is not byte-exact");
    }
    let malformed = malformed_fixtures();
    for (name, _) in &malformed {
        let text = fs::read_to_string(fixture(name)).unwrap();
        ensure!(
            matches!(parse(&text), Err(unified_core::Error::Format(_))),
            "{name} accepted"
        );
    }
    let rows = contract();
    for (args, code) in &rows {
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let (got, _) = run_cli(&argv);
        ensure!(got == *code, "{args:?}: exit {got}, expected {code}");
    }
    Ok(format!(
        "{} golden files, {} malformed, {} contract rows",
        fixtures.len(),
        malformed.len(),
        rows.len()
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "compatibility conditions vs brute-force bialgebra axioms",
            criterion_compatibility_oracle,
        ),
        ("bicrossed witness S3", criterion_bicrossed),
        ("crossed witnesses Z4 and Z2×Z2", criterion_crossed),
        ("A4 factorization, neither crossed nor bicrossed", criterion_neither),
        ("group functoriality over the corpus", criterion_functoriality),
        ("antipode consistency", criterion_antipodes),
        ("classification suite", criterion_classification),
        ("I/O determinism and exit codes", criterion_io),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
