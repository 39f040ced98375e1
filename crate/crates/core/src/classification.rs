//! Lazy cocycles `u: H → A` (renamed "cocycle" throughout), the
//! equivalence test between two extending data sharing `A`, `H` and `◁`,
//! and desk-scale enumeration of equivalence classes.
//!
//! Orientation: `check_equivalence(d, d2, u)` certifies a morphism
//! `φ: A ⋉_{d2} H → A ⋉_d H`, `φ(a ⋉ h) = a u(h1) ⋉ h2`.

use serde::{Deserialize, Serialize};

use crate::coalgebra::{coalgebra_map_check, convolution, unit_counit, Bialgebra, Coalgebra};
use crate::datum::{algebra_map_check, build_unified_product, ExtendingDatum, UnifiedProduct};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{Check, Report};
use crate::space::BasedSpace;
use crate::special::MatchedPair;
use crate::tensor::{find_counterexample, map_from_tensors, Tensor};

/// Coalgebra-map property, `u(1_H) = 1_A`, and `h1 ⊗ u(h2) = h2 ⊗ u(h1)`.
pub fn lazy_cocycle_report(u: &LinMap, h: &Coalgebra, h_unit: &LinMap, a: &Bialgebra) -> Report {
    let mut r = Report::new("lazy cocycle");
    let field = h.field();
    if u.domain().dim() != h.dim() || u.codomain().dim() != a.dim() || u.field() != field {
        r.push(Check::fail("shape", None));
        return r;
    }
    let u = u
        .reshape(h.space().clone(), a.space().flat())
        .expect("dimensions checked");
    r.push(coalgebra_map_check("coalgebra-map", &u, h, a.coalgebra()));
    let unital = Tensor::unit(field).insert(h_unit, 0).map(&u, 0) == Tensor::unit(field).insert(a.unit(), 0);
    r.push(if unital {
        Check::pass("unitary")
    } else {
        Check::fail("unitary", None)
    });
    let n = h.dim();
    let w = find_counterexample(&[n], |i| {
        let t = Tensor::basis(field, &[n], i).map(h.delta(), 0);
        t.map(&u, 1) == t.permute(&[1, 0]).map(&u, 1)
    });
    r.push(Check::from_search("lazy", w));
    r
}

pub fn is_lazy_cocycle(u: &LinMap, h: &Coalgebra, h_unit: &LinMap, a: &Bialgebra) -> bool {
    lazy_cocycle_report(u, h, h_unit, a).all_passed()
}

/// A map `H → A` known to be a lazy cocycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LazyCocycle {
    map: LinMap,
}

impl LazyCocycle {
    pub fn new(u: LinMap, h: &Coalgebra, h_unit: &LinMap, a: &Bialgebra) -> Result<Self> {
        let r = lazy_cocycle_report(&u, h, h_unit, a);
        if !r.all_passed() {
            return Err(Error::ChecksFailed(r.failed_ids()));
        }
        Ok(LazyCocycle {
            map: u.reshape(h.space().clone(), a.space().flat())?,
        })
    }

    /// `η_A ∘ ε_H`
    pub fn trivial(h: &Coalgebra, a: &Bialgebra) -> Self {
        LazyCocycle {
            map: unit_counit(h, a.algebra()),
        }
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    /// `S_A ∘ u`, the convolution inverse.
    pub fn inverse(&self, s_a: &LinMap) -> LazyCocycle {
        let s_a = s_a
            .reshape(self.map.codomain().clone(), self.map.codomain().clone())
            .expect("antipode of A");
        LazyCocycle {
            map: s_a.compose(&self.map).expect("shapes agree"),
        }
    }
}

/// `u * v`, re-checked to be a lazy cocycle.
pub fn cocycle_convolve(
    u: &LazyCocycle,
    v: &LazyCocycle,
    h: &Coalgebra,
    h_unit: &LinMap,
    a: &Bialgebra,
) -> Result<LazyCocycle> {
    let w = convolution(&u.map, &v.map, h, a.algebra())?;
    LazyCocycle::new(w, h, h_unit, a)
}

/// All pointed maps from the group-like basis of `H` to the group-like
/// basis of `A`; for group-like coalgebras into group algebras these are
/// exactly the lazy cocycles. Fails if there would be more than `cap`.
pub fn enumerate_cocycles(h: &Coalgebra, h_unit: &LinMap, a: &Bialgebra, cap: u128) -> Result<Vec<LazyCocycle>> {
    if !h.is_grouplike_basis() || !a.coalgebra().is_grouplike_basis() {
        return Err(Error::Precondition("enumeration needs group-like bases".into()));
    }
    let base = h_unit
        .as_basis_map()
        .map(|v| v[0])
        .ok_or_else(|| Error::Precondition("unit of H is not a basis vector".into()))?;
    let one = a
        .unit()
        .as_basis_map()
        .map(|v| v[0])
        .ok_or_else(|| Error::Precondition("unit of A is not a basis vector".into()))?;
    let (m, n) = (h.dim(), a.dim());
    let count = (n as u128).checked_pow((m - 1) as u32).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    let free: Vec<usize> = (0..m).filter(|&x| x != base).collect();
    let mut out = Vec::with_capacity(count as usize);
    let mut digits = vec![0usize; free.len()];
    loop {
        let mut images = vec![one; m];
        for (k, &x) in free.iter().enumerate() {
            images[x] = digits[k];
        }
        let map = LinMap::from_basis_fn(h.field(), h.space().clone(), a.space().flat(), |i| images[i])?;
        out.push(LazyCocycle { map });
        // odometer, last digit fastest
        let mut k = free.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            digits[k] += 1;
            if digits[k] < n {
                break;
            }
            digits[k] = 0;
        }
    }
}

fn same_setting(d: &ExtendingDatum, d2: &ExtendingDatum) -> Result<()> {
    if !d.a().same_structure(d2.a()) {
        return Err(Error::Precondition("the data do not share A".into()));
    }
    if !d.h().delta().same_matrix(d2.h().delta())
        || !d.h().counit().same_matrix(d2.h().counit())
        || !d.h_unit().same_matrix(d2.h_unit())
    {
        return Err(Error::Precondition("the data do not share the coalgebra H".into()));
    }
    Ok(())
}

/// `h ▷′ c = u(h1)(h2 ▷ c1) S_A(u(h3 ◁ c2))` for the actions of `d`.
pub fn twisted_lact(d: &ExtendingDatum, u: &LinMap, s_a: &LinMap) -> LinMap {
    let field = d.field();
    let (na, nh) = (d.dim_a(), d.dim_h());
    let ha = BasedSpace::tensor(&d.h().space().flat(), &d.a().space().flat());
    let u = u.reshape(d.h().space().clone(), d.a().space().flat()).expect("shape");
    let ma = d.a().mult();
    map_from_tensors(field, &ha, &d.a().space().flat(), |idx| {
        Tensor::basis(field, &[nh, na], idx)
            .map(d.h().delta(), 0)
            .map(d.h().delta(), 1)
            .map(d.a().delta(), 3)
            .permute(&[0, 1, 3, 2, 4])
            .map(&u, 0)
            .apply(d.lact(), 1, 2)
            .apply(d.ract(), 2, 2)
            .map(&u, 2)
            .map(s_a, 2)
            .apply(ma, 0, 2)
            .apply(ma, 0, 2)
    })
}

/// `h ·′ g = (h ◁ u(g1)) · g2`
pub fn twisted_dot(d: &ExtendingDatum, u: &LinMap) -> LinMap {
    let field = d.field();
    let nh = d.dim_h();
    let hh = BasedSpace::tensor(&d.h().space().flat(), &d.h().space().flat());
    let u = u.reshape(d.h().space().clone(), d.a().space().flat()).expect("shape");
    map_from_tensors(field, &hh, &d.h().space().flat(), |idx| {
        Tensor::basis(field, &[nh, nh], idx)
            .map(d.h().delta(), 1)
            .map(&u, 1)
            .apply(d.ract(), 0, 2)
            .apply(d.dot(), 0, 2)
    })
}

/// `f′(h, g) = u(h1)(h2 ▷ u(g1)) f(h3 ◁ u(g2), g3) S_A(u(h4 ·′ g4))`,
/// with `·′` supplied.
pub fn twisted_cocycle(d: &ExtendingDatum, u: &LinMap, s_a: &LinMap, dot2: &LinMap) -> LinMap {
    let field = d.field();
    let nh = d.dim_h();
    let dh = d.h().delta();
    let ma = d.a().mult();
    let hh = BasedSpace::tensor(&d.h().space().flat(), &d.h().space().flat());
    let u = u.reshape(d.h().space().clone(), d.a().space().flat()).expect("shape");
    map_from_tensors(field, &hh, &d.a().space().flat(), |idx| {
        Tensor::basis(field, &[nh, nh], idx)
            .map(dh, 0)
            .map(dh, 1)
            .map(dh, 2)
            .map(dh, 4)
            .map(dh, 5)
            .map(dh, 6)
            // h1 h2 h3 h4 g1 g2 g3 g4 → h1 h2 g1 h3 g2 g3 h4 g4
            .permute(&[0, 1, 4, 2, 5, 6, 3, 7])
            .map(&u, 0)
            .map(&u, 2)
            .apply(d.lact(), 1, 2)
            .map(&u, 3)
            .apply(d.ract(), 2, 2)
            .apply(d.cocycle(), 2, 2)
            .apply(dot2, 3, 2)
            .map(&u, 3)
            .map(s_a, 3)
            .apply(ma, 0, 2)
            .apply(ma, 0, 2)
            .apply(ma, 0, 2)
    })
}

/// The datum `d` twisted by a lazy cocycle `u`: same `◁`, with `▷′`, `·′`
/// and `f′` given by the twisting formulas.
pub fn deform_datum(d: &ExtendingDatum, u: &LinMap) -> Result<ExtendingDatum> {
    let s_a = d
        .a_antipode()
        .ok_or_else(|| Error::Precondition("A has no antipode".into()))?;
    let lazy = lazy_cocycle_report(u, d.h(), d.h_unit(), d.a());
    if !lazy.all_passed() {
        return Err(Error::ChecksFailed(lazy.failed_ids()));
    }
    let dot2 = twisted_dot(d, u);
    let f2 = twisted_cocycle(d, u, s_a, &dot2);
    let lact2 = twisted_lact(d, u, s_a);
    d.with_dot(dot2)?.with_lact(lact2)?.with_cocycle(f2)
}

fn compare(id: &str, expected: &LinMap, actual: &LinMap) -> Check {
    match expected.first_difference(actual) {
        None => Check::pass(id),
        Some(i) => Check::fail(id, Some(actual.domain().split_index(i))),
    }
}

/// The conditions alone: `◁′ = ◁`, `u` lazy, and the three twisting
/// identities relating `▷′`, `f′`, `·′` to `▷`, `f`, `·`.
pub fn equivalence_conditions(d: &ExtendingDatum, d2: &ExtendingDatum, u: &LinMap) -> Result<Report> {
    same_setting(d, d2)?;
    let s_a = d
        .a_antipode()
        .ok_or_else(|| Error::Precondition("A has no antipode".into()))?;
    let mut r = Report::new("equivalence");
    r.push(compare("ract-equal", d.ract(), d2.ract()));
    let lazy = lazy_cocycle_report(u, d.h(), d.h_unit(), d.a());
    r.push(match lazy.first_failure() {
        None => Check::pass("lazy-cocycle"),
        Some(c) => Check::fail("lazy-cocycle", c.witness.clone()).with_detail(c.id.clone()),
    });
    if !r.all_passed() {
        return Ok(r);
    }
    let u = u.reshape(d.h().space().clone(), d.a().space().flat())?;
    r.push(compare("C2", &twisted_lact(d, &u, s_a), d2.lact()));
    r.push(compare("C3", &twisted_cocycle(d, &u, s_a, d2.dot()), d2.cocycle()));
    r.push(compare("C4", &twisted_dot(d, &u), d2.dot()));
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct EquivalenceCertificate {
    pub source: ExtendingDatum,
    pub target: ExtendingDatum,
    pub cocycle: LinMap,
    /// `φ: A ⋉_source H → A ⋉_target H`
    pub phi: LinMap,
    pub psi: LinMap,
}

#[derive(Clone, Debug)]
pub struct EquivalenceOutcome {
    pub report: Report,
    pub certificate: Option<EquivalenceCertificate>,
}

/// `a ⋉ h ↦ a w(h1) ⋉ h2` on `A ⊗ H`.
fn twist_map(d: &ExtendingDatum, w: &LinMap) -> LinMap {
    let field = d.field();
    let (na, nh) = (d.dim_a(), d.dim_h());
    let space = BasedSpace::tensor(d.a().space(), d.h().space());
    let slots = BasedSpace::tensor(&d.a().space().flat(), &d.h().space().flat());
    map_from_tensors(field, &slots, &space.flat(), |idx| {
        Tensor::basis(field, &[na, nh], idx)
            .map(d.h().delta(), 1)
            .map(w, 1)
            .apply(d.a().mult(), 0, 2)
            .merge(0, 2)
    })
    .reshape(space.clone(), space)
    .expect("same dimensions")
}

/// Checks that `φ` is a bialgebra map, left `A`-linear, right
/// `H`-colinear, inverse to `ψ`, and compatible with `π_H` and `i_A`.
pub fn certify_morphism(source: &UnifiedProduct, target: &UnifiedProduct, phi: &LinMap, psi: &LinMap) -> Report {
    let mut r = Report::new("equivalence certificate");
    let (bs, bt) = (source.bialgebra(), target.bialgebra());
    r.push(coalgebra_map_check(
        "phi-coalgebra-map",
        phi,
        bs.coalgebra(),
        bt.coalgebra(),
    ));
    r.push(algebra_map_check("phi-algebra-map", phi, bs.algebra(), bt.algebra()));

    let field = bs.field();
    let n = bs.dim();
    let na = source.datum().dim_a();
    let phi_flat = phi.reshape(bs.space().clone(), bs.space().flat()).expect("square");
    let ia_s = source
        .i_a()
        .reshape(source.datum().a().space().clone(), bs.space().flat())
        .expect("shape");
    let ia_t = target
        .i_a()
        .reshape(target.datum().a().space().clone(), bt.space().flat())
        .expect("shape");
    let w = find_counterexample(&[na, n], |i| {
        let t = Tensor::basis(field, &[na, n], i);
        let lhs = t.map(&ia_s, 0).apply(bs.mult(), 0, 2).map(&phi_flat, 0);
        let rhs = t.map(&phi_flat, 1).map(&ia_t, 0).apply(bt.mult(), 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("phi-left-a-linear", w));

    let id_h = LinMap::identity(field, source.datum().h().space().clone());
    let lhs = target.coaction().compose(phi).expect("shapes");
    let rhs = phi.tensor(&id_h).expect("field").compose(source.coaction());
    let colinear = rhs.map(|rhs| lhs.same_matrix(&rhs)).unwrap_or(false);
    r.push(if colinear {
        Check::pass("phi-right-h-colinear")
    } else {
        Check::fail("phi-right-h-colinear", None)
    });

    let id = LinMap::identity(field, bs.space().clone());
    let ok = |m: Result<LinMap>| m.map(|m| m.same_matrix(&id)).unwrap_or(false);
    r.push(if ok(psi.compose(phi)) {
        Check::pass("psi-phi-identity")
    } else {
        Check::fail("psi-phi-identity", None)
    });
    r.push(if ok(phi.compose(psi)) {
        Check::pass("phi-psi-identity")
    } else {
        Check::fail("phi-psi-identity", None)
    });
    let pi = target
        .pi_h()
        .compose(phi)
        .map(|m| m.same_matrix(source.pi_h()))
        .unwrap_or(false);
    r.push(if pi {
        Check::pass("pi-h-preserved")
    } else {
        Check::fail("pi-h-preserved", None)
    });
    let ia = phi
        .compose(source.i_a())
        .map(|m| m.same_matrix(target.i_a()))
        .unwrap_or(false);
    r.push(if ia {
        Check::pass("i-a-preserved")
    } else {
        Check::fail("i-a-preserved", None)
    });
    r
}

/// Tests whether `u` realizes an equivalence `A ⋉_{d2} H → A ⋉_d H`; on
/// success the morphism is built and certified.
pub fn check_equivalence(d: &ExtendingDatum, d2: &ExtendingDatum, u: &LinMap) -> Result<EquivalenceOutcome> {
    let mut report = equivalence_conditions(d, d2, u)?;
    if !report.all_passed() {
        return Ok(EquivalenceOutcome {
            report,
            certificate: None,
        });
    }
    let s_a = d.a_antipode().expect("checked by the conditions");
    let u = u.reshape(d.h().space().clone(), d.a().space().flat())?;
    let target = build_unified_product(d)?;
    let source = build_unified_product(d2)?;
    let phi = twist_map(d2, &u);
    let s_u = s_a.compose(&u)?;
    let psi = twist_map(d, &s_u);
    let cert = certify_morphism(&source, &target, &phi, &psi);
    let ok = cert.all_passed();
    report.absorb("", cert);
    Ok(EquivalenceOutcome {
        report,
        certificate: ok.then(|| EquivalenceCertificate {
            source: d2.clone(),
            target: d.clone(),
            cocycle: u,
            phi,
            psi,
        }),
    })
}

/// Searches the enumerated cocycles for one satisfying the conditions.
pub fn search_equivalence(d: &ExtendingDatum, d2: &ExtendingDatum, cap: u128) -> Result<Option<LinMap>> {
    same_setting(d, d2)?;
    for u in enumerate_cocycles(d.h(), d.h_unit(), d.a(), cap)? {
        if equivalence_conditions(d, d2, u.map())?.all_passed() {
            return Ok(Some(u.map));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    /// Indices into the input list; classes ordered by first member.
    pub classes: Vec<Vec<usize>>,
}

/// Partitions data sharing `(A, H, ◁)` into equivalence classes by
/// exhaustive cocycle search. The pairwise relation is computed in full
/// and must come out symmetric and transitive.
pub fn quotient_classes(data: &[ExtendingDatum], cap: u128) -> Result<Partition> {
    let k = data.len();
    if k == 0 {
        return Ok(Partition { classes: vec![] });
    }
    for d in &data[1..] {
        same_setting(&data[0], d)?;
        if !d.ract().same_matrix(data[0].ract()) {
            return Err(Error::Precondition("the data do not share ◁".into()));
        }
    }
    let mut rel = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            rel[i][j] = search_equivalence(&data[i], &data[j], cap)?.is_some();
        }
    }
    for i in 0..k {
        if !rel[i][i] {
            return Err(Error::Undecided(format!("datum {i} not related to itself")));
        }
        for j in 0..k {
            if rel[i][j] != rel[j][i] {
                return Err(Error::Undecided(format!("relation not symmetric at ({i}, {j})")));
            }
            for l in 0..k {
                if rel[i][j] && rel[j][l] && !rel[i][l] {
                    return Err(Error::Undecided(format!("relation not transitive at ({i}, {j}, {l})")));
                }
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; k];
    for i in 0..k {
        if assigned[i] {
            continue;
        }
        let class: Vec<usize> = (i..k).filter(|&j| rel[i][j]).collect();
        for &j in &class {
            assigned[j] = true;
        }
        classes.push(class);
    }
    Ok(Partition { classes })
}

/// Conditions for two matched pairs to give equivalent bicrossed products
/// via `u`: equal `◁`, `u` lazy, `▷′` the twisted action, the twisted
/// cocycle trivial, and `h ◁ u(g) = h ε(g)`.
pub fn check_bicrossed_equivalence(mp: &MatchedPair, mp2: &MatchedPair, u: &LinMap) -> Result<Report> {
    let d = mp.to_datum();
    let d2 = mp2.to_datum();
    same_setting(&d, &d2)?;
    let s_a = d
        .a_antipode()
        .ok_or_else(|| Error::Precondition("A has no antipode".into()))?;
    let field = d.field();
    let nh = d.dim_h();
    let mut r = Report::new("bicrossed equivalence");
    r.push(compare("ract-equal", d.ract(), d2.ract()));
    let lazy = lazy_cocycle_report(u, d.h(), d.h_unit(), d.a());
    r.push(match lazy.first_failure() {
        None => Check::pass("lazy-cocycle"),
        Some(c) => Check::fail("lazy-cocycle", c.witness.clone()).with_detail(c.id.clone()),
    });
    if !r.all_passed() {
        return Ok(r);
    }
    let u = u.reshape(d.h().space().clone(), d.a().space().flat())?;
    r.push(compare("twisted-lact", &twisted_lact(&d, &u, s_a), d2.lact()));
    let dh = d.h().delta();
    let ma = d.a().mult();
    // u(h1)(h2 ▷ u(g1)) S_A(u(h3 g2)) = ε(g)ε(h)1
    let w = find_counterexample(&[nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh], i);
        let lhs = t
            .map(dh, 0)
            .map(dh, 1)
            .map(dh, 3)
            .permute(&[0, 1, 3, 2, 4])
            .map(&u, 0)
            .map(&u, 2)
            .apply(d.lact(), 1, 2)
            .apply(d.dot(), 2, 2)
            .map(&u, 2)
            .map(s_a, 2)
            .apply(ma, 0, 2)
            .apply(ma, 0, 2);
        let rhs = t.map(d.h().counit(), 0).map(d.h().counit(), 0).insert(d.a().unit(), 0);
        lhs == rhs
    });
    r.push(Check::from_search("twisted-cocycle-trivial", w));
    let w = find_counterexample(&[nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh], i);
        t.map(&u, 1).apply(d.ract(), 0, 2) == t.map(d.h().counit(), 1)
    });
    r.push(Check::from_search("ract-fixes-cocycle", w));
    Ok(r)
}
