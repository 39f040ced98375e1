//! Extending data `(H, ◁, ▷, f, ·)` of a bialgebra `A`, their validation,
//! and the unified product `A ⋉ H` built from them.

use crate::coalgebra::{
    check_bialgebra_parts, coalgebra_antimap_check, coalgebra_map_check, convolution, unit_counit, Algebra,
    Associativity, Bialgebra, Coalgebra, Hopf,
};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{Check, Report};
use crate::scalar::Field;
use crate::space::BasedSpace;
use crate::tensor::{find_counterexample, map_from_tensors, Tensor};

/// Loose components of an extending datum, before shape normalization.
#[derive(Clone, Debug)]
pub struct DatumParts {
    pub a: Bialgebra,
    pub a_antipode: Option<LinMap>,
    pub h: Coalgebra,
    /// Multiplication `·` and unit `1_H`; need not be associative.
    pub h_algebra: Algebra,
    /// `◁: H ⊗ A → H`
    pub ract: LinMap,
    /// `▷: H ⊗ A → A`
    pub lact: LinMap,
    /// `f: H ⊗ H → A`
    pub cocycle: LinMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendingDatum {
    a: Bialgebra,
    a_antipode: Option<LinMap>,
    h: Coalgebra,
    h_algebra: Algebra,
    ract: LinMap,
    lact: LinMap,
    cocycle: LinMap,
}

fn reshape_named(map: &LinMap, what: &str, domain: BasedSpace, codomain: BasedSpace, field: Field) -> Result<LinMap> {
    if map.field() != field {
        return Err(Error::FieldMismatch(field, map.field()));
    }
    if map.domain().dim() != domain.dim() || map.codomain().dim() != codomain.dim() {
        return Err(Error::DimensionMismatch {
            context: what.into(),
            expected: domain.dim() * codomain.dim(),
            found: map.domain().dim() * map.codomain().dim(),
        });
    }
    map.reshape(domain, codomain)
}

impl ExtendingDatum {
    /// Normalizes shapes; no axiom is checked here except that a supplied
    /// antipode of `A` really is one.
    pub fn new(parts: DatumParts) -> Result<Self> {
        let field = parts.a.field();
        if parts.h.field() != field {
            return Err(Error::FieldMismatch(field, parts.h.field()));
        }
        let hs = parts.h.space().clone();
        let as_ = parts.a.space().clone();
        let ha = BasedSpace::tensor(&hs, &as_);
        let hh = BasedSpace::tensor(&hs, &hs);
        let ract = reshape_named(&parts.ract, "right action", ha.clone(), hs.flat(), field)?;
        let lact = reshape_named(&parts.lact, "left action", ha, as_.flat(), field)?;
        let cocycle = reshape_named(&parts.cocycle, "cocycle", hh.clone(), as_.flat(), field)?;
        if parts.h_algebra.dim() != parts.h.dim() {
            return Err(Error::DimensionMismatch {
                context: "multiplication on H".into(),
                expected: parts.h.dim(),
                found: parts.h_algebra.dim(),
            });
        }
        let h_algebra = Algebra::new(
            hs.clone(),
            parts.h_algebra.mult().clone(),
            parts.h_algebra.unit().clone(),
            parts.h_algebra.associativity(),
        )?;
        let a_antipode = match parts.a_antipode {
            Some(s) => Some(Hopf::new(parts.a.clone(), s)?.antipode().clone()),
            None => None,
        };
        Ok(ExtendingDatum {
            a: parts.a,
            a_antipode,
            h: parts.h,
            h_algebra,
            ract,
            lact,
            cocycle,
        })
    }

    pub fn to_parts(&self) -> DatumParts {
        DatumParts {
            a: self.a.clone(),
            a_antipode: self.a_antipode.clone(),
            h: self.h.clone(),
            h_algebra: self.h_algebra.clone(),
            ract: self.ract.clone(),
            lact: self.lact.clone(),
            cocycle: self.cocycle.clone(),
        }
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn a(&self) -> &Bialgebra {
        &self.a
    }

    pub fn a_antipode(&self) -> Option<&LinMap> {
        self.a_antipode.as_ref()
    }

    pub fn a_hopf(&self) -> Option<Hopf> {
        self.a_antipode
            .as_ref()
            .map(|s| Hopf::new(self.a.clone(), s.clone()).expect("validated on construction"))
    }

    pub fn h(&self) -> &Coalgebra {
        &self.h
    }

    pub fn h_algebra(&self) -> &Algebra {
        &self.h_algebra
    }

    pub fn dot(&self) -> &LinMap {
        self.h_algebra.mult()
    }

    pub fn h_unit(&self) -> &LinMap {
        self.h_algebra.unit()
    }

    pub fn ract(&self) -> &LinMap {
        &self.ract
    }

    pub fn lact(&self) -> &LinMap {
        &self.lact
    }

    pub fn cocycle(&self) -> &LinMap {
        &self.cocycle
    }

    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    pub fn with_ract(&self, ract: LinMap) -> Result<Self> {
        ExtendingDatum::new(DatumParts {
            ract,
            ..self.to_parts()
        })
    }

    pub fn with_lact(&self, lact: LinMap) -> Result<Self> {
        ExtendingDatum::new(DatumParts {
            lact,
            ..self.to_parts()
        })
    }

    pub fn with_cocycle(&self, cocycle: LinMap) -> Result<Self> {
        ExtendingDatum::new(DatumParts {
            cocycle,
            ..self.to_parts()
        })
    }

    pub fn with_dot(&self, dot: LinMap) -> Result<Self> {
        let h_algebra = Algebra::new(
            self.h.space().clone(),
            dot,
            self.h_unit().clone(),
            Associativity::Unknown,
        )?;
        ExtendingDatum::new(DatumParts {
            h_algebra,
            ..self.to_parts()
        })
    }

    pub fn has_trivial_ract(&self) -> bool {
        self.ract.same_matrix(&trivial_ract(&self.h, &self.a))
    }

    pub fn has_trivial_lact(&self) -> bool {
        self.lact.same_matrix(&trivial_lact(&self.h, &self.a))
    }

    pub fn has_trivial_cocycle(&self) -> bool {
        self.cocycle.same_matrix(&trivial_cocycle(&self.h, &self.a))
    }

    /// Structure maps agree exactly (labels and flags are ignored).
    pub fn same_maps(&self, other: &ExtendingDatum) -> bool {
        self.first_mismatch(other).is_none()
    }

    /// Name of the first structure map that differs from `other`.
    pub fn first_mismatch(&self, other: &ExtendingDatum) -> Option<&'static str> {
        if !self.a.same_structure(&other.a) {
            return Some("A");
        }
        if !self.h.delta().same_matrix(other.h.delta()) || !self.h.counit().same_matrix(other.h.counit()) {
            return Some("H coalgebra");
        }
        if !self.h_unit().same_matrix(other.h_unit()) {
            return Some("unit of H");
        }
        if !self.dot().same_matrix(other.dot()) {
            return Some("multiplication of H");
        }
        if !self.ract.same_matrix(&other.ract) {
            return Some("right action");
        }
        if !self.lact.same_matrix(&other.lact) {
            return Some("left action");
        }
        if !self.cocycle.same_matrix(&other.cocycle) {
            return Some("cocycle");
        }
        None
    }
}

/// `h ◁ a = ε_A(a) h`
pub fn trivial_ract(h: &Coalgebra, a: &Bialgebra) -> LinMap {
    let field = h.field();
    let dom = BasedSpace::tensor(h.space(), a.space());
    let na = a.dim();
    LinMap::from_fn(field, dom, h.space().flat(), |i| {
        let eps = a.coalgebra().counit_at(i % na);
        if eps.is_zero() {
            vec![]
        } else {
            vec![(i / na, eps)]
        }
    })
    .expect("in range")
}

/// `h ▷ a = ε_H(h) a`
pub fn trivial_lact(h: &Coalgebra, a: &Bialgebra) -> LinMap {
    let field = h.field();
    let dom = BasedSpace::tensor(h.space(), a.space());
    let na = a.dim();
    LinMap::from_fn(field, dom, a.space().flat(), |i| {
        let eps = h.counit_at(i / na);
        if eps.is_zero() {
            vec![]
        } else {
            vec![(i % na, eps)]
        }
    })
    .expect("in range")
}

/// `f(g, h) = ε_H(g) ε_H(h) 1_A`
pub fn trivial_cocycle(h: &Coalgebra, a: &Bialgebra) -> LinMap {
    let field = h.field();
    let dom = BasedSpace::tensor(h.space(), h.space());
    let nh = h.dim();
    let one = a.unit().column(0).to_vec();
    LinMap::from_fn(field, dom, a.space().flat(), |i| {
        let eps = &h.counit_at(i / nh) * &h.counit_at(i % nh);
        one.iter().map(|(k, s)| (*k, s * &eps)).collect()
    })
    .expect("in range")
}

fn check_of(id: &str, ok: bool) -> Check {
    if ok {
        Check::pass(id)
    } else {
        Check::fail(id, None)
    }
}

/// `1_H` group-like, the coalgebra-map property of `◁`, `▷`, `f`, `·`, and the
/// normalization clauses for units.
pub fn validate_datum(d: &ExtendingDatum) -> Report {
    let field = d.field();
    let (na, nh) = (d.dim_a(), d.dim_h());
    let mut r = Report::new("extending datum");
    let one_h = Tensor::unit(field).insert(d.h_unit(), 0);
    r.push(check_of(
        "norm-delta-unit",
        one_h.map(d.h.delta(), 0) == one_h.tensor(&one_h),
    ));
    r.push(check_of(
        "norm-counit-unit",
        one_h.map(d.h.counit(), 0) == Tensor::unit(field),
    ));

    let ha = d.h.tensor(d.a.coalgebra());
    let hh = d.h.tensor(&d.h);
    r.push(coalgebra_map_check("ract-coalgebra-map", &d.ract, &ha, &d.h));
    r.push(coalgebra_map_check("lact-coalgebra-map", &d.lact, &ha, d.a.coalgebra()));
    r.push(coalgebra_map_check(
        "cocycle-coalgebra-map",
        &d.cocycle,
        &hh,
        d.a.coalgebra(),
    ));
    r.push(coalgebra_map_check("dot-coalgebra-map", d.dot(), &hh, &d.h));

    let h = |i: &[usize]| Tensor::basis(field, &[nh], i);
    let a = |i: &[usize]| Tensor::basis(field, &[na], i);
    // h ▷ 1 = ε(h) 1
    let w = find_counterexample(&[nh], |i| {
        h(i).insert(d.a.unit(), 1).apply(&d.lact, 0, 2) == h(i).map(d.h.counit(), 0).insert(d.a.unit(), 0)
    });
    r.push(Check::from_search("norm-lact-unit", w));
    // 1 ▷ a = a
    let w = find_counterexample(&[na], |i| a(i).insert(d.h_unit(), 0).apply(&d.lact, 0, 2) == a(i));
    r.push(Check::from_search("norm-lact-by-unit", w));
    // 1 ◁ a = ε(a) 1
    let w = find_counterexample(&[na], |i| {
        a(i).insert(d.h_unit(), 0).apply(&d.ract, 0, 2) == a(i).map(d.a.counit(), 0).insert(d.h_unit(), 0)
    });
    r.push(Check::from_search("norm-ract-on-unit", w));
    // h ◁ 1 = h
    let w = find_counterexample(&[nh], |i| h(i).insert(d.a.unit(), 1).apply(&d.ract, 0, 2) == h(i));
    r.push(Check::from_search("norm-ract-unit", w));
    // f(h, 1) = ε(h) 1
    let w = find_counterexample(&[nh], |i| {
        h(i).insert(d.h_unit(), 1).apply(&d.cocycle, 0, 2) == h(i).map(d.h.counit(), 0).insert(d.a.unit(), 0)
    });
    r.push(Check::from_search("norm-cocycle-right-unit", w));
    // f(1, h) = ε(h) 1
    let w = find_counterexample(&[nh], |i| {
        h(i).insert(d.h_unit(), 0).apply(&d.cocycle, 0, 2) == h(i).map(d.h.counit(), 0).insert(d.a.unit(), 0)
    });
    r.push(Check::from_search("norm-cocycle-left-unit", w));
    let w = find_counterexample(&[nh], |i| h(i).insert(d.h_unit(), 0).apply(d.dot(), 0, 2) == h(i));
    r.push(Check::from_search("norm-dot-left-unit", w));
    let w = find_counterexample(&[nh], |i| h(i).insert(d.h_unit(), 1).apply(d.dot(), 0, 2) == h(i));
    r.push(Check::from_search("norm-dot-right-unit", w));
    r
}

/// The nine compatibility conditions, each an exact tensor identity
/// checked on every basis tuple of its free variables.
pub fn check_compatibility(d: &ExtendingDatum) -> Report {
    let field = d.field();
    let (na, nh) = (d.dim_a(), d.dim_h());
    let dh = d.h.delta();
    let da = d.a.delta();
    let ma = d.a.mult();
    let dot = d.dot();
    let (ract, lact, f) = (&d.ract, &d.lact, &d.cocycle);
    let mut r = Report::new("compatibility conditions");

    // 2a: Δ_H(gh) = g1h1 ⊗ g2h2, ε_H(gh) = ε(g)ε(h), Δ_H(1) = 1 ⊗ 1, ε_H(1) = 1
    let one_h = Tensor::unit(field).insert(d.h_unit(), 0);
    let unit_ok = one_h.map(dh, 0) == one_h.tensor(&one_h) && one_h.map(d.h.counit(), 0) == Tensor::unit(field);
    let w = find_counterexample(&[nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh], i);
        let lhs = t.apply(dot, 0, 2).map(dh, 0);
        let rhs = t
            .map(dh, 0)
            .map(dh, 2)
            .permute(&[0, 2, 1, 3])
            .apply(dot, 0, 2)
            .apply(dot, 1, 2);
        let eps = t.apply(dot, 0, 2).map(d.h.counit(), 0) == t.map(d.h.counit(), 0).map(d.h.counit(), 0);
        lhs == rhs && eps
    });
    r.push(match (w, unit_ok) {
        (None, true) => Check::pass("2a"),
        (None, false) => Check::fail("2a", None).with_detail("unit not group-like"),
        (w, _) => Check::fail("2a", w),
    });

    // 2b: (h ◁ a) ◁ b = h ◁ (ab), h ◁ 1 = h
    let w = find_counterexample(&[nh, na, na], |i| {
        let t = Tensor::basis(field, &[nh, na, na], i);
        t.apply(ract, 0, 2).apply(ract, 0, 2) == t.apply(ma, 1, 2).apply(ract, 0, 2)
    });
    let unit = find_counterexample(&[nh], |i| {
        let t = Tensor::basis(field, &[nh], i);
        t.insert(d.a.unit(), 1).apply(ract, 0, 2) == t
    });
    r.push(match (w, unit) {
        (None, None) => Check::pass("2b"),
        (Some(w), _) => Check::fail("2b", Some(w)),
        (None, Some(w)) => Check::fail("2b", Some(w)).with_detail("h ◁ 1 ≠ h"),
    });

    // 2c: (g·h)·l = (g ◁ f(h1, l1))·(h2·l2)
    let w = find_counterexample(&[nh, nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh, nh], i);
        let lhs = t.apply(dot, 0, 2).apply(dot, 0, 2);
        let rhs = t
            .map(dh, 1)
            .map(dh, 3)
            .permute(&[0, 1, 3, 2, 4])
            .apply(f, 1, 2)
            .apply(ract, 0, 2)
            .apply(dot, 1, 2)
            .apply(dot, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2c", w));

    // 2d: g ▷ (ab) = (g1 ▷ a1)[(g2 ◁ a2) ▷ b]
    let w = find_counterexample(&[nh, na, na], |i| {
        let t = Tensor::basis(field, &[nh, na, na], i);
        let lhs = t.apply(ma, 1, 2).apply(lact, 0, 2);
        let rhs = t
            .map(dh, 0)
            .map(da, 2)
            .permute(&[0, 2, 1, 3, 4])
            .apply(lact, 0, 2)
            .apply(ract, 1, 2)
            .apply(lact, 1, 2)
            .apply(ma, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2d", w));

    // 2e: (g·h) ◁ a = [g ◁ (h1 ▷ a1)]·(h2 ◁ a2)
    let w = find_counterexample(&[nh, nh, na], |i| {
        let t = Tensor::basis(field, &[nh, nh, na], i);
        let lhs = t.apply(dot, 0, 2).apply(ract, 0, 2);
        let rhs = t
            .map(dh, 1)
            .map(da, 3)
            .permute(&[0, 1, 3, 2, 4])
            .apply(lact, 1, 2)
            .apply(ract, 0, 2)
            .apply(ract, 1, 2)
            .apply(dot, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2e", w));

    // 2f: [g1 ▷ (h1 ▷ a1)] f(g2 ◁ (h2 ▷ a2), h3 ◁ a3) = f(g1, h1)[(g2·h2) ▷ a]
    let w = find_counterexample(&[nh, nh, na], |i| {
        let t = Tensor::basis(field, &[nh, nh, na], i);
        // g1 g2 h1 h2 h3 a1 a2 a3
        let lhs = t
            .map(dh, 0)
            .map(dh, 2)
            .map(dh, 3)
            .map(da, 5)
            .map(da, 6)
            .permute(&[0, 2, 5, 1, 3, 6, 4, 7])
            .apply(lact, 1, 2)
            .apply(lact, 0, 2)
            .apply(lact, 2, 2)
            .apply(ract, 1, 2)
            .apply(ract, 2, 2)
            .apply(f, 1, 2)
            .apply(ma, 0, 2);
        let rhs = t
            .map(dh, 0)
            .map(dh, 2)
            .permute(&[0, 2, 1, 3, 4])
            .apply(f, 0, 2)
            .apply(dot, 1, 2)
            .apply(lact, 1, 2)
            .apply(ma, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2f", w));

    // 2g: (g1 ▷ f(h1, l1)) f(g2 ◁ f(h2, l2), h3·l3) = f(g1, h1) f(g2·h2, l)
    let w = find_counterexample(&[nh, nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh, nh], i);
        // g1 g2 h1 h2 h3 l1 l2 l3
        let lhs = t
            .map(dh, 0)
            .map(dh, 2)
            .map(dh, 3)
            .map(dh, 5)
            .map(dh, 6)
            .permute(&[0, 2, 5, 1, 3, 6, 4, 7])
            .apply(f, 1, 2)
            .apply(lact, 0, 2)
            .apply(f, 2, 2)
            .apply(ract, 1, 2)
            .apply(dot, 2, 2)
            .apply(f, 1, 2)
            .apply(ma, 0, 2);
        let rhs = t
            .map(dh, 0)
            .map(dh, 2)
            .permute(&[0, 2, 1, 3, 4])
            .apply(f, 0, 2)
            .apply(dot, 1, 2)
            .apply(f, 1, 2)
            .apply(ma, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2g", w));

    // 2h: g1 ◁ a1 ⊗ g2 ▷ a2 = g2 ◁ a2 ⊗ g1 ▷ a1
    let w = find_counterexample(&[nh, na], |i| {
        let t = Tensor::basis(field, &[nh, na], i).map(dh, 0).map(da, 2);
        let lhs = t.permute(&[0, 2, 1, 3]).apply(ract, 0, 2).apply(lact, 1, 2);
        let rhs = t.permute(&[1, 3, 0, 2]).apply(ract, 0, 2).apply(lact, 1, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2h", w));

    // 2i: g1·h1 ⊗ f(g2, h2) = g2·h2 ⊗ f(g1, h1)
    let w = find_counterexample(&[nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh], i).map(dh, 0).map(dh, 2);
        let lhs = t.permute(&[0, 2, 1, 3]).apply(dot, 0, 2).apply(f, 1, 2);
        let rhs = t.permute(&[1, 3, 0, 2]).apply(dot, 0, 2).apply(f, 1, 2);
        lhs == rhs
    });
    r.push(Check::from_search("2i", w));
    r
}

/// Validation followed by the nine conditions, in one report.
pub fn full_report(d: &ExtendingDatum) -> Report {
    let mut r = Report::new("extending datum");
    r.absorb("", validate_datum(d));
    r.absorb("", check_compatibility(d));
    r
}

/// The carrier `A ⊗ H` with one slot per factor.
fn carrier_slots(d: &ExtendingDatum) -> BasedSpace {
    BasedSpace::tensor(&d.a.space().flat(), &d.h.space().flat())
}

/// Coalgebra and multiplication of `A ⋉ H` straight from the defining
/// formulas, with no check on the datum. The algebra's associativity flag
/// is left unknown.
pub fn raw_unified_parts(d: &ExtendingDatum) -> (Coalgebra, Algebra) {
    let field = d.field();
    let space = BasedSpace::tensor(d.a.space(), d.h.space());
    let slots = carrier_slots(d);
    let domain = BasedSpace::tensor(&slots, &slots);
    let dh = d.h.delta();
    let da = d.a.delta();
    let (na, nh) = (d.dim_a(), d.dim_h());
    // (a ⋉ h)(c ⋉ g) = a(h1 ▷ c1) f(h2 ◁ c2, g1) ⋉ (h3 ◁ c3)·g2
    let mult = map_from_tensors(field, &domain, &space.flat(), |idx| {
        Tensor::basis(field, &[na, nh, na, nh], idx)
            .map(dh, 1)
            .map(dh, 2)
            .map(da, 4)
            .map(da, 5)
            .map(dh, 7)
            // a h1 h2 h3 c1 c2 c3 g1 g2 → a h1 c1 h2 c2 g1 h3 c3 g2
            .permute(&[0, 1, 4, 2, 5, 7, 3, 6, 8])
            .apply(&d.lact, 1, 2)
            .apply(&d.ract, 2, 2)
            .apply(&d.cocycle, 2, 2)
            .apply(&d.ract, 3, 2)
            .apply(d.dot(), 3, 2)
            .apply(d.a.mult(), 0, 2)
            .apply(d.a.mult(), 0, 2)
            .merge(0, 2)
    });
    let unit =
        d.a.unit()
            .tensor(d.h_unit())
            .expect("same field")
            .reshape(BasedSpace::ground(), space.flat())
            .expect("same dimensions");
    let coalgebra = d.a.coalgebra().tensor(&d.h);
    let algebra = Algebra::new(space, mult, unit, Associativity::Unknown).expect("shapes agree");
    (coalgebra, algebra)
}

/// The raw object's bialgebra report, independent of the conditions.
pub fn raw_product_report(d: &ExtendingDatum) -> Report {
    let (c, a) = raw_unified_parts(d);
    check_bialgebra_parts(&c, &a)
}

#[derive(Clone, Debug)]
pub struct UnifiedProduct {
    datum: ExtendingDatum,
    bialgebra: Bialgebra,
    antipode: Option<LinMap>,
    i_a: LinMap,
    i_h: LinMap,
    pi_h: LinMap,
    coaction: LinMap,
}

impl UnifiedProduct {
    pub fn datum(&self) -> &ExtendingDatum {
        &self.datum
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.bialgebra
    }

    pub fn antipode(&self) -> Option<&LinMap> {
        self.antipode.as_ref()
    }

    pub fn hopf(&self) -> Option<Hopf> {
        self.antipode
            .as_ref()
            .map(|s| Hopf::new(self.bialgebra.clone(), s.clone()).expect("checked when attached"))
    }

    /// `a ↦ a ⋉ 1_H`
    pub fn i_a(&self) -> &LinMap {
        &self.i_a
    }

    /// `h ↦ 1_A ⋉ h`
    pub fn i_h(&self) -> &LinMap {
        &self.i_h
    }

    /// `a ⋉ h ↦ ε_A(a) h`
    pub fn pi_h(&self) -> &LinMap {
        &self.pi_h
    }

    /// `a ⋉ h ↦ a ⋉ h1 ⊗ h2`
    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    /// Attaches an antipode after checking it.
    pub fn with_antipode(mut self, s: LinMap) -> Result<Self> {
        let hopf = Hopf::new(self.bialgebra.clone(), s)?;
        self.antipode = Some(hopf.antipode().clone());
        Ok(self)
    }

    /// Solves for the antipode and attaches it.
    pub fn with_solved_antipode(self) -> Result<Self> {
        let s = crate::coalgebra::antipode_solve(&self.bialgebra)?;
        self.with_antipode(s)
    }
}

/// Builds `A ⋉ H`. Refuses when any validation or compatibility check
/// fails, and re-verifies the cross relations on the result.
pub fn build_unified_product(d: &ExtendingDatum) -> Result<UnifiedProduct> {
    let report = full_report(d);
    if !report.all_passed() {
        return Err(Error::ChecksFailed(report.failed_ids()));
    }
    let product = assemble(d)?;
    let cross = check_cross_relations(&product);
    if !cross.all_passed() {
        return Err(Error::ChecksFailed(cross.failed_ids()));
    }
    Ok(product)
}

/// Assembles the product of a datum without the condition gate. The
/// multiplication must still be associative.
pub fn assemble(d: &ExtendingDatum) -> Result<UnifiedProduct> {
    let field = d.field();
    let (coalgebra, algebra) = raw_unified_parts(d);
    let bialgebra = Bialgebra::new(coalgebra, algebra)?;
    let space = bialgebra.space().clone();
    let a_sp = d.a.space().clone();
    let h_sp = d.h.space().clone();
    let id_a = LinMap::identity(field, a_sp.clone());
    let id_h = LinMap::identity(field, h_sp.clone());
    let i_a = id_a
        .tensor(d.h_unit())
        .expect("same field")
        .reshape(a_sp.clone(), space.clone())?;
    let i_h =
        d.a.unit()
            .tensor(&id_h)
            .expect("same field")
            .reshape(h_sp.clone(), space.clone())?;
    let pi_h =
        d.a.counit()
            .tensor(&id_h)
            .expect("same field")
            .reshape(space.clone(), h_sp.clone())?;
    let coaction = id_a
        .tensor(d.h.delta())
        .expect("same field")
        .reshape(space.clone(), BasedSpace::tensor(&space, &h_sp))?;
    Ok(UnifiedProduct {
        datum: d.clone(),
        bialgebra,
        antipode: None,
        i_a,
        i_h,
        pi_h,
        coaction,
    })
}

/// Cross relations between `A ⊗ 1` and `1 ⊗ H` inside the product, each
/// compared with its closed form, plus `(a ⋉ 1)(1 ⋉ g) = a ⋉ g`.
pub fn check_cross_relations(p: &UnifiedProduct) -> Report {
    let d = &p.datum;
    let field = d.field();
    let (na, nh) = (d.dim_a(), d.dim_h());
    let mult = p.bialgebra.mult();
    let ma = d.a.mult();
    let dh = d.h.delta();
    let mut r = Report::new("cross relations");

    // (a ⋉ 1)(c ⋉ g) = ac ⋉ g
    let w = find_counterexample(&[na, na, nh], |i| {
        let t = Tensor::basis(field, &[na, na, nh], i);
        let lhs = t.insert(d.h_unit(), 1).apply(mult, 0, 4);
        let rhs = t.apply(ma, 0, 2).merge(0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("cross-13", w));

    // (a ⋉ g)(1 ⋉ h) = a f(g1, h1) ⋉ g2·h2
    let w = find_counterexample(&[na, nh, nh], |i| {
        let t = Tensor::basis(field, &[na, nh, nh], i);
        let lhs = t.insert(d.a.unit(), 2).apply(mult, 0, 4);
        let rhs = t
            .map(dh, 1)
            .map(dh, 3)
            .permute(&[0, 1, 3, 2, 4])
            .apply(&d.cocycle, 1, 2)
            .apply(ma, 0, 2)
            .apply(d.dot(), 1, 2)
            .merge(0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("cross-14", w));

    // (a ⋉ g)(b ⋉ 1) = a(g1 ▷ b1) ⋉ g2 ◁ b2
    let w = find_counterexample(&[na, nh, na], |i| {
        let t = Tensor::basis(field, &[na, nh, na], i);
        let lhs = t.insert(d.h_unit(), 3).apply(mult, 0, 4);
        let rhs = t
            .map(dh, 1)
            .map(d.a.delta(), 3)
            .permute(&[0, 1, 3, 2, 4])
            .apply(&d.lact, 1, 2)
            .apply(ma, 0, 2)
            .apply(&d.ract, 1, 2)
            .merge(0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("cross-15", w));

    // (a ⋉ 1)(1 ⋉ g) = a ⋉ g
    let w = find_counterexample(&[na, nh], |i| {
        let t = Tensor::basis(field, &[na, nh], i);
        let lhs = t.insert(d.h_unit(), 1).insert(d.a.unit(), 2).apply(mult, 0, 4);
        lhs == t.merge(0, 2)
    });
    r.push(Check::from_search("generators", w));
    r
}

/// Checks that `i_A` is a bialgebra map and `i_H` a coalgebra map.
pub fn check_embeddings(p: &UnifiedProduct) -> Report {
    let d = &p.datum;
    let mut r = Report::new("embeddings");
    r.push(coalgebra_map_check(
        "i_a-coalgebra-map",
        &p.i_a,
        d.a.coalgebra(),
        p.bialgebra.coalgebra(),
    ));
    r.push(algebra_map_check(
        "i_a-algebra-map",
        &p.i_a,
        d.a.algebra(),
        p.bialgebra.algebra(),
    ));
    r.push(coalgebra_map_check(
        "i_h-coalgebra-map",
        &p.i_h,
        &d.h,
        p.bialgebra.coalgebra(),
    ));
    r.push(check_of("i_a-injective", p.i_a.rank() == d.dim_a()));
    r.push(check_of("i_h-injective", p.i_h.rank() == d.dim_h()));
    r
}

/// `φ(xy) = φ(x)φ(y)` on basis pairs and `φ(1) = 1`.
pub fn algebra_map_check(id: &str, phi: &LinMap, src: &Algebra, dst: &Algebra) -> Check {
    if phi.domain().dim() != src.dim() || phi.codomain().dim() != dst.dim() {
        return Check::fail(id, None).with_detail("shape mismatch");
    }
    let phi = phi
        .reshape(src.space().clone(), dst.space().flat())
        .expect("dimensions checked");
    let field = src.field();
    let n = src.dim();
    let unit_ok = Tensor::unit(field).insert(src.unit(), 0).map(&phi, 0) == Tensor::unit(field).insert(dst.unit(), 0);
    let w = find_counterexample(&[n, n], |i| {
        let t = Tensor::basis(field, &[n, n], i);
        t.apply(src.mult(), 0, 2).map(&phi, 0) == t.map(&phi, 0).map(&phi, 1).apply(dst.mult(), 0, 2)
    });
    match (w, unit_ok) {
        (None, true) => Check::pass(id),
        (None, false) => Check::fail(id, None).with_detail("unit not preserved"),
        (w, _) => Check::fail(id, w),
    }
}

/// Antipode of `A ⋉ H` from antipodes of `A` and (a candidate for) `H`:
/// `S(a ⋉ g) = (S_A[f(S_H(g2), g3)] ⋉ S_H(g1)) • (S_A(a) ⋉ 1_H)`.
pub fn antipode_prext(p: &UnifiedProduct, s_h: &LinMap) -> Result<LinMap> {
    let d = &p.datum;
    let field = d.field();
    let s_a = d
        .a_antipode()
        .ok_or_else(|| Error::Precondition("A has no antipode".into()))?;
    let anti = coalgebra_antimap_check("s_h-coalgebra-antimap", s_h, &d.h, &d.h);
    if !anti.passed {
        return Err(Error::Precondition(format!(
            "S_H is not a coalgebra antimap (witness {:?})",
            anti.witness
        )));
    }
    let s_h = s_h.reshape(d.h.space().clone(), d.h.space().flat())?;
    let id_h = LinMap::identity(field, d.h.space().clone());
    let target = unit_counit(&d.h, &d.h_algebra);
    let left = convolution(&id_h, &s_h, &d.h, &d.h_algebra)?;
    if let Some(i) = left.first_difference(&target) {
        return Err(Error::Precondition(format!("h1·S_H(h2) ≠ ε(h)1 at basis index {i}")));
    }
    let right = convolution(&s_h, &id_h, &d.h, &d.h_algebra)?;
    if let Some(i) = right.first_difference(&target) {
        return Err(Error::Precondition(format!("S_H(h1)·h2 ≠ ε(h)1 at basis index {i}")));
    }
    let (na, nh) = (d.dim_a(), d.dim_h());
    let dh = d.h.delta();
    let mult = p.bialgebra.mult();
    let space = p.bialgebra.space();
    let s = map_from_tensors(field, &carrier_slots(d), &space.flat(), |idx| {
        Tensor::basis(field, &[na, nh], idx)
            .map(dh, 1)
            .map(dh, 2)
            .map(&s_h, 1)
            .map(&s_h, 2)
            .apply(&d.cocycle, 2, 2)
            .map(s_a, 2)
            .permute(&[2, 1, 0])
            .map(s_a, 2)
            .insert(d.h_unit(), 3)
            .apply(mult, 0, 4)
    });
    s.reshape(space.clone(), space.flat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{antipode_solve, check_bialgebra};

    fn q() -> Field {
        Field::Rational
    }

    fn cyclic_bialgebra(n: usize, prefix: &str) -> Bialgebra {
        let space = BasedSpace::numbered(prefix, n).unwrap();
        let c = Coalgebra::grouplike(q(), space.clone());
        let mult = LinMap::from_basis_fn(q(), BasedSpace::tensor(&space, &space), space.clone(), |i| {
            (i / n + i % n) % n
        })
        .unwrap();
        let unit = LinMap::vector(q(), space.clone(), vec![(0, q().one())]).unwrap();
        let a = Algebra::new(space, mult, unit, Associativity::Yes).unwrap();
        Bialgebra::new(c, a).unwrap()
    }

    fn trivial_datum(na: usize, nh: usize) -> ExtendingDatum {
        let a = cyclic_bialgebra(na, "a");
        let s_a = antipode_solve(&a).unwrap();
        let hb = cyclic_bialgebra(nh, "h");
        let h = hb.coalgebra().clone();
        ExtendingDatum::new(DatumParts {
            ract: trivial_ract(&h, &a),
            lact: trivial_lact(&h, &a),
            cocycle: trivial_cocycle(&h, &a),
            a,
            a_antipode: Some(s_a),
            h_algebra: hb.algebra().clone(),
            h,
        })
        .unwrap()
    }

    #[test]
    fn trivial_datum_passes_everything_and_gives_tensor_product() {
        let d = trivial_datum(2, 2);
        assert!(validate_datum(&d).all_passed(), "{}", validate_datum(&d).render());
        assert!(
            check_compatibility(&d).all_passed(),
            "{}",
            check_compatibility(&d).render()
        );
        let p = build_unified_product(&d).unwrap();
        assert!(check_bialgebra(p.bialgebra()).all_passed());
        assert!(check_embeddings(&p).all_passed());
        // k[C2] ⊗ k[C2] ≅ k[C2 × C2]
        let prod = cyclic_bialgebra(2, "a");
        let expected = prod.mult().tensor(prod.mult()).unwrap();
        // (a⊗h)(c⊗g) = ac ⊗ hg, domain order a h c g vs a c h g
        for a in 0..2 {
            for h in 0..2 {
                for c in 0..2 {
                    for g in 0..2 {
                        let got = p.bialgebra().mult().column(((a * 2 + h) * 2 + c) * 2 + g);
                        let want = expected.column(((a * 2 + c) * 2 + h) * 2 + g);
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }

    #[test]
    fn one_dimensional_h_collapses_to_a() {
        let d = trivial_datum(3, 1);
        assert!(full_report(&d).all_passed());
        let p = build_unified_product(&d).unwrap();
        assert!(p.bialgebra().mult().same_matrix(d.a().mult()));
        assert!(p.bialgebra().delta().same_matrix(d.a().delta()));
    }

    #[test]
    fn wrong_normalization_is_reported() {
        let d = trivial_datum(2, 2);
        // f(1, x) = a1 instead of a0
        let mut cols = d.cocycle().columns().to_vec();
        cols[1] = vec![(1, q().one())];
        let f = LinMap::new(q(), d.cocycle().domain().clone(), d.cocycle().codomain().clone(), cols).unwrap();
        let bad = d.with_cocycle(f).unwrap();
        let report = validate_datum(&bad);
        assert!(!report.passed("norm-cocycle-left-unit"));
        assert!(report.passed("norm-cocycle-right-unit"));
        assert!(matches!(build_unified_product(&bad), Err(Error::ChecksFailed(_))));
    }

    #[test]
    fn antipode_formula_on_group_h() {
        let d = trivial_datum(1, 3);
        let p = build_unified_product(&d).unwrap();
        let s_h = antipode_solve(&cyclic_bialgebra(3, "h")).unwrap();
        let s = antipode_prext(&p, &s_h).unwrap();
        assert_eq!(s.as_basis_map(), Some(vec![0, 2, 1]));
        assert!(s.same_matrix(&antipode_solve(p.bialgebra()).unwrap()));
    }

    #[test]
    fn antipode_formula_rejects_bad_s_h() {
        let d = trivial_datum(2, 3);
        let p = build_unified_product(&d).unwrap();
        let id = LinMap::identity(q(), d.h().space().clone());
        assert!(matches!(antipode_prext(&p, &id), Err(Error::Precondition(_))));
    }
}
