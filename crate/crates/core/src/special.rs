//! Matched pairs and crossed data, the two classical special cases of an
//! extending datum (trivial cocycle, trivial right action), and deformation
//! of a matched pair by a lazy cocycle.

use crate::classification::lazy_cocycle_report;
use crate::coalgebra::{antipode_solve, coalgebra_map_check, Bialgebra, Hopf};
use crate::datum::{build_unified_product, trivial_cocycle, trivial_ract, DatumParts, ExtendingDatum, UnifiedProduct};
use crate::error::{Error, Result};
use crate::groups::GroupExtendingStructure;
use crate::linmap::LinMap;
use crate::report::{Check, Report};
use crate::scalar::Field;
use crate::space::BasedSpace;
use crate::tensor::{find_counterexample, map_from_tensors, Tensor};

fn shaped(map: &LinMap, domain: BasedSpace, codomain: BasedSpace, what: &str) -> Result<LinMap> {
    if map.domain().dim() != domain.dim() || map.codomain().dim() != codomain.dim() {
        return Err(Error::DimensionMismatch {
            context: what.into(),
            expected: domain.dim() * codomain.dim(),
            found: map.domain().dim() * map.codomain().dim(),
        });
    }
    map.reshape(domain, codomain)
}

fn checked_antipode(b: &Bialgebra, s: Option<LinMap>) -> Result<Option<LinMap>> {
    s.map(|s| Hopf::new(b.clone(), s).map(|h| h.antipode().clone()))
        .transpose()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    a: Bialgebra,
    a_antipode: Option<LinMap>,
    h: Bialgebra,
    h_antipode: Option<LinMap>,
    ract: LinMap,
    lact: LinMap,
}

impl MatchedPair {
    pub fn new(
        a: Bialgebra,
        a_antipode: Option<LinMap>,
        h: Bialgebra,
        h_antipode: Option<LinMap>,
        ract: LinMap,
        lact: LinMap,
    ) -> Result<Self> {
        let ha = BasedSpace::tensor(h.space(), a.space());
        let ract = shaped(&ract, ha.clone(), h.space().flat(), "right action")?;
        let lact = shaped(&lact, ha, a.space().flat(), "left action")?;
        let a_antipode = checked_antipode(&a, a_antipode)?;
        let h_antipode = checked_antipode(&h, h_antipode)?;
        Ok(MatchedPair {
            a,
            a_antipode,
            h,
            h_antipode,
            ract,
            lact,
        })
    }

    pub fn a(&self) -> &Bialgebra {
        &self.a
    }

    pub fn h(&self) -> &Bialgebra {
        &self.h
    }

    pub fn a_antipode(&self) -> Option<&LinMap> {
        self.a_antipode.as_ref()
    }

    pub fn h_antipode(&self) -> Option<&LinMap> {
        self.h_antipode.as_ref()
    }

    pub fn ract(&self) -> &LinMap {
        &self.ract
    }

    pub fn lact(&self) -> &LinMap {
        &self.lact
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn with_lact(&self, lact: LinMap) -> Result<Self> {
        MatchedPair::new(
            self.a.clone(),
            self.a_antipode.clone(),
            self.h.clone(),
            self.h_antipode.clone(),
            self.ract.clone(),
            lact,
        )
    }

    pub fn with_ract(&self, ract: LinMap) -> Result<Self> {
        MatchedPair::new(
            self.a.clone(),
            self.a_antipode.clone(),
            self.h.clone(),
            self.h_antipode.clone(),
            ract,
            self.lact.clone(),
        )
    }

    /// The extending datum with trivial cocycle.
    pub fn to_datum(&self) -> ExtendingDatum {
        let h = self.h.coalgebra().clone();
        ExtendingDatum::new(DatumParts {
            a: self.a.clone(),
            a_antipode: self.a_antipode.clone(),
            cocycle: trivial_cocycle(&h, &self.a),
            h,
            h_algebra: self.h.algebra().clone(),
            ract: self.ract.clone(),
            lact: self.lact.clone(),
        })
        .expect("shapes already normalized")
    }
}

/// Module-coalgebra axioms for both actions and the checks `mp1` to `mp4`.
pub fn check_matched_pair(mp: &MatchedPair) -> Report {
    let field = mp.field();
    let (na, nh) = (mp.a.dim(), mp.h.dim());
    let (ma, mh) = (mp.a.mult(), mp.h.mult());
    let (da, dh) = (mp.a.delta(), mp.h.delta());
    let (ract, lact) = (&mp.ract, &mp.lact);
    let mut r = Report::new("matched pair");

    let ha = mp.h.coalgebra().tensor(mp.a.coalgebra());
    r.push(coalgebra_map_check("ract-coalgebra-map", ract, &ha, mp.h.coalgebra()));
    r.push(coalgebra_map_check("lact-coalgebra-map", lact, &ha, mp.a.coalgebra()));

    // (gh) ▷ a = g ▷ (h ▷ a), 1 ▷ a = a
    let assoc = find_counterexample(&[nh, nh, na], |i| {
        let t = Tensor::basis(field, &[nh, nh, na], i);
        t.apply(mh, 0, 2).apply(lact, 0, 2) == t.apply(lact, 1, 2).apply(lact, 0, 2)
    });
    let unit = find_counterexample(&[na], |i| {
        let t = Tensor::basis(field, &[na], i);
        t.insert(mp.h.unit(), 0).apply(lact, 0, 2) == t
    });
    r.push(Check::from_search("lact-module", assoc.or(unit)));
    // (h ◁ a) ◁ b = h ◁ ab, h ◁ 1 = h
    let assoc = find_counterexample(&[nh, na, na], |i| {
        let t = Tensor::basis(field, &[nh, na, na], i);
        t.apply(ract, 0, 2).apply(ract, 0, 2) == t.apply(ma, 1, 2).apply(ract, 0, 2)
    });
    let unit = find_counterexample(&[nh], |i| {
        let t = Tensor::basis(field, &[nh], i);
        t.insert(mp.a.unit(), 1).apply(ract, 0, 2) == t
    });
    r.push(Check::from_search("ract-module", assoc.or(unit)));

    // mp1: 1 ◁ a = ε(a)1, h ▷ 1 = ε(h)1
    let w = find_counterexample(&[na], |i| {
        let t = Tensor::basis(field, &[na], i);
        t.insert(mp.h.unit(), 0).apply(ract, 0, 2) == t.map(mp.a.counit(), 0).insert(mp.h.unit(), 0)
    });
    let w2 = find_counterexample(&[nh], |i| {
        let t = Tensor::basis(field, &[nh], i);
        t.insert(mp.a.unit(), 1).apply(lact, 0, 2) == t.map(mp.h.counit(), 0).insert(mp.a.unit(), 0)
    });
    r.push(Check::from_search("mp1", w.or(w2)));

    // mp2: g ▷ ab = (g1 ▷ a1)((g2 ◁ a2) ▷ b)
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
    r.push(Check::from_search("mp2", w));

    // mp3: (gh) ◁ a = (g ◁ (h1 ▷ a1))(h2 ◁ a2)
    let w = find_counterexample(&[nh, nh, na], |i| {
        let t = Tensor::basis(field, &[nh, nh, na], i);
        let lhs = t.apply(mh, 0, 2).apply(ract, 0, 2);
        let rhs = t
            .map(dh, 1)
            .map(da, 3)
            .permute(&[0, 1, 3, 2, 4])
            .apply(lact, 1, 2)
            .apply(ract, 0, 2)
            .apply(ract, 1, 2)
            .apply(mh, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("mp3", w));

    // mp4: g1 ◁ a1 ⊗ g2 ▷ a2 = g2 ◁ a2 ⊗ g1 ▷ a1
    let w = find_counterexample(&[nh, na], |i| {
        let t = Tensor::basis(field, &[nh, na], i).map(dh, 0).map(da, 2);
        let lhs = t.permute(&[0, 2, 1, 3]).apply(ract, 0, 2).apply(lact, 1, 2);
        let rhs = t.permute(&[1, 3, 0, 2]).apply(ract, 0, 2).apply(lact, 1, 2);
        lhs == rhs
    });
    r.push(Check::from_search("mp4", w));
    r
}

/// `(a ⋈ h)(c ⋈ g) = a(h1 ▷ c1) ⋈ (h2 ◁ c2)g`, computed directly.
pub fn bicrossed_multiplication(mp: &MatchedPair) -> LinMap {
    let field = mp.field();
    let (na, nh) = (mp.a.dim(), mp.h.dim());
    let slots = BasedSpace::tensor(&mp.a.space().flat(), &mp.h.space().flat());
    let domain = BasedSpace::tensor(&slots, &slots);
    map_from_tensors(field, &domain, &slots.flat(), |idx| {
        Tensor::basis(field, &[na, nh, na, nh], idx)
            .map(mp.h.delta(), 1)
            .map(mp.a.delta(), 3)
            // a h1 h2 c1 c2 g → a h1 c1 h2 c2 g
            .permute(&[0, 1, 3, 2, 4, 5])
            .apply(&mp.lact, 1, 2)
            .apply(&mp.ract, 2, 2)
            .apply(mp.h.mult(), 2, 2)
            .apply(mp.a.mult(), 0, 2)
            .merge(0, 2)
    })
}

/// `S(a ⋈ h) = (1 ⋈ S_H(h))(S_A(a) ⋈ 1)`.
pub fn bicrossed_antipode(mp: &MatchedPair, p: &UnifiedProduct) -> Result<LinMap> {
    let (s_a, s_h) = match (&mp.a_antipode, &mp.h_antipode) {
        (Some(a), Some(h)) => (a, h),
        _ => return Err(Error::Precondition("both factors need antipodes".into())),
    };
    let field = mp.field();
    let (na, nh) = (mp.a.dim(), mp.h.dim());
    let space = p.bialgebra().space();
    let slots = BasedSpace::tensor(&mp.a.space().flat(), &mp.h.space().flat());
    let s = map_from_tensors(field, &slots, &space.flat(), |idx| {
        Tensor::basis(field, &[na, nh], idx)
            .map(s_a, 0)
            .map(s_h, 1)
            .permute(&[1, 0])
            .insert(mp.a.unit(), 0)
            .insert(mp.h.unit(), 3)
            .apply(p.bialgebra().mult(), 0, 4)
    });
    s.reshape(space.clone(), space.flat())
}

/// Builds `A ⋈ H` through the unified-product engine, then cross-checks
/// against the direct formula; with antipodes on both factors the
/// bicrossed antipode is attached and compared with the solved one.
pub fn build_bicrossed(mp: &MatchedPair) -> Result<UnifiedProduct> {
    let report = check_matched_pair(mp);
    if !report.all_passed() {
        return Err(Error::ChecksFailed(report.failed_ids()));
    }
    let p = build_unified_product(&mp.to_datum())?;
    if !p.bialgebra().mult().same_matrix(&bicrossed_multiplication(mp)) {
        return Err(Error::ChecksFailed(vec!["bicrossed-formula".into()]));
    }
    if mp.a_antipode.is_some() && mp.h_antipode.is_some() {
        let s = bicrossed_antipode(mp, &p)?;
        if !s.same_matrix(&antipode_solve(p.bialgebra())?) {
            return Err(Error::ChecksFailed(vec!["bicrossed-antipode".into()]));
        }
        return p.with_antipode(s);
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedDatum {
    a: Bialgebra,
    a_antipode: Option<LinMap>,
    h: Bialgebra,
    lact: LinMap,
    cocycle: LinMap,
}

impl CrossedDatum {
    pub fn new(a: Bialgebra, a_antipode: Option<LinMap>, h: Bialgebra, lact: LinMap, cocycle: LinMap) -> Result<Self> {
        let ha = BasedSpace::tensor(h.space(), a.space());
        let hh = BasedSpace::tensor(h.space(), h.space());
        let lact = shaped(&lact, ha, a.space().flat(), "left action")?;
        let cocycle = shaped(&cocycle, hh, a.space().flat(), "cocycle")?;
        let a_antipode = checked_antipode(&a, a_antipode)?;
        Ok(CrossedDatum {
            a,
            a_antipode,
            h,
            lact,
            cocycle,
        })
    }

    pub fn a(&self) -> &Bialgebra {
        &self.a
    }

    pub fn h(&self) -> &Bialgebra {
        &self.h
    }

    pub fn a_antipode(&self) -> Option<&LinMap> {
        self.a_antipode.as_ref()
    }

    pub fn lact(&self) -> &LinMap {
        &self.lact
    }

    pub fn cocycle(&self) -> &LinMap {
        &self.cocycle
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn with_cocycle(&self, cocycle: LinMap) -> Result<Self> {
        CrossedDatum::new(
            self.a.clone(),
            self.a_antipode.clone(),
            self.h.clone(),
            self.lact.clone(),
            cocycle,
        )
    }

    /// The extending datum with trivial right action.
    pub fn to_datum(&self) -> ExtendingDatum {
        let h = self.h.coalgebra().clone();
        ExtendingDatum::new(DatumParts {
            a: self.a.clone(),
            a_antipode: self.a_antipode.clone(),
            ract: trivial_ract(&h, &self.a),
            h,
            h_algebra: self.h.algebra().clone(),
            lact: self.lact.clone(),
            cocycle: self.cocycle.clone(),
        })
        .expect("shapes already normalized")
    }
}

/// Normalizations, measuring, twisted module and cocycle conditions, and
/// the two coalgebra compatibilities `(c)`, `(d)`.
pub fn check_crossed(cd: &CrossedDatum) -> Report {
    let field = cd.field();
    let (na, nh) = (cd.a.dim(), cd.h.dim());
    let (ma, mh) = (cd.a.mult(), cd.h.mult());
    let dh = cd.h.delta();
    let (lact, f) = (&cd.lact, &cd.cocycle);
    let mut r = Report::new("crossed datum");

    let ha = cd.h.coalgebra().tensor(cd.a.coalgebra());
    let hh = cd.h.coalgebra().tensor(cd.h.coalgebra());
    r.push(coalgebra_map_check("lact-coalgebra-map", lact, &ha, cd.a.coalgebra()));
    r.push(coalgebra_map_check("cocycle-coalgebra-map", f, &hh, cd.a.coalgebra()));

    let h = |i: &[usize]| Tensor::basis(field, &[nh], i);
    let a = |i: &[usize]| Tensor::basis(field, &[na], i);
    let w = find_counterexample(&[nh], |i| {
        h(i).insert(cd.a.unit(), 1).apply(lact, 0, 2) == h(i).map(cd.h.counit(), 0).insert(cd.a.unit(), 0)
    });
    r.push(Check::from_search("lact-unit", w));
    let w = find_counterexample(&[na], |i| a(i).insert(cd.h.unit(), 0).apply(lact, 0, 2) == a(i));
    r.push(Check::from_search("lact-by-unit", w));
    let w = find_counterexample(&[nh], |i| {
        let eps = h(i).map(cd.h.counit(), 0).insert(cd.a.unit(), 0);
        h(i).insert(cd.h.unit(), 1).apply(f, 0, 2) == eps && h(i).insert(cd.h.unit(), 0).apply(f, 0, 2) == eps
    });
    r.push(Check::from_search("cocycle-unit", w));

    // h ▷ ab = (h1 ▷ a)(h2 ▷ b)
    let w = find_counterexample(&[nh, na, na], |i| {
        let t = Tensor::basis(field, &[nh, na, na], i);
        let lhs = t.apply(ma, 1, 2).apply(lact, 0, 2);
        let rhs = t
            .map(dh, 0)
            .permute(&[0, 2, 1, 3])
            .apply(lact, 0, 2)
            .apply(lact, 1, 2)
            .apply(ma, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("measuring", w));

    // [g1 ▷ (h1 ▷ a)] f(g2, h2) = f(g1, h1)((g2h2) ▷ a)
    let w = find_counterexample(&[nh, nh, na], |i| {
        let t = Tensor::basis(field, &[nh, nh, na], i).map(dh, 0).map(dh, 2);
        let lhs = t
            .permute(&[0, 2, 4, 1, 3])
            .apply(lact, 1, 2)
            .apply(lact, 0, 2)
            .apply(f, 1, 2)
            .apply(ma, 0, 2);
        let rhs = t
            .permute(&[0, 2, 1, 3, 4])
            .apply(f, 0, 2)
            .apply(mh, 1, 2)
            .apply(lact, 1, 2)
            .apply(ma, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("twisted-module", w));

    // (g1 ▷ f(h1, l1)) f(g2, h2l2) = f(g1, h1) f(g2h2, l)
    let w = find_counterexample(&[nh, nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh, nh], i);
        let lhs = t
            .map(dh, 0)
            .map(dh, 2)
            .map(dh, 4)
            .permute(&[0, 2, 4, 1, 3, 5])
            .apply(f, 1, 2)
            .apply(lact, 0, 2)
            .apply(mh, 2, 2)
            .apply(f, 1, 2)
            .apply(ma, 0, 2);
        let rhs = t
            .map(dh, 0)
            .map(dh, 2)
            .permute(&[0, 2, 1, 3, 4])
            .apply(f, 0, 2)
            .apply(mh, 1, 2)
            .apply(f, 1, 2)
            .apply(ma, 0, 2);
        lhs == rhs
    });
    r.push(Check::from_search("cocycle-condition", w));

    // (c) g1 ⊗ g2 ▷ a = g2 ⊗ g1 ▷ a
    let w = find_counterexample(&[nh, na], |i| {
        let t = Tensor::basis(field, &[nh, na], i).map(dh, 0);
        t.apply(lact, 1, 2) == t.permute(&[1, 0, 2]).apply(lact, 1, 2)
    });
    r.push(Check::from_search("c", w));

    // (d) g1h1 ⊗ f(g2, h2) = g2h2 ⊗ f(g1, h1)
    let w = find_counterexample(&[nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh], i).map(dh, 0).map(dh, 2);
        let lhs = t.permute(&[0, 2, 1, 3]).apply(mh, 0, 2).apply(f, 1, 2);
        let rhs = t.permute(&[1, 3, 0, 2]).apply(mh, 0, 2).apply(f, 1, 2);
        lhs == rhs
    });
    r.push(Check::from_search("d", w));
    r
}

/// `(a # h)(c # g) = a(h1 ▷ c) f(h2, g1) # h3g2`, computed directly.
pub fn crossed_multiplication(cd: &CrossedDatum) -> LinMap {
    let field = cd.field();
    let (na, nh) = (cd.a.dim(), cd.h.dim());
    let dh = cd.h.delta();
    let slots = BasedSpace::tensor(&cd.a.space().flat(), &cd.h.space().flat());
    let domain = BasedSpace::tensor(&slots, &slots);
    map_from_tensors(field, &domain, &slots.flat(), |idx| {
        Tensor::basis(field, &[na, nh, na, nh], idx)
            .map(dh, 1)
            .map(dh, 2)
            .map(dh, 5)
            // a h1 h2 h3 c g1 g2 → a h1 c h2 g1 h3 g2
            .permute(&[0, 1, 4, 2, 5, 3, 6])
            .apply(&cd.lact, 1, 2)
            .apply(&cd.cocycle, 2, 2)
            .apply(cd.h.mult(), 3, 2)
            .apply(cd.a.mult(), 0, 2)
            .apply(cd.a.mult(), 0, 2)
            .merge(0, 2)
    })
}

/// Builds `A #_f H` through the unified-product engine and compares with
/// the direct formula.
pub fn build_crossed(cd: &CrossedDatum) -> Result<UnifiedProduct> {
    let report = check_crossed(cd);
    if !report.all_passed() {
        return Err(Error::ChecksFailed(report.failed_ids()));
    }
    let p = build_unified_product(&cd.to_datum())?;
    if !p.bialgebra().mult().same_matrix(&crossed_multiplication(cd)) {
        return Err(Error::ChecksFailed(vec!["crossed-formula".into()]));
    }
    Ok(p)
}

/// Deforms a matched pair by a lazy cocycle `u` with `h ◁ u(g) = h ε(g)`:
/// `h ▷′ c = u(h1)(h2 ▷ c1) S_A(u(h3 ◁ c2))`,
/// `f′(h, g) = u(h1)(h2 ▷ u(g1)) S_A(u(h3 g2))`, and
/// `h ·′ g = (h ◁ u(g1)) g2`, which equals `hg` under the hypothesis.
pub fn deform_matched_pair(mp: &MatchedPair, u: &LinMap) -> Result<ExtendingDatum> {
    let field = mp.field();
    let s_a = mp
        .a_antipode
        .as_ref()
        .ok_or_else(|| Error::Precondition("A has no antipode".into()))?;
    let u = shaped(u, mp.h.space().clone(), mp.a.space().flat(), "cocycle u")?;
    let lazy = lazy_cocycle_report(&u, mp.h.coalgebra(), mp.h.unit(), &mp.a);
    if let Some(c) = lazy.first_failure() {
        return Err(Error::Precondition(format!(
            "u is not a lazy cocycle: {} fails (witness {:?})",
            c.id, c.witness
        )));
    }
    let (na, nh) = (mp.a.dim(), mp.h.dim());
    let (dh, da, ma) = (mp.h.delta(), mp.a.delta(), mp.a.mult());
    let ract = &mp.ract;
    if let Some(w) = find_counterexample(&[nh, nh], |i| {
        let t = Tensor::basis(field, &[nh, nh], i);
        t.map(&u, 1).apply(ract, 0, 2) == t.map(mp.h.counit(), 1)
    }) {
        return Err(Error::Precondition(format!(
            "h ◁ u(g) ≠ h ε(g) at (h, g) = ({}, {})",
            mp.h.space().label(w[0]),
            mp.h.space().label(w[1])
        )));
    }
    let ha = BasedSpace::tensor(&mp.h.space().flat(), &mp.a.space().flat());
    let hh = BasedSpace::tensor(&mp.h.space().flat(), &mp.h.space().flat());
    let lact = map_from_tensors(field, &ha, &mp.a.space().flat(), |idx| {
        Tensor::basis(field, &[nh, na], idx)
            .map(dh, 0)
            .map(dh, 1)
            .map(da, 3)
            // h1 h2 h3 c1 c2 → h1 h2 c1 h3 c2
            .permute(&[0, 1, 3, 2, 4])
            .map(&u, 0)
            .apply(&mp.lact, 1, 2)
            .apply(ract, 2, 2)
            .map(&u, 2)
            .map(s_a, 2)
            .apply(ma, 0, 2)
            .apply(ma, 0, 2)
    });
    let cocycle = map_from_tensors(field, &hh, &mp.a.space().flat(), |idx| {
        Tensor::basis(field, &[nh, nh], idx)
            .map(dh, 0)
            .map(dh, 1)
            .map(dh, 3)
            // h1 h2 h3 g1 g2 → h1 h2 g1 h3 g2
            .permute(&[0, 1, 3, 2, 4])
            .map(&u, 0)
            .map(&u, 2)
            .apply(&mp.lact, 1, 2)
            .apply(mp.h.mult(), 2, 2)
            .map(&u, 2)
            .map(s_a, 2)
            .apply(ma, 0, 2)
            .apply(ma, 0, 2)
    });
    let dot = map_from_tensors(field, &hh, &mp.h.space().flat(), |idx| {
        Tensor::basis(field, &[nh, nh], idx)
            .map(dh, 1)
            .map(&u, 1)
            .apply(ract, 0, 2)
            .apply(mp.h.mult(), 0, 2)
    });
    let d = mp.to_datum();
    let d = ExtendingDatum::new(DatumParts {
        lact,
        cocycle,
        ..d.to_parts()
    })?;
    d.with_dot(dot)
}

/// The matched pair of a group extending structure with trivial cocycle;
/// `⋆` must then make `X` a group.
pub fn group_matched_pair(ges: &GroupExtendingStructure, field: Field) -> Result<MatchedPair> {
    if !ges.cocycle_is_trivial() {
        return Err(Error::Precondition("cocycle is not trivial".into()));
    }
    let x = crate::groups::GroupTable::new(ges.x_labels.clone(), ges.star.clone())?;
    if x.identity() != ges.basepoint {
        return Err(Error::Precondition("basepoint is not the identity of X".into()));
    }
    let d = ges.lift(field)?;
    let (hb, s_h) = crate::groups::group_algebra(&x, field).into_parts();
    let (a, s_a) = d.a_hopf().expect("group algebra").into_parts();
    MatchedPair::new(a, Some(s_a), hb, Some(s_h), d.ract().clone(), d.lact().clone())
}
