//! Recovering an extending datum from a bialgebra `E` that factorizes
//! through a subbialgebra `A` and a subcoalgebra `H ∋ 1_E`, and moving
//! algebra structure along coalgebra isomorphisms.

use crate::coalgebra::{
    antipode_solve, coalgebra_map_check, is_coalgebra_map, Algebra, Associativity, Bialgebra, Coalgebra, Hopf,
};
use crate::datum::{algebra_map_check, build_unified_product, DatumParts, ExtendingDatum};
use crate::error::{Error, Result};
use crate::groups::{group_algebra, CosetDecomposition};
use crate::linmap::LinMap;
use crate::report::{Check, Report};
use crate::scalar::Field;
use crate::space::BasedSpace;

/// `E` with inclusions `A → E`, `H → E`. The structures of `A` and `H` are
/// pulled back from `E` on construction, which fails unless the images are
/// closed under the relevant operations.
#[derive(Clone, Debug)]
pub struct FactorizationInput {
    e: Bialgebra,
    e_antipode: Option<LinMap>,
    incl_a: LinMap,
    incl_h: LinMap,
    a: Bialgebra,
    a_antipode: Option<LinMap>,
    h: Coalgebra,
    h_unit: LinMap,
}

fn pull_back(incl: &LinMap, rhs: LinMap, what: &str) -> Result<LinMap> {
    incl.solve(&rhs).map_err(|e| match e {
        Error::Inconsistent => Error::Precondition(format!("image is not closed under {what}")),
        Error::NotUnique { .. } => Error::Precondition("inclusion is not injective".into()),
        other => other,
    })
}

impl FactorizationInput {
    pub fn new(e: Bialgebra, e_antipode: Option<LinMap>, incl_a: LinMap, incl_h: LinMap) -> Result<Self> {
        let es = e.space().clone();
        let incl_a = incl_a.reshape(incl_a.domain().clone(), es.clone())?;
        let incl_h = incl_h.reshape(incl_h.domain().clone(), es.clone())?;
        let e_antipode = match e_antipode {
            Some(s) => Some(Hopf::new(e.clone(), s)?.antipode().clone()),
            None => None,
        };
        let a_sp = incl_a.domain().clone();
        let h_sp = incl_h.domain().clone();
        let ia2 = incl_a.tensor(&incl_a)?;
        let ih2 = incl_h.tensor(&incl_h)?;

        let a_mult = pull_back(&incl_a, e.mult().compose(&ia2)?, "multiplication")?;
        let a_unit = pull_back(&incl_a, e.unit().clone(), "the unit")?;
        let a_delta = pull_back(&ia2, e.delta().compose(&incl_a)?, "comultiplication")?;
        let a_counit = e.counit().compose(&incl_a)?;
        let a_coalg = Coalgebra::new(a_sp.clone(), a_delta, a_counit)?;
        let a_alg = Algebra::new(a_sp, a_mult, a_unit, Associativity::Unknown)?;
        let a = Bialgebra::new(a_coalg, a_alg)?;
        let a_antipode = match &e_antipode {
            Some(s) => Some(pull_back(&incl_a, s.compose(&incl_a)?, "the antipode")?),
            None => None,
        };

        let h_delta = pull_back(&ih2, e.delta().compose(&incl_h)?, "comultiplication")?;
        let h_counit = e.counit().compose(&incl_h)?;
        let h = Coalgebra::new(h_sp, h_delta, h_counit)?;
        let h_unit = pull_back(&incl_h, e.unit().clone(), "the unit")?;
        let h_unit = h_unit.reshape(BasedSpace::ground(), h.space().flat())?;
        debug_assert!(is_coalgebra_map(&incl_h, &h, e.coalgebra()));
        Ok(FactorizationInput {
            e,
            e_antipode,
            incl_a,
            incl_h,
            a,
            a_antipode,
            h,
            h_unit,
        })
    }

    pub fn e(&self) -> &Bialgebra {
        &self.e
    }

    pub fn e_antipode(&self) -> Option<&LinMap> {
        self.e_antipode.as_ref()
    }

    pub fn incl_a(&self) -> &LinMap {
        &self.incl_a
    }

    pub fn incl_h(&self) -> &LinMap {
        &self.incl_h
    }

    /// `A` with the structure inherited from `E`.
    pub fn a(&self) -> &Bialgebra {
        &self.a
    }

    pub fn a_antipode(&self) -> Option<&LinMap> {
        self.a_antipode.as_ref()
    }

    /// `H` with the coalgebra structure inherited from `E`.
    pub fn h(&self) -> &Coalgebra {
        &self.h
    }

    pub fn h_unit(&self) -> &LinMap {
        &self.h_unit
    }
}

/// `a ⊗ h ↦ a h` in `E`.
pub fn mult_map(fi: &FactorizationInput) -> LinMap {
    let inc = fi.incl_a.tensor(&fi.incl_h).expect("same field");
    let space = BasedSpace::tensor(fi.a.space(), fi.h.space());
    fi.e.mult()
        .compose(&inc)
        .expect("shapes agree")
        .reshape(space, fi.e.space().clone())
        .expect("same dimensions")
}

fn mult_map_inverse(fi: &FactorizationInput) -> Result<LinMap> {
    mult_map(fi).invert().map_err(|e| match e {
        Error::NotBijective { rank, dim } => Error::NotAFactorization { rank, dim },
        other => other,
    })
}

/// Reads off `◁`, `▷`, `f` and `·` from products `ha` and `hg` computed in
/// `E` and split back along the inverse of the multiplication map.
pub fn recover_datum(fi: &FactorizationInput) -> Result<ExtendingDatum> {
    let field = fi.e.field();
    let u_inv = mult_map_inverse(fi)?;
    let a_sp = fi.a.space().clone();
    let h_sp = fi.h.space().clone();
    let id_a = LinMap::identity(field, a_sp.clone());
    let id_h = LinMap::identity(field, h_sp.clone());
    let a_side = id_a.tensor(fi.h.counit())?;
    let h_side = fi.a.counit().tensor(&id_h)?;

    // μ(h ⊗ a) = u⁻¹(ha), ν(h ⊗ g) = u⁻¹(hg)
    let mu = u_inv.compose(&fi.e.mult().compose(&fi.incl_h.tensor(&fi.incl_a)?)?)?;
    let nu = u_inv.compose(&fi.e.mult().compose(&fi.incl_h.tensor(&fi.incl_h)?)?)?;
    let ha = BasedSpace::tensor(&h_sp, &a_sp);
    let hh = BasedSpace::tensor(&h_sp, &h_sp);
    let flat = |m: LinMap, dom: &BasedSpace, cod: &BasedSpace| m.reshape(dom.clone(), cod.flat());
    let lact = flat(a_side.compose(&mu)?, &ha, &a_sp)?;
    let ract = flat(h_side.compose(&mu)?, &ha, &h_sp)?;
    let cocycle = flat(a_side.compose(&nu)?, &hh, &a_sp)?;
    let dot = flat(h_side.compose(&nu)?, &hh, &h_sp)?;
    let h_algebra = Algebra::new(h_sp, dot, fi.h_unit.clone(), Associativity::Unknown)?;
    ExtendingDatum::new(DatumParts {
        a: fi.a.clone(),
        a_antipode: fi.a_antipode.clone(),
        h: fi.h.clone(),
        h_algebra,
        ract,
        lact,
        cocycle,
    })
}

/// Rebuilds `A ⋉ H` from the recovered datum and checks that the
/// multiplication map is a bijective bialgebra map onto `E`; when `E` has an
/// antipode, the transferred antipode must match the solved one.
pub fn certify_isomorphism(fi: &FactorizationInput, d: &ExtendingDatum) -> Result<Report> {
    let p = build_unified_product(d)?;
    let b = p.bialgebra();
    let u = mult_map(fi).reshape(b.space().clone(), fi.e.space().clone())?;
    let mut r = Report::new("factorization");
    r.push(if u.rank() == b.dim() && b.dim() == fi.e.dim() {
        Check::pass("bijective")
    } else {
        Check::fail("bijective", None).with_detail(format!("rank {} of {}", u.rank(), fi.e.dim()))
    });
    r.push(coalgebra_map_check(
        "coalgebra-map",
        &u,
        b.coalgebra(),
        fi.e.coalgebra(),
    ));
    r.push(algebra_map_check("algebra-map", &u, b.algebra(), fi.e.algebra()));
    if let (Some(s_e), true) = (&fi.e_antipode, r.all_passed()) {
        let u_inv = u.invert()?;
        let transferred = u_inv.compose(&s_e.compose(&u)?)?;
        let solved = antipode_solve(b)?;
        r.push(match transferred.first_difference(&solved) {
            None => Check::pass("transferred-antipode"),
            Some(i) => Check::fail("transferred-antipode", Some(b.space().split_index(i))),
        });
    }
    Ok(r)
}

/// The algebra structure on `L` making the invertible coalgebra map
/// `u: L → E` a bialgebra isomorphism: `l·l′ = u⁻¹(u(l)u(l′))`.
pub fn transfer_structure(l: &Coalgebra, e: &Bialgebra, u: &LinMap) -> Result<Bialgebra> {
    let u = u.reshape(l.space().clone(), e.space().clone())?;
    if !is_coalgebra_map(&u, l, e.coalgebra()) {
        return Err(Error::Precondition("u is not a coalgebra map".into()));
    }
    let u_inv = u.invert()?;
    let mult = u_inv.compose(&e.mult().compose(&u.tensor(&u)?)?)?;
    let unit = u_inv.compose(e.unit())?;
    let alg = Algebra::new(l.space().clone(), mult, unit, Associativity::Yes)?;
    Bialgebra::new(l.clone(), alg)
}

/// As [`transfer_structure`], attaching `S_L = u⁻¹ ∘ S_E ∘ u`.
pub fn transfer_hopf(l: &Coalgebra, e: &Hopf, u: &LinMap) -> Result<Hopf> {
    let b = transfer_structure(l, e.bialgebra(), u)?;
    let u = u.reshape(l.space().clone(), e.bialgebra().space().clone())?;
    let s = u.invert()?.compose(&e.antipode().compose(&u)?)?;
    Hopf::new(b, s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Roundtrip {
    Identical,
    /// Name of the first structure map that came back different.
    Mismatch(&'static str),
}

/// Builds the product of `d`, presents it as a factorization through
/// `i_A` and `i_H`, and compares the recovered datum with `d`.
pub fn roundtrip_check(d: &ExtendingDatum) -> Result<Roundtrip> {
    let p = build_unified_product(d)?;
    let s = match d.a_antipode() {
        Some(_) => antipode_solve(p.bialgebra()).ok(),
        None => None,
    };
    let fi = FactorizationInput::new(p.bialgebra().clone(), s, p.i_a().clone(), p.i_h().clone())?;
    let rec = recover_datum(&fi)?;
    Ok(match d.first_mismatch(&rec) {
        None => Roundtrip::Identical,
        Some(what) => Roundtrip::Mismatch(what),
    })
}

/// `k[G]` with `A = k[subgroup]` and `H` spanned by the coset
/// representatives, both included as basis vectors.
pub fn group_factorization(dec: &CosetDecomposition, field: Field) -> Result<FactorizationInput> {
    let g = &dec.ambient;
    let (e, s) = group_algebra(g, field).into_parts();
    let a_sp = BasedSpace::new(dec.subgroup.iter().map(|&i| g.label(i).to_string()))?;
    let h_sp = BasedSpace::new(dec.representatives.iter().map(|&i| g.label(i).to_string()))?;
    let incl_a = LinMap::from_basis_fn(field, a_sp, e.space().clone(), |i| dec.subgroup[i])?;
    let incl_h = LinMap::from_basis_fn(field, h_sp, e.space().clone(), |i| dec.representatives[i])?;
    FactorizationInput::new(e, Some(s), incl_a, incl_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{alternating4, coset_extending_structure, symmetric3, GroupTable};

    fn q() -> Field {
        Field::Rational
    }

    fn decompose(g: &GroupTable, gens: &[&str]) -> CosetDecomposition {
        let gens: Vec<usize> = gens.iter().map(|l| g.index_of(l).unwrap()).collect();
        coset_extending_structure(g, &g.closure(&gens)).unwrap()
    }

    #[test]
    fn z4_over_its_order_two_subgroup() {
        let g = GroupTable::cyclic(4);
        let dec = decompose(&g, &["2"]);
        assert_eq!(dec.representatives, vec![0, 1]);
        let fi = group_factorization(&dec, q()).unwrap();
        let d = recover_datum(&fi).unwrap();
        assert!(d.has_trivial_ract() && d.has_trivial_lact());
        // f(1, 1) is the basis vector of the element 2
        let two = fi.a().space().index_of("2").unwrap();
        assert_eq!(d.cocycle().column(3), &[(two, q().one())]);
        assert!(certify_isomorphism(&fi, &d).unwrap().all_passed());
    }

    #[test]
    fn recovery_matches_the_set_level_lift() {
        let g = alternating4();
        let dec = decompose(&g, &["(12)(34)"]);
        let fi = group_factorization(&dec, q()).unwrap();
        let d = recover_datum(&fi).unwrap();
        assert!(!d.has_trivial_cocycle() && !d.has_trivial_ract());
        let lifted = dec.structure.lift(q()).unwrap();
        assert_eq!(d.first_mismatch(&lifted), None);
        let r = certify_isomorphism(&fi, &d).unwrap();
        assert!(r.all_passed(), "{}", r.render());
        assert_eq!(roundtrip_check(&d).unwrap(), Roundtrip::Identical);
    }

    #[test]
    fn singular_multiplication_is_reported() {
        let g = symmetric3();
        let c3 = g.closure(&[g.index_of("(123)").unwrap()]);
        let (e, s) = group_algebra(&g, q()).into_parts();
        let a_sp = BasedSpace::new(c3.iter().map(|&i| g.label(i).to_string())).unwrap();
        let incl_a = LinMap::from_basis_fn(q(), a_sp, e.space().clone(), |i| c3[i]).unwrap();
        // H = span{e, (123)}: 1_E ∈ H but (123) already lies in A
        let h_sp = BasedSpace::numbered("h", 2).unwrap();
        let incl_h = LinMap::from_basis_fn(q(), h_sp, e.space().clone(), |i| c3[i]).unwrap();
        let fi = FactorizationInput::new(e, Some(s), incl_a, incl_h).unwrap();
        assert_eq!(
            recover_datum(&fi).unwrap_err(),
            Error::NotAFactorization { rank: 3, dim: 6 }
        );
    }

    #[test]
    fn transfer_along_a_permutation_and_back() {
        let g = symmetric3();
        let hopf = group_algebra(&g, q());
        let e = hopf.bialgebra();
        let perm = [3usize, 0, 5, 1, 4, 2];
        let l = Coalgebra::grouplike(q(), BasedSpace::numbered("l", 6).unwrap());
        let u = LinMap::from_basis_fn(q(), l.space().clone(), e.space().clone(), |i| perm[i]).unwrap();
        let t = transfer_hopf(&l, &hopf, &u).unwrap();
        // conjugated constants: l_i l_j = l_k with perm[k] = perm[i]·perm[j]
        for i in 0..6 {
            for j in 0..6 {
                let k = perm.iter().position(|&p| p == g.mul(perm[i], perm[j])).unwrap();
                assert_eq!(t.bialgebra().algebra().product(i, j), &[(k, q().one())]);
            }
        }
        let back = transfer_structure(e.coalgebra(), t.bialgebra(), &u.invert().unwrap()).unwrap();
        assert!(back.same_structure(e));
        assert!(transfer_structure(&l, e, &LinMap::identity(q(), l.space().clone())).is_ok());
    }

    #[test]
    fn non_subalgebra_image_is_rejected() {
        let g = symmetric3();
        let (e, s) = group_algebra(&g, q()).into_parts();
        let pick = [0usize, g.index_of("(123)").unwrap()];
        let sp = BasedSpace::numbered("a", 2).unwrap();
        let incl = LinMap::from_basis_fn(q(), sp, e.space().clone(), |i| pick[i]).unwrap();
        let id = LinMap::identity(q(), e.space().clone());
        assert!(matches!(
            FactorizationInput::new(e, Some(s), incl, id),
            Err(Error::Precondition(_))
        ));
    }
}
