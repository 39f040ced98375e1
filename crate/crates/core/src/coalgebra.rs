//! Coalgebras, algebras, bialgebras and Hopf algebras given by structure
//! constants, together with their axiom checkers.
//!
//! Structure maps are stored so that every space contributes exactly one
//! tensor slot: `Δ: V → V ⊗ V` has a two-slot codomain, `m: V ⊗ V → V` a
//! one-slot codomain, `ε` lands in the ground field. The `space` field keeps
//! the original tensor structure (a unified product remembers `A ⊗ H`).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{AntipodeSide, Error, Result};
use crate::linmap::{Entry, LinMap};
use crate::linsolve::{Echelon, Row};
use crate::report::{Check, Report};
use crate::scalar::Field;
use crate::space::BasedSpace;
use crate::tensor::{find_counterexample, map_from_tensors, Tensor};

fn shape(map: &LinMap, what: &str, domain: BasedSpace, codomain: BasedSpace, field: Field) -> Result<LinMap> {
    if map.field() != field {
        return Err(Error::FieldMismatch(field, map.field()));
    }
    map.reshape(domain, codomain).map_err(|e| match e {
        Error::DimensionMismatch { expected, found, .. } => Error::DimensionMismatch {
            context: what.to_string(),
            expected,
            found,
        },
        other => other,
    })
}

/// `V ⊗ V` with one slot per factor.
pub fn square(space: &BasedSpace) -> BasedSpace {
    let flat = space.flat();
    BasedSpace::tensor(&flat, &flat)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    space: BasedSpace,
    delta: LinMap,
    counit: LinMap,
}

impl Coalgebra {
    /// Wraps structure maps; shapes are checked, axioms are not (see
    /// [`check_coalgebra`]).
    pub fn new(space: BasedSpace, delta: LinMap, counit: LinMap) -> Result<Self> {
        let field = delta.field();
        let delta = shape(&delta, "comultiplication", space.clone(), square(&space), field)?;
        let counit = shape(&counit, "counit", space.clone(), BasedSpace::ground(), field)?;
        Ok(Coalgebra { space, delta, counit })
    }

    /// The ground field: `Δ1 = 1 ⊗ 1`, `ε1 = 1`.
    pub fn ground(field: Field, label: &str) -> Self {
        let space = BasedSpace::new([label]).expect("single label");
        Coalgebra::grouplike(field, space)
    }

    /// Every basis vector group-like.
    pub fn grouplike(field: Field, space: BasedSpace) -> Self {
        let n = space.dim();
        let delta = LinMap::from_basis_fn(field, space.clone(), square(&space), |i| i * n + i).expect("in range");
        let counit = LinMap::functional(field, space.clone(), vec![field.one(); n]).expect("in range");
        Coalgebra { space, delta, counit }
    }

    pub fn field(&self) -> Field {
        self.delta.field()
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn delta(&self) -> &LinMap {
        &self.delta
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// Counit value on a basis vector.
    pub fn counit_at(&self, i: usize) -> crate::scalar::Scalar {
        self.counit
            .column(i)
            .first()
            .map(|(_, s)| s.clone())
            .unwrap_or_else(|| self.field().zero())
    }

    /// `Δe_i = e_i ⊗ e_i` and `ε(e_i) = 1`.
    pub fn is_grouplike(&self, i: usize) -> bool {
        let n = self.dim();
        let col = self.delta.column(i);
        col.len() == 1 && col[0].0 == i * n + i && col[0].1.is_one() && self.counit_at(i).is_one()
    }

    pub fn is_grouplike_basis(&self) -> bool {
        (0..self.dim()).all(|i| self.is_grouplike(i))
    }

    /// The tensor-product coalgebra `C ⊗ D`.
    pub fn tensor(&self, other: &Coalgebra) -> Coalgebra {
        let field = self.field();
        let space = BasedSpace::tensor(&self.space, &other.space);
        let (n, m) = (self.dim(), other.dim());
        let dims = [n, m];
        let delta = map_from_tensors(
            field,
            &BasedSpace::tensor(&self.space.flat(), &other.space.flat()),
            &square(&space),
            |idx| {
                Tensor::basis(field, &dims, idx)
                    .map(&self.delta, 0)
                    .map(&other.delta, 2)
                    .permute(&[0, 2, 1, 3])
                    .merge(0, 2)
                    .merge(1, 2)
            },
        )
        .reshape(space.clone(), square(&space))
        .expect("same dimensions");
        let counit = self
            .counit
            .tensor(&other.counit)
            .expect("same field")
            .reshape(space.clone(), BasedSpace::ground())
            .expect("same dimensions");
        Coalgebra { space, delta, counit }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Associativity {
    Yes,
    No,
    Unknown,
}

/// A unital algebra; associativity is recorded, not assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    space: BasedSpace,
    mult: LinMap,
    unit: LinMap,
    associativity: Associativity,
}

impl Algebra {
    pub fn new(space: BasedSpace, mult: LinMap, unit: LinMap, associativity: Associativity) -> Result<Self> {
        let field = mult.field();
        let flat = space.flat();
        let mult = shape(
            &mult,
            "multiplication",
            BasedSpace::tensor(&space, &space),
            flat.clone(),
            field,
        )?;
        let unit = shape(&unit, "unit", BasedSpace::ground(), flat, field)?;
        Ok(Algebra {
            space,
            mult,
            unit,
            associativity,
        })
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn space(&self) -> &BasedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn associativity(&self) -> Associativity {
        self.associativity
    }

    /// Checks associativity and records the outcome in the flag.
    pub fn resolve_associativity(&mut self) -> Option<Vec<usize>> {
        let witness = associativity_counterexample(self);
        self.associativity = if witness.is_none() {
            Associativity::Yes
        } else {
            Associativity::No
        };
        witness
    }

    /// Product of two basis vectors.
    pub fn product(&self, i: usize, j: usize) -> &[Entry] {
        self.mult.column(i * self.dim() + j)
    }
}

fn associativity_counterexample(a: &Algebra) -> Option<Vec<usize>> {
    let n = a.dim();
    let field = a.field();
    find_counterexample(&[n, n, n], |idx| {
        let t = Tensor::basis(field, &[n, n, n], idx);
        let left = t.apply(&a.mult, 0, 2).apply(&a.mult, 0, 2);
        let right = t.apply(&a.mult, 1, 2).apply(&a.mult, 0, 2);
        left == right
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bialgebra {
    coalgebra: Coalgebra,
    algebra: Algebra,
}

impl Bialgebra {
    /// Pairs a coalgebra and an algebra on the same space. The algebra must
    /// be associative: an `Unknown` flag is resolved here and a
    /// non-associative multiplication is rejected with a witness. The
    /// compatibility axioms are left to [`check_bialgebra`].
    pub fn new(coalgebra: Coalgebra, mut algebra: Algebra) -> Result<Self> {
        if coalgebra.field() != algebra.field() {
            return Err(Error::FieldMismatch(coalgebra.field(), algebra.field()));
        }
        if coalgebra.dim() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "bialgebra carrier".into(),
                expected: coalgebra.dim(),
                found: algebra.dim(),
            });
        }
        match algebra.associativity {
            Associativity::Yes => {}
            Associativity::No => return Err(Error::NotAssociative(Vec::new())),
            Associativity::Unknown => {
                if let Some(w) = algebra.resolve_associativity() {
                    return Err(Error::NotAssociative(w));
                }
            }
        }
        let algebra = Algebra {
            space: coalgebra.space.clone(),
            ..algebra
        };
        Ok(Bialgebra { coalgebra, algebra })
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn space(&self) -> &BasedSpace {
        self.coalgebra.space()
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn delta(&self) -> &LinMap {
        self.coalgebra.delta()
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit()
    }

    pub fn mult(&self) -> &LinMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinMap {
        self.algebra.unit()
    }

    /// `η ∘ ε`, the unit of the convolution algebra `End(B)`.
    pub fn unit_counit(&self) -> LinMap {
        self.unit()
            .compose(self.counit())
            .expect("shapes agree")
            .reshape(self.space().clone(), self.space().flat())
            .expect("same dimensions")
    }

    pub fn identity(&self) -> LinMap {
        LinMap::identity(self.field(), self.space().clone())
            .reshape(self.space().clone(), self.space().flat())
            .expect("same dimensions")
    }

    /// Whether the two bialgebras have identical structure constants.
    pub fn same_structure(&self, other: &Bialgebra) -> bool {
        self.delta().same_matrix(other.delta())
            && self.counit().same_matrix(other.counit())
            && self.mult().same_matrix(other.mult())
            && self.unit().same_matrix(other.unit())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hopf {
    bialgebra: Bialgebra,
    antipode: LinMap,
}

impl Hopf {
    /// Attaches an antipode after checking `S * id = id * S = η∘ε`.
    pub fn new(bialgebra: Bialgebra, antipode: LinMap) -> Result<Self> {
        let antipode = shape(
            &antipode,
            "antipode",
            bialgebra.space().clone(),
            bialgebra.space().flat(),
            bialgebra.field(),
        )?;
        let id = bialgebra.identity();
        let target = bialgebra.unit_counit();
        let left = convolution(&antipode, &id, bialgebra.coalgebra(), bialgebra.algebra())?;
        if let Some(i) = left.first_difference(&target) {
            return Err(Error::NotAntipode(format!("S * id ≠ η∘ε at basis index {i}")));
        }
        let right = convolution(&id, &antipode, bialgebra.coalgebra(), bialgebra.algebra())?;
        if let Some(i) = right.first_difference(&target) {
            return Err(Error::NotAntipode(format!("id * S ≠ η∘ε at basis index {i}")));
        }
        Ok(Hopf { bialgebra, antipode })
    }

    /// Solves for the antipode; fails if there is none.
    pub fn from_bialgebra(bialgebra: Bialgebra) -> Result<Self> {
        let antipode = antipode_solve(&bialgebra)?;
        Ok(Hopf { bialgebra, antipode })
    }

    pub fn bialgebra(&self) -> &Bialgebra {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn field(&self) -> Field {
        self.bialgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn into_parts(self) -> (Bialgebra, LinMap) {
        (self.bialgebra, self.antipode)
    }
}

pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let n = c.dim();
    let field = c.field();
    let mut report = Report::new("coalgebra");
    let coassoc = find_counterexample(&[n], |i| {
        let t = Tensor::basis(field, &[n], i).map(&c.delta, 0);
        t.map(&c.delta, 0) == t.map(&c.delta, 1)
    });
    report.push(Check::from_search("coassociativity", coassoc));
    let base = |i: &[usize]| Tensor::basis(field, &[n], i);
    let left = find_counterexample(&[n], |i| base(i).map(&c.delta, 0).map(&c.counit, 0) == base(i));
    report.push(Check::from_search("left-counit", left));
    let right = find_counterexample(&[n], |i| base(i).map(&c.delta, 0).map(&c.counit, 1) == base(i));
    report.push(Check::from_search("right-counit", right));
    report
}

pub fn check_algebra(a: &Algebra) -> Report {
    let n = a.dim();
    let field = a.field();
    let mut report = Report::new("algebra");
    report.push(Check::from_search("associativity", associativity_counterexample(a)));
    let base = |i: &[usize]| Tensor::basis(field, &[n], i);
    let left = find_counterexample(&[n], |i| base(i).insert(&a.unit, 0).apply(&a.mult, 0, 2) == base(i));
    report.push(Check::from_search("left-unit", left));
    let right = find_counterexample(&[n], |i| base(i).insert(&a.unit, 1).apply(&a.mult, 0, 2) == base(i));
    report.push(Check::from_search("right-unit", right));
    report
}

/// All bialgebra axioms for a coalgebra/algebra pair on one space,
/// without requiring the pair to have been assembled into a [`Bialgebra`].
pub fn check_bialgebra_parts(c: &Coalgebra, a: &Algebra) -> Report {
    let n = c.dim();
    let field = c.field();
    let mut report = Report::new("bialgebra");
    report.absorb("", check_coalgebra(c));
    report.absorb("", check_algebra(a));
    let pair = |i: &[usize]| Tensor::basis(field, &[n, n], i);
    let delta_mult = find_counterexample(&[n, n], |i| {
        let lhs = pair(i).apply(&a.mult, 0, 2).map(&c.delta, 0);
        let rhs = pair(i)
            .map(&c.delta, 0)
            .map(&c.delta, 2)
            .permute(&[0, 2, 1, 3])
            .apply(&a.mult, 0, 2)
            .apply(&a.mult, 1, 2);
        lhs == rhs
    });
    report.push(Check::from_search("delta-multiplicative", delta_mult));
    let one = Tensor::unit(field).insert(&a.unit, 0);
    let delta_unit = one.map(&c.delta, 0) == one.tensor(&one);
    report.push(if delta_unit {
        Check::pass("delta-unit")
    } else {
        Check::fail("delta-unit", None)
    });
    let eps_mult = find_counterexample(&[n, n], |i| {
        let lhs = pair(i).apply(&a.mult, 0, 2).map(&c.counit, 0);
        let rhs = pair(i).map(&c.counit, 0).map(&c.counit, 0);
        lhs == rhs
    });
    report.push(Check::from_search("counit-multiplicative", eps_mult));
    let eps_unit = one.map(&c.counit, 0) == Tensor::unit(field);
    report.push(if eps_unit {
        Check::pass("counit-unit")
    } else {
        Check::fail("counit-unit", None)
    });
    report
}

pub fn check_bialgebra(b: &Bialgebra) -> Report {
    check_bialgebra_parts(b.coalgebra(), b.algebra())
}

fn check_map_shape(f: &LinMap, src: &Coalgebra, dst: &Coalgebra) -> bool {
    f.field() == src.field()
        && f.field() == dst.field()
        && f.domain().dim() == src.dim()
        && f.codomain().dim() == dst.dim()
}

fn coalgebra_map_counterexample(f: &LinMap, src: &Coalgebra, dst: &Coalgebra, twisted: bool) -> Option<Vec<usize>> {
    let n = src.dim();
    let field = src.field();
    find_counterexample(&[n], |i| {
        let t = Tensor::basis(field, &[n], i);
        let image = t.map(f, 0);
        let lhs = image.map(dst.delta(), 0);
        let mut rhs = t.map(src.delta(), 0).map(f, 0).map(f, 1);
        if twisted {
            rhs = rhs.permute(&[1, 0]);
        }
        lhs == rhs && image.map(dst.counit(), 0) == t.map(src.counit(), 0)
    })
}

/// Checks `Δ∘f = (f⊗f)∘Δ` and `ε∘f = ε`, reporting a failing basis index.
pub fn coalgebra_map_check(id: &str, f: &LinMap, src: &Coalgebra, dst: &Coalgebra) -> Check {
    if !check_map_shape(f, src, dst) {
        return Check::fail(id, None).with_detail("shape mismatch");
    }
    let f = f
        .reshape(src.space().clone(), dst.space().flat())
        .expect("dimensions checked");
    Check::from_search(id, coalgebra_map_counterexample(&f, src, dst, false))
}

pub fn is_coalgebra_map(f: &LinMap, src: &Coalgebra, dst: &Coalgebra) -> bool {
    coalgebra_map_check("coalgebra-map", f, src, dst).passed
}

/// Checks `Δ∘f = τ∘(f⊗f)∘Δ` and `ε∘f = ε`.
pub fn coalgebra_antimap_check(id: &str, f: &LinMap, src: &Coalgebra, dst: &Coalgebra) -> Check {
    if !check_map_shape(f, src, dst) {
        return Check::fail(id, None).with_detail("shape mismatch");
    }
    let f = f
        .reshape(src.space().clone(), dst.space().flat())
        .expect("dimensions checked");
    Check::from_search(id, coalgebra_map_counterexample(&f, src, dst, true))
}

pub fn is_coalgebra_antimap(f: &LinMap, src: &Coalgebra, dst: &Coalgebra) -> bool {
    coalgebra_antimap_check("coalgebra-antimap", f, src, dst).passed
}

/// The convolution product `m ∘ (f ⊗ g) ∘ Δ` of two maps `C → A`.
pub fn convolution(f: &LinMap, g: &LinMap, src: &Coalgebra, dst: &Algebra) -> Result<LinMap> {
    for (name, map) in [("convolution left factor", f), ("convolution right factor", g)] {
        if map.field() != src.field() || map.field() != dst.field() {
            return Err(Error::FieldMismatch(src.field(), map.field()));
        }
        if map.domain().dim() != src.dim() || map.codomain().dim() != dst.dim() {
            return Err(Error::DimensionMismatch {
                context: name.into(),
                expected: src.dim() * dst.dim(),
                found: map.domain().dim() * map.codomain().dim(),
            });
        }
    }
    let flat = dst.space().flat();
    let f = f.reshape(src.space().clone(), flat.clone())?;
    let g = g.reshape(src.space().clone(), flat.clone())?;
    let n = src.dim();
    let field = src.field();
    LinMap::from_fn(field, src.space().clone(), flat, |i| {
        Tensor::basis(field, &[n], &[i])
            .map(src.delta(), 0)
            .map(&f, 0)
            .map(&g, 1)
            .apply(dst.mult(), 0, 2)
            .flatten()
    })
}

/// `η_A ∘ ε_C` as a map `C → A`.
pub fn unit_counit(src: &Coalgebra, dst: &Algebra) -> LinMap {
    dst.unit()
        .compose(src.counit())
        .expect("shapes agree")
        .reshape(src.space().clone(), dst.space().flat())
        .expect("same dimensions")
}

/// Unknown `x[k·n + j]` is the coefficient of `e_j` in `S(e_k)`.
fn antipode_equations(b: &Bialgebra, side: AntipodeSide) -> BTreeMap<(usize, usize), (Row, Row)> {
    let n = b.dim();
    let mut eqs: BTreeMap<(usize, usize), (Row, Row)> = BTreeMap::new();
    for i in 0..n {
        for (r, c) in b.delta().column(i) {
            let (k, l) = (r / n, r % n);
            for j in 0..n {
                // left: S(e_k)·e_l, right: e_k·S(e_l)
                let (var, prod) = match side {
                    AntipodeSide::Left => (k * n + j, j * n + l),
                    _ => (l * n + j, k * n + j),
                };
                for (m, mu) in b.mult().column(prod) {
                    let row = &mut eqs.entry((i, *m)).or_default().0;
                    let v = c * mu;
                    let sum = match row.get(&var) {
                        Some(old) => old + &v,
                        None => v,
                    };
                    if sum.is_zero() {
                        row.remove(&var);
                    } else {
                        row.insert(var, sum);
                    }
                }
            }
        }
        let eps = b.coalgebra().counit_at(i);
        if !eps.is_zero() {
            for (m, eta) in b.unit().column(0) {
                eqs.entry((i, *m)).or_default().1.insert(0, &eps * eta);
            }
        }
    }
    eqs
}

fn solve_antipode_system(b: &Bialgebra, sides: &[AntipodeSide]) -> Result<LinMap> {
    let n = b.dim();
    let mut ech = Echelon::new(n * n);
    for side in sides {
        for (_, (row, rhs)) in antipode_equations(b, *side) {
            ech.push(row, rhs);
        }
    }
    let solution = ech.solve(1)?;
    let mut columns = vec![Vec::new(); n];
    for (var, s) in solution.into_iter().next().unwrap_or_default() {
        columns[var / n].push((var % n, s));
    }
    LinMap::new(b.field(), b.space().clone(), b.space().flat(), columns)
}

/// Solves one convolution equation (`S * id = η∘ε` or `id * S = η∘ε`) alone.
pub fn antipode_solve_side(b: &Bialgebra, side: AntipodeSide) -> Result<LinMap> {
    solve_antipode_system(b, &[side])
}

/// Finds the antipode of `b` by solving `S * id = η∘ε = id * S` as a linear
/// system in the matrix entries of `S`.
pub fn antipode_solve(b: &Bialgebra) -> Result<LinMap> {
    let both = [AntipodeSide::Left, AntipodeSide::Right];
    match solve_antipode_system(b, &both) {
        Ok(s) => Ok(s),
        Err(Error::Inconsistent) => {
            for side in both {
                if matches!(antipode_solve_side(b, side), Err(Error::Inconsistent)) {
                    return Err(Error::NoAntipode(side));
                }
            }
            Err(Error::NoAntipode(AntipodeSide::Both))
        }
        Err(e) => Err(e),
    }
}
