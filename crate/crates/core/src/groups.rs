//! Finite groups as multiplication tables, their group algebras, and
//! extending structures of groups built from right cosets.
//!
//! Elements are totally ordered by index. Groups generated by permutations
//! list their elements by image tuple in lexicographic order, so the
//! identity comes first; `(x·y)(i) = x(y(i))`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::coalgebra::{Algebra, Associativity, Bialgebra, Coalgebra, Hopf};
use crate::datum::{DatumParts, ExtendingDatum};
use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::report::{Check, Report};
use crate::scalar::Field;
use crate::space::BasedSpace;
use crate::tensor::find_counterexample;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    labels: Vec<String>,
    /// `mult[i * n + j] = i·j`
    mult: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Verifies closure, associativity, identity and inverses.
    pub fn new(labels: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Group("empty group".into()));
        }
        if mult.len() != n || mult.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::Group("table is not n×n over 0..n".into()));
        }
        let flat: Vec<usize> = mult.into_iter().flatten().collect();
        if let Some(w) = find_counterexample(&[n, n, n], |i| {
            let (x, y, z) = (i[0], i[1], i[2]);
            flat[flat[x * n + y] * n + z] == flat[x * n + flat[y * n + z]]
        }) {
            return Err(Error::Group(format!("not associative at {w:?}")));
        }
        Self::finish(labels, flat)
    }

    /// For tables known to be associative (e.g. permutation composition).
    fn finish(labels: Vec<String>, mult: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let unique: BTreeSet<&String> = labels.iter().collect();
        if unique.len() != n {
            return Err(Error::Group("duplicate labels".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mult[e * n + x] == x && mult[x * n + e] == x))
            .ok_or_else(|| Error::Group("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| mult[x * n + y] == identity && mult[y * n + x] == identity)
                .ok_or_else(|| Error::Group(format!("element {} has no inverse", labels[x])))?;
            inverse.push(inv);
        }
        Ok(GroupTable {
            labels,
            mult,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.order() + y]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mult.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        GroupTable::finish(labels, mult).expect("cyclic group")
    }

    /// Pairs `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
        let (n, m) = (g.order(), h.order());
        let labels = (0..n * m)
            .map(|i| format!("({},{})", g.label(i / m), h.label(i % m)))
            .collect();
        let mult = (0..n * m * n * m)
            .map(|k| {
                let (x, y) = (k / (n * m), k % (n * m));
                g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
            })
            .collect();
        GroupTable::finish(labels, mult).expect("direct product")
    }

    /// Closure of permutations of `0..degree` given as image tuples.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<GroupTable> {
        for g in generators {
            let mut seen = g.clone();
            seen.sort_unstable();
            if g.len() != degree || seen != (0..degree).collect::<Vec<_>>() {
                return Err(Error::Group(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
        elements.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q: Vec<usize> = (0..degree).map(|i| p[g[i]]).collect();
                if elements.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let elements: Vec<Vec<usize>> = elements.into_iter().collect();
        let index: BTreeMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for x in &elements {
            for y in &elements {
                let xy: Vec<usize> = (0..degree).map(|i| x[y[i]]).collect();
                mult.push(index[&xy]);
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        GroupTable::finish(labels, mult)
    }

    /// Elements generated by `gens`, sorted by index.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([self.identity]);
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        !set.is_empty()
            && set.iter().all(|&x| x < self.order())
            && set.contains(&self.identity)
            && set
                .iter()
                .all(|&x| set.iter().all(|&y| set.contains(&self.mul(x, self.inv(y)))))
    }

    /// Every subgroup, as sorted index lists, ordered by (size, elements).
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier: Vec<Vec<usize>> = vec![vec![self.identity]];
        found.insert(vec![self.identity]);
        while let Some(sub) = frontier.pop() {
            for g in 0..self.order() {
                if sub.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = sub.clone();
                gens.push(g);
                let bigger = self.closure(&gens);
                if found.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        let mut all: Vec<Vec<usize>> = found.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        all
    }

    /// The subgroup as a group in its own right; labels are kept.
    pub fn restrict(&self, elements: &[usize]) -> Result<GroupTable> {
        if !self.is_subgroup(elements) {
            return Err(Error::Group("not a subgroup".into()));
        }
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let pos: BTreeMap<usize, usize> = elements.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let labels = elements.iter().map(|&g| self.labels[g].clone()).collect();
        let mult = elements
            .iter()
            .flat_map(|&x| elements.iter().map(move |&y| (x, y)))
            .map(|(x, y)| pos[&self.mul(x, y)])
            .collect();
        GroupTable::finish(labels, mult)
    }

    /// A bijection `φ: self → other` with `φ(xy) = φ(x)φ(y)`, if one exists.
    pub fn isomorphism(&self, other: &GroupTable) -> Option<Vec<usize>> {
        let n = self.order();
        if n != other.order() {
            return None;
        }
        // greedy generating set
        let mut gens = Vec::new();
        let mut span = self.closure(&[]);
        for x in 0..n {
            if span.len() == n {
                break;
            }
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
            }
        }
        let mut images = vec![0; gens.len()];
        self.extend_iso(other, &gens, &mut images, 0)
    }

    fn extend_iso(&self, other: &GroupTable, gens: &[usize], images: &mut Vec<usize>, k: usize) -> Option<Vec<usize>> {
        if k == gens.len() {
            return self.try_homomorphism(other, gens, images);
        }
        let ord = self.element_order(gens[k]);
        for y in 0..other.order() {
            if other.element_order(y) == ord {
                images[k] = y;
                if let Some(phi) = self.extend_iso(other, gens, images, k + 1) {
                    return Some(phi);
                }
            }
        }
        None
    }

    fn try_homomorphism(&self, other: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut phi = vec![usize::MAX; n];
        phi[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let val = other.mul(phi[x], img);
                if phi[y] == usize::MAX {
                    phi[y] = val;
                    queue.push_back(y);
                } else if phi[y] != val {
                    return None;
                }
            }
        }
        let distinct: BTreeSet<usize> = phi.iter().copied().collect();
        if distinct.len() != n {
            return None;
        }
        let hom = (0..n).all(|x| (0..n).all(|y| phi[self.mul(x, y)] == other.mul(phi[x], phi[y])));
        hom.then_some(phi)
    }
}

/// 1-based cycle notation, `e` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

/// Image tuple of a permutation of `0..degree` given by 1-based cycles.
pub fn perm(degree: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for c in cycles {
        for k in 0..c.len() {
            p[c[k] - 1] = c[(k + 1) % c.len()] - 1;
        }
    }
    p
}

pub fn symmetric3() -> GroupTable {
    GroupTable::from_permutations(3, &[perm(3, &[&[1, 2]]), perm(3, &[&[1, 2, 3]])]).expect("S3")
}

pub fn dihedral8() -> GroupTable {
    GroupTable::from_permutations(4, &[perm(4, &[&[1, 2, 3, 4]]), perm(4, &[&[1, 3]])]).expect("D4")
}

pub fn alternating4() -> GroupTable {
    GroupTable::from_permutations(4, &[perm(4, &[&[1, 2, 3]]), perm(4, &[&[1, 2], &[3, 4]])]).expect("A4")
}

pub fn symmetric4() -> GroupTable {
    GroupTable::from_permutations(4, &[perm(4, &[&[1, 2]]), perm(4, &[&[1, 2, 3, 4]])]).expect("S4")
}

pub fn alternating6() -> GroupTable {
    let gens: Vec<Vec<usize>> = (3..=6).map(|k| perm(6, &[&[1, 2, k]])).collect();
    GroupTable::from_permutations(6, &gens).expect("A6")
}

/// Quaternion group `{±1, ±i, ±j, ±k}`.
pub fn quaternion8() -> GroupTable {
    // unit index u ∈ {1, i, j, k} = 0..4, sign s; element = 2u + s
    let labels: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // product of units: (sign, unit)
    let unit_mult = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, b) => (0, b),
            (a, 0) => (0, a),
            (a, b) if a == b => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        }
    };
    let mult = (0..8)
        .map(|x| {
            (0..8)
                .map(|y| {
                    let (s, u) = unit_mult(x / 2, y / 2);
                    2 * u + (s + x % 2 + y % 2) % 2
                })
                .collect()
        })
        .collect();
    GroupTable::new(labels, mult).expect("Q8")
}

/// Built-in groups of order at most 24.
pub fn corpus() -> Vec<(String, GroupTable)> {
    let mut out: Vec<(String, GroupTable)> = (1..=12).map(|n| (format!("C{n}"), GroupTable::cyclic(n))).collect();
    let c2 = GroupTable::cyclic(2);
    out.push(("C2xC2".into(), GroupTable::direct_product(&c2, &c2)));
    out.push(("S3".into(), symmetric3()));
    out.push(("D4".into(), dihedral8()));
    out.push(("Q8".into(), quaternion8()));
    out.push(("A4".into(), alternating4()));
    out.push(("S4".into(), symmetric4()));
    out
}

/// A corpus group by name, including `A6`.
pub fn by_name(name: &str) -> Option<GroupTable> {
    if name == "A6" {
        return Some(alternating6());
    }
    corpus().into_iter().find(|(n, _)| n == name).map(|(_, g)| g)
}

fn group_space(g: &GroupTable) -> BasedSpace {
    BasedSpace::new(g.labels().to_vec()).expect("group labels are unique")
}

/// `k[G]`: group-like basis, group multiplication, inverse as antipode.
pub fn group_algebra(g: &GroupTable, field: Field) -> Hopf {
    let n = g.order();
    let space = group_space(g);
    let coalgebra = Coalgebra::grouplike(field, space.clone());
    let mult = LinMap::from_basis_fn(field, BasedSpace::tensor(&space, &space), space.clone(), |i| {
        g.mul(i / n, i % n)
    })
    .expect("in range");
    let unit = LinMap::vector(field, space.clone(), vec![(g.identity(), field.one())]).expect("in range");
    let algebra = Algebra::new(space.clone(), mult, unit, Associativity::Yes).expect("shapes agree");
    let bialgebra = Bialgebra::new(coalgebra, algebra).expect("same carrier");
    let antipode = LinMap::from_basis_fn(field, space.clone(), space, |i| g.inv(i)).expect("in range");
    Hopf::new(bialgebra, antipode).expect("group inverse is the antipode")
}

/// `k^G`, the dual of `k[G]`: idempotents `δ_x`, `Δδ_x = Σ_{yz=x} δ_y ⊗ δ_z`,
/// `ε(δ_x) = [x = e]`, `S(δ_x) = δ_{x⁻¹}`. Cocommutative only for abelian `G`.
pub fn dual_group_algebra(g: &GroupTable, field: Field) -> Hopf {
    let n = g.order();
    let labels: Vec<String> = g.labels().iter().map(|l| format!("δ{l}")).collect();
    let space = BasedSpace::new(labels).expect("group labels are unique");
    let square = BasedSpace::tensor(&space, &space);
    let delta = LinMap::from_fn(field, space.clone(), square.clone(), |x| {
        (0..n).map(|y| (y * n + g.mul(g.inv(y), x), field.one())).collect()
    })
    .expect("in range");
    let counit = LinMap::functional(
        field,
        space.clone(),
        (0..n)
            .map(|x| if x == g.identity() { field.one() } else { field.zero() })
            .collect(),
    )
    .expect("in range");
    let coalgebra = Coalgebra::new(space.clone(), delta, counit).expect("shapes agree");
    let mult = LinMap::from_fn(field, square, space.clone(), |i| {
        if i / n == i % n {
            vec![(i / n, field.one())]
        } else {
            vec![]
        }
    })
    .expect("in range");
    let unit = LinMap::vector(field, space.clone(), (0..n).map(|x| (x, field.one())).collect()).expect("in range");
    let algebra = Algebra::new(space.clone(), mult, unit, Associativity::Yes).expect("shapes agree");
    let bialgebra = Bialgebra::new(coalgebra, algebra).expect("same carrier");
    let antipode = LinMap::from_basis_fn(field, space.clone(), space, |x| g.inv(x)).expect("in range");
    Hopf::new(bialgebra, antipode).expect("inversion is the antipode")
}

/// `k[X]` with every element group-like, plus the basepoint as unit vector.
pub fn grouplike_coalgebra(labels: &[String], basepoint: usize, field: Field) -> Result<(Coalgebra, LinMap)> {
    let space = BasedSpace::new(labels.to_vec())?;
    if basepoint >= space.dim() {
        return Err(Error::IndexOutOfRange {
            index: basepoint,
            dim: space.dim(),
        });
    }
    let unit = LinMap::vector(field, space.clone(), vec![(basepoint, field.one())])?;
    Ok((Coalgebra::grouplike(field, space), unit))
}

/// Set-level extending structure `(X, ◁, ▷, f, ⋆)` of a group `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupExtendingStructure {
    pub g: GroupTable,
    pub x_labels: Vec<String>,
    pub basepoint: usize,
    /// `ract[x][a] = x ◁ a ∈ X`
    pub ract: Vec<Vec<usize>>,
    /// `lact[x][a] = x ▷ a ∈ G`
    pub lact: Vec<Vec<usize>>,
    /// `cocyc[x][y] = f(x, y) ∈ G`
    pub cocyc: Vec<Vec<usize>>,
    /// `star[x][y] = x ⋆ y ∈ X`
    pub star: Vec<Vec<usize>>,
}

impl GroupExtendingStructure {
    pub fn x_size(&self) -> usize {
        self.x_labels.len()
    }

    fn shapes_ok(&self) -> bool {
        let (n, m) = (self.g.order(), self.x_size());
        let table_ok = |t: &Vec<Vec<usize>>, cols: usize, bound: usize| {
            t.len() == m && t.iter().all(|r| r.len() == cols && r.iter().all(|&v| v < bound))
        };
        self.basepoint < m
            && table_ok(&self.ract, n, m)
            && table_ok(&self.lact, n, n)
            && table_ok(&self.cocyc, m, n)
            && table_ok(&self.star, m, m)
    }

    /// The compatibility conditions read off on group-like bases. Normalization
    /// and the checks `2b` to `2g` become set equations; `2a`, `2h`, `2i` and
    /// the coalgebra-map requirements hold for any set maps.
    pub fn check(&self) -> Report {
        let mut r = Report::new("group extending structure");
        if !self.shapes_ok() {
            r.push(Check::fail("shapes", None));
            return r;
        }
        let g = &self.g;
        let (n, m) = (g.order(), self.x_size());
        let (e, one) = (g.identity(), self.basepoint);
        let (ra, la, f, st) = (&self.ract, &self.lact, &self.cocyc, &self.star);
        let mul = |a: usize, b: usize| g.mul(a, b);

        // x ▷ e = e, 1 ▷ a = a, 1 ◁ a = 1, x ◁ e = x
        r.push(Check::from_search(
            "norm-lact-unit",
            find_counterexample(&[m], |i| la[i[0]][e] == e),
        ));
        r.push(Check::from_search(
            "norm-lact-by-unit",
            find_counterexample(&[n], |i| la[one][i[0]] == i[0]),
        ));
        r.push(Check::from_search(
            "norm-ract-on-unit",
            find_counterexample(&[n], |i| ra[one][i[0]] == one),
        ));
        r.push(Check::from_search(
            "norm-ract-unit",
            find_counterexample(&[m], |i| ra[i[0]][e] == i[0]),
        ));
        // f(x, 1) = f(1, x) = e, 1 ⋆ x = x ⋆ 1 = x
        r.push(Check::from_search(
            "norm-cocycle-right-unit",
            find_counterexample(&[m], |i| f[i[0]][one] == e),
        ));
        r.push(Check::from_search(
            "norm-cocycle-left-unit",
            find_counterexample(&[m], |i| f[one][i[0]] == e),
        ));
        r.push(Check::from_search(
            "norm-dot-left-unit",
            find_counterexample(&[m], |i| st[one][i[0]] == i[0]),
        ));
        r.push(Check::from_search(
            "norm-dot-right-unit",
            find_counterexample(&[m], |i| st[i[0]][one] == i[0]),
        ));

        // 2b: (x ◁ a) ◁ b = x ◁ ab
        r.push(Check::from_search(
            "2b",
            find_counterexample(&[m, n, n], |i| ra[ra[i[0]][i[1]]][i[2]] == ra[i[0]][mul(i[1], i[2])]),
        ));
        // 2c: (x ⋆ y) ⋆ z = (x ◁ f(y, z)) ⋆ (y ⋆ z)
        r.push(Check::from_search(
            "2c",
            find_counterexample(&[m, m, m], |i| {
                let (x, y, z) = (i[0], i[1], i[2]);
                st[st[x][y]][z] == st[ra[x][f[y][z]]][st[y][z]]
            }),
        ));
        // 2d: x ▷ ab = (x ▷ a)((x ◁ a) ▷ b)
        r.push(Check::from_search(
            "2d",
            find_counterexample(&[m, n, n], |i| {
                let (x, a, b) = (i[0], i[1], i[2]);
                la[x][mul(a, b)] == mul(la[x][a], la[ra[x][a]][b])
            }),
        ));
        // 2e: (x ⋆ y) ◁ a = (x ◁ (y ▷ a)) ⋆ (y ◁ a)
        r.push(Check::from_search(
            "2e",
            find_counterexample(&[m, m, n], |i| {
                let (x, y, a) = (i[0], i[1], i[2]);
                ra[st[x][y]][a] == st[ra[x][la[y][a]]][ra[y][a]]
            }),
        ));
        // 2f: (x ▷ (y ▷ a)) f(x ◁ (y ▷ a), y ◁ a) = f(x, y)((x ⋆ y) ▷ a)
        r.push(Check::from_search(
            "2f",
            find_counterexample(&[m, m, n], |i| {
                let (x, y, a) = (i[0], i[1], i[2]);
                let b = la[y][a];
                mul(la[x][b], f[ra[x][b]][ra[y][a]]) == mul(f[x][y], la[st[x][y]][a])
            }),
        ));
        // 2g: (x ▷ f(y, z)) f(x ◁ f(y, z), y ⋆ z) = f(x, y) f(x ⋆ y, z)
        r.push(Check::from_search(
            "2g",
            find_counterexample(&[m, m, m], |i| {
                let (x, y, z) = (i[0], i[1], i[2]);
                let c = f[y][z];
                mul(la[x][c], f[ra[x][c]][st[y][z]]) == mul(f[x][y], f[st[x][y]][z])
            }),
        ));
        r
    }

    pub fn cocycle_is_trivial(&self) -> bool {
        self.cocyc.iter().flatten().all(|&v| v == self.g.identity())
    }

    pub fn ract_is_trivial(&self) -> bool {
        self.ract.iter().enumerate().all(|(x, row)| row.iter().all(|&v| v == x))
    }

    pub fn lact_is_trivial(&self) -> bool {
        self.lact.iter().all(|row| row.iter().enumerate().all(|(a, &v)| v == a))
    }

    /// Linearizes the four set maps: `k[G]` acted on by the group-like
    /// coalgebra `k[X]`.
    pub fn lift(&self, field: Field) -> Result<ExtendingDatum> {
        if !self.shapes_ok() {
            return Err(Error::Group("malformed extending structure".into()));
        }
        let (n, m) = (self.g.order(), self.x_size());
        let a = group_algebra(&self.g, field);
        let (h, unit) = grouplike_coalgebra(&self.x_labels, self.basepoint, field)?;
        let hs = h.space().clone();
        let gs = a.bialgebra().space().clone();
        let hg = BasedSpace::tensor(&hs, &gs);
        let hh = BasedSpace::tensor(&hs, &hs);
        let dot = LinMap::from_basis_fn(field, hh.clone(), hs.clone(), |i| self.star[i / m][i % m])?;
        let ract = LinMap::from_basis_fn(field, hg.clone(), hs.clone(), |i| self.ract[i / n][i % n])?;
        let lact = LinMap::from_basis_fn(field, hg, gs.clone(), |i| self.lact[i / n][i % n])?;
        let cocycle = LinMap::from_basis_fn(field, hh, gs, |i| self.cocyc[i / m][i % m])?;
        let h_algebra = Algebra::new(hs, dot, unit, Associativity::Unknown)?;
        let (a, s_a) = a.into_parts();
        ExtendingDatum::new(DatumParts {
            a,
            a_antipode: Some(s_a),
            h,
            h_algebra,
            ract,
            lact,
            cocycle,
        })
    }

    /// `G × X` with `(a, x)(b, y) = (a (x ▷ b) f(x ◁ b, y), (x ◁ b) ⋆ y)`,
    /// pair `(a, x)` at index `a·|X| + x`, labelled `a⊗x`.
    pub fn unified_group(&self) -> Result<GroupTable> {
        if !self.shapes_ok() {
            return Err(Error::Group("malformed extending structure".into()));
        }
        let g = &self.g;
        let m = self.x_size();
        let size = g.order() * m;
        let labels = (0..size)
            .map(|i| format!("{}⊗{}", g.label(i / m), self.x_labels[i % m]))
            .collect();
        let mult = (0..size)
            .map(|p| {
                let (a, x) = (p / m, p % m);
                (0..size)
                    .map(|q| {
                        let (b, y) = (q / m, q % m);
                        let xb = self.ract[x][b];
                        let first = g.mul(g.mul(a, self.lact[x][b]), self.cocyc[xb][y]);
                        first * m + self.star[xb][y]
                    })
                    .collect()
            })
            .collect();
        GroupTable::new(labels, mult)
    }
}

/// A subgroup `A ≤ G` with right-coset representatives `X` and the induced
/// extending structure of `A`.
#[derive(Clone, Debug)]
pub struct CosetDecomposition {
    pub ambient: GroupTable,
    /// `A`-index → `G`-index
    pub subgroup: Vec<usize>,
    /// `X`-index → `G`-index
    pub representatives: Vec<usize>,
    pub structure: GroupExtendingStructure,
}

impl CosetDecomposition {
    /// `G`-index of `a·x`.
    pub fn product_in_ambient(&self, a: usize, x: usize) -> usize {
        self.ambient.mul(self.subgroup[a], self.representatives[x])
    }

    /// Checks that `(a, x) ↦ a·x` is an isomorphism from `unified` onto `G`.
    pub fn reproduces_ambient(&self, unified: &GroupTable) -> bool {
        let m = self.representatives.len();
        let n = unified.order();
        if n != self.ambient.order() {
            return false;
        }
        let phi: Vec<usize> = (0..n).map(|p| self.product_in_ambient(p / m, p % m)).collect();
        let distinct: BTreeSet<usize> = phi.iter().copied().collect();
        distinct.len() == n
            && (0..n).all(|p| (0..n).all(|q| phi[unified.mul(p, q)] == self.ambient.mul(phi[p], phi[q])))
    }
}

/// Decomposes `G` along the right cosets `A·x` of a subgroup. Each coset is
/// represented by its least element, except `A` itself, represented by the
/// identity. Writing `x·a = (x ▷ a)(x ◁ a)` and `x·y = f(x, y)(x ⋆ y)`
/// defines the structure.
pub fn coset_extending_structure(g: &GroupTable, subgroup: &[usize]) -> Result<CosetDecomposition> {
    g.restrict(subgroup)?;
    let in_sub: BTreeSet<usize> = subgroup.iter().copied().collect();
    let reps: BTreeSet<usize> = (0..g.order())
        .map(|t| {
            if in_sub.contains(&t) {
                g.identity()
            } else {
                in_sub.iter().map(|&a| g.mul(a, t)).min().expect("nonempty")
            }
        })
        .collect();
    transversal_extending_structure(g, subgroup, &reps.into_iter().collect::<Vec<_>>())
}

/// As `coset_extending_structure`, with a caller-chosen right transversal
/// containing the identity (listed in the given order).
pub fn transversal_extending_structure(
    g: &GroupTable,
    subgroup: &[usize],
    reps: &[usize],
) -> Result<CosetDecomposition> {
    let a_table = g.restrict(subgroup)?;
    let mut sub: Vec<usize> = subgroup.to_vec();
    sub.sort_unstable();
    sub.dedup();
    let a_pos: BTreeMap<usize, usize> = sub.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let n = g.order();
    // coset A·t → position of its representative
    let mut rep_pos: Vec<Option<usize>> = vec![None; n];
    for (xi, &x) in reps.iter().enumerate() {
        for &a in &sub {
            let t = g.mul(a, x);
            if rep_pos[t].replace(xi).is_some() {
                return Err(Error::Group("representatives share a coset".into()));
            }
        }
    }
    if rep_pos.iter().any(Option::is_none) {
        return Err(Error::Group("representatives miss a coset".into()));
    }
    let basepoint = reps
        .iter()
        .position(|&x| x == g.identity())
        .ok_or_else(|| Error::Group("the identity is not a representative".into()))?;
    // t = a·x with a = t·x⁻¹
    let split = |t: usize| -> (usize, usize) {
        let xi = rep_pos[t].expect("covered");
        (a_pos[&g.mul(t, g.inv(reps[xi]))], xi)
    };
    let m = reps.len();
    let mut ract = vec![vec![0; sub.len()]; m];
    let mut lact = vec![vec![0; sub.len()]; m];
    let mut cocyc = vec![vec![0; m]; m];
    let mut star = vec![vec![0; m]; m];
    for (xi, &x) in reps.iter().enumerate() {
        for (ai, &a) in sub.iter().enumerate() {
            let (l, r) = split(g.mul(x, a));
            lact[xi][ai] = l;
            ract[xi][ai] = r;
        }
        for (yi, &y) in reps.iter().enumerate() {
            let (c, s) = split(g.mul(x, y));
            cocyc[xi][yi] = c;
            star[xi][yi] = s;
        }
    }
    let structure = GroupExtendingStructure {
        g: a_table,
        x_labels: reps.iter().map(|&x| g.label(x).to_string()).collect(),
        basepoint,
        ract,
        lact,
        cocyc,
        star,
    };
    Ok(CosetDecomposition {
        ambient: g.clone(),
        subgroup: sub,
        representatives: reps.to_vec(),
        structure,
    })
}
