//! Sparse linear maps between based spaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linsolve::{Echelon, Row};
use crate::scalar::{Field, Scalar};
use crate::space::BasedSpace;

/// A sparse vector entry: basis index and nonzero coefficient.
pub type Entry = (usize, Scalar);

/// Sorts by index, merges duplicates and drops zeros.
pub fn normalize(mut v: Vec<Entry>) -> Vec<Entry> {
    v.sort_by_key(|e| e.0);
    let mut out: Vec<Entry> = Vec::with_capacity(v.len());
    for (i, s) in v {
        match out.last_mut() {
            Some((j, t)) if *j == i => *t = &*t + &s,
            _ => out.push((i, s)),
        }
    }
    out.retain(|(_, s)| !s.is_zero());
    out
}

/// A linear map stored column by column: `columns[i]` is the image of the
/// i-th domain basis vector as a sorted list of nonzero codomain entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    domain: BasedSpace,
    codomain: BasedSpace,
    columns: Vec<Vec<Entry>>,
}

impl LinMap {
    pub fn new(field: Field, domain: BasedSpace, codomain: BasedSpace, columns: Vec<Vec<Entry>>) -> Result<Self> {
        if columns.len() != domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "map columns".into(),
                expected: domain.dim(),
                found: columns.len(),
            });
        }
        let mut normalized = Vec::with_capacity(columns.len());
        for col in columns {
            for (i, s) in &col {
                if *i >= codomain.dim() {
                    return Err(Error::IndexOutOfRange {
                        index: *i,
                        dim: codomain.dim(),
                    });
                }
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
            }
            normalized.push(normalize(col));
        }
        Ok(LinMap {
            field,
            domain,
            codomain,
            columns: normalized,
        })
    }

    pub fn from_fn(
        field: Field,
        domain: BasedSpace,
        codomain: BasedSpace,
        f: impl FnMut(usize) -> Vec<Entry>,
    ) -> Result<Self> {
        let columns = (0..domain.dim()).map(f).collect();
        Self::new(field, domain, codomain, columns)
    }

    /// The linear extension of a map between bases (every coefficient one).
    pub fn from_basis_fn(
        field: Field,
        domain: BasedSpace,
        codomain: BasedSpace,
        mut f: impl FnMut(usize) -> usize,
    ) -> Result<Self> {
        let one = field.one();
        Self::from_fn(field, domain, codomain, |i| vec![(f(i), one.clone())])
    }

    /// Builds from a dense matrix indexed `rows[codomain][domain]`.
    pub fn from_dense(field: Field, domain: BasedSpace, codomain: BasedSpace, rows: &[Vec<Scalar>]) -> Result<Self> {
        if rows.len() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "dense rows".into(),
                expected: codomain.dim(),
                found: rows.len(),
            });
        }
        let mut columns = vec![Vec::new(); domain.dim()];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != domain.dim() {
                return Err(Error::DimensionMismatch {
                    context: "dense row length".into(),
                    expected: domain.dim(),
                    found: row.len(),
                });
            }
            for (c, s) in row.iter().enumerate() {
                if !s.is_zero() {
                    columns[c].push((r, s.clone()));
                }
            }
        }
        Self::new(field, domain, codomain, columns)
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.domain.dim()]; self.codomain.dim()];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                rows[*r][c] = s.clone();
            }
        }
        rows
    }

    pub fn zero(field: Field, domain: BasedSpace, codomain: BasedSpace) -> Self {
        let columns = vec![Vec::new(); domain.dim()];
        LinMap {
            field,
            domain,
            codomain,
            columns,
        }
    }

    pub fn identity(field: Field, space: BasedSpace) -> Self {
        let one = field.one();
        let columns = (0..space.dim()).map(|i| vec![(i, one.clone())]).collect();
        LinMap {
            field,
            domain: space.clone(),
            codomain: space,
            columns,
        }
    }

    /// The flip `v ⊗ w ↦ w ⊗ v`.
    pub fn swap(field: Field, v: &BasedSpace, w: &BasedSpace) -> Self {
        let (n, m) = (v.dim(), w.dim());
        let one = field.one();
        let columns = (0..n * m)
            .map(|idx| {
                let (i, j) = (idx / m, idx % m);
                vec![(j * n + i, one.clone())]
            })
            .collect();
        LinMap {
            field,
            domain: BasedSpace::tensor(v, w),
            codomain: BasedSpace::tensor(w, v),
            columns,
        }
    }

    /// The map `k → space` picking out a vector.
    pub fn vector(field: Field, space: BasedSpace, entries: Vec<Entry>) -> Result<Self> {
        Self::new(field, BasedSpace::ground(), space, vec![entries])
    }

    /// The map `space → k` with the given values on basis vectors.
    pub fn functional(field: Field, space: BasedSpace, values: Vec<Scalar>) -> Result<Self> {
        let columns = values.into_iter().map(|s| vec![(0, s)]).collect();
        Self::new(field, space, BasedSpace::ground(), columns)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> &BasedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &BasedSpace {
        &self.codomain
    }

    pub fn column(&self, i: usize) -> &[Entry] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<Entry>] {
        &self.columns
    }

    /// Number of stored nonzero coefficients.
    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.domain.dim() == self.codomain.dim()
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(i, c)| c.len() == 1 && c[0].0 == i && c[0].1.is_one())
    }

    /// If every column is a single basis vector with coefficient one,
    /// returns the underlying map of bases.
    pub fn as_basis_map(&self) -> Option<Vec<usize>> {
        self.columns
            .iter()
            .map(|c| (c.len() == 1 && c[0].1.is_one()).then_some(c[0].0))
            .collect()
    }

    /// Image of a sparse vector.
    pub fn apply(&self, v: &[Entry]) -> Vec<Entry> {
        let mut out = Vec::new();
        for (i, s) in v {
            for (r, t) in &self.columns[*i] {
                out.push((*r, s * t));
            }
        }
        normalize(out)
    }

    fn check_field(&self, other: &LinMap) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        self.check_field(g)?;
        if g.codomain.dim() != self.domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "compose".into(),
                expected: self.domain.dim(),
                found: g.codomain.dim(),
            });
        }
        let columns = g.columns.iter().map(|c| self.apply(c)).collect();
        Ok(LinMap {
            field: self.field,
            domain: g.domain.clone(),
            codomain: self.codomain.clone(),
            columns,
        })
    }

    /// `self ⊗ other` under the row-major convention.
    pub fn tensor(&self, other: &LinMap) -> Result<LinMap> {
        self.check_field(other)?;
        let m = other.codomain.dim();
        let mut columns = Vec::with_capacity(self.domain.dim() * other.domain.dim());
        for ci in &self.columns {
            for cj in &other.columns {
                let mut col = Vec::with_capacity(ci.len() * cj.len());
                for (r, s) in ci {
                    for (q, t) in cj {
                        col.push((r * m + q, s * t));
                    }
                }
                columns.push(normalize(col));
            }
        }
        Ok(LinMap {
            field: self.field,
            domain: BasedSpace::tensor(&self.domain, &other.domain),
            codomain: BasedSpace::tensor(&self.codomain, &other.codomain),
            columns,
        })
    }

    fn check_same_shape(&self, other: &LinMap) -> Result<()> {
        self.check_field(other)?;
        if self.domain.dim() != other.domain.dim() || self.codomain.dim() != other.codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "map sum".into(),
                expected: self.domain.dim() * self.codomain.dim(),
                found: other.domain.dim() * other.codomain.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.check_same_shape(other)?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| normalize(a.iter().chain(b).cloned().collect()))
            .collect();
        Ok(LinMap {
            columns,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let columns = self
            .columns
            .iter()
            .map(|c| normalize(c.iter().map(|(i, t)| (*i, s * t)).collect()))
            .collect();
        LinMap {
            columns,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.add(&other.scale(&-self.field.one()))
    }

    /// Same matrix, reinterpreted between spaces of equal dimensions.
    pub fn reshape(&self, domain: BasedSpace, codomain: BasedSpace) -> Result<LinMap> {
        if domain.dim() != self.domain.dim() {
            return Err(Error::DimensionMismatch {
                context: "reshape domain".into(),
                expected: self.domain.dim(),
                found: domain.dim(),
            });
        }
        if codomain.dim() != self.codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "reshape codomain".into(),
                expected: self.codomain.dim(),
                found: codomain.dim(),
            });
        }
        Ok(LinMap {
            field: self.field,
            domain,
            codomain,
            columns: self.columns.clone(),
        })
    }

    /// Whether the two maps have the same matrix (spaces are compared by
    /// dimension only).
    pub fn same_matrix(&self, other: &LinMap) -> bool {
        self.field == other.field && self.codomain.dim() == other.codomain.dim() && self.columns == other.columns
    }

    /// First domain index where the two matrices disagree.
    pub fn first_difference(&self, other: &LinMap) -> Option<usize> {
        if self.columns.len() != other.columns.len() || self.codomain.dim() != other.codomain.dim() {
            return Some(0);
        }
        self.columns.iter().zip(&other.columns).position(|(a, b)| a != b)
    }

    pub fn transpose(&self) -> LinMap {
        let mut columns = vec![Vec::new(); self.codomain.dim()];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col {
                columns[*r].push((c, s.clone()));
            }
        }
        LinMap {
            field: self.field,
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            columns,
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.domain.dim());
        for row in self.transpose().columns {
            ech.push(row.into_iter().collect(), Row::new());
        }
        ech.rank()
    }

    /// Exact inverse. Over the rationals this clears denominators row by
    /// row and runs fraction-free (Bareiss) Gauss–Jordan elimination on
    /// integers; over a prime field it runs ordinary Gauss–Jordan.
    pub fn invert(&self) -> Result<LinMap> {
        let n = self.domain.dim();
        if self.codomain.dim() != n {
            return Err(Error::NotBijective {
                rank: self.rank(),
                dim: n.max(self.codomain.dim()),
            });
        }
        let inverse_rows = match self.field {
            Field::Rational => self.bareiss_inverse(),
            Field::Prime(_) => self.gauss_jordan_inverse(),
        };
        let Some(rows) = inverse_rows else {
            return Err(Error::NotBijective {
                rank: self.rank(),
                dim: n,
            });
        };
        LinMap::from_dense(self.field, self.codomain.clone(), self.domain.clone(), &rows)
    }

    fn bareiss_inverse(&self) -> Option<Vec<Vec<Scalar>>> {
        let n = self.domain.dim();
        let dense = self.to_dense();
        // scale each row to integers: N = D·M, so M⁻¹ = N⁻¹·D
        let mut scales = Vec::with_capacity(n);
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for (r, row) in dense.iter().enumerate() {
            let l = row.iter().fold(BigInt::one(), |acc, s| acc.lcm(&s.denominator()));
            let mut ints: Vec<BigInt> = row.iter().map(|s| s.numerator() * (&l / s.denominator())).collect();
            ints.extend((0..n).map(|j| if j == r { BigInt::one() } else { BigInt::zero() }));
            a.push(ints);
            scales.push(l);
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, p);
            for i in 0..n {
                if i == k {
                    continue;
                }
                let aik = a[i][k].clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let v = &a[k][k] * &a[i][j] - &aik * &a[k][j];
                    debug_assert!((&v % &prev).is_zero());
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        // left block is now prev·I; right block is prev·N⁻¹
        let field = Field::Rational;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let num = &a[i][n + j] * &scales[j];
                        field.from_ratio(&num, &a[i][i]).expect("nonzero pivot")
                    })
                    .collect()
            })
            .collect();
        Some(rows)
    }

    fn gauss_jordan_inverse(&self) -> Option<Vec<Vec<Scalar>>> {
        let n = self.domain.dim();
        let field = self.field;
        let mut a = self.to_dense();
        for (r, row) in a.iter_mut().enumerate() {
            row.extend((0..n).map(|j| if j == r { field.one() } else { field.zero() }));
        }
        for k in 0..n {
            let p = (k..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, p);
            let inv = a[k][k].inv().expect("nonzero pivot");
            for v in a[k].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot = a[k].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == k || row[k].is_zero() {
                    continue;
                }
                let factor = row[k].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v = &*v - &(&factor * p);
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Finds `X` with `self ∘ X = rhs`. Fails with [`Error::Inconsistent`]
    /// when some column of `rhs` leaves the image and with
    /// [`Error::NotUnique`] when `self` is not injective.
    pub fn solve(&self, rhs: &LinMap) -> Result<LinMap> {
        self.check_field(rhs)?;
        if rhs.codomain.dim() != self.codomain.dim() {
            return Err(Error::DimensionMismatch {
                context: "solve".into(),
                expected: self.codomain.dim(),
                found: rhs.codomain.dim(),
            });
        }
        let coeff_rows = self.transpose();
        let rhs_rows = rhs.transpose();
        let mut ech = Echelon::new(self.domain.dim());
        for (c, r) in coeff_rows.columns.into_iter().zip(rhs_rows.columns) {
            ech.push(c.into_iter().collect(), r.into_iter().collect());
        }
        let solution = ech.solve(rhs.domain.dim())?;
        LinMap::new(self.field, rhs.domain.clone(), self.domain.clone(), solution)
    }
}
