//! Incremental sparse Gauss–Jordan elimination with several right-hand sides.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Row = BTreeMap<usize, Scalar>;

fn axpy(target: &mut Row, factor: &Scalar, source: &Row) {
    for (k, v) in source {
        let delta = factor * v;
        match target.get_mut(k) {
            Some(t) => {
                let sum = &*t + &delta;
                if sum.is_zero() {
                    target.remove(k);
                } else {
                    *t = sum;
                }
            }
            None => {
                if !delta.is_zero() {
                    target.insert(*k, delta);
                }
            }
        }
    }
}

/// Row-echelon form built one equation at a time. Each pivot row is
/// normalised to coefficient one on its pivot variable, which is the
/// smallest variable remaining in the row.
#[derive(Clone, Debug)]
pub struct Echelon {
    unknowns: usize,
    pivots: BTreeMap<usize, (Row, Row)>,
    inconsistent: bool,
}

impl Echelon {
    pub fn new(unknowns: usize) -> Self {
        Echelon {
            unknowns,
            pivots: BTreeMap::new(),
            inconsistent: false,
        }
    }

    /// Adds `Σ coeffs[v]·x_v = rhs` (rhs may carry several columns).
    pub fn push(&mut self, mut coeffs: Row, mut rhs: Row) {
        coeffs.retain(|_, v| !v.is_zero());
        rhs.retain(|_, v| !v.is_zero());
        let mut cursor = 0;
        loop {
            let next = coeffs
                .range(cursor..)
                .find(|(v, _)| self.pivots.contains_key(v))
                .map(|(v, c)| (*v, c.clone()));
            let Some((var, c)) = next else { break };
            let (prow, prhs) = &self.pivots[&var];
            let factor = -&c;
            axpy(&mut coeffs, &factor, prow);
            axpy(&mut rhs, &factor, prhs);
            cursor = var + 1;
        }
        let Some((&lead, lead_coeff)) = coeffs.iter().next() else {
            if !rhs.is_empty() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = lead_coeff.inv().expect("nonzero leading coefficient");
        for v in coeffs.values_mut() {
            *v = &*v * &inv;
        }
        for v in rhs.values_mut() {
            *v = &*v * &inv;
        }
        self.pivots.insert(lead, (coeffs, rhs));
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// The unique solution, one sparse vector per right-hand-side column.
    pub fn solve(&self, rhs_columns: usize) -> Result<Vec<Vec<(usize, Scalar)>>> {
        if self.inconsistent {
            return Err(Error::Inconsistent);
        }
        if self.rank() < self.unknowns {
            return Err(Error::NotUnique {
                rank: self.rank(),
                unknowns: self.unknowns,
            });
        }
        // x[var] as a sparse row over rhs columns
        let mut values: BTreeMap<usize, Row> = BTreeMap::new();
        for (var, (row, rhs)) in self.pivots.iter().rev() {
            let mut value = rhs.clone();
            for (w, c) in row.range(var + 1..) {
                let xw = &values[w];
                axpy(&mut value, &-c, xw);
            }
            values.insert(*var, value);
        }
        let mut out = vec![Vec::new(); rhs_columns];
        for (var, value) in values {
            for (col, s) in value {
                out[col].push((var, s));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    fn row(entries: &[(usize, i64)]) -> Row {
        entries.iter().map(|&(k, v)| (k, q(v))).collect()
    }

    #[test]
    fn solves_small_system() {
        // x + y = 3, x - y = 1
        let mut e = Echelon::new(2);
        e.push(row(&[(0, 1), (1, 1)]), row(&[(0, 3)]));
        e.push(row(&[(0, 1), (1, -1)]), row(&[(0, 1)]));
        let sol = e.solve(1).unwrap();
        assert_eq!(sol[0], vec![(0, q(2)), (1, q(1))]);
    }

    #[test]
    fn detects_inconsistency_and_deficiency() {
        let mut e = Echelon::new(2);
        e.push(row(&[(0, 1), (1, 1)]), row(&[(0, 1)]));
        assert_eq!(e.solve(1), Err(Error::NotUnique { rank: 1, unknowns: 2 }));
        e.push(row(&[(0, 2), (1, 2)]), row(&[(0, 3)]));
        assert!(e.is_inconsistent());
        assert_eq!(e.solve(1), Err(Error::Inconsistent));
    }
}
