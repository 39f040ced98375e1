//! Sparse elements of multi-slot tensor products, used to evaluate
//! Sweedler-notation identities term by term.
//!
//! A [`Tensor`] lives in `V_0 ⊗ … ⊗ V_{n-1}` where slot `i` has dimension
//! `dims[i]`. Linear maps act on a run of consecutive slots; their output
//! occupies as many slots as the codomain has tensor factors (none for the
//! ground field). Slots are rearranged with [`Tensor::permute`].

use std::collections::BTreeMap;

use crate::linmap::{Entry, LinMap};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    /// The pure tensor of basis vectors `e_{idx[0]} ⊗ … ⊗ e_{idx[n-1]}`.
    pub fn basis(field: Field, dims: &[usize], idx: &[usize]) -> Tensor {
        assert_eq!(dims.len(), idx.len(), "one index per slot");
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), field.one());
        Tensor {
            field,
            dims: dims.to_vec(),
            terms,
        }
    }

    /// The scalar `1` in the empty tensor product.
    pub fn unit(field: Field) -> Tensor {
        Tensor::basis(field, &[], &[])
    }

    pub fn zero(field: Field, dims: &[usize]) -> Tensor {
        Tensor {
            field,
            dims: dims.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// A vector of a single space of dimension `dim`, as a one-slot tensor.
    pub fn from_vector(field: Field, dim: usize, v: &[Entry]) -> Tensor {
        let terms = v
            .iter()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (vec![*i], s.clone()))
            .collect();
        Tensor {
            field,
            dims: vec![dim],
            terms,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Applies `map` to the `arity` slots starting at `at`. The consumed
    /// slots are read row-major; their dimensions must multiply to the
    /// map's domain dimension.
    pub fn apply(&self, map: &LinMap, at: usize, arity: usize) -> Tensor {
        let consumed = &self.dims[at..at + arity];
        assert_eq!(
            consumed.iter().product::<usize>(),
            map.domain().dim(),
            "slots {at}..{} do not match the map domain",
            at + arity
        );
        let out_dims: Vec<usize> = map.codomain().factors().to_vec();
        let mut dims = self.dims[..at].to_vec();
        dims.extend_from_slice(&out_dims);
        dims.extend_from_slice(&self.dims[at + arity..]);

        let mut terms: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (key, coeff) in &self.terms {
            let idx = key[at..at + arity]
                .iter()
                .zip(consumed)
                .fold(0, |acc, (k, d)| acc * d + k);
            for (r, c) in map.column(idx) {
                let mut new_key = key[..at].to_vec();
                new_key.extend(map.codomain().split_index(*r));
                new_key.extend_from_slice(&key[at + arity..]);
                let v = coeff * c;
                match terms.get_mut(&new_key) {
                    Some(t) => *t = &*t + &v,
                    None => {
                        terms.insert(new_key, v);
                    }
                }
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Tensor {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Applies a single-slot map (`arity` 1).
    pub fn map(&self, map: &LinMap, at: usize) -> Tensor {
        self.apply(map, at, 1)
    }

    /// Inserts the image of a ground-field map (e.g. a unit `k → V`) at `at`.
    pub fn insert(&self, map: &LinMap, at: usize) -> Tensor {
        self.apply(map, at, 0)
    }

    /// New slot `i` is old slot `order[i]`; `order` must be a permutation.
    pub fn permute(&self, order: &[usize]) -> Tensor {
        assert_eq!(order.len(), self.dims.len(), "permutation length");
        let dims = order.iter().map(|&o| self.dims[o]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (order.iter().map(|&o| k[o]).collect(), v.clone()))
            .collect();
        Tensor {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Joins `count` consecutive slots starting at `at` into one, row-major.
    pub fn merge(&self, at: usize, count: usize) -> Tensor {
        let merged: usize = self.dims[at..at + count].iter().product();
        let mut dims = self.dims[..at].to_vec();
        dims.push(merged);
        dims.extend_from_slice(&self.dims[at + count..]);
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| {
                let idx = k[at..at + count]
                    .iter()
                    .zip(&self.dims[at..at + count])
                    .fold(0, |acc, (i, d)| acc * d + i);
                let mut key = k[..at].to_vec();
                key.push(idx);
                key.extend_from_slice(&k[at + count..]);
                (key, v.clone())
            })
            .collect();
        Tensor {
            field: self.field,
            dims,
            terms,
        }
    }

    /// Tensor product `self ⊗ other`, slots concatenated.
    pub fn tensor(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut terms = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                terms.insert(k, va * vb);
            }
        }
        Tensor {
            field: self.field,
            dims,
            terms,
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "adding tensors of different shapes");
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            match terms.get_mut(k) {
                Some(t) => *t = &*t + v,
                None => {
                    terms.insert(k.clone(), v.clone());
                }
            }
        }
        terms.retain(|_, v| !v.is_zero());
        Tensor {
            field: self.field,
            dims: self.dims.clone(),
            terms,
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut terms: BTreeMap<Vec<usize>, Scalar> = self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        terms.retain(|_, v| !v.is_zero());
        Tensor {
            field: self.field,
            dims: self.dims.clone(),
            terms,
        }
    }

    /// The coordinates as one sparse vector, slots read row-major. Keys are
    /// ordered lexicographically, which is row-major order, so the result
    /// is already sorted.
    pub fn flatten(&self) -> Vec<Entry> {
        self.terms
            .iter()
            .map(|(k, v)| {
                let idx = k.iter().zip(&self.dims).fold(0, |acc, (i, d)| acc * d + i);
                (idx, v.clone())
            })
            .collect()
    }

    /// Coefficient of the empty key: the value of a 0-slot tensor.
    pub fn scalar_value(&self) -> Scalar {
        assert!(self.dims.is_empty(), "tensor still has slots");
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }
}

/// Calls `f` on every basis tuple of `dims` (row-major order) and returns
/// the first tuple for which it answers `false`.
pub fn find_counterexample(dims: &[usize], mut f: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    if dims.contains(&0) {
        return None;
    }
    let mut idx = vec![0; dims.len()];
    loop {
        if !f(&idx) {
            return Some(idx);
        }
        let mut slot = dims.len();
        loop {
            if slot == 0 {
                return None;
            }
            slot -= 1;
            idx[slot] += 1;
            if idx[slot] < dims[slot] {
                break;
            }
            idx[slot] = 0;
        }
    }
}

/// Builds a map from `domain` by evaluating `f` on each basis tuple.
pub fn map_from_tensors(
    field: Field,
    domain: &crate::space::BasedSpace,
    codomain: &crate::space::BasedSpace,
    mut f: impl FnMut(&[usize]) -> Tensor,
) -> LinMap {
    LinMap::from_fn(field, domain.clone(), codomain.clone(), |i| {
        let t = f(&domain.split_index(i));
        debug_assert_eq!(t.dims().iter().product::<usize>(), codomain.dim());
        t.flatten()
    })
    .expect("tensor evaluation stays within the codomain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::BasedSpace;

    #[test]
    fn apply_and_permute() {
        let f = Field::Rational;
        let v = BasedSpace::numbered("v", 2).unwrap();
        let swap = LinMap::swap(f, &v, &v);
        let t = Tensor::basis(f, &[2, 2], &[0, 1]);
        let s = t.apply(&swap, 0, 2);
        assert_eq!(s, Tensor::basis(f, &[2, 2], &[1, 0]));
        assert_eq!(t.permute(&[1, 0]), s);
    }

    #[test]
    fn counit_removes_a_slot() {
        let f = Field::Rational;
        let v = BasedSpace::numbered("v", 3).unwrap();
        let eps = LinMap::functional(f, v, vec![f.one(); 3]).unwrap();
        let t = Tensor::basis(f, &[3, 3], &[2, 1]).apply(&eps, 0, 1);
        assert_eq!(t.dims(), &[3]);
        assert_eq!(t.flatten(), vec![(1, f.one())]);
    }

    #[test]
    fn counterexample_search_is_row_major() {
        let mut seen = Vec::new();
        let hit = find_counterexample(&[2, 3], |i| {
            seen.push(i.to_vec());
            i != [1, 1]
        });
        assert_eq!(hit, Some(vec![1, 1]));
        assert_eq!(seen.len(), 5);
        assert_eq!(find_counterexample(&[], |_| true), None);
    }
}
