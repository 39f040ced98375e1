//! Finite bases with human-readable labels.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A vector space with a fixed, labelled basis `0..dim`.
///
/// `factors` records the tensor structure: the ground field has no factors,
/// a plain space has one factor (its own dimension), and
/// [`BasedSpace::tensor`] concatenates the factor lists. Basis indices of a
/// tensor space are row-major in the factors: `(i, j) ↦ i·dim(b) + j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasedSpace {
    labels: Arc<[String]>,
    factors: Vec<usize>,
}

impl BasedSpace {
    /// A plain space with the given distinct labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidSpace("a space needs at least one basis vector".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidSpace(format!("duplicate basis label {l:?}")));
            }
        }
        let dim = labels.len();
        Ok(BasedSpace {
            labels: labels.into(),
            factors: vec![dim],
        })
    }

    /// A plain space labelled `{prefix}0 .. {prefix}{dim-1}`.
    pub fn numbered(prefix: &str, dim: usize) -> Result<Self> {
        Self::new((0..dim).map(|i| format!("{prefix}{i}")))
    }

    /// The ground field as a one-dimensional space with no tensor factors.
    pub fn ground() -> Self {
        BasedSpace {
            labels: vec!["1".to_string()].into(),
            factors: Vec::new(),
        }
    }

    pub fn is_ground(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
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

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// `a ⊗ b` with row-major indexing. The ground field is a strict unit.
    pub fn tensor(a: &BasedSpace, b: &BasedSpace) -> BasedSpace {
        if a.is_ground() {
            return b.clone();
        }
        if b.is_ground() {
            return a.clone();
        }
        let mut labels = Vec::with_capacity(a.dim() * b.dim());
        for la in a.labels.iter() {
            for lb in b.labels.iter() {
                labels.push(format!("{la}⊗{lb}"));
            }
        }
        let mut factors = a.factors.clone();
        factors.extend_from_slice(&b.factors);
        BasedSpace {
            labels: labels.into(),
            factors,
        }
    }

    /// Tensor power / product of several spaces, left to right.
    pub fn tensor_all<'a>(spaces: impl IntoIterator<Item = &'a BasedSpace>) -> BasedSpace {
        spaces
            .into_iter()
            .fold(BasedSpace::ground(), |acc, s| BasedSpace::tensor(&acc, s))
    }

    /// Same basis and labels, forgetting tensor structure.
    pub fn flat(&self) -> BasedSpace {
        if self.is_ground() {
            return self.clone();
        }
        BasedSpace {
            labels: self.labels.clone(),
            factors: vec![self.dim()],
        }
    }

    /// Splits a basis index into per-factor indices.
    pub fn split_index(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, d) in self.factors.iter().enumerate().rev() {
            out[slot] = index % d;
            index /= d;
        }
        out
    }

    pub fn join_index(&self, parts: &[usize]) -> usize {
        debug_assert_eq!(parts.len(), self.factors.len());
        parts.iter().zip(&self.factors).fold(0, |acc, (p, d)| acc * d + p)
    }

    pub fn from_parts(labels: Vec<String>, factors: Vec<usize>) -> Result<Self> {
        let product: usize = factors.iter().product();
        if product != labels.len() {
            return Err(Error::InvalidSpace(format!(
                "factor product {product} does not match {} labels",
                labels.len()
            )));
        }
        if factors.is_empty() {
            return Ok(BasedSpace::ground());
        }
        if factors.contains(&0) {
            return Err(Error::InvalidSpace("zero-dimensional factor".into()));
        }
        let mut space = BasedSpace::new(labels)?;
        space.factors = factors;
        Ok(space)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_is_row_major() {
        let a = BasedSpace::numbered("a", 2).unwrap();
        let b = BasedSpace::numbered("b", 3).unwrap();
        let t = BasedSpace::tensor(&a, &b);
        assert_eq!(t.dim(), 6);
        let order: Vec<Vec<usize>> = (0..6).map(|i| t.split_index(i)).collect();
        assert_eq!(
            order,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![1, 1], vec![1, 2]]
        );
        assert_eq!(t.label(4), "a1⊗b1");
        for i in 0..6 {
            assert_eq!(t.join_index(&t.split_index(i)), i);
        }
    }

    #[test]
    fn unit_factor_keeps_second_order() {
        let one = BasedSpace::new(["u"]).unwrap();
        let b = BasedSpace::numbered("b", 4).unwrap();
        let t = BasedSpace::tensor(&one, &b);
        assert_eq!(t.dim(), 4);
        for i in 0..4 {
            assert_eq!(t.split_index(i), vec![0, i]);
        }
        assert_eq!(BasedSpace::tensor(&BasedSpace::ground(), &b), b);
    }

    #[test]
    fn tensor_is_not_symmetric() {
        let a = BasedSpace::numbered("a", 3).unwrap();
        let b = BasedSpace::numbered("b", 2).unwrap();
        let ab = BasedSpace::tensor(&a, &b);
        let ba = BasedSpace::tensor(&b, &a);
        assert_eq!(ab.dim(), ba.dim());
        assert_ne!(ab.labels(), ba.labels());
        assert_eq!(ab.split_index(1), vec![0, 1]);
        assert_eq!(ba.split_index(1), vec![0, 1]);
        assert_eq!(ab.label(1), "a0⊗b1");
        assert_eq!(ba.label(1), "b0⊗a1");
    }

    #[test]
    fn labels_must_be_unique() {
        assert!(BasedSpace::new(["x", "x"]).is_err());
        assert!(BasedSpace::new(Vec::<String>::new()).is_err());
    }
}
