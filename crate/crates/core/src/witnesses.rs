//! Named example objects: the S3 matched pair, the two extensions of `k[C2]`
//! by `k[C2]`, the A4 coset datum, and the set-level A6 decomposition.

use crate::datum::{trivial_lact, ExtendingDatum};
use crate::error::Result;
use crate::groups::{
    alternating4, alternating6, coset_extending_structure, group_algebra, symmetric3, transversal_extending_structure,
    CosetDecomposition, GroupTable,
};
use crate::linmap::LinMap;
use crate::scalar::Field;
use crate::space::BasedSpace;
use crate::special::{group_matched_pair, CrossedDatum, MatchedPair};

fn subgroup(g: &GroupTable, gens: &[&str]) -> Vec<usize> {
    let gens: Vec<usize> = gens
        .iter()
        .map(|l| g.index_of(l).unwrap_or_else(|| panic!("no element {l}")))
        .collect();
    g.closure(&gens)
}

/// `S3 = C3 · {e, (12)}`.
pub fn s3_decomposition() -> CosetDecomposition {
    let g = symmetric3();
    let a = subgroup(&g, &["(123)"]);
    let x = subgroup(&g, &["(12)"]);
    transversal_extending_structure(&g, &a, &x).expect("exact factorization")
}

/// `S3 = {e, (12)} · C3`.
pub fn s3_decomposition_flipped() -> CosetDecomposition {
    let g = symmetric3();
    let a = subgroup(&g, &["(12)"]);
    let x = subgroup(&g, &["(123)"]);
    transversal_extending_structure(&g, &a, &x).expect("exact factorization")
}

pub fn s3_matched_pair(field: Field) -> MatchedPair {
    group_matched_pair(&s3_decomposition().structure, field).expect("trivial cocycle")
}

/// `k[C2]` by `k[C2]` with trivial action and `f(x, x) = g` when `twisted`
/// (giving `k[Z4]`), trivial `f` otherwise (giving `k[C2 × C2]`).
pub fn c2_extension(field: Field, twisted: bool) -> CrossedDatum {
    let c2 = GroupTable::cyclic(2);
    let (a, s_a) = group_algebra(&c2, field).into_parts();
    let h = crate::coalgebra::Bialgebra::new(
        crate::coalgebra::Coalgebra::grouplike(field, BasedSpace::new(["1", "x"]).expect("labels")),
        crate::coalgebra::Algebra::new(
            BasedSpace::new(["1", "x"]).expect("labels"),
            a.mult().clone(),
            a.unit().clone(),
            crate::coalgebra::Associativity::Yes,
        )
        .expect("shapes"),
    )
    .expect("C2 is associative");
    let lact = trivial_lact(h.coalgebra(), &a);
    let hh = BasedSpace::tensor(h.space(), h.space());
    let cocycle =
        LinMap::from_basis_fn(field, hh, a.space().clone(), |i| usize::from(twisted && i == 3)).expect("shapes");
    CrossedDatum::new(a, Some(s_a), h, lact, cocycle).expect("valid crossed datum")
}

/// `A4` over `⟨(12)(34)⟩` with least coset representatives.
pub fn a4_decomposition() -> CosetDecomposition {
    let g = alternating4();
    let a = subgroup(&g, &["(12)(34)"]);
    coset_extending_structure(&g, &a).expect("subgroup")
}

pub fn a4_datum(field: Field) -> Result<ExtendingDatum> {
    a4_decomposition().structure.lift(field)
}

/// `A6` over the `A4` fixing 5 and 6: thirty cosets.
pub fn a6_decomposition() -> CosetDecomposition {
    let g = alternating6();
    let a = subgroup(&g, &["(123)", "(12)(34)"]);
    coset_extending_structure(&g, &a).expect("subgroup")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(s3_decomposition().structure.x_labels, vec!["e", "(12)"]);
        assert_eq!(s3_decomposition_flipped().structure.x_size(), 3);
        assert!(s3_decomposition_flipped().structure.cocycle_is_trivial());
        assert_eq!(a4_decomposition().structure.x_size(), 6);
        let a6 = a6_decomposition();
        assert_eq!((a6.subgroup.len(), a6.representatives.len()), (12, 30));
    }
}
