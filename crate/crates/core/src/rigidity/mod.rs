//! Candidate pullbacks along `T^s × C → C` and the rigidity criterion.
//!
//! A map `f: T^s × C → C` restricting to the identity on `C` pulls a class
//! back to `f*(u) = 1⊗u + Σ_S ι_S ⊗ λ_S(u)`, with `λ_S` of degree `-|S|`.
//! The criterion holds when every such family compatible with cup products
//! is trivial. [`prove_rigidity`] settles this one level `|S| = k` at a time.

mod char_space;
mod family;
mod kunneth;
mod prover;
mod subset;

use thiserror::Error;

use crate::derivations::MapError;

pub use char_space::{char_degrees, char_preserved, char_subspace, CharSubspace};
pub use family::{
    is_trivial_pullback, multiplicativity_residual, multiplicativity_residual_with, pullback_expand,
    LambdaFamily, ResidualEntry,
};
pub use kunneth::{KunnethModel, MAX_TORUS_RANK};
pub use prover::{prove_rigidity, prove_rigidity_with, LevelRecord, ProofTrace, RigidityVerdict};
pub use subset::TorusSubset;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigidityError {
    #[error("torus rank {0} exceeds the supported maximum")]
    TorusRankTooLarge(usize),
    #[error("family has torus rank {family}, model has {model}")]
    TorusRankMismatch { family: usize, model: usize },
    #[error("λ-components are indexed by nonempty subsets")]
    EmptySubset,
    #[error("subset {subset} is not contained in 1..={torus_rank}")]
    SubsetOutOfRange { subset: String, torus_rank: usize },
    #[error("component λ_{subset} must have shift {expected}, found {found}")]
    ComponentShift {
        subset: String,
        expected: i64,
        found: i64,
    },
    #[error("element has dimension {found}, base has {expected}")]
    ElementDimension { expected: usize, found: usize },
    #[error("bundle rank must be positive")]
    ZeroRank,
    #[error("endomorphism must have shift 0, found {0}")]
    EndomorphismShift(i64),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_monomial_algebra, point_algebra, Element, GradedAlgebra, Presentation};
    use crate::derivations::{derivation_space, GradedLinearMap};

    fn cp2() -> GradedAlgebra {
        build_monomial_algebra(&Presentation::single("CP2", "x", 2, 3)).unwrap()
    }

    fn s3() -> GradedAlgebra {
        build_monomial_algebra(&Presentation::single("S3", "x", 3, 2)).unwrap()
    }

    fn s3_family() -> (KunnethModel, LambdaFamily) {
        let a = s3();
        let theta = derivation_space(&a, -3).remove(0);
        let model = KunnethModel::new(&a, 1).unwrap();
        let mut fam = LambdaFamily::new(1);
        fam.insert_any_shift(TorusSubset::singleton(1), theta).unwrap();
        (model, fam)
    }

    #[test]
    fn trivial_family_expands_to_one_tensor_u() {
        let a = cp2();
        let model = KunnethModel::new(&a, 2).unwrap();
        let fam = LambdaFamily::new(2);
        for i in 0..a.dim() {
            let u = a.basis_element(i);
            assert_eq!(pullback_expand(&model, &fam, &u).unwrap(), model.embed(&u));
        }
        assert!(multiplicativity_residual(&model, &fam).unwrap().is_empty());
        assert!(is_trivial_pullback(&fam));
    }

    #[test]
    fn s3_single_level_expansion() {
        let (model, fam) = s3_family();
        let a = model.base();
        let x = a.basis_element(a.index_of("x").unwrap());
        let expected = model
            .embed(&x)
            .plus(&model.place(TorusSubset::singleton(1), &a.unit()));
        assert_eq!(pullback_expand(&model, &fam, &x).unwrap(), expected);
        let one = pullback_expand(&model, &fam, &a.unit()).unwrap();
        assert_eq!(one, model.embed(&a.unit()));
        assert!(multiplicativity_residual(&model, &fam).unwrap().is_empty());
        assert!(!fam.is_trivial_pullback());
    }

    #[test]
    fn strict_insert_checks_shift() {
        let a = cp2();
        let x = a.index_of("x").unwrap();
        let mut images = vec![Element::zero(3); 3];
        images[x] = a.unit();
        let theta = GradedLinearMap::from_images(&a, -2, &images).unwrap();
        let mut fam = LambdaFamily::new(1);
        assert!(matches!(
            fam.insert(TorusSubset::singleton(1), theta),
            Err(RigidityError::ComponentShift { expected: -1, found: -2, .. })
        ));
        // The only shift -1 map on an evenly graded algebra is zero.
        let zero = GradedLinearMap::zero(&a, -1);
        assert!(zero.is_zero());
        fam.insert(TorusSubset::singleton(1), zero).unwrap();
        let model = KunnethModel::new(&a, 1).unwrap();
        assert!(multiplicativity_residual(&model, &fam).unwrap().is_empty());
        assert!(fam.is_trivial_pullback());
    }

    #[test]
    fn family_precondition_errors() {
        let a = cp2();
        let mut fam = LambdaFamily::new(1);
        assert_eq!(
            fam.insert(TorusSubset::EMPTY, GradedLinearMap::zero(&a, 0)),
            Err(RigidityError::EmptySubset)
        );
        assert!(matches!(
            fam.insert(TorusSubset::singleton(2), GradedLinearMap::zero(&a, -1)),
            Err(RigidityError::SubsetOutOfRange { .. })
        ));
        let model = KunnethModel::new(&a, 2).unwrap();
        assert!(matches!(
            multiplicativity_residual(&model, &fam),
            Err(RigidityError::TorusRankMismatch { .. })
        ));
        let model = KunnethModel::new(&a, 1).unwrap();
        let other = s3();
        fam.insert(TorusSubset::singleton(1), GradedLinearMap::zero(&other, -1))
            .unwrap();
        assert!(matches!(
            multiplicativity_residual(&model, &fam),
            Err(RigidityError::Map(_))
        ));
    }

    #[test]
    fn non_derivation_has_residual() {
        // λ_1(1) = 1 breaks f*(1) = f*(1)^2.
        let a = s3();
        let model = KunnethModel::new(&a, 1).unwrap();
        let mut images = vec![Element::zero(2); 2];
        images[a.unit_index()] = a.unit();
        let bad = GradedLinearMap::from_images(&a, 0, &images).unwrap();
        let mut fam = LambdaFamily::new(1);
        fam.insert_any_shift(TorusSubset::singleton(1), bad).unwrap();
        let residual = multiplicativity_residual(&model, &fam).unwrap();
        assert!(!residual.is_empty());
        assert!(residual.iter().all(|r| r.subset == TorusSubset::singleton(1)));
    }

    #[test]
    fn prover_examples() {
        let t = prove_rigidity(&cp2(), 3);
        assert!(t.is_established());
        assert_eq!(t.levels.iter().map(|l| l.dimension).collect::<Vec<_>>(), vec![0, 0, 0]);

        let t = prove_rigidity(&s3(), 3);
        assert_eq!(t.verdict, RigidityVerdict::NotEstablished { level: 3 });
        assert_eq!(t.levels.iter().map(|l| l.dimension).collect::<Vec<_>>(), vec![0, 0, 1]);
        let cert = t.levels[2].certificate.as_ref().unwrap();
        let a = s3();
        assert_eq!(cert.image_of_basis(&a, a.index_of("x").unwrap()), a.unit());

        for s in 0..4 {
            let t = prove_rigidity(&point_algebra(), s);
            assert!(t.is_established());
            assert!(t.levels.is_empty());
            assert_eq!(t.level_cap, 0);
        }
    }

    #[test]
    fn summary_format() {
        assert_eq!(
            prove_rigidity(&cp2(), 2).summary(),
            "level 1: dim 0; level 2: dim 0; established"
        );
        assert_eq!(
            prove_rigidity(&s3(), 3).summary(),
            "level 1: dim 0; level 2: dim 0; level 3: dim 1; not established at level 3"
        );
    }
}
