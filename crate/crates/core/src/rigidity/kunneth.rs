use std::collections::HashMap;

use super::{RigidityError, TorusSubset};
use crate::algebra::{monomial::build_with_exponents, monomial::torus_presentation, tensor, Element, GradedAlgebra};

/// Largest supported torus rank; the total algebra has `dim(base) * 2^s`
/// basis elements.
pub const MAX_TORUS_RANK: usize = 16;

/// `H*(T^s × C) = Λ(ι_1, …, ι_s) ⊗ H*(C)` with each `ι_i` in degree 1.
///
/// The torus factor sits on the left, so total basis element `(S, b)` is
/// `ι_S ⊗ e_b` at index `ext(S) * dim(base) + b`, where `ext(S)` is the
/// position of the ordered monomial `ι_S` in the exterior algebra.
#[derive(Clone, Debug)]
pub struct KunnethModel {
    base: GradedAlgebra,
    torus_rank: usize,
    subset_of: Vec<TorusSubset>,
    index_of: HashMap<TorusSubset, usize>,
    total: GradedAlgebra,
}

impl KunnethModel {
    pub fn new(base: &GradedAlgebra, s: usize) -> Result<Self, RigidityError> {
        if s > MAX_TORUS_RANK {
            return Err(RigidityError::TorusRankTooLarge(s));
        }
        let (exterior, exponents) =
            build_with_exponents(&torus_presentation(s)).expect("exterior presentation is valid");
        let subset_of: Vec<TorusSubset> = exponents
            .iter()
            .map(|e| {
                let idx: Vec<usize> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x == 1)
                    .map(|(i, _)| i + 1)
                    .collect();
                TorusSubset::from_indices(&idx)
            })
            .collect();
        let index_of = subset_of.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let total = if s == 0 {
            base.clone()
        } else {
            tensor(&exterior, base).with_name(format!("T{s}×{}", base.name()))
        };
        Ok(Self {
            base: base.clone(),
            torus_rank: s,
            subset_of,
            index_of,
            total,
        })
    }

    pub fn base(&self) -> &GradedAlgebra {
        &self.base
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn total(&self) -> &GradedAlgebra {
        &self.total
    }

    /// Subsets of `{1..s}` in exterior basis order.
    pub fn subsets(&self) -> &[TorusSubset] {
        &self.subset_of
    }

    /// Total index of `ι_S ⊗ e_b`. Panics if `S` is not a subset of `{1..s}`.
    pub fn total_index(&self, subset: TorusSubset, b: usize) -> usize {
        self.index_of[&subset] * self.base.dim() + b
    }

    /// Inverse of [`KunnethModel::total_index`].
    pub fn split(&self, index: usize) -> (TorusSubset, usize) {
        let nb = self.base.dim();
        (self.subset_of[index / nb], index % nb)
    }

    /// `1 ⊗ u`.
    pub fn embed(&self, u: &Element) -> Element {
        self.place(TorusSubset::EMPTY, u)
    }

    /// `ι_S ⊗ u`.
    pub fn place(&self, subset: TorusSubset, u: &Element) -> Element {
        let mut out = Element::zero(self.total.dim());
        for (b, c) in u.nonzero() {
            out.add_scaled_basis(self.total_index(subset, b), c);
        }
        out
    }

    /// Coefficient of `ι_S` in a total element, as an element of the base.
    pub fn component(&self, w: &Element, subset: TorusSubset) -> Element {
        let nb = self.base.dim();
        let start = self.index_of[&subset] * nb;
        Element::from_coeffs(w.coeffs()[start..start + nb].to_vec())
    }
}
