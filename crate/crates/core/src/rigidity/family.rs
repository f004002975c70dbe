use std::collections::BTreeMap;

use super::{KunnethModel, RigidityError, TorusSubset};
use crate::algebra::{Element, GradedAlgebra};
use crate::derivations::GradedLinearMap;
use crate::par::Strategy;

/// Coefficient system of a candidate pullback
/// `f*(u) = 1⊗u + Σ_S ι_S ⊗ λ_S(u)`.
///
/// Only nonempty subsets are stored; `λ_∅` is the identity. Subsets without
/// an entry are the zero map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaFamily {
    torus_rank: usize,
    components: BTreeMap<TorusSubset, GradedLinearMap>,
}

impl LambdaFamily {
    pub fn new(torus_rank: usize) -> Self {
        Self {
            torus_rank,
            components: BTreeMap::new(),
        }
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn components(&self) -> &BTreeMap<TorusSubset, GradedLinearMap> {
        &self.components
    }

    pub fn component(&self, subset: TorusSubset) -> Option<&GradedLinearMap> {
        self.components.get(&subset)
    }

    fn check_subset(&self, subset: TorusSubset) -> Result<(), RigidityError> {
        if subset.is_empty() {
            return Err(RigidityError::EmptySubset);
        }
        if subset.max_index() > self.torus_rank {
            return Err(RigidityError::SubsetOutOfRange {
                subset: subset.to_string(),
                torus_rank: self.torus_rank,
            });
        }
        Ok(())
    }

    /// Sets `λ_S`, which must have shift `-|S|`.
    pub fn insert(&mut self, subset: TorusSubset, map: GradedLinearMap) -> Result<(), RigidityError> {
        self.check_subset(subset)?;
        let expected = -(subset.len() as i64);
        if map.shift() != expected {
            return Err(RigidityError::ComponentShift {
                subset: subset.to_string(),
                expected,
                found: map.shift(),
            });
        }
        self.components.insert(subset, map);
        Ok(())
    }

    /// Sets `λ_S` without the `-|S|` shift requirement. The expansion is then
    /// inhomogeneous, but residuals are still computed exactly in the total
    /// algebra; used to test derivations of any degree at a single level.
    pub fn insert_any_shift(&mut self, subset: TorusSubset, map: GradedLinearMap) -> Result<(), RigidityError> {
        self.check_subset(subset)?;
        self.components.insert(subset, map);
        Ok(())
    }

    pub fn with(mut self, subset: TorusSubset, map: GradedLinearMap) -> Result<Self, RigidityError> {
        self.insert(subset, map)?;
        Ok(self)
    }

    /// True iff every stored component is the zero map, i.e. `f*(u) = 1⊗u`.
    pub fn is_trivial_pullback(&self) -> bool {
        self.components.values().all(GradedLinearMap::is_zero)
    }

    fn check_against(&self, model: &KunnethModel) -> Result<(), RigidityError> {
        if self.torus_rank != model.torus_rank() {
            return Err(RigidityError::TorusRankMismatch {
                family: self.torus_rank,
                model: model.torus_rank(),
            });
        }
        for map in self.components.values() {
            map.check_shape(model.base())?;
        }
        Ok(())
    }
}

pub fn is_trivial_pullback(fam: &LambdaFamily) -> bool {
    fam.is_trivial_pullback()
}

fn expand_unchecked(model: &KunnethModel, fam: &LambdaFamily, u: &Element) -> Element {
    let base: &GradedAlgebra = model.base();
    let mut out = model.embed(u);
    for (subset, map) in &fam.components {
        out = out.plus(&model.place(*subset, &map.apply(base, u)));
    }
    out
}

/// `f*(u) = 1⊗u + Σ_S ι_S ⊗ λ_S(u)` in the total algebra.
pub fn pullback_expand(model: &KunnethModel, fam: &LambdaFamily, u: &Element) -> Result<Element, RigidityError> {
    fam.check_against(model)?;
    if u.dim() != model.base().dim() {
        return Err(RigidityError::ElementDimension {
            expected: model.base().dim(),
            found: u.dim(),
        });
    }
    Ok(expand_unchecked(model, fam, u))
}

/// Nonzero `ι_S`-coefficient of `f*(e_i e_j) - f*(e_i) f*(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualEntry {
    pub pair: (usize, usize),
    pub subset: TorusSubset,
    pub defect: Element,
}

pub fn multiplicativity_residual(model: &KunnethModel, fam: &LambdaFamily) -> Result<Vec<ResidualEntry>, RigidityError> {
    multiplicativity_residual_with(model, fam, Strategy::default())
}

/// Multiplicativity defect over every ordered pair of base basis elements.
/// All signs come from the total algebra's product table.
pub fn multiplicativity_residual_with(
    model: &KunnethModel,
    fam: &LambdaFamily,
    strategy: Strategy,
) -> Result<Vec<ResidualEntry>, RigidityError> {
    fam.check_against(model)?;
    let base = model.base();
    let total = model.total();
    let n = base.dim();
    let images: Vec<Element> = (0..n)
        .map(|i| expand_unchecked(model, fam, &base.basis_element(i)))
        .collect();
    let mut subsets = model.subsets().to_vec();
    subsets.sort();
    Ok(strategy.flat_map_indices(n * n, |pair| {
        let (i, j) = (pair / n, pair % n);
        let mut lhs = Element::zero(total.dim());
        for (k, c) in base.product(i, j) {
            lhs.add_scaled(&images[*k], c);
        }
        let defect = lhs.minus(&total.multiply(&images[i], &images[j]));
        if defect.is_zero() {
            return Vec::new();
        }
        subsets
            .iter()
            .filter_map(|&subset| {
                let part = model.component(&defect, subset);
                (!part.is_zero()).then_some(ResidualEntry {
                    pair: (i, j),
                    subset,
                    defect: part,
                })
            })
            .collect()
    }))
}
