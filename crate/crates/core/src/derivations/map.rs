use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{koszul_sign, Element, GradedAlgebra};
use crate::linalg::{Rational, RationalMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("block for source degree {degree} is {found_rows}x{found_cols}, expected {rows}x{cols}")]
    BlockShape {
        degree: u32,
        rows: usize,
        cols: usize,
        found_rows: usize,
        found_cols: usize,
    },
    #[error("missing block for source degree {0}")]
    MissingBlock(u32),
    #[error("block for source degree {0}, which has an empty graded piece")]
    ExtraBlock(u32),
    #[error("image of `{label}` is not homogeneous of degree {expected}")]
    Inhomogeneous { label: String, expected: i64 },
    #[error("expected {expected} images, got {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("shift mismatch: {0} vs {1}")]
    ShiftMismatch(i64, i64),
}

/// Linear self-map of a graded algebra raising degree by `shift`, stored as
/// one matrix per nonempty source piece.
///
/// The block for source degree `n` has shape
/// `dim H^{n+shift} x dim H^n`; column `c` is the image of the `c`-th basis
/// element of `H^n`. Blocks into empty pieces have zero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLinearMap {
    shift: i64,
    blocks: BTreeMap<u32, RationalMatrix>,
}

impl GradedLinearMap {
    pub fn zero(a: &GradedAlgebra, shift: i64) -> Self {
        let blocks = (0..=a.top_degree())
            .filter(|&n| a.piece_dim(n.into()) > 0)
            .map(|n| {
                let rows = a.piece_dim(i64::from(n) + shift);
                (n, RationalMatrix::zeros(rows, a.piece_dim(n.into())))
            })
            .collect();
        Self { shift, blocks }
    }

    pub fn identity(a: &GradedAlgebra) -> Self {
        let mut m = Self::zero(a, 0);
        for (n, block) in m.blocks.iter_mut() {
            *block = RationalMatrix::identity(a.piece_dim((*n).into()));
        }
        m
    }

    pub fn from_blocks(
        a: &GradedAlgebra,
        shift: i64,
        blocks: BTreeMap<u32, RationalMatrix>,
    ) -> Result<Self, MapError> {
        let m = Self { shift, blocks };
        m.check_shape(a)?;
        Ok(m)
    }

    /// Map sending basis element `j` to `images[j]`; each image must be
    /// homogeneous of degree `deg(j) + shift` (or zero).
    pub fn from_images(a: &GradedAlgebra, shift: i64, images: &[Element]) -> Result<Self, MapError> {
        if images.len() != a.dim() {
            return Err(MapError::ImageCount {
                expected: a.dim(),
                found: images.len(),
            });
        }
        let mut m = Self::zero(a, shift);
        for (j, image) in images.iter().enumerate() {
            let target = i64::from(a.degree(j)) + shift;
            if image.nonzero().any(|(k, _)| i64::from(a.degree(k)) != target) {
                return Err(MapError::Inhomogeneous {
                    label: a.label(j).to_owned(),
                    expected: target,
                });
            }
            let block = m.blocks.get_mut(&a.degree(j)).expect("block per nonempty piece");
            let col = a.position_in_piece(j);
            for (k, c) in image.nonzero() {
                block[(a.position_in_piece(k), col)] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn blocks(&self) -> &BTreeMap<u32, RationalMatrix> {
        &self.blocks
    }

    pub fn check_shape(&self, a: &GradedAlgebra) -> Result<(), MapError> {
        for n in 0..=a.top_degree() {
            let cols = a.piece_dim(n.into());
            match self.blocks.get(&n) {
                None if cols > 0 => return Err(MapError::MissingBlock(n)),
                None => {}
                Some(_) if cols == 0 => return Err(MapError::ExtraBlock(n)),
                Some(b) => {
                    let rows = a.piece_dim(i64::from(n) + self.shift);
                    if b.rows() != rows || b.cols() != cols {
                        return Err(MapError::BlockShape {
                            degree: n,
                            rows,
                            cols,
                            found_rows: b.rows(),
                            found_cols: b.cols(),
                        });
                    }
                }
            }
        }
        if let Some(&n) = self.blocks.keys().find(|&&n| n > a.top_degree()) {
            return Err(MapError::ExtraBlock(n));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(RationalMatrix::is_zero)
    }

    /// Image of basis element `j`.
    pub fn image_of_basis(&self, a: &GradedAlgebra, j: usize) -> Element {
        let mut out = Element::zero(a.dim());
        let n = a.degree(j);
        let block = &self.blocks[&n];
        let col = a.position_in_piece(j);
        let targets = a.graded_piece(i64::from(n) + self.shift);
        for (r, &k) in targets.iter().enumerate() {
            out.add_scaled_basis(k, &block[(r, col)]);
        }
        out
    }

    pub fn images(&self, a: &GradedAlgebra) -> Vec<Element> {
        (0..a.dim()).map(|j| self.image_of_basis(a, j)).collect()
    }

    pub fn apply(&self, a: &GradedAlgebra, u: &Element) -> Element {
        let mut out = Element::zero(a.dim());
        for (j, c) in u.nonzero() {
            out.add_scaled(&self.image_of_basis(a, j), c);
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, a: &GradedAlgebra, other: &GradedLinearMap) -> GradedLinearMap {
        let shift = self.shift + other.shift;
        let mut out = Self::zero(a, shift);
        for (n, inner) in &other.blocks {
            let mid = i64::from(*n) + other.shift;
            let Ok(mid) = u32::try_from(mid) else { continue };
            let Some(outer) = self.blocks.get(&mid) else { continue };
            out.blocks.insert(*n, outer.mul(inner));
        }
        out
    }

    pub fn scaled(&self, c: &Rational) -> GradedLinearMap {
        GradedLinearMap {
            shift: self.shift,
            blocks: self.blocks.iter().map(|(n, b)| (*n, b.scaled(c))).collect(),
        }
    }

    pub fn minus(&self, other: &GradedLinearMap) -> Result<GradedLinearMap, MapError> {
        if self.shift != other.shift {
            return Err(MapError::ShiftMismatch(self.shift, other.shift));
        }
        Ok(GradedLinearMap {
            shift: self.shift,
            blocks: self
                .blocks
                .iter()
                .map(|(n, b)| (*n, b.sub(&other.blocks[n])))
                .collect(),
        })
    }

    /// `θ(x) = 1; θ(y) = 2*x` over the basis elements with nonzero image, or
    /// `θ = 0`.
    pub fn render(&self, a: &GradedAlgebra) -> String {
        let parts: Vec<String> = (0..a.dim())
            .filter_map(|j| {
                let image = self.image_of_basis(a, j);
                (!image.is_zero()).then(|| format!("θ({}) = {}", a.label(j), a.render(&image)))
            })
            .collect();
        if parts.is_empty() {
            "θ = 0".to_owned()
        } else {
            parts.join("; ")
        }
    }
}

/// Graded commutator `m1∘m2 - (-1)^{d1 d2} m2∘m1`.
pub fn bracket(a: &GradedAlgebra, m1: &GradedLinearMap, m2: &GradedLinearMap) -> GradedLinearMap {
    let sign = koszul_sign(m1.shift, m2.shift);
    let forward = m1.compose(a, m2);
    let backward = m2.compose(a, m1).scaled(&sign);
    forward.minus(&backward).expect("both composites have shift d1 + d2")
}

pub(crate) fn leibniz_defect(a: &GradedAlgebra, m: &GradedLinearMap, i: usize, j: usize) -> Element {
    let sign = koszul_sign(m.shift(), i64::from(a.degree(i)));
    let ei = a.basis_element(i);
    let ej = a.basis_element(j);
    let lhs = m.apply(a, &Element::from_terms(a.dim(), a.product(i, j)));
    let first = a.multiply(&m.image_of_basis(a, i), &ej);
    let second = a.multiply(&ei, &m.image_of_basis(a, j));
    let mut defect = lhs.minus(&first);
    defect.add_scaled(&second, &-sign);
    defect
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizDefect {
    pub i: usize,
    pub j: usize,
    pub defect: Element,
}

/// Exact Leibniz residual `θ(e_i e_j) - θ(e_i) e_j - (-1)^{d|e_i|} e_i θ(e_j)`
/// over all ordered basis pairs; empty iff `m` is a derivation.
pub fn is_derivation(a: &GradedAlgebra, m: &GradedLinearMap) -> Vec<LeibnizDefect> {
    let n = a.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let defect = leibniz_defect(a, m, i, j);
            if !defect.is_zero() {
                out.push(LeibnizDefect { i, j, defect });
            }
        }
    }
    out
}
