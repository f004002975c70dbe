//! Finite-dimensional graded-commutative algebras over the rationals, given
//! by an explicit basis and a table of structure constants.

mod element;
pub(crate) mod monomial;
mod subalgebra;
mod tensor;
mod validate;

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::Rational;

pub use element::Element;
pub use monomial::{build_monomial_algebra, exterior_algebra, Generator, Presentation};
pub use subalgebra::subalgebra_generated;
pub use tensor::tensor;
pub use validate::{UnitSide, ValidationReport, Violation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("algebra must have at least one basis element")]
    EmptyBasis,
    #[error("unit index {0} out of range")]
    UnitOutOfRange(usize),
    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),
    #[error("product table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("product ({i}, {j}) refers to basis index {k} out of range")]
    IndexOutOfRange { i: usize, j: usize, k: usize },
    #[error("generator `{symbol}` has odd degree {degree} but truncation {truncation}; odd generators square to zero, truncation must be 2")]
    OddTruncation {
        symbol: String,
        degree: u32,
        truncation: u32,
    },
    #[error("generator `{0}` has degree 0; generator degrees must be positive")]
    ZeroDegree(String),
    #[error("generator `{symbol}` has truncation {truncation}; must be at least 2")]
    TruncationTooSmall { symbol: String, truncation: u32 },
    #[error("duplicate generator symbol `{0}`")]
    DuplicateGenerator(String),
    #[error("algebra fails validation: {0}")]
    Invalid(String),
}

/// A basis vector: its display label and degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub label: String,
    pub degree: u32,
}

impl BasisElement {
    pub fn new(label: impl Into<String>, degree: u32) -> Self {
        Self {
            label: label.into(),
            degree,
        }
    }
}

/// A sparse linear combination of basis indices, sorted by index, no zeros.
pub type Terms = Vec<(usize, Rational)>;

/// Graded algebra with basis, unit and structure constants
/// `e_i * e_j = sum_k c_k e_k`.
///
/// Construction only checks structural sanity (indices in range, unique
/// labels). The algebra axioms are checked by [`GradedAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    name: String,
    basis: Vec<BasisElement>,
    unit: usize,
    products: Vec<Terms>,
    pieces: Vec<Vec<usize>>,
    position: Vec<usize>,
}

pub(crate) fn normalize_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Terms {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (k, c) in terms {
        *acc.entry(k).or_insert_with(Rational::zero) += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl GradedAlgebra {
    /// `products[i * dim + j]` holds the expansion of `e_i * e_j`.
    pub fn from_parts(
        name: impl Into<String>,
        basis: Vec<BasisElement>,
        unit: usize,
        products: Vec<Terms>,
    ) -> Result<Self, AlgebraError> {
        let n = basis.len();
        if n == 0 {
            return Err(AlgebraError::EmptyBasis);
        }
        if unit >= n {
            return Err(AlgebraError::UnitOutOfRange(unit));
        }
        if products.len() != n * n {
            return Err(AlgebraError::TableShape {
                expected: n * n,
                found: products.len(),
            });
        }
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.label.as_str()) {
                return Err(AlgebraError::DuplicateLabel(b.label.clone()));
            }
        }
        let mut normalized = Vec::with_capacity(n * n);
        for (idx, terms) in products.into_iter().enumerate() {
            if let Some((k, _)) = terms.iter().find(|(k, _)| *k >= n) {
                return Err(AlgebraError::IndexOutOfRange {
                    i: idx / n,
                    j: idx % n,
                    k: *k,
                });
            }
            normalized.push(normalize_terms(terms));
        }
        let top = basis.iter().map(|b| b.degree).max().unwrap_or(0) as usize;
        let mut pieces = vec![Vec::new(); top + 1];
        let mut position = vec![0; n];
        for (i, b) in basis.iter().enumerate() {
            let piece = &mut pieces[b.degree as usize];
            position[i] = piece.len();
            piece.push(i);
        }
        Ok(Self {
            name: name.into(),
            basis,
            unit,
            products: normalized,
            pieces,
            position,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i].label
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    /// Highest degree carrying a basis element.
    pub fn top_degree(&self) -> u32 {
        (self.pieces.len() - 1) as u32
    }

    /// Structure constants of `e_i * e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    /// Overwrites one entry of the product table. Intended for building test
    /// fixtures with injected faults; the result is not validated.
    pub fn set_product(&mut self, i: usize, j: usize, terms: Terms) {
        let n = self.dim();
        assert!(terms.iter().all(|(k, _)| *k < n), "term index out of range");
        self.products[i * n + j] = normalize_terms(terms);
    }

    /// Basis indices of degree `n`, in basis order. Empty outside `0..=top`.
    pub fn graded_piece(&self, n: i64) -> &[usize] {
        usize::try_from(n)
            .ok()
            .and_then(|n| self.pieces.get(n))
            .map_or(&[], Vec::as_slice)
    }

    pub fn piece_dim(&self, n: i64) -> usize {
        self.graded_piece(n).len()
    }

    /// Position of basis index `i` inside its graded piece.
    pub fn position_in_piece(&self, i: usize) -> usize {
        self.position[i]
    }

    pub fn unit(&self) -> Element {
        Element::basis(self.dim(), self.unit)
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    /// Bilinear extension of the product table.
    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        let n = self.dim();
        assert_eq!(u.dim(), n, "left factor has wrong dimension");
        assert_eq!(v.dim(), n, "right factor has wrong dimension");
        let mut out = Element::zero(n);
        for (i, a) in u.nonzero() {
            for (j, b) in v.nonzero() {
                let ab = a * b;
                for (k, c) in self.product(i, j) {
                    out.add_scaled_basis(*k, &(&ab * c));
                }
            }
        }
        out
    }

    /// `e_i * v` for a basis element `e_i`.
    pub fn multiply_basis_left(&self, i: usize, v: &Element) -> Element {
        let mut out = Element::zero(self.dim());
        for (j, b) in v.nonzero() {
            for (k, c) in self.product(i, j) {
                out.add_scaled_basis(*k, &(b * c));
            }
        }
        out
    }

    /// Degree of a nonzero homogeneous element; `None` for zero or mixed.
    pub fn homogeneous_degree(&self, u: &Element) -> Option<u32> {
        let mut degrees = u.nonzero().map(|(i, _)| self.degree(i));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self, crate::par::Strategy::default())
    }

    pub fn validate_with(&self, strategy: crate::par::Strategy) -> ValidationReport {
        validate::validate(self, strategy)
    }

    /// Renders an element as `c*label + ...`, with the unit label dropped.
    pub fn render(&self, u: &Element) -> String {
        u.render(|i| self.label(i), Some(self.unit))
    }
}

/// `(-1)^(a*b)` as a rational.
pub fn koszul_sign(a: i64, b: i64) -> Rational {
    if (a * b).rem_euclid(2) == 0 {
        crate::linalg::rat(1)
    } else {
        crate::linalg::rat(-1)
    }
}

/// The one-dimensional algebra `Q` concentrated in degree 0.
pub fn point_algebra() -> GradedAlgebra {
    GradedAlgebra::from_parts(
        "point",
        vec![BasisElement::new("1", 0)],
        0,
        vec![vec![(0, crate::linalg::rat(1))]],
    )
    .expect("point algebra is well formed")
}
