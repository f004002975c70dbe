use num_traits::{One, Signed, Zero};

use crate::linalg::Rational;

/// Element of an algebra as a dense coefficient vector over its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coeffs: Vec<Rational>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); dim],
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = Self::zero(dim);
        e.coeffs[i] = Rational::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_terms(dim: usize, terms: &[(usize, Rational)]) -> Self {
        let mut e = Self::zero(dim);
        for (k, c) in terms {
            e.add_scaled_basis(*k, c);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `(index, coefficient)` pairs with nonzero coefficient, in index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn add_scaled_basis(&mut self, i: usize, c: &Rational) {
        if !c.is_zero() {
            self.coeffs[i] += c;
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Rational) {
        assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (i, x) in other.nonzero() {
            self.coeffs[i] += x * c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn plus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn minus(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub(crate) fn render<'a>(&self, label: impl Fn(usize) -> &'a str, unit: Option<usize>) -> String {
        let mut out = String::new();
        for (i, c) in self.nonzero() {
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if Some(i) == unit {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(label(i));
            } else {
                out.push_str(&format!("{}*{}", magnitude, label(i)));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}
