//! Truncated-polynomial / exterior monomial presentations.

use std::cmp::Reverse;
use std::collections::{HashMap, HashSet};

use super::{AlgebraError, BasisElement, GradedAlgebra, Terms};
use crate::linalg::rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub symbol: String,
    pub degree: u32,
    /// Smallest exponent at which the generator's power vanishes.
    pub truncation: u32,
}

impl Generator {
    pub fn new(symbol: impl Into<String>, degree: u32, truncation: u32) -> Self {
        Self {
            symbol: symbol.into(),
            degree,
            truncation,
        }
    }
}

/// Free graded-commutative algebra on the generators, with `g^truncation = 0`
/// for every generator and no other relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub generators: Vec<Generator>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, generators: Vec<Generator>) -> Result<Self, AlgebraError> {
        let p = Self {
            name: name.into(),
            generators,
        };
        p.check()?;
        Ok(p)
    }

    /// One-generator presentation, e.g. `single("CP2", "x", 2, 3)`.
    pub fn single(name: &str, symbol: &str, degree: u32, truncation: u32) -> Self {
        Self::new(name, vec![Generator::new(symbol, degree, truncation)])
            .expect("single-generator presentation")
    }

    pub fn check(&self) -> Result<(), AlgebraError> {
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !seen.insert(g.symbol.as_str()) {
                return Err(AlgebraError::DuplicateGenerator(g.symbol.clone()));
            }
            if g.degree == 0 {
                return Err(AlgebraError::ZeroDegree(g.symbol.clone()));
            }
            if g.truncation < 2 {
                return Err(AlgebraError::TruncationTooSmall {
                    symbol: g.symbol.clone(),
                    truncation: g.truncation,
                });
            }
            if g.degree % 2 == 1 && g.truncation != 2 {
                return Err(AlgebraError::OddTruncation {
                    symbol: g.symbol.clone(),
                    degree: g.degree,
                    truncation: g.truncation,
                });
            }
        }
        Ok(())
    }
}

fn monomial_label(p: &Presentation, exps: &[u32]) -> String {
    let factors: Vec<String> = p
        .generators
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| {
            if e == 1 {
                g.symbol.clone()
            } else {
                format!("{}^{}", g.symbol, e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_owned()
    } else {
        factors.join("*")
    }
}

/// Builds the monomial algebra and also returns each basis element's exponent
/// vector (in generator order).
pub(crate) fn build_with_exponents(
    p: &Presentation,
) -> Result<(GradedAlgebra, Vec<Vec<u32>>), AlgebraError> {
    p.check()?;
    let gens = &p.generators;
    let mut monomials: Vec<Vec<u32>> = vec![vec![]];
    for g in gens {
        monomials = monomials
            .into_iter()
            .flat_map(|m| {
                (0..g.truncation).map(move |e| {
                    let mut m = m.clone();
                    m.push(e);
                    m
                })
            })
            .collect();
    }
    let degree_of = |m: &[u32]| -> u32 { m.iter().zip(gens).map(|(e, g)| e * g.degree).sum() };
    // (degree, lex) with lex descending, so x precedes y and x*y precedes x*z.
    monomials.sort_by_key(|m| (degree_of(m), Reverse(m.clone())));

    let index: HashMap<&[u32], usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.as_slice(), i))
        .collect();
    let basis: Vec<BasisElement> = monomials
        .iter()
        .map(|m| BasisElement::new(monomial_label(p, m), degree_of(m)))
        .collect();
    let odd: Vec<bool> = gens.iter().map(|g| g.degree % 2 == 1).collect();

    let n = monomials.len();
    let mut products: Vec<Terms> = Vec::with_capacity(n * n);
    for a in &monomials {
        for b in &monomials {
            let sum: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            if sum.iter().zip(gens).any(|(e, g)| *e >= g.truncation) {
                products.push(Vec::new());
                continue;
            }
            // Moving each odd factor of b left past the odd factors of a with a
            // larger generator index costs one transposition.
            let mut transpositions = 0u32;
            for (j, &bj) in b.iter().enumerate() {
                if !odd[j] || bj == 0 {
                    continue;
                }
                for i in j + 1..gens.len() {
                    if odd[i] {
                        transpositions += a[i] * bj;
                    }
                }
            }
            let sign = if transpositions.is_multiple_of(2) { 1 } else { -1 };
            products.push(vec![(index[sum.as_slice()], rat(sign))]);
        }
    }
    let unit = index[vec![0; gens.len()].as_slice()];
    let algebra = GradedAlgebra::from_parts(p.name.clone(), basis, unit, products)?;
    Ok((algebra, monomials))
}

/// Algebra with basis all monomials `prod g_i^a_i`, `0 <= a_i < truncation_i`,
/// ordered by degree and then descending lexicographic exponent. Products add
/// exponents with the Koszul sign of sorting the odd factors.
pub fn build_monomial_algebra(p: &Presentation) -> Result<GradedAlgebra, AlgebraError> {
    build_with_exponents(p).map(|(a, _)| a)
}

/// Exterior algebra on `s` degree-1 generators `i1, ..., is`: the rational
/// cohomology of the torus `T^s`.
pub fn exterior_algebra(s: usize) -> GradedAlgebra {
    build_monomial_algebra(&torus_presentation(s)).expect("exterior presentation is valid")
}

pub(crate) fn torus_presentation(s: usize) -> Presentation {
    Presentation {
        name: format!("T{s}"),
        generators: (1..=s).map(|i| Generator::new(format!("i{i}"), 1, 2)).collect(),
    }
}
