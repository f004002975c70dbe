//! Exhaustive check of the graded-commutative algebra axioms.

use num_traits::One;

use super::{koszul_sign, normalize_terms, GradedAlgebra, Terms};
use crate::par::Strategy;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `e_i * e_j` has a nonzero term on `e_k` of the wrong degree.
    DegreeAdditivity { i: usize, j: usize, k: usize },
    /// `1 * e_i` (left) or `e_i * 1` (right) is not `e_i`.
    UnitLaw { i: usize, side: UnitSide },
    /// `e_j * e_i != (-1)^{|i||j|} e_i * e_j`, reported once per `i <= j`.
    Commutativity { i: usize, j: usize },
    /// `(e_i e_j) e_k != e_i (e_j e_k)`.
    Associativity { i: usize, j: usize, k: usize },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::DegreeAdditivity { .. } => "degree-additivity",
            Violation::UnitLaw { .. } => "unit-law",
            Violation::Commutativity { .. } => "commutativity",
            Violation::Associativity { .. } => "associativity",
        }
    }

    pub fn render(&self, a: &GradedAlgebra) -> String {
        let l = |i: usize| a.label(i);
        match *self {
            Violation::DegreeAdditivity { i, j, k } => format!(
                "degree-additivity: {} * {} has a term on {} (degree {} != {} + {})",
                l(i),
                l(j),
                l(k),
                a.degree(k),
                a.degree(i),
                a.degree(j)
            ),
            Violation::UnitLaw { i, side } => match side {
                UnitSide::Left => format!("unit-law: 1 * {} != {}", l(i), l(i)),
                UnitSide::Right => format!("unit-law: {} * 1 != {}", l(i), l(i)),
            },
            Violation::Commutativity { i, j } => format!(
                "commutativity: {} * {} != (-1)^({}*{}) {} * {}",
                l(j),
                l(i),
                a.degree(i),
                a.degree(j),
                l(i),
                l(j)
            ),
            Violation::Associativity { i, j, k } => format!(
                "associativity: ({} * {}) * {} != {} * ({} * {})",
                l(i),
                l(j),
                l(k),
                l(i),
                l(j),
                l(k)
            ),
        }
    }
}

/// List of axiom violations; empty iff the algebra is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, kind: &str) -> usize {
        self.violations.iter().filter(|v| v.kind() == kind).count()
    }

    pub fn render(&self, a: &GradedAlgebra) -> Vec<String> {
        self.violations.iter().map(|v| v.render(a)).collect()
    }
}

fn scaled(terms: &[(usize, crate::linalg::Rational)], c: &crate::linalg::Rational) -> Terms {
    terms.iter().map(|(k, x)| (*k, x * c)).collect()
}

pub(super) fn validate(a: &GradedAlgebra, strategy: Strategy) -> ValidationReport {
    let n = a.dim();
    let u = a.unit_index();
    let mut violations = Vec::new();

    for i in 0..n {
        for j in 0..n {
            let target = a.degree(i) + a.degree(j);
            for (k, _) in a.product(i, j) {
                if a.degree(*k) != target {
                    violations.push(Violation::DegreeAdditivity { i, j, k: *k });
                }
            }
        }
    }

    let one = crate::linalg::Rational::one();
    for i in 0..n {
        let expected = [(i, one.clone())];
        if a.product(u, i) != expected {
            violations.push(Violation::UnitLaw {
                i,
                side: UnitSide::Left,
            });
        }
        if a.product(i, u) != expected {
            violations.push(Violation::UnitLaw {
                i,
                side: UnitSide::Right,
            });
        }
    }

    for i in 0..n {
        for j in i..n {
            let sign = koszul_sign(i64::from(a.degree(i)), i64::from(a.degree(j)));
            if a.product(j, i) != scaled(a.product(i, j), &sign).as_slice() {
                violations.push(Violation::Commutativity { i, j });
            }
        }
    }

    violations.extend(strategy.flat_map_indices(n, |i| {
        let mut found = Vec::new();
        for j in 0..n {
            let ij = a.product(i, j);
            for k in 0..n {
                let left = normalize_terms(
                    ij.iter()
                        .flat_map(|(m, c)| a.product(*m, k).iter().map(move |(t, d)| (*t, c * d))),
                );
                let right = normalize_terms(
                    a.product(j, k)
                        .iter()
                        .flat_map(|(m, c)| a.product(i, *m).iter().map(move |(t, d)| (*t, c * d))),
                );
                if left != right {
                    found.push(Violation::Associativity { i, j, k });
                }
            }
        }
        found
    }));

    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_monomial_algebra, Presentation};
    use crate::linalg::rat;

    fn cp2() -> GradedAlgebra {
        build_monomial_algebra(&Presentation::single("CP2", "x", 2, 3)).unwrap()
    }

    #[test]
    fn builder_output_is_valid() {
        assert!(cp2().validate().is_valid());
    }

    #[test]
    fn degree_mismatch_detected() {
        let mut a = cp2();
        let (x, x2) = (a.index_of("x").unwrap(), a.index_of("x^2").unwrap());
        // x * x2 lands on x: degree 2 != 6.
        a.set_product(x, x2, vec![(x, rat(1))]);
        let report = a.validate();
        assert_eq!(report.count("degree-additivity"), 1);
        assert_eq!(
            report.violations.iter().find(|v| v.kind() == "degree-additivity"),
            Some(&Violation::DegreeAdditivity { i: x, j: x2, k: x })
        );
    }

    #[test]
    fn missing_sign_detected() {
        let p = Presentation::new(
            "ab",
            vec![
                crate::algebra::Generator::new("a", 3, 2),
                crate::algebra::Generator::new("b", 5, 2),
            ],
        )
        .unwrap();
        let mut a = build_monomial_algebra(&p).unwrap();
        let (ia, ib, iab) = (
            a.index_of("a").unwrap(),
            a.index_of("b").unwrap(),
            a.index_of("a*b").unwrap(),
        );
        a.set_product(ib, ia, vec![(iab, rat(1))]);
        let report = a.validate();
        assert_eq!(report.count("commutativity"), 1);
        assert!(report
            .violations
            .contains(&Violation::Commutativity { i: ia, j: ib }));
    }

    #[test]
    fn unit_row_missing_detected() {
        let mut a = cp2();
        let x = a.index_of("x").unwrap();
        a.set_product(a.unit_index(), x, vec![]);
        let report = a.validate();
        assert!(report.violations.contains(&Violation::UnitLaw {
            i: x,
            side: UnitSide::Left
        }));
    }

    #[test]
    fn associativity_failure_detected() {
        // x * x^3 = 2 x^4 keeps degrees and symmetry but (x x) x^2 = x^4 != x (x x^2).
        let mut a = build_monomial_algebra(&Presentation::single("CP4", "x", 2, 5)).unwrap();
        let (x, x3, x4) = (
            a.index_of("x").unwrap(),
            a.index_of("x^3").unwrap(),
            a.index_of("x^4").unwrap(),
        );
        a.set_product(x, x3, vec![(x4, rat(2))]);
        a.set_product(x3, x, vec![(x4, rat(2))]);
        let report = a.validate();
        assert!(report.count("associativity") > 0);
        assert_eq!(report.count("commutativity"), 0);
        assert_eq!(report.count("degree-additivity"), 0);
        assert_eq!(report.count("unit-law"), 0);
    }

    #[test]
    fn strategies_agree() {
        let mut a = cp2();
        a.set_product(1, 1, vec![(1, rat(1))]);
        let reports: Vec<_> = Strategy::available()
            .iter()
            .map(|&s| a.validate_with(s))
            .collect();
        assert!(reports.windows(2).all(|w| w[0] == w[1]));
    }
}
