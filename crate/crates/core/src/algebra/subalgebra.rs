use super::{Element, GradedAlgebra};
use crate::linalg::RationalMatrix;

fn echelon(a: &GradedAlgebra, vectors: &[Element]) -> Vec<Element> {
    let m = RationalMatrix::from_rows(
        a.dim(),
        vectors.iter().map(|v| v.coeffs().to_vec()).collect(),
    );
    let r = m.rref();
    (0..r.rank)
        .map(|i| Element::from_coeffs(r.reduced.row(i).to_vec()))
        .collect()
}

/// Echelonized basis of the smallest unital subalgebra containing `seed`,
/// found by iterating `span <- span + span*span` until the dimension stops
/// growing.
pub fn subalgebra_generated(a: &GradedAlgebra, seed: &[Element]) -> Vec<Element> {
    let mut generators = vec![a.unit()];
    generators.extend(seed.iter().cloned());
    let mut span = echelon(a, &generators);
    loop {
        let mut next = span.clone();
        for u in &span {
            for v in &span {
                next.push(a.multiply(u, v));
            }
        }
        let next = echelon(a, &next);
        if next.len() == span.len() {
            return span;
        }
        span = next;
    }
}
