use super::{koszul_sign, BasisElement, GradedAlgebra, Terms};

/// Graded tensor product `a ⊗ b`.
///
/// Basis element `(i, j)` sits at index `i * dim(b) + j` and carries the label
/// `label_i⊗label_j`. Products follow the Koszul rule
/// `(x⊗ω)(y⊗η) = (-1)^{|ω||y|} xy⊗ωη`.
pub fn tensor(a: &GradedAlgebra, b: &GradedAlgebra) -> GradedAlgebra {
    let (na, nb) = (a.dim(), b.dim());
    let basis: Vec<BasisElement> = (0..na)
        .flat_map(|i| {
            (0..nb).map(move |j| {
                BasisElement::new(
                    format!("{}⊗{}", a.label(i), b.label(j)),
                    a.degree(i) + b.degree(j),
                )
            })
        })
        .collect();
    let n = na * nb;
    let mut products: Vec<Terms> = Vec::with_capacity(n * n);
    for x in 0..na {
        for w in 0..nb {
            for y in 0..na {
                for h in 0..nb {
                    let left = a.product(x, y);
                    let right = b.product(w, h);
                    if left.is_empty() || right.is_empty() {
                        products.push(Vec::new());
                        continue;
                    }
                    let sign = koszul_sign(i64::from(b.degree(w)), i64::from(a.degree(y)));
                    let mut terms = Terms::new();
                    for (k, c) in left {
                        for (l, d) in right {
                            terms.push((k * nb + l, &sign * c * d));
                        }
                    }
                    products.push(terms);
                }
            }
        }
    }
    GradedAlgebra::from_parts(
        format!("{}⊗{}", a.name(), b.name()),
        basis,
        a.unit_index() * nb + b.unit_index(),
        products,
    )
    .expect("tensor of well-formed algebras is well formed")
}
