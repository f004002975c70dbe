#![allow(dead_code)]

use graded_rigidity::algebra::{build_monomial_algebra, Generator};
use graded_rigidity::corpus::CORPUS;
use graded_rigidity::{GradedAlgebra, Presentation};
use proptest::prelude::*;

/// Odd generators get truncation 2, even ones 2..=4.
pub fn arb_generator(symbol: &'static str, max_degree: u32) -> impl Strategy<Value = Generator> {
    (1..=max_degree, 2u32..=4).prop_map(move |(d, t)| {
        let t = if d % 2 == 1 { 2 } else { t };
        Generator::new(symbol, d, t)
    })
}

pub fn arb_presentation(max_gens: usize, max_degree: u32) -> impl Strategy<Value = Presentation> {
    let symbols = ["x", "y", "z"];
    (1..=max_gens).prop_flat_map(move |n| {
        let gens: Vec<_> = symbols[..n].iter().map(|s| arb_generator(s, max_degree)).collect();
        gens.prop_map(|g| Presentation::new("random", g).unwrap())
    })
}

pub fn arb_algebra(max_gens: usize, max_degree: u32) -> impl Strategy<Value = GradedAlgebra> {
    arb_presentation(max_gens, max_degree).prop_map(|p| build_monomial_algebra(&p).unwrap())
}

/// Random algebras of total dimension at most `max_dim`, for the solver tests.
pub fn arb_small_algebra(max_gens: usize, max_degree: u32, max_dim: usize) -> impl Strategy<Value = GradedAlgebra> {
    arb_presentation(max_gens, max_degree)
        .prop_filter("dimension bound", move |p| {
            p.generators.iter().map(|g| g.truncation as usize).product::<usize>() <= max_dim
        })
        .prop_map(|p| build_monomial_algebra(&p).unwrap())
}

pub fn corpus() -> Vec<(&'static str, GradedAlgebra)> {
    CORPUS.iter().map(|e| (e.name, e.load().unwrap())).collect()
}

pub fn single(name: &str, degree: u32, truncation: u32) -> GradedAlgebra {
    build_monomial_algebra(&Presentation::single(name, "x", degree, truncation)).unwrap()
}
