//! Graded derivations of a fixed degree, and the class-H membership check.
//!
//! A derivation of degree `d` is a linear map `θ` with `|θ(u)| = |u| + d` and
//! the Koszul-Leibniz law `θ(uv) = θ(u)v + (-1)^{d|u|} uθ(v)`.
//!
//! The solver takes the values of `θ` on every basis element as unknowns and
//! imposes the Leibniz law on every ordered pair of basis elements, so no
//! generating set is needed and the system stays linear.

mod map;

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{koszul_sign, GradedAlgebra};
use crate::linalg::{fraction_free_rank, Rational, RationalMatrix};
use crate::par::Strategy;

pub use map::{bracket, is_derivation, GradedLinearMap, LeibnizDefect, MapError};

/// The linear system whose solutions are the degree-`d` derivations.
#[derive(Clone, Debug)]
pub struct DerivationSystem {
    pub degree: i64,
    /// Unknown `u` is the coefficient of `θ(e_source)` on basis element `target`.
    pub unknowns: Vec<(usize, usize)>,
    pub constraints: RationalMatrix,
    pub rank: usize,
    /// Canonical nullspace basis of `constraints`.
    pub solutions: Vec<Vec<Rational>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditFailure {
    #[error("rank-nullity: {unknowns} unknowns, rank {rank}, {solutions} solutions")]
    RankNullity {
        unknowns: usize,
        rank: usize,
        solutions: usize,
    },
    #[error("rref rank {rref} disagrees with fraction-free rank {oracle}")]
    OracleRank { rref: usize, oracle: usize },
    #[error("solution {0} does not satisfy the constraints")]
    NotASolution(usize),
}

impl DerivationSystem {
    pub fn build(a: &GradedAlgebra, d: i64, strategy: Strategy) -> Self {
        let n = a.dim();
        let mut offsets = Vec::with_capacity(n);
        let mut unknowns = Vec::new();
        for j in 0..n {
            offsets.push(unknowns.len());
            for &t in a.graded_piece(i64::from(a.degree(j)) + d) {
                unknowns.push((j, t));
            }
        }
        let width = unknowns.len();
        // Unknown index of the coefficient of θ(e_j) on e_t.
        let var = |j: usize, t: usize| offsets[j] + a.position_in_piece(t);

        let rows: Vec<Vec<Rational>> = strategy.flat_map_indices(n * n, |pair| {
            let (i, j) = (pair / n, pair % n);
            let target = i64::from(a.degree(i) + a.degree(j)) + d;
            let sign = koszul_sign(d, i64::from(a.degree(i)));
            let mut rows: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
            fn row(rows: &mut BTreeMap<usize, Vec<Rational>>, t: usize, width: usize) -> &mut Vec<Rational> {
                rows.entry(t).or_insert_with(|| vec![Rational::zero(); width])
            }
            // θ(e_i e_j)
            for (m, c) in a.product(i, j) {
                for &t in a.graded_piece(target) {
                    row(&mut rows, t, width)[var(*m, t)] += c;
                }
            }
            // - θ(e_i) e_j
            for &s in a.graded_piece(i64::from(a.degree(i)) + d) {
                for (t, c) in a.product(s, j) {
                    row(&mut rows, *t, width)[var(i, s)] -= c;
                }
            }
            // - (-1)^{d|e_i|} e_i θ(e_j)
            for &s in a.graded_piece(i64::from(a.degree(j)) + d) {
                for (t, c) in a.product(i, s) {
                    row(&mut rows, *t, width)[var(j, s)] -= &sign * c;
                }
            }
            rows.into_values()
                .filter(|r| r.iter().any(|x| !x.is_zero()))
                .collect()
        });
        let constraints = RationalMatrix::from_rows(width, distinct_up_to_scale(rows));
        let rank = constraints.rank();
        let solutions = constraints.nullspace_basis();
        Self {
            degree: d,
            unknowns,
            constraints,
            rank,
            solutions,
        }
    }

    pub fn dimension(&self) -> usize {
        self.solutions.len()
    }

    /// Reshapes each solution vector into a [`GradedLinearMap`].
    pub fn maps(&self, a: &GradedAlgebra) -> Vec<GradedLinearMap> {
        self.solutions
            .iter()
            .map(|v| {
                let mut images = vec![crate::algebra::Element::zero(a.dim()); a.dim()];
                for (&(j, t), x) in self.unknowns.iter().zip(v) {
                    images[j].add_scaled_basis(t, x);
                }
                GradedLinearMap::from_images(a, self.degree, &images)
                    .expect("unknowns only target the shifted piece")
            })
            .collect()
    }

    /// Rank-nullity against the fraction-free oracle, and exact substitution
    /// of every solution.
    pub fn audit(&self) -> Result<(), AuditFailure> {
        let unknowns = self.unknowns.len();
        if self.rank + self.solutions.len() != unknowns {
            return Err(AuditFailure::RankNullity {
                unknowns,
                rank: self.rank,
                solutions: self.solutions.len(),
            });
        }
        let oracle = fraction_free_rank(&self.constraints);
        if oracle != self.rank {
            return Err(AuditFailure::OracleRank {
                rref: self.rank,
                oracle,
            });
        }
        for (i, v) in self.solutions.iter().enumerate() {
            if self.constraints.mul_vec(v).iter().any(|x| !x.is_zero()) {
                return Err(AuditFailure::NotASolution(i));
            }
        }
        Ok(())
    }
}

/// Drops rows proportional to an earlier one; the row space is unchanged.
fn distinct_up_to_scale(rows: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let mut seen = HashSet::new();
    rows.into_iter()
        .filter(|row| {
            let lead = row.iter().find(|x| !x.is_zero()).expect("zero rows are filtered");
            let normalized: Vec<Rational> = row.iter().map(|x| x / lead).collect();
            seen.insert(normalized)
        })
        .collect()
}

/// Basis of the space of degree-`d` derivations of `a`.
pub fn derivation_space(a: &GradedAlgebra, d: i64) -> Vec<GradedLinearMap> {
    derivation_space_with(a, d, Strategy::default())
}

/// Every solve is audited; a failed audit is a bug and panics.
pub fn derivation_space_with(a: &GradedAlgebra, d: i64, strategy: Strategy) -> Vec<GradedLinearMap> {
    let system = DerivationSystem::build(a, d, strategy);
    if let Err(failure) = system.audit() {
        panic!("derivation solve at degree {d} failed its audit: {failure}");
    }
    system.maps(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub degree: i64,
    pub derivation: GradedLinearMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassHVerdict {
    /// No nonzero derivation in any checked negative degree.
    pub in_class: bool,
    /// `H^0` is one-dimensional and `H^1` vanishes.
    pub connectivity_ok: bool,
    /// `(degree, dimension of the derivation space)` for `d = -1, -2, ...`.
    pub dimensions: Vec<(i64, usize)>,
    /// First basis derivation of the nonzero space with smallest `|d|`.
    pub certificate: Option<Certificate>,
}

/// Checks degrees `-1 ..= -top_degree`.
pub fn check_class_h(a: &GradedAlgebra) -> ClassHVerdict {
    check_class_h_with(a, None, Strategy::default())
}

/// Checks degrees `-1 ..= -max_degree` (default `top_degree`). The per-degree
/// solves are independent and run under `strategy`.
pub fn check_class_h_with(a: &GradedAlgebra, max_degree: Option<u32>, strategy: Strategy) -> ClassHVerdict {
    let max = max_degree.unwrap_or_else(|| a.top_degree());
    let spaces = strategy.map_indices(max as usize, |k| {
        let d = -(k as i64 + 1);
        (d, derivation_space_with(a, d, strategy))
    });
    let dimensions = spaces.iter().map(|(d, s)| (*d, s.len())).collect();
    let certificate = spaces
        .into_iter()
        .find(|(_, s)| !s.is_empty())
        .map(|(degree, mut s)| Certificate {
            degree,
            derivation: s.swap_remove(0),
        });
    ClassHVerdict {
        in_class: certificate.is_none(),
        connectivity_ok: a.piece_dim(0) == 1 && a.piece_dim(1) == 0,
        dimensions,
        certificate,
    }
}
