//! Exact computations around negative-degree derivations of finite-dimensional
//! graded-commutative algebras over the rationals.
//!
//! * [`linalg`]: exact rational row reduction, rank and nullspace.
//! * [`algebra`]: algebras as basis plus structure constants, monomial
//!   builders, tensor products, axiom validation.
//! * [`derivations`]: the derivation solver and the class-H membership check.
//! * [`rigidity`]: Künneth models over a torus, λ-families of candidate
//!   pullbacks, the characteristic subspace and the level-by-level rigidity
//!   prover.
//! * [`io`] and [`cli`]: input formats, JSON reports and the command line.
//!
//! ```
//! use graded_rigidity::algebra::build_monomial_algebra;
//! use graded_rigidity::{check_class_h, prove_rigidity, Presentation};
//!
//! let cp2 = build_monomial_algebra(&Presentation::single("CP2", "x", 2, 3)).unwrap();
//! assert!(check_class_h(&cp2).in_class);
//! assert!(prove_rigidity(&cp2, 4).is_established());
//! ```

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod derivations;
pub mod io;
pub mod linalg;
pub mod par;
pub mod rigidity;

pub use algebra::{Element, GradedAlgebra, Presentation};
pub use derivations::{check_class_h, check_class_h_with, derivation_space, ClassHVerdict, GradedLinearMap};
pub use linalg::{Rational, RationalMatrix};
pub use par::Strategy;
pub use rigidity::{prove_rigidity, KunnethModel, LambdaFamily, ProofTrace};
