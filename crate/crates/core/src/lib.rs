//! Exact computations around Young diagrams.
//!
//! - [`diagram`]: partitions, conjugation, enumeration.
//! - [`permutation`]: `S_n`, cycle decompositions and cycle types.
//! - [`tableaux`]: fillings, standard tableaux, hook lengths.
//! - [`algebra`]: the group algebra `Q[S_n]` and Young symmetrizers.
//! - [`schur`]: tensor powers, Young projectors, Schur functors, Schur–Weyl checks.
//! - [`classification`]: irrep labels of `S_n`, `End(C^N)`, `GL`, `SL`, `U`, `SU`.
//!
//! Linear algebra is generic over an exact [`Field`]; the aliases below fix
//! it to arbitrary-precision rationals, which is what the rest of the crate
//! and the CLI use.

pub mod algebra;
pub mod classification;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod permutation;
pub mod scalar;
pub mod schur;
pub mod tableaux;

pub use diagram::{enumerate_bounded, enumerate_partitions, make_diagram, YoungDiagram};
pub use error::{Error, Result};
pub use permutation::{CycleDecomposition, Permutation};
pub use scalar::Field;
pub use tableaux::Tableau;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

pub type RationalAlgebraElement = algebra::AlgebraElement<Rational>;
pub type RationalMatrix = linalg::Matrix<Rational>;
pub type RationalOperator = schur::TensorOperator<Rational>;
pub type RationalSubspace = schur::SubspaceBasis<Rational>;

/// Machine-word rationals; overflow panics, so only for small inputs.
pub type SmallRational = num_rational::Rational64;
pub type SmallAlgebraElement = algebra::AlgebraElement<SmallRational>;
pub type SmallMatrix = linalg::Matrix<SmallRational>;
