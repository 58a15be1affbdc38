//! Betti numbers of real toric varieties attached to the Coxeter complexes
//! of the classical root systems.
//!
//! The rational cohomology of the real toric variety `X^R` splits over the
//! row space of the mod-2 characteristic matrix `Λ`:
//!
//! ```text
//! H*(X^R; Q) = ⊕_{S ⊆ [n]} H̃^{*-1}(K_S; Q)
//! ```
//!
//! where `K_S` is the full subcomplex on the vertices whose `λ` pairs oddly
//! with `S`. This crate builds the complexes, computes exact homology and
//! compares the result with closed forms in Euler zigzag and Springer numbers.

pub mod complexes;
pub mod error;
pub mod exactlinalg;
pub mod family;
pub mod homology;
pub mod pipeline;
pub mod scalar;
pub mod sequences;
pub mod tables;

pub use error::{Error, Result};
pub use family::Family;
pub use scalar::{ExactInteger, Field, Fp};

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;
pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
