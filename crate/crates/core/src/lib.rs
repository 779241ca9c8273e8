//! Sparse arithmetic in infinite-dimensional Grassmann–Banach algebras.
//!
//! Elements are finitely supported maps from finite generator sets to a
//! complete normed field (real, rational or p-adic), multiplied with the
//! ε-symbol sign rule. The crate also models the tensor-algebra quotient that
//! produces these algebras, and coefficient extension to commutative
//! algebras `K[t]/(t^N)`.
//!
//! ```
//! use grassbanach::{FieldDescriptor, GrassmannAlgebra};
//!
//! let alg: GrassmannAlgebra = GrassmannAlgebra::l1(FieldDescriptor::Rational);
//! let a = alg.unit().add(&alg.generator(1u64).mul(&alg.generator(2u64))?)?;
//! assert_eq!(a.invert()?.to_string(), "1 - e1*e2");
//! # Ok::<(), grassbanach::Error>(())
//! ```

pub mod algebra;
pub mod check;
pub mod error;
pub mod expr;
pub mod extension;
pub mod field;
pub mod monomial;
pub mod ordering;
pub mod ring;
pub mod sample;
pub mod tensor;

pub use algebra::{Grade, GrassmannAlgebra, GrassmannElement, NormKind, Parity};
pub use error::{Error, Result};
pub use extension::{BScalar, CommutativeAlgebraDescriptor};
pub use field::{FieldDescriptor, Padic, Scalar, ScalarOp};
pub use monomial::{permutation_parity, GeneratorLabel, Monomial, Sign};
pub use ordering::{epsilon, OrderingFunction};
pub use ring::Coefficient;
pub use tensor::{TensorElement, TensorNorm, VectorElement, Word};
