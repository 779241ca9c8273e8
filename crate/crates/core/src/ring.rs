//! The coefficient interface the algebra is generic over.
//!
//! A coefficient type is a commutative normed ring with unit whose values
//! carry a runtime descriptor (the field, or the coefficient algebra). All
//! scalars stored inside one algebra element share a descriptor, so the
//! arithmetic here is infallible; mixing descriptors is a logic error and
//! panics.

use std::fmt::Debug;

use num_rational::BigRational;

pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync + 'static {
    type Descriptor: Copy + Eq + Debug + Send + Sync + 'static;

    fn descriptor(&self) -> Self::Descriptor;
    fn zero(d: Self::Descriptor) -> Self;
    fn one(d: Self::Descriptor) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn add_assign(&mut self, rhs: &Self) {
        *self = Coefficient::add(self, rhs);
    }

    /// Multiplicative inverse, `None` when the value is not a unit.
    fn inverse(&self) -> Option<Self>;

    /// Norm as a binary64 value.
    fn norm(&self) -> f64;

    /// Norm as an exact rational, when the coefficient ring can provide it.
    fn exact_norm(&self) -> Option<BigRational> {
        None
    }

    /// Whether the norm on `d` satisfies `|x + y| <= max(|x|, |y|)`.
    fn is_ultrametric(d: Self::Descriptor) -> bool;

    /// The value as a machine float, for rings that are stored as one.
    fn as_f64(&self) -> Option<f64> {
        None
    }

    /// Inverse of [`Coefficient::as_f64`]; `None` unless `d` is float-backed.
    fn from_f64(_x: f64, _d: Self::Descriptor) -> Option<Self> {
        None
    }
}
