//! Exact linear algebra over integers and rationals.
//!
//! Everything here is generic over a [`Scalar`]; the crate root exposes the
//! arbitrary-precision instantiations ([`IntMatrix`](crate::IntMatrix),
//! [`RatMatrix`](crate::RatMatrix), ...). Machine integers work too as long as
//! the caller knows intermediate values stay in range.

mod matrix;
mod partition;
mod poly;
mod transform;

pub use matrix::Matrix;
pub(crate) use matrix::dot;
pub use partition::Partition;
pub use poly::{spectrum_included, Polynomial};
pub use transform::{expansion, is_equitable, quotient_matrix};

use num_integer::Integer;
use num_traits::Num;
use std::fmt::Debug;

/// A commutative ring element with exact arithmetic.
///
/// `Div` is only ever used where the quotient is known to be exact
/// (fraction-free elimination, division by a leading coefficient of a field
/// polynomial), so integer types are fine.
pub trait Scalar: Num + Clone + Debug + Send + Sync {}
impl<T: Num + Clone + Debug + Send + Sync> Scalar for T {}

/// A scalar with gcd and Euclidean division, usable as the base of a
/// [`num_rational::Ratio`].
pub trait IntScalar: Scalar + Integer {}
impl<T: Scalar + Integer> IntScalar for T {}
