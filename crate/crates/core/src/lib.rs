//! Exact computations with first-order jet rings, jet modules, connections
//! and Atiyah classes, realized concretely on the affine line and on the
//! projective line `P^1` glued from the charts `K[t]` and `K[1/t]`.

mod echelon;
pub mod field;
pub mod jet;
pub mod laurent;
pub mod matrix;
pub mod multipoly;
pub mod p1;
pub mod projective;
pub mod ring;
pub mod sample;

pub use field::{Field, PrimalityError, Scalar};
pub use laurent::LaurentPoly;
pub use matrix::{AlgebraError, Matrix};
pub use multipoly::{MultiPoly, PolyRing};
pub use ring::RingElem;
