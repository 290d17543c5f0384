use std::fmt::Debug;

use crate::field::{Field, Scalar};

/// Commutative ring elements that can sit inside a [`crate::Matrix`].
///
/// `Ctx` is whatever is needed to build a zero or one without a sample
/// element at hand (the field, plus the variable count for multivariate
/// polynomials).
pub trait RingElem: Clone + PartialEq + Debug {
    type Ctx: Clone + PartialEq + Debug;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplication by a scalar of the underlying field.
    fn scale(&self, c: &Scalar) -> Self;
    fn field_of(ctx: &Self::Ctx) -> Field;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl RingElem for Scalar {
    type Ctx = Field;

    fn ctx(&self) -> Field {
        self.field()
    }
    fn zero(ctx: &Field) -> Self {
        ctx.zero()
    }
    fn one(ctx: &Field) -> Self {
        ctx.one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Scalar::add(self, other)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        Scalar::mul(self, other)
    }
    fn scale(&self, c: &Scalar) -> Self {
        Scalar::mul(self, c)
    }
    fn field_of(ctx: &Field) -> Field {
        *ctx
    }
}
