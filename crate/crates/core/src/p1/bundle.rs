use std::fmt;

use crate::field::Field;
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;

use super::GeometryError;

/// A vector bundle on `P^1` given by a transition matrix `T` over the
/// overlap of the charts `U_0 = Spec K[t]` and `U_1 = Spec K[1/t]`.
///
/// A global section is `u ∈ K[t]^r` with `T u ∈ K[1/t]^r`, so `[t^{-d}]`
/// is `O(d)`. Changing the `U_0` frame by `B ∈ GL_r(K[t])` and the `U_1`
/// frame by `A ∈ GL_r(K[1/t])` replaces `T` by `A T B`.
#[derive(Clone, PartialEq)]
pub struct TransitionBundle {
    transition: Matrix<LaurentPoly>,
    inverse: Matrix<LaurentPoly>,
}

impl fmt::Debug for TransitionBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransitionBundle({})", self.transition)
    }
}

impl fmt::Display for TransitionBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.transition.fmt(f)
    }
}

impl TransitionBundle {
    pub fn new(transition: Matrix<LaurentPoly>) -> Result<Self, GeometryError> {
        if !transition.is_square() {
            return Err(GeometryError::BadParameter(format!(
                "transition matrix is {}x{}",
                transition.rows(),
                transition.cols()
            )));
        }
        let inverse = transition.laurent_inverse().map_err(|_| GeometryError::NotAUnit {
            det: transition.det().to_string(),
        })?;
        Ok(TransitionBundle { transition, inverse })
    }

    /// Builds a bundle from a transition matrix and its known inverse,
    /// checking `T T^{-1} = 1`.
    pub fn with_inverse(
        transition: Matrix<LaurentPoly>,
        inverse: Matrix<LaurentPoly>,
    ) -> Result<Self, GeometryError> {
        let n = transition.rows();
        if !transition.is_square()
            || inverse.rows() != n
            || transition.mul(&inverse) != Matrix::identity(&transition.field(), n)
        {
            return Err(GeometryError::BadParameter("supplied inverse does not invert T".into()));
        }
        Ok(TransitionBundle { transition, inverse })
    }

    pub fn line(field: Field, d: i64) -> Self {
        let t = LaurentPoly::t_pow(field, -d);
        let inv = LaurentPoly::t_pow(field, d);
        TransitionBundle {
            transition: Matrix::diagonal(&field, vec![t]),
            inverse: Matrix::diagonal(&field, vec![inv]),
        }
    }

    /// `O(a_1) ⊕ ... ⊕ O(a_r)`.
    pub fn split(field: Field, degrees: &[i64]) -> Self {
        TransitionBundle {
            transition: Matrix::diagonal(&field, degrees.iter().map(|&d| LaurentPoly::t_pow(field, -d)).collect()),
            inverse: Matrix::diagonal(&field, degrees.iter().map(|&d| LaurentPoly::t_pow(field, d)).collect()),
        }
    }

    pub fn trivial(field: Field, rank: usize) -> Self {
        Self::split(field, &vec![0; rank])
    }

    pub fn field(&self) -> Field {
        self.transition.field()
    }

    pub fn rank(&self) -> usize {
        self.transition.rows()
    }

    pub fn transition(&self) -> &Matrix<LaurentPoly> {
        &self.transition
    }

    pub fn inverse(&self) -> &Matrix<LaurentPoly> {
        &self.inverse
    }

    /// `deg E = -k` where `det T = c t^k`.
    pub fn degree(&self) -> i64 {
        let (_, k) = self.transition.det().as_unit().expect("determinant is a unit");
        -k
    }

    /// `E(n) = E ⊗ O(n)`.
    pub fn twist(&self, n: i64) -> Self {
        TransitionBundle {
            transition: self.transition.shift(-n),
            inverse: self.inverse.shift(n),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        TransitionBundle {
            transition: self.transition.direct_sum(&other.transition),
            inverse: self.inverse.direct_sum(&other.inverse),
        }
    }

    pub fn dual(&self) -> Self {
        TransitionBundle {
            transition: self.inverse.transpose(),
            inverse: self.transition.transpose(),
        }
    }

    /// Tensor product, with coordinates ordered `(i, j) -> i * rank(other) + j`.
    pub fn tensor(&self, other: &Self) -> Self {
        TransitionBundle {
            transition: self.transition.kronecker(&other.transition),
            inverse: self.inverse.kronecker(&other.inverse),
        }
    }

    /// `Hom(self, target)`, coordinates are the row-major entries of an
    /// `rank(target) x rank(self)` matrix.
    pub fn hom(&self, target: &Self) -> Self {
        target.tensor(&self.dual())
    }

    /// The bundle with transition `A T B`, where `A ∈ GL_r(K[1/t])` and
    /// `B ∈ GL_r(K[t])`; isomorphic to `self`.
    pub fn change_frames(
        &self,
        a: &Matrix<LaurentPoly>,
        b: &Matrix<LaurentPoly>,
    ) -> Result<Self, GeometryError> {
        let polynomial_unit = |m: &Matrix<LaurentPoly>, in_t: bool| -> Result<Matrix<LaurentPoly>, GeometryError> {
            let inv = m.laurent_inverse().map_err(|_| GeometryError::NotAUnit {
                det: m.det().to_string(),
            })?;
            let ok = m.entries().chain(inv.entries()).all(|p| {
                if in_t {
                    p.is_polynomial()
                } else {
                    p.is_polynomial_in_inverse()
                }
            });
            if !ok {
                return Err(GeometryError::BadParameter(format!(
                    "{m} is not invertible over K[{}]",
                    if in_t { "t" } else { "1/t" }
                )));
            }
            Ok(inv)
        };
        let a_inv = polynomial_unit(a, false)?;
        let b_inv = polynomial_unit(b, true)?;
        Ok(TransitionBundle {
            transition: a.mul(&self.transition).mul(b),
            inverse: b_inv.mul(&self.inverse).mul(&a_inv),
        })
    }

    /// Largest absolute exponent in `T` and `T^{-1}`.
    pub fn exponent_bound(&self) -> i64 {
        [&self.transition, &self.inverse]
            .iter()
            .filter_map(|m| m.exponent_range())
            .map(|(lo, hi)| lo.abs().max(hi.abs()))
            .max()
            .unwrap_or(0)
    }
}
