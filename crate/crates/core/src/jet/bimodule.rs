use crate::field::Field;
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;

use super::JetError;

/// A `B`-bimodule `I`, `B = K[t]`, free of rank `r` as a right module on the
/// basis `m_1..m_r`. The right action is coordinatewise; the left action is
/// determined by `t * m_j = sum_k L[k][j] m_k`, so `t` acts on coordinate
/// vectors as the matrix `L`.
///
/// Laurent elements of `B[1/t]` act on the left only when `L` is invertible
/// over `K[t, 1/t]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bimodule {
    left_action: Matrix<LaurentPoly>,
    left_inverse: Option<Matrix<LaurentPoly>>,
}

impl Bimodule {
    pub fn new(left_action: Matrix<LaurentPoly>) -> Result<Self, JetError> {
        if !left_action.is_square() {
            return Err(JetError::MixedContext("left action matrix must be square".into()));
        }
        let left_inverse = left_action.laurent_inverse().ok();
        Ok(Bimodule {
            left_action,
            left_inverse,
        })
    }

    /// `I` with `ax = xa`: the left action of `t` is `t * Id`.
    pub fn abelianized(field: Field, rank: usize) -> Self {
        let t = Matrix::<LaurentPoly>::identity(&field, rank).shift(1);
        Self::new(t).expect("t * Id is square")
    }

    pub fn field(&self) -> Field {
        self.left_action.field()
    }

    pub fn rank(&self) -> usize {
        self.left_action.rows()
    }

    pub fn left_action(&self) -> &Matrix<LaurentPoly> {
        &self.left_action
    }

    pub fn is_abelianized(&self) -> bool {
        self.left_action == Matrix::<LaurentPoly>::identity(&self.field(), self.rank()).shift(1)
    }

    pub(crate) fn check_vec(&self, x: &[LaurentPoly], what: &str) -> Result<(), JetError> {
        if x.len() != self.rank() {
            return Err(JetError::MixedContext(format!(
                "{what} has {} coordinates, bimodule has rank {}",
                x.len(),
                self.rank()
            )));
        }
        check_field(self.field(), x, what)
    }

    /// Left multiplication `a * x`, i.e. `a(L)` applied to the coordinates.
    pub fn left_mul(&self, a: &LaurentPoly, x: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, JetError> {
        let field = self.field();
        let mut out = zero_vec(field, x.len());
        if a.is_zero() {
            return Ok(out);
        }
        let (lo, hi) = (a.min_exp().unwrap(), a.max_exp().unwrap());
        if hi >= 0 {
            let mut power = x.to_vec();
            for e in 0..=hi {
                if e > 0 {
                    power = self.left_action.mul_vec(&power);
                }
                if e >= lo {
                    out = vec_add(&out, &vec_scale(&power, &LaurentPoly::constant(a.coeff(e))));
                }
            }
        }
        if lo < 0 {
            let inv = self.left_inverse.as_ref().ok_or(JetError::NonInvertibleLeftAction)?;
            let mut power = x.to_vec();
            for e in 1..=-lo {
                power = inv.mul_vec(&power);
                if -e <= hi {
                    out = vec_add(&out, &vec_scale(&power, &LaurentPoly::constant(a.coeff(-e))));
                }
            }
        }
        Ok(out)
    }

    /// `L^{-1} x`, the left action of `1/t`.
    pub(crate) fn left_mul_t_inverse(&self, x: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, JetError> {
        let inv = self.left_inverse.as_ref().ok_or(JetError::NonInvertibleLeftAction)?;
        Ok(inv.mul_vec(x))
    }

    /// Right multiplication `x * b`, coordinatewise.
    pub fn right_mul(&self, x: &[LaurentPoly], b: &LaurentPoly) -> Vec<LaurentPoly> {
        vec_scale(x, b)
    }
}

pub(crate) fn check_field(field: Field, x: &[LaurentPoly], what: &str) -> Result<(), JetError> {
    match x.iter().find(|p| p.field() != field) {
        Some(p) => Err(JetError::MixedContext(format!(
            "{what} lives over {}, expected {field}",
            p.field()
        ))),
        None => Ok(()),
    }
}

pub fn zero_vec(field: Field, n: usize) -> Vec<LaurentPoly> {
    vec![LaurentPoly::zero(field); n]
}

pub fn vec_add(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &[LaurentPoly], b: &[LaurentPoly]) -> Vec<LaurentPoly> {
    assert_eq!(a.len(), b.len(), "vector length");
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &[LaurentPoly], c: &LaurentPoly) -> Vec<LaurentPoly> {
    a.iter().map(|x| x.mul(c)).collect()
}

pub fn vec_is_zero(a: &[LaurentPoly]) -> bool {
    a.iter().all(LaurentPoly::is_zero)
}
