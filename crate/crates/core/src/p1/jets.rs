//! First-order jet bundles on `P^1` for two choices of `(I, d)`:
//!
//! * classical: `I = Ω = O(-2)` with `d = dt` on `U_0`;
//! * rank 3: `I = O(-2) ⊕ O` on the basis `(dt, e)` of `U_0` and `(ds, f)`
//!   of `U_1`, with `d_0(a) = (a', t^i a')` and `d_1(b) = (b', -s^{2-i} b')`.
//!
//! In both cases `I` is abelianized. The right structure of the jet module
//! of `E` is `I ⊗ E ⊕ E`; the left structure is the extension of `E` by
//! `I ⊗ E` glued by the Atiyah cocycle `C = d(t) ⊗ T^{-1} T'`.

use std::fmt;

use crate::field::Field;
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;

use super::bundle::TransitionBundle;
use super::GeometryError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum JetDerivationSpec {
    Classical,
    Rank3 { i: u8 },
}

impl JetDerivationSpec {
    pub fn rank3(i: i64) -> Result<Self, GeometryError> {
        match i {
            0..=2 => Ok(JetDerivationSpec::Rank3 { i: i as u8 }),
            _ => Err(GeometryError::BadParameter(format!("i = {i} is not in {{0, 1, 2}}"))),
        }
    }

    pub fn ideal_rank(&self) -> usize {
        match self {
            JetDerivationSpec::Classical => 1,
            JetDerivationSpec::Rank3 { .. } => 2,
        }
    }

    /// Transition matrix of `I` from `U_0` to `U_1` coordinates.
    pub fn ideal_transition(&self, field: Field) -> Matrix<LaurentPoly> {
        let minus_t2 = LaurentPoly::monomial(field.from_i64(-1), 2);
        match self {
            JetDerivationSpec::Classical => Matrix::diagonal(&field, vec![minus_t2]),
            JetDerivationSpec::Rank3 { .. } => Matrix::diagonal(&field, vec![minus_t2, LaurentPoly::one(field)]),
        }
    }

    pub fn ideal(&self, field: Field) -> TransitionBundle {
        TransitionBundle::new(self.ideal_transition(field)).expect("monomial diagonal")
    }

    /// `d(t)` in `U_0` coordinates of `I`.
    pub fn derivation_of_t(&self, field: Field) -> Vec<LaurentPoly> {
        match self {
            JetDerivationSpec::Classical => vec![LaurentPoly::one(field)],
            JetDerivationSpec::Rank3 { i } => vec![LaurentPoly::one(field), LaurentPoly::t_pow(field, *i as i64)],
        }
    }

    /// `d_0(a) = a'(t) d(t)` in `U_0` coordinates.
    pub fn derive_u0(&self, a: &LaurentPoly) -> Vec<LaurentPoly> {
        let da = a.derivative();
        self.derivation_of_t(a.field()).iter().map(|c| c.mul(&da)).collect()
    }

    /// `d_1(b)` for `b` a Laurent polynomial in `s = 1/t`, in `U_1`
    /// coordinates `(ds)` or `(ds, f)`.
    pub fn derive_u1(&self, b: &LaurentPoly) -> Vec<LaurentPoly> {
        let db = b.derivative();
        match self {
            JetDerivationSpec::Classical => vec![db],
            JetDerivationSpec::Rank3 { i } => {
                let f = db.mul(&LaurentPoly::monomial(b.field().from_i64(-1), 2 - *i as i64));
                vec![db, f]
            }
        }
    }
}

impl fmt::Display for JetDerivationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetDerivationSpec::Classical => write!(f, "classical"),
            JetDerivationSpec::Rank3 { i } => write!(f, "rank3(i={i})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// `(a', t^i a')`, the rank-3 derivation on `U_0`.
pub fn rank3_derivation_d0(a: &LaurentPoly, i: i64) -> Result<Vec<LaurentPoly>, GeometryError> {
    Ok(JetDerivationSpec::rank3(i)?.derive_u0(a))
}

/// `(b', -s^{2-i} b')`, the rank-3 derivation on `U_1`; `b` is written in
/// the variable `s`.
pub fn rank3_derivation_d1(b: &LaurentPoly, i: i64) -> Result<Vec<LaurentPoly>, GeometryError> {
    Ok(JetDerivationSpec::rank3(i)?.derive_u1(b))
}

/// `[[-t^{l-2}, 0, -l t^{l-1}], [0, t^l, -l t^{i+l-1}], [0, 0, t^l]]`.
pub fn structure_matrix(field: Field, l: i64, i: i64) -> Result<Matrix<LaurentPoly>, GeometryError> {
    JetDerivationSpec::rank3(i)?;
    let m = |c: i64, e: i64| LaurentPoly::monomial(field.from_i64(c), e);
    let z = LaurentPoly::zero(field);
    Ok(Matrix::from_rows(
        &field,
        vec![
            vec![m(-1, l - 2), z.clone(), m(-l, l - 1)],
            vec![z.clone(), m(1, l), m(-l, i + l - 1)],
            vec![z.clone(), z, m(1, l)],
        ],
    )
    .expect("3x3"))
}

/// The Atiyah cocycle `C = d(t) ⊗ T^{-1} T'` as a map `E -> I ⊗ E` in `U_0`
/// frames; row `a * r + j`, column `k` holds `d(t)_a (T^{-1} T')_{jk}`.
pub fn atiyah_cocycle(e: &TransitionBundle, spec: JetDerivationSpec) -> Matrix<LaurentPoly> {
    let field = e.field();
    let log = e.inverse().mul(&e.transition().derivative());
    let dt = Matrix::from_rows(&field, spec.derivation_of_t(field).into_iter().map(|x| vec![x]).collect())
        .expect("column");
    dt.kronecker(&log)
}

/// Jet bundle of an arbitrary bundle `E`; coordinates are `I ⊗ E` first
/// (ideal-major), then `E`.
pub fn jet_bundle_of(e: &TransitionBundle, side: Side, spec: JetDerivationSpec) -> TransitionBundle {
    let field = e.field();
    let ie = spec.ideal(field).tensor(e);
    match side {
        Side::Right => ie.direct_sum(e),
        Side::Left => {
            let c = atiyah_cocycle(e, spec);
            let (n, r) = (ie.rank(), e.rank());
            let glue = ie.transition().mul(&c).neg();
            let glue_inv = c.mul(e.inverse());
            let block = |a: &Matrix<LaurentPoly>, x: &Matrix<LaurentPoly>, b: &Matrix<LaurentPoly>| {
                Matrix::from_fn(&field, n + r, n + r, |p, q| match (p < n, q < n) {
                    (true, true) => a.get(p, q).clone(),
                    (true, false) => x.get(p, q - n).clone(),
                    (false, false) => b.get(p - n, q - n).clone(),
                    (false, true) => LaurentPoly::zero(field),
                })
            };
            let t = block(ie.transition(), &glue, e.transition());
            let t_inv = block(ie.inverse(), &glue_inv, e.inverse());
            TransitionBundle::with_inverse(t, t_inv).expect("block triangular inverse")
        }
    }
}

/// Jet bundle of `O(d)`.
pub fn jet_bundle(field: Field, d: i64, side: Side, spec: JetDerivationSpec) -> TransitionBundle {
    jet_bundle_of(&TransitionBundle::line(field, d), side, spec)
}

/// The left rank-3 jet bundle of `O(l)` read off from the structure
/// matrix. That matrix expresses the `U_1` basis in terms of the `U_0`
/// basis, so coordinates transform by its inverse.
pub fn rank3_left_from_structure_matrix(field: Field, l: i64, i: i64) -> Result<TransitionBundle, GeometryError> {
    let s = structure_matrix(field, l, i)?;
    let t = s.laurent_inverse().map_err(|_| GeometryError::NotAUnit {
        det: s.det().to_string(),
    })?;
    TransitionBundle::with_inverse(t, s)
}
