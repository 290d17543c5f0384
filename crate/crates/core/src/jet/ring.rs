use crate::field::Field;
use crate::laurent::LaurentPoly;

use super::bimodule::{check_field, vec_add, vec_scale, zero_vec, Bimodule};
use super::JetError;

/// Which ring map `B -> I ⊕ B` makes the jet ring a `B`-module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    /// `t(b) = (0, b)`
    T,
    /// `s(b) = (d(b), b)`
    S,
}

/// An element `(x, a)` of the jet ring `I ⊕ B`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetElement {
    pub x: Vec<LaurentPoly>,
    pub a: LaurentPoly,
}

/// An element `(z, f)` of the jet module `I ⊗ E ⊕ E` for `E` free of rank
/// `e`. `z` has `r * e` coordinates ordered basis-of-`I`-major: the
/// coefficient of `m_i ⊗ e_j` sits at `i * e + j`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetModuleElement {
    pub z: Vec<LaurentPoly>,
    pub f: Vec<LaurentPoly>,
}

impl JetModuleElement {
    pub fn zero(field: Field, i_rank: usize, e_rank: usize) -> Self {
        JetModuleElement {
            z: zero_vec(field, i_rank * e_rank),
            f: zero_vec(field, e_rank),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        JetModuleElement {
            z: vec_add(&self.z, &other.z),
            f: vec_add(&self.f, &other.f),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        JetModuleElement {
            z: super::bimodule::vec_sub(&self.z, &other.z),
            f: super::bimodule::vec_sub(&self.f, &other.f),
        }
    }

    pub fn is_zero(&self) -> bool {
        super::bimodule::vec_is_zero(&self.z) && super::bimodule::vec_is_zero(&self.f)
    }
}

/// The square-zero extension ring `I ⊕ B` with product
/// `(x, a)(y, b) = (xb + ay, ab)`, together with a derivation `d: B -> I`
/// fixed by its value on `t` and extended by the Leibniz rule.
#[derive(Debug, Clone, PartialEq)]
pub struct JetRing {
    bimodule: Bimodule,
    d_t: Vec<LaurentPoly>,
}

impl JetRing {
    pub fn new(bimodule: Bimodule, d_t: Vec<LaurentPoly>) -> Result<Self, JetError> {
        bimodule.check_vec(&d_t, "d(t)")?;
        Ok(JetRing { bimodule, d_t })
    }

    /// `I = Ω = B dt` with the universal derivation `d(t) = dt`.
    pub fn kahler(field: Field) -> Self {
        Self::new(Bimodule::abelianized(field, 1), vec![LaurentPoly::one(field)])
            .expect("rank one data")
    }

    /// Same bimodule, derivation identically zero.
    pub fn with_zero_derivation(bimodule: Bimodule) -> Self {
        let d_t = zero_vec(bimodule.field(), bimodule.rank());
        JetRing { bimodule, d_t }
    }

    pub fn field(&self) -> Field {
        self.bimodule.field()
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn rank(&self) -> usize {
        self.bimodule.rank()
    }

    pub fn d_t(&self) -> &[LaurentPoly] {
        &self.d_t
    }

    fn check_scalar(&self, a: &LaurentPoly, what: &str) -> Result<(), JetError> {
        check_field(self.field(), std::slice::from_ref(a), what)
    }

    fn check_elem(&self, u: &JetElement) -> Result<(), JetError> {
        self.bimodule.check_vec(&u.x, "jet element")?;
        self.check_scalar(&u.a, "jet element")
    }

    fn check_module_elem(&self, m: &JetModuleElement) -> Result<usize, JetError> {
        let e = m.f.len();
        if m.z.len() != e * self.rank() {
            return Err(JetError::MixedContext(format!(
                "module element has {} tensor coordinates, expected {} x {}",
                m.z.len(),
                self.rank(),
                e
            )));
        }
        check_field(self.field(), &m.z, "module element")?;
        check_field(self.field(), &m.f, "module element")?;
        Ok(e)
    }

    /// `d(a)` for `a` in `B` (or `B[1/t]` when the left action is invertible).
    pub fn derive(&self, a: &LaurentPoly) -> Result<Vec<LaurentPoly>, JetError> {
        self.check_scalar(a, "derivation argument")?;
        let field = self.field();
        let mut out = zero_vec(field, self.rank());
        let (Some(lo), Some(hi)) = (a.min_exp(), a.max_exp()) else {
            return Ok(out);
        };
        // d(t^n) = t * d(t^{n-1}) + d(t) * t^{n-1}
        let mut d_pow = zero_vec(field, self.rank());
        for n in 1..=hi.max(0) {
            d_pow = vec_add(
                &self.bimodule.left_action().mul_vec(&d_pow),
                &vec_scale(&self.d_t, &LaurentPoly::t_pow(field, n - 1)),
            );
            if n >= lo {
                out = vec_add(&out, &vec_scale(&d_pow, &LaurentPoly::constant(a.coeff(n))));
            }
        }
        if lo < 0 {
            // 0 = d(t * t^{-1}) = t * d(t^{-1}) + d(t) t^{-1}
            let t_inv = LaurentPoly::t_pow(field, -1);
            let d_inv = self.bimodule.left_mul_t_inverse(&vec_scale(&self.d_t, &t_inv.neg()))?;
            let mut d_pow = d_inv.clone();
            for m in 1..=-lo {
                if m > 1 {
                    // d(t^{-m}) = t^{-1} d(t^{-(m-1)}) + d(t^{-1}) t^{-(m-1)}
                    d_pow = vec_add(
                        &self.bimodule.left_mul_t_inverse(&d_pow)?,
                        &vec_scale(&d_inv, &LaurentPoly::t_pow(field, -(m - 1))),
                    );
                }
                if -m <= hi {
                    out = vec_add(&out, &vec_scale(&d_pow, &LaurentPoly::constant(a.coeff(-m))));
                }
            }
        }
        Ok(out)
    }

    pub fn element(&self, x: Vec<LaurentPoly>, a: LaurentPoly) -> Result<JetElement, JetError> {
        let u = JetElement { x, a };
        self.check_elem(&u)?;
        Ok(u)
    }

    pub fn one(&self) -> JetElement {
        JetElement {
            x: zero_vec(self.field(), self.rank()),
            a: LaurentPoly::one(self.field()),
        }
    }

    pub fn zero(&self) -> JetElement {
        JetElement {
            x: zero_vec(self.field(), self.rank()),
            a: LaurentPoly::zero(self.field()),
        }
    }

    pub fn add(&self, u: &JetElement, v: &JetElement) -> Result<JetElement, JetError> {
        self.check_elem(u)?;
        self.check_elem(v)?;
        Ok(JetElement {
            x: vec_add(&u.x, &v.x),
            a: u.a.add(&v.a),
        })
    }

    /// `(x, a)(y, b) = (xb + ay, ab)`.
    pub fn mul(&self, u: &JetElement, v: &JetElement) -> Result<JetElement, JetError> {
        self.check_elem(u)?;
        self.check_elem(v)?;
        let xb = self.bimodule.right_mul(&u.x, &v.a);
        let ay = self.bimodule.left_mul(&u.a, &v.x)?;
        Ok(JetElement {
            x: vec_add(&xb, &ay),
            a: u.a.mul(&v.a),
        })
    }

    /// `t(b) = (0, b)`.
    pub fn map_t(&self, b: &LaurentPoly) -> Result<JetElement, JetError> {
        self.check_scalar(b, "t-map argument")?;
        Ok(JetElement {
            x: zero_vec(self.field(), self.rank()),
            a: b.clone(),
        })
    }

    /// `s(b) = (d(b), b)`.
    pub fn map_s(&self, b: &LaurentPoly) -> Result<JetElement, JetError> {
        Ok(JetElement {
            x: self.derive(b)?,
            a: b.clone(),
        })
    }

    /// `B` acting on the jet ring through `t` or `s`: `u t(b)` or `u s(b)`.
    pub fn scalar_right(&self, u: &JetElement, b: &LaurentPoly, via: Structure) -> Result<JetElement, JetError> {
        self.mul(u, &self.structure_map(b, via)?)
    }

    /// `t(b) u` or `s(b) u`.
    pub fn scalar_left(&self, b: &LaurentPoly, u: &JetElement, via: Structure) -> Result<JetElement, JetError> {
        self.mul(&self.structure_map(b, via)?, u)
    }

    fn structure_map(&self, b: &LaurentPoly, via: Structure) -> Result<JetElement, JetError> {
        match via {
            Structure::T => self.map_t(b),
            Structure::S => self.map_s(b),
        }
    }

    /// `d_I(b) = (d(b), 0)`.
    pub fn d_i(&self, b: &LaurentPoly) -> Result<JetElement, JetError> {
        Ok(JetElement {
            x: self.derive(b)?,
            a: LaurentPoly::zero(self.field()),
        })
    }

    /// `d_Pr(x, a) = x + d(a)`.
    pub fn d_pr(&self, u: &JetElement) -> Result<Vec<LaurentPoly>, JetError> {
        self.check_elem(u)?;
        Ok(vec_add(&u.x, &self.derive(&u.a)?))
    }

    /// The action of the jet ring on `I` viewed as the ideal `I ⊕ 0`:
    /// `(y, b)(x, 0) = (bx, 0)`.
    pub fn act_on_ideal_left(&self, u: &JetElement, x: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, JetError> {
        self.check_elem(u)?;
        self.bimodule.left_mul(&u.a, x)
    }

    /// `(x, 0)(y, b) = (xb, 0)`.
    pub fn act_on_ideal_right(&self, x: &[LaurentPoly], u: &JetElement) -> Result<Vec<LaurentPoly>, JetError> {
        self.check_elem(u)?;
        Ok(self.bimodule.right_mul(x, &u.a))
    }

    /// `x ⊗ f` in `I ⊗ E`, `E` free with coordinates `f`.
    pub fn tensor(&self, x: &[LaurentPoly], f: &[LaurentPoly]) -> Vec<LaurentPoly> {
        x.iter().flat_map(|xi| f.iter().map(move |fj| xi.mul(fj))).collect()
    }

    /// Left multiplication by `a` on `I ⊗ E`, acting through the `I` factor.
    pub fn tensor_left_mul(&self, a: &LaurentPoly, z: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, JetError> {
        let r = self.rank();
        let e = z.len() / r;
        let mut out = zero_vec(self.field(), z.len());
        for j in 0..e {
            let column: Vec<LaurentPoly> = (0..r).map(|i| z[i * e + j].clone()).collect();
            let moved = self.bimodule.left_mul(a, &column)?;
            for (i, v) in moved.into_iter().enumerate() {
                out[i * e + j] = v;
            }
        }
        Ok(out)
    }

    /// Right multiplication by `a` on `I ⊗ E`: `(x ⊗ e) a = x ⊗ (ea)`.
    pub fn tensor_right_mul(&self, z: &[LaurentPoly], a: &LaurentPoly) -> Vec<LaurentPoly> {
        vec_scale(z, a)
    }

    /// Left action `(x, a)(z, f) = (x ⊗ f + a z + d(a) ⊗ f, a f)`.
    pub fn left_act(&self, u: &JetElement, m: &JetModuleElement) -> Result<JetModuleElement, JetError> {
        self.check_elem(u)?;
        self.check_module_elem(m)?;
        let x_f = self.tensor(&u.x, &m.f);
        let az = self.tensor_left_mul(&u.a, &m.z)?;
        let da_f = self.tensor(&self.derive(&u.a)?, &m.f);
        Ok(JetModuleElement {
            z: vec_add(&vec_add(&x_f, &az), &da_f),
            f: vec_scale(&m.f, &u.a),
        })
    }

    /// Right action `(z, f)(x, a) = (z a, f a)`.
    pub fn right_act(&self, m: &JetModuleElement, u: &JetElement) -> Result<JetModuleElement, JetError> {
        self.check_elem(u)?;
        self.check_module_elem(m)?;
        Ok(JetModuleElement {
            z: self.tensor_right_mul(&m.z, &u.a),
            f: vec_scale(&m.f, &u.a),
        })
    }

    /// The universal first-order operator `d_E(e) = (0, 1) ⊗ e = (0, e)`.
    pub fn universal_diff_op(&self, e: &[LaurentPoly]) -> Result<JetModuleElement, JetError> {
        check_field(self.field(), e, "E-vector")?;
        Ok(JetModuleElement {
            z: zero_vec(self.field(), self.rank() * e.len()),
            f: e.to_vec(),
        })
    }

    /// `[d_E, a](e) = d_E(a e) - a d_E(e)`, where `a` acts through `t(a)`.
    pub fn commutator_with_scalar(
        &self,
        a: &LaurentPoly,
        e: &[LaurentPoly],
    ) -> Result<JetModuleElement, JetError> {
        let ae = vec_scale(e, a);
        let lhs = self.universal_diff_op(&ae)?;
        let rhs = self.left_act(&self.map_t(a)?, &self.universal_diff_op(e)?)?;
        Ok(lhs.sub(&rhs))
    }

    /// `(x_1, .., x_e)` -> the I⊗E vector `d(f)` with `d` applied to each coordinate.
    pub fn derive_vec(&self, f: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, JetError> {
        let r = self.rank();
        let e = f.len();
        let mut out = zero_vec(self.field(), r * e);
        for (j, fj) in f.iter().enumerate() {
            for (i, v) in self.derive(fj)?.into_iter().enumerate() {
                out[i * e + j] = v;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    const Q: Field = Field::Rational;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(Q, terms)
    }

    #[test]
    fn jet_mul_examples() {
        let ring = JetRing::kahler(Q);
        // (dt, t) (t dt, t^2) = (2 t^2 dt, t^3)
        let u = ring.element(vec![lp(&[(0, 1)])], lp(&[(1, 1)])).unwrap();
        let v = ring.element(vec![lp(&[(1, 1)])], lp(&[(2, 1)])).unwrap();
        let uv = ring.mul(&u, &v).unwrap();
        assert_eq!(uv, ring.element(vec![lp(&[(2, 2)])], lp(&[(3, 1)])).unwrap());
        assert_eq!(ring.mul(&ring.one(), &v).unwrap(), v);
        let x = ring.element(vec![lp(&[(0, 1)])], lp(&[])).unwrap();
        let y = ring.element(vec![lp(&[(4, -3)])], lp(&[])).unwrap();
        assert_eq!(ring.mul(&x, &y).unwrap(), ring.zero());
    }

    #[test]
    fn both_module_structures() {
        let ring = JetRing::kahler(Q);
        let u = ring.element(vec![lp(&[(1, 2)])], lp(&[(0, 1), (2, 1)])).unwrap();
        let b = lp(&[(3, 1)]);
        // (x, a) s(b) = (xb + a d(b), ab)
        let expected = ring
            .element(vec![lp(&[(4, 2), (2, 3), (4, 3)])], lp(&[(3, 1), (5, 1)]))
            .unwrap();
        assert_eq!(ring.scalar_right(&u, &b, Structure::S).unwrap(), expected);
        // t(b) (x, a) = (bx, ba)
        let expected = ring.element(vec![lp(&[(4, 2)])], lp(&[(3, 1), (5, 1)])).unwrap();
        assert_eq!(ring.scalar_left(&b, &u, Structure::T).unwrap(), expected);
    }

    #[test]
    fn s_t_and_d_maps() {
        let ring = JetRing::kahler(Q);
        let t3 = lp(&[(3, 1)]);
        assert_eq!(ring.map_t(&t3).unwrap(), JetElement { x: vec![lp(&[])], a: t3.clone() });
        assert_eq!(ring.map_s(&t3).unwrap(), JetElement { x: vec![lp(&[(2, 3)])], a: t3.clone() });
        let diff = ring.map_s(&t3).unwrap();
        let t = ring.map_t(&t3).unwrap();
        let s_minus_t = JetElement {
            x: vec_add(&diff.x, &t.x.iter().map(LaurentPoly::neg).collect::<Vec<_>>()),
            a: diff.a.sub(&t.a),
        };
        assert_eq!(s_minus_t, ring.d_i(&t3).unwrap());

        let d_pr = |x: &[(i64, i64)], a: &[(i64, i64)]| {
            ring.d_pr(&ring.element(vec![lp(x)], lp(a)).unwrap()).unwrap()
        };
        assert_eq!(d_pr(&[], &[(2, 1)]), vec![lp(&[(1, 2)])]);
        assert_eq!(d_pr(&[(0, 1)], &[]), vec![lp(&[(0, 1)])]);
        assert_eq!(d_pr(&[(0, 1)], &[(1, 1)]), vec![lp(&[(0, 2)])]);
    }

    #[test]
    fn module_action_examples() {
        let ring = JetRing::kahler(Q);
        let e = vec![lp(&[(0, 1)])];
        // (0, t)(0, e) = (dt ⊗ e, t e)
        let m = ring.universal_diff_op(&e).unwrap();
        let got = ring.left_act(&ring.map_t(&lp(&[(1, 1)])).unwrap(), &m).unwrap();
        assert_eq!(got, JetModuleElement { z: vec![lp(&[(0, 1)])], f: vec![lp(&[(1, 1)])] });

        // (x, 0)(z ⊗ e, f) = (x ⊗ f, 0)
        let m = JetModuleElement { z: vec![lp(&[(2, 5)])], f: vec![lp(&[(1, 1), (0, 2)])] };
        let x = ring.element(vec![lp(&[(0, 3)])], lp(&[])).unwrap();
        let got = ring.left_act(&x, &m).unwrap();
        assert_eq!(got, JetModuleElement { z: vec![lp(&[(1, 3), (0, 6)])], f: vec![lp(&[])] });
        assert_eq!(ring.left_act(&ring.one(), &m).unwrap(), m);

        // right actions
        assert_eq!(ring.right_act(&m, &x).unwrap(), JetModuleElement::zero(Q, 1, 1));
        let t = ring.map_t(&lp(&[(1, 1)])).unwrap();
        assert_eq!(
            ring.right_act(&m, &t).unwrap(),
            JetModuleElement { z: vec![lp(&[(3, 5)])], f: vec![lp(&[(2, 1), (1, 2)])] }
        );
        assert_eq!(ring.right_act(&m, &ring.one()).unwrap(), m);
    }

    #[test]
    fn commutator_of_universal_operator() {
        let ring = JetRing::kahler(Q);
        let e = vec![lp(&[(0, 1)])];
        let c = ring.commutator_with_scalar(&lp(&[(1, 1)]), &e).unwrap();
        // (-d(t) ⊗ e, 0)
        assert_eq!(c, JetModuleElement { z: vec![lp(&[(0, -1)])], f: vec![lp(&[])] });
    }

    #[test]
    fn derivation_on_inverse_powers() {
        let ring = JetRing::kahler(Q);
        assert_eq!(ring.derive(&lp(&[(-1, 1)])).unwrap(), vec![lp(&[(-2, -1)])]);
        assert_eq!(ring.derive(&lp(&[(-3, 2), (4, 1)])).unwrap(), vec![lp(&[(-4, -6), (3, 4)])]);
        assert!(ring.derive(&lp(&[(0, 7)])).unwrap()[0].is_zero());

        // non-invertible left action: t acts by [[t, 1], [0, 0]]
        let lam = Matrix::from_int_terms(Q, &[&[&[(1, 1)], &[(0, 1)]], &[&[], &[]]]);
        let ring = JetRing::new(Bimodule::new(lam).unwrap(), vec![lp(&[(0, 1)]), lp(&[])]).unwrap();
        assert!(ring.derive(&lp(&[(3, 1)])).is_ok());
        assert_eq!(ring.derive(&lp(&[(-1, 1)])), Err(JetError::NonInvertibleLeftAction));
    }

    #[test]
    fn mixed_context_is_rejected() {
        let ring = JetRing::kahler(Q);
        let bad = JetElement { x: vec![lp(&[]), lp(&[])], a: lp(&[]) };
        assert!(matches!(ring.mul(&ring.one(), &bad), Err(JetError::MixedContext(_))));
        let f5 = Field::prime(5).unwrap();
        let other = JetElement { x: vec![LaurentPoly::zero(f5)], a: LaurentPoly::one(f5) };
        assert!(matches!(ring.mul(&other, &ring.one()), Err(JetError::MixedContext(_))));
    }
}
