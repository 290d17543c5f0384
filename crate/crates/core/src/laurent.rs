//! Univariate Laurent polynomials `K[t, 1/t]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Field, Scalar};
use crate::ring::RingElem;

/// A Laurent polynomial with exact coefficients.
///
/// Canonical form: terms sorted by exponent, no zero coefficients, so `==`
/// is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: Field,
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero(field: Field) -> Self {
        LaurentPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::monomial(field.one(), 0)
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: Scalar, exp: i64) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { field, terms }
    }

    /// `t^exp` with coefficient one.
    pub fn t_pow(field: Field, exp: i64) -> Self {
        Self::monomial(field.one(), exp)
    }

    /// Builds from `(exponent, integer coefficient)` pairs, summing repeats.
    pub fn from_int_terms(field: Field, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(field, terms.iter().map(|(e, c)| (*e, field.from_i64(*c))))
    }

    pub fn from_terms(field: Field, terms: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        let mut p = Self::zero(field);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&exp) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, sum);
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is non-negative (an element of `K[t]`).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// True when every exponent is non-positive (an element of `K[1/t]`).
    pub fn is_polynomial_in_inverse(&self) -> bool {
        self.max_exp().is_none_or(|e| e <= 0)
    }

    /// `Some((c, k))` when the polynomial is a single term `c t^k`, i.e. a
    /// unit of `K[t, 1/t]`.
    pub fn as_unit(&self) -> Option<(Scalar, i64)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *e))
        } else {
            None
        }
    }

    pub fn inv_unit(&self) -> Option<LaurentPoly> {
        let (c, k) = self.as_unit()?;
        Some(Self::monomial(c.inv()?, -k))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_field(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_field(other);
        let mut out = Self::zero(self.field);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(e, a)| (*e, a.mul(c))))
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal derivative `d/dt`; the field characteristic applies.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.field, self.terms.iter().map(|(e, c)| (e - 1, c.scale_int(*e))))
    }

    /// The substitution `t -> 1/t`.
    pub fn invert_variable(&self) -> Self {
        LaurentPoly {
            field: self.field,
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Part with exponents in `range` (inclusive bounds).
    pub fn truncate(&self, lo: i64, hi: i64) -> Self {
        LaurentPoly {
            field: self.field,
            terms: self.terms.range(lo..=hi).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }

    /// Exact division; `None` if `divisor` is zero or does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.check_field(divisor);
        let (dmin, dmax) = (divisor.min_exp()?, divisor.max_exp()?);
        if self.is_zero() {
            return Some(self.clone());
        }
        let lead_inv = divisor.coeff(dmax).inv()?;
        // Work with honest polynomials: strip the lowest powers of t.
        let mut rem = self.shift(-self.min_exp().unwrap());
        let div = divisor.shift(-dmin);
        let ddeg = dmax - dmin;
        let mut quot = Self::zero(self.field);
        while let Some(rdeg) = rem.max_exp() {
            if rdeg < ddeg {
                return None;
            }
            let c = rem.coeff(rdeg).mul(&lead_inv);
            let k = rdeg - ddeg;
            quot.add_term(k, &c);
            rem = rem.sub(&div.shift(k).scale(&c));
        }
        Some(quot.shift(self.min_exp().unwrap() - dmin))
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "Laurent polynomial arithmetic across fields"
        );
    }

    /// Renders with the given variable name, e.g. `3/2*t - t^2 + 1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => None,
                1 => Some(var.to_string()),
                k => Some(format!("{var}^{k}")),
            };
            match mono {
                None => out.push_str(&mag.to_string()),
                Some(m) if mag.is_one() => out.push_str(&m),
                Some(m) => out.push_str(&format!("{mag}*{m}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl RingElem for LaurentPoly {
    type Ctx = Field;

    fn ctx(&self) -> Field {
        self.field
    }
    fn zero(ctx: &Field) -> Self {
        LaurentPoly::zero(*ctx)
    }
    fn one(ctx: &Field) -> Self {
        LaurentPoly::one(*ctx)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
    fn scale(&self, c: &Scalar) -> Self {
        LaurentPoly::scale(self, c)
    }
    fn field_of(ctx: &Field) -> Field {
        *ctx
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                LaurentPoly::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}
