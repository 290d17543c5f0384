//! Polynomials in `x1..xn` over an exact field.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{Field, Scalar};
use crate::ring::RingElem;

/// The ring `K[x1, ..., xn]` a [`MultiPoly`] lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: Field,
    pub nvars: usize,
}

impl PolyRing {
    pub fn new(field: Field, nvars: usize) -> Self {
        PolyRing { field, nvars }
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly {
            ring: *self,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> MultiPoly {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> MultiPoly {
        self.monomial(c, vec![0; self.nvars])
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(&self, i: usize) -> MultiPoly {
        let mut exps = vec![0; self.nvars];
        exps[i] = 1;
        self.monomial(self.field.one(), exps)
    }

    pub fn monomial(&self, c: Scalar, exps: Vec<u32>) -> MultiPoly {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        let mut p = self.zero();
        p.add_term(exps, &c);
        p
    }

    pub fn from_int_terms(&self, terms: &[(Vec<u32>, i64)]) -> MultiPoly {
        let mut p = self.zero();
        for (e, c) in terms {
            assert_eq!(e.len(), self.nvars, "exponent vector length");
            p.add_term(e.clone(), &self.field.from_i64(*c));
        }
        p
    }
}

/// Canonical sparse representation: exponent vectors in lexicographic order,
/// no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    fn add_term(&mut self, exps: Vec<u32>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&exps) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "polynomials from different rings");
        let mut out = self.ring.zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.ring.zero();
        for (e, a) in &self.terms {
            out.add_term(e.clone(), &a.mul(c));
        }
        out
    }

    /// Partial derivative with respect to the zero-based variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = self.ring.zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, &c.scale_int(e[i] as i64));
        }
        out
    }

    /// The universal derivation `d f = sum_i (df/dx_i) dx_i`, as the
    /// coordinate vector over `dx_1..dx_n`.
    pub fn differential(&self) -> Vec<MultiPoly> {
        (0..self.ring.nvars).map(|i| self.partial(i)).collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(v, k)| {
                    if *k == 1 {
                        format!("x{}", v + 1)
                    } else {
                        format!("x{}^{}", v + 1, k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl RingElem for MultiPoly {
    type Ctx = PolyRing;

    fn ctx(&self) -> PolyRing {
        self.ring
    }
    fn zero(ctx: &PolyRing) -> Self {
        ctx.zero()
    }
    fn one(ctx: &PolyRing) -> Self {
        ctx.one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn scale(&self, c: &Scalar) -> Self {
        MultiPoly::scale(self, c)
    }
    fn field_of(ctx: &PolyRing) -> Field {
        ctx.field
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partials_and_display() {
        let r = PolyRing::new(Field::Rational, 2);
        // 3 x1^2 x2 - x2 + 5
        let f = r.from_int_terms(&[(vec![2, 1], 3), (vec![0, 1], -1), (vec![0, 0], 5)]);
        assert_eq!(f.partial(0), r.from_int_terms(&[(vec![1, 1], 6)]));
        assert_eq!(f.partial(1), r.from_int_terms(&[(vec![2, 0], 3), (vec![0, 0], -1)]));
        assert_eq!(f.total_degree(), Some(3));
        assert_eq!(f.to_string(), "5 - x2 + 3*x1^2*x2");
    }

    #[test]
    fn product_rule_on_example() {
        let r = PolyRing::new(Field::prime(5).unwrap(), 2);
        let x = r.var(0);
        let y = r.var(1);
        let f = x.mul(&x).add(&y);
        let g = x.mul(&y).sub(&r.one());
        let lhs = f.mul(&g).partial(0);
        let rhs = f.partial(0).mul(&g).add(&f.mul(&g.partial(0)));
        assert_eq!(lhs, rhs);
    }
}
