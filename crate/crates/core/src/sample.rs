//! Seeded random generators for exact objects. The library uses them to
//! probe identities on sample inputs (e.g. the Leibniz rule of a candidate
//! connection); tests use them to drive property suites.

use rand::Rng;

use crate::field::{Field, Scalar};
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;
use crate::multipoly::{MultiPoly, PolyRing};

/// A small random scalar: `a/b` with `|a| <= 9`, `1 <= b <= 4` over `Q`, a
/// uniform residue over `F_p`.
pub fn scalar<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    match field {
        Field::Rational => {
            let num: i64 = rng.gen_range(-9..=9);
            let den: i64 = rng.gen_range(1..=4);
            field.fraction(&num.into(), &den.into()).unwrap()
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p.min(i64::MAX as u64)) as i64),
    }
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, field: Field) -> Scalar {
    loop {
        let c = scalar(rng, field);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random Laurent polynomial with exponents in `lo..=hi`; each exponent is
/// present with probability one half.
pub fn laurent<R: Rng>(rng: &mut R, field: Field, lo: i64, hi: i64) -> LaurentPoly {
    let mut terms = Vec::new();
    for e in lo..=hi {
        if rng.gen_bool(0.5) {
            terms.push((e, scalar(rng, field)));
        }
    }
    LaurentPoly::from_terms(field, terms)
}

/// Random element of `K[t]` of degree at most `max_deg`.
pub fn poly<R: Rng>(rng: &mut R, field: Field, max_deg: i64) -> LaurentPoly {
    laurent(rng, field, 0, max_deg)
}

pub fn poly_vec<R: Rng>(rng: &mut R, field: Field, len: usize, max_deg: i64) -> Vec<LaurentPoly> {
    (0..len).map(|_| poly(rng, field, max_deg)).collect()
}

pub fn multipoly<R: Rng>(rng: &mut R, ring: PolyRing, max_deg: u32) -> MultiPoly {
    let mut p = ring.zero();
    for _ in 0..rng.gen_range(0..=5) {
        let mut exps = vec![0u32; ring.nvars];
        let mut budget = rng.gen_range(0..=max_deg);
        for e in exps.iter_mut() {
            let k = rng.gen_range(0..=budget);
            *e = k;
            budget -= k;
        }
        p = p.add(&ring.monomial(scalar(rng, ring.field), exps));
    }
    p
}

/// A random element of `GL_r(K[t])` together with its exact inverse, built
/// as a product of `steps` elementary operations `row_i += c t^k row_j`
/// (`0 <= k <= max_exp`) and invertible diagonal scalings.
pub fn unimodular<R: Rng>(
    rng: &mut R,
    field: Field,
    r: usize,
    max_exp: i64,
    steps: usize,
) -> (Matrix<LaurentPoly>, Matrix<LaurentPoly>) {
    let mut m = Matrix::<LaurentPoly>::identity(&field, r);
    let mut inv = m.clone();
    let diag: Vec<Scalar> = (0..r).map(|_| nonzero_scalar(rng, field)).collect();
    let d = Matrix::diagonal(&field, diag.iter().map(|c| LaurentPoly::constant(c.clone())).collect());
    let d_inv = Matrix::diagonal(
        &field,
        diag.iter().map(|c| LaurentPoly::constant(c.inv().unwrap())).collect(),
    );
    m = m.mul(&d);
    inv = d_inv.mul(&inv);
    if r < 2 {
        return (m, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..r);
        let mut j = rng.gen_range(0..r - 1);
        if j >= i {
            j += 1;
        }
        let c = nonzero_scalar(rng, field);
        let k = rng.gen_range(0..=max_exp);
        let mut e = Matrix::<LaurentPoly>::identity(&field, r);
        e.set(i, j, LaurentPoly::monomial(c.clone(), k));
        let mut e_inv = Matrix::<LaurentPoly>::identity(&field, r);
        e_inv.set(i, j, LaurentPoly::monomial(c.neg(), k));
        m = m.mul(&e);
        inv = e_inv.mul(&inv);
    }
    (m, inv)
}

/// Like [`unimodular`] but in `GL_r(K[1/t])`.
pub fn unimodular_inverse_t<R: Rng>(
    rng: &mut R,
    field: Field,
    r: usize,
    max_exp: i64,
    steps: usize,
) -> (Matrix<LaurentPoly>, Matrix<LaurentPoly>) {
    let (m, inv) = unimodular(rng, field, r, max_exp, steps);
    (m.invert_variable(), inv.invert_variable())
}
