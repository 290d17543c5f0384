//! Čech cohomology of bundles on `P^1` by exact linear algebra over `K`.
//!
//! `H^0(E(n))` is the space of `u ∈ K[t]^r` with `T_n u ∈ K[1/t]^r`, where
//! `T_n = t^{-n} T`. Multiplying the Čech complex by `T_n` identifies
//! `H^1(E(n))` with `(t K[t])^r / π_+(T_n K[t]^r)`, `π_+` keeping the
//! exponents `>= 1`; every exponent `>= W` lies in the image once
//! `W >= -minexp(T_n^{-1})`, so the quotient is computed on `[1, W-1]`.

use crate::field::Scalar;
use crate::laurent::LaurentPoly;
use crate::matrix::Matrix;

use super::bundle::TransitionBundle;

/// The coefficient map `u ↦ (coefficients of T u at exponents lo..=hi)`
/// on `u ∈ K[t]^r` of degree `<= max_deg`. Unknown `u_k t^j` sits in
/// column `k (max_deg + 1) + j`; row `(i, e)` is `i (hi - lo + 1) + e - lo`.
fn coefficient_map(t: &Matrix<LaurentPoly>, max_deg: i64, lo: i64, hi: i64) -> Matrix<Scalar> {
    let field = t.field();
    let width = (hi - lo + 1).max(0) as usize;
    let per = (max_deg + 1) as usize;
    let mut m = Matrix::zeros(&field, t.rows() * width, t.cols() * per);
    for i in 0..t.rows() {
        for k in 0..t.cols() {
            for (e, c) in t.get(i, k).terms() {
                for j in 0..=max_deg {
                    let x = e + j;
                    if x >= lo && x <= hi {
                        m.set(i * width + (x - lo) as usize, k * per + j as usize, c.clone());
                    }
                }
            }
        }
    }
    m
}

/// The degree bound `r * (max |exponent| of T, T^{-1}) + |n| + 1` used for
/// `H^0(E(n))`.
pub fn h0_degree_bound(e: &TransitionBundle, n: i64) -> i64 {
    e.rank() as i64 * e.exponent_bound() + n.abs() + 1
}

/// `dim H^0(E(n))` computed with sections of degree `<= max_deg`.
pub fn h0_at_bound(e: &TransitionBundle, n: i64, max_deg: i64) -> usize {
    let t = e.twist(n);
    let hi = t.transition().exponent_range().map_or(0, |(_, hi)| hi) + max_deg;
    let m = coefficient_map(t.transition(), max_deg, 1, hi);
    m.cols() - m.rank()
}

pub fn h0(e: &TransitionBundle, n: i64) -> usize {
    h0_at_bound(e, n, h0_degree_bound(e, n))
}

/// True when raising the degree bound by two does not change `h0`.
pub fn h0_stabilized(e: &TransitionBundle, n: i64) -> bool {
    let d = h0_degree_bound(e, n);
    h0_at_bound(e, n, d) == h0_at_bound(e, n, d + 2)
}

/// A basis of `H^0(E(n))` as polynomial vectors in the `U_0` frame.
pub fn global_sections(e: &TransitionBundle, n: i64) -> Vec<Vec<LaurentPoly>> {
    let d = h0_degree_bound(e, n);
    let t = e.twist(n);
    let hi = t.transition().exponent_range().map_or(0, |(_, hi)| hi) + d;
    let m = coefficient_map(t.transition(), d, 1, hi);
    let per = (d + 1) as usize;
    m.kernel()
        .into_iter()
        .map(|v| {
            (0..e.rank())
                .map(|k| {
                    LaurentPoly::from_terms(
                        e.field(),
                        (0..per).map(|j| (j as i64, v[k * per + j].clone())),
                    )
                })
                .collect()
        })
        .collect()
}

/// The truncation window `W = 2 * (max |exponent| of T, T^{-1}) + 2`.
pub fn cech_window(e: &TransitionBundle) -> i64 {
    2 * e.exponent_bound() + 2
}

fn lowest_exponent(t: &Matrix<LaurentPoly>) -> i64 {
    t.exponent_range().map_or(0, |(lo, _)| lo)
}

/// `dim H^1(E(n))` from the quotient on the exponent window `[1, w - 1]`.
pub fn h1_at_window(e: &TransitionBundle, n: i64, w: i64) -> usize {
    let t = e.twist(n);
    let w = w.max(1);
    let max_deg = w - 1 - lowest_exponent(t.transition()).min(0);
    let m = coefficient_map(t.transition(), max_deg, 1, w - 1);
    m.rows() - m.rank()
}

pub fn h1(e: &TransitionBundle, n: i64) -> usize {
    h1_at_window(e, n, cech_window(&e.twist(n)))
}

/// True when widening the window by two does not change `h1`.
pub fn h1_stabilized(e: &TransitionBundle, n: i64) -> bool {
    let w = cech_window(&e.twist(n));
    h1_at_window(e, n, w) == h1_at_window(e, n, w + 2)
}

/// A Čech 1-cochain `c` (a Laurent vector in the `U_0` frame) is a
/// coboundary when `c = η_0 - T^{-1} η_1` with `η_0 ∈ K[t]^r` and
/// `η_1 ∈ K[1/t]^r`. Returns `(η_0, η_1)`, or `None` when `c` represents a
/// nonzero class.
pub fn coboundary_witness(
    e: &TransitionBundle,
    c: &[LaurentPoly],
) -> Option<(Vec<LaurentPoly>, Vec<LaurentPoly>)> {
    assert_eq!(c.len(), e.rank(), "cochain length");
    let field = e.field();
    let t = e.transition();
    let w = cech_window(e);
    let max_deg = w - 1 - lowest_exponent(t).min(0);
    let m = coefficient_map(t, max_deg, 1, w - 1);
    let tc = t.mul_vec(c);
    let mut rhs = Vec::with_capacity(m.rows());
    for p in &tc {
        rhs.extend((1..w).map(|x| p.coeff(x)));
    }
    let sol = m.solve(&rhs)?;
    let per = (max_deg + 1) as usize;
    let u: Vec<LaurentPoly> = (0..e.rank())
        .map(|k| LaurentPoly::from_terms(field, (0..per).map(|j| (j as i64, sol[k * per + j].clone()))))
        .collect();
    // w = T (c - u) has no exponents in [1, w-1]
    let rest = t.mul_vec(&c.iter().zip(&u).map(|(a, b)| a.sub(b)).collect::<Vec<_>>());
    let high: Vec<LaurentPoly> = rest.iter().map(|p| p.truncate(w, i64::MAX)).collect();
    let low: Vec<LaurentPoly> = rest.iter().map(|p| p.truncate(i64::MIN, 0)).collect();
    let eta0: Vec<LaurentPoly> = u
        .iter()
        .zip(e.inverse().mul_vec(&high))
        .map(|(a, b)| a.add(&b))
        .collect();
    let eta1: Vec<LaurentPoly> = low.iter().map(LaurentPoly::neg).collect();
    Some((eta0, eta1))
}

/// Checks `c = η_0 - T^{-1} η_1` with `η_0` polynomial in `t` and `η_1`
/// polynomial in `1/t`.
pub fn verify_coboundary(
    e: &TransitionBundle,
    c: &[LaurentPoly],
    eta0: &[LaurentPoly],
    eta1: &[LaurentPoly],
) -> bool {
    if eta0.len() != e.rank() || eta1.len() != e.rank() {
        return false;
    }
    let shape = eta0.iter().all(LaurentPoly::is_polynomial)
        && eta1.iter().all(LaurentPoly::is_polynomial_in_inverse);
    let back = e.inverse().mul_vec(eta1);
    shape && c.iter().zip(eta0).zip(&back).all(|((c, a), b)| c == &a.sub(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    const Q: Field = Field::Rational;

    fn line(d: i64) -> TransitionBundle {
        TransitionBundle::line(Q, d)
    }

    #[test]
    fn h0_of_lines() {
        assert_eq!(h0(&line(3), 0), 4);
        assert_eq!(h0(&line(-1), 0), 0);
        assert_eq!(h0(&line(0), 0), 1);
        assert_eq!(h0(&line(0), 2), 3);
        assert_eq!(h0(&TransitionBundle::split(Q, &[1, 3]), 0), 6);
    }

    #[test]
    fn h1_of_lines() {
        assert_eq!(h1(&line(-2), 0), 1);
        assert_eq!(h1(&line(0), 0), 0);
        assert_eq!(h1(&line(-5), 0), 4);
        assert_eq!(h1(&line(4), 0), 0);
        assert_eq!(h1(&line(0), -3), 2);
        for d in -7..5 {
            let expected = if d <= -2 { (-d - 1) as usize } else { 0 };
            assert_eq!(h1(&line(d), 0), expected, "O({d})");
            assert!(h1_stabilized(&line(d), 0));
        }
    }

    #[test]
    fn sections_are_sections() {
        let e = TransitionBundle::split(Q, &[2, 0]);
        let s = global_sections(&e, 0);
        assert_eq!(s.len(), 4);
        for u in &s {
            assert!(u.iter().all(LaurentPoly::is_polynomial));
            assert!(e.transition().mul_vec(u).iter().all(LaurentPoly::is_polynomial_in_inverse));
        }
    }

    #[test]
    fn coboundaries() {
        // on O(-2), t^{-1} spans H^1 while t^{-2}, t^{-3} are coboundaries
        let e = line(-2);
        let c = vec![LaurentPoly::t_pow(Q, -1)];
        assert!(coboundary_witness(&e, &c).is_none());
        for k in [-3, -2, 0, 1, 4] {
            let c = vec![LaurentPoly::from_int_terms(Q, &[(k, 5), (2, -1)])];
            let (a, b) = coboundary_witness(&e, &c).unwrap();
            assert!(verify_coboundary(&e, &c, &a, &b), "t^{k}");
        }
    }
}
