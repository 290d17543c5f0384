//! Identity checks shared by the property suites and the acceptance run.
//! Each check returns `Err` with a readable description of the first
//! failing identity.
#![allow(dead_code)]

use rand::Rng;

use jetline::jet::{Bimodule, JetElement, JetModuleElement, JetRing, Structure};
use jetline::matrix::Matrix;
use jetline::multipoly::MultiPoly;
use jetline::p1::{
    h0, h0_stabilized, h1, splitting_type, splitting_type_via_h1, TransitionBundle,
};
use jetline::projective::{dual_basis, grassmann_connection, tensor_is_zero, Idempotent};
use jetline::{sample, Field, LaurentPoly};

pub const Q: Field = Field::Rational;
pub const F5: Field = Field::Prime(5);

macro_rules! ensure_eq {
    ($lhs:expr, $rhs:expr, $($what:tt)+) => {{
        let (l, r) = (&$lhs, &$rhs);
        if l != r {
            return Err(format!("{}: {:?} != {:?}", format!($($what)+), l, r));
        }
    }};
}

pub fn jet_err(e: jetline::jet::JetError) -> String {
    e.to_string()
}

// ---- random data -------------------------------------------------------

/// A rank-2 bimodule: either abelianized or with a random left action of
/// degree <= 1 (not necessarily invertible).
pub fn bimodule<R: Rng>(rng: &mut R, field: Field, abelianized: bool) -> Bimodule {
    if abelianized {
        return Bimodule::abelianized(field, 2);
    }
    let entries = (0..4).map(|_| sample::poly(rng, field, 1)).collect::<Vec<_>>();
    let lam = Matrix::from_rows(&field, vec![entries[..2].to_vec(), entries[2..].to_vec()]).unwrap();
    Bimodule::new(lam).unwrap()
}

pub fn jet_ring<R: Rng>(rng: &mut R, field: Field, abelianized: bool) -> JetRing {
    let bm = bimodule(rng, field, abelianized);
    let d_t = sample::poly_vec(rng, field, 2, 2);
    JetRing::new(bm, d_t).unwrap()
}

pub fn jet_element<R: Rng>(rng: &mut R, ring: &JetRing, max_deg: i64) -> JetElement {
    let f = ring.field();
    ring.element(sample::poly_vec(rng, f, ring.rank(), max_deg), sample::poly(rng, f, max_deg))
        .unwrap()
}

pub fn module_element<R: Rng>(rng: &mut R, ring: &JetRing, e_rank: usize, max_deg: i64) -> JetModuleElement {
    let f = ring.field();
    JetModuleElement {
        z: sample::poly_vec(rng, f, ring.rank() * e_rank, max_deg),
        f: sample::poly_vec(rng, f, e_rank, max_deg),
    }
}

/// `diag(t^{-a_i})` conjugated by random unimodular frame changes.
pub fn random_bundle<R: Rng>(rng: &mut R, field: Field, max_rank: usize) -> TransitionBundle {
    let r = rng.gen_range(1..=max_rank);
    let degrees: Vec<i64> = (0..r).map(|_| rng.gen_range(-3..=3)).collect();
    let base = TransitionBundle::split(field, &degrees);
    let (a, _) = sample::unimodular_inverse_t(rng, field, r, 2, 2);
    let (b, _) = sample::unimodular(rng, field, r, 2, 2);
    base.change_frames(&a, &b).unwrap()
}

// ---- jet ring ----------------------------------------------------------

pub fn check_ring_axioms(ring: &JetRing, u: &JetElement, v: &JetElement, w: &JetElement) -> Result<(), String> {
    let m = |a: &JetElement, b: &JetElement| ring.mul(a, b).map_err(jet_err);
    let p = |a: &JetElement, b: &JetElement| ring.add(a, b).map_err(jet_err);
    ensure_eq!(m(&m(u, v)?, w)?, m(u, &m(v, w)?)?, "associativity");
    ensure_eq!(m(u, &p(v, w)?)?, p(&m(u, v)?, &m(u, w)?)?, "left distributivity");
    ensure_eq!(m(&p(u, v)?, w)?, p(&m(u, w)?, &m(v, w)?)?, "right distributivity");
    ensure_eq!(m(&ring.one(), u)?, *u, "left unit");
    ensure_eq!(m(u, &ring.one())?, *u, "right unit");
    Ok(())
}

pub fn check_square_zero(ring: &JetRing, u: &JetElement, v: &JetElement) -> Result<(), String> {
    let x = ring.element(u.x.clone(), LaurentPoly::zero(ring.field())).map_err(jet_err)?;
    let y = ring.element(v.x.clone(), LaurentPoly::zero(ring.field())).map_err(jet_err)?;
    ensure_eq!(ring.mul(&x, &y).map_err(jet_err)?, ring.zero(), "I * I = 0");
    Ok(())
}

pub fn check_bimodule(ring: &JetRing, a: &LaurentPoly, x: &[LaurentPoly], b: &LaurentPoly) -> Result<(), String> {
    let bm = ring.bimodule();
    let lhs = bm.left_mul(a, &bm.right_mul(x, b)).map_err(jet_err)?;
    let rhs = bm.right_mul(&bm.left_mul(a, x).map_err(jet_err)?, b);
    ensure_eq!(lhs, rhs, "a(xb) = (ax)b");
    Ok(())
}

/// `d(ab) = a d(b) + d(a) b` on `B`.
pub fn check_derivation(ring: &JetRing, a: &LaurentPoly, b: &LaurentPoly) -> Result<(), String> {
    let bm = ring.bimodule();
    let lhs = ring.derive(&a.mul(b)).map_err(jet_err)?;
    let ad_b = bm.left_mul(a, &ring.derive(b).map_err(jet_err)?).map_err(jet_err)?;
    let da_b = bm.right_mul(&ring.derive(a).map_err(jet_err)?, b);
    ensure_eq!(lhs, jetline::jet::vec_add(&ad_b, &da_b), "Leibniz for d");
    ensure_eq!(
        jetline::jet::vec_is_zero(&ring.derive(&LaurentPoly::one(ring.field())).map_err(jet_err)?),
        true,
        "d(1) = 0"
    );
    Ok(())
}

pub fn check_s_t_maps(ring: &JetRing, a: &LaurentPoly, b: &LaurentPoly) -> Result<(), String> {
    let e = jet_err;
    let s = |x: &LaurentPoly| ring.map_s(x);
    let t = |x: &LaurentPoly| ring.map_t(x);
    let ab = a.mul(b);
    ensure_eq!(ring.mul(&s(a).map_err(e)?, &s(b).map_err(e)?).map_err(e)?, s(&ab).map_err(e)?, "s multiplicative");
    ensure_eq!(ring.mul(&t(a).map_err(e)?, &t(b).map_err(e)?).map_err(e)?, t(&ab).map_err(e)?, "t multiplicative");
    let sum = a.add(b);
    ensure_eq!(ring.add(&s(a).map_err(e)?, &s(b).map_err(e)?).map_err(e)?, s(&sum).map_err(e)?, "s additive");
    ensure_eq!(s(&LaurentPoly::one(ring.field())).map_err(e)?, ring.one(), "s(1) = 1");
    let s_a = s(a).map_err(e)?;
    let t_a = t(a).map_err(e)?;
    let minus_t = JetElement {
        x: t_a.x.iter().map(LaurentPoly::neg).collect(),
        a: t_a.a.neg(),
    };
    ensure_eq!(ring.add(&s_a, &minus_t).map_err(e)?, ring.d_i(a).map_err(e)?, "s - t = d_I");
    // d_I(ab) = t(a) d_I(b) + d_I(a) t(b)
    let lhs = ring.d_i(&ab).map_err(e)?;
    let rhs = ring
        .add(
            &ring.mul(&t_a, &ring.d_i(b).map_err(e)?).map_err(e)?,
            &ring.mul(&ring.d_i(a).map_err(e)?, &t(b).map_err(e)?).map_err(e)?,
        )
        .map_err(e)?;
    ensure_eq!(lhs, rhs, "d_I Leibniz");
    Ok(())
}

/// Both `t` and `s` make the jet ring a `B`-bimodule.
pub fn check_module_structures(ring: &JetRing, u: &JetElement, b: &LaurentPoly, c: &LaurentPoly) -> Result<(), String> {
    let e = jet_err;
    for via in [Structure::T, Structure::S] {
        let r = |u: &JetElement, b: &LaurentPoly| ring.scalar_right(u, b, via).map_err(e);
        let l = |b: &LaurentPoly, u: &JetElement| ring.scalar_left(b, u, via).map_err(e);
        let bc = b.mul(c);
        ensure_eq!(r(&r(u, b)?, c)?, r(u, &bc)?, "(u b) c = u (bc) via {via:?}");
        ensure_eq!(l(b, &l(c, u)?)?, l(&bc, u)?, "b (c u) = (bc) u via {via:?}");
        ensure_eq!(r(&l(b, u)?, c)?, l(b, &r(u, c)?)?, "(b u) c = b (u c) via {via:?}");
        ensure_eq!(r(u, &LaurentPoly::one(ring.field()))?, *u, "u 1 = u via {via:?}");
    }
    Ok(())
}

/// `d_Pr(uv) = u d_Pr(v) + d_Pr(u) v`, with the jet ring acting on `I`
/// through `B`.
pub fn check_d_pr(ring: &JetRing, u: &JetElement, v: &JetElement) -> Result<(), String> {
    let e = jet_err;
    let lhs = ring.d_pr(&ring.mul(u, v).map_err(e)?).map_err(e)?;
    let left = ring.act_on_ideal_left(u, &ring.d_pr(v).map_err(e)?).map_err(e)?;
    let right = ring.act_on_ideal_right(&ring.d_pr(u).map_err(e)?, v).map_err(e)?;
    ensure_eq!(lhs, jetline::jet::vec_add(&left, &right), "d_Pr derivation");
    Ok(())
}

pub fn check_module_axioms(
    ring: &JetRing,
    u: &JetElement,
    v: &JetElement,
    m: &JetModuleElement,
    n: &JetModuleElement,
) -> Result<(), String> {
    let e = jet_err;
    let l = |a: &JetElement, x: &JetModuleElement| ring.left_act(a, x).map_err(e);
    let r = |x: &JetModuleElement, a: &JetElement| ring.right_act(x, a).map_err(e);
    let uv = ring.mul(u, v).map_err(e)?;
    ensure_eq!(l(&uv, m)?, l(u, &l(v, m)?)?, "left action associative");
    ensure_eq!(r(m, &uv)?, r(&r(m, u)?, v)?, "right action associative");
    ensure_eq!(l(&ring.one(), m)?, *m, "left unit");
    ensure_eq!(r(m, &ring.one())?, *m, "right unit");
    ensure_eq!(l(u, &m.add(n))?, l(u, m)?.add(&l(u, n)?), "left distributive in module");
    let u_plus_v = ring.add(u, v).map_err(e)?;
    ensure_eq!(l(&u_plus_v, m)?, l(u, m)?.add(&l(v, m)?), "left distributive in ring");
    ensure_eq!(r(&m.add(n), u)?, r(m, u)?.add(&r(n, u)?), "right distributive in module");
    ensure_eq!(r(&l(u, m)?, v)?, l(u, &r(m, v)?)?, "bimodule compatibility");
    Ok(())
}

/// `[d_E, a]` is right linear; for abelianized `I` it is left linear and
/// `[[d_E, a], b] = 0`.
pub fn check_commutator(ring: &JetRing, a: &LaurentPoly, b: &LaurentPoly, f: &[LaurentPoly]) -> Result<(), String> {
    let e = jet_err;
    let c = |x: &[LaurentPoly]| ring.commutator_with_scalar(a, x).map_err(e);
    let bf = jetline::jet::vec_scale(f, b);
    let c_f = c(f)?;
    let right = ring.right_act(&c_f, &ring.map_t(b).map_err(e)?).map_err(e)?;
    ensure_eq!(c(&bf)?, right, "[d_E, a](e b) = [d_E, a](e) b");
    let expected = JetModuleElement {
        z: ring.tensor(&ring.derive(a).map_err(e)?, f).iter().map(LaurentPoly::neg).collect(),
        f: jetline::jet::zero_vec(ring.field(), f.len()),
    };
    ensure_eq!(c_f, expected, "[d_E, a](e) = (-d(a) ⊗ e, 0)");
    if ring.bimodule().is_abelianized() {
        let left = ring.left_act(&ring.map_t(b).map_err(e)?, &c_f).map_err(e)?;
        let double = c(&bf)?.sub(&left);
        ensure_eq!(double.is_zero(), true, "[[d_E, a], b] = 0");
        let z = ring.tensor(ring.d_t(), f);
        ensure_eq!(
            ring.tensor_left_mul(a, &z).map_err(e)?,
            ring.tensor_right_mul(&z, a),
            "a (x ⊗ e) = (x ⊗ e) a"
        );
    }
    Ok(())
}

// ---- cohomology --------------------------------------------------------

pub fn check_riemann_roch(e: &TransitionBundle) -> Result<(), String> {
    let lhs = h0(e, 0) as i64 - h1(e, 0) as i64;
    let rhs = e.degree() + e.rank() as i64;
    ensure_eq!(lhs, rhs, "h0 - h1 = deg + rank for {e}");
    Ok(())
}

pub fn check_splitting_consistency(e: &TransitionBundle) -> Result<(), String> {
    let s = splitting_type(e).map_err(|x| x.to_string())?;
    ensure_eq!(s.degree(), e.degree(), "sum of splitting type for {e}");
    let s2 = splitting_type_via_h1(e).map_err(|x| x.to_string())?;
    ensure_eq!(s, s2, "h0 and h1 splitting paths for {e}");
    for n in -2..=2 {
        ensure_eq!(h0(e, n), s.h0(n), "h0({n}) from splitting type for {e}");
        ensure_eq!(h0_stabilized(e, n), true, "h0({n}) stabilizes for {e}");
    }
    Ok(())
}

// ---- projective --------------------------------------------------------

pub fn check_reproducing(p: &Idempotent, w: &[MultiPoly]) -> Result<(), String> {
    let a = p.project(w).map_err(|x| x.to_string())?;
    ensure_eq!(dual_basis(p).reproduce(&a), a, "Σ q_i(a) e_i = a");
    Ok(())
}

pub fn check_grassmann_leibniz(p: &Idempotent, a: &MultiPoly, w: &[MultiPoly]) -> Result<(), String> {
    let e = p.project(w).map_err(|x| x.to_string())?;
    let defect = grassmann_connection(p).leibniz_defect(a, &e).map_err(|x| x.to_string())?;
    ensure_eq!(tensor_is_zero(&defect), true, "∇(ae) = a∇(e) + da ⊗ e");
    Ok(())
}

/// `E G P G^{-1} E^{-1}` for a constant idempotent `P`, an invertible
/// integer matrix `G` and an elementary matrix `E = 1 + c x_k^j e_{ab}`.
pub fn conjugated_constant_idempotent<R: Rng>(rng: &mut R, ring: jetline::PolyRing, n: usize) -> Idempotent {
    let field = ring.field;
    let rank = rng.gen_range(1..n);
    let diag: Vec<jetline::Scalar> = (0..n).map(|i| if i < rank { field.one() } else { field.zero() }).collect();
    let p = Matrix::diagonal(&field, diag);
    let g = loop {
        let vals: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-3..=3)).collect();
        let g = Matrix::from_fn(&field, n, n, |i, j| field.from_i64(vals[i * n + j]));
        if !g.det().is_zero() {
            break g;
        }
    };
    let conj = g.mul(&p).mul(&g.inverse().unwrap());
    let lifted = conj.map(&ring, |c| ring.constant(c.clone()));
    let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n - 1));
    let b = if b >= a { b + 1 } else { b };
    let mut exps = vec![0u32; ring.nvars];
    exps[rng.gen_range(0..ring.nvars)] = rng.gen_range(1..=2);
    let c = sample::nonzero_scalar(rng, field);
    let mut el = Matrix::identity(&ring, n);
    el.set(a, b, ring.monomial(c.clone(), exps.clone()));
    let mut el_inv = Matrix::identity(&ring, n);
    el_inv.set(a, b, ring.monomial(c.neg(), exps));
    Idempotent::new(el.mul(&lifted).mul(&el_inv)).unwrap()
}
