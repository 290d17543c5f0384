mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use jetline::p1::{
    atiyah_class, atiyah_class_with, c_i_class, h0, h1, jet_bundle, k0_class, splitting_type, JetDerivationSpec,
    K0Class, Side, TransitionBundle,
};
use jetline::{sample, Field};

fn field_for(p: u8) -> Field {
    match p {
        0 => Q,
        1 => F5,
        _ => Field::Prime(3),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn riemann_roch_and_splitting(seed in any::<u64>(), p in 0u8..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_bundle(&mut rng, field_for(p), 3);
        check_riemann_roch(&e).map_err(TestCaseError::fail)?;
        check_splitting_consistency(&e).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn increments_are_monotone(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_bundle(&mut rng, Q, 3);
        let mut prev_delta = 0;
        for n in -6..=6 {
            let delta = h0(&e, n) - h0(&e, n - 1);
            prop_assert!(delta <= e.rank());
            prop_assert!(delta >= prev_delta);
            prev_delta = delta;
        }
    }

    #[test]
    fn gauge_invariance(seed in any::<u64>(), p in 0u8..2) {
        let field = field_for(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_bundle(&mut rng, field, 3);
        let before = splitting_type(&e).unwrap();
        let (a, _) = sample::unimodular_inverse_t(&mut rng, field, e.rank(), 4, 3);
        let (b, _) = sample::unimodular(&mut rng, field, e.rank(), 4, 3);
        let moved = e.change_frames(&a, &b).unwrap();
        prop_assert_eq!(splitting_type(&moved).unwrap(), before);
    }

    #[test]
    fn k0_is_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_bundle(&mut rng, Q, 2);
        let f = random_bundle(&mut rng, Q, 2);
        prop_assert_eq!(k0_class(&e.direct_sum(&f)), k0_class(&e) + k0_class(&f));
        prop_assert_eq!(k0_class(&e.tensor(&f)).degree, e.degree() * f.rank() as i64 + f.degree() * e.rank() as i64);
    }

    #[test]
    fn atiyah_witnesses_verify(seed in any::<u64>(), p in 0u8..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_bundle(&mut rng, field_for(p), 2);
        let c = atiyah_class(&e);
        prop_assert!(c.verify_witness());
    }
}

#[test]
fn duality_and_serre() {
    // h1(E) = h0(E^* ⊗ O(-2))
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let e = random_bundle(&mut rng, Q, 3);
        let k = TransitionBundle::line(Q, -2);
        assert_eq!(h1(&e, 0), h0(&e.dual().tensor(&k), 0), "{e}");
    }
}

#[test]
fn jets_over_small_fields() {
    for (p, d) in [(2u64, 2i64), (2, 4), (3, 3), (5, 5), (3, 4), (7, 3)] {
        let field = Field::prime(p).unwrap();
        let left = jet_bundle(field, d, Side::Left, JetDerivationSpec::Classical);
        let right = jet_bundle(field, d, Side::Right, JetDerivationSpec::Classical);
        let expected_left = if d % p as i64 == 0 { vec![d, d - 2] } else { vec![d - 1, d - 1] };
        assert_eq!(splitting_type(&left).unwrap().degrees(), &expected_left[..], "p = {p}, d = {d}");
        assert_eq!(splitting_type(&right).unwrap().degrees(), &[d, d - 2]);
        assert_eq!(c_i_class(&left, &right).unwrap(), K0Class::default());
    }
}

#[test]
fn rank3_atiyah_vanishing_tracks_characteristic() {
    for p in [2u64, 3, 5] {
        let field = Field::prime(p).unwrap();
        for l in 0..6 {
            for i in 0..3 {
                let spec = JetDerivationSpec::rank3(i).unwrap();
                let c = atiyah_class_with(&TransitionBundle::line(field, l), spec);
                assert_eq!(c.vanishes, l % p as i64 == 0, "p = {p}, l = {l}, i = {i}");
                assert!(c.verify_witness());
            }
        }
    }
}
