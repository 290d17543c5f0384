use crate::laurent::LaurentPoly;

use super::bundle::TransitionBundle;
use super::cohomology::{coboundary_witness, verify_coboundary};
use super::jets::{atiyah_cocycle, JetDerivationSpec};

/// A class in `H^1` of a bundle, given by a Čech representative on the
/// overlap in `U_0` coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CechClass {
    pub representative: Vec<LaurentPoly>,
    /// The bundle the cochain lives in.
    pub bundle: TransitionBundle,
    pub vanishes: bool,
    /// When the class vanishes, `(η_0, η_1)` with
    /// `representative = η_0 - T^{-1} η_1`.
    pub witness: Option<(Vec<LaurentPoly>, Vec<LaurentPoly>)>,
}

impl CechClass {
    pub fn new(bundle: TransitionBundle, representative: Vec<LaurentPoly>) -> Self {
        let witness = coboundary_witness(&bundle, &representative);
        CechClass {
            vanishes: witness.is_some(),
            representative,
            bundle,
            witness,
        }
    }

    /// Re-checks the witness exactly.
    pub fn verify_witness(&self) -> bool {
        match &self.witness {
            Some((a, b)) => verify_coboundary(&self.bundle, &self.representative, a, b),
            None => !self.vanishes,
        }
    }
}

/// The Atiyah class of `E` with respect to `(I, d)`, a class in
/// `H^1(Hom(E, I ⊗ E))`; coordinates are the row-major entries of the
/// cocycle matrix.
pub fn atiyah_class_with(e: &TransitionBundle, spec: JetDerivationSpec) -> CechClass {
    let c = atiyah_cocycle(e, spec);
    let hom = e.hom(&spec.ideal(e.field()).tensor(e));
    CechClass::new(hom, c.entries().cloned().collect())
}

/// The classical Atiyah class, `I = Ω`.
pub fn atiyah_class(e: &TransitionBundle) -> CechClass {
    atiyah_class_with(e, JetDerivationSpec::Classical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn lines() {
        let q = Field::Rational;
        let f3 = Field::prime(3).unwrap();
        let c = atiyah_class(&TransitionBundle::line(q, 3));
        assert!(!c.vanishes);
        assert_eq!(c.representative, vec![LaurentPoly::from_int_terms(q, &[(-1, -3)])]);
        assert!(c.verify_witness());
        let c = atiyah_class(&TransitionBundle::line(f3, 3));
        assert!(c.vanishes && c.verify_witness());
        let c = atiyah_class(&TransitionBundle::line(q, 0));
        assert!(c.vanishes && c.verify_witness());
        assert!(c.representative.iter().all(LaurentPoly::is_zero));
    }

    #[test]
    fn split_bundles_of_equal_degree_need_not_vanish() {
        let q = Field::Rational;
        let c = atiyah_class(&TransitionBundle::split(q, &[1, 1]));
        assert!(!c.vanishes);
        let c = atiyah_class(&TransitionBundle::split(Field::prime(2).unwrap(), &[2, 4]));
        assert!(c.vanishes && c.verify_witness());
    }
}
