//! `(I, d)`-connections on a free module `E = B^e` and the left-linear
//! sections of the jet sequence `0 -> I ⊗ E -> Pr(E) -> E -> 0` they
//! correspond to.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::laurent::LaurentPoly;
use crate::sample;

use super::bimodule::{check_field, vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec};
use super::ring::{JetModuleElement, JetRing};
use super::JetError;

/// Number of random probes used when checking that a map satisfies an
/// identity on all inputs.
pub const DEFAULT_PROBES: usize = 24;

const PROBE_SEED: u64 = 0x006a_6574_6c69_6e65;

/// A connection on `E = B^e`, stored by its values on the standard basis;
/// `∇(Σ f_j e_j) = Σ f_j ∇(e_j) + d(f_j) ⊗ e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection {
    values: Vec<Vec<LaurentPoly>>,
}

impl Connection {
    /// `values[j]` is `∇(e_j)` in `I ⊗ E` coordinates.
    pub fn from_basis_values(ring: &JetRing, values: Vec<Vec<LaurentPoly>>) -> Result<Self, JetError> {
        let e = values.len();
        for v in &values {
            if v.len() != ring.rank() * e {
                return Err(JetError::MixedContext(format!(
                    "connection value has {} coordinates, expected {}",
                    v.len(),
                    ring.rank() * e
                )));
            }
            check_field(ring.field(), v, "connection value")?;
        }
        Ok(Connection { values })
    }

    /// The trivial connection: `d` applied coordinatewise.
    pub fn trivial(ring: &JetRing, e_rank: usize) -> Self {
        Connection {
            values: vec![zero_vec(ring.field(), ring.rank() * e_rank); e_rank],
        }
    }

    pub fn e_rank(&self) -> usize {
        self.values.len()
    }

    pub fn basis_values(&self) -> &[Vec<LaurentPoly>] {
        &self.values
    }

    pub fn apply(&self, ring: &JetRing, f: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, JetError> {
        if f.len() != self.e_rank() {
            return Err(JetError::MixedContext("E-vector rank".into()));
        }
        let mut out = ring.derive_vec(f)?;
        for (fj, v) in f.iter().zip(&self.values) {
            out = vec_add(&out, &ring.tensor_left_mul(fj, v)?);
        }
        Ok(out)
    }
}

/// A left `B`-linear section `s(e) = (∇(e), e)` of the jet sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct LeftSection {
    connection: Connection,
}

impl LeftSection {
    pub fn apply(&self, ring: &JetRing, e: &[LaurentPoly]) -> Result<JetModuleElement, JetError> {
        Ok(JetModuleElement {
            z: self.connection.apply(ring, e)?,
            f: e.to_vec(),
        })
    }

    pub fn connection(&self) -> &Connection {
        &self.connection
    }
}

fn standard_basis(ring: &JetRing, e_rank: usize, j: usize) -> Vec<LaurentPoly> {
    let mut v = zero_vec(ring.field(), e_rank);
    v[j] = LaurentPoly::one(ring.field());
    v
}

/// Checks `∇(a e) = a ∇(e) + d(a) ⊗ e` and additivity of an arbitrary map
/// on `probes` seeded random inputs.
pub fn check_leibniz(
    ring: &JetRing,
    e_rank: usize,
    map: &dyn Fn(&[LaurentPoly]) -> Vec<LaurentPoly>,
    probes: usize,
) -> Result<(), JetError> {
    let field = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    for k in 0..probes {
        // the first probes are monomial, so simple defects surface with a
        // readable witness
        let a = if k < 3 {
            LaurentPoly::t_pow(field, k as i64)
        } else {
            sample::poly(&mut rng, field, 3)
        };
        let e = if k < 3 && e_rank > 0 {
            standard_basis(ring, e_rank, k % e_rank)
        } else {
            sample::poly_vec(&mut rng, field, e_rank, 3)
        };
        let lhs = map(&vec_scale(&e, &a));
        let rhs = vec_add(&ring.tensor_left_mul(&a, &map(&e))?, &ring.tensor(&ring.derive(&a)?, &e));
        let discrepancy = vec_sub(&lhs, &rhs);
        if !vec_is_zero(&discrepancy) {
            return Err(JetError::NotLeibniz { a, e, discrepancy });
        }
        let e2 = sample::poly_vec(&mut rng, field, e_rank, 3);
        let sum = map(&vec_add(&e, &e2));
        let discrepancy = vec_sub(&sum, &vec_add(&map(&e), &map(&e2)));
        if !vec_is_zero(&discrepancy) {
            return Err(JetError::NotAdditive { e1: e, e2, discrepancy });
        }
    }
    Ok(())
}

/// A connection gives the left-linear section `s(e) = (∇(e), e)`.
///
/// The candidate map is probed for the Leibniz rule first; a failure is
/// reported with a witness `(a, e, discrepancy)`.
pub fn connection_to_splitting(
    ring: &JetRing,
    e_rank: usize,
    map: &dyn Fn(&[LaurentPoly]) -> Vec<LaurentPoly>,
) -> Result<LeftSection, JetError> {
    check_leibniz(ring, e_rank, map, DEFAULT_PROBES)?;
    let values = (0..e_rank).map(|j| map(&standard_basis(ring, e_rank, j))).collect();
    Ok(LeftSection {
        connection: Connection::from_basis_values(ring, values)?,
    })
}

pub fn section_of(connection: Connection) -> LeftSection {
    LeftSection { connection }
}

/// A left `B`-linear section `s` of the projection `Pr(E) -> E` gives the
/// connection `∇(e) = first component of s(e)`.
pub fn splitting_to_connection(
    ring: &JetRing,
    e_rank: usize,
    section: &dyn Fn(&[LaurentPoly]) -> JetModuleElement,
) -> Result<Connection, JetError> {
    let field = ring.field();
    let mut rng = ChaCha8Rng::seed_from_u64(PROBE_SEED);
    for k in 0..DEFAULT_PROBES {
        let a = if k < 3 {
            LaurentPoly::t_pow(field, k as i64)
        } else {
            sample::poly(&mut rng, field, 3)
        };
        let e = if k < 3 && e_rank > 0 {
            standard_basis(ring, e_rank, k % e_rank)
        } else {
            sample::poly_vec(&mut rng, field, e_rank, 3)
        };
        let s_e = section(&e);
        if s_e.f != e {
            return Err(JetError::NotASection {
                e,
                projected: s_e.f,
            });
        }
        let lhs = section(&vec_scale(&e, &a));
        let rhs = ring.left_act(&ring.map_t(&a)?, &s_e)?;
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            return Err(JetError::NotLinear {
                a,
                e,
                discrepancy: diff.z,
            });
        }
    }
    let values = (0..e_rank).map(|j| section(&standard_basis(ring, e_rank, j)).z).collect();
    Connection::from_basis_values(ring, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::jet::Bimodule;

    const Q: Field = Field::Rational;

    #[test]
    fn zero_map_section_depends_on_derivation() {
        let ring = JetRing::kahler(Q);
        let naive = |e: &[LaurentPoly]| JetModuleElement {
            z: zero_vec(Q, e.len()),
            f: e.to_vec(),
        };
        assert!(matches!(
            splitting_to_connection(&ring, 1, &naive),
            Err(JetError::NotLinear { .. })
        ));
        let flat = JetRing::with_zero_derivation(Bimodule::abelianized(Q, 1));
        let conn = splitting_to_connection(&flat, 1, &naive).unwrap();
        assert_eq!(conn, Connection::trivial(&flat, 1));
    }

    #[test]
    fn coordinatewise_derivative_is_a_connection() {
        let ring = JetRing::kahler(Q);
        let d = |e: &[LaurentPoly]| ring.derive_vec(e).unwrap();
        let section = connection_to_splitting(&ring, 2, &d).unwrap();
        assert_eq!(section.connection(), &Connection::trivial(&ring, 2));
        let s = |e: &[LaurentPoly]| section.apply(&ring, e).unwrap();
        let back = splitting_to_connection(&ring, 2, &s).unwrap();
        assert_eq!(&back, section.connection());
    }

    #[test]
    fn non_leibniz_map_reports_witness() {
        let ring = JetRing::kahler(Q);
        let zero = |e: &[LaurentPoly]| zero_vec(Q, e.len());
        match connection_to_splitting(&ring, 1, &zero) {
            Err(JetError::NotLeibniz { a, discrepancy, .. }) => {
                // a = t on the basis vector: d(t) ⊗ e is missing
                assert_eq!(a, LaurentPoly::t_pow(Q, 1));
                assert_eq!(discrepancy, vec![LaurentPoly::from_int_terms(Q, &[(0, -1)])]);
            }
            other => panic!("expected NotLeibniz, got {other:?}"),
        }
        let squared = |e: &[LaurentPoly]| {
            let mut v = ring.derive_vec(e).unwrap();
            v[0] = v[0].mul(&e[0]);
            v
        };
        assert!(connection_to_splitting(&ring, 1, &squared).is_err());
    }
}
