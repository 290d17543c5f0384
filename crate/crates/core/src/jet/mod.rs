//! The jet ring `Pr = I ⊕ B` over a single chart `B = K[t]`, its jet modules
//! `I ⊗ E ⊕ E` with their two actions, the universal first-order operator,
//! and connections.

mod bimodule;
mod connection;
mod ring;

use thiserror::Error;

use crate::laurent::LaurentPoly;

pub use bimodule::{vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec, Bimodule};
pub use connection::{
    check_leibniz, connection_to_splitting, section_of, splitting_to_connection, Connection,
    LeftSection, DEFAULT_PROBES,
};
pub use ring::{JetElement, JetModuleElement, JetRing, Structure};

fn fmt_vec(v: &[LaurentPoly]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum JetError {
    #[error("mixed context: {0}")]
    MixedContext(String),
    #[error("left action of t is not invertible over K[t, 1/t]")]
    NonInvertibleLeftAction,
    #[error("not a connection: Leibniz rule fails at a = {a}, e = {}, discrepancy {}", fmt_vec(.e), fmt_vec(.discrepancy))]
    NotLeibniz {
        a: LaurentPoly,
        e: Vec<LaurentPoly>,
        discrepancy: Vec<LaurentPoly>,
    },
    #[error("not additive: e1 = {}, e2 = {}, discrepancy {}", fmt_vec(.e1), fmt_vec(.e2), fmt_vec(.discrepancy))]
    NotAdditive {
        e1: Vec<LaurentPoly>,
        e2: Vec<LaurentPoly>,
        discrepancy: Vec<LaurentPoly>,
    },
    #[error("section is not left linear at a = {a}, e = {}, discrepancy {}", fmt_vec(.e), fmt_vec(.discrepancy))]
    NotLinear {
        a: LaurentPoly,
        e: Vec<LaurentPoly>,
        discrepancy: Vec<LaurentPoly>,
    },
    #[error("map does not split the projection: e = {} projects to {}", fmt_vec(.e), fmt_vec(.projected))]
    NotASection {
        e: Vec<LaurentPoly>,
        projected: Vec<LaurentPoly>,
    },
}
