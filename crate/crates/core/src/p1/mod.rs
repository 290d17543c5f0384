//! Vector bundles on the projective line as transition matrices between
//! the charts `t` and `s = 1/t`.

mod atiyah;
mod bundle;
mod cohomology;
mod jets;
mod k0;
mod splitting;

use thiserror::Error;

pub use atiyah::{atiyah_class, atiyah_class_with, CechClass};
pub use bundle::TransitionBundle;
pub use cohomology::{
    cech_window, coboundary_witness, global_sections, h0, h0_at_bound, h0_degree_bound, h0_stabilized, h1,
    h1_at_window, h1_stabilized, verify_coboundary,
};
pub use jets::{
    atiyah_cocycle, jet_bundle, jet_bundle_of, rank3_derivation_d0, rank3_derivation_d1,
    rank3_left_from_structure_matrix, structure_matrix, JetDerivationSpec, Side,
};
pub use k0::{c_i_class, k0_class, K0Class};
pub use splitting::{splitting_from_h0, splitting_type, splitting_type_via_h1, SplittingType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("inconsistent h0 increments: {0}")]
    InconsistentIncrements(String),
    #[error("transition matrix is not invertible: det = {det}")]
    NotAUnit { det: String },
}
