//! Kapranov dg-manifold data of a Lie pair.

pub mod hvf;
pub mod theta;

pub use crate::cochain::{ce_differential, congo_bracket, CECochain, CochainKey};
pub use hvf::{
    atiyah_class_vanishes, covariant_step, evaluate_form, find_compatible_connection, horse_check, hvf_coefficients,
    hvf_from_tables, mc_check, mc_residual, solve_coboundary, zebra_check, flat_splitting_hypotheses, AtiyahDecision,
    CoboundaryObstruction, IntertwiningFailure, IntertwiningReport, HvfCoefficients, McReport, FlatSplittingReport,
};
pub use theta::{nabla_lightning, theta_direct, theta_recursive, ThetaTables};
