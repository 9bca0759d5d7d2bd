//! Exact computer algebra for Lie pairs (g, h) over the rationals: PBW maps
//! S(g/h) → U(g)/U(g)h built from a connection, Atiyah cocycles, the
//! coefficients of the associated homological vector field, and exact
//! verification of the identities they satisfy.

pub mod cochain;
pub mod corpus;
pub mod enveloping;
pub mod error;
pub mod exact;
pub mod exec;
pub mod kapranov;
pub mod lie_pair;
pub mod linalg;
pub mod linfty;
pub mod pbw;
pub mod sym_coalgebra;

pub use error::{Error, Violation};
pub use exact::{DualSymTensor, ExtIndex, MultiIndex, Scalar, SymTensor};
pub use exec::Execution;
pub use lie_pair::{Connection, LiePair};
pub use pbw::PbwContext;
