//! Mode sets, truncated layouts, state vectors and the operator container.

pub mod io;
mod layout;
pub mod matrix;
mod mode;
mod operator;
mod state;

pub use layout::{build_layout, AtomLevel, BasisIndex, HilbertLayout};
pub use matrix::{OpMatrix, C64};
pub use mode::ModeLabel;
pub(crate) use mode::norm3;
pub use operator::{sum, Operator, HERMITIAN_TOL};
pub use state::StateVector;
