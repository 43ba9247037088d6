//! Field quantization with a single harmonic oscillator that can exist in a
//! superposition of frequencies.
//!
//! The oscillator lives on `span{|k>} (x) Fock`, where `k` runs over field
//! modes. A frequency operator `Omega` replaces the scalar frequency, mode
//! operators are `a_k = |k><k| (x) a`, and the electromagnetic field, its
//! coherent states and the emission of a two-level atom are built on top.
//! A conventional tensor-product Fock space is provided as a comparison
//! baseline in [`standard`].
//!
//! Modules:
//! - [`hilbert`]: mode labels, truncated layouts, states, operators
//! - [`algebra`]: `Omega`, `a_k`, `H`, `P` and the modified oscillator algebra
//! - [`field`]: polarization basis, field operators, coherent states, identities
//! - [`dynamics`]: matrix exponential, propagators, Heisenberg picture, Dyson term
//! - [`emission`]: atom-field Hamiltonian and first-order emission amplitudes
//! - [`standard`]: multimode Fock baseline and Jaynes-Cummings reference
//! - [`cli`]: batch commands behind the `oscfield` binary

pub mod algebra;
pub mod cli;
pub mod dynamics;
pub mod emission;
pub mod error;
pub mod field;
pub mod hilbert;
pub mod standard;
pub mod units;

pub use error::{Error, Result};
pub use hilbert::{build_layout, AtomLevel, BasisIndex, HilbertLayout, ModeLabel, OpMatrix, Operator, StateVector, C64};
pub use units::FieldConfig;
