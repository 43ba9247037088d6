//! Free Maxwell field: polarization basis, field operators `A`, `E`, `B`,
//! coherent superpositions and the energy-momentum identities.

mod coherent;
mod identities;
mod operators;
pub mod polarization;

pub use coherent::{
    classical_formula, coherent_amplitudes, coherent_state, field_average, field_averages, poisson_tail, required_nmax,
    CoherentMode, CoherentSpec, FieldTriple, COHERENT_TAIL_TOL,
};
pub use identities::{energy_identity, EnergyIdentityReport, SamplePoint};
pub use operators::{
    cross_op, dot_op, electric, energy_density, field_operator, field_square, magnetic, momentum_density, poynting,
    spacetime_translate, translation_generator, vector_potential, FieldKind, PoyntingOrdering, VectorOperator,
};
pub use polarization::{polarization, PolarizationBasis};
