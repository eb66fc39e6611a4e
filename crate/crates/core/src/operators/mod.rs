//! Momentum-space operators and the commutator engine.

pub mod component;
pub mod dynamics;
pub mod fd;
pub mod position;
pub mod spin;

pub use component::{commutator, DerivativeMode, MatrixField, OperatorComponent};
pub use dynamics::{
    dirac_velocity, hamiltonian, hamiltonian_component, velocity, velocity_closed, velocity_correction,
};
pub use fd::{FdScheme, FdValue};
pub use position::{
    field_position, field_position_gauged, gauge_phase, momentum_component, nw_counterterm, nw_matrix_part,
    nw_position, position_matrix_from_boost, position_matrix_gradient, position_matrix_part, time_slice,
};
pub use spin::{
    field_spin, field_spin_component, field_spin_gradient, pauli_lubanski, pauli_lubanski_lab_frame,
    pauli_lubanski_square, wigner_spin, PauliLubanskiMode,
};
