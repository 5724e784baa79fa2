//! Linear algebra and entropies for qubit and two-qubit states.

pub mod basis;
pub mod eigen;
pub mod matrix;
pub mod random;
pub mod state;

pub use basis::{ket, pauli, projector, Axis};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use matrix::CMat;
pub use random::{random_density_matrix, random_separable_state};
pub use state::{
    coherent_information, conditional_entropy, partial_trace, von_neumann_entropy,
    DensityMatrix, Subsystem, STATE_TOL,
};
