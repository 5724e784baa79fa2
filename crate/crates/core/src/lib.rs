//! Field-mediated qubit channels: encode a qubit into a massless scalar field,
//! propagate, decode, and measure the coherent information of the result.

pub mod channel;
pub mod error;
pub mod observables;
pub mod propagation;
pub mod qmath;
pub mod smearing;
pub mod verify;

pub use error::{Error, Result};
