//! Fifth-order A-WENO finite-difference solvers for 1-D and 2-D hyperbolic
//! systems, with two ways of building the high-order correction terms
//! (from point-value fluxes, or from the already-computed FV interface
//! fluxes) and a flux-globalization based well-balanced path-conservative
//! extension for nonconservative systems.

pub mod boundary;
pub mod corrections;
pub mod error;
pub mod field;
pub mod flux;
pub mod grid;
pub mod interp;
pub mod models;
pub mod scheme;
pub mod system;
pub mod time;
pub mod wenoz;

pub use error::{Result, SolverError};
