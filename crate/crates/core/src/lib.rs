//! Distance spectra of small graphs: exact characteristic polynomials,
//! numeric eigenvalues, closed forms for extended double stars T(a,b),
//! verifiers for each finite computation behind their spectral
//! characterization, and an exhaustive cospectral mate search.

pub mod cli;
pub mod error;
pub mod forms;
pub mod graph;
pub mod mates;
pub mod poly;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
