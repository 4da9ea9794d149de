//! Exact toolkit for Bell–Kochen–Specker proofs built from two-, three- and
//! four-qubit real Pauli eigenstates.

pub mod bitset;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod metric;
pub mod pauli;
pub mod proofs;
pub mod rays;
pub mod symmetry;

pub use error::{Error, Result};
pub use metric::{DistanceSpectrum, Histogram, Rational};
pub use pauli::{MagicConfiguration, MagicLabel, PauliOperator};
pub use proofs::{IncidenceStructure, ProofFlags, ProofSet};
pub use rays::{Basis, Ray, RayCatalog};
pub use symmetry::{AutReport, Graph};
