//! Independence complexes of Kneser graphs as Vietoris-Rips complexes of
//! n-subset spaces under the symmetric-difference metric.
//!
//! `Ind(KG(n, k))` is the flag complex `VR(F_n^{[2n+k]}; 2(n-1))`: two n-subsets
//! span an edge exactly when they intersect. The crate builds these complexes,
//! computes their reduced homology over prime fields, and checks the
//! combinatorial structure behind their homology: maximal simplices from
//! projective planes, cross-polytopal cycles, concentration maps, and closed-form
//! rank and connectivity bounds.

pub mod binomial;
pub mod bitset;
pub mod bounds;
pub mod complex;
pub mod designs;
mod error;
pub mod field;
pub mod generators;
pub mod homology;
pub mod maps;
pub mod report;
pub mod subset;
pub mod verify;

pub use complex::{FlagComplex, Simplex, SimplexList};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use homology::{betti_for_dims, betti_numbers, persistence_barcode, ChainVector, HomologyOptions};
pub use subset::{NSubsetSpace, Subset};
