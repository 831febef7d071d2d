//! Reduced simplicial homology over prime fields and persistence barcodes of
//! the even-scale distance filtration.

mod betti;
mod chain;
mod persistence;
mod reduce;

pub use betti::{
    betti_for_dims, betti_numbers, reduced_euler_characteristic, BettiRecord, BettiReport,
    HomologyOptions,
};
pub use chain::{boundary, boundary_of_chain, cycle_check, ChainVector};
pub use persistence::{persistence_barcode, Barcode, Interval};
