//! Cospectral mate search: isomorph-free generation of connected graphs,
//! exact spectral fingerprints, and the determined-by-spectrum verdict.

mod canonical;
mod classes;
mod generate;

pub use canonical::{canonical_form, canonical_labeling, canonical_labeling_colored, same_orbit, CanonicalForm};
pub use classes::{
    cospectral_classes, ds_verdict, ds_verdict_from_table, fingerprint, ingest_graph6, load_source, ClassTable,
    Fingerprint, GraphSource, LineError,
};
pub use generate::{brute_force_connected, enumerate_connected, isomorphic, MAX_BUILTIN_ORDER};
