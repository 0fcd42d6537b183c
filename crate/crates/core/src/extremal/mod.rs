//! Exhaustive search over small graphs up to isomorphism.

pub mod canon;
pub mod degree2;
pub mod generate;
pub mod store;
pub mod theorem2;
pub mod tightness;

pub use canon::{canonical_form, CanonicalGraph};
pub use degree2::{verify_degree2_constants, verify_degree2_on, Degree2Report};
pub use generate::{generate_all, Filter};
pub use theorem2::{verify_theorem2, verify_theorem2_on, ExtremalReport, Theorem2Report};
pub use tightness::{
    mibs_scan, mibs_scan_graphs, tightness_scan, tightness_scan_graphs, BoundSelector, MibsScan,
    TightnessRow,
};

#[cfg(feature = "parallel")]
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn par_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}
