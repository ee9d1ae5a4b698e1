//! Shared inputs for the benchmarks.

use layerwr::coloring::Coloring;
use layerwr::{fixtures, SparsifyOptions};

/// Options that sparsify the Shor code with its hand-picked coloring.
#[must_use]
pub fn shor_reference() -> SparsifyOptions {
    let (x, q, z) = fixtures::shor_coloring();
    SparsifyOptions {
        coloring: Some(Coloring::new(x, q, z)),
        ..SparsifyOptions::default()
    }
}
