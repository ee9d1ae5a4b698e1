pub mod coloring;
pub mod complex;
pub mod distance;
pub mod error;
pub mod expansion;
pub mod format;
pub mod fixtures;
pub mod gf2;
pub mod hastings;
pub mod layer;

pub use complex::{
    from_css, logical_dimension, CodeSummary, repetition_complex, tensor_product, transpose_complex, weight_profile, ChainComplex,
    CssCode, Label, WeightProfile,
};
pub use distance::{distance_exact, distance_upper, Distance, DistanceResult, SearchOptions, Side};
pub use error::{Error, Result};
pub use expansion::{
    check_square_bound, check_tensor_bound, coexpansion_constant, relative_coexpansion_constant, ExpansionConstant, GraphComplex,
    SquareReport, TensorReport,
};
pub use format::{cell_table_tsv, parse_alist, CodeFile, ColoringFile, Metadata};
pub use gf2::{kernel_basis, mat_mul, rank, solve, BitMatrix, BitVector, EchelonForm, Span};
pub use hastings::{hastings_pipeline, HastingsOptions, HastingsReport, HastingsResult};
pub use layer::{
    assemble, check_compatibility, distance_lower_bound, embedded_complex, lift_logical, sparsify, Block, CellIndex,
    LayerAssembly, SparsifyOptions, SparsifyReport, Sparsified, VerificationFlags,
};
