//! Chain complexes, minimal graded free resolutions, Ext, depth and
//! regular sequences.

mod complex;
mod depth;
mod ext;
mod hilbert;

pub use complex::{complex_quotient, free_resolution, free_resolution_bounded, ChainComplex, ComplexJson, ResolutionResult};
pub use depth::{
    depth, depth_koszul, module_dimension, regular_sequence_search, regular_sequence_search_with, DepthMethod,
    DepthResult, DEFAULT_DEGREE_BOUND,
};
pub use ext::{ext_modules, residue_resolution, HomComplex};
pub use hilbert::{hilbert_series, HilbertSeries};

#[cfg(test)]
mod tests;
