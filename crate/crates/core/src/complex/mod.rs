//! Salvetti and toric complexes, filtrations and the maps between them.

pub mod builder;
pub mod cell;
pub mod chain;
pub mod exact;
pub mod json;
pub mod maps;

pub use builder::{build_complex, build_salvetti_complex, build_toric_complex, filtration_quotient};
pub use cell::Cell;
pub use chain::{ChainComplex, ChainMap, ComplexInfo, Construction, MuConvention};
pub use exact::{square_difference, verify_short_exact, verify_square_commutes, DegreeExactness, ShortExactReport};
pub use maps::{
    build_delta_map, build_filtration_step, build_filtration_step_or_generalized, build_inclusion_map,
    build_projection_map, delta_literal_sign, FiltrationMaps, FiltrationStep, StepForm,
};
pub use json::{
    chain_map_from_json, chain_map_to_json, complex_from_json, complex_to_json, ChainMapFile, ComplexFile,
    CHAIN_MAP_SCHEMA, COMPLEX_SCHEMA,
};
