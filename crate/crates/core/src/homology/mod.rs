//! Integer homology through Smith normal form.

pub mod basis;
pub mod groups;
pub mod induced;

pub use basis::{homology_basis, homology_bases, HomologyBasis, HomologyClass};
pub use groups::{betti_numbers, homology, homology_all, HomologyGroup};
pub use induced::{
    connecting_homomorphism, homology_ladder, induced_map, induced_map_on_homology, induced_maps, is_one_free,
    verify_long_exact, HomologyLadder, InducedMap, LongExactSequence, NodeExactness,
};
