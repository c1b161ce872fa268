//! Weyl groups: types, Coxeter diagrams, enumeration, reflection subgroups.

pub mod context;
pub mod diagram;
pub mod genset;
pub mod group;
pub mod roots;
pub mod subgroup;
pub mod types;

pub use context::WeylContext;
pub use diagram::{coxeter_diagram, diagram_for, CoxeterDiagram, INFINITE};
pub use genset::GenSet;
pub use group::{
    enumerate_weyl_group, enumerate_weyl_group_bounded, highest_root_reflection, project_affine_generator,
    GroupElement, WeylGroup, DEFAULT_MAX_ORDER,
};
pub use roots::RootSystem;
pub use subgroup::{coset_decomposition, reflection_subgroup, CosetDecomposition, SubgroupTable};
pub use types::{Family, WeylType};
