//! The coloring engine: enumerates all colorings of a tiling whose colors
//! are permuted by the full or orientation-preserving symmetry group, as
//! partitions assembled from subgroup cosets; filters for preciseness;
//! classifies perfect against chirally perfect; and verifies the counting
//! propositions by parameter sweep.

mod checks;
mod context;
mod enumerate;
mod verify;

pub use checks::{
    classify, is_precise, mirrored_key, patch_audit, scheme_patch_colors, AuditReport,
    Classification,
};
pub use context::{h_orbits, ColoringContext, HOrbit, SymmetryMode};
pub use enumerate::{enumerate_colorings, partition_key, ColorGroup, ColoringScheme, EnumerateOptions};
pub use verify::{family_cells, verify_cell, verify_family, verify_proposition, SweepCell};
