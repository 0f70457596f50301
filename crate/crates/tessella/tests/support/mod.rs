//! Test-only oracles, independent of the implementation paths they check:
//! a combinatorial tiling generator driven purely by the vertex
//! configuration, a rooted isomorphism check against geometric patches, a
//! brute-force equivariant coloring search, and matrix/permutation oracles
//! for the spherical groups.

pub mod combinatorial;
pub mod coloring_search;
pub mod matrix_group;
