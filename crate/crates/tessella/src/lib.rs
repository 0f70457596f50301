//! Semiregular tilings of the sphere, the Euclidean plane and the hyperbolic
//! plane, together with their perfect and chirally perfect precise colorings.
//!
//! The crate is organized around five pieces:
//!
//! * exact computation in triangle groups (words, coset enumeration,
//!   low-index subgroup search) in [`word`], [`group`], [`coset`],
//!   [`low_index`] and [`symmetry`];
//! * the catalog of tiling families in [`catalog`];
//! * geometric realization of finite patches in [`geom`];
//! * enumeration, filtering and auditing of colorings in [`color`];
//! * SVG rendering in [`render`].

pub mod word;
pub mod group;
pub mod coset;
pub mod low_index;
pub mod symmetry;
pub mod catalog;
pub mod geom;
pub mod color;
pub mod render;

pub use catalog::{classify_geometry, expected_count, instantiate, CountMode, FamilyId, FamilySpec, TilingInstance};
pub use coset::{coset_enumerate, default_max_cosets, CosetTable};
pub use geom::{realize_patch, GeometryClass, Patch};
pub use group::{build_triangle_group, GroupError, Presentation, SubgroupSpec};
pub use low_index::low_index_subgroups;
pub use word::{free_reduce, Letter, Word};
