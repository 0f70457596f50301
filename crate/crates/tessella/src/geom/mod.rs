//! Geometric realization: model spaces, mirror setups, generator-point
//! solves, finite patches and validation of catalog constants.

pub mod model;
pub mod patch;
pub mod solve;
pub mod validate;

pub use model::{mirror_setup, GeomError, GeometryClass, Mat3, MirrorSetup, Model, Vec3};
pub use patch::{realize_patch, Patch, PatchTile, PatchVertex, POINT_TOL};
pub use solve::{generator_point, GeneratorPoint};
pub use validate::{edge_mirror, geometry_quality, validate_realization, word_ball, ValidationReport};
