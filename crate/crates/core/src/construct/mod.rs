//! Direct constructions: Bose triple systems, Singer-cycle projective
//! geometries, affine-geometry packings, difference matrices and orthogonal
//! arrays.
//!
//! Cyclic difference matrices can also be obtained from cyclic designs of
//! prime-power block size (Jungnickel); that route is not implemented here.

mod bose;
mod geometry;
mod matrix;

pub use bose::bose;
pub use geometry::{ag_packing, singer_pg, GeometryDesign};
pub use matrix::{
    dm_product, normalize_dm, oa_odd_prime, oa_prime_power, vandermonde_dm, DifferenceMatrix,
    OrthogonalArray,
};
