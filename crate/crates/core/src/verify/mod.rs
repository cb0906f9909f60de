//! Decision procedures for the properties the constructions claim.
//!
//! Every verifier works from the raw blocks or matrix entries; none of them
//! trusts how an object was built.

mod budget;
mod even;
mod matrix;
mod pairs;
mod steiner;

pub use budget::Budget;
pub use even::{
    brute_force_even_minimum, even_freeness, find_generalized_pasch, two_orbit_witness,
    EvenConfiguration, EvenFreenessReport, BRUTE_FORCE_BLOCK_LIMIT,
};
pub(crate) use even::PaschFinder;
pub use matrix::{check_dm, check_oa, check_oa_class, DmReport, OaFailure, OaReport};
pub use steiner::{check_difference_coverage, check_steiner, CoverageReport, SteinerReport};

