//! Exact Chen–Ruan cohomology of almost contact orbifolds given combinatorially.
//!
//! An input document describes an orbifold either as a quotient of an odd
//! sphere by a diagonal finite abelian group action, as a weighted projective
//! space times a circle, or as a raw list of sectors and multisectors. From a
//! [`presentations::SectorAtlas`] the crate assembles the rationally graded
//! orbifold cohomology ([`cohomology`]) and its cup product ([`ring`]), all in
//! exact rational arithmetic.
//!
//! ```
//! use orbcoh::cohomology::OrbCohomology;
//! use orbcoh::presentations::{load_atlas, InputFormat};
//!
//! let atlas = load_atlas(
//!     "version = 1\nkind = \"sphere_quotient\"\nn_plus_1 = 2\ncyclic_orders = [3]\nweight_matrix = [[1, 0]]\n",
//!     InputFormat::Toml,
//! )
//! .unwrap();
//! let coh = OrbCohomology::assemble(&atlas);
//! assert_eq!(coh.total.series_string(), "1 + t^{2/3} + t^{4/3} + t^{5/3} + t^{7/3} + t^3");
//! ```

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exact_math;
pub mod groups;
pub mod linalg;
pub mod model_spaces;
pub mod presentations;
pub mod report;
pub mod ring;
pub mod sectors;

pub use error::{Error, Result};
