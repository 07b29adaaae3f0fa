//! Taxicab distance mean functions and their use in tomography.
//!
//! * [`geometry`]: simple polygons, triangulation and uniform sampling.
//! * [`distmean`]: coordinate X-rays of polygons and the distance mean
//!   `f_K(x) = ∫_K d_1(x, y) dy` with its gradient.
//! * [`bisect`]: the bisecting point of a body, by stochastic approximation
//!   and exactly.
//! * [`discrete`]: lattice distance sums and binary matrices with prescribed
//!   row and column sums (least-average-value filling, maximum flow,
//!   switching chains).
//! * [`gridrecon`]: grid-resolution reconstruction of hv-convex sets from
//!   two X-rays.
//! * [`io`] and [`render`]: file formats and SVG output.

pub mod bisect;
pub mod discrete;
pub mod distmean;
pub mod error;
pub mod geometry;
pub mod gridrecon;
pub mod io;
pub mod render;
pub mod rng;

pub use error::{Error, Result};
pub use geometry::{Axis, Point, Polygon};
pub use rng::SeededRng;
