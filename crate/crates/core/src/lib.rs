//! Simson polygons: construction, recognition and verification of pedal
//! configurations, their equidistant special case and its parabolic limit.
//!
//! The [`geom`] module is a small exact-input planar kernel with explicit
//! tolerances. [`simson`] builds and recognizes Simson polygons,
//! [`equidistant`] covers the closed-form family and its checks, and
//! [`approx`] solves the optimal chord interpolation of a parabola.

// `!(x < y)` is used on purpose so that NaN takes the failing branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod cli;
pub mod equidistant;
pub mod error;
pub mod geom;
pub mod report;
pub mod scene;
pub mod simson;
pub mod svg;

pub use error::{Error, Result};
pub use geom::{Circle, Line, Point, Tolerance};
pub use report::{Check, VerificationReport};
pub use simson::{Polygon, SimsonCertificate, SimsonPolygon};
