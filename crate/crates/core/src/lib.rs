//! Exact computations on regular triangulations of lifted point
//! configurations: tropical edge lengths, secondary cones, and the fan of
//! cones on which a given ordered spanning tree of the dual graph is the
//! greedy minimum spanning tree.

pub mod cli;
pub mod cone;
pub mod config;
pub mod epistasis;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod limits;
pub mod linalg;
pub mod lp;
pub mod matroid;
pub mod mstfan;
pub mod sample;
pub mod scalar;
pub mod triangulate;

pub use cone::{ConeDimensionReport, HCone};
pub use config::{HeightFunction, PointConfiguration};
pub use error::{Error, Result};
pub use geometry::{LinearForm, Ridge, SignedCircuit, Simplex};
pub use scalar::Rational;
pub use triangulate::{DualGraph, Triangulation};
