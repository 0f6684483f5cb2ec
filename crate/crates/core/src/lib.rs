//! Exact computational geometry of Cayley's ruled cubic surface.
//!
//! All arithmetic is over arbitrary-precision rationals. The crate provides
//! the projective primitives ([`projective`]), the surface with its
//! collineation group ([`surface`]), the family of cubic parabolas on it
//! ([`family`]) and a jet-based engine for contact orders of these curves
//! and of their dual curves ([`contact`]).

pub mod contact;
pub mod error;
pub mod family;
pub mod linalg;
pub mod poly;
pub mod projective;
pub mod rational;
pub mod series;
pub mod surface;

pub use contact::{ContactOrder, Jet};
pub use error::{Error, Result};
pub use family::{CubicParams, ParabolaParams, Param, PlanarPoint};
pub use projective::{Collineation, HPlane, HPoint};
pub use rational::Rational;
pub use surface::{Flag, GroupElem, SurfaceOrbit};
