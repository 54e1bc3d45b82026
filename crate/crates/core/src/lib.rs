//! Double circulant self-dual codes built from generalized cyclotomic classes of order two.
//!
//! The crate covers the whole pipeline: finite-field arithmetic ([`gf`]), the cyclotomic
//! partition of `Z_pq` ([`cyclotomy`]), the difference-class matrices and their algebra
//! ([`circulant`]), linear codes with self-duality checks and minimum distance ([`code`],
//! [`distance`], [`bound`]), the code families and exhaustive searches ([`constructions`]),
//! and a command-line front end ([`cli`]).

pub mod arith;
pub mod bound;
pub mod cli;
pub mod circulant;
mod clock;
pub mod code;
pub mod constructions;
pub mod cyclotomy;
pub mod distance;
mod error;
pub mod gf;
pub mod matrix;
pub mod report;

pub use circulant::{DCoefficients, MaskVector};
pub use code::{bordered_pdc, pure_pdc, LinearCode};
pub use constructions::{ConstructionKind, ConstructionRequest};
pub use cyclotomy::{CyclotomicContext, ResidueClass};
pub use distance::{Budget, DistanceMethod, DistanceResult};
pub use error::Error;
pub use gf::{Elem, Field};
pub use matrix::GfMatrix;
pub use report::CodeReport;
