//! Exact combinatorics for the cohomological unitary duals of `GL_n(R)` and
//! `GL_k(H)`.
//!
//! Representations are classified by ordered partitions (theta-stable
//! parabolics), attached to Poincaré polynomials and Langlands data, and
//! compared through the archimedean Jacquet–Langlands map. On the arithmetic
//! side the crate computes Hecke eigenvalues from Satake parameters and
//! rationality fields inside cyclotomic fields.
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command-line front end live in the `aqjl` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod cyclotomic;
mod error;
pub mod global;
pub mod hecke;
pub mod jl;
pub mod params;
pub mod partitions;
pub mod poly;
pub mod roots;
pub mod weights;

pub use catalog::{
    enumerate_coh, AnisotropicBlock, AqModule, Catalog, CatalogRow, ComplexBlock, GroupKind,
    InductionDatum,
};
pub use cyclotomic::{CyclotomicNumber, CyclotomicSubfield};
pub use error::Error;
pub use global::{GlobalRepDescriptor, PlacesModel};
pub use hecke::SatakeParams;
pub use jl::BasicRep;
pub use params::WeilParameter;
pub use partitions::{BlockAssignment, OrderedPartition};
pub use poly::IntPolynomial;
pub use weights::{HighestWeight, SelfDualData};

/// Exact rational used for half-integral exponents and twists.
pub type Rational = num_rational::Ratio<i64>;

pub type Result<T, E = Error> = core::result::Result<T, E>;
