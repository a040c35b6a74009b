//! Exact arithmetic for convolution sums of Bernoulli polynomials.
//!
//! Everything is computed over the rationals with arbitrary precision.
//! Polynomials live in [`poly`], truncated power series with polynomial
//! coefficients in [`series`], Bernoulli and Eulerian data in [`special`],
//! and the sums `S_{n,k}(z)` with their identities in [`tornheim`].

pub mod combinat;
pub mod error;
pub mod generating;
mod lifted;
pub mod poly;
pub mod rational;
pub mod series;
pub mod special;
pub mod tornheim;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use poly::{falling_product, UniPoly, Var};
pub use rational::{parse_rational, rat, to_fraction_string, Rational};
pub use series::TruncSeries;
pub use tornheim::{s_nk, Route, SnkResult};
pub use verify::{Suite, Sweep, SweepConfig, VerificationReport, Witness};
