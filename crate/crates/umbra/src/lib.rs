//! Exact finite-operator calculus over the rationals.
//!
//! This crate implements the umbral (finite-operator) toolkit for
//! structure-preserving discretization of differential equations:
//!
//! - [`operator`]: shift-invariant operators as truncated series in the
//!   continuous derivative, Pincherle derivatives, and the generation of
//!   basic polynomial sequences for arbitrary delta operators;
//! - [`algebra`]: umbral series, the star product under which basic
//!   polynomials multiply by index addition, the delta derivation, and the
//!   exact transforms between lattice values and umbral coefficients;
//! - [`euler`]: the discrete Cauchy–Euler equation: indicial roots,
//!   the three-term recurrence and its brute-force coefficient oracle,
//!   singularity-aware solving, exact solutions, and continuous-limit
//!   studies;
//! - [`identities`]: executable alternating binomial identities used as
//!   the correctness oracle for the recurrence coefficients.
//!
//! Every computation is carried out in exact rational arithmetic
//! ([`rational::Rat`]); there is no floating point anywhere in the crate.
//!
//! Each major capability has a runnable example under `examples/`, and the
//! `umbra` binary exposes the same pipeline stages as subcommands with JSON
//! and CSV output.

pub mod algebra;
pub mod cli;
pub mod euler;
pub mod identities;
pub mod operator;
pub mod poly;
pub mod rational;

pub use algebra::{LatticeFunction, UmbralSeries};
pub use euler::{DiscreteEulerEquation, EulerProblem, SolutionSpace};
pub use operator::{BasicSequence, DeltaKind, DeltaSeries};
pub use poly::Polynomial;
pub use rational::Rat;

/// Default truncation degree for series storage; overridable in the CLI via
/// the `UMBRA_TRUNCATION_BOUND` environment variable.
pub const DEFAULT_TRUNCATION_BOUND: usize = 64;
