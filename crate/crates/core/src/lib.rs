//! Exact combinatorics for the complex reflection groups `B_n(d) = G(d,1,n)`:
//! multipartitions and their dominance order, wreath-product character data,
//! c-functions with the highest-weight orders they induce, linkage classes,
//! defect-1 decomposition matrices and parameter orbit decompositions.
//!
//! Everything is computed in exact arithmetic (big rationals, integer
//! polynomials); there is no floating point anywhere in the crate. The main
//! entry points, by module:
//!
//! - [`combinatorics`]: [`Partition`](combinatorics::Partition),
//!   [`Multipartition`](combinatorics::Multipartition), enumeration, the
//!   `b`/`d` cell statistics, the dominance order and its cover description.
//! - [`exactmath`]: [`Rational`](exactmath::Rational),
//!   [`LinearForm`](exactmath::LinearForm) over the parameter variables
//!   `h, h_0, …, h_{d-1}`, integer polynomials with cyclotomic and Poincaré
//!   constructors, and truncated graded series.
//! - [`characters`]: symmetric-group character values (Murnaghan–Nakayama),
//!   wreath-product elements and restriction profiles, in closed form and by
//!   brute-force induction (the test oracle).
//! - [`corder`]: the c-function of a multipartition, parameter sets, the
//!   induced order on `P(d,n)` with comparison/refinement queries, twist and
//!   normalization actions, DOT and JSON export.
//! - [`blocks`]: linkage partitions, the semisimplicity certificate, defect-1
//!   decomposition matrices, the Coxeter cyclotomic criterion, graded
//!   dimension series of simples, and orbit decompositions of parameters.

pub mod blocks;
pub mod characters;
pub mod combinatorics;
pub mod corder;
pub mod exactmath;

use thiserror::Error;

/// Errors raised by operations whose preconditions are caller-checkable.
///
/// Internal invariant violations panic instead; `Error` is reserved for the
/// documented error cases of the public operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two multipartitions (or a multipartition and a parameter set) disagree
    /// on the number of components `d` or the total size `n`.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// An argument is outside the operation's domain (zero where positive is
    /// required, index out of range, …).
    #[error("domain error: {0}")]
    Domain(String),
    /// A brute-force oracle was asked to run outside its documented
    /// feasibility bounds.
    #[error("feasibility bound exceeded: {0}")]
    BoundExceeded(String),
    /// An operation requiring exact rational parameters was given symbolic
    /// ones.
    #[error("symbolic parameter not allowed here: {0}")]
    SymbolicParameter(String),
    /// Text that does not parse as the expected syntax.
    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
