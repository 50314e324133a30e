//! Verification toolkit for the Hilali inequality `dim H*(ΛV, d) >= dim V` on
//! simply connected rationally elliptic spaces.
//!
//! The crate has four layers:
//!
//! * [`ranktype`]: homotopy rank types, the strong arithmetic condition and
//!   enumeration by formal dimension.
//! * [`filters`]: cohomology lower bounds read off a rank type, and the
//!   pipeline that runs all of them over an enumeration.
//! * [`algebra`]: exact rationals, free graded-commutative polynomials and
//!   rational linear algebra.
//! * [`sullivan`]: minimal Sullivan models, their cohomology, and a catalog of
//!   explicit witness models.
//!
//! [`report`] and [`cli`] turn the above into text, JSON and CSV output.

pub mod algebra;
pub mod cli;
pub mod filters;
pub mod ranktype;
pub mod report;
pub mod sullivan;

pub use algebra::{Generator, Monomial, Polynomial, Rational, RationalMatrix};
pub use filters::{run_pipeline, FilterId, FilterOutcome, PipelineReport, Verdict};
pub use ranktype::{enumerate_rank_types, RankType, RankTypeError};
pub use sullivan::{CohomologyProfile, SullivanModel};
