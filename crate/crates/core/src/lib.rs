//! Rewriting engine for computational paths.
//!
//! * [`path`]: the path-term language (ρ, σ, τ, sub, congruence formers,
//!   `rewr`) with endpoint checking, parsing and printing.
//! * [`trs`]: the LND-EQ rewrite rules, normalization with traces and the
//!   rw-equality decision procedure.
//! * [`lambda`]: λ-terms and extraction of the path a reduction sequence
//!   witnesses.
//! * [`groups`]: loop words on five surfaces and their fundamental groups.

pub mod error;
pub mod groups;
pub mod lambda;
mod name;
pub mod path;
pub mod trs;

pub use error::{Error, Result};
pub use lambda::LambdaTerm;
pub use name::BinderName;
pub use path::{parse_path, refl, symm, trans, Endpoint, PathTerm, Position};
pub use trs::{normalize, rw_equal, RewriteTrace, Rewriter, RuleId, Strategy as RewriteStrategy};
