//! Computational paths: the proof-term language for equality.

mod endpoint;
mod rewr;
mod syntax;
mod term;

pub use endpoint::{Endpoint, Former, MuKind, XiKind};
pub use rewr::{rewr_beta, rewr_eta};
pub use syntax::{format_path, parse_endpoint, parse_path};
pub use term::{refl, symm, trans, Axiom, AxiomLabel, PathTerm, PathVar, Position};

pub(crate) use term::Env;
