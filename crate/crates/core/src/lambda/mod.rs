//! Untyped lambda calculus front-end.
//!
//! Terms are stored locally nameless: free variables keep their names,
//! bound variables are de Bruijn indices, and binder names survive only as
//! printing hints. Structural equality is therefore α-equivalence.

mod reduce;
mod syntax;
mod term;

pub use reduce::{
    contract, find_redexes, path_along, path_to_normal_form, RedexKind, RedexSite, Strategy,
    DEFAULT_FUEL,
};
pub use syntax::parse_lambda;
pub use term::{alpha_eq, LambdaTerm};
