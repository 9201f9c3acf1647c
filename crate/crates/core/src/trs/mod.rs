//! The LND-EQ rewrite system on path terms.

mod context;
mod engine;
mod fuzz;
mod rules;
mod trace;

pub use context::{common_context, Context};
pub use engine::{contract_once, default_step_limit, normalize, rw_equal, Contraction, Rewriter, Strategy};
pub use fuzz::{random_path, Fragment, PathGen};
pub use rules::{rule_table, rules_doc, FormerPat, Pattern, Rule, RuleId};
pub(crate) use rules::{m, rho, sigma, tau};
pub use trace::{RewriteTrace, TraceDocument, TraceRecord, TraceStep};
