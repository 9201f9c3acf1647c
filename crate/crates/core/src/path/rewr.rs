use std::sync::Arc;

use super::term::{PathTerm, PathVar};
use crate::error::{Error, Result};

impl PathTerm {
    fn shift_vars(&self, by: usize, cutoff: usize) -> PathTerm {
        match self {
            PathTerm::Var(v) if v.index >= cutoff => {
                PathTerm::Var(PathVar { index: v.index + by, hint: v.hint.clone() })
            }
            PathTerm::Var(_) | PathTerm::Rho(_) | PathTerm::Axiom(_) => self.clone(),
            PathTerm::Rewr(m, b, body) => PathTerm::Rewr(
                Arc::new(m.shift_vars(by, cutoff)),
                b.clone(),
                Arc::new(body.shift_vars(by, cutoff + 1)),
            ),
            _ => self.map_children(|c| c.shift_vars(by, cutoff)),
        }
    }

    fn subst_var(&self, depth: usize, with: &PathTerm) -> PathTerm {
        match self {
            PathTerm::Var(v) if v.index == depth => with.shift_vars(depth, 0),
            PathTerm::Var(v) if v.index > depth => {
                PathTerm::Var(PathVar { index: v.index - 1, hint: v.hint.clone() })
            }
            PathTerm::Var(_) | PathTerm::Rho(_) | PathTerm::Axiom(_) => self.clone(),
            PathTerm::Rewr(m, b, body) => PathTerm::Rewr(
                Arc::new(m.subst_var(depth, with)),
                b.clone(),
                Arc::new(body.subst_var(depth + 1, with)),
            ),
            _ => self.map_children(|c| c.subst_var(depth, with)),
        }
    }

    /// Rebuilds a non-binding node with `f` applied to each child.
    pub(crate) fn map_children(&self, f: impl Fn(&PathTerm) -> PathTerm) -> PathTerm {
        let mut out = self.clone();
        for (i, c) in self.children().into_iter().enumerate() {
            out = out.with_child(i, Arc::new(f(c))).expect("child index in range");
        }
        out
    }
}

/// `rewr(m, g.h)  ▷β  h[m/g]`.
pub fn rewr_beta(t: &PathTerm) -> Result<PathTerm> {
    match t {
        PathTerm::Rewr(m, _, body) => Ok(body.subst_var(0, m)),
        other => Err(Error::NotARedex(format!("{other} is not a rewr term"))),
    }
}

/// `rewr(e, g.g)  ▷η  e`.
pub fn rewr_eta(t: &PathTerm) -> Result<PathTerm> {
    match t {
        PathTerm::Rewr(e, _, body) if matches!(&**body, PathTerm::Var(v) if v.index == 0) => Ok((**e).clone()),
        PathTerm::Rewr(..) => Err(Error::NotARedex(format!("{t}: body is not the bound variable"))),
        other => Err(Error::NotARedex(format!("{other} is not a rewr term"))),
    }
}
