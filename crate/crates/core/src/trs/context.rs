use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::name::BinderName;
use crate::path::{PathTerm, PathVar, Position};

/// A path term with a single hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    frame: PathTerm,
    hole: Position,
}

impl Context {
    pub fn trivial() -> Self {
        Context { frame: PathTerm::Rho(crate::path::Endpoint::atom("_")), hole: Position::root() }
    }

    /// Builds a context from `frame` by punching a hole at `hole`.
    pub fn new(frame: PathTerm, hole: Position) -> Option<Self> {
        frame.subterm(hole.as_slice())?;
        Some(Context { frame, hole })
    }

    pub fn hole(&self) -> &Position {
        &self.hole
    }

    pub fn is_trivial(&self) -> bool {
        self.hole.as_slice().is_empty()
    }

    /// `C[t]`.
    pub fn plug(&self, t: PathTerm) -> PathTerm {
        self.frame.replace_at(self.hole.as_slice(), t).expect("hole position is valid")
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // an unbound variable prints as its hint
        let marker = PathTerm::Var(PathVar { index: 1 << 40, hint: BinderName::new("·") });
        write!(f, "{}", self.plug(marker))
    }
}

/// Least general single-hole context shared by `a` and `b`, with the two
/// subterms found at the hole. `None` when `a == b`.
pub fn common_context(a: &PathTerm, b: &PathTerm) -> Result<Option<(Context, PathTerm, PathTerm)>> {
    if a == b {
        return Ok(None);
    }
    let mut pos = Vec::new();
    let (mut x, mut y) = (a, b);
    loop {
        if !x.same_head(y) {
            let ctx = Context { frame: a.clone(), hole: Position(pos) };
            return Ok(Some((ctx, x.clone(), y.clone())));
        }
        let (xs, ys) = (x.children(), y.children());
        let differing: Vec<usize> = (0..xs.len()).filter(|&i| xs[i] != ys[i]).collect();
        match differing.as_slice() {
            [i] => {
                pos.push(*i);
                x = xs[*i];
                y = ys[*i];
            }
            _ => return Err(Error::NoCommonShape),
        }
    }
}

/// Nodes a rewrite context may pass through: σ and the congruence formers.
/// Compositions (τ, sub) are excluded, since `τ(C[r], C[σ(r)]) = C[ρ]`
/// only holds when `C` preserves composition.
pub(crate) fn admissible_spine(t: &PathTerm) -> bool {
    matches!(t, PathTerm::Sigma(_) | PathTerm::Former(..))
}

/// Hole positions usable for a context shared by `a` and `b`, deepest first.
pub(crate) fn hole_candidates(a: &Arc<PathTerm>, b: &Arc<PathTerm>) -> Vec<(Vec<usize>, Arc<PathTerm>, Arc<PathTerm>)> {
    let mut out = vec![(Vec::new(), a.clone(), b.clone())];
    let mut pos = Vec::new();
    let (mut x, mut y) = (a.clone(), b.clone());
    while admissible_spine(&x) && x.same_head(&y) {
        let (nx, ny) = {
            let (xs, ys) = (x.children(), y.children());
            let differing: Vec<usize> = (0..xs.len()).filter(|&i| xs[i] != ys[i]).collect();
            let [i] = differing.as_slice() else { break };
            pos.push(*i);
            (xs[*i].clone(), ys[*i].clone())
        };
        x = nx;
        y = ny;
        out.push((pos.clone(), x.clone(), y.clone()));
    }
    out.reverse();
    out
}
