use std::collections::BTreeSet;
use std::sync::Arc;

use crate::name::BinderName;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaTerm {
    /// A free variable, identified by name.
    Free(Arc<str>),
    /// A bound variable as a de Bruijn index (0 = innermost binder).
    Bound(usize),
    Abs(BinderName, Arc<LambdaTerm>),
    App(Arc<LambdaTerm>, Arc<LambdaTerm>),
}

/// α-equivalence. With positional binders this is plain structural equality.
pub fn alpha_eq(a: &LambdaTerm, b: &LambdaTerm) -> bool {
    a == b
}

impl LambdaTerm {
    pub fn var(name: &str) -> Self {
        LambdaTerm::Free(Arc::from(name))
    }

    pub fn app(fun: LambdaTerm, arg: LambdaTerm) -> Self {
        LambdaTerm::App(Arc::new(fun), Arc::new(arg))
    }

    /// `λname.body`, binding every free occurrence of `name` in `body`.
    pub fn abs(name: &str, body: LambdaTerm) -> Self {
        let closed = body.close(name, 0);
        LambdaTerm::Abs(BinderName::new(name), Arc::new(closed))
    }

    fn close(&self, name: &str, depth: usize) -> LambdaTerm {
        match self {
            LambdaTerm::Free(n) if &**n == name => LambdaTerm::Bound(depth),
            LambdaTerm::Free(_) | LambdaTerm::Bound(_) => self.clone(),
            LambdaTerm::Abs(h, body) => LambdaTerm::Abs(h.clone(), Arc::new(body.close(name, depth + 1))),
            LambdaTerm::App(f, a) => LambdaTerm::app(f.close(name, depth), a.close(name, depth)),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Arc<str>> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<Arc<str>>) {
        match self {
            LambdaTerm::Free(n) => {
                out.insert(n.clone());
            }
            LambdaTerm::Bound(_) => {}
            LambdaTerm::Abs(_, b) => b.collect_free(out),
            LambdaTerm::App(f, a) => {
                f.collect_free(out);
                a.collect_free(out);
            }
        }
    }

    /// Whether de Bruijn index `index` (relative to this term) occurs.
    pub(crate) fn has_index(&self, index: usize) -> bool {
        match self {
            LambdaTerm::Free(_) => false,
            LambdaTerm::Bound(k) => *k == index,
            LambdaTerm::Abs(_, b) => b.has_index(index + 1),
            LambdaTerm::App(f, a) => f.has_index(index) || a.has_index(index),
        }
    }

    /// Adds `by` to every index at or above `cutoff`.
    pub(crate) fn shift_up(&self, by: usize, cutoff: usize) -> LambdaTerm {
        if by == 0 {
            return self.clone();
        }
        match self {
            LambdaTerm::Free(_) => self.clone(),
            LambdaTerm::Bound(k) if *k >= cutoff => LambdaTerm::Bound(k + by),
            LambdaTerm::Bound(_) => self.clone(),
            LambdaTerm::Abs(h, b) => LambdaTerm::Abs(h.clone(), Arc::new(b.shift_up(by, cutoff + 1))),
            LambdaTerm::App(f, a) => LambdaTerm::app(f.shift_up(by, cutoff), a.shift_up(by, cutoff)),
        }
    }

    /// Removes binder `cutoff`, which must not occur: indices above it drop by one.
    pub(crate) fn shift_down(&self, cutoff: usize) -> LambdaTerm {
        match self {
            LambdaTerm::Free(_) => self.clone(),
            LambdaTerm::Bound(k) if *k > cutoff => LambdaTerm::Bound(k - 1),
            LambdaTerm::Bound(_) => self.clone(),
            LambdaTerm::Abs(h, b) => LambdaTerm::Abs(h.clone(), Arc::new(b.shift_down(cutoff + 1))),
            LambdaTerm::App(f, a) => LambdaTerm::app(f.shift_down(cutoff), a.shift_down(cutoff)),
        }
    }

    /// Body of an abstraction with its binder replaced by `arg`.
    pub(crate) fn instantiate(&self, arg: &LambdaTerm) -> LambdaTerm {
        self.subst_at(0, arg)
    }

    fn subst_at(&self, depth: usize, arg: &LambdaTerm) -> LambdaTerm {
        match self {
            LambdaTerm::Free(_) => self.clone(),
            LambdaTerm::Bound(k) if *k == depth => arg.shift_up(depth, 0),
            LambdaTerm::Bound(k) if *k > depth => LambdaTerm::Bound(k - 1),
            LambdaTerm::Bound(_) => self.clone(),
            LambdaTerm::Abs(h, b) => LambdaTerm::Abs(h.clone(), Arc::new(b.subst_at(depth + 1, arg))),
            LambdaTerm::App(f, a) => LambdaTerm::app(f.subst_at(depth, arg), a.subst_at(depth, arg)),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            LambdaTerm::Free(_) | LambdaTerm::Bound(_) => 1,
            LambdaTerm::Abs(_, b) => 1 + b.size(),
            LambdaTerm::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LambdaTerm::Free(_) | LambdaTerm::Bound(_) => 1,
            LambdaTerm::Abs(_, b) => 1 + b.depth(),
            LambdaTerm::App(f, a) => 1 + f.depth().max(a.depth()),
        }
    }

    pub(crate) fn subterm(&self, position: &[usize]) -> Option<&LambdaTerm> {
        let Some((&first, rest)) = position.split_first() else {
            return Some(self);
        };
        match (self, first) {
            (LambdaTerm::Abs(_, b), 0) => b.subterm(rest),
            (LambdaTerm::App(f, _), 0) => f.subterm(rest),
            (LambdaTerm::App(_, a), 1) => a.subterm(rest),
            _ => None,
        }
    }

    pub(crate) fn replace(&self, position: &[usize], with: LambdaTerm) -> Option<LambdaTerm> {
        let Some((&first, rest)) = position.split_first() else {
            return Some(with);
        };
        Some(match (self, first) {
            (LambdaTerm::Abs(h, b), 0) => LambdaTerm::Abs(h.clone(), Arc::new(b.replace(rest, with)?)),
            (LambdaTerm::App(f, a), 0) => LambdaTerm::App(Arc::new(f.replace(rest, with)?), a.clone()),
            (LambdaTerm::App(f, a), 1) => LambdaTerm::App(f.clone(), Arc::new(a.replace(rest, with)?)),
            _ => return None,
        })
    }
}
