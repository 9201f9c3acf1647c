use std::fmt;
use std::sync::Arc;

use super::endpoint::{Endpoint, Former};
use crate::error::{Error, Result};
use crate::name::BinderName;

/// What an axiom leaf cites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomLabel {
    Beta,
    Eta,
    Alpha,
    /// A named generating path, e.g. a surface loop.
    Generator,
}

impl AxiomLabel {
    /// Leaves named `beta`, `eta` or `alpha` cite the λ-calculus axioms;
    /// every other name is a generator.
    pub fn for_name(name: &str) -> AxiomLabel {
        match name {
            "beta" => AxiomLabel::Beta,
            "eta" => AxiomLabel::Eta,
            "alpha" => AxiomLabel::Alpha,
            _ => AxiomLabel::Generator,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Axiom {
    pub label: AxiomLabel,
    pub name: Arc<str>,
    pub source: Endpoint,
    pub target: Endpoint,
}

/// A bound path variable: de Bruijn index plus a printing hint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathVar {
    pub index: usize,
    pub hint: BinderName,
}

/// A computational path.
///
/// Endpoints live only on `Rho` and `Axiom` leaves; everything else derives
/// them. Use the checked constructors (`trans`, `former`, ...) to build terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathTerm {
    Rho(Endpoint),
    Sigma(Arc<PathTerm>),
    Tau(Arc<PathTerm>, Arc<PathTerm>),
    SubL(Arc<PathTerm>, Arc<PathTerm>),
    SubR(Arc<PathTerm>, Arc<PathTerm>),
    Former(Former, Vec<Arc<PathTerm>>),
    Axiom(Axiom),
    Rewr(Arc<PathTerm>, BinderName, Arc<PathTerm>),
    Var(PathVar),
}

/// Child indices leading from the root to a subterm.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position(pub Vec<usize>);

impl Position {
    pub fn root() -> Self {
        Position(Vec::new())
    }

    pub fn child(&self, index: usize) -> Position {
        let mut v = self.0.clone();
        v.push(index);
        Position(v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

/// Endpoints of the enclosing `rewr` binders, innermost last.
pub(crate) type Env = Vec<(Endpoint, Endpoint)>;

fn mismatch(left: &Endpoint, right: &Endpoint) -> Error {
    Error::EndpointMismatch { left: left.to_string(), right: right.to_string() }
}

pub fn refl(e: Endpoint) -> PathTerm {
    PathTerm::Rho(e)
}

pub fn symm(p: PathTerm) -> PathTerm {
    PathTerm::Sigma(Arc::new(p))
}

/// `τ(p, q)`; fails unless `p` ends where `q` starts.
pub fn trans(p: PathTerm, q: PathTerm) -> Result<PathTerm> {
    let (_, pt) = p.endpoints()?;
    let (qs, _) = q.endpoints()?;
    if pt != qs {
        return Err(mismatch(&pt, &qs));
    }
    Ok(PathTerm::Tau(Arc::new(p), Arc::new(q)))
}

impl PathTerm {
    pub fn axiom(name: &str, source: Endpoint, target: Endpoint) -> PathTerm {
        PathTerm::Axiom(Axiom { label: AxiomLabel::for_name(name), name: Arc::from(name), source, target })
    }

    /// Shorthand for a generator leaf between two atoms.
    pub fn leaf(name: &str, source: &str, target: &str) -> PathTerm {
        PathTerm::axiom(name, Endpoint::atom(source), Endpoint::atom(target))
    }

    pub fn sub_l(main: PathTerm, sub: PathTerm) -> Result<PathTerm> {
        let t = PathTerm::SubL(Arc::new(main), Arc::new(sub));
        t.endpoints()?;
        Ok(t)
    }

    pub fn sub_r(main: PathTerm, sub: PathTerm) -> Result<PathTerm> {
        let t = PathTerm::SubR(Arc::new(main), Arc::new(sub));
        t.endpoints()?;
        Ok(t)
    }

    pub fn former(former: Former, args: Vec<PathTerm>) -> Result<PathTerm> {
        let t = PathTerm::Former(former, args.into_iter().map(Arc::new).collect());
        t.endpoints()?;
        Ok(t)
    }

    /// `rewr(scrutinee, binder.body)`; `body` refers to the binder through
    /// `Var` index 0.
    pub fn rewr(scrutinee: PathTerm, binder: &str, body: PathTerm) -> Result<PathTerm> {
        let t = PathTerm::Rewr(Arc::new(scrutinee), BinderName::new(binder), Arc::new(body));
        t.endpoints()?;
        Ok(t)
    }

    /// Source and target, checking every composition on the way.
    pub fn endpoints(&self) -> Result<(Endpoint, Endpoint)> {
        self.endpoints_in(&mut Vec::new())
    }

    pub fn source(&self) -> Result<Endpoint> {
        Ok(self.endpoints()?.0)
    }

    pub fn target(&self) -> Result<Endpoint> {
        Ok(self.endpoints()?.1)
    }

    pub fn is_well_formed(&self) -> bool {
        self.endpoints().is_ok()
    }

    pub(crate) fn endpoints_in(&self, env: &mut Env) -> Result<(Endpoint, Endpoint)> {
        match self {
            PathTerm::Rho(e) => Ok((e.clone(), e.clone())),
            PathTerm::Axiom(ax) => Ok((ax.source.clone(), ax.target.clone())),
            PathTerm::Sigma(p) => {
                let (s, t) = p.endpoints_in(env)?;
                Ok((t, s))
            }
            PathTerm::Tau(l, r) | PathTerm::SubL(l, r) | PathTerm::SubR(l, r) => {
                let (ls, lt) = l.endpoints_in(env)?;
                let (rs, rt) = r.endpoints_in(env)?;
                if lt != rs {
                    return Err(Error::IllFormed(format!(
                        "{} composes a path ending at {lt} with one starting at {rs}",
                        self.constructor_name()
                    )));
                }
                Ok((ls, rt))
            }
            PathTerm::Former(f, args) => {
                if !f.accepts(args.len()) {
                    return Err(Error::IllFormed(format!("{f} applied to {} arguments", args.len())));
                }
                let mut sources = Vec::with_capacity(args.len());
                let mut targets = Vec::with_capacity(args.len());
                for a in args {
                    let (s, t) = a.endpoints_in(env)?;
                    sources.push(s);
                    targets.push(t);
                }
                Ok((Endpoint::apply(*f, sources), Endpoint::apply(*f, targets)))
            }
            PathTerm::Rewr(m, _, body) => {
                let e = m.endpoints_in(env)?;
                env.push(e);
                let r = body.endpoints_in(env);
                env.pop();
                r
            }
            PathTerm::Var(v) => env
                .len()
                .checked_sub(v.index + 1)
                .map(|i| env[i].clone())
                .ok_or_else(|| Error::IllFormed(format!("unbound path variable {}", v.hint))),
        }
    }

    pub(crate) fn constructor_name(&self) -> &'static str {
        match self {
            PathTerm::Rho(_) => "rho",
            PathTerm::Sigma(_) => "sigma",
            PathTerm::Tau(..) => "tau",
            PathTerm::SubL(..) => "subL",
            PathTerm::SubR(..) => "subR",
            PathTerm::Former(f, _) => f.name(),
            PathTerm::Axiom(_) => "axiom",
            PathTerm::Rewr(..) => "rewr",
            PathTerm::Var(_) => "var",
        }
    }

    pub fn children(&self) -> Vec<&Arc<PathTerm>> {
        match self {
            PathTerm::Rho(_) | PathTerm::Axiom(_) | PathTerm::Var(_) => Vec::new(),
            PathTerm::Sigma(p) => vec![p],
            PathTerm::Tau(l, r) | PathTerm::SubL(l, r) | PathTerm::SubR(l, r) | PathTerm::Rewr(l, _, r) => {
                vec![l, r]
            }
            PathTerm::Former(_, args) => args.iter().collect(),
        }
    }

    pub fn child(&self, index: usize) -> Option<&Arc<PathTerm>> {
        match (self, index) {
            (PathTerm::Sigma(p), 0) => Some(p),
            (PathTerm::Tau(l, _) | PathTerm::SubL(l, _) | PathTerm::SubR(l, _) | PathTerm::Rewr(l, _, _), 0) => Some(l),
            (PathTerm::Tau(_, r) | PathTerm::SubL(_, r) | PathTerm::SubR(_, r) | PathTerm::Rewr(_, _, r), 1) => Some(r),
            (PathTerm::Former(_, args), i) => args.get(i),
            _ => None,
        }
    }

    /// Same constructor with child `index` replaced.
    pub(crate) fn with_child(&self, index: usize, child: Arc<PathTerm>) -> Option<PathTerm> {
        Some(match (self, index) {
            (PathTerm::Sigma(_), 0) => PathTerm::Sigma(child),
            (PathTerm::Tau(_, r), 0) => PathTerm::Tau(child, r.clone()),
            (PathTerm::Tau(l, _), 1) => PathTerm::Tau(l.clone(), child),
            (PathTerm::SubL(_, r), 0) => PathTerm::SubL(child, r.clone()),
            (PathTerm::SubL(l, _), 1) => PathTerm::SubL(l.clone(), child),
            (PathTerm::SubR(_, r), 0) => PathTerm::SubR(child, r.clone()),
            (PathTerm::SubR(l, _), 1) => PathTerm::SubR(l.clone(), child),
            (PathTerm::Rewr(_, b, r), 0) => PathTerm::Rewr(child, b.clone(), r.clone()),
            (PathTerm::Rewr(l, b, _), 1) => PathTerm::Rewr(l.clone(), b.clone(), child),
            (PathTerm::Former(f, args), i) if i < args.len() => {
                let mut args = args.clone();
                args[i] = child;
                PathTerm::Former(*f, args)
            }
            _ => return None,
        })
    }

    /// True when both nodes use the same constructor and leaf data, ignoring children.
    pub(crate) fn same_head(&self, other: &PathTerm) -> bool {
        match (self, other) {
            (PathTerm::Rho(a), PathTerm::Rho(b)) => a == b,
            (PathTerm::Axiom(a), PathTerm::Axiom(b)) => a == b,
            (PathTerm::Var(a), PathTerm::Var(b)) => a == b,
            (PathTerm::Sigma(_), PathTerm::Sigma(_))
            | (PathTerm::Tau(..), PathTerm::Tau(..))
            | (PathTerm::SubL(..), PathTerm::SubL(..))
            | (PathTerm::SubR(..), PathTerm::SubR(..))
            | (PathTerm::Rewr(..), PathTerm::Rewr(..)) => true,
            (PathTerm::Former(f, a), PathTerm::Former(g, b)) => f == g && a.len() == b.len(),
            _ => false,
        }
    }

    pub fn subterm(&self, position: &[usize]) -> Option<&PathTerm> {
        let mut cur = self;
        for &i in position {
            cur = cur.child(i)?;
        }
        Some(cur)
    }

    pub fn replace_at(&self, position: &[usize], with: PathTerm) -> Option<PathTerm> {
        match position.split_first() {
            None => Some(with),
            Some((&i, rest)) => {
                let child = self.child(i)?.replace_at(rest, with)?;
                self.with_child(i, Arc::new(child))
            }
        }
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Number of axiom leaves.
    pub fn axiom_count(&self) -> usize {
        match self {
            PathTerm::Axiom(_) => 1,
            _ => self.children().iter().map(|c| c.axiom_count()).sum(),
        }
    }

    pub fn count_nodes(&self, pred: &dyn Fn(&PathTerm) -> bool) -> usize {
        usize::from(pred(self)) + self.children().iter().map(|c| c.count_nodes(pred)).sum::<usize>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> PathTerm {
        PathTerm::leaf("t", "a", "b")
    }

    fn u() -> PathTerm {
        PathTerm::leaf("u", "b", "c")
    }

    #[test]
    fn refl_has_equal_endpoints() {
        let base = Endpoint::atom("base");
        assert_eq!(refl(base.clone()).endpoints().unwrap(), (base.clone(), base));
    }

    #[test]
    fn trans_composes_end_to_end() {
        let p = trans(t(), u()).unwrap();
        assert_eq!(p.endpoints().unwrap(), (Endpoint::atom("a"), Endpoint::atom("c")));
        let x0 = Endpoint::atom("x0");
        let rr = trans(refl(x0.clone()), refl(x0.clone())).unwrap();
        assert_eq!(rr.endpoints().unwrap(), (x0.clone(), x0));
    }

    #[test]
    fn trans_rejects_gaps() {
        let err = trans(t(), PathTerm::leaf("q", "c", "d")).unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch { .. }));
    }

    #[test]
    fn symm_swaps_and_stays_free() {
        let s = symm(t());
        assert_eq!(s.endpoints().unwrap(), (Endpoint::atom("b"), Endpoint::atom("a")));
        let ss = symm(symm(t()));
        assert_ne!(ss, t());
        assert_eq!(ss.endpoints().unwrap(), t().endpoints().unwrap());
    }

    #[test]
    fn loop_with_inverse_is_a_loop() {
        let lp = PathTerm::leaf("loop", "base", "base");
        let p = trans(lp.clone(), symm(lp)).unwrap();
        let base = Endpoint::atom("base");
        assert_eq!(p.endpoints().unwrap(), (base.clone(), base));
    }

    #[test]
    fn ill_formed_tau_is_detected() {
        let bad = PathTerm::Tau(Arc::new(t()), Arc::new(t()));
        assert!(matches!(bad.endpoints(), Err(Error::IllFormed(_))));
    }

    #[test]
    fn unbound_variable_is_ill_formed() {
        let v = PathTerm::Var(PathVar { index: 0, hint: BinderName::new("g") });
        assert!(v.endpoints().is_err());
    }

    #[test]
    fn replace_and_subterm_agree() {
        let p = trans(t(), u()).unwrap();
        assert_eq!(p.subterm(&[1]), Some(&u()));
        let q = p.replace_at(&[1], PathTerm::leaf("w", "b", "c")).unwrap();
        assert_eq!(q.subterm(&[1]), Some(&PathTerm::leaf("w", "b", "c")));
        assert!(p.subterm(&[2]).is_none());
    }
}
