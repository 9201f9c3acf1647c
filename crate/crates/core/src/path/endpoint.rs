use std::fmt;
use std::sync::Arc;

use crate::lambda::LambdaTerm;

/// Introduction formers (ξ family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XiKind {
    Xi,
    Xi1,
    Xi2,
    XiAnd,
}

/// Elimination formers (μ family).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MuKind {
    Mu,
    Mu1,
    Mu2,
}

/// Congruence formers that may wrap paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Former {
    Xi(XiKind),
    Mu(MuKind),
    Nu,
}

impl Former {
    pub const ALL: [Former; 8] = [
        Former::Xi(XiKind::Xi),
        Former::Xi(XiKind::Xi1),
        Former::Xi(XiKind::Xi2),
        Former::Xi(XiKind::XiAnd),
        Former::Mu(MuKind::Mu),
        Former::Mu(MuKind::Mu1),
        Former::Mu(MuKind::Mu2),
        Former::Nu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Former::Xi(XiKind::Xi) => "xi",
            Former::Xi(XiKind::Xi1) => "xi1",
            Former::Xi(XiKind::Xi2) => "xi2",
            Former::Xi(XiKind::XiAnd) => "xiAnd",
            Former::Mu(MuKind::Mu) => "mu",
            Former::Mu(MuKind::Mu1) => "mu1",
            Former::Mu(MuKind::Mu2) => "mu2",
            Former::Nu => "nu",
        }
    }

    pub fn from_name(name: &str) -> Option<Former> {
        Former::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Argument counts the former accepts.
    pub fn arities(self) -> &'static [usize] {
        match self {
            Former::Xi(XiKind::XiAnd) => &[2],
            Former::Mu(MuKind::Mu) => &[2, 3],
            _ => &[1],
        }
    }

    pub fn accepts(self, arity: usize) -> bool {
        self.arities().contains(&arity)
    }
}

impl fmt::Display for Former {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A point of a type: the source or target of a path.
///
/// `Apply` appears only as a derived endpoint of a congruence former; it is
/// kept in normal form with respect to the former computation rules, so two
/// endpoints are equal exactly when they are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Endpoint {
    Atom(Arc<str>),
    Lambda(LambdaTerm),
    Apply(Former, Vec<Endpoint>),
}

impl Endpoint {
    pub fn atom(name: &str) -> Self {
        Endpoint::Atom(Arc::from(name))
    }

    /// Applies `former` to endpoint arguments and contracts the result.
    pub fn apply(former: Former, args: Vec<Endpoint>) -> Endpoint {
        use Former::{Mu, Nu, Xi};
        use MuKind::{Mu as M, Mu1, Mu2};
        use XiKind::{Xi as X, Xi1, Xi2, XiAnd};

        fn head(e: &Endpoint) -> Option<(Former, &[Endpoint])> {
            match e {
                Endpoint::Apply(f, a) => Some((*f, a.as_slice())),
                _ => None,
            }
        }

        let picked: Option<&Endpoint> = match (former, args.as_slice()) {
            (Mu(Mu1), [e]) => match head(e) {
                Some((Xi(Xi1), [a])) | Some((Xi(XiAnd), [a, _])) => Some(a),
                _ => None,
            },
            (Mu(Mu2), [e]) => match head(e) {
                Some((Xi(Xi2), [a])) | Some((Xi(XiAnd), [_, a])) => Some(a),
                _ => None,
            },
            (Mu(M), [scrut, left, right]) => match head(scrut) {
                Some((Xi(Xi1), [_])) => Some(left),
                Some((Xi(Xi2), [_])) => Some(right),
                _ => match (head(left), head(right)) {
                    (Some((Xi(Xi1), [_])), Some((Xi(Xi2), [_]))) => Some(scrut),
                    _ => None,
                },
            },
            (Nu, [e]) => match head(e) {
                Some((Xi(X), [a])) => Some(a),
                _ => None,
            },
            (Mu(M), [first, second]) => match (head(first), head(second)) {
                (Some((Xi(Xi2), [_])), _) => Some(second),
                (_, Some((Xi(Xi2), [_]))) => Some(first),
                _ => None,
            },
            (Xi(XiAnd), [l, r]) => match (head(l), head(r)) {
                (Some((Mu(Mu1), [a])), Some((Mu(Mu2), [b]))) if a == b => Some(a),
                _ => None,
            },
            (Xi(X), [e]) => match head(e) {
                Some((Nu, [a])) => Some(a),
                _ => None,
            },
            _ => None,
        };
        match picked {
            Some(e) => e.clone(),
            None => Endpoint::Apply(former, args),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::Atom(n) => f.write_str(n),
            Endpoint::Lambda(t) => write!(f, "{{{t}}}"),
            Endpoint::Apply(former, args) => {
                write!(f, "{former}<")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(">")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ap(f: Former, args: Vec<Endpoint>) -> Endpoint {
        Endpoint::apply(f, args)
    }

    #[test]
    fn projections_compute() {
        let a = Endpoint::atom("a");
        let b = Endpoint::atom("b");
        let pair = ap(Former::Xi(XiKind::XiAnd), vec![a.clone(), b.clone()]);
        assert_eq!(ap(Former::Mu(MuKind::Mu1), vec![pair.clone()]), a);
        assert_eq!(ap(Former::Mu(MuKind::Mu2), vec![pair]), b);
    }

    #[test]
    fn surjective_pairing_contracts() {
        let r = Endpoint::atom("r");
        let fst = ap(Former::Mu(MuKind::Mu1), vec![r.clone()]);
        let snd = ap(Former::Mu(MuKind::Mu2), vec![r.clone()]);
        assert_eq!(ap(Former::Xi(XiKind::XiAnd), vec![fst, snd]), r);
    }

    #[test]
    fn stuck_applications_stay() {
        let a = Endpoint::atom("a");
        let e = ap(Former::Mu(MuKind::Mu1), vec![a.clone()]);
        assert_eq!(e, Endpoint::Apply(Former::Mu(MuKind::Mu1), vec![a]));
        assert_eq!(e.to_string(), "mu1<a>");
    }

    #[test]
    fn arity_table() {
        assert!(Former::Mu(MuKind::Mu).accepts(2));
        assert!(Former::Mu(MuKind::Mu).accepts(3));
        assert!(!Former::Mu(MuKind::Mu).accepts(1));
        assert!(Former::Xi(XiKind::XiAnd).accepts(2));
        assert!(Former::Nu.accepts(1));
        for f in Former::ALL {
            assert_eq!(Former::from_name(f.name()), Some(f));
        }
    }
}
