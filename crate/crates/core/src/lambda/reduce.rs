use std::fmt;

use super::term::LambdaTerm;
use crate::error::{Error, Result};
use crate::path::{refl, trans, Endpoint, PathTerm};

/// Default number of contractions before `path_to_normal_form` gives up.
pub const DEFAULT_FUEL: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RedexKind {
    Beta,
    Eta,
}

impl RedexKind {
    pub fn name(self) -> &'static str {
        match self {
            RedexKind::Beta => "beta",
            RedexKind::Eta => "eta",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RedexSite {
    /// Child indices: 0 = abstraction body or function, 1 = argument.
    pub position: Vec<usize>,
    pub kind: RedexKind,
}

impl fmt::Display for RedexSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.kind.name(), self.position)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    LeftmostOutermost,
    LeftmostInnermost,
    /// Any η-redex first (leftmost-outermost among them), otherwise the
    /// leftmost-outermost β-redex.
    EtaFirst,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::LeftmostOutermost => "leftmost-outermost",
            Strategy::LeftmostInnermost => "leftmost-innermost",
            Strategy::EtaFirst => "eta-first",
        }
    }

    pub fn from_name(name: &str) -> Option<Strategy> {
        [Strategy::LeftmostOutermost, Strategy::LeftmostInnermost, Strategy::EtaFirst]
            .into_iter()
            .find(|s| s.name() == name || s.name().replace('-', "_") == name)
    }
}

fn redex_kind(t: &LambdaTerm) -> Option<RedexKind> {
    match t {
        LambdaTerm::App(f, _) if matches!(**f, LambdaTerm::Abs(..)) => Some(RedexKind::Beta),
        LambdaTerm::Abs(_, body) => match &**body {
            LambdaTerm::App(m, x) if **x == LambdaTerm::Bound(0) && !m.has_index(0) => Some(RedexKind::Eta),
            _ => None,
        },
        _ => None,
    }
}

fn children(t: &LambdaTerm) -> Vec<&LambdaTerm> {
    match t {
        LambdaTerm::Abs(_, b) => vec![b],
        LambdaTerm::App(f, a) => vec![f, a],
        _ => Vec::new(),
    }
}

fn collect(t: &LambdaTerm, pos: &mut Vec<usize>, post_order: bool, out: &mut Vec<RedexSite>) {
    let here = redex_kind(t);
    if let (Some(kind), false) = (here, post_order) {
        out.push(RedexSite { position: pos.clone(), kind });
    }
    for (i, c) in children(t).into_iter().enumerate() {
        pos.push(i);
        collect(c, pos, post_order, out);
        pos.pop();
    }
    if let (Some(kind), true) = (here, post_order) {
        out.push(RedexSite { position: pos.clone(), kind });
    }
}

/// Every β- and η-redex, in leftmost-outermost order.
pub fn find_redexes(t: &LambdaTerm) -> Vec<RedexSite> {
    let mut out = Vec::new();
    collect(t, &mut Vec::new(), false, &mut out);
    out
}

fn choose(t: &LambdaTerm, strategy: Strategy) -> Option<RedexSite> {
    match strategy {
        Strategy::LeftmostOutermost => find_redexes(t).into_iter().next(),
        Strategy::LeftmostInnermost => {
            let mut out = Vec::new();
            collect(t, &mut Vec::new(), true, &mut out);
            out.into_iter().next()
        }
        Strategy::EtaFirst => {
            let all = find_redexes(t);
            all.iter().find(|s| s.kind == RedexKind::Eta).or(all.first()).cloned()
        }
    }
}

fn contract_here(t: &LambdaTerm, kind: RedexKind) -> Option<LambdaTerm> {
    match (kind, t) {
        (RedexKind::Beta, LambdaTerm::App(f, arg)) => match &**f {
            LambdaTerm::Abs(_, body) => Some(body.instantiate(arg)),
            _ => None,
        },
        (RedexKind::Eta, LambdaTerm::Abs(_, body)) => match &**body {
            LambdaTerm::App(m, x) if **x == LambdaTerm::Bound(0) && !m.has_index(0) => Some(m.shift_down(0)),
            _ => None,
        },
        _ => None,
    }
}

/// Contracts the redex at `site`, returning the new term and the axiom leaf
/// `beta[t, t']` or `eta[t, t']` that witnesses the step.
pub fn contract(t: &LambdaTerm, site: &RedexSite) -> Result<(LambdaTerm, PathTerm)> {
    let invalid = || Error::InvalidSite(site.to_string());
    let sub = t.subterm(&site.position).ok_or_else(invalid)?;
    let reduced = contract_here(sub, site.kind).ok_or_else(invalid)?;
    let result = t.replace(&site.position, reduced).ok_or_else(invalid)?;
    let step = PathTerm::axiom(
        site.kind.name(),
        Endpoint::Lambda(t.clone()),
        Endpoint::Lambda(result.clone()),
    );
    Ok((result, step))
}

fn compose(acc: Option<PathTerm>, step: PathTerm) -> Result<PathTerm> {
    match acc {
        None => Ok(step),
        Some(p) => trans(p, step),
    }
}

/// Reduces to normal form, composing the steps left-nested:
/// `τ(τ(s1, s2), s3)`. A term already in normal form yields `ρ`.
pub fn path_to_normal_form(t: &LambdaTerm, strategy: Strategy, fuel: usize) -> Result<(LambdaTerm, PathTerm)> {
    let mut cur = t.clone();
    let mut path = None;
    let mut steps = 0;
    while let Some(site) = choose(&cur, strategy) {
        if steps == fuel {
            return Err(Error::FuelExhausted { fuel });
        }
        let (next, step) = contract(&cur, &site)?;
        path = Some(compose(path, step)?);
        cur = next;
        steps += 1;
    }
    let path = path.unwrap_or_else(|| refl(Endpoint::Lambda(cur.clone())));
    Ok((cur, path))
}

/// Like `path_to_normal_form` but follows an explicit list of sites.
pub fn path_along(t: &LambdaTerm, sites: &[RedexSite]) -> Result<(LambdaTerm, PathTerm)> {
    let mut cur = t.clone();
    let mut path = None;
    for site in sites {
        let (next, step) = contract(&cur, site)?;
        path = Some(compose(path, step)?);
        cur = next;
    }
    let path = path.unwrap_or_else(|| refl(Endpoint::Lambda(cur.clone())));
    Ok((cur, path))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::parse_lambda;

    fn lam(s: &str) -> LambdaTerm {
        parse_lambda(s).unwrap()
    }

    #[test]
    fn normal_form_has_no_redexes() {
        assert!(find_redexes(&lam("z v")).is_empty());
        let (nf, path) = path_to_normal_form(&lam("z v"), Strategy::LeftmostOutermost, 10).unwrap();
        assert_eq!(nf, lam("z v"));
        assert_eq!(path, refl(Endpoint::Lambda(lam("z v"))));
    }

    #[test]
    fn identity_applied_to_identity() {
        let sites = find_redexes(&lam("(\\x.x)(\\x.x)"));
        assert_eq!(sites, vec![RedexSite { position: vec![], kind: RedexKind::Beta }]);
    }

    #[test]
    fn beta_step_leaf() {
        let t = lam("(\\y.y v) z");
        let (r, step) = contract(&t, &RedexSite { position: vec![], kind: RedexKind::Beta }).unwrap();
        assert_eq!(r, lam("z v"));
        assert_eq!(step.to_string(), "beta[{(\\y.y v) z},{z v}]");
    }

    #[test]
    fn eta_contracts_only_without_capture() {
        let t = lam("\\x.m x");
        let (r, _) = contract(&t, &RedexSite { position: vec![], kind: RedexKind::Eta }).unwrap();
        assert_eq!(r, lam("m"));
        assert!(find_redexes(&lam("\\x.x x")).is_empty());
        // an η-redex under a binder refers outward correctly
        let t = lam("\\y.\\x.y x");
        let sites = find_redexes(&t);
        assert_eq!(sites, vec![RedexSite { position: vec![0], kind: RedexKind::Eta }]);
        let (r, _) = contract(&t, &sites[0]).unwrap();
        assert_eq!(r, lam("\\y.y"));
    }

    #[test]
    fn beta_avoids_capture() {
        let t = lam("(\\x.\\y.x) y");
        let (r, _) = contract(&t, &RedexSite { position: vec![], kind: RedexKind::Beta }).unwrap();
        // independent check: the free variables of the result are exactly {y}
        let names: Vec<String> = r.free_vars().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["y".to_string()]);
        assert_eq!(r.to_string(), "\\y'.y");
        assert_eq!(r, lam("\\q.y"));
    }

    #[test]
    fn invalid_site_is_rejected() {
        let t = lam("z v");
        let err = contract(&t, &RedexSite { position: vec![], kind: RedexKind::Beta }).unwrap_err();
        assert!(matches!(err, Error::InvalidSite(_)));
        let err = contract(&t, &RedexSite { position: vec![3], kind: RedexKind::Eta }).unwrap_err();
        assert!(matches!(err, Error::InvalidSite(_)));
    }

    #[test]
    fn omega_runs_out_of_fuel() {
        let omega = lam("(\\x.x x)(\\x.x x)");
        for s in [Strategy::LeftmostOutermost, Strategy::LeftmostInnermost] {
            assert_eq!(path_to_normal_form(&omega, s, 100).unwrap_err(), Error::FuelExhausted { fuel: 100 });
        }
    }

    #[test]
    fn strategies_pick_different_sites() {
        let m = lam("(\\x.(\\y.y x)(\\w.z w)) v");
        let sites = find_redexes(&m);
        assert_eq!(sites[0], RedexSite { position: vec![], kind: RedexKind::Beta });
        assert!(sites.contains(&RedexSite { position: vec![0, 0, 1], kind: RedexKind::Eta }));
        assert_eq!(choose(&m, Strategy::LeftmostInnermost).unwrap().kind, RedexKind::Eta);
        assert_eq!(choose(&m, Strategy::EtaFirst).unwrap().position, vec![0, 0, 1]);
    }

    #[test]
    fn strategy_names_parse() {
        assert_eq!(Strategy::from_name("leftmost_innermost"), Some(Strategy::LeftmostInnermost));
        assert_eq!(Strategy::from_name("eta-first"), Some(Strategy::EtaFirst));
        assert_eq!(Strategy::from_name("random"), None);
    }
}
