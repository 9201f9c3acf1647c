use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::path::{Former, MuKind, PathTerm, XiKind};

/// Label of a rewrite rule: the 39 core rules in table order, followed by
/// the surface relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    Sr,
    Ss,
    Tr,
    Tsr,
    Trr,
    Tlr,
    Slr,
    Srr,
    Sls,
    Slss,
    Srs,
    Srrr,
    Mx2l1,
    Mx2l2,
    Mx2r1,
    Mx2r2,
    Mx3l,
    Mx3r,
    Mxl,
    Mxr,
    Mx,
    Mxx,
    Xmr,
    Mx1r,
    Stss,
    Ssbl,
    Ssbr,
    Sx,
    Sxss,
    Sm,
    Smss,
    Smsss,
    Tsbll,
    Tsbrl,
    Tsblr,
    Tsbrr,
    Tt,
    Tts,
    Tst,
    /// Torus commutation.
    Co,
    /// Projective-plane relation.
    Cicl,
}

impl RuleId {
    pub const CORE: [RuleId; 39] = [
        RuleId::Sr,
        RuleId::Ss,
        RuleId::Tr,
        RuleId::Tsr,
        RuleId::Trr,
        RuleId::Tlr,
        RuleId::Slr,
        RuleId::Srr,
        RuleId::Sls,
        RuleId::Slss,
        RuleId::Srs,
        RuleId::Srrr,
        RuleId::Mx2l1,
        RuleId::Mx2l2,
        RuleId::Mx2r1,
        RuleId::Mx2r2,
        RuleId::Mx3l,
        RuleId::Mx3r,
        RuleId::Mxl,
        RuleId::Mxr,
        RuleId::Mx,
        RuleId::Mxx,
        RuleId::Xmr,
        RuleId::Mx1r,
        RuleId::Stss,
        RuleId::Ssbl,
        RuleId::Ssbr,
        RuleId::Sx,
        RuleId::Sxss,
        RuleId::Sm,
        RuleId::Smss,
        RuleId::Smsss,
        RuleId::Tsbll,
        RuleId::Tsbrl,
        RuleId::Tsblr,
        RuleId::Tsbrr,
        RuleId::Tt,
        RuleId::Tts,
        RuleId::Tst,
    ];

    pub fn label(self) -> &'static str {
        match self {
            RuleId::Sr => "sr",
            RuleId::Ss => "ss",
            RuleId::Tr => "tr",
            RuleId::Tsr => "tsr",
            RuleId::Trr => "trr",
            RuleId::Tlr => "tlr",
            RuleId::Slr => "slr",
            RuleId::Srr => "srr",
            RuleId::Sls => "sls",
            RuleId::Slss => "slss",
            RuleId::Srs => "srs",
            RuleId::Srrr => "srrr",
            RuleId::Mx2l1 => "mx2l1",
            RuleId::Mx2l2 => "mx2l2",
            RuleId::Mx2r1 => "mx2r1",
            RuleId::Mx2r2 => "mx2r2",
            RuleId::Mx3l => "mx3l",
            RuleId::Mx3r => "mx3r",
            RuleId::Mxl => "mxl",
            RuleId::Mxr => "mxr",
            RuleId::Mx => "mx",
            RuleId::Mxx => "mxx",
            RuleId::Xmr => "xmr",
            RuleId::Mx1r => "mx1r",
            RuleId::Stss => "stss",
            RuleId::Ssbl => "ssbl",
            RuleId::Ssbr => "ssbr",
            RuleId::Sx => "sx",
            RuleId::Sxss => "sxss",
            RuleId::Sm => "sm",
            RuleId::Smss => "smss",
            RuleId::Smsss => "smsss",
            RuleId::Tsbll => "tsbll",
            RuleId::Tsbrl => "tsbrl",
            RuleId::Tsblr => "tsblr",
            RuleId::Tsbrr => "tsbrr",
            RuleId::Tt => "tt",
            RuleId::Tts => "tts",
            RuleId::Tst => "tst",
            RuleId::Co => "co",
            RuleId::Cicl => "cicl",
        }
    }

    /// 1-based position in the core table; `None` for surface relations.
    pub fn index(self) -> Option<usize> {
        RuleId::CORE.iter().position(|r| *r == self).map(|i| i + 1)
    }

    pub fn from_label(label: &str) -> Result<RuleId> {
        RuleId::CORE
            .into_iter()
            .chain([RuleId::Co, RuleId::Cicl])
            .find(|r| r.label() == label)
            .ok_or_else(|| Error::UnknownRule(label.to_string()))
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Which formers a former pattern accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormerPat {
    Is(Former),
    /// `xi`, `xi1`, `xi2`.
    UnaryIntro,
    /// `mu1`, `mu2`, `nu`.
    UnaryElim,
}

impl FormerPat {
    pub fn accepts(self, f: Former) -> bool {
        match self {
            FormerPat::Is(g) => f == g,
            FormerPat::UnaryIntro => matches!(f, Former::Xi(XiKind::Xi | XiKind::Xi1 | XiKind::Xi2)),
            FormerPat::UnaryElim => matches!(f, Former::Mu(MuKind::Mu1 | MuKind::Mu2) | Former::Nu),
        }
    }
}

/// Left- and right-hand sides of rules.
///
/// `Hole(p)` is `C[p]`: every hole in one rule shares the same context `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Meta(char),
    Rho,
    Sigma(Box<Pattern>),
    Tau(Box<Pattern>, Box<Pattern>),
    SubL(Box<Pattern>, Box<Pattern>),
    SubR(Box<Pattern>, Box<Pattern>),
    Former(FormerPat, Vec<Pattern>),
    Hole(Box<Pattern>),
    /// Matches one fixed term, e.g. a surface generator.
    Exact(PathTerm),
}

impl Pattern {
    pub(crate) fn contains_rho(&self) -> bool {
        match self {
            Pattern::Rho => true,
            Pattern::Meta(_) | Pattern::Exact(_) => false,
            Pattern::Sigma(p) | Pattern::Hole(p) => p.contains_rho(),
            Pattern::Tau(a, b) | Pattern::SubL(a, b) | Pattern::SubR(a, b) => a.contains_rho() || b.contains_rho(),
            Pattern::Former(_, args) => args.iter().any(Pattern::contains_rho),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Meta(c) => write!(f, "{c}"),
            Pattern::Rho => f.write_str("rho"),
            Pattern::Sigma(p) => write!(f, "sigma({p})"),
            Pattern::Tau(a, b) => write!(f, "tau({a},{b})"),
            Pattern::SubL(a, b) => write!(f, "subL({a},{b})"),
            Pattern::SubR(a, b) => write!(f, "subR({a},{b})"),
            Pattern::Hole(p) => write!(f, "C[{p}]"),
            Pattern::Exact(t) => write!(f, "{t}"),
            Pattern::Former(fp, args) => {
                let name = match fp {
                    FormerPat::Is(g) => g.name(),
                    FormerPat::UnaryIntro => "xi",
                    FormerPat::UnaryElim => "mu",
                };
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub id: RuleId,
    pub lhs: Pattern,
    pub rhs: Pattern,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id.index() {
            Some(i) => write!(f, "{i}. {} ▷ {}", self.lhs, self.rhs),
            None => write!(f, "{}: {} ▷ {}", self.id, self.lhs, self.rhs),
        }
    }
}

// Pattern builders.
pub(crate) fn m(c: char) -> Pattern {
    Pattern::Meta(c)
}
pub(crate) fn rho() -> Pattern {
    Pattern::Rho
}
pub(crate) fn sigma(p: Pattern) -> Pattern {
    Pattern::Sigma(Box::new(p))
}
pub(crate) fn tau(a: Pattern, b: Pattern) -> Pattern {
    Pattern::Tau(Box::new(a), Box::new(b))
}
fn sub_l(a: Pattern, b: Pattern) -> Pattern {
    Pattern::SubL(Box::new(a), Box::new(b))
}
fn sub_r(a: Pattern, b: Pattern) -> Pattern {
    Pattern::SubR(Box::new(a), Box::new(b))
}
fn c(p: Pattern) -> Pattern {
    Pattern::Hole(Box::new(p))
}
fn former(f: Former, args: Vec<Pattern>) -> Pattern {
    Pattern::Former(FormerPat::Is(f), args)
}
fn xi(k: XiKind, args: Vec<Pattern>) -> Pattern {
    former(Former::Xi(k), args)
}
fn mu(k: MuKind, args: Vec<Pattern>) -> Pattern {
    former(Former::Mu(k), args)
}
fn nu(p: Pattern) -> Pattern {
    former(Former::Nu, vec![p])
}

fn rule(id: RuleId, lhs: Pattern, rhs: Pattern) -> Rule {
    Rule { id, lhs, rhs }
}

/// The 39 core rules in table order.
pub fn rule_table() -> Vec<Rule> {
    use MuKind::{Mu, Mu1, Mu2};
    use RuleId::*;
    use XiKind::{Xi, Xi1, Xi2, XiAnd};
    let (r, s, t, u, v) = (|| m('r'), || m('s'), || m('t'), || m('u'), || m('v'));
    vec![
        rule(Sr, sigma(rho()), rho()),
        rule(Ss, sigma(sigma(r())), r()),
        rule(Tr, tau(c(r()), c(sigma(r()))), c(rho())),
        rule(Tsr, tau(c(sigma(r())), c(r())), c(rho())),
        rule(Trr, tau(c(r()), c(rho())), c(r())),
        rule(Tlr, tau(c(rho()), c(r())), c(r())),
        rule(Slr, sub_l(c(r()), c(rho())), c(r())),
        rule(Srr, sub_r(c(rho()), c(r())), c(r())),
        rule(Sls, sub_l(sub_l(s(), c(r())), c(sigma(r()))), s()),
        rule(Slss, sub_l(sub_l(s(), c(sigma(r()))), c(r())), s()),
        rule(Srs, sub_r(c(s()), sub_r(c(sigma(s())), r())), r()),
        rule(Srrr, sub_r(c(sigma(s())), sub_r(c(s()), r())), r()),
        rule(Mx2l1, mu(Mu1, vec![xi(Xi1, vec![r()])]), r()),
        rule(Mx2l2, mu(Mu1, vec![xi(XiAnd, vec![r(), s()])]), r()),
        rule(Mx2r1, mu(Mu2, vec![xi(XiAnd, vec![r(), s()])]), s()),
        rule(Mx2r2, mu(Mu2, vec![xi(Xi2, vec![s()])]), s()),
        rule(Mx3l, mu(Mu, vec![xi(Xi1, vec![r()]), s(), u()]), s()),
        rule(Mx3r, mu(Mu, vec![xi(Xi2, vec![r()]), s(), u()]), u()),
        rule(Mxl, nu(xi(Xi, vec![r()])), r()),
        rule(Mxr, mu(Mu, vec![xi(Xi2, vec![r()]), s()]), s()),
        rule(Mx, xi(XiAnd, vec![mu(Mu1, vec![r()]), mu(Mu2, vec![r()])]), r()),
        rule(Mxx, mu(Mu, vec![t(), xi(Xi1, vec![r()]), xi(Xi2, vec![s()])]), t()),
        rule(Xmr, xi(Xi, vec![nu(r())]), r()),
        rule(Mx1r, mu(Mu, vec![s(), xi(Xi2, vec![r()])]), s()),
        rule(Stss, sigma(tau(r(), s())), tau(sigma(s()), sigma(r()))),
        rule(Ssbl, sigma(sub_l(r(), s())), sub_r(sigma(s()), sigma(r()))),
        rule(Ssbr, sigma(sub_r(r(), s())), sub_l(sigma(s()), sigma(r()))),
        rule(
            Sx,
            sigma(Pattern::Former(FormerPat::UnaryIntro, vec![r()])),
            Pattern::Former(FormerPat::UnaryIntro, vec![sigma(r())]),
        ),
        rule(Sxss, sigma(xi(XiAnd, vec![s(), r()])), xi(XiAnd, vec![sigma(s()), sigma(r())])),
        rule(
            Sm,
            sigma(Pattern::Former(FormerPat::UnaryElim, vec![r()])),
            Pattern::Former(FormerPat::UnaryElim, vec![sigma(r())]),
        ),
        rule(Smss, sigma(mu(Mu, vec![s(), r()])), mu(Mu, vec![sigma(s()), sigma(r())])),
        rule(
            Smsss,
            sigma(mu(Mu, vec![r(), u(), v()])),
            mu(Mu, vec![sigma(r()), sigma(u()), sigma(v())]),
        ),
        rule(Tsbll, tau(r(), sub_l(rho(), s())), sub_l(r(), s())),
        rule(Tsbrl, tau(r(), sub_r(s(), rho())), sub_l(r(), s())),
        rule(Tsblr, tau(sub_l(r(), s()), t()), tau(r(), sub_r(s(), t()))),
        rule(Tsbrr, tau(sub_r(s(), t()), u()), sub_r(s(), tau(t(), u()))),
        rule(Tt, tau(tau(t(), r()), s()), tau(t(), tau(r(), s()))),
        rule(Tts, tau(c(u()), tau(c(sigma(u())), v())), v()),
        // The right-hand side is v: u does not end where the left-hand side does.
        rule(Tst, tau(c(sigma(u())), tau(c(u()), v())), v()),
    ]
}

/// Human-readable entry for one rule, e.g. `1. sigma(rho) ▷ rho`.
pub fn rules_doc(label: &str) -> Result<String> {
    let id = RuleId::from_label(label)?;
    rule_table()
        .into_iter()
        .find(|r| r.id == id)
        .map(|r| r.to_string())
        .ok_or_else(|| Error::UnknownRule(format!("{label} (surface relation, see the surface presentation)")))
}
