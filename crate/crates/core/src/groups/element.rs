use std::fmt;
use std::sync::Arc;

use super::{Surface, SurfacePresentation};
use crate::error::{Error, Result};
use crate::path::PathTerm;
use crate::trs::RewriteTrace;

/// A normal-form representative of a fundamental-group element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalElement {
    /// `loop^n`.
    CircleZ(i64),
    /// `β^n α^m`, stored as `(n, m)`.
    TorusZZ(i64, i64),
    /// `ρ` (0) or `α` (1).
    ProjZ2(u8),
}

impl CanonicalElement {
    pub fn is_identity(self) -> bool {
        matches!(self, CanonicalElement::CircleZ(0) | CanonicalElement::TorusZZ(0, 0) | CanonicalElement::ProjZ2(0))
    }

    fn kind(self) -> &'static str {
        match self {
            CanonicalElement::CircleZ(_) => "circle group",
            CanonicalElement::TorusZZ(..) => "torus group",
            CanonicalElement::ProjZ2(_) => "projective-plane group",
        }
    }

    pub fn belongs_to(self, s: Surface) -> bool {
        match self {
            CanonicalElement::CircleZ(_) => s.is_circle_like(),
            CanonicalElement::TorusZZ(..) => s == Surface::Torus,
            CanonicalElement::ProjZ2(p) => s == Surface::ProjPlane && p < 2,
        }
    }

    /// The normal-form path this element stands for.
    pub fn to_path_in(self, s: &SurfacePresentation) -> Result<PathTerm> {
        if !self.belongs_to(s.surface) {
            return Err(Error::WrongSurface(s.surface.to_string()));
        }
        let letter = |name: &str, inverse: bool| {
            let g = s.generator(name).expect("generator of this surface").clone();
            if inverse {
                PathTerm::Sigma(g.into())
            } else {
                g
            }
        };
        let mut letters = Vec::new();
        match self {
            CanonicalElement::CircleZ(n) => letters.extend((0..n.unsigned_abs()).map(|_| letter("loop", n < 0))),
            CanonicalElement::TorusZZ(n, m) => {
                letters.extend((0..n.unsigned_abs()).map(|_| letter("b", n < 0)));
                letters.extend((0..m.unsigned_abs()).map(|_| letter("a", m < 0)));
            }
            CanonicalElement::ProjZ2(p) => letters.extend((0..p).map(|_| letter("a", false))),
        }
        Ok(chain(letters).unwrap_or_else(|| s.identity()))
    }
}

impl fmt::Display for CanonicalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("rho");
        }
        match self {
            CanonicalElement::CircleZ(n) => write!(f, "loop^{n}"),
            CanonicalElement::TorusZZ(n, m) => write!(f, "b^{n} a^{m}"),
            CanonicalElement::ProjZ2(_) => f.write_str("alpha"),
        }
    }
}

fn chain(letters: Vec<PathTerm>) -> Option<PathTerm> {
    let mut it = letters.into_iter().rev();
    let last = it.next()?;
    Some(it.fold(last, |acc, x| PathTerm::Tau(Arc::new(x), Arc::new(acc))))
}

/// `(generator, inverse)` when `p` is a generator leaf or its σ.
fn as_letter(p: &PathTerm) -> Option<(&str, bool)> {
    match p {
        PathTerm::Axiom(ax) => Some((&ax.name, false)),
        PathTerm::Sigma(q) => match &**q {
            PathTerm::Axiom(ax) => Some((&ax.name, true)),
            _ => None,
        },
        _ => None,
    }
}

fn succ(n: i64) -> i64 {
    n + 1
}

fn pred(n: i64) -> i64 {
    n - 1
}

/// Winding number of a normal form `loop^n`, by succ/pred recursion.
fn winding(p: &PathTerm) -> Option<i64> {
    fn go(p: &PathTerm) -> Option<i64> {
        let (head, rest) = match p {
            PathTerm::Tau(x, rest) => (&**x, Some(go(rest)?)),
            other => (other, None),
        };
        let (name, inverse) = as_letter(head)?;
        if name != "loop" {
            return None;
        }
        let rest = rest.unwrap_or(0);
        match inverse {
            false if rest >= 0 => Some(succ(rest)),
            true if rest <= 0 => Some(pred(rest)),
            _ => None,
        }
    }
    match p {
        PathTerm::Rho(_) => Some(0),
        _ => go(p),
    }
}

/// `(vertical, horizontal)` exponents of a normal form `β^n α^m`, one
/// letter at a time.
fn torus_counts(p: &PathTerm) -> Option<(i64, i64)> {
    fn add(block: i64, inverse: bool) -> Option<i64> {
        match inverse {
            false if block >= 0 => Some(block + 1),
            true if block <= 0 => Some(block - 1),
            _ => None,
        }
    }
    fn go(p: &PathTerm) -> Option<(i64, i64)> {
        let (head, rest) = match p {
            PathTerm::Tau(x, rest) => (&**x, go(rest)?),
            other => (other, (0, 0)),
        };
        let (v, h) = rest;
        match as_letter(head)? {
            ("a", inverse) if h == 0 => Some((add(v, inverse)?, h)),
            ("b", inverse) => Some((v, add(h, inverse)?)),
            _ => None,
        }
    }
    match p {
        PathTerm::Rho(_) => Some((0, 0)),
        _ => go(p),
    }
}

fn z2(p: &PathTerm) -> Option<u8> {
    match p {
        PathTerm::Rho(_) => Some(0),
        other => match as_letter(other)? {
            ("a", false) => Some(1),
            _ => None,
        },
    }
}

/// Reads the group element off a normal form.
pub(crate) fn read_off(s: &SurfacePresentation, nf: &PathTerm) -> Result<CanonicalElement> {
    let residue = || Error::NonCanonicalResidue(nf.to_string());
    match s.surface {
        Surface::Circle | Surface::Cylinder | Surface::Moebius => winding(nf).map(CanonicalElement::CircleZ),
        Surface::Torus => torus_counts(nf).map(|(v, h)| CanonicalElement::TorusZZ(h, v)),
        Surface::ProjPlane => z2(nf).map(CanonicalElement::ProjZ2),
    }
    .ok_or_else(residue)
}

/// Normalizes any loop at the basepoint and reads off its element, also
/// returning the normal form and the trace.
pub fn normalize_path(s: &SurfacePresentation, p: &PathTerm) -> Result<(CanonicalElement, PathTerm, RewriteTrace)> {
    let (nf, trace) = s.rewriter().normalize(p)?;
    Ok((read_off(s, &nf)?, nf, trace))
}

/// Normalizes the path of `w` under the surface's rules and reads off its
/// element.
pub fn normalize_word(s: &SurfacePresentation, w: &super::LoopWord) -> Result<(CanonicalElement, RewriteTrace)> {
    let p = s.word_to_path(w)?;
    let (e, _, trace) = normalize_path(s, &p)?;
    Ok((e, trace))
}

fn circle_like(s: &SurfacePresentation) -> Result<()> {
    if s.surface.is_circle_like() {
        Ok(())
    } else {
        Err(Error::WrongSurface(s.surface.to_string()))
    }
}

/// Winding number of a circle element.
pub fn to_integer(e: CanonicalElement) -> Result<i64> {
    let s = Surface::Circle.presentation();
    let p = e.to_path_in(&s).map_err(|_| Error::WrongSurface("circle".into()))?;
    winding(&p).ok_or_else(|| Error::NonCanonicalResidue(p.to_string()))
}

/// `ρ` for 0, `toPath(n−1) ∘ loop` above and `toPath(n+1) ∘ σ(loop)` below.
pub fn to_path(n: i64, s: &SurfacePresentation) -> Result<PathTerm> {
    circle_like(s)?;
    let lp = s.generator("loop").expect("circle-like surfaces have loop").clone();
    let step = if n > 0 { lp } else { PathTerm::Sigma(lp.into()) };
    let mut p = s.identity();
    for _ in 0..n.unsigned_abs() {
        p = PathTerm::Tau(step.clone().into(), p.into());
    }
    Ok(p)
}

/// `(vertical, horizontal)` exponents of a torus element.
pub fn to_integer2(e: CanonicalElement) -> Result<(i64, i64)> {
    let s = Surface::Torus.presentation();
    let p = e.to_path_in(&s).map_err(|_| Error::WrongSurface("torus".into()))?;
    torus_counts(&p).ok_or_else(|| Error::NonCanonicalResidue(p.to_string()))
}

/// `α^n` followed by `β^m`, built one factor at a time as `p ∘ x = τ(x, p)`.
pub fn to_path2(n: i64, m: i64, s: &SurfacePresentation) -> Result<PathTerm> {
    if s.surface != Surface::Torus {
        return Err(Error::WrongSurface(s.surface.to_string()));
    }
    let letter = |name: &str, k: i64| {
        let g = s.generator(name).expect("torus generator").clone();
        if k > 0 {
            g
        } else {
            PathTerm::Sigma(g.into())
        }
    };
    let mut p = s.identity();
    for _ in 0..n.unsigned_abs() {
        p = PathTerm::Tau(letter("a", n).into(), p.into());
    }
    for _ in 0..m.unsigned_abs() {
        p = PathTerm::Tau(letter("b", m).into(), p.into());
    }
    Ok(p)
}

pub fn to_z2(e: CanonicalElement) -> Result<u8> {
    let s = Surface::ProjPlane.presentation();
    let p = e.to_path_in(&s).map_err(|_| Error::WrongSurface("projective plane".into()))?;
    z2(&p).ok_or_else(|| Error::NonCanonicalResidue(p.to_string()))
}

/// `ρ` for 0 and `α` for 1.
pub fn from_z2(k: u8, s: &SurfacePresentation) -> Result<PathTerm> {
    if s.surface != Surface::ProjPlane || k > 1 {
        return Err(Error::WrongSurface(s.surface.to_string()));
    }
    CanonicalElement::ProjZ2(k).to_path_in(s)
}

fn check(s: &SurfacePresentation, e: CanonicalElement) -> Result<()> {
    if e.belongs_to(s.surface) {
        Ok(())
    } else {
        Err(Error::SurfaceMismatch(s.surface.to_string(), e.kind().to_string()))
    }
}

/// `e1 ∘ e2`, computed as the normal form of `τ(e2, e1)`.
pub fn compose(s: &SurfacePresentation, e1: CanonicalElement, e2: CanonicalElement) -> Result<CanonicalElement> {
    check(s, e1)?;
    check(s, e2)?;
    let p = PathTerm::Tau(e2.to_path_in(s)?.into(), e1.to_path_in(s)?.into());
    Ok(normalize_path(s, &p)?.0)
}

/// The normal form of `σ(e)`.
pub fn inverse(s: &SurfacePresentation, e: CanonicalElement) -> Result<CanonicalElement> {
    check(s, e)?;
    let p = PathTerm::Sigma(e.to_path_in(s)?.into());
    Ok(normalize_path(s, &p)?.0)
}
