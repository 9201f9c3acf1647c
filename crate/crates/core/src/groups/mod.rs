//! Fundamental groups of five surfaces, computed by rewriting loop words.

mod axioms;
mod element;
mod word;

pub use axioms::{check_group_axioms, check_group_axioms_with, AxiomCheck, GroupAxiomReport};
pub use element::{
    compose, from_z2, inverse, normalize_path, normalize_word, to_integer, to_integer2, to_path, to_path2, to_z2, CanonicalElement,
};
pub use word::{parse_word, Letter, LoopWord};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{Endpoint, PathTerm};
use crate::trs::{m, rho, sigma, tau, Pattern, Rewriter, Rule, RuleId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Surface {
    Circle,
    Cylinder,
    Moebius,
    Torus,
    ProjPlane,
}

impl Surface {
    pub const ALL: [Surface; 5] = [Surface::Circle, Surface::Cylinder, Surface::Moebius, Surface::Torus, Surface::ProjPlane];

    pub fn name(self) -> &'static str {
        match self {
            Surface::Circle => "circle",
            Surface::Cylinder => "cylinder",
            Surface::Moebius => "moebius",
            Surface::Torus => "torus",
            Surface::ProjPlane => "proj_plane",
        }
    }

    /// Circle, cylinder and Möbius band share one group.
    pub fn is_circle_like(self) -> bool {
        matches!(self, Surface::Circle | Surface::Cylinder | Surface::Moebius)
    }

    pub fn presentation(self) -> SurfacePresentation {
        let base = Endpoint::atom(if self == Surface::Circle { "base" } else { "x0" });
        let leaf = |name: &str| PathTerm::axiom(name, base.clone(), base.clone());
        let (generators, relation_rules) = match self {
            Surface::Circle | Surface::Cylinder | Surface::Moebius => (vec![leaf("loop")], Vec::new()),
            Surface::Torus => {
                let (a, b) = (leaf("a"), leaf("b"));
                let rules = commutation_rules(&a, &b);
                (vec![a, b], rules)
            }
            Surface::ProjPlane => {
                let a = leaf("a");
                let rules = involution_rules(&a);
                (vec![a], rules)
            }
        };
        SurfacePresentation { surface: self, basepoint: base, generators, relation_rules }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Surface> {
        Surface::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::UnknownSurface(s.to_string()))
    }
}

/// Generators and oriented relations of one surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePresentation {
    pub surface: Surface,
    pub basepoint: Endpoint,
    /// Axiom leaves from the basepoint to itself.
    pub generators: Vec<PathTerm>,
    /// Rules run after the core rules.
    pub relation_rules: Vec<Rule>,
}

impl SurfacePresentation {
    pub fn generator(&self, name: &str) -> Option<&PathTerm> {
        self.generators.iter().find(|g| matches!(g, PathTerm::Axiom(ax) if &*ax.name == name))
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators
            .iter()
            .filter_map(|g| match g {
                PathTerm::Axiom(ax) => Some(&*ax.name),
                _ => None,
            })
            .collect()
    }

    /// Core rules followed by this surface's relations.
    pub fn rewriter(&self) -> Rewriter {
        Rewriter::with_extensions(self.relation_rules.clone())
    }

    pub fn identity(&self) -> PathTerm {
        PathTerm::Rho(self.basepoint.clone())
    }

    /// Right-nested composition `τ(x₁, τ(x₂, …))` of the letters in order,
    /// inverse letters wrapped in σ; ρ for the empty word.
    pub fn word_to_path(&self, w: &LoopWord) -> Result<PathTerm> {
        let mut leaves = Vec::with_capacity(w.letters.len());
        for l in &w.letters {
            let g = self.generator(&l.generator).ok_or_else(|| Error::ForeignGenerator(l.generator.to_string()))?;
            leaves.push(if l.inverse { PathTerm::Sigma(g.clone().into()) } else { g.clone() });
        }
        let mut it = leaves.into_iter().rev();
        let Some(last) = it.next() else {
            return Ok(self.identity());
        };
        Ok(it.fold(last, |acc, x| PathTerm::Tau(x.into(), acc.into())))
    }
}

/// Looks a surface up by name.
pub fn presentation(name: &str) -> Result<SurfacePresentation> {
    Ok(name.parse::<Surface>()?.presentation())
}

pub fn word_to_path(s: &SurfacePresentation, w: &LoopWord) -> Result<PathTerm> {
    s.word_to_path(w)
}

/// `co`, oriented to move β-letters left of α-letters, both on adjacent
/// pairs and at the head of a longer composition.
fn commutation_rules(a: &PathTerm, b: &PathTerm) -> Vec<Rule> {
    let exact = |t: &PathTerm| Pattern::Exact(t.clone());
    let alphas = [exact(a), sigma(exact(a))];
    let betas = [exact(b), sigma(exact(b))];
    let mut rules = Vec::new();
    for x in &alphas {
        for y in &betas {
            rules.push(Rule { id: RuleId::Co, lhs: tau(x.clone(), y.clone()), rhs: tau(y.clone(), x.clone()) });
            rules.push(Rule {
                id: RuleId::Co,
                lhs: tau(x.clone(), tau(y.clone(), m('v'))),
                rhs: tau(y.clone(), tau(x.clone(), m('v'))),
            });
        }
    }
    rules
}

/// `cicl`: α∘α ▷ ρ, its form at the head of a composition, and α = σ(α).
fn involution_rules(a: &PathTerm) -> Vec<Rule> {
    let x = Pattern::Exact(a.clone());
    vec![
        Rule { id: RuleId::Cicl, lhs: tau(x.clone(), x.clone()), rhs: rho() },
        Rule { id: RuleId::Cicl, lhs: tau(x.clone(), tau(x.clone(), m('v'))), rhs: m('v') },
        Rule { id: RuleId::Cicl, lhs: sigma(x.clone()), rhs: x },
    ]
}

/// Every relation rule of every surface, for documentation.
pub fn extension_rules() -> Vec<Rule> {
    let mut out = Surface::Torus.presentation().relation_rules;
    out.extend(Surface::ProjPlane.presentation().relation_rules);
    out
}
