use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::element::read_off;
use super::{Letter, LoopWord, SurfacePresentation};
use crate::path::PathTerm;
use crate::trs::{RewriteTrace, Rewriter};

/// Outcome of one group law over the sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub checked: usize,
    pub counterexamples: Vec<String>,
}

impl AxiomCheck {
    fn new(name: &'static str) -> Self {
        AxiomCheck { name, checked: 0, counterexamples: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.counterexamples.len() < 10 {
            self.counterexamples.push(witness());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAxiomReport {
    pub closure: AxiomCheck,
    pub identity: AxiomCheck,
    pub inverse: AxiomCheck,
    pub associativity: AxiomCheck,
}

impl GroupAxiomReport {
    pub fn checks(&self) -> [&AxiomCheck; 4] {
        [&self.closure, &self.identity, &self.inverse, &self.associativity]
    }

    pub fn passed(&self) -> bool {
        self.checks().iter().all(|c| c.passed())
    }
}

impl fmt::Display for GroupAxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.checks() {
            let verdict = if c.passed() { "pass" } else { "FAIL" };
            writeln!(f, "{}: {verdict} ({} checks)", c.name, c.checked)?;
            for w in &c.counterexamples {
                writeln!(f, "  counterexample: {w}")?;
            }
        }
        Ok(())
    }
}

/// A random word of length at most `max_len` over the generators and their
/// inverses.
pub(crate) fn random_word(s: &SurfacePresentation, rng: &mut impl Rng, max_len: usize) -> LoopWord {
    let names = s.generator_names();
    let len = rng.gen_range(0..=max_len);
    LoopWord::new(
        (0..len)
            .map(|_| Letter::new(names[rng.gen_range(0..names.len())], rng.gen_bool(0.5)))
            .collect(),
    )
}

/// Checks closure, two-sided identity, two-sided inverse and associativity
/// on `sample_size` seeded triples of random loops, comparing normal forms.
pub fn check_group_axioms(s: &SurfacePresentation, sample_size: usize, seed: u64) -> GroupAxiomReport {
    check_group_axioms_with(s, sample_size, seed, &mut |_, _, _| {})
}

/// [`check_group_axioms`], handing every normalization run (start term,
/// normal form, trace) to `observe`.
pub fn check_group_axioms_with(
    s: &SurfacePresentation,
    sample_size: usize,
    seed: u64,
    observe: &mut dyn FnMut(&PathTerm, &PathTerm, &RewriteTrace),
) -> GroupAxiomReport {
    let rw = s.rewriter();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = GroupAxiomReport {
        closure: AxiomCheck::new("closure"),
        identity: AxiomCheck::new("identity"),
        inverse: AxiomCheck::new("inverse"),
        associativity: AxiomCheck::new("associativity"),
    };
    let mut nf = |rw: &Rewriter, p: &PathTerm| {
        let (n, trace) = rw.normalize(p).ok()?;
        observe(p, &n, &trace);
        Some(n)
    };
    let tau = |a: &PathTerm, b: &PathTerm| PathTerm::Tau(Arc::new(a.clone()), Arc::new(b.clone()));
    let sigma = |a: &PathTerm| PathTerm::Sigma(Arc::new(a.clone()));
    let rho = s.identity();
    for _ in 0..sample_size {
        let words: Vec<LoopWord> = (0..3).map(|_| random_word(s, &mut rng, 12)).collect();
        let [p, q, r] = [0, 1, 2].map(|i| s.word_to_path(&words[i]).expect("words use the surface generators"));
        let show = |ps: &[&PathTerm]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ; ");

        // p ∘ q = τ(q, p) lands on a canonical element.
        let pq = tau(&q, &p);
        let closed = nf(&rw, &pq).is_some_and(|n| read_off(s, &n).is_ok());
        report.closure.record(closed, || show(&[&pq]));

        let np = nf(&rw, &p);
        let left = nf(&rw, &tau(&rho, &p));
        let right = nf(&rw, &tau(&p, &rho));
        report.identity.record(np.is_some() && left == np && right == np, || show(&[&p]));

        let rho_nf = Some(rho.clone());
        let inv_r = nf(&rw, &tau(&p, &sigma(&p)));
        let inv_l = nf(&rw, &tau(&sigma(&p), &p));
        report.inverse.record(inv_r == rho_nf && inv_l == rho_nf, || show(&[&p]));

        let lhs = nf(&rw, &tau(&tau(&p, &q), &r));
        let rhs = nf(&rw, &tau(&p, &tau(&q, &r)));
        report.associativity.record(lhs.is_some() && lhs == rhs, || show(&[&p, &q, &r]));
    }
    report
}
