//! Acceptance run: one line per criterion, nonzero exit if any fails.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cpath::groups::{
    check_group_axioms_with, normalize_path, to_integer, CanonicalElement, Letter, LoopWord, Surface,
    SurfacePresentation,
};
use cpath::lambda::{parse_lambda, path_along, path_to_normal_form, RedexKind, RedexSite, Strategy as LambdaStrategy};
use cpath::path::{parse_path, Endpoint, PathTerm};
use cpath::trs::{default_step_limit, random_path, Fragment, PathGen, RewriteTrace, Rewriter, RuleId, Strategy};
use cpath::{Error, Position};

const SEED: u64 = 0x5eed_2024;

/// Trace replays collected from criteria 2 to 9.
#[derive(Default)]
struct Replays {
    runs: usize,
    failures: Vec<String>,
}

impl Replays {
    fn check(&mut self, rw: &Rewriter, start: &PathTerm, nf: &PathTerm, trace: &RewriteTrace) {
        self.runs += 1;
        match trace.replay(rw, start) {
            Ok(end) if &end == nf => {}
            Ok(end) => self.failures.push(format!("{start}: replay ends at {end}, not {nf}")),
            Err(e) => self.failures.push(format!("{start}: {e}")),
        }
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn run(n: usize, name: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let t = Instant::now();
    let o = f();
    let took = t.elapsed();
    let pass = o.pass && took <= limit;
    println!(
        "criterion {n:>2} {name}: {} ({}; {:.2}s of {}s)",
        if pass { "PASS" } else { "FAIL" },
        o.detail,
        took.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn random_word(rng: &mut ChaCha8Rng, names: &[&str], max_len: usize) -> LoopWord {
    let len = rng.gen_range(0..=max_len);
    LoopWord::new((0..len).map(|_| Letter::new(names[rng.gen_range(0..names.len())], rng.gen_bool(0.5))).collect())
}

/// Signed letter count per generator, the oracle for the word criteria.
fn signed(w: &LoopWord, g: &str) -> i64 {
    w.letters.iter().filter(|l| &*l.generator == g).map(|l| if l.inverse { -1 } else { 1 }).sum()
}

fn word_oracle(
    s: &SurfacePresentation,
    samples: usize,
    max_len: usize,
    replays: &mut Replays,
    expect: impl Fn(&LoopWord) -> CanonicalElement,
) -> (usize, Vec<String>) {
    let rw = s.rewriter();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ max_len as u64);
    let names = s.generator_names();
    let mut bad = Vec::new();
    for _ in 0..samples {
        let w = random_word(&mut rng, &names, max_len);
        let p = s.word_to_path(&w).unwrap();
        match normalize_path(s, &p) {
            Ok((e, nf, trace)) => {
                replays.check(&rw, &p, &nf, &trace);
                if e != expect(&w) {
                    bad.push(format!("{w} gave {e}, expected {}", expect(&w)));
                }
            }
            Err(e) => bad.push(format!("{w}: {e}")),
        }
    }
    (samples, bad)
}

fn first(bad: &[String]) -> String {
    bad.first().map(|b| format!("; first: {b}")).unwrap_or_default()
}

fn main() {
    let mut replays = Replays::default();
    let mut all = true;

    all &= run(1, "rule table", Duration::from_secs(1), || {
        let rw = Rewriter::core();
        let mut ok = 0;
        let mut bad = Vec::new();
        for (label, lhs, rhs) in common::RULE_INSTANCES {
            let id = RuleId::from_label(label).unwrap();
            let got = rw.apply_at(&parse_path(lhs).unwrap(), id, &Position::root());
            if got == Some(parse_path(rhs).unwrap()) {
                ok += 1;
            } else {
                bad.push(label.to_string());
            }
        }
        outcome(ok == 39 && rw.rules().len() == 39, format!("{ok}/39 rules fire as listed{}", first(&bad)))
    });

    all &= run(2, "circle isomorphism", Duration::from_secs(2), || {
        let s = Surface::Circle.presentation();
        let rw = s.rewriter();
        let mut bad = Vec::new();
        for n in -100..=100 {
            let p = cpath::groups::to_path(n, &s).unwrap();
            let (e, nf, trace) = normalize_path(&s, &p).unwrap();
            replays.check(&rw, &p, &nf, &trace);
            if to_integer(e) != Ok(n) {
                bad.push(format!("{n} came back as {e}"));
            }
        }
        outcome(bad.is_empty(), format!("{} of 201 integers round-trip{}", 201 - bad.len(), first(&bad)))
    });

    all &= run(3, "circle words", Duration::from_secs(10), || {
        let s = Surface::Circle.presentation();
        let (n, bad) = word_oracle(&s, 1000, 200, &mut replays, |w| CanonicalElement::CircleZ(signed(w, "loop")));
        outcome(bad.is_empty(), format!("{}/{n} words match the signed count{}", n - bad.len(), first(&bad)))
    });

    all &= run(4, "torus words", Duration::from_secs(20), || {
        let s = Surface::Torus.presentation();
        let (n, mut bad) =
            word_oracle(&s, 1000, 100, &mut replays, |w| CanonicalElement::TorusZZ(signed(w, "b"), signed(w, "a")));
        let commutator: LoopWord = "b a b^-1 a^-1".parse().unwrap();
        let p = s.word_to_path(&commutator).unwrap();
        let (e, nf, trace) = normalize_path(&s, &p).unwrap();
        replays.check(&s.rewriter(), &p, &nf, &trace);
        if e != CanonicalElement::TorusZZ(0, 0) || nf != s.identity() {
            bad.push(format!("commutator gave {e}"));
        }
        outcome(
            bad.is_empty(),
            format!("{}/{n} words match the signed counts, commutator gives {e}{}", n - bad.len().min(n), first(&bad)),
        )
    });

    all &= run(5, "projective plane words", Duration::from_secs(5), || {
        let s = Surface::ProjPlane.presentation();
        let (n, bad) =
            word_oracle(&s, 1000, 100, &mut replays, |w| CanonicalElement::ProjZ2((w.letters.len() % 2) as u8));
        outcome(bad.is_empty(), format!("{}/{n} words match the length parity{}", n - bad.len(), first(&bad)))
    });

    all &= run(6, "group axioms", Duration::from_secs(30), || {
        let mut failed = Vec::new();
        let mut checks = 0;
        for (i, surface) in Surface::ALL.into_iter().enumerate() {
            let s = surface.presentation();
            let rw = s.rewriter();
            let report = check_group_axioms_with(&s, 1000, SEED + i as u64, &mut |p, nf, trace| {
                replays.check(&rw, p, nf, trace);
            });
            for c in report.checks() {
                checks += c.checked;
                if !c.passed() {
                    failed.push(format!("{surface} {}: {}", c.name, c.counterexamples[0]));
                }
            }
        }
        outcome(failed.is_empty(), format!("{checks} law checks on 5 surfaces, {} failures{}", failed.len(), first(&failed)))
    });

    all &= run(7, "lambda path golden", Duration::from_secs(1), || {
        let lam = |s: &str| Endpoint::Lambda(parse_lambda(s).unwrap());
        let m = "(\\x.(\\y.y x) (\\w.z w)) v";
        let (m1, m2, nf) = ("(\\x.(\\y.y x) z) v", "(\\y.y v) z", "z v");
        let leaf = |name: &str, a: &str, b: &str| PathTerm::axiom(name, lam(a), lam(b));
        let tau = |a: PathTerm, b: PathTerm| PathTerm::Tau(a.into(), b.into());
        let expected = tau(tau(leaf("eta", m, m1), leaf("beta", m1, m2)), leaf("beta", m2, nf));
        let t = parse_lambda(m).unwrap();
        let sites = [
            RedexSite { position: vec![0, 0, 1], kind: RedexKind::Eta },
            RedexSite { position: vec![], kind: RedexKind::Beta },
            RedexSite { position: vec![], kind: RedexKind::Beta },
        ];
        let (along_nf, along) = path_along(&t, &sites).unwrap();
        let (strat_nf, strat) = path_to_normal_form(&t, LambdaStrategy::EtaFirst, 100).unwrap();
        let target = parse_lambda(nf).unwrap();
        let pass = along == expected && strat == expected && along_nf == target && strat_nf == target;
        outcome(pass, format!("path {along}"))
    });

    all &= run(8, "termination", Duration::from_secs(60), || {
        let rw = Rewriter::core();
        let (mut limited, mut other, mut steps) = (0, Vec::new(), 0usize);
        for seed in 0..10_000u64 {
            let p = random_path(seed, 12, &[]);
            match rw.normalize_with(&p, Strategy::LeftmostInnermost, default_step_limit(&p)) {
                Ok((nf, trace)) => {
                    steps += trace.len();
                    replays.check(&rw, &p, &nf, &trace);
                }
                Err(Error::StepLimitExceeded { .. }) => limited += 1,
                Err(e) => other.push(e.to_string()),
            }
        }
        outcome(
            limited == 0 && other.is_empty(),
            format!("10000 terms of depth <= 12, {limited} hit the step bound, {steps} steps in all{}", first(&other)),
        )
    });

    all &= run(9, "confluence", Duration::from_secs(60), || {
        let rw = Rewriter::core();
        let strategies = |seed| [Strategy::LeftmostInnermost, Strategy::LeftmostOutermost, Strategy::SeededRandom(seed)];
        let mut diverges = |p: &PathTerm, seed: u64| {
            let nfs: Vec<PathTerm> = strategies(seed)
                .into_iter()
                .map(|s| {
                    let (nf, trace) = rw.normalize_with(p, s, default_step_limit(p)).unwrap();
                    replays.check(&rw, p, &nf, &trace);
                    nf
                })
                .collect();
            nfs[0] != nfs[1] || nfs[0] != nfs[2]
        };
        let mut diverged = Vec::new();
        let mut plain = 0;
        for seed in 0..1000u64 {
            let p = random_path(seed, 12, &[]);
            if diverges(&p, seed) {
                plain += !uses_sub_or_formers(&p) as usize;
                diverged.push(format!("{p}"));
            }
        }
        diverged.sort_by_key(String::len);
        // The same count restricted to rho, sigma, tau and axiom leaves.
        let basic = (0..1000u64)
            .filter(|&seed| diverges(&PathGen::new(seed, &[], Fragment::BASIC).path(12), seed))
            .count();
        outcome(
            diverged.is_empty(),
            format!(
                "1000 terms x 3 strategies, {} with differing normal forms, {plain} of them without sub or formers; \
                 rho/sigma/tau/axiom terms: {basic}/1000 differ{}",
                diverged.len(),
                first(&diverged)
            ),
        )
    });

    all &= run(10, "rw-equality is an equivalence", Duration::from_secs(30), || {
        let rw = Rewriter::core();
        let eq = |p: &PathTerm, q: &PathTerm| rw.rw_equal(p, q).unwrap();
        let mut bad = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let mut equal_pairs = 0;
        for seed in 0..1000u64 {
            let p = random_path(seed, 8, &[]);
            if !eq(&p, &p) {
                bad.push(format!("reflexivity: {p}"));
            }
            let q = variant(&rw, &p, &mut rng);
            let r = variant(&rw, &q, &mut rng);
            let (pq, qp, qr, pr) = (eq(&p, &q), eq(&q, &p), eq(&q, &r), eq(&p, &r));
            equal_pairs += pq as usize;
            if pq != qp {
                bad.push(format!("symmetry: {p} / {q}"));
            }
            if pq && qr && !pr {
                bad.push(format!("transitivity: {p} / {q} / {r}"));
            }
        }
        outcome(
            bad.is_empty(),
            format!("1000 terms, pairs and triples, {equal_pairs} pairs rw-equal, {} failures{}", bad.len(), first(&bad)),
        )
    });

    all &= run(11, "trace replay", Duration::from_secs(1), || {
        outcome(
            replays.failures.is_empty(),
            format!("{} traces replayed from criteria 2-9, {} mismatches{}", replays.runs, replays.failures.len(), first(&replays.failures)),
        )
    });

    if !all {
        std::process::exit(1);
    }
}

/// A path with the same endpoints as `p`: one rewrite step of it, a
/// padded or doubly inverted copy, or an unrelated path.
fn variant(rw: &Rewriter, p: &PathTerm, rng: &mut ChaCha8Rng) -> PathTerm {
    let (s, t) = p.endpoints().unwrap();
    let arc = |p: &PathTerm| std::sync::Arc::new(p.clone());
    match rng.gen_range(0..4) {
        0 => rw.contract_once(p, Strategy::SeededRandom(rng.gen())).map(|c| c.result).unwrap_or_else(|| p.clone()),
        1 => PathTerm::Tau(arc(p), arc(&PathTerm::Rho(t))),
        2 => PathTerm::Sigma(arc(&PathTerm::Sigma(arc(p)))),
        _ => PathGen::new(rng.gen(), &[], Default::default()).between(&s, &t, 6),
    }
}

fn uses_sub_or_formers(p: &PathTerm) -> bool {
    p.count_nodes(&|n| matches!(n, PathTerm::SubL(..) | PathTerm::SubR(..) | PathTerm::Former(..))) > 0
}
