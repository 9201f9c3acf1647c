use std::collections::hash_map::DefaultHasher;
use std::collections::{HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::context::hole_candidates;
use super::rules::{rule_table, FormerPat, Pattern, Rule, RuleId};
use super::trace::{RewriteTrace, TraceStep};
use crate::error::{Error, Result};
use crate::path::{Endpoint, Env, Former, PathTerm, Position};

/// How `contract_once` picks among available redexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Post-order: the first redex whose subterms are all normal.
    LeftmostInnermost,
    /// Pre-order: the first redex closest to the root.
    LeftmostOutermost,
    /// Uniform choice among every (position, rule) pair that fires,
    /// seeded by the given value and the current term.
    SeededRandom(u64),
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::LeftmostInnermost
    }
}

/// One rule firing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub result: PathTerm,
    pub rule: RuleId,
    pub position: Position,
}

/// Step bound used when the caller does not pick one: `10 × size²`.
pub fn default_step_limit(p: &PathTerm) -> usize {
    let n = p.size();
    10 * n * n
}

#[derive(Clone, Default)]
struct Match {
    metas: Vec<(char, Arc<PathTerm>)>,
    former: Option<Former>,
    context: Option<(Arc<PathTerm>, Vec<usize>)>,
}

impl Match {
    fn bind(&mut self, c: char, t: &Arc<PathTerm>) -> bool {
        match self.metas.iter().find(|(k, _)| *k == c) {
            Some((_, bound)) => bound == t,
            None => {
                self.metas.push((c, t.clone()));
                true
            }
        }
    }

    fn get(&self, c: char) -> Option<&Arc<PathTerm>> {
        self.metas.iter().find(|(k, _)| *k == c).map(|(_, t)| t)
    }
}

type Holes<'p> = Vec<(&'p Pattern, Arc<PathTerm>)>;

fn match_struct<'p>(pat: &'p Pattern, t: &Arc<PathTerm>, m: &mut Match, holes: &mut Holes<'p>) -> bool {
    match (pat, &**t) {
        (Pattern::Hole(inner), _) => {
            holes.push((inner, t.clone()));
            true
        }
        (Pattern::Meta(c), _) => m.bind(*c, t),
        (Pattern::Rho, PathTerm::Rho(_)) => true,
        (Pattern::Exact(e), other) => e == other,
        (Pattern::Sigma(p), PathTerm::Sigma(x)) => match_struct(p, x, m, holes),
        (Pattern::Tau(p, q), PathTerm::Tau(x, y))
        | (Pattern::SubL(p, q), PathTerm::SubL(x, y))
        | (Pattern::SubR(p, q), PathTerm::SubR(x, y)) => match_struct(p, x, m, holes) && match_struct(q, y, m, holes),
        (Pattern::Former(fp, ps), PathTerm::Former(f, xs)) => {
            if ps.len() != xs.len() || !fp.accepts(*f) {
                return false;
            }
            if !matches!(fp, FormerPat::Is(_)) {
                match m.former {
                    Some(g) if g != *f => return false,
                    _ => m.former = Some(*f),
                }
            }
            ps.iter().zip(xs).all(|(p, x)| match_struct(p, x, m, holes))
        }
        _ => false,
    }
}

fn match_rule(lhs: &Pattern, t: &Arc<PathTerm>) -> Option<Match> {
    let mut m = Match::default();
    let mut holes = Vec::new();
    if !match_struct(lhs, t, &mut m, &mut holes) {
        return None;
    }
    match holes.as_slice() {
        [] => Some(m),
        [(pa, a), (pb, b)] => {
            for (q, ra, rb) in hole_candidates(a, b) {
                let mut trial = m.clone();
                let mut none = Vec::new();
                if match_struct(pa, &ra, &mut trial, &mut none)
                    && match_struct(pb, &rb, &mut trial, &mut none)
                    && none.is_empty()
                {
                    trial.context = Some((a.clone(), q));
                    return Some(trial);
                }
            }
            None
        }
        _ => unreachable!("rules use at most one shared context"),
    }
}

fn build(p: &Pattern, m: &Match, rho: &Endpoint) -> Arc<PathTerm> {
    let arc = |p: &Pattern| build(p, m, rho);
    Arc::new(match p {
        Pattern::Meta(c) => return m.get(*c).expect("right-hand side uses bound metavariables").clone(),
        Pattern::Rho => PathTerm::Rho(rho.clone()),
        Pattern::Exact(t) => t.clone(),
        Pattern::Sigma(x) => PathTerm::Sigma(arc(x)),
        Pattern::Tau(x, y) => PathTerm::Tau(arc(x), arc(y)),
        Pattern::SubL(x, y) => PathTerm::SubL(arc(x), arc(y)),
        Pattern::SubR(x, y) => PathTerm::SubR(arc(x), arc(y)),
        Pattern::Former(fp, args) => {
            let f = match fp {
                FormerPat::Is(f) => *f,
                _ => m.former.expect("former family bound by the left-hand side"),
            };
            PathTerm::Former(f, args.iter().map(arc).collect())
        }
        Pattern::Hole(inner) => {
            let (frame, q) = m.context.as_ref().expect("context bound by the left-hand side");
            let plugged = (*build(inner, m, rho)).clone();
            frame.replace_at(q, plugged).expect("hole position is valid")
        }
    })
}

/// Tries one rule at the root of `t`; the contractum must keep the endpoints.
fn fire(rule: &Rule, t: &Arc<PathTerm>, env: &mut Env, seen: &mut Seen) -> Option<Arc<PathTerm>> {
    let m = match_rule(&rule.lhs, t)?;
    let lhs_ends = seen.ends(t, env).ok()?;
    let mut candidates = vec![lhs_ends.0.clone(), lhs_ends.1.clone()];
    if rule.rhs.contains_rho() {
        for (_, b) in &m.metas {
            if let Ok((s, e)) = seen.ends(b, env) {
                candidates.push(s);
                candidates.push(e);
            }
        }
    } else {
        candidates.truncate(1);
    }
    let mut tried: Vec<&Endpoint> = Vec::new();
    for rho in &candidates {
        if tried.contains(&rho) {
            continue;
        }
        tried.push(rho);
        let out = build(&rule.rhs, &m, rho);
        if seen.ends(&out, env).ok().as_ref() == Some(&lhs_ends) {
            return Some(out);
        }
    }
    None
}

fn unwrap_arc(t: Arc<PathTerm>) -> PathTerm {
    Arc::try_unwrap(t).unwrap_or_else(|t| (*t).clone())
}

/// Subterms known to contain no redex, by address. The terms are kept alive
/// so an address is never reused for a different term.
#[derive(Default)]
struct Seen {
    normal: HashSet<*const PathTerm>,
    ends: HashMap<*const PathTerm, (Endpoint, Endpoint)>,
    fires: HashMap<*const PathTerm, Vec<(RuleId, Arc<PathTerm>)>>,
    keep: Vec<Arc<PathTerm>>,
}

impl Seen {
    fn mark(&mut self, t: &Arc<PathTerm>) {
        if self.normal.insert(Arc::as_ptr(t)) {
            self.keep.push(t.clone());
        }
    }

    fn is_normal(&self, t: &Arc<PathTerm>) -> bool {
        self.normal.contains(&Arc::as_ptr(t))
    }

    /// Endpoints of `t`, memoized for closed subterms.
    fn ends(&mut self, t: &Arc<PathTerm>, env: &mut Env) -> Result<(Endpoint, Endpoint)> {
        if !env.is_empty() {
            return t.endpoints_in(env);
        }
        let key = Arc::as_ptr(t);
        if let Some(e) = self.ends.get(&key) {
            return Ok(e.clone());
        }
        let e = match &**t {
            PathTerm::Sigma(p) => {
                let (s, e) = self.ends(p, env)?;
                (e, s)
            }
            PathTerm::Tau(l, r) | PathTerm::SubL(l, r) | PathTerm::SubR(l, r) => {
                let (ls, lt) = self.ends(l, env)?;
                let (rs, rt) = self.ends(r, env)?;
                if lt != rs {
                    return t.endpoints_in(env);
                }
                (ls, rt)
            }
            PathTerm::Former(f, args) if f.accepts(args.len()) => {
                let mut sources = Vec::with_capacity(args.len());
                let mut targets = Vec::with_capacity(args.len());
                for a in args {
                    let (s, e) = self.ends(a, env)?;
                    sources.push(s);
                    targets.push(e);
                }
                (Endpoint::apply(*f, sources), Endpoint::apply(*f, targets))
            }
            _ => t.endpoints_in(env)?,
        };
        self.keep.push(t.clone());
        self.ends.insert(key, e.clone());
        Ok(e)
    }
}

/// Leftmost-innermost normalization by recursion: children are normalized
/// left to right before the node itself, which visits redexes in the same
/// order as repeated post-order search. Subterms already known to be normal
/// are skipped by pointer.
struct Innermost<'a> {
    rewriter: &'a Rewriter,
    root: PathTerm,
    trace: RewriteTrace,
    limit: usize,
    seen: Seen,
}

impl Innermost<'_> {
    fn mark(&mut self, t: &Arc<PathTerm>) {
        self.seen.mark(t);
    }

    fn is_normal(&self, t: &Arc<PathTerm>) -> bool {
        self.seen.is_normal(t)
    }

    fn run(&mut self, mut t: Arc<PathTerm>, pos: &mut Vec<usize>, env: &mut Env) -> Result<Arc<PathTerm>> {
        loop {
            if self.is_normal(&t) {
                return Ok(t);
            }
            for i in 0..t.children().len() {
                let c = t.child(i).expect("index in range").clone();
                if self.is_normal(&c) {
                    continue;
                }
                let bound = match (&*t, i) {
                    (PathTerm::Rewr(m, _, _), 1) => Some(m.endpoints_in(env)?),
                    _ => None,
                };
                let pushed = bound.is_some();
                env.extend(bound);
                pos.push(i);
                let r = self.run(c.clone(), pos, env);
                pos.pop();
                if pushed {
                    env.pop();
                }
                let nc = r?;
                if !Arc::ptr_eq(&nc, &c) {
                    t = Arc::new(t.with_child(i, nc).expect("index in range"));
                }
            }
            match self.rewriter.first_at(&t, env, &mut self.seen) {
                None => {
                    self.mark(&t);
                    return Ok(t);
                }
                Some((rule, out)) => {
                    if self.trace.steps.len() == self.limit {
                        return Err(Error::StepLimitExceeded { limit: self.limit });
                    }
                    let after = self.root.replace_at(pos, (*out).clone()).expect("position is valid");
                    let before = std::mem::replace(&mut self.root, after.clone());
                    self.trace.steps.push(TraceStep { rule, position: Position(pos.clone()), before, after });
                    t = out;
                }
            }
        }
    }
}

/// A rule set together with the search machinery.
#[derive(Clone, Debug)]
pub struct Rewriter {
    rules: Vec<Rule>,
}

impl Default for Rewriter {
    fn default() -> Self {
        Rewriter::core()
    }
}

struct Found {
    position: Vec<usize>,
    rule: RuleId,
    result: Arc<PathTerm>,
}

impl Rewriter {
    /// The 39 core rules.
    pub fn core() -> Self {
        Rewriter { rules: rule_table() }
    }

    /// Core rules followed by `extra` (lower priority).
    pub fn with_extensions(extra: Vec<Rule>) -> Self {
        let mut rules = rule_table();
        rules.extend(extra);
        Rewriter { rules }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    fn first_at(&self, t: &Arc<PathTerm>, env: &mut Env, seen: &mut Seen) -> Option<(RuleId, Arc<PathTerm>)> {
        self.rules.iter().find_map(|r| fire(r, t, env, seen).map(|out| (r.id, out)))
    }

    fn visit_children<F>(t: &Arc<PathTerm>, pos: &mut Vec<usize>, env: &mut Env, mut f: F) -> Option<Found>
    where
        F: FnMut(&Arc<PathTerm>, &mut Vec<usize>, &mut Env) -> Option<Found>,
    {
        for (i, c) in t.children().into_iter().enumerate() {
            let bound = match (&**t, i) {
                (PathTerm::Rewr(m, _, _), 1) => Some(m.endpoints_in(env).ok()?),
                _ => None,
            };
            let pushed = bound.is_some();
            if let Some(e) = bound {
                env.push(e);
            }
            pos.push(i);
            let r = f(c, pos, env);
            pos.pop();
            if pushed {
                env.pop();
            }
            if r.is_some() {
                return r;
            }
        }
        None
    }

    fn innermost(&self, t: &Arc<PathTerm>, pos: &mut Vec<usize>, env: &mut Env, seen: &mut Seen) -> Option<Found> {
        Self::visit_children(t, pos, env, |c, pos, env| self.innermost(c, pos, env, seen)).or_else(|| {
            self.first_at(t, env, seen).map(|(rule, result)| Found { position: pos.clone(), rule, result })
        })
    }

    fn outermost(&self, t: &Arc<PathTerm>, pos: &mut Vec<usize>, env: &mut Env, seen: &mut Seen) -> Option<Found> {
        if seen.is_normal(t) {
            return None;
        }
        if let Some((rule, result)) = self.first_at(t, env, seen) {
            return Some(Found { position: pos.clone(), rule, result });
        }
        let r = Self::visit_children(t, pos, env, |c, pos, env| self.outermost(c, pos, env, seen));
        if r.is_none() {
            seen.mark(t);
        }
        r
    }

    fn all(&self, t: &Arc<PathTerm>, pos: &mut Vec<usize>, env: &mut Env, out: &mut Vec<Found>, seen: &mut Seen) {
        if seen.is_normal(t) {
            return;
        }
        let before = out.len();
        let cached = if env.is_empty() { seen.fires.get(&Arc::as_ptr(t)).cloned() } else { None };
        let here = cached.unwrap_or_else(|| {
            let here: Vec<_> = self.rules.iter().filter_map(|r| fire(r, t, env, seen).map(|out| (r.id, out))).collect();
            if env.is_empty() {
                seen.keep.push(t.clone());
                seen.fires.insert(Arc::as_ptr(t), here.clone());
            }
            here
        });
        for (rule, result) in here {
            out.push(Found { position: pos.clone(), rule, result });
        }
        let _ = Self::visit_children(t, pos, env, |c, pos, env| {
            self.all(c, pos, env, out, seen);
            None
        });
        if out.len() == before {
            seen.mark(t);
        }
    }

    /// Every single-step contraction of `p`.
    pub fn all_contractions(&self, p: &PathTerm) -> Vec<Contraction> {
        let root = Arc::new(p.clone());
        let mut found = Vec::new();
        self.all(&root, &mut Vec::new(), &mut Vec::new(), &mut found, &mut Seen::default());
        found.into_iter().filter_map(|f| self.finish(p, f)).collect()
    }

    fn finish(&self, p: &PathTerm, f: Found) -> Option<Contraction> {
        let result = p.replace_at(&f.position, unwrap_arc(f.result))?;
        Some(Contraction { result, rule: f.rule, position: Position(f.position) })
    }

    /// Fires one rule at one position chosen by `strategy`; `None` on a
    /// normal form.
    pub fn contract_once(&self, p: &PathTerm, strategy: Strategy) -> Option<Contraction> {
        self.contract_with(p, strategy, &mut Seen::default())
    }

    fn contract_with(&self, p: &PathTerm, strategy: Strategy, seen: &mut Seen) -> Option<Contraction> {
        let root = Arc::new(p.clone());
        let mut pos = Vec::new();
        let mut env = Vec::new();
        let found = match strategy {
            Strategy::LeftmostInnermost => self.innermost(&root, &mut pos, &mut env, seen),
            Strategy::LeftmostOutermost => self.outermost(&root, &mut pos, &mut env, seen),
            Strategy::SeededRandom(seed) => {
                let mut all = Vec::new();
                self.all(&root, &mut pos, &mut env, &mut all, seen);
                if all.is_empty() {
                    None
                } else {
                    let mut h = DefaultHasher::new();
                    p.hash(&mut h);
                    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h.finish());
                    let k = rng.gen_range(0..all.len());
                    Some(all.swap_remove(k))
                }
            }
        }?;
        self.finish(p, found)
    }

    /// Applies rule `rule` at `position`, as `contract_once` would have.
    pub fn apply_at(&self, p: &PathTerm, rule: RuleId, position: &Position) -> Option<PathTerm> {
        let mut env = Vec::new();
        let mut cur = p;
        for &i in position.as_slice() {
            if let (PathTerm::Rewr(m, _, _), 1) = (cur, i) {
                env.push(m.endpoints_in(&mut env.clone()).ok()?);
            }
            cur = cur.child(i)?;
        }
        let node = Arc::new(cur.clone());
        let out = self.rules.iter().filter(|r| r.id == rule).find_map(|r| fire(r, &node, &mut env, &mut Seen::default()))?;
        p.replace_at(position.as_slice(), unwrap_arc(out))
    }

    pub fn is_normal(&self, p: &PathTerm) -> bool {
        self.contract_once(p, Strategy::LeftmostOutermost).is_none()
    }

    /// Rewrites until no rule applies, recording every step.
    pub fn normalize_with(
        &self,
        p: &PathTerm,
        strategy: Strategy,
        step_limit: usize,
    ) -> Result<(PathTerm, RewriteTrace)> {
        p.endpoints()?;
        if strategy == Strategy::LeftmostInnermost {
            let mut run = Innermost {
                rewriter: self,
                root: p.clone(),
                trace: RewriteTrace::default(),
                limit: step_limit,
                seen: Seen::default(),
            };
            let out = run.run(Arc::new(p.clone()), &mut Vec::new(), &mut Vec::new())?;
            debug_assert_eq!(*out, run.root);
            return Ok((unwrap_arc(out), run.trace));
        }
        let mut cur = p.clone();
        let mut trace = RewriteTrace::default();
        let mut seen = Seen::default();
        while let Some(c) = self.contract_with(&cur, strategy, &mut seen) {
            if trace.steps.len() == step_limit {
                return Err(Error::StepLimitExceeded { limit: step_limit });
            }
            trace.steps.push(TraceStep {
                rule: c.rule,
                position: c.position,
                before: cur,
                after: c.result.clone(),
            });
            cur = c.result;
        }
        Ok((cur, trace))
    }

    /// Leftmost-innermost normalization under the default step bound.
    pub fn normalize(&self, p: &PathTerm) -> Result<(PathTerm, RewriteTrace)> {
        self.normalize_with(p, Strategy::default(), default_step_limit(p))
    }

    pub fn normal_form(&self, p: &PathTerm) -> Result<PathTerm> {
        Ok(self.normalize(p)?.0)
    }

    /// Whether `p` and `q` have the same normal form. Paths with different
    /// endpoints are never compared.
    pub fn rw_equal(&self, p: &PathTerm, q: &PathTerm) -> Result<bool> {
        let (ps, pt) = p.endpoints()?;
        let (qs, qt) = q.endpoints()?;
        if ps != qs || pt != qt {
            return Err(Error::EndpointMismatch {
                left: format!("{ps} = {pt}"),
                right: format!("{qs} = {qt}"),
            });
        }
        Ok(self.normal_form(p)? == self.normal_form(q)?)
    }
}

/// Normalizes with the core rules, leftmost-innermost.
pub fn normalize(p: &PathTerm, step_limit: usize) -> Result<(PathTerm, RewriteTrace)> {
    Rewriter::core().normalize_with(p, Strategy::default(), step_limit)
}

/// rw-equality under the core rules.
pub fn rw_equal(p: &PathTerm, q: &PathTerm) -> Result<bool> {
    Rewriter::core().rw_equal(p, q)
}

/// One step under the core rules.
pub fn contract_once(p: &PathTerm, strategy: Strategy) -> Option<Contraction> {
    Rewriter::core().contract_once(p, strategy)
}
