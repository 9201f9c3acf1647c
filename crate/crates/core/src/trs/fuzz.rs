use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::path::{Endpoint, PathTerm};

/// Which constructors a [`PathGen`] may emit besides ρ, σ, τ and axiom
/// leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub sub: bool,
    pub formers: bool,
}

impl Fragment {
    pub const BASIC: Fragment = Fragment { sub: false, formers: false };
    pub const FULL: Fragment = Fragment { sub: true, formers: true };
}

impl Default for Fragment {
    fn default() -> Self {
        Fragment::FULL
    }
}

/// Seeded generator of well-formed path terms between endpoints drawn from
/// a pool. Besides free composition it plants inverse pairs and ρ factors
/// so that most samples contain redexes.
pub struct PathGen {
    rng: ChaCha8Rng,
    pool: Vec<Endpoint>,
    fragment: Fragment,
}

const LEAF_NAMES: [&str; 3] = ["f", "g", "h"];

impl PathGen {
    pub fn new(seed: u64, endpoint_pool: &[Endpoint], fragment: Fragment) -> Self {
        let pool = if endpoint_pool.is_empty() {
            vec![Endpoint::atom("a"), Endpoint::atom("b"), Endpoint::atom("c")]
        } else {
            endpoint_pool.to_vec()
        };
        PathGen { rng: ChaCha8Rng::seed_from_u64(seed), pool, fragment }
    }

    fn endpoint(&mut self) -> Endpoint {
        self.pool.choose(&mut self.rng).expect("pool is non-empty").clone()
    }

    /// A path of depth at most `max_depth` (at least 1).
    pub fn path(&mut self, max_depth: usize) -> PathTerm {
        let src = self.endpoint();
        let tgt = if self.rng.gen_bool(0.3) { src.clone() } else { self.endpoint() };
        self.between(&src, &tgt, max_depth.max(1))
    }

    fn leaf(&mut self, src: &Endpoint, tgt: &Endpoint) -> PathTerm {
        if src == tgt && self.rng.gen_bool(0.3) {
            return PathTerm::Rho(src.clone());
        }
        let name = LEAF_NAMES.choose(&mut self.rng).expect("names");
        PathTerm::axiom(name, src.clone(), tgt.clone())
    }

    /// A path from `src` to `tgt` of depth at most `depth`.
    pub fn between(&mut self, src: &Endpoint, tgt: &Endpoint, depth: usize) -> PathTerm {
        if depth <= 1 || self.rng.gen_bool(0.15) {
            return self.leaf(src, tgt);
        }
        let d = depth - 1;
        let sigma = |p: PathTerm| PathTerm::Sigma(p.into());
        let tau = |p: PathTerm, q: PathTerm| PathTerm::Tau(p.into(), q.into());
        match self.rng.gen_range(0..10) {
            0 | 1 => {
                let p = self.between(tgt, src, d);
                sigma(p)
            }
            2..=4 => {
                let mid = self.endpoint();
                let p = self.between(src, &mid, d);
                let q = self.between(&mid, tgt, d);
                tau(p, q)
            }
            5 if depth >= 3 => {
                // p ∘ σ(p) ∘ q, either nesting
                let mid = self.endpoint();
                let p = self.between(src, &mid, depth - 2);
                let q = self.between(src, tgt, depth - 2);
                if self.rng.gen_bool(0.5) {
                    tau(p.clone(), tau(sigma(p), q))
                } else {
                    tau(tau(p.clone(), sigma(p)), q)
                }
            }
            6 if depth >= 3 => {
                // σ(p) ∘ p ∘ q
                let mid = self.endpoint();
                let p = self.between(&mid, src, depth - 2);
                let q = self.between(src, tgt, depth - 2);
                if self.rng.gen_bool(0.5) {
                    tau(sigma(p.clone()), tau(p, q))
                } else {
                    tau(tau(sigma(p.clone()), p), q)
                }
            }
            7 => {
                let p = self.between(src, tgt, d);
                let r = PathTerm::Rho(if self.rng.gen_bool(0.5) { src.clone() } else { tgt.clone() });
                let rho_first = matches!(&r, PathTerm::Rho(e) if e == src);
                if rho_first {
                    tau(r, p)
                } else {
                    tau(p, r)
                }
            }
            8 if self.fragment.sub => {
                let mid = self.endpoint();
                let p = self.between(src, &mid, d);
                let q = self.between(&mid, tgt, d);
                if self.rng.gen_bool(0.5) {
                    PathTerm::SubL(p.into(), q.into())
                } else {
                    PathTerm::SubR(p.into(), q.into())
                }
            }
            9 if self.fragment.formers => self.former(src, tgt, depth),
            _ if depth >= 3 => {
                let p = self.between(src, tgt, depth - 2);
                sigma(sigma(p))
            }
            _ => self.leaf(src, tgt),
        }
    }

    fn former(&mut self, src: &Endpoint, tgt: &Endpoint, depth: usize) -> PathTerm {
        // Wrap a path between `src` and `tgt` in an introduction and its
        // matching elimination so the endpoints stay put.
        use crate::path::{Former, MuKind, XiKind};
        let inner = self.between(src, tgt, depth.saturating_sub(2).max(1));
        let (intro, elim) = if self.rng.gen_bool(0.5) {
            (Former::Xi(XiKind::Xi1), Former::Mu(MuKind::Mu1))
        } else {
            (Former::Xi(XiKind::Xi2), Former::Mu(MuKind::Mu2))
        };
        let wrapped = PathTerm::Former(intro, vec![inner.into()]);
        PathTerm::Former(elim, vec![wrapped.into()])
    }
}

/// A deterministic well-formed path of depth at most `max_depth` whose
/// endpoints come from `endpoint_pool` (atoms `a`, `b`, `c` when empty).
/// Every constructor the rules mention may appear.
pub fn random_path(seed: u64, max_depth: usize, endpoint_pool: &[Endpoint]) -> PathTerm {
    PathGen::new(seed, endpoint_pool, Fragment::default()).path(max_depth)
}
