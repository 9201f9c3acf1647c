//! Terms whose normal form depends on the order of rule firings. These pin
//! down the known divergences so that any change to them is noticed.

use std::collections::BTreeSet;

use cpath::path::parse_path;
use cpath::trs::{Rewriter, Strategy};
use cpath::PathTerm;

// Every normal form reachable from `p`, by exhaustive search.
fn reachable_normal_forms(rw: &Rewriter, p: &PathTerm) -> BTreeSet<String> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![p.clone()];
    let mut out = BTreeSet::new();
    while let Some(t) = stack.pop() {
        if !seen.insert(t.to_string()) {
            continue;
        }
        let next = rw.all_contractions(&t);
        if next.is_empty() {
            out.insert(t.to_string());
        }
        stack.extend(next.into_iter().map(|c| c.result));
    }
    out
}

#[test]
fn sub_with_reflexive_main_path() {
    let rw = Rewriter::core();
    let p = parse_path("tau(rho[b],subR(f[b,b],rho[b]))").unwrap();
    let nfs = reachable_normal_forms(&rw, &p);
    assert!(nfs.contains("subR(f[b,b],rho[b])"), "{nfs:?}");
    assert!(nfs.contains("subL(rho[b],f[b,b])"), "{nfs:?}");
    for s in [Strategy::LeftmostInnermost, Strategy::LeftmostOutermost] {
        let nf = rw.normalize_with(&p, s, 1000).unwrap().0;
        assert!(nfs.contains(&nf.to_string()));
        assert_eq!(nf.endpoints().unwrap(), p.endpoints().unwrap());
    }
}

#[test]
fn projection_of_reflexivity_is_stuck() {
    let rw = Rewriter::core();
    let p = parse_path("tau(tau(mu2(xi2(f[a,a])),sigma(mu2(xi2(f[a,a])))),h[a,c])").unwrap();
    let nfs = reachable_normal_forms(&rw, &p);
    assert!(nfs.contains("h[a,c]"), "{nfs:?}");
    assert!(nfs.contains("tau(mu2(rho[xi2<a>]),h[a,c])"), "{nfs:?}");
    assert!(rw.is_normal(&parse_path("mu2(rho[xi2<a>])").unwrap()));
}

#[test]
fn reflexivity_fragment_has_one_normal_form() {
    let rw = Rewriter::core();
    for text in [
        "tau(tau(f[a,b],sigma(f[a,b])),tau(f[a,b],g[b,c]))",
        "sigma(tau(tau(rho[a],f[a,b]),sigma(sigma(g[b,c]))))",
        "tau(sigma(tau(f[a,b],g[b,c])),tau(f[a,b],g[b,c]))",
    ] {
        let nfs = reachable_normal_forms(&rw, &parse_path(text).unwrap());
        assert_eq!(nfs.len(), 1, "{text}: {nfs:?}");
    }
}
