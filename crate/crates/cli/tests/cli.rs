use std::process::Command;

use cpath::trs::{Rewriter, TraceDocument};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cpath").chain(args.iter().copied());
    let code = cpath_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn double_inverse_normalizes() {
    let (code, out, err) = run(&["normalize", "sigma(sigma(t[x,y]))"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "t[x,y]\n", ""));
}

#[test]
fn torus_commutator_is_identity() {
    let (code, out, _) = run(&["pi1", "--surface", "torus", "--word", "b a b^-1 a^-1"]);
    assert_eq!((code, out.as_str()), (0, "rho\n"));
}

#[test]
fn surface_elements_print_canonically() {
    assert_eq!(run(&["pi1", "--surface", "circle", "--word", "loop loop^-1 loop^3"]).1, "loop^3\n");
    assert_eq!(run(&["pi1", "--surface", "proj_plane", "--word", "a a a"]).1, "alpha\n");
    assert_eq!(run(&["pi1", "--surface", "torus", "--word", "a b a"]).1, "b^1 a^2\n");
}

#[test]
fn lambda_path_prints_normal_form_then_path() {
    let (code, out, _) = run(&["lambda-path", "--term", "(\\x.(\\y.y x)(\\w.z w)) v"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "z v");
    assert_eq!(
        lines[1],
        "tau(tau(eta[{(\\x.(\\y.y x) (\\w.z w)) v},{(\\x.(\\y.y x) z) v}],\
         beta[{(\\x.(\\y.y x) z) v},{(\\y.y v) z}]),beta[{(\\y.y v) z},{z v}])"
    );
    let path = cpath::path::parse_path(lines[1]).unwrap();
    assert_eq!(path.to_string(), lines[1]);
}

#[test]
fn trace_lines_number_each_step() {
    let (code, out, _) = run(&["normalize", "--trace", "tau(tau(sigma(t[a,b]),t[a,b]),u[b,c])"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.last(), Some(&"u[b,c]"));
    assert!(lines.len() >= 3);
    for (k, line) in lines[..lines.len() - 1].iter().enumerate() {
        assert!(line.starts_with(&format!("step {}: ", k + 1)), "{line}");
        assert!(line.contains(" at [") && line.contains(" → "), "{line}");
    }
}

#[test]
fn json_trace_replays() {
    let term = "tau(sigma(tau(t[a,b],u[b,c])),tau(t[a,b],v[b,c]))";
    let (code, out, _) = run(&["normalize", "--json", term]);
    assert_eq!(code, 0);
    let doc: TraceDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.start, term);
    doc.verify(&Rewriter::core()).unwrap();
}

#[test]
fn pi1_json_includes_element() {
    let (code, out, _) = run(&["pi1", "--surface", "circle", "--word", "loop^2 loop^-1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["element"], "loop^1");
    let doc: TraceDocument = serde_json::from_value(v).unwrap();
    doc.verify(&cpath::groups::presentation("circle").unwrap().rewriter()).unwrap();
}

#[test]
fn json_lines_emit_one_record_per_step() {
    let (code, out, _) = run(&["normalize", "--json-lines", "sigma(sigma(sigma(sigma(t[x,y]))))"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["rule"], "ss");
    }
}

#[test]
fn equality_is_a_result_not_an_error() {
    assert_eq!(run(&["equal", "tau(t[a,b],rho[b])", "t[a,b]"]), (0, "equal\n".into(), String::new()));
    assert_eq!(run(&["equal", "t[a,b]", "u[a,b]"]), (0, "not-equal\n".into(), String::new()));
}

#[test]
fn rules_documentation() {
    assert_eq!(run(&["rules", "--show", "sr"]).1, "1. sigma(rho) ▷ rho\n");
    assert_eq!(run(&["rules", "--show", "tt"]).1, "37. tau(tau(t,r),s) ▷ tau(t,tau(r,s))\n");
    let (code, out, _) = run(&["rules", "--list"]);
    assert_eq!(code, 0);
    assert!(out.lines().filter(|l| l.starts_with("co: ")).count() == 8);
    assert!(out.lines().any(|l| l == "cicl: tau(a[x0,x0],a[x0,x0]) ▷ rho"));
    assert_eq!(out.lines().filter(|l| l.split('.').next().unwrap().parse::<u32>().is_ok()).count(), 39);
}

#[test]
fn exit_codes() {
    let domain = [
        vec!["equal", "t[a,b]", "u[a,c]"],
        vec!["pi1", "--surface", "circle", "--word", "a"],
        vec!["lambda-path", "--term", "(\\x.x x)(\\x.x x)", "--fuel", "5"],
        vec!["normalize", "--step-limit", "0", "sigma(sigma(t[a,b]))"],
    ];
    for args in domain {
        let (code, out, err) = run(&args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
    }
    let usage = [
        vec!["normalize", "tau(t[a,b]"],
        vec!["pi1", "--surface", "klein", "--word", "a"],
        vec!["pi1", "--surface", "torus", "--word", "a^0"],
        vec!["rules", "--show", "zz"],
        vec!["rules"],
        vec!["frobnicate"],
        vec!["normalize", "--json", "--trace", "t[a,b]"],
    ];
    for args in usage {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1, "{err}");
    }
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_cpath");
    let out = Command::new(bin).args(["normalize", "sigma(sigma(t[x,y]))"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "t[x,y]\n");
    let out = Command::new(bin).args(["equal", "t[a,b]", "u[a,c]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let out = Command::new(bin).args(["normalize", "oops("]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["normalize", "--trace", "--strategy", "random", "--seed", "7", "tau(tau(t[a,b],sigma(t[a,b])),tau(u[a,c],rho[c]))"];
    let first = run(&args);
    for _ in 0..5 {
        assert_eq!(run(&args), first);
    }
    assert_eq!(first.0, 0);
    assert_eq!(first.1.lines().last(), Some("u[a,c]"));
}
