#![allow(dead_code)]

/// Hand-written instance of every core rule: (label, left-hand side,
/// expected contractum at the root).
pub const RULE_INSTANCES: [(&str, &str, &str); 39] = [
    ("sr", "sigma(rho[a])", "rho[a]"),
    ("ss", "sigma(sigma(f[a,b]))", "f[a,b]"),
    ("tr", "tau(f[a,b],sigma(f[a,b]))", "rho[a]"),
    ("tsr", "tau(sigma(f[a,b]),f[a,b])", "rho[b]"),
    ("trr", "tau(f[a,b],rho[b])", "f[a,b]"),
    ("tlr", "tau(rho[a],f[a,b])", "f[a,b]"),
    ("slr", "subL(f[a,b],rho[b])", "f[a,b]"),
    ("srr", "subR(rho[a],f[a,b])", "f[a,b]"),
    ("sls", "subL(subL(g[a,b],f[b,c]),sigma(f[b,c]))", "g[a,b]"),
    ("slss", "subL(subL(g[a,b],sigma(f[c,b])),f[c,b])", "g[a,b]"),
    ("srs", "subR(f[a,b],subR(sigma(f[a,b]),g[a,c]))", "g[a,c]"),
    ("srrr", "subR(sigma(f[b,a]),subR(f[b,a],g[a,c]))", "g[a,c]"),
    ("mx2l1", "mu1(xi1(f[a,b]))", "f[a,b]"),
    ("mx2l2", "mu1(xiAnd(f[a,b],g[c,d]))", "f[a,b]"),
    ("mx2r1", "mu2(xiAnd(f[a,b],g[c,d]))", "g[c,d]"),
    ("mx2r2", "mu2(xi2(g[c,d]))", "g[c,d]"),
    ("mx3l", "mu(xi1(f[a,b]),g[c,d],h[e,k])", "g[c,d]"),
    ("mx3r", "mu(xi2(f[a,b]),g[c,d],h[e,k])", "h[e,k]"),
    ("mxl", "nu(xi(f[a,b]))", "f[a,b]"),
    ("mxr", "mu(xi2(f[a,b]),g[c,d])", "g[c,d]"),
    ("mx", "xiAnd(mu1(f[a,b]),mu2(f[a,b]))", "f[a,b]"),
    ("mxx", "mu(f[a,b],xi1(g[c,d]),xi2(h[e,k]))", "f[a,b]"),
    ("xmr", "xi(nu(f[a,b]))", "f[a,b]"),
    ("mx1r", "mu(f[a,b],xi2(g[c,d]))", "f[a,b]"),
    ("stss", "sigma(tau(f[a,b],g[b,c]))", "tau(sigma(g[b,c]),sigma(f[a,b]))"),
    ("ssbl", "sigma(subL(f[a,b],g[b,c]))", "subR(sigma(g[b,c]),sigma(f[a,b]))"),
    ("ssbr", "sigma(subR(f[a,b],g[b,c]))", "subL(sigma(g[b,c]),sigma(f[a,b]))"),
    ("sx", "sigma(xi1(f[a,b]))", "xi1(sigma(f[a,b]))"),
    ("sxss", "sigma(xiAnd(f[a,b],g[c,d]))", "xiAnd(sigma(f[a,b]),sigma(g[c,d]))"),
    ("sm", "sigma(mu1(f[a,b]))", "mu1(sigma(f[a,b]))"),
    ("smss", "sigma(mu(f[a,b],g[c,d]))", "mu(sigma(f[a,b]),sigma(g[c,d]))"),
    ("smsss", "sigma(mu(f[a,b],g[c,d],h[e,k]))", "mu(sigma(f[a,b]),sigma(g[c,d]),sigma(h[e,k]))"),
    ("tsbll", "tau(f[a,b],subL(rho[b],g[b,c]))", "subL(f[a,b],g[b,c])"),
    ("tsbrl", "tau(f[a,b],subR(g[b,c],rho[c]))", "subL(f[a,b],g[b,c])"),
    ("tsblr", "tau(subL(f[a,b],g[b,c]),h[c,d])", "tau(f[a,b],subR(g[b,c],h[c,d]))"),
    ("tsbrr", "tau(subR(f[a,b],g[b,c]),h[c,d])", "subR(f[a,b],tau(g[b,c],h[c,d]))"),
    ("tt", "tau(tau(f[a,b],g[b,c]),h[c,d])", "tau(f[a,b],tau(g[b,c],h[c,d]))"),
    ("tts", "tau(f[a,b],tau(sigma(f[a,b]),g[a,c]))", "g[a,c]"),
    ("tst", "tau(sigma(f[a,b]),tau(f[a,b],g[b,c]))", "g[b,c]"),
];
