use std::fmt;
use std::sync::Arc;

use super::endpoint::{Endpoint, Former};
use super::term::{PathTerm, PathVar};
use crate::error::{Error, Result};
use crate::lambda::{parse_lambda, LambdaTerm};
use crate::name::{is_ident_continue, is_ident_start, BinderName};

/// Parses the textual path syntax and checks well-formedness.
///
/// ```text
/// term     := "rho[" endpoint "]" | "sigma(" term ")"
///           | ("tau" | "subL" | "subR") "(" term "," term ")"
///           | former "(" term ("," term)* ")"
///           | "rewr(" term "," ident "." term ")"
///           | ident "[" endpoint "," endpoint "]" | ident
/// endpoint := ident | former "<" endpoint ("," endpoint)* ">" | "{" lambda "}"
/// ```
pub fn parse_path(text: &str) -> Result<PathTerm> {
    let mut p = Parser { src: text, pos: 0, scope: Vec::new() };
    let term = p.term()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    term.endpoints()?;
    Ok(term)
}

/// Parses a single endpoint such as `base`, `xi1<a>` or `{\x.x}`.
pub fn parse_endpoint(text: &str) -> Result<Endpoint> {
    let mut p = Parser { src: text, pos: 0, scope: Vec::new() };
    let e = p.endpoint()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    scope: Vec<String>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::syntax(self.pos, format!("expected `{c}`")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if is_ident_start(c) => self.pos += 1,
            _ => return Err(Error::syntax(start, "expected identifier")),
        }
        while let Some(c) = self.peek() {
            if !is_ident_continue(c) {
                break;
            }
            self.pos += 1;
        }
        Ok((start, self.src[start..self.pos].to_string()))
    }

    fn term(&mut self) -> Result<PathTerm> {
        let (start, name) = self.ident()?;
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let source = self.endpoint()?;
                if name == "rho" {
                    self.expect(']')?;
                    return Ok(PathTerm::Rho(source));
                }
                self.expect(',')?;
                let target = self.endpoint()?;
                self.expect(']')?;
                Ok(PathTerm::axiom(&name, source, target))
            }
            Some('(') => {
                self.pos += 1;
                let t = self.compound(start, &name)?;
                self.expect(')')?;
                Ok(t)
            }
            _ => match self.scope.iter().rev().position(|n| *n == name) {
                Some(index) => Ok(PathTerm::Var(PathVar { index, hint: BinderName::new(name) })),
                None => Err(Error::syntax(start, format!("unbound path variable `{name}`"))),
            },
        }
    }

    fn compound(&mut self, start: usize, name: &str) -> Result<PathTerm> {
        let arc = |t: PathTerm| Arc::new(t);
        match name {
            "sigma" => Ok(PathTerm::Sigma(arc(self.term()?))),
            "tau" | "subL" | "subR" => {
                let l = arc(self.term()?);
                self.expect(',')?;
                let r = arc(self.term()?);
                Ok(match name {
                    "tau" => PathTerm::Tau(l, r),
                    "subL" => PathTerm::SubL(l, r),
                    _ => PathTerm::SubR(l, r),
                })
            }
            "rewr" => {
                let scrutinee = arc(self.term()?);
                self.expect(',')?;
                let (_, binder) = self.ident()?;
                self.expect('.')?;
                self.scope.push(binder.clone());
                let body = self.term();
                self.scope.pop();
                Ok(PathTerm::Rewr(scrutinee, BinderName::new(binder), arc(body?)))
            }
            _ => {
                let Some(former) = Former::from_name(name) else {
                    return Err(Error::syntax(start, format!("unknown constructor `{name}`")));
                };
                let mut args = vec![arc(self.term()?)];
                while self.eat(',') {
                    args.push(arc(self.term()?));
                }
                if !former.accepts(args.len()) {
                    return Err(Error::syntax(start, format!("{former} does not take {} arguments", args.len())));
                }
                Ok(PathTerm::Former(former, args))
            }
        }
    }

    fn endpoint(&mut self) -> Result<Endpoint> {
        self.skip_ws();
        if self.peek() == Some('{') {
            let open = self.pos;
            let Some(len) = self.src[open + 1..].find('}') else {
                return Err(Error::syntax(open, "unterminated `{`"));
            };
            let inner = &self.src[open + 1..open + 1 + len];
            let term: LambdaTerm = parse_lambda(inner).map_err(|e| match e {
                Error::Syntax { pos, msg } => Error::syntax(open + 1 + pos, msg),
                other => other,
            })?;
            self.pos = open + len + 2;
            return Ok(Endpoint::Lambda(term));
        }
        let (start, name) = self.ident()?;
        if self.eat('<') {
            let Some(former) = Former::from_name(&name) else {
                return Err(Error::syntax(start, format!("unknown former `{name}`")));
            };
            let mut args = vec![self.endpoint()?];
            while self.eat(',') {
                args.push(self.endpoint()?);
            }
            self.expect('>')?;
            return Ok(Endpoint::apply(former, args));
        }
        Ok(Endpoint::atom(&name))
    }
}

fn write_path(p: &PathTerm, names: &mut Vec<String>, out: &mut String) {
    use std::fmt::Write;
    let list = |label: &str, args: &[&Arc<PathTerm>], names: &mut Vec<String>, out: &mut String| {
        out.push_str(label);
        out.push('(');
        for (i, a) in args.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write_path(a, names, out);
        }
        out.push(')');
    };
    match p {
        PathTerm::Rho(e) => {
            let _ = write!(out, "rho[{e}]");
        }
        PathTerm::Axiom(ax) => {
            let _ = write!(out, "{}[{},{}]", ax.name, ax.source, ax.target);
        }
        PathTerm::Var(v) => match names.len().checked_sub(v.index + 1) {
            Some(i) => out.push_str(&names[i]),
            None => {
                let _ = write!(out, "{}", v.hint);
            }
        },
        PathTerm::Rewr(m, hint, body) => {
            out.push_str("rewr(");
            write_path(m, names, out);
            out.push(',');
            let mut name = hint.as_str().to_string();
            let mut n = 1;
            while names.contains(&name) {
                name = format!("{hint}{n}");
                n += 1;
            }
            out.push_str(&name);
            out.push('.');
            names.push(name);
            write_path(body, names, out);
            names.pop();
            out.push(')');
        }
        other => {
            let children = other.children();
            list(other.constructor_name(), &children, names, out);
        }
    }
}

impl fmt::Display for PathTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_path(self, &mut Vec::new(), &mut out);
        f.write_str(&out)
    }
}

/// Canonical text of a path; `parse_path` inverts it.
pub fn format_path(p: &PathTerm) -> String {
    p.to_string()
}
