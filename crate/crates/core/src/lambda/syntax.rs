use std::fmt;
use std::sync::Arc;

use super::term::LambdaTerm;
use crate::error::{Error, Result};
use crate::name::{is_ident_continue, is_ident_start, BinderName};

/// Parses `\x.body`, left-associative application and parenthesised terms.
/// `λ` is accepted as a synonym for the backslash.
pub fn parse_lambda(text: &str) -> Result<LambdaTerm> {
    let mut p = Parser { src: text, pos: 0, scope: Vec::new() };
    let t = p.term()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(Error::syntax(p.pos, "unexpected trailing input"));
    }
    Ok(t)
}

pub(crate) fn is_lambda_ident_continue(c: char) -> bool {
    is_ident_continue(c) || c == '\''
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

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if is_ident_start(c) => self.pos += 1,
            _ => return Err(Error::syntax(start, "expected identifier")),
        }
        while let Some(c) = self.peek() {
            if !is_lambda_ident_continue(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn term(&mut self) -> Result<LambdaTerm> {
        self.skip_ws();
        match self.peek() {
            Some('\\') | Some('λ') => {
                self.pos += self.peek().map(char::len_utf8).unwrap_or(1);
                let name = self.ident()?;
                self.skip_ws();
                if self.peek() != Some('.') {
                    return Err(Error::syntax(self.pos, "expected `.` after binder"));
                }
                self.pos += 1;
                self.scope.push(name.clone());
                let body = self.term();
                self.scope.pop();
                Ok(LambdaTerm::Abs(BinderName::new(name), Arc::new(body?)))
            }
            _ => self.application(),
        }
    }

    fn application(&mut self) -> Result<LambdaTerm> {
        let mut acc = self.atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c == '(' || is_ident_start(c) => {
                    let arg = self.atom()?;
                    acc = LambdaTerm::app(acc, arg);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn atom(&mut self) -> Result<LambdaTerm> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.term()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(Error::syntax(self.pos, "expected `)`"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(c) if is_ident_start(c) => {
                let name = self.ident()?;
                Ok(match self.scope.iter().rev().position(|n| *n == name) {
                    Some(index) => LambdaTerm::Bound(index),
                    None => LambdaTerm::Free(Arc::from(name.as_str())),
                })
            }
            Some(_) => Err(Error::syntax(self.pos, "expected identifier or `(`")),
            None => Err(Error::syntax(self.pos, "unexpected end of input")),
        }
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Slot {
    Top,
    Fun,
    Arg,
}

fn write_term(t: &LambdaTerm, names: &mut Vec<String>, slot: Slot, out: &mut String) {
    match t {
        LambdaTerm::Free(n) => out.push_str(n),
        LambdaTerm::Bound(k) => match names.len().checked_sub(k + 1) {
            Some(i) => out.push_str(&names[i]),
            None => {
                out.push('#');
                out.push_str(&k.to_string());
            }
        },
        LambdaTerm::Abs(hint, body) => {
            let free = body.free_vars();
            let mut name = hint.as_str().to_string();
            while free.contains(name.as_str()) || names.contains(&name) {
                name.push('\'');
            }
            if slot != Slot::Top {
                out.push('(');
            }
            out.push('\\');
            out.push_str(&name);
            out.push('.');
            names.push(name);
            write_term(body, names, Slot::Top, out);
            names.pop();
            if slot != Slot::Top {
                out.push(')');
            }
        }
        LambdaTerm::App(f, a) => {
            if slot == Slot::Arg {
                out.push('(');
            }
            write_term(f, names, Slot::Fun, out);
            out.push(' ');
            write_term(a, names, Slot::Arg, out);
            if slot == Slot::Arg {
                out.push(')');
            }
        }
    }
}

impl fmt::Display for LambdaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_term(self, &mut Vec::new(), Slot::Top, &mut out);
        f.write_str(&out)
    }
}
