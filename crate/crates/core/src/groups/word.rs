use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Arc<str>,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: &str, inverse: bool) -> Self {
        Letter { generator: generator.into(), inverse }
    }

    pub fn inverted(&self) -> Letter {
        Letter { generator: self.generator.clone(), inverse: !self.inverse }
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A finite sequence of letters read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LoopWord {
    pub letters: Vec<Letter>,
}

impl LoopWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        LoopWord { letters }
    }

    /// `g` repeated `|k|` times, inverted when `k < 0`.
    pub fn power(generator: &str, k: i64) -> Self {
        let l = Letter::new(generator, k < 0);
        LoopWord { letters: vec![l; k.unsigned_abs() as usize] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &LoopWord) -> LoopWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        LoopWord { letters }
    }

    /// Reversed with every letter inverted.
    pub fn inverse(&self) -> LoopWord {
        LoopWord { letters: self.letters.iter().rev().map(Letter::inverted).collect() }
    }

    /// Sum of the signs of the letters over `generator`.
    pub fn exponent_sum(&self, generator: &str) -> i64 {
        self.letters.iter().filter(|l| &*l.generator == generator).map(Letter::sign).sum()
    }
}

impl fmt::Display for LoopWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&l.generator)?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LoopWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<LoopWord> {
        parse_word(s)
    }
}

/// Parses whitespace-separated letters `g`, `g^-1` or `g^k` (k ≠ 0).
pub fn parse_word(text: &str) -> Result<LoopWord> {
    let mut letters = Vec::new();
    let mut offset = 0;
    for token in text.split_whitespace() {
        let start = offset + text[offset..].find(token).expect("token comes from text");
        offset = start + token.len();
        let (name, exp) = match token.split_once('^') {
            None => (token, 1),
            Some((name, k)) => {
                let k: i64 = k
                    .parse()
                    .map_err(|_| Error::syntax(start + name.len() + 1, format!("bad exponent `{k}`")))?;
                if k == 0 {
                    return Err(Error::syntax(start + name.len() + 1, "exponent must be nonzero"));
                }
                (name, k)
            }
        };
        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::syntax(start, format!("bad generator `{name}`")));
        }
        letters.extend(LoopWord::power(name, exp).letters);
    }
    Ok(LoopWord { letters })
}
