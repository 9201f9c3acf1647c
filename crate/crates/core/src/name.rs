use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// Display name of a bound variable.
///
/// Binders are resolved positionally, so the name is only a printing hint:
/// every `BinderName` compares equal to every other one.
#[derive(Clone, Debug)]
pub struct BinderName(pub String);

impl BinderName {
    pub fn new(name: impl Into<String>) -> Self {
        BinderName(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl PartialEq for BinderName {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for BinderName {}

impl Hash for BinderName {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

impl PartialOrd for BinderName {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinderName {
    fn cmp(&self, _: &Self) -> Ordering {
        Ordering::Equal
    }
}

impl fmt::Display for BinderName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic()
}

pub(crate) fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}
