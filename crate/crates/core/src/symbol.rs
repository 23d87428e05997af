use alloc::string::String;
use core::fmt;
use core::str::FromStr;

/// Spelling of the empty input in words, tables and files.
pub const EPSILON: &str = "eps";

/// A molecular symbol: an automaton input or a graph edge label.
///
/// Names are non-empty and contain no whitespace or commas (words are written
/// comma-separated on the command line). `eps` is reserved for ε and is never
/// a symbol.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(String);

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid symbol name {0:?}")]
pub struct InvalidSymbol(pub String);

impl Symbol {
    pub fn new(name: impl Into<String>) -> Result<Self, InvalidSymbol> {
        let name = name.into();
        if name.is_empty() || name == EPSILON || name.chars().any(|c| c.is_whitespace() || c == ',')
        {
            return Err(InvalidSymbol(name));
        }
        Ok(Symbol(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Symbol {
    type Err = InvalidSymbol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Symbol::new(s)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Symbol {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl core::borrow::Borrow<str> for Symbol {
    fn borrow(&self) -> &str {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_reserved_and_malformed_names() {
        assert!(Symbol::new("eps").is_err());
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("a b").is_err());
        assert!(Symbol::new("a,b").is_err());
        assert_eq!(Symbol::new("F6P").unwrap().as_str(), "F6P");
    }
}
