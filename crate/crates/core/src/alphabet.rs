use std::fmt;
use std::sync::Arc;

use crate::error::{Result, TreeError};

/// Index of a letter within its [`Alphabet`].
pub type Symbol = u16;

/// An ordered, finite set of display tokens. Position in the list is the
/// symbol index used everywhere else.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    tokens: Arc<[String]>,
}

impl Alphabet {
    pub fn new<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let tokens: Vec<String> = tokens.into_iter().map(Into::into).collect();
        if tokens.is_empty() {
            return Err(TreeError::InvalidAlphabet("alphabet has no symbols".into()));
        }
        if tokens.len() > Symbol::MAX as usize {
            return Err(TreeError::InvalidAlphabet(format!(
                "alphabet has {} symbols, at most {} are supported",
                tokens.len(),
                Symbol::MAX
            )));
        }
        for (i, tok) in tokens.iter().enumerate() {
            if tok.is_empty() || tok.chars().any(char::is_whitespace) {
                return Err(TreeError::InvalidAlphabet(format!(
                    "token {tok:?} must be non-empty and free of whitespace"
                )));
            }
            if tokens[..i].contains(tok) {
                return Err(TreeError::InvalidAlphabet(format!("duplicate token {tok:?}")));
            }
        }
        Ok(Self {
            tokens: tokens.into(),
        })
    }

    /// Alphabet `{0, 1, ..., n-1}` with decimal tokens.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn binary() -> Self {
        Self::numbered(2).expect("binary alphabet")
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn token(&self, symbol: Symbol) -> &str {
        &self.tokens[symbol as usize]
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn index_of(&self, token: &str) -> Option<Symbol> {
        self.tokens
            .iter()
            .position(|t| t == token)
            .map(|i| i as Symbol)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        0..self.len() as Symbol
    }

    pub(crate) fn check(&self, symbol: usize) -> Result<Symbol> {
        if symbol < self.len() {
            Ok(symbol as Symbol)
        } else {
            Err(TreeError::InvalidSymbol {
                symbol,
                size: self.len(),
            })
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.tokens.iter()).finish()
    }
}
