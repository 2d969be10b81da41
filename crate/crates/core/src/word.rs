use std::cmp::Ordering;
use std::fmt;

use crate::alphabet::{Alphabet, Symbol};

/// A finite string of symbols, stored oldest symbol first.
///
/// The last element is the most recent letter, which is the one adjacent to
/// the root on a context path. Reading a word backwards walks the tree from
/// the root towards a leaf.
///
/// Words order canonically: shorter first, then lexicographically by the
/// newest-first reading (the order in which a breadth-first walk of a trie
/// with sorted children meets them).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    /// Parses a string of decimal digits, one symbol per character.
    /// Handy for alphabets of at most ten letters.
    pub fn from_digits(s: &str) -> Self {
        Word(
            s.chars()
                .map(|c| c.to_digit(10).expect("decimal digit") as Symbol)
                .collect(),
        )
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The most recent letter.
    pub fn last(&self) -> Option<Symbol> {
        self.0.last().copied()
    }

    /// `self` followed by the newer letter `a`.
    pub fn push(&self, a: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(a);
        Word(v)
    }

    /// `a` prepended as the new oldest letter, i.e. the child of `self` in a tree.
    pub fn prepend(&self, a: Symbol) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// The word without its most recent letter.
    pub fn drop_last(&self) -> Word {
        Word(self.0[..self.0.len().saturating_sub(1)].to_vec())
    }

    /// The word without its oldest letter (the parent node in a tree).
    pub fn drop_first(&self) -> Word {
        Word(self.0.get(1..).unwrap_or_default().to_vec())
    }

    /// Iterates over all postfixes, longest (the word itself) first, ending with ε.
    pub fn postfixes(&self) -> impl Iterator<Item = &[Symbol]> + '_ {
        (0..=self.0.len()).map(move |i| &self.0[i..])
    }

    pub fn is_postfix_of(&self, other: &Word) -> bool {
        is_postfix(self, other)
    }

    pub fn render(&self, alphabet: &Alphabet, sep: &str) -> String {
        self.0
            .iter()
            .map(|&s| alphabet.token(s))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// `v ≺ s`: `s` ends with `v`.
pub fn is_postfix(v: &Word, s: &Word) -> bool {
    s.0.ends_with(&v.0)
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl From<&[Symbol]> for Word {
    fn from(v: &[Symbol]) -> Self {
        Word(v.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let compact = self.0.iter().all(|&s| s < 10);
        for (i, s) in self.0.iter().enumerate() {
            if !compact && i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s)
    }

    #[test]
    fn postfix_examples() {
        assert!(is_postfix(&Word::empty(), &w("0101")));
        assert!(is_postfix(&w("01"), &w("1101")));
        assert!(!is_postfix(&w("10"), &w("1101")));
        assert!(!is_postfix(&w("101"), &w("11")));
        assert!(is_postfix(&w("1101"), &w("1101")));
    }

    #[test]
    fn canonical_order() {
        let mut words = vec![w("11"), w("0101"), w("00"), w("010"), w("1101"), w("110"), w("001")];
        words.sort();
        // newest-first readings: 00, 11, 010, 011, 100, 1010, 1011
        assert_eq!(
            words,
            vec![w("00"), w("11"), w("010"), w("110"), w("001"), w("0101"), w("1101")]
        );
    }

    #[test]
    fn edits() {
        assert_eq!(w("0101").drop_last(), w("010"));
        assert_eq!(w("0101").drop_first(), w("101"));
        assert_eq!(w("01").push(1), w("011"));
        assert_eq!(w("01").prepend(1), w("101"));
        assert_eq!(Word::empty().drop_last(), Word::empty());
        let post: Vec<Word> = w("101").postfixes().map(Word::from).collect();
        assert_eq!(post, vec![w("101"), w("01"), w("1"), Word::empty()]);
    }
}
