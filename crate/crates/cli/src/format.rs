//! Line-based text formats for trees and SCOTs.
//!
//! ```text
//! ctree v1
//! alphabet 0 1
//! context 0 0
//! context 1 0 1
//! ```
//!
//! Contexts are written oldest symbol first, so `context 1 0 1` ends with
//! the most recent letter `1`. A bare `context` line is the empty context.
//! SCOT files use the header `scot v1` and append `: p1 ... pn` to every
//! context line, one probability per letter in alphabet order, written as
//! decimals or as `num/den` rationals. Blank lines and lines starting with
//! `#` are ignored.

use std::collections::HashMap;
use std::str::FromStr;

use ctxtree::scot::Scot;
use ctxtree::{Alphabet, BigRational, ContextTree, ExactScot, FloatScot, Probability, TreeError, Word, MAX_PARSE_DEPTH};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Tree(#[from] TreeError),
}

fn at(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Line { line, message: message.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Tree,
    Scot,
}

/// A SCOT read from text: exact when every probability was written as an
/// integer or a `num/den` rational.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyScot {
    Exact(ExactScot),
    Float(FloatScot),
}

impl AnyScot {
    pub fn tree(&self) -> &ContextTree {
        match self {
            AnyScot::Exact(s) => s.tree(),
            AnyScot::Float(s) => s.tree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Tree(ContextTree),
    Scot(AnyScot),
}

impl Document {
    pub fn tree(&self) -> &ContextTree {
        match self {
            Document::Tree(t) => t,
            Document::Scot(s) => s.tree(),
        }
    }
}

struct Raw {
    kind: Kind,
    alphabet: Alphabet,
    /// (line, context, probability tokens)
    entries: Vec<(usize, Word, Vec<String>)>,
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn read_raw(text: &str) -> Result<Raw, FormatError> {
    let mut lines = meaningful(text);
    let (hline, header) = lines.next().ok_or_else(|| at(1, "empty file, expected a `ctree v1` or `scot v1` header"))?;
    let kind = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["ctree", "v1"] => Kind::Tree,
        ["scot", "v1"] => Kind::Scot,
        _ => return Err(at(hline, format!("expected `ctree v1` or `scot v1`, found `{header}`"))),
    };
    let mut alphabet: Option<Alphabet> = None;
    let mut entries = Vec::new();
    let mut seen: HashMap<Word, usize> = HashMap::new();
    for (line, text) in lines {
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        match keyword {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(at(line, "second alphabet line"));
                }
                let a = Alphabet::new(rest.split_whitespace()).map_err(|e| at(line, e.to_string()))?;
                alphabet = Some(a);
            }
            "context" => {
                let a = alphabet.as_ref().ok_or_else(|| at(line, "context before the alphabet line"))?;
                let (symbols, probs) = match (kind, rest.split_once(':')) {
                    (Kind::Tree, None) => (rest, Vec::new()),
                    (Kind::Tree, Some(_)) => return Err(at(line, "probabilities are only allowed in scot files")),
                    (Kind::Scot, Some((s, p))) => (s, p.split_whitespace().map(String::from).collect()),
                    (Kind::Scot, None) => return Err(at(line, "expected `: p1 ... pn` after the context")),
                };
                let mut word = Vec::new();
                for tok in symbols.split_whitespace() {
                    let s = a.index_of(tok).ok_or_else(|| at(line, format!("unknown symbol `{tok}`")))?;
                    word.push(s);
                }
                if word.len() > MAX_PARSE_DEPTH {
                    let e = TreeError::DepthLimit { depth: word.len(), limit: MAX_PARSE_DEPTH };
                    return Err(at(line, e.to_string()));
                }
                if kind == Kind::Scot && probs.len() != a.len() {
                    return Err(at(line, format!("expected {} probabilities, found {}", a.len(), probs.len())));
                }
                let word = Word::new(word);
                if let Some(first) = seen.insert(word.clone(), line) {
                    return Err(at(line, format!("context {word} already given on line {first}")));
                }
                entries.push((line, word, probs));
            }
            other => return Err(at(line, format!("unknown keyword `{other}`"))),
        }
    }
    let alphabet = alphabet.ok_or_else(|| at(hline, "missing alphabet line"))?;
    if entries.is_empty() {
        return Err(FormatError::Tree(TreeError::EmptyTree));
    }
    Ok(Raw { kind, alphabet, entries })
}

fn build_tree(raw: &Raw) -> Result<ContextTree, FormatError> {
    let words = raw.entries.iter().map(|(_, w, _)| w.clone());
    ContextTree::from_contexts(&raw.alphabet, words).map_err(|e| match &e {
        TreeError::PostfixViolation { shorter, longer } => {
            let line_of = |w: &Word| raw.entries.iter().find(|(_, x, _)| x == w).map_or(0, |(l, _, _)| *l);
            at(line_of(shorter).max(line_of(longer)), e.to_string())
        }
        _ => FormatError::Tree(e),
    })
}

fn is_rational_token(tok: &str) -> bool {
    let digits = |s: &str| !s.is_empty() && s.trim_start_matches(['+', '-']).chars().all(|c| c.is_ascii_digit());
    match tok.split_once('/') {
        Some((n, d)) => digits(n) && digits(d),
        None => digits(tok),
    }
}

fn parse_prob<P: FromStr>(line: usize, tok: &str) -> Result<P, FormatError> {
    tok.parse().map_err(|_| at(line, format!("`{tok}` is not a probability")))
}

fn float_prob(line: usize, tok: &str) -> Result<f64, FormatError> {
    if let Some((n, d)) = tok.split_once('/') {
        let (n, d): (f64, f64) = (parse_prob(line, n)?, parse_prob(line, d)?);
        return Ok(n / d);
    }
    let p: f64 = parse_prob(line, tok)?;
    if !p.is_finite() {
        return Err(at(line, format!("`{tok}` is not a probability")));
    }
    Ok(p)
}

fn build_scot<P: Probability>(
    raw: &Raw,
    tree: ContextTree,
    parse: impl Fn(usize, &str) -> Result<P, FormatError>,
) -> Result<Scot<P>, FormatError> {
    let mut dists = Vec::with_capacity(raw.entries.len());
    for (line, word, probs) in &raw.entries {
        let dist = probs.iter().map(|t| parse(*line, t)).collect::<Result<Vec<P>, _>>()?;
        dists.push((word.clone(), dist));
    }
    Scot::new(tree, dists).map_err(|e| match &e {
        TreeError::InvalidDistribution { context, .. } => {
            let line = raw.entries.iter().find(|(_, w, _)| w == context).map_or(0, |(l, _, _)| *l);
            at(line, e.to_string())
        }
        _ => FormatError::Tree(e),
    })
}

/// Reads either kind of file.
pub fn parse(text: &str) -> Result<Document, FormatError> {
    let raw = read_raw(text)?;
    let tree = build_tree(&raw)?;
    match raw.kind {
        Kind::Tree => Ok(Document::Tree(tree)),
        Kind::Scot => {
            let exact = raw.entries.iter().all(|(_, _, p)| p.iter().all(|t| is_rational_token(t)));
            if exact {
                let parse = |line: usize, tok: &str| -> Result<BigRational, FormatError> {
                    let q: BigRational = parse_prob(line, tok)?;
                    Ok(q)
                };
                Ok(Document::Scot(AnyScot::Exact(build_scot(&raw, tree, parse)?)))
            } else {
                Ok(Document::Scot(AnyScot::Float(build_scot(&raw, tree, float_prob)?)))
            }
        }
    }
}

pub fn parse_tree(text: &str) -> Result<ContextTree, FormatError> {
    match parse(text)? {
        Document::Tree(t) => Ok(t),
        Document::Scot(_) => Err(at(1, "expected a `ctree v1` file")),
    }
}

pub fn parse_scot(text: &str) -> Result<AnyScot, FormatError> {
    match parse(text)? {
        Document::Scot(s) => Ok(s),
        Document::Tree(_) => Err(at(1, "expected a `scot v1` file")),
    }
}

fn context_line(alphabet: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        "context".to_string()
    } else {
        format!("context {}", w.render(alphabet, " "))
    }
}

fn alphabet_line(alphabet: &Alphabet) -> String {
    format!("alphabet {}", alphabet.tokens().join(" "))
}

/// Canonical text: contexts by length, then newest-first lexicographic.
pub fn render_tree(t: &ContextTree) -> String {
    let mut out = format!("ctree v1\n{}\n", alphabet_line(t.alphabet()));
    for c in t.contexts() {
        out.push_str(&context_line(t.alphabet(), &c));
        out.push('\n');
    }
    out
}

fn render_scot_with<P: Probability>(s: &Scot<P>, show: impl Fn(&P) -> String) -> String {
    let a = s.tree().alphabet();
    let mut out = format!("scot v1\n{}\n", alphabet_line(a));
    for (c, dist) in s.contexts().iter().zip(s.distributions()) {
        let probs: Vec<String> = dist.iter().map(&show).collect();
        out.push_str(&format!("{} : {}\n", context_line(a, c), probs.join(" ")));
    }
    out
}

pub fn render_scot(s: &AnyScot) -> String {
    match s {
        AnyScot::Exact(s) => render_scot_with(s, |p| p.to_string()),
        // Shortest text that reads back to the same double.
        AnyScot::Float(s) => render_scot_with(s, |p| format!("{p:?}")),
    }
}

pub fn render(doc: &Document) -> String {
    match doc {
        Document::Tree(t) => render_tree(t),
        Document::Scot(s) => render_scot(s),
    }
}

/// Context label for matrix output: oldest first, joined by `.`.
pub fn state_label(alphabet: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        w.render(alphabet, ".")
    }
}

/// Decimal with 17 significant digits.
pub fn decimal17(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (16 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}
