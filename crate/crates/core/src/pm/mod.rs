//! Perfect-memory context trees.
//!
//! A tree has perfect memory when, for every context `c` and letter `a`, some
//! context is a postfix of `c·a`, so the next context is always determined by
//! the current one. Four equivalent tests are provided; they agree on every
//! complete tree and each failing answer carries a [`PmWitness`] that can be
//! re-checked on its own.

mod chain;
mod closure;
mod metrics;

use std::fmt;

pub use chain::pm_chain;
pub use closure::{closure, closure_oracle, closure_trim, closure_trim_with_stats, TrimStats};
pub use metrics::{metrics, TreeMetrics};

use crate::alphabet::Symbol;
use crate::error::Result;
use crate::lattice::uncontained_context;
use crate::tree::ContextTree;
use crate::word::{is_postfix, Word};

/// A counterexample to perfect memory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PmWitness {
    /// The tree is not complete: `node` has children but none along `symbol`.
    Incomplete { node: Word, symbol: Symbol },
    /// No context is a postfix of `context·symbol`.
    MissingNextContext { context: Word, symbol: Symbol },
    /// `context` belongs to the subtree `T_symbol` but is not a node of the
    /// tree, so that subtree is not contained at the root.
    UncontainedSubtree { symbol: Symbol, context: Word },
    /// `prefix` (a prefix of `context`) is a postfix of no context.
    PrefixNotPostfix { prefix: Word, context: Word },
}

impl PmWitness {
    /// Re-checks the counterexample against `t` straight from the
    /// definitions, by scanning the context set.
    pub fn verify(&self, t: &ContextTree) -> bool {
        let contexts = t.contexts();
        let is_node = |w: &Word| contexts.iter().any(|c| is_postfix(w, c));
        match self {
            PmWitness::Incomplete { node, symbol } => {
                let has_child = t.alphabet().symbols().any(|a| is_node(&node.prepend(a)));
                is_node(node) && has_child && !is_node(&node.prepend(*symbol))
            }
            PmWitness::MissingNextContext { context, symbol } => {
                let next = context.push(*symbol);
                contexts.contains(context) && !contexts.iter().any(|u| is_postfix(u, &next))
            }
            PmWitness::UncontainedSubtree { symbol, context } => {
                contexts.contains(&context.push(*symbol)) && !is_node(context)
            }
            PmWitness::PrefixNotPostfix { prefix, context } => {
                contexts.contains(context)
                    && context.symbols().starts_with(prefix.symbols())
                    && !is_node(prefix)
            }
        }
    }
}

impl fmt::Display for PmWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PmWitness::Incomplete { node, symbol } => {
                write!(f, "node {node} has children but none for symbol {symbol}")
            }
            PmWitness::MissingNextContext { context, symbol } => {
                write!(f, "no context is a postfix of {context} followed by {symbol}")
            }
            PmWitness::UncontainedSubtree { symbol, context } => write!(
                f,
                "context {context} of subtree {symbol} is not a postfix of any context"
            ),
            PmWitness::PrefixNotPostfix { prefix, context } => write!(
                f,
                "{prefix}, a prefix of context {context}, is not a postfix of any context"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(PmWitness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&PmWitness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// The four equivalent perfect-memory tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Every context followed by any letter has a context as postfix.
    Def4,
    /// Complete, and every first-level subtree is contained at the root.
    Thm2,
    /// Complete, and every context minus its newest letter is a node.
    Cor1,
    /// Complete, and every prefix of every context is a node.
    Cor2,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [Criterion::Def4, Criterion::Thm2, Criterion::Cor1, Criterion::Cor2];

    pub fn check(self, t: &ContextTree) -> Result<Verdict> {
        match self {
            Criterion::Def4 => is_pm_def4(t),
            Criterion::Thm2 => is_pm_thm2(t),
            Criterion::Cor1 => is_pm_cor1(t),
            Criterion::Cor2 => is_pm_cor2(t),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Def4 => "def4",
            Criterion::Thm2 => "thm2",
            Criterion::Cor1 => "cor1",
            Criterion::Cor2 => "cor2",
        }
    }
}

/// Shorthand for the definitional test.
pub fn is_perfect_memory(t: &ContextTree) -> Result<bool> {
    Ok(is_pm_def4(t)?.holds())
}

pub fn is_pm_def4(t: &ContextTree) -> Result<Verdict> {
    t.require_nonempty()?;
    for c in t.contexts() {
        for a in t.alphabet().symbols() {
            if t.context_id_postfix_of(c.push(a).symbols()).is_none() {
                return Ok(Verdict::Fails(PmWitness::MissingNextContext { context: c, symbol: a }));
            }
        }
    }
    Ok(Verdict::Holds)
}

fn completeness(t: &ContextTree) -> Result<Option<Verdict>> {
    t.require_nonempty()?;
    Ok(t
        .incompleteness()
        .map(|(node, symbol)| Verdict::Fails(PmWitness::Incomplete { node, symbol })))
}

pub fn is_pm_thm2(t: &ContextTree) -> Result<Verdict> {
    if let Some(v) = completeness(t)? {
        return Ok(v);
    }
    for i in t.alphabet().symbols() {
        let sub = t.subtree(i)?;
        if sub.is_empty() {
            continue;
        }
        if let Some(context) = uncontained_context(&sub, t)? {
            return Ok(Verdict::Fails(PmWitness::UncontainedSubtree { symbol: i, context }));
        }
    }
    Ok(Verdict::Holds)
}

pub fn is_pm_cor1(t: &ContextTree) -> Result<Verdict> {
    if let Some(v) = completeness(t)? {
        return Ok(v);
    }
    for c in t.contexts() {
        let stem = c.drop_last();
        if !c.is_empty() && !t.is_node(&stem) {
            return Ok(Verdict::Fails(PmWitness::PrefixNotPostfix { prefix: stem, context: c }));
        }
    }
    Ok(Verdict::Holds)
}

pub fn is_pm_cor2(t: &ContextTree) -> Result<Verdict> {
    if let Some(v) = completeness(t)? {
        return Ok(v);
    }
    for c in t.contexts() {
        for k in 1..c.len() {
            let prefix = Word::from(&c.symbols()[..k]);
            if !t.is_node(&prefix) {
                return Ok(Verdict::Fails(PmWitness::PrefixNotPostfix { prefix, context: c }));
            }
        }
    }
    Ok(Verdict::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TreeError;

    fn tree(ctx: &[&str]) -> ContextTree {
        ContextTree::from_digit_strs(2, ctx).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::from_digits(s)
    }

    const FIG2: [&str; 7] = ["00", "010", "110", "001", "0101", "1101", "11"];
    const FIG3: [&str; 6] = ["00", "10", "001", "0101", "1101", "11"];
    const COMB: [&str; 5] = ["1", "10", "100", "0000", "1000"];

    #[test]
    fn figure_three_witnesses() {
        let t = tree(&FIG3);
        let def4 = is_pm_def4(&t).unwrap();
        assert_eq!(
            def4,
            Verdict::Fails(PmWitness::MissingNextContext { context: w("10"), symbol: 1 })
        );
        let thm2 = is_pm_thm2(&t).unwrap();
        assert_eq!(
            thm2,
            Verdict::Fails(PmWitness::UncontainedSubtree { symbol: 1, context: w("010") })
        );
        let cor1 = is_pm_cor1(&t).unwrap();
        assert_eq!(
            cor1,
            Verdict::Fails(PmWitness::PrefixNotPostfix { prefix: w("010"), context: w("0101") })
        );
        let cor2 = is_pm_cor2(&t).unwrap();
        assert_eq!(
            cor2,
            Verdict::Fails(PmWitness::PrefixNotPostfix { prefix: w("010"), context: w("0101") })
        );
        for v in [def4, thm2, cor1, cor2] {
            assert!(v.witness().unwrap().verify(&t));
        }
    }

    #[test]
    fn perfect_memory_examples() {
        let a = crate::Alphabet::binary();
        for t in [
            tree(&FIG2),
            tree(&COMB),
            ContextTree::root_only(&a),
            ContextTree::full(&a, 1),
            ContextTree::full(&a, 3),
        ] {
            for c in Criterion::ALL {
                assert!(c.check(&t).unwrap().holds(), "{c:?} on {t:?}");
            }
        }
    }

    #[test]
    fn incomplete_input() {
        let t = tree(&["00", "10", "01"]);
        for c in [Criterion::Thm2, Criterion::Cor1, Criterion::Cor2] {
            let v = c.check(&t).unwrap();
            assert_eq!(v, Verdict::Fails(PmWitness::Incomplete { node: w("1"), symbol: 1 }));
            assert!(v.witness().unwrap().verify(&t));
        }
        let v = is_pm_def4(&t).unwrap();
        assert!(!v.holds());
        assert!(v.witness().unwrap().verify(&t));
    }

    #[test]
    fn empty_tree_is_rejected() {
        let e = ContextTree::empty(&crate::Alphabet::binary());
        for c in Criterion::ALL {
            assert_eq!(c.check(&e), Err(TreeError::EmptyTree));
        }
    }

    #[test]
    fn bogus_witnesses_do_not_verify() {
        let t = tree(&FIG2);
        assert!(!PmWitness::MissingNextContext { context: w("10"), symbol: 1 }.verify(&t));
        assert!(!PmWitness::PrefixNotPostfix { prefix: w("010"), context: w("0101") }.verify(&t));
        assert!(!PmWitness::UncontainedSubtree { symbol: 1, context: w("010") }.verify(&t));
        assert!(!PmWitness::Incomplete { node: w("1"), symbol: 1 }.verify(&t));
    }
}
