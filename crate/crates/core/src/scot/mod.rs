//! Stochastic context trees.
//!
//! A SCOT attaches a next-letter distribution to every leaf of a complete
//! context tree. When the tree has perfect memory the next context depends
//! only on the current context and the emitted letter, so the process is a
//! first-order chain on the leaves.

mod markov;
mod sim;

use std::collections::BTreeMap;

pub use markov::{MarkovChain, Stationary, StationaryOptions};
pub use sim::SplitMix64;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Result, TreeError};
use crate::pm::{is_pm_def4, PmWitness, Verdict};
use crate::scalar::Probability;
use crate::tree::ContextTree;
use crate::word::Word;

/// The unique context `u` with `u ≺ c·a`.
pub fn next_context(t: &ContextTree, c: &Word, a: Symbol) -> Result<Word> {
    if !t.is_context(c) {
        return Err(TreeError::UnknownContext(c.clone()));
    }
    t.alphabet().check(a as usize)?;
    t.context_postfix_of(&c.push(a))
        .ok_or(TreeError::NotPerfectMemory { context: c.clone(), symbol: a as usize })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scot<P> {
    tree: ContextTree,
    /// Canonical order, aligned with `dists`.
    contexts: Vec<Word>,
    dists: Vec<Vec<P>>,
}

impl<P: Probability> Scot<P> {
    /// Pairs a perfect-memory tree with one distribution per context.
    pub fn new<I>(tree: ContextTree, dists: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Vec<P>)>,
    {
        match is_pm_def4(&tree)? {
            Verdict::Holds => {}
            Verdict::Fails(PmWitness::MissingNextContext { context, symbol }) => {
                return Err(TreeError::NotPerfectMemory { context, symbol: symbol as usize })
            }
            Verdict::Fails(_) => unreachable!("def4 only reports missing next contexts"),
        }
        let n = tree.alphabet().len();
        let mut given: BTreeMap<Word, Vec<P>> = BTreeMap::new();
        for (word, dist) in dists {
            if !tree.is_context(&word) {
                return Err(TreeError::UnknownContext(word));
            }
            if given.insert(word.clone(), dist).is_some() {
                return Err(TreeError::InvalidDistribution {
                    context: word,
                    reason: "given twice".into(),
                });
            }
        }
        let contexts = tree.contexts();
        let mut ordered = Vec::with_capacity(contexts.len());
        for c in &contexts {
            let dist = given.remove(c).ok_or_else(|| TreeError::InvalidDistribution {
                context: c.clone(),
                reason: "no distribution given".into(),
            })?;
            check_distribution(c, &dist, n)?;
            ordered.push(dist);
        }
        Ok(Scot { tree, contexts, dists: ordered })
    }

    /// An order-`m` chain as a SCOT on the full depth-`m` tree. `table` maps
    /// every history of length `m` (oldest letter first) to the distribution
    /// of the next letter.
    pub fn from_full_mc(alphabet: &Alphabet, order: usize, table: BTreeMap<Word, Vec<P>>) -> Result<Self> {
        let tree = ContextTree::full(alphabet, order);
        if let Some(missing) = tree.contexts().into_iter().find(|c| !table.contains_key(c)) {
            return Err(TreeError::IncompleteTable(missing));
        }
        Self::new(tree, table)
    }

    pub fn tree(&self) -> &ContextTree {
        &self.tree
    }

    pub fn contexts(&self) -> &[Word] {
        &self.contexts
    }

    pub fn distributions(&self) -> &[Vec<P>] {
        &self.dists
    }

    pub fn distribution(&self, c: &Word) -> Option<&[P]> {
        self.contexts
            .binary_search(c)
            .ok()
            .map(|i| self.dists[i].as_slice())
    }

    /// `table[i][a]` is the state index reached from state `i` on letter `a`.
    pub(crate) fn transition_table(&self) -> Result<Vec<Vec<usize>>> {
        let t = &self.tree;
        self.contexts
            .iter()
            .map(|c| {
                t.alphabet()
                    .symbols()
                    .map(|a| {
                        let u = next_context(t, c, a)?;
                        Ok(self.contexts.binary_search(&u).expect("next context is a leaf"))
                    })
                    .collect()
            })
            .collect()
    }

    /// First-order chain on the leaves: `M[c][u]` sums `P(a | c)` over the
    /// letters `a` that lead from `c` to `u`.
    pub fn build_markov(&self) -> Result<MarkovChain<P>> {
        let table = self.transition_table()?;
        let rows = table
            .iter()
            .zip(&self.dists)
            .map(|(next, dist)| {
                let mut row: BTreeMap<usize, P> = BTreeMap::new();
                for (&j, p) in next.iter().zip(dist) {
                    if p.is_zero() {
                        continue;
                    }
                    let e = row.entry(j).or_insert_with(P::zero);
                    *e = e.clone() + p.clone();
                }
                row.into_iter().collect()
            })
            .collect();
        Ok(MarkovChain::from_sparse_rows(self.contexts.clone(), rows))
    }
}

fn check_distribution<P: Probability>(c: &Word, dist: &[P], n: usize) -> Result<()> {
    let bad = |reason: String| TreeError::InvalidDistribution { context: c.clone(), reason };
    if dist.len() != n {
        return Err(bad(format!("expected {n} probabilities, got {}", dist.len())));
    }
    if let Some(p) = dist.iter().find(|p| p.is_negative()) {
        return Err(bad(format!("negative probability {p}")));
    }
    let sum = dist.iter().fold(P::zero(), |acc, p| acc + p.clone());
    if !sum.is_unit_sum() {
        return Err(bad(format!("probabilities sum to {sum}")));
    }
    Ok(())
}
