//! Random tree samplers for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::alphabet::Alphabet;
use crate::pm::closure;
use crate::trie::{NodeId, Trie, ROOT};
use crate::tree::ContextTree;

/// Complete tree grown from the root: each node below `max_depth` splits
/// into a full set of children with probability `split`.
pub fn random_complete_tree<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_depth: usize,
    split: f64,
) -> ContextTree {
    let mut trie = Trie::root_only();
    let mut stack: Vec<NodeId> = vec![ROOT];
    while let Some(id) = stack.pop() {
        if trie.depth_of(id) < max_depth && rng.gen_bool(split) {
            for a in alphabet.symbols() {
                stack.push(trie.add_child(id, a).0);
            }
        }
    }
    ContextTree::from_trie(alphabet, trie)
}

/// A random complete tree with some contexts removed, so the result is
/// usually incomplete. At least one context survives.
pub fn random_tree<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_depth: usize,
    split: f64,
    drop: f64,
) -> ContextTree {
    let full = random_complete_tree(rng, alphabet, max_depth, split);
    let mut contexts = full.contexts();
    contexts.shuffle(rng);
    let keep = contexts.len() - (0..contexts.len() - 1).filter(|_| rng.gen_bool(drop)).count();
    contexts.truncate(keep);
    ContextTree::from_contexts(alphabet, contexts).expect("subset of a postfix-free set")
}

/// Complete tree whose leaves all sit at depth `k` or `k + 1`.
pub fn random_two_level_tree<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    k: usize,
    split: f64,
) -> ContextTree {
    let base = ContextTree::full(alphabet, k);
    let mut trie = base.trie().clone();
    for id in base.trie().leaves() {
        if rng.gen_bool(split) {
            for a in alphabet.symbols() {
                trie.add_child(id, a);
            }
        }
    }
    ContextTree::from_trie(alphabet, trie)
}

/// Closure of a random complete tree.
pub fn random_pm_tree<R: Rng + ?Sized>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_depth: usize,
    split: f64,
) -> ContextTree {
    closure(&random_complete_tree(rng, alphabet, max_depth, split)).expect("nonempty tree")
}
