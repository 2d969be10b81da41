use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Result, TreeError};
use crate::trie::{NodeId, Trie, ROOT};
use crate::word::Word;

/// A finite context tree: a postfix-free set of contexts together with the
/// suffix-closed set of nodes they induce.
///
/// Two degenerate values are admitted. The root-only tree has the single
/// context ε and models a memoryless source. The empty tree has no nodes at
/// all; it shows up as the result of [`ContextTree::subtree`] and is rejected
/// by operations that need a root.
#[derive(Clone)]
pub struct ContextTree {
    alphabet: Alphabet,
    trie: Trie,
}

/// Size statistics of a nonempty tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    /// Length of the longest context.
    pub depth: usize,
    /// Number of contexts (leaves).
    pub leaves: usize,
    /// Number of vertices, not counting the root.
    pub nodes: usize,
}

impl ContextTree {
    /// Builds the tree whose context set is exactly `words`. Duplicates are
    /// ignored.
    pub fn from_contexts<I>(alphabet: &Alphabet, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = Word>,
    {
        let mut trie = Trie::empty();
        let mut is_context: Vec<bool> = Vec::new();
        for word in words {
            for &s in word.symbols() {
                alphabet.check(s as usize)?;
            }
            if trie.is_empty() {
                trie = Trie::root_only();
                is_context.push(false);
            }
            let mut cur = ROOT;
            let mut created = false;
            for &s in word.symbols().iter().rev() {
                if is_context[cur as usize] {
                    return Err(TreeError::PostfixViolation {
                        shorter: trie.word(cur),
                        longer: word,
                    });
                }
                let (next, new) = trie.add_child(cur, s);
                if new {
                    is_context.push(false);
                    created = true;
                }
                cur = next;
            }
            if !created && !trie.is_leaf(cur) {
                let mut leaf = cur;
                while let Some(&(_, c)) = trie.node(leaf).children.first() {
                    leaf = c;
                }
                return Err(TreeError::PostfixViolation {
                    shorter: word,
                    longer: trie.word(leaf),
                });
            }
            is_context[cur as usize] = true;
        }
        Ok(ContextTree {
            alphabet: alphabet.clone(),
            trie,
        })
    }

    /// Convenience constructor for alphabets `{0..n}` with digit strings.
    pub fn from_digit_strs(n: usize, contexts: &[&str]) -> Result<Self> {
        let alphabet = Alphabet::numbered(n)?;
        Self::from_contexts(&alphabet, contexts.iter().map(|s| Word::from_digits(s)))
    }

    pub fn empty(alphabet: &Alphabet) -> Self {
        ContextTree {
            alphabet: alphabet.clone(),
            trie: Trie::empty(),
        }
    }

    pub fn root_only(alphabet: &Alphabet) -> Self {
        ContextTree {
            alphabet: alphabet.clone(),
            trie: Trie::root_only(),
        }
    }

    /// The complete tree with every context of length `depth`.
    pub fn full(alphabet: &Alphabet, depth: usize) -> Self {
        let mut t = Self::root_only(alphabet);
        for _ in 0..depth {
            t = t.saturate();
        }
        t
    }

    pub(crate) fn from_trie(alphabet: &Alphabet, trie: Trie) -> Self {
        ContextTree {
            alphabet: alphabet.clone(),
            trie,
        }
    }

    pub(crate) fn trie(&self) -> &Trie {
        &self.trie
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn is_empty(&self) -> bool {
        self.trie.is_empty()
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(TreeError::EmptyTree)
        } else {
            Ok(())
        }
    }

    /// Contexts in canonical order.
    pub fn contexts(&self) -> Vec<Word> {
        self.trie
            .leaves()
            .into_iter()
            .map(|id| self.trie.word(id))
            .collect()
    }

    /// All nodes in canonical order, the root (ε) first.
    pub fn nodes(&self) -> Vec<Word> {
        self.trie
            .bfs()
            .into_iter()
            .map(|id| self.trie.word(id))
            .collect()
    }

    /// Nodes that have children, in canonical order.
    pub fn internal_nodes(&self) -> Vec<Word> {
        self.trie
            .bfs()
            .into_iter()
            .filter(|&id| !self.trie.is_leaf(id))
            .map(|id| self.trie.word(id))
            .collect()
    }

    pub fn is_node(&self, word: &Word) -> bool {
        self.trie.find(word.symbols()).is_some()
    }

    pub fn is_context(&self, word: &Word) -> bool {
        self.trie
            .find(word.symbols())
            .is_some_and(|id| self.trie.is_leaf(id))
    }

    /// The unique context that is a postfix of `word`, if any.
    pub fn context_postfix_of(&self, word: &Word) -> Option<Word> {
        self.context_id_postfix_of(word.symbols())
            .map(|id| self.trie.word(id))
    }

    pub(crate) fn context_id_postfix_of(&self, word: &[Symbol]) -> Option<NodeId> {
        if self.is_empty() {
            return None;
        }
        let mut cur = ROOT;
        let mut rest = word.iter().rev();
        loop {
            if self.trie.is_leaf(cur) {
                return Some(cur);
            }
            cur = self.trie.child(cur, *rest.next()?)?;
        }
    }

    pub fn depth(&self) -> usize {
        self.trie.max_depth()
    }

    pub fn leaf_count(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.trie.leaves().len()
        }
    }

    /// Vertices excluding the root.
    pub fn node_count(&self) -> usize {
        self.trie.len().saturating_sub(1)
    }

    pub fn counts(&self) -> Result<Counts> {
        self.require_nonempty()?;
        Ok(Counts {
            depth: self.depth(),
            leaves: self.leaf_count(),
            nodes: self.node_count(),
        })
    }

    /// Every node is a leaf or has one child per letter. The empty tree is
    /// not complete.
    pub fn is_complete(&self) -> bool {
        !self.is_empty() && self.incompleteness().is_none()
    }

    /// First internal node (canonical order) that misses a child, with the
    /// missing symbol.
    pub fn incompleteness(&self) -> Option<(Word, Symbol)> {
        let n = self.alphabet.len();
        self.trie.bfs().into_iter().find_map(|id| {
            let ch = &self.trie.node(id).children;
            if ch.is_empty() || ch.len() == n {
                return None;
            }
            let missing = self
                .alphabet
                .symbols()
                .find(|&s| self.trie.child(id, s).is_none())
                .expect("a missing child");
            Some((self.trie.word(id), missing))
        })
    }

    pub(crate) fn require_complete(&self) -> Result<()> {
        self.require_nonempty()?;
        match self.incompleteness() {
            None => Ok(()),
            Some((node, symbol)) => Err(TreeError::NotComplete {
                node,
                symbol: symbol as usize,
            }),
        }
    }

    /// The smallest complete tree containing `self` at the root: every
    /// internal node receives its missing children as new leaves.
    pub fn complete_hull(&self) -> Result<Self> {
        self.require_nonempty()?;
        let mut trie = self.trie.clone();
        for id in self.trie.bfs() {
            if !self.trie.is_leaf(id) {
                for s in self.alphabet.symbols() {
                    trie.add_child(id, s);
                }
            }
        }
        Ok(Self::from_trie(&self.alphabet, trie))
    }

    /// Removes all leaves of a complete tree. The inverse of [`saturate`].
    ///
    /// [`saturate`]: ContextTree::saturate
    pub fn parent_tree(&self) -> Result<Self> {
        self.require_complete()?;
        let trie = self.trie.filtered(|id| !self.trie.is_leaf(id));
        Ok(Self::from_trie(&self.alphabet, trie))
    }

    /// Grows a full set of children under every node. The empty tree
    /// saturates to the root-only tree.
    pub fn saturate(&self) -> Self {
        if self.is_empty() {
            return Self::root_only(&self.alphabet);
        }
        let mut trie = self.trie.clone();
        for id in 0..self.trie.len() as NodeId {
            for s in self.alphabet.symbols() {
                trie.add_child(id, s);
            }
        }
        Self::from_trie(&self.alphabet, trie)
    }

    /// `T_i`, with contexts `{u : u·a_i ∈ T*}`. Empty when `a_i` is not a
    /// node; the root-only tree when `a_i` is itself a context.
    pub fn subtree(&self, symbol: Symbol) -> Result<Self> {
        self.alphabet.check(symbol as usize)?;
        Ok(self.subtree_at(&Word::new(vec![symbol])))
    }

    /// The subtree hanging below node `w`, with contexts `{u : u·w ∈ T*}`.
    pub fn subtree_at(&self, w: &Word) -> Self {
        match self.trie.find(w.symbols()) {
            Some(id) => Self::from_trie(&self.alphabet, self.trie.subtrie(id)),
            None => Self::empty(&self.alphabet),
        }
    }

    /// All distinct nonempty trees reachable by iterating [`subtree`], the
    /// tree itself included, in order of first appearance along a
    /// breadth-first walk.
    ///
    /// [`subtree`]: ContextTree::subtree
    pub fn all_subtrees(&self) -> Vec<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for id in self.trie.bfs() {
            let sub = Self::from_trie(&self.alphabet, self.trie.subtrie(id));
            if seen.insert(sub.contexts()) {
                out.push(sub);
            }
        }
        out
    }

    pub(crate) fn check_same_alphabet(&self, other: &Self) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(TreeError::AlphabetMismatch)
        }
    }
}

impl PartialEq for ContextTree {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.trie.same_shape(&other.trie)
    }
}

impl Eq for ContextTree {}

impl fmt::Debug for ContextTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ContextTree(∅)");
        }
        f.write_str("ContextTree")?;
        f.debug_set().entries(self.contexts().iter().map(|w| w.to_string())).finish()
    }
}

/// Exact number of complete trees over an `n`-letter alphabet whose depth is
/// at most `depth`: `f(0) = 1`, `f(l) = 1 + f(l-1)^n`.
pub fn count_complete_trees(n: usize, depth: usize) -> BigUint {
    let mut f = BigUint::one();
    for _ in 0..depth {
        f = Pow::pow(&f, n) + BigUint::one();
    }
    f
}
