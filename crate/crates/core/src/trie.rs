//! Arena trie keyed newest-symbol-first from the root.
//!
//! A node stands for the word read from it up to the root. The child of node
//! `v` along symbol `a` is the word `a·v` (one letter older).

use std::collections::VecDeque;

use crate::alphabet::Symbol;
use crate::word::Word;

pub(crate) type NodeId = u32;
pub(crate) const ROOT: NodeId = 0;
const NO_PARENT: NodeId = NodeId::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub parent: NodeId,
    pub symbol: Symbol,
    pub depth: u32,
    /// Sorted by symbol.
    pub children: Vec<(Symbol, NodeId)>,
}

#[derive(Clone, Debug, Default)]
pub(crate) struct Trie {
    nodes: Vec<Node>,
}

impl Trie {
    pub fn empty() -> Self {
        Trie { nodes: Vec::new() }
    }

    pub fn root_only() -> Self {
        Trie {
            nodes: vec![Node {
                parent: NO_PARENT,
                symbol: 0,
                depth: 0,
                children: Vec::new(),
            }],
        }
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Number of vertices, root included.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id as usize]
    }

    pub fn is_leaf(&self, id: NodeId) -> bool {
        self.nodes[id as usize].children.is_empty()
    }

    pub fn depth_of(&self, id: NodeId) -> usize {
        self.nodes[id as usize].depth as usize
    }

    pub fn child(&self, id: NodeId, symbol: Symbol) -> Option<NodeId> {
        let ch = &self.nodes[id as usize].children;
        ch.binary_search_by_key(&symbol, |&(s, _)| s)
            .ok()
            .map(|i| ch[i].1)
    }

    /// Returns the child along `symbol`, creating it when missing. The flag
    /// tells whether a node was created.
    pub fn add_child(&mut self, id: NodeId, symbol: Symbol) -> (NodeId, bool) {
        let pos = match self.nodes[id as usize]
            .children
            .binary_search_by_key(&symbol, |&(s, _)| s)
        {
            Ok(i) => return (self.nodes[id as usize].children[i].1, false),
            Err(i) => i,
        };
        let new = self.nodes.len() as NodeId;
        let depth = self.nodes[id as usize].depth + 1;
        self.nodes.push(Node {
            parent: id,
            symbol,
            depth,
            children: Vec::new(),
        });
        self.nodes[id as usize].children.insert(pos, (symbol, new));
        (new, true)
    }

    pub fn find(&self, word: &[Symbol]) -> Option<NodeId> {
        if self.is_empty() {
            return None;
        }
        let mut cur = ROOT;
        for &s in word.iter().rev() {
            cur = self.child(cur, s)?;
        }
        Some(cur)
    }

    /// Inserts the path for `word`. The trie must have a root.
    pub fn insert(&mut self, word: &[Symbol]) -> NodeId {
        let mut cur = ROOT;
        for &s in word.iter().rev() {
            cur = self.add_child(cur, s).0;
        }
        cur
    }

    /// The word a node stands for, oldest letter first.
    pub fn word(&self, mut id: NodeId) -> Word {
        let mut v = Vec::with_capacity(self.depth_of(id));
        while id != ROOT {
            let n = &self.nodes[id as usize];
            v.push(n.symbol);
            id = n.parent;
        }
        Word::new(v)
    }

    /// All nodes in canonical order (breadth first, children by symbol).
    pub fn bfs(&self) -> Vec<NodeId> {
        self.bfs_from(ROOT)
    }

    pub fn bfs_from(&self, start: NodeId) -> Vec<NodeId> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::from([start]);
        while let Some(id) = queue.pop_front() {
            out.push(id);
            queue.extend(self.nodes[id as usize].children.iter().map(|&(_, c)| c));
        }
        out
    }

    pub fn leaves(&self) -> Vec<NodeId> {
        self.bfs().into_iter().filter(|&id| self.is_leaf(id)).collect()
    }

    pub fn max_depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth as usize).max().unwrap_or(0)
    }

    /// Copies the subtree rooted at `start` into a fresh trie.
    pub fn subtrie(&self, start: NodeId) -> Trie {
        self.filtered_from(start, |_| true)
    }

    /// Copies the nodes accepted by `keep`, starting from the root. A rejected
    /// node drops its whole subtree.
    pub fn filtered(&self, keep: impl Fn(NodeId) -> bool) -> Trie {
        if self.is_empty() || !keep(ROOT) {
            return Trie::empty();
        }
        self.filtered_from(ROOT, keep)
    }

    fn filtered_from(&self, start: NodeId, keep: impl Fn(NodeId) -> bool) -> Trie {
        let mut out = Trie::root_only();
        let mut stack = vec![(start, ROOT)];
        while let Some((src, dst)) = stack.pop() {
            for &(s, c) in &self.nodes[src as usize].children {
                if keep(c) {
                    let (nc, _) = out.add_child(dst, s);
                    stack.push((c, nc));
                }
            }
        }
        out
    }

    /// Adds every node of `other` to `self` (node-set union). Both must be nonempty.
    pub fn merge(&mut self, other: &Trie) {
        let mut stack = vec![(ROOT, ROOT)];
        while let Some((src, dst)) = stack.pop() {
            for &(s, c) in &other.nodes[src as usize].children {
                let (nc, _) = self.add_child(dst, s);
                stack.push((c, nc));
            }
        }
    }

    /// True when every node of `self` is also a node of `other`.
    pub fn is_subset(&self, other: &Trie) -> bool {
        if self.is_empty() {
            return true;
        }
        if other.is_empty() {
            return false;
        }
        let mut stack = vec![(ROOT, ROOT)];
        while let Some((a, b)) = stack.pop() {
            for &(s, c) in &self.nodes[a as usize].children {
                match other.child(b, s) {
                    Some(d) => stack.push((c, d)),
                    None => return false,
                }
            }
        }
        true
    }

    pub fn same_shape(&self, other: &Trie) -> bool {
        self.len() == other.len() && self.is_subset(other)
    }
}
