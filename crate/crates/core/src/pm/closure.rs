use crate::error::Result;
use crate::lattice::union_all;
use crate::trie::{NodeId, ROOT};
use crate::tree::ContextTree;

/// Perfect-memory closure as the union at the root of every subtree of the
/// completed tree. Quadratic in the depth; kept as the reference answer.
pub fn closure_oracle(t: &ContextTree) -> Result<ContextTree> {
    let hull = t.complete_hull()?;
    union_all(hull.all_subtrees().iter())
}

/// Perfect-memory closure of any nonempty tree: completes it, then trims.
pub fn closure(t: &ContextTree) -> Result<ContextTree> {
    closure_trim(&t.complete_hull()?)
}

/// Perfect-memory closure of a complete tree by the trimming algorithm.
pub fn closure_trim(t: &ContextTree) -> Result<ContextTree> {
    closure_trim_with_stats(t).map(|(c, _)| c)
}

/// Work done by one run of the trimming algorithm.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrimStats {
    /// Elementary steps: edge walks, node creations and child slots filled.
    pub work: u64,
    /// Nodes of depth at least two taken off the queue.
    pub visited: usize,
    /// Nodes added to the parent tree.
    pub inserted: usize,
}

/// Trimming algorithm with step accounting.
///
/// Works on the parent tree `W` (the internal nodes). Nodes are taken in
/// strictly decreasing depth; for each node `w` with `|w| ≥ 2`, the word `w`
/// without its newest letter must be a node of `W`, and the path to it is
/// inserted when missing. Inserted nodes are shallower than `w`, so they are
/// queued behind the current depth. When every node of depth two or more has
/// been taken, `W` is saturated back into a complete tree.
pub fn closure_trim_with_stats(t: &ContextTree) -> Result<(ContextTree, TrimStats)> {
    let parent = t.parent_tree()?;
    let n = t.alphabet().len() as u64;
    let mut stats = TrimStats::default();
    if parent.is_empty() {
        return Ok((parent.saturate(), stats));
    }
    let mut w = parent.trie().clone();
    let max_depth = w.max_depth();
    let mut buckets: Vec<Vec<NodeId>> = vec![Vec::new(); max_depth + 1];
    for id in w.bfs() {
        buckets[w.depth_of(id)].push(id);
        stats.work += 1;
    }
    let mut path = Vec::with_capacity(max_depth);
    for depth in (2..=max_depth).rev() {
        let bucket = std::mem::take(&mut buckets[depth]);
        for id in bucket {
            stats.visited += 1;
            // Collect w oldest-first by climbing to the root.
            path.clear();
            let mut cur = id;
            while cur != ROOT {
                let node = w.node(cur);
                path.push(node.symbol);
                cur = node.parent;
                stats.work += 1;
            }
            // Walk w minus its newest letter from the root, creating what is missing.
            let mut cur = ROOT;
            for &s in path[..depth - 1].iter().rev() {
                let (next, created) = w.add_child(cur, s);
                stats.work += 1;
                if created {
                    stats.inserted += 1;
                    buckets[w.depth_of(next)].push(next);
                }
                cur = next;
            }
        }
    }
    let closed = ContextTree::from_trie(t.alphabet(), w);
    stats.work += n * closed.trie().len() as u64;
    Ok((closed.saturate(), stats))
}
