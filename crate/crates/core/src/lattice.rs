//! Containment, union and intersection "at the root".
//!
//! For complete trees the union and intersection at the root are exactly
//! the union and intersection of the node sets, with the contexts read off
//! as the new leaves.

use crate::error::Result;
use crate::trie::{NodeId, Trie, ROOT};
use crate::tree::ContextTree;
use crate::word::Word;

fn check_pair(a: &ContextTree, b: &ContextTree) -> Result<()> {
    a.require_nonempty()?;
    b.require_nonempty()?;
    a.check_same_alphabet(b)
}

/// Every context of `a` is a postfix of some context of `b`.
pub fn contained_at_root(a: &ContextTree, b: &ContextTree) -> Result<bool> {
    Ok(uncontained_context(a, b)?.is_none())
}

/// First context of `a` (canonical order) that is a postfix of no context
/// of `b`.
pub fn uncontained_context(a: &ContextTree, b: &ContextTree) -> Result<Option<Word>> {
    check_pair(a, b)?;
    let (ta, tb) = (a.trie(), b.trie());
    if ta.is_subset(tb) {
        return Ok(None);
    }
    // A context of `a` is a postfix of a context of `b` iff it is a node of `b`.
    Ok(a.contexts().into_iter().find(|c| !b.is_node(c)))
}

/// Every context of `b` has a postfix that is a context of `a`.
pub fn covers_at_root(a: &ContextTree, b: &ContextTree) -> Result<bool> {
    Ok(uncovered_context(a, b)?.is_none())
}

/// First context of `b` (canonical order) without a postfix in `a`'s
/// context set.
pub fn uncovered_context(a: &ContextTree, b: &ContextTree) -> Result<Option<Word>> {
    check_pair(a, b)?;
    Ok(b
        .contexts()
        .into_iter()
        .find(|c| a.context_postfix_of(c).is_none()))
}

/// Union at the root of two complete trees.
pub fn union_at_root(a: &ContextTree, b: &ContextTree) -> Result<ContextTree> {
    check_pair(a, b)?;
    a.require_complete()?;
    b.require_complete()?;
    let mut trie = a.trie().clone();
    trie.merge(b.trie());
    Ok(ContextTree::from_trie(a.alphabet(), trie))
}

/// Intersection at the root of two complete trees.
pub fn intersection_at_root(a: &ContextTree, b: &ContextTree) -> Result<ContextTree> {
    check_pair(a, b)?;
    a.require_complete()?;
    b.require_complete()?;
    Ok(ContextTree::from_trie(a.alphabet(), intersect(a.trie(), b.trie())))
}

fn intersect(a: &Trie, b: &Trie) -> Trie {
    let mut out = Trie::root_only();
    let mut stack: Vec<(NodeId, NodeId, NodeId)> = vec![(ROOT, ROOT, ROOT)];
    while let Some((x, y, dst)) = stack.pop() {
        for &(s, cx) in &a.node(x).children {
            if let Some(cy) = b.child(y, s) {
                let (nd, _) = out.add_child(dst, s);
                stack.push((cx, cy, nd));
            }
        }
    }
    out
}

/// Union at the root of a nonempty family, folding the binary operation.
pub fn union_all<'a, I>(trees: I) -> Result<ContextTree>
where
    I: IntoIterator<Item = &'a ContextTree>,
{
    fold(trees, union_at_root)
}

/// Intersection at the root of a nonempty family.
pub fn intersection_all<'a, I>(trees: I) -> Result<ContextTree>
where
    I: IntoIterator<Item = &'a ContextTree>,
{
    fold(trees, intersection_at_root)
}

fn fold<'a, I>(
    trees: I,
    op: fn(&ContextTree, &ContextTree) -> Result<ContextTree>,
) -> Result<ContextTree>
where
    I: IntoIterator<Item = &'a ContextTree>,
{
    let mut it = trees.into_iter();
    let first = it.next().ok_or(crate::TreeError::EmptyTree)?;
    first.require_complete()?;
    it.try_fold(first.clone(), |acc, t| op(&acc, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Alphabet, TreeError};

    fn tree(ctx: &[&str]) -> ContextTree {
        ContextTree::from_digit_strs(2, ctx).unwrap()
    }

    const FIG2: [&str; 7] = ["00", "010", "110", "001", "0101", "1101", "11"];
    const FIG3: [&str; 6] = ["00", "10", "001", "0101", "1101", "11"];

    #[test]
    fn incomplete_counterexample() {
        let a = tree(&["00", "10", "01", "11"]);
        let b = tree(&["00", "10", "01"]);
        assert!(contained_at_root(&b, &a).unwrap());
        assert!(!contained_at_root(&a, &b).unwrap());
        assert_eq!(uncontained_context(&a, &b).unwrap(), Some(Word::from_digits("11")));
        // Condition (ii) holds for the pair although (i) fails.
        assert!(covers_at_root(&a, &b).unwrap());
        assert!(!covers_at_root(&b, &a).unwrap());
        assert_eq!(uncovered_context(&b, &a).unwrap(), Some(Word::from_digits("11")));
    }

    #[test]
    fn root_is_bottom() {
        let t = tree(&FIG2);
        let root = ContextTree::root_only(t.alphabet());
        assert!(contained_at_root(&root, &t).unwrap());
        assert_eq!(union_at_root(&t, &root).unwrap(), t);
        assert_eq!(intersection_at_root(&t, &root).unwrap(), root);
        assert_eq!(union_at_root(&t, &t).unwrap(), t);
        let d1 = ContextTree::full(t.alphabet(), 1);
        assert!(covers_at_root(&d1, &t).unwrap());
    }

    #[test]
    fn nested_figure_trees() {
        let big = tree(&FIG2);
        let small = tree(&FIG3);
        assert_eq!(union_at_root(&small, &big).unwrap(), big);
        assert_eq!(intersection_at_root(&small, &big).unwrap(), small);
    }

    #[test]
    fn errors() {
        let b = tree(&["00", "10", "01"]);
        let t = tree(&FIG2);
        assert!(matches!(union_at_root(&b, &t), Err(TreeError::NotComplete { .. })));
        let e = ContextTree::empty(t.alphabet());
        assert_eq!(contained_at_root(&e, &t), Err(TreeError::EmptyTree));
        let ternary = ContextTree::root_only(&Alphabet::numbered(3).unwrap());
        assert_eq!(contained_at_root(&t, &ternary), Err(TreeError::AlphabetMismatch));
        assert_eq!(union_all(std::iter::empty()), Err(TreeError::EmptyTree));
    }
}
