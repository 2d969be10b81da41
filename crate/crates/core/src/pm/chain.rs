use crate::error::{Result, TreeError};
use crate::lattice::contained_at_root;
use crate::pm::{is_pm_def4, PmWitness, Verdict};
use crate::tree::ContextTree;
use crate::word::Word;

fn require_pm(t: &ContextTree) -> Result<()> {
    match is_pm_def4(t)? {
        Verdict::Holds => Ok(()),
        Verdict::Fails(PmWitness::MissingNextContext { context, symbol }) => {
            Err(TreeError::NotPerfectMemory { context, symbol: symbol as usize })
        }
        Verdict::Fails(_) => unreachable!("def4 only reports missing next contexts"),
    }
}

/// Descending chain of perfect-memory trees from `a` down to `b`.
///
/// Each step cuts the deepest complete leaf set whose parent is not an
/// internal node of `b` (ties go to the canonically smallest parent), so
/// consecutive trees differ by exactly one leaf set. The result starts with
/// `a` and ends with `b`.
pub fn pm_chain(a: &ContextTree, b: &ContextTree) -> Result<Vec<ContextTree>> {
    a.check_same_alphabet(b)?;
    require_pm(a)?;
    require_pm(b)?;
    if !contained_at_root(b, a)? || a == b {
        return Err(TreeError::NotContained);
    }
    let mut cuts: Vec<Word> = a
        .internal_nodes()
        .into_iter()
        .filter(|p| b.is_context(p) || !b.is_node(p))
        .collect();
    cuts.sort_by(|x, y| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));

    let mut chain = vec![a.clone()];
    for p in cuts {
        let cur = chain.last().expect("chain starts with a");
        let pid = cur.trie().find(p.symbols()).expect("cut parent is a node");
        let trie = cur.trie().filtered(|id| cur.trie().node(id).parent != pid || id == pid);
        chain.push(ContextTree::from_trie(a.alphabet(), trie));
    }
    debug_assert_eq!(chain.last(), Some(b));
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pm::is_perfect_memory;
    use crate::Alphabet;

    fn tree(ctx: &[&str]) -> ContextTree {
        ContextTree::from_digit_strs(2, ctx).unwrap()
    }

    const FIG2: [&str; 7] = ["00", "010", "110", "001", "0101", "1101", "11"];

    #[test]
    fn figure_tree_down_to_depth_one() {
        let a = tree(&FIG2);
        let b = ContextTree::full(a.alphabet(), 1);
        let chain = pm_chain(&a, &b).unwrap();
        // Parents 101, 10, 01, 0, 1 are cut in that order.
        assert_eq!(chain.len(), 6);
        assert_eq!(chain[1], tree(&["00", "010", "110", "001", "101", "11"]));
        assert_eq!(chain[2], tree(&["00", "10", "001", "101", "11"]));
        assert_eq!(chain[3], tree(&["00", "10", "01", "11"]));
        for pair in chain.windows(2) {
            assert_eq!(pair[0].leaf_count() - pair[1].leaf_count(), 1);
        }
        for t in &chain {
            assert!(is_perfect_memory(t).unwrap());
        }
    }

    #[test]
    fn down_to_root() {
        let a = tree(&FIG2);
        let root = ContextTree::root_only(a.alphabet());
        let chain = pm_chain(&a, &root).unwrap();
        // Each step removes n - 1 = 1 leaf.
        assert_eq!(chain.len() - 1, a.leaf_count() - 1);
        assert_eq!(chain.last().unwrap(), &root);
    }

    #[test]
    fn rejects_bad_pairs() {
        let a = tree(&FIG2);
        assert_eq!(pm_chain(&a, &a), Err(TreeError::NotContained));
        let d1 = ContextTree::full(a.alphabet(), 1);
        assert_eq!(pm_chain(&d1, &a), Err(TreeError::NotContained));
        let not_pm = tree(&["00", "10", "001", "0101", "1101", "11"]);
        assert!(matches!(pm_chain(&not_pm, &d1), Err(TreeError::NotPerfectMemory { .. })));
        let ternary = ContextTree::root_only(&Alphabet::numbered(3).unwrap());
        assert_eq!(pm_chain(&a, &ternary), Err(TreeError::AlphabetMismatch));
    }
}
