//! Generators for four illustrative tree families.
//!
//! * [`comb`]: the sparsest perfect-memory trees, a spine of first letters
//!   with a fan of leaves at every level.
//! * [`sparse_example`]: a fixed binary tree with as many leaves as the
//!   depth-6 comb that is not perfect-memory.
//! * [`minimal_full_mc`]: binary trees of depth `l` whose closure contains
//!   the full tree of depth `l - 1`, with `3·2^(l-3) + 1` leaves.
//! * [`wide_r2`]: trees whose closure grows by a factor close to `l - 1`
//!   as the alphabet grows.

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Result, TreeError};
use crate::trie::{Trie, ROOT};
use crate::tree::ContextTree;
use crate::word::Word;

/// Comb of depth `depth` over `n` letters: every node on the spine of
/// first letters is internal, everything else is a leaf.
pub fn comb(n: usize, depth: usize) -> Result<ContextTree> {
    if n < 2 || depth < 1 {
        return Err(TreeError::BadParams(format!(
            "comb needs n >= 2 and depth >= 1, got n = {n}, depth = {depth}"
        )));
    }
    let alphabet = Alphabet::numbered(n)?;
    let mut trie = Trie::root_only();
    let mut spine = ROOT;
    for _ in 0..depth {
        for a in alphabet.symbols() {
            trie.add_child(spine, a);
        }
        spine = trie.child(spine, 0).expect("spine child");
    }
    Ok(ContextTree::from_trie(&alphabet, trie))
}

/// The fixed binary example. Its contexts are
/// `1, 00, 110, 1010, 00010, 010010, 110010`; the closure adds the branches
/// below `1` and `00`.
pub fn sparse_example() -> ContextTree {
    ContextTree::from_digit_strs(2, &["1", "00", "110", "1010", "00010", "010010", "110010"])
        .expect("valid fixed tree")
}

/// Binary tree of depth `depth >= 3`: the node `1` is a leaf, the subtree
/// below `00` is full down to depth `depth - 1` and the subtree below `10`
/// is full down to `depth`.
///
/// Only the `depth = 5` member is drawn explicitly in the literature this
/// family comes from; the general shape is the one consistent with the leaf
/// counts `3·2^(depth-3) + 1` and `5·2^(depth-3)` for the closure.
pub fn minimal_full_mc(depth: usize) -> Result<ContextTree> {
    if depth < 3 {
        return Err(TreeError::BadParams(format!("minimal_full_mc needs depth >= 3, got {depth}")));
    }
    let alphabet = Alphabet::binary();
    let mut trie = Trie::root_only();
    for a in alphabet.symbols() {
        trie.add_child(ROOT, a);
    }
    grow_full(&mut trie, &[0, 0], depth - 1);
    grow_full(&mut trie, &[1, 0], depth);
    Ok(ContextTree::from_trie(&alphabet, trie))
}

/// Makes the subtree below `word` full down to absolute depth `depth`.
fn grow_full(trie: &mut Trie, word: &[Symbol], depth: usize) {
    let start = trie.insert(word);
    let mut frontier = vec![start];
    for _ in word.len()..depth {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for id in frontier {
            for a in 0..2 {
                next.push(trie.add_child(id, a).0);
            }
        }
        frontier = next;
    }
}

/// Largest depth for which [`wide_r2`] exists over `n` letters.
pub fn wide_r2_max_depth(n: usize) -> usize {
    (n - 1) * (n - 1) + 4
}

/// Tree whose parent tree is a chain of `depth - 2` nodes followed by a
/// fan of all `n` letters. It has `n² + (depth-2)(n-1)` leaves and its
/// closure has `n²(depth-1) + n(2-depth) + (n-1)(depth-2)(depth-3)/2`.
///
/// Read from the root, the chain starts with the first letter, continues
/// along a walk with no repeated pair of consecutive letters over every
/// letter but the second, and ends with the second letter. That keeps all
/// factors of the chain distinct, which is what the closure count needs,
/// and bounds the depth by `(n-1)² + 4`. Past that bound no tree with these
/// leaf counts exists, and `BadParams` is returned.
pub fn wide_r2(n: usize, depth: usize) -> Result<ContextTree> {
    if n < 2 || depth < 4 {
        return Err(TreeError::BadParams(format!(
            "wide_r2 needs n >= 2 and depth >= 4, got n = {n}, depth = {depth}"
        )));
    }
    if depth > wide_r2_max_depth(n) {
        return Err(TreeError::BadParams(format!(
            "wide_r2 over {n} letters exists only up to depth {}, got {depth}",
            wide_r2_max_depth(n)
        )));
    }
    let alphabet = Alphabet::numbered(n)?;
    let walk = distinct_pair_walk(n - 1, depth - 3);
    let mut trie = Trie::root_only();
    let mut cur = ROOT;
    for &i in &walk {
        let letter = if i == 0 { 0 } else { i + 1 };
        cur = trie.add_child(cur, letter as Symbol).0;
    }
    cur = trie.add_child(cur, 1).0;
    for a in alphabet.symbols() {
        trie.add_child(cur, a);
    }
    Ok(ContextTree::from_trie(&alphabet, trie).saturate())
}

/// Prefix of length `len` of a linearised order-2 de Bruijn sequence over
/// `m` letters: no ordered pair of consecutive letters repeats. Starts
/// with letter 0. Requires `len <= m² + 1`.
fn distinct_pair_walk(m: usize, len: usize) -> Vec<usize> {
    fn lyndon(t: usize, p: usize, m: usize, a: &mut [usize], seq: &mut Vec<usize>) {
        if t > 2 {
            if 2 % p == 0 {
                seq.extend_from_slice(&a[1..=p]);
            }
            return;
        }
        a[t] = a[t - p];
        lyndon(t + 1, p, m, a, seq);
        for j in a[t - p] + 1..m {
            a[t] = j;
            lyndon(t + 1, t, m, a, seq);
        }
    }
    let mut a = vec![0; 3];
    let mut seq = Vec::with_capacity(m * m + 1);
    lyndon(1, 1, m, &mut a, &mut seq);
    seq.push(seq[0]);
    debug_assert!(len <= seq.len());
    seq.truncate(len);
    seq
}

/// Contexts of the full binary tree of depth `depth`, handy for
/// containment checks against closures.
pub fn full_binary(depth: usize) -> ContextTree {
    ContextTree::full(&Alphabet::binary(), depth)
}

#[allow(dead_code)]
fn words(v: &[&str]) -> Vec<Word> {
    v.iter().map(|s| Word::from_digits(s)).collect()
}
