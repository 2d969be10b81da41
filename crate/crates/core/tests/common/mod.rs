//! Reference implementations written straight from the definitions, working
//! on plain context lists. Quadratic or worse; only for small trees.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ctxtree::random::{random_complete_tree, random_pm_tree, random_two_level_tree};
use ctxtree::{Alphabet, ContextTree, Symbol, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Ctx = Vec<Symbol>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ctx_list(t: &ContextTree) -> Vec<Ctx> {
    t.contexts().into_iter().map(|w| w.symbols().to_vec()).collect()
}

pub fn ctx_set(t: &ContextTree) -> BTreeSet<Ctx> {
    ctx_list(t).into_iter().collect()
}

pub fn to_tree(alphabet: &Alphabet, ctx: impl IntoIterator<Item = Ctx>) -> ContextTree {
    ContextTree::from_contexts(alphabet, ctx.into_iter().map(Word::new)).expect("postfix-free")
}

/// `v ≺ s`: `s = w·v` for some `w`.
pub fn postfix(v: &[Symbol], s: &[Symbol]) -> bool {
    s.len() >= v.len() && &s[s.len() - v.len()..] == v
}

pub fn nodes(ctx: &[Ctx]) -> BTreeSet<Ctx> {
    let mut out = BTreeSet::new();
    for c in ctx {
        for k in 0..=c.len() {
            out.insert(c[k..].to_vec());
        }
    }
    out
}

fn with_newest(c: &[Symbol], a: Symbol) -> Ctx {
    let mut v = c.to_vec();
    v.push(a);
    v
}

fn child(v: &[Symbol], a: Symbol) -> Ctx {
    let mut w = vec![a];
    w.extend_from_slice(v);
    w
}

/// Every node with a child has all `n` children.
pub fn complete(ctx: &[Ctx], n: usize) -> bool {
    if ctx.is_empty() {
        return false;
    }
    let nodes = nodes(ctx);
    nodes.iter().all(|v| {
        let kids = (0..n as Symbol).filter(|&a| nodes.contains(&child(v, a))).count();
        kids == 0 || kids == n
    })
}

/// For every context `c` and letter `a` some context is a postfix of `c·a`.
pub fn perfect_memory(ctx: &[Ctx], n: usize) -> bool {
    !ctx.is_empty()
        && ctx.iter().all(|c| {
            (0..n as Symbol).all(|a| {
                let next = with_newest(c, a);
                ctx.iter().any(|u| postfix(u, &next))
            })
        })
}

/// The context `u ≺ c·a`, by scanning.
pub fn next_context(ctx: &[Ctx], c: &[Symbol], a: Symbol) -> Option<Ctx> {
    let next = with_newest(c, a);
    ctx.iter().find(|u| postfix(u, &next)).cloned()
}

/// Every context of `a` is a postfix of some context of `b`.
pub fn contained(a: &[Ctx], b: &[Ctx]) -> bool {
    a.iter().all(|x| b.iter().any(|y| postfix(x, y)))
}

/// Every context of `b` has a postfix among the contexts of `a`.
pub fn covers(a: &[Ctx], b: &[Ctx]) -> bool {
    b.iter().all(|y| a.iter().any(|x| postfix(x, y)))
}

/// Intersection at the root, term by term from its set definition.
pub fn intersection(a: &[Ctx], b: &[Ctx]) -> BTreeSet<Ctx> {
    let mut out = BTreeSet::new();
    out.extend(a.iter().filter(|u| b.iter().any(|c| postfix(u, c))).cloned());
    out.extend(b.iter().filter(|u| a.iter().any(|c| postfix(u, c))).cloned());
    out
}

/// Union at the root, term by term from its set definition.
pub fn union(a: &[Ctx], b: &[Ctx]) -> BTreeSet<Ctx> {
    let mut out = BTreeSet::new();
    out.extend(a.iter().filter(|u| b.iter().any(|c| postfix(c, u))).cloned());
    out.extend(b.iter().filter(|u| a.iter().any(|c| postfix(c, u))).cloned());
    out
}

/// Smallest perfect-memory tree containing a complete tree, by forcing
/// moves on the node set until nothing changes: an internal node needs all
/// its children, a context needs its prefix without the newest letter, and
/// every node needs its postfixes.
pub fn closure_fixpoint(ctx: &[Ctx], n: usize) -> BTreeSet<Ctx> {
    let mut nodes = nodes(ctx);
    loop {
        let mut add = BTreeSet::new();
        for v in &nodes {
            let internal = (0..n as Symbol).any(|a| nodes.contains(&child(v, a)));
            if internal {
                for a in 0..n as Symbol {
                    add.insert(child(v, a));
                }
            } else if !v.is_empty() {
                let stem = &v[..v.len() - 1];
                for k in 0..=stem.len() {
                    add.insert(stem[k..].to_vec());
                }
            }
        }
        let before = nodes.len();
        nodes.extend(add);
        if nodes.len() == before {
            break;
        }
    }
    let leaves = nodes
        .iter()
        .filter(|v| (0..n as Symbol).all(|a| !nodes.contains(&child(v, a))))
        .cloned()
        .collect();
    leaves
}

fn split_for(n: usize, rng: &mut impl Rng) -> f64 {
    (rng.gen_range(1.0..2.2) / n as f64).min(0.9)
}

/// Random complete trees over 2, 3 or 4 letters, depth at most `max_depth`.
/// One in four is closed to perfect memory and one in four has all leaves
/// on two adjacent levels, so both verdicts are well represented.
pub fn corpus(seed: u64, count: usize, max_depth: usize) -> Vec<ContextTree> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(2..=4);
            let alphabet = Alphabet::numbered(n).unwrap();
            let split = split_for(n, &mut r);
            match i % 4 {
                0 => {
                    let t = random_pm_tree(&mut r, &alphabet, max_depth, split);
                    if t.depth() <= max_depth {
                        t
                    } else {
                        random_complete_tree(&mut r, &alphabet, max_depth, split)
                    }
                }
                1 => {
                    let k = r.gen_range(0..max_depth);
                    random_two_level_tree(&mut r, &alphabet, k.min(if n == 4 { 3 } else { 5 }), 0.5)
                }
                _ => loop {
                    // Shallow random trees are nearly always perfect-memory.
                    let t = random_complete_tree(&mut r, &alphabet, max_depth, split);
                    if t.depth() >= 3 {
                        break t;
                    }
                },
            }
        })
        .collect()
}

/// Random complete tree over `n` letters with moderate size.
pub fn small_complete(r: &mut ChaCha8Rng, alphabet: &Alphabet, max_depth: usize) -> ContextTree {
    let split = split_for(alphabet.len(), r);
    random_complete_tree(r, alphabet, max_depth, split)
}

/// Random perfect-memory tree over `n` letters with moderate size.
pub fn small_pm(r: &mut ChaCha8Rng, alphabet: &Alphabet, max_depth: usize) -> ContextTree {
    let split = split_for(alphabet.len(), r);
    random_pm_tree(r, alphabet, max_depth, split)
}

/// The two trees drawn in the introduction of perfect memory.
pub const FIG2: [&str; 7] = ["00", "010", "110", "001", "0101", "1101", "11"];
pub const FIG3: [&str; 6] = ["00", "10", "001", "0101", "1101", "11"];

pub fn binary(ctx: &[&str]) -> ContextTree {
    ContextTree::from_digit_strs(2, ctx).unwrap()
}
