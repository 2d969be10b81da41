use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::Result;
use crate::pm::closure_trim;
use crate::tree::ContextTree;

/// Sparsity figures of a tree, computed on its completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeMetrics {
    pub depth: usize,
    pub leaf_count: usize,
    pub node_count: usize,
    pub closure_leaf_count: usize,
    /// `n(T) / n^depth`: share of the full tree of the same depth.
    pub r1: BigRational,
    /// `n(closure) / n(T)`: blow-up of the perfect-memory closure.
    pub r2: BigRational,
    /// The input was incomplete and the figures describe its completion.
    pub completed: bool,
}

pub fn metrics(t: &ContextTree) -> Result<TreeMetrics> {
    let completed = !t.is_complete();
    let t = if completed { t.complete_hull()? } else { t.clone() };
    let counts = t.counts()?;
    let closed = closure_trim(&t)?;
    let n = BigInt::from(t.alphabet().len());
    let full_leaves: BigInt = Pow::pow(&n, counts.depth);
    let r1 = BigRational::new(BigInt::from(counts.leaves), full_leaves);
    let r2 = BigRational::new(BigInt::from(closed.leaf_count()), BigInt::from(counts.leaves));
    let bound = BigRational::from_integer(BigInt::from(counts.depth.max(1)));
    debug_assert!(
        r2 >= BigRational::one() && r2 <= bound,
        "closure blow-up {r2} outside [1, {bound}]"
    );
    Ok(TreeMetrics {
        depth: counts.depth,
        leaf_count: counts.leaves,
        node_count: counts.nodes,
        closure_leaf_count: closed.leaf_count(),
        r1,
        r2,
        completed,
    })
}
