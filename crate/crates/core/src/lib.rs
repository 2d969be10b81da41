//! Context trees over finite alphabets.
//!
//! A context tree is a postfix-free set of strings, the *contexts*, drawn as
//! a trie read from the most recent letter towards older ones. Words are
//! stored oldest letter first, so the context `1101` sits on the path
//! `root → 1 → 0 → 1 → 1`.
//!
//! The crate covers
//! * building and inspecting trees ([`ContextTree`]), completion, parent
//!   trees and subtrees;
//! * containment, union and intersection at the root ([`lattice`]);
//! * perfect memory: four equivalent tests, the closure by two independent
//!   routes, descending chains and sparsity ratios ([`pm`]);
//! * stochastic context trees and their reduction to a first-order chain on
//!   the leaves ([`scot`]), generic over the probability type;
//! * generators for a few instructive families ([`examples`]) and random
//!   samplers ([`random`]).

mod alphabet;
mod error;
pub mod examples;
pub mod lattice;
pub mod pm;
pub mod random;
mod scalar;
pub mod scot;
mod tree;
mod trie;
mod word;

pub use alphabet::{Alphabet, Symbol};
pub use error::{Result, TreeError};
pub use scalar::Probability;
pub use tree::{count_complete_trees, ContextTree, Counts};
pub use word::{is_postfix, Word};

pub use num_rational::BigRational;

/// Deepest context accepted when reading trees from text.
pub const MAX_PARSE_DEPTH: usize = 32;

/// SCOT with exact rational probabilities.
pub type ExactScot = scot::Scot<BigRational>;
/// SCOT with double-precision probabilities.
pub type FloatScot = scot::Scot<f64>;
/// Leaf chain with exact rational entries.
pub type ExactChain = scot::MarkovChain<BigRational>;
/// Leaf chain with double-precision entries.
pub type FloatChain = scot::MarkovChain<f64>;
