mod common;

use std::collections::BTreeMap;

use common::*;
use ctxtree::scot::{next_context, Scot};
use ctxtree::{Alphabet, BigRational, ContextTree, ExactScot, FloatScot, Word};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

fn fig2_scot() -> FloatScot {
    let t = binary(&FIG2);
    let probs = [0.1, 0.35, 0.5, 0.62, 0.8, 0.25, 0.9];
    Scot::new(t.clone(), t.contexts().into_iter().zip(probs).map(|(c, p)| (c, vec![1.0 - p, p]))).unwrap()
}

#[test]
fn simulation_is_reproducible() {
    let s = fig2_scot();
    let a = s.simulate(10_000, 42, None).unwrap();
    let b = s.simulate(10_000, 42, None).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, s.simulate(10_000, 43, None).unwrap());
    let start = Word::from_digits("0101");
    assert_eq!(s.simulate(50, 7, Some(&start)).unwrap(), s.simulate(50, 7, Some(&start)).unwrap());
    assert!(s.simulate(5, 7, Some(&Word::from_digits("01"))).is_err());
}

#[test]
fn deterministic_scot_emits_constant_sequence() {
    let t = binary(&FIG2);
    let s = Scot::new(t.clone(), t.contexts().into_iter().map(|c| (c, vec![0.0, 1.0]))).unwrap();
    assert!(s.simulate(1000, 3, None).unwrap().iter().all(|&a| a == 1));
}

/// Next-letter frequencies after each context match the leaf distribution
/// to within three standard errors.
#[test]
fn empirical_frequencies_match_leaf_distributions() {
    let s = fig2_scot();
    let ctx = ctx_list(s.tree());
    let xs = s.simulate(1_000_000, 2024, Some(&Word::from_digits("00"))).unwrap();
    let depth = s.tree().depth();
    let mut tally = vec![(0u64, 0u64); ctx.len()];
    for t in depth..xs.len() {
        let i = ctx.iter().position(|u| postfix(u, &xs[t - depth..t])).unwrap();
        tally[i].0 += 1;
        tally[i].1 += xs[t] as u64;
    }
    for (i, (seen, ones)) in tally.into_iter().enumerate() {
        let p = s.distributions()[i][1];
        let freq = ones as f64 / seen as f64;
        let se = (p * (1.0 - p) / seen as f64).sqrt();
        assert!((freq - p).abs() <= 3.0 * se, "context {:?}: {freq} vs {p} ({seen} visits)", ctx[i]);
    }
}

/// An order-2 chain whose rows all agree emits letters independently of
/// the history.
#[test]
fn full_chain_with_equal_rows_is_memoryless() {
    let a = Alphabet::binary();
    let table: BTreeMap<Word, Vec<f64>> =
        ContextTree::full(&a, 2).contexts().into_iter().map(|c| (c, vec![0.3, 0.7])).collect();
    let s = Scot::from_full_mc(&a, 2, table).unwrap();
    let xs = s.simulate(400_000, 11, None).unwrap();
    let mut by_history = [(0u64, 0u64); 4];
    for t in 2..xs.len() {
        let h = (xs[t - 2] * 2 + xs[t - 1]) as usize;
        by_history[h].0 += 1;
        by_history[h].1 += xs[t] as u64;
    }
    for (seen, ones) in by_history {
        let freq = ones as f64 / seen as f64;
        assert!((freq - 0.7).abs() < 4.0 * (0.21 / seen as f64).sqrt(), "{freq}");
    }
    let pi = s.build_markov().unwrap().stationary(&Default::default()).unwrap();
    for (p, want) in pi.distribution.iter().zip([0.09, 0.21, 0.21, 0.49]) {
        assert!((p - want).abs() < 1e-9);
    }
}

fn random_rational_dist(r: &mut impl Rng, n: usize) -> Vec<BigRational> {
    let weights: Vec<i64> = (0..n).map(|_| r.gen_range(0..5)).collect();
    let total: i64 = weights.iter().sum();
    if total == 0 {
        let mut v = vec![BigRational::zero(); n];
        v[0] = BigRational::one();
        return v;
    }
    weights.into_iter().map(|w| BigRational::new(w.into(), total.into())).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn leaf_chain_matches_next_context_scan(seed in any::<u64>(), n in 2usize..=3) {
        let alphabet = Alphabet::numbered(n).unwrap();
        let mut r = rng(seed);
        let t = small_pm(&mut r, &alphabet, 5);
        let ctx = ctx_list(&t);
        let dists: Vec<(Word, Vec<BigRational>)> =
            t.contexts().into_iter().map(|c| (c, random_rational_dist(&mut r, n))).collect();
        let s: ExactScot = Scot::new(t.clone(), dists.clone()).unwrap();
        let m = s.build_markov().unwrap().to_dense();
        for (i, c) in ctx.iter().enumerate() {
            let mut want = vec![BigRational::zero(); ctx.len()];
            for a in 0..n as u16 {
                let u = next_context(&t, &Word::new(c.clone()), a).unwrap();
                prop_assert_eq!(Some(u.symbols().to_vec()), common::next_context(&ctx, c, a));
                let j = ctx.iter().position(|x| x.as_slice() == u.symbols()).unwrap();
                want[j] += dists[i].1[a as usize].clone();
            }
            let sum = m[i].iter().fold(BigRational::zero(), |acc, p| acc + p);
            prop_assert!(sum.is_one());
            prop_assert_eq!(&m[i], &want);
        }
    }
}
