use petgraph::algo::condensation;
use petgraph::graph::DiGraph;

use crate::error::{Result, TreeError};
use crate::scalar::Probability;
use crate::word::Word;

/// Finite Markov chain with leaf contexts as states. Rows are stored
/// sparsely; a row of a chain built from a SCOT has at most one entry per
/// letter.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkovChain<P> {
    states: Vec<Word>,
    rows: Vec<Vec<(usize, P)>>,
}

#[derive(Clone, Debug)]
pub struct StationaryOptions {
    /// Stop when `‖πM − π‖₁` falls to this value.
    pub tol: f64,
    pub max_iters: usize,
    /// Switch to the lazy chain `(I + M)/2` after half the budget, which
    /// settles periodic chains.
    pub damping: bool,
    /// Starting vector; uniform when `None`.
    pub initial: Option<Vec<f64>>,
}

impl Default for StationaryOptions {
    fn default() -> Self {
        StationaryOptions {
            tol: 1e-12,
            max_iters: 1_000_000,
            damping: true,
            initial: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Stationary {
    pub distribution: Vec<f64>,
    pub iterations: usize,
    /// Final `‖πM − π‖₁`.
    pub residual: f64,
    pub damped: bool,
    /// False when the chain has more than one closed class, in which case
    /// the answer depends on the starting vector.
    pub unique: bool,
}

impl<P: Probability> MarkovChain<P> {
    pub(crate) fn from_sparse_rows(states: Vec<Word>, rows: Vec<Vec<(usize, P)>>) -> Self {
        MarkovChain { states, rows }
    }

    /// Builds a chain from a dense matrix, checking it is row-stochastic.
    pub fn from_dense(states: Vec<Word>, matrix: Vec<Vec<P>>) -> Result<Self> {
        let k = states.len();
        if matrix.len() != k {
            return Err(TreeError::BadParams(format!("{} rows for {k} states", matrix.len())));
        }
        let mut rows = Vec::with_capacity(k);
        for (state, row) in states.iter().zip(matrix) {
            let bad = |reason: String| TreeError::InvalidDistribution { context: state.clone(), reason };
            if row.len() != k {
                return Err(bad(format!("row has {} entries, expected {k}", row.len())));
            }
            if row.iter().any(|p| p.is_negative()) {
                return Err(bad("negative entry".into()));
            }
            let sum = row.iter().fold(P::zero(), |a, p| a + p.clone());
            if !sum.is_unit_sum() {
                return Err(bad(format!("row sums to {sum}")));
            }
            rows.push(
                row.into_iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .collect(),
            );
        }
        Ok(MarkovChain { states, rows })
    }

    pub fn states(&self) -> &[Word] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Nonzero entries of row `i`, by column.
    pub fn row(&self, i: usize) -> &[(usize, P)] {
        &self.rows[i]
    }

    pub fn prob(&self, i: usize, j: usize) -> P {
        self.rows[i]
            .iter()
            .find(|(c, _)| *c == j)
            .map_or_else(P::zero, |(_, p)| p.clone())
    }

    pub fn to_dense(&self) -> Vec<Vec<P>> {
        let k = self.len();
        self.rows
            .iter()
            .map(|row| {
                let mut dense = vec![P::zero(); k];
                for (j, p) in row {
                    dense[*j] = p.clone();
                }
                dense
            })
            .collect()
    }

    /// Number of closed communicating classes. The stationary distribution
    /// is unique exactly when this is one.
    pub fn closed_classes(&self) -> usize {
        let mut g = DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..self.len()).map(|_| g.add_node(())).collect();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, _) in row {
                g.add_edge(nodes[i], nodes[*j], ());
            }
        }
        let cond = condensation(g, true);
        cond.node_indices()
            .filter(|&c| cond.neighbors(c).all(|d| d == c))
            .count()
    }

    fn step(&self, pi: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|x| *x = 0.0);
        for (i, row) in self.rows.iter().enumerate() {
            let mass = pi[i];
            if mass == 0.0 {
                continue;
            }
            for (j, p) in row {
                out[*j] += mass * p.to_f64_lossy();
            }
        }
    }

    /// Power iteration for `π = πM`, in double precision.
    pub fn stationary(&self, opts: &StationaryOptions) -> Result<Stationary> {
        let k = self.len();
        if k == 0 {
            return Err(TreeError::EmptyTree);
        }
        let mut pi = match &opts.initial {
            Some(v) if v.len() == k => v.clone(),
            Some(v) => {
                return Err(TreeError::BadParams(format!(
                    "initial vector has {} entries for {k} states",
                    v.len()
                )))
            }
            None => vec![1.0 / k as f64; k],
        };
        let mut next = vec![0.0; k];
        let mut residual = f64::INFINITY;
        let mut damped = false;
        for iter in 0..opts.max_iters {
            if opts.damping && !damped && iter >= opts.max_iters / 2 {
                damped = true;
            }
            self.step(&pi, &mut next);
            residual = pi.iter().zip(&next).map(|(a, b)| (a - b).abs()).sum();
            if residual <= opts.tol {
                return Ok(Stationary {
                    distribution: pi,
                    iterations: iter,
                    residual,
                    damped,
                    unique: self.closed_classes() == 1,
                });
            }
            if damped {
                pi.iter_mut().zip(&next).for_each(|(a, b)| *a = 0.5 * (*a + b));
            } else {
                std::mem::swap(&mut pi, &mut next);
            }
            let total: f64 = pi.iter().sum();
            pi.iter_mut().for_each(|x| *x /= total);
        }
        Err(TreeError::NonConvergence {
            iterations: opts.max_iters,
            residual,
        })
    }

    /// Solves `π(M − I) = 0`, `Σπ = 1` by Gaussian elimination in `P`
    /// itself, so rational chains get an exact answer. Dense, cubic in the
    /// number of states.
    pub fn solve_stationary(&self) -> Result<Vec<P>> {
        let k = self.len();
        if k == 0 {
            return Err(TreeError::EmptyTree);
        }
        if self.closed_classes() != 1 {
            return Err(TreeError::BadParams("stationary distribution is not unique".into()));
        }
        // Row j of the system: Σ_i π_i (M_ij − δ_ij) = 0; the last row is replaced by Σ π_i = 1.
        let dense = self.to_dense();
        let mut a: Vec<Vec<P>> = (0..k)
            .map(|j| {
                let mut eq: Vec<P> = (0..k)
                    .map(|i| {
                        let d = if i == j { P::one() } else { P::zero() };
                        dense[i][j].clone() - d
                    })
                    .collect();
                eq.push(P::zero());
                eq
            })
            .collect();
        a[k - 1] = vec![P::one(); k + 1];
        for col in 0..k {
            let pivot = (col..k)
                .filter(|&r| !a[r][col].is_zero())
                .max_by(|&x, &y| {
                    a[x][col]
                        .abs()
                        .partial_cmp(&a[y][col].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                })
                .ok_or_else(|| TreeError::BadParams("singular stationary system".into()))?;
            a.swap(col, pivot);
            let pv = a[col][col].clone();
            for x in a[col][col..].iter_mut() {
                *x = x.clone() / pv.clone();
            }
            for r in 0..k {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let pivot_row = a[col].clone();
                    for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                        *x = x.clone() - p.clone() * f.clone();
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[k].clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn states(k: usize) -> Vec<Word> {
        (0..k).map(|i| Word::new(vec![i as u16])).collect()
    }

    #[test]
    fn identity_keeps_start_and_flags_non_unique() {
        let mc = MarkovChain::from_dense(states(3), vec![
            vec![1.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        let st = mc.stationary(&StationaryOptions::default()).unwrap();
        assert_eq!(st.distribution, vec![1.0 / 3.0; 3]);
        assert!(!st.unique);
        assert_eq!(mc.closed_classes(), 3);
        assert!(mc.solve_stationary().is_err());
    }

    #[test]
    fn periodic_chain_needs_damping() {
        let mc = MarkovChain::from_dense(states(2), vec![vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let plain = StationaryOptions {
            damping: false,
            max_iters: 1000,
            initial: Some(vec![1.0, 0.0]),
            ..Default::default()
        };
        assert!(matches!(mc.stationary(&plain), Err(TreeError::NonConvergence { .. })));
        let damped = StationaryOptions { damping: true, ..plain };
        let st = mc.stationary(&damped).unwrap();
        assert!(st.damped);
        assert!((st.distribution[0] - 0.5).abs() < 1e-12);
        assert!((st.distribution[1] - 0.5).abs() < 1e-12);
        assert!(st.unique);
        // From the uniform start the fixpoint is reached at once.
        let st = mc.stationary(&StationaryOptions::default()).unwrap();
        assert_eq!(st.distribution, vec![0.5, 0.5]);
    }

    #[test]
    fn exact_solve() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let mc = MarkovChain::from_dense(states(2), vec![
            vec![q(1, 2), q(1, 2)],
            vec![q(1, 4), q(3, 4)],
        ])
        .unwrap();
        assert_eq!(mc.solve_stationary().unwrap(), vec![q(1, 3), q(2, 3)]);
    }

    #[test]
    fn rejects_non_stochastic_rows() {
        assert!(MarkovChain::from_dense(states(2), vec![vec![0.5, 0.4], vec![0.5, 0.5]]).is_err());
        assert!(MarkovChain::from_dense(states(2), vec![vec![1.0, 0.0]]).is_err());
    }
}
