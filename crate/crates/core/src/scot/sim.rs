use crate::alphabet::Symbol;
use crate::error::{Result, TreeError};
use crate::scalar::Probability;
use crate::scot::markov::StationaryOptions;
use crate::scot::Scot;
use crate::word::Word;

/// SplitMix64 generator. Pinned so that a seed gives the same sequence in
/// every implementation of the simulator.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Index drawn from the weights, by inverse transform on one uniform draw.
pub(crate) fn sample_index(weights: &[f64], rng: &mut SplitMix64) -> usize {
    let u = rng.next_f64();
    let mut acc = 0.0;
    for (i, &p) in weights.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    weights.iter().rposition(|&p| p > 0.0).unwrap_or(0)
}

impl<P: Probability> Scot<P> {
    /// Emits `steps` symbols. Each step draws a letter from the current
    /// context's distribution and moves to the next context.
    ///
    /// The starting context is `init`, or a draw from the stationary
    /// distribution when `init` is `None`.
    pub fn simulate(&self, steps: usize, seed: u64, init: Option<&Word>) -> Result<Vec<Symbol>> {
        let contexts = self.contexts();
        let mut rng = SplitMix64::new(seed);
        let mut state = match init {
            Some(c) => contexts
                .binary_search(c)
                .map_err(|_| TreeError::UnknownContext(c.clone()))?,
            None => {
                let chain = self.build_markov()?;
                let pi = chain.stationary(&StationaryOptions::default())?;
                sample_index(&pi.distribution, &mut rng)
            }
        };
        let next = self.transition_table()?;
        let weights: Vec<Vec<f64>> = self
            .distributions()
            .iter()
            .map(|d| d.iter().map(P::to_f64_lossy).collect())
            .collect();
        let mut out = Vec::with_capacity(steps);
        for _ in 0..steps {
            let a = sample_index(&weights[state], &mut rng);
            out.push(a as Symbol);
            state = next[state][a];
        }
        Ok(out)
    }
}
