//! Block-restriction weight check on a built code.
//!
//! For `W̄` in the lifted normalizer of level `i` and `V̄` in that of level
//! `j ≥ i`, every block of `W̄·V̄` must be the identity or weigh at least
//! `d_i`. Only the per-block symbol pattern of an outer normalizer element
//! matters, so the check collects the patterns that occur at each level and
//! compares their lifts pairwise.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builder::{GcqcResult, Level};
use crate::pauli::PauliOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockWeightOptions {
    /// Largest outer normalizer (as an element count) enumerated in full.
    pub cap: u64,
    /// Elements drawn per level when the normalizer exceeds `cap`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for BlockWeightOptions {
    fn default() -> Self {
        Self {
            cap: 1 << 20,
            samples: 1 << 14,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockWeightOutcome {
    Holds {
        /// Restriction pairs compared.
        pairs_checked: u64,
        /// False when some level was sampled rather than enumerated.
        exhaustive: bool,
    },
    Counterexample {
        level_i: usize,
        level_j: usize,
        left: PauliOperator,
        right: PauliOperator,
        product_weight: usize,
        required: usize,
    },
}

impl BlockWeightOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, BlockWeightOutcome::Holds { .. })
    }
}

pub fn verify_block_weights(result: &GcqcResult, opts: &BlockWeightOptions) -> BlockWeightOutcome {
    let mut exhaustive = true;
    let restrictions: Vec<Vec<PauliOperator>> = result
        .levels
        .iter()
        .map(|level| {
            let (patterns, complete) = block_patterns(level, opts);
            exhaustive &= complete;
            patterns.into_iter().map(|p| lift_pattern(level, p)).collect()
        })
        .collect();

    let mut pairs_checked = 0u64;
    for (i, left_set) in restrictions.iter().enumerate() {
        let required = result.levels[i].inner_distance;
        for (j, right_set) in restrictions.iter().enumerate().skip(i) {
            for left in left_set {
                for right in right_set {
                    pairs_checked += 1;
                    let product = left * right;
                    let w = product.weight();
                    if w != 0 && w < required {
                        return BlockWeightOutcome::Counterexample {
                            level_i: i + 1,
                            level_j: j + 1,
                            left: left.clone(),
                            right: right.clone(),
                            product_weight: w,
                            required,
                        };
                    }
                }
            }
        }
    }
    BlockWeightOutcome::Holds {
        pairs_checked,
        exhaustive,
    }
}

/// Per-block symbol patterns `(a_1..a_r, b_1..b_r)` packed as `a | b << r`,
/// collected over the outer normalizer. The flag reports full enumeration.
fn block_patterns(level: &Level, opts: &BlockWeightOptions) -> (BTreeSet<u64>, bool) {
    let code = level.outer.code();
    let mut basis: Vec<PauliOperator> = code.generators().to_vec();
    for pair in code.logical_pairs() {
        basis.push(pair.x.clone());
        basis.push(pair.z.clone());
    }
    let bits = level.outer.bits();
    let blocks = level.outer.blocks();
    let mut patterns = BTreeSet::new();
    let mut record = |w: &PauliOperator| {
        for block in 0..blocks {
            patterns.insert(pattern_of(w, block, bits));
        }
    };

    let dim = basis.len();
    let exhaustive = dim < 64 && (1u64 << dim) <= opts.cap;
    let n = code.n();
    if exhaustive {
        let mut acc = PauliOperator::identity(n);
        record(&acc);
        for step in 1u64..(1u64 << dim) {
            acc *= &basis[step.trailing_zeros() as usize];
            record(&acc);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.samples {
            let mut acc = PauliOperator::identity(n);
            for b in &basis {
                if rng.gen::<bool>() {
                    acc *= b;
                }
            }
            record(&acc);
        }
    }
    (patterns, exhaustive)
}

fn pattern_of(w: &PauliOperator, block: usize, bits: usize) -> u64 {
    let mut p = 0u64;
    for l in 0..bits {
        let q = block * bits + l;
        p |= (w.x_bit(q) as u64) << l;
        p |= (w.z_bit(q) as u64) << (bits + l);
    }
    p
}

fn lift_pattern(level: &Level, pattern: u64) -> PauliOperator {
    let pairs = level.coset.logical_pairs();
    let bits = pairs.len();
    let mut out = PauliOperator::identity(level.coset.as_code().n());
    for (l, pair) in pairs.iter().enumerate() {
        if (pattern >> l) & 1 == 1 {
            out *= &pair.x;
        }
        if (pattern >> (bits + l)) & 1 == 1 {
            out *= &pair.z;
        }
    }
    out
}
