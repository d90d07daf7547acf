//! Subcode chains `B_{m+1} ⊂ … ⊂ B_1` and the quantum coset codes between
//! consecutive levels.
//!
//! A subcode is obtained from the base code by promoting logical Z operators
//! to stabilizers. With the base pairs ordered by a [`NestingStrategy`],
//! level `i` (1-based, `k_i` logical qubits) has
//!
//! - stabilizer `S_{B_1} ∪ {Z̄_1, …, Z̄_{k_1-k_i}}`,
//! - logical pairs `k_1-k_i+1 … k_1`.
//!
//! The coset code `[[B_i/B_{i+1}]]` additionally fixes the Z̄ operators owned
//! by `B_{i+1}`, leaving exactly the `k_i - k_{i+1}` pairs of its own level.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::distance::{min_distance, DistanceError, DistanceOptions, DistanceReport};
use crate::pauli::PauliOperator;
use crate::stabilizer::{LogicalPair, StabilizerCode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("level dimensions must be non-empty")]
    NoLevels,
    #[error("first level dimension {found} differs from the base code's k = {expected}")]
    BaseDimension { expected: usize, found: usize },
    #[error("level dimensions {0:?} are not strictly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("ordering {ordering:?} is not a permutation of 0..{k}")]
    BadOrdering { ordering: Vec<usize>, k: usize },
    #[error("swap index {index} out of range for {k} logical pairs")]
    SwapOutOfRange { index: usize, k: usize },
    #[error("level {level} out of range 1..={levels}")]
    LevelOutOfRange { level: usize, levels: usize },
    #[error("expected {expected} level distances, found {found}")]
    DistanceCount { expected: usize, found: usize },
    #[error("level distances {0:?} decrease along the chain")]
    DecreasingDistances(Vec<usize>),
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// Which base logical pairs are promoted first, and which have their X̄/Z̄
/// roles exchanged. Indices are 0-based positions in the base code's pair
/// list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NestingStrategy {
    ordering: Vec<usize>,
    swaps: BTreeSet<usize>,
}

impl NestingStrategy {
    /// Promote in the base code's order, no swaps.
    pub fn identity() -> Self {
        Self::default()
    }

    /// Promotion order: position `p` of the chain takes base pair `ordering[p]`.
    pub fn with_ordering(mut self, ordering: Vec<usize>) -> Self {
        self.ordering = ordering;
        self
    }

    pub fn with_swaps(mut self, swaps: impl IntoIterator<Item = usize>) -> Self {
        self.swaps = swaps.into_iter().collect();
        self
    }

    /// Empty when the base order is used.
    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn swaps(&self) -> &BTreeSet<usize> {
        &self.swaps
    }

    /// Reorders and swaps `pairs`.
    pub fn apply(&self, pairs: &[LogicalPair]) -> Result<Vec<LogicalPair>, PartitionError> {
        let k = pairs.len();
        let ordering: Vec<usize> = if self.ordering.is_empty() {
            (0..k).collect()
        } else {
            self.ordering.clone()
        };
        let mut seen = vec![false; k];
        let is_perm = ordering.len() == k
            && ordering
                .iter()
                .all(|&i| i < k && !std::mem::replace(&mut seen[i], true));
        if !is_perm {
            return Err(PartitionError::BadOrdering { ordering, k });
        }
        if let Some(&index) = self.swaps.iter().find(|&&i| i >= k) {
            return Err(PartitionError::SwapOutOfRange { index, k });
        }
        Ok(ordering
            .iter()
            .map(|&i| {
                if self.swaps.contains(&i) {
                    pairs[i].swapped()
                } else {
                    pairs[i].clone()
                }
            })
            .collect())
    }
}

/// A quantum coset code `[[B_i/B_{i+1}]]` realized as a stabilizer code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCode {
    level: usize,
    code: StabilizerCode,
}

impl CosetCode {
    /// 1-based level index `i`.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn stabilizers(&self) -> &[PauliOperator] {
        self.code.generators()
    }

    pub fn logical_pairs(&self) -> &[LogicalPair] {
        self.code.logical_pairs()
    }

    /// Number of encoded qubits `r_i = k_i - k_{i+1}`.
    pub fn qubits(&self) -> usize {
        self.code.k()
    }

    /// `Q_i = 2^{r_i}`.
    pub fn dimension(&self) -> u128 {
        1u128 << self.code.k()
    }

    pub fn as_code(&self) -> &StabilizerCode {
        &self.code
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcodeChain {
    base: StabilizerCode,
    level_ks: Vec<usize>,
    level_ds: Option<Vec<usize>>,
    strategy: NestingStrategy,
    pairs: Vec<LogicalPair>,
}

impl SubcodeChain {
    /// Builds the chain for dimensions `k_1 > k_2 > … > k_{m+1}`.
    pub fn build(
        base: StabilizerCode,
        level_ks: Vec<usize>,
        strategy: NestingStrategy,
    ) -> Result<Self, PartitionError> {
        let Some(&first) = level_ks.first() else {
            return Err(PartitionError::NoLevels);
        };
        if first != base.k() {
            return Err(PartitionError::BaseDimension {
                expected: base.k(),
                found: first,
            });
        }
        if level_ks.windows(2).any(|w| w[1] >= w[0]) {
            return Err(PartitionError::NotDecreasing(level_ks));
        }
        let pairs = strategy.apply(base.logical_pairs())?;
        Ok(Self {
            base,
            level_ks,
            level_ds: None,
            strategy,
            pairs,
        })
    }

    /// Attaches claimed distances `d_1, …, d_m`.
    pub fn with_distances(mut self, ds: Vec<usize>) -> Result<Self, PartitionError> {
        if ds.len() != self.num_levels() {
            return Err(PartitionError::DistanceCount {
                expected: self.num_levels(),
                found: ds.len(),
            });
        }
        if ds.windows(2).any(|w| w[1] < w[0]) {
            return Err(PartitionError::DecreasingDistances(ds));
        }
        self.level_ds = Some(ds);
        Ok(self)
    }

    pub fn base(&self) -> &StabilizerCode {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn level_ks(&self) -> &[usize] {
        &self.level_ks
    }

    pub fn level_ds(&self) -> Option<&[usize]> {
        self.level_ds.as_deref()
    }

    pub fn strategy(&self) -> &NestingStrategy {
        &self.strategy
    }

    /// Base logical pairs after the strategy's reordering and swaps.
    pub fn nested_pairs(&self) -> &[LogicalPair] {
        &self.pairs
    }

    /// Number of coset levels `m`.
    pub fn num_levels(&self) -> usize {
        self.level_ks.len() - 1
    }

    /// Whether the chain ends in a one-dimensional code (`k_{m+1} = 0`).
    pub fn fully_descends(&self) -> bool {
        self.level_ks.last() == Some(&0)
    }

    /// `r_i = k_i - k_{i+1}` for level `i` in `1..=m`.
    pub fn level_qubits(&self, level: usize) -> Result<usize, PartitionError> {
        self.check_level(level, self.num_levels())?;
        Ok(self.level_ks[level - 1] - self.level_ks[level])
    }

    fn check_level(&self, level: usize, levels: usize) -> Result<(), PartitionError> {
        if level == 0 || level > levels {
            return Err(PartitionError::LevelOutOfRange { level, levels });
        }
        Ok(())
    }

    fn promoted_count(&self, level: usize) -> usize {
        self.level_ks[0] - self.level_ks[level - 1]
    }

    /// The subcode `B_i` for `i` in `1..=m+1`.
    pub fn subcode(&self, level: usize) -> Result<StabilizerCode, PartitionError> {
        self.check_level(level, self.level_ks.len())?;
        let promoted = self.promoted_count(level);
        let mut gens = self.base.generators().to_vec();
        gens.extend(self.pairs[..promoted].iter().map(|lp| lp.z.clone()));
        let logicals = self.pairs[promoted..].to_vec();
        let claimed = self
            .level_ds
            .as_ref()
            .and_then(|ds| ds.get(level - 1).copied());
        Ok(StabilizerCode::new(self.n(), gens, logicals, claimed)
            .expect("promoted logical Z operators extend a valid stabilizer"))
    }

    /// The coset code `[[B_i/B_{i+1}]]` for `i` in `1..=m`.
    pub fn coset_code(&self, level: usize) -> Result<CosetCode, PartitionError> {
        self.check_level(level, self.num_levels())?;
        let lo = self.promoted_count(level);
        let hi = self.promoted_count(level + 1);
        let mut gens = self.base.generators().to_vec();
        gens.extend(self.pairs[..lo].iter().map(|lp| lp.z.clone()));
        gens.extend(self.pairs[hi..].iter().map(|lp| lp.z.clone()));
        let code = StabilizerCode::new(self.n(), gens, self.pairs[lo..hi].to_vec(), None)
            .expect("coset code stabilizer is a subset of a symplectic basis");
        Ok(CosetCode { level, code })
    }

    /// Exact minimum distance of the coset code at `level`.
    pub fn coset_distance(
        &self,
        level: usize,
        opts: &DistanceOptions,
    ) -> Result<DistanceReport, PartitionError> {
        let coset = self.coset_code(level)?;
        Ok(min_distance(coset.as_code(), opts)?)
    }

    /// Exact minimum distance of `B_i` for `i` in `1..=m`.
    pub fn subcode_distance(
        &self,
        level: usize,
        opts: &DistanceOptions,
    ) -> Result<DistanceReport, PartitionError> {
        self.check_level(level, self.num_levels())?;
        Ok(min_distance(&self.subcode(level)?, opts)?)
    }
}
