//! Assembly of a generalized concatenated code from a subcode chain and one
//! outer code per level.
//!
//! The stabilizer is `S_I ∪ S̄_{A_1} ∪ … ∪ S̄_{A_m}`: `S_I` places the base
//! generators on each of the `N` blocks, and `S̄_{A_i}` replaces, block by
//! block, each outer generator's `r_i` qubit Paulis by the logical operators
//! of the level-`i` coset code. Outer logical operators are lifted the same
//! way.

use thiserror::Error;

use crate::distance::{
    min_distance, min_distance_weighted, DistanceError, DistanceOptions, DistanceReport,
    GroupMinimum, WeightKind,
};
use crate::partition::{CosetCode, PartitionError, SubcodeChain};
use crate::pauli::{PauliError, PauliOperator};
use crate::stabilizer::{
    complete_logicals, rank_gf2, validate, DegeneracyError, LogicalPair, StabilizerCode, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error(transparent)]
    Degeneracy(#[from] DegeneracyError),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("invalid inner code: {0}")]
    InvalidInner(Violation),
    #[error("invalid outer code: {0}")]
    InvalidOuter(Violation),
    #[error("outer code on {n} qubits cannot be split into {blocks} equal blocks")]
    BlockShape { n: usize, blocks: usize },
    #[error("outer code encodes {k} qubits, not a multiple of the block size {bits}")]
    LogicalShape { k: usize, bits: usize },
    #[error("outer code encodes no logical symbols")]
    EmptyOuter,
    #[error("the chain has no levels to concatenate")]
    NoLevels,
    #[error("chain has {levels} levels but {outers} outer codes were given")]
    LevelCount { levels: usize, outers: usize },
    #[error("level {level}: outer code has {found}-qubit symbols, coset code encodes {expected}")]
    AlphabetMismatch {
        level: usize,
        expected: usize,
        found: usize,
    },
    #[error("level {level}: outer length {found} differs from level 1 length {expected}")]
    BlockCountMismatch {
        level: usize,
        expected: usize,
        found: usize,
    },
    #[error("chain stops at k = {0}; concatenation needs a full descent to k = 0")]
    IncompleteDescent(usize),
    #[error("operator on {found} qubits cannot be lifted: expected {expected} ({bits} x {blocks})")]
    LiftShape {
        expected: usize,
        found: usize,
        bits: usize,
        blocks: usize,
    },
    #[error("lifted stabilizer is not a valid code: {0}")]
    InvalidLift(Violation),
    #[error("stabilizer rank {found} differs from N - K = {expected}")]
    RankDeficiency { expected: usize, found: usize },
    #[error("level {level}: claimed inner distance {claimed} exceeds the true distance {actual}")]
    InnerDistanceOverclaimed {
        level: usize,
        claimed: usize,
        actual: usize,
    },
    #[error("level {level}: claimed outer distance {claimed} exceeds the true distance {actual}")]
    OuterDistanceOverclaimed {
        level: usize,
        claimed: usize,
        actual: usize,
    },
    #[error("bound inputs have different lengths: {ds} inner, {outer_ds} outer, {flags} degeneracy flags")]
    BoundLengthMismatch {
        ds: usize,
        outer_ds: usize,
        flags: usize,
    },
    #[error("inner distances {0:?} decrease along the chain")]
    DecreasingDistances(Vec<usize>),
}

/// An outer code over `2^bits`-dimensional symbols, given in binary form on
/// `bits · blocks` qubits grouped into `blocks` consecutive blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterCode {
    code: StabilizerCode,
    blocks: usize,
    bits: usize,
    distance: usize,
    distance_verified: bool,
    min_stabilizer: Option<GroupMinimum>,
    degenerate: bool,
}

impl OuterCode {
    /// Wraps `code` as an outer code of length `blocks`. Without a claimed
    /// distance the true symbol distance is computed. Degeneracy is always
    /// computed, never taken on trust.
    pub fn new(
        code: StabilizerCode,
        blocks: usize,
        claimed_distance: Option<usize>,
        opts: &DistanceOptions,
    ) -> Result<Self, BuildError> {
        if blocks == 0 || !code.n().is_multiple_of(blocks) {
            return Err(BuildError::BlockShape { n: code.n(), blocks });
        }
        let bits = code.n() / blocks;
        if code.k() == 0 {
            return Err(BuildError::EmptyOuter);
        }
        if !code.k().is_multiple_of(bits) {
            return Err(BuildError::LogicalShape { k: code.k(), bits });
        }
        let (distance, distance_verified) = match claimed_distance.or(code.claimed_distance()) {
            Some(d) => (d, false),
            None => (
                min_distance_weighted(&code, WeightKind::Block(bits), opts)?.distance,
                true,
            ),
        };
        let min_stabilizer = code.min_stabilizer_weight(WeightKind::Block(bits))?;
        let degenerate = min_stabilizer.as_ref().is_some_and(|m| m.weight < distance);
        Ok(Self {
            code,
            blocks,
            bits,
            distance,
            distance_verified,
            min_stabilizer,
            degenerate,
        })
    }

    /// The trivial outer code `[[N, N, 1]]` over `2^bits`-dimensional symbols.
    pub fn trivial(blocks: usize, bits: usize) -> Self {
        Self {
            code: StabilizerCode::trivial(blocks * bits),
            blocks,
            bits,
            distance: 1,
            distance_verified: true,
            min_stabilizer: None,
            degenerate: false,
        }
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    /// Outer length `N`.
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    /// Qubits per symbol, `r_i`.
    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Number of encoded symbols `K_i`.
    pub fn logical_size(&self) -> usize {
        self.code.k() / self.bits
    }

    /// Distance `D_i` in symbols (claimed or computed).
    pub fn distance(&self) -> usize {
        self.distance
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Lightest non-identity stabilizer element by symbol weight.
    pub fn min_stabilizer(&self) -> Option<&GroupMinimum> {
        self.min_stabilizer.as_ref()
    }

    /// Exact symbol distance.
    pub fn true_distance(&self, opts: &DistanceOptions) -> Result<DistanceReport, BuildError> {
        Ok(min_distance_weighted(&self.code, WeightKind::Block(self.bits), opts)?)
    }

    /// Checks the claimed distance against the exact one; `level` is only
    /// used in the error.
    pub fn verify_distance(&self, level: usize, opts: &DistanceOptions) -> Result<usize, BuildError> {
        if self.distance_verified {
            return Ok(self.distance);
        }
        let actual = self.true_distance(opts)?.distance;
        if self.distance > actual {
            return Err(BuildError::OuterDistanceOverclaimed {
                level,
                claimed: self.distance,
                actual,
            });
        }
        Ok(actual)
    }
}

/// Base generators placed on each of `blocks` blocks, block-major.
pub fn build_s_i(
    inner_n: usize,
    inner_generators: &[PauliOperator],
    blocks: usize,
) -> Result<Vec<PauliOperator>, BuildError> {
    if blocks == 0 {
        return Err(BuildError::BlockShape { n: inner_n, blocks });
    }
    complete_logicals(inner_n, inner_generators).map_err(BuildError::InvalidInner)?;
    let mut out = Vec::with_capacity(inner_generators.len() * blocks);
    for block in 0..blocks {
        for g in inner_generators {
            out.push(g.tensor_embed(block, blocks)?);
        }
    }
    Ok(out)
}

/// Replaces the `r` qubit Paulis in each block of `g` by the coset code's
/// logical operators: `X^{a_l}` by `X̄_l` and `Z^{b_l}` by `Z̄_l`.
pub fn lift_operator(
    g: &PauliOperator,
    coset: &CosetCode,
    blocks: usize,
) -> Result<PauliOperator, BuildError> {
    let bits = coset.qubits();
    if g.num_qubits() != bits * blocks {
        return Err(BuildError::LiftShape {
            expected: bits * blocks,
            found: g.num_qubits(),
            bits,
            blocks,
        });
    }
    let n = coset.as_code().n();
    let mut out = PauliOperator::identity(n * blocks);
    for block in 0..blocks {
        let local = lift_block(g, block, coset.logical_pairs(), n);
        if !local.is_identity() {
            out *= &local.tensor_embed(block, blocks)?;
        }
    }
    Ok(out)
}

fn lift_block(g: &PauliOperator, block: usize, pairs: &[LogicalPair], n: usize) -> PauliOperator {
    let bits = pairs.len();
    let mut local = PauliOperator::identity(n);
    for (l, pair) in pairs.iter().enumerate() {
        let q = block * bits + l;
        if g.x_bit(q) {
            local *= &pair.x;
        }
        if g.z_bit(q) {
            local *= &pair.z;
        }
    }
    local
}

/// Lower bound on the concatenated distance and the index of
/// the first degenerate outer code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceBound {
    pub value: usize,
    /// 1-based level of the first degenerate outer code.
    pub mu: Option<usize>,
}

/// `min{d_1 D_1, …, d_{μ-1} D_{μ-1}, d_μ · min_{i≥μ} D_i}`, or `min_i d_i D_i`
/// when no outer code is degenerate.
pub fn distance_bound(
    inner_ds: &[usize],
    outer_ds: &[usize],
    degenerate: &[bool],
) -> Result<DistanceBound, BuildError> {
    if inner_ds.len() != outer_ds.len() || inner_ds.len() != degenerate.len() || inner_ds.is_empty() {
        return Err(BuildError::BoundLengthMismatch {
            ds: inner_ds.len(),
            outer_ds: outer_ds.len(),
            flags: degenerate.len(),
        });
    }
    if inner_ds.windows(2).any(|w| w[1] < w[0]) {
        return Err(BuildError::DecreasingDistances(inner_ds.to_vec()));
    }
    let mu = degenerate.iter().position(|&f| f);
    let cut = mu.unwrap_or(inner_ds.len());
    let mut value = inner_ds[..cut]
        .iter()
        .zip(&outer_ds[..cut])
        .map(|(d, big_d)| d * big_d)
        .min()
        .unwrap_or(usize::MAX);
    if let Some(mu) = mu {
        let tail = outer_ds[mu..].iter().copied().min().expect("non-empty tail");
        value = value.min(inner_ds[mu] * tail);
    }
    Ok(DistanceBound {
        value,
        mu: mu.map(|i| i + 1),
    })
}

#[derive(Debug, Clone)]
pub struct BuildOptions {
    /// Check claimed inner and outer distances against exact ones.
    pub verify_claims: bool,
    /// Run the distance engine on the concatenated code.
    pub exact_distance: bool,
    pub distance: DistanceOptions,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            verify_claims: true,
            exact_distance: false,
            distance: DistanceOptions::default(),
        }
    }
}

/// Per-level data of a built code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub coset: CosetCode,
    pub outer: OuterCode,
    pub lifted_generators: Vec<PauliOperator>,
    pub lifted_logicals: Vec<LogicalPair>,
    /// Inner distance `d_i` used in the bound.
    pub inner_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcqcResult {
    pub code: StabilizerCode,
    pub inner_n: usize,
    pub blocks: usize,
    pub s_i_part: Vec<PauliOperator>,
    pub levels: Vec<Level>,
    pub length: usize,
    pub dimension: usize,
    pub bound: DistanceBound,
    pub exact: Option<DistanceReport>,
}

impl GcqcResult {
    /// `(𝒩, 𝒦)`.
    pub fn params(&self) -> (usize, usize) {
        (self.length, self.dimension)
    }

    pub fn mu(&self) -> Option<usize> {
        self.bound.mu
    }

    pub fn exact_distance(&self) -> Option<usize> {
        self.exact.as_ref().map(|r| r.distance)
    }

    /// `Some(true)` when the exact distance is known and meets the bound.
    pub fn bound_holds(&self) -> Option<bool> {
        self.exact_distance().map(|d| d >= self.bound.value)
    }

    pub fn inner_distances(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.inner_distance).collect()
    }

    pub fn outer_distances(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.outer.distance()).collect()
    }

    pub fn degeneracy_flags(&self) -> Vec<bool> {
        self.levels.iter().map(|l| l.outer.is_degenerate()).collect()
    }

    pub fn lifted_outer(&self) -> impl Iterator<Item = &PauliOperator> {
        self.levels.iter().flat_map(|l| l.lifted_generators.iter())
    }

    /// Computes and stores the exact distance.
    pub fn compute_exact_distance(&mut self, opts: &DistanceOptions) -> Result<&DistanceReport, BuildError> {
        let report = min_distance(&self.code, opts)?;
        Ok(self.exact.insert(report))
    }
}

/// Concatenates `outers[i]` with the level-`i+1` coset code of `chain`.
pub fn build_gcqc(
    chain: &SubcodeChain,
    outers: &[OuterCode],
    opts: &BuildOptions,
) -> Result<GcqcResult, BuildError> {
    let m = chain.num_levels();
    if m == 0 {
        return Err(BuildError::NoLevels);
    }
    if outers.len() != m {
        return Err(BuildError::LevelCount {
            levels: m,
            outers: outers.len(),
        });
    }
    if !chain.fully_descends() {
        return Err(BuildError::IncompleteDescent(*chain.level_ks().last().unwrap()));
    }
    let blocks = outers[0].blocks();
    for (i, outer) in outers.iter().enumerate() {
        let level = i + 1;
        let expected = chain.level_qubits(level)?;
        if outer.bits() != expected {
            return Err(BuildError::AlphabetMismatch {
                level,
                expected,
                found: outer.bits(),
            });
        }
        if outer.blocks() != blocks {
            return Err(BuildError::BlockCountMismatch {
                level,
                expected: blocks,
                found: outer.blocks(),
            });
        }
    }

    let inner_n = chain.n();
    let length = inner_n * blocks;
    let dimension: usize = outers.iter().map(|o| o.bits() * o.logical_size()).sum();
    let s_i_part = build_s_i(inner_n, chain.base().generators(), blocks)?;

    let mut levels = Vec::with_capacity(m);
    for (i, outer) in outers.iter().enumerate() {
        let level = i + 1;
        let coset = chain.coset_code(level)?;
        let lifted_generators = outer
            .code()
            .generators()
            .iter()
            .map(|g| lift_operator(g, &coset, blocks))
            .collect::<Result<Vec<_>, _>>()?;
        let lifted_logicals = outer
            .code()
            .logical_pairs()
            .iter()
            .map(|lp| {
                Ok(LogicalPair::new(
                    lift_operator(&lp.x, &coset, blocks)?,
                    lift_operator(&lp.z, &coset, blocks)?,
                ))
            })
            .collect::<Result<Vec<_>, BuildError>>()?;

        let claimed = chain.level_ds().map(|ds| ds[i]);
        let inner_distance = match claimed {
            Some(d) if !opts.verify_claims => d,
            _ => {
                let actual = chain.subcode_distance(level, &opts.distance)?.distance;
                match claimed {
                    Some(d) if d > actual => {
                        return Err(BuildError::InnerDistanceOverclaimed {
                            level,
                            claimed: d,
                            actual,
                        })
                    }
                    Some(d) => d,
                    None => actual,
                }
            }
        };
        if opts.verify_claims {
            outer.verify_distance(level, &opts.distance)?;
        }
        levels.push(Level {
            coset,
            outer: outer.clone(),
            lifted_generators,
            lifted_logicals,
            inner_distance,
        });
    }

    let mut generators = s_i_part.clone();
    generators.extend(levels.iter().flat_map(|l| l.lifted_generators.iter().cloned()));
    let logicals: Vec<LogicalPair> = levels
        .iter()
        .flat_map(|l| l.lifted_logicals.iter().cloned())
        .collect();

    let rank = rank_gf2(&generators);
    if rank != length - dimension {
        return Err(BuildError::RankDeficiency {
            expected: length - dimension,
            found: rank,
        });
    }
    validate(length, &generators, &logicals).map_err(BuildError::InvalidLift)?;
    let code = StabilizerCode::new(length, generators, logicals, None).map_err(BuildError::InvalidLift)?;

    let ds: Vec<usize> = levels.iter().map(|l| l.inner_distance).collect();
    let big_ds: Vec<usize> = levels.iter().map(|l| l.outer.distance()).collect();
    let flags: Vec<bool> = levels.iter().map(|l| l.outer.is_degenerate()).collect();
    let bound = distance_bound(&ds, &big_ds, &flags)?;

    let mut result = GcqcResult {
        code,
        inner_n,
        blocks,
        s_i_part,
        levels,
        length,
        dimension,
        bound,
        exact: None,
    };
    if opts.exact_distance {
        result.compute_exact_distance(&opts.distance)?;
    }
    Ok(result)
}
