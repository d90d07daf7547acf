//! Generalized concatenated quantum codes in the stabilizer formalism.

pub mod builder;
pub mod cli;
pub mod distance;
mod gf2;
pub mod block_weights;
pub mod partition;
pub mod pauli;
pub mod stabilizer;

pub use builder::{
    build_gcqc, build_s_i, distance_bound, lift_operator, BuildError, BuildOptions, DistanceBound,
    GcqcResult, Level, OuterCode,
};
pub use distance::{
    min_distance, min_distance_weighted, min_weight_in_group, DistanceError, DistanceOptions,
    DistanceReport, GroupMinimum, WeightKind,
};
pub use block_weights::{verify_block_weights, BlockWeightOptions, BlockWeightOutcome};
pub use partition::{CosetCode, NestingStrategy, PartitionError, SubcodeChain};
pub use pauli::{format_pauli, parse_pauli, PauliError, PauliOperator};
pub use stabilizer::{complete_logicals, rank_gf2, validate, LogicalPair, StabilizerCode, Violation};
