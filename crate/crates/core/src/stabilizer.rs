//! Stabilizer codes: validation, GF(2) rank, logical-operator completion and
//! degeneracy.

use std::fmt;

use thiserror::Error;

use crate::distance::{min_weight_in_group, DistanceError, GroupMinimum, WeightKind};
use crate::gf2::{self, EchelonBasis};
use crate::pauli::PauliOperator;

/// Largest stabilizer group (as a power of two) enumerated when testing degeneracy.
pub const DEGENERACY_CAP_LOG2: u32 = 20;

/// A logical `(X̄, Z̄)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogicalPair {
    pub x: PauliOperator,
    pub z: PauliOperator,
}

impl LogicalPair {
    pub fn new(x: PauliOperator, z: PauliOperator) -> Self {
        Self { x, z }
    }

    /// The pair with the roles of X̄ and Z̄ exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            x: self.z.clone(),
            z: self.x.clone(),
        }
    }
}

impl fmt::Display for LogicalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X={} Z={}", self.x, self.z)
    }
}

/// First invariant broken by a candidate stabilizer code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("generator {index} ({op}) acts on {found} qubits, expected {expected}")]
    GeneratorLength {
        index: usize,
        op: String,
        expected: usize,
        found: usize,
    },
    #[error("logical pair {pair} acts on {found} qubits, expected {expected}")]
    LogicalLength {
        pair: usize,
        expected: usize,
        found: usize,
    },
    #[error("generators {first} ({left}) and {second} ({right}) anticommute")]
    AnticommutingGenerators {
        first: usize,
        second: usize,
        left: String,
        right: String,
    },
    #[error("generator {index} ({op}) is dependent on the preceding generators")]
    DependentGenerator { index: usize, op: String },
    #[error("expected {expected} logical pairs (n - rank), found {found}")]
    LogicalCount { expected: usize, found: usize },
    #[error("logical pair {pair} ({x}, {z}) does not anticommute")]
    UnpairedLogical { pair: usize, x: String, z: String },
    #[error("logical {left} of pair {first} and {right} of pair {second} anticommute")]
    CrossPairAnticommute {
        first: usize,
        second: usize,
        left: String,
        right: String,
    },
    #[error("logical {logical} of pair {pair} anticommutes with generator {generator} ({op})")]
    LogicalAnticommutesWithGenerator {
        pair: usize,
        logical: String,
        generator: usize,
        op: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegeneracyError {
    #[error("undecided: stabilizer group has 2^{generators} elements, above the enumeration cap 2^{cap_log2}")]
    Undecided { generators: usize, cap_log2: u32 },
    #[error(transparent)]
    Distance(#[from] DistanceError),
}

/// A stabilizer code: independent commuting generators plus a complete set
/// of logical pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
    logical_pairs: Vec<LogicalPair>,
    claimed_distance: Option<usize>,
}

impl StabilizerCode {
    /// Validates and assembles a code from explicit generators and logicals.
    pub fn new(
        n: usize,
        generators: Vec<PauliOperator>,
        logical_pairs: Vec<LogicalPair>,
        claimed_distance: Option<usize>,
    ) -> Result<Self, Violation> {
        validate(n, &generators, &logical_pairs)?;
        Ok(Self {
            n,
            generators,
            logical_pairs,
            claimed_distance,
        })
    }

    /// Builds a code from its generators, completing the logical operators.
    pub fn from_generators(n: usize, generators: Vec<PauliOperator>) -> Result<Self, Violation> {
        let logical_pairs = complete_logicals(n, &generators)?;
        Self::new(n, generators, logical_pairs, None)
    }

    /// The trivial `[[n, n, 1]]` code with single-qubit logicals.
    pub fn trivial(n: usize) -> Self {
        let logical_pairs = (0..n)
            .map(|q| LogicalPair::new(PauliOperator::single_x(q, n), PauliOperator::single_z(q, n)))
            .collect();
        Self {
            n,
            generators: Vec::new(),
            logical_pairs,
            claimed_distance: Some(1),
        }
    }

    pub fn with_claimed_distance(mut self, d: Option<usize>) -> Self {
        self.claimed_distance = d;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.logical_pairs.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn logical_pairs(&self) -> &[LogicalPair] {
        &self.logical_pairs
    }

    pub fn claimed_distance(&self) -> Option<usize> {
        self.claimed_distance
    }

    /// Re-checks every invariant.
    pub fn validate(&self) -> Result<(), Violation> {
        validate(self.n, &self.generators, &self.logical_pairs)
    }

    /// Whether `p` lies in the stabilizer group.
    ///
    /// # Panics
    ///
    /// Panics if `p` acts on a different number of qubits.
    pub fn in_stabilizer_group(&self, p: &PauliOperator) -> bool {
        assert_eq!(p.num_qubits(), self.n, "operator length does not match the code");
        gf2::in_span(&self.generators, p)
    }

    /// Whether `p` commutes with every generator.
    pub fn in_normalizer(&self, p: &PauliOperator) -> bool {
        p.num_qubits() == self.n && self.generators.iter().all(|g| !g.anticommutes_unchecked(p))
    }

    /// Degeneracy with respect to distance `d`: some non-identity stabilizer
    /// element has weight below `d`.
    pub fn is_degenerate(&self, d: usize) -> Result<bool, DegeneracyError> {
        self.is_degenerate_with(d, WeightKind::Qubit)
    }

    pub fn is_degenerate_with(&self, d: usize, weight: WeightKind) -> Result<bool, DegeneracyError> {
        Ok(self
            .min_stabilizer_weight(weight)?
            .is_some_and(|m| m.weight < d))
    }

    /// Lightest non-identity stabilizer element, `None` for an empty stabilizer.
    pub fn min_stabilizer_weight(&self, weight: WeightKind) -> Result<Option<GroupMinimum>, DegeneracyError> {
        if self.generators.len() as u32 > DEGENERACY_CAP_LOG2 {
            return Err(DegeneracyError::Undecided {
                generators: self.generators.len(),
                cap_log2: DEGENERACY_CAP_LOG2,
            });
        }
        Ok(min_weight_in_group(&self.generators, weight, 1 << DEGENERACY_CAP_LOG2)?)
    }
}

/// GF(2) rank of the symplectic matrix whose rows are `rows`.
pub fn rank_gf2(rows: &[PauliOperator]) -> usize {
    gf2::rank(rows)
}

fn check_generators(n: usize, generators: &[PauliOperator]) -> Result<(), Violation> {
    for (index, g) in generators.iter().enumerate() {
        if g.num_qubits() != n {
            return Err(Violation::GeneratorLength {
                index,
                op: g.to_string(),
                expected: n,
                found: g.num_qubits(),
            });
        }
    }
    for (i, a) in generators.iter().enumerate() {
        for (j, b) in generators.iter().enumerate().skip(i + 1) {
            if a.anticommutes_unchecked(b) {
                return Err(Violation::AnticommutingGenerators {
                    first: i,
                    second: j,
                    left: a.to_string(),
                    right: b.to_string(),
                });
            }
        }
    }
    let mut basis = EchelonBasis::new();
    for (index, g) in generators.iter().enumerate() {
        if !basis.insert(g) {
            return Err(Violation::DependentGenerator {
                index,
                op: g.to_string(),
            });
        }
    }
    Ok(())
}

/// Checks commutation, independence and the logical pairing relations.
pub fn validate(n: usize, generators: &[PauliOperator], logical_pairs: &[LogicalPair]) -> Result<(), Violation> {
    check_generators(n, generators)?;
    let expected = n - generators.len();
    if logical_pairs.len() != expected {
        return Err(Violation::LogicalCount {
            expected,
            found: logical_pairs.len(),
        });
    }
    for (pair, lp) in logical_pairs.iter().enumerate() {
        for op in [&lp.x, &lp.z] {
            if op.num_qubits() != n {
                return Err(Violation::LogicalLength {
                    pair,
                    expected: n,
                    found: op.num_qubits(),
                });
            }
        }
    }
    for (pair, lp) in logical_pairs.iter().enumerate() {
        for op in [&lp.x, &lp.z] {
            if let Some(generator) = generators.iter().position(|g| g.anticommutes_unchecked(op)) {
                return Err(Violation::LogicalAnticommutesWithGenerator {
                    pair,
                    logical: op.to_string(),
                    generator,
                    op: generators[generator].to_string(),
                });
            }
        }
        if !lp.x.anticommutes_unchecked(&lp.z) {
            return Err(Violation::UnpairedLogical {
                pair,
                x: lp.x.to_string(),
                z: lp.z.to_string(),
            });
        }
    }
    for (i, a) in logical_pairs.iter().enumerate() {
        for (j, b) in logical_pairs.iter().enumerate().skip(i + 1) {
            for (l, r) in [(&a.x, &b.x), (&a.x, &b.z), (&a.z, &b.x), (&a.z, &b.z)] {
                if l.anticommutes_unchecked(r) {
                    return Err(Violation::CrossPairAnticommute {
                        first: i,
                        second: j,
                        left: l.to_string(),
                        right: r.to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Symplectic Gram-Schmidt completion: `n - rank` logical pairs for the
/// given generators. The result is one valid choice among many.
pub fn complete_logicals(n: usize, generators: &[PauliOperator]) -> Result<Vec<LogicalPair>, Violation> {
    check_generators(n, generators)?;

    let mut span = EchelonBasis::new();
    for g in generators {
        span.insert(g);
    }
    let mut rest: Vec<PauliOperator> = gf2::commutant_basis(n, generators)
        .into_iter()
        .filter(|c| span.insert(c))
        .collect();
    debug_assert_eq!(rest.len(), 2 * (n - generators.len()));

    let mut pairs = Vec::with_capacity(rest.len() / 2);
    while !rest.is_empty() {
        let u = rest.remove(0);
        let partner = rest
            .iter()
            .position(|v| u.anticommutes_unchecked(v))
            .expect("symplectic form is non-degenerate modulo the stabilizer");
        let v = rest.remove(partner);
        for w in rest.iter_mut() {
            let with_u = w.anticommutes_unchecked(&u);
            let with_v = w.anticommutes_unchecked(&v);
            if with_v {
                *w *= &u;
            }
            if with_u {
                *w *= &v;
            }
        }
        pairs.push(LogicalPair::new(u, v));
    }
    Ok(pairs)
}
