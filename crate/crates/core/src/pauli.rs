//! Binary symplectic representation of n-qubit Pauli operators modulo phase.
//!
//! A qubit carries `I`, `X`, `Z` or `Y` according to its `(x, z)` bit pair
//! `(0,0)`, `(1,0)`, `(0,1)` or `(1,1)`. Bits are packed into `u64` words so
//! weight is a population count over `x | z`.

use std::fmt;
use std::ops::{Mul, MulAssign};
use std::str::FromStr;

use thiserror::Error;

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("empty Pauli string")]
    Empty,
    #[error("invalid character {found:?} at position {position} (expected one of I, X, Y, Z)")]
    InvalidChar { position: usize, found: char },
    #[error("qubit count mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("block {block} out of range for {num_blocks} blocks")]
    BlockOutOfRange { block: usize, num_blocks: usize },
}

/// An n-qubit Pauli operator with its phase discarded.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliOperator {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        let w = words_for(n);
        Self {
            n,
            x: vec![0; w],
            z: vec![0; w],
        }
    }

    /// Builds an operator from explicit X- and Z-part bit vectors.
    ///
    /// # Panics
    ///
    /// Panics if the two parts have different lengths.
    pub fn from_bits(x: &[bool], z: &[bool]) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts must have equal length");
        let mut p = Self::identity(x.len());
        for (q, (&xb, &zb)) in x.iter().zip(z).enumerate() {
            p.set(q, xb, zb);
        }
        p
    }

    pub(crate) fn from_words(n: usize, x: Vec<u64>, z: Vec<u64>) -> Self {
        debug_assert_eq!(x.len(), words_for(n));
        debug_assert_eq!(z.len(), words_for(n));
        Self { n, x, z }
    }

    /// Single-qubit `X` on `qubit`, identity elsewhere.
    pub fn single_x(qubit: usize, n: usize) -> Self {
        let mut p = Self::identity(n);
        p.set(qubit, true, false);
        p
    }

    /// Single-qubit `Z` on `qubit`, identity elsewhere.
    pub fn single_z(qubit: usize, n: usize) -> Self {
        let mut p = Self::identity(n);
        p.set(qubit, false, true);
        p
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub(crate) fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub(crate) fn z_words(&self) -> &[u64] {
        &self.z
    }

    #[inline]
    pub fn x_bit(&self, qubit: usize) -> bool {
        assert!(qubit < self.n);
        (self.x[qubit / WORD_BITS] >> (qubit % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn z_bit(&self, qubit: usize) -> bool {
        assert!(qubit < self.n);
        (self.z[qubit / WORD_BITS] >> (qubit % WORD_BITS)) & 1 == 1
    }

    /// Overwrites the `(x, z)` pair on one qubit.
    pub fn set(&mut self, qubit: usize, x: bool, z: bool) {
        assert!(qubit < self.n, "qubit {qubit} out of range for {} qubits", self.n);
        let (w, b) = (qubit / WORD_BITS, qubit % WORD_BITS);
        let mask = 1u64 << b;
        self.x[w] = (self.x[w] & !mask) | (u64::from(x) << b);
        self.z[w] = (self.z[w] & !mask) | (u64::from(z) << b);
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    /// Number of qubits acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(&self.z)
            .map(|(x, z)| (x | z).count_ones() as usize)
            .sum()
    }

    /// Qubit indices where the operator is not the identity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&q| self.x_bit(q) || self.z_bit(q))
            .collect()
    }

    /// Group product modulo phase.
    pub fn multiply(&self, other: &Self) -> Result<Self, PauliError> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Symplectic inner product: `true` iff the operators anticommute.
    pub fn symplectic_product(&self, other: &Self) -> Result<bool, PauliError> {
        self.check_len(other)?;
        Ok(self.anticommutes_unchecked(other))
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, PauliError> {
        self.symplectic_product(other).map(|b| !b)
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        let mut parity = 0u32;
        for i in 0..self.x.len() {
            parity ^= (self.x[i] & other.z[i]).count_ones();
            parity ^= (self.z[i] & other.x[i]).count_ones();
        }
        parity & 1 == 1
    }

    #[inline]
    pub(crate) fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.x.iter_mut().zip(&other.x) {
            *a ^= b;
        }
        for (a, b) in self.z.iter_mut().zip(&other.z) {
            *a ^= b;
        }
    }

    fn check_len(&self, other: &Self) -> Result<(), PauliError> {
        if self.n != other.n {
            return Err(PauliError::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Places `self` on block `block` of a register of `num_blocks`
    /// equally sized blocks, identity elsewhere.
    pub fn tensor_embed(&self, block: usize, num_blocks: usize) -> Result<Self, PauliError> {
        if block >= num_blocks {
            return Err(PauliError::BlockOutOfRange { block, num_blocks });
        }
        let mut out = Self::identity(self.n * num_blocks);
        let offset = block * self.n;
        for q in 0..self.n {
            out.set(offset + q, self.x_bit(q), self.z_bit(q));
        }
        Ok(out)
    }

    /// The operator restricted to qubits `start..start + len`.
    pub fn restrict(&self, start: usize, len: usize) -> Self {
        assert!(start + len <= self.n);
        let mut out = Self::identity(len);
        for q in 0..len {
            out.set(q, self.x_bit(start + q), self.z_bit(start + q));
        }
        out
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::identity(self.n + other.n);
        for q in 0..self.n {
            out.set(q, self.x_bit(q), self.z_bit(q));
        }
        for q in 0..other.n {
            out.set(self.n + q, other.x_bit(q), other.z_bit(q));
        }
        out
    }

    /// Exchanges the X and Z parts on every qubit (transversal Hadamard).
    pub fn swap_xz(&self) -> Self {
        Self {
            n: self.n,
            x: self.z.clone(),
            z: self.x.clone(),
        }
    }

    fn letter(&self, q: usize) -> char {
        match (self.x_bit(q), self.z_bit(q)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }
}

pub fn parse_pauli(s: &str) -> Result<PauliOperator, PauliError> {
    s.parse()
}

pub fn format_pauli(p: &PauliOperator) -> String {
    p.to_string()
}

impl FromStr for PauliOperator {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(PauliError::Empty);
        }
        let n = s.chars().count();
        let mut p = Self::identity(n);
        for (q, c) in s.chars().enumerate() {
            let (x, z) = match c {
                'I' => (false, false),
                'X' => (true, false),
                'Z' => (false, true),
                'Y' => (true, true),
                found => return Err(PauliError::InvalidChar { position: q, found }),
            };
            p.set(q, x, z);
        }
        Ok(p)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.n).map(|q| self.letter(q)).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}

impl Mul for &PauliOperator {
    type Output = PauliOperator;

    /// # Panics
    ///
    /// Panics on a qubit count mismatch; use [`PauliOperator::multiply`] for a checked product.
    fn mul(self, rhs: Self) -> PauliOperator {
        self.multiply(rhs).expect("qubit count mismatch in Pauli product")
    }
}

impl MulAssign<&PauliOperator> for PauliOperator {
    fn mul_assign(&mut self, rhs: &PauliOperator) {
        assert_eq!(self.n, rhs.n, "qubit count mismatch in Pauli product");
        self.xor_assign(rhs);
    }
}
