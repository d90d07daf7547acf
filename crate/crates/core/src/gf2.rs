//! GF(2) elimination over packed symplectic rows `(x | z)`.

use crate::pauli::{PauliOperator, WORD_BITS};

fn pack(p: &PauliOperator) -> Vec<u64> {
    let mut row = Vec::with_capacity(2 * p.x_words().len());
    row.extend_from_slice(p.x_words());
    row.extend_from_slice(p.z_words());
    row
}

#[inline]
fn bit(row: &[u64], col: usize) -> bool {
    (row[col / WORD_BITS] >> (col % WORD_BITS)) & 1 == 1
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

fn lowest_set_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
}

/// Incremental row-echelon basis. Rows are reduced in insertion order, so
/// every stored row is free of the pivots of the rows stored before it.
#[derive(Debug, Clone, Default)]
pub(crate) struct EchelonBasis {
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        for (pivot, row) in &self.rows {
            if bit(&v, *pivot) {
                xor_into(&mut v, row);
            }
        }
        v
    }

    /// Adds `p` if it is independent of the current rows; reports whether it was.
    pub(crate) fn insert(&mut self, p: &PauliOperator) -> bool {
        let v = self.reduce(pack(p));
        match lowest_set_bit(&v) {
            Some(pivot) => {
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub(crate) fn contains(&self, p: &PauliOperator) -> bool {
        lowest_set_bit(&self.reduce(pack(p))).is_none()
    }
}

pub(crate) fn rank(rows: &[PauliOperator]) -> usize {
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

pub(crate) fn in_span(rows: &[PauliOperator], p: &PauliOperator) -> bool {
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.contains(p)
}

/// Basis of the symplectic complement of `rows`: every Pauli on `n` qubits
/// commuting with all of them.
pub(crate) fn commutant_basis(n: usize, rows: &[PauliOperator]) -> Vec<PauliOperator> {
    // v commutes with g iff (g.z | g.x) . (v.x | v.z) == 0, so solve M v = 0
    // with M built from the swapped halves.
    let cols = 2 * n;
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|g| {
            let mut row = vec![0u64; cols.div_ceil(WORD_BITS).max(1)];
            for q in 0..n {
                if g.z_bit(q) {
                    row[q / WORD_BITS] |= 1 << (q % WORD_BITS);
                }
                if g.x_bit(q) {
                    row[(n + q) / WORD_BITS] |= 1 << ((n + q) % WORD_BITS);
                }
            }
            row
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(found) = (r..m.len()).find(|&i| bit(&m[i], c)) else {
            continue;
        };
        m.swap(r, found);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && bit(row, c) {
                xor_into(row, &pivot_row);
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }

    let mut is_pivot = vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![false; n];
        let mut z = vec![false; n];
        let mut set = |c: usize| {
            if c < n {
                x[c] = !x[c];
            } else {
                z[c - n] = !z[c - n];
            }
        };
        set(free);
        for (i, &pc) in pivot_cols.iter().enumerate() {
            if bit(&m[i], free) {
                set(pc);
            }
        }
        basis.push(PauliOperator::from_bits(&x, &z));
    }
    basis
}
