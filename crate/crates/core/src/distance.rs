//! Exact minimum distance by exhaustive enumeration of `N(S) \ S`.
//!
//! Every element of the normalizer outside the stabilizer group is written
//! as `L · G`, where `L` is a non-trivial product of logical operators and
//! `G` a stabilizer element. Both exponent vectors are walked in Gray-code
//! order so that each step is one row XOR followed by a population count.
//!
//! Elements carry a flat enumeration index `e = (t << r) | s` where `t` is the
//! logical-class counter, `s` the stabilizer counter and `r` the number of
//! generators; the element is `L(gray(t)) · G(gray(s))`. The reported witness
//! minimises `(weight, e)`, so results do not depend on the worker count.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::pauli::{words_for, PauliOperator, WORD_BITS};
use crate::stabilizer::StabilizerCode;

/// Default element budget for a single enumeration.
pub const DEFAULT_CAP: u64 = 1 << 28;

/// Environment variable holding the default engine worker count.
pub const WORKERS_ENV: &str = "GCQC_WORKERS";

const PARALLEL_THRESHOLD: u64 = 1 << 15;
const MIN_CHUNK: u64 = 1 << 14;
const STOP_POLL_MASK: u64 = 0xFFF;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistanceError {
    #[error("enumeration needs 2^{required_log2} elements but the budget is {cap}; raise the cap to at least 2^{required_log2}")]
    BudgetExceeded { required_log2: u32, cap: u64 },
    #[error("code encodes no logical qubits; minimum distance is undefined")]
    NoLogicalQubits,
    #[error("block size {block} does not divide the qubit count {n}")]
    BlockMismatch { block: usize, n: usize },
}

/// How the weight of an operator is counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightKind {
    /// Number of non-identity qubits.
    Qubit,
    /// Number of non-identity blocks of the given size (symbol weight of a
    /// code over a `2^size`-dimensional alphabet).
    Block(usize),
}

#[derive(Debug, Clone)]
pub struct DistanceOptions {
    pub cap: u64,
    /// `None` uses the process-wide pool.
    pub workers: Option<usize>,
    /// Stop as soon as a weight-1 element is found.
    pub early_exit: bool,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            workers: workers_from_env(),
            early_exit: true,
        }
    }
}

impl DistanceOptions {
    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers.max(1));
        self
    }

    pub fn exhaustive(mut self) -> Self {
        self.early_exit = false;
        self
    }
}

/// Reads the worker count from [`WORKERS_ENV`], ignoring unparsable values.
pub fn workers_from_env() -> Option<usize> {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub distance: usize,
    pub witness: PauliOperator,
    /// Elements visited in canonical order up to termination.
    pub enumerated: u64,
    pub witness_index: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupMinimum {
    pub weight: usize,
    pub witness: PauliOperator,
}

/// log2 of the budget needed for an exact distance search: `4^k · 2^(n-k)`.
pub fn required_budget_log2(code: &StabilizerCode) -> u32 {
    (2 * code.k() + code.generators().len()) as u32
}

pub fn min_distance(
    code: &StabilizerCode,
    opts: &DistanceOptions,
) -> Result<DistanceReport, DistanceError> {
    min_distance_weighted(code, WeightKind::Qubit, opts)
}

/// Minimum weight over `N(S) \ S` under the chosen weight.
pub fn min_distance_weighted(
    code: &StabilizerCode,
    weight: WeightKind,
    opts: &DistanceOptions,
) -> Result<DistanceReport, DistanceError> {
    let start = Instant::now();
    if code.k() == 0 {
        return Err(DistanceError::NoLogicalQubits);
    }
    let required_log2 = required_budget_log2(code);
    check_budget(required_log2, opts.cap)?;

    let logical_basis: Vec<&PauliOperator> = code
        .logical_pairs()
        .iter()
        .flat_map(|pair| [&pair.x, &pair.z])
        .collect();
    let gens: Vec<&PauliOperator> = code.generators().iter().collect();
    let scan = Scanner::new(code.n(), &logical_basis, &gens, weight)?;
    let r = gens.len() as u32;
    let begin = 1u64 << r;
    let end = 1u64 << required_log2;
    let (w, index, enumerated) = scan.run(begin, end, opts).expect("non-empty logical space");
    Ok(DistanceReport {
        distance: w as usize,
        witness: scan.element_at(index),
        enumerated,
        witness_index: index,
        elapsed: start.elapsed(),
    })
}

/// Minimum weight over the non-identity elements of the group generated by
/// `generators`; `None` when the group is trivial.
pub fn min_weight_in_group(
    generators: &[PauliOperator],
    weight: WeightKind,
    cap: u64,
) -> Result<Option<GroupMinimum>, DistanceError> {
    let Some(first) = generators.first() else {
        return Ok(None);
    };
    let r = generators.len() as u32;
    check_budget(r, cap)?;
    let gens: Vec<&PauliOperator> = generators.iter().collect();
    let scan = Scanner::new(first.num_qubits(), &[], &gens, weight)?;
    let opts = DistanceOptions {
        cap,
        workers: workers_from_env(),
        early_exit: true,
    };
    Ok(scan.run(1, 1u64 << r, &opts).map(|(w, index, _)| GroupMinimum {
        weight: w as usize,
        witness: scan.element_at(index),
    }))
}

fn check_budget(required_log2: u32, cap: u64) -> Result<(), DistanceError> {
    if required_log2 >= 64 || (1u64 << required_log2) > cap {
        return Err(DistanceError::BudgetExceeded { required_log2, cap });
    }
    Ok(())
}

enum Weigher {
    Qubit,
    Blocks(Vec<Vec<(usize, u64)>>),
}

struct Scanner {
    n: usize,
    words: usize,
    /// Rows multiplied in at class boundaries, `2 * words` each.
    outer: Vec<Vec<u64>>,
    /// Rows walked inside each class.
    inner: Vec<Vec<u64>>,
    weigher: Weigher,
}

fn packed(p: &PauliOperator) -> Vec<u64> {
    let mut v = p.x_words().to_vec();
    v.extend_from_slice(p.z_words());
    v
}

#[inline]
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

#[inline]
fn xor_row(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

impl Scanner {
    fn new(
        n: usize,
        outer: &[&PauliOperator],
        inner: &[&PauliOperator],
        weight: WeightKind,
    ) -> Result<Self, DistanceError> {
        let words = words_for(n);
        let weigher = match weight {
            WeightKind::Qubit | WeightKind::Block(1) => Weigher::Qubit,
            WeightKind::Block(block) => {
                if block == 0 || !n.is_multiple_of(block) {
                    return Err(DistanceError::BlockMismatch { block, n });
                }
                let masks = (0..n / block)
                    .map(|b| {
                        let mut segs: Vec<(usize, u64)> = Vec::new();
                        for q in b * block..(b + 1) * block {
                            let (w, m) = (q / WORD_BITS, 1u64 << (q % WORD_BITS));
                            match segs.last_mut() {
                                Some((lw, lm)) if *lw == w => *lm |= m,
                                _ => segs.push((w, m)),
                            }
                        }
                        segs
                    })
                    .collect();
                Weigher::Blocks(masks)
            }
        };
        Ok(Self {
            n,
            words,
            outer: outer.iter().map(|p| packed(p)).collect(),
            inner: inner.iter().map(|p| packed(p)).collect(),
            weigher,
        })
    }

    #[inline]
    fn weight(&self, cur: &[u64]) -> u32 {
        let (x, z) = cur.split_at(self.words);
        match &self.weigher {
            Weigher::Qubit => x.iter().zip(z).map(|(a, b)| (a | b).count_ones()).sum(),
            Weigher::Blocks(masks) => masks
                .iter()
                .filter(|segs| segs.iter().any(|&(w, m)| (x[w] | z[w]) & m != 0))
                .count() as u32,
        }
    }

    fn combo(rows: &[Vec<u64>], exps: u64, dst: &mut [u64]) {
        for (i, row) in rows.iter().enumerate() {
            if (exps >> i) & 1 == 1 {
                xor_row(dst, row);
            }
        }
    }

    fn element_at(&self, index: u64) -> PauliOperator {
        let r = self.inner.len() as u32;
        let mut cur = vec![0u64; 2 * self.words];
        Self::combo(&self.outer, gray(index >> r), &mut cur);
        Self::combo(&self.inner, gray(index & ((1u64 << r) - 1)), &mut cur);
        let z = cur.split_off(self.words);
        PauliOperator::from_words(self.n, cur, z)
    }

    /// Best `(weight, index)` over `[begin, end)`, skipping identity elements.
    fn scan_range(&self, begin: u64, end: u64, early_exit: bool, stop: &AtomicU64) -> Option<(u32, u64)> {
        let r = self.inner.len() as u32;
        let mask = (1u64 << r) - 1;
        let mut t = begin >> r;
        let mut s = begin & mask;
        let mut lrep = vec![0u64; 2 * self.words];
        Self::combo(&self.outer, gray(t), &mut lrep);
        let mut cur = lrep.clone();
        Self::combo(&self.inner, gray(s), &mut cur);

        let mut best: Option<(u32, u64)> = None;
        let mut e = begin;
        loop {
            let w = self.weight(&cur);
            if w > 0 && best.is_none_or(|(bw, _)| w < bw) {
                best = Some((w, e));
                if early_exit && w == 1 {
                    stop.fetch_min(e, Ordering::Relaxed);
                    break;
                }
            }
            e += 1;
            if e >= end {
                break;
            }
            if e & STOP_POLL_MASK == 0 && stop.load(Ordering::Relaxed) < e {
                break;
            }
            s += 1;
            if s > mask {
                s = 0;
                t += 1;
                xor_row(&mut lrep, &self.outer[t.trailing_zeros() as usize]);
                cur.copy_from_slice(&lrep);
            } else {
                xor_row(&mut cur, &self.inner[s.trailing_zeros() as usize]);
            }
        }
        best
    }

    /// Returns `(weight, index, enumerated)`.
    fn run(&self, begin: u64, end: u64, opts: &DistanceOptions) -> Option<(u32, u64, u64)> {
        let total = end - begin;
        let stop = AtomicU64::new(u64::MAX);
        let workers = opts.workers.unwrap_or_else(rayon::current_num_threads);
        let best = if workers <= 1 || total < PARALLEL_THRESHOLD {
            self.scan_range(begin, end, opts.early_exit, &stop)
        } else {
            let chunk = (total / (workers as u64 * 16)).max(MIN_CHUNK);
            let chunks = total.div_ceil(chunk);
            let job = || {
                (0..chunks)
                    .into_par_iter()
                    .filter_map(|c| {
                        let lo = begin + c * chunk;
                        if stop.load(Ordering::Relaxed) < lo {
                            return None;
                        }
                        let hi = (lo + chunk).min(end);
                        self.scan_range(lo, hi, opts.early_exit, &stop)
                    })
                    .min()
            };
            match opts.workers {
                Some(w) => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
                    Ok(pool) => pool.install(job),
                    Err(_) => self.scan_range(begin, end, opts.early_exit, &stop),
                },
                None => job(),
            }
        };
        best.map(|(w, index)| {
            let enumerated = if opts.early_exit && w == 1 {
                index - begin + 1
            } else {
                total
            };
            (w, index, enumerated)
        })
    }
}
