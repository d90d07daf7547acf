//! Independent oracles and random instance generators shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use gcqc::{
    DistanceOptions, LogicalPair, NestingStrategy, OuterCode, PauliOperator, StabilizerCode, SubcodeChain,
};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn p(s: &str) -> PauliOperator {
    s.parse().unwrap()
}

pub fn ps(list: &[&str]) -> Vec<PauliOperator> {
    list.iter().map(|s| p(s)).collect()
}

pub fn pair(x: &str, z: &str) -> LogicalPair {
    LogicalPair::new(p(x), p(z))
}

/// Every element of the group generated by `gens`, by closure.
pub fn group_elements(n: usize, gens: &[PauliOperator]) -> HashSet<PauliOperator> {
    let mut group = HashSet::from([PauliOperator::identity(n)]);
    for g in gens {
        let shifted: Vec<PauliOperator> = group.iter().map(|e| e * g).collect();
        group.extend(shifted);
    }
    group
}

/// Minimum distance by scanning all `4^n` Paulis: lightest operator that
/// commutes with every generator and lies outside the stabilizer group.
pub fn naive_distance(code: &StabilizerCode) -> Option<usize> {
    let n = code.n();
    assert!(n <= 10, "naive scan is for small codes");
    let group = group_elements(n, code.generators());
    let mut best: Option<usize> = None;
    for bits in 1u64..(1u64 << (2 * n)) {
        let x: Vec<bool> = (0..n).map(|q| (bits >> q) & 1 == 1).collect();
        let z: Vec<bool> = (0..n).map(|q| (bits >> (n + q)) & 1 == 1).collect();
        let op = PauliOperator::from_bits(&x, &z);
        if best.is_some_and(|b| op.weight() >= b) {
            continue;
        }
        let commutes = code.generators().iter().all(|g| op.commutes_with(g).unwrap());
        if commutes && !group.contains(&op) {
            best = Some(op.weight());
        }
    }
    best
}

/// Canonical code `Z_1..Z_s` scrambled by a random Clifford circuit. Returns
/// generators and logical pairs built from the same circuit, so they are
/// correct by construction.
pub fn random_code<R: Rng>(rng: &mut R, n: usize, s: usize, gates: usize) -> StabilizerCode {
    assert!(s <= n);
    let mut gens: Vec<PauliOperator> = (0..s).map(|q| PauliOperator::single_z(q, n)).collect();
    let mut logicals: Vec<LogicalPair> = (s..n)
        .map(|q| LogicalPair::new(PauliOperator::single_x(q, n), PauliOperator::single_z(q, n)))
        .collect();
    for _ in 0..gates {
        let gate = rng.gen_range(0..3);
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if gate == 2 && a == b {
            continue;
        }
        let apply = |op: &mut PauliOperator| conjugate(op, gate, a, b);
        gens.iter_mut().for_each(apply);
        for lp in logicals.iter_mut() {
            apply(&mut lp.x);
            apply(&mut lp.z);
        }
    }
    StabilizerCode::new(n, gens, logicals, None).expect("Clifford image of a valid code")
}

/// Conjugation by H (0), S (1) or CNOT a->b (2) on the binary form.
fn conjugate(op: &mut PauliOperator, gate: u32, a: usize, b: usize) {
    let (xa, za) = (op.x_bit(a), op.z_bit(a));
    match gate {
        0 => op.set(a, za, xa),
        1 => op.set(a, xa, za ^ xa),
        _ => {
            let (xb, zb) = (op.x_bit(b), op.z_bit(b));
            op.set(a, xa, za ^ zb);
            op.set(b, xb ^ xa, zb);
        }
    }
}

/// A random code, usually well scrambled but sometimes left close to the
/// product form so that low-weight, degenerate structure also occurs.
pub fn random_code_mixed<R: Rng>(rng: &mut R, n: usize, s: usize) -> StabilizerCode {
    let gates = if rng.gen_bool(0.25) {
        rng.gen_range(0..=n * n)
    } else {
        rng.gen_range(2 * n * n..=6 * n * n)
    };
    random_code(rng, n, s, gates)
}

pub struct Instance {
    pub chain: SubcodeChain,
    pub outers: Vec<OuterCode>,
    pub length: usize,
    pub dimension: usize,
    pub summary: String,
}

/// Random concatenation input with inner length at most 6, at most 3 blocks
/// and at most 2 levels, keeping `length + dimension <= max_log2` so the
/// exact distance stays enumerable.
pub fn random_instance<R: Rng>(rng: &mut R, max_log2: usize) -> Instance {
    loop {
        let n = rng.gen_range(1..=6);
        // Small k_1 and K_i give inner and outer distances above 1.
        let k1 = if rng.gen_bool(0.7) {
            rng.gen_range(1..=n.min(2))
        } else {
            rng.gen_range(1..=n)
        };
        let blocks = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=k1.min(2));
        let mut cuts: Vec<usize> = (1..k1).collect();
        cuts.shuffle(rng);
        let mut levels: Vec<usize> = cuts[..m - 1].to_vec();
        levels.push(k1);
        levels.push(0);
        levels.sort_unstable_by(|a, b| b.cmp(a));

        let bits: Vec<usize> = levels.windows(2).map(|w| w[0] - w[1]).collect();
        let symbols: Vec<usize> = bits
            .iter()
            .map(|_| if rng.gen_bool(0.7) { 1 } else { rng.gen_range(1..=blocks) })
            .collect();
        let dimension: usize = bits.iter().zip(&symbols).map(|(r, k)| r * k).sum();
        let length = n * blocks;
        if length + dimension > max_log2 {
            continue;
        }

        let base = random_code_mixed(rng, n, n - k1);
        let mut strategy = NestingStrategy::identity();
        if rng.gen_bool(0.5) {
            let mut order: Vec<usize> = (0..k1).collect();
            order.shuffle(rng);
            strategy = strategy.with_ordering(order);
        }
        let swaps: Vec<usize> = (0..k1).filter(|_| rng.gen_bool(0.3)).collect();
        strategy = strategy.with_swaps(swaps);
        let chain = SubcodeChain::build(base, levels.clone(), strategy).expect("valid chain");

        let opts = DistanceOptions::default();
        let outers: Vec<OuterCode> = bits
            .iter()
            .zip(&symbols)
            .map(|(&r, &k)| {
                let code = random_code_mixed(rng, r * blocks, r * (blocks - k));
                OuterCode::new(code, blocks, None, &opts).expect("valid outer code")
            })
            .collect();
        let summary = format!(
            "n={n} N={blocks} levels={levels:?} symbols={symbols:?} ordering={:?} swaps={:?}",
            chain.strategy().ordering(),
            chain.strategy().swaps()
        );
        return Instance {
            chain,
            outers,
            length,
            dimension,
            summary,
        };
    }
}

/// Outer code over `2^bits` symbols of length `blocks` whose first block is
/// frozen by weight-one stabilizers, built around a distance-at-least-2 code
/// on the other blocks. Scrambling stays inside blocks so symbol weights are
/// preserved; the result is degenerate. `None` when no such base turns up.
pub fn degenerate_outer<R: Rng>(rng: &mut R, blocks: usize, bits: usize, symbols: usize) -> Option<OuterCode> {
    let opts = DistanceOptions::default();
    let rest = bits * (blocks - 1);
    for _ in 0..200 {
        let base = random_code_mixed(rng, rest, bits * (blocks - 1 - symbols));
        let base = OuterCode::new(base, blocks - 1, None, &opts).ok()?;
        if base.distance() < 2 {
            continue;
        }
        let n = bits * blocks;
        let shift = |op: &PauliOperator| PauliOperator::identity(bits).tensor(op);
        let mut gens: Vec<PauliOperator> = (0..bits).map(|q| PauliOperator::single_z(q, n)).collect();
        gens.extend(base.code().generators().iter().map(shift));
        let mut logicals: Vec<LogicalPair> = base
            .code()
            .logical_pairs()
            .iter()
            .map(|lp| LogicalPair::new(shift(&lp.x), shift(&lp.z)))
            .collect();
        let mut order: Vec<usize> = (0..blocks).collect();
        order.shuffle(rng);
        let permute = |op: &PauliOperator| {
            let mut out = PauliOperator::identity(n);
            for (from, &to) in order.iter().enumerate() {
                for l in 0..bits {
                    out.set(to * bits + l, op.x_bit(from * bits + l), op.z_bit(from * bits + l));
                }
            }
            out
        };
        gens = gens.iter().map(permute).collect();
        logicals = logicals
            .iter()
            .map(|lp| LogicalPair::new(permute(&lp.x), permute(&lp.z)))
            .collect();
        for _ in 0..4 * n * n {
            let gate = rng.gen_range(0..3u32);
            let block = rng.gen_range(0..blocks);
            let a = block * bits + rng.gen_range(0..bits);
            let b = block * bits + rng.gen_range(0..bits);
            if gate == 2 && a == b {
                continue;
            }
            gens.iter_mut().for_each(|g| conjugate(g, gate, a, b));
            for lp in logicals.iter_mut() {
                conjugate(&mut lp.x, gate, a, b);
                conjugate(&mut lp.z, gate, a, b);
            }
        }
        let code = StabilizerCode::new(n, gens, logicals, None).expect("valid by construction");
        let outer = OuterCode::new(code, blocks, None, &opts).ok()?;
        assert!(outer.is_degenerate(), "frozen block gives a weight-one stabilizer");
        return Some(outer);
    }
    None
}

/// Like [`random_instance`] but with 4 or 5 blocks and a degenerate outer
/// code at a random level.
pub fn random_degenerate_instance<R: Rng>(rng: &mut R, max_log2: usize) -> Instance {
    loop {
        let blocks = rng.gen_range(4..=5);
        let n = rng.gen_range(1..=4);
        let k1 = rng.gen_range(1..=n.min(2));
        let m = rng.gen_range(1..=k1);
        let levels: Vec<usize> = if m == 2 { vec![2, 1, 0] } else { vec![k1, 0] };
        let bits: Vec<usize> = levels.windows(2).map(|w| w[0] - w[1]).collect();
        let degenerate_level = rng.gen_range(0..m);
        let symbols: Vec<usize> = (0..m)
            .map(|i| if i == degenerate_level { 1 } else { rng.gen_range(1..=blocks) })
            .collect();
        let length = n * blocks;
        let dimension: usize = bits.iter().zip(&symbols).map(|(r, k)| r * k).sum();
        if length + dimension > max_log2 {
            continue;
        }
        let base = random_code_mixed(rng, n, n - k1);
        let swaps: Vec<usize> = (0..k1).filter(|_| rng.gen_bool(0.3)).collect();
        let chain = SubcodeChain::build(base, levels.clone(), NestingStrategy::identity().with_swaps(swaps))
            .expect("valid chain");
        let opts = DistanceOptions::default();
        let mut outers = Vec::new();
        for i in 0..m {
            let outer = if i == degenerate_level {
                degenerate_outer(rng, blocks, bits[i], symbols[i])
            } else {
                let code = random_code_mixed(rng, bits[i] * blocks, bits[i] * (blocks - symbols[i]));
                OuterCode::new(code, blocks, None, &opts).ok()
            };
            match outer {
                Some(o) => outers.push(o),
                None => break,
            }
        }
        if outers.len() != m {
            continue;
        }
        let summary = format!(
            "n={n} N={blocks} levels={levels:?} symbols={symbols:?} degenerate level {}",
            degenerate_level + 1
        );
        return Instance {
            chain,
            outers,
            length,
            dimension,
            summary,
        };
    }
}

pub mod suites;
