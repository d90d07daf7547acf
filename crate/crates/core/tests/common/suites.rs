//! Property suites run both as ordinary tests and from the acceptance gate.

use gcqc::{complete_logicals, rank_gf2, NestingStrategy, PauliOperator, StabilizerCode, SubcodeChain};
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{group_elements, random_code_mixed};

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (vec(any::<bool>(), n), vec(any::<bool>(), n)).prop_map(|(x, z)| PauliOperator::from_bits(&x, &z))
}

fn triple() -> impl Strategy<Value = (PauliOperator, PauliOperator, PauliOperator)> {
    (1usize..=130).prop_flat_map(|n| (pauli(n), pauli(n), pauli(n)))
}

/// Symplectic form is symmetric, bilinear and alternating; the group law is
/// associative with every element its own inverse; text round-trips.
pub fn pauli_suite(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&triple(), |(a, b, c)| {
            let f = |u: &PauliOperator, v: &PauliOperator| u.symplectic_product(v).unwrap();
            prop_assert_eq!(f(&a, &b), f(&b, &a));
            prop_assert_eq!(f(&(&a * &b), &c), f(&a, &c) ^ f(&b, &c));
            prop_assert!(!f(&a, &a));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a).is_identity());
            prop_assert!((&a * &b).weight() <= a.weight() + b.weight());
            prop_assert_eq!(a.to_string().parse::<PauliOperator>().unwrap(), a.clone());
            let embedded = b.tensor_embed(1, 3).unwrap();
            prop_assert_eq!(embedded.restrict(b.num_qubits(), b.num_qubits()), b.clone());
            prop_assert_eq!(embedded.weight(), b.weight());
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn code_params() -> impl Strategy<Value = (usize, usize, u64)> {
    (1usize..=8).prop_flat_map(|n| (Just(n), 0..=n, any::<u64>()))
}

/// Completed logicals pair up: X̄_i Z̄_j anticommute exactly when i = j,
/// like-type logicals commute, everything commutes with the stabilizer and
/// generators plus logicals are independent.
pub fn stabilizer_suite(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&code_params(), |(n, s, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let scrambled = random_code_mixed(&mut rng, n, s);
            let gens = scrambled.generators().to_vec();
            let pairs = complete_logicals(n, &gens).unwrap();
            prop_assert_eq!(pairs.len(), n - s);
            for (i, a) in pairs.iter().enumerate() {
                for g in &gens {
                    prop_assert!(a.x.commutes_with(g).unwrap() && a.z.commutes_with(g).unwrap());
                }
                for (j, b) in pairs.iter().enumerate() {
                    prop_assert_eq!(a.x.commutes_with(&b.z).unwrap(), i != j);
                    prop_assert!(a.x.commutes_with(&b.x).unwrap());
                    prop_assert!(a.z.commutes_with(&b.z).unwrap());
                }
            }
            let mut all = gens.clone();
            all.extend(pairs.iter().flat_map(|lp| [lp.x.clone(), lp.z.clone()]));
            prop_assert_eq!(rank_gf2(&all), s + 2 * (n - s));
            let code = StabilizerCode::new(n, gens, pairs, None).unwrap();
            for lp in code.logical_pairs() {
                prop_assert!(code.in_normalizer(&lp.x) && !code.in_stabilizer_group(&lp.x));
            }
            if n <= 5 {
                let group = group_elements(n, code.generators());
                prop_assert_eq!(group.len(), 1usize << s);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

/// Subcodes nest, have rank n - k_i, and each coset code encodes
/// k_i - k_{i+1} qubits with `rank(stabilizers) + 2 r_i == n + r_i`.
pub fn partition_suite(cases: u32) -> Result<(), String> {
    let params = (1usize..=7).prop_flat_map(|n| (Just(n), 1..=n, any::<u64>()));
    runner(cases)
        .run(&params, |(n, k1, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let base = random_code_mixed(&mut rng, n, n - k1);
            let mut levels: Vec<usize> = (0..k1).filter(|_| rng.gen_bool(0.5)).collect();
            levels.push(k1);
            levels.sort_unstable_by(|a, b| b.cmp(a));
            let mut order: Vec<usize> = (0..k1).collect();
            order.shuffle(&mut rng);
            let swaps: Vec<usize> = (0..k1).filter(|_| rng.gen_bool(0.5)).collect();
            let strategy = NestingStrategy::identity().with_ordering(order).with_swaps(swaps);
            let chain = SubcodeChain::build(base, levels.clone(), strategy).unwrap();
            let m = chain.num_levels();
            prop_assert_eq!(chain.fully_descends(), *levels.last().unwrap() == 0);

            let mut previous: Option<StabilizerCode> = None;
            for i in 1..=m + 1 {
                let sub = chain.subcode(i).unwrap();
                prop_assert_eq!(rank_gf2(sub.generators()), n - levels[i - 1]);
                prop_assert_eq!(sub.k(), levels[i - 1]);
                if let Some(prev) = &previous {
                    for g in prev.generators() {
                        prop_assert!(sub.in_stabilizer_group(g));
                    }
                }
                previous = Some(sub);
            }
            for i in 1..=m {
                let r = levels[i - 1] - levels[i];
                let coset = chain.coset_code(i).unwrap();
                prop_assert_eq!(coset.qubits(), r);
                prop_assert_eq!(rank_gf2(coset.stabilizers()) + 2 * r, n + r);
                let sub = chain.subcode(i).unwrap();
                for lp in coset.logical_pairs() {
                    prop_assert!(sub.in_normalizer(&lp.x) && sub.in_normalizer(&lp.z));
                    prop_assert!(!sub.in_stabilizer_group(&lp.x) && !sub.in_stabilizer_group(&lp.z));
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}
