mod common;

use common::{naive_distance, p, pair, ps, random_instance};
use gcqc::cli::CodeSpec;
use gcqc::{
    build_gcqc, lift_operator, min_weight_in_group, rank_gf2, BuildOptions, DistanceOptions, NestingStrategy,
    OuterCode, StabilizerCode, SubcodeChain, WeightKind,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixture(name: &str) -> CodeSpec {
    let path = format!("{}/fixtures/{name}.spec", env!("CARGO_MANIFEST_DIR"));
    CodeSpec::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn build_fixture(name: &str) -> gcqc::GcqcResult {
    let spec = fixture(name);
    let opts = DistanceOptions::default();
    let build = BuildOptions {
        exact_distance: true,
        ..BuildOptions::default()
    };
    build_gcqc(&spec.chain().unwrap().unwrap(), &spec.outer_codes(&opts).unwrap(), &build).unwrap()
}

#[test]
fn fixtures_have_expected_parameters() {
    let cases = [
        ("example1", (8, 3), 2, 2, None),
        ("example2", (20, 6), 1, 1, Some(1)),
        ("discussion", (4, 1), 2, 1, None),
        ("discussion_noswap", (4, 1), 1, 1, None),
    ];
    for (name, params, d, bound, mu) in cases {
        let res = build_fixture(name);
        assert_eq!(res.params(), params, "{name}");
        assert_eq!(res.exact_distance(), Some(d), "{name}");
        assert_eq!(res.bound.value, bound, "{name}");
        assert_eq!(res.mu(), mu, "{name}");
    }
}

#[test]
fn swapped_nesting_stabilizer_span() {
    let res = build_fixture("discussion");
    let expected = ps(&["ZZII", "IIZZ", "XXXX"]);
    let mut joined = res.code.generators().to_vec();
    assert_eq!(rank_gf2(&joined), 3);
    joined.extend(expected.iter().cloned());
    assert_eq!(rank_gf2(&joined), 3);
}

#[test]
fn small_fixture_distances_match_naive_scan() {
    for name in ["discussion", "discussion_noswap", "example1"] {
        let res = build_fixture(name);
        assert_eq!(naive_distance(&res.code), res.exact_distance(), "{name}");
    }
}

#[test]
fn logicals_match_lifted_form() {
    let res = build_fixture("example1");
    let lifted: Vec<_> = res.levels.iter().flat_map(|l| l.lifted_logicals.iter().cloned()).collect();
    assert_eq!(lifted.as_slice(), res.code.logical_pairs());
    assert_eq!(res.levels[0].lifted_generators, ps(&["ZZIIZZII"]));
}

#[test]
fn outer_trivial_level_reproduces_inner_copies() {
    let base = StabilizerCode::new(4, ps(&["XXXX", "ZZZZ"]), vec![pair("XIXI", "ZZII"), pair("XXII", "ZIZI")], None)
        .unwrap();
    let chain = SubcodeChain::build(base, vec![2, 0], NestingStrategy::identity()).unwrap();
    let res = build_gcqc(&chain, &[OuterCode::trivial(3, 2)], &BuildOptions::default()).unwrap();
    assert_eq!(res.params(), (12, 6));
    assert_eq!(res.code.generators(), res.s_i_part.as_slice());
    assert_eq!(res.bound.value, 2);
}

#[test]
fn outer_degeneracy_flags() {
    let spec = fixture("example2");
    let outers = spec.outer_codes(&DistanceOptions::default()).unwrap();
    assert!(outers[0].is_degenerate());
    assert_eq!(outers[0].min_stabilizer().unwrap().weight, 1);
    assert!(!outers[1].is_degenerate());
    let group = min_weight_in_group(outers[0].code().generators(), WeightKind::Qubit, 1 << 10)
        .unwrap()
        .unwrap();
    assert_eq!(group.weight, 1);
    assert_eq!(group.witness, p("XIIII"));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn random_builds_satisfy_counting_and_bound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, 16);
        let build = BuildOptions { exact_distance: true, ..BuildOptions::default() };
        let res = build_gcqc(&inst.chain, &inst.outers, &build).unwrap();
        let n = inst.chain.n();
        let k1 = inst.chain.level_ks()[0];
        prop_assert_eq!(res.params(), (inst.length, inst.dimension));
        prop_assert_eq!(rank_gf2(res.code.generators()), inst.length - inst.dimension);
        prop_assert_eq!(rank_gf2(&res.s_i_part), (n - k1) * res.blocks);
        prop_assert_eq!(rank_gf2(res.code.generators()) + 2 * inst.dimension, inst.length + inst.dimension);
        let exact = res.exact_distance().unwrap();
        prop_assert!(exact >= res.bound.value, "{}: exact {} < bound {}", inst.summary, exact, res.bound.value);
    }

    #[test]
    fn lifting_is_linear(seed in any::<u64>(), a in any::<u64>(), b in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(&mut rng, 16);
        let blocks = inst.outers[0].blocks();
        for level in 1..=inst.chain.num_levels() {
            let coset = inst.chain.coset_code(level).unwrap();
            let q = coset.qubits() * blocks;
            let op = |bits: u64| {
                let x: Vec<bool> = (0..q).map(|i| (bits >> (i % 32)) & 1 == 1).collect();
                let z: Vec<bool> = (0..q).map(|i| (bits >> (32 + i % 32)) & 1 == 1).collect();
                gcqc::PauliOperator::from_bits(&x, &z)
            };
            let (g, h) = (op(a), op(b));
            let lhs = lift_operator(&(&g * &h), &coset, blocks).unwrap();
            let rhs = &lift_operator(&g, &coset, blocks).unwrap() * &lift_operator(&h, &coset, blocks).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
