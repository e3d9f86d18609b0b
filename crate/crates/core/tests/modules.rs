use accordion_core::builtin;
use accordion_core::category::build_presented_category;
use accordion_core::complex::GradedAbelianGroup;
use accordion_core::matrix::smith;
use accordion_core::modules::{certify_free, counterexample_pipeline, module_hom_space, verify_properties, NTModule};

fn z0() -> GradedAbelianGroup {
    GradedAbelianGroup::free(1, 0)
}

fn z1() -> GradedAbelianGroup {
    GradedAbelianGroup::free(0, 1)
}

#[test]
fn x3_pipeline_entries() {
    let s = builtin::x3();
    let c = build_presented_category(&s).unwrap();
    let y = c.object_index(s.parse_set("34").unwrap()).unwrap();
    let r = counterexample_pipeline(&c, y, 2).unwrap();
    let p0: Vec<String> = r.summary().p0;
    assert_eq!(p0.len(), 3);
    for name in ["P134", "P3", "P234"] {
        assert!(p0.contains(&name.to_string()), "{p0:?}");
    }
    let expected = [
        ("134", z0()),
        ("13", GradedAbelianGroup::default()),
        ("1234", GradedAbelianGroup::default()),
        ("23", GradedAbelianGroup::default()),
        ("123", z1()),
        ("3", z0()),
        ("234", z0()),
        ("34", GradedAbelianGroup::free(2, 0)),
        ("4", z0()),
        ("1", z1()),
        ("2", z1()),
    ];
    for (name, g) in expected {
        let z = c.object_index(s.parse_set(name).unwrap()).unwrap();
        assert_eq!(r.m_entry(z), g, "M({name})");
    }
    assert!(r.j_injective && r.m_entry_free && r.m_exact && r.hom_p0_py_zero);
    assert!(r.resolution_exact && r.m_k_exact);
    assert_eq!(r.ext2_order, 2);
}

#[test]
fn x3_ext2_has_order_k() {
    let s = builtin::x3();
    let c = build_presented_category(&s).unwrap();
    let y = c.object_index(s.parse_set("34").unwrap()).unwrap();
    for k in 2..=12 {
        let r = counterexample_pipeline(&c, y, k).unwrap();
        assert_eq!(r.ext2_order, k as u64, "k = {k}");
        assert!(r.resolution_exact, "k = {k}");
    }
}

#[test]
fn x1_pipeline_passes() {
    let s = builtin::x1();
    let c = build_presented_category(&s).unwrap();
    let y = c.object_index(s.parse_set("4").unwrap()).unwrap();
    let r = counterexample_pipeline(&c, y, 3).unwrap();
    let mut p0 = r.summary().p0;
    p0.sort();
    assert_eq!(p0, ["P14", "P24", "P34"]);
    assert!(r.m_entry_free && r.m_exact && r.resolution_exact);
    assert_eq!(r.ext2_order, 3);
}

#[test]
fn c2_pipeline_doubles_coordinates() {
    let s = builtin::pseudocircle(2).unwrap();
    let f = s.all().difference(s.parse_set("2^1,1^0,2^0").unwrap());
    assert_eq!(f, s.parse_set("1^1").unwrap());
    let c = build_presented_category(&s).unwrap();
    let y = c.object_index(f).unwrap();
    let r = counterexample_pipeline(&c, y, 2).unwrap();
    assert_eq!(r.p0_summands.len(), 2);
    assert!(r.m_entry_free && r.m_exact && r.resolution_exact);
    assert_eq!(r.ext2_order, 2);
    let z = c.object_index(s.all().difference(f)).unwrap();
    let d = (0..2).find(|&d| r.j.component(z, d).cols() == 2).expect("rank two entry");
    assert_eq!(r.j.component(z, d).rows(), 4);
    for b in r.j_blocks(z, d) {
        assert_eq!(b.rows(), 2);
        assert!(smith(&b).diagonal().iter().all(|x| x.abs() == 1));
    }
}

#[test]
fn free_modules_are_exact_and_certified() {
    for name in ["X1", "X3", "On:3", "W:2,2"] {
        let s = builtin::by_name(name).unwrap();
        let c = build_presented_category(&s).unwrap();
        for y in 0..c.objects().len() {
            for shift in 0..2 {
                let p = NTModule::free(&c, y, shift);
                assert!(p.satisfies_relations(), "{name}");
                assert!(p.is_exact(), "{name} P{}", s.set_name(c.object(y)));
                assert_eq!(certify_free(&p), Some(vec![(y, shift)]));
            }
        }
    }
}

#[test]
fn hom_space_examples() {
    let s = builtin::x3();
    let c = build_presented_category(&s).unwrap();
    let y = c.object_index(s.parse_set("123").unwrap()).unwrap();
    let p = NTModule::free(&c, y, 0);
    let h = module_hom_space(&p, &p);
    assert_eq!(h.moduli, vec![0]);
}

#[test]
fn properties_hold() {
    for name in ["X3", "On:1", "On:4", "W:2,3"] {
        let c = build_presented_category(&builtin::by_name(name).unwrap()).unwrap();
        let r = verify_properties(&c);
        assert!(r.prop1 && r.prop2, "{name}: {r:?}");
    }
}

mod common;

use accordion_core::complex::invariant_chain;
use accordion_core::MonotoneMap;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn group_from_moduli(moduli: &[i64]) -> (usize, Vec<u64>) {
    let rank = moduli.iter().filter(|&&m| m == 0).count();
    let torsion: Vec<u64> = moduli.iter().filter(|&&m| m != 0).map(|&m| m as u64).collect();
    (rank, invariant_chain(&torsion))
}

fn shape(seed: u64) -> &'static str {
    ["On:2", "On:3", "W:2,2", "On:4", "W:3,2", "W:2,3", "W:2,2,2", "On:5"][(seed % 8) as usize]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn nakayama(seed in any::<u64>(), gens in 0usize..=3, rels in 0usize..=3) {
        let name = ["X3", "X1", "W:3,2", "On:4", "S"][(seed % 5) as usize];
        let c = build_presented_category(&builtin::by_name(name).unwrap()).unwrap();
        let m = common::random_module(&mut ChaCha8Rng::seed_from_u64(seed), &c, gens, rels);
        prop_assert!(m.satisfies_relations());
        let ss_zero = m.ss_quotient().iter().all(|g| g.is_zero());
        prop_assert_eq!(ss_zero, m.is_zero());
    }

    #[test]
    fn projective_iff_certified_free(seed in any::<u64>(), gens in 1usize..=3, rels in 0usize..=2) {
        let c = build_presented_category(&builtin::by_name(shape(seed)).unwrap()).unwrap();
        let m = common::random_module(&mut ChaCha8Rng::seed_from_u64(seed), &c, gens, rels);
        let projective = m.is_projective_type_a().unwrap();
        let certified = certify_free(&m);
        prop_assert_eq!(projective, certified.is_some());
        if let Some(summands) = certified {
            let rank: usize = (0..m.object_count()).map(|z| m.dim(z, 0) + m.dim(z, 1)).sum();
            let free_rank: usize = summands
                .iter()
                .map(|&(y, d)| { let p = NTModule::free(&c, y, d); (0..p.object_count()).map(|z| p.dim(z, 0) + p.dim(z, 1)).sum::<usize>() })
                .sum();
            prop_assert_eq!(rank, free_rank);
        }
    }

    #[test]
    fn free_sums_are_certified(seed in any::<u64>(), k in 1usize..=4) {
        let c = build_presented_category(&builtin::by_name(shape(seed)).unwrap()).unwrap();
        let (m, mut summands) = common::random_free(&mut ChaCha8Rng::seed_from_u64(seed), &c, k);
        prop_assert!(m.is_exact());
        let mut got = certify_free(&m).unwrap();
        got.sort();
        summands.sort();
        prop_assert_eq!(got, summands);
    }

    #[test]
    fn yoneda(seed in any::<u64>(), rels in 0usize..=2) {
        let name = ["X3", "W:2,2", "On:3"][(seed % 3) as usize];
        let c = build_presented_category(&builtin::by_name(name).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = common::random_module(&mut rng, &c, 2, rels);
        let y = (seed >> 8) as usize % c.objects().len();
        let h = module_hom_space(&NTModule::free(&c, y, 0), &m);
        prop_assert_eq!(group_from_moduli(&h.moduli), group_from_moduli(m.moduli(y, 0)));
    }
}

#[test]
fn torsion_entry_blocks_certification() {
    let seed = 6806023628515535361;
    let c = build_presented_category(&builtin::by_name(shape(seed)).unwrap()).unwrap();
    let m = common::random_module(&mut ChaCha8Rng::seed_from_u64(seed), &c, 1, 1);
    assert!(!m.is_entry_free());
    assert_eq!(certify_free(&m), None);
}

#[test]
fn torsion_quotients_are_not_projective() {
    let c = build_presented_category(&builtin::by_name("W:3,2").unwrap()).unwrap();
    for y in 0..c.objects().len() {
        let p = NTModule::free(&c, y, 0);
        assert!(p.is_projective_type_a().unwrap());
        assert!(!p.quotient_by_multiple(2).is_projective_type_a().unwrap());
        let q = NTModule::free(&c, (y + 1) % c.objects().len(), 1);
        let (sum, _) = NTModule::direct_sum(&c, &[&p, &q]);
        assert!(sum.is_projective_type_a().unwrap());
    }
    let x3 = build_presented_category(&builtin::x3()).unwrap();
    assert!(NTModule::free(&x3, 0, 0).is_projective_type_a().is_err());
}

#[test]
fn semisimple_part_of_a_free_module_sits_at_its_generator() {
    let c = build_presented_category(&builtin::x3()).unwrap();
    for y in 0..c.objects().len() {
        let ss = NTModule::free(&c, y, 1).ss_quotient();
        for (z, g) in ss.iter().enumerate() {
            assert_eq!(*g, if z == y { z1() } else { GradedAbelianGroup::default() });
        }
    }
}

#[test]
fn pushforward_along_identity_and_collapse() {
    let s = builtin::x3();
    let c = build_presented_category(&s).unwrap();
    let m = common::random_module(&mut ChaCha8Rng::seed_from_u64(7), &c, 3, 2);
    assert!(!m.is_zero());
    let same = m.pushforward(&MonotoneMap::identity(&s), &c);
    for z in 0..c.objects().len() {
        assert_eq!(same.moduli(z, 0), m.moduli(z, 0));
        assert_eq!(same.moduli(z, 1), m.moduli(z, 1));
    }
    for g in 0..c.generators().len() {
        assert_eq!(same.action(g, 0), m.action(g, 0));
        assert_eq!(same.action(g, 1), m.action(g, 1));
    }
    let point = builtin::chain(1).unwrap();
    let pc = build_presented_category(&point).unwrap();
    let collapse = MonotoneMap::new(s.clone(), point, vec![0; 4]).unwrap();
    let global = m.pushforward(&collapse, &pc);
    assert_eq!(global.entry(0), m.entry(c.object_index(s.all()).unwrap()));
}

#[test]
fn perturbed_free_module_is_not_exact() {
    let c = build_presented_category(&builtin::by_name("On:3").unwrap()).unwrap();
    let s = c.space();
    let y = c.object_index(s.all()).unwrap();
    let p = NTModule::free(&c, y, 0);
    let moduli = (0..c.objects().len()).map(|z| [p.moduli(z, 0).to_vec(), p.moduli(z, 1).to_vec()]).collect();
    let act = (0..c.generators().len())
        .map(|g| [p.action(g, 0).scale(&0), p.action(g, 1).scale(&0)])
        .collect();
    let broken = NTModule::new(&c, moduli, act).unwrap();
    assert!(broken.satisfies_relations());
    let failure = broken.exactness_failure().expect("zero actions break exactness");
    assert!(s.is_relatively_open(failure.u, failure.y));
}

