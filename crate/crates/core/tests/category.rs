use std::collections::BTreeSet;

use accordion_core::builtin;
use accordion_core::category::{
    boundary_pair_analysis, build_presented_category, hom_group_type_a, indecomposables_type_a, phi_iso,
    singular_subsets, PresentedCategory, TypeA,
};
use accordion_core::complex::k_groups;
use accordion_core::{Error, Space};

fn compare_with_k_groups(s: &Space, c: &PresentedCategory) {
    let objs = c.objects();
    let mut bad = Vec::new();
    for (i, &y) in objs.iter().enumerate() {
        for (j, &z) in objs.iter().enumerate() {
            let k = k_groups(s, y, z).unwrap().group;
            let h = c.hom_group(i, j);
            if k != h {
                bad.push(format!("{} -> {}: presented {} expected {}", s.set_name(y), s.set_name(z), h.short(), k.short()));
            }
        }
    }
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn hom_groups_match_k_theory_on_supported_spaces() {
    for name in ["X1", "X2", "X3", "X4", "S", "Cn:2", "On:1", "On:3", "W:3,2", "W:2,2,2"] {
        let s = builtin::by_name(name).unwrap();
        let c = build_presented_category(&s).unwrap();
        compare_with_k_groups(&s, &c);
    }
}

#[test]
fn presentation_stabilises_early() {
    for name in ["X3", "S", "Cn:2", "W:2,3"] {
        let c = build_presented_category(&builtin::by_name(name).unwrap()).unwrap();
        assert!(c.stabilisation_level() <= c.objects().len() + 2, "{name}");
    }
}

#[test]
fn unsupported_spaces_are_rejected() {
    for name in ["Cn:3", "Cn:4"] {
        let err = build_presented_category(&builtin::by_name(name).unwrap()).unwrap_err();
        assert!(matches!(err, Error::UnsupportedSpace(_)), "{name}: {err}");
    }
}

#[test]
fn x3_indecomposables_match_diagram() {
    let s = builtin::x3();
    let c = build_presented_category(&s).unwrap();
    let got: BTreeSet<String> = c.indecomposables().iter().map(|&g| c.generators()[g].name(&s)).collect();
    let expected: BTreeSet<String> = [
        "r:123->13", "i:123->1234", "r:123->23", "i:13->134", "r:13->3", "r:1234->134", "r:1234->234",
        "r:23->3", "i:23->234", "r:134->34", "i:3->34", "r:234->34", "d:34->2", "r:34->4", "d:34->1",
        "i:2->123", "d:4->123", "i:1->123",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    assert_eq!(got, expected);
}

#[test]
fn x1_indecomposables_match_diagram() {
    let s = builtin::x1();
    let c = build_presented_category(&s).unwrap();
    let got: BTreeSet<String> = c.indecomposables().iter().map(|&g| c.generators()[g].name(&s)).collect();
    let expected: BTreeSet<String> = [
        "r:1234->234", "r:1234->134", "r:1234->124", "r:234->34", "r:234->24", "r:134->34", "r:134->14",
        "r:124->24", "r:124->14", "r:34->4", "r:24->4", "r:14->4", "d:4->1", "d:4->2", "d:4->3", "i:1->1234",
        "i:2->1234", "i:3->1234",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    assert_eq!(got, expected);
}

#[test]
fn relations_hold_in_presented_category() {
    for name in ["X3", "S", "W:3,2"] {
        let c = build_presented_category(&builtin::by_name(name).unwrap()).unwrap();
        for rel in c.relations() {
            let y = c.object_index(rel.source).unwrap();
            let z = c.object_index(rel.target).unwrap();
            let mut acc = c.zero(y, z);
            for (k, path) in &rel.terms {
                acc = c.add(&acc, &c.scale(*k, &c.apply_path(path, &c.identity(y))));
            }
            assert!(acc.is_zero(), "{name}");
        }
    }
}

#[test]
fn type_a_odd_compositions_vanish() {
    for name in ["On:4", "W:3,2", "W:2,2,2"] {
        let c = build_presented_category(&builtin::by_name(name).unwrap()).unwrap();
        let n = c.objects().len();
        for x in 0..n {
            for y in 0..n {
                for f in c.basis(x, y).iter().filter(|f| !f.odd.iter().all(|&v| v == 0)) {
                    for z in 0..n {
                        for g in c.basis(y, z).iter().filter(|g| !g.odd.iter().all(|&v| v == 0)) {
                            assert!(c.compose(g, f).unwrap().is_zero(), "{name}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn type_a_counts() {
    for name in ["On:2", "On:5", "W:3,2", "W:2,3", "W:1,3", "W:2,2,2", "W:3,3,2", "W:2,2,2,2"] {
        let s = builtin::by_name(name).unwrap();
        let n = s.len();
        let t = TypeA::new(&s).unwrap();
        let fam = indecomposables_type_a(&s).unwrap();
        assert_eq!(fam, t.indecomposables(), "{name}");
        assert_eq!(fam.len(), n * n - 1, "{name}");
        assert_eq!(singular_subsets(&s).unwrap().len(), n + 1, "{name}");
        assert_eq!(t.long_chain().unwrap().len(), n * n - 1, "{name}");
        assert_eq!(s.lc_connected().len(), n * (n + 1) / 2, "{name}");
    }
}

#[test]
fn single_point_is_degenerate() {
    let s = builtin::chain(1).unwrap();
    let t = TypeA::new(&s).unwrap();
    assert!(t.indecomposables().is_empty());
    assert!(t.long_chain().unwrap().is_empty());
    assert_eq!(singular_subsets(&s).unwrap(), vec![s.all()]);
}

#[test]
fn successor_orbit_returns_to_start() {
    let s = builtin::accordion(&[3, 2, 2]).unwrap();
    let t = TypeA::new(&s).unwrap();
    let chain = t.long_chain().unwrap();
    let first = chain[0];
    let mut a = first;
    for (i, expected) in chain.iter().enumerate() {
        assert_eq!(a, *expected, "step {i}");
        a = t.successor(&a).unwrap();
    }
    assert_eq!(a, first);
}

#[test]
fn type_a_formula_matches_presentation() {
    for name in ["On:4", "W:3,2", "W:2,3", "W:2,2,2", "W:1,3"] {
        let s = builtin::by_name(name).unwrap();
        let c = build_presented_category(&s).unwrap();
        for (i, &y) in c.objects().iter().enumerate() {
            for (j, &z) in c.objects().iter().enumerate() {
                assert_eq!(hom_group_type_a(&s, y, z).unwrap(), c.hom_group(i, j), "{name}");
            }
        }
    }
}

#[test]
fn type_a_operations_reject_other_spaces() {
    assert!(matches!(TypeA::new(&builtin::x3()), Err(Error::NotTypeA)));
    assert!(matches!(indecomposables_type_a(&builtin::pseudo_square()), Err(Error::NotTypeA)));
}

#[test]
fn phi_is_an_isomorphism() {
    for name in ["On:1", "On:3", "W:3,2", "W:2,2,2", "W:4,3", "W:2,2,2,2"] {
        let iso = phi_iso(&builtin::by_name(name).unwrap()).unwrap();
        assert!(iso.report.ok(), "{name}: {:?}", iso.report.failures);
    }
}

#[test]
fn boundary_pair_extension_in_chain() {
    let s = builtin::chain(4).unwrap();
    let set = |t: &str| s.parse_set(t).unwrap();
    let r = boundary_pair_analysis(&s, set("3"), set("2"));
    assert!(r.is_pair && !r.complete && r.consistent);
    assert!(r.extensions.contains(&(set("34"), set("12"))));
    let full = boundary_pair_analysis(&s, set("34"), set("12"));
    assert!(full.complete && full.extensions.is_empty());
}

#[test]
fn boundary_pair_sub_pair() {
    let s = Space::from_relations(4, &[(0, 2), (0, 3), (1, 3)]).unwrap();
    let set = |t: &str| s.parse_set(t).unwrap();
    let r = boundary_pair_analysis(&s, set("24"), set("13"));
    assert!(r.is_pair && r.consistent);
    assert!(r.sub_pairs.contains(&(set("4"), set("1"))));
    assert!(!r.reduced);
}

#[test]
fn boundary_criteria_agree_with_search() {
    for name in ["X1", "X2", "X3", "X4", "S", "On:4", "W:2,3", "W:3,2,2"] {
        let s = builtin::by_name(name).unwrap();
        for &y in s.lc_connected() {
            for u in s.relatively_open_subsets(y) {
                let r = boundary_pair_analysis(&s, u, y.difference(u));
                assert!(r.consistent, "{name}");
            }
        }
    }
}

#[test]
fn reduced_criterion_fails_on_cycles() {
    for n in 2..=4 {
        let s = builtin::pseudocircle(n).unwrap();
        let u = s.parse_set("2^0").unwrap();
        let c = s.all().difference(u);
        let r = boundary_pair_analysis(&s, u, c);
        assert!(r.is_pair && r.complete, "C{n}");
        assert!(!r.reduced, "C{n}");
        assert!(r.sub_pairs.is_empty(), "C{n}");
        assert!(!r.consistent, "C{n}");
        assert!(!s.is_connected(c.intersection(s.closure(u))), "C{n}");
    }
}
