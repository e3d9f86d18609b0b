use accordion_core::builtin;
use accordion_core::complex::{chain_min_max, invariant_chain, k_groups, order_complex, GradedAbelianGroup};

#[test]
fn order_complex_of_a_chain_is_a_simplex() {
    for n in 1..=6 {
        let k = order_complex(&builtin::chain(n).unwrap());
        assert_eq!(k.count(), (1 << n) - 1);
        assert_eq!(k.dim(), Some(n - 1));
        assert!(k.is_closed());
    }
}

#[test]
fn order_complex_of_a_cycle_has_no_triangles() {
    let k = order_complex(&builtin::pseudocircle(3).unwrap());
    assert_eq!(k.dim(), Some(1));
    assert_eq!(k.count(), 12);
}

#[test]
fn chain_endpoints() {
    let s = builtin::chain(4).unwrap();
    let c = s.parse_set("124").unwrap();
    assert_eq!(chain_min_max(&s, c), (0, 3));
}

#[test]
fn identities_give_z_on_the_diagonal() {
    for name in ["X1", "X2", "X3", "X4", "S", "W:3,2", "W:2,2,2"] {
        let s = builtin::by_name(name).unwrap();
        for &y in s.lc_connected() {
            let k = k_groups(&s, y, y).unwrap();
            assert_eq!(k.group, GradedAbelianGroup::free(1, 0), "{name} {}", s.set_name(y));
            assert!(!k.degenerate);
        }
    }
}

#[test]
fn whole_pseudocircle_is_a_circle() {
    let s = builtin::pseudocircle(2).unwrap();
    let k = k_groups(&s, s.all(), s.all()).unwrap();
    assert_eq!(k.group, GradedAbelianGroup::free(1, 1));
}

#[test]
fn unrelated_pieces_vanish() {
    let s = builtin::x1();
    let g = k_groups(&s, s.parse_set("1").unwrap(), s.parse_set("2").unwrap()).unwrap();
    assert!(g.group.is_zero());
}

#[test]
fn invariant_factors() {
    assert_eq!(invariant_chain(&[2, 3]), vec![6]);
    assert_eq!(invariant_chain(&[4, 2]), vec![2, 4]);
    assert_eq!(invariant_chain(&[1, 6, 4]), vec![2, 12]);
}

#[test]
fn short_notation() {
    assert_eq!(GradedAbelianGroup::free(0, 2).short(), "1²");
    assert_eq!(GradedAbelianGroup::free(1, 0).to_string(), "ℤ[0]");
    assert_eq!(GradedAbelianGroup::default().short(), "0");
    assert_eq!(GradedAbelianGroup::free(1, 0).shift(), GradedAbelianGroup::free(0, 1));
}
