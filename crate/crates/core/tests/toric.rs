mod common;

use std::collections::BTreeSet;

use polyprime::classify::{find_l_configurations, find_ladders};
use polyprime::ideals::{check_containment, inner_minors, toric_map_lconfig, toric_map_marked, ToricMap};
use polyprime::shapes::{diamond16, frame3, ring22};
use polyprime::toric::*;
use polyprime::{Cell, Polyomino};
use polyprime_algebra::{
    buchberger, ideal_equal, saturate, toric_ideal_of_matrix, Binomial, Budget, IntMatrix, Monomial, MonomialOrder,
};

fn phi_rows(phi: &ToricMap) -> Vec<Vec<i64>> {
    (0..phi.ntarget())
        .map(|t| phi.images().iter().map(|m| m.exponent(t) as i64).collect())
        .collect()
}

fn bin(p: &[u32], m: &[u32]) -> Binomial {
    Binomial::new(Monomial::new(p.to_vec()), Monomial::new(m.to_vec())).unwrap()
}

#[test]
fn twisted_cubic_reduced_basis() {
    let rows = vec![vec![3, 2, 1, 0], vec![0, 1, 2, 3]];
    let a = IntMatrix::<polyprime_algebra::BigInt>::from_i64_rows(&rows).unwrap();
    let order = MonomialOrder::degrevlex(4);
    let gb = toric_ideal_of_matrix(&a, &order, &Budget::unlimited()).unwrap();
    let expected = buchberger(
        &[bin(&[1, 0, 0, 1], &[0, 1, 1, 0]), bin(&[0, 2, 0, 0], &[1, 0, 1, 0]), bin(&[0, 0, 2, 0], &[0, 1, 0, 1])],
        &order,
        &Budget::unlimited(),
    )
    .unwrap();
    assert_eq!(gb.generators, expected.generators);
    assert_eq!(gb.len(), 3);
    assert!(common::kernel_completeness(&gb, common::matrix_image(&rows), 4).unwrap() > 0);
}

#[test]
fn rectangles_have_toric_minor_ideals() {
    for w in 1..=3 {
        for h in 1..=3 {
            let p = Polyomino::rectangle(Cell::new(0, 0), w, h).unwrap();
            let phi = toric_map_marked(&p, &BTreeSet::new()).unwrap();
            let j = toric_ideal(&phi, &Budget::unlimited()).unwrap();
            let i = polyomino_ideal(&p, &Budget::unlimited()).unwrap();
            assert_eq!(i.generators, j.generators, "{w}x{h}");
            common::kernel_completeness(&j, common::matrix_image(&phi_rows(&phi)), 4).unwrap();
        }
    }
}

#[test]
fn square_minors_kill_kernel_binomials_of_degree_four() {
    let p = Polyomino::rectangle(Cell::new(0, 0), 2, 2).unwrap();
    assert_eq!(inner_minors(&p).len(), 9);
    let phi = toric_map_marked(&p, &BTreeSet::new()).unwrap();
    let order = MonomialOrder::degrevlex(phi.ring().nvars());
    let gb = buchberger(&inner_minors(&p), &order, &Budget::unlimited()).unwrap();
    common::kernel_completeness(&gb, common::matrix_image(&phi_rows(&phi)), 4).unwrap();
}

#[test]
fn frame3_toric_ideal_is_complete_and_saturated() {
    let p = frame3();
    let l = &find_l_configurations(&p)[0];
    let phi = toric_map_lconfig(&p, l).unwrap();
    assert_eq!(phi.ring().nvars(), 16);
    assert_eq!(phi.ntarget(), 9);
    let j = toric_ideal(&phi, &Budget::unlimited()).unwrap();
    common::kernel_completeness(&j, common::matrix_image(&phi_rows(&phi)), 4).unwrap();
    for var in 0..16 {
        let sat = saturate(&j.generators, var, &Budget::unlimited()).unwrap();
        assert!(sat.iter().all(|g| j.contains(g)));
    }
    let order = MonomialOrder::degrevlex(16);
    assert!(ideal_equal(&inner_minors(&p), &j.generators, &order, &Budget::unlimited()).unwrap());
}

#[test]
fn buchberger_is_deterministic() {
    let p = frame3();
    let order = MonomialOrder::degrevlex(16);
    let mut gens = inner_minors(&p);
    let a = buchberger(&gens, &order, &Budget::unlimited()).unwrap();
    gens.reverse();
    let b = buchberger(&gens, &order, &Budget::unlimited()).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn verdict_does_not_depend_on_the_chosen_l_configuration() {
    let p = frame3();
    for l in find_l_configurations(&p) {
        let phi = toric_map_lconfig(&p, &l).unwrap();
        assert!(check_containment(&p, &phi));
        let v = certify_with_map(&p, &phi, Proof::LConfigToric, &Budget::unlimited()).unwrap();
        assert!(matches!(v, PrimalityVerdict::Prime { certificate: Certificate::Full { .. }, .. }));
    }
}

#[test]
fn ring22_ladder_containment() {
    let p = ring22();
    assert!(find_l_configurations(&p).is_empty());
    let ladders = find_ladders(&p, 3);
    assert!(!ladders.is_empty());
    for ladder in &ladders {
        let phi = polyprime::ideals::toric_map_ladder(&p, ladder).unwrap();
        assert!(check_containment(&p, &phi));
    }
}

#[test]
fn diamond_is_not_prime() {
    let v = certify_primality(&diamond16(), &Budget::unlimited()).unwrap();
    match v {
        PrimalityVerdict::NonPrime { witness } => {
            assert!(polyprime::zigzag::verify_zigzag(&diamond16(), &witness));
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn simple_polyominoes_are_prime() {
    let l = Polyomino::from_coords(&[(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)]).unwrap();
    let v = certify_primality(&l, &Budget::unlimited()).unwrap();
    assert!(matches!(
        v,
        PrimalityVerdict::Prime {
            proof: Proof::SimpleToric,
            certificate: Certificate::Full { .. },
            ..
        }
    ));
}
