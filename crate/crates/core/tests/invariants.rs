use modulilab::algebra::rat::{int, rat};
use modulilab::invariants::{
    four_a1_curve_point, g_form, invariants, phi_chain, phi_chain_coords, quotient_coords, quotient_point,
    square_difference_product, symbolic_gcoeffs,
};
use modulilab::weighted::{wp_equal_in, HRST_WEIGHTS};
use modulilab::weyl::reducible_points;
use modulilab::{wp_equal, GCoeffs, Rat, WeightedPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn wp(c: [Rat; 4]) -> WeightedPoint {
    WeightedPoint::hrst(c).unwrap()
}

#[test]
fn hrst_equals_the_phi_chain_symbolically() {
    let g = symbolic_gcoeffs();
    let q = quotient_coords(&g).unwrap();
    let p = phi_chain_coords(&g).unwrap();
    assert_eq!(q, p);
    assert!(wp_equal_in(&HRST_WEIGHTS, &q, &p));
}

#[test]
fn invariant_degrees() {
    let inv = invariants(&g_form(&symbolic_gcoeffs()).unwrap());
    let degs = [&inv.h, &inv.r, &inv.s, &inv.t].map(|f| f.homogeneous_degree());
    assert_eq!(degs, [Some(2), Some(6), Some(8), Some(12)]);
    assert_eq!(inv.l.homogeneous_degree(), Some(4));
    assert_eq!(inv.m.homogeneous_degree(), Some(4));
    assert_eq!(inv.d.homogeneous_degree(), Some(6));
}

#[test]
fn quotient_matches_phi_chain_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..100 {
        let g = GCoeffs::new(
            rat(rng.gen_range(-30..=30), rng.gen_range(1..=7)),
            rat(rng.gen_range(-30..=30), rng.gen_range(1..=7)),
            rat(rng.gen_range(-30..=30), rng.gen_range(1..=7)),
            rat(rng.gen_range(1..=30), rng.gen_range(1..=7)),
        );
        let (Ok(q), Ok(p)) = (quotient_point(&g), phi_chain(&g)) else {
            continue;
        };
        assert!(wp_equal(&q, &p).unwrap(), "{g:?}");
    }
}

#[test]
fn discriminant_divides_s3_minus_27t2() {
    let g = symbolic_gcoeffs();
    let inv = invariants(&g_form(&g).unwrap());
    let disc = inv.s.powi(3) - inv.t.powi(2).scale_by(&int(27));
    let prod = square_difference_product(&g);
    let q = disc.divide_exact(&prod).unwrap().expect("exact division");
    assert_eq!(q, prod.scale_by(&rat(1, 256)));
}

#[test]
fn reducible_points_map_to_the_red_point() {
    let red = wp([int(2), int(2), int(0), int(0)]);
    let pts = reducible_points();
    assert_eq!(pts.len(), 12);
    for p in pts {
        assert!(wp_equal(&quotient_point(&p).unwrap(), &red).unwrap());
    }
}

#[test]
fn six_node_point() {
    let want = wp([int(2), int(0), rat(4, 3), rat(8, 27)]);
    assert!(wp_equal(&quotient_point(&GCoeffs::from_ints(0, 0, 1, 1)).unwrap(), &want).unwrap());
}

#[test]
fn four_node_curve() {
    for d in [int(2), int(3), rat(1, 2), int(5), int(7)] {
        let g = GCoeffs::new(int(0), int(0), int(1), d.clone());
        let on_curve = four_a1_curve_point(&(&d * &d));
        assert!(wp_equal(&phi_chain(&g).unwrap(), &on_curve).unwrap());
        assert!(wp_equal(&quotient_point(&g).unwrap(), &on_curve).unwrap());
    }
    let off = four_a1_curve_point(&int(5));
    assert!(!wp_equal(&phi_chain(&GCoeffs::from_ints(0, 0, 1, 2)).unwrap(), &off).unwrap());
}
