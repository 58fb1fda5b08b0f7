use std::time::Instant;

use modulilab::algebra::rat::{int, rat};
use modulilab::birational::complete_intersection::segre_pullback_check;
use modulilab::birational::lines::{abcd_primitive, chi_pullback_symbolic};
use modulilab::birational::{
    abcd_from_c, discriminants, limit_check, rho_sigma_identities, segre_identities, verify_chi_vanishing,
    BirationalError, CPoint,
};
use modulilab::strata::{classify_p3, StratumP3};
use modulilab::weyl::{gamma_generators, generate};
use modulilab::{GCoeffs, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn chi_vanishes_symbolically() {
    let t = Instant::now();
    let p = chi_pullback_symbolic();
    assert!(p.is_zero());
    assert!(t.elapsed().as_secs() < 60);
    assert!(verify_chi_vanishing(true, 0, 0).vanishes);
}

#[test]
fn chi_vanishes_at_random_samples() {
    let r = verify_chi_vanishing(false, 200, 11);
    assert!(r.vanishes);
    assert_eq!(r.size, 200);
}

#[test]
fn identity_suite() {
    assert_eq!(rho_sigma_identities(), [true, true, true]);
    assert!(segre_identities());
    assert!(limit_check());
    assert!(segre_pullback_check());
}

#[test]
fn negating_d_is_in_the_group() {
    let group = generate(&gamma_generators()).unwrap();
    let x = GCoeffs::from_ints(2, 3, 5, 7);
    let y = GCoeffs::from_ints(2, 3, 5, -7);
    let neg = GCoeffs::from_ints(-2, -3, -5, 7);
    assert!(group.elements().iter().any(|g| {
        let z = g.act(&x);
        z == y || z == neg
    }));
}

fn random_c(rng: &mut ChaCha8Rng) -> CPoint {
    CPoint(std::array::from_fn(|_| rat(rng.gen_range(-12..=12), rng.gen_range(1..=4))))
}

#[test]
fn disjoint_lines_give_two_nodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut seen = 0;
    while seen < 50 {
        let c = random_c(&mut rng);
        let d = discriminants(&c.0);
        if !d.lines_disjoint() || d.quadric_product == int(0) {
            continue;
        }
        seen += 1;
        let g = abcd_from_c(&c.0);
        assert_eq!(classify_p3(&g).unwrap(), StratumP3::TwoA1, "{c:?}");
    }
}

#[test]
fn lines_on_a_quadric_give_a_singular_curve() {
    // c0c1 = c2c3 puts the lines on a quadric.
    for c in [[2, 3, 1, 6], [1, 6, 2, 3], [3, 4, 2, 6]] {
        let c = CPoint::from_ints(c);
        let d = discriminants(&c.0);
        assert_eq!(d.quadric_product, int(0));
        assert!(d.lines_disjoint(), "{c:?}");
        assert_eq!(classify_p3(&abcd_from_c(&c.0)).unwrap(), StratumP3::Curv, "{c:?}");
    }
}

/// `c1 = c3`; the image is `(−u:u:1:1)` up to sign of `u`.
#[test]
fn c1_equals_c3_regime() {
    let cases: [([i64; 4], StratumP3); 5] = [
        ([3, 2, 1, 2], StratumP3::SixA1),
        ([5, 1, 2, 1], StratumP3::FourA1),
        ([4, 3, 1, 3], StratumP3::FourA1),
        ([1, 2, 3, 2], StratumP3::SixA1),
        ([1, 1, 3, 1], StratumP3::FourA1),
    ];
    for (c, want) in cases {
        let cp = CPoint::from_ints(c);
        let g = abcd_primitive(&cp).unwrap();
        assert_eq!(g.c, g.d);
        assert_eq!(&g.a + &g.b, int(0));
        let s = int(4) * int(c[1] * c[1]);
        let t = int((c[0] + c[2]) * (c[0] + c[2]));
        let u: Rat = (&s - &t) / (&s + &t);
        assert!(g.b == &u * &g.c || g.b == -&u * &g.c, "{c:?}");
        assert_eq!(classify_p3(&g).unwrap(), want, "{c:?}");
    }
}

#[test]
fn worked_example_pipeline() {
    let c = CPoint::from_ints([1, 2, 3, 5]);
    let d = discriminants(&c.0);
    assert_eq!([d.d12.clone(), d.d13.clone(), d.d14.clone()], [int(165), int(845), int(168)]);
    let g = abcd_primitive(&c).unwrap();
    assert_eq!(g, GCoeffs::from_ints(-165, 165, 1517, 173));
    assert_eq!(classify_p3(&g).unwrap(), StratumP3::TwoA1);
    assert!(matches!(
        modulilab::birational::lines_from_c(&CPoint::from_ints([2, 0, -2, 1])),
        Err(BirationalError::DegenerateLines)
    ));
}
