use modulilab::algebra::matrix::det;
use modulilab::algebra::rat::{int, rat};
use modulilab::stability::{integrate_poly, presets, preset_report, upoly, Preset};
use modulilab::strata::classify_p3;
use modulilab::weyl::{act, gamma_generators};
use modulilab::{wp_equal, FpElem, GCoeffs, MPoly, QPoly, Rat, Scalar, Vars, WeightedPoint};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn vars() -> Vars {
    Vars::new(&["x", "y", "z"])
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), small_rat()), 0..5).prop_map(|terms| {
        MPoly::from_terms(&vars(), terms.into_iter().map(|((a, b, c), q)| (vec![a, b, c], q))).unwrap()
    })
}

fn nonzero_poly() -> impl Strategy<Value = QPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &MPoly::one(&vars()), f.clone());
    }

    #[test]
    fn composition_is_a_homomorphism(f in poly(), g in poly(), a in poly(), b in poly(), c in poly()) {
        let v = vars();
        let imgs = [a, b, c];
        let comp = |p: &QPoly| p.compose(&imgs, &v).unwrap();
        prop_assert_eq!(comp(&(&f * &g)), &comp(&f) * &comp(&g));
        prop_assert_eq!(comp(&(&f + &g)), &comp(&f) + &comp(&g));
    }

    #[test]
    fn leibniz(f in poly(), g in poly(), i in 0usize..3) {
        prop_assert_eq!((&f * &g).partial_at(i), &(&f.partial_at(i) * &g) + &(&f * &g.partial_at(i)));
    }

    #[test]
    fn exact_division(f in poly(), g in nonzero_poly()) {
        prop_assert_eq!((&f * &g).divide_exact(&g).unwrap(), Some(f));
    }

    #[test]
    fn evaluation_is_a_homomorphism(f in poly(), g in poly(), x in prop::array::uniform3(small_rat())) {
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
    }

    #[test]
    fn det_is_multiplicative(
        a in prop::collection::vec(prop::collection::vec(-5i64..=5, 5), 5),
        b in prop::collection::vec(prop::collection::vec(-5i64..=5, 5), 5),
    ) {
        let m = |x: &Vec<Vec<i64>>| -> Vec<Vec<Rat>> { x.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect() };
        let (ma, mb) = (m(&a), m(&b));
        let prod: Vec<Vec<Rat>> = (0..5)
            .map(|i| (0..5).map(|j| (0..5).fold(Rat::zero(), |acc, k| acc + &ma[i][k] * &mb[k][j])).collect())
            .collect();
        prop_assert_eq!(det(&prod).unwrap(), det(&ma).unwrap() * det(&mb).unwrap());
        let small: Vec<Vec<Rat>> = ma[..3].iter().map(|r| r[..3].to_vec()).collect();
        let t: Vec<Vec<Rat>> = (0..3).map(|i| (0..3).map(|j| small[j][i].clone()).collect()).collect();
        prop_assert_eq!(det(&t).unwrap(), det(&small).unwrap());
    }

    #[test]
    fn prime_field_axioms(a in 0u64..13, b in 1u64..13, c in 0u64..13) {
        let f = |x| FpElem::new(x, 13).unwrap();
        prop_assert_eq!(f(a) * (f(b) + f(c)), f(a) * f(b) + f(a) * f(c));
        prop_assert_eq!(f(b) * f(b).inv().unwrap(), f(1));
        prop_assert_eq!(f(a) - f(a), f(0));
    }

    #[test]
    fn wp_equal_is_an_equivalence(
        c in prop::array::uniform4(small_rat()).prop_filter("nonzero", |c| c.iter().any(|x| !x.is_zero())),
        l1 in small_rat().prop_filter("nonzero", |x| !x.is_zero()),
        l2 in small_rat().prop_filter("nonzero", |x| !x.is_zero()),
    ) {
        let p = WeightedPoint::hrst(c).unwrap();
        let q = p.rescale(&l1);
        let r = q.rescale(&l2);
        prop_assert!(wp_equal(&p, &p).unwrap());
        prop_assert!(wp_equal(&p, &q).unwrap());
        prop_assert!(wp_equal(&q, &p).unwrap());
        prop_assert!(wp_equal(&p, &r).unwrap());
    }

    #[test]
    fn integration_matches_dense_monomials(coeffs in prop::collection::vec(-20i64..=20, 0..7), lo in small_rat(), w in 1i64..5) {
        let hi = &lo + int(w);
        let f = upoly(&coeffs);
        let dense = coeffs.iter().enumerate().fold(Rat::zero(), |acc, (k, &c)| {
            let pw = |x: &Rat| (0..=k).fold(Rat::one(), |a, _| a * x);
            acc + int(c) * (pw(&hi) - pw(&lo)) / int(k as i64 + 1)
        });
        prop_assert_eq!(integrate_poly(&f, &lo, &hi), dense);
    }

    #[test]
    fn strata_are_invariant_under_generators(c in prop::array::uniform4(-4i64..=4)) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let g = GCoeffs::from_ints(c[0], c[1], c[2], c[3]);
        let s = classify_p3(&g).unwrap();
        for h in gamma_generators() {
            prop_assert_eq!(classify_p3(&act(&h, &g).unwrap()).unwrap(), s);
        }
    }
}

#[test]
fn every_preset_below_one_has_positive_beta() {
    for (name, p) in presets() {
        if matches!(p, Preset::Constant(_)) {
            continue;
        }
        let r = preset_report(name).unwrap();
        if r.s_value < Rat::one() {
            assert!(modulilab::stability::beta_value(&int(1), &r.s_value) > Rat::zero(), "{name}");
        }
    }
}
