//! Property-based tests for the exact layers: reflection geometry, the
//! affine substitution group, and the symbolic radial calculus.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use kafourier::kappa::{kappa_radial, KappaParams};
use kafourier::radial::ExpMonomial;
use kafourier::roots::reflect;
use kafourier::scalar::GaussianRational;
use kafourier::sl2::{radial_apply, RadialOperatorSpec, Sl2Element};

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    (prop_oneof![-9i64..=-1, 1i64..=9], 1i64..=6)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn positive_rational() -> impl Strategy<Value = BigRational> {
    (1i64..=9, 1i64..=6).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn vector(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    proptest::collection::vec(rational(), n)
}

fn nonzero_vector(n: usize) -> impl Strategy<Value = Vec<BigRational>> {
    vector(n).prop_filter("nonzero", |v| v.iter().any(|c| !num_traits::Zero::is_zero(c)))
}

/// A random class member with a fixed decay exponent family.
fn class_function() -> impl Strategy<Value = ExpMonomial<GaussianRational>> {
    proptest::collection::vec(
        (gaussian(), rational(), positive_rational(), nonzero_rational()),
        1..4,
    )
    .prop_map(|terms| {
        let mut f = ExpMonomial::zero();
        for (c, power, rate, exponent) in terms {
            f = f.add(&ExpMonomial::term(c, power, Some((rate, exponent))).unwrap());
        }
        f
    })
}

proptest! {
    #[test]
    fn reflection_is_involutive(alpha in nonzero_vector(3), x in vector(3)) {
        let once = reflect(&alpha, &x).unwrap();
        let twice = reflect(&alpha, &once).unwrap();
        prop_assert_eq!(twice, x);
    }

    #[test]
    fn reflection_ignores_root_scaling(
        alpha in nonzero_vector(3),
        x in vector(3),
        scale in nonzero_rational()
    ) {
        let scaled: Vec<BigRational> = alpha.iter().map(|c| c * &scale).collect();
        prop_assert_eq!(
            reflect(&alpha, &x).unwrap(),
            reflect(&scaled, &x).unwrap()
        );
    }

    #[test]
    fn reflection_fixes_the_mirror(alpha in nonzero_vector(2)) {
        // (alpha_2, -alpha_1) spans the mirror hyperplane in the plane.
        let mirror = vec![alpha[1].clone(), -alpha[0].clone()];
        prop_assert_eq!(reflect(&alpha, &mirror).unwrap(), mirror);
    }

    #[test]
    fn affine_group_law_matches_operator_composition(
        a1 in nonzero_rational(), b1 in rational(),
        a2 in nonzero_rational(), b2 in rational(),
        f in class_function()
    ) {
        let p1 = KappaParams::new(a1, b1).unwrap();
        let p2 = KappaParams::new(a2, b2).unwrap();
        let sequential = kappa_radial(&p1, &kappa_radial(&p2, &f));
        let composed = kappa_radial(&p1.compose(&p2), &f);
        prop_assert_eq!(sequential, composed);
    }

    #[test]
    fn euler_operator_conjugates_through_kappa(
        alpha in nonzero_rational(), beta in rational(),
        f in class_function()
    ) {
        let params = KappaParams::new(alpha.clone(), beta.clone()).unwrap();
        let lhs = kappa_radial(&params, &f).theta();
        let rhs = kappa_radial(
            &params,
            &f.theta().scale_rational(&alpha).add(&f.scale_rational(&beta)),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_multiplication_conjugates_through_kappa(
        alpha in nonzero_rational(), beta in rational(), d in rational(),
        f in class_function()
    ) {
        let params = KappaParams::new(alpha.clone(), beta).unwrap();
        let lhs = kappa_radial(&params, &f).mul_power(&(&alpha * &d));
        let rhs = kappa_radial(&params, &f.mul_power(&d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_is_a_derivation_on_compatible_products(
        c1 in gaussian(), c2 in gaussian(),
        p1 in rational(), p2 in rational(),
        q1 in positive_rational(), q2 in positive_rational(),
        s in nonzero_rational()
    ) {
        let f = ExpMonomial::term(c1, p1, Some((q1, s.clone()))).unwrap();
        let g = ExpMonomial::term(c2, p2, Some((q2, s))).unwrap();
        let product = f.try_mul(&g).unwrap();
        let lhs = product.theta();
        let rhs = f.theta().try_mul(&g).unwrap().add(&f.try_mul(&g.theta()).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_of_compact_and_raising_holds_on_random_input(
        f in class_function(),
        num in prop_oneof![-6i64..=-1, 1i64..=6],
        m in 0u32..3
    ) {
        let a = BigRational::new(BigInt::from(num), BigInt::from(2));
        let spec = RadialOperatorSpec::new(2, BigRational::new(1.into(), 2.into()), a, m).unwrap();
        let k = Sl2Element::cayley_k();
        let np = Sl2Element::cayley_n_plus();
        let lhs = radial_apply(&spec, &k, &radial_apply(&spec, &np, &f))
            .sub(&radial_apply(&spec, &np, &radial_apply(&spec, &k, &f)));
        let rhs = radial_apply(&spec, &np, &f).scale_rational(&BigRational::from_integer(2.into()));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn involution_is_unitary_on_exact_term_data(
        n in 1u32..4,
        k_num in 0i64..5,
        f in class_function()
    ) {
        // κ² = id exactly, whatever the weight shift.
        let index = BigRational::new(BigInt::from(k_num), BigInt::from(2));
        let inv = KappaParams::intertwiner(n, &index);
        prop_assert_eq!(kappa_radial(&inv, &kappa_radial(&inv, &f)), f);
    }
}
