//! Cross-checks of the symbolic operator engine against numerical
//! differentiation: the calculus computes everything exactly on term
//! data, so sampled derivatives provide an independent route.

mod support;

use num_rational::BigRational;
use num_traits::Zero;

use kafourier::polar::PolarFunction;
use kafourier::radial::ExpMonomial;
use kafourier::roots::{MultiplicityFunction, RootSystem};
use kafourier::scalar::{ratio, GaussianRational};
use kafourier::sl2::Sl2Element;

/// Fourth-order central second derivative with one Richardson step.
fn second_derivative<F: Fn(f64) -> f64>(f: &F, r: f64) -> f64 {
    let stencil = |h: f64| {
        (-f(r - 2.0 * h) + 16.0 * f(r - h) - 30.0 * f(r) + 16.0 * f(r + h) - f(r + 2.0 * h))
            / (12.0 * h * h)
    };
    let h = 0.02;
    (16.0 * stencil(h / 2.0) - stencil(h)) / 15.0
}

/// Fourth-order central first derivative with one Richardson step.
fn first_derivative<F: Fn(f64) -> f64>(f: &F, r: f64) -> f64 {
    let stencil = |h: f64| {
        (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h)
    };
    let h = 0.02;
    (16.0 * stencil(h / 2.0) - stencil(h)) / 15.0
}

fn orthogonal_axes_system(n: usize) -> RootSystem<BigRational> {
    let mut roots = Vec::new();
    for i in 0..n {
        for sign in [1i64, -1] {
            let mut v = vec![ratio(0, 1); n];
            v[i] = ratio(sign, 1);
            roots.push(v);
        }
    }
    RootSystem::validate(n, roots).unwrap()
}

#[test]
fn lowering_operator_on_radial_profiles_matches_finite_differences() {
    // At zero multiplicity and constant spherical factor, the lowering
    // operator reduces to (i/a) r^{2-a} (g'' + (N-1)/r g'). The left side
    // comes out of the exact mixed-class engine; the right side from
    // Richardson-extrapolated central differences of the profile.
    for n in [2usize, 3] {
        let rs = orthogonal_axes_system(n);
        let zero = MultiplicityFunction::uniform(&rs, BigRational::zero());
        let complex_rs = rs.map_scalars(|q| GaussianRational::from_rational(q.clone()));
        let a = ratio(3, 2);
        let a_f64 = 1.5;

        let profile = ExpMonomial::<GaussianRational>::term(
            GaussianRational::one(),
            ratio(0, 1),
            Some((ratio(1, 2), ratio(2, 1))),
        )
        .unwrap()
        .add(
            &ExpMonomial::term(
                GaussianRational::from_rational(ratio(1, 3)),
                ratio(2, 1),
                Some((ratio(1, 2), ratio(2, 1))),
            )
            .unwrap(),
        );
        let g = |r: f64| profile.eval(r).re;

        let symbolic = PolarFunction::from_radial(n, profile.clone())
            .sl2_apply(&complex_rs, &zero, &a, &Sl2Element::e_minus())
            .unwrap();

        for r in [0.6f64, 1.0, 1.7, 2.4] {
            // Sample along a direction with nonzero coordinates.
            let direction: Vec<f64> = (0..n).map(|i| 1.0 + 0.2 * i as f64).collect();
            let scale = direction.iter().map(|c| c * c).sum::<f64>().sqrt();
            let x: Vec<f64> = direction.iter().map(|c| c * r / scale).collect();

            let got = symbolic.eval(&x);
            let laplacian = second_derivative(&g, r)
                + (n as f64 - 1.0) / r * first_derivative(&g, r);
            let want_im = r.powf(2.0 - a_f64) * laplacian / a_f64;
            assert!(
                got.re.abs() <= 1e-9,
                "real part {} should vanish (pure i/a factor)",
                got.re
            );
            let rel = (got.im - want_im).abs() / want_im.abs().max(1.0);
            assert!(rel <= 1e-9, "N={n} r={r}: {} vs {want_im}", got.im);
        }
    }
    println!("[PASS] lowering operator matches finite differences on radial profiles");
}

#[test]
fn scaling_operator_matches_logarithmic_derivative() {
    // H = (N - 2 + 2<k> + a)/a + (2/a) E, and on radial profiles the
    // Euler operator is r g'(r).
    let n = 2usize;
    let rs = orthogonal_axes_system(n);
    let k = MultiplicityFunction::uniform(&rs, ratio(1, 2));
    let complex_rs = rs.map_scalars(|q| GaussianRational::from_rational(q.clone()));
    let a = ratio(2, 1);

    let profile = ExpMonomial::<GaussianRational>::term(
        GaussianRational::one(),
        ratio(1, 1),
        Some((ratio(1, 2), ratio(2, 1))),
    )
    .unwrap();
    let g = |r: f64| profile.eval(r).re;
    let symbolic = PolarFunction::from_radial(n, profile.clone())
        .sl2_apply(&complex_rs, &k, &a, &Sl2Element::h())
        .unwrap();

    // Two positive roots at k = 1/2 give <k> = 1, so the constant is
    // (N - 2 + 2<k> + a)/a = (0 + 2 + 2)/2 = 2, and (2/a) E = r d/dr.
    for r in [0.5f64, 1.1, 2.2] {
        let x = [r, 0.0];
        let got = symbolic.eval(&x).re;
        let want = 2.0 * g(r) + r * first_derivative(&g, r);
        assert!(
            (got - want).abs() <= 1e-9 * want.abs().max(1.0),
            "r={r}: {got} vs {want}"
        );
    }
    println!("[PASS] scaling operator matches the sampled Euler derivative");
}
