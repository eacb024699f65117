//! Deterministic function corpora used by the verification checks.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::radial::ExpMonomial;
use crate::scalar::{ratio, GaussianRational};

fn gq(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    GaussianRational::new(ratio(re.0, re.1), ratio(im.0, im.1))
}

/// Twenty exact functions spanning the term shapes of the symbolic class:
/// varied powers (including fractional and negative), decay exponents of
/// both signs, multi-term combinations, and complex coefficients.
pub fn exact_corpus() -> Vec<ExpMonomial<GaussianRational>> {
    let term = |c: GaussianRational, p: (i64, i64), q: (i64, i64), s: (i64, i64)| {
        ExpMonomial::term(c, ratio(p.0, p.1), Some((ratio(q.0, q.1), ratio(s.0, s.1)))).unwrap()
    };
    let power =
        |c: GaussianRational, p: (i64, i64)| ExpMonomial::pure_power(c, ratio(p.0, p.1));

    vec![
        term(gq((1, 1), (0, 1)), (0, 1), (1, 1), (1, 1)),
        term(gq((1, 1), (0, 1)), (1, 1), (1, 2), (2, 1)),
        term(gq((0, 1), (1, 1)), (2, 1), (1, 1), (2, 1)),
        term(gq((1, 2), (-1, 3)), (1, 2), (2, 1), (1, 1)),
        term(gq((1, 1), (1, 1)), (5, 3), (1, 3), (1, 2)),
        term(gq((-2, 1), (0, 1)), (-1, 1), (1, 1), (1, 1)),
        term(gq((1, 1), (0, 1)), (0, 1), (1, 1), (-1, 1)),
        term(gq((0, 1), (-1, 2)), (-3, 2), (1, 2), (-2, 1)),
        term(gq((3, 4), (0, 1)), (2, 1), (2, 3), (-1, 2)),
        term(gq((1, 1), (1, 1)), (-2, 3), (1, 1), (-3, 2)),
        power(gq((1, 1), (0, 1)), (0, 1)),
        power(gq((2, 5), (1, 1)), (3, 1)),
        power(gq((-1, 1), (1, 4)), (-1, 2)),
        term(gq((1, 1), (0, 1)), (0, 1), (1, 1), (1, 1))
            .add(&term(gq((0, 1), (1, 1)), (1, 2), (1, 1), (1, 1))),
        term(gq((1, 1), (0, 1)), (1, 1), (1, 2), (2, 1))
            .add(&term(gq((-1, 2), (0, 1)), (3, 1), (1, 2), (2, 1))),
        term(gq((1, 3), (1, 3)), (0, 1), (1, 1), (-1, 1))
            .add(&power(gq((1, 1), (0, 1)), (1, 1))),
        term(gq((1, 1), (0, 1)), (2, 1), (1, 1), (1, 1))
            .add(&term(gq((1, 1), (0, 1)), (2, 1), (1, 1), (-1, 1))),
        term(gq((5, 2), (0, 1)), (7, 2), (3, 2), (1, 1))
            .add(&term(gq((0, 1), (-2, 1)), (-1, 3), (3, 2), (1, 1))),
        term(gq((1, 1), (1, 1)), (4, 1), (1, 4), (1, 3)),
        term(gq((-3, 7), (2, 9)), (1, 6), (5, 4), (2, 3)),
    ]
}

/// Square-integrable exact functions for one branch measure: every term
/// decays at infinity and stays integrable at the origin against
/// `r^d dr` with `d >= 0` (positive branch) or after inversion (negative
/// branch). Decay exponents match the branch's `|a|` so that products
/// stay in the single-exponential class.
pub fn decaying_corpus(a: &BigRational, positive_branch: bool) -> Vec<ExpMonomial<GaussianRational>> {
    let s = if positive_branch { a.clone() } else { -a.clone() };
    let term = |c: GaussianRational, p: BigRational, q: (i64, i64)| {
        ExpMonomial::term(c, p, Some((ratio(q.0, q.1), s.clone()))).unwrap()
    };
    let sign = if positive_branch { 1 } else { -1 };
    let base = |n: i64| ratio(sign * n, 1);
    vec![
        term(gq((1, 1), (0, 1)), base(0), (1, 1)),
        term(gq((1, 1), (0, 1)), base(1), (1, 2)),
        term(gq((0, 1), (1, 1)), base(2), (1, 1)),
        term(gq((1, 2), (1, 3)), base(1), (2, 1)).add(&term(gq((1, 1), (0, 1)), base(3), (2, 1))),
        term(gq((1, 1), (-1, 1)), base(2), (3, 2)),
    ]
}

/// The same corpus in the numeric backend.
pub fn decaying_corpus_numeric(
    a: &BigRational,
    positive_branch: bool,
) -> Vec<ExpMonomial<Complex64>> {
    decaying_corpus(a, positive_branch)
        .into_iter()
        .map(|f| f.to_numeric())
        .collect()
}
