//! Exact rational specializations: root extraction and the Drinfeld ratio solver.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, RationalFunction, SeriesTrunc};
use crate::scalar::{format_rational, Rational};

pub type UniPoly = Poly<Rational>;
pub type RatFun = RationalFunction<Rational>;
pub type Series = SeriesTrunc<Rational>;

/// Trial division stops here; a larger leftover cofactor is treated as prime.
const TRIAL_DIVISION_LIMIT: u64 = 2_000_000;

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_DIVISION_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut m = d.clone();
            for _ in 0..=e {
                next.push(m.clone());
                m *= &prime;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn integer_coefficients(p: &UniPoly) -> Vec<BigInt> {
    let l = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.coeffs().iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect()
}

/// All rational roots with multiplicity, ascending. The second component is
/// the monic cofactor left once the rational roots are divided out.
pub fn rational_roots(p: &UniPoly) -> (Vec<(Rational, usize)>, UniPoly) {
    let mut rest = p.monic();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let push = |r: Rational, roots: &mut Vec<(Rational, usize)>| match roots.iter_mut().find(|(x, _)| *x == r) {
        Some(slot) => slot.1 += 1,
        None => roots.push((r, 1)),
    };
    while rest.degree().is_some_and(|d| d > 0) && rest.coeff(0).is_zero() {
        rest = rest.div_rem(&Poly::x()).0;
        push(Rational::zero(), &mut roots);
    }
    loop {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        let ints = integer_coefficients(&rest);
        let a0 = &ints[0];
        let an = ints.last().expect("nonzero");
        let mut found = None;
        'search: for q in divisors(an) {
            for p in divisors(a0) {
                for cand in [BigRational::new(p.clone(), q.clone()), BigRational::new(-p.clone(), q.clone())] {
                    if rest.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        match found {
            Some(r) => {
                rest = rest.div_rem(&Poly::linear(&r)).0;
                push(r, &mut roots);
            }
            None => break,
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, rest)
}

/// Roots with multiplicity if every root is rational.
pub fn split_roots(p: &UniPoly) -> Option<Vec<Rational>> {
    let (roots, rest) = rational_roots(p);
    if rest.degree().unwrap_or(0) > 0 {
        return None;
    }
    Some(roots.into_iter().flat_map(|(r, m)| std::iter::repeat(r).take(m)).collect())
}

fn integer_roots(p: &UniPoly, what: &str) -> Result<Vec<BigInt>> {
    let roots = split_roots(p).ok_or_else(|| Error::NoIntegralSolution(format!("{what} has non-rational roots")))?;
    roots
        .into_iter()
        .map(|r| if r.is_integer() { Ok(r.to_integer()) } else { Err(Error::NoIntegralSolution(format!("{what} has root {}", format_rational(&r)))) })
        .collect()
}

/// Solves `Q(u+1)/Q(u) = ratio` for the unique monic `Q` with integer roots.
///
/// Roots of `Q` form strings `s, s+1, ..., e`, each of which telescopes to
/// `(u - s + 1)/(u - e)`; the numerator roots are the `s - 1` and the
/// denominator roots the `e`. Pairing both sorted lists recovers a valid
/// set of strings whenever one exists.
pub fn ratfun_ratio_solve(ratio: &RatFun) -> Result<UniPoly> {
    if !ratio.num().is_monic() || ratio.num().degree() != ratio.den().degree() {
        return Err(Error::NoIntegralSolution(format!("{ratio:?} is not a ratio of monic polynomials of equal degree")));
    }
    let mut starts = integer_roots(ratio.num(), "numerator")?;
    let mut ends = integer_roots(ratio.den(), "denominator")?;
    starts.sort();
    ends.sort();
    let mut q = UniPoly::one();
    for (a, b) in starts.iter().zip(&ends) {
        if b <= a {
            return Err(Error::NoIntegralSolution(format!("string from {} to {} is empty", a + 1, b)));
        }
        let mut k: BigInt = a + 1;
        while &k <= b {
            q = &q * &Poly::linear(&BigRational::from_integer(k.clone()));
            k += 1;
        }
    }
    let back = RatFun::new(q.shift(&Rational::one()), q.clone());
    if &back != ratio {
        return Err(Error::NoIntegralSolution("back-substitution failed".into()));
    }
    Ok(q)
}

/// Integer roots of a monic integer-rooted polynomial, with multiplicities.
pub fn integer_root_multiset(p: &UniPoly) -> Option<Vec<(i64, usize)>> {
    let (roots, rest) = rational_roots(p);
    if rest.degree().unwrap_or(0) > 0 {
        return None;
    }
    roots.into_iter().map(|(r, m)| if r.is_integer() { r.to_integer().to_i64().map(|v| (v, m)) } else { None }).collect()
}

pub fn series_expand(f: &RatFun, order: usize) -> Result<Series> {
    f.series(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn roots_with_multiplicity() {
        // (u-1)^2 (2u+3) u
        let f = &(&p(&[-1, 1]).pow(2) * &p(&[3, 2])) * &p(&[0, 1]);
        let (roots, rest) = rational_roots(&f);
        assert_eq!(roots, vec![(ratio(-3, 2), 1), (rat(0), 1), (rat(1), 2)]);
        assert!(rest.is_one());
        let (roots, rest) = rational_roots(&p(&[-2, 0, 1]));
        assert!(roots.is_empty());
        assert_eq!(rest.degree(), Some(2));
    }

    #[test]
    fn ratio_solve_examples() {
        assert!(ratfun_ratio_solve(&RatFun::one()).unwrap().is_one());
        let r = RatFun::new(p(&[-2, 1]), p(&[-3, 1]));
        assert_eq!(ratfun_ratio_solve(&r).unwrap(), p(&[-3, 1]));
        let r = RatFun::new(p(&[0, 1]), p(&[-2, 1]));
        // independent check: u(u-1) / ((u-1)(u-2)) = u/(u-2)
        let expected = &p(&[-1, 1]) * &p(&[-2, 1]);
        assert_eq!(RatFun::new(&p(&[0, 1]) * &p(&[-1, 1]), expected.clone()), r);
        assert_eq!(ratfun_ratio_solve(&r).unwrap(), expected);
    }

    #[test]
    fn ratio_solve_rejects() {
        // (u-3)/(u-2): string would run backwards
        assert!(ratfun_ratio_solve(&RatFun::new(p(&[-3, 1]), p(&[-2, 1]))).is_err());
        // half-integer root
        let half = RatFun::new(UniPoly::linear(&ratio(1, 2)), p(&[-2, 1]));
        assert!(ratfun_ratio_solve(&half).is_err());
        assert!(ratfun_ratio_solve(&RatFun::new(p(&[0, 1]), UniPoly::one())).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ratio_solve_round_trip(roots in proptest::collection::vec(-10i64..=10, 0..=6)) {
            let q = UniPoly::from_roots(&roots.iter().map(|&r| rat(r)).collect::<Vec<_>>());
            let r = RatFun::new(q.shift(&rat(1)), q.clone());
            let solved = ratfun_ratio_solve(&r).unwrap();
            prop_assert_eq!(&solved, &q);
            prop_assert_eq!(RatFun::new(solved.shift(&rat(1)), solved), r);
        }

        #[test]
        fn series_of_product_is_convolution(
            a in proptest::collection::vec(-4i64..=4, 1..4),
            b in proptest::collection::vec(-4i64..=4, 1..4),
            c in proptest::collection::vec(-4i64..=4, 0..3),
            d in proptest::collection::vec(-4i64..=4, 0..3),
        ) {
            // monic denominators with the given roots, numerators of no larger degree
            let den1 = UniPoly::from_roots(&a.iter().map(|&r| rat(r)).collect::<Vec<_>>());
            let den2 = UniPoly::from_roots(&b.iter().map(|&r| rat(r)).collect::<Vec<_>>());
            let num1 = p(&c.iter().copied().take(a.len() + 1).collect::<Vec<_>>());
            let num2 = p(&d.iter().copied().take(b.len() + 1).collect::<Vec<_>>());
            let f = RatFun::new(num1, den1);
            let g = RatFun::new(num2, den2);
            let fg = &f * &g;
            let lhs = series_expand(&fg, 6).unwrap();
            let rhs = series_expand(&f, 6).unwrap().mul(&series_expand(&g, 6).unwrap());
            prop_assert_eq!(lhs, rhs);
            // canonical form: monic denominator, coprime
            prop_assert!(fg.den().is_monic());
            prop_assert!(fg.num().is_zero() || fg.num().gcd(fg.den()).is_one());
        }
    }
}
