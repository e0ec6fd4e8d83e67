//! Univariate polynomials, rational functions and truncated series in `u^{-1}`.

use std::fmt;

use crate::scalar::Field;

/// Polynomial with coefficients in ascending degree order.
///
/// The zero polynomial is the empty coefficient vector; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    /// `x - root`
    pub fn linear(root: &F) -> Self {
        Self::new(vec![-root.clone(), F::one()])
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a F>) -> Self {
        roots.into_iter().fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// The polynomial `p(x + shift)`.
    pub fn shift(&self, shift: &F) -> Self {
        let step = Self::new(vec![shift.clone(), F::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * &step) + &Self::constant(c.clone()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].inv();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul_ref(&lc_inv);
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let t = c.mul_ref(dc);
                    rem[k + j] -= &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<F: Field> std::ops::Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect())
    }
}

impl<F: Field> std::ops::Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect())
    }
}

impl<F: Field> std::ops::Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> std::ops::Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field + fmt::Display> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "u")?,
                1 => write!(f, "({c})u")?,
                _ if c.is_one() => write!(f, "u^{k}")?,
                _ => write!(f, "({c})u^{k}")?,
            }
        }
        Ok(())
    }
}

/// Reduced ratio `num / den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RationalFunction<F> {
    /// Builds and normalizes `num / den`; panics if `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lc = den.leading().cloned().expect("nonzero");
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RationalFunction { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `1 + 1/(u - a)`, the basic factor of evaluation-module highest weights.
    pub fn one_plus_pole(a: &F) -> Self {
        let den = Poly::linear(a);
        Self::new(&den + &Poly::one(), den)
    }

    /// The function `f(u + shift)`.
    pub fn shift(&self, shift: &F) -> Self {
        Self::new(self.num.shift(shift), self.den.shift(shift))
    }

    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Whether the degree of the numerator does not exceed that of the denominator.
    pub fn is_regular_at_infinity(&self) -> bool {
        self.num.degree().unwrap_or(0) <= self.den.degree().unwrap_or(0)
    }

    /// Expansion in powers of `u^{-1}` up to `u^{-order}`.
    pub fn series(&self, order: usize) -> crate::error::Result<SeriesTrunc<F>> {
        if !self.is_regular_at_infinity() {
            return Err(crate::error::Error::NotRegularAtInfinity);
        }
        // With z = 1/u: f = N~(z) / D~(z), reversed to the denominator degree.
        let dd = self.den.degree().unwrap_or(0);
        let rev = |p: &Poly<F>| -> Vec<F> { (0..=dd).map(|k| p.coeff(dd - k)).collect() };
        let n = rev(&self.num);
        let d = rev(&self.den);
        let d0_inv = d[0].inv();
        let mut out: Vec<F> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = n.get(k).cloned().unwrap_or_else(F::zero);
            for j in 1..=k.min(dd) {
                acc -= &d[j].mul_ref(&out[k - j]);
            }
            out.push(acc.mul_ref(&d0_inv));
        }
        Ok(SeriesTrunc { coeffs: out })
    }
}

impl<F: Field> std::ops::Add for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<F: Field> std::ops::Sub for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::new(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<F: Field> std::ops::Mul for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Field> std::ops::Div for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn div(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl<F: Field + fmt::Display> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Coefficients of `u^0, u^{-1}, ..., u^{-order}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrunc<F> {
    coeffs: Vec<F>,
}

impl<F: Field> SeriesTrunc<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least u^0");
        SeriesTrunc { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Truncated Cauchy product, at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| (0..=k).fold(F::zero(), |acc, j| acc.add_ref(&self.coeffs[j].mul_ref(&other.coeffs[k - j]))))
            .collect();
        SeriesTrunc { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, Rational};

    type P = Poly<Rational>;
    type R = RationalFunction<Rational>;

    fn p(c: &[i64]) -> P {
        P::new(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p(&[2, -3, 1]); // (u-1)(u-2)
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&p(&[-2, 1]).scale(&rat(5))), p(&[-2, 1]));
        assert_eq!(P::from_roots(&[rat(1), rat(2)]), a);
        assert_eq!(a.eval(&rat(3)), rat(2));
    }

    #[test]
    fn shift_substitutes() {
        let a = p(&[2, -3, 1]);
        // (u+1-1)(u+1-2) = u(u-1)
        assert_eq!(a.shift(&rat(1)), p(&[0, -1, 1]));
        assert_eq!(a.shift(&rat(1)).shift(&rat(-1)), a);
    }

    #[test]
    fn rational_function_normalizes() {
        let f = R::new(p(&[-2, 2]), p(&[2, -3, 1]).scale(&rat(3)));
        assert_eq!(f.den(), &p(&[-2, 1]));
        assert_eq!(f.num(), &P::constant(ratio(2, 3)));
        assert!((&f / &f).is_one());
    }

    #[test]
    fn series_examples() {
        assert_eq!(R::one().series(2).unwrap().coeffs(), &[rat(1), rat(0), rat(0)]);
        let f = R::new(p(&[1, 1]), p(&[0, 1]));
        assert_eq!(f.series(2).unwrap().coeffs(), &[rat(1), rat(1), rat(0)]);
        // 1 + 1/(u-2): geometric tail 2^k u^{-k-1}
        let g = &R::one() + &R::new(P::one(), p(&[-2, 1]));
        assert_eq!(g.series(3).unwrap().coeffs(), &[rat(1), rat(1), rat(2), rat(4)]);
        assert!(R::from_poly(p(&[0, 1])).series(2).is_err());
    }

    #[test]
    fn generic_over_f64() {
        let a = Poly::<f64>::new(vec![2.0, -3.0, 1.0]);
        assert_eq!(a.eval(&2.0), 0.0);
        assert_eq!(a.shift(&1.0).coeffs(), &[0.0, -1.0, 1.0]);
    }
}
