use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::field::{Field, Ring, Scalar};
use super::poly::Poly;
use crate::error::{Error, Result};

/// Valuation at infinity, `deg den - deg num`. The zero function has
/// valuation `Infinite`, which compares above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Delta {
    Finite(i64),
    Infinite,
}

impl Delta {
    pub fn finite(self) -> Option<i64> {
        match self {
            Delta::Finite(d) => Some(d),
            Delta::Infinite => None,
        }
    }
}

impl Add for Delta {
    type Output = Delta;
    fn add(self, rhs: Delta) -> Delta {
        match (self, rhs) {
            (Delta::Finite(a), Delta::Finite(b)) => Delta::Finite(a + b),
            _ => Delta::Infinite,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Causality {
    Improper,
    Unit,
    StrictlyProper,
    Zero,
}

/// Rational function `num/den` in lowest terms with monic denominator.
/// Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Scalar> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFun { num, den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.div_rem(&g).0, den.div_rem(&g).0) };
        let lc = den.leading().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RatFun { num, den }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(F::from_i64(c))
    }

    /// `s^k` for any integer `k`.
    pub fn s_pow(k: i64) -> Self {
        let m = Poly::monomial(F::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFun { num: Poly::one(), den: m }
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn delta(&self) -> Delta {
        match (self.num.degree(), self.den.degree()) {
            (Some(n), Some(d)) => Delta::Finite(d as i64 - n as i64),
            _ => Delta::Infinite,
        }
    }

    pub fn causality(&self) -> Causality {
        match self.delta() {
            Delta::Infinite => Causality::Zero,
            Delta::Finite(d) => match d.cmp(&0) {
                Ordering::Less => Causality::Improper,
                Ordering::Equal => Causality::Unit,
                Ordering::Greater => Causality::StrictlyProper,
            },
        }
    }

    pub fn is_proper(&self) -> bool {
        self.delta() >= Delta::Finite(0)
    }

    pub fn is_strictly_proper(&self) -> bool {
        self.delta() >= Delta::Finite(1)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Split into polynomial part and strictly proper part.
    pub fn pi_split(&self) -> (Poly<F>, RatFun<F>) {
        let (q, r) = self.num.div_rem(&self.den);
        // r/den is already reduced: any common factor of r and den divides num
        (q, RatFun { num: r.clone(), den: if r.is_zero() { Poly::one() } else { self.den.clone() } })
    }

    pub fn pi_plus(&self) -> Poly<F> {
        if self.is_polynomial() {
            return self.num.clone();
        }
        self.num.div_rem(&self.den).0
    }

    pub fn pi_minus(&self) -> RatFun<F> {
        self.pi_split().1
    }

    /// Constant coefficient of the polynomial part.
    pub fn at_zero(&self) -> F {
        self.pi_plus().coeff(0)
    }

    /// Coefficients of `s^top, s^(top-1), .., s^lowest` in the expansion at
    /// infinity, a Laurent series in `s⁻¹`. Requires `-δ ≤ top`.
    pub fn expansion(&self, top: i64, lowest: i64) -> Vec<F> {
        let len = (top - lowest + 1).max(0) as usize;
        let mut out = vec![F::zero(); len];
        let (Some(dn), Some(dd)) = (self.num.degree(), self.den.degree()) else { return out };
        let lead = dn as i64 - dd as i64;
        assert!(lead <= top, "expansion starts above s^{top}");
        // f = s^lead N(1/s) / D(1/s) with D(1/s) monic at s⁻¹ = 0
        let terms = (lead - lowest + 1).max(0) as usize;
        let n_rev = |i: usize| if i <= dn { self.num.coeff(dn - i) } else { F::zero() };
        let mut c: Vec<F> = Vec::with_capacity(terms);
        for k in 0..terms {
            let mut v = n_rev(k);
            for i in 1..=k.min(dd) {
                v = v - self.den.coeff(dd - i) * c[k - i].clone();
            }
            c.push(v);
        }
        for (slot, j) in out.iter_mut().zip((lowest..=top).rev()) {
            let k = lead - j;
            if k >= 0 && (k as usize) < terms {
                *slot = c[k as usize].clone();
            }
        }
        out
    }

    /// Value at `s = ∞` of a proper function; `None` if improper.
    pub fn at_infinity(&self) -> Option<F> {
        match self.delta() {
            Delta::Infinite => Some(F::zero()),
            Delta::Finite(0) => Some(self.num.leading()?.clone()),
            Delta::Finite(d) if d > 0 => Some(F::zero()),
            _ => None,
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        self.clone() * Self::s_pow(k)
    }

    /// Factor a nonzero `f` as `s^{-δ} * u` with `u` a unit of the proper
    /// rational functions. Returns `(δ, u)`.
    pub fn split_unit(&self) -> Option<(i64, RatFun<F>)> {
        let d = self.delta().finite()?;
        Some((d, self.shift(d)))
    }
}

impl<F: Scalar> Ring for RatFun<F> {
    fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }
    fn one() -> Self {
        RatFun { num: Poly::one(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Scalar> Field for RatFun<F> {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of the zero rational function");
        Self::normalize(self.den.clone(), self.num.clone())
    }

    fn pivot_weight(&self) -> usize {
        self.num.degree().unwrap_or(0) + self.den.degree().unwrap_or(0)
    }
}

impl<F: Scalar> Add for RatFun<F> {
    type Output = RatFun<F>;
    fn add(self, rhs: RatFun<F>) -> RatFun<F> {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return Self::normalize(self.num + rhs.num, self.den);
        }
        // with g = gcd(b1, b2), any common factor of the sum's numerator
        // and denominator divides g
        let g = self.den.gcd(&rhs.den);
        let d1 = self.den.exact_div(&g);
        let d2 = rhs.den.exact_div(&g);
        let t = self.num * d2 + rhs.num * d1.clone();
        if t.is_zero() {
            return Self::zero();
        }
        let g2 = t.gcd(&g);
        RatFun { num: t.exact_div(&g2), den: d1 * rhs.den.exact_div(&g2) }
    }
}

impl<F: Scalar> Neg for RatFun<F> {
    type Output = RatFun<F>;
    fn neg(self) -> RatFun<F> {
        RatFun { num: -self.num, den: self.den }
    }
}

impl<F: Scalar> Sub for RatFun<F> {
    type Output = RatFun<F>;
    fn sub(self, rhs: RatFun<F>) -> RatFun<F> {
        self + (-rhs)
    }
}

impl<F: Scalar> Mul for RatFun<F> {
    type Output = RatFun<F>;
    fn mul(self, rhs: RatFun<F>) -> RatFun<F> {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return Self::from_poly(self.num * rhs.num);
        }
        // cross cancellation keeps the result reduced with a monic denominator
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        RatFun {
            num: self.num.exact_div(&g1) * rhs.num.exact_div(&g2),
            den: self.den.exact_div(&g2) * rhs.den.exact_div(&g1),
        }
    }
}

impl<F: Scalar> Div for RatFun<F> {
    type Output = RatFun<F>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: RatFun<F>) -> RatFun<F> {
        self * rhs.inv()
    }
}

impl<F: Scalar> From<Poly<F>> for RatFun<F> {
    fn from(p: Poly<F>) -> Self {
        Self::from_poly(p)
    }
}

impl<F: Scalar> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num_bigint::BigInt;

    type P = Poly<Rational>;
    type R = RatFun<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn rf(n: &[i64], d: &[i64]) -> R {
        R::new(P::from_i64s(n), P::from_i64s(d)).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f.num(), &P::from_i64s(&[1, 1]));
        assert_eq!(f.den(), &P::from_i64s(&[1]));
    }

    #[test]
    fn normalize_zero() {
        let f = rf(&[0], &[0, 1]);
        assert!(f.num().is_zero());
        assert_eq!(f.den(), &P::one());
    }

    #[test]
    fn normalize_makes_denominator_monic() {
        // 2s / 4 = (1/2) s
        let f = rf(&[0, 2], &[4]);
        assert_eq!(f.num().coeffs(), &[q(0, 1), q(1, 2)]);
        assert_eq!(f.den(), &P::one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(R::new(P::one(), P::zero()), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(R::s_pow(-1).delta(), Delta::Finite(1));
        assert_eq!(R::s_pow(1).delta(), Delta::Finite(-1));
        assert_eq!(rf(&[1, 1], &[1, 0, 1]).delta(), Delta::Finite(1));
        assert_eq!(R::zero().delta(), Delta::Infinite);
        assert!(Delta::Infinite > Delta::Finite(i64::MAX));
    }

    #[test]
    fn pi_split_examples() {
        let (plus, minus) = rf(&[1, 0, 0, 1], &[0, 1]).pi_split();
        assert_eq!(plus, P::from_i64s(&[0, 0, 1]));
        assert_eq!(minus, R::s_pow(-1));

        let (plus, minus) = rf(&[1, 1], &[0, 1]).pi_split();
        assert_eq!(plus, P::one());
        assert_eq!(minus, R::s_pow(-1));

        let f = rf(&[1, 1], &[1, 0, 1]);
        let (plus, minus) = f.pi_split();
        assert!(plus.is_zero());
        assert_eq!(minus, f);
    }

    #[test]
    fn at_zero_examples() {
        assert_eq!(rf(&[3, 2, 1], &[0, 1]).at_zero(), q(2, 1));
        assert_eq!(rf(&[1], &[1, 1]).at_zero(), q(0, 1));
        assert_eq!(R::from_i64(5).at_zero(), q(5, 1));
    }

    #[test]
    fn expansion_at_infinity() {
        // s²/(s - 1) = s + 1 + s⁻¹ + s⁻² + ..
        let f = rf(&[0, 0, 1], &[-1, 1]);
        assert_eq!(f.expansion(2, -2), vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1)]);
        assert_eq!(R::zero().expansion(0, -1), vec![q(0, 1), q(0, 1)]);
        let g = rf(&[3, 2, 1], &[0, 1]);
        assert_eq!(g.expansion(1, 0), vec![q(1, 1), g.at_zero()]);
    }

    #[test]
    fn causality_examples() {
        assert_eq!(R::s_pow(1).causality(), Causality::Improper);
        assert_eq!(rf(&[1, 1], &[2, 1]).causality(), Causality::Unit);
        assert_eq!(R::s_pow(-1).causality(), Causality::StrictlyProper);
        assert_eq!(R::zero().causality(), Causality::Zero);
    }

    #[test]
    fn split_unit_yields_unit() {
        let f = rf(&[1, 2], &[3, 0, 0, 1]);
        let (d, u) = f.split_unit().unwrap();
        assert_eq!(d, 2);
        assert_eq!(u.causality(), Causality::Unit);
        assert_eq!(R::s_pow(-d) * u, f);
    }

    #[test]
    fn at_infinity_of_proper() {
        assert_eq!(rf(&[1, 3], &[1, 2]).at_infinity(), Some(q(3, 2)));
        assert_eq!(R::s_pow(-2).at_infinity(), Some(q(0, 1)));
        assert_eq!(R::s_pow(1).at_infinity(), None);
    }
}
