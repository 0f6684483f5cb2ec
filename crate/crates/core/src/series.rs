//! Truncated power series over ℚ.
//!
//! A [`Series`] of order `N` stores the coefficients of `s^0 ..= s^N`; all
//! arithmetic is carried out modulo `s^(N+1)`. Binary operations truncate to
//! the smaller of the two orders.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::rational::{format_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series(Vec<Rational>);

impl Series {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        Self(coeffs)
    }

    pub fn zero(order: usize) -> Self {
        Self(vec![Rational::zero(); order + 1])
    }

    /// The series `s` truncated at `order`.
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.0[1] = Rational::from_integer(1.into());
        }
        s
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.0[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.0.clone();
        c.resize(order + 1, Rational::zero());
        Self(c)
    }

    /// Lowest degree with a nonzero coefficient, `None` if zero to this order.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self(self.0.iter().map(|c| c * k).collect())
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Option<Self> {
        let c0 = &self.0[0];
        if c0.is_zero() {
            return None;
        }
        let n = self.0.len();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(c0.recip());
        for k in 1..n {
            let acc: Rational = (1..=k).map(|j| &self.0[j] * &out[k - j]).sum();
            out.push(-acc / c0);
        }
        Some(Self(out))
    }

    /// The composition `self(inner(s))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Series) -> Self {
        assert!(inner.0[0].is_zero(), "inner series must vanish at 0");
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        // Horner from the top degree down.
        let mut acc = Series::zero(order);
        for c in self.0[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.0[0] += c;
        }
        acc
    }

    /// The compositional inverse `g` with `self(g(s)) = s`. Requires a zero
    /// constant term and a nonzero linear term.
    pub fn reversion(&self) -> Option<Self> {
        let order = self.order();
        if !self.0[0].is_zero() || order == 0 || self.0[1].is_zero() {
            return None;
        }
        let lead = self.0[1].clone();
        let target = Series::var(order);
        // Each pass fixes one more coefficient.
        let mut g = target.scale(&lead.recip());
        for _ in 1..order {
            let err = &self.compose(&g) - &target;
            g = &g - &err.scale(&lead.recip());
        }
        Some(g)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let n = self.0.len().min(rhs.0.len());
        Series((0..n).map(|k| &self.0[k] + &rhs.0[k]).collect())
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let n = self.0.len().min(rhs.0.len());
        Series((0..n).map(|k| &self.0[k] - &rhs.0[k]).collect())
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let n = self.0.len().min(rhs.0.len());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.0.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Series(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn s(c: &[i64]) -> Series {
        Series::new(c.iter().map(|&v| int(v)).collect())
    }

    #[test]
    fn geometric_series_inverse() {
        let one_minus_s = s(&[1, -1, 0, 0, 0]);
        assert_eq!(one_minus_s.recip().unwrap(), s(&[1, 1, 1, 1, 1]));
        assert!(s(&[0, 1]).recip().is_none());
    }

    #[test]
    fn compose_and_truncate() {
        // (1 + s)² at s = 2t - t²  → 1 + 4t + 2t² - 4t³ + t⁴
        let outer = s(&[1, 2, 1, 0, 0]);
        let inner = s(&[0, 2, -1, 0, 0]);
        assert_eq!(outer.compose(&inner), s(&[1, 4, 2, -4, 1]));
    }

    #[test]
    fn reversion_of_known_series() {
        // s = 3v − 6v³ has inverse v = s/3 + 2s³/27 + O(s⁵)
        let f = s(&[0, 3, 0, -6, 0, 0]);
        let g = f.reversion().unwrap();
        assert_eq!(g.coeff(1), &rat(1, 3));
        assert_eq!(g.coeff(2), &int(0));
        assert_eq!(g.coeff(3), &rat(2, 27));
        assert!(s(&[0, 0, 1]).reversion().is_none());
    }

    fn small_series(len: usize) -> impl Strategy<Value = Series> {
        proptest::collection::vec((-6i64..6, 1i64..4), len)
            .prop_map(|v| Series::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn reversion_is_two_sided(mut f in small_series(7), lead in 1i64..5) {
            f.0[0] = int(0);
            f.0[1] = int(lead);
            let g = f.reversion().unwrap();
            prop_assert_eq!(f.compose(&g), Series::var(6));
            prop_assert_eq!(g.compose(&f), Series::var(6));
        }

        #[test]
        fn recip_multiplies_to_one(mut f in small_series(6)) {
            f.0[0] = int(2);
            let one = &f * &f.recip().unwrap();
            prop_assert_eq!(one.valuation(), Some(0));
            prop_assert_eq!(one.coeffs()[1..].iter().all(Zero::is_zero), true);
        }
    }
}
