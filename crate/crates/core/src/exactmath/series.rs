//! Truncated formal power series in z whose coefficients are exact
//! rational polynomials in x.
//!
//! A series of order N stores exactly N+1 coefficients; all binary
//! operations require matching orders and truncate the Cauchy product
//! at z^N. There is no floating point anywhere: generating-function
//! identities involving k-th roots are checked by raising to the k-th
//! power, never by extracting roots.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};

use super::{Int, RatPolynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<RatPolynomial>,
}

impl ZSeries {
    /// Builds a series from the coefficients of z^0 .. z^N.
    pub fn from_coeffs(coeffs: Vec<RatPolynomial>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the z^0 coefficient"
        );
        ZSeries { coeffs }
    }

    /// A polynomial in x viewed as a series constant in z.
    pub fn constant(c: RatPolynomial, order: usize) -> Self {
        let mut coeffs = vec![RatPolynomial::zero(); order + 1];
        coeffs[0] = c;
        ZSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(RatPolynomial::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &RatPolynomial {
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[RatPolynomial] {
        &self.coeffs
    }

    /// exp(rate * z) truncated at the given order: coefficient of z^m is
    /// rate^m / m!.
    pub fn exp_linear(rate: &RatPolynomial, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = RatPolynomial::one();
        let mut fact = Int::one();
        coeffs.push(power.clone());
        for m in 1..=order {
            power = &power * rate;
            fact *= Int::from(m);
            coeffs.push(power.scale(&Rational::new(Int::one(), fact.clone())));
        }
        ZSeries { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(ZSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        Ok(ZSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_order(rhs)?;
        let mut coeffs = vec![RatPolynomial::zero(); self.coeffs.len()];
        for (m, out) in coeffs.iter_mut().enumerate() {
            for i in 0..=m {
                if self.coeffs[i].is_zero() || rhs.coeffs[m - i].is_zero() {
                    continue;
                }
                *out = &*out + &(&self.coeffs[i] * &rhs.coeffs[m - i]);
            }
        }
        Ok(ZSeries { coeffs })
    }

    /// S^exp by repeated multiplication; exp must be >= 1.
    pub fn pow(&self, exp: usize) -> Self {
        assert!(exp >= 1, "series power requires a positive exponent");
        let mut acc = self.clone();
        for _ in 1..exp {
            acc = acc.mul(self).expect("matching orders");
        }
        acc
    }

    /// Multiplies every coefficient by a fixed polynomial in x.
    pub fn scale(&self, factor: &RatPolynomial) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::SeriesOrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (m, c) in self.coeffs.iter().enumerate() {
            if m > 0 {
                write!(f, "; ")?;
            }
            write!(f, "z^{m}: {c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::IntPolynomial;
    use super::*;

    fn rat(coeffs: &[i64]) -> RatPolynomial {
        IntPolynomial::from_ints(coeffs).to_rational()
    }

    fn rat_frac(num: i64, den: i64) -> Rational {
        Rational::new(Int::from(num), Int::from(den))
    }

    #[test]
    fn exp_of_zero_rate_is_one() {
        assert_eq!(
            ZSeries::exp_linear(&RatPolynomial::zero(), 4),
            ZSeries::one(4)
        );
    }

    #[test]
    fn exp_linear_low_order_terms() {
        // exp(k(x-1) z) for k = 2 up to z^2: 1 + 2(x-1) z + 2(x-1)^2 z^2
        let rate = rat(&[-2, 2]);
        let series = ZSeries::exp_linear(&rate, 2);
        assert_eq!(series.coeff(0), &rat(&[1]));
        assert_eq!(series.coeff(1), &rat(&[-2, 2]));
        assert_eq!(series.coeff(2), &rat(&[2, -4, 2]));
    }

    #[test]
    fn exp_linear_order_one() {
        // exp(2(x^2-1) z) truncated after z: 1 + 2(x^2-1) z
        let series = ZSeries::exp_linear(&rat(&[-2, 0, 2]), 1);
        assert_eq!(series.coeff(0), &rat(&[1]));
        assert_eq!(series.coeff(1), &rat(&[-2, 0, 2]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let s = ZSeries::exp_linear(&rat(&[0, 2]), 5);
        assert_eq!(s.mul(&ZSeries::one(5)).unwrap(), s);
    }

    #[test]
    fn mul_difference_of_squares() {
        let one_plus = ZSeries::from_coeffs(vec![rat(&[1]), rat(&[1]), rat(&[])]);
        let one_minus = ZSeries::from_coeffs(vec![rat(&[1]), rat(&[-1]), rat(&[])]);
        let want = ZSeries::from_coeffs(vec![rat(&[1]), rat(&[]), rat(&[-1])]);
        assert_eq!(one_plus.mul(&one_minus).unwrap(), want);
    }

    #[test]
    fn exp_product_matches_exp_of_sum() {
        // The Cauchy product of exp(az) and exp(bz) must match exp((a+b)z),
        // whose coefficients (a+b)^m / m! are computed by a different route.
        let a = rat(&[0, 2]);
        let b = rat(&[1, -1]);
        let product = ZSeries::exp_linear(&a, 8)
            .mul(&ZSeries::exp_linear(&b, 8))
            .unwrap();
        assert_eq!(product, ZSeries::exp_linear(&(&a + &b), 8));
    }

    #[test]
    fn exp_inverse_cancels() {
        let c = rat(&[3, 0, -1]);
        let product = ZSeries::exp_linear(&c, 6)
            .mul(&ZSeries::exp_linear(&(-&c), 6))
            .unwrap();
        assert_eq!(product, ZSeries::one(6));
    }

    #[test]
    fn pow_one_is_identity_and_square_expands() {
        let s = ZSeries::from_coeffs(vec![rat(&[1]), rat(&[1]), rat(&[])]);
        assert_eq!(s.pow(1), s);
        let want = ZSeries::from_coeffs(vec![rat(&[1]), rat(&[2]), rat(&[1])]);
        assert_eq!(s.pow(2), want);
    }

    #[test]
    fn order_mismatch_is_reported() {
        let s = ZSeries::one(3);
        let t = ZSeries::one(4);
        assert_eq!(
            s.mul(&t).unwrap_err(),
            Error::SeriesOrderMismatch { left: 3, right: 4 }
        );
    }

    #[test]
    fn factorial_scaling_is_exact() {
        let s = ZSeries::exp_linear(&rat(&[1]), 5);
        assert_eq!(s.coeff(5), &RatPolynomial::constant(rat_frac(1, 120)));
    }
}
