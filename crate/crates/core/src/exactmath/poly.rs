//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored in ascending degree order and the
//! representation is always normalized: the highest-index entry is
//! nonzero unless the polynomial is the zero polynomial (empty vector),
//! so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{Int, Rational};

/// Coefficient ring bound: exact, clonable, with ring operations.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: C, degree: usize) -> Self {
        let mut coeffs = vec![C::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of x^degree (zero beyond the stored length).
    pub fn coeff(&self, degree: usize) -> C {
        self.coeffs.get(degree).cloned().unwrap_or_else(C::zero)
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &C) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.clone() * factor.clone())
                .collect(),
        )
    }

    /// Multiplies by x^exp.
    pub fn mul_xpow(&self, exp: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); exp];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Returns x^bound * p(1/x): coefficient j of the result is coefficient
    /// (bound - j) of the input. Fails when deg p > bound.
    pub fn reverse(&self, bound: usize) -> Result<Self> {
        if let Some(degree) = self.degree() {
            if degree > bound {
                return Err(Error::DegreeExceedsBound { degree, bound });
            }
        }
        let mut coeffs = vec![C::zero(); bound + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[bound - j] = c.clone();
        }
        Ok(Self::from_coeffs(coeffs))
    }

    /// Returns p(x^2).
    pub fn subst_x_squared(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); 2 * (self.coeffs.len() - 1) + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * j] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, point: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point.clone() + c.clone();
        }
        acc
    }

    /// Value at x = 1.
    pub fn coeff_sum(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c.clone())
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: Self) -> Polynomial<C> {
        let mut coeffs = vec![C::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j] = coeffs[j].clone() + c.clone();
        }
        for (j, c) in rhs.coeffs.iter().enumerate() {
            coeffs[j] = coeffs[j].clone() + c.clone();
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Self) -> Polynomial<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Self) -> Polynomial<C> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Polynomial<Int> {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn from_histogram(hist: &[u64]) -> Self {
        Self::from_coeffs(hist.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn to_rational(&self) -> Polynomial<Rational> {
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Exact division over the integers. Returns `NonDivisible` when the
    /// divisor does not divide `self` exactly.
    pub fn exact_div(&self, divisor: &Polynomial<Int>) -> Result<Polynomial<Int>> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dd = divisor.degree().expect("nonzero divisor");
        let nd = self.degree().expect("nonzero dividend");
        if nd < dd {
            return Err(Error::NonDivisible);
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Int::zero(); nd - dd + 1];
        for t in (0..quot.len()).rev() {
            let r = rem[t + dd].clone();
            if r.is_zero() {
                continue;
            }
            if !(&r % lead).is_zero() {
                return Err(Error::NonDivisible);
            }
            let q = &r / lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[t + i] -= dc * &q;
            }
            quot[t] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }
}

impl Polynomial<Rational> {
    /// Converts to an integer polynomial when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial<Int>> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::super::{IntPolynomial, RatPolynomial, Rational};
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(coeffs)
    }

    #[test]
    fn mul_binomial_square() {
        let one_plus_x = p(&[1, 1]);
        assert_eq!(&one_plus_x * &one_plus_x, p(&[1, 2, 1]));
    }

    #[test]
    fn mul_by_zero_and_one() {
        let q = p(&[1, 10, 4]);
        assert_eq!(&q * &IntPolynomial::zero(), IntPolynomial::zero());
        assert_eq!(&q * &IntPolynomial::one(), q);
    }

    #[test]
    fn exact_div_extracts_cofactor() {
        // (x + 2x^2 + 2x^3 + x^4) / (1 + x) = x + x^2 + x^3,
        // checked by multiplying the quotient back.
        let dividend = p(&[0, 1, 2, 2, 1]);
        let divisor = p(&[1, 1]);
        let quotient = dividend.exact_div(&divisor).unwrap();
        assert_eq!(quotient, p(&[0, 1, 1, 1]));
        assert_eq!(&divisor * &quotient, dividend);
    }

    #[test]
    fn exact_div_by_one_is_identity() {
        let q = p(&[3, 0, 5]);
        assert_eq!(q.exact_div(&IntPolynomial::one()).unwrap(), q);
    }

    #[test]
    fn exact_div_detects_remainder() {
        let err = p(&[1, 1]).exact_div(&p(&[0, 1])).unwrap_err();
        assert_eq!(err, Error::NonDivisible);
    }

    #[test]
    fn exact_div_by_zero() {
        let err = p(&[1, 1]).exact_div(&IntPolynomial::zero()).unwrap_err();
        assert_eq!(err, Error::DivisionByZero);
    }

    #[test]
    fn reverse_swaps_coefficients() {
        // (1, 2, 0) reversed at bound 2 gives (0, 2, 1).
        assert_eq!(p(&[1, 2]).reverse(2).unwrap(), p(&[0, 2, 1]));
    }

    #[test]
    fn reverse_fixes_palindromes() {
        let pal = p(&[1, 3, 3, 1]);
        assert_eq!(pal.reverse(3).unwrap(), pal);
    }

    #[test]
    fn reverse_of_constant() {
        assert_eq!(IntPolynomial::one().reverse(3).unwrap(), p(&[0, 0, 0, 1]));
    }

    #[test]
    fn reverse_rejects_low_bound() {
        let err = p(&[1, 2, 3]).reverse(1).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeExceedsBound {
                degree: 2,
                bound: 1
            }
        );
    }

    #[test]
    fn subst_x_squared_spreads_coefficients() {
        assert_eq!(p(&[1, 2]).subst_x_squared(), p(&[1, 0, 2]));
        assert_eq!(
            IntPolynomial::zero().subst_x_squared(),
            IntPolynomial::zero()
        );
        assert_eq!(p(&[1, 10, 4]).subst_x_squared(), p(&[1, 0, 10, 0, 4]));
    }

    #[test]
    fn eval_and_coeff_sum() {
        let q = p(&[1, 10, 4]);
        assert_eq!(q.coeff_sum(), Int::from(15));
        assert_eq!(q.eval(&Int::from(2)), Int::from(1 + 20 + 16));
    }

    #[test]
    fn rational_to_integer_roundtrip() {
        let q = p(&[2, 0, -7]);
        assert_eq!(q.to_rational().to_integer().unwrap(), q);
        let half = RatPolynomial::constant(Rational::new(Int::from(1), Int::from(2)));
        assert!(half.to_integer().is_none());
    }

    #[test]
    fn display_lists_coefficients() {
        assert_eq!(p(&[1, 10, 4]).to_string(), "[1, 10, 4]");
        assert_eq!(IntPolynomial::zero().to_string(), "[]");
    }
}
