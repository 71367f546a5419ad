//! Exact integer and rational arithmetic: arbitrary-precision scalars,
//! dense polynomials, and truncated power series in z with polynomial
//! coefficients. Everything here is immutable after construction and
//! free of floating point.

mod bivariate;
mod poly;
mod series;

pub use bivariate::BivariatePolynomial;
pub use poly::{Coeff, Polynomial};
pub use series::ZSeries;

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type IntPolynomial = Polynomial<Int>;
pub type RatPolynomial = Polynomial<Rational>;

pub fn factorial(n: usize) -> Int {
    let mut acc = Int::from(1);
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(1), Int::from(1));
        assert_eq!(factorial(5), Int::from(120));
        assert_eq!(factorial(20), Int::from(2_432_902_008_176_640_000u64));
    }
}
