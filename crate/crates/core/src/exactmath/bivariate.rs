//! Dense bivariate polynomials in x and q with integer coefficients.
//!
//! The grid is indexed `coeffs[i][j]` = coefficient of x^i q^j and kept
//! normalized (no trailing zeros in any row, no trailing empty rows), so
//! structural equality is polynomial equality.

use std::fmt;

use num_traits::Zero;

use super::{Int, Polynomial, RatPolynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    coeffs: Vec<Vec<Int>>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn monomial(c: Int, x_pow: usize, q_pow: usize) -> Self {
        let mut grid = vec![Vec::new(); x_pow + 1];
        grid[x_pow] = vec![Int::zero(); q_pow + 1];
        grid[x_pow][q_pow] = c;
        Self::from_grid(grid)
    }

    pub fn from_grid(mut grid: Vec<Vec<Int>>) -> Self {
        for row in &mut grid {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while grid.last().is_some_and(|row| row.is_empty()) {
            grid.pop();
        }
        BivariatePolynomial { coeffs: grid }
    }

    pub fn coeff(&self, x_pow: usize, q_pow: usize) -> Int {
        self.coeffs
            .get(x_pow)
            .and_then(|row| row.get(q_pow))
            .cloned()
            .unwrap_or_else(Int::zero)
    }

    pub fn grid(&self) -> &[Vec<Int>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let rows = self.coeffs.len().max(rhs.coeffs.len());
        let mut grid = vec![Vec::new(); rows];
        for (i, out) in grid.iter_mut().enumerate() {
            let a = self.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
            let b = rhs.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
            let cols = a.len().max(b.len());
            *out = vec![Int::zero(); cols];
            for (j, c) in a.iter().enumerate() {
                out[j] += c;
            }
            for (j, c) in b.iter().enumerate() {
                out[j] += c;
            }
        }
        Self::from_grid(grid)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let rows = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut grid: Vec<Vec<Int>> = vec![Vec::new(); rows];
        for (i, a_row) in self.coeffs.iter().enumerate() {
            for (p, b_row) in rhs.coeffs.iter().enumerate() {
                if a_row.is_empty() || b_row.is_empty() {
                    continue;
                }
                let cols = a_row.len() + b_row.len() - 1;
                let out = &mut grid[i + p];
                if out.len() < cols {
                    out.resize(cols, Int::zero());
                }
                for (j, a) in a_row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (r, b) in b_row.iter().enumerate() {
                        out[j + r] += a * b;
                    }
                }
            }
        }
        Self::from_grid(grid)
    }

    /// Formal derivative with respect to x.
    pub fn derivative_x(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let grid = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let factor = Int::from(i + 1);
                row.iter().map(|c| c * &factor).collect()
            })
            .collect();
        Self::from_grid(grid)
    }

    /// Substitutes an exact rational for q, leaving a polynomial in x.
    pub fn eval_q(&self, point: &Rational) -> RatPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for c in row.iter().rev() {
                    acc = acc * point + Rational::from_integer(c.clone());
                }
                acc
            })
            .collect();
        Polynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> BivariatePolynomial {
        BivariatePolynomial::monomial(Int::from(1), 0, 1)
    }

    fn x() -> BivariatePolynomial {
        BivariatePolynomial::monomial(Int::from(1), 1, 0)
    }

    #[test]
    fn derivative_of_linear_x_term() {
        // d/dx (qx + q^2) = q
        let p = q().mul(&x()).add(&q().mul(&q()));
        assert_eq!(p.derivative_x(), q());
    }

    #[test]
    fn derivative_of_constant_in_x() {
        assert_eq!(q().derivative_x(), BivariatePolynomial::zero());
    }

    #[test]
    fn derivative_power_rule() {
        // d/dx (x^2 q) = 2xq
        let p = x().mul(&x()).mul(&q());
        assert_eq!(
            p.derivative_x(),
            BivariatePolynomial::monomial(Int::from(2), 1, 1)
        );
    }

    #[test]
    fn eval_q_collapses_to_univariate() {
        // qx + q^2 at q = 1/2 gives x/2 + 1/4
        let p = q().mul(&x()).add(&q().mul(&q()));
        let half = Rational::new(Int::from(1), Int::from(2));
        let got = p.eval_q(&half);
        let want = RatPolynomial::from_coeffs(vec![
            Rational::new(Int::from(1), Int::from(4)),
            Rational::new(Int::from(1), Int::from(2)),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn normalization_trims_zero_fringe() {
        let grid = vec![
            vec![Int::from(1), Int::zero()],
            vec![Int::zero()],
            Vec::new(),
        ];
        let p = BivariatePolynomial::from_grid(grid);
        assert_eq!(p, BivariatePolynomial::monomial(Int::from(1), 0, 0));
    }
}
