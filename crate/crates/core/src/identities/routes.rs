//! Every polynomial family, built by each of its independent routes.
//!
//! The A-family (the 1/k-Eulerian polynomials) has four routes: the
//! coefficient recurrence, the excedance/cycle sum over permutations, the
//! ascent sum over k-inversion sequences, and the ascent-plateau sum over
//! k-Stirling words. The B-family is the coefficient reversal x^n A(1/x),
//! with its own recurrence and its own statistic (ascent-plateaux with a
//! virtual leading zero). The C-family is extracted from A by an exact
//! division and must match the alternating-run distribution over the dual
//! set. Cross-route equality is what the checks module verifies.

use num_traits::{pow, One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{BivariatePolynomial, Int, IntPolynomial};
use crate::objects::{dual_permutations, inversion_sequences, k_stirling_words, permutations};
use crate::statistics::{
    alternating_runs, ascent_plateaus, ascent_plateaus0, cycles, excedances, interior_peaks,
    inversion_ascents, left_peaks, word_ascents,
};

use super::fold::{histogram, pair_histogram, weighted_histogram};

/// A_n^(k)(x) from the triangle recurrence
/// a_{n+1,j} = (1 + kj) a_{n,j} + k(n - j + 1) a_{n,j-1}, seeded a_{1,0} = 1.
pub fn a_by_recurrence(n: usize, k: usize) -> IntPolynomial {
    assert!(n >= 1 && k >= 1);
    let mut row = vec![Int::one()];
    for m in 1..n {
        let mut next = vec![Int::zero(); m + 1];
        for (j, out) in next.iter_mut().enumerate() {
            if j < row.len() {
                *out += Int::from(1 + k * j) * &row[j];
            }
            if j >= 1 && j - 1 < row.len() {
                *out += Int::from(k * (m - j + 1)) * &row[j - 1];
            }
        }
        row = next;
    }
    IntPolynomial::from_coeffs(row)
}

/// A_n^(k)(x) as sum over permutations of x^exc k^(n - cyc).
pub fn a_by_exc_cyc(n: usize, k: usize) -> IntPolynomial {
    assert!(n >= 1 && k >= 1);
    let base = Int::from(k);
    let coeffs = weighted_histogram(permutations(n), |p| {
        (excedances(p), pow(base.clone(), n - cycles(p)))
    });
    IntPolynomial::from_coeffs(coeffs)
}

/// A_n^(k)(x) as the ascent distribution over k-inversion sequences.
pub fn a_by_inv_ascents(n: usize, k: usize) -> IntPolynomial {
    assert!(n >= 1 && k >= 1);
    IntPolynomial::from_histogram(&histogram(inversion_sequences(n, k), inversion_ascents))
}

/// A_n^(k)(x) as the ascent-plateau distribution over k-Stirling words;
/// the statistic needs k >= 2.
pub fn a_by_ascent_plateau(n: usize, k: usize) -> Result<IntPolynomial> {
    assert!(n >= 1);
    if k < 2 {
        return Err(Error::RequiresK2 { k });
    }
    Ok(IntPolynomial::from_histogram(&histogram(
        k_stirling_words(n, k),
        |w| ascent_plateaus(w).expect("k >= 2 checked above"),
    )))
}

/// x^n A_n^(k)(1/x) from its own recurrence
/// b_{n+1,j} = kj b_{n,j} + (kn - kj + k + 1) b_{n,j-1}, seeded b_{1,1} = 1.
pub fn b_by_recurrence(n: usize, k: usize) -> IntPolynomial {
    assert!(n >= 1 && k >= 1);
    let mut row = vec![Int::zero(), Int::one()];
    for m in 1..n {
        let mut next = vec![Int::zero(); m + 2];
        for (j, out) in next.iter_mut().enumerate().skip(1) {
            if j < row.len() {
                *out += Int::from(k * j) * &row[j];
            }
            if j - 1 < row.len() {
                *out += Int::from(k * m + k + 1 - k * j) * &row[j - 1];
            }
        }
        row = next;
    }
    IntPolynomial::from_coeffs(row)
}

/// x^n A_n^(k)(1/x) as the distribution of ascent-plateaux with a virtual
/// leading zero; the statistic needs k >= 2.
pub fn b_by_ascent_plateau0(n: usize, k: usize) -> Result<IntPolynomial> {
    assert!(n >= 1);
    if k < 2 {
        return Err(Error::RequiresK2 { k });
    }
    Ok(IntPolynomial::from_histogram(&histogram(
        k_stirling_words(n, k),
        |w| ascent_plateaus0(w).expect("k >= 2 checked above"),
    )))
}

/// The bivariate excedance/cycle distribution over the symmetric group.
pub fn a_bivariate(n: usize) -> BivariatePolynomial {
    assert!(n >= 1);
    let grid = pair_histogram(permutations(n), |p| (excedances(p), cycles(p)));
    BivariatePolynomial::from_grid(
        grid.into_iter()
            .map(|row| row.into_iter().map(Int::from).collect())
            .collect(),
    )
}

/// A_n^(2)(x) as the interior-peak distribution over the dual set.
pub fn a2_by_interior_peaks(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    IntPolynomial::from_histogram(&histogram(dual_permutations(n), |(_, d)| {
        interior_peaks(d.permutation())
    }))
}

/// x^n A_n^(2)(1/x) as the left-peak distribution over the dual set.
pub fn a2_reversed_by_left_peaks(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    IntPolynomial::from_histogram(&histogram(dual_permutations(n), |(_, d)| {
        left_peaks(d.permutation())
    }))
}

/// C_n(x), extracted from (1+x) C_n(x) = x A_n^(2)(x^2) + x^{2n} A_n^(2)(1/x^2)
/// by exact division; C_0 = 1. A `NonDivisible` error here would indicate
/// a defect in the A-family routes, never valid data.
pub fn c_by_definition(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Ok(IntPolynomial::one());
    }
    let a = a_by_recurrence(n, 2);
    let spread = a.subst_x_squared();
    let sum = &spread.mul_xpow(1) + &spread.reverse(2 * n)?;
    sum.exact_div(&IntPolynomial::from_ints(&[1, 1]))
}

/// C_n(x) as the alternating-run distribution over the dual set.
pub fn c_by_runs(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    IntPolynomial::from_histogram(&histogram(dual_permutations(n), |(_, d)| {
        alternating_runs(d.permutation()).expect("dual permutations have length >= 2")
    }))
}

/// Second-order Eulerian polynomial: the ascent distribution over
/// Stirling permutations of order n.
pub fn second_order_eulerian(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    IntPolynomial::from_histogram(&histogram(k_stirling_words(n, 2), |w| {
        word_ascents(w.letters())
    }))
}

/// The same distribution, taken over the dual set instead; the relabeling
/// preserves ascents, so this must agree with `second_order_eulerian`.
pub fn second_order_eulerian_dual(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    IntPolynomial::from_histogram(&histogram(dual_permutations(n), |(_, d)| {
        word_ascents(d.permutation().values())
    }))
}

/// Row n of the signless Stirling numbers of the first kind, via the
/// product x(x+1)...(x+n-1).
pub fn stirling1_row(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    let mut acc = IntPolynomial::x();
    for i in 1..n {
        acc = &acc * &IntPolynomial::from_ints(&[i as i64, 1]);
    }
    acc
}

/// The same row by brute force: the cycle-count distribution over the
/// symmetric group. Practical for n <= 8.
pub fn stirling1_row_by_cycles(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    IntPolynomial::from_histogram(&histogram(permutations(n), cycles))
}
