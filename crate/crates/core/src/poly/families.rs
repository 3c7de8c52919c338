//! Named polynomial and integer families: Eulerian polynomials, q-factorials,
//! the block multinomial `M_{n,k}`, factorials and Catalan numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::LaurentPoly;
use crate::error::{invalid, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    // C_{i+1} = C_i · 2(2i+1) / (i+2), exact at every step.
    (0..n).fold(BigInt::one(), |c, i| c * (2 * (2 * i + 1)) / (i + 2))
}

/// The Eulerian polynomial `A_m(q)`, with `A_0 = 1`.
///
/// Built row by row from the Eulerian-number triangle
/// `E(m, j) = (j + 1) E(m-1, j) + (m - j) E(m-1, j-1)`.
pub fn eulerian(m: usize) -> LaurentPoly {
    let mut row: Vec<BigInt> = vec![BigInt::one()];
    for size in 1..=m {
        let mut next = vec![BigInt::default(); size];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < row.len() {
                *slot += &row[j] * (j + 1);
            }
            if j >= 1 && j - 1 < row.len() {
                *slot += &row[j - 1] * (size - j);
            }
        }
        row = next;
    }
    LaurentPoly::from_coeffs(row)
}

/// `[i]_q = 1 + q + … + q^{i-1}`.
pub fn q_integer(i: usize) -> LaurentPoly {
    LaurentPoly::from_coeffs(std::iter::repeat_n(1, i))
}

/// `[m]_q! = [1]_q [2]_q ⋯ [m]_q`, with `[0]_q! = 1`.
pub fn q_factorial(m: usize) -> LaurentPoly {
    (1..=m).map(q_integer).product()
}

/// `M_{n,k} = n! / ((d+1)!^r · d!^{k-r})` where `n = dk + r`, `0 <= r < k`.
pub fn multinomial_mnk(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return invalid(format!("block width {k} is outside 1..={n}"));
    }
    let (d, r) = n.div_rem(&k);
    let denom = num_traits::pow(factorial(d + 1), r) * num_traits::pow(factorial(d), k - r);
    Ok(factorial(n) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use std::collections::BTreeMap;

    // Oracle: distribution of a statistic over S_m via itertools permutations.
    fn brute(m: usize, stat: impl Fn(&[usize]) -> i64) -> LaurentPoly {
        let mut counts: BTreeMap<i64, i64> = BTreeMap::new();
        for w in (1..=m).permutations(m) {
            *counts.entry(stat(&w)).or_default() += 1;
        }
        LaurentPoly::from_terms(counts)
    }

    fn des(w: &[usize]) -> i64 {
        w.windows(2).filter(|p| p[0] > p[1]).count() as i64
    }

    fn inv(w: &[usize]) -> i64 {
        w.iter().tuple_combinations().filter(|(a, b)| a > b).count() as i64
    }

    #[test]
    fn eulerian_examples() {
        assert_eq!(eulerian(0), LaurentPoly::one());
        assert_eq!(eulerian(1), LaurentPoly::one());
        assert_eq!(eulerian(3), LaurentPoly::from_coeffs([1, 4, 1]));
        assert_eq!(eulerian(5), LaurentPoly::from_coeffs([1, 26, 66, 26, 1]));
        assert_eq!(eulerian(4).eval_at_one(), BigInt::from(24));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0), LaurentPoly::one());
        assert_eq!(q_factorial(1), LaurentPoly::one());
        assert_eq!(q_factorial(3), LaurentPoly::from_coeffs([1, 2, 2, 1]));
    }

    #[test]
    fn families_match_brute_force() {
        for m in 0..=8 {
            assert_eq!(eulerian(m), brute(m, des), "A_{m}");
            assert_eq!(q_factorial(m), brute(m, inv), "[{m}]_q!");
            assert_eq!(eulerian(m).eval_at_one(), factorial(m));
            assert_eq!(q_factorial(m).eval_at_one(), factorial(m));
        }
    }

    #[test]
    fn eulerian_is_palindromic() {
        for m in 1..=8 {
            let a = eulerian(m);
            assert_eq!(a.reciprocal_transform(m as i64 - 1), a);
        }
    }

    #[test]
    fn eulerian_series_identity() {
        // Σ_j (1+j)^n q^j · (1-q)^{n+1} = A_n(q), compared through degree n+2.
        for n in 1..=8usize {
            let top = n as i64 + 2;
            let series = LaurentPoly::from_terms((0..=top).map(|j| (j, BigInt::from(1 + j).pow(n as u32))));
            let one_minus_q = LaurentPoly::from_coeffs([1, -1]);
            let lhs = (&series * &one_minus_q.pow(n as i64 + 1).unwrap()).truncate(top);
            assert_eq!(lhs, eulerian(n), "n = {n}");
        }
    }

    #[test]
    fn multinomial_examples() {
        for n in 1..=9 {
            assert_eq!(multinomial_mnk(n, 1).unwrap(), BigInt::one());
        }
        assert_eq!(multinomial_mnk(7, 2).unwrap(), BigInt::from(35));
        assert_eq!(multinomial_mnk(7, 3).unwrap(), BigInt::from(210));
        assert_eq!(multinomial_mnk(6, 3).unwrap(), BigInt::from(90));
        assert!(multinomial_mnk(3, 0).is_err());
        assert!(multinomial_mnk(3, 4).is_err());
        for n in 1..=12usize {
            for k in 1..=n {
                let (d, r) = n.div_rem(&k);
                let denom = num_traits::pow(factorial(d + 1), r) * num_traits::pow(factorial(d), k - r);
                assert_eq!(multinomial_mnk(n, k).unwrap() * denom, factorial(n));
            }
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), BigInt::from(c));
        }
    }
}
