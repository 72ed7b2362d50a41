//! Univariate polynomials with arbitrary-precision integer coefficients.

use crate::error::Error;
use num::traits::{One, Signed, Zero};
use num::{BigInt, BigRational};

/// A polynomial with integer coefficients indexed by exponent.
/// Trailing zero coefficients are trimmed; the zero polynomial has an empty
/// coefficient list and its degree is `None` (a distinct sentinel, never -1).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// The monomial c * t^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of t^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn multiply(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by t^k.
    pub fn shift_by_t_power(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn evaluate_at_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn evaluate_at_integer(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// t^total_degree * p(1/t): coefficient reversal within
    /// `total_degree + 1` slots. Rejects `total_degree < deg p`.
    pub fn substitute_reciprocal(&self, total_degree: usize) -> Result<IntPolynomial, Error> {
        if let Some(d) = self.degree() {
            if total_degree < d {
                return Err(Error::DegreeTooLarge {
                    total: total_degree,
                    degree: d,
                });
            }
        }
        let mut coeffs = vec![BigInt::zero(); total_degree + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[total_degree - k] = c.clone();
        }
        Ok(IntPolynomial::new(coeffs))
    }

    /// (1 - t)^k, exact binomial expansion.
    pub fn one_minus_t_pow(k: usize) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        let mut c = BigInt::one();
        for (i, slot) in coeffs.iter_mut().enumerate() {
            *slot = if i % 2 == 0 { c.clone() } else { -c.clone() };
            // next binomial coefficient C(k, i+1)
            c = c * BigInt::from(k - i) / BigInt::from(i + 1);
        }
        IntPolynomial::new(coeffs)
    }

    /// (t - 1)^k.
    pub fn t_minus_one_pow(k: usize) -> IntPolynomial {
        let p = IntPolynomial::one_minus_t_pow(k);
        if k % 2 == 0 {
            p
        } else {
            p.scale(&BigInt::from(-1))
        }
    }

    /// First `len` power-series coefficients of `self / (1 - t)^k`.
    pub fn series_over_one_minus_t_pow(&self, k: usize, len: usize) -> Vec<BigInt> {
        // 1/(1-t)^k = sum_m C(m+k-1, k-1) t^m
        let mut out = vec![BigInt::zero(); len];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() || j >= len {
                continue;
            }
            let mut binom = BigInt::one();
            for (step, slot) in out.iter_mut().skip(j).enumerate() {
                *slot += c * &binom;
                if k == 0 {
                    break;
                }
                binom = binom * BigInt::from(step + k) / BigInt::from(step + 1);
            }
        }
        out
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Ascending display with `t` as the variable, e.g. `1 + 3t + 4t^2`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = match k {
                0 => mag.to_string(),
                _ => {
                    let var = if k == 1 { "t".to_string() } else { format!("t^{k}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{mag}{var}")
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{term}")
                } else {
                    term
                });
            } else {
                parts.push(format!("{} {term}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

/// Binomial coefficient C(n, k) as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_degree_sentinel() {
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(IntPolynomial::from_i64(&[0, 0]).degree(), None);
        assert_eq!(IntPolynomial::from_i64(&[5]).degree(), Some(0));
    }

    #[test]
    fn multiply_difference_of_squares() {
        let a = IntPolynomial::from_i64(&[1, -1]);
        let b = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(a.multiply(&b), IntPolynomial::from_i64(&[1, 0, -1]));
    }

    #[test]
    fn evaluate_example_delta_at_one() {
        let delta = IntPolynomial::from_i64(&[1, 3, 4]);
        let one = BigRational::from(BigInt::one());
        assert_eq!(
            delta.evaluate_at_rational(&one),
            BigRational::from(BigInt::from(8))
        );
    }

    #[test]
    fn reciprocal_substitution() {
        let p = IntPolynomial::from_i64(&[1, 3, 4]);
        let q = p.substitute_reciprocal(6).unwrap();
        assert_eq!(q, IntPolynomial::from_i64(&[0, 0, 0, 0, 4, 3, 1]));
        assert!(matches!(
            p.substitute_reciprocal(1),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn one_minus_t_powers() {
        assert_eq!(IntPolynomial::one_minus_t_pow(0), IntPolynomial::one());
        assert_eq!(
            IntPolynomial::one_minus_t_pow(2),
            IntPolynomial::from_i64(&[1, -2, 1])
        );
        assert_eq!(
            IntPolynomial::t_minus_one_pow(3),
            IntPolynomial::from_i64(&[-1, 3, -3, 1])
        );
    }

    #[test]
    fn series_expansion() {
        // (1 + t) / (1 - t)^3 = 1 + 4t + 9t^2 + 16t^3 + ...
        let p = IntPolynomial::from_i64(&[1, 1]);
        let s = p.series_over_one_minus_t_pow(3, 4);
        let expect: Vec<BigInt> = [1, 4, 9, 16].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn display_ascending() {
        assert_eq!(IntPolynomial::from_i64(&[1, 3, 4]).display(), "1 + 3t + 4t^2");
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).display(), "t");
        assert_eq!(IntPolynomial::from_i64(&[1, -2, 1]).display(), "1 - 2t + t^2");
        assert_eq!(IntPolynomial::zero().display(), "0");
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(5, 0), BigInt::one());
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    proptest! {
        #[test]
        fn reciprocal_is_involution(coeffs in proptest::collection::vec(-20i64..=20, 1..6), extra in 0usize..4) {
            let p = IntPolynomial::from_i64(&coeffs);
            if let Some(d) = p.degree() {
                let total = d + extra;
                let q = p.substitute_reciprocal(total).unwrap();
                prop_assert_eq!(q.substitute_reciprocal(total).unwrap(), p);
            }
        }

        #[test]
        fn mul_matches_evaluation(a in proptest::collection::vec(-9i64..=9, 0..5),
                                  b in proptest::collection::vec(-9i64..=9, 0..5),
                                  x in -5i64..=5) {
            let pa = IntPolynomial::from_i64(&a);
            let pb = IntPolynomial::from_i64(&b);
            let xi = BigInt::from(x);
            let lhs = pa.multiply(&pb).evaluate_at_integer(&xi);
            let rhs = pa.evaluate_at_integer(&xi) * pb.evaluate_at_integer(&xi);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
