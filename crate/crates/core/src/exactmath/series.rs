//! Graded dimension series: a finite numerator with rational exponents and a
//! global exponent shift, over a denominator `(1 − t)^n`, expanded exactly up
//! to a truncation depth.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

use super::Rational;

/// A series `t^shift · (Σ_i c_i t^{e_i}) / (1 − t)^n`, with exact expansion
/// up to `truncation_degree` above the lowest exponent.
///
/// Exponents are rationals because the shift is a `c'`-value, which need not
/// be integral; within one series, exponents that differ by non-integers
/// never interact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSeries {
    shift: Rational,
    numerator: Vec<(Rational, BigInt)>,
    denominator_power: usize,
    truncation_degree: u32,
}

impl GradedSeries {
    /// Build a series; numerator terms are merged by exponent, zero
    /// coefficients dropped, and the list sorted so exponents are strictly
    /// increasing.
    pub fn new(
        shift: Rational,
        numerator: Vec<(Rational, BigInt)>,
        denominator_power: usize,
        truncation_degree: u32,
    ) -> Self {
        let mut merged: BTreeMap<Rational, BigInt> = BTreeMap::new();
        for (e, c) in numerator {
            let entry = merged.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
        }
        merged.retain(|_, c| !c.is_zero());
        GradedSeries {
            shift,
            numerator: merged.into_iter().collect(),
            denominator_power,
            truncation_degree,
        }
    }

    pub fn shift(&self) -> &Rational {
        &self.shift
    }

    /// Numerator terms (exponent relative to the shift, coefficient),
    /// strictly increasing exponents, nonzero coefficients.
    pub fn numerator(&self) -> &[(Rational, BigInt)] {
        &self.numerator
    }

    pub fn denominator_power(&self) -> usize {
        self.denominator_power
    }

    pub fn truncation_degree(&self) -> u32 {
        self.truncation_degree
    }

    /// Numerator evaluated at `t = 1` (the alternating-sum limit).
    pub fn numerator_at_one(&self) -> BigInt {
        self.numerator.iter().map(|(_, c)| c.clone()).sum()
    }

    /// Exact expansion: every term with exponent at most
    /// `lowest exponent + truncation_degree`, in increasing exponent order.
    /// Exponents returned are absolute (shift included).
    pub fn expand(&self) -> Vec<(Rational, BigInt)> {
        let Some((min_rel, _)) = self.numerator.first() else {
            return Vec::new();
        };
        let bound = &self.shift + min_rel + Rational::from_integer(BigInt::from(self.truncation_degree));
        let mut acc: BTreeMap<Rational, BigInt> = BTreeMap::new();
        for (e, c) in &self.numerator {
            let start = &self.shift + e;
            if self.denominator_power == 0 {
                if start <= bound {
                    *acc.entry(start).or_insert_with(BigInt::zero) += c;
                }
                continue;
            }
            // c / (1-t)^n contributes c * C(n-1+k, n-1) at offset k.
            let mut k = BigInt::zero();
            let mut binom = BigInt::one();
            let mut exp = start;
            while exp <= bound {
                *acc.entry(exp.clone()).or_insert_with(BigInt::zero) += c * &binom;
                // C(n-1+k+1, n-1) = C(n-1+k, n-1) * (n+k) / (k+1)
                let n = BigInt::from(self.denominator_power);
                binom = binom * (&n + &k) / (&k + BigInt::one());
                k += BigInt::one();
                exp += Rational::one();
            }
        }
        acc.retain(|_, c| !c.is_zero());
        acc.into_iter().collect()
    }

    /// If `(1 − t)^n` divides the numerator exactly, return the resulting
    /// finite list of terms (absolute exponents); otherwise `None`.
    ///
    /// A series that is a polynomial is the signature of a
    /// finite-dimensional module.
    pub fn polynomial_detect(&self) -> Option<Vec<(Rational, BigInt)>> {
        // Terms whose exponents differ by a non-integer never combine, so
        // each congruence class mod 1 must be divisible separately.
        let mut classes: BTreeMap<Rational, Vec<(BigInt, BigInt)>> = BTreeMap::new();
        for (e, c) in &self.numerator {
            let class = e - e.floor();
            classes
                .entry(class)
                .or_default()
                .push((e.floor().to_integer(), c.clone()));
        }
        let mut out = Vec::new();
        for (class, terms) in classes {
            let base = terms.iter().map(|(k, _)| k.clone()).min().expect("nonempty");
            let top: BigInt = terms.iter().map(|(k, _)| k.clone()).max().expect("nonempty");
            let len = usize::try_from(&top - &base).expect("small offset range") + 1;
            let mut coeffs = vec![BigInt::zero(); len];
            for (k, c) in terms {
                let idx = usize::try_from(&k - &base).expect("in range");
                coeffs[idx] += c;
            }
            // Divide by (1 - t) repeatedly: P = (1-t) Q means Q_k = P_k + Q_{k-1},
            // exact iff the final carry vanishes (P(1) = 0).
            for _ in 0..self.denominator_power {
                let mut carry = BigInt::zero();
                for c in &mut coeffs {
                    carry += std::mem::take(c);
                    *c = carry.clone();
                }
                if !carry.is_zero() {
                    return None;
                }
                coeffs.pop();
            }
            for (k, c) in coeffs.into_iter().enumerate() {
                if !c.is_zero() {
                    let exp = &self.shift
                        + &class
                        + Rational::from_integer(&base + BigInt::from(k));
                    out.push((exp, c));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Some(out)
    }

    /// Validate the stored truncation is non-negative for expansion uses.
    pub fn check_truncation(truncation: i64) -> Result<u32> {
        u32::try_from(truncation)
            .map_err(|_| Error::Domain("truncation degree must be non-negative".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn terms(list: &[(i64, i64)]) -> Vec<(Rational, BigInt)> {
        list.iter().map(|&(e, c)| (rat(e), BigInt::from(c))).collect()
    }

    #[test]
    fn geometric_series() {
        let s = GradedSeries::new(rat(0), terms(&[(0, 1)]), 1, 3);
        assert_eq!(s.expand(), terms(&[(0, 1), (1, 1), (2, 1), (3, 1)]));
        assert_eq!(s.polynomial_detect(), None);
    }

    #[test]
    fn exact_division_single_power() {
        // (1 - t)/(1 - t) = 1
        let s = GradedSeries::new(rat(0), terms(&[(0, 1), (1, -1)]), 1, 5);
        assert_eq!(s.polynomial_detect(), Some(terms(&[(0, 1)])));
        assert_eq!(s.expand(), terms(&[(0, 1)]));
    }

    #[test]
    fn exact_division_square() {
        // (1 - 2t + t^2)/(1 - t)^2 = 1
        let s = GradedSeries::new(rat(0), terms(&[(0, 1), (1, -2), (2, 1)]), 2, 5);
        assert_eq!(s.polynomial_detect(), Some(terms(&[(0, 1)])));
    }

    #[test]
    fn shift_and_rational_exponents() {
        // t^{1/2} * (1 + t) / (1 - t), truncated 2 above the lowest exponent
        let s = GradedSeries::new(ratio(1, 2), terms(&[(0, 1), (1, 1)]), 1, 2);
        let expansion = s.expand();
        let expected: Vec<(Rational, BigInt)> = vec![
            (ratio(1, 2), BigInt::from(1)),
            (ratio(3, 2), BigInt::from(2)),
            (ratio(5, 2), BigInt::from(2)),
        ];
        assert_eq!(expansion, expected);
        assert_eq!(s.polynomial_detect(), None);
    }

    #[test]
    fn mixed_congruence_classes_divide_separately() {
        // (1 - t) + t^{1/2}(1 - t) over (1 - t): both classes exact.
        let numerator = vec![
            (rat(0), BigInt::from(1)),
            (rat(1), BigInt::from(-1)),
            (ratio(1, 2), BigInt::from(1)),
            (ratio(3, 2), BigInt::from(-1)),
        ];
        let s = GradedSeries::new(rat(0), numerator, 1, 4);
        let poly = s.polynomial_detect().unwrap();
        assert_eq!(
            poly,
            vec![
                (rat(0), BigInt::from(1)),
                (ratio(1, 2), BigInt::from(1)),
            ]
        );
        // one class divisible, the other not -> no polynomial
        let s = GradedSeries::new(
            rat(0),
            vec![
                (rat(0), BigInt::from(1)),
                (rat(1), BigInt::from(-1)),
                (ratio(1, 2), BigInt::from(1)),
            ],
            1,
            4,
        );
        assert_eq!(s.polynomial_detect(), None);
    }

    #[test]
    fn merging_and_zero_dropping() {
        let s = GradedSeries::new(
            rat(0),
            vec![
                (rat(1), BigInt::from(2)),
                (rat(0), BigInt::from(1)),
                (rat(1), BigInt::from(-2)),
            ],
            0,
            10,
        );
        assert_eq!(s.numerator(), &terms(&[(0, 1)])[..]);
        assert_eq!(s.numerator_at_one(), BigInt::from(1));
    }

    #[test]
    fn negative_shift() {
        // t^{-1} * (1 - t) / (1 - t)^2 = t^{-1}/(1 - t): all-ones from -1 on.
        let s = GradedSeries::new(rat(-1), terms(&[(0, 1), (1, -1)]), 2, 3);
        assert_eq!(
            s.expand(),
            terms(&[(-1, 1), (0, 1), (1, 1), (2, 1)])
        );
        assert_eq!(s.polynomial_detect(), None);
    }
}
