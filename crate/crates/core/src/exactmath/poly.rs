//! Dense univariate polynomials over the integers, with the cyclotomic and
//! Poincaré constructors and the Φ_r-multiplicity used by the defect-1
//! criterion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// A polynomial over `Z`, coefficients lowest-degree-first, trailing zeros
/// stripped (the zero polynomial has an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Build from lowest-degree-first coefficients; trailing zeros dropped.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Lowest-degree-first coefficient slice.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division; errors unless the remainder is zero.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Domain("polynomial division is not exact".into()))
        }
    }

    /// Long division over Z. Requires every intermediate leading-coefficient
    /// division to be exact (always true for monic divisors such as
    /// cyclotomic polynomials and `t - 1`).
    pub fn div_rem(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&rem[k], &lead);
            if !r.is_zero() {
                return Err(Error::Domain(
                    "leading coefficient does not divide over Z".into(),
                ));
            }
            quot[k - dd] = q.clone();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] -= &q * c;
            }
        }
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs.clone())
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    /// Coefficient list lowest-degree-first, e.g. `[-1, 0, 1]` for `t^2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

fn divisors(n: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The m-th cyclotomic polynomial, by the recursive quotient
/// `Φ_m = (t^m − 1) / Π_{e|m, e<m} Φ_e` with exact integer division.
pub fn cyclotomic(m: usize) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::Domain("cyclotomic index must be positive".into()));
    }
    // Iterative over the divisor lattice: Φ_e for every e | m, ascending.
    let mut table: Vec<(usize, IntPoly)> = Vec::new();
    for e in divisors(m) {
        let mut p = {
            let mut coeffs = vec![BigInt::zero(); e + 1];
            coeffs[0] = -BigInt::one();
            coeffs[e] = BigInt::one();
            IntPoly::from_coeffs(coeffs)
        };
        for (f, phi) in &table {
            if e % f == 0 {
                p = p.exact_div(phi)?;
            }
        }
        table.push((e, p));
    }
    Ok(table.pop().expect("m is a divisor of itself").1)
}

/// `Π_i (t^{d_i} − 1)/(t − 1)`, the Poincaré polynomial attached to a list
/// of invariant degrees.
pub fn poincare_polynomial(degrees: &[usize]) -> IntPoly {
    let mut out = IntPoly::one();
    for &d in degrees {
        // (t^d - 1)/(t - 1) = 1 + t + ... + t^{d-1}
        let factor = IntPoly::from_coeffs(vec![BigInt::one(); d]);
        out = &out * &factor;
    }
    out
}

/// The largest `k` with `Φ_r^k | p`, by repeated exact division.
pub fn cyclotomic_multiplicity(p: &IntPoly, r: usize) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain(
            "cyclotomic multiplicity of the zero polynomial".into(),
        ));
    }
    let phi = cyclotomic(r)?;
    let mut k = 0;
    let mut current = p.clone();
    loop {
        let (q, rem) = current.div_rem(&phi)?;
        if !rem.is_zero() {
            return Ok(k);
        }
        k += 1;
        current = q;
    }
}
