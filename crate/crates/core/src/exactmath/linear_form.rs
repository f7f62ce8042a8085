//! Linear forms `a_0 + a*h + b_0*h_0 + … + b_{d-1}*h_{d-1}` with exact
//! rational coefficients. These are the values of the c-function.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

use super::{parse_rational, Rational};

/// A parameter variable: `h` (the symmetric-type class) or `h_r` for
/// `r = 0..d-1` (the diagonal-type class).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// The variable `h`.
    H,
    /// The variable `h_r`.
    Hr(usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::H => write!(f, "h"),
            Var::Hr(r) => write!(f, "h_{r}"),
        }
    }
}

impl Var {
    fn parse(text: &str) -> Result<Var> {
        if text == "h" {
            return Ok(Var::H);
        }
        if let Some(idx) = text.strip_prefix("h_") {
            if let Ok(r) = idx.parse::<usize>() {
                return Ok(Var::Hr(r));
            }
        }
        Err(Error::Parse(format!("`{text}` is not a parameter variable")))
    }
}

/// An exact linear function of the parameter variables.
///
/// Zero coefficients are never stored, so structural equality is
/// coefficient-wise equality of forms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearForm {
    constant: Rational,
    coeffs: BTreeMap<Var, Rational>,
}

impl LinearForm {
    /// The zero form.
    pub fn zero() -> Self {
        Self::default()
    }

    /// A constant form.
    pub fn constant(c: Rational) -> Self {
        LinearForm {
            constant: c,
            coeffs: BTreeMap::new(),
        }
    }

    /// The form `1*v`.
    pub fn variable(v: Var) -> Self {
        Self::term(Rational::one(), v)
    }

    /// The form `coeff*v`.
    pub fn term(coeff: Rational, v: Var) -> Self {
        let mut form = Self::zero();
        form.add_term(coeff, v);
        form
    }

    /// Add `coeff*v` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, coeff: Rational, v: Var) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(v).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    /// Add a constant in place.
    pub fn add_constant(&mut self, c: Rational) {
        self.constant += c;
    }

    /// The constant part.
    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    /// The coefficient of `v` (zero if absent).
    pub fn coefficient(&self, v: Var) -> Rational {
        self.coeffs.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterate over the (variable, coefficient) pairs in variable order.
    pub fn terms(&self) -> impl Iterator<Item = (Var, &Rational)> {
        self.coeffs.iter().map(|(v, c)| (*v, c))
    }

    /// True if no variable survives.
    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value, provided the form is constant.
    pub fn as_constant(&self) -> Option<&Rational> {
        if self.is_constant() {
            Some(&self.constant)
        } else {
            None
        }
    }

    /// Multiply by a scalar.
    pub fn scale(&self, s: &Rational) -> LinearForm {
        if s.is_zero() {
            return LinearForm::zero();
        }
        LinearForm {
            constant: &self.constant * s,
            coeffs: self
                .coeffs
                .iter()
                .map(|(v, c)| (*v, c * s))
                .collect(),
        }
    }

    /// Substitute rational values for some variables; variables assigned
    /// `None` stay symbolic.
    pub fn substitute<F>(&self, assignment: F) -> LinearForm
    where
        F: Fn(Var) -> Option<Rational>,
    {
        let mut out = LinearForm::constant(self.constant.clone());
        for (v, c) in &self.coeffs {
            match assignment(*v) {
                Some(value) => out.add_constant(c * value),
                None => out.add_term(c.clone(), *v),
            }
        }
        out
    }

    /// Rename every variable; used to re-express a level-`s` form in a window
    /// `h_offset, …` of the full variable list.
    pub fn rename<F>(&self, f: F) -> LinearForm
    where
        F: Fn(Var) -> Var,
    {
        let mut out = LinearForm::constant(self.constant.clone());
        for (v, c) in &self.coeffs {
            out.add_term(c.clone(), f(*v));
        }
        out
    }

    /// Parse the canonical text form produced by `Display`.
    pub fn parse(text: &str) -> Result<LinearForm> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty linear form".into()));
        }
        let mut form = LinearForm::zero();
        // Split into signed terms: a leading '-' binds to the first term;
        // subsequent terms are joined by " + " or " - ".
        let mut rest = text;
        let mut sign = Rational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        }
        loop {
            let (term, tail) = match rest.find(" + ").into_iter().chain(rest.find(" - ")).min() {
                Some(pos) => (&rest[..pos], Some((&rest[pos + 1..pos + 2] == "-", &rest[pos + 3..]))),
                None => (rest, None),
            };
            let term = term.trim();
            match term.split_once('*') {
                Some((coeff, var)) => {
                    form.add_term(&sign * parse_rational(coeff)?, Var::parse(var.trim())?)
                }
                None => {
                    if let Ok(v) = Var::parse(term) {
                        form.add_term(sign.clone(), v);
                    } else {
                        form.add_constant(&sign * parse_rational(term)?);
                    }
                }
            }
            match tail {
                Some((neg, t)) => {
                    sign = if neg { -Rational::one() } else { Rational::one() };
                    rest = t;
                }
                None => break,
            }
        }
        Ok(form)
    }
}

/// The integer `a − b` if the difference has no variable part and an
/// integral constant; `None` otherwise.
///
/// This is the membership test "difference of c-values lies in Z" used by
/// linkage and by the category-O comparison.
pub fn integer_difference(a: &LinearForm, b: &LinearForm) -> Option<BigInt> {
    let diff = a.clone() - b.clone();
    let value = diff.as_constant()?;
    if value.denom().is_one() {
        Some(value.numer().clone())
    } else {
        None
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(mut self, rhs: LinearForm) -> LinearForm {
        self.constant += rhs.constant;
        for (v, c) in rhs.coeffs {
            self.add_term(c, v);
        }
        self
    }
}

impl Sub for LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: LinearForm) -> LinearForm {
        self + (-rhs)
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm {
            constant: -self.constant,
            coeffs: self.coeffs.into_iter().map(|(v, c)| (v, -c)).collect(),
        }
    }
}

impl Mul<Rational> for LinearForm {
    type Output = LinearForm;
    fn mul(self, rhs: Rational) -> LinearForm {
        self.scale(&rhs)
    }
}

impl fmt::Display for LinearForm {
    /// Canonical text form: constant first (omitted when zero unless the
    /// whole form is zero), then variable terms in variable order, joined by
    /// ` + ` / ` - `; unit coefficients print as the bare variable.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        if !self.constant.is_zero() || self.coeffs.is_empty() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (v, c) in &self.coeffs {
            let (sep, shown) = if first {
                ("", c.clone())
            } else if c.is_negative() {
                (" - ", -c.clone())
            } else {
                (" + ", c.clone())
            };
            if shown.is_one() {
                write!(f, "{sep}{v}")?;
            } else if first && shown.is_negative() && (-shown.clone()).is_one() {
                write!(f, "-{v}")?;
            } else {
                write!(f, "{sep}{shown}*{v}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{rat, ratio};

    fn form(constant: i64, h: i64, hr: &[(usize, i64)]) -> LinearForm {
        let mut f = LinearForm::constant(rat(constant));
        f.add_term(rat(h), Var::H);
        for &(r, c) in hr {
            f.add_term(rat(c), Var::Hr(r));
        }
        f
    }

    #[test]
    fn zero_coefficients_are_absent() {
        let mut f = form(0, 2, &[(0, 3)]);
        f.add_term(rat(-2), Var::H);
        assert_eq!(f.coefficient(Var::H), rat(0));
        assert_eq!(f, form(0, 0, &[(0, 3)]));
    }

    #[test]
    fn integer_difference_examples() {
        // a = 2h+1, b = 2h -> 1
        let a = form(1, 2, &[]);
        let b = form(0, 2, &[]);
        assert_eq!(integer_difference(&a, &b), Some(BigInt::from(1)));
        // a = 2h, b = h -> none (variable part survives)
        assert_eq!(integer_difference(&b, &form(0, 1, &[])), None);
        // a = 3/2, b = 1/2 -> 1
        let a = LinearForm::constant(ratio(3, 2));
        let b = LinearForm::constant(ratio(1, 2));
        assert_eq!(integer_difference(&a, &b), Some(BigInt::from(1)));
        // non-integral constant difference -> none
        assert_eq!(
            integer_difference(&LinearForm::constant(ratio(1, 3)), &LinearForm::zero()),
            None
        );
    }

    #[test]
    fn integer_difference_antisymmetric() {
        let pairs = [
            (form(3, 0, &[(1, 0)]), form(1, 0, &[])),
            (form(0, 2, &[]), form(0, 2, &[(0, 1)])),
            (form(5, -1, &[(2, 4)]), form(2, -1, &[(2, 4)])),
        ];
        for (a, b) in pairs {
            match (integer_difference(&a, &b), integer_difference(&b, &a)) {
                (Some(x), Some(y)) => assert_eq!(x, -y),
                (None, None) => {}
                other => panic!("asymmetric definedness: {other:?}"),
            }
        }
    }

    #[test]
    fn substitution() {
        let f = form(1, 2, &[(0, -3), (1, 1)]);
        let g = f.substitute(|v| match v {
            Var::H => Some(ratio(1, 2)),
            Var::Hr(0) => Some(rat(1)),
            _ => None,
        });
        // 1 + 2*(1/2) - 3*1 + h_1 = -1 + h_1
        assert_eq!(g, form(-1, 0, &[(1, 1)]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(LinearForm::zero().to_string(), "0");
        assert_eq!(form(0, -2, &[]).to_string(), "-2*h");
        assert_eq!(form(0, -1, &[]).to_string(), "-h");
        assert_eq!(form(1, 2, &[(0, -1)]).to_string(), "1 + 2*h - h_0");
        assert_eq!(
            form(0, 0, &[(0, -2), (1, 2)]).to_string(),
            "-2*h_0 + 2*h_1"
        );
        let mut f = LinearForm::constant(ratio(-1, 2));
        f.add_term(ratio(3, 2), Var::H);
        assert_eq!(f.to_string(), "-1/2 + 3/2*h");
    }

    #[test]
    fn parse_round_trip() {
        let samples = [
            LinearForm::zero(),
            form(7, 0, &[]),
            form(0, -2, &[]),
            form(-1, 1, &[(0, 5), (3, -2)]),
            {
                let mut f = LinearForm::constant(ratio(2, 3));
                f.add_term(ratio(-5, 7), Var::Hr(1));
                f
            },
        ];
        for f in samples {
            let text = f.to_string();
            assert_eq!(LinearForm::parse(&text).unwrap(), f, "text `{text}`");
        }
    }
}
