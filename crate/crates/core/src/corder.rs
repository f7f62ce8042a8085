//! The c-function of a multipartition as a linear form in the parameter
//! variables, and the highest-weight order it induces on `P(d,n)` once
//! parameters are fixed (exactly or symbolically).
//!
//! Variable conventions: the diagonal hyperplane class carries `h_0 … h_{d-1}`,
//! the transposition class carries `h` with its second variable pinned to 0.
//! Two routes to the c-function are implemented: the closed display
//! ([`c_form`]) and the definition through normalized restriction
//! multiplicities ([`c_form_from_multiplicities`]); they differ by a form
//! independent of the label, so they induce the same orders.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed};

use crate::combinatorics::{bd_statistic, enumerate_multipartitions, Multipartition};
use crate::exactmath::{rat, LinearForm, Rational, Var};
use crate::{Error, Result};

/// A parameter value: an exact rational, or left symbolic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Symbolic,
    Exact(Rational),
}

impl ParamValue {
    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            ParamValue::Symbolic => None,
            ParamValue::Exact(r) => Some(r),
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Symbolic => write!(f, "sym"),
            ParamValue::Exact(r) => write!(f, "{r}"),
        }
    }
}

/// `d`, `n` and an assignment of each variable `h, h_0 … h_{d-1}` to either
/// an exact rational or "symbolic".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParameterSet {
    d: usize,
    n: u32,
    h: ParamValue,
    hr: Vec<ParamValue>,
}

impl ParameterSet {
    pub fn new(d: usize, n: u32, h: ParamValue, hr: Vec<ParamValue>) -> Result<ParameterSet> {
        if d == 0 || n == 0 {
            return Err(Error::Domain("parameter sets need d >= 1 and n >= 1".into()));
        }
        if hr.len() != d {
            return Err(Error::ShapeMismatch(format!(
                "expected {d} values h_0..h_{}, got {}",
                d - 1,
                hr.len()
            )));
        }
        Ok(ParameterSet { d, n, h, hr })
    }

    /// All variables symbolic.
    pub fn symbolic(d: usize, n: u32) -> Result<ParameterSet> {
        Self::new(d, n, ParamValue::Symbolic, vec![ParamValue::Symbolic; d])
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn h(&self) -> &ParamValue {
        &self.h
    }

    pub fn hr(&self) -> &[ParamValue] {
        &self.hr
    }

    /// True if every variable is an exact rational.
    pub fn is_fully_exact(&self) -> bool {
        self.h.as_exact().is_some() && self.hr.iter().all(|v| v.as_exact().is_some())
    }

    /// Substitute the exact values into a form, leaving symbolic variables.
    pub fn substitute(&self, form: &LinearForm) -> LinearForm {
        form.substitute(|v| match v {
            Var::H => self.h.as_exact().cloned(),
            Var::Hr(r) => self.hr.get(r).and_then(|p| p.as_exact().cloned()),
        })
    }
}

/// The closed display of the c-function:
/// `d Σ_{2≤r≤d} |λ^{(r)}| (h_{r-1} − h_0) − d (n(n−1)/2 + Σ(b−d)) h`.
pub fn c_form(lambda: &Multipartition) -> LinearForm {
    let d = lambda.d() as i64;
    let n = lambda.size() as i64;
    let stat = bd_statistic(lambda).total;
    let mut form = LinearForm::zero();
    for r in 2..=lambda.d() {
        let size = lambda.component(r).size() as i64;
        form.add_term(rat(d * size), Var::Hr(r - 1));
        form.add_term(rat(-d * size), Var::Hr(0));
    }
    form.add_term(rat(-d * (n * (n - 1) / 2 + stat)), Var::H);
    form
}

/// The c-function through the definition `Σ n_{H,j}(χ) h_{H,j}`, with the
/// normalized multiplicities of the restriction lemma:
/// `n_{H_0,l} = d |λ^{(l+1)}|` (class present only for `d ≥ 2`) and
/// `n_{H_1,0} = d (n(n−1)/2 − Σ(b−d))` (class present only for `n ≥ 2`;
/// its partner multiplies the pinned variable and drops out).
pub fn c_form_from_multiplicities(lambda: &Multipartition) -> Result<LinearForm> {
    let n = lambda.size() as i64;
    if n == 0 {
        return Err(Error::Domain("c-function from multiplicities needs n >= 1".into()));
    }
    let d = lambda.d() as i64;
    let stat = bd_statistic(lambda).total;
    let mut form = LinearForm::zero();
    if d >= 2 {
        for (l, comp) in lambda.components().iter().enumerate() {
            form.add_term(rat(d * comp.size() as i64), Var::Hr(l));
        }
    }
    if n >= 2 {
        form.add_term(rat(d * (n * (n - 1) / 2 - stat)), Var::H);
    }
    Ok(form)
}

/// `c` minus its value on the trivial label `((n), ∅, …, ∅)`: vanishes
/// exactly on the trivial label.
pub fn c_prime_form(lambda: &Multipartition) -> LinearForm {
    let n = lambda.size();
    if n == 0 {
        return LinearForm::zero();
    }
    let trivial = Multipartition::trivial(lambda.d(), n);
    let own = c_form_from_multiplicities(lambda).expect("n >= 1");
    let base = c_form_from_multiplicities(&trivial).expect("n >= 1");
    own - base
}

/// Which of the two order conventions to use when comparing labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderConvention {
    /// `λ > μ` iff `c_μ − c_λ` is a strictly positive integer.
    CategoryO,
    /// `λ > μ` iff `c_λ < c_μ` as exact rationals (any positive difference).
    CoarseLinear,
}

impl fmt::Display for OrderConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderConvention::CategoryO => write!(f, "categoryO"),
            OrderConvention::CoarseLinear => write!(f, "coarse"),
        }
    }
}

/// Outcome of comparing two labels under fixed parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Greater,
    Less,
    Incomparable,
    EqualLabel,
}

/// Compare `λ` against `μ` under the given parameters and convention.
/// Symbolic variables must cancel exactly in the difference for the pair to
/// be comparable; equal c-values with distinct labels are incomparable.
pub fn compare(
    lambda: &Multipartition,
    mu: &Multipartition,
    params: &ParameterSet,
    convention: OrderConvention,
) -> Result<Comparison> {
    if lambda.d() != params.d() || mu.d() != params.d() {
        return Err(Error::ShapeMismatch(format!(
            "labels with d = {}, {} against parameters with d = {}",
            lambda.d(),
            mu.d(),
            params.d()
        )));
    }
    if lambda.size() != params.n() || mu.size() != params.n() {
        return Err(Error::ShapeMismatch(format!(
            "labels of size {}, {} against parameters with n = {}",
            lambda.size(),
            mu.size(),
            params.n()
        )));
    }
    if lambda == mu {
        return Ok(Comparison::EqualLabel);
    }
    // λ > μ tests c_μ − c_λ.
    let diff = params.substitute(&(c_form(mu) - c_form(lambda)));
    let Some(value) = diff.as_constant() else {
        return Ok(Comparison::Incomparable);
    };
    let ordered = match convention {
        OrderConvention::CategoryO => {
            if !value.denom().is_one() {
                return Ok(Comparison::Incomparable);
            }
            value.numer().is_positive() as i8 - value.numer().is_negative() as i8
        }
        OrderConvention::CoarseLinear => {
            value.is_positive() as i8 - value.is_negative() as i8
        }
    };
    Ok(match ordered {
        1 => Comparison::Greater,
        -1 => Comparison::Less,
        _ => Comparison::Incomparable,
    })
}

/// The strict order induced on the labels of `P(d,n)`, stored as index
/// pairs `(i, j)` with `labels[i] < labels[j]`, transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPoset {
    labels: Vec<Multipartition>,
    strict: BTreeSet<(usize, usize)>,
}

impl OrderPoset {
    pub fn labels(&self) -> &[Multipartition] {
        &self.labels
    }

    /// The full strict relation as index pairs `(lower, upper)`.
    pub fn strict_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.strict
    }

    pub fn is_strictly_less(&self, i: usize, j: usize) -> bool {
        self.strict.contains(&(i, j))
    }

    pub fn is_antichain(&self) -> bool {
        self.strict.is_empty()
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict
            .iter()
            .copied()
            .filter(|&(i, j)| {
                !(0..self.labels.len())
                    .any(|k| self.strict.contains(&(i, k)) && self.strict.contains(&(k, j)))
            })
            .collect()
    }

    /// True iff every strict relation of `other` also holds here.
    /// Requires both posets to carry the same label sequence.
    pub fn refines(&self, other: &OrderPoset) -> Result<bool> {
        if self.labels != other.labels {
            return Err(Error::ShapeMismatch("posets over different label sets".into()));
        }
        Ok(other.strict.is_subset(&self.strict))
    }

    /// DOT text: one node per label, one edge per Hasse cover `lower -> upper`.
    /// `header` lines are embedded as `//` comments.
    pub fn to_dot(&self, header: &[String]) -> String {
        let mut out = String::from("digraph corder {\n");
        for line in header {
            out.push_str(&format!("  // {line}\n"));
        }
        out.push_str("  rankdir=BT;\n");
        for label in &self.labels {
            out.push_str(&format!("  \"{label}\";\n"));
        }
        for (i, j) in self.covers() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\";\n",
                self.labels[i], self.labels[j]
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON value with the label list and the full strict relation.
    pub fn to_json(&self) -> serde_json::Value {
        let labels: Vec<serde_json::Value> = self
            .labels
            .iter()
            .map(|l| serde_json::Value::String(l.to_string()))
            .collect();
        let strict: Vec<serde_json::Value> = self
            .strict
            .iter()
            .map(|&(i, j)| serde_json::json!([i, j]))
            .collect();
        serde_json::json!({
            "labels": labels,
            "strict_less": strict,
        })
    }

    /// Rebuild a poset from the JSON produced by [`OrderPoset::to_json`].
    pub fn from_json(value: &serde_json::Value) -> Result<OrderPoset> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("poset JSON must be an object".into()))?;
        let labels = obj
            .get("labels")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("poset JSON needs a `labels` array".into()))?
            .iter()
            .map(|v| {
                v.as_str()
                    .ok_or_else(|| Error::Parse("labels must be strings".into()))
                    .and_then(Multipartition::parse)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut strict = BTreeSet::new();
        for pair in obj
            .get("strict_less")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse("poset JSON needs a `strict_less` array".into()))?
        {
            let idx = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("strict_less entries must be index pairs".into()))?;
            let i = idx[0].as_u64().ok_or_else(|| Error::Parse("bad index".into()))? as usize;
            let j = idx[1].as_u64().ok_or_else(|| Error::Parse("bad index".into()))? as usize;
            if i >= labels.len() || j >= labels.len() {
                return Err(Error::Parse("strict_less index out of range".into()));
            }
            strict.insert((i, j));
        }
        Ok(OrderPoset { labels, strict })
    }
}

/// Pairwise-compare all of `P(d,n)` under the parameters and close
/// transitively (pairwise comparison is already transitive; the closure is a
/// structural guarantee).
pub fn build_order_poset(
    params: &ParameterSet,
    convention: OrderConvention,
) -> Result<OrderPoset> {
    let labels = enumerate_multipartitions(params.d(), params.n())?;
    let k = labels.len();
    let mut strict = BTreeSet::new();
    for i in 0..k {
        for j in (i + 1)..k {
            match compare(&labels[i], &labels[j], params, convention)? {
                Comparison::Greater => {
                    strict.insert((j, i));
                }
                Comparison::Less => {
                    strict.insert((i, j));
                }
                _ => {}
            }
        }
    }
    // transitive closure
    loop {
        let mut added = Vec::new();
        for &(i, j) in &strict {
            for &(j2, l) in strict.range((j, 0)..(j + 1, 0)) {
                debug_assert_eq!(j2, j);
                if !strict.contains(&(i, l)) {
                    added.push((i, l));
                }
            }
        }
        if added.is_empty() {
            break;
        }
        strict.extend(added);
    }
    Ok(OrderPoset { labels, strict })
}

/// Outcome of [`orders_equal`]: equality, or a witness pair ordered
/// differently by the two parameter sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrdersEqual {
    Equal,
    Differ {
        witness: (Multipartition, Multipartition),
    },
}

/// Whether two parameter sets induce the same order on `P(d,n)`; on failure
/// returns the first witness pair in label order.
pub fn orders_equal(
    params1: &ParameterSet,
    params2: &ParameterSet,
    convention: OrderConvention,
) -> Result<OrdersEqual> {
    if params1.d() != params2.d() || params1.n() != params2.n() {
        return Err(Error::ShapeMismatch(
            "parameter sets with different (d, n)".into(),
        ));
    }
    let poset1 = build_order_poset(params1, convention)?;
    let poset2 = build_order_poset(params2, convention)?;
    if poset1.strict == poset2.strict {
        return Ok(OrdersEqual::Equal);
    }
    let witness = poset1
        .strict
        .symmetric_difference(&poset2.strict)
        .next()
        .copied()
        .expect("sets differ");
    Ok(OrdersEqual::Differ {
        witness: (
            poset1.labels[witness.0].clone(),
            poset1.labels[witness.1].clone(),
        ),
    })
}

/// The parameter twist by the linear character that shifts the diagonal
/// class by `r`: `h_j ↦ h_{j+r mod d}`, `h` unchanged.
pub fn twist_parameters(params: &ParameterSet, r: usize) -> ParameterSet {
    let d = params.d();
    let hr = (0..d).map(|j| params.hr()[(j + r) % d].clone()).collect();
    ParameterSet {
        d,
        n: params.n(),
        h: params.h().clone(),
        hr,
    }
}

/// Class-wise shift of the parameters: adds `f_diagonal` to every `h_r`
/// simultaneously and `f_transposition` to `h`.
///
/// The diagonal-class shift is the normalization action: it leaves every
/// c-difference, hence every order, unchanged. The `h` shift moves `h`
/// relative to its pinned partner variable and is a genuine parameter
/// change. Symbolic entries stay symbolic.
pub fn normalize_shift(
    params: &ParameterSet,
    f_diagonal: &Rational,
    f_transposition: &Rational,
) -> ParameterSet {
    let shift = |v: &ParamValue, f: &Rational| match v {
        ParamValue::Symbolic => ParamValue::Symbolic,
        ParamValue::Exact(r) => ParamValue::Exact(r + f),
    };
    ParameterSet {
        d: params.d(),
        n: params.n(),
        h: shift(params.h(), f_transposition),
        hr: params.hr().iter().map(|v| shift(v, f_diagonal)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    fn mp(text: &str) -> Multipartition {
        Multipartition::parse(text).unwrap()
    }

    fn exact(values: &[(i64, i64)]) -> Vec<ParamValue> {
        values
            .iter()
            .map(|&(p, q)| ParamValue::Exact(ratio(p, q)))
            .collect()
    }

    fn params_d1(n: u32, h: (i64, i64)) -> ParameterSet {
        ParameterSet::new(1, n, ParamValue::Exact(ratio(h.0, h.1)), exact(&[(0, 1)])).unwrap()
    }

    #[test]
    fn c_form_examples() {
        assert_eq!(c_form(&mp("[2]")), LinearForm::zero());
        assert_eq!(c_form(&mp("[1,1]")), LinearForm::term(rat(-2), Var::H));
        let f = c_form(&mp("[|1]"));
        let mut expected = LinearForm::term(rat(2), Var::Hr(1));
        expected.add_term(rat(-2), Var::Hr(0));
        assert_eq!(f, expected);
    }

    #[test]
    fn c_form_from_multiplicities_examples() {
        assert_eq!(
            c_form_from_multiplicities(&mp("[2]")).unwrap(),
            LinearForm::term(rat(2), Var::H)
        );
        assert_eq!(
            c_form_from_multiplicities(&mp("[1,1]")).unwrap(),
            LinearForm::zero()
        );
        assert_eq!(
            c_form_from_multiplicities(&mp("[1|]")).unwrap(),
            LinearForm::term(rat(2), Var::Hr(0))
        );
        assert!(c_form_from_multiplicities(&mp("[|]")).is_err());
    }

    #[test]
    fn c_prime_examples() {
        for d in 1..=3usize {
            for n in 1..=4u32 {
                assert_eq!(
                    c_prime_form(&Multipartition::trivial(d, n)),
                    LinearForm::zero()
                );
            }
        }
        assert_eq!(c_prime_form(&mp("[1,1]")), LinearForm::term(rat(-2), Var::H));
        let f = c_prime_form(&mp("[|1]"));
        let mut expected = LinearForm::term(rat(2), Var::Hr(1));
        expected.add_term(rat(-2), Var::Hr(0));
        assert_eq!(f, expected);
    }

    #[test]
    fn c_prime_vanishes_only_on_trivial() {
        for d in 1..=3usize {
            for n in 1..=4u32 {
                let trivial = Multipartition::trivial(d, n);
                for l in enumerate_multipartitions(d, n).unwrap() {
                    let zero = c_prime_form(&l) == LinearForm::zero();
                    assert_eq!(zero, l == trivial, "lambda = {l}");
                }
            }
        }
    }

    #[test]
    fn normalization_gap_is_label_independent() {
        for d in 1..=2usize {
            for n in 1..=4u32 {
                let all = enumerate_multipartitions(d, n).unwrap();
                let gap = c_form(&all[0]) - c_form_from_multiplicities(&all[0]).unwrap();
                for l in &all[1..] {
                    assert_eq!(
                        c_form(l) - c_form_from_multiplicities(l).unwrap(),
                        gap,
                        "lambda = {l}"
                    );
                }
            }
        }
    }

    #[test]
    fn compare_examples() {
        let two = mp("[2]");
        let oneone = mp("[1,1]");
        let params = params_d1(2, (-1, 1));
        assert_eq!(
            compare(&two, &two, &params, OrderConvention::CategoryO).unwrap(),
            Comparison::EqualLabel
        );
        assert_eq!(
            compare(&two, &oneone, &params, OrderConvention::CategoryO).unwrap(),
            Comparison::Greater
        );
        assert_eq!(
            compare(&oneone, &two, &params, OrderConvention::CategoryO).unwrap(),
            Comparison::Less
        );
        let sym = ParameterSet::symbolic(1, 2).unwrap();
        assert_eq!(
            compare(&two, &oneone, &sym, OrderConvention::CategoryO).unwrap(),
            Comparison::Incomparable
        );
        let wrong = ParameterSet::symbolic(2, 2).unwrap();
        assert!(compare(&two, &oneone, &wrong, OrderConvention::CategoryO).is_err());
    }

    #[test]
    fn non_integral_difference_is_incomparable_under_category_o() {
        let params = params_d1(2, (1, 3));
        assert_eq!(
            compare(&mp("[2]"), &mp("[1,1]"), &params, OrderConvention::CategoryO).unwrap(),
            Comparison::Incomparable
        );
        // coarse-linear still orders it: difference -2/3 < 0 numerically
        assert_eq!(
            compare(&mp("[2]"), &mp("[1,1]"), &params, OrderConvention::CoarseLinear).unwrap(),
            Comparison::Less
        );
    }

    #[test]
    fn equal_c_values_stay_incomparable() {
        // at h = 0 every c-value is 0
        let params = params_d1(2, (0, 1));
        assert_eq!(
            compare(&mp("[2]"), &mp("[1,1]"), &params, OrderConvention::CoarseLinear).unwrap(),
            Comparison::Incomparable
        );
    }

    #[test]
    fn category_o_agreement_with_coarse_on_integral_pairs() {
        for h in [(-2, 1), (-1, 1), (0, 1), (1, 2), (1, 3), (2, 1)] {
            let params = params_d1(3, h);
            let labels = enumerate_multipartitions(1, 3).unwrap();
            for a in &labels {
                for b in &labels {
                    if a == b {
                        continue;
                    }
                    let strict = compare(a, b, &params, OrderConvention::CategoryO).unwrap();
                    if strict == Comparison::Greater {
                        assert_eq!(
                            compare(a, b, &params, OrderConvention::CoarseLinear).unwrap(),
                            Comparison::Greater
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn poset_examples() {
        let chain = build_order_poset(&params_d1(2, (-1, 1)), OrderConvention::CategoryO).unwrap();
        assert_eq!(chain.labels()[0], mp("[2]"));
        assert_eq!(chain.strict_pairs().len(), 1);
        assert!(chain.is_strictly_less(1, 0)); // (1,1) < (2)

        let antichain =
            build_order_poset(&params_d1(2, (1, 3)), OrderConvention::CategoryO).unwrap();
        assert!(antichain.is_antichain());

        let sym = ParameterSet::symbolic(2, 1).unwrap();
        let poset = build_order_poset(&sym, OrderConvention::CategoryO).unwrap();
        assert_eq!(poset.labels().len(), 2);
        assert!(poset.is_antichain());
    }

    #[test]
    fn refines_examples() {
        let chain = build_order_poset(&params_d1(2, (-1, 1)), OrderConvention::CategoryO).unwrap();
        let antichain =
            build_order_poset(&params_d1(2, (1, 3)), OrderConvention::CategoryO).unwrap();
        assert!(chain.refines(&chain).unwrap());
        assert!(chain.refines(&antichain).unwrap());
        assert!(!antichain.refines(&chain).unwrap());
        let other = build_order_poset(&params_d1(3, (-1, 1)), OrderConvention::CategoryO).unwrap();
        assert!(chain.refines(&other).is_err());
    }

    #[test]
    fn orders_equal_examples() {
        let a = params_d1(2, (-1, 1));
        assert_eq!(
            orders_equal(&a, &a, OrderConvention::CategoryO).unwrap(),
            OrdersEqual::Equal
        );
        let b = params_d1(2, (-2, 1));
        assert_eq!(
            orders_equal(&a, &b, OrderConvention::CategoryO).unwrap(),
            OrdersEqual::Equal
        );
        let c = params_d1(2, (1, 3));
        match orders_equal(&a, &c, OrderConvention::CategoryO).unwrap() {
            OrdersEqual::Differ { witness } => {
                assert_eq!(witness, (mp("[1,1]"), mp("[2]")));
            }
            OrdersEqual::Equal => panic!("orders must differ"),
        }
    }

    #[test]
    fn twist_examples() {
        let params = ParameterSet::new(
            2,
            1,
            ParamValue::Exact(rat(5)),
            exact(&[(0, 1), (1, 1)]),
        )
        .unwrap();
        assert_eq!(twist_parameters(&params, 0), params);
        let swapped = twist_parameters(&params, 1);
        assert_eq!(swapped.hr()[0], ParamValue::Exact(rat(1)));
        assert_eq!(swapped.hr()[1], ParamValue::Exact(rat(0)));
        assert_eq!(swapped.h(), params.h());
        assert_eq!(twist_parameters(&swapped, 1), params);
    }

    #[test]
    fn twist_is_a_group_action() {
        let params = ParameterSet::new(
            3,
            2,
            ParamValue::Symbolic,
            exact(&[(0, 1), (1, 1), (2, 1)]),
        )
        .unwrap();
        for r in 0..3 {
            for s in 0..3 {
                assert_eq!(
                    twist_parameters(&twist_parameters(&params, r), s),
                    twist_parameters(&params, (r + s) % 3)
                );
            }
        }
    }

    #[test]
    fn normalize_shift_examples() {
        let params = ParameterSet::new(
            2,
            2,
            ParamValue::Exact(rat(-1)),
            exact(&[(0, 1), (1, 1)]),
        )
        .unwrap();
        assert_eq!(
            normalize_shift(&params, &rat(0), &rat(0)),
            params
        );
        let shifted = normalize_shift(&params, &rat(-1), &rat(0));
        assert_eq!(shifted.hr()[0], ParamValue::Exact(rat(-1)));
        assert_eq!(shifted.hr()[1], ParamValue::Exact(rat(0)));
    }

    #[test]
    fn poset_invariant_under_diagonal_shift() {
        for f in [rat(1), rat(-3), ratio(2, 7)] {
            let params = ParameterSet::new(
                2,
                2,
                ParamValue::Exact(ratio(-1, 2)),
                exact(&[(0, 1), (3, 2)]),
            )
            .unwrap();
            let shifted = normalize_shift(&params, &f, &rat(0));
            let a = build_order_poset(&params, OrderConvention::CategoryO).unwrap();
            let b = build_order_poset(&shifted, OrderConvention::CategoryO).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn c_prime_differences_invariant_under_diagonal_shift() {
        // substitute shifted parameters into c'-forms and compare differences
        let base = ParameterSet::new(
            3,
            2,
            ParamValue::Exact(rat(-1)),
            exact(&[(0, 1), (1, 1), (2, 1)]),
        )
        .unwrap();
        let shifted = normalize_shift(&base, &ratio(5, 3), &rat(0));
        let labels = enumerate_multipartitions(3, 2).unwrap();
        for a in &labels {
            for b in &labels {
                let diff = c_prime_form(a) - c_prime_form(b);
                assert_eq!(base.substitute(&diff), shifted.substitute(&diff));
            }
        }
    }

    #[test]
    fn dot_output_is_deterministic() {
        let poset = build_order_poset(&params_d1(2, (-1, 1)), OrderConvention::CategoryO).unwrap();
        let dot = poset.to_dot(&["d=1 n=2 h=-1".into()]);
        let expected = "digraph corder {\n  // d=1 n=2 h=-1\n  rankdir=BT;\n  \"[2]\";\n  \"[1,1]\";\n  \"[1,1]\" -> \"[2]\";\n}\n";
        assert_eq!(dot, expected);
    }

    #[test]
    fn json_round_trip() {
        let poset =
            build_order_poset(&params_d1(3, (-1, 2)), OrderConvention::CategoryO).unwrap();
        let json = poset.to_json();
        let back = OrderPoset::from_json(&json).unwrap();
        assert_eq!(back, poset);
        assert!(back.refines(&poset).unwrap() && poset.refines(&back).unwrap());
    }
}
