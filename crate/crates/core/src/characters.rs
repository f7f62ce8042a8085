//! Character data: symmetric-group character values by the
//! Murnaghan–Nakayama recursion, wreath-product elements of `B_n(d)`, and
//! the normalized restriction multiplicities to the cyclic subgroups
//! `⟨s_0⟩` and `⟨s_1⟩`, computed both in closed form and by brute-force
//! induction over the full group.
//!
//! Roots of unity are never touched as floating point: values in `Z[ζ_d]`
//! are carried as coefficient vectors on `1, ζ, …, ζ^{d-1}` and reduced
//! modulo the d-th cyclotomic polynomial when a rational is extracted.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{enumerate_partitions, Multipartition, Partition};
use crate::exactmath::{cyclotomic, rat, Rational};
use crate::{Error, Result};

/// Feasibility bound on `n` for the brute-force oracle.
pub const BRUTE_FORCE_MAX_N: u32 = 5;
/// Feasibility bound on `d` for the brute-force oracle.
pub const BRUTE_FORCE_MAX_D: usize = 4;

/// The conjugacy-class label of a permutation: its cycle lengths, as a
/// partition of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType(Partition);

impl CycleType {
    pub fn new(p: Partition) -> CycleType {
        CycleType(p)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    /// Size of the underlying symmetric group.
    pub fn size(&self) -> u32 {
        self.0.size()
    }

    /// Conjugacy class size `n! / Π_k k^{m_k} m_k!`.
    pub fn class_size(&self) -> u64 {
        let n = self.size() as u64;
        let mut z = 1u64;
        let mut mult: HashMap<u32, u64> = HashMap::new();
        for &k in self.0.parts() {
            *mult.entry(k).or_insert(0) += 1;
        }
        for (k, m) in mult {
            z *= (k as u64).pow(m as u32);
            z *= factorial(m);
        }
        factorial(n) / z
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// The exact character value `χ_α(class)` of the symmetric group, by the
/// Murnaghan–Nakayama border-strip recursion on beta numbers.
pub fn sn_character(alpha: &Partition, class: &CycleType) -> Result<i64> {
    if alpha.size() != class.size() {
        return Err(Error::ShapeMismatch(format!(
            "character of a partition of {} at a class of {}",
            alpha.size(),
            class.size()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_recurse(
        alpha.parts().to_vec(),
        class.partition().parts().to_vec(),
        &mut memo,
    ))
}

fn mn_recurse(
    lambda: Vec<u32>,
    class: Vec<u32>,
    memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>,
) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    if let Some(&v) = memo.get(&(lambda.clone(), class.clone())) {
        return v;
    }
    let strip = class[0] as i64;
    let rest: Vec<u32> = class[1..].to_vec();
    // Beta numbers: beta_i = lambda_i + (L - i); removing a border strip of
    // length `strip` moves one beta down by `strip` into a free slot, with
    // sign (-1)^{#betas jumped over}.
    let len = lambda.len();
    let betas: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        let target = b - strip;
        if target < 0 || betas.contains(&target) {
            continue;
        }
        let jumped = betas.iter().filter(|&&x| target < x && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let k = new_betas.len();
        let mut new_lambda: Vec<u32> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &bb)| (bb - (k - 1 - j) as i64) as u32)
            .collect();
        while new_lambda.last() == Some(&0) {
            new_lambda.pop();
        }
        total += sign * mn_recurse(new_lambda, rest.clone(), memo);
    }
    memo.insert((lambda, class), total);
    total
}

/// Dimension of the irreducible `χ_α`, as the character value at the
/// identity class.
pub fn sn_dimension(alpha: &Partition) -> i64 {
    let n = alpha.size();
    let identity = CycleType::new(Partition::new(vec![1; n as usize]).expect("ones"));
    sn_character(alpha, &identity).expect("sizes match")
}

/// Dimension of the induced wreath character:
/// `n!/Π_r |λ^{(r)}|! · Π_r dim χ_{λ^{(r)}}`.
pub fn wreath_character_dimension(lambda: &Multipartition) -> BigInt {
    let n = lambda.size() as u64;
    let mut dim = BigInt::from(factorial(n));
    for comp in lambda.components() {
        dim /= BigInt::from(factorial(comp.size() as u64));
        dim *= BigInt::from(sn_dimension(comp));
    }
    dim
}

/// An element of `B_n(d)`: the monomial matrix with `ζ^{colors[σ(j)]}` in
/// position `(σ(j), j)`. The composition law is
/// `(c, σ)(c', σ') = (c + c'∘σ^{-1}, σσ')`, matching matrix multiplication
/// for `M(c,σ) = diag(ζ^c)·P_σ` with `P_σ e_j = e_{σ(j)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathElement {
    d: u32,
    colors: Vec<u32>,
    perm: Vec<usize>,
}

impl WreathElement {
    pub fn new(d: u32, colors: Vec<u32>, perm: Vec<usize>) -> Result<WreathElement> {
        let n = colors.len();
        if perm.len() != n {
            return Err(Error::ShapeMismatch("colors and perm lengths differ".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Domain(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if d == 0 {
            return Err(Error::Domain("d must be at least 1".into()));
        }
        Ok(WreathElement {
            d,
            colors: colors.into_iter().map(|c| c % d).collect(),
            perm,
        })
    }

    pub fn identity(d: u32, n: usize) -> WreathElement {
        WreathElement {
            d,
            colors: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    /// The generator `s_0 = diag(ζ, 1, …, 1)`.
    pub fn s0(d: u32, n: usize) -> WreathElement {
        let mut e = Self::identity(d, n);
        e.colors[0] = 1 % d;
        e
    }

    /// The transposition `s_1 = (1 2)` (requires `n ≥ 2`).
    pub fn s1(d: u32, n: usize) -> WreathElement {
        let mut e = Self::identity(d, n);
        e.perm.swap(0, 1);
        e
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn multiply(&self, other: &WreathElement) -> WreathElement {
        debug_assert_eq!(self.d, other.d);
        let n = self.colors.len();
        let mut perm_inv = vec![0usize; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm_inv[p] = i;
        }
        let colors = (0..n)
            .map(|k| (self.colors[k] + other.colors[perm_inv[k]]) % self.d)
            .collect();
        let perm = (0..n).map(|j| self.perm[other.perm[j]]).collect();
        WreathElement {
            d: self.d,
            colors,
            perm,
        }
    }

    pub fn inverse(&self) -> WreathElement {
        let n = self.colors.len();
        let mut perm = vec![0usize; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let colors = (0..n)
            .map(|j| (self.d - self.colors[self.perm[j]] % self.d) % self.d)
            .collect();
        WreathElement {
            d: self.d,
            colors,
            perm,
        }
    }

    /// Power by repeated multiplication.
    pub fn pow(&self, k: u32) -> WreathElement {
        let mut acc = WreathElement::identity(self.d, self.colors.len());
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }
}

/// Every element of `B_n(d)`, colors varying fastest.
pub fn enumerate_wreath_group(d: u32, n: usize) -> Vec<WreathElement> {
    let mut perms = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    permute(&mut items, 0, &mut perms);
    let mut out = Vec::new();
    for perm in perms {
        let mut colors = vec![0u32; n];
        loop {
            out.push(WreathElement {
                d,
                colors: colors.clone(),
                perm: perm.clone(),
            });
            // increment base-d counter
            let mut i = 0;
            while i < n {
                colors[i] += 1;
                if colors[i] < d {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Normalized restriction multiplicities of `χ_λ`:
/// `s0_multiplicities[l] = ⟨χ|_{⟨s_0⟩}, det^l⟩ / χ(1)` for `l = 0..d-1`, and
/// the normalized multiplicity of `det` in the restriction to `⟨s_1⟩`
/// (absent when `n < 2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionProfile {
    pub s0_multiplicities: Vec<Rational>,
    pub s1_det_multiplicity: Option<Rational>,
}

/// Closed-form profile: `s0[l] = |λ^{(l+1)}|/n` and
/// `s1 = 1/2 + Σ(b−d)/(n(n−1))`.
pub fn restriction_profile_closed(lambda: &Multipartition) -> Result<RestrictionProfile> {
    let n = lambda.size();
    if n == 0 {
        return Err(Error::Domain("restriction profile needs n >= 1".into()));
    }
    let s0 = lambda
        .components()
        .iter()
        .map(|c| Rational::new(BigInt::from(c.size()), BigInt::from(n)))
        .collect();
    let s1 = if n >= 2 {
        let stat = crate::combinatorics::bd_statistic(lambda);
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        Some(half + Rational::new(BigInt::from(stat.total), BigInt::from(n as u64 * (n as u64 - 1))))
    } else {
        None
    };
    Ok(RestrictionProfile {
        s0_multiplicities: s0,
        s1_det_multiplicity: s1,
    })
}

/// Values in `Z[ζ_d]` as rational coefficient vectors on `1, ζ, …, ζ^{d-1}`
/// (no cyclotomic reduction applied while accumulating).
type CycVec = Vec<Rational>;

/// Reduce `Σ v_e ζ^e` modulo `Φ_d`; returns the value when it is rational.
fn cyclotomic_reduce(v: &CycVec, d: usize) -> Option<Rational> {
    let phi = cyclotomic(d).expect("d >= 1");
    let pd = phi.degree().expect("nonzero");
    let mut rem: Vec<Rational> = v.clone();
    while rem.len() > pd {
        let k = rem.len() - 1;
        let lead = rem[k].clone();
        if lead.is_zero() {
            rem.pop();
            continue;
        }
        // Φ_d is monic: subtract lead * t^{k-pd} * Φ_d.
        for (j, c) in phi.coeffs().iter().enumerate() {
            let idx = k - pd + j;
            rem[idx] -= &lead * Rational::from_integer(c.clone());
        }
        debug_assert!(rem[k].is_zero());
        rem.pop();
    }
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    match rem.len() {
        0 => Some(Rational::zero()),
        1 => Some(rem.pop().expect("len 1")),
        _ => None,
    }
}

/// Brute-force profile: builds `χ_λ` by the explicit induction formula from
/// `B_λ(d)` (summation over the full group, not Mackey decomposition) and
/// evaluates the normalized inner products on `⟨s_0⟩` and `⟨s_1⟩` in exact
/// rational arithmetic.
///
/// Guarded by [`BRUTE_FORCE_MAX_N`] and [`BRUTE_FORCE_MAX_D`].
pub fn restriction_profile_bruteforce(lambda: &Multipartition) -> Result<RestrictionProfile> {
    let n = lambda.size();
    let d = lambda.d();
    if n == 0 {
        return Err(Error::Domain("restriction profile needs n >= 1".into()));
    }
    if n > BRUTE_FORCE_MAX_N || d > BRUTE_FORCE_MAX_D {
        return Err(Error::BoundExceeded(format!(
            "brute force is limited to n <= {BRUTE_FORCE_MAX_N}, d <= {BRUTE_FORCE_MAX_D} (got n = {n}, d = {d})"
        )));
    }
    let nu = n as usize;
    // Block r (0-based) covers positions prefix..prefix+|λ^{(r+1)}|.
    let mut block_of = vec![0usize; nu];
    let mut sizes = Vec::with_capacity(d);
    {
        let mut pos = 0usize;
        for (r, comp) in lambda.components().iter().enumerate() {
            let m = comp.size() as usize;
            for b in block_of.iter_mut().skip(pos).take(m) {
                *b = r;
            }
            sizes.push(m);
            pos += m;
        }
    }
    // Character table rows of the component characters, by cycle type.
    let tables: Vec<HashMap<Vec<u32>, i64>> = lambda
        .components()
        .iter()
        .map(|comp| {
            enumerate_partitions(comp.size())
                .into_iter()
                .map(|class| {
                    let value = sn_character(comp, &CycleType::new(class.clone()))
                        .expect("matching sizes");
                    (class.parts().to_vec(), value)
                })
                .collect()
        })
        .collect();

    // ψ(c, σ) on B_λ(d): zero unless σ preserves every block; otherwise
    // Π_r ζ^{(r)·Σ_{i∈I_r} c_i} · χ_{λ^{(r+1)}}(type of σ|_{I_r})
    // (the μ_d-part of level r restricts as det^r for 0-based r).
    let psi = |g: &WreathElement| -> Option<(usize, i64)> {
        for i in 0..nu {
            if block_of[g.perm()[i]] != block_of[i] {
                return None;
            }
        }
        let mut exponent = 0usize;
        let mut value = 1i64;
        let mut start = 0usize;
        for (r, &m) in sizes.iter().enumerate() {
            let color_sum: u32 = g.colors()[start..start + m]
                .iter()
                .fold(0, |acc, &c| (acc + c) % d as u32);
            exponent = (exponent + r * color_sum as usize) % d;
            // cycle type of σ restricted to this block
            let mut seen = vec![false; m];
            let mut cycles: Vec<u32> = Vec::new();
            for i in 0..m {
                if seen[i] {
                    continue;
                }
                let mut len = 0u32;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    len += 1;
                    j = g.perm()[start + j] - start;
                }
                cycles.push(len);
            }
            cycles.sort_unstable_by(|a, b| b.cmp(a));
            value *= tables[r].get(&cycles).copied().unwrap_or(0);
            start += m;
        }
        Some((exponent, value))
    };

    let group = enumerate_wreath_group(d as u32, nu);
    let subgroup_order: u64 =
        (d as u64).pow(n) * sizes.iter().map(|&m| factorial(m as u64)).product::<u64>();

    // Induced character value at g, as a CycVec.
    let induced = |g: &WreathElement| -> CycVec {
        let mut acc = vec![0i64; d];
        for x in &group {
            let conj = x.multiply(g).multiply(&x.inverse());
            if let Some((e, v)) = psi(&conj) {
                acc[e] += v;
            }
        }
        acc.into_iter()
            .map(|c| Rational::new(BigInt::from(c), BigInt::from(subgroup_order)))
            .collect()
    };

    let dim_vec = induced(&WreathElement::identity(d as u32, nu));
    let dim = cyclotomic_reduce(&dim_vec, d).expect("dimension is rational");
    assert!(dim.is_positive(), "character dimension must be positive");

    // ⟨χ|_{⟨s_0⟩}, det^l⟩ = (1/d) Σ_k χ(s_0^k) ζ^{-lk}
    let s0 = WreathElement::s0(d as u32, nu);
    let s0_values: Vec<CycVec> = (0..d as u32).map(|k| induced(&s0.pow(k))).collect();
    let mut s0_mults = Vec::with_capacity(d);
    for l in 0..d {
        let mut sum: CycVec = vec![Rational::zero(); d];
        for (k, value) in s0_values.iter().enumerate() {
            // multiply by ζ^{-lk}: rotate indices down by lk
            let shift = (l * k) % d;
            for e in 0..d {
                sum[e] += &value[(e + shift) % d];
            }
        }
        let inner = cyclotomic_reduce(&sum, d).expect("multiplicity is rational");
        s0_mults.push(inner / (rat(d as i64) * &dim));
    }

    let s1_mult = if n >= 2 {
        let s1_vec = induced(&WreathElement::s1(d as u32, nu));
        let chi_s1 = cyclotomic_reduce(&s1_vec, d).expect("value at s_1 is rational");
        Some((&dim - chi_s1) / (rat(2) * &dim))
    } else {
        None
    };

    Ok(RestrictionProfile {
        s0_multiplicities: s0_mults,
        s1_det_multiplicity: s1_mult,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_multipartitions;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ct(parts: &[u32]) -> CycleType {
        CycleType::new(p(parts))
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=6u32 {
            let trivial = p(&[n]);
            let sign = Partition::new(vec![1; n as usize]).unwrap();
            for class in enumerate_partitions(n) {
                let cycles = class.len() as u32;
                let class = CycleType::new(class);
                assert_eq!(sn_character(&trivial, &class).unwrap(), 1);
                let expected = if (n - cycles) % 2 == 0 { 1 } else { -1 };
                assert_eq!(sn_character(&sign, &class).unwrap(), expected);
            }
        }
    }

    #[test]
    fn standard_character_value() {
        assert_eq!(sn_character(&p(&[2, 1]), &ct(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(sn_character(&p(&[2, 1]), &ct(&[3])).unwrap(), -1);
        assert_eq!(sn_character(&p(&[2, 1]), &ct(&[2, 1])).unwrap(), 0);
        assert!(sn_character(&p(&[2, 1]), &ct(&[2])).is_err());
    }

    /// Hook-length dimension oracle.
    fn hook_dimension(alpha: &Partition) -> u64 {
        let n = alpha.size() as u64;
        let tr = crate::combinatorics::transpose(alpha);
        let mut hooks = 1u64;
        for (i, &row) in alpha.parts().iter().enumerate() {
            for j in 1..=row as usize {
                let arm = row as u64 - j as u64;
                let leg = tr.part(j) as u64 - (i as u64 + 1);
                hooks *= arm + leg + 1;
            }
        }
        factorial(n) / hooks
    }

    #[test]
    fn dimensions_match_hook_length_oracle() {
        for n in 0..=6 {
            for alpha in enumerate_partitions(n) {
                assert_eq!(
                    sn_dimension(&alpha) as u64,
                    hook_dimension(&alpha),
                    "alpha = {alpha}"
                );
            }
        }
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=5u32 {
            let chars = enumerate_partitions(n);
            let classes: Vec<CycleType> =
                enumerate_partitions(n).into_iter().map(CycleType::new).collect();
            for a in &chars {
                for b in &chars {
                    let sum: i64 = classes
                        .iter()
                        .map(|c| {
                            c.class_size() as i64
                                * sn_character(a, c).unwrap()
                                * sn_character(b, c).unwrap()
                        })
                        .sum();
                    let expected = if a == b { factorial(n as u64) as i64 } else { 0 };
                    assert_eq!(sum, expected, "a = {a}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=6u32 {
            let total: u64 = enumerate_partitions(n)
                .into_iter()
                .map(|c| CycleType::new(c).class_size())
                .sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    fn mp(text: &str) -> Multipartition {
        Multipartition::parse(text).unwrap()
    }

    #[test]
    fn wreath_dimension_examples() {
        assert_eq!(wreath_character_dimension(&mp("[3|]")), BigInt::from(1));
        assert_eq!(wreath_character_dimension(&mp("[|4]")), BigInt::from(1));
        assert_eq!(wreath_character_dimension(&mp("[1|1]")), BigInt::from(2));
        assert_eq!(wreath_character_dimension(&mp("[2,1]")), BigInt::from(2));
    }

    #[test]
    fn wreath_sum_of_squares_is_group_order() {
        for d in 1..=3usize {
            for n in 1..=3u32 {
                let total: BigInt = enumerate_multipartitions(d, n)
                    .unwrap()
                    .iter()
                    .map(|l| {
                        let dim = wreath_character_dimension(l);
                        &dim * &dim
                    })
                    .sum();
                let order = BigInt::from((d as u64).pow(n) * factorial(n as u64));
                assert_eq!(total, order, "d = {d}, n = {n}");
            }
        }
    }

    #[test]
    fn wreath_group_axioms_small() {
        for (d, n) in [(2u32, 2usize), (3, 2), (2, 3)] {
            let group = enumerate_wreath_group(d, n);
            assert_eq!(group.len(), (d as usize).pow(n as u32) * factorial(n as u64) as usize);
            let e = WreathElement::identity(d, n);
            for g in &group {
                assert_eq!(g.multiply(&e), *g);
                assert_eq!(e.multiply(g), *g);
                assert_eq!(g.multiply(&g.inverse()), e);
            }
            for a in &group {
                for b in &group {
                    for c in &group {
                        assert_eq!(
                            a.multiply(b).multiply(c),
                            a.multiply(&b.multiply(c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn wreath_identity_and_inverse_axioms_at_bounds() {
        for (d, n) in [(3u32, 4usize), (2, 4)] {
            let group = enumerate_wreath_group(d, n);
            let e = WreathElement::identity(d, n);
            for g in &group {
                assert_eq!(g.multiply(&g.inverse()), e);
                assert_eq!(g.inverse().multiply(g), e);
            }
        }
    }

    #[test]
    fn closed_profile_examples() {
        let profile = restriction_profile_closed(&mp("[1|]")).unwrap();
        assert_eq!(profile.s0_multiplicities, vec![rat(1), rat(0)]);
        assert_eq!(profile.s1_det_multiplicity, None);

        let profile = restriction_profile_closed(&mp("[2]")).unwrap();
        assert_eq!(profile.s1_det_multiplicity, Some(rat(0)));

        let profile = restriction_profile_closed(&mp("[1,1]")).unwrap();
        assert_eq!(profile.s1_det_multiplicity, Some(rat(1)));

        assert!(restriction_profile_closed(&mp("[|]")).is_err());
    }

    #[test]
    fn closed_profile_sums_to_one() {
        for d in 1..=3usize {
            for n in 1..=5u32 {
                for l in enumerate_multipartitions(d, n).unwrap() {
                    let profile = restriction_profile_closed(&l).unwrap();
                    let sum: Rational = profile.s0_multiplicities.iter().cloned().sum();
                    assert_eq!(sum, rat(1));
                    if let Some(s1) = profile.s1_det_multiplicity {
                        assert!(s1 >= rat(0) && s1 <= rat(1));
                    }
                }
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let profile = restriction_profile_bruteforce(&mp("[1]")).unwrap();
        assert_eq!(profile.s0_multiplicities, vec![rat(1)]);
        assert_eq!(profile.s1_det_multiplicity, None);

        let profile = restriction_profile_bruteforce(&mp("[1|1]")).unwrap();
        assert_eq!(
            profile.s0_multiplicities,
            vec![Rational::new(BigInt::one(), BigInt::from(2)); 2]
        );

        assert!(restriction_profile_bruteforce(&mp("[6]")).is_err());
    }

    #[test]
    fn brute_force_agrees_with_closed_form_small() {
        for d in 1..=2usize {
            for n in 1..=3u32 {
                for l in enumerate_multipartitions(d, n).unwrap() {
                    assert_eq!(
                        restriction_profile_bruteforce(&l).unwrap(),
                        restriction_profile_closed(&l).unwrap(),
                        "lambda = {l}"
                    );
                }
            }
        }
    }
}
