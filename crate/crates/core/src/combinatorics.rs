//! Partitions and multipartitions: canonical forms, enumeration, transpose,
//! the `b`/`d` cell statistics, the dominance order on `P(d,n)` and its exact
//! cover description.
//!
//! The text syntax used everywhere (CLI, JSON) is `[3,1|2|]` for the
//! 3-component multipartition `((3,1),(2),∅)`: components separated by `|`,
//! empty components allowed, parse/print round-trips bit-exactly.

use std::fmt;

use crate::{Error, Result};

/// A partition: non-increasing positive parts, canonical form has no zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Build from parts; zeros are stripped, order is validated.
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Domain(format!(
                "{parts:?} is not a non-increasing positive sequence"
            )));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The size `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at 1-based row `i`, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.parts.get(i - 1).copied().unwrap_or(0)
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// The transposed (conjugate) partition: `result_j = #{i : p_i ≥ j}`.
pub fn transpose(p: &Partition) -> Partition {
    let Some(&first) = p.parts().first() else {
        return Partition::empty();
    };
    let parts = (1..=first)
        .map(|j| p.parts().iter().filter(|&&x| x >= j).count() as u32)
        .collect();
    Partition { parts }
}

/// All partitions of `n`, in reverse-lexicographic order (largest first
/// part first): `4 ↦ (4), (3,1), (2,2), (2,1,1), (1,1,1,1)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, bound: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for first in (1..=remaining.min(bound)).rev() {
            current.push(first);
            rec(remaining - first, first, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// A multipartition: a `d`-tuple of partitions. `d` is the tuple length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    /// Build from components; `d ≥ 1` required.
    pub fn new(components: Vec<Partition>) -> Result<Multipartition> {
        if components.is_empty() {
            return Err(Error::Domain("a multipartition needs d >= 1 components".into()));
        }
        Ok(Multipartition { components })
    }

    /// The label `((n), ∅, …, ∅)` of the trivial character.
    pub fn trivial(d: usize, n: u32) -> Multipartition {
        let mut components = vec![Partition::empty(); d];
        if n > 0 {
            components[0] = Partition { parts: vec![n] };
        }
        Multipartition { components }
    }

    pub fn d(&self) -> usize {
        self.components.len()
    }

    /// Total size `n = Σ_r |λ^{(r)}|`.
    pub fn size(&self) -> u32 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// Component `λ^{(r)}`, 1-based.
    pub fn component(&self, r: usize) -> &Partition {
        &self.components[r - 1]
    }

    /// Concatenate with another multipartition (gluing levels).
    pub fn concat(&self, other: &Multipartition) -> Multipartition {
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        Multipartition { components }
    }

    /// Parse the text syntax `[3,1|2|]`.
    pub fn parse(text: &str) -> Result<Multipartition> {
        let inner = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("`{text}`: expected [..|..] syntax")))?;
        let mut components = Vec::new();
        for comp in inner.split('|') {
            let comp = comp.trim();
            if comp.is_empty() {
                components.push(Partition::empty());
                continue;
            }
            let parts = comp
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("`{p}` is not a part in `{text}`")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::Parse(format!(
                    "`{comp}` in `{text}` is not a canonical partition"
                )));
            }
            components.push(Partition { parts });
        }
        Multipartition::new(components)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// All `d`-multipartitions of `n`, each exactly once. The first component
/// runs reverse-lexicographically through partitions of descending size and
/// later components vary fastest (rightmost-fastest).
pub fn enumerate_multipartitions(d: usize, n: u32) -> Result<Vec<Multipartition>> {
    if d == 0 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    fn rec(d: usize, n: u32) -> Vec<Vec<Partition>> {
        if d == 1 {
            return enumerate_partitions(n).into_iter().map(|p| vec![p]).collect();
        }
        let mut out = Vec::new();
        for m in (0..=n).rev() {
            for head in enumerate_partitions(m) {
                for tail in rec(d - 1, n - m) {
                    let mut components = Vec::with_capacity(d);
                    components.push(head.clone());
                    components.extend(tail);
                    out.push(components);
                }
            }
        }
        out
    }
    Ok(rec(d, n)
        .into_iter()
        .map(|components| Multipartition { components })
        .collect())
}

/// The cell statistics of a multipartition: per-component sums of
/// `b_{i,j} = max(λ'_j − i, 0)` and `d_{i,j} = max(λ_i − j, 0)` over the
/// bounding box, and the signed grand total `Σ(b − d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BDStatistic {
    /// `Σ_{i,j} b^{(r)}_{i,j}` per component.
    pub b_sums: Vec<u64>,
    /// `Σ_{i,j} d^{(r)}_{i,j}` per component.
    pub d_sums: Vec<u64>,
    /// `Σ_r Σ_{i,j} (b^{(r)}_{i,j} − d^{(r)}_{i,j})`.
    pub total: i64,
}

/// Evaluate the `b`/`d` statistics cell by cell. Cells outside the bounding
/// box contribute zero by the case split in the defining formulas.
pub fn bd_statistic(mp: &Multipartition) -> BDStatistic {
    let mut b_sums = Vec::with_capacity(mp.d());
    let mut d_sums = Vec::with_capacity(mp.d());
    for comp in mp.components() {
        let tr = transpose(comp);
        let rows = comp.len();
        let cols = comp.part(1) as usize;
        let mut b = 0u64;
        let mut d = 0u64;
        for i in 1..=rows {
            for j in 1..=cols {
                let col_len = tr.part(j);
                if col_len > i as u32 {
                    b += (col_len - i as u32) as u64;
                }
                let row_len = comp.part(i);
                if row_len > j as u32 {
                    d += (row_len - j as u32) as u64;
                }
            }
        }
        b_sums.push(b);
        d_sums.push(d);
    }
    let total = b_sums.iter().map(|&x| x as i64).sum::<i64>()
        - d_sums.iter().map(|&x| x as i64).sum::<i64>();
    BDStatistic {
        b_sums,
        d_sums,
        total,
    }
}

fn check_same_shape(a: &Multipartition, b: &Multipartition) -> Result<()> {
    if a.d() != b.d() {
        return Err(Error::ShapeMismatch(format!(
            "d = {} vs d = {}",
            a.d(),
            b.d()
        )));
    }
    if a.size() != b.size() {
        return Err(Error::ShapeMismatch(format!(
            "n = {} vs n = {}",
            a.size(),
            b.size()
        )));
    }
    Ok(())
}

/// The dominance order: `λ ⊴ μ` iff for all `1 ≤ r ≤ d` and `s ≥ 0`,
/// `Σ_{i<r} |λ^{(i)}| + Σ_{j≤s} λ^{(r)}_j ≤ Σ_{i<r} |μ^{(i)}| + Σ_{j≤s} μ^{(r)}_j`.
pub fn dominates(lambda: &Multipartition, mu: &Multipartition) -> Result<bool> {
    check_same_shape(lambda, mu)?;
    let mut lam_prefix = 0u64;
    let mut mu_prefix = 0u64;
    for r in 1..=lambda.d() {
        let lam = lambda.component(r);
        let mu_c = mu.component(r);
        // s = 0 compares the bare prefixes; larger s adds row sums.
        if lam_prefix > mu_prefix {
            return Ok(false);
        }
        let mut lam_rows = 0u64;
        let mut mu_rows = 0u64;
        for s in 1..=lam.len().max(mu_c.len()) {
            lam_rows += lam.part(s) as u64;
            mu_rows += mu_c.part(s) as u64;
            if lam_prefix + lam_rows > mu_prefix + mu_rows {
                return Ok(false);
            }
        }
        lam_prefix += lam.size() as u64;
        mu_prefix += mu_c.size() as u64;
    }
    Ok(true)
}

/// Which structural case of the cover description produced a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoverCase {
    /// A box moves from the first row of component `s+1` to a new length-1
    /// row at the bottom of component `s`.
    A,
    /// A box moves from row `i+1` to row `i` within one component.
    B,
    /// A box moves from row `i'` to row `i < i'` within one component, the
    /// rows strictly between being equal.
    C,
}

impl fmt::Display for CoverCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverCase::A => write!(f, "a"),
            CoverCase::B => write!(f, "b"),
            CoverCase::C => write!(f, "c"),
        }
    }
}

/// A lower cover of `μ` together with every structural case that yields it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub lower: Multipartition,
    pub cases: Vec<CoverCase>,
}

/// All `λ` covered by `μ` in dominance order (`λ ◁ μ` with nothing strictly
/// between), built case by case from the structural description rather than
/// by search. Duplicate `λ` arising from several cases are merged, keeping
/// every case tag.
pub fn dominance_covers(mu: &Multipartition) -> Vec<Cover> {
    let d = mu.d();
    let mut covers: Vec<Cover> = Vec::new();
    let mut push = |lower: Multipartition, case: CoverCase| {
        if let Some(existing) = covers.iter_mut().find(|c| c.lower == lower) {
            if !existing.cases.contains(&case) {
                existing.cases.push(case);
                existing.cases.sort();
            }
        } else {
            covers.push(Cover {
                lower,
                cases: vec![case],
            });
        }
    };

    // Case (a): μ^{(s)} ends in a part 1; λ drops it and adds a box to the
    // first row of component s+1.
    for s in 1..d {
        let comp = mu.component(s);
        if comp.parts().last() == Some(&1) {
            let mut components = mu.components().to_vec();
            let mut shorter = comp.parts().to_vec();
            shorter.pop();
            components[s - 1] = Partition { parts: shorter };
            let next = mu.component(s + 1);
            let mut grown = next.parts().to_vec();
            if grown.is_empty() {
                grown.push(1);
            } else {
                grown[0] += 1;
            }
            components[s] = Partition { parts: grown };
            push(Multipartition { components }, CoverCase::A);
        }
    }

    // Cases (b) and (c): a box moves down within a single component.
    for s in 1..=d {
        let comp = mu.component(s);
        let rows = comp.len();
        // (b): from row i to row i+1.
        for i in 1..=rows {
            if let Some(lower) = move_box(comp, i, i + 1) {
                let mut components = mu.components().to_vec();
                components[s - 1] = lower;
                push(Multipartition { components }, CoverCase::B);
            }
        }
        // (c): from row i to row i' > i with μ_i − 1 = μ_{i'} + 1.
        for i in 1..=rows {
            for ip in (i + 1)..=(rows + 1) {
                if comp.part(i) != comp.part(ip) + 2 {
                    continue;
                }
                if let Some(lower) = move_box(comp, i, ip) {
                    let mut components = mu.components().to_vec();
                    components[s - 1] = lower;
                    push(Multipartition { components }, CoverCase::C);
                }
            }
        }
    }
    covers
}

/// Move one box from row `from` to row `to > from` of `p`, returning the
/// result only if it is again a partition.
fn move_box(p: &Partition, from: usize, to: usize) -> Option<Partition> {
    if p.part(from) == 0 {
        return None;
    }
    let len = p.len().max(to);
    let mut parts: Vec<u32> = (1..=len).map(|i| p.part(i)).collect();
    parts[from - 1] -= 1;
    parts[to - 1] += 1;
    while parts.last() == Some(&0) {
        parts.pop();
    }
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
        return None;
    }
    Some(Partition { parts })
}
