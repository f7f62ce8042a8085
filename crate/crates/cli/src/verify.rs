//! The oracle suites behind `bnd verify`: each one re-derives a closed-form
//! result by an independent brute-force or algebraic route over an
//! exhaustive range and reports the first counterexample on failure.

use std::collections::{BTreeMap, BTreeSet};

use bnd::blocks::{defect1_decomposition_matrix, linkage_partition, semisimplicity_check, Semisimplicity};
use bnd::characters::{
    restriction_profile_bruteforce, restriction_profile_closed, BRUTE_FORCE_MAX_D,
    BRUTE_FORCE_MAX_N,
};
use bnd::combinatorics::{dominance_covers, dominates, enumerate_multipartitions, Multipartition};
use bnd::corder::{c_form, c_form_from_multiplicities, OrderConvention, ParameterSet};
use bnd::exactmath::{rat, LinearForm, Rational, Var};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::json;

use crate::CliError;

/// Dispatch a suite by name, applying its documented default bounds.
pub fn run_suite(name: &str, dmax: Option<usize>, nmax: Option<u32>) -> Result<String, CliError> {
    let outcome = match name {
        "covers" => covers(dmax.unwrap_or(3), nmax.unwrap_or(6)),
        "restrictions" => {
            let d = dmax.unwrap_or(3);
            let n = nmax.unwrap_or(4);
            if d > BRUTE_FORCE_MAX_D || n > BRUTE_FORCE_MAX_N {
                return Err(CliError::Domain(format!(
                    "restrictions is feasible only up to --dmax {BRUTE_FORCE_MAX_D} --nmax {BRUTE_FORCE_MAX_N}"
                )));
            }
            restrictions(d, n)
        }
        "corder-consistency" => corder_consistency(dmax.unwrap_or(3), nmax.unwrap_or(5)),
        "comporders" => comporders(dmax.unwrap_or(3), nmax.unwrap_or(6)),
        "dm-identity" => dm_identity(dmax.unwrap_or(10)),
        "ss" => ss(dmax.unwrap_or(3), nmax.unwrap_or(5)),
        other => {
            return Err(CliError::Parse(format!(
                "unknown verify suite `{other}`; available: covers, restrictions, corder-consistency, comporders, dm-identity, ss"
            )))
        }
    };
    outcome.map(|s| s + "\n").map_err(CliError::VerifyFailed)
}

/// Cover law: for every `μ`, case-based covers equal brute-force covers
/// computed from `dominates` alone.
pub fn covers(dmax: usize, nmax: u32) -> Result<String, String> {
    let mut labels = 0usize;
    let mut cover_pairs = 0usize;
    for d in 1..=dmax {
        for n in 0..=nmax {
            let all = enumerate_multipartitions(d, n).expect("d >= 1");
            let k = all.len();
            let index: BTreeMap<&Multipartition, usize> =
                all.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut less = vec![vec![false; k]; k];
            for i in 0..k {
                for j in 0..k {
                    if i != j {
                        less[i][j] = dominates(&all[i], &all[j]).expect("same shape");
                    }
                }
            }
            for m in 0..k {
                let brute: BTreeSet<usize> = (0..k)
                    .filter(|&i| {
                        less[i][m] && !(0..k).any(|j| less[i][j] && less[j][m])
                    })
                    .collect();
                let mut fast = BTreeSet::new();
                for cover in dominance_covers(&all[m]) {
                    match index.get(&cover.lower) {
                        Some(&i) => {
                            if !fast.insert(i) {
                                return Err(counterexample(
                                    "covers",
                                    &json!({"d": d, "n": n, "mu": all[m].to_string(),
                                            "duplicate": cover.lower.to_string()}),
                                ));
                            }
                        }
                        None => {
                            return Err(counterexample(
                                "covers",
                                &json!({"d": d, "n": n, "mu": all[m].to_string(),
                                        "not_in_pdn": cover.lower.to_string()}),
                            ))
                        }
                    }
                }
                if brute != fast {
                    let show = |set: &BTreeSet<usize>| -> Vec<String> {
                        set.iter().map(|&i| all[i].to_string()).collect()
                    };
                    return Err(counterexample(
                        "covers",
                        &json!({"d": d, "n": n, "mu": all[m].to_string(),
                                "case_based": show(&fast), "brute_force": show(&brute)}),
                    ));
                }
                cover_pairs += brute.len();
                labels += 1;
            }
        }
    }
    Ok(format!(
        "covers: case-based covers equal brute-force covers on every P(d,n), d <= {dmax}, n <= {nmax} ({labels} labels, {cover_pairs} cover pairs): PASS"
    ))
}

fn profile_json(profile: &bnd::characters::RestrictionProfile) -> serde_json::Value {
    json!({
        "s0": profile.s0_multiplicities.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        "s1_det": profile.s1_det_multiplicity.as_ref().map(|r| r.to_string()),
    })
}

/// Restriction law: closed-form profiles equal the wreath-product brute
/// force for every label.
pub fn restrictions(dmax: usize, nmax: u32) -> Result<String, String> {
    let mut checked = 0usize;
    for d in 1..=dmax {
        for n in 1..=nmax {
            for lambda in enumerate_multipartitions(d, n).expect("d >= 1") {
                let closed = restriction_profile_closed(&lambda).expect("n >= 1");
                let brute = restriction_profile_bruteforce(&lambda).expect("within bounds");
                if closed != brute {
                    return Err(counterexample(
                        "restrictions",
                        &json!({"d": d, "n": n, "lambda": lambda.to_string(),
                                "closed": profile_json(&closed), "brute_force": profile_json(&brute)}),
                    ));
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "restrictions: closed-form profiles equal brute-force induction for all {checked} labels, d <= {dmax}, n <= {nmax}: PASS"
    ))
}

/// Normalization consistency: the two c-function routes differ by one
/// label-independent form per `(d, n)`.
pub fn corder_consistency(dmax: usize, nmax: u32) -> Result<String, String> {
    let mut grids = 0usize;
    for d in 1..=dmax {
        for n in 1..=nmax {
            let all = enumerate_multipartitions(d, n).expect("d >= 1");
            let gap =
                c_form(&all[0]) - c_form_from_multiplicities(&all[0]).expect("n >= 1");
            for lambda in &all[1..] {
                let here = c_form(lambda) - c_form_from_multiplicities(lambda).expect("n >= 1");
                if here != gap {
                    return Err(counterexample(
                        "corder-consistency",
                        &json!({"d": d, "n": n, "lambda": lambda.to_string(),
                                "gap_at_first_label": gap.to_string(), "gap_here": here.to_string()}),
                    ));
                }
            }
            grids += 1;
        }
    }
    Ok(format!(
        "corder-consistency: c-form minus multiplicity route is label-independent on {grids} grids, d <= {dmax}, n <= {nmax}: PASS"
    ))
}

/// Order comparison: on every dominance pair the c-difference is
/// non-negative at the admissible samples, and the cover-case differences
/// carry a symbolic non-negativity certificate.
pub fn comporders(dmax: usize, nmax: u32) -> Result<String, String> {
    let mut numeric_checks = 0usize;
    let mut symbolic_checks = 0usize;
    for d in 1..=dmax {
        for n in 1..=nmax {
            let all = enumerate_multipartitions(d, n).expect("d >= 1");
            let k = all.len();
            let forms: Vec<LinearForm> = all.iter().map(c_form).collect();
            let mut pairs = Vec::new();
            for i in 0..k {
                for j in 0..k {
                    if i != j && dominates(&all[i], &all[j]).expect("same shape") {
                        pairs.push((i, j));
                    }
                }
            }
            // numeric: h in {0, -1, -2}, each gap h_s - h_{s-1} in
            // {(1-n)h, (1-n)h + 1}, h_0 = 0
            for h in [0i64, -1, -2] {
                let base_gap = (1 - n as i64) * h;
                for combo in 0..(1usize << (d - 1)) {
                    let mut hr = vec![rat(0)];
                    for s in 1..d {
                        let gap = base_gap + ((combo >> (s - 1)) & 1) as i64;
                        let prev = hr[s - 1].clone();
                        hr.push(prev + rat(gap));
                    }
                    let values: Vec<Rational> = forms
                        .iter()
                        .map(|f| {
                            f.substitute(|v| match v {
                                Var::H => Some(rat(h)),
                                Var::Hr(r) => Some(hr[r].clone()),
                            })
                            .as_constant()
                            .cloned()
                            .expect("fully substituted")
                        })
                        .collect();
                    for &(i, j) in &pairs {
                        if &values[i] - &values[j] < rat(0) {
                            return Err(counterexample(
                                "comporders",
                                &json!({"d": d, "n": n, "lambda": all[i].to_string(),
                                        "mu": all[j].to_string(), "h": h.to_string(),
                                        "h_values": hr.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                                        "difference": (&values[i] - &values[j]).to_string()}),
                            ));
                        }
                        numeric_checks += 1;
                    }
                }
            }
            // symbolic certificate on cover pairs: writing the difference as
            // Σ a_s (h_s − h_{s-1}) + b·h, require a_s >= 0 and
            // b <= (n-1) Σ a_s, which forces non-negativity under
            // h <= 0, h_s − h_{s-1} >= (1-n) h.
            for mu in &all {
                for cover in dominance_covers(mu) {
                    let diff = c_form(&cover.lower) - c_form(mu);
                    let mut gap_coeffs = Vec::new();
                    for s in 1..d {
                        let a: Rational =
                            (s..d).map(|r| diff.coefficient(Var::Hr(r))).sum();
                        gap_coeffs.push(a);
                    }
                    let total: Rational = gap_coeffs.iter().cloned().sum();
                    let b = diff.coefficient(Var::H);
                    let hr_sum: Rational = (0..d).map(|r| diff.coefficient(Var::Hr(r))).sum();
                    let certified = hr_sum == rat(0)
                        && gap_coeffs.iter().all(|a| !a.is_negative())
                        && b <= rat(n as i64 - 1) * total;
                    if !certified {
                        return Err(counterexample(
                            "comporders",
                            &json!({"d": d, "n": n, "lambda": cover.lower.to_string(),
                                    "mu": mu.to_string(), "difference": diff.to_string(),
                                    "reason": "symbolic certificate failed"}),
                        ));
                    }
                    symbolic_checks += 1;
                }
            }
        }
    }
    Ok(format!(
        "comporders: {numeric_checks} sampled dominance-pair differences non-negative and {symbolic_checks} cover differences certified symbolically, d <= {dmax}, n <= {nmax}: PASS"
    ))
}

/// Decomposition-matrix identity: the bidiagonal matrix times the
/// alternating-sum matrix is the identity, in both orders.
pub fn dm_identity(max_size: usize) -> Result<String, String> {
    for size in 1..=max_size {
        let m = defect1_decomposition_matrix(size).expect("size >= 1");
        for i in 1..=size {
            for j in 1..=size {
                let da: i64 = (1..=size)
                    .map(|k| m.entry(i, k) as i64 * m.inverse_entry(k, j))
                    .sum();
                let ad: i64 = (1..=size)
                    .map(|k| m.inverse_entry(i, k) * m.entry(k, j) as i64)
                    .sum();
                let expected = i64::from(i == j);
                if da != expected || ad != expected {
                    return Err(counterexample(
                        "dm-identity",
                        &json!({"size": size, "i": i, "j": j, "da": da, "ad": ad}),
                    ));
                }
            }
        }
    }
    Ok(format!(
        "dm-identity: matrix times alternating-sum matrix is the identity for sizes 1..={max_size}: PASS"
    ))
}

/// Semisimplicity: fully symbolic parameters give an antichain and
/// all-singleton linkage on every grid.
pub fn ss(dmax: usize, nmax: u32) -> Result<String, String> {
    let mut grids = 0usize;
    for d in 1..=dmax {
        for n in 1..=nmax {
            let params = ParameterSet::symbolic(d, n).expect("valid shape");
            match semisimplicity_check(&params, OrderConvention::CategoryO).expect("valid") {
                Semisimplicity::Semisimple { .. } => {}
                Semisimplicity::NotDecided { comparable } => {
                    return Err(counterexample(
                        "ss",
                        &json!({"d": d, "n": n, "comparable":
                                [comparable.0.to_string(), comparable.1.to_string()]}),
                    ))
                }
            }
            let linkage = linkage_partition(&params).expect("valid");
            if !linkage.all_singletons() {
                let class = linkage
                    .classes()
                    .iter()
                    .find(|c| c.len() > 1)
                    .expect("non-singleton exists");
                return Err(counterexample(
                    "ss",
                    &json!({"d": d, "n": n, "linked":
                            class.iter().map(|&i| linkage.labels()[i].to_string()).collect::<Vec<_>>()}),
                ));
            }
            grids += 1;
        }
    }
    Ok(format!(
        "ss: symbolic parameters give antichain order and all-singleton linkage on {grids} grids, d <= {dmax}, n <= {nmax}: PASS"
    ))
}

fn counterexample(suite: &str, detail: &serde_json::Value) -> String {
    let mut value = detail.clone();
    if let Some(map) = value.as_object_mut() {
        map.insert("suite".into(), json!(suite));
    }
    value.to_string()
}

/// The exceptional defect-1 test vectors: every (group, r) pair whose list
/// entry is the trivial character, all with Φ_r-multiplicity exactly 1.
pub const EXCEPTIONAL_DEFECT1_VECTORS: &[(&str, usize)] = &[
    ("F4", 12),
    ("F4", 8),
    ("H3", 10),
    ("H3", 6),
    ("H4", 30),
    ("H4", 20),
    ("H4", 15),
    ("H4", 12),
    ("E6", 12),
    ("E6", 9),
    ("E7", 18),
    ("E7", 14),
    ("E8", 30),
    ("E8", 24),
    ("E8", 20),
    ("E8", 15),
];

/// Needed by the acceptance suite: `Σ v_e` with `e` the expected
/// multiplicity (all 1 here); kept as data so the CLI and tests agree.
pub fn exceptional_vectors() -> Vec<(String, usize)> {
    EXCEPTIONAL_DEFECT1_VECTORS
        .iter()
        .map(|&(g, r)| (g.to_string(), r))
        .collect()
}
