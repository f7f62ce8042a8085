//! Subcommand implementations. Every output is byte-stable: JSON is emitted
//! with sorted keys, DOT and TSV are assembled from sorted structures, and
//! the run configuration is echoed into every output header (in-band for
//! JSON and DOT, on stderr for bare TSV).

use bnd::blocks::{
    defect1_coxeter_check, defect1_decomposition_matrix, linkage_partition,
    multiplicative_exponent, orbit_c_identity_probe, orbit_decomposition, semisimplicity_check,
    simple_dimension_series, Semisimplicity,
};
use bnd::combinatorics::Multipartition;
use bnd::corder::{build_order_poset, c_form, OrderConvention, ParameterSet};
use bnd::exactmath::{GradedSeries, Rational};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::config::{parse_convention, parse_format, parse_integer, parse_parameter_set, RawArgs};
use crate::{degrees, verify, CliError, CommandOutput};

pub fn dispatch(raw: RawArgs) -> Result<CommandOutput, CliError> {
    match raw.subcommand.as_str() {
        "order" => cmd_order(raw),
        "blocks" => cmd_blocks(raw),
        "ss" => cmd_ss(raw),
        "decmatrix" => cmd_decmatrix(raw),
        "defect1" => cmd_defect1(raw),
        "orbit" => cmd_orbit(raw),
        "series" => cmd_series(raw),
        "probe" => cmd_probe(raw),
        "verify" => cmd_verify(raw),
        "help" => Ok(CommandOutput::stdout(help_text())),
        other => Err(CliError::Parse(format!(
            "unknown subcommand `{other}`; try `bnd help`"
        ))),
    }
}

fn help_text() -> String {
    let mut text = String::from(
        "bnd: exact combinatorics of highest-weight orders for B_n(d)\n\n\
         subcommands:\n\
           order     --d D --n N [--h V] [--h0 V ..] [--order-convention C] [--format dot|json]\n\
           blocks    --d D --n N [--h V] [--h0 V ..]            linkage classes (JSON)\n\
           ss        --d D --n N [--h V] [--h0 V ..]            semisimplicity certificate (JSON)\n\
           decmatrix --size K [--format tsv|json]               defect-1 decomposition matrix\n\
           defect1   --group G --r R                            cyclotomic criterion (JSON)\n\
           orbit     --d D [--n N] --h V --h0 V ..              parameter orbit classes (JSON)\n\
           series    --d D --n N --h V [..] --block-of L --index I [--truncate T]\n\
           probe     --d D --s S --n N                          gluing-identity probe (JSON)\n\
           verify    SUITE [--dmax D] [--nmax N]                oracle suites\n\n\
         parameter values are exact rationals `p/q` or `sym`;\n\
         verify suites: covers, restrictions, corder-consistency, comporders, dm-identity, ss\n",
    );
    text.push('\n');
    text
}

fn render_json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn params_inputs(params: &ParameterSet, extra: &[(&str, Value)]) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("d".into(), json!(params.d()));
    map.insert("n".into(), json!(params.n()));
    map.insert("h".into(), json!(params.h().to_string()));
    for (r, value) in params.hr().iter().enumerate() {
        map.insert(format!("h_{r}"), json!(value.to_string()));
    }
    for (key, value) in extra {
        map.insert((*key).into(), value.clone());
    }
    Value::Object(map)
}

/// Flatten a sorted JSON object into `k=v` pairs for DOT/stderr headers.
fn inputs_line(inputs: &Value) -> String {
    inputs
        .as_object()
        .expect("inputs are an object")
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_order(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let params = parse_parameter_set(&mut raw, None)?;
    let convention = parse_convention(&mut raw)?;
    let format = parse_format(&mut raw, "dot", &["dot", "json"])?;
    raw.finish()?;
    let poset = build_order_poset(&params, convention)?;
    let inputs = params_inputs(
        &params,
        &[
            ("convention", json!(convention.to_string())),
            ("format", json!(format)),
        ],
    );
    match format.as_str() {
        "dot" => {
            let header = vec![format!("bnd order {}", inputs_line(&inputs))];
            Ok(CommandOutput::stdout(poset.to_dot(&header)))
        }
        _ => Ok(CommandOutput::stdout(render_json(&json!({
            "operation": "order",
            "inputs": inputs,
            "result": poset.to_json(),
        })))),
    }
}

fn cmd_blocks(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let params = parse_parameter_set(&mut raw, None)?;
    raw.finish()?;
    let linkage = linkage_partition(&params)?;
    let classes: Vec<Value> = linkage
        .classes()
        .iter()
        .map(|class| {
            Value::Array(
                class
                    .iter()
                    .map(|&i| json!(linkage.labels()[i].to_string()))
                    .collect(),
            )
        })
        .collect();
    Ok(CommandOutput::stdout(render_json(&json!({
        "operation": "blocks",
        "inputs": params_inputs(&params, &[]),
        "result": {
            "all_singletons": linkage.all_singletons(),
            "linkage_classes": classes,
        },
    }))))
}

fn cmd_ss(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let params = parse_parameter_set(&mut raw, None)?;
    let convention = parse_convention(&mut raw)?;
    raw.finish()?;
    let verdict = semisimplicity_check(&params, convention)?;
    let result = match verdict {
        Semisimplicity::Semisimple { antichain_size } => json!({
            "verdict": "semisimple",
            "certificate": {
                "antichain_size": antichain_size,
            },
        }),
        Semisimplicity::NotDecided { comparable } => json!({
            "verdict": "not-decided",
            "witness": [comparable.0.to_string(), comparable.1.to_string()],
        }),
    };
    Ok(CommandOutput::stdout(render_json(&json!({
        "operation": "ss",
        "inputs": params_inputs(&params, &[("convention", json!(convention.to_string()))]),
        "result": result,
    }))))
}

fn cmd_decmatrix(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let size: usize = parse_integer("--size", &raw.require("--size")?)?;
    let format = parse_format(&mut raw, "tsv", &["tsv", "json"])?;
    raw.finish()?;
    let matrix = defect1_decomposition_matrix(size)?;
    match format.as_str() {
        "tsv" => Ok(CommandOutput {
            stdout: matrix.to_tsv(),
            stderr: Some(format!("bnd decmatrix size={size} format=tsv\n")),
        }),
        _ => Ok(CommandOutput::stdout(render_json(&json!({
            "operation": "decmatrix",
            "inputs": { "format": format, "size": size },
            "result": { "rows": matrix.rows() },
        })))),
    }
}

fn cmd_defect1(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let group_name = raw.require("--group")?;
    let r: usize = parse_integer("--r", &raw.require("--r")?)?;
    raw.finish()?;
    let group = degrees::group_by_name(&group_name)?;
    let check = defect1_coxeter_check(&group.degrees, r)?;
    Ok(CommandOutput::stdout(render_json(&json!({
        "operation": "defect1",
        "inputs": { "degrees": group.degrees, "group": group.name, "r": r },
        "result": {
            "multiplicity": check.multiplicity,
            "verdict": check.verdict.to_string(),
        },
    }))))
}

fn cmd_orbit(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let params = parse_parameter_set(&mut raw, Some(1))?;
    raw.finish()?;
    let orbits = orbit_decomposition(&params)?;
    let exponents: Vec<String> = (0..params.d())
        .map(|r| Ok(rational_str(&multiplicative_exponent(&params, r)?)))
        .collect::<Result<_, CliError>>()?;
    Ok(CommandOutput::stdout(render_json(&json!({
        "operation": "orbit",
        "inputs": params_inputs(&params, &[]),
        "result": {
            "classes": orbits.classes(),
            "exponent_convention":
                "multiplicative exponent of x_r is h_r + r/d; r ~ r' iff (h_{r'}+r'/d) - (h_r+r/d) - a*h is an integer for some |a| <= n",
            "multiplicative_exponents": exponents,
        },
    }))))
}

fn series_terms(terms: &[(Rational, BigInt)]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(e, c)| json!([rational_str(e), c.to_string()]))
            .collect(),
    )
}

fn cmd_series(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let params = parse_parameter_set(&mut raw, None)?;
    let label_text = raw.require("--block-of")?;
    let index: usize = parse_integer("--index", &raw.require("--index")?)?;
    let truncate: u32 = match raw.take("--truncate") {
        Some(value) => parse_integer("--truncate", &value)?,
        None => 10,
    };
    raw.finish()?;
    let label = Multipartition::parse(&label_text)?;
    if !params.is_fully_exact() {
        return Err(CliError::Domain(
            "series need fully rational parameters".into(),
        ));
    }
    let linkage = linkage_partition(&params)?;
    let class = linkage
        .class_of(&label)
        .ok_or_else(|| {
            CliError::Domain(format!(
                "label {label} does not belong to P({}, {})",
                params.d(),
                params.n()
            ))
        })?
        .to_vec();
    // Increasing character order is decreasing c-value order.
    let mut block: Vec<Multipartition> = class
        .iter()
        .map(|&i| linkage.labels()[i].clone())
        .collect();
    block.sort_by(|a, b| {
        let ca = params.substitute(&c_form(a)).as_constant().cloned().expect("exact");
        let cb = params.substitute(&c_form(b)).as_constant().cloned().expect("exact");
        cb.cmp(&ca).then_with(|| a.cmp(b))
    });
    let series = simple_dimension_series(&block, index, &params, truncate)?;
    let block_labels: Vec<String> = block.iter().map(|l| l.to_string()).collect();
    let polynomial = match series.polynomial_detect() {
        Some(terms) => series_terms(&terms),
        None => Value::Null,
    };
    Ok(CommandOutput::stdout(render_json(&json!({
        "operation": "series",
        "inputs": params_inputs(
            &params,
            &[
                ("block_of", json!(label.to_string())),
                ("index", json!(index)),
                ("truncate", json!(truncate)),
            ],
        ),
        "result": {
            "block": block_labels,
            "expansion": series_terms(&series.expand()),
            "polynomial": polynomial,
            "series": {
                "denominator_power": series.denominator_power(),
                "numerator": series_terms(series.numerator()),
                "shift": rational_str(series.shift()),
            },
        },
    }))))
}

fn cmd_probe(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    raw.reject_positionals()?;
    let d: usize = parse_integer("--d", &raw.require("--d")?)?;
    let s: usize = parse_integer("--s", &raw.require("--s")?)?;
    let n: u32 = parse_integer("--n", &raw.require("--n")?)?;
    raw.finish()?;
    let report = orbit_c_identity_probe(d, s, n)?;
    let levels: Vec<Value> = report
        .levels
        .iter()
        .map(|level| {
            json!({
                "difference": level.difference.to_string(),
                "m": level.m,
                "matches_literal_display": level.matches_literal_display,
                "shape_independent": level.shape_independent,
            })
        })
        .collect();
    let violations: Vec<Value> = report
        .monotonicity_violations
        .iter()
        .map(|(a, b)| json!([a.to_string(), b.to_string()]))
        .collect();
    Ok(CommandOutput::stdout(render_json(&json!({
        "operation": "probe",
        "inputs": { "d": d, "n": n, "s": s },
        "result": {
            "all_shape_independent": report.all_shape_independent(),
            "levels": levels,
            "monotonicity": {
                "samples": report.samples,
                "violations": violations,
            },
        },
    }))))
}

fn cmd_verify(mut raw: RawArgs) -> Result<CommandOutput, CliError> {
    let suite = match raw.positional.as_slice() {
        [one] => one.clone(),
        [] => return Err(CliError::Parse("verify needs a suite name".into())),
        more => {
            return Err(CliError::Parse(format!(
                "verify takes one suite name, got {}",
                more.len()
            )))
        }
    };
    let dmax: Option<usize> = raw
        .take("--dmax")
        .map(|v| parse_integer("--dmax", &v))
        .transpose()?;
    let nmax: Option<u32> = raw
        .take("--nmax")
        .map(|v| parse_integer("--nmax", &v))
        .transpose()?;
    raw.finish()?;
    let summary = verify::run_suite(&suite, dmax, nmax)?;
    Ok(CommandOutput::stdout(summary))
}

/// Helper shared with the series command and tests: the graded series of one
/// simple, rendered as JSON terms.
pub fn expansion_json(series: &GradedSeries) -> Value {
    series_terms(&series.expand())
}
