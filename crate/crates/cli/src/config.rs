//! Hand-rolled flag parsing. The flag set depends on `--d` (the parameter
//! flags run `--h0 .. --h{d-1}`), so parsing is two-phase: collect raw
//! flag/value pairs, then let each subcommand consume what it declares and
//! reject the rest by name.

use std::collections::BTreeMap;

use bnd::corder::{OrderConvention, ParamValue, ParameterSet};
use bnd::exactmath::parse_rational;

use crate::CliError;

/// Tokenized command line: subcommand, positionals, and `--flag value` pairs.
#[derive(Debug, Clone)]
pub struct RawArgs {
    pub subcommand: String,
    pub positional: Vec<String>,
    flags: BTreeMap<String, String>,
}

impl RawArgs {
    pub fn parse(args: &[String]) -> Result<RawArgs, CliError> {
        let mut iter = args.iter();
        let subcommand = iter
            .next()
            .ok_or_else(|| CliError::Parse("missing subcommand; try `bnd help`".into()))?
            .clone();
        let mut positional = Vec::new();
        let mut flags = BTreeMap::new();
        while let Some(token) = iter.next() {
            if let Some(_name) = token.strip_prefix("--") {
                let value = iter.next().ok_or_else(|| {
                    CliError::Parse(format!("flag {token} is missing its value"))
                })?;
                if flags.insert(token.clone(), value.clone()).is_some() {
                    return Err(CliError::Parse(format!("flag {token} given twice")));
                }
            } else {
                positional.push(token.clone());
            }
        }
        Ok(RawArgs {
            subcommand,
            positional,
            flags,
        })
    }

    /// Consume a flag's value, if present.
    pub fn take(&mut self, flag: &str) -> Option<String> {
        self.flags.remove(flag)
    }

    /// Consume a required flag.
    pub fn require(&mut self, flag: &str) -> Result<String, CliError> {
        self.take(flag)
            .ok_or_else(|| CliError::Parse(format!("missing required flag {flag}")))
    }

    /// After a command has consumed its flags, anything left is unknown.
    pub fn finish(self) -> Result<(), CliError> {
        if let Some((flag, _)) = self.flags.into_iter().next() {
            return Err(CliError::Parse(format!(
                "unknown flag {flag} for subcommand `{}`",
                self.subcommand
            )));
        }
        Ok(())
    }

    pub fn reject_positionals(&self) -> Result<(), CliError> {
        if let Some(extra) = self.positional.first() {
            return Err(CliError::Parse(format!(
                "unexpected argument `{extra}` for subcommand `{}`",
                self.subcommand
            )));
        }
        Ok(())
    }
}

pub fn parse_integer<T: std::str::FromStr>(flag: &str, value: &str) -> Result<T, CliError> {
    value
        .parse::<T>()
        .map_err(|_| CliError::Parse(format!("flag {flag}: `{value}` is not a valid integer")))
}

pub fn parse_param_value(flag: &str, value: &str) -> Result<ParamValue, CliError> {
    if value == "sym" {
        return Ok(ParamValue::Symbolic);
    }
    parse_rational(value)
        .map(ParamValue::Exact)
        .map_err(|_| CliError::Parse(format!("flag {flag}: `{value}` is neither `sym` nor `p/q`")))
}

/// Collected parameter flags: `--d`, `--n` (optional default), `--h`,
/// `--h0 .. --h{d-1}`; unset variables default to symbolic.
pub fn parse_parameter_set(
    raw: &mut RawArgs,
    default_n: Option<u32>,
) -> Result<ParameterSet, CliError> {
    let d: usize = parse_integer("--d", &raw.require("--d")?)?;
    let n: u32 = match raw.take("--n") {
        Some(value) => parse_integer("--n", &value)?,
        None => default_n.ok_or_else(|| CliError::Parse("missing required flag --n".into()))?,
    };
    let h = match raw.take("--h") {
        Some(value) => parse_param_value("--h", &value)?,
        None => ParamValue::Symbolic,
    };
    let mut hr = Vec::with_capacity(d);
    for r in 0..d {
        let flag = format!("--h{r}");
        hr.push(match raw.take(&flag) {
            Some(value) => parse_param_value(&flag, &value)?,
            None => ParamValue::Symbolic,
        });
    }
    Ok(ParameterSet::new(d, n, h, hr)?)
}

pub fn parse_convention(raw: &mut RawArgs) -> Result<OrderConvention, CliError> {
    match raw.take("--order-convention").as_deref() {
        None | Some("categoryO") => Ok(OrderConvention::CategoryO),
        Some("coarse") | Some("coarse-linear") => Ok(OrderConvention::CoarseLinear),
        Some(other) => Err(CliError::Parse(format!(
            "flag --order-convention: `{other}` is not one of categoryO, coarse"
        ))),
    }
}

/// Output format selector with a per-command default and allow-list.
pub fn parse_format(
    raw: &mut RawArgs,
    default: &'static str,
    allowed: &[&'static str],
) -> Result<String, CliError> {
    let format = raw.take("--format").unwrap_or_else(|| default.to_string());
    if allowed.contains(&format.as_str()) {
        Ok(format)
    } else {
        Err(CliError::Parse(format!(
            "flag --format: `{format}` is not one of {}",
            allowed.join(", ")
        )))
    }
}
