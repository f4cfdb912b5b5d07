//! The JSON spec file:
//!
//! ```json
//! {"q":"2","factors":[{"ell":1,"a":"1"}],"s":"1","t":"3"}
//! ```
//!
//! Rationals are strings (`"-9/2"`). Every rejection names the offending
//! field.

use serde_json::{Map, Value};

use qonsager_core::analysis::Construction;
use qonsager_core::loop_module::{EvaluationSpec, ModuleSpec};
use qonsager_core::onsager::OnsagerParams;
use qonsager_core::scalar::{int, parse_scalar, DeformationParameter, Scalar};

use crate::error::{CliError, CliResult};

pub const DEFAULT_MAX_DIM: usize = 64;

#[derive(Clone, Debug)]
pub struct SpecFile {
    pub spec: ModuleSpec,
    pub params: OnsagerParams,
}

impl SpecFile {
    pub fn parse_str(text: &str, max_dim: usize) -> CliResult<Self> {
        let value: Value = serde_json::from_str(text)
            .map_err(|e| CliError::field("spec", format!("invalid JSON: {e}")))?;
        Self::from_value(&value, max_dim)
    }

    pub fn from_value(value: &Value, max_dim: usize) -> CliResult<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| CliError::field("spec", "expected a JSON object"))?;
        let q = parse_q(obj)?;
        let factors = obj
            .get("factors")
            .ok_or_else(|| CliError::field("factors", "missing"))?
            .as_array()
            .ok_or_else(|| CliError::field("factors", "expected an array"))?;
        if factors.is_empty() {
            return Err(CliError::field(
                "factors",
                "must contain at least one factor",
            ));
        }
        let factors = factors
            .iter()
            .enumerate()
            .map(|(i, f)| parse_factor(f).map_err(|e| e.within(&format!("factors[{i}]"))))
            .collect::<CliResult<Vec<_>>>()?;
        let spec = ModuleSpec::new(q, factors)?;
        if spec.dim() > max_dim {
            return Err(CliError::field(
                "factors",
                format!(
                    "module dimension {} exceeds QONSAGER_MAX_DIM={max_dim}",
                    spec.dim()
                ),
            ));
        }
        let s = nonzero(obj, "s")?;
        let t = nonzero(obj, "t")?;
        let params = OnsagerParams::new(s, t)?;
        Ok(Self { spec, params })
    }

    pub fn construction(&self) -> CliResult<Construction> {
        Ok(Construction::new(self.spec.clone(), self.params.clone())?)
    }
}

/// Reads `QONSAGER_MAX_DIM`, falling back to the default when unset.
pub fn max_dim_from_env() -> CliResult<usize> {
    match std::env::var("QONSAGER_MAX_DIM") {
        Err(_) => Ok(DEFAULT_MAX_DIM),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| {
                CliError::field(
                    "QONSAGER_MAX_DIM",
                    format!("expected a positive integer, got {v:?}"),
                )
            }),
    }
}

pub fn parse_rational(field: &str, text: &str) -> CliResult<Scalar> {
    parse_scalar(text).ok_or_else(|| {
        CliError::field(
            field,
            format!("expected a rational like \"-9/2\", got {text:?}"),
        )
    })
}

pub fn parse_deformation(field: &str, text: &str) -> CliResult<DeformationParameter> {
    let q = parse_rational(field, text)?;
    DeformationParameter::new(q)
        .map_err(|_| CliError::field(field, format!("must satisfy |q| > 1, got {text:?}")))
}

fn rational_field(obj: &Map<String, Value>, key: &str) -> CliResult<Scalar> {
    match obj.get(key) {
        None => Err(CliError::field(key, "missing")),
        Some(Value::String(s)) => parse_rational(key, s),
        Some(other) => Err(CliError::field(
            key,
            format!("expected a rational string, got {other}"),
        )),
    }
}

fn nonzero(obj: &Map<String, Value>, key: &str) -> CliResult<Scalar> {
    let x = rational_field(obj, key)?;
    if x == int(0) {
        return Err(CliError::field(key, "must be nonzero"));
    }
    Ok(x)
}

fn parse_q(obj: &Map<String, Value>) -> CliResult<DeformationParameter> {
    match obj.get("q") {
        None => Err(CliError::field("q", "missing")),
        Some(Value::String(s)) => parse_deformation("q", s),
        Some(other) => Err(CliError::field(
            "q",
            format!("expected a rational string, got {other}"),
        )),
    }
}

fn parse_factor(value: &Value) -> CliResult<EvaluationSpec> {
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::field("", "expected an object {\"ell\", \"a\"}"))?;
    let ell = match obj.get("ell") {
        None => return Err(CliError::field(".ell", "missing")),
        Some(v) => v.as_u64().filter(|&l| l >= 1).ok_or_else(|| {
            CliError::field(".ell", format!("expected a positive integer, got {v}"))
        })?,
    };
    let a = nonzero(obj, "a").map_err(|e| e.within("."))?;
    Ok(EvaluationSpec::new(ell as usize, a)?)
}
