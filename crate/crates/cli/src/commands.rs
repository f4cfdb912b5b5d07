//! Each command returns its JSON text and exit code; nothing is printed
//! here, so an error never leaves partial output behind.

use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use qonsager_core::analysis::{analyze, intertwiners, theorem_criteria, theorem_iso_criteria};
use qonsager_core::qstrings::{
    decompose, decompose_inverse_closed, in_general_position, strongly_in_general_position,
    ScalarMultiset,
};

use crate::error::{CliError, CliResult};
use crate::report::{
    AnalysisReport, BuildReport, FactorJson, GeneratorSetJson, IsomorphicReport, PairJson,
    QStringsReport, SweepLine,
};
use crate::spec_file::{parse_deformation, parse_rational, SpecFile};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn build(spec: &SpecFile) -> CliResult<Output> {
    let c = spec.construction()?;
    let report = BuildReport {
        q: c.spec.q().value().to_string(),
        factors: c.qstrings().iter().map(FactorJson::from).collect(),
        generators: GeneratorSetJson::from(&c.generators),
        pair: PairJson::from(&c.pair),
    };
    Ok(Output {
        text: json(&report),
        code: EXIT_YES,
    })
}

fn analysis_report(spec: &SpecFile) -> CliResult<(AnalysisReport, bool)> {
    let c = spec.construction()?;
    let a = analyze(&c)?;
    Ok((
        AnalysisReport::new(&c.spec, &c.pair, &a),
        a.criteria.irreducible(),
    ))
}

/// Exit 0 when the criteria call the pair irreducible, 1 otherwise.
pub fn analyze_spec(spec: &SpecFile) -> CliResult<Output> {
    let (report, irreducible) = analysis_report(spec)?;
    Ok(Output {
        text: json(&report),
        code: if irreducible { EXIT_YES } else { EXIT_NO },
    })
}

/// Parses a comma-separated list of rationals.
pub fn parse_omega(csv: &str) -> CliResult<Vec<qonsager_core::Scalar>> {
    csv.split(',')
        .enumerate()
        .map(|(i, x)| parse_rational(&format!("omega[{i}]"), x.trim()))
        .collect()
}

pub fn qstrings(q: &str, omega: &str, inverse_closed: bool) -> CliResult<Output> {
    let q = parse_deformation("q", q)?;
    let values = parse_omega(omega)?;
    let omega = ScalarMultiset::new(values).map_err(|e| CliError::field("omega", e.to_string()))?;
    let map_err = |e: qonsager_core::Error| CliError::field("omega", e.to_string());
    let report = if inverse_closed {
        let strings = decompose_inverse_closed(&q, &omega).map_err(map_err)?;
        QStringsReport {
            q: q.value().to_string(),
            inverse_closed,
            strings: strings.strings().iter().map(FactorJson::from).collect(),
            general_position: None,
            strongly_in_general_position: Some(strongly_in_general_position(&q, &strings)?),
        }
    } else {
        let strings = decompose(&q, &omega).map_err(map_err)?;
        QStringsReport {
            q: q.value().to_string(),
            inverse_closed,
            strings: strings.strings().iter().map(FactorJson::from).collect(),
            general_position: Some(in_general_position(&q, &strings)),
            strongly_in_general_position: None,
        }
    };
    Ok(Output {
        text: json(&report),
        code: EXIT_YES,
    })
}

/// Both inputs must be irreducible by the criteria. Exit 0 iff the criteria
/// call them isomorphic.
pub fn isomorphic(a: &SpecFile, b: &SpecFile) -> CliResult<Output> {
    for (name, s) in [("spec A", a), ("spec B", b)] {
        let v = theorem_criteria(&s.spec, &s.params)?;
        if !v.irreducible() {
            return Err(CliError::Usage(format!(
                "{name} is reducible (i1={}, i2={}, i3={}); the isomorphism criteria need irreducible inputs",
                v.i1, v.i2, v.i3
            )));
        }
    }
    let criteria = theorem_iso_criteria(&a.spec, &a.params, &b.spec, &b.params)?;
    let (ca, cb) = (a.construction()?, b.construction()?);
    let (dimension, invertible) = if ca.pair.dim() == cb.pair.dim() {
        let w = intertwiners(&ca.pair, &cb.pair)?;
        (w.dimension(), w.certified_isomorphism())
    } else {
        (0, None)
    };
    let oracle = dimension == 1 && invertible == Some(true);
    let report = IsomorphicReport {
        criteria,
        intertwiner_dimension: dimension,
        intertwiner_invertible: invertible,
        oracle,
        agree: criteria == oracle,
    };
    Ok(Output {
        text: json(&report),
        code: if criteria { EXIT_YES } else { EXIT_NO },
    })
}

/// Parses a JSON array of specs, failing on the first bad entry.
pub fn parse_sweep(text: &str, max_dim: usize) -> CliResult<Vec<SpecFile>> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::field("sweep", format!("invalid JSON: {e}")))?;
    let items = value
        .as_array()
        .ok_or_else(|| CliError::field("sweep", "expected a JSON array of specs"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| SpecFile::from_value(v, max_dim).map_err(|e| e.within(&format!("[{i}]."))))
        .collect()
}

/// One analysis report per line, in input order. Cases run in parallel.
pub fn sweep(specs: &[SpecFile]) -> CliResult<Output> {
    let reports: Vec<CliResult<(AnalysisReport, bool)>> =
        specs.par_iter().map(analysis_report).collect();
    let mut text = String::new();
    for (index, r) in reports.into_iter().enumerate() {
        let (report, _) = r.map_err(|e| e.within(&format!("[{index}].")))?;
        text.push_str(&json(&SweepLine { index, report }));
        text.push('\n');
    }
    Ok(Output {
        text,
        code: EXIT_YES,
    })
}
