//! JSON shapes emitted by the commands. Rationals are always strings and
//! key order is fixed by field order, so output is byte-stable.

use serde::Serialize;

use qonsager_core::analysis::{Analysis, CriteriaVerdict};
use qonsager_core::linalg::Matrix;
use qonsager_core::loop_module::{GeneratorSet, ModuleSpec};
use qonsager_core::onsager::{theta, theta_star, OnsagerPair};
use qonsager_core::qstrings::QString;
use qonsager_core::scalar::Scalar;

pub type JsonMatrix = Vec<Vec<String>>;

pub fn matrix(m: &Matrix) -> JsonMatrix {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(Scalar::to_string).collect())
        .collect()
}

fn strings(xs: &[Scalar]) -> Vec<String> {
    xs.iter().map(Scalar::to_string).collect()
}

#[derive(Serialize)]
pub struct FactorJson {
    pub ell: usize,
    pub a: String,
}

impl From<&QString> for FactorJson {
    fn from(s: &QString) -> Self {
        FactorJson {
            ell: s.ell(),
            a: s.base().to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct GeneratorMatrices {
    pub e0p: JsonMatrix,
    pub e0m: JsonMatrix,
    pub e1p: JsonMatrix,
    pub e1m: JsonMatrix,
    pub k0: JsonMatrix,
    pub k0inv: JsonMatrix,
}

#[derive(Serialize)]
pub struct GeneratorSetJson {
    pub dim: usize,
    pub matrices: GeneratorMatrices,
}

impl From<&GeneratorSet> for GeneratorSetJson {
    fn from(g: &GeneratorSet) -> Self {
        GeneratorSetJson {
            dim: g.dim(),
            matrices: GeneratorMatrices {
                e0p: matrix(&g.e0p),
                e0m: matrix(&g.e0m),
                e1p: matrix(&g.e1p),
                e1m: matrix(&g.e1m),
                k0: matrix(&g.k0),
                k0inv: matrix(&g.k0inv),
            },
        }
    }
}

#[derive(Serialize)]
pub struct Parameters {
    pub q: String,
    pub s: String,
    pub t: String,
}

#[derive(Serialize)]
pub struct PairJson {
    pub parameters: Parameters,
    #[serde(rename = "Z")]
    pub z: JsonMatrix,
    #[serde(rename = "Zstar")]
    pub zstar: JsonMatrix,
}

impl From<&OnsagerPair> for PairJson {
    fn from(p: &OnsagerPair) -> Self {
        PairJson {
            parameters: Parameters {
                q: p.q.value().to_string(),
                s: p.params.s().to_string(),
                t: p.params.t().to_string(),
            },
            z: matrix(&p.z),
            zstar: matrix(&p.zstar),
        }
    }
}

#[derive(Serialize)]
pub struct BuildReport {
    pub q: String,
    pub factors: Vec<FactorJson>,
    pub generators: GeneratorSetJson,
    pub pair: PairJson,
}

#[derive(Serialize)]
pub struct CriteriaJson {
    pub i1: bool,
    pub i2: bool,
    pub i3: bool,
}

impl From<CriteriaVerdict> for CriteriaJson {
    fn from(v: CriteriaVerdict) -> Self {
        CriteriaJson {
            i1: v.i1,
            i2: v.i2,
            i3: v.i3,
        }
    }
}

#[derive(Serialize)]
pub struct RelationsJson {
    pub loop_relations: bool,
    pub td_relations: bool,
    pub weight_grading: bool,
    pub failures: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub criteria: CriteriaJson,
    pub burnside: bool,
    pub agree: bool,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    #[serde(rename = "dims_U")]
    pub dims_u: Option<Vec<usize>>,
    pub g_product_match: Option<bool>,
    pub leonard: Option<bool>,
    pub diagonalizable: bool,
    pub irreducible_and_diagonalizable: bool,
    pub spectrum_matches_charpoly: Option<bool>,
    pub relations: RelationsJson,
}

impl AnalysisReport {
    pub fn new(spec: &ModuleSpec, pair: &OnsagerPair, a: &Analysis) -> Self {
        let d = spec.diameter();
        let failures = a
            .loop_relations
            .failures()
            .chain(a.td_relations.failures())
            .collect();
        AnalysisReport {
            criteria: a.criteria.into(),
            burnside: a.burnside,
            agree: a.agree(),
            theta: strings(&theta(&pair.q, &pair.params, d)),
            theta_star: strings(&theta_star(&pair.q, &pair.params, d)),
            dims_u: a.profile.as_ref().map(|p| p.dims_u.clone()),
            g_product_match: a.g_product_match,
            leonard: a.leonard,
            diagonalizable: a.diagonalizable,
            irreducible_and_diagonalizable: a.irreducible_and_diagonalizable(),
            spectrum_matches_charpoly: a.spectrum_matches_charpoly,
            relations: RelationsJson {
                loop_relations: a.loop_relations.passes(),
                td_relations: a.td_relations.passes(),
                weight_grading: a.weight_grading,
                failures,
            },
        }
    }
}

#[derive(Serialize)]
pub struct SweepLine {
    pub index: usize,
    #[serde(flatten)]
    pub report: AnalysisReport,
}

#[derive(Serialize)]
pub struct QStringsReport {
    pub q: String,
    pub inverse_closed: bool,
    pub strings: Vec<FactorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub general_position: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strongly_in_general_position: Option<bool>,
}

#[derive(Serialize)]
pub struct IsomorphicReport {
    pub criteria: bool,
    pub intertwiner_dimension: usize,
    pub intertwiner_invertible: Option<bool>,
    pub oracle: bool,
    pub agree: bool,
}
