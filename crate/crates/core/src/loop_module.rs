//! Matrix realizations of the `U_q(sl2)` loop algebra: evaluation modules
//! `V(ℓ, a)`, their tensor products through the coproduct, and an exact
//! check of every defining relation.
//!
//! Since `k₀k₁ = 1`, the generator `k₁` is represented by `K0inv` and never
//! stored separately.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qstrings::{QString, QStringMultiset};
use crate::scalar::{DeformationParameter, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationSpec {
    pub ell: usize,
    pub a: Scalar,
}

impl EvaluationSpec {
    pub fn new(ell: usize, a: Scalar) -> Result<Self> {
        if ell == 0 {
            return Err(Error::ZeroLength);
        }
        if a.is_zero() {
            return Err(Error::ZeroScalar("a"));
        }
        Ok(Self { ell, a })
    }

    pub fn dim(&self) -> usize {
        self.ell + 1
    }

    pub fn qstring(&self) -> QString {
        QString::new(self.ell, self.a.clone()).expect("validated on construction")
    }
}

/// `V(ℓ₁,a₁) ⊗ ⋯ ⊗ V(ℓₙ,aₙ)` over a fixed `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    q: DeformationParameter,
    factors: Vec<EvaluationSpec>,
}

impl ModuleSpec {
    pub fn new(q: DeformationParameter, factors: Vec<EvaluationSpec>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptyInput("factors"));
        }
        Ok(Self { q, factors })
    }

    pub fn q(&self) -> &DeformationParameter {
        &self.q
    }

    pub fn factors(&self) -> &[EvaluationSpec] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(EvaluationSpec::dim).product()
    }

    /// `d = Σ ℓᵢ`.
    pub fn diameter(&self) -> usize {
        self.factors.iter().map(|f| f.ell).sum()
    }

    pub fn ells(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.ell).collect()
    }

    pub fn qstrings(&self) -> QStringMultiset {
        self.factors.iter().map(EvaluationSpec::qstring).collect()
    }
}

/// The images of `e₀⁺, e₀⁻, e₁⁺, e₁⁻, k₀, k₀⁻¹` on a module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    q: DeformationParameter,
    pub e0p: Matrix,
    pub e0m: Matrix,
    pub e1p: Matrix,
    pub e1m: Matrix,
    pub k0: Matrix,
    pub k0inv: Matrix,
}

impl GeneratorSet {
    pub fn q(&self) -> &DeformationParameter {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.k0.rows()
    }

    pub fn with_q(q: DeformationParameter, mats: [Matrix; 6]) -> Self {
        let [e0p, e0m, e1p, e1m, k0, k0inv] = mats;
        Self {
            q,
            e0p,
            e0m,
            e1p,
            e1m,
            k0,
            k0inv,
        }
    }

    fn e(&self, i: usize, raising: bool) -> &Matrix {
        match (i, raising) {
            (0, true) => &self.e0p,
            (0, false) => &self.e0m,
            (1, true) => &self.e1p,
            _ => &self.e1m,
        }
    }

    fn k(&self, i: usize) -> &Matrix {
        if i == 0 {
            &self.k0
        } else {
            &self.k0inv
        }
    }

    fn k_inv(&self, i: usize) -> &Matrix {
        if i == 0 {
            &self.k0inv
        } else {
            &self.k0
        }
    }
}

/// `V(ℓ, a)` on its standard basis `v₀, …, v_ℓ`; column `i` is the image of
/// `vᵢ`.
pub fn evaluation_rep(q: &DeformationParameter, spec: &EvaluationSpec) -> GeneratorSet {
    let ell = spec.ell;
    let n = ell + 1;
    let l = ell as i64;
    let a = &spec.a;
    let qv = q.value();
    let mut e0p = Matrix::zeros(n, n);
    let mut e0m = Matrix::zeros(n, n);
    let mut e1p = Matrix::zeros(n, n);
    let mut e1m = Matrix::zeros(n, n);
    let mut k0 = Vec::with_capacity(n);
    for i in 0..n {
        let ii = i as i64;
        k0.push(q.pow(2 * ii - l));
        if i < ell {
            e0p[(i + 1, i)] = a * qv * q.q_int(ii + 1);
            e1m[(i + 1, i)] = q.q_int(ii + 1);
        }
        if i > 0 {
            e0m[(i - 1, i)] = q.q_int(l - ii + 1) / (a * qv);
            e1p[(i - 1, i)] = q.q_int(l - ii + 1);
        }
    }
    let k0inv: Vec<Scalar> = k0.iter().map(|x| x.recip()).collect();
    GeneratorSet::with_q(
        q.clone(),
        [
            e0p,
            e0m,
            e1p,
            e1m,
            Matrix::diagonal(&k0),
            Matrix::diagonal(&k0inv),
        ],
    )
}

/// The module structure on `left ⊗ right` given by the coproduct:
///
/// ```text
/// K0   ↦ K0 ⊗ K0
/// E⁺ᵢ  ↦ Kᵢ ⊗ E⁺ᵢ + E⁺ᵢ ⊗ I
/// E⁻ᵢ  ↦ I ⊗ E⁻ᵢ + E⁻ᵢ ⊗ Kᵢ⁻¹
/// ```
///
/// The last line is `Δ(e⁻ᵢkᵢ)·Δ(kᵢ⁻¹)`. The basis is left-major.
pub fn tensor_rep(left: &GeneratorSet, right: &GeneratorSet) -> Result<GeneratorSet> {
    if left.q != right.q {
        return Err(Error::DeformationMismatch);
    }
    let il = Matrix::identity(left.dim());
    let ir = Matrix::identity(right.dim());
    let raise = |i: usize| &left.k(i).kron(right.e(i, true)) + &left.e(i, true).kron(&ir);
    let lower = |i: usize| &il.kron(right.e(i, false)) + &left.e(i, false).kron(right.k_inv(i));
    Ok(GeneratorSet::with_q(
        left.q.clone(),
        [
            raise(0),
            lower(0),
            raise(1),
            lower(1),
            left.k0.kron(&right.k0),
            left.k0inv.kron(&right.k0inv),
        ],
    ))
}

/// Left fold of [`tensor_rep`] over the factors.
pub fn build_module(spec: &ModuleSpec) -> Result<GeneratorSet> {
    let mut factors = spec.factors.iter().map(|f| evaluation_rep(&spec.q, f));
    let first = factors.next().ok_or(Error::EmptyInput("factors"))?;
    factors.try_fold(first, |acc, g| tensor_rep(&acc, &g))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: &'static str,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn push(&mut self, relation: &'static str, residual: &Matrix) {
        self.checks.push(RelationCheck {
            relation,
            ok: residual.is_zero(),
        });
    }

    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().filter(|c| !c.ok).map(|c| c.relation)
    }
}

const CONJ_SAME: [[&str; 2]; 2] = [
    ["k0 e0- k0^-1 = q^-2 e0-", "k0 e0+ k0^-1 = q^2 e0+"],
    ["k1 e1- k1^-1 = q^-2 e1-", "k1 e1+ k1^-1 = q^2 e1+"],
];
const CONJ_OTHER: [[&str; 2]; 2] = [
    ["k0 e1- k0^-1 = q^2 e1-", "k0 e1+ k0^-1 = q^-2 e1+"],
    ["k1 e0- k1^-1 = q^2 e0-", "k1 e0+ k1^-1 = q^-2 e0+"],
];
const SERRE: [[&str; 2]; 2] = [
    ["q-Serre e0- e1-", "q-Serre e0+ e1+"],
    ["q-Serre e1- e0-", "q-Serre e1+ e0+"],
];

/// Evaluates every defining relation of the loop algebra as an exact matrix
/// residual.
pub fn verify_loop_relations(g: &GeneratorSet) -> RelationReport {
    let q = &g.q;
    let n = g.dim();
    let id = Matrix::identity(n);
    let mut report = RelationReport::default();

    report.push("k0 k0^-1 = 1", &(&(&g.k0 * &g.k0inv) - &id));
    report.push("k0^-1 k0 = 1", &(&(&g.k0inv * &g.k0) - &id));
    report.push("k1 k1^-1 = 1", &(&(g.k(1) * g.k_inv(1)) - &id));
    report.push("k1^-1 k1 = 1", &(&(g.k_inv(1) * g.k(1)) - &id));
    report.push("k0 k1 = 1", &(&(g.k(0) * g.k(1)) - &id));
    report.push("k1 k0 = 1", &(&(g.k(1) * g.k(0)) - &id));

    for i in 0..2 {
        let j = 1 - i;
        for raising in [false, true] {
            let sign = if raising { 2 } else { -2 };
            let conj = |e: &Matrix| &(g.k(i) * e) * g.k_inv(i);
            let ei = g.e(i, raising);
            let ej = g.e(j, raising);
            report.push(
                CONJ_SAME[i][raising as usize],
                &(&conj(ei) - &ei.scale(&q.pow(sign))),
            );
            report.push(
                CONJ_OTHER[i][raising as usize],
                &(&conj(ej) - &ej.scale(&q.pow(-sign))),
            );
        }
    }

    let q_diff = q.value() - q.value().recip();
    for i in 0..2 {
        let rhs = (g.k(i) - g.k_inv(i)).scale(&q_diff.recip());
        let name = if i == 0 {
            "[e0+, e0-] = (k0 - k0^-1)/(q - q^-1)"
        } else {
            "[e1+, e1-] = (k1 - k1^-1)/(q - q^-1)"
        };
        report.push(name, &(&g.e(i, true).commutator(g.e(i, false)) - &rhs));
    }
    report.push("[e0+, e1-] = 0", &g.e0p.commutator(&g.e1m));
    report.push("[e1+, e0-] = 0", &g.e1p.commutator(&g.e0m));

    let beta = q.pow(2) + q.pow(-2);
    for (i, names) in SERRE.iter().enumerate() {
        let j = 1 - i;
        for raising in [false, true] {
            let ei = g.e(i, raising);
            let ej = g.e(j, raising);
            let eii = ei * ei;
            let inner = &(&(&eii * ej) - &(&(ei * ej) * ei).scale(&beta)) + &(ej * &eii);
            report.push(names[raising as usize], &ei.commutator(&inner));
        }
    }
    report
}

/// Index `i` of the `k₀`-weight `q^{2i-d}` of each basis vector, read off the
/// diagonal of `K0`. Returns `None` if `K0` is not diagonal with such entries.
pub fn weight_indices(g: &GeneratorSet, diameter: usize) -> Option<Vec<usize>> {
    if !g.k0.is_diagonal() {
        return None;
    }
    let d = diameter as i64;
    g.k0.diagonal_entries()
        .iter()
        .map(|x| {
            let e = g.q.q_power_index(x, -d, d).ok()??;
            ((e + d) % 2 == 0).then_some(((e + d) / 2) as usize)
        })
        .collect()
}
