//! The q-Onsager pair `(Z, Z*)` obtained by evaluating the embedding of the
//! q-Onsager algebra into the loop algebra on a constructed module, and an
//! exact check of the two tridiagonal relations.
//!
//! With `k(s) = s k₀`, `x(s) = α(s e₀⁺ + s⁻¹ e₁⁻ k₁)` and
//! `y(s) = s e₀⁻ k₀ + s⁻¹ e₁⁺`, where `α = -q⁻¹(q - q⁻¹)²`:
//!
//! ```text
//! Z  = x(s) + t k(s) + t⁻¹ k(s)⁻¹
//! Z* = y(s) + t⁻¹ k(s) + t k(s)⁻¹
//! ```
//!
//! Products are operator composition on column vectors, so `e₁⁻k₁` is the
//! matrix product `E1m · K0inv`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::loop_module::{weight_indices, GeneratorSet, RelationReport};
use crate::scalar::{DeformationParameter, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnsagerParams {
    s: Scalar,
    t: Scalar,
}

impl OnsagerParams {
    pub fn new(s: Scalar, t: Scalar) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::ZeroScalar("s"));
        }
        if t.is_zero() {
            return Err(Error::ZeroScalar("t"));
        }
        Ok(Self { s, t })
    }

    pub fn s(&self) -> &Scalar {
        &self.s
    }

    pub fn t(&self) -> &Scalar {
        &self.t
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnsagerPair {
    pub q: DeformationParameter,
    pub params: OnsagerParams,
    pub z: Matrix,
    pub zstar: Matrix,
}

impl OnsagerPair {
    /// A pair not necessarily coming from the embedding.
    pub fn from_matrices(
        q: DeformationParameter,
        params: OnsagerParams,
        z: Matrix,
        zstar: Matrix,
    ) -> Result<Self> {
        if !z.is_square() || !zstar.is_square() || z.rows() != zstar.rows() {
            return Err(Error::DimensionMismatch {
                left: z.rows(),
                right: zstar.rows(),
            });
        }
        Ok(Self {
            q,
            params,
            z,
            zstar,
        })
    }

    pub fn dim(&self) -> usize {
        self.z.rows()
    }
}

/// `(β, δ) = (q² + q⁻², -(q² - q⁻²)²)`.
pub fn td_constants(q: &DeformationParameter) -> (Scalar, Scalar) {
    let beta = q.pow(2) + q.pow(-2);
    let diff = q.pow(2) - q.pow(-2);
    (beta, -(&diff * &diff))
}

/// `α = -q⁻¹(q - q⁻¹)²`.
pub fn alpha(q: &DeformationParameter) -> Scalar {
    let diff = q.value() - q.pow(-1);
    -(q.pow(-1) * &diff * &diff)
}

pub fn phi_images(g: &GeneratorSet, p: &OnsagerParams) -> OnsagerPair {
    let q = g.q();
    let (s, t) = (&p.s, &p.t);
    let s_inv = s.recip();
    let t_inv = t.recip();
    let x = &g.e0p.scale(s) + &(&g.e1m * &g.k0inv).scale(&s_inv);
    let x = x.scale(&alpha(q));
    let y = &(&g.e0m * &g.k0).scale(s) + &g.e1p.scale(&s_inv);
    let z = &(&x + &g.k0.scale(&(t * s))) + &g.k0inv.scale(&(&t_inv * &s_inv));
    let zstar = &(&y + &g.k0.scale(&(&t_inv * s))) + &g.k0inv.scale(&(t * &s_inv));
    OnsagerPair {
        q: q.clone(),
        params: p.clone(),
        z,
        zstar,
    }
}

/// Residuals of
/// `[Z, Z²Z* - βZZ*Z + Z*Z²] - δ[Z, Z*]` and the same with `Z ↔ Z*`.
pub fn verify_td_relations(pair: &OnsagerPair) -> RelationReport {
    let (beta, delta) = td_constants(&pair.q);
    let residual = |a: &Matrix, b: &Matrix| {
        let aa = a * a;
        let inner = &(&(&aa * b) - &(&(a * b) * a).scale(&beta)) + &(b * &aa);
        &a.commutator(&inner) - &a.commutator(b).scale(&delta)
    };
    let mut report = RelationReport::default();
    report.push(
        "[z, z^2 z* - beta z z* z + z* z^2] = delta [z, z*]",
        &residual(&pair.z, &pair.zstar),
    );
    report.push(
        "[z*, z*^2 z - beta z* z z* + z z*^2] = delta [z*, z]",
        &residual(&pair.zstar, &pair.z),
    );
    report
}

/// `θᵢ = s t q^{2i-d} + s⁻¹t⁻¹ q^{d-2i}` for `0 ≤ i ≤ d`.
pub fn theta(q: &DeformationParameter, p: &OnsagerParams, diameter: usize) -> Vec<Scalar> {
    let st = &p.s * &p.t;
    weighted_sum(q, &st, diameter)
}

/// `θ*ᵢ = s t⁻¹ q^{2i-d} + s⁻¹t q^{d-2i}` for `0 ≤ i ≤ d`.
pub fn theta_star(q: &DeformationParameter, p: &OnsagerParams, diameter: usize) -> Vec<Scalar> {
    let ratio = &p.s / &p.t;
    weighted_sum(q, &ratio, diameter)
}

fn weighted_sum(q: &DeformationParameter, c: &Scalar, diameter: usize) -> Vec<Scalar> {
    let d = diameter as i64;
    let c_inv = c.recip();
    (0..=d)
        .map(|i| c * q.pow(2 * i - d) + &c_inv * q.pow(d - 2 * i))
        .collect()
}

/// Checks the shape of the pair relative to the `k₀`-weight grading of the
/// construction basis: `Z` only moves weight `i` to weights `i` and `i+1`,
/// `Z*` only to `i` and `i-1`, and on each weight space the diagonal parts
/// are the scalars `θᵢ` and `θ*ᵢ`.
pub fn weight_grading_holds(pair: &OnsagerPair, g: &GeneratorSet, diameter: usize) -> bool {
    let Some(w) = weight_indices(g, diameter) else {
        return false;
    };
    if w.len() != pair.dim() {
        return false;
    }
    let th = theta(&pair.q, &pair.params, diameter);
    let ths = theta_star(&pair.q, &pair.params, diameter);
    let n = pair.dim();
    for r in 0..n {
        for c in 0..n {
            let (zr, zs) = (&pair.z[(r, c)], &pair.zstar[(r, c)]);
            let (wr, wc) = (w[r], w[c]);
            if r == c {
                if *zr != th[wr] || *zs != ths[wr] {
                    return false;
                }
                continue;
            }
            if !zr.is_zero() && wr != wc + 1 {
                return false;
            }
            if !zs.is_zero() && wr + 1 != wc {
                return false;
            }
        }
    }
    true
}
