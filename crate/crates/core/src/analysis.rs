//! Irreducibility and isomorphism of the constructed pairs, decided twice:
//! once by the q-string/parameter criteria and once by exact linear algebra
//! (Burnside's theorem and intertwiner spaces). Also computes eigenspaces,
//! the split decomposition `Uᵢ = (V*₀ + ⋯ + V*ᵢ) ∩ (Vᵢ + ⋯ + V_d)`, its
//! generating function, and Leonard-pair status.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{poly, Matrix, Subspace};
use crate::loop_module::{
    build_module, verify_loop_relations, weight_indices, GeneratorSet, ModuleSpec, RelationReport,
};
use crate::onsager::{
    phi_images, theta, theta_star, verify_td_relations, weight_grading_holds, OnsagerPair,
    OnsagerParams,
};
use crate::qstrings::{equivalent, strongly_in_general_position, QString};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriteriaVerdict {
    /// The q-strings of the factors are strongly in general position.
    pub i1: bool,
    /// Neither `-s²` nor `-t²` lies in any `S(ℓᵢ,aᵢ) ∪ S(ℓᵢ,aᵢ⁻¹)`.
    pub i2: bool,
    /// None of `±st, ±st⁻¹` equals `q^i` for `-d+1 ≤ i ≤ d-1`.
    pub i3: bool,
}

impl CriteriaVerdict {
    pub fn irreducible(&self) -> bool {
        self.i1 && self.i2 && self.i3
    }
}

pub fn theorem_criteria(spec: &ModuleSpec, p: &OnsagerParams) -> Result<CriteriaVerdict> {
    let q = spec.q();
    let i1 = strongly_in_general_position(q, &spec.qstrings())?;

    let minus_s2 = -(p.s() * p.s());
    let minus_t2 = -(p.t() * p.t());
    let i2 = spec.factors().iter().all(|f| {
        let string = f.qstring();
        let inverse = string.inverse();
        [&minus_s2, &minus_t2]
            .iter()
            .all(|x| !string.contains(q, x) && !inverse.contains(q, x))
    });

    let d = spec.diameter() as i64;
    let st = p.s() * p.t();
    let s_over_t = p.s() / p.t();
    let candidates = [st.clone(), -st, s_over_t.clone(), -s_over_t];
    let mut i3 = true;
    for x in &candidates {
        if q.q_power_index(x, 1 - d, d - 1)?.is_some() {
            i3 = false;
        }
    }
    Ok(CriteriaVerdict { i1, i2, i3 })
}

/// Vectors kept in reduced row echelon form, one pivot per row, every row
/// zero at every other row's pivot.
struct EchelonBasis {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the current rows.
    fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pivot].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let f = row[pivot].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Dimension of the unital algebra generated by `Z` and `Z*`.
///
/// A breadth-first closure of `{I}` is first run modulo a large prime,
/// recording each new basis element as a word `g · parent`. Words independent
/// mod `p` are independent over the rationals, so reaching `n²` there is
/// final. Short of that, the same words are rebuilt exactly and their span
/// is checked for closure under left multiplication by both generators.
/// If that fails too, the exact closure is run directly.
pub fn generated_algebra_dimension(pair: &OnsagerPair) -> usize {
    let n = pair.dim();
    for &p in &modp::PRIMES {
        let Some(words) = modp::closure_words(pair, p) else {
            continue;
        };
        if words.len() == n * n {
            return n * n;
        }
        if let Some(dim) = verify_words(pair, &words) {
            return dim;
        }
    }
    exact_closure_dimension(pair)
}

fn generators(pair: &OnsagerPair) -> [&Matrix; 2] {
    [&pair.z, &pair.zstar]
}

fn verify_words(pair: &OnsagerPair, words: &[(usize, usize)]) -> Option<usize> {
    let n = pair.dim();
    let gens = generators(pair);
    let mut mats: Vec<Matrix> = Vec::with_capacity(words.len());
    let mut basis = EchelonBasis::new();
    for (i, &(parent, g)) in words.iter().enumerate() {
        let m = if i == 0 {
            Matrix::identity(n)
        } else {
            gens[g] * &mats[parent]
        };
        if !basis.insert(m.entries().to_vec()) {
            return None;
        }
        mats.push(m);
    }
    for m in &mats {
        for g in gens {
            if basis.insert((g * m).entries().to_vec()) {
                return None;
            }
        }
    }
    Some(basis.len())
}

fn exact_closure_dimension(pair: &OnsagerPair) -> usize {
    let n = pair.dim();
    let mut basis = EchelonBasis::new();
    let id = Matrix::identity(n);
    basis.insert(id.entries().to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        if basis.len() == n * n {
            break;
        }
        for g in generators(pair) {
            let w = g * &m;
            if basis.insert(w.entries().to_vec()) {
                queue.push_back(w);
            }
        }
    }
    basis.len()
}

mod modp {
    use alloc::collections::VecDeque;
    use alloc::vec::Vec;

    use num_bigint::BigInt;
    use num_traits::{ToPrimitive, Zero};

    use super::{generators, OnsagerPair};
    use crate::scalar::Scalar;

    pub(super) const PRIMES: [u64; 3] = [
        2_305_843_009_213_693_951,
        4_611_686_018_427_387_847,
        1_000_000_007,
    ];

    fn mul(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    fn inv(a: u64, p: u64) -> u64 {
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base, p);
            }
            base = mul(base, base, p);
            e >>= 1;
        }
        acc
    }

    fn reduce_int(x: &BigInt, p: u64) -> u64 {
        let m = BigInt::from(p);
        let r = ((x % &m) + &m) % &m;
        r.to_u64().unwrap_or(0)
    }

    fn reduce(x: &Scalar, p: u64) -> Option<u64> {
        let den = reduce_int(x.denom(), p);
        if den.is_zero() {
            return None;
        }
        Some(mul(reduce_int(x.numer(), p), inv(den, p), p))
    }

    fn reduce_matrix(m: &crate::linalg::Matrix, p: u64) -> Option<Vec<u64>> {
        m.entries().iter().map(|x| reduce(x, p)).collect()
    }

    fn mat_mul(a: &[u64], b: &[u64], n: usize, p: u64) -> Vec<u64> {
        let mut out = alloc::vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b[k * n + j];
                    if y != 0 {
                        let o = &mut out[i * n + j];
                        *o = (*o + mul(x, y, p)) % p;
                    }
                }
            }
        }
        out
    }

    /// One-sided echelon rows kept sorted by pivot, each normalised to a
    /// leading one.
    struct Echelon {
        rows: Vec<(usize, Vec<u64>)>,
        p: u64,
    }

    impl Echelon {
        fn insert(&mut self, mut v: Vec<u64>) -> bool {
            let p = self.p;
            for (piv, row) in &self.rows {
                let f = v[*piv];
                if f == 0 {
                    continue;
                }
                for (x, r) in v.iter_mut().zip(row).skip(*piv) {
                    if *r != 0 {
                        *x = (*x + p - mul(f, *r, p)) % p;
                    }
                }
            }
            let Some(piv) = v.iter().position(|&x| x != 0) else {
                return false;
            };
            let scale = inv(v[piv], p);
            for x in v.iter_mut() {
                *x = mul(*x, scale, p);
            }
            let at = self.rows.partition_point(|(q, _)| *q < piv);
            self.rows.insert(at, (piv, v));
            true
        }
    }

    /// Basis words of the generated algebra modulo `p`, as
    /// `(parent, generator)` pairs with entry 0 standing for the identity.
    /// `None` when some entry has a denominator divisible by `p`.
    pub(super) fn closure_words(pair: &OnsagerPair, p: u64) -> Option<Vec<(usize, usize)>> {
        let n = pair.dim();
        let gens: Vec<Vec<u64>> = generators(pair)
            .iter()
            .map(|g| reduce_matrix(g, p))
            .collect::<Option<_>>()?;
        let mut id = alloc::vec![0u64; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        let mut echelon = Echelon {
            rows: Vec::new(),
            p,
        };
        echelon.insert(id.clone());
        let mut words = alloc::vec![(0usize, 0usize)];
        let mut queue = VecDeque::from([(0usize, id)]);
        while let Some((index, m)) = queue.pop_front() {
            if echelon.rows.len() == n * n {
                break;
            }
            for (gi, g) in gens.iter().enumerate() {
                let w = mat_mul(g, &m, n, p);
                if echelon.insert(w.clone()) {
                    words.push((index, gi));
                    queue.push_back((words.len() - 1, w));
                }
            }
        }
        Some(words)
    }
}

/// Burnside: the pair acts irreducibly exactly when it generates the full
/// `dim²`-dimensional matrix algebra.
pub fn burnside_irreducible(pair: &OnsagerPair) -> bool {
    let n = pair.dim();
    n > 0 && generated_algebra_dimension(pair) == n * n
}

/// Whether `m` is diagonalizable with all eigenvalues among `eigenvalues`.
pub fn diagonalizable_with_spectrum(m: &Matrix, eigenvalues: &[Scalar]) -> bool {
    let mut distinct: Vec<&Scalar> = eigenvalues.iter().collect();
    distinct.sort();
    distinct.dedup();
    let total: usize = distinct
        .iter()
        .map(|v| m.shift(&-(*v).clone()).nullspace().len())
        .sum();
    total == m.rows()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiners {
    /// Basis of `{ P : P Z_A = Z_B P, P Z*_A = Z*_B P }`.
    pub basis: Vec<Matrix>,
}

impl Intertwiners {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// For a one-dimensional space, whether its generator is invertible.
    pub fn certified_isomorphism(&self) -> Option<bool> {
        match self.basis.as_slice() {
            [p] => Some(p.rank() == p.rows()),
            _ => None,
        }
    }
}

pub fn intertwiners(a: &OnsagerPair, b: &OnsagerPair) -> Result<Intertwiners> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.dim(),
        });
    }
    // Unknown P[r][c] sits at column r*n + c.
    let mut system = Matrix::zeros(2 * n * n, n * n);
    for (block, (ma, mb)) in [(&a.z, &b.z), (&a.zstar, &b.zstar)].into_iter().enumerate() {
        for r in 0..n {
            for c in 0..n {
                let eq = block * n * n + r * n + c;
                for k in 0..n {
                    if !ma[(k, c)].is_zero() {
                        system[(eq, r * n + k)] += &ma[(k, c)];
                    }
                    if !mb[(r, k)].is_zero() {
                        system[(eq, k * n + c)] -= &mb[(r, k)];
                    }
                }
            }
        }
    }
    let basis = system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n).map(<[Scalar]>::to_vec).collect()))
        .collect();
    Ok(Intertwiners { basis })
}

pub fn intertwiner_dimension(a: &OnsagerPair, b: &OnsagerPair) -> Result<usize> {
    intertwiners(a, b).map(|i| i.dimension())
}

/// The eight parameter pairs `±(s,t), ±(t⁻¹,s⁻¹), ±(t,s), ±(s⁻¹,t⁻¹)`.
pub fn parameter_orbit(p: &OnsagerParams) -> Vec<(Scalar, Scalar)> {
    let (s, t) = (p.s().clone(), p.t().clone());
    let (si, ti) = (s.recip(), t.recip());
    let base = [
        (s.clone(), t.clone()),
        (ti.clone(), si.clone()),
        (t, s),
        (si, ti),
    ];
    base.into_iter()
        .flat_map(|(x, y)| [(x.clone(), y.clone()), (-x, -y)])
        .collect()
}

/// Isomorphism by the criteria: equivalent q-string multisets and
/// `(s', t')` in the orbit of `(s, t)`. Both inputs must satisfy
/// [`theorem_criteria`].
pub fn theorem_iso_criteria(
    spec_a: &ModuleSpec,
    pa: &OnsagerParams,
    spec_b: &ModuleSpec,
    pb: &OnsagerParams,
) -> Result<bool> {
    if spec_a.q() != spec_b.q() {
        return Err(Error::DeformationMismatch);
    }
    if !theorem_criteria(spec_a, pa)?.irreducible() || !theorem_criteria(spec_b, pb)?.irreducible()
    {
        return Err(Error::RequiresIrreducible);
    }
    let target = (pb.s().clone(), pb.t().clone());
    Ok(equivalent(&spec_a.qstrings(), &spec_b.qstrings()) && parameter_orbit(pa).contains(&target))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitProfile {
    pub d: usize,
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    pub dims_v: Vec<usize>,
    pub dims_vstar: Vec<usize>,
    pub dims_u: Vec<usize>,
    /// The split decomposition itself.
    pub u: Vec<Subspace>,
    /// Dimensions of the `k₀`-eigenspaces `q^{2i-d}`.
    pub k0_dims: Vec<usize>,
    /// Whether each `Uᵢ` equals the `k₀`-eigenspace for `q^{2i-d}`.
    pub u_is_k0_decomposition: bool,
}

/// The split decomposition for given eigenvalue orderings.
fn split_decomposition(
    z: &Matrix,
    zstar: &Matrix,
    theta: &[Scalar],
    theta_star: &[Scalar],
) -> Result<(Vec<Subspace>, Vec<Subspace>, Vec<Subspace>)> {
    let n = z.rows();
    let eigenspaces = |m: &Matrix, values: &[Scalar]| -> Result<Vec<Subspace>> {
        let spaces: Vec<Subspace> = values
            .iter()
            .map(|v| Subspace::kernel(&m.shift(&-v.clone())))
            .collect();
        let total: usize = spaces.iter().map(Subspace::dim).sum();
        let span = spaces.iter().fold(Subspace::zero(n), |acc, s| acc.sum(s));
        if total != n || span.dim() != n || spaces.iter().any(|s| s.dim() == 0) {
            return Err(Error::NotDiagonalizable);
        }
        Ok(spaces)
    };
    let v = eigenspaces(z, theta)?;
    let vs = eigenspaces(zstar, theta_star)?;
    let d = v.len() - 1;
    let u = (0..=d)
        .map(|i| {
            let lower = vs[..=i].iter().fold(Subspace::zero(n), |acc, s| acc.sum(s));
            let upper = v[i..].iter().fold(Subspace::zero(n), |acc, s| acc.sum(s));
            lower.intersection(&upper)
        })
        .collect();
    Ok((v, vs, u))
}

/// Eigenspaces and split decomposition of a pair built on `g`, with
/// eigenvalues indexed by `k₀`-weight.
pub fn eigen_profile(
    pair: &OnsagerPair,
    spec: &ModuleSpec,
    g: &GeneratorSet,
) -> Result<SplitProfile> {
    let d = spec.diameter();
    let th = theta(&pair.q, &pair.params, d);
    let ths = theta_star(&pair.q, &pair.params, d);
    let (v, vs, u) = split_decomposition(&pair.z, &pair.zstar, &th, &ths)?;

    let weights = weight_indices(g, d).ok_or(Error::NotDiagonalizable)?;
    let k0_spaces: Vec<Subspace> = (0..=d)
        .map(|i| {
            Subspace::coordinate(
                g.dim(),
                weights
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| w == i)
                    .map(|(b, _)| b),
            )
        })
        .collect();

    Ok(SplitProfile {
        d,
        theta: th,
        theta_star: ths,
        dims_v: v.iter().map(Subspace::dim).collect(),
        dims_vstar: vs.iter().map(Subspace::dim).collect(),
        dims_u: u.iter().map(Subspace::dim).collect(),
        k0_dims: k0_spaces.iter().map(Subspace::dim).collect(),
        u_is_k0_decomposition: u == k0_spaces,
        u,
    })
}

/// Coefficients `(dim U₀, …, dim U_d)` of `g(λ) = Σ dim Uᵢ λⁱ`.
pub fn generating_function(profile: &SplitProfile) -> Vec<usize> {
    profile.dims_u.clone()
}

/// Coefficients of `∏ (1 + λ + ⋯ + λ^{ℓᵢ})`.
pub fn product_generating_function(ells: &[usize]) -> Vec<u64> {
    ells.iter()
        .fold(vec![1u64], |acc, &l| poly::mul_int(&acc, &vec![1; l + 1]))
}

pub fn generating_function_matches_product(profile: &SplitProfile, ells: &[usize]) -> bool {
    let g: Vec<u64> = generating_function(profile)
        .iter()
        .map(|&x| x as u64)
        .collect();
    g == product_generating_function(ells)
}

pub fn is_leonard(profile: &SplitProfile) -> bool {
    profile.dims_u.iter().all(|&x| x == 1)
}

/// Whether the listed eigenvalues, with multiplicities `dims_U`, are exactly
/// the roots of the characteristic polynomials of `Z` and `Z*`.
pub fn spectrum_matches_characteristic_polynomials(
    pair: &OnsagerPair,
    profile: &SplitProfile,
) -> bool {
    let check = |m: &Matrix, values: &[Scalar]| {
        let cp = m.characteristic_polynomial();
        let mut expected: Vec<(Scalar, usize)> = Vec::new();
        for (v, &k) in values.iter().zip(&profile.dims_u) {
            match expected.iter_mut().find(|(x, _)| x == v) {
                Some((_, total)) => *total += k,
                None => expected.push((v.clone(), k)),
            }
        }
        let degree = cp.len() - 1;
        let found: usize = expected.iter().map(|(_, k)| k).sum();
        found == degree
            && expected
                .iter()
                .all(|(v, k)| poly::root_multiplicity(&cp, v) == *k)
    };
    check(&pair.z, &profile.theta) && check(&pair.zstar, &profile.theta_star)
}

/// Affine coefficients for `λZ + μI` and `λ*Z* + μ*I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub lambda: Scalar,
    pub mu: Scalar,
    pub lambda_star: Scalar,
    pub mu_star: Scalar,
}

/// Outcome of recomputing the split decomposition after an affine change.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineOutcome {
    Unchanged,
    Reversed,
    Changed,
}

/// Recomputes the split decomposition of `(λZ+μI, λ*Z*+μ*I)` using the
/// eigenvalues `λθᵢ+μ`, `λ*θ*ᵢ+μ*` in the induced order and compares it
/// with `profile.u`, allowing the index order to be reversed.
pub fn affine_standardization(
    pair: &OnsagerPair,
    profile: &SplitProfile,
    map: &AffineMap,
) -> Result<AffineOutcome> {
    if map.lambda.is_zero() {
        return Err(Error::ZeroScalar("lambda"));
    }
    if map.lambda_star.is_zero() {
        return Err(Error::ZeroScalar("lambda_star"));
    }
    let z = pair.z.scale(&map.lambda).shift(&map.mu);
    let zs = pair.zstar.scale(&map.lambda_star).shift(&map.mu_star);
    let th: Vec<Scalar> = profile
        .theta
        .iter()
        .map(|x| x * &map.lambda + &map.mu)
        .collect();
    let ths: Vec<Scalar> = profile
        .theta_star
        .iter()
        .map(|x| x * &map.lambda_star + &map.mu_star)
        .collect();
    let (_, _, u) = split_decomposition(&z, &zs, &th, &ths)?;
    if u == profile.u {
        return Ok(AffineOutcome::Unchanged);
    }
    let reversed: Vec<Subspace> = profile.u.iter().rev().cloned().collect();
    Ok(if u == reversed {
        AffineOutcome::Reversed
    } else {
        AffineOutcome::Changed
    })
}

pub fn affine_standardization_check(
    pair: &OnsagerPair,
    profile: &SplitProfile,
    map: &AffineMap,
) -> Result<bool> {
    affine_standardization(pair, profile, map).map(|o| o != AffineOutcome::Changed)
}

impl AffineMap {
    pub fn identity() -> Self {
        Self {
            lambda: Scalar::one(),
            mu: Scalar::zero(),
            lambda_star: Scalar::one(),
            mu_star: Scalar::zero(),
        }
    }
}

/// A module together with its pair.
#[derive(Clone, Debug)]
pub struct Construction {
    pub spec: ModuleSpec,
    pub params: OnsagerParams,
    pub generators: GeneratorSet,
    pub pair: OnsagerPair,
}

impl Construction {
    pub fn new(spec: ModuleSpec, params: OnsagerParams) -> Result<Self> {
        let generators = build_module(&spec)?;
        let pair = phi_images(&generators, &params);
        Ok(Self {
            spec,
            params,
            generators,
            pair,
        })
    }

    pub fn qstrings(&self) -> Vec<QString> {
        self.spec.qstrings().strings().to_vec()
    }
}

/// Everything computed for one `(module, s, t)` case.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub loop_relations: RelationReport,
    pub td_relations: RelationReport,
    pub weight_grading: bool,
    pub criteria: CriteriaVerdict,
    pub burnside: bool,
    /// `Z` and `Z*` are both diagonalizable.
    pub diagonalizable: bool,
    /// Present when the criteria report irreducibility.
    pub profile: Option<SplitProfile>,
    pub g_product_match: Option<bool>,
    pub leonard: Option<bool>,
    pub spectrum_matches_charpoly: Option<bool>,
}

impl Analysis {
    /// The criteria and the Burnside oracle give the same verdict.
    pub fn agree(&self) -> bool {
        self.criteria.irreducible() == self.burnside
    }

    /// Irreducible with both `Z` and `Z*` diagonalizable, as decided by
    /// linear algebra alone.
    pub fn irreducible_and_diagonalizable(&self) -> bool {
        self.burnside && self.diagonalizable
    }
}

pub fn analyze(c: &Construction) -> Result<Analysis> {
    let d = c.spec.diameter();
    let criteria = theorem_criteria(&c.spec, &c.params)?;
    let burnside = burnside_irreducible(&c.pair);
    let diagonalizable = diagonalizable_with_spectrum(&c.pair.z, &theta(&c.pair.q, &c.params, d))
        && diagonalizable_with_spectrum(&c.pair.zstar, &theta_star(&c.pair.q, &c.params, d));
    let profile = if criteria.irreducible() {
        Some(eigen_profile(&c.pair, &c.spec, &c.generators)?)
    } else {
        None
    };
    let ells = c.spec.ells();
    Ok(Analysis {
        loop_relations: verify_loop_relations(&c.generators),
        td_relations: verify_td_relations(&c.pair),
        weight_grading: weight_grading_holds(&c.pair, &c.generators, d),
        criteria,
        burnside,
        diagonalizable,
        g_product_match: profile
            .as_ref()
            .map(|p| generating_function_matches_product(p, &ells)),
        leonard: profile.as_ref().map(is_leonard),
        spectrum_matches_charpoly: profile
            .as_ref()
            .map(|p| spectrum_matches_characteristic_polynomials(&c.pair, p)),
        profile,
    })
}
