//! q-strings `S(ℓ, a) = { a q^{2i-ℓ+1} : 0 ≤ i ≤ ℓ-1 }` and their
//! combinatorics: adjacency, (strong) general position, equivalence, and
//! the decomposition of a multiset of scalars into q-strings.
//!
//! Every q-string lies in a single coset of `q^{2Z}`. Inside a coset with
//! representative `r`, a scalar `r q^{2e}` is identified with its exponent
//! `e`, and a q-string becomes a run of consecutive exponents.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{DeformationParameter, Scalar};

/// Largest number of strings accepted by [`strongly_in_general_position`],
/// which enumerates all `2^n` sign vectors.
pub const MAX_STRINGS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QString {
    ell: usize,
    base: Scalar,
}

impl QString {
    pub fn new(ell: usize, base: Scalar) -> Result<Self> {
        if ell == 0 {
            return Err(Error::ZeroLength);
        }
        if base.is_zero() {
            return Err(Error::ZeroScalar("a"));
        }
        Ok(Self { ell, base })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn base(&self) -> &Scalar {
        &self.base
    }

    /// The `ell` elements in increasing exponent order.
    pub fn elements(&self, q: &DeformationParameter) -> Vec<Scalar> {
        let ell = self.ell as i64;
        (0..ell)
            .map(|i| &self.base * q.pow(2 * i - ell + 1))
            .collect()
    }

    /// `S(ℓ, a⁻¹)`, whose elements are the inverses of the elements of `self`.
    pub fn inverse(&self) -> Self {
        Self {
            ell: self.ell,
            base: self.base.recip(),
        }
    }

    pub fn contains(&self, q: &DeformationParameter, x: &Scalar) -> bool {
        if x.is_zero() {
            return false;
        }
        let ell = self.ell as i64;
        match q.q_power_index(&(x / &self.base), 1 - ell, ell - 1) {
            Ok(Some(j)) => (j + ell - 1) % 2 == 0,
            _ => false,
        }
    }

    /// The orientation of `{self, self.inverse()}` with `|base| ≥ 1`.
    pub fn canonical_orientation(&self) -> Self {
        if self.base.abs() >= Scalar::one() {
            self.clone()
        } else {
            self.inverse()
        }
    }
}

impl fmt::Display for QString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({}, {})", self.ell, self.base)
    }
}

/// A multiset of q-strings. Order is kept for display; equality ignores it.
#[derive(Clone, Debug, Default)]
pub struct QStringMultiset(Vec<QString>);

impl QStringMultiset {
    pub fn new(strings: Vec<QString>) -> Self {
        Self(strings)
    }

    pub fn strings(&self) -> &[QString] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sorted(&self) -> Vec<QString> {
        let mut v = self.0.clone();
        v.sort();
        v
    }

    /// The multiset of all elements, counted with multiplicity.
    pub fn element_union(&self, q: &DeformationParameter) -> ScalarMultiset {
        ScalarMultiset::from_nonzero(self.0.iter().flat_map(|s| s.elements(q)))
    }

    /// `⋃ (S ∪ S⁻¹)` as a multiset.
    pub fn symmetric_element_union(&self, q: &DeformationParameter) -> ScalarMultiset {
        ScalarMultiset::from_nonzero(
            self.0
                .iter()
                .flat_map(|s| s.elements(q).into_iter().chain(s.inverse().elements(q))),
        )
    }

    /// Applies `a ↦ a⁻¹` to the strings whose bit is set in `signs`.
    pub fn flipped(&self, signs: u32) -> Self {
        Self(
            self.0
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    if signs >> i & 1 == 1 {
                        s.inverse()
                    } else {
                        s.clone()
                    }
                })
                .collect(),
        )
    }
}

impl PartialEq for QStringMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for QStringMultiset {}

impl FromIterator<QString> for QStringMultiset {
    fn from_iter<I: IntoIterator<Item = QString>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// A finite multiset of nonzero scalars.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalarMultiset {
    counts: BTreeMap<Scalar, usize>,
}

impl ScalarMultiset {
    pub fn new(entries: impl IntoIterator<Item = Scalar>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for x in entries {
            if x.is_zero() {
                return Err(Error::ZeroScalar("multiset entry"));
            }
            *counts.entry(x).or_insert(0) += 1;
        }
        Ok(Self { counts })
    }

    fn from_nonzero(entries: impl IntoIterator<Item = Scalar>) -> Self {
        let mut counts = BTreeMap::new();
        for x in entries {
            *counts.entry(x).or_insert(0) += 1;
        }
        Self { counts }
    }

    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn multiplicity(&self, x: &Scalar) -> usize {
        self.counts.get(x).copied().unwrap_or(0)
    }

    /// Distinct entries with their multiplicities, in increasing order.
    pub fn counts(&self) -> impl Iterator<Item = (&Scalar, usize)> {
        self.counts.iter().map(|(x, &n)| (x, n))
    }

    /// All entries with repetition, in increasing order.
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.counts
            .iter()
            .flat_map(|(x, &n)| core::iter::repeat_n(x.clone(), n))
            .collect()
    }
}

/// Whether `S(ℓ,a) ∪ S(ℓ',a')` is a strictly longer q-string, decided by the
/// criterion `a⁻¹a' = q^{±i}` for some `i ∈ {|ℓ-ℓ'|+2, |ℓ-ℓ'|+4, …, ℓ+ℓ'}`.
pub fn adjacent(q: &DeformationParameter, s: &QString, t: &QString) -> bool {
    let lo = s.ell.abs_diff(t.ell) as i64 + 2;
    let hi = (s.ell + t.ell) as i64;
    let ratio = &t.base / &s.base;
    match q.q_power_index(&ratio, -hi, hi) {
        Ok(Some(i)) => {
            let i = i.abs();
            i >= lo && (i - lo) % 2 == 0
        }
        _ => false,
    }
}

/// No two entries at distinct positions are adjacent.
pub fn in_general_position(q: &DeformationParameter, list: &QStringMultiset) -> bool {
    let s = list.strings();
    (0..s.len()).all(|i| (i + 1..s.len()).all(|j| !adjacent(q, &s[i], &s[j])))
}

/// General position under every replacement `aᵢ ↦ aᵢ^{±1}`, checked by
/// enumerating all `2^n` sign vectors.
pub fn strongly_in_general_position(
    q: &DeformationParameter,
    list: &QStringMultiset,
) -> Result<bool> {
    let n = list.len();
    if n > MAX_STRINGS {
        return Err(Error::TooManyStrings {
            count: n,
            max: MAX_STRINGS,
        });
    }
    Ok((0..1u32 << n).all(|signs| in_general_position(q, &list.flipped(signs))))
}

/// Whether `a` and `b` are non-adjacent under all four choices of
/// orientation. Strong general position is exactly this condition on every
/// pair.
fn strongly_compatible(q: &DeformationParameter, a: &QString, b: &QString) -> bool {
    let (ai, bi) = (a.inverse(), b.inverse());
    !adjacent(q, a, b) && !adjacent(q, &ai, b) && !adjacent(q, a, &bi) && !adjacent(q, &ai, &bi)
}

/// Whether `b` is obtained from `a` by permuting and inverting some bases.
pub fn equivalent(a: &QStringMultiset, b: &QStringMultiset) -> bool {
    let canon = |m: &QStringMultiset| {
        let mut v: Vec<QString> = m
            .strings()
            .iter()
            .map(|s| s.clone().min(s.inverse()))
            .collect();
        v.sort();
        v
    };
    a.len() == b.len() && canon(a) == canon(b)
}

/// Exponent profile of the part of a multiset lying in one `q^{2Z}` coset.
type Profile = BTreeMap<i64, usize>;

fn group_by_coset(
    q: &DeformationParameter,
    omega: &ScalarMultiset,
) -> Result<BTreeMap<Scalar, Profile>> {
    let mut cosets: BTreeMap<Scalar, Profile> = BTreeMap::new();
    for (x, n) in omega.counts() {
        let (rep, e) = q.coset_normal_form(x)?;
        *cosets.entry(rep).or_default().entry(e).or_insert(0) += n;
    }
    Ok(cosets)
}

/// The q-string `{ rep q^{2e} : lo ≤ e ≤ hi }`.
fn run_to_string(q: &DeformationParameter, rep: &Scalar, lo: i64, hi: i64) -> QString {
    QString {
        ell: (hi - lo + 1) as usize,
        base: rep * q.pow(lo + hi),
    }
}

/// Peels maximal runs off a profile layer by layer. Runs in one layer are
/// separated by gaps and every later run sits inside an earlier one, so the
/// result is in general position.
fn peel_layers(q: &DeformationParameter, rep: &Scalar, mut profile: Profile) -> Vec<QString> {
    let mut out = Vec::new();
    while !profile.is_empty() {
        let exps: Vec<i64> = profile.keys().copied().collect();
        let mut start = 0;
        while start < exps.len() {
            let mut end = start;
            while end + 1 < exps.len() && exps[end + 1] == exps[end] + 1 {
                end += 1;
            }
            out.push(run_to_string(q, rep, exps[start], exps[end]));
            start = end + 1;
        }
        for e in exps {
            let c = profile.get_mut(&e).expect("key present");
            *c -= 1;
            if *c == 0 {
                profile.remove(&e);
            }
        }
    }
    out
}

/// Writes `Ω` as a union of q-strings in general position. The result is
/// the unique such multiset; strings are listed coset by coset, longest
/// layer first.
pub fn decompose(q: &DeformationParameter, omega: &ScalarMultiset) -> Result<QStringMultiset> {
    if omega.is_empty() {
        return Err(Error::EmptyInput("omega"));
    }
    let mut out = Vec::new();
    for (rep, profile) in group_by_coset(q, omega)? {
        out.extend(peel_layers(q, &rep, profile));
    }
    Ok(QStringMultiset(out))
}

/// Checks that every `c` occurs as often as `c⁻¹`, with `±1` occurring an
/// even number of times.
pub fn check_inverse_closed(omega: &ScalarMultiset) -> Result<()> {
    for (x, n) in omega.counts() {
        let inv = x.recip();
        if inv == *x {
            if n % 2 != 0 {
                return Err(Error::OddSelfInverse {
                    scalar: x.clone(),
                    multiplicity: n,
                });
            }
            continue;
        }
        let m = omega.multiplicity(&inv);
        if m != n {
            return Err(Error::NotInverseClosed {
                scalar: x.clone(),
                multiplicity: n,
                inverse_multiplicity: m,
            });
        }
    }
    Ok(())
}

/// Writes an inverse-closed `Ω` as `⋃ (Sᵢ ∪ Sᵢ⁻¹)` with `{Sᵢ}` strongly in
/// general position. The answer is unique up to equivalence.
///
/// A coset `C ≠ C⁻¹` is handled by decomposing `Ω ∩ C` and dropping the
/// mirror image. The cosets of `±1` and `±q` are their own inverses; there
/// the strings are found by backtracking over covers of the symmetric
/// exponent profile. Returned strings have `|base| ≥ 1` inside
/// self-inverse cosets.
pub fn decompose_inverse_closed(
    q: &DeformationParameter,
    omega: &ScalarMultiset,
) -> Result<QStringMultiset> {
    if omega.is_empty() {
        return Err(Error::EmptyInput("omega"));
    }
    check_inverse_closed(omega)?;
    let cosets = group_by_coset(q, omega)?;
    let mut out = Vec::new();
    let mut skip: Vec<Scalar> = Vec::new();
    for (rep, profile) in &cosets {
        if skip.contains(rep) {
            continue;
        }
        let (inv_rep, shift) = q.coset_normal_form(&rep.recip())?;
        if inv_rep == *rep {
            out.extend(cover_self_inverse(q, rep, shift, profile.clone()));
            continue;
        }
        skip.push(inv_rep.clone());
        let mirror = cosets
            .get(&inv_rep)
            .expect("inverse-closed multiset has a mirrored coset");
        let keep_this = match coset_weight(q, rep, profile).cmp(&coset_weight(q, &inv_rep, mirror))
        {
            core::cmp::Ordering::Equal => *rep > inv_rep,
            ord => ord == core::cmp::Ordering::Greater,
        };
        if keep_this {
            out.extend(peel_layers(q, rep, profile.clone()));
        } else {
            out.extend(peel_layers(q, &inv_rep, mirror.clone()));
        }
    }
    Ok(QStringMultiset(out))
}

/// Product of the absolute values of the coset's members.
fn coset_weight(q: &DeformationParameter, rep: &Scalar, profile: &Profile) -> Scalar {
    profile
        .iter()
        .map(|(&e, &n)| num_traits::pow((rep * q.pow(2 * e)).abs(), n))
        .product()
}

/// In a self-inverse coset, `(rep q^{2e})⁻¹ = rep q^{2(shift - e)}`.
fn cover_self_inverse(
    q: &DeformationParameter,
    rep: &Scalar,
    shift: i64,
    profile: Profile,
) -> Vec<QString> {
    let mut chosen = Vec::new();
    let found = search_cover(q, rep, shift, profile, &mut chosen);
    assert!(found, "inverse-closed profile always admits a cover");
    chosen
        .into_iter()
        .map(|s: QString| s.canonical_orientation())
        .collect()
}

fn search_cover(
    q: &DeformationParameter,
    rep: &Scalar,
    shift: i64,
    profile: Profile,
    chosen: &mut Vec<QString>,
) -> bool {
    let Some((&lowest, _)) = profile.iter().next() else {
        return true;
    };
    let mut run_end = lowest;
    while profile.contains_key(&(run_end + 1)) {
        run_end += 1;
    }
    // The string covering the lowest remaining exponent starts there.
    for hi in (lowest..=run_end).rev() {
        let mirror = (shift - hi, shift - lowest);
        let mut rest = profile.clone();
        if !remove_run(&mut rest, lowest, hi) || !remove_run(&mut rest, mirror.0, mirror.1) {
            continue;
        }
        let candidate = run_to_string(q, rep, lowest, hi);
        if !chosen.iter().all(|c| strongly_compatible(q, c, &candidate)) {
            continue;
        }
        chosen.push(candidate);
        if search_cover(q, rep, shift, rest, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn remove_run(profile: &mut Profile, lo: i64, hi: i64) -> bool {
    for e in lo..=hi {
        match profile.get_mut(&e) {
            Some(c) if *c > 0 => {
                *c -= 1;
                if *c == 0 {
                    profile.remove(&e);
                }
            }
            _ => return false,
        }
    }
    true
}
