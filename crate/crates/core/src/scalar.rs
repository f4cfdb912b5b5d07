//! Exact rational scalars and the q-arithmetic built on them.
//!
//! Scalars are [`BigRational`]s, always held in lowest terms with a positive
//! denominator, so value equality and structural equality coincide. Their
//! `Display` form is `p/r`, or just `p` when `r = 1`.
//!
//! Only rational parameters are representable. In particular a `q` on the
//! complex unit circle cannot be expressed; over the rationals every
//! `q ∉ {0, 1, -1}` is automatically not a root of unity.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, r: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(r))
}

/// Parses `p` or `p/r` with `p` a signed decimal integer and `r` a positive
/// decimal integer. The result is reduced; non-reduced input is accepted.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    fn digits(s: &str) -> bool {
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    }
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return None;
    }
    let numer: BigInt = num.parse().ok()?;
    let denom: BigInt = match den {
        Some(d) if digits(d) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Scalar::new(numer, denom))
}

/// `base^exp` for any integer exponent. `base` must be nonzero when `exp < 0`.
pub fn pow(base: &Scalar, exp: i64) -> Scalar {
    let magnitude = exp.unsigned_abs() as usize;
    let p = num_traits::pow(base.clone(), magnitude);
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// The deformation parameter `q`, restricted to `|q| > 1`.
///
/// Over the rationals the roots of unity are exactly `±1`, so the restriction
/// excludes them along with `0`. Requiring `|q| > 1` rather than `|q| ≠ 1`
/// makes `i ↦ q^i` strictly increasing in absolute value, which gives unique
/// q-power indices and unique coset representatives. Callers with `|q| < 1`
/// can pass `q⁻¹` instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DeformationParameter(Scalar);

impl DeformationParameter {
    pub fn new(q: Scalar) -> Result<Self> {
        if q.abs() <= Scalar::one() {
            return Err(Error::InvalidDeformation(q));
        }
        Ok(Self(q))
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    pub fn pow(&self, exp: i64) -> Scalar {
        pow(&self.0, exp)
    }

    /// The q-integer `[j] = (q^j - q^{-j}) / (q - q^{-1})`.
    pub fn q_int(&self, j: i64) -> Scalar {
        (self.pow(j) - self.pow(-j)) / (&self.0 - self.0.recip())
    }

    /// Returns the unique `i` in `lo..=hi` with `x = q^i`, if any.
    pub fn q_power_index(&self, x: &Scalar, lo: i64, hi: i64) -> Result<Option<i64>> {
        if x.is_zero() {
            return Err(Error::ZeroScalar("x"));
        }
        let Some(k) = self.abs_log(x) else {
            return Ok(None);
        };
        if k < lo || k > hi || self.pow(k) != *x {
            return Ok(None);
        }
        Ok(Some(k))
    }

    /// Writes `x = representative · q^{2·exponent}` with
    /// `1 ≤ |representative| < q²`.
    ///
    /// Two nonzero scalars share a representative exactly when their ratio is
    /// an even power of `q`. The representative keeps the sign of `x`.
    pub fn coset_normal_form(&self, x: &Scalar) -> Result<(Scalar, i64)> {
        if x.is_zero() {
            return Err(Error::ZeroScalar("x"));
        }
        let q2 = self.pow(2);
        let q2_abs = q2.abs();
        let mut rep = x.clone();
        let mut exp = 0i64;
        while rep.abs() >= q2_abs {
            rep /= &q2;
            exp += 1;
        }
        while rep.abs() < Scalar::one() {
            rep *= &q2;
            exp -= 1;
        }
        Ok((rep, exp))
    }

    /// The integer `k` with `|q|^k = |x|`, if there is one.
    fn abs_log(&self, x: &Scalar) -> Option<i64> {
        let target = x.abs();
        let base = self.0.abs();
        let one = Scalar::one();
        let (step, upward) = match target.cmp(&one) {
            Ordering::Equal => return Some(0),
            Ordering::Greater => (base.clone(), true),
            Ordering::Less => (base.recip(), false),
        };
        let mut acc = one;
        let mut k = 0i64;
        loop {
            acc *= &step;
            k += if upward { 1 } else { -1 };
            match acc.cmp(&target) {
                Ordering::Equal => return Some(k),
                Ordering::Greater if upward => return None,
                Ordering::Less if !upward => return None,
                _ => {}
            }
        }
    }
}
