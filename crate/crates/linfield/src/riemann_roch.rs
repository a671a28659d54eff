//! Riemann–Roch dimensions for divisors supported on the ramified places,
//! and the dimension-jump oracles built on them.
//!
//! The space of a divisor `D = sum a_i Q_{l_i}` splits as a direct sum over
//! the powers `y^k`, `0 <= k < p^n`; each summand is a base-field space whose
//! dimension is elementary.  Summing the pieces gives
//!
//! ```text
//! l(D) = sum_{k=0}^{p^n-1} max(0, sum_{i in I} floor((a_i - k n_i)/p^n) d_i + 1)
//! ```
//!
//! with `a_i = 0` for places not listed.  Everything else in this module
//! (gap detection, the scanned gap set, membership of tuples in the
//! multi-place semigroup) is driven purely by jumps of this quantity, which
//! makes it an oracle independent of the closed forms in
//! [`crate::single_place`] and [`crate::multi_place`].

use std::collections::BTreeMap;

use crate::arith::{self, floor_div, mod_inverse};
use crate::model::FieldSpec;
use crate::{Error, Result};

/// A coefficient vector for a divisor on the ramified places: distinct
/// indices from `I` paired with integer coefficients.  Places not listed
/// carry coefficient zero.
pub type CoeffVector = [(usize, i64)];

fn check_coeffs(spec: &FieldSpec, coeffs: &CoeffVector) -> Result<()> {
    let mut seen = Vec::with_capacity(coeffs.len());
    for &(l, _) in coeffs {
        if !spec.has_pole_index(l) {
            return Err(Error::IndexOutOfRange { what: "denominator index", index: l as i64 });
        }
        if seen.contains(&l) {
            return Err(Error::DuplicatePlace(l));
        }
        seen.push(l);
    }
    Ok(())
}

/// Dimension of the Riemann–Roch space of `sum a_l Q_l`.
///
/// Coefficients may be any integers; floors on negative operands follow
/// mathematical floor semantics.
pub fn rr_dimension(spec: &FieldSpec, coeffs: &CoeffVector) -> Result<i64> {
    check_coeffs(spec, coeffs)?;
    let q = spec.q_pow() as i128;
    let lookup: BTreeMap<usize, i64> = coeffs.iter().copied().collect();
    let mut total: i128 = 0;
    for k in 0..spec.q_pow() {
        let mut term: i128 = 1;
        for &i in spec.pole_indices() {
            let a = *lookup.get(&i).unwrap_or(&0) as i128;
            let n_i = spec.pole_exponent(i)? as i128;
            let d_i = spec.pole_degree(i)? as i128;
            term += floor_div(a - k as i128 * n_i, q) * d_i;
        }
        if term > 0 {
            total = total.checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    arith::narrow(total)
}

/// One summand of the direct-sum decomposition of a Riemann–Roch space.
///
/// The summand for `y^k` consists of functions `u(x) / prod_i p_i(x)^{c_i}`
/// times `y^k`, where `c_i` is the restricted coefficient recorded in
/// `denom_exp`.  Negative `c_i` force numerator divisibility, recorded in
/// `mandatory_factor`; the free numerator polynomial then ranges over
/// degrees up to `num_degree_bound`, so the summand contributes
/// `num_degree_bound + 1` dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisDescriptor {
    /// Power of `y`, in `0..p^n`.
    pub k: i64,
    /// Restricted coefficient `c_{i,k} = floor((a_i - k n_i)/p^n)` per `i in I`.
    pub denom_exp: BTreeMap<usize, i64>,
    /// `sum_i c_{i,k} d_i`; the summand contributes `max(0, bound + 1)`.
    pub num_degree_bound: i64,
    /// Forced vanishing order `max(0, -c_{i,k})` per `i in I`.
    pub mandatory_factor: BTreeMap<usize, i64>,
}

impl BasisDescriptor {
    /// Dimensions contributed by this summand.
    pub fn contribution(&self) -> i64 {
        (self.num_degree_bound + 1).max(0)
    }
}

/// The summands of the direct-sum decomposition with positive contribution.
/// Their contributions always sum to [`rr_dimension`].
pub fn rr_basis(spec: &FieldSpec, coeffs: &CoeffVector) -> Result<Vec<BasisDescriptor>> {
    check_coeffs(spec, coeffs)?;
    let q = spec.q_pow() as i128;
    let lookup: BTreeMap<usize, i64> = coeffs.iter().copied().collect();
    let mut out = Vec::new();
    for k in 0..spec.q_pow() {
        let mut denom_exp = BTreeMap::new();
        let mut bound: i128 = 0;
        for &i in spec.pole_indices() {
            let a = *lookup.get(&i).unwrap_or(&0) as i128;
            let n_i = spec.pole_exponent(i)? as i128;
            let d_i = spec.pole_degree(i)? as i128;
            let c = floor_div(a - k as i128 * n_i, q);
            denom_exp.insert(i, arith::narrow(c)?);
            bound += c * d_i;
        }
        if bound + 1 > 0 {
            let mandatory_factor = denom_exp.iter().map(|(&i, &c)| (i, (-c).max(0))).collect();
            out.push(BasisDescriptor {
                k,
                denom_exp,
                num_degree_bound: arith::narrow(bound)?,
                mandatory_factor,
            });
        }
    }
    Ok(out)
}

/// Whether `a >= 1` is a gap at the degree-one place `Q_l`: the dimension
/// does not jump at `a`, detected through the unique power of `y` whose
/// summand could absorb the new pole order.
pub fn is_gap(spec: &FieldSpec, l: usize, a: i64) -> Result<bool> {
    spec.require_degree_one(l)?;
    if a <= 0 {
        return Err(Error::NonPositive { what: "pole order", value: a });
    }
    let q = spec.q_pow() as i128;
    let n_l = spec.pole_exponent(l)? as i128;
    let inv = mod_inverse(n_l, q)
        .ok_or_else(|| Error::GcdViolation(format!("n_{l} is not invertible modulo p^n")))?;
    let k = (a as i128 * inv).rem_euclid(q);
    let mut lhs = floor_div(a as i128 - k * n_l, q);
    for &i in spec.pole_indices() {
        if i != l {
            let n_i = spec.pole_exponent(i)? as i128;
            let d_i = spec.pole_degree(i)? as i128;
            lhs += floor_div(-k * n_i, q) * d_i;
        }
    }
    Ok(lhs <= -1)
}

/// The gap set at `Q_l` computed purely from dimension jumps: scan
/// `a = 1..=2g-1` and keep the orders where `l(a Q_l) = l((a-1) Q_l)`.
///
/// Independent of every closed form; the scan range suffices because all
/// gaps are at most `2g - 1`.  The count is verified against the genus.
pub fn gap_set_oracle(spec: &FieldSpec, l: usize) -> Result<Vec<i64>> {
    spec.require_degree_one(l)?;
    let g = spec.genus();
    if g == 0 {
        return Ok(Vec::new());
    }
    let mut gaps = Vec::new();
    let mut prev = rr_dimension(spec, &[(l, 0)])?;
    for a in 1..=(2 * g - 1) {
        let cur = rr_dimension(spec, &[(l, a)])?;
        if cur == prev {
            gaps.push(a);
        }
        prev = cur;
    }
    if gaps.len() as i64 != g {
        return Err(Error::Internal(format!(
            "gap scan found {} gaps, expected genus {}",
            gaps.len(),
            g
        )));
    }
    Ok(gaps)
}

fn check_places(spec: &FieldSpec, places: &[usize]) -> Result<()> {
    let mut seen = Vec::with_capacity(places.len());
    for &l in places {
        spec.require_degree_one(l)?;
        if seen.contains(&l) {
            return Err(Error::DuplicatePlace(l));
        }
        seen.push(l);
    }
    Ok(())
}

/// Whether a tuple of nonnegative pole orders lies in the Weierstrass
/// semigroup at the chosen degree-one places: the dimension must drop by
/// exactly one when any single place is removed.
pub fn membership_multi(spec: &FieldSpec, places: &[usize], tuple: &[i64]) -> Result<bool> {
    check_places(spec, places)?;
    if places.len() != tuple.len() {
        return Err(Error::LengthMismatch { expected: places.len(), got: tuple.len() });
    }
    for &a in tuple {
        if a < 0 {
            return Err(Error::NonPositive { what: "pole order", value: a });
        }
    }
    let coeffs: Vec<(usize, i64)> = places.iter().copied().zip(tuple.iter().copied()).collect();
    let base = rr_dimension(spec, &coeffs)?;
    for j in 0..places.len() {
        let mut lowered = coeffs.clone();
        lowered[j].1 -= 1;
        if rr_dimension(spec, &lowered)? + 1 != base {
            return Ok(false);
        }
    }
    Ok(true)
}
