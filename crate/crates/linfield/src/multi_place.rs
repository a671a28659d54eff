//! The minimal generating set of the Weierstrass semigroup at several
//! totally ramified degree-one places, with witness functions, the subset
//! union construction and least-upper-bound closure membership.
//!
//! For `t >= 2` chosen places and any `lambda` coprime to `p`, the minimal
//! generating set consists of the tuples
//!
//! ```text
//! (j_1 p^n - i lambda n_{l_1}, ..., j_t p^n - i lambda n_{l_t})
//! ```
//!
//! over `1 <= i <= p^n - 1`, with each `j_k` at least
//! `ceil(i lambda n_{l_k} / p^n)` and the `j_k` summing to a fixed total
//! determined by `i`.  Every tuple comes with a factored witness function
//! whose pole divisor is exactly the tuple, which [`gamma_witness`] returns
//! as a [`WitnessExpr`].
//!
//! [`gamma_oracle`] recomputes the same set from dimension jumps alone,
//! enumerating the product of the scanned gap sets and testing minimality
//! through pairwise dimension equalities; it shares no code with the closed
//! form.  [`closure_membership`] makes the least-upper-bound description of
//! the full semigroup executable: a tuple lies in the semigroup exactly when
//! each of its coordinates is attained by a dominated element of the union
//! [`tilde_gamma`] of embedded generating sets.

use std::collections::BTreeSet;

use crate::arith::{self, ceil_div, floor_div};
use crate::model::{FieldSpec, WitnessExpr};
use crate::riemann_roch::{gap_set_oracle, rr_dimension};
use crate::single_place::{self, gap_set, j_sum_total};
use crate::{Error, Result};

/// Default enumeration budget for [`gamma_oracle`]: the product of the gap
/// set sizes may not exceed this.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

/// Cap on the number of tuples [`gamma`] will enumerate.
const MAX_GAMMA_TUPLES: u128 = 100_000_000;

/// One tuple of the minimal generating set with its parameterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTuple {
    /// The pole orders at the chosen places; all positive.
    pub values: Vec<i64>,
    /// Shared residue parameter `i`, `1 <= i <= p^n - 1`.
    pub i: i64,
    /// Quotient parameters, one per chosen place.
    pub j_vec: Vec<i64>,
    /// The `lambda` this parameterization refers to.
    pub lambda: i64,
}

/// The minimal generating set at an ordered list of chosen places.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub places: Vec<usize>,
    /// Tuples sorted lexicographically by value vector.
    pub tuples: Vec<GammaTuple>,
}

impl GammaSet {
    /// The value vectors in lexicographic order.
    pub fn value_rows(&self) -> Vec<Vec<i64>> {
        self.tuples.iter().map(|t| t.values.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

fn check_gamma_places(spec: &FieldSpec, places: &[usize], lambda: i64) -> Result<()> {
    if places.len() < 2 {
        return Err(Error::TooFewPlaces(places.len()));
    }
    if places.len() > spec.pole_indices().len() {
        return Err(Error::TooManyPlaces {
            requested: places.len(),
            available: spec.pole_indices().len(),
        });
    }
    let mut seen = Vec::with_capacity(places.len());
    for &l in places {
        spec.require_degree_one(l)?;
        if seen.contains(&l) {
            return Err(Error::DuplicatePlace(l));
        }
        seen.push(l);
    }
    single_place::check_lambda(spec, lambda)?;
    Ok(())
}

/// Enumerates all vectors `extra` of length `t` with nonnegative entries
/// summing to `slack`, feeding each to `emit`.
fn for_each_composition(
    slack: i64,
    t: usize,
    buf: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if t == 1 {
        buf.push(slack);
        emit(buf)?;
        buf.pop();
        return Ok(());
    }
    for first in 0..=slack {
        buf.push(first);
        for_each_composition(slack - first, t - 1, buf, emit)?;
        buf.pop();
    }
    Ok(())
}

fn composition_count(slack: i64, t: usize) -> u128 {
    // C(slack + t - 1, t - 1), saturating.
    let mut acc: u128 = 1;
    for step in 1..t {
        acc = acc.saturating_mul((slack as u128) + step as u128) / step as u128;
        if acc > MAX_GAMMA_TUPLES {
            return u128::MAX;
        }
    }
    acc
}

/// The minimal generating set at `2 <= t <= |I|` distinct degree-one places,
/// in the description indexed by `lambda`.
///
/// The tuple set is independent of `lambda`; only the recorded
/// parameterization changes.  In abstract mode only `t <= |I|` is enforced;
/// a constant field with fewer than `t` elements cannot support `t` such
/// places, which concrete validation checks separately.
pub fn gamma(spec: &FieldSpec, places: &[usize], lambda: i64) -> Result<GammaSet> {
    check_gamma_places(spec, places, lambda)?;
    let q = spec.q_pow() as i128;
    let t = places.len();
    let mut tuples = Vec::new();
    let mut enumerated: u128 = 0;
    for i in 1..spec.q_pow() {
        let w = i as i128 * lambda as i128;
        let mut lows = Vec::with_capacity(t);
        for &l in places {
            lows.push(ceil_div(w * spec.pole_exponent(l)? as i128, q));
        }
        let total = j_sum_total(spec, w, places)?;
        let slack = total - lows.iter().sum::<i128>();
        if slack < 0 {
            continue;
        }
        let slack = arith::narrow(slack)?;
        enumerated = enumerated.saturating_add(composition_count(slack, t));
        if enumerated > MAX_GAMMA_TUPLES {
            return Err(Error::BudgetExceeded(format!(
                "minimal generating set would exceed {MAX_GAMMA_TUPLES} tuples"
            )));
        }
        let mut buf = Vec::with_capacity(t);
        for_each_composition(slack, t, &mut buf, &mut |extras| {
            let mut values = Vec::with_capacity(t);
            let mut j_vec = Vec::with_capacity(t);
            for (k, &extra) in extras.iter().enumerate() {
                let j = lows[k] + extra as i128;
                let n_l = spec.pole_exponent(places[k])? as i128;
                let v = arith::narrow(j * q - w * n_l)?;
                values.push(v);
                j_vec.push(arith::narrow(j)?);
            }
            // Coordinates are automatically positive: i*lambda*n is never
            // divisible by p^n within the index range.
            if values.iter().all(|&v| v >= 1) {
                tuples.push(GammaTuple { values, i, j_vec, lambda });
            }
            Ok(())
        })?;
    }
    tuples.sort_by(|a, b| a.values.cmp(&b.values));
    Ok(GammaSet { places: places.to_vec(), tuples })
}

/// Recomputes the minimal generating set from dimension jumps alone.
///
/// Enumerates the product of the scanned gap sets, keeps the tuples lying in
/// the semigroup, and tests minimality by requiring the dimension to stay at
/// `l(A) - 1` after removing any one or two of the chosen places.
pub fn gamma_oracle(spec: &FieldSpec, places: &[usize]) -> Result<Vec<Vec<i64>>> {
    gamma_oracle_with_budget(spec, places, DEFAULT_ORACLE_BUDGET)
}

/// [`gamma_oracle`] with an explicit enumeration budget.
pub fn gamma_oracle_with_budget(
    spec: &FieldSpec,
    places: &[usize],
    budget: u128,
) -> Result<Vec<Vec<i64>>> {
    check_gamma_places(spec, places, 1)?;
    let gap_lists: Vec<Vec<i64>> =
        places.iter().map(|&l| gap_set_oracle(spec, l)).collect::<Result<_>>()?;
    let mut size: u128 = 1;
    for list in &gap_lists {
        size = size.saturating_mul(list.len() as u128);
    }
    if size > budget {
        return Err(Error::BudgetExceeded(format!(
            "candidate box has {size} tuples, budget is {budget}"
        )));
    }

    let t = places.len();
    let mut out = Vec::new();
    let mut cursor = vec![0usize; t];
    'outer: loop {
        let tuple: Vec<i64> = (0..t).map(|k| gap_lists[k][cursor[k]]).collect();
        if admits_minimal_tuple(spec, places, &tuple)? {
            out.push(tuple);
        }
        // Advance the mixed-radix cursor.
        for k in (0..t).rev() {
            cursor[k] += 1;
            if cursor[k] < gap_lists[k].len() {
                continue 'outer;
            }
            cursor[k] = 0;
            if k == 0 {
                break 'outer;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Dimension-level test that `tuple` is a minimal generating element: it
/// lies in the semigroup and removing any one or two chosen places keeps
/// the dimension at `l(A) - 1`.
fn admits_minimal_tuple(spec: &FieldSpec, places: &[usize], tuple: &[i64]) -> Result<bool> {
    let coeffs: Vec<(usize, i64)> = places.iter().copied().zip(tuple.iter().copied()).collect();
    let base = rr_dimension(spec, &coeffs)?;
    for j in 0..places.len() {
        let mut lowered = coeffs.clone();
        lowered[j].1 -= 1;
        if rr_dimension(spec, &lowered)? != base - 1 {
            return Ok(false);
        }
    }
    for a in 0..places.len() {
        for b in (a + 1)..places.len() {
            let mut lowered = coeffs.clone();
            lowered[a].1 -= 1;
            lowered[b].1 -= 1;
            if rr_dimension(spec, &lowered)? != base - 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The factored witness function certifying a tuple of the minimal
/// generating set: its principal divisor has no conorm component, no pole
/// outside the chosen places, and pole order exactly `values[k]` at the
/// `k`-th chosen place.
pub fn gamma_witness(
    spec: &FieldSpec,
    places: &[usize],
    tuple: &GammaTuple,
) -> Result<WitnessExpr> {
    check_gamma_places(spec, places, tuple.lambda)?;
    let q = spec.q_pow() as i128;
    let t = places.len();
    if tuple.values.len() != t || tuple.j_vec.len() != t {
        return Err(Error::NotInGamma("tuple length differs from place count".into()));
    }
    if tuple.i < 1 || tuple.i >= spec.q_pow() {
        return Err(Error::NotInGamma(format!("parameter i = {} out of range", tuple.i)));
    }
    let w = tuple.i as i128 * tuple.lambda as i128;
    let mut j_sum: i128 = 0;
    for (k, &l) in places.iter().enumerate() {
        let n_l = spec.pole_exponent(l)? as i128;
        let j = tuple.j_vec[k] as i128;
        if j < ceil_div(w * n_l, q) {
            return Err(Error::NotInGamma(format!("j_{k} below its lower bound")));
        }
        if j * q - w * n_l != tuple.values[k] as i128 {
            return Err(Error::NotInGamma(format!(
                "coordinate {k} does not match its parameterization"
            )));
        }
        j_sum += j;
    }
    if j_sum != j_sum_total(spec, w, places)? {
        return Err(Error::NotInGamma("quotient parameters have the wrong sum".into()));
    }

    let mut witness = WitnessExpr {
        y_exp: arith::narrow(-w)?,
        ratio_exp: arith::narrow(ceil_div(w, q))?,
        ..Default::default()
    };
    for &j in spec.zero_indices() {
        let e = spec.zero_exponent(j)? as i128 * ceil_div(w, q);
        if e != 0 {
            witness.numer_exp.insert(j, arith::narrow(e)?);
        }
    }
    for (k, &l) in places.iter().enumerate() {
        if tuple.j_vec[k] != 0 {
            witness.denom_exp.insert(l, -tuple.j_vec[k]);
        }
    }
    for &l in spec.pole_indices() {
        if !places.contains(&l) {
            let e = -floor_div(w * spec.pole_exponent(l)? as i128, q);
            if e != 0 {
                witness.denom_exp.insert(l, arith::narrow(e)?);
            }
        }
    }
    Ok(witness)
}

/// Coordinate-wise maximum of a nonempty list of equal-length tuples.
pub fn lub(tuples: &[Vec<i64>]) -> Result<Vec<i64>> {
    let first = tuples.first().ok_or(Error::EmptyInput)?;
    let mut out = first.clone();
    for t in &tuples[1..] {
        if t.len() != out.len() {
            return Err(Error::LengthMismatch { expected: out.len(), got: t.len() });
        }
        for (o, &v) in out.iter_mut().zip(t) {
            *o = (*o).max(v);
        }
    }
    Ok(out)
}

fn check_tilde_places(spec: &FieldSpec, places: &[usize]) -> Result<()> {
    if places.is_empty() {
        return Err(Error::TooFewPlaces(0));
    }
    if places.len() > spec.pole_indices().len() {
        return Err(Error::TooManyPlaces {
            requested: places.len(),
            available: spec.pole_indices().len(),
        });
    }
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

/// Default truncation cap for the singleton semigroups inside
/// [`tilde_gamma`]: Frobenius number plus `p^n` (just `p^n` for genus zero,
/// where the semigroup has no gaps at all).
fn default_cap(spec: &FieldSpec, l: usize) -> Result<i64> {
    if spec.genus() == 0 {
        Ok(spec.q_pow())
    } else {
        Ok(single_place::frobenius(spec, l)? + spec.q_pow())
    }
}

/// The union of the embedded minimal generating sets over all nonempty
/// subsets of the chosen places.
///
/// Singleton subsets contribute the full single-place semigroup, which is
/// infinite; it is truncated at `cap` (default: Frobenius number plus
/// `p^n`).  The truncation is sound for closure queries whose coordinates
/// stay at or below the cap, because a dominated element can never exceed
/// the query in any coordinate.
pub fn tilde_gamma(
    spec: &FieldSpec,
    places: &[usize],
    lambda: i64,
    cap: Option<i64>,
) -> Result<Vec<Vec<i64>>> {
    check_tilde_places(spec, places)?;
    let s = places.len();
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();

    for (k, &l) in places.iter().enumerate() {
        let cap_l = match cap {
            Some(c) => c,
            None => default_cap(spec, l)?,
        };
        let gaps = gap_set(spec, l, lambda)?;
        for h in 0..=cap_l {
            if !gaps.contains(h) {
                let mut tuple = vec![0i64; s];
                tuple[k] = h;
                out.insert(tuple);
            }
        }
    }

    // Nonempty subsets of size >= 2, as bitmasks over positions.
    for mask in 1u32..(1u32 << s) {
        if mask.count_ones() < 2 {
            continue;
        }
        let positions: Vec<usize> = (0..s).filter(|&k| mask >> k & 1 == 1).collect();
        let subset: Vec<usize> = positions.iter().map(|&k| places[k]).collect();
        for row in gamma(spec, &subset, lambda)?.value_rows() {
            let mut tuple = vec![0i64; s];
            for (slot, &v) in positions.iter().zip(&row) {
                tuple[*slot] = v;
            }
            out.insert(tuple);
        }
    }
    Ok(out.into_iter().collect())
}

/// The least-upper-bound condition over a precomputed [`tilde_gamma`] list:
/// for every coordinate there must be a dominated element attaining it.
/// Equivalent to the tuple being a least upper bound of elements of the
/// union, since the witnesses for each coordinate join to the tuple itself.
pub fn closure_membership_in(tilde: &[Vec<i64>], tuple: &[i64]) -> bool {
    (0..tuple.len()).all(|k| {
        tilde.iter().any(|u| u[k] == tuple[k] && u.iter().zip(tuple).all(|(&a, &b)| a <= b))
    })
}

/// Whether a tuple of nonnegative pole orders lies in the Weierstrass
/// semigroup at the chosen places, decided through the least-upper-bound
/// closure of [`tilde_gamma`] (with `lambda = -1`).
///
/// Coordinates beyond the default cap are handled by extending the
/// truncation to the largest coordinate queried.
pub fn closure_membership(spec: &FieldSpec, places: &[usize], tuple: &[i64]) -> Result<bool> {
    check_tilde_places(spec, places)?;
    if places.len() != tuple.len() {
        return Err(Error::LengthMismatch { expected: places.len(), got: tuple.len() });
    }
    for &a in tuple {
        if a < 0 {
            return Err(Error::NonPositive { what: "pole order", value: a });
        }
    }
    let mut cap = tuple.iter().copied().max().unwrap_or(0);
    for &l in places {
        cap = cap.max(default_cap(spec, l)?);
    }
    let tilde = tilde_gamma(spec, places, single_place::DEFAULT_LAMBDA, Some(cap))?;
    Ok(closure_membership_in(&tilde, tuple))
}
