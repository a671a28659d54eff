//! Closed forms at a single totally ramified degree-one place: the gap set,
//! a generator system for the Weierstrass semigroup, its multiplicity and
//! Frobenius number, the symmetry criterion, and the congruence test for two
//! places sharing a semigroup.
//!
//! The gap set admits a one-parameter family of descriptions indexed by any
//! integer `lambda` coprime to `p`:
//!
//! ```text
//! G(Q_l) = { j p^n - i lambda n_l | 1 <= i <= p^n - 1,
//!            ceil(i lambda n_l / p^n) <= j <= m ceil(i lambda / p^n)
//!              - sum_{k in I} floor(i lambda n_k / p^n) d_k
//!              + floor(i lambda n_l / p^n) - 1 }
//! ```
//!
//! The resulting set is independent of `lambda`, which makes the parameter a
//! user-runnable cross-check rather than an internal detail: `lambda = -1`
//! gives the simplest description and is the default everywhere, while the
//! inverse of `-n_l` modulo `p^n` (see [`inverse_lambda`]) puts the gaps in
//! the form `j p^n + i`.

use crate::arith::{self, ceil_div, floor_div, gcd};
use crate::model::FieldSpec;
use crate::{Error, Result};

/// Default `lambda` used by the convenience wrappers and the CLI.
pub const DEFAULT_LAMBDA: i64 = -1;

/// Cap on `|lambda|`; together with the spec caps this keeps every
/// intermediate of the closed forms inside `i128`.  The gap and
/// generating sets are independent of `lambda`, so nothing is lost.
pub const MAX_LAMBDA: i64 = 1 << 40;

/// One member of the `(i, j)` parameterization of a gap set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapEntry {
    /// Residue parameter, `1 <= i <= p^n - 1`.
    pub i: i64,
    /// Quotient parameter within the stated bounds.
    pub j: i64,
    /// The gap `j * p^n - i * lambda * n_l`.
    pub value: i64,
}

/// The gap set at a degree-one place together with its parameterization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet {
    place: usize,
    lambda: i64,
    elements: Vec<i64>,
    entries: Vec<GapEntry>,
}

impl GapSet {
    /// Gaps in increasing order.
    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// The `(i, j)` pairs in enumeration order, one per gap.
    pub fn entries(&self) -> &[GapEntry] {
        &self.entries
    }

    pub fn place(&self) -> usize {
        self.place
    }

    pub fn lambda(&self) -> i64 {
        self.lambda
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: i64) -> bool {
        self.elements.binary_search(&a).is_ok()
    }
}

pub(crate) fn check_lambda(spec: &FieldSpec, lambda: i64) -> Result<()> {
    if lambda.checked_abs().is_none_or(|a| a > MAX_LAMBDA) {
        return Err(Error::LimitExceeded(format!("|lambda| exceeds the cap {MAX_LAMBDA}")));
    }
    if gcd(lambda as i128, spec.p() as i128) != 1 {
        return Err(Error::GcdViolation(format!(
            "lambda = {lambda} shares a factor with p = {}",
            spec.p()
        )));
    }
    Ok(())
}

/// Upper bound (inclusive) of the `j` range for the parameter `w = i * lambda`
/// at place `l`; one less than the shared tuple total used in
/// [`crate::multi_place`].
pub(crate) fn j_sum_total(spec: &FieldSpec, w: i128, chosen: &[usize]) -> Result<i128> {
    let q = spec.q_pow() as i128;
    let mut total = spec.m() as i128 * ceil_div(w, q) - spec.weighted_floor_sum(w)?;
    for &l in chosen {
        total += floor_div(w * spec.pole_exponent(l)? as i128, q);
    }
    Ok(total)
}

/// The gap set at `Q_l` in the description indexed by `lambda`.
///
/// Requires `d_l = 1` and `gcd(lambda, p) = 1`.  For genus zero the index
/// ranges are vacuous and the set is empty.
///
/// ```
/// let spec = linfield::build_spec(2, 3, &[(1, 1), (1, 1), (1, 1)], &[(1, 1), (1, 1)])?;
/// let gaps = linfield::single_place::gap_set(&spec, 1, -1)?;
/// assert_eq!(gaps.len() as i64, spec.genus());
/// assert!(gaps.contains(9) && !gaps.contains(8));
/// # Ok::<(), linfield::Error>(())
/// ```
pub fn gap_set(spec: &FieldSpec, l: usize, lambda: i64) -> Result<GapSet> {
    spec.require_degree_one(l)?;
    check_lambda(spec, lambda)?;
    let q = spec.q_pow() as i128;
    let n_l = spec.pole_exponent(l)? as i128;
    let mut entries = Vec::new();
    for i in 1..spec.q_pow() {
        let w = i as i128 * lambda as i128;
        let j_lo = ceil_div(w * n_l, q);
        let j_hi = j_sum_total(spec, w, &[l])? - 1;
        for j in j_lo..=j_hi {
            let value = arith::narrow(j * q - w * n_l)?;
            entries.push(GapEntry { i, j: arith::narrow(j)?, value });
        }
    }
    let mut elements: Vec<i64> = entries.iter().map(|e| e.value).collect();
    elements.sort_unstable();
    elements.dedup();
    Ok(GapSet { place: l, lambda, elements, entries })
}

/// The `lambda` preset equal to the inverse of `-n_l` modulo `p^n`, which
/// rewrites the gaps as `j p^n + i`.
pub fn inverse_lambda(spec: &FieldSpec, l: usize) -> Result<i64> {
    spec.require_degree_one(l)?;
    let q = spec.q_pow() as i128;
    let n_l = spec.pole_exponent(l)? as i128;
    let inv = arith::mod_inverse(-n_l, q)
        .ok_or_else(|| Error::GcdViolation(format!("-n_{l} is not invertible modulo p^n")))?;
    arith::narrow(inv)
}

/// A generator system for the Weierstrass semigroup at `Q_l`:
/// `p^n` together with one generator per residue `1 <= i <= p^n - 1`.
///
/// The system is not claimed minimal; see [`pruned_generators`] for a
/// redundancy-free view.
pub fn semigroup_generators(spec: &FieldSpec, l: usize) -> Result<Vec<i64>> {
    spec.require_degree_one(l)?;
    let q = spec.q_pow() as i128;
    let n_l = spec.pole_exponent(l)? as i128;
    let mut gens = vec![spec.q_pow()];
    for i in 1..spec.q_pow() {
        let mut coeff: i128 = -ceil_div(i as i128 * n_l, q);
        for &k in spec.pole_indices() {
            let n_k = spec.pole_exponent(k)? as i128;
            let d_k = spec.pole_degree(k)? as i128;
            coeff += ceil_div(i as i128 * n_k, q) * d_k;
        }
        gens.push(arith::narrow(coeff * q + i as i128 * n_l)?);
    }
    gens.sort_unstable();
    gens.dedup();
    Ok(gens)
}

/// Membership table for the numerical semigroup generated by `generators`:
/// `table[v]` is true iff `v` is a nonnegative integer combination.
pub fn generated_membership_table(generators: &[i64], up_to: i64) -> Vec<bool> {
    let size = (up_to.max(0) + 1) as usize;
    let mut table = vec![false; size];
    table[0] = true;
    for v in 1..size {
        for &g in generators {
            if g > 0 && (g as usize) <= v && table[v - g as usize] {
                table[v] = true;
                break;
            }
        }
    }
    table
}

/// Post-processing on [`semigroup_generators`]: drops every generator that
/// the remaining ones already produce.  This is a convenience view; the
/// closed form itself only promises a generator system.
pub fn pruned_generators(spec: &FieldSpec, l: usize) -> Result<Vec<i64>> {
    let gens = semigroup_generators(spec, l)?;
    let mut kept: Vec<i64> = Vec::new();
    for (idx, &g) in gens.iter().enumerate() {
        let mut others = kept.clone();
        others.extend_from_slice(&gens[idx + 1..]);
        let table = generated_membership_table(&others, g);
        if !table[g as usize] {
            kept.push(g);
        }
    }
    Ok(kept)
}

/// Least positive element of the semigroup at `Q_l`.
pub fn multiplicity(spec: &FieldSpec, l: usize) -> Result<i64> {
    spec.require_degree_one(l)?;
    if spec.pole_indices().len() >= 2 {
        Ok(spec.q_pow())
    } else {
        Ok(spec.q_pow().min(spec.pole_exponent(l)?))
    }
}

/// Largest gap at `Q_l`.  Undefined (errors) for genus zero.
pub fn frobenius(spec: &FieldSpec, l: usize) -> Result<i64> {
    spec.require_degree_one(l)?;
    if spec.genus() == 0 {
        return Err(Error::GenusZero);
    }
    let q = spec.q_pow() as i128;
    let n_l = spec.pole_exponent(l)? as i128;
    let mut coeff: i128 = spec.m() as i128 + floor_div(n_l, q) - 1;
    for &k in spec.pole_indices() {
        let n_k = spec.pole_exponent(k)? as i128;
        let d_k = spec.pole_degree(k)? as i128;
        coeff -= floor_div(n_k, q) * d_k;
    }
    arith::narrow(coeff * q - n_l)
}

/// Whether the semigroup at `Q_l` is symmetric, i.e. its Frobenius number
/// equals `2g - 1`.  Holds exactly when every other ramification
/// multiplicity is `-1` modulo `p^n`.
pub fn is_symmetric(spec: &FieldSpec, l: usize) -> Result<bool> {
    spec.require_degree_one(l)?;
    if spec.genus() == 0 {
        return Err(Error::GenusZero);
    }
    let q = spec.q_pow();
    for &k in spec.pole_indices() {
        if k != l && spec.pole_exponent(k)?.rem_euclid(q) != q - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sufficient congruence criterion for `H(Q_i) = H(Q_j)`: the ramification
/// multiplicities agree modulo `p^n`.  One-directional; a `false` answer
/// does not rule out equality.
pub fn same_semigroup_criterion(spec: &FieldSpec, i: usize, j: usize) -> Result<bool> {
    spec.require_degree_one(i)?;
    spec.require_degree_one(j)?;
    let q = spec.q_pow();
    Ok(spec.pole_exponent(i)?.rem_euclid(q) == spec.pole_exponent(j)?.rem_euclid(q))
}

/// Summary of the semigroup data at one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupProfile {
    pub place: usize,
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub symmetric: bool,
}

/// Assembles generators, multiplicity, Frobenius number and symmetry status.
/// Requires genus at least one.
pub fn semigroup_profile(spec: &FieldSpec, l: usize) -> Result<SemigroupProfile> {
    Ok(SemigroupProfile {
        place: l,
        generators: semigroup_generators(spec, l)?,
        multiplicity: multiplicity(spec, l)?,
        frobenius: frobenius(spec, l)?,
        symmetric: is_symmetric(spec, l)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::build_spec;
    use crate::riemann_roch::gap_set_oracle;

    fn e1() -> FieldSpec {
        build_spec(2, 3, &[(1, 1), (1, 1), (1, 1)], &[(1, 1), (1, 1)]).unwrap()
    }

    fn e2() -> FieldSpec {
        build_spec(2, 2, &[(1, 1), (1, 1), (1, 1)], &[(2, 1), (2, 1), (1, 2)]).unwrap()
    }

    fn d1() -> FieldSpec {
        build_spec(2, 1, &[(1, 1), (1, 1), (1, 2)], &[]).unwrap()
    }

    #[test]
    fn octic_gap_set() {
        let mut expected: Vec<i64> = (1..=7).collect();
        expected.extend(9..=15);
        let gaps = gap_set(&e1(), 1, -1).unwrap();
        assert_eq!(gaps.elements(), expected.as_slice());
        assert_eq!(gaps.len() as i64, e1().genus());
    }

    #[test]
    fn quartic_gap_sets_at_finite_and_infinite_places() {
        let spec = e2();
        let at_finite = gap_set(&spec, 1, -1).unwrap();
        assert_eq!(at_finite.elements(), &[1, 2, 3, 5, 6, 7, 9, 10, 11, 14, 15, 19]);
        let at_infinity = gap_set(&spec, 0, -1).unwrap();
        assert_eq!(at_infinity.elements(), &[1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 17]);
        // The inverse preset at the infinite place: -n_0 = -3 = 1 mod 4.
        assert_eq!(inverse_lambda(&spec, 0).unwrap(), 1);
        let via_preset = gap_set(&spec, 0, 1).unwrap();
        assert_eq!(via_preset.elements(), at_infinity.elements());
    }

    #[test]
    fn parameterization_is_injective_and_counts_genus() {
        for spec in [e1(), e2(), d1()] {
            for &l in &spec.degree_one_pole_indices() {
                let gaps = gap_set(&spec, l, -1).unwrap();
                assert_eq!(gaps.len() as i64, spec.genus());
                assert_eq!(gaps.entries().len(), gaps.len(), "pair map injective");
                for e in gaps.entries() {
                    let n_l = spec.pole_exponent(l).unwrap();
                    assert_eq!(e.value, e.j * spec.q_pow() - e.i * gaps.lambda() * n_l);
                }
            }
        }
    }

    #[test]
    fn lambda_independence_small_specs() {
        for spec in [e1(), e2(), d1()] {
            for &l in &spec.degree_one_pole_indices() {
                let reference = gap_set(&spec, l, -1).unwrap();
                for lambda in [1, 3, -5, 7, inverse_lambda(&spec, l).unwrap()] {
                    let other = gap_set(&spec, l, lambda).unwrap();
                    assert_eq!(other.elements(), reference.elements(), "lambda {lambda}");
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_dimension_oracle() {
        for spec in [e1(), e2(), d1()] {
            for &l in &spec.degree_one_pole_indices() {
                assert_eq!(
                    gap_set(&spec, l, -1).unwrap().elements(),
                    gap_set_oracle(&spec, l).unwrap().as_slice()
                );
            }
        }
    }

    #[test]
    fn lambda_must_be_coprime_to_p() {
        assert!(matches!(gap_set(&e1(), 1, 2), Err(Error::GcdViolation(_))));
        assert!(matches!(gap_set(&e1(), 1, 0), Err(Error::GcdViolation(_))));
    }

    #[test]
    fn lambda_magnitude_is_capped() {
        assert!(matches!(gap_set(&e1(), 1, MAX_LAMBDA + 1), Err(Error::LimitExceeded(_))));
        assert!(matches!(gap_set(&e1(), 1, i64::MIN), Err(Error::LimitExceeded(_))));
        assert!(gap_set(&e1(), 1, -MAX_LAMBDA + 1).is_ok());
    }

    #[test]
    fn generator_systems() {
        let mut expected_e1 = vec![8];
        expected_e1.extend((1..=7).map(|i| 16 + i));
        assert_eq!(semigroup_generators(&e1(), 1).unwrap(), expected_e1);

        assert_eq!(semigroup_generators(&e2(), 0).unwrap(), vec![4, 15, 18, 21]);
        assert_eq!(semigroup_generators(&d1(), 1).unwrap(), vec![2, 7]);
    }

    #[test]
    fn generators_generate_exactly_the_non_gaps() {
        for spec in [e1(), e2(), d1()] {
            for &l in &spec.degree_one_pole_indices() {
                let gens = semigroup_generators(&spec, l).unwrap();
                let gaps = gap_set(&spec, l, -1).unwrap();
                let bound = frobenius(&spec, l).unwrap() + spec.q_pow();
                let table = generated_membership_table(&gens, bound);
                for v in 0..=bound {
                    assert_eq!(table[v as usize], !gaps.contains(v), "l={l} v={v}");
                }
            }
        }
    }

    #[test]
    fn multiplicity_and_frobenius_values() {
        assert_eq!(multiplicity(&e1(), 1).unwrap(), 8);
        assert_eq!(frobenius(&e1(), 1).unwrap(), 15);
        assert_eq!(multiplicity(&e2(), 0).unwrap(), 4);
        assert_eq!(frobenius(&e2(), 0).unwrap(), 17);
        assert_eq!(multiplicity(&e2(), 1).unwrap(), 4);
        assert_eq!(frobenius(&e2(), 1).unwrap(), 19);
    }

    #[test]
    fn frobenius_is_max_gap_and_multiplicity_min_nonzero_nongap() {
        for spec in [e1(), e2(), d1()] {
            for &l in &spec.degree_one_pole_indices() {
                let gaps = gap_set(&spec, l, -1).unwrap();
                assert_eq!(frobenius(&spec, l).unwrap(), *gaps.elements().last().unwrap());
                let mult = (1..).find(|&v| !gaps.contains(v)).unwrap();
                assert_eq!(multiplicity(&spec, l).unwrap(), mult);
            }
        }
    }

    #[test]
    fn single_pole_semigroup_is_two_generated() {
        // No finite poles, one numerator factor of weight 3: H = <2, 3>.
        let spec = build_spec(2, 1, &[], &[(1, 3)]).unwrap();
        assert_eq!(spec.pole_indices(), &[0]);
        assert_eq!(spec.genus(), 1);
        assert_eq!(multiplicity(&spec, 0).unwrap(), 2);
        assert_eq!(frobenius(&spec, 0).unwrap(), 1);
        assert!(is_symmetric(&spec, 0).unwrap());
        assert_eq!(pruned_generators(&spec, 0).unwrap(), vec![2, 3]);
    }

    #[test]
    fn symmetry_criterion_both_routes() {
        // Octic example: other multiplicities are 1, not -1 mod 8.
        let spec1 = e1();
        assert!(!is_symmetric(&spec1, 1).unwrap());
        assert_ne!(frobenius(&spec1, 1).unwrap(), 2 * spec1.genus() - 1);

        // Here the other multiplicities are 1 = -1 mod 2.
        let spec2 = d1();
        assert!(is_symmetric(&spec2, 1).unwrap());
        assert_eq!(frobenius(&spec2, 1).unwrap(), 2 * spec2.genus() - 1);
    }

    #[test]
    fn genus_zero_rejects_frobenius_but_allows_gaps() {
        let spec = build_spec(2, 1, &[(1, 1)], &[]).unwrap();
        assert!(gap_set(&spec, 1, -1).unwrap().is_empty());
        assert_eq!(frobenius(&spec, 1), Err(Error::GenusZero));
        assert_eq!(is_symmetric(&spec, 1), Err(Error::GenusZero));
    }

    #[test]
    fn shared_semigroup_congruence() {
        let spec1 = e1();
        assert!(same_semigroup_criterion(&spec1, 1, 2).unwrap());
        assert_eq!(
            gap_set(&spec1, 1, -1).unwrap().elements(),
            gap_set(&spec1, 2, -1).unwrap().elements()
        );

        let spec2 = e2();
        assert!(same_semigroup_criterion(&spec2, 1, 2).unwrap());
        assert!(!same_semigroup_criterion(&spec2, 0, 1).unwrap());
        assert_ne!(
            gap_set(&spec2, 0, -1).unwrap().elements(),
            gap_set(&spec2, 1, -1).unwrap().elements()
        );
    }

    #[test]
    fn profile_collects_everything() {
        let profile = semigroup_profile(&e2(), 0).unwrap();
        assert_eq!(profile.multiplicity, 4);
        assert_eq!(profile.frobenius, 17);
        assert!(!profile.symmetric);
        assert!(profile.generators.contains(&4));
        assert!(!profile.generators.contains(&0));
        assert_eq!(profile.multiplicity, *profile.generators.iter().min().unwrap());
    }

    #[test]
    fn pruning_is_sound() {
        for spec in [e1(), e2(), d1()] {
            for &l in &spec.degree_one_pole_indices() {
                let full = semigroup_generators(&spec, l).unwrap();
                let pruned = pruned_generators(&spec, l).unwrap();
                assert!(pruned.iter().all(|g| full.contains(g)));
                let bound = frobenius(&spec, l).unwrap() + spec.q_pow();
                assert_eq!(
                    generated_membership_table(&pruned, bound),
                    generated_membership_table(&full, bound)
                );
            }
        }
    }
}
