//! The abstract combinatorial datum of a linearized function field, its
//! symbolic places, divisors and principal-divisor formulas.
//!
//! A defining equation is only consulted through the multiplicity/degree
//! pairs of its factored right-hand side: `(n_i, d_i)` for each denominator
//! factor and `(m_j, e_j)` for each numerator factor.  Everything downstream
//! (dimensions, gaps, minimal generating sets) depends on nothing else, so
//! [`FieldSpec`] deliberately forgets the polynomials themselves; concrete
//! equations are reduced to this form by [`crate::fieldcheck`].
//!
//! Index `0` plays a special role.  When the right-hand side has a pole at
//! infinity (`n0 > 0`) the infinite place joins the denominator index set `I`
//! with the pair `(n0, 1)`; when it has a zero at infinity (`n0 < 0`) it
//! joins the numerator index set `J` with `(-n0, 1)`.  The conorm of the
//! infinite place is kept as the atomic symbol [`PlaceId::InfinityConorm`]
//! and never decomposed into the places above it; the principal-divisor
//! formulas are applied formally to index `0` as well, which is exact up to
//! the conorm identity and keeps every witness computation clean.

use std::collections::BTreeMap;

use crate::arith::{self, floor_div};
use crate::{Error, Result};

/// Default validation cap for the extension degree `p^n`.
pub const DEFAULT_MAX_PRIME_POWER: i64 = 1 << 20;

/// Absolute cap on `p^n`, applied even when a caller raises the default.
/// Together with the weight and lambda caps it keeps every intermediate of
/// the closed forms below `2^123`, inside `i128`.
pub const ABSOLUTE_MAX_PRIME_POWER: i64 = 1 << 40;

/// Hard cap on the total ramification weight `m`, so genus and every gap
/// bound stay well inside `i64`.
const MAX_RAMIFICATION_WEIGHT: i128 = 1 << 40;

/// Abstract specification of a linearized function field.
///
/// Immutable once built; [`build_spec`] checks every hypothesis of the
/// defining equation that is visible at this level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: i64,
    n: u32,
    q_pow: i64,
    /// `(n_i, d_i)` for the denominator factors, `i = 1..=s`.
    pole_data: Vec<(i64, i64)>,
    /// `(m_j, e_j)` for the numerator factors, `j = 1..=r`.
    zero_data: Vec<(i64, i64)>,
    n0: i64,
    i_set: Vec<usize>,
    j_set: Vec<usize>,
    m: i64,
    genus: i64,
}

/// Builds and validates a [`FieldSpec`] with the default `p^n` cap.
///
/// ```
/// // Degree-4 extension, three simple poles, zeros of weight 2+2+2.
/// let spec = linfield::build_spec(2, 2, &[(1, 1), (1, 1), (1, 1)], &[(2, 1), (2, 1), (1, 2)])?;
/// assert_eq!(spec.genus(), 12);
/// assert_eq!(spec.pole_indices(), &[0, 1, 2, 3]); // n0 = 3 ramifies infinity
/// # Ok::<(), linfield::Error>(())
/// ```
pub fn build_spec(
    p: i64,
    n: u32,
    pole_data: &[(i64, i64)],
    zero_data: &[(i64, i64)],
) -> Result<FieldSpec> {
    build_spec_with_cap(p, n, pole_data, zero_data, DEFAULT_MAX_PRIME_POWER)
}

/// [`build_spec`] with an explicit cap on `p^n`.
pub fn build_spec_with_cap(
    p: i64,
    n: u32,
    pole_data: &[(i64, i64)],
    zero_data: &[(i64, i64)],
    max_q_pow: i64,
) -> Result<FieldSpec> {
    if !arith::is_prime(p as i128) {
        return Err(Error::NonPrimeP(p));
    }
    if n == 0 {
        return Err(Error::NonPositive { what: "n", value: 0 });
    }
    if pole_data.is_empty() && zero_data.is_empty() {
        return Err(Error::EmptyData);
    }
    for &(mult, deg) in pole_data.iter().chain(zero_data) {
        if mult < 1 {
            return Err(Error::NonPositive { what: "factor multiplicity", value: mult });
        }
        if deg < 1 {
            return Err(Error::NonPositive { what: "factor degree", value: deg });
        }
    }

    let cap = max_q_pow.min(ABSOLUTE_MAX_PRIME_POWER);
    let mut q_pow: i128 = 1;
    for _ in 0..n {
        q_pow = q_pow.checked_mul(p as i128).ok_or(Error::Overflow)?;
        if q_pow > cap as i128 {
            return Err(Error::LimitExceeded(format!("p^n exceeds the cap {cap}")));
        }
    }

    for &(mult, _) in pole_data {
        if arith::gcd(mult as i128, p as i128) != 1 {
            return Err(Error::GcdViolation(format!(
                "denominator multiplicity {mult} shares a factor with p = {p}"
            )));
        }
    }

    let zero_weight: i128 = zero_data.iter().map(|&(m, e)| m as i128 * e as i128).sum();
    let pole_weight: i128 = pole_data.iter().map(|&(n, d)| n as i128 * d as i128).sum();
    if zero_weight > MAX_RAMIFICATION_WEIGHT || pole_weight > MAX_RAMIFICATION_WEIGHT {
        return Err(Error::LimitExceeded("factor weights exceed the supported range".into()));
    }
    let n0 = arith::narrow(zero_weight - pole_weight)?;
    if n0 > 0 && arith::gcd(n0 as i128, p as i128) != 1 {
        return Err(Error::GcdViolation(format!("n0 = {n0} > 0 shares a factor with p = {p}")));
    }

    let s = pole_data.len();
    let r = zero_data.len();
    let i_set: Vec<usize> = if n0 > 0 { (0..=s).collect() } else { (1..=s).collect() };
    let j_set: Vec<usize> = if n0 < 0 { (0..=r).collect() } else { (1..=r).collect() };

    let m_from_poles = pole_weight + if n0 > 0 { n0 as i128 } else { 0 };
    let m_from_zeros = zero_weight + if n0 < 0 { -n0 as i128 } else { 0 };
    if m_from_poles != m_from_zeros {
        return Err(Error::Internal("the two evaluations of m disagree".into()));
    }
    let m = arith::narrow(m_from_poles)?;

    let degree_sum: i128 =
        i_set.iter().map(|&i| if i == 0 { 1 } else { pole_data[i - 1].1 as i128 }).sum();
    let double_genus = (q_pow - 1) * (m as i128 + degree_sum - 2);
    if double_genus < 0 || double_genus % 2 != 0 {
        return Err(Error::Internal(format!(
            "Hurwitz count {double_genus} is not an even nonnegative integer"
        )));
    }
    let genus = arith::narrow(double_genus / 2)?;

    Ok(FieldSpec {
        p,
        n,
        q_pow: arith::narrow(q_pow)?,
        pole_data: pole_data.to_vec(),
        zero_data: zero_data.to_vec(),
        n0,
        i_set,
        j_set,
        m,
        genus,
    })
}

impl FieldSpec {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The extension degree `p^n`.
    pub fn q_pow(&self) -> i64 {
        self.q_pow
    }

    /// Degree at infinity of the right-hand side: zero weight minus pole weight.
    pub fn n0(&self) -> i64 {
        self.n0
    }

    /// Total ramification weight `m = sum_{i in I} n_i d_i = sum_{j in J} m_j e_j`.
    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// The denominator index set `I` in increasing order (`0` first when the
    /// infinite place is ramified).
    pub fn pole_indices(&self) -> &[usize] {
        &self.i_set
    }

    /// The numerator index set `J` in increasing order.
    pub fn zero_indices(&self) -> &[usize] {
        &self.j_set
    }

    /// Number of raw denominator factors `s` (excluding the virtual index 0).
    pub fn pole_factor_count(&self) -> usize {
        self.pole_data.len()
    }

    pub fn raw_pole_data(&self) -> &[(i64, i64)] {
        &self.pole_data
    }

    pub fn raw_zero_data(&self) -> &[(i64, i64)] {
        &self.zero_data
    }

    pub fn has_pole_index(&self, i: usize) -> bool {
        if i == 0 {
            self.n0 > 0
        } else {
            i <= self.pole_data.len()
        }
    }

    pub fn has_zero_index(&self, j: usize) -> bool {
        if j == 0 {
            self.n0 < 0
        } else {
            j <= self.zero_data.len()
        }
    }

    /// Ramification multiplicity `n_i` for `i` in `I`.
    pub fn pole_exponent(&self, i: usize) -> Result<i64> {
        if !self.has_pole_index(i) {
            return Err(Error::IndexOutOfRange { what: "denominator index", index: i as i64 });
        }
        Ok(if i == 0 { self.n0 } else { self.pole_data[i - 1].0 })
    }

    /// Base-place degree `d_i` for `i` in `I`.
    pub fn pole_degree(&self, i: usize) -> Result<i64> {
        if !self.has_pole_index(i) {
            return Err(Error::IndexOutOfRange { what: "denominator index", index: i as i64 });
        }
        Ok(if i == 0 { 1 } else { self.pole_data[i - 1].1 })
    }

    /// Zero multiplicity `m_j` for `j` in `J`.
    pub fn zero_exponent(&self, j: usize) -> Result<i64> {
        if !self.has_zero_index(j) {
            return Err(Error::IndexOutOfRange { what: "numerator index", index: j as i64 });
        }
        Ok(if j == 0 { -self.n0 } else { self.zero_data[j - 1].0 })
    }

    /// Base-place degree `e_j` for `j` in `J`.
    pub fn zero_degree(&self, j: usize) -> Result<i64> {
        if !self.has_zero_index(j) {
            return Err(Error::IndexOutOfRange { what: "numerator index", index: j as i64 });
        }
        Ok(if j == 0 { 1 } else { self.zero_data[j - 1].1 })
    }

    /// Indices in `I` whose place has degree one, i.e. the places at which
    /// gap sets and semigroups are defined.
    pub fn degree_one_pole_indices(&self) -> Vec<usize> {
        self.i_set
            .iter()
            .copied()
            .filter(|&i| self.pole_degree(i).expect("index from I") == 1)
            .collect()
    }

    /// Requires `d_l = 1` at the given index.
    pub(crate) fn require_degree_one(&self, l: usize) -> Result<()> {
        if self.pole_degree(l)? != 1 {
            return Err(Error::DegreeNotOne(l));
        }
        Ok(())
    }

    /// `sum_{k in I} floor(w * n_k / p^n) * d_k`, the term shared by the
    /// closed-form gap and minimal-generating-set descriptions.  Routed
    /// through the debug-only mutation hook (see [`arith::mutation_active`])
    /// so the `oracle` subcommand can demonstrate that an injected formula
    /// defect is detected; the dimension oracle never calls this.
    pub(crate) fn weighted_floor_sum(&self, w: i128) -> Result<i128> {
        let q = self.q_pow as i128;
        let mut sum: i128 = 0;
        for &k in self.pole_indices() {
            let n_k = self.pole_exponent(k)? as i128;
            let d_k = self.pole_degree(k)? as i128;
            sum += arith::mutated_floor_div(w * n_k, q) * d_k;
        }
        Ok(sum)
    }
}

/// A symbolic place of the extension field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PlaceId {
    /// The totally ramified place above denominator index `i in I`.
    Ramified(usize),
    /// The `k`-th of the `p^n` split places above numerator index `j in J`
    /// (`1 <= k <= p^n`); the `k`-th root of the linearized polynomial
    /// vanishes there, with the convention that root 1 is zero.
    Split(usize, i64),
    /// The conorm of the infinite place of the base field, kept atomic.
    InfinityConorm,
}

impl std::fmt::Display for PlaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PlaceId::Ramified(i) => write!(f, "Q{i}"),
            PlaceId::Split(j, k) => write!(f, "R{j},{k}"),
            PlaceId::InfinityConorm => write!(f, "D0"),
        }
    }
}

/// An integer divisor supported on the symbolic places.
///
/// Absent keys mean coefficient zero; equality is coefficient-wise.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Divisor {
    coeffs: BTreeMap<PlaceId, i64>,
}

impl Divisor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn coefficient(&self, place: PlaceId) -> i64 {
        self.coeffs.get(&place).copied().unwrap_or(0)
    }

    /// Adds `c` to the coefficient at `place`, dropping zero entries.
    pub fn add_term(&mut self, place: PlaceId, c: i64) {
        let entry = self.coeffs.entry(place).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&place);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (PlaceId, i64)> + '_ {
        self.coeffs.iter().map(|(&p, &c)| (p, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::new();
        }
        Divisor { coeffs: self.coeffs.iter().map(|(&p, &c)| (p, c * k)).collect() }
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (place, c) in other.iter() {
            out.add_term(place, c);
        }
        out
    }

    /// The pole part: places with negative coefficient, as positive orders.
    pub fn pole_part(&self) -> BTreeMap<PlaceId, i64> {
        self.coeffs.iter().filter(|&(_, &c)| c < 0).map(|(&p, &c)| (p, -c)).collect()
    }

    /// Divisor degree under the symbolic weights `deg Q_i = d_i`,
    /// `deg R_{j,k} = e_j`, `deg D0 = p^n`.
    pub fn weighted_degree(&self, spec: &FieldSpec) -> Result<i64> {
        let mut total: i128 = 0;
        for (place, c) in self.iter() {
            let w = match place {
                PlaceId::Ramified(i) => spec.pole_degree(i)?,
                PlaceId::Split(j, _) => spec.zero_degree(j)?,
                PlaceId::InfinityConorm => spec.q_pow(),
            };
            total += c as i128 * w as i128;
        }
        arith::narrow(total)
    }
}

/// A factor of the defining equation whose principal divisor is known in
/// closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `p_i(x)` for `i in I` (formally the constant 1 when `i = 0`).
    Denominator(usize),
    /// `q_j(x)` for `j in J` (formally the constant 1 when `j = 0`).
    Numerator(usize),
    /// `y - beta_k` for `1 <= k <= p^n`, where `beta_1 = 0`.
    RootOffset(i64),
}

/// Principal divisor of a single factor.
///
/// For index 0 the formula is applied formally; the result is exact modulo
/// the conorm identity and sums over witness exponents cancel the atomic
/// conorm coefficient entirely.
pub fn principal_divisor(spec: &FieldSpec, factor: Factor) -> Result<Divisor> {
    let mut div = Divisor::new();
    match factor {
        Factor::Denominator(i) => {
            let d = spec.pole_degree(i)?;
            div.add_term(PlaceId::Ramified(i), spec.q_pow());
            div.add_term(PlaceId::InfinityConorm, -d);
        }
        Factor::Numerator(j) => {
            let e = spec.zero_degree(j)?;
            for k in 1..=spec.q_pow() {
                div.add_term(PlaceId::Split(j, k), 1);
            }
            div.add_term(PlaceId::InfinityConorm, -e);
        }
        Factor::RootOffset(k) => {
            if k < 1 || k > spec.q_pow() {
                return Err(Error::IndexOutOfRange { what: "root index", index: k });
            }
            for &j in spec.zero_indices() {
                div.add_term(PlaceId::Split(j, k), spec.zero_exponent(j)?);
            }
            for &i in spec.pole_indices() {
                div.add_term(PlaceId::Ramified(i), -spec.pole_exponent(i)?);
            }
        }
    }
    Ok(div)
}

/// A factored function expression: a power of `y`, powers of the denominator
/// and numerator polynomials, and a power of the aggregate product of
/// `y / (y - beta_k)` over the nonzero roots.
///
/// Witness functions certifying minimal-generating-set tuples all have this
/// shape, so their pole divisors can be computed symbolically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WitnessExpr {
    pub y_exp: i64,
    /// Exponent of `p_i(x)`, keyed by `i in I`.
    pub denom_exp: BTreeMap<usize, i64>,
    /// Exponent of `q_j(x)`, keyed by `j in J`.
    pub numer_exp: BTreeMap<usize, i64>,
    /// Exponent of the aggregate `prod_{k=2}^{p^n} y / (y - beta_k)`.
    pub ratio_exp: i64,
}

impl WitnessExpr {
    /// Exponent-wise sum of two expressions.
    pub fn combined(&self, other: &WitnessExpr) -> WitnessExpr {
        let mut out = self.clone();
        out.y_exp += other.y_exp;
        out.ratio_exp += other.ratio_exp;
        for (&i, &e) in &other.denom_exp {
            *out.denom_exp.entry(i).or_insert(0) += e;
        }
        for (&j, &e) in &other.numer_exp {
            *out.numer_exp.entry(j).or_insert(0) += e;
        }
        out.denom_exp.retain(|_, e| *e != 0);
        out.numer_exp.retain(|_, e| *e != 0);
        out
    }
}

/// Divisor of the aggregate factor `prod_{k=2}^{p^n} y / (y - beta_k)`.
///
/// The ramified parts of numerator and denominator cancel, leaving
/// `(p^n - 1) * sum_j m_j R_{j,1} - sum_{k>=2} sum_j m_j R_{j,k}`.
fn ratio_divisor(spec: &FieldSpec) -> Result<Divisor> {
    let mut div = Divisor::new();
    for &j in spec.zero_indices() {
        let mult = spec.zero_exponent(j)?;
        div.add_term(PlaceId::Split(j, 1), (spec.q_pow() - 1) * mult);
        for k in 2..=spec.q_pow() {
            div.add_term(PlaceId::Split(j, k), -mult);
        }
    }
    Ok(div)
}

/// Exact principal divisor of a [`WitnessExpr`] as the integer combination
/// of the factor formulas.  The conorm coefficient is reported as-is, never
/// decomposed.
pub fn divisor_of_witness(spec: &FieldSpec, witness: &WitnessExpr) -> Result<Divisor> {
    let mut div = Divisor::new();
    if witness.y_exp != 0 {
        div = div.plus(&principal_divisor(spec, Factor::RootOffset(1))?.scaled(witness.y_exp));
    }
    for (&i, &e) in &witness.denom_exp {
        if e != 0 {
            div = div.plus(&principal_divisor(spec, Factor::Denominator(i))?.scaled(e));
        }
    }
    for (&j, &e) in &witness.numer_exp {
        if e != 0 {
            div = div.plus(&principal_divisor(spec, Factor::Numerator(j))?.scaled(e));
        }
    }
    if witness.ratio_exp != 0 {
        div = div.plus(&ratio_divisor(spec)?.scaled(witness.ratio_exp));
    }
    Ok(div)
}

/// Restriction of a divisor supported on the ramified places to the base
/// field: the coefficient at the base place under `Q_i` is
/// `floor(a_{Q_i} / p^n)`.  Zero coefficients are omitted.
pub fn restriction(spec: &FieldSpec, divisor: &Divisor) -> Result<BTreeMap<usize, i64>> {
    let mut out = BTreeMap::new();
    for (place, c) in divisor.iter() {
        match place {
            PlaceId::Ramified(i) => {
                if !spec.has_pole_index(i) {
                    return Err(Error::IndexOutOfRange {
                        what: "denominator index",
                        index: i as i64,
                    });
                }
                let r = arith::narrow(floor_div(c as i128, spec.q_pow() as i128))?;
                if r != 0 {
                    out.insert(i, r);
                }
            }
            other => return Err(Error::UnsupportedPlace(other.to_string())),
        }
    }
    Ok(out)
}
