//! Hypothesis validation for concrete defining equations.
//!
//! A [`ConcreteSpec`] pins down an actual equation over an explicit finite
//! constant field, with the right-hand side supplied in factored form (the
//! form the theory works with; no factorization is ever attempted here).
//! [`validate_concrete`] checks each hypothesis, reports every check
//! individually, and reduces the equation to an abstract [`FieldSpec`] built
//! from degrees and multiplicities alone.

use super::field::{FiniteField, Fq};
use super::poly::{is_irreducible, splits_in_field, FieldPoly};
use crate::model::{build_spec, FieldSpec};
use crate::{Error, Result};

/// A concrete defining equation: constant field, leading scalar, linearized
/// coefficients, and the factored numerator and denominator.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcreteSpec {
    pub field: FiniteField,
    pub alpha: Fq,
    /// Linearized coefficients `alpha_0 ..= alpha_n` of the left-hand side.
    pub l_coeffs: Vec<Fq>,
    /// `(q_j, m_j)`: numerator factors with multiplicities.
    pub numerator: Vec<(FieldPoly, i64)>,
    /// `(p_i, n_i)`: denominator factors with multiplicities.
    pub denominator: Vec<(FieldPoly, i64)>,
}

/// Outcome of one hypothesis check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All check outcomes for one validation run.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { name, passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect()
    }
}

/// Validates every hypothesis of the defining equation and reduces the
/// concrete data to an abstract [`FieldSpec`].
///
/// In strict mode any failed check aborts with
/// [`Error::ValidationFailure`]; otherwise failures are only recorded and
/// the abstract spec is still produced, since the gap and generating-set
/// formulas depend only on degrees and multiplicities.  Failures that make
/// even the abstract spec meaningless (multiplicities sharing a factor with
/// `p`, constant factors) always abort.
///
/// `gamma_places` is the number of places a later multi-place query will
/// use; when given, the constant field must have at least that many
/// elements.
pub fn validate_concrete(
    cs: &ConcreteSpec,
    strict: bool,
    gamma_places: Option<usize>,
) -> Result<(FieldSpec, ValidationReport)> {
    let mut report = ValidationReport::default();
    let field = &cs.field;

    report.push(
        "alpha_nonzero",
        !cs.alpha.is_zero(),
        "leading scalar of the right-hand side must be a unit",
    );

    let n = cs.l_coeffs.len().checked_sub(1).ok_or(Error::AlphaZero)?;
    let a0_ok = !cs.l_coeffs[0].is_zero();
    report.push(
        "l_constant_coefficient_nonzero",
        a0_ok,
        "alpha_0 != 0 makes the linearized polynomial separable",
    );
    report.push(
        "l_leading_coefficient_nonzero",
        !cs.l_coeffs[n].is_zero(),
        "alpha_n != 0 pins the degree p^n",
    );

    let mut all_monic = true;
    let mut all_irreducible = true;
    let mut irreducible_detail = String::new();
    for (poly, _) in cs.numerator.iter().chain(&cs.denominator) {
        if !poly.is_monic() {
            all_monic = false;
        }
        match is_irreducible(poly) {
            Ok(true) => {}
            Ok(false) => {
                all_irreducible = false;
                irreducible_detail = format!("a degree-{:?} factor is reducible", poly.degree());
            }
            Err(_) => {
                all_irreducible = false;
                irreducible_detail = "a listed factor is constant".into();
            }
        }
    }
    report.push("factors_monic", all_monic, "every listed factor must be monic");
    report.push(
        "factors_irreducible",
        all_irreducible,
        if all_irreducible { "Rabin test passed for every factor" } else { &irreducible_detail },
    );

    let mut distinct = true;
    let polys: Vec<&FieldPoly> =
        cs.numerator.iter().chain(&cs.denominator).map(|(p, _)| p).collect();
    for a in 0..polys.len() {
        for b in (a + 1)..polys.len() {
            if polys[a] == polys[b] {
                distinct = false;
            }
        }
    }
    report.push(
        "factors_pairwise_distinct",
        distinct,
        "coprimality of numerator and denominator follows from distinctness",
    );

    let p = field.p();
    let mult_ok = cs.denominator.iter().all(|&(_, m)| crate::arith::gcd(m as i128, p as i128) == 1);
    report.push(
        "denominator_multiplicities_coprime_to_p",
        mult_ok,
        "each n_i must be prime to the characteristic",
    );

    let poles: Vec<(i64, i64)> = cs
        .denominator
        .iter()
        .map(|(poly, m)| (*m, poly.degree().map_or(0, |d| d as i64)))
        .collect();
    let zeros: Vec<(i64, i64)> =
        cs.numerator.iter().map(|(poly, m)| (*m, poly.degree().map_or(0, |d| d as i64))).collect();
    let n0: i64 = zeros.iter().map(|&(m, e)| m * e).sum::<i64>()
        - poles.iter().map(|&(n, d)| n * d).sum::<i64>();
    report.push(
        "n0_coprime_to_p",
        n0 <= 0 || crate::arith::gcd(n0 as i128, p as i128) == 1,
        format!("n0 = {n0}"),
    );

    match splits_in_field(field, &cs.l_coeffs) {
        Ok(true) => report.push("splits_in_constant_field", true, "all p^n roots lie in K"),
        Ok(false) => report.push(
            "splits_in_constant_field",
            false,
            "the linearized polynomial has a root outside K",
        ),
        Err(e) => report.push("splits_in_constant_field", false, e.to_string()),
    }

    if let Some(t) = gamma_places {
        report.push(
            "constant_field_large_enough",
            field.order() >= t as u128,
            format!("|K| = {} must be at least the place count {t}", field.order()),
        );
    }

    if strict && !report.passed() {
        return Err(Error::ValidationFailure { failures: report.failures() });
    }

    let spec = build_spec(p, n as u32, &poles, &zeros)?;
    Ok((spec, report))
}
