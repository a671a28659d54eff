//! Dense univariate polynomials over an explicit finite field, with the
//! exact arithmetic needed by hypothesis validation: division, gcd, modular
//! exponentiation, the Rabin irreducibility test, and the splitting test for
//! linearized polynomials.

use super::field::{FiniteField, Fq};
use crate::{Error, Result};

/// A polynomial over a [`FiniteField`]; coefficients low-to-high with no
/// trailing zeros.  The zero polynomial has an empty coefficient list and
/// degree `None` (the minus-infinity sentinel).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldPoly {
    field: FiniteField,
    coeffs: Vec<Fq>,
}

impl FieldPoly {
    pub fn new(field: &FiniteField, coeffs: Vec<Fq>) -> FieldPoly {
        let mut poly = FieldPoly { field: field.clone(), coeffs };
        poly.normalize();
        poly
    }

    /// Polynomial from little-endian lists of element digits.
    pub fn from_digit_rows(field: &FiniteField, rows: &[Vec<i64>]) -> Result<FieldPoly> {
        let coeffs = rows.iter().map(|row| field.element(row)).collect::<Result<_>>()?;
        Ok(FieldPoly::new(field, coeffs))
    }

    /// Polynomial with prime-field coefficients (one digit each).
    pub fn from_prime_coeffs(field: &FiniteField, coeffs: &[i64]) -> Result<FieldPoly> {
        let coeffs = coeffs.iter().map(|&c| field.element(&[c])).collect::<Result<_>>()?;
        Ok(FieldPoly::new(field, coeffs))
    }

    pub fn zero(field: &FiniteField) -> FieldPoly {
        FieldPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FiniteField) -> FieldPoly {
        FieldPoly { field: field.clone(), coeffs: vec![field.one()] }
    }

    /// The monomial `x`.
    pub fn x(field: &FiniteField) -> FieldPoly {
        FieldPoly { field: field.clone(), coeffs: vec![field.zero(), field.one()] }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Fq::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&self.field.one())
    }

    pub fn leading(&self) -> Option<&Fq> {
        self.coeffs.last()
    }

    fn check_field(&self, other: &FieldPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldPoly) -> Result<FieldPoly> {
        self.check_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                self.field.add(a, b)
            })
            .collect();
        Ok(FieldPoly::new(&self.field, coeffs))
    }

    pub fn sub(&self, other: &FieldPoly) -> Result<FieldPoly> {
        self.check_field(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                self.field.sub(a, b)
            })
            .collect();
        Ok(FieldPoly::new(&self.field, coeffs))
    }

    pub fn mul(&self, other: &FieldPoly) -> Result<FieldPoly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(FieldPoly::zero(&self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let prod = self.field.mul(a, b);
                coeffs[i + j] = self.field.add(&coeffs[i + j], &prod);
            }
        }
        Ok(FieldPoly::new(&self.field, coeffs))
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn divmod(&self, divisor: &FieldPoly) -> Result<(FieldPoly, FieldPoly)> {
        self.check_field(divisor)?;
        let Some(db) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lead_inv = self.field.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let dr = rem.len() - 1;
            let c = self.field.mul(&rem[dr], &lead_inv);
            if !c.is_zero() {
                quot[dr - db] = c.clone();
                for (offset, m) in divisor.coeffs.iter().enumerate() {
                    let sub = self.field.mul(&c, m);
                    rem[dr - db + offset] = self.field.sub(&rem[dr - db + offset], &sub);
                }
            }
            rem.pop();
            while rem.last().is_some_and(Fq::is_zero) {
                rem.pop();
            }
        }
        Ok((
            FieldPoly::new(&self.field, quot),
            FieldPoly { field: self.field.clone(), coeffs: rem },
        ))
    }

    pub fn rem(&self, divisor: &FieldPoly) -> Result<FieldPoly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &FieldPoly) -> Result<FieldPoly> {
        self.check_field(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Scales to leading coefficient one; errors on the zero polynomial...
    /// except that `gcd(0, 0) = 0` is allowed through unchanged.
    fn into_monic(self) -> Result<FieldPoly> {
        if self.is_zero() {
            return Ok(self);
        }
        let inv = self.field.inv(self.leading().unwrap())?;
        let coeffs = self.coeffs.iter().map(|c| self.field.mul(c, &inv)).collect();
        Ok(FieldPoly::new(&self.field, coeffs))
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn powmod(&self, mut e: u128, modulus: &FieldPoly) -> Result<FieldPoly> {
        self.check_field(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let mut base = self.rem(modulus)?;
        let mut acc = FieldPoly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(modulus)?;
            }
            base = base.mul(&base)?.rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Evaluation at a field element by Horner's rule.
    pub fn eval(&self, at: &Fq) -> Fq {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.add(&self.field.mul(&acc, at), c);
        }
        acc
    }
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test over `F_q`, `q = p^k`: a polynomial `f` of
/// degree `d >= 1` is irreducible iff `f` divides `x^(q^d) - x` and
/// `gcd(f, x^(q^(d/l)) - x) = 1` for every prime `l` dividing `d`.
///
/// Frobenius powers are computed iteratively, so the only exponent ever
/// raised to is `q` itself.
pub fn is_irreducible(f: &FieldPoly) -> Result<bool> {
    let Some(d) = f.degree() else {
        return Err(Error::ConstantPolynomial);
    };
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let field = f.field();
    let q = field.order();
    let x = FieldPoly::x(field).rem(f)?;

    // frob[j] = x^(q^j) mod f.
    let mut frob = x.clone();
    let mut stages = vec![x.clone()];
    for _ in 0..d {
        frob = frob.powmod(q, f)?;
        stages.push(frob.clone());
    }
    if stages[d] != x {
        return Ok(false);
    }
    for l in prime_factors(d) {
        let diff = stages[d / l].sub(&x)?;
        let g = f.gcd(&diff)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether the separable linearized polynomial with coefficients
/// `l_coeffs[i]` at `y^(p^i)` splits completely over its coefficient field,
/// i.e. divides `y^|K| - y`.
///
/// Requires a nonzero constant coefficient (which makes the polynomial
/// squarefree).
pub fn splits_in_field(field: &FiniteField, l_coeffs: &[Fq]) -> Result<bool> {
    if l_coeffs.is_empty() || l_coeffs[0].is_zero() {
        return Err(Error::AlphaZero);
    }
    let linearized = linearized_poly(field, l_coeffs)?;
    let x = FieldPoly::x(field);
    let frob = x.powmod(field.order(), &linearized)?;
    Ok(frob == x.rem(&linearized)?)
}

/// Expands linearized coefficients `(alpha_0, ..., alpha_n)` into the dense
/// polynomial `sum alpha_i y^(p^i)`.
pub fn linearized_poly(field: &FiniteField, l_coeffs: &[Fq]) -> Result<FieldPoly> {
    if l_coeffs.is_empty() {
        return Err(Error::AlphaZero);
    }
    let n = l_coeffs.len() - 1;
    let top = (field.p() as usize).pow(n as u32);
    let mut coeffs = vec![field.zero(); top + 1];
    for (i, alpha) in l_coeffs.iter().enumerate() {
        let e = (field.p() as usize).pow(i as u32);
        coeffs[e] = field.add(&coeffs[e], alpha);
    }
    Ok(FieldPoly::new(field, coeffs))
}
