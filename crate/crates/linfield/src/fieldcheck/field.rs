//! Explicit finite fields `F_{p^k}` as quotient rings `F_p[u] / (modulus)`.
//!
//! Elements are coefficient vectors in the power basis of a user-supplied
//! monic irreducible modulus; no canonical modulus is assumed, so the
//! modulus is part of the field identity and mismatched fields are rejected
//! by every binary operation.

use crate::arith::{self, is_prime};
use crate::{Error, Result};

/// An element of a [`FiniteField`]: base-`p` digits in the power basis,
/// little-endian, always exactly `k` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    digits: Vec<i64>,
}

impl Fq {
    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Digits with trailing zeros removed; `[0]` for the zero element.
    /// This is the canonical serialization form.
    pub fn trimmed_digits(&self) -> Vec<i64> {
        let mut out = self.digits.clone();
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }
}

/// `F_{p^k}` presented by a monic irreducible modulus over the prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: i64,
    k: usize,
    /// Monic modulus of degree `k` over `F_p`, low-to-high, length `k + 1`.
    modulus: Vec<i64>,
}

impl FiniteField {
    /// The prime field `F_p`, presented with modulus `u`.
    pub fn prime_field(p: i64) -> Result<FiniteField> {
        if !is_prime(p as i128) {
            return Err(Error::NonPrimeP(p));
        }
        Ok(FiniteField { p, k: 1, modulus: vec![0, 1] })
    }

    /// Builds `F_{p^k}` and verifies the modulus is monic of degree `k` and
    /// irreducible over `F_p`.
    pub fn new(p: i64, k: usize, modulus: &[i64]) -> Result<FiniteField> {
        if !is_prime(p as i128) {
            return Err(Error::NonPrimeP(p));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if modulus.len() != k + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have {} coefficients for degree {k}",
                k + 1
            )));
        }
        let reduced: Vec<i64> = modulus.iter().map(|&c| c.rem_euclid(p)).collect();
        if reduced[k] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        let field = FiniteField { p, k, modulus: reduced.clone() };
        if k >= 2 {
            // Check irreducibility over the prime field.
            let base = FiniteField::prime_field(p)?;
            let lifted = super::poly::FieldPoly::from_prime_coeffs(&base, &reduced)?;
            if !super::poly::is_irreducible(&lifted)? {
                return Err(Error::InvalidField("modulus is reducible".into()));
            }
        }
        Ok(field)
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// `p^k` as a u128 (used as a Frobenius exponent).
    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.k as u32)
    }

    pub fn zero(&self) -> Fq {
        Fq { digits: vec![0; self.k] }
    }

    pub fn one(&self) -> Fq {
        let mut digits = vec![0; self.k];
        digits[0] = 1;
        Fq { digits }
    }

    /// Element from little-endian base-`p` digits; at most `k` of them.
    pub fn element(&self, digits: &[i64]) -> Result<Fq> {
        if digits.len() > self.k {
            return Err(Error::InvalidField(format!(
                "element has {} digits but the field has degree {}",
                digits.len(),
                self.k
            )));
        }
        let mut out = vec![0; self.k];
        for (i, &d) in digits.iter().enumerate() {
            out[i] = d.rem_euclid(self.p);
        }
        Ok(Fq { digits: out })
    }

    pub fn add(&self, a: &Fq, b: &Fq) -> Fq {
        let digits =
            a.digits.iter().zip(&b.digits).map(|(&x, &y)| (x + y).rem_euclid(self.p)).collect();
        Fq { digits }
    }

    pub fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        let digits =
            a.digits.iter().zip(&b.digits).map(|(&x, &y)| (x - y).rem_euclid(self.p)).collect();
        Fq { digits }
    }

    pub fn neg(&self, a: &Fq) -> Fq {
        Fq { digits: a.digits.iter().map(|&x| (-x).rem_euclid(self.p)).collect() }
    }

    pub fn scalar_mul(&self, c: i64, a: &Fq) -> Fq {
        let c = c.rem_euclid(self.p);
        Fq { digits: a.digits.iter().map(|&x| (x * c).rem_euclid(self.p)).collect() }
    }

    pub fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        // Schoolbook product then reduction by the monic modulus.
        let mut prod = vec![0i64; 2 * self.k - 1];
        for (i, &x) in a.digits.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.digits.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y).rem_euclid(self.p);
            }
        }
        for top in (self.k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (offset, &m) in self.modulus[..self.k].iter().enumerate() {
                let idx = top - self.k + offset;
                prod[idx] = (prod[idx] - c * m).rem_euclid(self.p);
            }
        }
        prod.truncate(self.k);
        Fq { digits: prod }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `F_p[u]`.  Errors on zero.
    pub fn inv(&self, a: &Fq) -> Result<Fq> {
        if a.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        // Bezout over F_p[u]: old_r, r start as (a, modulus).
        let mut old_r = a.digits.clone();
        let mut r = self.modulus.clone();
        let mut old_s = vec![1i64];
        let mut s = vec![0i64];
        while !poly_is_zero(&r) {
            let (q, rem) = prime_divmod(self.p, &old_r, &r);
            let qs = prime_mul(self.p, &q, &s);
            let new_s = prime_sub(self.p, &old_s, &qs);
            old_r = r;
            r = rem;
            old_s = s;
            s = new_s;
        }
        // old_r is a nonzero constant gcd (modulus irreducible).
        let c = *old_r.first().ok_or(Error::DivisionByZeroPoly)?;
        debug_assert!(poly_degree(&old_r).unwrap_or(0) == 0);
        let c_inv =
            arith::mod_inverse(c as i128, self.p as i128).ok_or(Error::DivisionByZeroPoly)? as i64;
        let mut digits: Vec<i64> = old_s.iter().map(|&x| (x * c_inv).rem_euclid(self.p)).collect();
        digits.resize(self.k, 0);
        Ok(Fq { digits })
    }

    pub fn pow(&self, a: &Fq, mut e: u128) -> Fq {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Every element of the field, in lexicographic digit order.  Intended
    /// for desk-scale exhaustive checks.
    pub fn elements(&self) -> Vec<Fq> {
        let total = self.order();
        let mut out = Vec::with_capacity(total as usize);
        let mut digits = vec![0i64; self.k];
        loop {
            out.push(Fq { digits: digits.clone() });
            let mut pos = 0;
            loop {
                if pos == self.k {
                    return out;
                }
                digits[pos] += 1;
                if digits[pos] < self.p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }
}

// Dense polynomial helpers over F_p, used only for the inverse above.

fn poly_is_zero(a: &[i64]) -> bool {
    a.iter().all(|&c| c == 0)
}

fn poly_degree(a: &[i64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn prime_sub(p: i64, a: &[i64], b: &[i64]) -> Vec<i64> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x - y).rem_euclid(p)
        })
        .collect()
}

fn prime_mul(p: i64, a: &[i64], b: &[i64]) -> Vec<i64> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![0];
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y).rem_euclid(p);
        }
    }
    out
}

fn prime_divmod(p: i64, a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let db = poly_degree(b).expect("division by zero polynomial");
    let lead_inv =
        arith::mod_inverse(b[db] as i128, p as i128).expect("unit leading coefficient") as i64;
    let mut rem = a.to_vec();
    let mut quot = vec![0i64; a.len().saturating_sub(db) + 1];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let c = (rem[dr] * lead_inv).rem_euclid(p);
        quot[dr - db] = c;
        for (offset, &m) in b.iter().enumerate().take(db + 1) {
            rem[dr - db + offset] = (rem[dr - db + offset] - c * m).rem_euclid(p);
        }
    }
    (quot, rem)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FiniteField {
        FiniteField::new(2, 3, &[1, 1, 0, 1]).unwrap()
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(FiniteField::new(6, 1, &[0, 1]), Err(Error::NonPrimeP(6))));
        assert!(matches!(
            FiniteField::new(2, 2, &[1, 0, 1]), // (u+1)^2
            Err(Error::InvalidField(_))
        ));
        assert!(matches!(FiniteField::new(2, 2, &[1, 1]), Err(Error::InvalidField(_))));
        assert!(FiniteField::new(2, 2, &[1, 1, 1]).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive_in_f8() {
        let f = f8();
        let els = f.elements();
        assert_eq!(els.len(), 8);
        for a in &els {
            assert_eq!(f.add(a, &f.zero()), *a);
            assert_eq!(f.mul(a, &f.one()), *a);
            assert!(f.sub(a, a).is_zero());
            if !a.is_zero() {
                let inv = f.inv(a).unwrap();
                assert_eq!(f.mul(a, &inv), f.one());
            }
            for b in &els {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in &els {
                    let left = f.mul(a, &f.add(b, c));
                    let right = f.add(&f.mul(a, b), &f.mul(a, c));
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_the_field() {
        let f = f8();
        for a in f.elements() {
            assert_eq!(f.pow(&a, 8), a);
        }
        // The generator u has multiplicative order 7.
        let u = f.element(&[0, 1]).unwrap();
        assert_eq!(f.pow(&u, 7), f.one());
        assert_ne!(f.pow(&u, 1), f.one());
    }

    #[test]
    fn pow_matches_naive_products() {
        let f = FiniteField::new(3, 2, &[1, 0, 1]).unwrap();
        for a in f.elements() {
            let mut acc = f.one();
            for e in 0..=40u128 {
                assert_eq!(f.pow(&a, e), acc, "e={e}");
                acc = f.mul(&acc, &a);
            }
        }
    }

    #[test]
    fn element_digit_handling() {
        let f = f8();
        let a = f.element(&[5, -1]).unwrap();
        assert_eq!(a.digits(), &[1, 1, 0]);
        assert_eq!(a.trimmed_digits(), vec![1, 1]);
        assert_eq!(f.zero().trimmed_digits(), vec![0]);
        assert!(f.element(&[0, 0, 0, 1]).is_err());
    }
}
