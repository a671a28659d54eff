//! Exact integer helpers: floor/ceiling division, gcd, modular inverses and
//! the floor-sum identity used throughout the gap formulas.
//!
//! All divisions here use mathematical floor/ceiling semantics, never
//! truncation: `floor_div(-7, 8) == -1`.  The gap and dimension formulas are
//! dominated by floors of negative quotients, so everything routes through
//! these two functions.

/// Floor of `a / b` toward negative infinity. `b` must be nonzero.
pub fn floor_div(a: i128, b: i128) -> i128 {
    debug_assert!(b != 0);
    let q = a / b;
    let r = a % b;
    if r != 0 && ((r < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

/// Ceiling of `a / b` toward positive infinity. `b` must be nonzero.
pub fn ceil_div(a: i128, b: i128) -> i128 {
    -floor_div(-a, b)
}

/// Greatest common divisor, always nonnegative.
pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended Euclid: returns `(g, u, v)` with `u*a + v*b == g == gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, u, v) = ext_gcd(b, a.rem_euclid(b));
        (g, v, u - a.div_euclid(b) * v)
    }
}

/// Inverse of `a` modulo `modulus` (`modulus >= 1`), in `0..modulus`.
/// Returns `None` when `gcd(a, modulus) != 1`.
pub fn mod_inverse(a: i128, modulus: i128) -> Option<i128> {
    debug_assert!(modulus >= 1);
    let (g, u, _) = ext_gcd(a.rem_euclid(modulus), modulus);
    if g == 1 {
        Some(u.rem_euclid(modulus))
    } else {
        None
    }
}

/// `sum_{k=1}^{b-1} floor(k*a / b)` evaluated directly.
///
/// For positive `a`, `b` this equals `((a-1)(b-1) + gcd(a,b) - 1) / 2`; the
/// closed form is exposed as [`floor_sum_closed`] and the pair is pinned by a
/// unit test over `1 <= a, b <= 200`.
pub fn floor_sum(a: i128, b: i128) -> i128 {
    (1..b).map(|k| floor_div(k * a, b)).sum()
}

/// Closed form `((a-1)(b-1) + gcd(a,b) - 1) / 2` for [`floor_sum`].
pub fn floor_sum_closed(a: i128, b: i128) -> i128 {
    ((a - 1) * (b - 1) + gcd(a, b) - 1) / 2
}

/// Deterministic trial-division primality check; inputs are desk scale.
pub fn is_prime(n: i128) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Converts an `i128` intermediate back to `i64`, or reports overflow.
pub fn narrow(value: i128) -> crate::Result<i64> {
    i64::try_from(value).map_err(|_| crate::Error::Overflow)
}

/// Debug-only self-test hook: when the `LINFIELD_SELFTEST_MUTATION`
/// environment variable is set in a debug build, [`mutated_floor_div`] flips
/// to ceiling division so the `oracle` CLI subcommand can demonstrate that an
/// injected formula defect is caught (exit code 3).  Release builds compile
/// this away.
#[cfg(debug_assertions)]
pub fn mutation_active() -> bool {
    std::env::var_os("LINFIELD_SELFTEST_MUTATION").is_some()
}

#[cfg(not(debug_assertions))]
#[inline]
pub fn mutation_active() -> bool {
    false
}

/// [`floor_div`], unless the debug mutation hook is active (then ceiling).
pub fn mutated_floor_div(a: i128, b: i128) -> i128 {
    if mutation_active() {
        ceil_div(a, b)
    } else {
        floor_div(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_div_rounds_toward_negative_infinity() {
        assert_eq!(floor_div(-7, 8), -1);
        assert_eq!(floor_div(-8, 8), -1);
        assert_eq!(floor_div(-9, 8), -2);
        assert_eq!(floor_div(7, 8), 0);
        assert_eq!(floor_div(8, 8), 1);
        assert_eq!(floor_div(-1, 2), -1);
        assert_eq!(floor_div(0, 5), 0);
    }

    #[test]
    fn ceil_div_rounds_toward_positive_infinity() {
        assert_eq!(ceil_div(-7, 8), 0);
        assert_eq!(ceil_div(7, 8), 1);
        assert_eq!(ceil_div(8, 8), 1);
        assert_eq!(ceil_div(9, 8), 2);
        assert_eq!(ceil_div(-9, 8), -1);
    }

    #[test]
    fn floor_and_ceil_are_negations() {
        for a in -50_i128..50 {
            for b in 1_i128..9 {
                assert_eq!(floor_div(-a, b), -ceil_div(a, b));
                let diff = ceil_div(a, b) - floor_div(a, b);
                assert_eq!(diff, i128::from(a % b != 0));
            }
        }
    }

    #[test]
    fn floor_sum_identity_desk_range() {
        for a in 1_i128..=200 {
            for b in 1_i128..=200 {
                assert_eq!(floor_sum(a, b), floor_sum_closed(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn ext_gcd_bezout() {
        for a in -40_i128..40 {
            for b in -40_i128..40 {
                let (g, u, v) = ext_gcd(a, b);
                assert_eq!(g, gcd(a, b));
                assert_eq!(u * a + v * b, g);
            }
        }
    }

    #[test]
    fn mod_inverse_works_when_coprime() {
        assert_eq!(mod_inverse(3, 8), Some(3));
        assert_eq!(mod_inverse(-3, 4), Some(1));
        assert_eq!(mod_inverse(2, 8), None);
        for m in 2_i128..30 {
            for a in 1..m {
                match mod_inverse(a, m) {
                    Some(inv) => assert_eq!((inv * a).rem_euclid(m), 1),
                    None => assert_ne!(gcd(a, m), 1),
                }
            }
        }
    }

    #[test]
    fn trial_division_primality() {
        let primes: Vec<i128> = (2..100).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![
                2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
                83, 89, 97
            ]
        );
    }
}
