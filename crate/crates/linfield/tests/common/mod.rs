//! Shared fixtures for the integration and acceptance suites: the worked
//! example specs and a deterministic random-spec generator.
#![allow(dead_code)]

use linfield::model::{build_spec, FieldSpec};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Degree-8 field with three rational denominator places and two simple
/// numerator zeros (`n0 = -1`, genus 14).
pub fn octic_spec() -> FieldSpec {
    build_spec(2, 3, &[(1, 1), (1, 1), (1, 1)], &[(1, 1), (1, 1)]).unwrap()
}

/// Degree-4 field with a ramified infinite place (`n0 = 3`, genus 12).
pub fn quartic_spec() -> FieldSpec {
    build_spec(2, 2, &[(1, 1), (1, 1), (1, 1)], &[(2, 1), (2, 1), (1, 2)]).unwrap()
}

/// Degree-2 field with a degree-2 denominator factor (genus 3).
pub fn mixed_degree_spec() -> FieldSpec {
    build_spec(2, 1, &[(1, 1), (1, 1), (1, 2)], &[]).unwrap()
}

/// Constraints for the random sweep generator.
#[derive(Debug, Clone)]
pub struct SweepOptions {
    /// Admissible `(p, n)` pairs.
    pub prime_powers: Vec<(i64, u32)>,
    pub max_factors: usize,
    pub max_pole_mult: i64,
    pub max_degree: i64,
    /// Require at least this many degree-one places in `I`.
    pub min_degree_one: usize,
    /// Reject specs with genus above this bound (`None` = unbounded).
    pub max_genus: Option<i64>,
    /// Reject genus-zero specs.
    pub require_positive_genus: bool,
}

impl SweepOptions {
    /// `p in {2,3,5}`, `p^n <= 16`, up to 3 factors per side, `n_i <= 10`,
    /// `d_i <= 3`.
    pub fn broad() -> SweepOptions {
        SweepOptions {
            prime_powers: vec![(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1)],
            max_factors: 3,
            max_pole_mult: 10,
            max_degree: 3,
            min_degree_one: 1,
            max_genus: None,
            require_positive_genus: false,
        }
    }

    /// `p^n <= 9` with enough rational places for multi-place queries.
    pub fn multi_place(t: usize, max_genus: i64) -> SweepOptions {
        SweepOptions {
            prime_powers: vec![(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)],
            max_factors: 3,
            max_pole_mult: 10,
            max_degree: 3,
            min_degree_one: t,
            max_genus: Some(max_genus),
            require_positive_genus: true,
        }
    }
}

/// Draws one valid spec satisfying the options, by rejection.
pub fn random_spec(rng: &mut StdRng, opts: &SweepOptions) -> FieldSpec {
    loop {
        let (p, n) = opts.prime_powers[rng.gen_range(0..opts.prime_powers.len())];
        let s = rng.gen_range(0..=opts.max_factors);
        let r = rng.gen_range(0..=opts.max_factors);
        if s == 0 && r == 0 {
            continue;
        }
        let mut poles = Vec::with_capacity(s);
        for _ in 0..s {
            let mult = loop {
                let c = rng.gen_range(1..=opts.max_pole_mult);
                if c % p != 0 {
                    break c;
                }
            };
            let deg = rng.gen_range(1..=opts.max_degree);
            poles.push((mult, deg));
        }
        let mut zeros = Vec::with_capacity(r);
        for _ in 0..r {
            zeros.push((rng.gen_range(1..=5), rng.gen_range(1..=opts.max_degree)));
        }
        let Ok(spec) = build_spec(p, n, &poles, &zeros) else {
            continue;
        };
        if spec.degree_one_pole_indices().len() < opts.min_degree_one {
            continue;
        }
        if let Some(cap) = opts.max_genus {
            if spec.genus() > cap {
                continue;
            }
        }
        if opts.require_positive_genus && spec.genus() == 0 {
            continue;
        }
        return spec;
    }
}

/// Deterministic broad sweep: `count` specs drawn from the given seed.
pub fn sweep_specs(seed: u64, count: usize) -> Vec<FieldSpec> {
    let mut rng = StdRng::seed_from_u64(seed);
    let opts = SweepOptions::broad();
    (0..count).map(|_| random_spec(&mut rng, &opts)).collect()
}

/// Random `lambda` values coprime to `p`, for independence checks.
pub fn random_coprime_lambdas(rng: &mut StdRng, p: i64, count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let candidate = rng.gen_range(-60i64..=60);
        if candidate != 0 && candidate % p != 0 {
            out.push(candidate);
        }
    }
    out
}
