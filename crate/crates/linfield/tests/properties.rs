//! Property tests for the arithmetic identities and structural invariants
//! that hold on every input, not just on generated specs.

mod common;

use common::{mixed_degree_spec, octic_spec, quartic_spec};
use linfield::arith::{ceil_div, floor_div, floor_sum, floor_sum_closed, gcd};
use linfield::model::{divisor_of_witness, restriction, Divisor, PlaceId, WitnessExpr};
use linfield::multi_place::lub;
use linfield::riemann_roch::rr_dimension;
use proptest::prelude::*;

fn arb_witness(pole_idx: Vec<usize>, zero_idx: Vec<usize>) -> impl Strategy<Value = WitnessExpr> {
    let denoms = proptest::collection::vec(-6i64..=6, pole_idx.len());
    let numers = proptest::collection::vec(-6i64..=6, zero_idx.len());
    (-8i64..=8, -4i64..=4, denoms, numers).prop_map(move |(y_exp, ratio_exp, ds, ns)| {
        let mut w = WitnessExpr { y_exp, ratio_exp, ..Default::default() };
        for (&i, &e) in pole_idx.iter().zip(&ds) {
            if e != 0 {
                w.denom_exp.insert(i, e);
            }
        }
        for (&j, &e) in zero_idx.iter().zip(&ns) {
            if e != 0 {
                w.numer_exp.insert(j, e);
            }
        }
        w
    })
}

proptest! {
    #[test]
    fn floor_of_negation_is_negated_ceiling(a in -10_000i128..10_000, b in 1i128..500) {
        prop_assert_eq!(floor_div(-a, b), -ceil_div(a, b));
    }

    #[test]
    fn ceiling_minus_floor_is_divisibility_indicator(a in -10_000i128..10_000, b in 1i128..500) {
        let divides = a % b == 0;
        prop_assert_eq!(ceil_div(a, b) - floor_div(a, b), i128::from(!divides));
    }

    #[test]
    fn floor_sum_closed_form(a in 1i128..=500, b in 1i128..=120) {
        prop_assert_eq!(floor_sum(a, b), floor_sum_closed(a, b));
        prop_assert_eq!((a - 1) * (b - 1) % 2, (gcd(a, b) - 1) % 2);
    }

    #[test]
    fn witness_divisor_is_additive(
        w1 in arb_witness(vec![1, 2, 3], vec![0, 1, 2]),
        w2 in arb_witness(vec![1, 3], vec![1, 2]),
    ) {
        let spec = octic_spec();
        let lhs = divisor_of_witness(&spec, &w1.combined(&w2)).unwrap();
        let rhs = divisor_of_witness(&spec, &w1)
            .unwrap()
            .plus(&divisor_of_witness(&spec, &w2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dimension_is_monotone_with_unit_jumps(
        a in -6i64..=40,
        b in -6i64..=40,
        bump in 0usize..2,
    ) {
        let spec = quartic_spec();
        let coeffs = [(0usize, a), (1usize, b)];
        let mut bumped = coeffs;
        bumped[bump].1 += 1;
        let low = rr_dimension(&spec, &coeffs).unwrap();
        let high = rr_dimension(&spec, &bumped).unwrap();
        prop_assert!(high == low || high == low + 1);
    }

    #[test]
    fn restriction_floors_each_coefficient(c in -64i64..=64) {
        let spec = mixed_degree_spec();
        let mut d = Divisor::new();
        d.add_term(PlaceId::Ramified(1), c);
        let restricted = restriction(&spec, &d).unwrap();
        let expected = floor_div(c as i128, spec.q_pow() as i128) as i64;
        prop_assert_eq!(restricted.get(&1).copied().unwrap_or(0), expected);
    }

    #[test]
    fn lub_bounds_every_input(rows in proptest::collection::vec(
        proptest::collection::vec(0i64..50, 3), 1..6,
    )) {
        let top = lub(&rows).unwrap();
        for row in &rows {
            prop_assert!(row.iter().zip(&top).all(|(&a, &b)| a <= b));
        }
        // Every coordinate of the bound is attained by some row.
        for k in 0..3 {
            prop_assert!(rows.iter().any(|row| row[k] == top[k]));
        }
    }
}
