//! When every denominator multiplicity is 1 (separable denominator), the
//! general gap/semigroup/minimal-set formulas collapse to short closed
//! shapes.  These tests pin the collapsed shapes, computed independently
//! here, against the general machinery.

mod common;

use linfield::arith::ceil_div;
use linfield::model::{build_spec, FieldSpec};
use linfield::multi_place::gamma;
use linfield::riemann_roch::gap_set_oracle;
use linfield::single_place::{
    frobenius, gap_set, generated_membership_table, multiplicity, semigroup_generators,
};

fn degree_sum(spec: &FieldSpec) -> i64 {
    (1..=spec.pole_factor_count()).map(|i| spec.pole_degree(i).unwrap()).sum()
}

/// Separable denominator, no pole at infinity (`n0 <= 0`): the gaps at a
/// rational `Q_l` are `j p^n + i` with `0 <= j <= sum(d_k) - 2`, the
/// semigroup is everything from `(sum(d_k) - 1) p^n` on plus the multiples
/// of `p^n`, and the pair tuples share `i` with `j`-sum `sum_{k>t} d_k`.
#[test]
fn nonpositive_infinity_shape() {
    // q = 4, degrees 1,1,2, n0 = -4, genus 9.
    let spec = build_spec(2, 2, &[(1, 1), (1, 1), (1, 2)], &[]).unwrap();
    let q = spec.q_pow();
    let d_sum = degree_sum(&spec);
    assert_eq!(spec.genus(), (q - 1) * (2 * d_sum - 2) / 2);

    let mut expected_gaps = Vec::new();
    for i in 1..q {
        for j in 0..=(d_sum - 2) {
            expected_gaps.push(j * q + i);
        }
    }
    expected_gaps.sort_unstable();
    for l in [1usize, 2] {
        assert_eq!(gap_set(&spec, l, -1).unwrap().elements(), expected_gaps.as_slice());
        assert_eq!(multiplicity(&spec, l).unwrap(), q);
        assert_eq!(frobenius(&spec, l).unwrap(), (d_sum - 1) * q - 1);

        // Semigroup: multiples of q together with everything from
        // (d_sum - 1) q on.
        let gens = semigroup_generators(&spec, l).unwrap();
        let bound = 2 * d_sum * q;
        let table = generated_membership_table(&gens, bound);
        for v in 0..=bound {
            let expected = v % q == 0 || v >= (d_sum - 1) * q;
            assert_eq!(table[v as usize], expected, "v={v}");
        }
    }

    // Pair minimal set: both coordinates j q + i with j-sums d_3 = 2.
    let mut expected_pairs = Vec::new();
    for i in 1..q {
        for j1 in 0..=2 {
            expected_pairs.push(vec![j1 * q + i, (2 - j1) * q + i]);
        }
    }
    expected_pairs.sort();
    assert_eq!(gamma(&spec, &[1, 2], 1).unwrap().value_rows(), expected_pairs);
}

/// Separable denominator with a pole at infinity (`n0 > 0`): at the
/// infinite place the gaps are `j p^n + i n0` with
/// `ceil(-i n0 / p^n) <= j <= sum(d_k) - 1`, and at a finite rational
/// place `j p^n + i` with `0 <= j <= sum(d_k) + ceil(i n0 / p^n) - 2`.
#[test]
fn positive_infinity_shapes() {
    // q = 3, degrees 1,2, n0 = 4, genus 9.
    let spec = build_spec(3, 1, &[(1, 1), (1, 2)], &[(7, 1)]).unwrap();
    let q = spec.q_pow();
    let n0 = spec.n0();
    assert_eq!(n0, 4);
    let d_sum = degree_sum(&spec);

    // Infinite place.
    let mut expected = Vec::new();
    for i in 1..q {
        let lo = ceil_div((-i * n0) as i128, q as i128) as i64;
        for j in lo..=(d_sum - 1) {
            expected.push(j * q + i * n0);
        }
    }
    expected.sort_unstable();
    expected.dedup();
    assert_eq!(gap_set(&spec, 0, -1).unwrap().elements(), expected.as_slice());
    assert_eq!(gap_set_oracle(&spec, 0).unwrap(), expected);
    assert_eq!(frobenius(&spec, 0).unwrap(), (d_sum + n0 - 1) * q - n0);
    assert_eq!(multiplicity(&spec, 0).unwrap(), q);

    // Semigroup at infinity: generated by q and q*d_sum + i*n0.
    let mut expected_gens = vec![q];
    for i in 1..q {
        expected_gens.push(q * d_sum + i * n0);
    }
    expected_gens.sort_unstable();
    assert_eq!(semigroup_generators(&spec, 0).unwrap(), expected_gens);

    // Finite rational place.
    let mut expected = Vec::new();
    for i in 1..q {
        for j in 0..=(d_sum + ceil_div((i * n0) as i128, q as i128) as i64 - 2) {
            expected.push(j * q + i);
        }
    }
    expected.sort_unstable();
    assert_eq!(gap_set(&spec, 1, -1).unwrap().elements(), expected.as_slice());
    assert_eq!(frobenius(&spec, 1).unwrap(), (d_sum + n0 - n0 / q - 1) * q - 1);
}

/// No finite poles at all: the semigroup at infinity is generated by `p^n`
/// and `n0`, and is always symmetric.
#[test]
fn two_generated_infinity() {
    for (p, n, weight) in [(2i64, 1u32, 5i64), (2, 2, 7), (3, 1, 5), (5, 1, 3)] {
        let spec = build_spec(p, n, &[], &[(weight, 1)]).unwrap();
        let q = spec.q_pow();
        assert_eq!(spec.pole_indices(), &[0]);
        let gens = semigroup_generators(&spec, 0).unwrap();
        let bound = q * weight + q;
        let table = generated_membership_table(&gens, bound);
        let two_gen = generated_membership_table(&[q, weight], bound);
        assert_eq!(table, two_gen, "p={p} n={n} weight={weight}");
        assert!(linfield::single_place::is_symmetric(&spec, 0).unwrap());
        assert_eq!(frobenius(&spec, 0).unwrap(), 2 * spec.genus() - 1, "symmetric Frobenius");
        // Classical two-generator Frobenius number.
        assert_eq!(frobenius(&spec, 0).unwrap(), q * weight - q - weight);
    }
}
