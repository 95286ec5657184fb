use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use schurq::arith::serial::{ratfn_from_json, ratfn_to_json};
use schurq::arith::{int, rat, Field, QContext, RationalFn};
use schurq::formulas::{column_strict_truncation_check, p_multisum, q_direct};
use schurq::linalg::SkewMatrix;
use schurq::tableaux::{q_tableau_sum, StrictPartition};

fn small_poly() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-6i64..=6, 1..5)
}

fn ratfn() -> impl Strategy<Value = RationalFn> {
    (small_poly(), small_poly(), -2i64..=2).prop_filter_map("nonzero denominator", |(n, d, shift)| {
        let den = RationalFn::from_int_coeffs(&d);
        let f = RationalFn::from_int_coeffs(&n).checked_div(&den).ok()?;
        Some(f * RationalFn::s().powi(shift).unwrap())
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in ratfn(), b in ratfn(), c in ratfn()) {
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!((a.clone() + &b) + &c, a.clone() + &(b.clone() + &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + a.clone() * &c);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert!((a.clone() - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfn(), b in ratfn(), s0 in rational()) {
        let (Ok(ea), Ok(eb)) = (a.eval(&s0), b.eval(&s0)) else { return Ok(()) };
        prop_assert_eq!((a.clone() * &b).eval(&s0).unwrap(), &ea * &eb);
        prop_assert_eq!((a.clone() + &b).eval(&s0).unwrap(), ea + eb);
    }

    #[test]
    fn canonical_form_is_idempotent(a in ratfn()) {
        let again = RationalFn::from_parts(&a.num(), &a.den()).unwrap();
        prop_assert_eq!(&again, &a);
        let (back, r) = ratfn_from_json(&ratfn_to_json(&a, 2)).unwrap();
        prop_assert_eq!(back, a);
        prop_assert_eq!(r, 2);
    }

    #[test]
    fn series_truncations_are_consistent(a in ratfn(), n in 0i64..6) {
        if let Ok(short) = a.series(n) {
            prop_assert_eq!(a.series(n + 3).unwrap().truncate(n), short);
        }
    }

    #[test]
    fn pfaffian_forms_agree(v in proptest::collection::vec(rational(), 36), i in 0usize..6, j in 0usize..6) {
        let s = SkewMatrix::from_upper(6, |a, b| Ok(v[a * 6 + b].clone())).unwrap();
        let pf = s.pfaffian_elimination().unwrap();
        prop_assert_eq!(&pf, &s.pfaffian_expansion().unwrap());
        prop_assert_eq!(pf.square(), s.to_matrix().det().unwrap());
        if i != j {
            // simultaneous transposition of rows and columns flips the sign
            let mut idx: Vec<usize> = (0..6).collect();
            idx.swap(i, j);
            prop_assert_eq!(s.select(&idx).pfaffian().unwrap(), -pf);
        }
    }

    #[test]
    fn p_is_antisymmetric_in_its_points(xs in proptest::collection::vec(rational(), 3), n in 2usize..5) {
        let ctx = QContext::numeric(rat(1, 3), 1).unwrap();
        let Ok(v) = p_multisum(&xs, n, &ctx) else { return Ok(()) };
        let mut swapped = xs.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(p_multisum(&swapped, n, &ctx).unwrap(), -v.clone());
        let cycled = vec![xs[1].clone(), xs[2].clone(), xs[0].clone()];
        prop_assert_eq!(p_multisum(&cycled, n, &ctx).unwrap(), v);
    }
}

#[test]
fn tableau_sum_matches_direct_definition() {
    let points = [int(2), rat(1, 3), rat(-5, 2), rat(7, 4)];
    for lambda in StrictPartition::all(8, 3).into_iter().filter(|l| l.size() <= 8) {
        for n in 1..=4 {
            let x = &points[..n];
            let direct = q_direct(lambda.parts(), x).unwrap();
            assert_eq!(q_tableau_sum(&lambda, x), direct, "{lambda} n={n}");
        }
    }
}

#[test]
fn column_strict_series_stabilizes_to_degree_ten() {
    for lambda in StrictPartition::all(8, 3).into_iter().filter(|l| l.size() <= 8) {
        assert!(column_strict_truncation_check(&lambda, 11).unwrap(), "{lambda}");
    }
}
