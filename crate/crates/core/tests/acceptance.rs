//! Acceptance suite: one PASS/FAIL line per criterion, each run on its full
//! grid. Exits nonzero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use schurq::arith::{int, rat, Field, QContext, RationalFn};
use schurq::crosscheck::{hyperoctahedral_grid, run_grid, Grid, Method};
use schurq::formulas::{
    kawanaka_truncation_check, column_strict_truncation_check, kbf_check, odd_staircase_count, odd_staircase_forms,
    p_multisum, plain_staircase_via_schur, q_one, q_staircase, PointSet, QOneMethod, StaircaseKind,
};
use schurq::kernels::{
    gram_matrix, kif_check, ktilde_alternating, ktilde_quotient, ktilde_sum, kernel_quotient, kernel_sum,
    multikernel_det, multikernel_mk_det, multikernel_mk_sum, multikernel_pfaff_sqrt, multikernel_pfaff_xi,
    multikernel_tilde_det, multikernel_tilde_pfaff_w, multikernel_tilde_pfaff_xi, q_one_multikernel,
    theorem_pkt_check, ClassicalKernelForm, OrthoSystem,
};
use schurq::linalg::{
    check_spa_spb, minor_summation_check, schlosser_det, Matrix, SchlosserKind, SchlosserParams, SkewMatrix,
};
use schurq::qseries::{abel_orthogonality, c_norm, factorial};
use schurq::tableaux::{count_marked, gf_marked, StrictPartition};

type Outcome = Result<String, String>;

const SAMPLES: u32 = 25;

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, max_global_rejects: 100_000, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=15).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// `q` away from the roots of unity that make norms vanish.
fn q_value() -> impl Strategy<Value = BigRational> {
    (1i64..=9, 2i64..=11).prop_filter("q < 1", |(n, d)| n < d).prop_map(|(n, d)| rat(n, d))
}

fn distinct(v: &[BigRational]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

/// Treat singular configurations as rejected samples; everything else that
/// goes wrong is a failure.
fn sample<T>(r: schurq::Result<T>) -> Result<T, TestCaseError> {
    match r {
        Ok(v) => Ok(v),
        Err(e @ (schurq::Error::DivisionByZero | schurq::Error::Singular(..) | schurq::Error::Pole(_))) => {
            Err(TestCaseError::reject(e.to_string()))
        }
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

fn property<S: Strategy>(
    label: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    runner(SAMPLES).run(&strategy, test).map_err(|e| format!("{label}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_q(lambda: &StrictPartition, n: usize) -> RationalFn {
    RationalFn::from_laurent(&gf_marked(lambda, n + 1))
}

fn grand_crosscheck() -> Outcome {
    let grid = Grid::default();
    let records = run_grid(&grid, &Method::grand());
    let bad: Vec<String> = records
        .iter()
        .filter(|r| !r.ok)
        .map(|r| format!("{} n={} {}: {:?}", r.lambda, r.n, r.method, r.value))
        .collect();
    ensure(bad.is_empty(), || format!("{} mismatches, first: {}", bad.len(), bad[0]))?;
    let cells = grid.cells().len();
    Ok(format!("{} values over {cells} (λ, n) cells agree with the tableau oracle", records.len()))
}

fn counting() -> Outcome {
    for (parts, n, expect) in [(vec![1], 1, 2), (vec![2, 1], 2, 8), (vec![3, 1], 4, 320)] {
        let l = StrictPartition::new(parts).unwrap();
        for m in QOneMethod::ALL.into_iter().filter(|m| m.applies_to(&l)) {
            let v = q_one(&l, n, m).map_err(|e| e.to_string())?;
            ensure(v == BigInt::from(expect), || format!("spot {l}(1^{n}) via {m}: {v} ≠ {expect}"))?;
        }
    }
    let mut checked = 0;
    for l in StrictPartition::all(6, 3) {
        for n in 0..=6 {
            let expect = count_marked(&l, n);
            for m in QOneMethod::ALL.into_iter().filter(|m| m.applies_to(&l)) {
                let v = q_one(&l, n, m).map_err(|e| format!("{l} n={n} {m}: {e}"))?;
                ensure(v == expect, || format!("{l} n={n} {m}: {v} ≠ {expect}"))?;
                checked += 1;
            }
            if l.len() % 2 == 0 {
                for form in [ClassicalKernelForm::Det, ClassicalKernelForm::PfaffSqrt] {
                    let v = q_one_multikernel(&l, n, form).map_err(|e| format!("{l} n={n} {form:?}: {e}"))?;
                    ensure(v == expect, || format!("{l} n={n} {form:?}: {v} ≠ {expect}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("spot values hold; {checked} counts equal the tableau counts"))
}

fn staircases() -> Outcome {
    let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
    let half = QContext::<RationalFn>::symbolic(2).unwrap();
    let mut checked = 0;
    for m in 1..=3 {
        for n in m - 1..=6 {
            let err = |what: &str, e: schurq::Error| format!("{what} m={m} n={n}: {e}");
            for kind in [StaircaseKind::Plain, StaircaseKind::Odd, StaircaseKind::Even] {
                let l = kind.partition(m).unwrap();
                let closed = q_staircase(kind, m, n, &ctx).map_err(|e| err(&kind.to_string(), e))?;
                let general = RationalFn::from_laurent(&Method::Multisum.evaluate(&l, n).map_err(|e| err("multisum", e))?);
                ensure(closed == general, || format!("{kind} m={m} n={n}: closed form ≠ multisum"))?;
                ensure(closed == oracle_q(&l, n), || format!("{kind} m={m} n={n}: closed form ≠ tableaux"))?;
                checked += 1;
            }
            let plain = plain_staircase_via_schur(m, n, &ctx).map_err(|e| err("plain via Schur", e))?;
            let l = StaircaseKind::Plain.partition(m).unwrap();
            ensure(plain == oracle_q(&l, n), || format!("plain via Schur m={m} n={n}"))?;

            let pts = PointSet::monomials(&StaircaseKind::Half.half_exponents(m), 2, &half).map_err(|e| err("half", e))?;
            let general = p_multisum(pts.xs(), n, &half).map_err(|e| err("half multisum", e))?;
            let closed = q_staircase(StaircaseKind::Half, m, n, &half).map_err(|e| err("half", e))?;
            ensure(closed == general, || format!("half staircase m={m} n={n}"))?;

            let odd_pts: Vec<RationalFn> = (1..=m as i64).map(|i| ctx.q_pow(2 * i - 1)).collect();
            let general = p_multisum(&odd_pts, n, &ctx).map_err(|e| err("odd multisum", e))?;
            for (k, v) in odd_staircase_forms(n, m, &ctx).map_err(|e| err("odd forms", e))?.iter().enumerate() {
                ensure(*v == general, || format!("odd staircase form {k} m={m} n={n}"))?;
            }

            let l = StaircaseKind::Odd.partition(m).unwrap();
            let count = odd_staircase_count(m, n);
            ensure(count == count_marked(&l, n), || format!("odd count m={m} n={n} ≠ tableaux"))?;
            let qc = q_one(&l, n, QOneMethod::Qc).map_err(|e| err("qc", e))?;
            ensure(count == qc, || format!("odd count m={m} n={n} ≠ qc"))?;
            checked += 7;
        }
    }
    Ok(format!("{checked} closed-form values match the general methods"))
}

fn kawanaka() -> Outcome {
    let mut shapes = 0;
    for l in StrictPartition::all(8, 3).into_iter().filter(|l| l.size() <= 8) {
        for n in 0..=5 {
            let ok = kawanaka_truncation_check(&l, n).map_err(|e| format!("{l} n={n}: {e}"))?;
            ensure(ok, || format!("marked truncation fails for {l}, n={n}"))?;
            let ok = column_strict_truncation_check(&l, n).map_err(|e| format!("{l} n={n}: {e}"))?;
            ensure(ok, || format!("column-strict truncation fails for {l}, n={n}"))?;
        }
        shapes += 1;
    }
    for m in 1..=2 {
        let ok = kbf_check(m, 8).map_err(|e| format!("series identity m={m}: {e}"))?;
        ensure(ok, || format!("series identity fails for m={m} at degree 8"))?;
    }
    Ok(format!("truncations hold for {shapes} shapes, n ≤ 5; series identity to degree 8 for m ≤ 2"))
}

/// `x = (t² − 1)²/t²` with `√x = (t² − 1)/t` and `ξ = t²`, so `x = ξ + 1/ξ − 2`.
fn cdl_point(t: &BigRational) -> (BigRational, BigRational, BigRational) {
    let xi = t * t;
    let w = (&xi - int(1)) / t;
    (&w * &w, w, xi)
}

fn kernels() -> Outcome {
    let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
    let g = gram_matrix(5, &ctx).map_err(|e| e.to_string())?;
    for i in 0..=5 {
        for j in 0..=5 {
            let expect = if i == j { c_norm(i, &ctx).map_err(|e| e.to_string())? } else { RationalFn::zero() };
            ensure(g[i][j] == expect, || format!("orthogonality fails at ({i}, {j})"))?;
        }
    }

    let sys = OrthoSystem::ultraspherical(8, &ctx).map_err(|e| e.to_string())?;
    for (x, y) in [(rat(3, 2), rat(-5, 3)), (rat(1, 7), int(4)), (rat(-2, 9), rat(5, 4))] {
        let (x, y) = (RationalFn::constant(x), RationalFn::constant(y));
        for n in 1..=5 {
            let k = kernel_sum(&sys, n, &x, &y).map_err(|e| e.to_string())?;
            ensure(k == kernel_quotient(&sys, n, &x, &y).map_err(|e| e.to_string())?, || format!("kernel n={n}"))?;
            let t = ktilde_sum(&sys, n, &x, &y).map_err(|e| e.to_string())?;
            ensure(t == ktilde_quotient(&sys, n, &x, &y).map_err(|e| e.to_string())?, || format!("ktk quotient n={n}"))?;
            ensure(t == ktilde_alternating(&sys, n, &x, &y).map_err(|e| e.to_string())?, || format!("ktk alternating n={n}"))?;
        }
    }

    // Multikernels at 25 admissible points per (2m, n).
    for size in [2usize, 4] {
        for n in size / 2..=5 {
            let strat = || {
                (q_value(), proptest::collection::vec(nonzero_rational(), size)).prop_filter("admissible", |(_, ts)| {
                    let xs: Vec<BigRational> = ts.iter().map(|t| cdl_point(t).0).collect();
                    let sq: Vec<BigRational> = ts.iter().map(|t| t * t).collect();
                    distinct(&xs) && distinct(&sq) && ts.iter().all(|t| t.abs() != BigRational::one())
                })
            };
            property(&format!("cdl 2m={size} n={n}"), strat(), |(q, ts)| {
                let qctx = QContext::numeric(q, 1).unwrap();
                let sys = sample(OrthoSystem::ultraspherical(n + size + 2, &qctx))?;
                let pts: Vec<_> = ts.iter().map(cdl_point).collect();
                let xs: Vec<BigRational> = pts.iter().map(|p| p.0.clone()).collect();
                let ws: Vec<BigRational> = pts.iter().map(|p| p.1.clone()).collect();
                let xis: Vec<BigRational> = pts.iter().map(|p| p.2.clone()).collect();
                let d = sample(multikernel_det(&sys, n, &xs))?;
                prop_assert_eq!(&d, &sample(multikernel_pfaff_sqrt(&sys, n, &ws))?);
                prop_assert_eq!(&d, &sample(multikernel_pfaff_xi(&sys, n, &xis))?);
                let h = size / 2;
                prop_assert_eq!(&d, &sample(multikernel_mk_det(&sys, n, &xs[..h], &xs[h..]))?);
                prop_assert_eq!(&d, &sample(multikernel_mk_sum(&sys, n, &xs[..h], &xs[h..]))?);
                Ok(())
            })?;
            // the tilde forms need 2m ≤ n + 1
            if n + 1 >= size {
                property(&format!("cdc 2m={size} n={n}"), strat(), |(q, ts)| {
                    let qctx = QContext::numeric(q, 1).unwrap();
                    let sys = sample(OrthoSystem::ultraspherical(n + size + 2, &qctx))?;
                    let xs: Vec<BigRational> = ts.iter().map(|t| t + t.recip()).collect();
                    prop_assume!(distinct(&xs) && xs.iter().all(|x| !x.is_zero()));
                    let d = sample(multikernel_tilde_det(&sys, n, &xs))?;
                    prop_assert_eq!(&d, &sample(multikernel_tilde_pfaff_w(&sys, n, &xs))?);
                    prop_assert_eq!(&d, &sample(multikernel_tilde_pfaff_xi(&sys, n, &ts))?);
                    Ok(())
                })?;
            }
        }
    }

    let mut pkt = 0;
    for m in 1..=3 {
        for n in m - 1..=5 {
            let strat = (q_value(), proptest::collection::vec(nonzero_rational(), m)).prop_filter("admissible", |(_, zs)| {
                let sq: Vec<BigRational> = zs.iter().map(|z| z * z).collect();
                distinct(&sq)
            });
            property(&format!("pkt m={m} n={n}"), strat, |(q, zs)| {
                let qctx = QContext::numeric(q, 1).unwrap();
                prop_assert!(sample(theorem_pkt_check(&zs, n, &qctx))?);
                Ok(())
            })?;
            pkt += 1;
        }
    }

    let mut kif = 0;
    for l in 0..=2 {
        for eps in [0u8, 1] {
            for m in 1..=2 {
                let strat = (q_value(), proptest::collection::vec(nonzero_rational(), m))
                    .prop_filter("distinct squares", |(_, xs)| distinct(&xs.iter().map(|x| x * x).collect::<Vec<_>>()));
                property(&format!("kif l={l} ε={eps} m={m}"), strat, |(q, xs)| {
                    let qctx = QContext::numeric(q, 1).unwrap();
                    prop_assert!(sample(kif_check(&xs, l, eps, &qctx))?);
                    Ok(())
                })?;
                kif += 1;
            }
        }
    }
    Ok(format!(
        "orthogonality i, j ≤ 5; ktk n ≤ 5; cdl/cdc at {SAMPLES} points for 2m ∈ {{2, 4}}, n ≤ 5; pkt on {pkt} (m, n) cells; kif on {kif} cases incl. l = 2"
    ))
}

fn random_skew(dim: usize) -> impl Strategy<Value = SkewMatrix<BigRational>> {
    proptest::collection::vec(rational(), dim * dim).prop_map(move |v| {
        SkewMatrix::from_upper(dim, |i, j| Ok(v[i * dim + j].clone())).unwrap()
    })
}

fn structural() -> Outcome {
    for size in [2usize, 4, 6] {
        let strat = (rational(), proptest::collection::vec(rational(), size));
        property(&format!("spa/spb 2m={size}"), strat, |(t, xs)| {
            prop_assume!(distinct(&xs));
            prop_assert!(sample(check_spa_spb(&xs, &t))?);
            Ok(())
        })?;
    }
    for m in 1..=3usize {
        for kind in [SchlosserKind::Full, SchlosserKind::Degenerate] {
            let strat = (nonzero_rational(), nonzero_rational(), nonzero_rational(), q_value(), proptest::collection::vec(nonzero_rational(), m));
            property(&format!("{kind:?} m={m}"), strat, |(a, b, c, q, xs)| {
                let (l, r) = sample(schlosser_det(kind, &SchlosserParams { a, b, c, q, xs }))?;
                prop_assert_eq!(l, r);
                Ok(())
            })?;
        }
    }
    for (m, n) in [(1usize, 3usize), (2, 4), (2, 5), (3, 6)] {
        let strat = (proptest::collection::vec(rational(), 2 * m * n), random_skew(n));
        property(&format!("minor summation m={m} n={n}"), strat, |(a, b)| {
            let a = Matrix::from_fn(2 * m, n, |i, j| a[i * n + j].clone());
            prop_assert!(sample(minor_summation_check(&a, &b))?);
            Ok(())
        })?;
    }
    for dim in [2usize, 4, 6, 8] {
        property(&format!("pfaffian² = det, dim {dim}"), random_skew(dim), |s| {
            let pf = sample(s.pfaffian_elimination())?;
            prop_assert_eq!(pf.square(), sample(s.to_matrix().det())?);
            prop_assert_eq!(&pf, &sample(s.pfaffian_expansion())?);
            Ok(())
        })?;
    }
    let hyper = hyperoctahedral_grid(&Grid::default()).map_err(|e| e.to_string())?;
    if let Some((l, n, _)) = hyper.iter().find(|(_, _, ok)| !ok) {
        return Err(format!("inversion symmetry fails at {l}, n={n}"));
    }
    Ok(format!(
        "spa/spb, sd/sdd, minor summation at {SAMPLES} samples each; pfaffian² = det to dim 8; inversion symmetry on {} cells",
        hyper.len()
    ))
}

fn abel() -> Outcome {
    for m in 0..=5usize {
        for n in 0..=5usize {
            let v = abel_orthogonality(m, n).map_err(|e| e.to_string())?;
            let expect = if m == n {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                BigRational::new(
                    BigInt::from(sign) * factorial(n as u64 + 1) * factorial(n as u64),
                    BigInt::from(4).pow(n as u32 + 1),
                )
            } else {
                BigRational::zero()
            };
            ensure(v == expect, || format!("({m}, {n}): {v} ≠ {expect}"))?;
        }
    }
    Ok("all 36 pairings match".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("grand crosscheck", grand_crosscheck),
        ("counting", counting),
        ("staircases", staircases),
        ("kawanaka", kawanaka),
        ("kernels", kernels),
        ("structural", structural),
        ("abel", abel),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {} ({name}): PASS — {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL — {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria pass", criteria.len());
}
