//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line for
//! each, and exits nonzero if any failed.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use motive_shapes::combinatorics::binomial;
use motive_shapes::generators::*;
use motive_shapes::solver::{
    case1_tiles, case2_tiles, exhaustive_tilings, greedy_peel, infer_upper_shape,
    obstruction_divisibility, SolverConfig,
};
use motive_shapes::verify::{verify, Check, Verdict};
use motive_shapes::{Params, Shape, ShapeRatio};
use num_bigint::BigUint;
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in (1..=51).step_by(2) {
        let closed: Shape = weil_transfer_shape(n).map_err(|e| e.to_string())?;
        let oracle: Shape = weil_transfer_shape_by_orbits(n).map_err(|e| e.to_string())?;
        ensure!(
            closed == oracle,
            "closed form and swap orbits differ at N={n}"
        );
        count += 1;
    }
    within(start, Duration::from_secs(1), "oracle sweep")?;
    Ok(format!("{count} degrees N=1..51 in {:?}", start.elapsed()))
}

const TRANSFER_DEGREES: [u64; 6] = [3, 5, 7, 9, 27, 81];

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for n in TRANSFER_DEGREES {
        let d = transfer_decomposition_case1::<BigUint>(n).map_err(|e| e.to_string())?;
        let w: Shape = weil_transfer_shape(n).map_err(|e| e.to_string())?;
        ensure!(
            d.total() == &w,
            "U{{2i}} + (U*A){{2i-1}} total differs at N={n}"
        );
        ensure!(d.len() as u64 == n, "expected N summands at N={n}");
    }
    within(start, Duration::from_secs(1), "case-1 decompositions")?;
    Ok(format!(
        "N in {TRANSFER_DEGREES:?} in {:?}",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    for n in TRANSFER_DEGREES {
        let d = transfer_decomposition_case2::<BigUint>(n).map_err(|e| e.to_string())?;
        let w: Shape = weil_transfer_shape(n).map_err(|e| e.to_string())?;
        ensure!(d.total() == &w, "U{{0..N-1}} total differs at N={n}");
    }
    Ok(format!("N in {TRANSFER_DEGREES:?}"))
}

fn criterion_4() -> Outcome {
    let cfg = SolverConfig::default();
    for n in (3..=27).step_by(2) {
        let r = infer_upper_shape(n, &cfg).map_err(|e| e.to_string())?;
        ensure!(
            r.case1.feasible(),
            "case 1 infeasible at N={n}: {:?}",
            r.case1.failure
        );
        ensure!(
            r.case2.feasible(),
            "case 2 infeasible at N={n}: {:?}",
            r.case2.failure
        );
    }
    let mut timing = String::new();
    for n in [3u64, 9] {
        let start = Instant::now();
        let w: Shape = weil_transfer_shape(n).map_err(|e| e.to_string())?;
        for (label, tiles) in [
            ("{U, U*A}", case1_tiles(n).map_err(|e| e.to_string())?),
            ("{U}", case2_tiles(n).map_err(|e| e.to_string())?),
        ] {
            let all = exhaustive_tilings(&w, &tiles, &cfg).map_err(|e| e.to_string())?;
            ensure!(all.len() == 1, "{label} at N={n}: {} tilings", all.len());
            let greedy = greedy_peel(&w, &tiles).map_err(|e| e.to_string())?;
            ensure!(
                all[0] == greedy,
                "{label} at N={n}: exhaustive and peeled tilings differ"
            );
        }
        if n == 9 {
            within(start, Duration::from_secs(10), "uniqueness at N=9")?;
        }
        timing = format!("{:?}", start.elapsed());
    }
    Ok(format!(
        "both tile sets feasible for odd N=3..27; unique at N=3,9 (N=9 in {timing})"
    ))
}

fn criterion_5() -> Outcome {
    for n in [3u64, 9, 27] {
        let my: Shape = involution_variety_shape(n).map_err(|e| e.to_string())?;
        let count_f = my.count_f();
        ensure!(
            &count_f % big(n) != big(0),
            "countF={count_f} is divisible by N={n}"
        );
        let div = obstruction_divisibility(&my, &case1_tiles(n).map_err(|e| e.to_string())?);
        ensure!(
            !div.possible,
            "divisibility test did not exclude case-1 tiles at N={n}"
        );
        let t = greedy_peel(&my, &case2_tiles(n).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure!(t.len() as u64 == n - 1, "{} placements at N={n}", t.len());
        let shifts: Vec<u64> = t.placements().iter().map(|p| p.shift).collect();
        ensure!(
            shifts == (0..n - 1).collect::<Vec<_>>(),
            "placements at {shifts:?} for N={n}"
        );
    }
    Ok("N=3,9,27: countF not divisible by N; U{0..N-2} peels M(Y)".into())
}

fn criterion_6() -> Outcome {
    for n in [3u64, 9, 27, 81] {
        for i in 1..=(n - 1) / 2 {
            let expected_b = binomial(n, i) * binomial(n - i, i);
            let flags = flag_rank_by_enumeration(n, i).map_err(|e| e.to_string())?;
            ensure!(
                flags == expected_b,
                "flag count {flags} != {expected_b} at N={n}, i={i}"
            );
            let a = binomial((n - 1) / 2, i) * (big(1) << i);
            ensure!(
                (&expected_b + &a) % big(2) == big(0) && expected_b >= a,
                "(b +- a)/2 not integral at N={n}, i={i}"
            );
            let c = isotropic_ideal_counts(n, i).map_err(|e| e.to_string())?;
            ensure!(
                c.a == a && c.b == expected_b,
                "counts disagree at N={n}, i={i}"
            );
        }
        let c1 = isotropic_ideal_counts(n, 1).map_err(|e| e.to_string())?;
        let s = involution_variety_shape::<BigUint>(n)
            .map_err(|e| e.to_string())?
            .stats();
        ensure!(
            s.count_f == c1.count_f && s.count_a == c1.count_a,
            "M(Y) counts ({}, {}) vs ({}, {}) at N={n}",
            s.count_f,
            s.count_a,
            c1.count_f,
            c1.count_a
        );
        let k = (1..=4)
            .find(|k| 3u64.pow(*k) == n)
            .expect("N is a power of 3");
        let params = Params::new(3, k).map_err(|e| e.to_string())?;
        let report = verify(Check::IsotropicCounts, params, &SolverConfig::default())
            .map_err(|e| e.to_string())?;
        ensure!(
            report.verdict == Verdict::Flagged,
            "literal closed-form counts reported as {} at N={n}",
            report.verdict
        );
        let (df, da) = doubled_rank_one_counts(n);
        ensure!(
            df == big((n + 1) * (n - 1)) && da == big((n - 1) * (n - 1)),
            "closed-form values wrong at N={n}"
        );
        ensure!(
            report
                .details
                .iter()
                .any(|d| d.contains(&df.to_string()) && d.contains(&da.to_string())),
            "report does not show the closed-form values at N={n}"
        );
    }
    Ok("N=3,9,27,81: flags = C(N,i)C(N-i,i), counts integral, closed form flagged".into())
}

fn criterion_7() -> Outcome {
    for n in [3u64, 9, 27] {
        ensure!(
            closing_identity_holds(n).map_err(|e| e.to_string())?,
            "M(Y) + U{{N-1}} != M(R(X)) at N={n}"
        );
    }
    Ok("N=3,9,27".into())
}

fn criterion_8() -> Outcome {
    for n in (3..=81).step_by(2) {
        let expected = ShapeRatio::Finite(Ratio::new(big(n + 1), big(n - 1)));
        let w = weil_transfer_shape::<BigUint>(n).map_err(|e| e.to_string())?;
        let u: Shape = upper_case2(n).map_err(|e| e.to_string())?;
        ensure!(w.stats().ratio == expected, "ratio of M(R(X)) at N={n}");
        ensure!(u.stats().ratio == expected, "ratio of U at N={n}");
        let twisted = u.tensor(&Shape::twist_unit());
        ensure!(
            twisted.stats().ratio == ShapeRatio::Finite(Ratio::new(big(n - 1), big(n + 1))),
            "ratio of U*A at N={n}"
        );
    }
    Ok("odd N=3..81".into())
}

const PROPERTY_CASES: u32 = 1000;

fn runner() -> TestRunner {
    let config = Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    TestRunner::new_with_rng(config, rng)
}

fn criterion_9() -> Outcome {
    let mut suites = Vec::new();
    let mut run = |name: &str, result: Result<(), String>| -> Result<(), String> {
        result.map_err(|e| format!("{name}: {e}"))?;
        suites.push(name.to_string());
        Ok(())
    };
    run(
        "semiring laws",
        runner()
            .run(&(arb_shape(), arb_shape(), arb_shape()), |(s, t, v)| {
                check_semiring_laws(&s, &t, &v)
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "shift/tensor compatibility",
        runner()
            .run(
                &(arb_shape(), arb_shape(), 0..10u64, 0..10u64),
                |(s, t, a, b)| check_shift_laws(&s, &t, a, b),
            )
            .map_err(|e| e.to_string()),
    )?;
    run(
        "restriction homomorphism",
        runner()
            .run(&(arb_shape(), arb_shape(), 0..10u64), |(s, t, k)| {
                check_restriction_laws(&s, &t, k)
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "tiling soundness + greedy/exhaustive agreement",
        runner()
            .run(&arb_deterministic_instance(), |inst| {
                check_greedy_exhaustive_agreement(&inst)
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "translation equivariance",
        runner()
            .run(&(arb_deterministic_instance(), 0..8u64), |(inst, k)| {
                check_translation(&inst, k)
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "obstruction soundness",
        runner()
            .run(&arb_free_instance(), |(target, tiles)| {
                check_obstruction_soundness(&target, &tiles)
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "serialization round-trip",
        runner()
            .run(&arb_items(), |items| {
                check_round_trip(&shape_of(&items), &items)
            })
            .map_err(|e| e.to_string()),
    )?;
    run(
        "serialization round-trip (big)",
        runner()
            .run(&arb_big_shape(), |s| {
                let text = motive_shapes::serial::shape_to_string(&s);
                let back: Shape = motive_shapes::serial::shape_from_str(&text)
                    .map_err(|e| TestCaseError::fail(e.to_string()))?;
                prop_assert_eq!(back, s);
                Ok(())
            })
            .map_err(|e| e.to_string()),
    )?;
    Ok(format!(
        "{} suites x {PROPERTY_CASES} cases: {}",
        suites.len(),
        suites.join(", ")
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "oracle equivalence: closed transfer shape = swap-orbit shape",
            criterion_1,
        ),
        (
            "transfer, case 1: U{2i} + (U*A){2i-1} sums to the transfer shape",
            criterion_2,
        ),
        (
            "transfer, case 2: U{0..N-1} sums to the transfer shape",
            criterion_3,
        ),
        (
            "upper-shape dichotomy: both tile sets tile, uniquely",
            criterion_4,
        ),
        (
            "involution variety: divisibility contradiction and N-1 placements",
            criterion_5,
        ),
        (
            "isotropic counts: flag oracle, integrality, flagged closed form",
            criterion_6,
        ),
        ("closing identity: M(Y) + U{N-1} = M(R(X))", criterion_7),
        ("ratio properties: (N+1)/(N-1) and (N-1)/(N+1)", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {name} [{detail}] ({took:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  criterion {}: {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
