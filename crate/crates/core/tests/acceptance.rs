//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//!
//! Every tolerance is exact rational equality. The only timed gate is the free 3-step
//! construction with six generators, which must finish its checks within 60 seconds.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use novikov_core::checks::{
    check_compatibility, check_left_symmetric, check_lie, check_novikov, check_operator_identity,
    check_structure, CheckReport,
};
use novikov_core::constructions::{
    by_name, counterexample_13, free_3step_lie, novikov_f910, novikov_free_3step,
    novikov_strictly_upper_triangular, strictly_upper_triangular, FiliformBasis,
};
use novikov_core::lemmas::check_lemmas;
use novikov_core::scalar::{frac, int};
use novikov_core::series::solvability_class;
use novikov_core::solver::{
    grading_zeros, prove, verify_certificate, Outcome, ProofReport, SolverConfig,
};
use novikov_core::subspace::Subspace;
use novikov_core::{NovikovStructure, Vector};

mod common;

const FREE_SIX_LIMIT: Duration = Duration::from_secs(60);

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn first_failure(name: &str, reports: &[CheckReport]) -> Verdict {
    match reports.iter().find(|r| !r.passed) {
        Some(r) => Err(format!(
            "{name}: {} fails at {:?}",
            r.kind.name(),
            r.witness.as_ref().map(|w| &w.indices)
        )),
        None => Ok(String::new()),
    }
}

fn core_checks(s: &NovikovStructure) -> Vec<CheckReport> {
    vec![
        check_lie(s.lie()),
        check_compatibility(s.product(), s.lie()).expect("same dimension"),
        check_left_symmetric(s.product()),
        check_novikov(s.product()),
        check_operator_identity(s),
    ]
}

fn free_three_step() -> Verdict {
    let mut six = Duration::ZERO;
    for n in 2..=6 {
        let start = Instant::now();
        let a = novikov_free_3step(n).map_err(|e| e.to_string())?;
        first_failure(&a.name, &core_checks(a.novikov().unwrap()))?;
        if n == 6 {
            six = start.elapsed();
        }
    }
    let s = novikov_free_3step(4).unwrap();
    let s = s.novikov().unwrap();
    ensure!(
        s.dim() == 30,
        "dimension for four generators is {}",
        s.dim()
    );
    let (brackets, products) = common::fixture();
    ensure!(
        common::table_of(s.lie(), true) == brackets,
        "bracket table differs from the golden list"
    );
    ensure!(
        common::table_of(s.product(), false) == products,
        "product table differs from the golden list"
    );
    ensure!(
        six <= FREE_SIX_LIMIT,
        "six generators took {six:.1?}, limit {FREE_SIX_LIMIT:?}"
    );
    Ok(format!(
        "n=2..6 pass, dim(n=4)=30, {} brackets and {} products match, n=6 in {six:.1?}",
        brackets.len(),
        products.len()
    ))
}

fn counterexample() -> Verdict {
    let start = Instant::now();
    let lie = counterexample_13().lie().clone();
    let r = prove(&lie, "cex13", &SolverConfig::default()).map_err(|e| e.to_string())?;
    ensure!(r.grading_zeros == 1421, "{} grading zeros", r.grading_zeros);
    let counts: Vec<usize> = r.stage_counts().iter().map(|s| s.free).collect();
    ensure!(counts == [776, 424, 268, 58], "free counts {counts:?}");
    let c = r
        .certificate()
        .ok_or_else(|| format!("outcome is {}", r.outcome.name()))?;
    ensure!(
        c.contradiction.pair() == Some((0, 1)),
        "contradiction from {}",
        c.contradiction.source
    );
    ensure!(
        c.contradiction.constant == frac(1, 8),
        "constant {}",
        c.contradiction.constant
    );
    ensure!(
        verify_certificate(c, &lie).map_err(|e| e.to_string())?,
        "certificate does not replay"
    );
    Ok(format!(
        "1421 zeros, free 776 -> 424 -> 268 -> 58, {} reduces to 1/8, replay true, {:.1?}",
        c.contradiction.source,
        start.elapsed()
    ))
}

fn filiform() -> Verdict {
    for n in 3..=12 {
        for basis in [FiliformBasis::E, FiliformBasis::F] {
            let a = novikov_f910(n, basis).map_err(|e| e.to_string())?;
            first_failure(&a.name, &check_structure(a.novikov().unwrap()))?;
        }
    }
    let e = novikov_f910(8, FiliformBasis::E).unwrap();
    let lie = e.lie();
    ensure!(
        lie.basis_product(1, 2) == [(4, int(1))],
        "[e_2,e_3] = {:?}",
        lie.basis_product(1, 2)
    );
    ensure!(
        lie.basis_product(1, 3) == [(5, int(1))],
        "[e_2,e_4] = {:?}",
        lie.basis_product(1, 3)
    );
    ensure!(
        lie.basis_product(1, 4) == [(6, frac(9, 10))],
        "[e_2,e_5] = {:?}",
        lie.basis_product(1, 4)
    );
    for n in 3..=40usize {
        let k = (usize::BITS - 1 - (n + 1).leading_zeros()) as usize;
        let got = solvability_class(novikov_f910(n, FiliformBasis::F).unwrap().lie());
        ensure!(
            got == Some(k),
            "n={n}: solvability class {got:?}, expected {k}"
        );
    }
    Ok("n=3..12 pass in both bases, spot values exact, solvability classes n=3..40 match".into())
}

fn triangular() -> Verdict {
    for n in 2..=8 {
        ensure!(
            check_lie(strictly_upper_triangular(n).unwrap().lie()).passed,
            "nilt:{n} is not Lie"
        );
    }
    for n in 2..=4 {
        let a = novikov_strictly_upper_triangular(n).map_err(|e| e.to_string())?;
        let s = a.novikov().unwrap();
        first_failure(&a.name, &check_structure(s))?;
        first_failure(&a.name, &check_lemmas(s))?;
        ensure!(
            (n == 2) == s.product().is_zero_product(),
            "nilt:{n} product zero-ness"
        );
    }
    let probe = prove(
        strictly_upper_triangular(3).unwrap().lie(),
        "nilt:3",
        &SolverConfig::default(),
    )
    .map_err(|e| e.to_string())?;
    ensure!(
        matches!(probe.outcome, Outcome::Structure(_)),
        "zero probe on nilt:3 gave {}",
        probe.outcome.name()
    );
    let mut outcomes = Vec::new();
    for name in ["nilt:5", "solvt:3", "solvt:4"] {
        let lie = by_name(name).unwrap().lie().clone();
        let r = prove(&lie, name, &SolverConfig::default()).map_err(|e| e.to_string())?;
        match &r.outcome {
            Outcome::Certificate(c) => {
                ensure!(
                    verify_certificate(c, &lie).map_err(|e| e.to_string())?,
                    "{name} certificate does not replay"
                );
                outcomes.push(format!(
                    "{name} certificate ({} = {})",
                    c.contradiction.source, c.contradiction.constant
                ));
            }
            Outcome::Inconclusive(_) => outcomes.push(format!("{name} inconclusive")),
            Outcome::Structure(_) => return Err(format!("{name}: structure reported")),
        }
    }
    Ok(format!(
        "nilt n<=8 Lie, structures for n=2..4 pass; {}",
        outcomes.join(", ")
    ))
}

fn lemma_suite() -> Verdict {
    let mut names: Vec<String> = (2..=5).map(|n| format!("novikov-free3:{n}")).collect();
    for n in 3..=10 {
        names.push(format!("filiform910:{n}:f"));
        names.push(format!("stdfiliform:{n}"));
    }
    names.extend((1..=3).map(|n| format!("abelian:{n}")));
    for name in &names {
        let s = by_name(name).unwrap().novikov().unwrap().clone();
        first_failure(name, &check_lemmas(&s))?;
    }
    Ok(format!("{} structures, zero failures", names.len()))
}

fn determinism() -> Verdict {
    let lie = counterexample_13().lie().clone();
    let run = |threads: usize| -> Result<ProofReport, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| prove(&lie, "cex13", &SolverConfig::default()))
            .map_err(|e| e.to_string())
    };
    let json = |r: &ProofReport| r.certificate().map(|c| c.to_json());
    let (one, four, again) = (run(1)?, run(4)?, run(4)?);
    ensure!(json(&one).is_some(), "no certificate");
    ensure!(
        json(&one) == json(&four) && json(&four) == json(&again),
        "certificates differ across runs"
    );
    for seed in 0..10 {
        let config = SolverConfig {
            shuffle_seed: Some(seed),
            ..SolverConfig::default()
        };
        let r = prove(&lie, "cex13", &config).map_err(|e| e.to_string())?;
        ensure!(
            r.stage_counts() == one.stage_counts(),
            "seed {seed}: counts differ"
        );
    }
    Ok("1 and 4 threads byte-identical, counts stable over 10 seeds".into())
}

fn oracles() -> Verdict {
    for (name, lie, expected) in [
        ("cex13", counterexample_13().lie().clone(), 1421),
        ("free3:2", free_3step_lie(2).unwrap().lie().clone(), 75),
    ] {
        let fast = grading_zeros(&lie).map_err(|e| e.to_string())?;
        let slow = common::brute_force_zeros(&lie);
        ensure!(
            fast == slow,
            "{name}: {} vs brute force {}",
            fast.len(),
            slow.len()
        );
        ensure!(fast.len() == expected, "{name}: {} zeros", fast.len());
    }
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for case in 0..50 {
        let dim = rng.gen_range(1..=6);
        let mut draw = || -> Vec<Vec<novikov_core::Rational>> {
            let count = rng.gen_range(0..=dim);
            (0..count)
                .map(|_| (0..dim).map(|_| int(rng.gen_range(-2..=2))).collect())
                .collect()
        };
        let (ra, rb) = (draw(), draw());
        let span = |rows: &[Vec<novikov_core::Rational>]| {
            Subspace::span(
                dim,
                &rows.iter().map(|r| Vector(r.clone())).collect::<Vec<_>>(),
            )
            .unwrap()
        };
        let (a, b) = (span(&ra), span(&rb));
        let both: Vec<_> = ra.iter().chain(&rb).cloned().collect();
        let (sum, inter) = (a.sum(&b).unwrap(), a.intersect(&b).unwrap());
        ensure!(sum.rank() == common::rank(&both), "case {case}: sum rank");
        ensure!(
            inter.rank() == common::rank(&ra) + common::rank(&rb) - common::rank(&both),
            "case {case}: intersection rank"
        );
        ensure!(
            inter
                .basis()
                .iter()
                .all(|v| common::contains(&ra, v.coords()) && common::contains(&rb, v.coords())),
            "case {case}: intersection escapes an operand"
        );
    }
    Ok("grading zeros 1421 and 75 match brute force, 50 subspace instances agree".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("free 3-step construction", free_three_step),
        ("counterexample reproduction", counterexample),
        ("filiform family", filiform),
        ("triangular algebras", triangular),
        ("lemma property suite", lemma_suite),
        ("determinism and replay", determinism),
        ("oracle cross-checks", oracles),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (number, (title, run)) in criteria.iter().enumerate() {
        let number = number + 1;
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| f == &number.to_string() || title.contains(f.as_str()))
        {
            continue;
        }
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match verdict {
            Ok(detail) => println!("PASS criterion {number} ({title}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {number} ({title}): {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
