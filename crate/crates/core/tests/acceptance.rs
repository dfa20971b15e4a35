//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the report is printed even when output capture is on.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rankmetric::rng;
use rankmetric::verify::{self, Check};

const SEED: u64 = 42;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

fn s(i: u64) -> u64 {
    rng::derive(SEED, i)
}

fn cap() -> u128 {
    rankmetric::default_cap()
}

fn determinism() -> Check {
    let bin = env!("CARGO_BIN_EXE_rankmetric");
    let run = || {
        Command::new(bin)
            .args(["verify", "--suite", "all", "--seed", "42"])
            .output()
            .expect("running the binary")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    Check {
        name: "verify --suite all --seed 42 twice".into(),
        passed: same && a.status.success() && b.status.success(),
        detail: format!(
            "{} bytes, identical: {same}, exit codes {:?} {:?}",
            a.stdout.len(),
            a.status.code(),
            b.status.code()
        ),
    }
}

fn both(a: Check, b: Check) -> Check {
    Check {
        name: format!("{}; {}", a.name, b.name),
        passed: a.passed && b.passed,
        detail: format!("{}; {}", a.detail, b.detail),
    }
}

const MIN: Duration = Duration::from_secs(60);

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "worked example: d_R,2 = 4 and dim C* = 4",
            budget: Duration::from_secs(1),
            run: || verify::worked_example(cap()),
        },
        Criterion {
            id: 2,
            title: "rank weight definitions agree",
            budget: 10 * MIN,
            run: || verify::definition_agreement(s(4), cap()),
        },
        Criterion {
            id: 3,
            title: "basis minimum of wt_H equals dim D*",
            budget: 10 * MIN,
            run: || verify::bases_theorem(cap()),
        },
        Criterion {
            id: 4,
            title: "duality partition of {1..n}",
            budget: 10 * MIN,
            run: || verify::duality_theorem(s(5), cap()),
        },
        Criterion {
            id: 5,
            title: "Delsarte and characteristic identities",
            budget: 10 * MIN,
            run: || verify::delsarte_and_characteristic(s(2), cap()),
        },
        Criterion {
            id: 6,
            title: "Forney triple equality for every L",
            budget: 10 * MIN,
            run: || verify::forney(s(7), cap()),
        },
        Criterion {
            id: 7,
            title: "bounds hold, Gabidulin codes attain Singleton",
            budget: 10 * MIN,
            run: || verify::bound_suite(s(6), cap()),
        },
        Criterion {
            id: 8,
            title: "leakage equals mutual information, access duality",
            budget: 5 * MIN,
            run: || verify::leakage_oracle(s(9), cap()),
        },
        Criterion {
            id: 9,
            title: "MRD leakage profile of a Gabidulin pair",
            budget: 10 * MIN,
            run: || verify::mrd_profile(cap()),
        },
        Criterion {
            id: 10,
            title: "infallibility at t=1, ρ=1 and the converse at t=2, ρ=0",
            budget: 5 * MIN,
            run: || verify::infallibility(s(11), cap()),
        },
        Criterion {
            id: 11,
            title: "errors with known rank support recovered uniquely",
            budget: 10 * MIN,
            run: || both(verify::erasures_as_errors(cap()), verify::erasure_thresholds(cap())),
        },
        Criterion {
            id: 12,
            title: "byte-identical verify reports",
            budget: 10 * MIN,
            run: determinism,
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let check = (c.run)();
        let elapsed = start.elapsed();
        let pass = check.passed && elapsed <= c.budget;
        failed += !pass as usize;
        println!(
            "criterion {:>2} {} {} ({:.2?}, budget {:?}): {}",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            c.budget,
            check.detail
        );
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
