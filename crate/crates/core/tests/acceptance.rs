//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! All criteria are exact; there are no numeric tolerances.

use std::process::ExitCode;
use std::time::Instant;

use domfree::bounds::{f_value, g_value, theorem_bound};
use domfree::corpus::fixture_corpus;
use domfree::verify::{run_suite, Suite, VerifyConfig};
use num_bigint::BigUint;

const SEED: u64 = 20_240_601;
const SAMPLES: usize = 1000;

/// Independent evaluation of g and f from the recursion, with the few Ramsey
/// values these parameters touch written out by hand.
fn hand_ramsey(s: u64, t: u64) -> u64 {
    match (s.min(t), s.max(t)) {
        (1, _) => 1,
        (2, t) => t,
        (3, 3) => 6,
        other => panic!("no hand value for R{other:?}"),
    }
}

fn hand_g(k: u64, l: u64, i: u64) -> u64 {
    if i == 1 {
        1
    } else {
        hand_ramsey(k, (l - 1) * hand_g(k, l, i - 1) + 1) - 1
    }
}

fn hand_bound_checks() -> Result<(), String> {
    let cases = (1..=10)
        .map(|i| (2, 2, i))
        .chain([(3, 3, 2), (3, 1, 4), (1, 5, 3)]);
    for (k, l, i) in cases {
        let want = hand_g(k, l, i);
        let got = g_value(k as usize, l as usize, i as usize).map_err(|e| e.to_string())?;
        if got != BigUint::from(want) {
            return Err(format!("g({k},{l},{i}) = {got}, hand value {want}"));
        }
        if i >= 2 {
            let f = hand_ramsey(k, l) * want;
            let got = f_value(k as usize, l as usize, i as usize).map_err(|e| e.to_string())?;
            if got != BigUint::from(f) {
                return Err(format!("f({k},{l},{i}) = {got}, hand value {f}"));
            }
        }
    }
    let total: u64 = 1 + (2..=3).map(|i| hand_ramsey(2, 2) * hand_g(2, 2, i)).sum::<u64>();
    if theorem_bound(2, 2, 5) != Ok(BigUint::from(total)) {
        return Err(format!("theorem_bound(2,2,5) != {total}"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let config = VerifyConfig { seed: SEED, samples: SAMPLES, corpus: fixture_corpus() };
    println!("acceptance: seed={SEED} samples={SAMPLES} corpus={}", config.corpus.len());
    let mut all_passed = true;
    for suite in Suite::ALL {
        let start = Instant::now();
        let mut report = run_suite(suite, &config);
        if suite == Suite::Bounds {
            if let Err(msg) = hand_bound_checks() {
                report.passed = false;
                report.failed += 1;
                report.failures.push(msg);
            }
        }
        all_passed &= report.passed;
        println!("{report}  ({:.2?})", start.elapsed());
    }
    println!("acceptance: {}", if all_passed { "all criteria passed" } else { "FAILED" });
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
