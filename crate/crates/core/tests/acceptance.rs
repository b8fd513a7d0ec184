//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use matroid_forge::tutte::{tutte_catalan_direct, tutte_via_activities, BivariatePolynomial, LinearOrder};
use matroid_forge::verify::{run_criterion, VerifyConfig, CRITERIA};
use matroid_forge::{catalan::catalan_matroid, Limits};

fn golden_polynomials() -> Result<(), String> {
    let l = Limits::default();
    let m = |i, j| BivariatePolynomial::monomial(i, j, 1);
    let t2 = tutte_catalan_direct(2, &l).map_err(|e| e.to_string())?;
    let t3 = tutte_catalan_direct(3, &l).map_err(|e| e.to_string())?;
    let c3 = catalan_matroid(3, &l).map_err(|e| e.to_string())?;
    let t3_activities = tutte_via_activities(&c3, &LinearOrder::natural(6)).map_err(|e| e.to_string())?;
    if t2 != m(2, 1) + m(1, 2) || t2.to_string() != "q^2*t + q*t^2" {
        return Err(format!("T_C2 = {t2}"));
    }
    let want = "q^3*t + q^2*t + q^2*t^2 + q*t^2 + q*t^3";
    if t3.to_string() != want || t3_activities.to_string() != want {
        return Err(format!("T_C3 = {t3} / {t3_activities}"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cfg = VerifyConfig::full();
    let mut failures = 0;
    for id in 1..=CRITERIA.len() {
        let start = Instant::now();
        let report = run_criterion(id, &cfg);
        println!("{report} ({:.2}s)", start.elapsed().as_secs_f64());
        failures += usize::from(!report.passed);
    }
    match golden_polynomials() {
        Ok(()) => println!("PASS golden T_C2 and T_C3"),
        Err(e) => {
            println!("FAIL golden T_C2 and T_C3: {e}");
            failures += 1;
        }
    }
    println!("acceptance: {} criteria, {failures} failed", CRITERIA.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
