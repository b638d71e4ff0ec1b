//! Run the alternating binomial identity suite that underwrites the
//! collapse of the discrete Euler coefficients.
//!
//! Run with: cargo run -p umbra --example identity_suite

use umbra::identities::{default_samples, lambda_alt_sum, run_identity_suite};
use umbra::rational::{format_rational, rat_int};

fn main() {
    // The key sum evaluates to 2 d_{n2} - a d_{n1} + b d_{n0}: only three
    // rows survive.
    let (a, b) = (rat_int(7), rat_int(3));
    println!("sum_k (-1)^k C(n,k) L_k for (a, b) = ({}, {}):", a, b);
    for n in 0..=5 {
        println!("  n = {}: {}", n, format_rational(&lambda_alt_sum(n, &a, &b)));
    }
    println!();

    let reports = run_identity_suite(60, &default_samples());
    println!("{:<8} {:<40} result", "identity", "range");
    for report in &reports {
        println!(
            "{:<8} {:<40} {}",
            report.identity,
            report.range,
            if report.pass { "pass" } else { "FAIL" }
        );
    }
    let all_pass = reports.iter().all(|r| r.pass);
    println!();
    println!("all identities hold: {}", all_pass);
    std::process::exit(i32::from(!all_pass));
}
