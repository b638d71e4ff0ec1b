//! Watch the basic polynomials converge to their monomial limits as the
//! lattice spacing shrinks: the error at fixed x vanishes linearly in h.
//!
//! Run with: cargo run -p umbra --example continuous_limit

use umbra::euler::limit_study;
use umbra::rational::{format_rational, rat, rat_int, Rat};

fn main() {
    let x = rat_int(1);
    let spacings: Vec<Rat> = (3..=8).map(|k| rat(1, 1i64 << k)).collect();

    for r in 2..=5usize {
        println!("degree r = {} at x = 1:", r);
        println!("  {:>6} | {:>12} | {:>14} | ratio", "h", "error", "error (~)");
        let rows = limit_study(r, &x, &spacings).expect("spacings tile x");
        for row in rows {
            let numeric = row.error.numer().to_string().parse::<f64>().unwrap_or(0.0)
                / row.error.denom().to_string().parse::<f64>().unwrap_or(1.0);
            let ratio = row
                .ratio
                .as_ref()
                .map(format_rational)
                .unwrap_or_else(|| "-".to_string());
            println!(
                "  {:>6} | {:>12} | {:>14.8} | {}",
                format_rational(&row.h),
                format_rational(&row.error),
                numeric,
                ratio
            );
        }
        println!();
    }
    println!("the ratios approach 2 as h halves: first-order convergence");
}
