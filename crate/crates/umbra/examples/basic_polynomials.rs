//! Generate basic polynomial sequences for each built-in delta operator
//! and verify the three defining conditions.
//!
//! Run with: cargo run -p umbra --example basic_polynomials

use umbra::operator::{DeltaKind, DeltaSeries};
use umbra::rational::{rat, Rat};

fn main() {
    let h = Rat::from_integer(1.into());
    let n_max = 5;

    for kind in DeltaKind::all() {
        let operator = DeltaSeries::delta(kind, &h, n_max).expect("valid bound");
        let sequence = operator.basic_sequence(n_max).expect("delta operator");

        println!("{} (h = {}):", kind, h);
        for (n, p) in sequence.polys().iter().enumerate() {
            println!("  p_{} = {}", n, p);
        }
        let report = sequence.check();
        println!(
            "  axioms: p_0 = 1 [{}], p_n(0) = 0 [{}], Q p_n = n p_(n-1) [{}]",
            report.starts_at_one,
            report.nonvanishing_at_zero.is_none(),
            report.lowering_failure.is_none()
        );
        println!();
    }

    // The generator works for any spacing; the forward sequence at h = 1/2
    // has zeros at 0, 1/2, 1, ...
    let operator = DeltaSeries::delta(DeltaKind::Forward, &rat(1, 2), 4).unwrap();
    let sequence = operator.basic_sequence(4).unwrap();
    println!("forward (h = 1/2):");
    for (n, p) in sequence.polys().iter().enumerate() {
        println!("  p_{} = {}", n, p);
    }
}
