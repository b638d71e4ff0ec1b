//! Build the three-term recurrence for x^2 u'' + a x u' + b u = 0 and
//! cross-check the closed-form coefficients against the literal
//! alternating sums they collapse from.
//!
//! Run with: cargo run -p umbra --example discretize_euler

use num::Zero;
use umbra::euler::{DiscreteEulerEquation, EulerProblem};
use umbra::rational::format_rational;

fn main() {
    let problem = EulerProblem::from_i64(-2, 2);
    println!(
        "equation: x^2 u'' + ({}) x u' + ({}) u = 0",
        problem.a, problem.b
    );

    let data = problem.indicial_roots();
    println!("indicial: {}", data.diagnostic());
    println!();

    let equation = DiscreteEulerEquation::new(problem);
    println!("  n | c_(n,n-2) | c_(n,n-1) | c_(n,n)  (recurrence rows)");
    for row in equation.table(8).rows {
        println!(
            "{:>3} | {:>9} | {:>9} | {:>7}",
            row.n,
            format_rational(&row.c_nm2),
            format_rational(&row.c_nm1),
            format_rational(&row.c_nn)
        );
    }
    println!();

    // Every entry below the three-coefficient band collapses to zero; the
    // band itself matches the literal double-binomial sums.
    let mut checked = 0;
    for n in 0..=20usize {
        let (c_nm2, c_nm1, c_nn) = equation.coefficients(n);
        for j in 0..=n {
            let literal = equation.coefficient_sum(n, j).unwrap();
            let closed = if j + 2 == n {
                c_nm2.clone()
            } else if j + 1 == n {
                c_nm1.clone()
            } else if j == n {
                c_nn.clone()
            } else {
                Zero::zero()
            };
            assert_eq!(literal, closed, "collapse mismatch at ({}, {})", n, j);
            checked += 1;
        }
    }
    println!("collapse verified against the literal sums at {} (n, j) pairs", checked);
}
