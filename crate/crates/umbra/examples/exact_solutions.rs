//! Solve the discrete Euler recurrence exactly for the three root
//! configurations: two integer roots, a double root, and a complex pair.
//!
//! Run with: cargo run -p umbra --example exact_solutions

use num::Zero;
use umbra::euler::{exact_solution, residuals, solve_recurrence, EulerProblem};
use umbra::rational::{format_rational, rat_int};

fn show(problem: EulerProblem, n_max: usize) {
    println!("(a, b) = ({}, {})", problem.a, problem.b);
    let space = solve_recurrence(&problem, n_max).expect("consistent recurrence");
    println!("  {}", space.indicial.diagnostic());
    println!("  dimension {} with free indices {:?}", space.dimension(), space.free_indices);
    for (basis, &r) in space.basis.iter().zip(&space.free_indices) {
        let values: Vec<String> = basis.values.iter().map(format_rational).collect();
        let max_residual = residuals(basis, &problem)
            .iter()
            .filter(|v| !v.is_zero())
            .count();
        println!(
            "  basis for r = {}: [{}] ({} nonzero residuals)",
            r,
            values.join(", "),
            max_residual
        );
    }
    println!();
}

fn main() {
    show(EulerProblem::from_i64(-2, 2), 8); // roots 1 and 2
    show(EulerProblem::from_i64(-1, 1), 8); // double root 1
    show(EulerProblem::from_i64(0, 1), 8); // complex pair

    // The power-type solution u_n = h^r n!/(n-r)! solves the recurrence for
    // any spacing; the recurrence itself contains no h.
    let problem = EulerProblem::from_i64(-2, 2);
    for h in [rat_int(1), umbra::rational::rat(1, 2)] {
        let u = exact_solution(2, 10, &h).unwrap();
        let clean = residuals(&u, &problem).iter().all(Zero::is_zero);
        let rendered: Vec<String> = u.values.iter().take(6).map(format_rational).collect();
        println!(
            "r = 2, h = {}: values [{}, ...]  residuals all zero: {}",
            h,
            rendered.join(", "),
            clean
        );
    }
}
