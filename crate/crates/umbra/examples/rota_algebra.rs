//! The star-product algebra: index-additive products of basic polynomials,
//! the Leibniz rule for the delta derivation, and the exact transforms
//! between umbral coefficients and lattice values.
//!
//! Run with: cargo run -p umbra --example rota_algebra

use umbra::algebra::{leibniz_residual, LatticeFunction, UmbralSeries};
use umbra::rational::{format_rational, rat_int};

fn render(series: &UmbralSeries) -> String {
    let coeffs: Vec<String> = series.zeta().iter().map(format_rational).collect();
    format!("({})", coeffs.join(", "))
}

fn main() {
    let h = rat_int(1);

    // p_1 * p_1 = p_2: the star product adds indices.
    let p1 = UmbralSeries::basis_element(1, h.clone(), Default::default());
    let p2 = p1.star(&p1).expect("compatible series");
    println!("zeta(p_1 * p_1)        = {}", render(&p2));

    // Bilinearity: (p_1 + p_2) * p_1 = p_2 + p_3.
    let f = UmbralSeries::forward(vec![rat_int(0), rat_int(1), rat_int(1)], h.clone());
    println!("zeta((p_1 + p_2)*p_1)  = {}", render(&f.star(&p1).unwrap()));

    // The delta derivation lowers indices: D(p_2) = 2 p_1, and the Leibniz
    // rule holds on the algebra.
    println!("zeta(D p_2)            = {}", render(&p2.delta_derive()));
    let g = UmbralSeries::forward(vec![rat_int(3), rat_int(-1), rat_int(2)], h.clone());
    let residual = leibniz_residual(&f, &g).unwrap();
    println!("Leibniz residual       = {} (zero: {})", render(&residual), residual.is_zero());

    // x^2 = p_1 + p_2 on the unit lattice: its values are the squares, and
    // the coefficient transform recovers the expansion exactly.
    let squares = LatticeFunction::new((0..=6).map(|n| rat_int(n * n)).collect(), h.clone());
    let zeta = squares.to_coeffs();
    println!("zeta of n^2 samples    = {}", render(&zeta));
    let back = zeta.values(6).unwrap();
    println!("round trip intact      = {}", back == squares);
}
