//! The Rota algebra: umbral series, the star product, the delta
//! derivation, and exact transforms between lattice values and umbral
//! coefficients.
//!
//! An umbral series holds coefficients with respect to the basic-polynomial
//! basis of a delta operator. For the forward basis on the uniform lattice
//! `x_n = nh`, evaluation truncates: `p_k(nh) = 0` for `k > n`, so lattice
//! values are finite sums and the value/coefficient transforms are exact
//! inverses of each other. Off-lattice evaluation is not offered; the
//! formal series need not converge there.

use std::error::Error;
use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::operator::DeltaKind;
use crate::rational::{factorial, falling, rat_pow, rat_string, rat_vec_string, Rat};
use crate::DEFAULT_TRUNCATION_BOUND;

/// Errors from the series algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Operands disagree on lattice spacing or basis kind.
    Incompatible { field: &'static str },
    /// Operation is only defined for the forward basis.
    UnsupportedBasis(DeltaKind),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Incompatible { field } => {
                write!(f, "incompatible series: {} differs", field)
            }
            AlgebraError::UnsupportedBasis(kind) => {
                write!(f, "operation is not implemented for the {} basis", kind)
            }
        }
    }
}

impl Error for AlgebraError {}

/// A formal series `sum_k zeta_k p_k(x)` in the basic-polynomial basis of a
/// delta operator, with lattice spacing `h`.
///
/// Equality is coefficientwise with zero padding, so trailing zeros are
/// immaterial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UmbralSeries {
    #[serde(with = "rat_string")]
    h: Rat,
    #[serde(with = "rat_vec_string")]
    zeta: Vec<Rat>,
    #[serde(skip, default)]
    basis: DeltaKind,
}

impl UmbralSeries {
    /// Builds a series from coefficients `zeta_0, zeta_1, ...`.
    pub fn new(zeta: Vec<Rat>, h: Rat, basis: DeltaKind) -> Self {
        assert!(h.is_positive(), "lattice spacing must be positive");
        Self { h, zeta, basis }
    }

    /// Forward-basis series.
    pub fn forward(zeta: Vec<Rat>, h: Rat) -> Self {
        Self::new(zeta, h, DeltaKind::Forward)
    }

    /// The single basis element `p_k`.
    pub fn basis_element(k: usize, h: Rat, basis: DeltaKind) -> Self {
        let mut zeta = vec![Rat::zero(); k + 1];
        zeta[k] = Rat::one();
        Self::new(zeta, h, basis)
    }

    pub fn zeta(&self) -> &[Rat] {
        &self.zeta
    }

    /// Coefficient `zeta_k`, zero beyond storage.
    pub fn coeff(&self, k: usize) -> Rat {
        self.zeta.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn h(&self) -> &Rat {
        &self.h
    }

    pub fn basis(&self) -> DeltaKind {
        self.basis
    }

    /// Degree of the highest nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.zeta.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Drops coefficients above `bound`.
    pub fn truncated(&self, bound: usize) -> Self {
        let mut out = self.clone();
        out.zeta.truncate(bound + 1);
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.h != other.h {
            return Err(AlgebraError::Incompatible { field: "h" });
        }
        if self.basis != other.basis {
            return Err(AlgebraError::Incompatible { field: "basis" });
        }
        Ok(())
    }

    /// Star product: coefficient convolution, realizing
    /// `p_n * p_m = p_{n+m}` extended bilinearly. The result is truncated
    /// at [`DEFAULT_TRUNCATION_BOUND`].
    pub fn star(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.star_truncated(other, DEFAULT_TRUNCATION_BOUND)
    }

    /// Star product truncated at an explicit degree bound.
    pub fn star_truncated(&self, other: &Self, bound: usize) -> Result<Self, AlgebraError> {
        self.check_compatible(other)?;
        if self.zeta.is_empty() || other.zeta.is_empty() {
            return Ok(Self::new(Vec::new(), self.h.clone(), self.basis));
        }
        let full = self.zeta.len() + other.zeta.len() - 1;
        let len = full.min(bound + 1);
        let mut zeta = vec![Rat::zero(); len];
        for (i, a) in self.zeta.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.zeta.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    zeta[i + j] += a * b;
                }
            }
        }
        Ok(Self::new(zeta, self.h.clone(), self.basis))
    }

    /// Delta derivation in coefficient space: the image has coefficients
    /// `j·zeta_j` shifted down one index. Applying it twice gives the
    /// second discrete derivative `j(j-1)·zeta_j` shifted down two.
    pub fn delta_derive(&self) -> Self {
        let zeta = self
            .zeta
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * Rat::from_integer(j.into()))
            .collect();
        Self::new(zeta, self.h.clone(), self.basis)
    }

    /// Lattice values `u_0..u_{n_max}` at `x_n = nh` for the forward basis,
    /// by the truncated sum `u_n = sum_{k<=n} n!/(n-k)! h^k zeta_k`.
    pub fn values(&self, n_max: usize) -> Result<LatticeFunction, AlgebraError> {
        if self.basis != DeltaKind::Forward {
            return Err(AlgebraError::UnsupportedBasis(self.basis));
        }
        let values = (0..=n_max)
            .map(|n| {
                let mut acc = Rat::zero();
                for (k, zeta_k) in self.zeta.iter().enumerate().take(n + 1) {
                    if !zeta_k.is_zero() {
                        let lattice = Rat::from_integer(falling(n, k)) * rat_pow(&self.h, k as i64);
                        acc += zeta_k * lattice;
                    }
                }
                acc
            })
            .collect();
        Ok(LatticeFunction {
            values,
            h: self.h.clone(),
        })
    }
}

impl PartialEq for UmbralSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.h != other.h || self.basis != other.basis {
            return false;
        }
        let len = self.zeta.len().max(other.zeta.len());
        (0..len).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Eq for UmbralSeries {}

/// A function known through its values `u_n = u(nh)` on the uniform
/// lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFunction {
    #[serde(with = "rat_string")]
    pub h: Rat,
    #[serde(with = "rat_vec_string")]
    pub values: Vec<Rat>,
}

impl LatticeFunction {
    pub fn new(values: Vec<Rat>, h: Rat) -> Self {
        assert!(h.is_positive(), "lattice spacing must be positive");
        Self { values, h }
    }

    /// Highest lattice index.
    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    /// Value at index `n`, zero beyond storage.
    pub fn value(&self, n: usize) -> Rat {
        self.values.get(n).cloned().unwrap_or_else(Rat::zero)
    }

    /// Recovers forward-basis umbral coefficients from lattice values:
    /// `zeta_k = h^{-k} sum_{j<=k} (-1)^{k-j} u_j / (j!(k-j)!)`.
    /// Exact inverse of [`UmbralSeries::values`].
    pub fn to_coeffs(&self) -> UmbralSeries {
        let zeta = (0..self.values.len())
            .map(|k| {
                let mut acc = Rat::zero();
                for (j, u_j) in self.values.iter().enumerate().take(k + 1) {
                    if u_j.is_zero() {
                        continue;
                    }
                    let denom = factorial(j) * factorial(k - j);
                    let term = u_j / Rat::from_integer(denom);
                    if (k - j) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc * rat_pow(&self.h, -(k as i64))
            })
            .collect();
        UmbralSeries::forward(zeta, self.h.clone())
    }
}

/// Residual of the Leibniz rule for the delta derivation on the star
/// algebra: `D(f*g) - (Df)*g - f*(Dg)`, compared up to one below the
/// truncation bound. The contract is the zero series.
pub fn leibniz_residual(f: &UmbralSeries, g: &UmbralSeries) -> Result<UmbralSeries, AlgebraError> {
    let product = f.star(g)?;
    let derived = product.delta_derive();
    let left = f.delta_derive().star(g)?;
    let right = f.star(&g.delta_derive())?;
    let mut zeta = Vec::new();
    let len = derived
        .zeta()
        .len()
        .max(left.zeta().len())
        .max(right.zeta().len())
        .min(DEFAULT_TRUNCATION_BOUND);
    for k in 0..len {
        zeta.push(derived.coeff(k) - left.coeff(k) - right.coeff(k));
    }
    Ok(UmbralSeries::new(zeta, f.h().clone(), f.basis()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn fwd(zeta: &[i64]) -> UmbralSeries {
        UmbralSeries::forward(zeta.iter().map(|&z| rat_int(z)).collect(), rat_int(1))
    }

    // ---- star product ----

    #[test]
    fn star_of_basis_elements_adds_indices() {
        let p1 = fwd(&[0, 1]);
        let p2 = p1.star(&p1).unwrap();
        assert_eq!(p2, fwd(&[0, 0, 1]));
    }

    #[test]
    fn star_identity_element() {
        let one = fwd(&[1]);
        let f = fwd(&[3, -2, 5, 7]);
        assert_eq!(one.star(&f).unwrap(), f);
        assert_eq!(f.star(&one).unwrap(), f);
    }

    #[test]
    fn star_is_bilinear() {
        // (p_1 + p_2) * p_1 = p_2 + p_3
        let f = fwd(&[0, 1, 1]);
        let p1 = fwd(&[0, 1]);
        assert_eq!(f.star(&p1).unwrap(), fwd(&[0, 0, 1, 1]));
    }

    #[test]
    fn star_commutes_and_associates() {
        let f = fwd(&[1, -3, 2]);
        let g = fwd(&[0, 5, 0, 7]);
        let k = fwd(&[2, 0, -1]);
        assert_eq!(f.star(&g).unwrap(), g.star(&f).unwrap());
        let left = f.star(&g).unwrap().star(&k).unwrap();
        let right = f.star(&g.star(&k).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn star_rejects_incompatible_operands() {
        let f = fwd(&[1]);
        let g = UmbralSeries::forward(vec![rat_int(1)], rat(1, 2));
        assert_eq!(
            f.star(&g).unwrap_err(),
            AlgebraError::Incompatible { field: "h" }
        );
        let d = UmbralSeries::new(vec![rat_int(1)], rat_int(1), DeltaKind::Derivative);
        assert_eq!(
            f.star(&d).unwrap_err(),
            AlgebraError::Incompatible { field: "basis" }
        );
    }

    #[test]
    fn star_truncates_at_bound() {
        let p40 = UmbralSeries::basis_element(40, rat_int(1), DeltaKind::Forward);
        let product = p40.star(&p40).unwrap();
        // Degree 80 exceeds the default bound, so the product truncates to zero.
        assert!(product.is_zero());
        assert!(product.zeta().len() <= DEFAULT_TRUNCATION_BOUND + 1);
    }

    // ---- delta derivation ----

    #[test]
    fn derive_basis_element() {
        let p2 = fwd(&[0, 0, 1]);
        assert_eq!(p2.delta_derive(), fwd(&[0, 2]));
    }

    #[test]
    fn derive_constant_is_zero() {
        assert!(fwd(&[1]).delta_derive().is_zero());
    }

    #[test]
    fn derive_shifts_and_scales_coefficients() {
        let f = fwd(&[1, 1, 1]);
        assert_eq!(f.delta_derive(), fwd(&[1, 2]));
        // Applying twice gives the second-derivative coefficients
        // j(j-1)·zeta_j shifted down two indices.
        let g = fwd(&[1, 1, 1, 1]);
        assert_eq!(g.delta_derive().delta_derive(), fwd(&[2, 6]));
    }

    #[test]
    fn derive_is_linear() {
        let f = fwd(&[1, -2, 3, 0, 5]);
        let g = fwd(&[0, 7, 1]);
        let alpha = rat(2, 3);
        let beta = rat(-1, 4);
        let combo = UmbralSeries::forward(
            (0..5)
                .map(|k| f.coeff(k) * &alpha + g.coeff(k) * &beta)
                .collect(),
            rat_int(1),
        );
        let expected = UmbralSeries::forward(
            (0..4)
                .map(|k| f.delta_derive().coeff(k) * &alpha + g.delta_derive().coeff(k) * &beta)
                .collect(),
            rat_int(1),
        );
        assert_eq!(combo.delta_derive(), expected);
    }

    // ---- values ----

    #[test]
    fn values_of_linear_series() {
        let f = fwd(&[0, 1]);
        let u = f.values(4).unwrap();
        let expected: Vec<Rat> = (0..=4).map(rat_int).collect();
        assert_eq!(u.values, expected);
    }

    #[test]
    fn values_of_square() {
        // x^2 = p_1 + p_2 at h = 1, so u_n = n + n(n-1) = n^2.
        let f = fwd(&[0, 1, 1]);
        let u = f.values(5).unwrap();
        for (n, v) in u.values.iter().enumerate() {
            assert_eq!(v, &rat_int((n * n) as i64));
        }
    }

    #[test]
    fn values_of_constant() {
        let f = UmbralSeries::forward(vec![rat_int(1)], rat(5, 3));
        let u = f.values(3).unwrap();
        assert_eq!(u.values, vec![rat_int(1); 4]);
    }

    #[test]
    fn values_unsupported_for_symmetric_basis() {
        let f = UmbralSeries::new(vec![rat_int(1)], rat_int(1), DeltaKind::Symmetric);
        assert_eq!(
            f.values(3).unwrap_err(),
            AlgebraError::UnsupportedBasis(DeltaKind::Symmetric)
        );
    }

    #[test]
    fn evaluation_ignores_coefficients_above_n() {
        // zeta_k with k > n contributes nothing to u_n.
        let short = fwd(&[2, -1, 3]);
        let long = fwd(&[2, -1, 3, 99, -42]);
        let u_short = short.values(2).unwrap();
        let u_long = long.values(2).unwrap();
        assert_eq!(u_short, u_long);
    }

    // ---- coefficient recovery ----

    #[test]
    fn coeffs_of_squares() {
        let u = LatticeFunction::new(
            vec![rat_int(0), rat_int(1), rat_int(4), rat_int(9)],
            rat_int(1),
        );
        assert_eq!(u.to_coeffs(), fwd(&[0, 1, 1, 0]));
    }

    #[test]
    fn coeffs_of_constant() {
        let u = LatticeFunction::new(vec![rat_int(1); 4], rat_int(1));
        assert_eq!(u.to_coeffs(), fwd(&[1, 0, 0, 0]));
    }

    #[test]
    fn coeffs_scale_with_spacing() {
        // u(x) = x sampled at h = 2.
        let u = LatticeFunction::new(
            vec![rat_int(0), rat_int(2), rat_int(4), rat_int(6)],
            rat_int(2),
        );
        let zeta = u.to_coeffs();
        assert_eq!(
            zeta,
            UmbralSeries::forward(
                vec![rat_int(0), rat_int(1), rat_int(0), rat_int(0)],
                rat_int(2)
            )
        );
    }

    #[test]
    fn coeffs_match_triangular_solve_oracle() {
        // Independent route: solve the lower-triangular system
        // u_n = sum_k p_k(nh) zeta_k by forward substitution.
        let h = rat(1, 3);
        let u = LatticeFunction::new(
            vec![rat(1, 2), rat_int(-2), rat(7, 4), rat_int(0), rat(3, 5)],
            h.clone(),
        );
        let n = u.values.len();
        let mut solved: Vec<Rat> = Vec::with_capacity(n);
        for row in 0..n {
            let mut rhs = u.values[row].clone();
            for (k, z) in solved.iter().enumerate().take(row) {
                let p_k = Rat::from_integer(falling(row, k)) * rat_pow(&h, k as i64);
                rhs -= p_k * z;
            }
            let diag = Rat::from_integer(falling(row, row)) * rat_pow(&h, row as i64);
            solved.push(rhs / diag);
        }
        assert_eq!(u.to_coeffs().zeta(), &solved[..]);
    }

    #[test]
    fn round_trip_is_identity() {
        let h_values = [rat_int(1), rat(1, 3), rat(5, 2)];
        for (i, h) in h_values.iter().enumerate() {
            let zeta: Vec<Rat> = (0..8)
                .map(|k| rat((k as i64 * 3 - 7) * (i as i64 + 1), k as i64 + 2))
                .collect();
            let f = UmbralSeries::forward(zeta, h.clone());
            let u = f.values(7).unwrap();
            assert_eq!(u.to_coeffs(), f);
            // And the reverse direction.
            let back = u.to_coeffs().values(7).unwrap();
            assert_eq!(back, u);
        }
    }

    // ---- JSON encoding ----

    #[test]
    fn json_encoding_is_stable_and_round_trips() {
        let f = UmbralSeries::forward(vec![rat(1, 2), rat_int(-3)], rat(1, 3));
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"h":"1/3","zeta":["1/2","-3/1"]}"#);
        let back: UmbralSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.basis(), DeltaKind::Forward);

        let u = LatticeFunction::new(vec![rat_int(0), rat_int(1)], rat_int(1));
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(json, r#"{"h":"1/1","values":["0/1","1/1"]}"#);
        let back: LatticeFunction = serde_json::from_str(&json).unwrap();
        assert_eq!(back, u);
    }

    #[test]
    fn json_rejects_malformed_rationals() {
        let err = serde_json::from_str::<LatticeFunction>(r#"{"h": "1/0", "values": []}"#);
        assert!(err.is_err());
        let err = serde_json::from_str::<UmbralSeries>(r#"{"h": "1", "zeta": ["x"]}"#);
        assert!(err.is_err());
    }

    // ---- Leibniz rule ----

    #[test]
    fn leibniz_on_basis_elements() {
        let p1 = fwd(&[0, 1]);
        assert!(leibniz_residual(&p1, &p1).unwrap().is_zero());
    }

    #[test]
    fn leibniz_with_constant() {
        let one = fwd(&[1]);
        let f = fwd(&[4, 0, -3, 1]);
        assert!(leibniz_residual(&one, &f).unwrap().is_zero());
    }

    #[test]
    fn leibniz_on_dense_series() {
        let f = UmbralSeries::forward((0..=10).map(|k| rat(2 * k - 9, k + 1)).collect(), rat_int(1));
        let g = UmbralSeries::forward((0..=10).map(|k| rat(5 - k, 2 * k + 3)).collect(), rat_int(1));
        assert!(leibniz_residual(&f, &g).unwrap().is_zero());
    }
}
