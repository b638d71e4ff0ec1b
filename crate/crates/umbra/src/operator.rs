//! Shift-invariant operators and basic polynomial sequences.
//!
//! A shift-invariant operator is represented exactly as a truncated formal
//! series `sum_k q_k D^k` in the continuous derivative `D`, with rational
//! coefficients. Acting on a polynomial of degree at most the truncation
//! bound is exact, because `D^(N+1)` annihilates it; there is no
//! truncation error inside the bound.
//!
//! A delta operator `Q` (zero constant term, nonzero `D` coefficient) has a
//! unique basic sequence `p_0, p_1, ...` with `p_0 = 1`, `p_n(0) = 0` and
//! `Q p_n = n p_{n-1}`. It is generated here through the Pincherle
//! derivative: `beta = (Q')^{-1}` and `p_n = (x beta)^n · 1`.

use std::error::Error;
use std::fmt;
use std::ops::Add;

use num::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::{factorial, rat_int, rat_pow, Rat};

/// The built-in delta operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaKind {
    /// The continuous derivative `D`.
    Derivative,
    /// Forward difference `(T_h - 1)/h`.
    #[default]
    Forward,
    /// Backward difference `(1 - T_h^{-1})/h`.
    Backward,
    /// Symmetric difference `(T_h - T_h^{-1})/(2h)`.
    Symmetric,
}

impl DeltaKind {
    pub fn all() -> [DeltaKind; 4] {
        [
            DeltaKind::Derivative,
            DeltaKind::Forward,
            DeltaKind::Backward,
            DeltaKind::Symmetric,
        ]
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            DeltaKind::Derivative => "derivative",
            DeltaKind::Forward => "forward",
            DeltaKind::Backward => "backward",
            DeltaKind::Symmetric => "symmetric",
        }
    }
}

impl fmt::Display for DeltaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Errors from operator construction and application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorError {
    /// A truncation bound too small for the request.
    InvalidBound { requested: usize, bound: usize },
    /// Lattice spacing must be positive.
    NonPositiveSpacing,
    /// Polynomial degree exceeds the operator's exactness bound.
    DegreeOverflow { degree: usize, bound: usize },
    /// Series with zero constant term has no multiplicative inverse.
    NonInvertible,
    /// Operation requires a delta operator (q_0 = 0, q_1 != 0).
    NotDelta,
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::InvalidBound { requested, bound } => write!(
                f,
                "truncation bound {} cannot accommodate request of order {}",
                bound, requested
            ),
            OperatorError::NonPositiveSpacing => write!(f, "lattice spacing must be positive"),
            OperatorError::DegreeOverflow { degree, bound } => write!(
                f,
                "polynomial degree {} exceeds operator truncation bound {}",
                degree, bound
            ),
            OperatorError::NonInvertible => {
                write!(f, "series with zero constant term is not invertible")
            }
            OperatorError::NotDelta => write!(f, "operator is not a delta operator"),
        }
    }
}

impl Error for OperatorError {}

/// A shift-invariant operator `sum_{k=0}^{N} q_k D^k` with exact rational
/// coefficients, together with the lattice spacing it was built for.
#[derive(Debug, Clone)]
pub struct DeltaSeries {
    /// Coefficient of `D^k` at index `k`; length is `order_bound + 1`.
    coeffs: Vec<Rat>,
    h: Rat,
}

impl DeltaSeries {
    /// Builds one of the built-in delta operators as a series in `D`,
    /// truncated at `order_bound`.
    ///
    /// Normalizations: forward `(T_h - 1)/h`, backward `(1 - T_h^{-1})/h`,
    /// symmetric `(T_h - T_h^{-1})/(2h)`, derivative `D`.
    pub fn delta(kind: DeltaKind, h: &Rat, order_bound: usize) -> Result<Self, OperatorError> {
        if order_bound == 0 {
            return Err(OperatorError::InvalidBound {
                requested: 1,
                bound: 0,
            });
        }
        if !h.is_positive() {
            return Err(OperatorError::NonPositiveSpacing);
        }
        let mut coeffs = vec![Rat::zero(); order_bound + 1];
        match kind {
            DeltaKind::Derivative => coeffs[1] = Rat::one(),
            // (e^{hD} - 1)/h: coefficient of D^k is h^{k-1}/k!.
            DeltaKind::Forward => {
                for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
                    *c = rat_pow(h, k as i64 - 1) / Rat::from_integer(factorial(k));
                }
            }
            // (1 - e^{-hD})/h: coefficient of D^k is (-1)^{k+1} h^{k-1}/k!.
            DeltaKind::Backward => {
                for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
                    let mag = rat_pow(h, k as i64 - 1) / Rat::from_integer(factorial(k));
                    *c = if k % 2 == 0 { -mag } else { mag };
                }
            }
            // sinh(hD)/h: odd coefficients h^{k-1}/k!.
            DeltaKind::Symmetric => {
                for (k, c) in coeffs.iter_mut().enumerate().skip(1).step_by(2) {
                    *c = rat_pow(h, k as i64 - 1) / Rat::from_integer(factorial(k));
                }
            }
        }
        Ok(Self {
            coeffs,
            h: h.clone(),
        })
    }

    /// The shift operator `T_h = e^{hD}` truncated at `order_bound`.
    pub fn shift(h: &Rat, order_bound: usize) -> Result<Self, OperatorError> {
        if !h.is_positive() {
            return Err(OperatorError::NonPositiveSpacing);
        }
        let coeffs = (0..=order_bound)
            .map(|k| rat_pow(h, k as i64) / Rat::from_integer(factorial(k)))
            .collect();
        Ok(Self {
            coeffs,
            h: h.clone(),
        })
    }

    /// The identity operator.
    pub fn identity(h: &Rat, order_bound: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order_bound + 1];
        coeffs[0] = Rat::one();
        Self {
            coeffs,
            h: h.clone(),
        }
    }

    /// Builds a series from explicit `D^k` coefficients.
    pub fn from_coeffs(coeffs: Vec<Rat>, h: Rat) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q_0");
        Self { coeffs, h }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `D^k`, zero beyond the bound.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn h(&self) -> &Rat {
        &self.h
    }

    /// Largest power of `D` carried by the truncated series; action on
    /// polynomials of degree up to this bound is exact.
    pub fn order_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Delta predicate: `q_0 = 0` and `q_1 != 0`.
    pub fn is_delta(&self) -> bool {
        self.coeff(0).is_zero() && !self.coeff(1).is_zero()
    }

    /// Applies the operator to a polynomial, exactly.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial, OperatorError> {
        if let Some(degree) = p.degree() {
            if degree > self.order_bound() {
                return Err(OperatorError::DegreeOverflow {
                    degree,
                    bound: self.order_bound(),
                });
            }
        }
        let mut acc = p.scale(&self.coeffs[0]);
        let mut dp = p.clone();
        for q in self.coeffs.iter().skip(1) {
            dp = dp.derivative();
            if dp.is_zero() {
                break;
            }
            if !q.is_zero() {
                acc = &acc + &dp.scale(q);
            }
        }
        Ok(acc)
    }

    /// Pincherle derivative `[S, x]`. Since `[D^k, x] = k D^{k-1}`, the
    /// coefficients shift down one order with a factor `k`; the truncation
    /// bound drops by one.
    pub fn pincherle(&self) -> DeltaSeries {
        let mut coeffs: Vec<Rat> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, q)| q * rat_int(k as i64))
            .collect();
        if coeffs.is_empty() {
            coeffs.push(Rat::zero());
        }
        Self {
            coeffs,
            h: self.h.clone(),
        }
    }

    /// Multiplicative inverse as a truncated series; requires `q_0 != 0`.
    pub fn invert(&self) -> Result<DeltaSeries, OperatorError> {
        let q0 = self.coeff(0);
        if q0.is_zero() {
            return Err(OperatorError::NonInvertible);
        }
        let mut inv = vec![Rat::zero(); self.coeffs.len()];
        inv[0] = q0.recip();
        for n in 1..self.coeffs.len() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -acc / &q0;
        }
        Ok(Self {
            coeffs: inv,
            h: self.h.clone(),
        })
    }

    /// Series product (operator composition), truncated at the smaller
    /// bound. Both operands must share the lattice spacing.
    pub fn compose(&self, other: &DeltaSeries) -> DeltaSeries {
        assert_eq!(self.h, other.h, "composing operators over different lattices");
        let bound = self.order_bound().min(other.order_bound());
        let mut coeffs = vec![Rat::zero(); bound + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(bound + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self {
            coeffs,
            h: self.h.clone(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> DeltaSeries {
        Self {
            coeffs: self.coeffs.iter().map(|q| q * c).collect(),
            h: self.h.clone(),
        }
    }

    /// Generates the basic sequence `p_0..p_n_max` for this delta operator
    /// via `beta = (Q')^{-1}` and `p_n = x · beta(p_{n-1})`.
    pub fn basic_sequence(&self, n_max: usize) -> Result<BasicSequence, OperatorError> {
        if !self.is_delta() {
            return Err(OperatorError::NotDelta);
        }
        if n_max > self.order_bound() {
            return Err(OperatorError::InvalidBound {
                requested: n_max,
                bound: self.order_bound(),
            });
        }
        let beta = self.pincherle().invert()?;
        let mut polys = Vec::with_capacity(n_max + 1);
        polys.push(Polynomial::one());
        for n in 1..=n_max {
            let next = beta.apply(&polys[n - 1])?.mul_x();
            polys.push(next);
        }
        Ok(BasicSequence {
            operator: self.clone(),
            polys,
        })
    }
}

/// Equality compares spacing and coefficients (zero-padded); the truncation
/// bounds themselves are not compared.
impl PartialEq for DeltaSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.h != other.h {
            return false;
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Eq for DeltaSeries {}

impl Add for &DeltaSeries {
    type Output = DeltaSeries;
    fn add(self, rhs: &DeltaSeries) -> DeltaSeries {
        assert_eq!(self.h, rhs.h, "adding operators over different lattices");
        let bound = self.order_bound().min(rhs.order_bound());
        let coeffs = (0..=bound).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        DeltaSeries {
            coeffs,
            h: self.h.clone(),
        }
    }
}

/// The basic polynomial sequence of a delta operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicSequence {
    operator: DeltaSeries,
    polys: Vec<Polynomial>,
}

impl BasicSequence {
    pub fn operator(&self) -> &DeltaSeries {
        &self.operator
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn poly(&self, n: usize) -> &Polynomial {
        &self.polys[n]
    }

    /// Highest index in the sequence.
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// Verifies the three defining conditions against the stored operator.
    pub fn check(&self) -> BasicCheckReport {
        check_basic(&self.operator, &self.polys)
    }
}

/// Outcome of checking the basic-sequence axioms; `None` means the
/// condition held at every index, otherwise the first failing index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicCheckReport {
    /// Condition 1: `p_0 = 1`.
    pub starts_at_one: bool,
    /// Condition 2: first `n >= 1` with `p_n(0) != 0`.
    pub nonvanishing_at_zero: Option<usize>,
    /// Condition 3: first `n >= 1` where `Q p_n != n p_{n-1}` (or the
    /// application could not be performed exactly).
    pub lowering_failure: Option<usize>,
}

impl BasicCheckReport {
    pub fn passed(&self) -> bool {
        self.starts_at_one && self.nonvanishing_at_zero.is_none() && self.lowering_failure.is_none()
    }

    /// Smallest failing index over all three conditions, if any.
    pub fn first_failure(&self) -> Option<usize> {
        let mut first: Option<usize> = None;
        if !self.starts_at_one {
            first = Some(0);
        }
        for n in [self.nonvanishing_at_zero, self.lowering_failure]
            .into_iter()
            .flatten()
        {
            first = Some(first.map_or(n, |f| f.min(n)));
        }
        first
    }
}

/// Checks the three basic-sequence conditions of `polys` against `q`.
pub fn check_basic(q: &DeltaSeries, polys: &[Polynomial]) -> BasicCheckReport {
    let starts_at_one = polys.first().is_some_and(|p| *p == Polynomial::one());
    let mut nonvanishing_at_zero = None;
    let mut lowering_failure = None;
    let zero = Rat::zero();
    for (n, p) in polys.iter().enumerate().skip(1) {
        if nonvanishing_at_zero.is_none() && !p.eval(&zero).is_zero() {
            nonvanishing_at_zero = Some(n);
        }
        if lowering_failure.is_none() {
            let expected = polys[n - 1].scale(&rat_int(n as i64));
            match q.apply(p) {
                Ok(applied) if applied == expected => {}
                _ => lowering_failure = Some(n),
            }
        }
    }
    BasicCheckReport {
        starts_at_one,
        nonvanishing_at_zero,
        lowering_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn forward(h: &Rat, n: usize) -> DeltaSeries {
        DeltaSeries::delta(DeltaKind::Forward, h, n).unwrap()
    }

    // ---- make_delta ----

    #[test]
    fn forward_series_is_exponential_minus_one() {
        let q = forward(&rat_int(1), 3);
        assert_eq!(
            q.coeffs(),
            &[rat_int(0), rat_int(1), rat(1, 2), rat(1, 6)]
        );
        assert!(q.is_delta());
    }

    #[test]
    fn symmetric_series_is_sinh() {
        let q = DeltaSeries::delta(DeltaKind::Symmetric, &rat_int(1), 4).unwrap();
        assert_eq!(
            q.coeffs(),
            &[rat_int(0), rat_int(1), rat_int(0), rat(1, 6), rat_int(0)]
        );
    }

    #[test]
    fn derivative_series_is_d() {
        let q = DeltaSeries::delta(DeltaKind::Derivative, &rat_int(1), 3).unwrap();
        assert_eq!(q.coeffs(), &[rat_int(0), rat_int(1), rat_int(0), rat_int(0)]);
    }

    #[test]
    fn backward_series_alternates() {
        // (1 - e^{-hD})/h at h = 2: q_k = (-1)^{k+1} 2^{k-1}/k!.
        let q = DeltaSeries::delta(DeltaKind::Backward, &rat_int(2), 3).unwrap();
        assert_eq!(q.coeffs(), &[rat_int(0), rat_int(1), rat_int(-1), rat(2, 3)]);
    }

    #[test]
    fn delta_rejects_zero_bound_and_bad_spacing() {
        let err = DeltaSeries::delta(DeltaKind::Forward, &rat_int(1), 0).unwrap_err();
        assert!(matches!(err, OperatorError::InvalidBound { .. }));
        let err = DeltaSeries::delta(DeltaKind::Forward, &rat_int(0), 3).unwrap_err();
        assert_eq!(err, OperatorError::NonPositiveSpacing);
    }

    // ---- apply ----

    #[test]
    fn forward_difference_of_square() {
        // ((x+1)^2 - x^2)/1 = 2x + 1
        let q = forward(&rat_int(1), 4);
        let p = Polynomial::from_i64(&[0, 0, 1]);
        assert_eq!(q.apply(&p).unwrap(), Polynomial::from_i64(&[1, 2]));
    }

    #[test]
    fn derivative_of_cube() {
        let q = DeltaSeries::delta(DeltaKind::Derivative, &rat_int(1), 4).unwrap();
        let p = Polynomial::from_i64(&[0, 0, 0, 1]);
        assert_eq!(q.apply(&p).unwrap(), Polynomial::from_i64(&[0, 0, 3]));
    }

    #[test]
    fn symmetric_difference_of_cube_matches_expansion_oracle() {
        // Oracle: ((x+1)^3 - (x-1)^3)/2 expanded with polynomial arithmetic.
        let plus = Polynomial::from_i64(&[1, 1]);
        let minus = Polynomial::from_i64(&[-1, 1]);
        let cube = |p: &Polynomial| &(p * p) * p;
        let expected = (&cube(&plus) - &cube(&minus)).scale(&rat(1, 2));
        assert_eq!(expected, Polynomial::from_i64(&[1, 0, 3]));

        let q = DeltaSeries::delta(DeltaKind::Symmetric, &rat_int(1), 4).unwrap();
        let p = Polynomial::from_i64(&[0, 0, 0, 1]);
        assert_eq!(q.apply(&p).unwrap(), expected);
    }

    #[test]
    fn apply_rejects_degree_overflow() {
        let q = forward(&rat_int(1), 2);
        let p = Polynomial::from_i64(&[0, 0, 0, 1]);
        assert!(matches!(
            q.apply(&p),
            Err(OperatorError::DegreeOverflow { degree: 3, bound: 2 })
        ));
    }

    // ---- pincherle ----

    #[test]
    fn pincherle_of_derivative_is_identity() {
        let d = DeltaSeries::delta(DeltaKind::Derivative, &rat_int(1), 4).unwrap();
        assert_eq!(d.pincherle(), DeltaSeries::identity(&rat_int(1), 3));
    }

    #[test]
    fn pincherle_of_forward_is_shift() {
        let q = forward(&rat_int(1), 5);
        assert_eq!(q.pincherle(), DeltaSeries::shift(&rat_int(1), 4).unwrap());
    }

    #[test]
    fn pincherle_is_linear_and_scales() {
        // c·D^2 -> 2c·D
        let d2 = DeltaSeries::from_coeffs(vec![rat_int(0), rat_int(0), rat(3, 7)], rat_int(1));
        assert_eq!(
            d2.pincherle(),
            DeltaSeries::from_coeffs(vec![rat_int(0), rat(6, 7)], rat_int(1))
        );

        let a = forward(&rat_int(1), 6);
        let b = DeltaSeries::shift(&rat_int(1), 6).unwrap();
        let alpha = rat(2, 3);
        let beta = rat(-5, 4);
        let combined = &a.scale(&alpha) + &b.scale(&beta);
        let expected = &a.pincherle().scale(&alpha) + &b.pincherle().scale(&beta);
        assert_eq!(combined.pincherle(), expected);
    }

    // ---- invert ----

    #[test]
    fn invert_identity_and_scalar() {
        let id = DeltaSeries::identity(&rat_int(1), 3);
        assert_eq!(id.invert().unwrap(), id);
        let two = DeltaSeries::from_coeffs(vec![rat_int(2), rat_int(0)], rat_int(1));
        assert_eq!(
            two.invert().unwrap(),
            DeltaSeries::from_coeffs(vec![rat(1, 2), rat_int(0)], rat_int(1))
        );
    }

    #[test]
    fn invert_shift_gives_inverse_shift() {
        // T^{-1} has coefficients (-1)^k/k!.
        let t = DeltaSeries::shift(&rat_int(1), 5).unwrap();
        let inv = t.invert().unwrap();
        for k in 0..=5 {
            let expected = rat(if k % 2 == 0 { 1 } else { -1 }, 1)
                / Rat::from_integer(factorial(k));
            assert_eq!(inv.coeff(k), expected, "k = {}", k);
        }
        // Composing the two gives the identity up to the bound.
        assert_eq!(t.compose(&inv), DeltaSeries::identity(&rat_int(1), 5));
    }

    #[test]
    fn invert_is_involutive() {
        let s = DeltaSeries::from_coeffs(
            vec![rat(2, 3), rat(1, 5), rat_int(-4), rat(7, 2)],
            rat_int(1),
        );
        assert_eq!(s.invert().unwrap().invert().unwrap(), s);
    }

    #[test]
    fn invert_rejects_zero_constant_term() {
        let q = forward(&rat_int(1), 3);
        assert_eq!(q.invert().unwrap_err(), OperatorError::NonInvertible);
    }

    // ---- basic sequences ----

    #[test]
    fn forward_basic_polynomials_are_falling_factorials() {
        let q = forward(&rat_int(1), 3);
        let seq = q.basic_sequence(3).unwrap();
        // x(x-1)(x-2)
        let expected = &(&Polynomial::x() * &Polynomial::from_i64(&[-1, 1]))
            * &Polynomial::from_i64(&[-2, 1]);
        assert_eq!(seq.poly(3), &expected);
        assert!(seq.check().passed());
    }

    #[test]
    fn derivative_basic_polynomials_are_monomials() {
        let q = DeltaSeries::delta(DeltaKind::Derivative, &rat_int(1), 4).unwrap();
        let seq = q.basic_sequence(4).unwrap();
        for (n, p) in seq.polys().iter().enumerate() {
            assert_eq!(p, &Polynomial::monomial(n, rat_int(1)));
        }
    }

    #[test]
    fn symmetric_basic_cubic() {
        let q = DeltaSeries::delta(DeltaKind::Symmetric, &rat_int(1), 3).unwrap();
        let seq = q.basic_sequence(3).unwrap();
        assert_eq!(seq.poly(3), &Polynomial::from_i64(&[0, -1, 0, 1])); // x^3 - x
        assert!(seq.check().passed());
    }

    #[test]
    fn backward_basic_polynomials_are_rising_factorials() {
        let h = rat(1, 2);
        let q = DeltaSeries::delta(DeltaKind::Backward, &h, 3).unwrap();
        let seq = q.basic_sequence(3).unwrap();
        // x(x+h)(x+2h)
        let expected = &(&Polynomial::x()
            * &Polynomial::from_coeffs(vec![h.clone(), rat_int(1)]))
            * &Polynomial::from_coeffs(vec![&h * rat_int(2), rat_int(1)]);
        assert_eq!(seq.poly(3), &expected);
        assert!(seq.check().passed());
    }

    #[test]
    fn basic_sequence_rejects_non_delta_and_overflow() {
        let t = DeltaSeries::shift(&rat_int(1), 4).unwrap();
        assert_eq!(t.basic_sequence(2).unwrap_err(), OperatorError::NotDelta);
        let q = forward(&rat_int(1), 3);
        assert!(matches!(
            q.basic_sequence(4),
            Err(OperatorError::InvalidBound { .. })
        ));
    }

    // ---- check_basic ----

    #[test]
    fn check_reports_constant_offset() {
        let q = forward(&rat_int(1), 3);
        let mut polys = q.basic_sequence(3).unwrap().polys.clone();
        polys[1] = Polynomial::from_i64(&[1, 1]); // p_1 = x + 1
        let report = check_basic(&q, &polys);
        assert_eq!(report.nonvanishing_at_zero, Some(1));
        assert_eq!(report.first_failure(), Some(1));
        assert!(!report.passed());
    }

    #[test]
    fn check_reports_broken_lowering() {
        let q = forward(&rat_int(1), 4);
        let mut polys = q.basic_sequence(4).unwrap().polys.clone();
        polys[3] = Polynomial::from_i64(&[0, 0, 0, 2]); // wrong scale, still vanishes at 0
        let report = check_basic(&q, &polys);
        assert!(report.starts_at_one);
        assert_eq!(report.nonvanishing_at_zero, None);
        assert_eq!(report.lowering_failure, Some(3));
    }

    #[test]
    fn check_passes_for_generated_sequences() {
        for kind in DeltaKind::all() {
            let q = DeltaSeries::delta(kind, &rat(1, 2), 8).unwrap();
            assert!(q.basic_sequence(8).unwrap().check().passed(), "{}", kind);
        }
    }

    // ---- structural invariants ----

    #[test]
    fn series_commute_with_shift() {
        let n = 8;
        for kind in DeltaKind::all() {
            for h in [rat_int(1), rat(1, 2), rat_int(3)] {
                let q = DeltaSeries::delta(kind, &h, n).unwrap();
                let t = DeltaSeries::shift(&h, n).unwrap();
                for degree in 0..n {
                    let p = Polynomial::monomial(degree, rat(3, 5));
                    let qt = q.apply(&t.apply(&p).unwrap()).unwrap();
                    let tq = t.apply(&q.apply(&p).unwrap()).unwrap();
                    assert_eq!(qt, tq, "{} h={} degree={}", kind, h, degree);
                }
            }
        }
    }

    #[test]
    fn heisenberg_weyl_commutator_acts_as_identity() {
        let n = 10;
        for kind in DeltaKind::all() {
            let q = DeltaSeries::delta(kind, &rat(1, 2), n).unwrap();
            let beta = q.pincherle().invert().unwrap();
            for degree in 0..n {
                let p = Polynomial::monomial(degree, rat_int(1));
                let qxb = q.apply(&beta.apply(&p).unwrap().mul_x()).unwrap();
                let xbq = beta.apply(&q.apply(&p).unwrap()).unwrap().mul_x();
                assert_eq!(&qxb - &xbq, p, "{} degree={}", kind, degree);
            }
        }
    }
}
