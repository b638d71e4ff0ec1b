//! The discrete Cauchy–Euler equation.
//!
//! For the continuous equation `x^2 u'' + a x u' + b u = 0` the umbral
//! discretization on the forward lattice collapses to the three-term
//! recurrence
//!
//! ```text
//! (n^2 + (a-1)n + b) u_n - n(a + 2n - 2) u_{n-1} + n(n-1) u_{n-2} = 0
//! ```
//!
//! whose diagonal coefficient is the indicial polynomial
//! `L_n = n(n-1) + a n + b`. Steps where `L_n = 0` (exactly the
//! nonnegative integer indicial roots) do not determine `u_n`; after an
//! exact consistency check a free parameter is introduced there, so the
//! solution space has one basis element per such root. The recurrence
//! contains no lattice spacing: its solutions are spacing-independent.

use std::error::Error;
use std::fmt;

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{LatticeFunction, UmbralSeries};
use crate::rational::{binomial, factorial, falling, rat_int, rat_pow, rat_string, Rat};

/// Errors from the discrete Euler machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EulerError {
    /// Column index exceeds row index in the coefficient triangle.
    IndexOrder { n: usize, j: usize },
    /// Requested root exceeds the lattice extent.
    BoundExceeded { r: usize, n_max: usize },
    /// Evaluation point is not on the lattice (`x/h` not an integer) or
    /// the spacing is not positive.
    LatticeMismatch { x: Rat, h: Rat },
    /// A singular step failed its consistency condition.
    InconsistentRecurrence { n: usize },
}

impl fmt::Display for EulerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EulerError::IndexOrder { n, j } => {
                write!(f, "column index j = {} exceeds row index n = {}", j, n)
            }
            EulerError::BoundExceeded { r, n_max } => {
                write!(f, "root r = {} exceeds lattice extent n_max = {}", r, n_max)
            }
            EulerError::LatticeMismatch { x, h } => {
                write!(f, "spacing {} does not tile the point {} exactly", h, x)
            }
            EulerError::InconsistentRecurrence { n } => {
                write!(f, "consistency condition violated at singular step n = {}", n)
            }
        }
    }
}

impl Error for EulerError {}

/// Parameters `(a, b)` of `x^2 u'' + a x u' + b u = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerProblem {
    pub a: Rat,
    pub b: Rat,
}

impl EulerProblem {
    pub fn new(a: Rat, b: Rat) -> Self {
        Self { a, b }
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(a: i64, b: i64) -> Self {
        Self::new(rat_int(a), rat_int(b))
    }

    /// Indicial polynomial `L_k = k(k-1) + a k + b`.
    pub fn indicial(&self, k: i64) -> Rat {
        let k = rat_int(k);
        &k * (&k - rat_int(1)) + &self.a * &k + &self.b
    }

    /// Solves the indicial equation `r^2 + (a-1)r + b = 0` over the
    /// rationals and flags nonnegative integer roots.
    pub fn indicial_roots(&self) -> IndicialData {
        let linear = &self.a - rat_int(1); // monic: r^2 + (a-1) r + b
        let disc = &linear * &linear - rat_int(4) * &self.b;
        let (class, roots) = if disc.is_negative() {
            (RootClass::ComplexPair, Vec::new())
        } else if disc.is_zero() {
            let root = -linear / rat_int(2);
            (RootClass::DoubleRational, vec![(root, 2)])
        } else {
            match rational_sqrt(&disc) {
                Some(sqrt_disc) => {
                    let r1 = (-&linear - &sqrt_disc) / rat_int(2);
                    let r2 = (-&linear + &sqrt_disc) / rat_int(2);
                    (RootClass::DistinctRational, vec![(r1, 1), (r2, 1)])
                }
                None => (RootClass::IrrationalPair, Vec::new()),
            }
        };
        let integer_roots = roots
            .iter()
            .filter(|(r, _)| r.is_integer() && !r.is_negative())
            .filter_map(|(r, _)| r.to_integer().to_usize())
            .collect();
        IndicialData {
            class,
            roots,
            integer_roots,
        }
    }

    /// Diagonal action of the Euler operator in the basic-polynomial
    /// basis: coefficient `zeta_k` is scaled by `L_k`. Meaningful for the
    /// forward basis, where the lattice evaluation truncates.
    pub fn apply_diagonal(&self, f: &UmbralSeries) -> UmbralSeries {
        let zeta = f
            .zeta()
            .iter()
            .enumerate()
            .map(|(k, z)| z * self.indicial(k as i64))
            .collect();
        UmbralSeries::new(zeta, f.h().clone(), f.basis())
    }
}

/// Exact square root of a nonnegative rational, if it is rational.
fn rational_sqrt(value: &Rat) -> Option<Rat> {
    let sqrt_part = |part: &BigInt| -> Option<BigInt> {
        let root = part.sqrt();
        (&root * &root == *part).then_some(root)
    };
    let numer = sqrt_part(value.numer())?;
    let denom = sqrt_part(value.denom())?;
    Some(Rat::new(numer, denom))
}

/// Classification of the indicial root pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    DistinctRational,
    DoubleRational,
    IrrationalPair,
    ComplexPair,
}

impl RootClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootClass::DistinctRational => "two distinct rational roots",
            RootClass::DoubleRational => "double rational root",
            RootClass::IrrationalPair => "irrational real root pair",
            RootClass::ComplexPair => "complex conjugate root pair",
        }
    }
}

/// Indicial roots with multiplicity, plus the nonnegative integer subset
/// that parametrizes power-type lattice solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicialData {
    pub class: RootClass,
    /// Rational roots as `(root, multiplicity)`; empty for irrational or
    /// complex pairs.
    pub roots: Vec<(Rat, usize)>,
    pub integer_roots: Vec<usize>,
}

impl IndicialData {
    /// Human-readable summary naming the root type.
    pub fn diagnostic(&self) -> String {
        let mut out = self.class.as_str().to_string();
        if !self.roots.is_empty() {
            let rendered: Vec<String> = self
                .roots
                .iter()
                .map(|(r, m)| {
                    if *m > 1 {
                        format!("{} (multiplicity {})", r, m)
                    } else {
                        r.to_string()
                    }
                })
                .collect();
            out.push_str(": ");
            out.push_str(&rendered.join(", "));
        }
        if self.integer_roots.is_empty() {
            out.push_str("; no nonnegative integer roots");
        } else {
            let rendered: Vec<String> =
                self.integer_roots.iter().map(ToString::to_string).collect();
            out.push_str("; nonnegative integer roots: ");
            out.push_str(&rendered.join(", "));
        }
        out
    }
}

impl Serialize for IndicialData {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Root {
            #[serde(with = "rat_string")]
            root: Rat,
            multiplicity: usize,
        }
        let roots: Vec<Root> = self
            .roots
            .iter()
            .map(|(r, m)| Root {
                root: r.clone(),
                multiplicity: *m,
            })
            .collect();
        let mut st = serializer.serialize_struct("IndicialData", 3)?;
        st.serialize_field("class", self.class.as_str())?;
        st.serialize_field("roots", &roots)?;
        st.serialize_field("integer_roots", &self.integer_roots)?;
        st.end()
    }
}

/// The three-term recurrence for a fixed `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteEulerEquation {
    problem: EulerProblem,
}

impl DiscreteEulerEquation {
    pub fn new(problem: EulerProblem) -> Self {
        Self { problem }
    }

    pub fn problem(&self) -> &EulerProblem {
        &self.problem
    }

    /// Brute-force coefficient: the literal alternating sum
    /// `c_nj = sum_{k=j}^{n} (-1)^{k-j} C(n-j, k-j) L_k`.
    ///
    /// This is the reference the closed forms are checked against.
    pub fn coefficient_sum(&self, n: usize, j: usize) -> Result<Rat, EulerError> {
        if j > n {
            return Err(EulerError::IndexOrder { n, j });
        }
        let mut acc = Rat::zero();
        for k in j..=n {
            let term = Rat::from_integer(binomial(n - j, k - j)) * self.problem.indicial(k as i64);
            if (k - j) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        Ok(acc)
    }

    /// Closed-form nonzero coefficients of row `n`:
    /// `(c_{n,n-2}, c_{n,n-1}, c_{n,n}) = (2, -a - 2(n-1), L_n)`.
    pub fn coefficients(&self, n: usize) -> (Rat, Rat, Rat) {
        let n_i = n as i64;
        let c_nm2 = rat_int(2);
        let c_nm1 = -&self.problem.a - rat_int(2 * (n_i - 1));
        let c_nn = self.problem.indicial(n_i);
        (c_nm2, c_nm1, c_nn)
    }

    /// Residual of the recurrence at index `n` for given lattice values;
    /// terms with negative indices are dropped (their multipliers vanish).
    pub fn residual_at(&self, values: &[Rat], n: usize) -> Rat {
        let n_i = n as i64;
        let mut acc = self.problem.indicial(n_i) * &values[n];
        if n >= 1 {
            acc -= rat_int(n_i) * (&self.problem.a + rat_int(2 * n_i - 2)) * &values[n - 1];
        }
        if n >= 2 {
            acc += rat_int(n_i * (n_i - 1)) * &values[n - 2];
        }
        acc
    }

    /// Materializes the coefficient table for rows `0..=n_max`.
    pub fn table(&self, n_max: usize) -> EquationTable {
        let rows = (0..=n_max)
            .map(|n| {
                let (c_nm2, c_nm1, c_nn) = self.coefficients(n);
                EquationRow {
                    n,
                    c_nm2,
                    c_nm1,
                    c_nn,
                }
            })
            .collect();
        EquationTable {
            a: self.problem.a.clone(),
            b: self.problem.b.clone(),
            rows,
        }
    }
}

/// One row of the serialized coefficient table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationRow {
    pub n: usize,
    #[serde(with = "rat_string")]
    pub c_nm2: Rat,
    #[serde(with = "rat_string")]
    pub c_nm1: Rat,
    #[serde(with = "rat_string")]
    pub c_nn: Rat,
}

/// Serialized form of the discrete equation: parameters and coefficient
/// rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationTable {
    #[serde(with = "rat_string")]
    pub a: Rat,
    #[serde(with = "rat_string")]
    pub b: Rat,
    pub rows: Vec<EquationRow>,
}

/// Basis of lattice solutions of the recurrence up to `n_max`.
///
/// There is one basis element per nonnegative integer indicial root
/// `r <= n_max`, normalized to the value `r!` at its own free index and `0`
/// at the other free indices. The recurrence is spacing-free, so basis
/// elements carry the canonical spacing `h = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub n_max: usize,
    pub free_indices: Vec<usize>,
    pub basis: Vec<LatticeFunction>,
    pub indicial: IndicialData,
}

impl SolutionSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

impl Serialize for SolutionSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SolutionSpace", 4)?;
        st.serialize_field("dimension", &self.dimension())?;
        st.serialize_field("free_indices", &self.free_indices)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("diagnostic", &self.indicial.diagnostic())?;
        st.end()
    }
}

/// Steps the recurrence forward through `n = 0..=n_max`, treating each
/// value as a linear form in the free parameters discovered so far.
///
/// At a regular step (`L_n != 0`) the new value is determined; at a
/// singular step the right-hand side must vanish identically (checked
/// exactly, coefficient by coefficient) and `u_n` becomes a new free
/// parameter.
pub fn solve_recurrence(
    problem: &EulerProblem,
    n_max: usize,
) -> Result<SolutionSpace, EulerError> {
    let mut free_indices: Vec<usize> = Vec::new();
    // rows[n][i] is the coefficient of the i-th free parameter in u_n;
    // rows created before a parameter existed are implicitly zero there.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    let coeff_at = |row: &[Rat], i: usize| row.get(i).cloned().unwrap_or_else(Rat::zero);

    for n in 0..=n_max {
        let n_i = n as i64;
        let lambda = problem.indicial(n_i);
        let mut rhs = vec![Rat::zero(); free_indices.len()];
        if n >= 1 {
            let c1 = rat_int(n_i) * (&problem.a + rat_int(2 * n_i - 2));
            if !c1.is_zero() {
                for (i, slot) in rhs.iter_mut().enumerate() {
                    *slot += &c1 * coeff_at(&rows[n - 1], i);
                }
            }
        }
        if n >= 2 {
            let c2 = rat_int(n_i * (n_i - 1));
            for (i, slot) in rhs.iter_mut().enumerate() {
                *slot -= &c2 * coeff_at(&rows[n - 2], i);
            }
        }
        if lambda.is_zero() {
            if rhs.iter().any(|c| !c.is_zero()) {
                return Err(EulerError::InconsistentRecurrence { n });
            }
            free_indices.push(n);
            let mut unit = vec![Rat::zero(); free_indices.len()];
            *unit.last_mut().unwrap() = Rat::one();
            rows.push(unit);
        } else {
            rows.push(rhs.into_iter().map(|c| c / &lambda).collect());
        }
    }

    let basis = free_indices
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            let scale = Rat::from_integer(factorial(r));
            let values = rows.iter().map(|row| coeff_at(row, i) * &scale).collect();
            LatticeFunction::new(values, Rat::one())
        })
        .collect();

    Ok(SolutionSpace {
        n_max,
        free_indices,
        basis,
        indicial: problem.indicial_roots(),
    })
}

/// The power-type exact solution for a nonnegative integer indicial root:
/// `u_n = 0` for `n < r` and `u_n = h^r · n!/(n-r)!` for `n >= r`.
pub fn exact_solution(r: usize, n_max: usize, h: &Rat) -> Result<LatticeFunction, EulerError> {
    if r > n_max {
        return Err(EulerError::BoundExceeded { r, n_max });
    }
    assert!(h.is_positive(), "lattice spacing must be positive");
    let h_pow = rat_pow(h, r as i64);
    let values = (0..=n_max)
        .map(|n| {
            if n < r {
                Rat::zero()
            } else {
                Rat::from_integer(falling(n, r)) * &h_pow
            }
        })
        .collect();
    Ok(LatticeFunction::new(values, h.clone()))
}

/// Exact residuals of the recurrence at `n = 2..=n_max` for given lattice
/// values. All residuals vanish exactly on a solution.
pub fn residuals(u: &LatticeFunction, problem: &EulerProblem) -> Vec<Rat> {
    let equation = DiscreteEulerEquation::new(problem.clone());
    (2..u.values.len())
        .map(|n| equation.residual_at(&u.values, n))
        .collect()
}

/// One row of a continuous-limit study.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitRow {
    pub h: Rat,
    /// `|p_r(x; h) - x^r|` where `p_r(x; h) = x(x-h)···(x-(r-1)h)`.
    pub error: Rat,
    /// Previous error divided by this one; `None` for the first row or
    /// when either error vanishes.
    pub ratio: Option<Rat>,
}

/// Compares the degree-`r` basic polynomial against the monomial it
/// discretizes, at a fixed point `x`, across a list of spacings. Each
/// spacing must tile `x` exactly. The error vanishes linearly in `h`, so
/// consecutive ratios approach 2 when the spacing halves.
pub fn limit_study(r: usize, x: &Rat, h_list: &[Rat]) -> Result<Vec<LimitRow>, EulerError> {
    let x_pow = rat_pow(x, r as i64);
    let mut rows: Vec<LimitRow> = Vec::with_capacity(h_list.len());
    for h in h_list {
        if !h.is_positive() || !(x / h).is_integer() {
            return Err(EulerError::LatticeMismatch {
                x: x.clone(),
                h: h.clone(),
            });
        }
        let mut p = Rat::one();
        for j in 0..r {
            p *= x - rat_int(j as i64) * h;
        }
        let error = (p - &x_pow).abs();
        let ratio = rows.last().and_then(|prev: &LimitRow| {
            (!prev.error.is_zero() && !error.is_zero()).then(|| &prev.error / &error)
        });
        rows.push(LimitRow {
            h: h.clone(),
            error,
            ratio,
        });
    }
    Ok(rows)
}
