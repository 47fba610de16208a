//! Ehrhart quasi-polynomials in the per-residue binomial basis.
//!
//! For a polytope of dimension `n` and denominator `k`, write `m = lk + r`
//! with `0 <= r < k`. Each residue class is a polynomial of degree `n` in `l`,
//! stored through its coordinates in the basis `C(l + n - i, n)`:
//!
//! ```text
//! L(lk + r) = sum_{i=0..n} delta[i][r] * C(l + n - i, n)
//! ```
//!
//! Interleaving the columns gives the numerator of the generating function
//! `sum_m L(m) t^m = (delta_0 + ... + delta_{k(n+1)-1} t^{k(n+1)-1}) / (1 - t^k)^{n+1}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::count::{count_points, CountConfig};
use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::Rational;
use crate::serde_big;

/// Generalized binomial coefficient `x (x-1) ... (x-n+1) / n!`, for any integer `x`.
pub fn binomial(x: &BigInt, n: u32) -> BigInt {
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for j in 0..n {
        numer *= x - j;
        denom *= j + 1;
    }
    numer / denom
}

pub fn binomial_i64(x: i64, n: u32) -> BigInt {
    binomial(&BigInt::from(x), n)
}

/// `C(x, n) = sign * C(top, n)` with `sign = (-1)^n` and `top = n - 1 - x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    pub sign: i32,
    pub top: BigInt,
}

pub fn negative_binomial_reflect(x: &BigInt, n: u32) -> Reflection {
    Reflection {
        sign: if n.is_multiple_of(2) { 1 } else { -1 },
        top: BigInt::from(n) - 1 - x,
    }
}

/// The coefficients `delta[i][r]`, `0 <= i <= n`, `0 <= r < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueDeltaTable {
    n: usize,
    k: usize,
    #[serde(with = "serde_big::table")]
    delta: Vec<Vec<BigInt>>,
}

impl ResidueDeltaTable {
    /// `delta[i][r]`; must be `(n + 1) x k` with `k >= 1`.
    pub fn new(delta: Vec<Vec<BigInt>>) -> Self {
        assert!(!delta.is_empty(), "table needs at least one row");
        let k = delta[0].len();
        assert!(k >= 1, "table needs at least one residue column");
        assert!(
            delta.iter().all(|row| row.len() == k),
            "table rows must have equal length"
        );
        Self {
            n: delta.len() - 1,
            k,
            delta,
        }
    }

    /// Builds from residue columns `columns[r][i]`.
    pub fn from_columns(columns: &[Vec<BigInt>]) -> Self {
        let n1 = columns.first().map_or(0, Vec::len);
        Self::new(
            (0..n1)
                .map(|i| columns.iter().map(|c| c[i].clone()).collect())
                .collect(),
        )
    }

    pub fn from_i64_columns(columns: &[&[i64]]) -> Self {
        let cols: Vec<Vec<BigInt>> = columns
            .iter()
            .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_columns(&cols)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, r: usize) -> &BigInt {
        &self.delta[i][r]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.delta
    }

    pub fn column(&self, r: usize) -> Vec<BigInt> {
        self.delta.iter().map(|row| row[r].clone()).collect()
    }

    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.k)
            .map(|r| self.delta.iter().map(|row| &row[r]).sum())
            .collect()
    }
}

impl fmt::Display for ResidueDeltaTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.k {
            if r > 0 {
                write!(f, " / ")?;
            }
            write!(f, "r={r}: (")?;
            for i in 0..=self.n {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.delta[i][r])?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The full numerator coefficients, length `k(n + 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaVector {
    n: usize,
    k: usize,
    #[serde(with = "serde_big::vec")]
    entries: Vec<BigInt>,
}

impl DeltaVector {
    pub fn new(n: usize, k: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), k * (n + 1), "delta-vector length must be k(n+1)");
        Self { n, k, entries }
    }

    pub fn from_i64(n: usize, k: usize, entries: &[i64]) -> Self {
        Self::new(n, k, entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for DeltaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, d) in self.entries.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// `entries[i * k + r] = delta[i][r]`.
pub fn interleave(table: &ResidueDeltaTable) -> DeltaVector {
    let entries = (0..=table.n)
        .flat_map(|i| (0..table.k).map(move |r| table.delta[i][r].clone()))
        .collect();
    DeltaVector::new(table.n, table.k, entries)
}

/// An Ehrhart quasi-polynomial with period `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhrhartQP {
    table: ResidueDeltaTable,
}

impl EhrhartQP {
    pub fn from_table(table: ResidueDeltaTable) -> Self {
        Self { table }
    }

    pub fn n(&self) -> usize {
        self.table.n
    }

    pub fn k(&self) -> usize {
        self.table.k
    }

    pub fn table(&self) -> &ResidueDeltaTable {
        &self.table
    }

    /// Value at any integer `m`, negative included. `r = m mod k` is taken in
    /// `[0, k)` and `l = (m - r) / k` may be negative.
    pub fn evaluate(&self, m: &BigInt) -> BigInt {
        let k = BigInt::from(self.k());
        let n = self.n();
        let r = ((m % &k) + &k) % &k;
        let l = (m - &r) / &k;
        let r = r.to_usize().expect("residue is below k");
        (0..=n)
            .map(|i| self.table.get(i, r) * binomial(&(&l + n - i), n as u32))
            .sum()
    }

    /// Coefficients of the residue-`r` polynomial in powers of `l`.
    pub fn residue_polynomial(&self, r: usize) -> Vec<Rational> {
        let n = self.n();
        let mut total = vec![Rational::zero(); n + 1];
        for i in 0..=n {
            let coef = Rational::from_integer(self.table.get(i, r).clone());
            let basis = binomial_polynomial(BigInt::from(n - i), n);
            for (t, b) in total.iter_mut().zip(basis) {
                *t += &coef * b;
            }
        }
        total
    }

    /// The periodic coefficients at residue `r`: `c_j(r)` with
    /// `L(m) = sum_j c_j(r) m^j` whenever `m = r (mod k)`.
    pub fn periodic_coefficients(&self, r: usize) -> Vec<Rational> {
        // substitute l = (m - r) / k
        let k = Rational::from_integer(BigInt::from(self.k()));
        let shift = Rational::from_integer(BigInt::from(r));
        let linear = [-&shift / &k, Rational::one() / &k];
        let mut result = vec![Rational::zero()];
        for coef in self.residue_polynomial(r).iter().rev() {
            result = poly_mul(&result, &linear);
            result[0] += coef;
        }
        result.resize(self.n() + 1, Rational::zero());
        result
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `C(l + shift, n)` as a polynomial in `l`.
fn binomial_polynomial(shift: BigInt, n: usize) -> Vec<Rational> {
    let mut poly = vec![Rational::one()];
    let mut factorial = BigInt::one();
    for j in 0..n {
        let c = Rational::from_integer(&shift - j);
        poly = poly_mul(&poly, &[c, Rational::one()]);
        factorial *= j + 1;
    }
    let factorial = Rational::from_integer(factorial);
    poly.into_iter().map(|c| c / &factorial).collect()
}

pub fn evaluate_qp(qp: &EhrhartQP, m: i64) -> BigInt {
    qp.evaluate(&BigInt::from(m))
}

/// `k` as a machine integer, or a budget error when it cannot possibly be enumerated.
pub fn period(p: &Polytope) -> Result<usize> {
    let k = p.denominator();
    k.to_usize().ok_or_else(|| Error::BudgetExceeded {
        cells: format!("period {k}"),
        budget: u64::MAX,
    })
}

/// `L(m)` for `m = 0 .. count - 1`, computed concurrently.
pub fn sample_counts(p: &Polytope, count: usize, cfg: &CountConfig) -> Result<Vec<BigInt>> {
    (0..count as u64)
        .into_par_iter()
        .map(|m| count_points(p, m, false, cfg).map(BigInt::from))
        .collect()
}

/// Fit the quasi-polynomial from `counts[m] = L(m)`, `m = 0 .. k(n+1) - 1`.
///
/// At `l = 0, 1, ...` only the basis elements with `i <= l` are nonzero and
/// the diagonal entry `C(n, n)` is 1, so each residue column is solved by
/// forward substitution.
pub fn fit_qp_from_counts(n: usize, k: usize, counts: &[BigInt]) -> Result<EhrhartQP> {
    assert!(k >= 1);
    assert!(
        counts.len() >= k * (n + 1),
        "need L(m) for m < k(n+1)"
    );
    let mut columns = Vec::with_capacity(k);
    for r in 0..k {
        let mut column: Vec<BigInt> = Vec::with_capacity(n + 1);
        for l in 0..=n {
            let mut rest = Rational::from_integer(counts[l * k + r].clone());
            for (i, d) in column.iter().enumerate() {
                rest -= Rational::from_integer(d * binomial_i64((l + n - i) as i64, n as u32));
            }
            let diagonal = Rational::from_integer(binomial_i64(n as i64, n as u32));
            let value = rest / diagonal;
            if !value.is_integer() {
                return Err(Error::NonIntegerDelta {
                    i: l,
                    r,
                    value: value.to_string(),
                });
            }
            column.push(value.to_integer());
        }
        columns.push(column);
    }
    Ok(EhrhartQP::from_table(ResidueDeltaTable::from_columns(&columns)))
}

/// Fit the Ehrhart quasi-polynomial of `p` with period `k = denominator(p)`.
pub fn fit_qp(p: &Polytope, cfg: &CountConfig) -> Result<EhrhartQP> {
    let k = period(p)?;
    let n = p.dim();
    let counts = sample_counts(p, k * (n + 1), cfg)?;
    fit_qp_from_counts(n, k, &counts)
}

pub fn delta_vector(qp: &EhrhartQP) -> DeltaVector {
    interleave(qp.table())
}

/// Coefficients `0 .. k(n+1) - 1` of `(1 - t^k)^(n+1) * sum_m L(m) t^m`.
pub fn delta_series_from_counts(n: usize, k: usize, counts: &[BigInt]) -> DeltaVector {
    let len = k * (n + 1);
    assert!(counts.len() >= len, "need L(m) for m < k(n+1)");
    let entries = (0..len)
        .map(|j| {
            (0..=n + 1)
                .take_while(|s| s * k <= j)
                .map(|s| {
                    let c = binomial_i64((n + 1) as i64, s as u32) * &counts[j - s * k];
                    if s % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                })
                .sum()
        })
        .collect();
    DeltaVector::new(n, k, entries)
}

/// The delta-vector read directly off the truncated generating series.
pub fn delta_vector_series(p: &Polytope, cfg: &CountConfig) -> Result<DeltaVector> {
    let k = period(p)?;
    let n = p.dim();
    let counts = sample_counts(p, k * (n + 1), cfg)?;
    Ok(delta_series_from_counts(n, k, &counts))
}

/// Both routes from one set of counts, for callers that need them side by side.
pub fn fit_and_series(p: &Polytope, cfg: &CountConfig) -> Result<(EhrhartQP, DeltaVector, Vec<BigInt>)> {
    let k = period(p)?;
    let n = p.dim();
    let counts = sample_counts(p, k * (n + 1), cfg)?;
    let qp = fit_qp_from_counts(n, k, &counts)?;
    let series = delta_series_from_counts(n, k, &counts);
    Ok((qp, series, counts))
}

/// True when every entry is non-negative.
pub fn is_nonnegative(d: &DeltaVector) -> bool {
    !d.entries.iter().any(Signed::is_negative)
}
