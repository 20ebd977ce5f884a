//! Lattice points in dilates of `O(Z_n)`, the order polynomial of `Z_n`,
//! the Ehrhart polynomial and `h*` by inverting the Ehrhart series.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{CheckedAdd, One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::MAX_N;

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidInput(format!("n = {n} outside 1..={MAX_N}")));
    }
    Ok(())
}

// Left-to-right transfer over the value of the current coordinate. Odd
// positions sit below their right neighbour, even ones above it, so each
// step is a prefix or suffix sum.
fn dp_count<T: Clone + Zero + One + CheckedAdd>(n: usize, m: u64) -> Option<T> {
    let width = m as usize + 1;
    let mut counts = vec![T::one(); width];
    for p in 1..n {
        let mut next = vec![T::zero(); width];
        let mut acc = T::zero();
        if p % 2 == 1 {
            for v in 0..width {
                acc = acc.checked_add(&counts[v])?;
                next[v] = acc.clone();
            }
        } else {
            for v in (0..width).rev() {
                acc = acc.checked_add(&counts[v])?;
                next[v] = acc.clone();
            }
        }
        counts = next;
    }
    counts
        .iter()
        .try_fold(T::zero(), |acc, c| acc.checked_add(c))
}

/// `i(m) = #(Z^n ∩ m·O(Z_n))`, in O(n·m) exact arithmetic. Runs in checked
/// 128-bit integers and switches to arbitrary precision if that overflows.
pub fn count_lattice_points(n: usize, m: u64) -> Result<BigUint> {
    check_n(n)?;
    Ok(match dp_count::<u128>(n, m) {
        Some(x) => BigUint::from(x),
        None => dp_count::<BigUint>(n, m).expect("BigUint addition cannot overflow"),
    })
}

/// Largest box `(m+1)^n` the full-box oracle will scan.
pub const NAIVE_BOX_LIMIT: u128 = 10_000_000;

/// Counts lattice points of `m·O(Z_n)` by scanning the whole box
/// `{0..m}^n` and testing every zig-zag inequality. Only for small boxes.
pub fn count_lattice_points_naive(n: usize, m: u64) -> Result<u128> {
    check_n(n)?;
    let side = m as u128 + 1;
    if side.checked_pow(n as u32).is_none_or(|b| b > NAIVE_BOX_LIMIT) {
        return Err(Error::GuardExceeded {
            what: "naive lattice-point scan",
            n,
            limit: NAIVE_BOX_LIMIT as usize,
        });
    }
    let mut x = vec![0u64; n];
    let mut count = 0u128;
    loop {
        let feasible = (0..n - 1).all(|i| {
            // 0-based i even <=> z_{i+1} < z_{i+2}
            if i % 2 == 0 {
                x[i] <= x[i + 1]
            } else {
                x[i] >= x[i + 1]
            }
        });
        if feasible {
            count += 1;
        }
        // odometer step
        let mut i = 0;
        while i < n && x[i] == m {
            x[i] = 0;
            i += 1;
        }
        if i == n {
            return Ok(count);
        }
        x[i] += 1;
    }
}

/// `Ω_{Z_n}(m)`: order-preserving maps `Z_n → {1, …, m}`, counted right to
/// left with a direct double loop.
pub fn order_polynomial_value(n: usize, m: u64) -> Result<BigUint> {
    check_n(n)?;
    if m == 0 {
        return Err(Error::InvalidInput("order polynomial needs m >= 1".into()));
    }
    let m = m as usize;
    // ways[a] = number of valid labelings of z_p..z_n with f(z_p) = a + 1
    let mut ways: Vec<BigUint> = vec![BigUint::one(); m];
    for p in (1..n).rev() {
        // p is 1-based; z_p vs z_{p+1}
        let below_right = p % 2 == 1;
        ways = (0..m)
            .map(|a| {
                (0..m)
                    .filter(|&b| if below_right { a <= b } else { a >= b })
                    .map(|b| &ways[b])
                    .sum()
            })
            .collect();
    }
    Ok(ways.into_iter().sum())
}

/// Values `i(0), …, i(max_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartTable {
    pub n: usize,
    pub values: Vec<BigUint>,
}

impl EhrhartTable {
    /// CSV with header `n,m,points`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,points\n");
        for (m, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{m},{v}\n", self.n));
        }
        out
    }
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    m: usize,
    points: String,
}

impl Serialize for EhrhartTable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.values.iter().enumerate().map(|(m, v)| TableRow {
            n: self.n,
            m,
            points: v.to_string(),
        }))
    }
}

pub fn ehrhart_table(n: usize, max_m: u64) -> Result<EhrhartTable> {
    check_n(n)?;
    let values = (0..=max_m)
        .into_par_iter()
        .map(|m| count_lattice_points(n, m))
        .collect::<Result<_>>()?;
    Ok(EhrhartTable { n, values })
}

fn binomial_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..k {
        let next = &row[j] * BigInt::from(k - j) / BigInt::from(j + 1);
        row.push(next);
    }
    row
}

/// Coefficients of `(1 − t)^{n+1} · Σ_m i(m) t^m` up to `t^upto`.
fn series_numerator(n: usize, values: &[BigUint], upto: usize) -> Vec<BigInt> {
    let binom = binomial_row(n + 1);
    (0..=upto)
        .map(|j| {
            (0..=j.min(n + 1))
                .map(|k| {
                    let term = &binom[k] * BigInt::from(values[j - k].clone());
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// `h*` from lattice-point counts: `h*_j = Σ_k (−1)^k C(n+1,k) i(j−k)` for
/// `j = 0..=n`. The same convolution at `j = n+1, n+2` must vanish, and no
/// coefficient may be negative; either failure means a counting bug.
pub fn hstar_from_ehrhart(n: usize) -> Result<IntPolynomial> {
    let table = ehrhart_table(n, n as u64 + 2)?;
    let numer = series_numerator(n, &table.values, n + 2);
    if let Some((j, c)) = numer.iter().enumerate().find(|(_, c)| c.is_negative()) {
        return Err(Error::Inconsistency(format!("h*_{j} = {c} is negative")));
    }
    if let Some((j, c)) = numer[n + 1..]
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_zero())
    {
        return Err(Error::Inconsistency(format!(
            "series numerator coefficient at t^{} is {c}, expected 0",
            n + 1 + j
        )));
    }
    Ok(IntPolynomial::new(numer[..=n].to_vec()))
}

/// The Ehrhart polynomial `i(m)` as exact rationals, constant term first,
/// interpolated through `i(0), …, i(n)` by forward differences.
pub fn ehrhart_polynomial(n: usize) -> Result<Vec<BigRational>> {
    let table = ehrhart_table(n, n as u64)?;
    // forward differences Δ^k i(0)
    let mut diffs: Vec<BigInt> = table.values.iter().cloned().map(BigInt::from).collect();
    let mut leading = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // i(m) = Σ_k Δ^k i(0) · m(m−1)…(m−k+1)/k!
    let mut coeffs = vec![BigRational::zero(); n + 1];
    let mut falling: Vec<BigInt> = vec![BigInt::one()]; // m(m−1)…(m−k+1)
    let mut factorial = BigInt::one();
    for (k, d) in leading.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (e, c) in falling.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * BigInt::from(k - 1);
            }
            falling = next;
        }
        for (e, c) in falling.iter().enumerate() {
            coeffs[e] += BigRational::new(c * d, factorial.clone());
        }
    }
    Ok(coeffs)
}

/// Evaluates rational coefficients (constant first) at an integer point.
pub fn eval_rational(coeffs: &[BigRational], m: u64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(m));
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Coefficients rendered as `"p/q"` strings (integers as `"p"`).
pub fn rational_strings(coeffs: &[BigRational]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}
