//! Exact scalar layer: factorials, the `1/n! = 0 for n < 0` convention,
//! elementary symmetric polynomials, and determinants of inverse-factorial
//! matrices evaluated by exact Gaussian elimination.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::{Error, Result};

/// Integer scalar the count-valued operations are generic over.
///
/// `ExactInt` (= `BigInt`) is the instantiation that is exact at any
/// magnitude; `i64`/`i128` are available when the caller can bound results.
pub trait Scalar:
    Integer + Signed + FromPrimitive + Clone + fmt::Display + fmt::Debug + Send + Sync + 'static
{
    /// `n!`. The default computes the product directly; the `ExactInt` impl
    /// consults a shared memo table instead.
    fn factorial(n: u64) -> Self {
        let mut acc = Self::one();
        for k in 2..=n {
            acc = acc * Self::from_u64(k).expect("factorial argument fits in scalar");
        }
        acc
    }
}

impl Scalar for i64 {}
impl Scalar for i128 {}

impl Scalar for BigInt {
    fn factorial(n: u64) -> Self {
        static TABLE: OnceLock<Factorials<BigInt>> = OnceLock::new();
        TABLE
            .get_or_init(|| Factorials::with_bound(DEFAULT_FACTORIAL_BOUND))
            .get(n)
    }
}

/// Convert a small integer into the scalar type.
pub(crate) fn int<T: Scalar>(x: i64) -> T {
    T::from_i64(x).expect("i64 embeds in scalar")
}

/// Default bound of the shared factorial memo table.
pub const DEFAULT_FACTORIAL_BOUND: usize = 256;

/// Memo table of factorials `0! ..= bound!`, immutable after construction.
/// Arguments beyond the bound are computed on demand from the last entry.
pub struct Factorials<T> {
    table: Vec<T>,
}

impl<T: Scalar> Factorials<T> {
    /// Build the table up to and including `bound!`.
    pub fn with_bound(bound: usize) -> Self {
        let mut table = Vec::with_capacity(bound + 1);
        table.push(T::one());
        for k in 1..=bound as u64 {
            let prev = table.last().expect("table is non-empty").clone();
            table.push(prev * T::from_u64(k).expect("bound fits in scalar"));
        }
        Factorials { table }
    }

    /// `n!`.
    pub fn get(&self, n: u64) -> T {
        if let Some(hit) = self.table.get(n as usize) {
            return hit.clone();
        }
        let bound = self.table.len() as u64 - 1;
        let mut acc = self.table.last().expect("table is non-empty").clone();
        for k in bound + 1..=n {
            acc = acc * T::from_u64(k).expect("factorial argument fits in scalar");
        }
        acc
    }

    /// `1/n!`, with the convention that this is 0 for negative `n`.
    pub fn inv(&self, n: i64) -> Ratio<T> {
        if n < 0 {
            Ratio::zero()
        } else {
            Ratio::new(T::one(), self.get(n as u64))
        }
    }
}

/// `n!` in the scalar type `T`.
pub fn factorial<T: Scalar>(n: u64) -> T {
    T::factorial(n)
}

/// `1/n!` as an exact rational, with `1/n! = 0` for negative `n`.
///
/// This single convention is what makes the pair-sum formula for pointed
/// counts vanish term-by-term outside its existence range; callers never
/// special-case negative factorial arguments themselves.
pub fn inv_factorial<T: Scalar>(n: i64) -> Ratio<T> {
    if n < 0 {
        Ratio::zero()
    } else {
        Ratio::new(T::one(), factorial(n as u64))
    }
}

/// Elementary symmetric polynomial `sigma_k` of the given values, `k` in 1..=4.
pub fn elementary_symmetric<T: Scalar>(values: &[i64], k: usize) -> Result<T> {
    if !(1..=4).contains(&k) {
        return Err(Error::precondition(format!(
            "elementary_symmetric: k = {k} out of range 1..=4"
        )));
    }
    if k > values.len() {
        return Err(Error::precondition(format!(
            "elementary_symmetric: k = {k} exceeds number of values {}",
            values.len()
        )));
    }
    // Standard one-pass recurrence: after consuming x, e_j += e_{j-1} * x.
    let mut e: Vec<T> = vec![T::zero(); k + 1];
    e[0] = T::one();
    for &x in values {
        for j in (1..=k).rev() {
            let add = e[j - 1].clone() * int::<T>(x);
            e[j] = e[j].clone() + add;
        }
    }
    Ok(e[k].clone())
}

/// Determinant of the inverse-factorial matrix of a strictly increasing
/// sequence `b_0 < b_1 < ... < b_r` of non-negative integers.
///
/// The matrix has the row for `b_r` on top and the row for `b_0` at the
/// bottom; the row for `b_i` reads `1/(b_i - r)!, 1/(b_i - r + 1)!, ..., 1/b_i!`
/// (entries with negative argument are 0). The determinant is evaluated by
/// exact Gaussian elimination over rationals and equals
/// `prod_{l<k} (b_k - b_l) / prod_j b_j!`.
pub fn factorial_det<T: Scalar>(b: &[i64]) -> Result<Ratio<T>> {
    validate_increasing(b)?;
    let n = b.len();
    let r = n as i64 - 1;
    let mut m: Vec<Vec<Ratio<T>>> = (0..n)
        .map(|row| {
            let bi = b[n - 1 - row]; // b_r on top
            (0..n)
                .map(|col| inv_factorial(bi - r + col as i64))
                .collect()
        })
        .collect();

    let mut negate = false;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&row| !m[row][col].is_zero()) else {
            return Ok(Ratio::zero());
        };
        if pivot != col {
            m.swap(pivot, col);
            negate = !negate;
        }
        let pivot_row = m[col].clone();
        for row in m.iter_mut().take(n).skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone() / pivot_row[col].clone();
            for (entry, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *entry = entry.clone() - factor.clone() * p.clone();
            }
        }
    }
    let mut det = Ratio::one();
    for (i, row) in m.iter().enumerate() {
        det = det * row[i].clone();
    }
    if negate {
        det = -det;
    }
    Ok(det)
}

pub(crate) fn validate_increasing(b: &[i64]) -> Result<()> {
    if b.is_empty() {
        return Err(Error::invalid_sequence("sequence is empty"));
    }
    if b[0] < 0 {
        return Err(Error::invalid_sequence(format!(
            "first entry {} is negative",
            b[0]
        )));
    }
    for w in b.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::invalid_sequence(format!(
                "entries must be strictly increasing, got {} before {}",
                w[0], w[1]
            )));
        }
    }
    Ok(())
}
