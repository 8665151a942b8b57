//! Pointed Castelnuovo numbers: counts of linear series with prescribed
//! ramification at an unspecified (moving) point, defined when the adjusted
//! Brill-Noether number is exactly -1 and the genus is at least 2.

use num_rational::Ratio;
use num_traits::Zero;

use crate::bn::{rho, rho_adjusted, BnInput, VanishingSeq};
use crate::castelnuovo::{castelnuovo_number, expect_count};
use crate::numeric::{factorial, int, inv_factorial, Scalar};
use crate::{Error, Result};

/// The count `n_{g,r,d,a}` of linear series with vanishing sequence `a` at
/// some point of a general genus-`g` curve, for `rho_adjusted(p, a) == -1`.
///
/// Pair-sum form: with `s = g - d + r` and writing `a^(j1,j2)` for `a` with
/// positions `j1 < j2` lowered by one,
///
/// ```text
/// n = g! * sum_{j1<j2} ((a_{j2}-a_{j1})^2 - 1)
///          * prod_{i<k} (a^(j1,j2)_k - a^(j1,j2)_i)
///          / prod_i (s + a^(j1,j2)_i)!
/// ```
///
/// where `1/m! = 0` for `m < 0`. That convention makes every term vanish
/// when `a_0 + s < 0`, so no separate existence gate is applied here.
pub fn pointed_count<T: Scalar>(p: &BnInput, a: &VanishingSeq) -> Result<T> {
    check_pointed_domain(p, a)?;
    let s = p.s();
    let e = a.entries();
    let len = e.len();
    let mut total: Ratio<T> = Ratio::zero();
    for j1 in 0..len {
        for j2 in j1 + 1..len {
            let gap = e[j2] - e[j1];
            let coeff = gap * gap - 1;
            if coeff == 0 {
                continue;
            }
            let lowered: Vec<i64> = e
                .iter()
                .enumerate()
                .map(|(i, &ai)| ai - i64::from(i == j1) - i64::from(i == j2))
                .collect();
            let mut term = Ratio::from_integer(int::<T>(coeff));
            term = term * Ratio::from_integer(difference_product::<T>(&lowered));
            for &bi in &lowered {
                term = term * inv_factorial::<T>(s + bi);
            }
            total = total + term;
        }
    }
    total = total * Ratio::from_integer(factorial::<T>(p.g() as u64));
    Ok(expect_count(total, "pointed_count"))
}

/// Pencils (`r = 1`) with the unique relevant vanishing sequence
/// `(0, 2d - g)`: closed form
/// `(2d-g-1)(2d-g)(2d-g+1) * g! / (d! (g-d)!)`.
pub fn pencil_count<T: Scalar>(g: i64, d: i64) -> Result<T> {
    if 2 * d - g < 2 || d > g {
        return Err(Error::precondition(format!(
            "pencil_count requires g/2 + 1 <= d <= g, got g = {g}, d = {d}"
        )));
    }
    let p = BnInput::new(g, 1, d)?;
    let a = VanishingSeq::new(vec![0, 2 * d - g])?;
    debug_assert_eq!(rho_adjusted(&p, &a), Ok(-1));
    let m = 2 * d - g;
    let mut value: Ratio<T> =
        Ratio::from_integer(int::<T>(m - 1) * int::<T>(m) * int::<T>(m + 1));
    value = value * Ratio::from_integer(factorial::<T>(g as u64));
    value = value * inv_factorial::<T>(d);
    value = value * inv_factorial::<T>(g - d);
    Ok(expect_count(value, "pencil_count"))
}

/// Generic one-point ramification on a `rho = 0` problem, i.e. the sequence
/// `(0, 1, ..., r-1, r+1)`: the count is
/// `N_{g,r,d} * (r+1) * (d + r(g-1))` with `N` the Castelnuovo number.
pub fn plucker_count<T: Scalar>(p: &BnInput) -> Result<T> {
    let n: T = castelnuovo_number(p)?; // enforces rho = 0
    Ok(n * int::<T>(p.r() + 1) * int::<T>(p.d() + p.r() * (p.g() - 1)))
}

/// Series with an ordinary cusp: vanishing sequence `(0, 1, ..., r-1, n)`
/// where `n = rho(p) + r + 1`, requiring `rho(p) > 0`. Closed form:
///
/// ```text
/// g! * n(n^2-1) / ((s-1)! (s+n-1)! (r-1)!) * prod_{i=2}^r i!(n-i)/(s-1+i)!
/// ```
pub fn cusp_count<T: Scalar>(p: &BnInput, n: i64) -> Result<T> {
    let r = p.r();
    let s = p.s();
    let rho_p = rho(p);
    if rho_p != n - r - 1 {
        return Err(Error::precondition(format!(
            "cusp_count requires rho{p} = n - r - 1, got rho = {rho_p} and n = {n}"
        )));
    }
    if rho_p <= 0 {
        return Err(Error::precondition(format!(
            "cusp_count requires rho > 0, got rho{p} = {rho_p}"
        )));
    }
    if r < 1 || s < 1 || n > p.d() {
        return Err(Error::precondition(format!(
            "cusp_count requires r >= 1, g - d + r >= 1 and n <= d, got r = {r}, s = {s}, n = {n}, d = {}",
            p.d()
        )));
    }
    let mut value: Ratio<T> = Ratio::from_integer(factorial::<T>(p.g() as u64));
    value = value * Ratio::from_integer(int::<T>(n) * int::<T>(n * n - 1));
    value = value * inv_factorial::<T>(s - 1);
    value = value * inv_factorial::<T>(s + n - 1);
    value = value * inv_factorial::<T>(r - 1);
    for i in 2..=r {
        value = value * Ratio::from_integer(factorial::<T>(i as u64) * int::<T>(n - i));
        value = value * inv_factorial::<T>(s - 1 + i);
    }
    Ok(expect_count(value, "cusp_count"))
}

/// Shared domain check for the pointed-count formulas: genus at least 2,
/// sequence valid for the problem, adjusted Brill-Noether number -1.
pub(crate) fn check_pointed_domain(p: &BnInput, a: &VanishingSeq) -> Result<()> {
    if p.g() < 2 {
        return Err(Error::precondition(format!(
            "pointed counts require g >= 2, got g = {}",
            p.g()
        )));
    }
    let adj = rho_adjusted(p, a)?;
    if adj != -1 {
        return Err(Error::precondition(format!(
            "pointed counts require rho_adjusted = -1, got {adj} for {p}, a = {a}"
        )));
    }
    Ok(())
}

/// `prod_{i<k} (e_k - e_i)` over the scalar type.
pub(crate) fn difference_product<T: Scalar>(e: &[i64]) -> T {
    let mut prod = T::one();
    for k in 1..e.len() {
        for i in 0..k {
            prod = prod * int::<T>(e[k] - e[i]);
        }
    }
    prod
}
