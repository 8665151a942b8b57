//! Independent re-derivations of the pointed count and the bracket
//! polynomials they share.
//!
//! The pair-sum in [`crate::pointed_count`] is one evaluation of a bracket
//! polynomial `f` in `s` and the vanishing sequence. This module carries two
//! more routes to the same number — an expanded-determinant bracket
//! ([`det_bracket`], [`pointed_via_det`]) and a symmetric-polynomial form
//! ([`eval_p`], [`pointed_via_sym`]) — plus explicit per-rank coefficient
//! tables ([`h_bracket_explicit`]) and two combinatorial identities used to
//! cross-check them. All routes must agree wherever they are all defined;
//! the verify suites sweep exactly that.

use num_rational::Ratio;

use crate::bn::{BnInput, VanishingSeq};
use crate::castelnuovo::expect_count;
use crate::numeric::{elementary_symmetric, factorial, int, inv_factorial, Scalar};
use crate::pointed::{check_pointed_domain, difference_product};
use crate::{Error, Result};

/// Values of the elementary symmetric polynomials of a vanishing sequence,
/// together with the shift `s` and rank `r` they are evaluated against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPolyValues<T> {
    pub sigma1: T,
    pub sigma2: T,
    pub sigma3: T,
    pub sigma4: T,
    pub s: i64,
    pub r: i64,
}

impl<T: Scalar> SymPolyValues<T> {
    pub fn new(a: &VanishingSeq, s: i64) -> Self {
        let e = a.entries();
        let sig = |k: usize| -> T {
            if k <= e.len() {
                elementary_symmetric(e, k).expect("k in range")
            } else {
                T::zero()
            }
        };
        SymPolyValues {
            sigma1: sig(1),
            sigma2: sig(2),
            sigma3: sig(3),
            sigma4: sig(4),
            s,
            r: a.r(),
        }
    }
}

/// The pair-sum bracket: for `b = a` lowered at `j1 < j2`,
/// `f(s, a) = sum_{j1<j2} ((a_j2 - a_j1)^2 - 1)(s + a_j1)(s + a_j2) prod_{i<k}(b_k - b_i)`.
///
/// Pure polynomial evaluation; no factorials, no domain restrictions.
pub fn f_bracket<T: Scalar>(s: i64, a: &VanishingSeq) -> T {
    let e = a.entries();
    let len = e.len();
    let mut total = T::zero();
    for j1 in 0..len {
        for j2 in j1 + 1..len {
            let gap = e[j2] - e[j1];
            let coeff = (gap * gap - 1) * (s + e[j1]) * (s + e[j2]);
            if coeff == 0 {
                continue;
            }
            let lowered: Vec<i64> = e
                .iter()
                .enumerate()
                .map(|(i, &ai)| ai - i64::from(i == j1) - i64::from(i == j2))
                .collect();
            total = total + int::<T>(coeff) * difference_product::<T>(&lowered);
        }
    }
    total
}

/// The expanded-determinant bracket evaluated at `(s, a)`, with the genus and
/// degree eliminated through the defining constraint
/// `g = (r+1)s + weight(a) - 1`, `d = g - s + r`.
pub fn det_bracket<T: Scalar>(s: i64, a: &VanishingSeq) -> T {
    let g = (a.r() + 1) * s + a.weight() - 1;
    let d = g - s + a.r();
    det_bracket_with(g, d, s, a)
}

/// The three-part expanded-determinant bracket with explicit `g`, `d`, `s`.
fn det_bracket_with<T: Scalar>(g: i64, d: i64, s: i64, a: &VanishingSeq) -> T {
    let e = a.entries();
    let len = e.len();
    let mut total = T::zero();

    // sum over single lowered positions, linear part
    for i in 0..len {
        let ai = e[i];
        let coeff = (ai * ai * (g - 1) + ai * (d - g + 1)) * (s + ai);
        if coeff != 0 {
            let lowered: Vec<i64> = e
                .iter()
                .enumerate()
                .map(|(k, &ak)| ak - i64::from(k == i))
                .collect();
            total = total + int::<T>(coeff) * difference_product::<T>(&lowered);
        }
    }
    // sum over doubly lowered single positions
    for i in 0..len {
        let ai = e[i];
        let coeff = (ai - ai * ai) * (s + ai) * (s + ai - 1);
        if coeff != 0 {
            let lowered: Vec<i64> = e
                .iter()
                .enumerate()
                .map(|(k, &ak)| ak - 2 * i64::from(k == i))
                .collect();
            total = total + int::<T>(coeff) * difference_product::<T>(&lowered);
        }
    }
    // mixed pairs, each lowered once
    for i1 in 0..len {
        for i2 in i1 + 1..len {
            let coeff = -2 * e[i1] * e[i2] * (s + e[i1]) * (s + e[i2]);
            if coeff != 0 {
                let lowered: Vec<i64> = e
                    .iter()
                    .enumerate()
                    .map(|(k, &ak)| ak - i64::from(k == i1) - i64::from(k == i2))
                    .collect();
                total = total + int::<T>(coeff) * difference_product::<T>(&lowered);
            }
        }
    }
    total
}

/// The three coefficient polynomials `(P2, P3, P4)` of the symmetric form
/// `prod_{i<j}(a_j - a_i) * (P2 s^2 + P3 s + P4)`, evaluated at rank `r` and
/// the elementary symmetric values of `a`:
///
/// ```text
/// P2 = r q1^2 - 2(r+1) q2 - r(r+1)^2(r+2)/12
/// P3 = r q1^3 - (3r+1) q1 q2 + 3(r+1) q3 + (r^2-1) q2
///      - r(r-1)/2 q1^2 - r(r+1)(r+2)/6 q1 + (r-1)r(r+1)^2(r+2)/24
/// P4 = q1^2 q2 - 4 q2^2 + 3 q1 q3 - r(r-1)/2 q1^3 - 3r(r+1)/2 q3
///      + (r-1)(3r+2)/2 q1 q2 + (r-1)r(r+1)/6 q1^2 - r(r+1)(2r+1)/6 q2
///      + (r-1)r(r+1)(r+2)/24 q1 - (r-1)r^2(r+1)^2(r+2)/144
/// ```
///
/// (`q_k` = k-th elementary symmetric value). Pure evaluation, any `r`.
pub fn eval_p<T: Scalar>(r: i64, a: &VanishingSeq) -> (Ratio<T>, Ratio<T>, Ratio<T>) {
    let sym = SymPolyValues::<T>::new(a, 0);
    let q1 = Ratio::from_integer(sym.sigma1);
    let q2 = Ratio::from_integer(sym.sigma2);
    let q3 = Ratio::from_integer(sym.sigma3);
    let c = |num: i64, den: i64| -> Ratio<T> { Ratio::new(int::<T>(num), int::<T>(den)) };
    let q1sq = q1.clone() * q1.clone();
    let q1cb = q1sq.clone() * q1.clone();

    let p2 = c(r, 1) * q1sq.clone() - c(2 * (r + 1), 1) * q2.clone()
        - c(r * (r + 1) * (r + 1) * (r + 2), 12);

    let p3 = c(r, 1) * q1cb.clone() - c(3 * r + 1, 1) * q1.clone() * q2.clone()
        + c(3 * (r + 1), 1) * q3.clone()
        + c(r * r - 1, 1) * q2.clone()
        - c(r * (r - 1), 2) * q1sq.clone()
        - c(r * (r + 1) * (r + 2), 6) * q1.clone()
        + c((r - 1) * r * (r + 1) * (r + 1) * (r + 2), 24);

    let p4 = q1sq.clone() * q2.clone() - c(4, 1) * q2.clone() * q2.clone()
        + c(3, 1) * q1.clone() * q3.clone()
        - c(r * (r - 1), 2) * q1cb
        - c(3 * r * (r + 1), 2) * q3
        + c((r - 1) * (3 * r + 2), 2) * q1.clone() * q2.clone()
        + c((r - 1) * r * (r + 1), 6) * q1sq
        - c(r * (r + 1) * (2 * r + 1), 6) * q2
        + c((r - 1) * r * (r + 1) * (r + 2), 24) * q1
        - c((r - 1) * r * r * (r + 1) * (r + 1) * (r + 2), 144);

    (p2, p3, p4)
}

/// Fixed coefficient tables of the bracket in its sigma-expansion, one row
/// per rank `r = 1..=7`. Column order is documented next to each table; the
/// tables are literal data, re-derived for `r = 1` by hand in the tests and
/// checked against [`eval_p`] and [`f_bracket`] by the identities suite.
mod tables {
    /// s^2 coefficient: columns `[q1^2, q2, 1]`.
    pub const S2: [[i64; 3]; 7] = [
        [1, -4, -1],
        [2, -6, -6],
        [3, -8, -20],
        [4, -10, -50],
        [5, -12, -105],
        [6, -14, -196],
        [7, -16, -336],
    ];

    /// s^1 coefficient: columns `[q1^3, q1*q2, q3, q2, q1^2, q1, 1]`.
    pub const S1: [[i64; 7]; 7] = [
        [1, -4, 0, 0, 0, -1, 0],
        [2, -7, 9, 3, -1, -4, 3],
        [3, -10, 12, 8, -3, -10, 20],
        [4, -13, 15, 15, -6, -20, 75],
        [5, -16, 18, 24, -10, -35, 210],
        [6, -19, 21, 35, -15, -56, 490],
        [7, -22, 24, 48, -21, -84, 1008],
    ];

    /// s^0 coefficient: columns
    /// `[q1^2*q2, q2^2, q1*q3, q1^3, q3, q1*q2, q1^2, q2, q1, 1]`.
    pub const S0: [[i64; 10]; 7] = [
        [1, -4, 0, 0, 0, 0, 0, -1, 0, 0],
        [1, -4, 3, -1, -9, 4, 1, -5, 1, -1],
        [1, -4, 3, -3, -18, 11, 4, -14, 5, -10],
        [1, -4, 3, -6, -30, 21, 10, -30, 15, -50],
        [1, -4, 3, -10, -45, 34, 20, -55, 35, -175],
        [1, -4, 3, -15, -63, 50, 35, -91, 70, -490],
        [1, -4, 3, -21, -84, 69, 56, -140, 126, -1176],
    ];
}

/// The bracket via the explicit per-rank tables:
/// `prod_{i<j}(a_j - a_i) * (C2(q) s^2 + C1(q) s + C0(q))` for `r = a.r()`
/// in `1..=7`.
pub fn h_bracket_explicit<T: Scalar>(s: i64, a: &VanishingSeq) -> Result<T> {
    let r = a.r();
    if !(1..=7).contains(&r) {
        return Err(Error::precondition(format!(
            "h_bracket_explicit has tables for r in 1..=7 only, got r = {r}"
        )));
    }
    let row = (r - 1) as usize;
    let sym = SymPolyValues::<T>::new(a, s);
    let q1 = sym.sigma1;
    let q2 = sym.sigma2;
    let q3 = sym.sigma3;
    let q1sq = q1.clone() * q1.clone();
    let q1cb = q1sq.clone() * q1.clone();

    let dot = |coeffs: &[i64], monos: &[T]| -> T {
        coeffs
            .iter()
            .zip(monos)
            .fold(T::zero(), |acc, (&c, m)| acc + int::<T>(c) * m.clone())
    };

    let c2 = dot(
        &tables::S2[row],
        &[q1sq.clone(), q2.clone(), T::one()],
    );
    let c1 = dot(
        &tables::S1[row],
        &[
            q1cb.clone(),
            q1.clone() * q2.clone(),
            q3.clone(),
            q2.clone(),
            q1sq.clone(),
            q1.clone(),
            T::one(),
        ],
    );
    let c0 = dot(
        &tables::S0[row],
        &[
            q1sq.clone() * q2.clone(),
            q2.clone() * q2.clone(),
            q1.clone() * q3.clone(),
            q1cb,
            q3,
            q1.clone() * q2.clone(),
            q1sq,
            q2,
            q1,
            T::one(),
        ],
    );

    let sv = int::<T>(s);
    let poly = c2 * sv.clone() * sv.clone() + c1 * sv + c0;
    Ok(difference_product::<T>(a.entries()) * poly)
}

/// The pointed count through the expanded-determinant bracket:
/// `g! / prod_j (s + a_j)! * det_bracket`. Requires the common prefactor
/// domain `a_0 + s >= 0` on top of the pointed-count preconditions.
pub fn pointed_via_det<T: Scalar>(p: &BnInput, a: &VanishingSeq) -> Result<T> {
    let prefactor = bracket_prefactor::<T>(p, a, "pointed_via_det")?;
    let bracket = det_bracket_with(p.g(), p.d(), p.s(), a);
    Ok(expect_count(
        prefactor * Ratio::from_integer(bracket),
        "pointed_via_det",
    ))
}

/// The pointed count through the symmetric-polynomial form:
/// `g! prod_{i<j}(a_j - a_i) / prod_j (s + a_j)! * (P2 s^2 + P3 s + P4)`.
/// Same domain as [`pointed_via_det`].
pub fn pointed_via_sym<T: Scalar>(p: &BnInput, a: &VanishingSeq) -> Result<T> {
    let prefactor = bracket_prefactor::<T>(p, a, "pointed_via_sym")?;
    let (p2, p3, p4) = eval_p::<T>(p.r(), a);
    let s: Ratio<T> = Ratio::from_integer(int(p.s()));
    let poly = p2 * s.clone() * s.clone() + p3 * s + p4;
    let diffs = Ratio::from_integer(difference_product::<T>(a.entries()));
    Ok(expect_count(prefactor * diffs * poly, "pointed_via_sym"))
}

/// `g! / prod_j (s + a_j)!` after checking the pointed domain and
/// `a_0 + s >= 0` (which makes every factorial argument non-negative).
fn bracket_prefactor<T: Scalar>(
    p: &BnInput,
    a: &VanishingSeq,
    what: &str,
) -> Result<Ratio<T>> {
    check_pointed_domain(p, a)?;
    let s = p.s();
    if a.entries()[0] + s < 0 {
        return Err(Error::precondition(format!(
            "{what} requires a_0 + g - d + r >= 0, got {} for {p}, a = {a}",
            a.entries()[0] + s
        )));
    }
    let mut pre: Ratio<T> = Ratio::from_integer(factorial(p.g() as u64));
    for &aj in a.entries() {
        pre = pre * inv_factorial::<T>(s + aj);
    }
    Ok(pre)
}

/// Identity check: `sum_i a_i prod_{l<k}(a_k - d_ik - a_l + d_il)` equals
/// `(sigma_1 - r(r+1)/2) prod_{k>l}(a_k - a_l)` for strictly increasing `a`
/// (`d_ik` is the Kronecker delta lowering position `i`).
pub fn lemma_example_check<T: Scalar>(a: &VanishingSeq) -> bool {
    let e = a.entries();
    let r = a.r();
    let mut lhs = T::zero();
    for i in 0..e.len() {
        if e[i] == 0 {
            continue;
        }
        let lowered: Vec<i64> = e
            .iter()
            .enumerate()
            .map(|(k, &ak)| ak - i64::from(k == i))
            .collect();
        lhs = lhs + int::<T>(e[i]) * difference_product::<T>(&lowered);
    }
    let sigma1: i64 = e.iter().sum();
    let rhs = int::<T>(sigma1 - r * (r + 1) / 2) * difference_product::<T>(e);
    lhs == rhs
}

/// Antisymmetry check for the weighted sums
/// `S_t(x) = sum_i x_i^t prod_{l<k}(x_k - d_ik - x_l + d_il)`:
/// swapping any two positions negates the value (so `S_t` vanishes whenever
/// two entries are equal). `values` may be any integer list, degenerate or
/// not; `swap` must index into it.
pub fn lemma_antisymmetry_check<T: Scalar>(t: u32, values: &[i64], swap: (usize, usize)) -> bool {
    assert!(
        swap.0 < values.len() && swap.1 < values.len(),
        "swap indices out of bounds"
    );
    let mut swapped = values.to_vec();
    swapped.swap(swap.0, swap.1);
    let original: T = weighted_lowered_sum(t, values);
    let flipped: T = weighted_lowered_sum(t, &swapped);
    original == -flipped
}

fn weighted_lowered_sum<T: Scalar>(t: u32, values: &[i64]) -> T {
    let mut total = T::zero();
    for i in 0..values.len() {
        let mut weight = T::one();
        for _ in 0..t {
            weight = weight * int::<T>(values[i]);
        }
        if weight.is_zero() {
            continue;
        }
        let lowered: Vec<i64> = values
            .iter()
            .enumerate()
            .map(|(k, &xk)| xk - i64::from(k == i))
            .collect();
        total = total + weight * difference_product::<T>(&lowered);
    }
    total
}
