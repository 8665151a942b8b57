//! Castelnuovo numbers: counts of linear series on a general curve when the
//! (adjusted) Brill-Noether number is exactly zero.

use num_rational::Ratio;

use crate::bn::{rho, rho_adjusted, BnInput, VanishingSeq};
use crate::numeric::{factorial, int, inv_factorial, Scalar};
use crate::{Error, Result};

/// Number of linear series of type `(g, r, d)` on a general curve of genus
/// `g` when `rho(g, r, d) == 0`:
/// `g! * prod_{i=0}^r i! / (g - d + r + i)!`.
pub fn castelnuovo_number<T: Scalar>(p: &BnInput) -> Result<T> {
    let r = rho(p);
    if r != 0 {
        return Err(Error::precondition(format!(
            "castelnuovo_number requires rho = 0, got rho{p} = {r}"
        )));
    }
    let s = p.s();
    let mut value: Ratio<T> = Ratio::from_integer(factorial(p.g() as u64));
    for i in 0..=p.r() {
        value = value * Ratio::from_integer(factorial::<T>(i as u64));
        value = value * inv_factorial::<T>(s + i);
    }
    Ok(expect_count(value, "castelnuovo_number"))
}

/// Number of linear series with vanishing sequence at least `a` at a fixed
/// general point when `rho_adjusted(p, a) == 0`:
/// `g! * prod_{i<j} (a_j - a_i) / prod_i (g - d + r + a_i)!`,
/// and 0 when `a_0 + g - d + r < 0` (no such series exists).
pub fn adjusted_castelnuovo<T: Scalar>(p: &BnInput, a: &VanishingSeq) -> Result<T> {
    let adj = rho_adjusted(p, a)?;
    if adj != 0 {
        return Err(Error::precondition(format!(
            "adjusted_castelnuovo requires rho_adjusted = 0, got {adj} for {p}, a = {a}"
        )));
    }
    let s = p.s();
    if a.entries()[0] + s < 0 {
        return Ok(T::zero());
    }
    let mut value: Ratio<T> = Ratio::from_integer(factorial(p.g() as u64));
    let e = a.entries();
    for j in 1..e.len() {
        for i in 0..j {
            value = value * Ratio::from_integer(int::<T>(e[j] - e[i]));
        }
    }
    for &ai in e {
        value = value * inv_factorial::<T>(s + ai);
    }
    Ok(expect_count(value, "adjusted_castelnuovo"))
}

/// Tripwire: the rational formulas must produce non-negative integers.
pub(crate) fn expect_count<T: Scalar>(value: Ratio<T>, what: &str) -> T {
    assert!(
        value.is_integer(),
        "{what}: formula produced a non-integer {value}"
    );
    let n = value.to_integer();
    assert!(!n.is_negative(), "{what}: formula produced a negative {n}");
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ExactInt;
    use num_traits::ToPrimitive;

    fn p(g: i64, r: i64, d: i64) -> BnInput {
        BnInput::new(g, r, d).unwrap()
    }

    fn seq(entries: &[i64]) -> VanishingSeq {
        VanishingSeq::new(entries.to_vec()).unwrap()
    }

    fn count(g: i64, r: i64, d: i64) -> i64 {
        castelnuovo_number::<ExactInt>(&p(g, r, d))
            .unwrap()
            .to_i64()
            .unwrap()
    }

    /// Independent oracle: when rho = 0 the count equals the number of
    /// standard Young tableaux of rectangular shape (r+1) x s, counted here
    /// by brute-force backtracking over column heights.
    fn syt_rectangle(rows: usize, cols: i64) -> i64 {
        fn rec(heights: &mut Vec<i64>, cols: i64, placed: i64, total: i64) -> i64 {
            if placed == total {
                return 1;
            }
            let mut n = 0;
            for i in 0..heights.len() {
                let above = if i == 0 { cols } else { heights[i - 1] };
                if heights[i] < above.min(cols) {
                    heights[i] += 1;
                    n += rec(heights, cols, placed + 1, total);
                    heights[i] -= 1;
                }
            }
            n
        }
        let mut heights = vec![0i64; rows];
        rec(&mut heights, cols, 0, rows as i64 * cols)
    }

    #[test]
    fn matches_rectangular_tableau_counts() {
        // every rho = 0 instance with 2 <= g <= 10, r >= 1
        for g in 2..=10i64 {
            for r in 1..=g {
                if g % (r + 1) != 0 {
                    continue;
                }
                let s = g / (r + 1);
                let d = g + r - s;
                assert_eq!(
                    count(g, r, d),
                    syt_rectangle((r + 1) as usize, s),
                    "(g,r,d) = ({g},{r},{d})"
                );
            }
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(count(4, 1, 3), 2);
        assert_eq!(count(3, 2, 4), 1);
        assert_eq!(count(6, 2, 6), 5);
    }

    #[test]
    fn pencils_give_catalan_numbers() {
        // Catalan numbers by their own recurrence, nothing shared with the
        // product formula.
        let mut catalan = vec![1i64];
        for n in 0..15 {
            let mut next = 0;
            for i in 0..=n {
                next += catalan[i] * catalan[n - i];
            }
            catalan.push(next);
        }
        assert_eq!(catalan[15], 9_694_845);
        for m in 1..=15i64 {
            assert_eq!(count(2 * m, 1, m + 1), catalan[m as usize]);
        }
    }

    #[test]
    fn rejects_nonzero_rho() {
        assert!(matches!(
            castelnuovo_number::<ExactInt>(&p(10, 2, 8)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            castelnuovo_number::<ExactInt>(&p(3, 1, 2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn adjusted_known_values() {
        let one = adjusted_castelnuovo::<ExactInt>(&p(2, 1, 2), &seq(&[0, 1])).unwrap();
        assert_eq!(one, ExactInt::from(1));
        let two = adjusted_castelnuovo::<ExactInt>(&p(3, 1, 3), &seq(&[0, 2])).unwrap();
        assert_eq!(two, ExactInt::from(2));
        // identity sequence reduces to the classical count
        let classical = adjusted_castelnuovo::<ExactInt>(&p(4, 1, 3), &seq(&[0, 1])).unwrap();
        assert_eq!(classical, castelnuovo_number::<ExactInt>(&p(4, 1, 3)).unwrap());
    }

    #[test]
    fn adjusted_existence_gate() {
        // rho_adjusted((2,2,5), a) = 0 for these; (0,3,5) starts too low for
        // any series to exist (a_0 + g - d + r = -1), the others are counted.
        let prob = p(2, 2, 5);
        assert_eq!(
            adjusted_castelnuovo::<ExactInt>(&prob, &seq(&[0, 3, 5])).unwrap(),
            ExactInt::from(0)
        );
        assert_eq!(
            adjusted_castelnuovo::<ExactInt>(&prob, &seq(&[1, 2, 5])).unwrap(),
            ExactInt::from(1)
        );
        assert_eq!(
            adjusted_castelnuovo::<ExactInt>(&prob, &seq(&[1, 3, 4])).unwrap(),
            ExactInt::from(1)
        );
    }

    #[test]
    fn adjusted_rejects_nonzero_adjusted_rho() {
        assert!(matches!(
            adjusted_castelnuovo::<ExactInt>(&p(4, 1, 3), &seq(&[0, 2])),
            Err(Error::Precondition(_))
        ));
    }
}
