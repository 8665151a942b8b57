//! Named verification suites: deterministic sweeps that re-check the
//! formula agreements, polynomial identities, divisor-class consistency, and
//! the frozen regression values. Each suite returns a [`VerifyReport`];
//! random sampling is seeded and split per task, so reports are identical
//! regardless of how the work is scheduled.

use std::time::Instant;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bn::{enumerate_sequences, rho, BnInput, VanishingSeq};
use crate::brackets::{
    det_bracket, eval_p, f_bracket, h_bracket_explicit, lemma_antisymmetry_check,
    lemma_example_check, pointed_via_det, pointed_via_sym,
};
use crate::codim2::{proportionality_report, surface_intersection};
use crate::divisor::{mu_nu, pointed_class, test_curve_consistency};
use crate::numeric::{factorial, factorial_det, inv_factorial};
use crate::pointed::{difference_product, pointed_count};
use crate::report::{CaseFailure, VerifyReport};
use crate::{Error, ExactInt, ExactRat, Result};

/// Seed used when none is given; recorded in every report that samples.
pub const DEFAULT_SEED: u64 = 1729;

/// The named suites, in documentation order.
pub const SUITE_NAMES: [&str; 4] = ["formulas", "identities", "divisors", "paper-numbers"];

/// Sweep ranges and the sampling seed for [`run_suite`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepParams {
    /// Largest genus swept (inclusive).
    pub gmax: i64,
    /// Largest rank swept (inclusive).
    pub rmax: i64,
    /// Seed for the random layers.
    pub seed: u64,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            gmax: 12,
            rmax: 4,
            seed: DEFAULT_SEED,
        }
    }
}

/// Run one named suite. Unknown names are precondition errors; a completed
/// run with failures is an `Ok` report whose `passed()` is false.
pub fn run_suite(name: &str, params: SweepParams) -> Result<VerifyReport> {
    match name {
        "formulas" => Ok(formulas_suite(params)),
        "identities" => Ok(identities_suite(params)),
        "divisors" => Ok(divisors_suite(params)),
        "paper-numbers" => Ok(paper_numbers_suite(params)),
        other => Err(Error::precondition(format!(
            "unknown suite '{other}'; expected one of: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}

fn task_rng(seed: u64, task: u64) -> ChaCha8Rng {
    // splitmix-style task separation keeps per-task streams independent of
    // scheduling order
    ChaCha8Rng::seed_from_u64(seed ^ task.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn push_param(report: &mut VerifyReport, key: &str, value: impl ToString) {
    report.parameters.push((key.into(), value.to_string()));
}

/// Three-way agreement of the pointed count with both bracket forms over
/// every admissible input in the box, restricted to the bracket domain
/// `a_0 + g - d + r >= 0`.
fn formulas_suite(params: SweepParams) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("formulas");
    push_param(&mut report, "gmax", params.gmax);
    push_param(&mut report, "rmax", params.rmax);
    push_param(&mut report, "degree", "d <= g + r");
    push_param(
        &mut report,
        "domain",
        "rho_adjusted = -1, a_0 + g - d + r >= 0",
    );

    let mut triples = Vec::new();
    for g in 2..=params.gmax {
        for r in 1..=params.rmax {
            for d in r..=g + r {
                triples.push((g, r, d));
            }
        }
    }
    let outcomes: Vec<(u64, Vec<CaseFailure>)> = triples
        .par_iter()
        .map(|&(g, r, d)| {
            let p = BnInput::new(g, r, d).expect("ranges are non-negative");
            let mut cases = 0;
            let mut failures = Vec::new();
            for a in enumerate_sequences(&p, -1) {
                if a.entries()[0] + p.s() < 0 {
                    continue;
                }
                cases += 1;
                let compact: ExactInt =
                    pointed_count(&p, &a).expect("enumerated input is admissible");
                let det: ExactInt =
                    pointed_via_det(&p, &a).expect("domain filtered to a_0 + s >= 0");
                let sym: ExactInt =
                    pointed_via_sym(&p, &a).expect("domain filtered to a_0 + s >= 0");
                if det != compact || sym != compact {
                    failures.push(CaseFailure {
                        input: format!("{p}, a = {a}"),
                        expected: format!("{compact} from the pair-sum"),
                        actual: format!("det form {det}, sym form {sym}"),
                    });
                }
            }
            (cases, failures)
        })
        .collect();
    for (cases, failures) in outcomes {
        report.cases += cases;
        report.failures.extend(failures);
    }
    report.elapsed = start.elapsed();
    report
}

/// Agreement of the four bracket routes at seeded random points for one rank:
/// pair-sum `f`, explicit table `h`, expanded determinant, and the symmetric
/// `P`-polynomial form. Returns (cases, failures).
fn bracket_agreement_for_rank(r: i64, seed: u64, points: u32) -> (u64, Vec<CaseFailure>) {
    let mut rng = task_rng(seed, r as u64);
    let mut cases = 0;
    let mut failures = Vec::new();
    for _ in 0..points {
        let s: i64 = rng.gen_range(-20..=20);
        let mut entries: Vec<i64> = rand::seq::index::sample(&mut rng, 31, (r + 1) as usize)
            .into_iter()
            .map(|x| x as i64)
            .collect();
        entries.sort_unstable();
        let a = VanishingSeq::new(entries).expect("sampled without replacement");
        cases += 1;

        let f: ExactInt = f_bracket(s, &a);
        let h: ExactInt = h_bracket_explicit(s, &a).expect("r is in 1..=7");
        let det: ExactInt = det_bracket(s, &a);
        let (p2, p3, p4) = eval_p::<ExactInt>(r, &a);
        let sv = Ratio::from_integer(ExactInt::from(s));
        let sym = Ratio::from_integer(difference_product::<ExactInt>(a.entries()))
            * (p2 * sv.clone() * sv.clone() + p3 * sv + p4);

        let sym_matches = sym == Ratio::from_integer(f.clone());
        if h != f || det != f || !sym_matches {
            failures.push(CaseFailure {
                input: format!("s = {s}, a = {a}"),
                expected: format!("{f} from the pair-sum bracket"),
                actual: format!("table {h}, det {det}, sym {sym}"),
            });
        }
    }
    (cases, failures)
}

/// All strictly increasing sequences with entries in `0..=max` and the given
/// length, in lexicographic order.
fn increasing_sequences(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if (len as i64) > max + 1 {
        return out;
    }
    let mut cur: Vec<i64> = (0..len as i64).collect();
    loop {
        out.push(cur.clone());
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max - (len as i64 - 1 - i as i64) {
                cur[i] += 1;
                for j in i + 1..len {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// Exhaustive antisymmetry box: every tuple in `{0..=max}^len`, every swap
/// pair, every exponent `t <= 4`.
fn antisymmetry_box(len: usize, max: i64) -> (u64, Vec<CaseFailure>) {
    let swaps: Vec<(usize, usize)> = (0..len)
        .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<(u64, Vec<CaseFailure>)> = (0..=max)
        .into_par_iter()
        .map(|v0| {
            let mut cases = 0;
            let mut failures = Vec::new();
            let mut values = vec![0i64; len];
            values[0] = v0;
            'tuples: loop {
                for &(i, j) in &swaps {
                    for t in 0..=4u32 {
                        cases += 1;
                        if !lemma_antisymmetry_check::<i64>(t, &values, (i, j)) {
                            failures.push(CaseFailure {
                                input: format!("t = {t}, values = {values:?}, swap = ({i},{j})"),
                                expected: "negated value under the swap".into(),
                                actual: "antisymmetry violated".into(),
                            });
                        }
                    }
                }
                let mut k = len - 1;
                loop {
                    if k == 0 {
                        break 'tuples;
                    }
                    if values[k] < max {
                        values[k] += 1;
                        values[k + 1..].fill(0);
                        break;
                    }
                    k -= 1;
                }
            }
            (cases, failures)
        })
        .collect();
    let mut cases = 0;
    let mut failures = Vec::new();
    for (c, f) in outcomes {
        cases += c;
        failures.extend(f);
    }
    (cases, failures)
}

/// Polynomial-identity suite: bracket agreement at seeded points, the
/// inverse-factorial determinant against its closed form, and both lemma
/// checks on exhaustive boxes plus seeded wide layers.
fn identities_suite(params: SweepParams) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("identities");
    push_param(&mut report, "seed", params.seed);
    push_param(&mut report, "bracket_points_per_rank", 100);
    push_param(&mut report, "bracket_bounds", "|s| <= 20, entries <= 30");
    push_param(&mut report, "det_sweep", "entries <= 12, length <= 6");
    push_param(
        &mut report,
        "lemma_sweeps",
        "exhaustive entries <= 12, r <= 4; seeded layers beyond",
    );

    // four-way bracket agreement, one seeded task per rank
    let per_rank: Vec<(u64, Vec<CaseFailure>)> = (1..=7i64)
        .into_par_iter()
        .map(|r| bracket_agreement_for_rank(r, params.seed, 100))
        .collect();
    for (cases, failures) in per_rank {
        report.cases += cases;
        report.failures.extend(failures);
    }

    // determinant vs closed form, exhaustive
    for len in 1..=6usize {
        for b in increasing_sequences(len, 12) {
            report.cases += 1;
            let det = factorial_det::<ExactInt>(&b).expect("valid sequence");
            let mut num = ExactInt::from(1);
            for k in 1..b.len() {
                for l in 0..k {
                    num *= ExactInt::from(b[k] - b[l]);
                }
            }
            let mut den = ExactInt::from(1);
            for &bj in &b {
                den *= factorial::<ExactInt>(bj as u64);
            }
            let closed = ExactRat::new(num, den);
            if det != closed {
                report.failures.push(CaseFailure {
                    input: format!("b = {b:?}"),
                    expected: closed.to_string(),
                    actual: det.to_string(),
                });
            }
        }
    }

    // first lemma, exhaustive then a seeded wide layer
    for len in 2..=5usize {
        for e in increasing_sequences(len, 12) {
            report.cases += 1;
            let a = VanishingSeq::new(e.clone()).expect("strictly increasing");
            if !lemma_example_check::<i64>(&a) {
                report.failures.push(CaseFailure {
                    input: format!("a = {a}"),
                    expected: "weighted lowered sum equals its closed form".into(),
                    actual: "mismatch".into(),
                });
            }
        }
    }
    let mut rng = task_rng(params.seed, 101);
    for _ in 0..200 {
        let len = rng.gen_range(2..=6usize);
        let mut entries: Vec<i64> = rand::seq::index::sample(&mut rng, 21, len)
            .into_iter()
            .map(|x| x as i64)
            .collect();
        entries.sort_unstable();
        let a = VanishingSeq::new(entries).expect("sampled without replacement");
        report.cases += 1;
        if !lemma_example_check::<ExactInt>(&a) {
            report.failures.push(CaseFailure {
                input: format!("a = {a}"),
                expected: "weighted lowered sum equals its closed form".into(),
                actual: "mismatch".into(),
            });
        }
    }

    // antisymmetry: exhaustive boxes graded by length, then a seeded layer
    for (len, max) in [(2usize, 12i64), (3, 12), (4, 10), (5, 7)] {
        let (cases, failures) = antisymmetry_box(len, max);
        report.cases += cases;
        report.failures.extend(failures);
    }
    let mut rng = task_rng(params.seed, 102);
    for _ in 0..200 {
        let values: Vec<i64> = (0..5).map(|_| rng.gen_range(0..=12)).collect();
        let i = rng.gen_range(0..5usize);
        let j = loop {
            let j = rng.gen_range(0..5usize);
            if j != i {
                break j;
            }
        };
        let t = rng.gen_range(0..=4u32);
        report.cases += 1;
        if !lemma_antisymmetry_check::<i64>(t, &values, (i, j)) {
            report.failures.push(CaseFailure {
                input: format!("t = {t}, values = {values:?}, swap = ({i},{j})"),
                expected: "negated value under the swap".into(),
                actual: "antisymmetry violated".into(),
            });
        }
    }

    report.elapsed = start.elapsed();
    report
}

/// Divisor-class suite: the test-curve equations hold on every admissible
/// input in the box, the fixed genus-3 class comes out right, and no
/// coefficient ratio goes negative (zeros are recorded as notes).
fn divisors_suite(params: SweepParams) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("divisors");
    push_param(&mut report, "gmax", params.gmax);
    push_param(&mut report, "rmax", params.rmax);
    push_param(&mut report, "degree", "d <= g + r");

    // frozen class: (3,1,2) with a = (0,1) is 3/2 times the pulled-back class
    report.cases += 1;
    let p312 = BnInput::new(3, 1, 2).expect("valid");
    let a01 = VanishingSeq::new(vec![0, 1]).expect("valid");
    match pointed_class::<ExactInt>(&p312, &a01) {
        Ok(class) => {
            let expected = "9*lambda - delta_irr - 3*delta_1 - 3*delta_2";
            if class.to_string() != expected {
                report.failures.push(CaseFailure {
                    input: format!("{p312}, a = {a01}"),
                    expected: expected.into(),
                    actual: class.to_string(),
                });
            }
        }
        Err(e) => report.failures.push(CaseFailure {
            input: format!("{p312}, a = {a01}"),
            expected: "a divisor class".into(),
            actual: format!("error: {e}"),
        }),
    }

    let mut triples = Vec::new();
    for g in 3..=params.gmax {
        for r in 1..=params.rmax {
            for d in r..=g + r {
                triples.push((g, r, d));
            }
        }
    }
    let outcomes: Vec<(u64, Vec<CaseFailure>, Vec<String>)> = triples
        .par_iter()
        .map(|&(g, r, d)| {
            let p = BnInput::new(g, r, d).expect("ranges are non-negative");
            let mut cases = 0;
            let mut failures = Vec::new();
            let mut zeros = Vec::new();
            for a in enumerate_sequences(&p, -1) {
                cases += 1;
                match test_curve_consistency::<ExactInt>(&p, &a) {
                    Ok(true) => {}
                    Ok(false) => failures.push(CaseFailure {
                        input: format!("{p}, a = {a}"),
                        expected: "both test-curve equations hold".into(),
                        actual: "violated".into(),
                    }),
                    Err(e) => failures.push(CaseFailure {
                        input: format!("{p}, a = {a}"),
                        expected: "both test-curve equations hold".into(),
                        actual: format!("error: {e}"),
                    }),
                }
                let (mu, nu) = match mu_nu::<ExactInt>(&p, &a) {
                    Ok(pair) => pair,
                    Err(e) => {
                        failures.push(CaseFailure {
                            input: format!("{p}, a = {a}"),
                            expected: "coefficients (mu, nu)".into(),
                            actual: format!("error: {e}"),
                        });
                        continue;
                    }
                };
                if mu.is_negative() || nu.is_negative() {
                    failures.push(CaseFailure {
                        input: format!("{p}, a = {a}"),
                        expected: "mu >= 0 and nu >= 0".into(),
                        actual: format!("mu = {mu}, nu = {nu}"),
                    });
                } else if mu.is_zero() || nu.is_zero() {
                    zeros.push(format!(
                        "degenerate coefficients at {p}, a = {a}: mu = {mu}, nu = {nu}"
                    ));
                }
            }
            (cases, failures, zeros)
        })
        .collect();
    let mut zeros = Vec::new();
    for (cases, failures, z) in outcomes {
        report.cases += cases;
        report.failures.extend(failures);
        zeros.extend(z);
    }
    if zeros.len() > 20 {
        let extra = zeros.len() - 20;
        zeros.truncate(20);
        zeros.push(format!("... and {extra} more zero-coefficient cases"));
    }
    report.notes = zeros;
    report.elapsed = start.elapsed();
    report
}

/// Frozen regression values: the factorial-reciprocal convention, the
/// genus-10 codimension count, the identity-sequence zeros, the four surface
/// intersection numbers, the non-proportionality verdict, and the per-rank
/// bracket agreement at seeded points.
fn paper_numbers_suite(params: SweepParams) -> VerifyReport {
    let start = Instant::now();
    let mut report = VerifyReport::new("paper-numbers");
    push_param(&mut report, "seed", params.seed);

    let mut check = |input: &str, expected: String, actual: String| {
        report.cases += 1;
        if expected != actual {
            report.failures.push(CaseFailure {
                input: input.into(),
                expected,
                actual,
            });
        }
    };

    check(
        "inv_factorial(-3)",
        "0".into(),
        inv_factorial::<ExactInt>(-3).to_string(),
    );
    let p1028 = BnInput::new(10, 2, 8).expect("valid");
    check("rho(g=10, r=2, d=8)", "-2".into(), rho(&p1028).to_string());

    for (g, r, d) in [(3i64, 1i64, 2i64), (5, 2, 5), (7, 3, 8)] {
        let p = BnInput::new(g, r, d).expect("valid");
        let a = VanishingSeq::identity(r);
        check(
            &format!("pointed count at {p}, a = {a}"),
            "0".into(),
            pointed_count::<ExactInt>(&p, &a)
                .map(|n| n.to_string())
                .unwrap_or_else(|e| format!("error: {e}")),
        );
    }

    let p1015 = BnInput::new(10, 1, 5).expect("valid");
    for (p, i, expected) in [
        (&p1028, 2, "23184"),
        (&p1028, 3, "48384"),
        (&p1015, 2, "2016"),
        (&p1015, 3, "12096"),
    ] {
        check(
            &format!("surface intersection i = {i} at {p}"),
            expected.into(),
            surface_intersection::<ExactInt>(i, p)
                .map(|s| s.value.to_string())
                .unwrap_or_else(|e| format!("error: {e}")),
        );
    }

    check(
        "proportionality of the two genus-10 loci over i = 2, 3",
        "not proportional".into(),
        proportionality_report::<ExactInt>(&p1028, &p1015, &[2, 3])
            .map(|r| {
                r.verdict
                    .as_deref()
                    .map(|v| v.split(':').next().unwrap_or(v).to_string())
                    .unwrap_or_else(|| "no verdict".into())
            })
            .unwrap_or_else(|e| format!("error: {e}")),
    );

    for r in 1..=7 {
        let (cases, failures) = bracket_agreement_for_rank(r, params.seed, 100);
        report.cases += cases;
        report.failures.extend(failures);
    }

    report.elapsed = start.elapsed();
    report
}
