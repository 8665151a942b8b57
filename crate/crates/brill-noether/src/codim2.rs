//! Intersection numbers of the codimension-2 Brill-Noether locus (for
//! `rho = -2`) with the one-nodal test surfaces, and the proportionality
//! comparison those numbers feed.

use std::time::Instant;

use crate::bn::{complement, enumerate_sequences, rho, rho_adjusted, BnInput, VanishingSeq};
use crate::numeric::Scalar;
use crate::pointed::pointed_count;
use crate::report::VerifyReport;
use crate::{Error, Result};

/// One term of a surface intersection: a vanishing sequence on the genus-`i`
/// side, the pointed count it contributes there, and the count contributed by
/// its complement on the genus `g - i` side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionTerm<T> {
    pub a: VanishingSeq,
    pub left: T,
    pub right: T,
}

/// Intersection number of the `rho = -2` locus with the test surface built
/// from one-nodal curves glued from genus `i` and genus `g - i` pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceIntersection<T> {
    pub component_genus: i64,
    pub problem: BnInput,
    pub value: T,
    pub terms: Vec<IntersectionTerm<T>>,
}

/// Compute the intersection number
///
/// ```text
/// T_i = sum_a n_{i,r,d,a} * n_{g-i,r,d,complement(a)}
/// ```
///
/// over all vanishing sequences `a` with `rho_adjusted(i, r, d, a) = -1`
/// (their complements automatically satisfy the same on the other side).
/// Requires `rho(p) = -2` and `2 <= i <= g - 2`.
pub fn surface_intersection<T: Scalar>(i: i64, p: &BnInput) -> Result<SurfaceIntersection<T>> {
    let r = rho(p);
    if r != -2 {
        return Err(Error::precondition(format!(
            "surface_intersection requires rho = -2, got rho{p} = {r}"
        )));
    }
    if !(2..=p.g() - 2).contains(&i) {
        return Err(Error::precondition(format!(
            "surface_intersection requires 2 <= i <= g - 2, got i = {i} for {p}"
        )));
    }
    let left_problem = BnInput::new(i, p.r(), p.d())?;
    let right_problem = BnInput::new(p.g() - i, p.r(), p.d())?;
    let mut value = T::zero();
    let mut terms = Vec::new();
    for a in enumerate_sequences(&left_problem, -1) {
        let c = complement(&left_problem, &a)?;
        debug_assert_eq!(rho_adjusted(&right_problem, &c), Ok(-1));
        let left: T = pointed_count(&left_problem, &a)?;
        let right: T = pointed_count(&right_problem, &c)?;
        value = value + left.clone() * right.clone();
        terms.push(IntersectionTerm { a, left, right });
    }
    Ok(SurfaceIntersection {
        component_genus: i,
        problem: *p,
        value,
        terms,
    })
}

/// Compare the intersection-number vectors of two `rho = -2` problems across
/// the given component genera and report whether they are proportional.
///
/// Two vectors `u`, `v` are proportional when every 2x2 minor
/// `u_j v_k - u_k v_j` vanishes; the first non-vanishing minor is reported as
/// a witness. A "not proportional" conclusion is a verdict, not a failure —
/// the report fails only if a computation itself errors out.
pub fn proportionality_report<T: Scalar>(
    p1: &BnInput,
    p2: &BnInput,
    component_genera: &[i64],
) -> Result<VerifyReport> {
    let start = Instant::now();
    if component_genera.is_empty() {
        return Err(Error::precondition(
            "proportionality_report needs at least one component genus",
        ));
    }
    let mut report = VerifyReport::new("proportionality");
    report.parameters = vec![
        ("problem_1".into(), p1.to_string()),
        ("problem_2".into(), p2.to_string()),
        (
            "component_genera".into(),
            component_genera
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
        ),
    ];
    let u: Vec<T> = component_genera
        .iter()
        .map(|&i| surface_intersection(i, p1).map(|s| s.value))
        .collect::<Result<_>>()?;
    let v: Vec<T> = component_genera
        .iter()
        .map(|&i| surface_intersection(i, p2).map(|s| s.value))
        .collect::<Result<_>>()?;
    report.cases = component_genera.len() as u64;
    report.notes.push(format!(
        "intersections of {p1}: [{}]",
        render_vector(component_genera, &u)
    ));
    report.notes.push(format!(
        "intersections of {p2}: [{}]",
        render_vector(component_genera, &v)
    ));

    let mut witness = None;
    'outer: for j in 0..u.len() {
        for k in j + 1..u.len() {
            let minor = u[j].clone() * v[k].clone() - u[k].clone() * v[j].clone();
            if !minor.is_zero() {
                witness = Some((j, k, minor));
                break 'outer;
            }
        }
    }
    match witness {
        None => {
            report.verdict = Some("proportional: all 2x2 minors vanish".into());
        }
        Some((j, k, minor)) => {
            let (ij, ik) = (component_genera[j], component_genera[k]);
            report.verdict = Some(format!(
                "not proportional: minor at component genera ({ij}, {ik}) is {minor}"
            ));
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn render_vector<T: Scalar>(genera: &[i64], values: &[T]) -> String {
    genera
        .iter()
        .zip(values)
        .map(|(i, v)| format!("i={i}: {v}"))
        .collect::<Vec<_>>()
        .join(", ")
}
