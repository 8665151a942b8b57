//! Brill-Noether data: the `(g, r, d)` triple, vanishing sequences, the
//! (adjusted) Brill-Noether number, the pointed existence criterion,
//! complementary sequences, and enumeration of sequences with a prescribed
//! adjusted number.

use crate::{Error, Result};

/// A Brill-Noether problem: genus `g`, projective dimension `r`, degree `d`.
///
/// All three are non-negative; the derived quantity `s = g - d + r` is always
/// computed, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BnInput {
    g: i64,
    r: i64,
    d: i64,
}

impl BnInput {
    pub fn new(g: i64, r: i64, d: i64) -> Result<Self> {
        for (name, v) in [("g", g), ("r", r), ("d", d)] {
            if v < 0 {
                return Err(Error::precondition(format!(
                    "{name} must be non-negative, got {v}"
                )));
            }
        }
        Ok(BnInput { g, r, d })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `s = g - d + r`, the common factorial shift.
    pub fn s(&self) -> i64 {
        self.g - self.d + self.r
    }
}

impl std::fmt::Display for BnInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(g={}, r={}, d={})", self.g, self.r, self.d)
    }
}

/// A vanishing sequence `0 <= a_0 < a_1 < ... < a_r`.
///
/// Strictness and non-negativity are enforced at construction; the degree
/// bound `a_r <= d` and the length tie `len == r + 1` are checked against an
/// accompanying [`BnInput`] by [`VanishingSeq::validate_for`], which every
/// operation taking both calls once on entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VanishingSeq {
    entries: Vec<i64>,
}

impl VanishingSeq {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        crate::numeric::validate_increasing(&entries)?;
        Ok(VanishingSeq { entries })
    }

    /// The identity sequence `(0, 1, ..., r)` (no prescribed ramification).
    pub fn identity(r: i64) -> Self {
        VanishingSeq {
            entries: (0..=r).collect(),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty() // construction rejects empty sequences
    }

    /// `r`, i.e. `len - 1`.
    pub fn r(&self) -> i64 {
        self.entries.len() as i64 - 1
    }

    /// Check the sequence fits the problem: `len == r + 1` and `a_r <= d`.
    pub fn validate_for(&self, p: &BnInput) -> Result<()> {
        if self.r() != p.r() {
            return Err(Error::invalid_sequence(format!(
                "sequence has {} entries but r = {} needs {}",
                self.len(),
                p.r(),
                p.r() + 1
            )));
        }
        let last = *self.entries.last().expect("sequence is non-empty");
        if last > p.d() {
            return Err(Error::invalid_sequence(format!(
                "last entry {last} exceeds degree d = {}",
                p.d()
            )));
        }
        Ok(())
    }

    /// `sum (a_i - i)`, the total prescribed ramification.
    pub fn weight(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| a - i as i64)
            .sum()
    }
}

impl std::fmt::Display for VanishingSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let joined = self
            .entries
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({joined})")
    }
}

/// Brill-Noether number `rho(g, r, d) = g - (r+1)(g - d + r)`.
pub fn rho(p: &BnInput) -> i64 {
    p.g() - (p.r() + 1) * p.s()
}

/// Adjusted Brill-Noether number `rho(g, r, d) - sum (a_i - i)`.
pub fn rho_adjusted(p: &BnInput, a: &VanishingSeq) -> Result<i64> {
    a.validate_for(p)?;
    Ok(rho(p) - a.weight())
}

/// Existence of a linear series with vanishing sequence at least `a` at some
/// point of a general curve: `sum max(a_i - i + g - d + r, 0) <= g`.
pub fn eh_exists(p: &BnInput, a: &VanishingSeq) -> Result<bool> {
    if p.g() <= 0 {
        return Err(Error::precondition(format!(
            "eh_exists requires g > 0, got g = {}",
            p.g()
        )));
    }
    a.validate_for(p)?;
    let s = p.s();
    let total: i64 = a
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &ai)| (ai - i as i64 + s).max(0))
        .sum();
    Ok(total <= p.g())
}

/// Complementary sequence `(d - a_r, ..., d - a_0)`.
pub fn complement(p: &BnInput, a: &VanishingSeq) -> Result<VanishingSeq> {
    a.validate_for(p)?;
    let entries = a.entries().iter().rev().map(|&ai| p.d() - ai).collect();
    VanishingSeq::new(entries)
}

/// All vanishing sequences for `p` with `rho_adjusted == target`, in
/// lexicographic order.
///
/// Backtracking over `a_0 < a_1 < ... < a_r <= d` with a partial-sum bound:
/// once position `i` holds the value `v`, every later position contributes at
/// least `v - i` and at most `d - r` to the weight, which prunes both sides.
pub fn enumerate_sequences(p: &BnInput, target: i64) -> Vec<VanishingSeq> {
    let r = p.r();
    let d = p.d();
    let want = rho(p) - target; // required total weight
    let mut out = Vec::new();
    if want < 0 || d < r {
        return out;
    }
    let len = (r + 1) as usize;
    let mut stack: Vec<i64> = Vec::with_capacity(len);

    fn rec(
        stack: &mut Vec<i64>,
        out: &mut Vec<VanishingSeq>,
        len: usize,
        d: i64,
        want: i64,
        partial: i64,
    ) {
        let i = stack.len() as i64;
        if stack.len() == len {
            if partial == want {
                out.push(VanishingSeq {
                    entries: stack.clone(),
                });
            }
            return;
        }
        let lo = stack.last().map_or(0, |&v| v + 1);
        let remaining = len as i64 - 1 - i; // positions after this one
        for v in lo..=d {
            let c = v - i;
            // minimal completion keeps entries consecutive from v
            if partial + c + remaining * c > want {
                break; // monotone in v: later v only overshoot more
            }
            // maximal completion packs entries at the top, d - r each
            if partial + c + remaining * (d - (len as i64 - 1)) < want {
                continue;
            }
            stack.push(v);
            rec(stack, out, len, d, want, partial + c);
            stack.pop();
        }
    }

    rec(&mut stack, &mut out, len, d, want, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(g: i64, r: i64, d: i64) -> BnInput {
        BnInput::new(g, r, d).unwrap()
    }

    fn seq(entries: &[i64]) -> VanishingSeq {
        VanishingSeq::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(&p(10, 2, 8)), -2);
        assert_eq!(rho(&p(4, 1, 3)), 0);
        assert_eq!(rho(&p(3, 1, 2)), -1);
        assert_eq!(rho(&p(2, 2, 8)), 14);
    }

    #[test]
    fn rho_adjusted_values() {
        assert_eq!(rho_adjusted(&p(4, 1, 3), &seq(&[0, 2])).unwrap(), -1);
        assert_eq!(rho_adjusted(&p(3, 2, 4), &seq(&[0, 1, 3])).unwrap(), -1);
        // identity sequence has weight 0, so the adjusted number is rho itself
        for (g, r, d) in [(10, 2, 8), (4, 1, 3), (6, 2, 6), (5, 3, 7)] {
            let prob = p(g, r, d);
            assert_eq!(
                rho_adjusted(&prob, &VanishingSeq::identity(r)).unwrap(),
                rho(&prob)
            );
        }
    }

    #[test]
    fn sequence_validation() {
        assert!(matches!(
            VanishingSeq::new(vec![0, 0]),
            Err(Error::InvalidSequence(_))
        ));
        assert!(matches!(
            VanishingSeq::new(vec![2, 1]),
            Err(Error::InvalidSequence(_))
        ));
        assert!(matches!(
            VanishingSeq::new(vec![-1, 0]),
            Err(Error::InvalidSequence(_))
        ));
        assert!(matches!(
            VanishingSeq::new(vec![]),
            Err(Error::InvalidSequence(_))
        ));
        // echoes the offending pair
        let Err(Error::InvalidSequence(msg)) = VanishingSeq::new(vec![0, 4, 4]) else {
            panic!("expected invalid sequence");
        };
        assert!(msg.contains("4 before 4"), "message was: {msg}");
        // degree bound and length tie are checked against the problem
        assert!(seq(&[0, 4]).validate_for(&p(4, 1, 3)).is_err());
        assert!(seq(&[0, 1, 2]).validate_for(&p(4, 1, 3)).is_err());
        assert!(seq(&[0, 3]).validate_for(&p(4, 1, 3)).is_ok());
    }

    #[test]
    fn eh_exists_values() {
        assert!(eh_exists(&p(4, 1, 3), &seq(&[0, 1])).unwrap());
        assert!(!eh_exists(&p(4, 1, 3), &seq(&[0, 2])).unwrap());
        assert!(!eh_exists(&p(2, 1, 2), &seq(&[0, 2])).unwrap());
        assert!(matches!(
            eh_exists(&p(0, 1, 1), &seq(&[0, 1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn eh_exists_is_monotone_in_the_sequence() {
        // lowering entries (keeping the sequence valid) never flips true->false
        for g in 1..=8 {
            for r in 1..=3 {
                for d in r..=6 {
                    let prob = p(g, r, d);
                    let all = enumerate_all(r, d);
                    for a in &all {
                        if eh_exists(&prob, a).unwrap() {
                            continue;
                        }
                        // everything entrywise above a non-existent a is also out
                        for b in &all {
                            let above = a
                                .entries()
                                .iter()
                                .zip(b.entries())
                                .all(|(ai, bi)| bi >= ai);
                            if above {
                                assert!(
                                    !eh_exists(&prob, b).unwrap(),
                                    "existence regained at {prob} going {a} -> {b}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complement_values() {
        assert_eq!(
            complement(&p(4, 1, 3), &seq(&[0, 2])).unwrap(),
            seq(&[1, 3])
        );
        assert_eq!(
            complement(&p(10, 2, 8), &seq(&[0, 1, 2])).unwrap(),
            seq(&[6, 7, 8])
        );
    }

    #[test]
    fn complement_is_an_involution() {
        for r in 1..=3 {
            for d in r..=7 {
                let prob = p(5, r, d);
                for a in enumerate_all(r, d) {
                    let c = complement(&prob, &a).unwrap();
                    assert_eq!(complement(&prob, &c).unwrap(), a);
                }
            }
        }
    }

    /// Brute-force: every strictly increasing sequence of length r+1 in 0..=d.
    fn enumerate_all(r: i64, d: i64) -> Vec<VanishingSeq> {
        let len = (r + 1) as usize;
        let mut out = Vec::new();
        let mut cur: Vec<i64> = (0..len as i64).collect();
        loop {
            out.push(seq(&cur));
            let mut i = len;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < d - (len as i64 - 1 - i as i64) {
                    cur[i] += 1;
                    for j in i + 1..len {
                        cur[j] = cur[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn enumerate_sequences_examples() {
        assert_eq!(
            enumerate_sequences(&p(2, 1, 2), -1),
            vec![seq(&[0, 2])],
        );
        assert_eq!(
            enumerate_sequences(&p(3, 1, 2), -1),
            vec![seq(&[0, 1])],
        );
    }

    #[test]
    fn enumerate_sequences_matches_brute_force_filter() {
        for g in 2..=8 {
            for r in 1..=3 {
                for d in r..=g + r {
                    let prob = p(g, r, d);
                    for target in -2..=2 {
                        let fast = enumerate_sequences(&prob, target);
                        let slow: Vec<VanishingSeq> = enumerate_all(r, d)
                            .into_iter()
                            .filter(|a| rho_adjusted(&prob, a).unwrap() == target)
                            .collect();
                        assert_eq!(fast, slow, "mismatch at {prob} target {target}");
                        // lexicographic order
                        for w in fast.windows(2) {
                            assert!(w[0].entries() < w[1].entries());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn adjusted_number_is_additive_under_complement() {
        // rho_adj(i, a) + rho_adj(g - i, complement(a)) == rho(g) for a split
        let g = 10;
        for (r, d) in [(2, 8), (1, 5), (3, 9)] {
            let ambient = p(g, r, d);
            for i in 2..=g - 2 {
                let left = p(i, r, d);
                let right = p(g - i, r, d);
                for a in enumerate_all(r, d) {
                    let la = rho_adjusted(&left, &a).unwrap();
                    let ra = rho_adjusted(&right, &complement(&left, &a).unwrap()).unwrap();
                    assert_eq!(la + ra, rho(&ambient));
                }
            }
        }
    }
}
