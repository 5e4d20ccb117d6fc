//! The twist-orbit curve sequence of a family word and its probes.
//!
//! For a twist word with letters c_1 .. c_n (extended periodically to all
//! of Z) and exponents k_j, the sequence is
//!
//!   gamma_j = T_{c_1}^{k_1} ... T_{c_{j-1}}^{k_{j-1}} (c_j)        (j >= 1)
//!   gamma_j = (T_{c_j}^{k_j} ... T_{c_0}^{k_0})^{-1} (c_j)         (j <= 0)
//!
//! so that the mapping class of the word shifts the sequence by n. Raw
//! gamma words grow geometrically with |j|, so all pairwise probes are
//! pulled back by a common prefix of the composition: intersection numbers
//! and relative twistings are invariant under the pullback, and the
//! translated representatives stay short enough to compute exactly.

use std::collections::BTreeMap;

use super::annular::{twisting_estimate, TwistingEstimate};
use super::path::NormalPath;
use super::twist::twist_budgeted;
use super::{CurveSysError, SquareComplex};
use crate::chains::TwistWord;

#[derive(Clone, Debug)]
pub struct GammaSequence {
    pub lo: i64,
    pub hi: i64,
    /// computed representatives; indices whose words outgrew the budget are
    /// absent here and listed in `skipped`
    pub curves: BTreeMap<i64, NormalPath>,
    pub skipped: Vec<i64>,
}

impl GammaSequence {
    pub fn get(&self, j: i64) -> Option<&NormalPath> {
        self.curves.get(&j)
    }
}

/// Computes gamma_j for j in `lo..=hi`. `budget` caps the edge weight of
/// any intermediate word; indices that would exceed it are skipped rather
/// than failing the whole sweep.
pub fn gamma_sequence(
    cx: &SquareComplex,
    word: &TwistWord,
    lo: i64,
    hi: i64,
    budget: u64,
) -> Result<GammaSequence, CurveSysError> {
    assert!(lo <= hi);
    let mut curves = BTreeMap::new();
    let mut skipped = Vec::new();
    for j in lo..=hi {
        match gamma_curve(cx, word, j, budget) {
            Ok(p) => {
                curves.insert(j, p);
            }
            Err(CurveSysError::Budget { .. }) => skipped.push(j),
            Err(e) => return Err(e),
        }
    }
    Ok(GammaSequence {
        lo,
        hi,
        curves,
        skipped,
    })
}

fn gamma_curve(
    cx: &SquareComplex,
    word: &TwistWord,
    j: i64,
    budget: u64,
) -> Result<NormalPath, CurveSysError> {
    let mut path = cx.curve(word.letter(j).0)?.clone();
    if j >= 1 {
        for t in (1..j).rev() {
            let core = cx.curve(word.letter(t).0)?;
            path = twist_budgeted(cx, &path, core, word.exponent(t), budget)?;
        }
    } else {
        for t in (j + 1)..=0 {
            let core = cx.curve(word.letter(t).0)?;
            path = twist_budgeted(cx, &path, core, -word.exponent(t), budget)?;
        }
    }
    Ok(path)
}

/// Representatives of (gamma_i, gamma_j) translated by the inverse of the
/// composition prefix up to i, for i < j: the first component is just c_i
/// and the second is T_{c_i}^{k_i} ... T_{c_{j-1}}^{k_{j-1}} (c_j).
/// Intersection numbers are unchanged by the common translation.
pub fn translated_pair(
    cx: &SquareComplex,
    word: &TwistWord,
    i: i64,
    j: i64,
    budget: u64,
) -> Result<(NormalPath, NormalPath), CurveSysError> {
    assert!(i < j, "pair indices must be distinct and ordered");
    let first = cx.curve(word.letter(i).0)?.clone();
    let mut second = cx.curve(word.letter(j).0)?.clone();
    for t in (i..j).rev() {
        let core = cx.curve(word.letter(t).0)?;
        second = twist_budgeted(cx, &second, core, word.exponent(t), budget)?;
    }
    Ok((first, second))
}

/// Representatives of (gamma_i, gamma_l, gamma_j) for i < l < j, translated
/// so the middle curve becomes c_l: returns `(alpha, core, beta)` with
/// tau_{gamma_l}(gamma_i, gamma_j) = the twisting of alpha vs beta about
/// core.
pub fn translated_triple(
    cx: &SquareComplex,
    word: &TwistWord,
    i: i64,
    l: i64,
    j: i64,
    budget: u64,
) -> Result<(NormalPath, NormalPath, NormalPath), CurveSysError> {
    assert!(i < l && l < j, "triple indices must be ordered");
    let core = cx.curve(word.letter(l).0)?.clone();
    // gamma_i pulled by the inverse prefix: apply the inverse twists in
    // ascending order (t = i is a no-op: a twist fixes its own core)
    let mut alpha = cx.curve(word.letter(i).0)?.clone();
    for t in i..l {
        let c = cx.curve(word.letter(t).0)?;
        alpha = twist_budgeted(cx, &alpha, c, -word.exponent(t), budget)?;
    }
    let mut beta = cx.curve(word.letter(j).0)?.clone();
    for t in (l..j).rev() {
        let c = cx.curve(word.letter(t).0)?;
        beta = twist_budgeted(cx, &beta, c, word.exponent(t), budget)?;
    }
    Ok((alpha, core, beta))
}

/// One consecutive-triple twisting measurement.
#[derive(Clone, Copy, Debug)]
pub struct LemmaProbe {
    /// annulus index l: the measurement is tau_{gamma_l}(gamma_{l-1},
    /// gamma_{l+1})
    pub center: i64,
    pub estimate: TwistingEstimate,
}

/// The uniform twisting threshold for the word: 3 plus the largest
/// consecutive-triple twisting over one period, plus the estimator error.
/// Returns the threshold together with the per-triple measurements.
pub fn compute_r0(
    cx: &SquareComplex,
    word: &TwistWord,
    budget: u64,
) -> Result<(u64, Vec<LemmaProbe>), CurveSysError> {
    let mut probes = Vec::new();
    let mut max_tau = 0u64;
    let mut max_err = 0u64;
    for l in 1..=word.n() as i64 {
        let (alpha, core, beta) = translated_triple(cx, word, l - 1, l, l + 1, budget)?;
        let est = twisting_estimate(cx, &core, &alpha, &beta)?;
        max_tau = max_tau.max(est.tau);
        max_err = max_err.max(est.error_bound);
        probes.push(LemmaProbe {
            center: l,
            estimate: est,
        });
    }
    Ok((3 + max_tau + max_err, probes))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BehrstockOutcome {
    /// the forward twisting was large and the reverse one was small
    Holds,
    /// the forward twisting was large but the reverse one was too
    Violated,
    /// the forward twisting never reached the trigger threshold
    NotTriggered,
}

/// Outcome of one Behrstock-type check: if the twisting of (alpha, beta)
/// about gamma reaches `trigger`, the twisting of (gamma, beta) about alpha
/// must stay below `ceiling`.
#[derive(Clone, Copy, Debug)]
pub struct BehrstockReport {
    pub forward: TwistingEstimate,
    pub reverse: Option<TwistingEstimate>,
    pub outcome: BehrstockOutcome,
}

pub const BEHRSTOCK_TRIGGER: u64 = 12;
pub const BEHRSTOCK_CEILING: u64 = 5;

pub fn behrstock_probe(
    cx: &SquareComplex,
    gamma: &NormalPath,
    alpha: &NormalPath,
    beta: &NormalPath,
) -> Result<BehrstockReport, CurveSysError> {
    let forward = twisting_estimate(cx, gamma, alpha, beta)?;
    if forward.tau < BEHRSTOCK_TRIGGER {
        return Ok(BehrstockReport {
            forward,
            reverse: None,
            outcome: BehrstockOutcome::NotTriggered,
        });
    }
    let reverse = twisting_estimate(cx, alpha, gamma, beta)?;
    let outcome = if reverse.tau <= BEHRSTOCK_CEILING {
        BehrstockOutcome::Holds
    } else {
        BehrstockOutcome::Violated
    };
    Ok(BehrstockReport {
        forward,
        reverse: Some(reverse),
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::CurveRef;
    use crate::curvesys::{build_complex, intersection_number, twist};
    use crate::ribbon::{build_figure1, RibbonGraph};

    fn torus_cx() -> SquareComplex {
        let g =
            RibbonGraph::parse("vertex v: a1 b1 a2 b2\nedge al a: a1 a2\nedge be b: b1 b2\n")
                .unwrap();
        build_complex(&g).unwrap()
    }

    fn one_pair_word(m: i64) -> TwistWord {
        TwistWord {
            letters: vec![(CurveRef::a(0), 1), (CurveRef::b(0), -1)],
            m,
        }
    }

    #[test]
    fn small_sequence_members() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        let w = one_pair_word(3);
        let seq = gamma_sequence(&cx, &w, -1, 3, 1 << 20).unwrap();
        assert!(seq.skipped.is_empty());
        assert_eq!(seq.get(1), Some(&a));
        assert_eq!(seq.get(0), Some(&b)); // letter 0 = last letter = b
        assert_eq!(seq.get(2).unwrap(), &twist(&cx, &b, &a, 3).unwrap());
        assert_eq!(seq.get(-1).unwrap(), &twist(&cx, &a, &b, 3).unwrap());
        // gamma_3 = T_a^3 T_b^-3 (a)
        let g3 = twist(&cx, &twist(&cx, &a, &b, -3).unwrap(), &a, 3).unwrap();
        assert_eq!(seq.get(3).unwrap(), &g3);
    }

    #[test]
    fn translated_pair_matches_direct_intersections() {
        let cx = torus_cx();
        let w = one_pair_word(2);
        let seq = gamma_sequence(&cx, &w, -2, 4, 1 << 24).unwrap();
        for i in -2..4i64 {
            for j in (i + 1)..=4 {
                let direct =
                    intersection_number(&cx, seq.get(i).unwrap(), seq.get(j).unwrap());
                let (p, q) = translated_pair(&cx, &w, i, j, 1 << 24).unwrap();
                assert_eq!(
                    intersection_number(&cx, &p, &q),
                    direct,
                    "pair ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn consecutive_twisting_tracks_the_exponent() {
        let g = build_figure1();
        let cx = build_complex(&g).unwrap();
        let m = 5;
        let w = one_pair_word(m);
        let (r0, probes) = compute_r0(&cx, &w, 1 << 26).unwrap();
        assert_eq!(probes.len(), 2);
        for p in &probes {
            let err = p.estimate.error_bound;
            assert!(
                (p.estimate.tau as i64 - m).unsigned_abs() <= err,
                "center {}: tau {}",
                p.center,
                p.estimate.tau
            );
        }
        assert!(r0 >= 3 + (m as u64 - 2) && r0 <= 3 + m as u64 + 4);
    }

    #[test]
    fn threshold_is_invariant_under_cyclic_relabeling() {
        let g = build_figure1();
        let cx = build_complex(&g).unwrap();
        let w = one_pair_word(4);
        let mut letters = w.letters.clone();
        letters.rotate_left(1);
        let rotated = TwistWord { letters, m: w.m };
        let (r0, _) = compute_r0(&cx, &w, 1 << 26).unwrap();
        let (r0_rot, _) = compute_r0(&cx, &rotated, 1 << 26).unwrap();
        assert_eq!(r0, r0_rot);
    }

    #[test]
    fn budget_skips_but_does_not_fail() {
        let cx = torus_cx();
        let w = one_pair_word(4);
        let seq = gamma_sequence(&cx, &w, -6, 10, 40).unwrap();
        assert!(!seq.skipped.is_empty());
        assert!(seq.get(1).is_some()); // untwisted members always fit
        for &j in &seq.skipped {
            assert!(seq.get(j).is_none());
        }
    }

    #[test]
    fn behrstock_inequality_on_a_heavy_twist() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        let beta = twist(&cx, &b, &a, 20).unwrap();
        let rep = behrstock_probe(&cx, &a, &b, &beta).unwrap();
        assert!(rep.forward.tau >= BEHRSTOCK_TRIGGER);
        assert_eq!(rep.outcome, BehrstockOutcome::Holds);
        let mild = twist(&cx, &b, &a, 3).unwrap();
        let rep = behrstock_probe(&cx, &a, &b, &mild).unwrap();
        assert_eq!(rep.outcome, BehrstockOutcome::NotTriggered);
    }
}
