//! Relative twisting numbers measured in annular covers.
//!
//! The annular cover attached to a curve gamma is the cover whose
//! fundamental group is generated by gamma. A curve crossing gamma lifts to
//! an arc through the cover, and two such arcs coming from curves alpha and
//! beta wind around the core a number of times that differs by the relative
//! twisting of alpha and beta about gamma. Everything here is computed on
//! the boundary of the universal cover: a lift of a closed curve is a
//! bi-infinite geodesic determined by its two endpoints, eventually periodic
//! reduced words, and two lifts cross iff their endpoint pairs link in the
//! circular boundary order induced by the ribbon structure. The estimator
//! counts how many deck translates gamma^k of a beta-lift cross a fixed
//! alpha-lift; the count recovers the relative twisting up to a uniform
//! additive error of 2 coming from the choice of lifts at either end.

use super::intersect::crossings;
use super::path::{linear_reduce, reverse_word, NormalPath};
use super::{CurveSysError, SquareComplex};
use crate::ribbon::{Germ, RibbonGraph};

/// Unsigned magnitude of the relative twisting, correct within
/// `error_bound` in either direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistingEstimate {
    pub tau: u64,
    pub error_bound: u64,
}

/// hard stop for the deck-translate scan; reached only on pathological input
const SCAN_CAP: i64 = 4096;
/// consecutive non-crossing translates before a scan direction is closed
const MISS_RUN: u32 = 8;

pub fn twisting_estimate(
    cx: &SquareComplex,
    gamma: &NormalPath,
    alpha: &NormalPath,
    beta: &NormalPath,
) -> Result<TwistingEstimate, CurveSysError> {
    let g = cx.graph();
    let xa = crossings(cx, alpha, gamma);
    let xb = crossings(cx, beta, gamma);
    if xa.is_empty() || xb.is_empty() {
        return Err(CurveSysError::ProjectionUndefined);
    }
    // the projection of a curve is at distance zero from itself
    let (ra, rb) = (alpha.primitive_root(), beta.primitive_root());
    if ra == rb || ra == rb.reversed(g) {
        return Ok(TwistingEstimate {
            tau: 0,
            error_bound: 2,
        });
    }

    let a_ends = based_lift_ends(g, gamma, alpha, (xa[0].p_pos, xa[0].c_pos));
    let b_ends = based_lift_ends(g, gamma, beta, (xb[0].p_pos, xb[0].c_pos));
    let fwd = gamma.word().to_vec();
    let bwd = reverse_word(g, &fwd);

    // scan deck translates gamma^k . beta-lift in both directions until a
    // run of consecutive misses shows the crossing window is exhausted
    let mut tau = 0u64;
    if lifts_cross(g, &a_ends, &b_ends) {
        tau += 1;
    }
    for step in [&fwd, &bwd] {
        let mut cur = b_ends.clone();
        let mut misses = 0u32;
        let mut k = 0i64;
        while misses < MISS_RUN && k < SCAN_CAP {
            cur = (prepend(g, step, &cur.0), prepend(g, step, &cur.1));
            k += 1;
            if lifts_cross(g, &a_ends, &cur) {
                tau += 1;
                misses = 0;
            } else {
                misses += 1;
            }
        }
        assert!(k < SCAN_CAP, "translate scan did not stabilize");
    }
    Ok(TwistingEstimate {
        tau,
        error_bound: 2,
    })
}

/// An endpoint of a lifted curve on the boundary of the universal cover:
/// the eventually periodic reduced infinite word `pre . per^inf`, read as
/// departure germs from the base vertex.
#[derive(Clone, Debug)]
struct End {
    pre: Vec<Germ>,
    per: Vec<Germ>,
}

impl End {
    fn letter(&self, k: usize) -> Germ {
        if k < self.pre.len() {
            self.pre[k]
        } else {
            self.per[(k - self.pre.len()) % self.per.len()]
        }
    }
}

/// The two ends of the lift of `curve` passing through the crossing with
/// `gamma` recorded by `(p_pos, c_pos)`, based at gamma's starting vertex.
fn based_lift_ends(
    g: &RibbonGraph,
    gamma: &NormalPath,
    curve: &NormalPath,
    (p_pos, c_pos): (usize, usize),
) -> (End, End) {
    // conjugate the curve to a based loop: walk gamma to the crossing
    // vertex, run the rotated curve, walk back
    let mut based: Vec<Germ> = gamma.word()[..c_pos].to_vec();
    based.extend_from_slice(&curve.word()[p_pos..]);
    based.extend_from_slice(&curve.word()[..p_pos]);
    based.extend(reverse_word(g, &gamma.word()[..c_pos]));
    let based = linear_reduce(g, based);
    assert!(!based.is_empty());
    // split off the conjugator: based = u . core . u^-1
    let mut lo = 0usize;
    let mut hi = based.len();
    while hi - lo >= 2 && g.pairing(based[hi - 1]) == based[lo] {
        lo += 1;
        hi -= 1;
    }
    let u = based[..lo].to_vec();
    let core = based[lo..hi].to_vec();
    let plus = End {
        pre: u.clone(),
        per: core.clone(),
    };
    let minus = End {
        pre: u,
        per: reverse_word(g, &core),
    };
    (plus, minus)
}

/// Reduced normal form of `prefix . end`.
fn prepend(g: &RibbonGraph, prefix: &[Germ], end: &End) -> End {
    let mut stack: Vec<Germ> = prefix.to_vec();
    let mut consumed = 0usize;
    loop {
        match stack.last() {
            Some(&top) if g.pairing(top) == end.letter(consumed) => {
                stack.pop();
                consumed += 1;
            }
            _ => break,
        }
    }
    if consumed < end.pre.len() {
        stack.extend_from_slice(&end.pre[consumed..]);
        End {
            pre: stack,
            per: end.per.clone(),
        }
    } else {
        let rot = (consumed - end.pre.len()) % end.per.len();
        let mut per = end.per[rot..].to_vec();
        per.extend_from_slice(&end.per[..rot]);
        End { pre: stack, per }
    }
}

/// First index where the two infinite words differ; `None` if they are the
/// same boundary point. Agreement past both preperiods plus both periods
/// forces equality.
fn lcp(e1: &End, e2: &End) -> Option<usize> {
    let bound = e1.pre.len().max(e2.pre.len()) + e1.per.len() + e2.per.len() + 2;
    (0..bound).find(|&k| e1.letter(k) != e2.letter(k))
}

/// +1 if the three pairwise distinct ends appear counterclockwise in the
/// boundary circle, -1 otherwise.
fn orientation(g: &RibbonGraph, e1: &End, e2: &End, e3: &End) -> i8 {
    let ccw = |x: Germ, y: Germ, z: Germ| -> i8 {
        debug_assert!(x != y && y != z && x != z);
        let dy = (y % 4 + 4 - x % 4) % 4;
        let dz = (z % 4 + 4 - x % 4) % 4;
        if dy < dz {
            1
        } else {
            -1
        }
    };
    let d12 = lcp(e1, e2).expect("ends must be distinct");
    let d13 = lcp(e1, e3).expect("ends must be distinct");
    let d23 = lcp(e2, e3).expect("ends must be distinct");
    let m = d12.min(d13).min(d23);
    if d12 == m && d13 == m && d23 == m {
        // all three rays split at one vertex
        ccw(e1.letter(m), e2.letter(m), e3.letter(m))
    } else if d12 > m {
        // rays 1,2 continue together; ray 3 sits behind their later split
        let back = g.pairing(e1.letter(d12 - 1));
        ccw(e1.letter(d12), e2.letter(d12), back)
    } else if d13 > m {
        let back = g.pairing(e1.letter(d13 - 1));
        -ccw(e1.letter(d13), e3.letter(d13), back)
    } else {
        let back = g.pairing(e2.letter(d23 - 1));
        ccw(e2.letter(d23), e3.letter(d23), back)
    }
}

/// Do the two bi-infinite lifts cross? Exactly when their endpoint pairs
/// link; lifts sharing an endpoint are asymptotic and do not cross.
fn lifts_cross(g: &RibbonGraph, a: &(End, End), b: &(End, End)) -> bool {
    for (x, y) in [(&a.0, &b.0), (&a.0, &b.1), (&a.1, &b.0), (&a.1, &b.1)] {
        if lcp(x, y).is_none() {
            return false;
        }
    }
    orientation(g, &a.0, &b.0, &a.1) != orientation(g, &a.0, &b.1, &a.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvesys::{build_complex, twist};
    use crate::ribbon::{build_figure1, RibbonGraph};

    fn torus_cx() -> SquareComplex {
        let g =
            RibbonGraph::parse("vertex v: a1 b1 a2 b2\nedge al a: a1 a2\nedge be b: b1 b2\n")
                .unwrap();
        build_complex(&g).unwrap()
    }

    #[test]
    fn twist_powers_are_recovered() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        for m in [1i64, 2, 3, 5, 9, -3, -6] {
            let tb = twist(&cx, &b, &a, m).unwrap();
            let est = twisting_estimate(&cx, &a, &b, &tb).unwrap();
            assert_eq!(est.error_bound, 2);
            assert!(
                (est.tau as i64 - m.abs()).unsigned_abs() <= est.error_bound,
                "m = {m}: estimated {}",
                est.tau
            );
        }
    }

    #[test]
    fn twist_powers_on_genus_three() {
        let g = build_figure1();
        let cx = build_complex(&g).unwrap();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        for m in [1i64, 3, 7, -4] {
            let tb = twist(&cx, &b, &a, m).unwrap();
            let est = twisting_estimate(&cx, &a, &b, &tb).unwrap();
            assert!(
                (est.tau as i64 - m.abs()).unsigned_abs() <= est.error_bound,
                "m = {m}: estimated {}",
                est.tau
            );
        }
    }

    #[test]
    fn projection_of_a_curve_onto_itself_is_central() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        let est = twisting_estimate(&cx, &a, &b, &b).unwrap();
        assert_eq!(est.tau, 0);
    }

    #[test]
    fn disjoint_curve_has_no_projection() {
        let cx = torus_cx();
        let g = cx.graph();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        let comm = NormalPath::from_word(g, vec![0, 1, 2, 3]);
        match twisting_estimate(&cx, &a, &comm, &b) {
            Err(CurveSysError::ProjectionUndefined) => {}
            other => panic!("expected undefined projection, got {other:?}"),
        }
    }
}
