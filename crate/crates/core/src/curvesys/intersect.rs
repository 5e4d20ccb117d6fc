//! Geometric intersection numbers of reduced cyclic words.
//!
//! Two curves in canonical position cross only where their words visit a
//! common vertex. Shared visits group into maximal bands: runs of parallel
//! (or anti-parallel) shared edges, possibly of length zero. Each band
//! contributes at most one crossing, decided by comparing the ccw germ
//! order at its two divergence ends: the strands cross iff the divergence
//! signs agree. For reduced words this count is a free-homotopy invariant
//! and realizes the geometric intersection number.

use super::path::NormalPath;
use super::SquareComplex;
use crate::ribbon::Germ;

/// One essential crossing: `p_pos`/`c_pos` are the visit indices of the
/// divergence end chosen as the representative point, `sign` the local
/// algebraic sign det(dP, dQ) relative to the surface orientation.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Crossing {
    pub p_pos: usize,
    pub c_pos: usize,
    pub sign: i8,
}

/// +1 iff reading ccw from `r`, `x` appears before `y`. All three germs
/// must be distinct and at the same vertex.
fn order(r: Germ, x: Germ, y: Germ) -> i8 {
    debug_assert_eq!(r / 4, x / 4);
    debug_assert_eq!(r / 4, y / 4);
    debug_assert!(r != x && r != y && x != y);
    let dx = (x % 4 + 4 - r % 4) % 4;
    let dy = (y % 4 + 4 - r % 4) % 4;
    if dx < dy {
        1
    } else {
        -1
    }
}

/// Enumerates the crossings of `p` with `q`. Freely homotopic (or inverse)
/// classes are disjoint by convention and yield no crossings.
pub(crate) fn crossings(cx: &SquareComplex, p: &NormalPath, q: &NormalPath) -> Vec<Crossing> {
    let g = cx.graph();
    let rp = p.primitive_root();
    let rq = q.primitive_root();
    if rp == rq || rp == rq.reversed(g) {
        return Vec::new();
    }
    let pw = p.word();
    let qw = q.word();
    let (lp, lq) = (pw.len(), qw.len());
    let cap = lp + lq;

    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); g.n_vertices()];
    for (j, &gj) in qw.iter().enumerate() {
        bucket[gj / 4].push(j);
    }

    let mut out = Vec::new();

    // each maximal band is handled once, from its canonical start cell: the
    // one whose backward extension fails. Interior and end cells are
    // recognized in O(1) and skipped, so no visited-set is needed (for
    // reduced words a cell cannot lie in both a parallel and an
    // anti-parallel band).
    for i in 0..lp {
        for &j in &bucket[pw[i] / 4] {
            let prev_p = pw[(i + lp - 1) % lp];
            let prev_q = qw[(j + lq - 1) % lq];
            let fwd_same = pw[i] == qw[j];
            let bwd_same = prev_p == prev_q;
            let fwd_anti = pw[i] == g.pairing(prev_q);
            let bwd_anti = prev_p == g.pairing(qw[j]);

            if bwd_same || bwd_anti {
                continue; // interior or terminal cell of some band
            }
            if fwd_same {
                // parallel band start: measure its length t
                let (bi, bj) = (i, j);
                let mut t = 0usize;
                while pw[(bi + t) % lp] == qw[(bj + t) % lq] {
                    t += 1;
                    assert!(t <= cap, "parallel band wraps; classes share a power");
                }
                let (fi, fj) = ((bi + t) % lp, (bj + t) % lq);
                let rf = g.pairing(pw[(fi + lp - 1) % lp]);
                let sf = order(rf, pw[fi], qw[fj]);
                let rb = pw[bi];
                let sb = order(
                    rb,
                    g.pairing(pw[(bi + lp - 1) % lp]),
                    g.pairing(qw[(bj + lq - 1) % lq]),
                );
                if sf == sb {
                    out.push(Crossing {
                        p_pos: fi,
                        c_pos: fj,
                        sign: sf,
                    });
                }
            } else if fwd_anti {
                // anti-parallel band: P-index ascends while Q-index descends
                let (bi, bj) = (i, j);
                let mut t = 0usize;
                while pw[(bi + t) % lp] == g.pairing(qw[(bj + lq - 1 - (t % lq)) % lq]) {
                    t += 1;
                    assert!(t <= cap, "anti band wraps; classes share a power");
                }
                let s0 = order(pw[bi], g.pairing(pw[(bi + lp - 1) % lp]), qw[bj]);
                let (ei, ej) = ((bi + t) % lp, (bj + lq - (t % lq)) % lq);
                let r1 = g.pairing(pw[(ei + lp - 1) % lp]);
                let s1 = order(r1, pw[ei], g.pairing(qw[(ej + lq - 1) % lq]));
                if s0 == s1 {
                    out.push(Crossing {
                        p_pos: ei,
                        c_pos: ej,
                        sign: -s0,
                    });
                }
            } else {
                // lone shared vertex: crossing iff the germ pairs alternate
                let ap = g.pairing(prev_p);
                let dp = pw[i];
                let aq = g.pairing(prev_q);
                let dq = qw[j];
                if order(ap, aq, dp) != order(ap, dq, dp) {
                    out.push(Crossing {
                        p_pos: i,
                        c_pos: j,
                        sign: order(dp, dq, ap),
                    });
                }
            }
        }
    }
    out
}

/// Geometric intersection number of the two free homotopy classes.
pub fn intersection_number(cx: &SquareComplex, p: &NormalPath, q: &NormalPath) -> u64 {
    crossings(cx, p, q).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvesys::build_complex;
    use crate::ribbon::{build_figure1, RibbonGraph};

    fn torus_cx() -> SquareComplex {
        let g =
            RibbonGraph::parse("vertex v: a1 b1 a2 b2\nedge al a: a1 a2\nedge be b: b1 b2\n")
                .unwrap();
        build_complex(&g).unwrap()
    }

    #[test]
    fn torus_meridian_longitude() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        assert_eq!(intersection_number(&cx, &a, &b), 1);
        assert_eq!(intersection_number(&cx, &b, &a), 1);
        assert_eq!(intersection_number(&cx, &a, &a), 0);
    }

    #[test]
    fn torus_commutator_is_disjoint_from_both() {
        let cx = torus_cx();
        let g = cx.graph();
        let comm = NormalPath::from_word(g, vec![0, 1, 2, 3]);
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        assert_eq!(intersection_number(&cx, &comm, &a), 0);
        assert_eq!(intersection_number(&cx, &comm, &b), 0);
        assert_eq!(intersection_number(&cx, &a, &comm), 0);
        assert_eq!(intersection_number(&cx, &b, &comm), 0);
    }

    #[test]
    fn torus_slope_curves() {
        let cx = torus_cx();
        let g = cx.graph();
        // i(a^p b^q, a) counts q, i(., b) counts p for coprime p,q
        let w = NormalPath::from_word(g, vec![0, 0, 1]); // slope (2,1)
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        assert_eq!(intersection_number(&cx, &w, &a), 1);
        assert_eq!(intersection_number(&cx, &w, &b), 2);
        // i((1,1),(2,1)) = |1*2 - 1*1| = 1
        let ab = NormalPath::from_word(g, vec![0, 1]);
        assert_eq!(intersection_number(&cx, &w, &ab), 1);
        // i((1,-1),(1,1)) = 2
        let abinv = NormalPath::from_word(g, vec![0, 3]);
        assert_eq!(intersection_number(&cx, &ab, &abinv), 2);
    }

    #[test]
    fn orientation_reversal_invariance() {
        let cx = torus_cx();
        let g = cx.graph();
        let w = NormalPath::from_word(g, vec![0, 0, 1]);
        let ab = NormalPath::from_word(g, vec![0, 1]);
        let n = intersection_number(&cx, &w, &ab);
        assert_eq!(intersection_number(&cx, &w.reversed(g), &ab), n);
        assert_eq!(intersection_number(&cx, &w, &ab.reversed(g)), n);
        assert_eq!(intersection_number(&cx, &w.reversed(g), &ab.reversed(g)), n);
    }

    #[test]
    fn figure_eight_pair_meets_five_times() {
        let g = build_figure1();
        let cx = build_complex(&g).unwrap();
        assert_eq!(cx.a_cycles().len(), 1);
        assert_eq!(cx.b_cycles().len(), 1);
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        assert_eq!(a.len(), 5);
        assert_eq!(b.len(), 5);
        assert_eq!(intersection_number(&cx, &a, &b), 5);
        assert_eq!(intersection_number(&cx, &b, &a), 5);
    }
}
