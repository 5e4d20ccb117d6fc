//! Dehn twists acting on explicit curves.
//!
//! The k-fold twist about a simple curve c inserts, at every essential
//! crossing x of the input with c, a copy of c^(eps_x * k) re-rooted at the
//! crossing vertex, where eps_x is the local crossing sign; the result is
//! then cyclically reduced. Insertion at the divergence end of the crossing
//! band is legitimate because sliding the insertion point along the band is
//! a homotopy.

use super::intersect::crossings;
use super::path::{reverse_word, NormalPath};
use super::{CurveSysError, SquareComplex};
use crate::ribbon::Germ;

pub fn twist(
    cx: &SquareComplex,
    p: &NormalPath,
    c: &NormalPath,
    k: i64,
) -> Result<NormalPath, CurveSysError> {
    twist_budgeted(cx, p, c, k, u64::MAX)
}

pub(crate) fn twist_budgeted(
    cx: &SquareComplex,
    p: &NormalPath,
    c: &NormalPath,
    k: i64,
    budget: u64,
) -> Result<NormalPath, CurveSysError> {
    let g = cx.graph();
    // insertion order at a vertex would be ambiguous if c revisited it
    let mut seen = vec![false; g.n_vertices()];
    for &germ in c.word() {
        if std::mem::replace(&mut seen[germ / 4], true) {
            return Err(CurveSysError::TwistCurveNotSimple);
        }
    }
    if k == 0 {
        return Ok(p.clone());
    }
    let xs = crossings(cx, p, c);
    if xs.is_empty() {
        return Ok(p.clone());
    }
    let attempted =
        p.len() as u64 + xs.len() as u64 * k.unsigned_abs() * c.len() as u64;
    if attempted > budget {
        return Err(CurveSysError::Budget { attempted, budget });
    }

    let mut at: Vec<Option<(usize, i8)>> = vec![None; p.len()];
    for x in &xs {
        assert!(
            at[x.p_pos].is_none(),
            "two crossing bands end at one visit of a simple curve"
        );
        at[x.p_pos] = Some((x.c_pos, x.sign));
    }

    let mut word: Vec<Germ> = Vec::with_capacity(attempted as usize);
    for (i, &germ) in p.word().iter().enumerate() {
        if let Some((c_pos, sign)) = at[i] {
            let mut rot: Vec<Germ> = Vec::with_capacity(c.len());
            rot.extend_from_slice(&c.word()[c_pos..]);
            rot.extend_from_slice(&c.word()[..c_pos]);
            let e = sign as i64 * k;
            let loop_word = if e > 0 { rot } else { reverse_word(g, &rot) };
            for _ in 0..e.unsigned_abs() {
                word.extend_from_slice(&loop_word);
            }
        }
        word.push(germ);
    }
    Ok(NormalPath::from_word(g, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvesys::{build_complex, intersection_number};
    use crate::ribbon::{build_figure1, RibbonGraph};

    fn torus_cx() -> SquareComplex {
        let g =
            RibbonGraph::parse("vertex v: a1 b1 a2 b2\nedge al a: a1 a2\nedge be b: b1 b2\n")
                .unwrap();
        build_complex(&g).unwrap()
    }

    #[test]
    fn torus_twist_counts() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        for k in [-3i64, -1, 1, 2, 5] {
            let tb = twist(&cx, &b, &a, k).unwrap();
            // i(T_a^k b, b) = |k| i(a,b)^2, i(T_a^k b, a) = i(b,a)
            assert_eq!(intersection_number(&cx, &tb, &b), k.unsigned_abs());
            assert_eq!(intersection_number(&cx, &tb, &a), 1);
        }
    }

    #[test]
    fn twist_fixes_its_own_core() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        assert_eq!(twist(&cx, &a, &a, 7).unwrap(), a);
    }

    #[test]
    fn twist_inversion_round_trip() {
        let cx = torus_cx();
        let g = cx.graph();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        for k in [1i64, 2, 5, -4] {
            let tb = twist(&cx, &b, &a, k).unwrap();
            assert_eq!(twist(&cx, &tb, &a, -k).unwrap(), b);
        }
        let w = NormalPath::from_word(g, vec![0, 1, 0, 0, 1]);
        let tw = twist(&cx, &w, &b, 3).unwrap();
        assert_eq!(twist(&cx, &tw, &b, -3).unwrap(), w);
    }

    #[test]
    fn twist_is_a_homeomorphism_on_counts() {
        let cx = torus_cx();
        let g = cx.graph();
        let a = cx.a_cycles()[0].clone();
        let x = NormalPath::from_word(g, vec![0, 0, 1]);
        let y = NormalPath::from_word(g, vec![0, 3]);
        let before = intersection_number(&cx, &x, &y);
        let tx = twist(&cx, &x, &a, 2).unwrap();
        let ty = twist(&cx, &y, &a, 2).unwrap();
        assert_eq!(intersection_number(&cx, &tx, &ty), before);
    }

    #[test]
    fn genus_three_pair_twist_formula() {
        let g = build_figure1();
        let cx = build_complex(&g).unwrap();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        for k in [1i64, 2, 3, -2] {
            let tb = twist(&cx, &b, &a, k).unwrap();
            assert_eq!(intersection_number(&cx, &tb, &b), 25 * k.unsigned_abs());
            assert_eq!(intersection_number(&cx, &tb, &a), 5);
            assert_eq!(twist(&cx, &tb, &a, -k).unwrap(), b);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let cx = torus_cx();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        let err = twist_budgeted(&cx, &b, &a, 1_000_000, 10).unwrap_err();
        match err {
            CurveSysError::Budget { attempted, budget } => {
                assert!(attempted > budget);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
