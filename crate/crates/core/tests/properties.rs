//! Randomized structural properties of the exact kernels.

use num_bigint::BigInt;
use proptest::prelude::*;

use twistcert_core::curvesys::{build_complex, intersection_number, twist, NormalPath};
use twistcert_core::exactalg::factor_over_z;
use twistcert_core::ribbon::{build_figure1, RibbonGraph};
use twistcert_core::{IntMatrix, IntPoly};

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4)
        .prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-9i64..=9, n), n)
        })
        .prop_map(|rows| IntMatrix::from_rows(&rows))
}

/// p(M) by Horner's rule over integer matrices
fn eval_at_matrix(p: &IntPoly, m: &IntMatrix) -> IntMatrix {
    let n = m.rows();
    let mut acc = IntMatrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m);
        for i in 0..n {
            acc.set(i, i, acc.get(i, i) + c);
        }
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton(m in small_matrix()) {
        let p = m.char_poly();
        prop_assert!(p.is_monic());
        let z = eval_at_matrix(&p, &m);
        let zero = IntMatrix::zeros(m.rows(), m.cols());
        prop_assert_eq!(z, zero);
    }

    #[test]
    fn factorization_reproduces_the_input(coeffs in proptest::collection::vec(-20i64..=20, 1..=8)) {
        let p = IntPoly::from_i64(&coeffs);
        prop_assume!(!p.is_zero());
        let factors = factor_over_z(&p);
        let mut prod = IntPoly::one();
        for (f, mult) in &factors {
            prop_assert!(f.leading_coeff() > BigInt::from(0));
            for _ in 0..*mult {
                prod = prod.mul(f);
            }
        }
        prop_assert!(prod == p || prod == p.neg(), "product differs beyond sign");
    }
}

/// closed walks on the drawn model, built from its two curve cycles by
/// random rotations and backtrack insertions; canonicalization must not see
/// the difference
fn mangle(
    graph: &RibbonGraph,
    mut word: Vec<usize>,
    ops: &[(u8, usize, usize)],
) -> Vec<usize> {
    for &(kind, pos, germ_seed) in ops {
        let at = pos % word.len();
        if kind == 0 {
            word.rotate_left(at);
        } else {
            // insert a backtrack x . x_bar where the walk sits at the
            // departure vertex of word[at]
            let v = word[at] / 4;
            let x = 4 * v + germ_seed % 4;
            word.splice(at..at, [x, graph.pairing(x)]);
        }
    }
    word
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduction_is_confluent(
        pick in 0usize..2,
        ops in proptest::collection::vec((0u8..2, 0usize..64, 0usize..4), 0..12),
    ) {
        let graph = build_figure1();
        let cx = build_complex(&graph).unwrap();
        let base = if pick == 0 { &cx.a_cycles()[0] } else { &cx.b_cycles()[0] };
        let mangled = mangle(&graph, base.word().to_vec(), &ops);
        prop_assert_eq!(&NormalPath::from_word(&graph, mangled), base);
    }

    #[test]
    fn twists_invert_and_compose(k1 in -3i64..=3, k2 in -3i64..=3) {
        let graph = build_figure1();
        let cx = build_complex(&graph).unwrap();
        let a = cx.a_cycles()[0].clone();
        let b = cx.b_cycles()[0].clone();
        let once = twist(&cx, &b, &a, k1).unwrap();
        let back = twist(&cx, &once, &a, -k1).unwrap();
        prop_assert_eq!(&back, &b);
        let twice = twist(&cx, &once, &a, k2).unwrap();
        let direct = twist(&cx, &b, &a, k1 + k2).unwrap();
        prop_assert_eq!(&twice, &direct);
        // a twist preserves intersection numbers with its own core
        prop_assert_eq!(intersection_number(&cx, &once, &a), intersection_number(&cx, &b, &a));
    }
}
