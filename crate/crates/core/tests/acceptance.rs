//! Acceptance gate: one test per claimed capability, each printing a
//! pass/fail line (visible with `--nocapture`). Every check here is exact;
//! estimator-based probes assert the documented tolerance band only.

use std::time::{Duration, Instant};

use twistcert_core::chains::{build_chain, family_word, CurveRef, TwistWord};
use twistcert_core::commands::{cmd_certify, RunConfig, RunStatus};
use twistcert_core::curvesys::{
    behrstock_probe, build_complex, compute_r0, fills, gamma_sequence, intersection_number,
    translated_pair, translated_triple, twist, twisting_estimate, BehrstockOutcome, CurveSysError,
    SquareComplex,
};
use twistcert_core::penner::{stretch_report, sweep, transition_matrix};
use twistcert_core::ribbon::{build_figure1, build_figure1_extended, OrientationFilter};
use twistcert_core::{ChainConfig, IntMatrix};

fn report(criterion: &str, start: Instant, limit: Option<Duration>) {
    let elapsed = start.elapsed();
    println!("criterion {criterion}: pass ({elapsed:.2?})");
    if let Some(limit) = limit {
        assert!(
            elapsed < limit,
            "criterion {criterion}: over the runtime target ({elapsed:.2?} >= {limit:?})"
        );
    }
}

fn genus4_complex() -> SquareComplex {
    build_complex(&build_figure1_extended()).expect("genus-4 model builds")
}

#[test]
fn criterion_01_figure1_counts() {
    let t = Instant::now();
    let g = build_figure1();
    let ft = g.trace_faces();
    assert_eq!(ft.genus, 3);
    assert_eq!(ft.boundary_components, 1);
    let cx = build_complex(&g).unwrap();
    assert_eq!(cx.a_cycles().len(), 1);
    assert_eq!(cx.b_cycles().len(), 1);
    assert_eq!(
        intersection_number(&cx, &cx.a_cycles()[0], &cx.b_cycles()[0]),
        5
    );
    report("1 (figure-1 counts)", t, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_02_unique_involution() {
    let t = Instant::now();
    let g = build_figure1();
    let auts = g.enumerate_automorphisms(true, OrientationFilter::Preserving);
    assert_eq!(auts.len(), 2, "expected exactly {{id, rho}}");
    let rho = auts.iter().find(|a| !a.is_identity()).unwrap();
    assert!(rho.compose(rho).is_identity());
    let x = g.marked_vertex().unwrap();
    assert_eq!(rho.vertex_image(x), x);
    let delta = g.marked_arc().unwrap();
    assert_ne!(g.arc_orbit(rho, delta).unwrap(), delta);
    report("2 (unique involution)", t, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_03_torus_transition_oracle() {
    let t = Instant::now();
    let cfg = ChainConfig::from_matrix(IntMatrix::from_rows(&[vec![1]]), 1);
    for m in 1..=3i64 {
        let w = TwistWord {
            letters: vec![(CurveRef::a(0), 1), (CurveRef::b(0), -1)],
            m,
        };
        let tm = transition_matrix(&w, &cfg).unwrap();
        assert_eq!(
            tm.matrix,
            IntMatrix::from_rows(&[vec![1 + m * m, m], vec![m, 1]])
        );
        assert_eq!(stretch_report(&w, &cfg).unwrap().degree, Some(2));
    }
    report("3 (torus oracle)", t, Some(Duration::from_secs(1)));
}

#[test]
fn criterion_04_degree_four_tail_rank_two() {
    let t = Instant::now();
    for k in 1..=3i64 {
        let cfg = build_chain(2, 4, k).unwrap();
        let res = sweep(&cfg, 1, 40).unwrap();
        assert_eq!(res.rows.len(), 40);
        for row in &res.rows[35..] {
            assert_eq!(row.degree, Some(4), "k = {k}, m = {}", row.m);
        }
    }
    report("4 (degree-4 tail, r = 2)", t, Some(Duration::from_secs(60)));
}

#[test]
fn criterion_05_degree_tail_general_rank() {
    let t = Instant::now();
    for r in 3..=5usize {
        let cfg = build_chain(r, r + 2, 1).unwrap();
        let res = sweep(&cfg, 1, 40).unwrap();
        for row in &res.rows[35..] {
            assert_eq!(row.degree, Some(2 * r), "r = {r}, m = {}", row.m);
        }
    }
    report("5 (degree-2r tail)", t, Some(Duration::from_secs(300)));
}

#[test]
fn criterion_06_rank_and_determinant() {
    let t = Instant::now();
    for r in 2..=6usize {
        for k in 1..=4i64 {
            let cfg = build_chain(r, r + 2, k).unwrap();
            let (rank, det) = cfg.rank_and_det();
            assert_eq!(rank, r, "(r, k) = ({r}, {k})");
            assert_eq!(det.magnitude().to_string(), (5 * k).to_string());
        }
    }
    report("6 (rank and determinant)", t, None);
}

#[test]
fn criterion_07_shift_property() {
    let t = Instant::now();
    let cfg = build_chain(2, 4, 1).unwrap();
    let word = family_word(&cfg, 5).unwrap();
    let n = word.n() as i64;
    let cx = genus4_complex();
    let seq = gamma_sequence(&cx, &word, -2, n + 2, 1_000_000_000).unwrap();
    assert!(seq.skipped.is_empty(), "window fits in the default budget");
    let mut compared = 0;
    for j in -2..=2i64 {
        let mut image = seq.get(j).unwrap().clone();
        for s in (1..=n).rev() {
            let core = cx.curve(word.letter(s).0).unwrap();
            image = twist(&cx, &image, core, word.exponent(s)).unwrap();
        }
        assert_eq!(&image, seq.get(j + n).unwrap(), "shift fails at j = {j}");
        compared += 1;
    }
    assert!(compared > 0);
    report("7 (shift property)", t, Some(Duration::from_secs(120)));
}

#[test]
fn criterion_08_intersections_and_twisting_band() {
    let t = Instant::now();
    let cfg = build_chain(2, 4, 1).unwrap();
    let cx = genus4_complex();
    let budget = 1u64 << 23;
    for m in 4..=6i64 {
        let word = family_word(&cfg, m).unwrap();
        let n = word.n() as i64;
        let (lo, hi) = (-2, n + 2);

        // (i) every pair in the computed window intersects
        let mut computed = 0;
        for i in lo..hi {
            for j in (i + 1)..=hi {
                match translated_pair(&cx, &word, i, j, budget) {
                    Ok((p, q)) => {
                        assert_ne!(
                            intersection_number(&cx, &p, &q),
                            0,
                            "m = {m}: gamma_{i} and gamma_{j} are disjoint"
                        );
                        computed += 1;
                    }
                    Err(CurveSysError::Budget { .. }) => {}
                    Err(e) => panic!("m = {m}: {e}"),
                }
            }
        }
        assert!(computed >= 30, "m = {m}: window mostly over budget");

        // (ii) twisting around each middle curve stays in the band
        let (r0, _) = compute_r0(&cx, &word, budget).unwrap();
        let band = r0 + 8;
        for i in lo..hi {
            for j in (i + 2)..=hi.min(i + 4) {
                for l in (i + 1)..j {
                    let (alpha, core, beta) =
                        match translated_triple(&cx, &word, i, l, j, budget) {
                            Ok(x) => x,
                            Err(CurveSysError::Budget { .. }) => continue,
                            Err(e) => panic!("m = {m}: {e}"),
                        };
                    let est = twisting_estimate(&cx, &core, &alpha, &beta).unwrap();
                    assert!(
                        (est.tau as i64 - m).unsigned_abs() <= band,
                        "m = {m}, triple ({i},{l},{j}): tau {} outside band {band}",
                        est.tau
                    );
                }
            }
        }
    }
    report("8 (twisting band)", t, None);
}

#[test]
fn criterion_09_consecutive_curves_fill() {
    let t = Instant::now();
    let cfg = build_chain(2, 4, 1).unwrap();
    let word = family_word(&cfg, 5).unwrap();
    let n = word.n() as i64;
    let cx = genus4_complex();
    let seq = gamma_sequence(&cx, &word, 1, n, 1_000_000_000).unwrap();
    let curves: Vec<_> = (1..=n).map(|j| seq.get(j).unwrap().clone()).collect();
    let f = fills(&cx, &curves);
    assert!(f.fills, "{} non-disk regions", f.regions);
    report("9 (consecutive curves fill)", t, None);
}

#[test]
fn criterion_10_behrstock_inequality() {
    let t = Instant::now();
    let cfg = build_chain(2, 4, 1).unwrap();
    let cx = genus4_complex();
    let budget = 1u64 << 23;
    let mut triggered = 0;
    for m in [5i64, 15, 18] {
        let word = family_word(&cfg, m).unwrap();
        let n = word.n() as i64;
        for l in 1..=n {
            let (alpha, core, beta) =
                translated_triple(&cx, &word, l - 1, l, l + 1, budget).unwrap();
            let rep = behrstock_probe(&cx, &core, &alpha, &beta).unwrap();
            match rep.outcome {
                BehrstockOutcome::Violated => panic!(
                    "m = {m}, l = {l}: forward tau {} but reverse tau {:?}",
                    rep.forward.tau, rep.reverse
                ),
                BehrstockOutcome::Holds => triggered += 1,
                BehrstockOutcome::NotTriggered => {}
            }
        }
    }
    assert!(triggered > 0, "no probe reached the trigger threshold");
    report("10 (behrstock inequality)", t, None);
}

#[test]
fn criterion_11_end_to_end_certificates() {
    let t = Instant::now();
    for (r, g) in [(2usize, 4usize), (3, 5)] {
        let cfg = RunConfig {
            r,
            g,
            k: 1,
            m: 8,
            ..RunConfig::default()
        };
        let rep = cmd_certify(&cfg);
        assert_eq!(
            rep.status,
            RunStatus::ConditionalPass,
            "(r, g) = ({r}, {g}): {}",
            rep.to_text()
        );
        let obstruction = rep
            .checks
            .iter()
            .find(|c| c.name == "symmetry obstruction")
            .unwrap();
        assert_eq!(obstruction.passed, Some(true));
        assert!(!rep.assumptions.is_empty(), "ledger must list assumptions");
        assert!(rep.checks.iter().any(|c| c.name.starts_with("hypothesis:")));
        let rerun = cmd_certify(&cfg);
        assert_eq!(rep.to_json(), rerun.to_json(), "report must be deterministic");
    }
    report("11 (end-to-end certificates)", t, None);
}
