//! Filling test via an exact overlay diagram.
//!
//! The curves are drawn simultaneously in canonical position: inside each
//! edge band the strands are ordered by where their forward rays diverge
//! (the taut order, so parallel strands never cross inside a band), and
//! inside each vertex disk every strand becomes a chord between boundary
//! ports. Crossings therefore happen only inside vertex disks, where the
//! chord arrangement is computed exactly with integer coordinates on a
//! convex curve. The complement regions of the union are then assembled
//! from the arrangement faces, the band gap strips and the capped boundary
//! faces, and their Euler characteristics are read off by counting cells
//! with compact support. The family fills iff every region is a disk
//! containing at most one cap.

use std::collections::HashMap;

use super::intersect::intersection_number;
use super::path::{reverse_word, NormalPath};
use super::SquareComplex;
use crate::ribbon::Germ;

#[derive(Clone, Debug)]
pub struct FillReport {
    pub fills: bool,
    /// connected components of the complement of the union
    pub regions: usize,
    /// total crossings in the overlay (all pairs in minimal position)
    pub crossings: u64,
    /// (euler characteristic, boundary caps inside) per region
    pub region_data: Vec<(i64, usize)>,
}

/// passage of a curve through an edge: (curve index, step index)
type Passage = (usize, usize);

pub fn fills(cx: &SquareComplex, paths: &[NormalPath]) -> FillReport {
    let g = cx.graph();
    assert!(!paths.is_empty(), "filling test needs at least one curve");
    for p in paths {
        assert!(p.is_primitive(), "filling test expects primitive curves");
    }
    let rev: Vec<Vec<Germ>> = paths.iter().map(|p| reverse_word(g, p.word())).collect();
    let n_germs = 4 * g.n_vertices();

    let mut lo_germ = vec![usize::MAX; g.n_edges()];
    for germ in 0..n_germs {
        let e = g.edge_of_germ(germ);
        if germ < lo_germ[e] {
            lo_germ[e] = germ;
        }
    }

    // ---- cross-section order of the strands in each edge band ----
    // each passage has two rays re-rooted at the edge: toward the
    // higher-germ end (forward) and toward the lower one (backward); the
    // depth-0 germ of the forward ray is the lower germ itself
    // descending ccw rank around the common arrival germ puts the strand
    // nearer the reference side (the corner ccw-after the measuring germ)
    let rank = |d: Germ, a: Germ| (d % 4 + 4 - a % 4) % 4;
    let mut band: Vec<Vec<Passage>> = vec![Vec::new(); g.n_edges()];
    for (ci, p) in paths.iter().enumerate() {
        for (s, &germ) in p.word().iter().enumerate() {
            band[g.edge_of_germ(germ)].push((ci, s));
        }
    }
    // canonical index grows away from the corner ccw-after the lower germ.
    // Strands are ordered at their nearest divergence, comparing the
    // interleaved two-sided rays lexicographically: this is a bona fide
    // total order, and along a shared corridor the nearer end switches
    // exactly once, so linked pairs cross exactly once and unlinked ones
    // never do.
    #[cfg(feature = "fill-trace")]
    let t0 = std::time::Instant::now();
    let cap = 2 * paths.iter().map(|p| p.len()).sum::<usize>() + 2;

    // Suffix ranks of the ray streams, so deep shared corridors cost
    // O(log) per comparison instead of a re-walk. Each ray is a rotation
    // of a curve word (or its reversal); its letters are transformed to
    // v = ccw rank of the germ relative to the back-continuation of the
    // previous germ. Within a band the depth-0 germ is shared, so equal
    // v-prefixes mean equal germ prefixes, and at the first divergence the
    // v comparison is exactly the taut-order comparison. Ascending
    // lexicographic order on v-streams gives the backward-side order; the
    // forward-side order is its exact reverse (every letter comparison is
    // flipped, hence so is the first deciding one).
    let mut offset = vec![[0usize; 2]; paths.len()];
    let mut n_states = 0usize;
    for (ci, p) in paths.iter().enumerate() {
        offset[ci] = [n_states, n_states + p.len()];
        n_states += 2 * p.len();
    }
    let mut succ: Vec<u32> = vec![0; n_states];
    let mut v0: Vec<u32> = vec![0; n_states];
    for (ci, p) in paths.iter().enumerate() {
        let l = p.len();
        for (dir, arr) in [(0usize, p.word()), (1, rev[ci].as_slice())] {
            let off = offset[ci][dir];
            for idx in 0..l {
                succ[off + idx] = (off + (idx + 1) % l) as u32;
                let prev = arr[(idx + l - 1) % l];
                v0[off + idx] = rank(arr[idx], g.pairing(prev)) as u32;
            }
        }
    }
    // rank-doubling tables: rk[t][s] orders v-prefixes of length 2^t
    let mut rk: Vec<Vec<u32>> = vec![v0];
    let mut jmp: Vec<Vec<u32>> = vec![succ];
    let mut span = 1usize;
    while span < cap {
        let last_rk = rk.last().unwrap();
        let last_jmp = jmp.last().unwrap();
        let key = |s: usize| (last_rk[s], last_rk[last_jmp[s] as usize]);
        let mut order: Vec<u32> = (0..n_states as u32).collect();
        order.sort_unstable_by_key(|&s| key(s as usize));
        let mut new_rk = vec![0u32; n_states];
        let mut r = 0u32;
        for i in 1..n_states {
            if key(order[i] as usize) != key(order[i - 1] as usize) {
                r += 1;
            }
            new_rk[order[i] as usize] = r;
        }
        let new_jmp: Vec<u32> = (0..n_states)
            .map(|s| last_jmp[last_jmp[s] as usize])
            .collect();
        rk.push(new_rk);
        jmp.push(new_jmp);
        span *= 2;
    }
    let final_rk = rk.last().unwrap().clone();
    // first position where the two v-streams differ, saturated at cap
    let lcp = |mut s1: usize, mut s2: usize| -> usize {
        let mut d = 0usize;
        for t in (0..rk.len()).rev() {
            if d >= cap {
                break;
            }
            if rk[t][s1] == rk[t][s2] {
                d += 1 << t;
                s1 = jmp[t][s1] as usize;
                s2 = jmp[t][s2] as usize;
            }
        }
        d
    };
    // states whose streams are the two rays of a passage from depth 1
    let ray_state = |(ci, s): Passage, toward_hi: bool| -> usize {
        let w = paths[ci].word();
        let l = w.len();
        let departs_lo = w[s] == lo_germ[g.edge_of_germ(w[s])];
        if departs_lo == toward_hi {
            offset[ci][0] + (s + 1) % l
        } else {
            offset[ci][1] + (l - s) % l
        }
    };
    for b in band.iter_mut() {
        b.sort_by(|&p1, &p2| {
            if p1 == p2 {
                return std::cmp::Ordering::Equal;
            }
            let (f1, f2) = (ray_state(p1, true), ray_state(p2, true));
            let (b1, b2) = (ray_state(p1, false), ray_state(p2, false));
            let df = lcp(f1, f2);
            let db = lcp(b1, b2);
            assert!(
                df.min(db) < cap,
                "strands never diverge; inputs are not distinct primitives"
            );
            if df <= db {
                // nearest divergence is toward the higher end: descending
                final_rk[f2].cmp(&final_rk[f1])
            } else {
                final_rk[b1].cmp(&final_rk[b2])
            }
        });
    }
    drop(rk);
    drop(jmp);
    #[cfg(feature = "fill-trace")]
    eprintln!("band sort: {:.2?}", t0.elapsed());
    let mut pos_in_band: HashMap<Passage, usize> = HashMap::new();
    for b in &band {
        for (i, &p) in b.iter().enumerate() {
            pos_in_band.insert(p, i);
        }
    }
    // ports of a germ in canonical order (index 0 nearest the ccw corner)
    let port_list = |germ: Germ| -> Vec<Passage> {
        let e = g.edge_of_germ(germ);
        if germ == lo_germ[e] {
            band[e].clone()
        } else {
            band[e].iter().rev().copied().collect()
        }
    };
    let port_index = |germ: Germ, p: Passage| -> usize {
        let e = g.edge_of_germ(germ);
        let w = band[e].len();
        let pos = pos_in_band[&p];
        if germ == lo_germ[e] {
            pos
        } else {
            w - 1 - pos
        }
    };

    // ---- piece ids: gap strips, boundary caps, vertex arrangement faces ----
    let ft = g.trace_faces();
    let mut germ_face = vec![usize::MAX; n_germs];
    for (fi, cyc) in ft.faces.iter().enumerate() {
        for &h in cyc {
            germ_face[h] = fi;
        }
    }
    // face whose boundary walk contains the corner just ccw of germ h
    let face_after = |h: Germ| -> usize { germ_face[g.next_ccw(h)] };

    let mut strip_base = vec![0usize; g.n_edges()];
    let mut next_id = 0usize;
    for e in 0..g.n_edges() {
        strip_base[e] = next_id;
        next_id += band[e].len() + 1;
    }
    let cap_base = next_id;
    next_id += ft.faces.len();
    let mut uf = UnionFind::new(next_id);
    let mut two_cells = next_id; // strips and caps so far; faces added later
    let mut one_cells: Vec<usize> = Vec::new(); // attributed by adjacent piece
    let mut y_points: Vec<usize> = Vec::new();

    // band sides glue the outer strips to the caps
    for e in 0..g.n_edges() {
        let lo = lo_germ[e];
        let hi = g.pairing(lo);
        let w = band[e].len();
        uf.union(strip_base[e], cap_base + face_after(lo));
        one_cells.push(strip_base[e]);
        uf.union(strip_base[e] + w, cap_base + face_after(hi));
        one_cells.push(strip_base[e] + w);
    }

    // ---- vertex disks ----
    let mut crossings_total = 0u64;
    let mut pair_cross: HashMap<(usize, usize), u64> = HashMap::new();
    for v in 0..g.n_vertices() {
        // boundary sequence (ccw): per germ its ports in descending
        // canonical order, then the corner; segments between consecutive
        // entries are gap openings or corner arcs
        #[derive(Clone, Copy)]
        enum Seg {
            Opening { germ: Germ, gap: usize },
            Corner { germ: Germ },
        }
        let mut b_entries: Vec<Option<Passage>> = Vec::new(); // port passes, None = y point
        let mut segs: Vec<Seg> = Vec::new(); // segment i spans B[i] -> B[i+1]
        let mut port_node: HashMap<(Germ, usize), usize> = HashMap::new();
        for gp in 0..4 {
            let germ = 4 * v + gp;
            let ports = port_list(germ);
            let w = ports.len();
            // ports in descending canonical order, each followed by its gap
            // (gap w precedes them: it is the segment leaving the previous
            // corner's second y point, pushed at the end of that corner)
            for i in (0..w).rev() {
                port_node.insert((germ, i), b_entries.len());
                b_entries.push(Some(ports[i]));
                segs.push(Seg::Opening { germ, gap: i });
            }
            // two endpoints of the corner arc, then the highest gap of the
            // next germ (its whole corridor when the next band is empty)
            b_entries.push(None);
            segs.push(Seg::Corner { germ });
            b_entries.push(None);
            let ng = 4 * v + (gp + 1) % 4;
            let nw = band[g.edge_of_germ(ng)].len();
            segs.push(Seg::Opening { germ: ng, gap: nw });
        }
        let nb = b_entries.len();
        assert_eq!(segs.len(), nb);

        // chords: one per visit of each curve
        struct Chord {
            a: usize,
            b: usize,
            curve: usize,
        }
        let mut chords: Vec<Chord> = Vec::new();
        for (ci, p) in paths.iter().enumerate() {
            let w = p.word();
            let l = w.len();
            for s in 0..l {
                if w[s] / 4 != v {
                    continue;
                }
                let prev = (s + l - 1) % l;
                let a_germ = g.pairing(w[prev]);
                let d_germ = w[s];
                let a = port_node[&(a_germ, port_index(a_germ, (ci, prev)))];
                let b = port_node[&(d_germ, port_index(d_germ, (ci, s)))];
                chords.push(Chord { a, b, curve: ci });
            }
        }

        let vr = arrange_disk(
            nb,
            &chords.iter().map(|c| (c.a, c.b)).collect::<Vec<_>>(),
            v as u64,
        );
        #[cfg(feature = "fill-trace")]
        eprintln!(
            "disk {v}: nb {nb}, chords {}, crossings {}, rss {}",
            chords.len(),
            vr.crossings.len(),
            std::fs::read_to_string("/proc/self/status")
                .unwrap()
                .lines()
                .find(|l| l.starts_with("VmRSS"))
                .unwrap_or("?")
                .trim()
        );
        crossings_total += vr.crossings.len() as u64;
        for &(i, j) in &vr.crossings {
            let (ci, cj) = (chords[i].curve, chords[j].curve);
            let key = if ci <= cj { (ci, cj) } else { (cj, ci) };
            *pair_cross.entry(key).or_insert(0) += 1;
        }

        // allocate pieces for the inner faces and glue across the boundary
        let face_piece: Vec<usize> = (0..vr.n_inner_faces)
            .map(|_| {
                let id = uf.push();
                two_cells += 1;
                id
            })
            .collect();
        for (i, seg) in segs.iter().enumerate() {
            let f = face_piece[vr.face_of_boundary_seg[i]];
            match *seg {
                Seg::Opening { germ, gap } => {
                    let e = g.edge_of_germ(germ);
                    let w = band[e].len();
                    let global_gap = if germ == lo_germ[e] { gap } else { w - gap };
                    uf.union(strip_base[e] + global_gap, f);
                    one_cells.push(f);
                }
                Seg::Corner { germ } => {
                    let cap = cap_base + face_after(germ);
                    uf.union(cap, f);
                    one_cells.push(f);
                    y_points.push(f);
                    y_points.push(f);
                }
            }
        }
    }

    // cross-check the overlay against the run-based intersection counts
    #[cfg(feature = "fill-trace")]
    let t1 = std::time::Instant::now();
    for i in 0..paths.len() {
        for j in i..paths.len() {
            let got = pair_cross.get(&(i, j)).copied().unwrap_or(0);
            let want = if i == j {
                0
            } else {
                intersection_number(cx, &paths[i], &paths[j])
            };
            assert_eq!(
                got, want,
                "overlay realizes {got} crossings between curves {i},{j}, expected {want}"
            );
        }
    }

    #[cfg(feature = "fill-trace")]
    eprintln!("cross-check: {:.2?}", t1.elapsed());
    // ---- per-region Euler characteristics ----
    let mut chi: HashMap<usize, i64> = HashMap::new();
    let mut caps: HashMap<usize, usize> = HashMap::new();
    for id in 0..two_cells {
        *chi.entry(uf.find(id)).or_insert(0) += 1;
    }
    for &p in &one_cells {
        *chi.entry(uf.find(p)).or_insert(0) -= 1;
    }
    for &p in &y_points {
        *chi.entry(uf.find(p)).or_insert(0) += 1;
    }
    for fi in 0..ft.faces.len() {
        *caps.entry(uf.find(cap_base + fi)).or_insert(0) += 1;
    }
    let mut region_data: Vec<(i64, usize)> = chi
        .iter()
        .map(|(&r, &c)| (c, caps.get(&r).copied().unwrap_or(0)))
        .collect();
    region_data.sort();

    // partition check: chi(surface) = sum over regions + (-crossings)
    let chi_closed = 2 - 2 * cx.genus() as i64;
    let total: i64 = region_data.iter().map(|&(c, _)| c).sum();
    assert_eq!(
        total,
        chi_closed + crossings_total as i64,
        "cell census inconsistent with surface Euler characteristic"
    );

    let fills = region_data.iter().all(|&(c, k)| c == 1 && k <= 1);
    FillReport {
        fills,
        regions: region_data.len(),
        crossings: crossings_total,
        region_data,
    }
}

/// Result of subdividing one vertex disk by its chords.
struct DiskResult {
    /// crossing chord pairs (i < j)
    crossings: Vec<(usize, usize)>,
    n_inner_faces: usize,
    /// for each boundary segment (i -> i+1 ccw), the inner face it bounds
    face_of_boundary_seg: Vec<usize>,
}

/// Exact arrangement of chords spanning a disk with `nb` boundary nodes in
/// ccw convex position. Coordinates live on the parabola (k, k^2); if the
/// chosen abscissas produce three concurrent chords the layout is retried
/// with perturbed values. All arithmetic is exact in i128.
fn arrange_disk(nb: usize, chords: &[(usize, usize)], salt: u64) -> DiskResult {
    for attempt in 0..32 {
        let ks = abscissas(nb, salt, attempt);
        if let Some(r) = try_arrange(nb, chords, &ks) {
            return r;
        }
    }
    panic!("could not reach generic position for a vertex arrangement");
}

fn abscissas(nb: usize, salt: u64, attempt: u32) -> Vec<i128> {
    if attempt == 0 {
        return (0..nb as i128).collect();
    }
    // deterministic strictly increasing pseudo-random gaps
    let mut state = salt
        .wrapping_mul(0x9e3779b97f4a7c15)
        .wrapping_add(attempt as u64)
        .wrapping_mul(0xbf58476d1ce4e5b9)
        | 1;
    let mut ks = Vec::with_capacity(nb);
    let mut cur: i128 = 0;
    for _ in 0..nb {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        cur += 1 + (state % 97) as i128;
        ks.push(cur);
    }
    ks
}

fn try_arrange(nb: usize, chords: &[(usize, usize)], ks: &[i128]) -> Option<DiskResult> {
    let pt = |i: usize| -> (i128, i128) { (ks[i], ks[i] * ks[i]) };
    let nc = chords.len();

    // crossing pairs: endpoints interleaved along the boundary circle.
    // Sweep the boundary once keeping the set of open chords by left
    // endpoint; when a chord closes, the open left endpoints strictly
    // inside its span are exactly its crossing partners (nested chords
    // have already closed), so the scan is output-sensitive.
    let mut crossings: Vec<(usize, usize)> = Vec::new();
    {
        let mut opens: Vec<usize> = vec![usize::MAX; nb];
        let mut closes: Vec<usize> = vec![usize::MAX; nb];
        for (i, &c) in chords.iter().enumerate() {
            let (a, b) = sorted(c);
            debug_assert!(opens[a] == usize::MAX && closes[b] == usize::MAX);
            opens[a] = i;
            closes[b] = i;
        }
        let mut open_left: std::collections::BTreeSet<usize> = std::collections::BTreeSet::new();
        for s in 0..nb {
            let i = closes[s];
            if i != usize::MAX {
                let (a, _) = sorted(chords[i]);
                for &l in open_left.range(a + 1..s) {
                    crossings.push(sorted((opens[l], i)));
                }
                open_left.remove(&a);
            }
            if opens[s] != usize::MAX {
                open_left.insert(s);
            }
        }
    }

    // order the crossings along each chord by exact intersection parameter
    let sub = |p: (i128, i128), q: (i128, i128)| (p.0 - q.0, p.1 - q.1);
    let cross2 = |p: (i128, i128), q: (i128, i128)| p.0 * q.1 - p.1 * q.0;
    let param = |ci: usize, cj: usize| -> (i128, i128) {
        let (a, b) = (pt(chords[ci].0), pt(chords[ci].1));
        let (c, d) = (pt(chords[cj].0), pt(chords[cj].1));
        let mut num = cross2(sub(c, a), sub(d, c));
        let mut den = cross2(sub(b, a), sub(d, c));
        assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        (num, den)
    };
    let mut along: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nc]; // (crossing id, other chord)
    for (xid, &(i, j)) in crossings.iter().enumerate() {
        along[i].push((xid, j));
        along[j].push((xid, i));
    }
    for (ci, list) in along.iter_mut().enumerate() {
        let mut degenerate = false;
        list.sort_by(|&(_, o1), &(_, o2)| {
            let (n1, d1) = param(ci, o1);
            let (n2, d2) = param(ci, o2);
            let lhs = n1 * d2;
            let rhs = n2 * d1;
            if lhs == rhs {
                degenerate = true;
            }
            lhs.cmp(&rhs)
        });
        if degenerate {
            return None;
        }
        // parameters in (0,1), strictly
        for &(_, o) in list.iter() {
            let (n, d) = param(ci, o);
            if n <= 0 || n >= d {
                return None; // should not happen; be safe
            }
        }
    }

    // planar graph: nodes = boundary + crossings, edges = boundary arcs +
    // chord segments; rotations are ccw lists of half-edges
    let n_nodes = nb + crossings.len();
    let mut edges: Vec<(usize, usize)> = Vec::new(); // half-edges 2e, 2e+1
    let mut boundary_edge = vec![usize::MAX; nb]; // edge id of (i -> i+1)
    for i in 0..nb {
        boundary_edge[i] = edges.len();
        edges.push((i, (i + 1) % nb));
    }
    let mut node_chord_edges: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n_nodes];
    // (edge id, true if the node is the edge's source)
    let mut edge_chord = vec![usize::MAX; edges.len()]; // boundary edges: none
    for ci in 0..nc {
        let mut prev_node = chords[ci].0;
        for &(xid, _) in &along[ci] {
            let xnode = nb + xid;
            let eid = edges.len();
            edges.push((prev_node, xnode));
            edge_chord.push(ci);
            node_chord_edges[prev_node].push((eid, true));
            node_chord_edges[xnode].push((eid, false));
            prev_node = xnode;
        }
        let eid = edges.len();
        edges.push((prev_node, chords[ci].1));
        edge_chord.push(ci);
        node_chord_edges[prev_node].push((eid, true));
        node_chord_edges[chords[ci].1].push((eid, false));
    }

    // rotation at each node: ccw-ordered outgoing half-edges.
    // half-edge id = 2*edge + (0 source->target, 1 target->source)
    let he_out = |eid: usize, from_source: bool| 2 * eid + usize::from(!from_source);
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n_nodes];
    let chord_dir: Vec<(i128, i128)> = chords
        .iter()
        .map(|&(a, b)| sub(pt(b), pt(a)))
        .collect();

    for node in 0..n_nodes {
        if node < nb {
            // convex boundary node: ccw order = next edge, interior, prev
            let mut r = vec![he_out(boundary_edge[node], true)];
            // at most one chord endpoint per port
            for &(eid, from_source) in &node_chord_edges[node] {
                r.push(he_out(eid, from_source));
            }
            assert!(node_chord_edges[node].len() <= 1);
            let prev_edge = boundary_edge[(node + nb - 1) % nb];
            r.push(he_out(prev_edge, false));
            rot[node] = r;
        } else {
            let xid = node - nb;
            let (ci, cj) = crossings[xid];
            // four half-edges: +di, -di along chord ci; +dj, -dj along cj
            let mut plus = [usize::MAX; 2];
            let mut minus = [usize::MAX; 2];
            for &(eid, from_source) in &node_chord_edges[node] {
                let which = usize::from(edge_chord[eid] == cj);
                // outgoing direction: edges run from chord source onward,
                // so leaving via `from_source` means pointing backward
                if from_source {
                    plus[which] = he_out(eid, true);
                } else {
                    minus[which] = he_out(eid, false);
                }
            }
            assert!(
                plus.iter().chain(minus.iter()).all(|&h| h != usize::MAX),
                "crossing node must have four incident segments"
            );
            let (di, dj) = (chord_dir[ci], chord_dir[cj]);
            let r = if cross2(di, dj) > 0 {
                vec![plus[0], plus[1], minus[0], minus[1]]
            } else {
                vec![plus[0], minus[1], minus[0], plus[1]]
            };
            rot[node] = r;
        }
    }

    // face tracing: next(h) = cw-neighbour of twin(h) at the head node
    let head = |h: usize| {
        let (s, t) = edges[h / 2];
        if h % 2 == 0 {
            t
        } else {
            s
        }
    };
    let twin = |h: usize| h ^ 1;
    let n_he = 2 * edges.len();
    let mut pos_in_rot: Vec<usize> = vec![usize::MAX; n_he];
    for r in &rot {
        for (i, &h) in r.iter().enumerate() {
            pos_in_rot[h] = i;
        }
    }
    let next = |h: usize| {
        let n = head(h);
        let r = &rot[n];
        let i = pos_in_rot[twin(h)];
        r[(i + r.len() - 1) % r.len()]
    };
    let mut face_of_he = vec![usize::MAX; n_he];
    let mut n_faces = 0usize;
    for h0 in 0..n_he {
        if face_of_he[h0] != usize::MAX {
            continue;
        }
        let mut h = h0;
        loop {
            face_of_he[h] = n_faces;
            h = next(h);
            if h == h0 {
                break;
            }
        }
        n_faces += 1;
    }
    assert_eq!(
        n_nodes as i64 - edges.len() as i64 + n_faces as i64,
        2,
        "vertex arrangement is not a planar subdivision"
    );
    // outer face: traced along the boundary in the cw direction
    let outer = face_of_he[he_out(boundary_edge[0], false)];
    // compact inner face ids
    let mut inner_id = vec![usize::MAX; n_faces];
    let mut n_inner = 0usize;
    for f in 0..n_faces {
        if f != outer {
            inner_id[f] = n_inner;
            n_inner += 1;
        }
    }
    let face_of_boundary_seg: Vec<usize> = (0..nb)
        .map(|i| {
            let f = face_of_he[he_out(boundary_edge[i], true)];
            assert_ne!(f, outer, "ccw boundary edge bounds the outer face");
            inner_id[f]
        })
        .collect();
    Some(DiskResult {
        crossings,
        n_inner_faces: n_inner,
        face_of_boundary_seg,
    })
}

fn sorted((a, b): (usize, usize)) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn push(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}
