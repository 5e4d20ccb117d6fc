//! Abstract (r, g, k) curve configurations: two multicurves A = {a_1..a_r},
//! B = {b_1..b_r} with a chain-shaped intersection matrix
//! (i(a_1,b_1) = 5, a band of single intersections, i(a_r,b_r) = k),
//! plus the twist words of the associated mapping-class family.

use std::fmt;
use thiserror::Error;

use crate::exactalg::IntMatrix;
use crate::ribbon::CurveClass;
use num_bigint::BigInt;

/// Reference to one curve of the configuration; `index` is 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveRef {
    pub class: CurveClass,
    pub index: usize,
}

impl CurveRef {
    pub fn a(i: usize) -> Self {
        CurveRef {
            class: CurveClass::A,
            index: i,
        }
    }

    pub fn b(i: usize) -> Self {
        CurveRef {
            class: CurveClass::B,
            index: i,
        }
    }
}

impl fmt::Display for CurveRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class.letter(), self.index + 1)
    }
}

#[derive(Debug, Error)]
pub enum ChainError {
    #[error("rank parameter must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("genus bound violated: need g >= r + 2, got r = {r}, g = {g}")]
    GenusBound { r: usize, g: usize },
    #[error("terminal intersection count must be positive, got {0}")]
    BadK(i64),
    #[error("unknown curve name {0}")]
    UnknownCurve(String),
    #[error("exponent magnitude must be positive, got {0}")]
    BadMagnitude(i64),
    #[error("config line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// The (r, g, k) chain configuration with its intersection matrix
/// N[i][j] = i(a_{i+1}, b_{j+1}) (rows = A, columns = B).
#[derive(Clone, Debug)]
pub struct ChainConfig {
    pub r: usize,
    pub g: usize,
    pub k: i64,
    /// all intersection points of each pair share one sign (carried as
    /// configuration metadata; the tool does not re-derive it)
    pub same_sign: bool,
    n: IntMatrix,
}

impl ChainConfig {
    /// Configuration with an explicit intersection matrix (rows = A,
    /// columns = B). Bypasses the chain-shape gates; used for synthetic
    /// configurations such as the one-intersection torus pair.
    pub fn from_matrix(n: IntMatrix, g: usize) -> ChainConfig {
        assert!(n.is_square() && n.rows() >= 1);
        let r = n.rows();
        let k = i64::try_from(u64::try_from(n.get(r - 1, r - 1).magnitude().clone()).unwrap_or(0))
            .unwrap_or(0);
        ChainConfig {
            r,
            g,
            k,
            same_sign: true,
            n,
        }
    }

    pub fn n_matrix(&self) -> &IntMatrix {
        &self.n
    }

    pub fn curve_names(&self) -> Vec<String> {
        let mut v: Vec<String> = (0..self.r).map(|i| CurveRef::a(i).to_string()).collect();
        v.extend((0..self.r).map(|i| CurveRef::b(i).to_string()));
        v
    }

    /// geometric intersection number between a curve of A and one of B
    pub fn intersection(&self, x: CurveRef, y: CurveRef) -> BigInt {
        match (x.class, y.class) {
            (CurveClass::A, CurveClass::B) => self.n.get(x.index, y.index).clone(),
            (CurveClass::B, CurveClass::A) => self.n.get(y.index, x.index).clone(),
            // members of one multicurve are disjoint
            _ => BigInt::from(0),
        }
    }

    pub fn adjacency_graph(&self) -> AdjacencyGraph {
        let mut edges = Vec::new();
        for i in 0..self.r {
            for j in 0..self.r {
                if !num_traits::Zero::is_zero(self.n.get(i, j)) {
                    edges.push((i, j));
                }
            }
        }
        AdjacencyGraph { r: self.r, edges }
    }

    /// Exact rank and determinant of the intersection matrix.
    pub fn rank_and_det(&self) -> (usize, BigInt) {
        (self.n.rank(), self.n.det())
    }
}

/// Builds the chain configuration; errors on parameter-gate violations.
pub fn build_chain(r: usize, g: usize, k: i64) -> Result<ChainConfig, ChainError> {
    if r < 2 {
        return Err(ChainError::RankTooSmall(r));
    }
    if g < r + 2 {
        return Err(ChainError::GenusBound { r, g });
    }
    if k < 1 {
        return Err(ChainError::BadK(k));
    }
    let mut n = IntMatrix::zeros(r, r);
    n.set(0, 0, BigInt::from(5));
    for i in 1..r {
        n.set(i, i - 1, BigInt::from(1));
    }
    for i in 1..r.saturating_sub(1) {
        n.set(i, i, BigInt::from(1));
    }
    n.set(r - 1, r - 1, BigInt::from(k));
    let cfg = ChainConfig {
        r,
        g,
        k,
        same_sign: true,
        n,
    };
    assert!(
        cfg.adjacency_graph().is_connected(),
        "chain adjacency graph must be connected"
    );
    Ok(cfg)
}

/// Bipartite adjacency graph on A ∪ B with an edge wherever the
/// intersection number is nonzero.
#[derive(Clone, Debug)]
pub struct AdjacencyGraph {
    pub r: usize,
    /// (a-index, b-index) pairs
    pub edges: Vec<(usize, usize)>,
}

impl AdjacencyGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn is_connected(&self) -> bool {
        let total = 2 * self.r;
        if total == 0 {
            return true;
        }
        let mut seen = vec![false; total]; // 0..r = A, r..2r = B
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let (x, y) = (a, self.r + b);
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
                if y == v && !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

/// Report of the closed-loop hypotheses behind the degree theorem: the
/// word's vertex loop must alternate between the two multicurves, step only
/// along adjacency edges, visit every vertex, and be contractible
/// (backtracking-reducible) in the adjacency graph.
#[derive(Clone, Debug)]
pub struct LoopReport {
    pub alternates: bool,
    pub missing_edges: Vec<(CurveRef, CurveRef)>,
    pub visits_all: bool,
    pub contractible: bool,
}

impl LoopReport {
    pub fn valid(&self) -> bool {
        self.alternates && self.missing_edges.is_empty() && self.visits_all && self.contractible
    }
}

/// Validates a closed vertex loop (given either with or without the
/// repeated final vertex) against the adjacency graph.
pub fn validate_strenner_loop(
    cfg: &ChainConfig,
    loop_vertices: &[CurveRef],
) -> Result<LoopReport, ChainError> {
    let mut verts: Vec<CurveRef> = loop_vertices.to_vec();
    if verts.len() >= 2 && verts.first() == verts.last() {
        verts.pop();
    }
    for v in &verts {
        if v.index >= cfg.r {
            return Err(ChainError::UnknownCurve(v.to_string()));
        }
    }
    let l = verts.len();
    let alternates =
        l % 2 == 0 && (0..l).all(|i| verts[i].class != verts[(i + 1) % l].class);
    let adj = cfg.adjacency_graph();
    let mut missing_edges = Vec::new();
    for i in 0..l {
        let (u, v) = (verts[i], verts[(i + 1) % l]);
        if u.class == v.class {
            continue; // already reported via `alternates`
        }
        let (ai, bi) = if u.class == CurveClass::A {
            (u.index, v.index)
        } else {
            (v.index, u.index)
        };
        if !adj.has_edge(ai, bi) {
            missing_edges.push((u, v));
        }
    }
    let mut visited = vec![false; 2 * cfg.r];
    for v in &verts {
        let idx = match v.class {
            CurveClass::A => v.index,
            CurveClass::B => cfg.r + v.index,
        };
        visited[idx] = true;
    }
    let visits_all = visited.iter().all(|&x| x);
    let contractible = missing_edges.is_empty() && is_backtrack_reducible(&verts);
    Ok(LoopReport {
        alternates,
        missing_edges,
        visits_all,
        contractible,
    })
}

/// Cyclic backtracking reduction: repeatedly cancels steps that immediately
/// return along the same edge; contractible iff the walk collapses to at
/// most one vertex.
fn is_backtrack_reducible(verts: &[CurveRef]) -> bool {
    let mut w: Vec<CurveRef> = verts.to_vec();
    loop {
        if w.len() <= 1 {
            return true;
        }
        let l = w.len();
        let pos = (0..l).find(|&i| w[(i + l - 1) % l] == w[(i + 1) % l]);
        match pos {
            None => return false,
            Some(i) => {
                // remove w[i] and w[(i+1) % l]
                let j = (i + 1) % l;
                let mut keep = Vec::with_capacity(l - 2);
                for (idx, v) in w.iter().enumerate() {
                    if idx != i && idx != j {
                        keep.push(*v);
                    }
                }
                w = keep;
            }
        }
    }
}

/// A twist word: ordered letters (curve, exponent sign), all sharing one
/// exponent magnitude m, with the periodic extension c_{j+n} = c_j.
/// Positive exponents sit on A-curves, negative on B-curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistWord {
    pub letters: Vec<(CurveRef, i8)>,
    pub m: i64,
}

impl TwistWord {
    pub fn n(&self) -> usize {
        self.letters.len()
    }

    /// Letter at 1-based position j, extended periodically to all of Z.
    pub fn letter(&self, j: i64) -> (CurveRef, i8) {
        let n = self.letters.len() as i64;
        let idx = (j - 1).rem_euclid(n) as usize;
        self.letters[idx]
    }

    /// Signed exponent k_j = sign_j · m of the letter at position j.
    pub fn exponent(&self, j: i64) -> i64 {
        let (_, s) = self.letter(j);
        s as i64 * self.m
    }

    /// The underlying cyclic vertex loop (one vertex per letter).
    pub fn loop_vertices(&self) -> Vec<CurveRef> {
        self.letters.iter().map(|&(c, _)| c).collect()
    }

    /// Canonical text form, e.g. `a1^+5 b1^-5 a2^+5 b2^-5 a2^+5 b1^-5`.
    pub fn canonical_text(&self) -> String {
        self.letters
            .iter()
            .map(|&(c, s)| format!("{}^{}{}", c, if s > 0 { "+" } else { "-" }, self.m))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The family word for the chain configuration: positive twists march up
/// the chain a_1 b_1 … a_r b_r and back down a_r b_{r-1} … a_2 b_1, giving
/// n = 4r − 2 letters.
pub fn family_word(cfg: &ChainConfig, m: i64) -> Result<TwistWord, ChainError> {
    if m < 1 {
        return Err(ChainError::BadMagnitude(m));
    }
    let r = cfg.r;
    let mut letters = Vec::with_capacity(4 * r - 2);
    for i in 0..r {
        letters.push((CurveRef::a(i), 1i8));
        letters.push((CurveRef::b(i), -1i8));
    }
    for i in (1..r).rev() {
        letters.push((CurveRef::a(i), 1i8));
        letters.push((CurveRef::b(i - 1), -1i8));
    }
    Ok(TwistWord { letters, m })
}

/// Parses the structured key/value config text: `r = 2`, `g = 4`, `k = 1`,
/// optional `loop = a1 b1 a2 b2 a2 b1`. Returns the configuration and the
/// optional loop override.
pub fn parse_config(text: &str) -> Result<(ChainConfig, Option<Vec<CurveRef>>), ChainError> {
    let mut r = None;
    let mut g = None;
    let mut k = None;
    let mut loop_override: Option<Vec<CurveRef>> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, val)) = line.split_once('=') else {
            return Err(ChainError::Parse {
                line: lineno,
                msg: "expected `key = value`".into(),
            });
        };
        let key = key.trim();
        let val = val.trim();
        let parse_usize = |v: &str| {
            v.parse::<usize>().map_err(|_| ChainError::Parse {
                line: lineno,
                msg: format!("bad integer {}", v),
            })
        };
        match key {
            "r" => r = Some(parse_usize(val)?),
            "g" => g = Some(parse_usize(val)?),
            "k" => {
                k = Some(val.parse::<i64>().map_err(|_| ChainError::Parse {
                    line: lineno,
                    msg: format!("bad integer {}", val),
                })?)
            }
            "loop" => {
                let mut vs = Vec::new();
                for tok in val.split_whitespace() {
                    vs.push(parse_curve_ref(tok).ok_or_else(|| ChainError::Parse {
                        line: lineno,
                        msg: format!("bad curve name {}", tok),
                    })?);
                }
                loop_override = Some(vs);
            }
            other => {
                return Err(ChainError::Parse {
                    line: lineno,
                    msg: format!("unknown key {}", other),
                })
            }
        }
    }
    let r = r.ok_or(ChainError::Parse {
        line: 0,
        msg: "missing r".into(),
    })?;
    let g = g.ok_or(ChainError::Parse {
        line: 0,
        msg: "missing g".into(),
    })?;
    let cfg = build_chain(r, g, k.unwrap_or(1))?;
    Ok((cfg, loop_override))
}

/// Parses `a3` / `b1` style curve names (1-based).
pub fn parse_curve_ref(tok: &str) -> Option<CurveRef> {
    let (head, idx) = tok.split_at(1);
    let i: usize = idx.parse().ok()?;
    if i == 0 {
        return None;
    }
    match head {
        "a" => Some(CurveRef::a(i - 1)),
        "b" => Some(CurveRef::b(i - 1)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_matrix_small() {
        let cfg = build_chain(2, 4, 1).unwrap();
        let n = cfg.n_matrix();
        assert_eq!(n.get(0, 0), &BigInt::from(5));
        assert_eq!(n.get(0, 1), &BigInt::from(0));
        assert_eq!(n.get(1, 0), &BigInt::from(1));
        assert_eq!(n.get(1, 1), &BigInt::from(1));
        assert_eq!(cfg.rank_and_det(), (2, BigInt::from(5)));
    }

    #[test]
    fn genus_gate() {
        assert!(matches!(
            build_chain(2, 3, 1),
            Err(ChainError::GenusBound { .. })
        ));
    }

    #[test]
    fn chain_det_is_5k() {
        let cfg = build_chain(4, 6, 3).unwrap();
        let (rank, det) = cfg.rank_and_det();
        assert_eq!(rank, 4);
        assert_eq!(det.magnitude().to_string(), "15");
        let cfg = build_chain(3, 5, 2).unwrap();
        assert_eq!(cfg.rank_and_det(), (3, BigInt::from(10)));
    }

    #[test]
    fn family_word_r2() {
        let cfg = build_chain(2, 4, 1).unwrap();
        let w = family_word(&cfg, 5).unwrap();
        assert_eq!(w.n(), 6);
        assert_eq!(w.canonical_text(), "a1^+5 b1^-5 a2^+5 b2^-5 a2^+5 b1^-5");
        let rep = validate_strenner_loop(&cfg, &w.loop_vertices()).unwrap();
        assert!(rep.valid(), "{:?}", rep);
        // periodic extension
        assert_eq!(w.letter(7), w.letter(1));
        assert_eq!(w.letter(0), w.letter(6));
        assert_eq!(w.exponent(2), -5);
    }

    #[test]
    fn family_word_general_r_is_valid() {
        for r in 3..=5 {
            let cfg = build_chain(r, r + 2, 1).unwrap();
            let w = family_word(&cfg, 1).unwrap();
            assert_eq!(w.n(), 4 * r - 2);
            let rep = validate_strenner_loop(&cfg, &w.loop_vertices()).unwrap();
            assert!(rep.valid(), "r = {}: {:?}", r, rep);
        }
    }

    #[test]
    fn invalid_loops_rejected() {
        let cfg = build_chain(2, 4, 1).unwrap();
        // omits a2, b2
        let rep = validate_strenner_loop(
            &cfg,
            &[CurveRef::a(0), CurveRef::b(0)],
        )
        .unwrap();
        assert!(!rep.visits_all);
        // steps along a pair with zero intersection (a1-b2)
        let rep = validate_strenner_loop(
            &cfg,
            &[
                CurveRef::a(0),
                CurveRef::b(1),
                CurveRef::a(1),
                CurveRef::b(0),
            ],
        )
        .unwrap();
        assert!(!rep.missing_edges.is_empty());
        // visits everything, steps along edges, but winds around a cycle:
        // impossible in the r=2 chain (its adjacency graph is a tree), so
        // instead check a non-alternating walk is caught
        let rep = validate_strenner_loop(
            &cfg,
            &[
                CurveRef::a(0),
                CurveRef::a(1),
                CurveRef::b(0),
                CurveRef::b(1),
            ],
        )
        .unwrap();
        assert!(!rep.alternates);
    }

    #[test]
    fn config_parsing() {
        let (cfg, lp) = parse_config("r = 2\ng = 4\nk = 1\nloop = a1 b1 a2 b2 a2 b1\n").unwrap();
        assert_eq!((cfg.r, cfg.g, cfg.k), (2, 4, 1));
        let lp = lp.unwrap();
        assert_eq!(lp.len(), 6);
        assert!(validate_strenner_loop(&cfg, &lp).unwrap().valid());
        assert!(parse_config("r = 2\n").is_err());
    }
}
