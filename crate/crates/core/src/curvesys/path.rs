//! Cyclic reduced germ words and their canonical form.

use serde::{Deserialize, Serialize};

use crate::ribbon::{Germ, RibbonGraph};

/// An oriented closed curve in canonical position: a cyclically reduced
/// cyclic word of departure germs, stored at its lexicographically minimal
/// rotation. Two paths are equal iff the curves are freely homotopic as
/// oriented curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalPath {
    word: Vec<Germ>,
}

impl NormalPath {
    /// Canonicalizes an arbitrary closed walk: cyclic free reduction, then
    /// minimal rotation. Panics if the word is not a closed walk or reduces
    /// to the trivial class.
    pub fn from_word(graph: &RibbonGraph, word: Vec<Germ>) -> NormalPath {
        let reduced = cyclic_reduce(graph, word);
        assert!(!reduced.is_empty(), "trivial class has no normal path");
        debug_assert!(is_closed_walk(graph, &reduced));
        let rot = booth_min_rotation(&reduced);
        let mut w = reduced;
        w.rotate_left(rot);
        NormalPath { word: w }
    }

    pub fn word(&self) -> &[Germ] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Same curve with the opposite orientation.
    pub fn reversed(&self, graph: &RibbonGraph) -> NormalPath {
        NormalPath::from_word(graph, reverse_word(graph, &self.word))
    }

    /// Smallest period of the cyclic word; the curve is primitive iff this
    /// equals its length.
    pub fn primitive_root(&self) -> NormalPath {
        let p = min_cyclic_period(&self.word);
        if p == self.word.len() {
            return self.clone();
        }
        let rooted: Vec<Germ> = self.word[..p].to_vec();
        let rot = booth_min_rotation(&rooted);
        let mut w = rooted;
        w.rotate_left(rot);
        NormalPath { word: w }
    }

    pub fn is_primitive(&self) -> bool {
        min_cyclic_period(&self.word) == self.word.len()
    }

    /// Edge weights: how many times the curve crosses each edge.
    pub fn weights(&self, graph: &RibbonGraph) -> Vec<u64> {
        let mut w = vec![0u64; graph.n_edges()];
        for &g in &self.word {
            w[graph.edge_of_germ(g)] += 1;
        }
        w
    }

    /// Square-by-square dump: `(square_id, entry_side, exit_side)` per
    /// visit, where sides are ccw germ positions 0..4.
    pub fn dump(&self, graph: &RibbonGraph) -> Vec<(usize, usize, usize)> {
        let n = self.word.len();
        (0..n)
            .map(|i| {
                let arrive = graph.pairing(self.word[(i + n - 1) % n]);
                let depart = self.word[i];
                debug_assert_eq!(arrive / 4, depart / 4);
                (depart / 4, arrive % 4, depart % 4)
            })
            .collect()
    }

    /// Human-readable form: `vertex.position` steps.
    pub fn to_text(&self, graph: &RibbonGraph) -> String {
        self.word
            .iter()
            .map(|&g| format!("{}.{}", graph.vertex_name(g / 4), g % 4))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub(crate) fn is_closed_walk(graph: &RibbonGraph, word: &[Germ]) -> bool {
    let n = word.len();
    (0..n).all(|i| graph.vertex_of_germ(graph.pairing(word[i])) == word[(i + 1) % n] / 4)
}

/// Reverse traversal of a walk: arrive where it departed.
pub(crate) fn reverse_word(graph: &RibbonGraph, word: &[Germ]) -> Vec<Germ> {
    word.iter().rev().map(|&g| graph.pairing(g)).collect()
}

/// Free reduction of a linear word (cancels step followed by its reverse).
pub(crate) fn linear_reduce(graph: &RibbonGraph, word: impl IntoIterator<Item = Germ>) -> Vec<Germ> {
    let mut out: Vec<Germ> = Vec::new();
    for g in word {
        if out.last().is_some_and(|&l| graph.pairing(l) == g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// Full cyclic reduction: linear reduction plus cancellation across the
/// wrap-around point.
pub(crate) fn cyclic_reduce(graph: &RibbonGraph, word: Vec<Germ>) -> Vec<Germ> {
    let mut w = linear_reduce(graph, word);
    let mut lo = 0usize;
    while w.len() - lo >= 2 && graph.pairing(w[w.len() - 1]) == w[lo] {
        w.pop();
        lo += 1;
    }
    w.drain(..lo);
    w
}

/// Booth's algorithm: index of the lexicographically least rotation, O(n).
pub(crate) fn booth_min_rotation(word: &[Germ]) -> usize {
    let n = word.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| word[i % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if sj != at(k + (i + 1) as usize) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k
}

pub(crate) fn min_cyclic_period(word: &[Germ]) -> usize {
    let n = word.len();
    'outer: for p in 1..=n {
        if n % p != 0 {
            continue;
        }
        for i in 0..n {
            if word[i] != word[(i + p) % n] {
                continue 'outer;
            }
        }
        return p;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::RibbonGraph;

    fn torus() -> RibbonGraph {
        RibbonGraph::parse("vertex v: a1 b1 a2 b2\nedge al a: a1 a2\nedge be b: b1 b2\n").unwrap()
    }

    #[test]
    fn booth_examples() {
        assert_eq!(booth_min_rotation(&[2, 1, 3]), 1);
        assert_eq!(booth_min_rotation(&[1, 1, 2, 1]), 3);
        assert_eq!(booth_min_rotation(&[0]), 0);
    }

    #[test]
    fn reduction_cancels_backtracks() {
        let g = torus();
        // a a^-1 b  ->  b
        let w = cyclic_reduce(&g, vec![0, 2, 1]);
        assert_eq!(w, vec![1]);
        // wrap-around cancellation: b a a^-1 reduced linearly, then cyclic
        let w = cyclic_reduce(&g, vec![1, 0, 3, 1, 2]);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn canonical_rotation_invariance() {
        let g = torus();
        let p1 = NormalPath::from_word(&g, vec![0, 1, 0, 0, 1]);
        let p2 = NormalPath::from_word(&g, vec![0, 0, 1, 0, 1]);
        assert_eq!(p1, p2);
        let q = NormalPath::from_word(&g, vec![0, 1, 1, 0, 1]);
        assert_ne!(p1, q);
    }

    #[test]
    fn reversal_and_primitivity() {
        let g = torus();
        let ab = NormalPath::from_word(&g, vec![0, 1]);
        let rev = ab.reversed(&g);
        assert_eq!(rev.word(), &[2, 3]); // b^-1 a^-1 rotated to min
        assert!(ab.is_primitive());
        let sq = NormalPath::from_word(&g, vec![0, 1, 0, 1]);
        assert!(!sq.is_primitive());
        assert_eq!(sq.primitive_root(), ab);
    }

    #[test]
    fn dump_and_weights() {
        let g = torus();
        let ab = NormalPath::from_word(&g, vec![0, 1]);
        assert_eq!(ab.weights(&g), vec![1, 1]);
        let d = ab.dump(&g);
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|&(sq, _, _)| sq == 0));
    }
}
