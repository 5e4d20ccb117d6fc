//! Explicit closed curves on the square complex of a filling pair.
//!
//! A closed curve is a cyclically reduced closed walk on the underlying fat
//! graph (the spine of the bounded surface), stored as a cyclic word of
//! departure germs. Since the surface has boundary, free homotopy classes of
//! oriented curves correspond exactly to cyclic reduced words up to
//! rotation, so the canonical form (reduced + minimal rotation) is a
//! complete class invariant.

mod annular;
mod fill;
mod gamma;
mod intersect;
mod path;
mod twist;

pub use annular::{twisting_estimate, TwistingEstimate};
pub use fill::{fills, FillReport};
pub use gamma::{
    behrstock_probe, compute_r0, gamma_sequence, translated_pair, translated_triple,
    BehrstockOutcome, BehrstockReport, GammaSequence, LemmaProbe,
};
pub use intersect::intersection_number;
pub use path::NormalPath;
pub use twist::twist;

use std::collections::BTreeMap;
use thiserror::Error;

use crate::chains::CurveRef;
use crate::ribbon::{CurveClass, RibbonGraph};

#[derive(Debug, Error)]
pub enum CurveSysError {
    #[error("vertex {0} does not alternate curve classes: not a transverse filling pair")]
    NotTransverse(String),
    #[error("path is not a closed walk at step {0}")]
    NotClosed(usize),
    #[error("no curve registered for {0}")]
    UnknownCurve(String),
    #[error("annular projection undefined: the curves are disjoint")]
    ProjectionUndefined,
    #[error("weight budget exceeded: path would reach {attempted} edge crossings (budget {budget})")]
    Budget { attempted: u64, budget: u64 },
    #[error("twisting curve visits a vertex more than once; insertion order would be ambiguous")]
    TwistCurveNotSimple,
}

/// The square complex induced by a filling pair: one square per
/// intersection point, with the two transverse families of edge classes.
/// Operationally a thin wrapper around the fat graph plus the extracted
/// curve cycles.
#[derive(Clone, Debug)]
pub struct SquareComplex {
    graph: RibbonGraph,
    a_cycles: Vec<NormalPath>,
    b_cycles: Vec<NormalPath>,
    genus: usize,
    boundary_components: usize,
}

impl SquareComplex {
    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    /// number of squares = number of intersection points = vertices
    pub fn squares(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_components(&self) -> usize {
        self.boundary_components
    }

    pub fn a_cycles(&self) -> &[NormalPath] {
        &self.a_cycles
    }

    pub fn b_cycles(&self) -> &[NormalPath] {
        &self.b_cycles
    }

    /// Path registered for a configuration curve (a_i / b_i, in cycle
    /// extraction order).
    pub fn curve(&self, c: CurveRef) -> Result<&NormalPath, CurveSysError> {
        let list = match c.class {
            CurveClass::A => &self.a_cycles,
            CurveClass::B => &self.b_cycles,
        };
        list.get(c.index)
            .ok_or_else(|| CurveSysError::UnknownCurve(c.to_string()))
    }

}

/// Builds the square complex: validates transversality and extracts the
/// curve cycles of each family (ordered by their smallest germ).
pub fn build_complex(graph: &RibbonGraph) -> Result<SquareComplex, CurveSysError> {
    // alternation is enforced by RibbonGraph::parse, but a graph could be
    // constructed by other means in the future; re-check cheaply
    for v in 0..graph.n_vertices() {
        let cls: Vec<CurveClass> = (0..4)
            .map(|p| graph.edges()[graph.edge_of_germ(4 * v + p)].curve)
            .collect();
        if cls[0] == cls[1] || cls[1] == cls[2] || cls[2] == cls[3] || cls[3] == cls[0] {
            return Err(CurveSysError::NotTransverse(
                graph.vertex_name(v).to_string(),
            ));
        }
    }
    let ft = graph.trace_faces();
    Ok(SquareComplex {
        graph: graph.clone(),
        a_cycles: extract_cycles(graph, CurveClass::A),
        b_cycles: extract_cycles(graph, CurveClass::B),
        genus: ft.genus,
        boundary_components: ft.boundary_components,
    })
}

/// Follows the "go straight" rule (depart via the opposite germ of the same
/// class) to split one curve family into its cycles.
fn extract_cycles(graph: &RibbonGraph, class: CurveClass) -> Vec<NormalPath> {
    let n = 4 * graph.n_vertices();
    let mut used = vec![false; n];
    let mut cycles: Vec<NormalPath> = Vec::new();
    for start in 0..n {
        if used[start] || graph.edges()[graph.edge_of_germ(start)].curve != class {
            continue;
        }
        let mut word = Vec::new();
        let mut g = start;
        loop {
            used[g] = true;
            word.push(g);
            let arrive = graph.pairing(g);
            used[arrive] = true;
            g = 4 * (arrive / 4) + (arrive % 4 + 2) % 4;
            if g == start {
                break;
            }
        }
        cycles.push(NormalPath::from_word(graph, word));
    }
    cycles
}

/// Registry mapping the chain configuration's curves to explicit paths,
/// with convenience lookups used by the probe drivers.
pub type PathMap = BTreeMap<String, NormalPath>;
