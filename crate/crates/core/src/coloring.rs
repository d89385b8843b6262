//! Vertex colorings, the c-strong verifier, and run reports.

use crate::hypergraph::Hypergraph;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A total assignment of positive colors to vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(BTreeMap<u32, u32>);

impl Coloring {
    pub fn new() -> Self {
        Coloring(BTreeMap::new())
    }

    pub fn set(&mut self, vertex: u32, color: u32) {
        debug_assert!(color >= 1, "colors are 1-based");
        self.0.insert(vertex, color);
    }

    pub fn color(&self, vertex: u32) -> Option<u32> {
        self.0.get(&vertex).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertex/color pairs in ascending vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&v, &c)| (v, c))
    }

    /// Number of distinct colors over all assigned vertices.
    pub fn distinct_colors(&self) -> usize {
        self.0.values().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> Option<u32> {
        self.0.values().max().copied()
    }
}

impl FromIterator<(u32, u32)> for Coloring {
    fn from_iter<T: IntoIterator<Item = (u32, u32)>>(iter: T) -> Self {
        Coloring(iter.into_iter().collect())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("coloring is missing vertex {vertex}")]
    MissingVertex { vertex: u32 },
}

/// An edge that carries too few distinct colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailingEdge {
    pub edge: Vec<u32>,
    pub distinct_colors: usize,
}

/// Which branch of the coloring pipeline produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TracePath {
    Trivial,
    Lemma,
    Triple,
}

/// Sub-branch for trivially colored inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrivialKind {
    EmptyFamily,
    SingleEdge,
    TwoVertexMinimal,
}

/// Record of the path a coloring run took.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunTrace {
    pub path: TracePath,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trivial_kind: Option<TrivialKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case_id: Option<u8>,
    pub swapped: bool,
    /// The selected triple's edges in role order (e1, e2, e3), as vertex ids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chosen_triple: Option<[Vec<u32>; 3]>,
}

impl RunTrace {
    pub fn trivial(kind: TrivialKind) -> Self {
        RunTrace {
            path: TracePath::Trivial,
            trivial_kind: Some(kind),
            case_id: None,
            swapped: false,
            chosen_triple: None,
        }
    }

    pub fn lemma() -> Self {
        RunTrace {
            path: TracePath::Lemma,
            trivial_kind: None,
            case_id: None,
            swapped: false,
            chosen_triple: None,
        }
    }
}

/// Verdict of the c-strong check, plus the run trace when produced by an
/// algorithm run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub valid: bool,
    pub strength: u32,
    pub colors_used: usize,
    pub failing_edges: Vec<FailingEdge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<RunTrace>,
}

/// Checks that every edge `e` carries at least `min(|e|, c)` distinct colors.
///
/// The coloring must be total on the ground set; vertices outside the ground
/// set are ignored. `colors_used` counts distinct colors over the ground set.
pub fn verify_strong(
    h: &Hypergraph,
    coloring: &Coloring,
    strength: u32,
) -> Result<ColoringReport, VerifyError> {
    for &v in h.vertices() {
        if coloring.color(v).is_none() {
            return Err(VerifyError::MissingVertex { vertex: v });
        }
    }
    let mut failing = Vec::new();
    for edge in h.edge_list() {
        let distinct: BTreeSet<u32> = edge.iter().map(|v| coloring.color(*v).unwrap()).collect();
        let required = edge.len().min(strength as usize);
        if distinct.len() < required {
            failing.push(FailingEdge {
                edge,
                distinct_colors: distinct.len(),
            });
        }
    }
    let colors_used = h
        .vertices()
        .iter()
        .map(|&v| coloring.color(v).unwrap())
        .collect::<BTreeSet<_>>()
        .len();
    Ok(ColoringReport {
        valid: failing.is_empty(),
        strength,
        colors_used,
        failing_edges: failing,
        trace: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn coloring(pairs: &[(u32, u32)]) -> Coloring {
        pairs.iter().copied().collect()
    }

    #[test]
    fn rainbow_edge_is_valid() {
        let h = Hypergraph::from_edges(vec![vec![1, 2, 3]]).unwrap();
        let report = verify_strong(&h, &coloring(&[(1, 1), (2, 2), (3, 3)]), 3).unwrap();
        assert!(report.valid);
        assert_eq!(report.colors_used, 3);
        assert!(report.failing_edges.is_empty());
    }

    #[test]
    fn monochromatic_edge_fails() {
        let h = Hypergraph::from_edges(vec![vec![1, 2, 3]]).unwrap();
        let report = verify_strong(&h, &coloring(&[(1, 1), (2, 1), (3, 1)]), 3).unwrap();
        assert!(!report.valid);
        assert_eq!(report.failing_edges.len(), 1);
        assert_eq!(report.failing_edges[0].edge, vec![1, 2, 3]);
        assert_eq!(report.failing_edges[0].distinct_colors, 1);
    }

    #[test]
    fn four_subsets_of_six_with_five_colors() {
        let h = Hypergraph::from_edges((1u32..=6).combinations(4)).unwrap();
        let c = coloring(&[(1, 2), (2, 4), (3, 1), (4, 3), (5, 5), (6, 5)]);
        // Independent recount over all fifteen edges.
        for edge in h.edge_list() {
            let mut colors: Vec<u32> = edge.iter().map(|v| c.color(*v).unwrap()).collect();
            colors.sort_unstable();
            colors.dedup();
            assert!(colors.len() >= 3, "edge {edge:?} has colors {colors:?}");
        }
        let report = verify_strong(&h, &c, 3).unwrap();
        assert!(report.valid);
        assert_eq!(report.colors_used, 5);
    }

    #[test]
    fn missing_vertex_is_named() {
        let h = Hypergraph::from_edges(vec![vec![1, 2, 3]]).unwrap();
        let err = verify_strong(&h, &coloring(&[(1, 1), (3, 2)]), 3).unwrap_err();
        assert_eq!(err, VerifyError::MissingVertex { vertex: 2 });
    }

    #[test]
    fn small_edges_need_only_their_size() {
        let h = Hypergraph::from_edges(vec![vec![1, 2]]).unwrap();
        let report = verify_strong(&h, &coloring(&[(1, 1), (2, 2)]), 3).unwrap();
        assert!(report.valid);
        let report = verify_strong(&h, &coloring(&[(1, 1), (2, 1)]), 3).unwrap();
        assert!(!report.valid);
    }

    #[test]
    fn isolated_vertices_count_toward_colors_used() {
        let h = Hypergraph::from_parts(vec![7], vec![vec![1, 2]]).unwrap();
        let report = verify_strong(&h, &coloring(&[(1, 1), (2, 2), (7, 9)]), 2).unwrap();
        assert!(report.valid);
        assert_eq!(report.colors_used, 3);
    }
}
