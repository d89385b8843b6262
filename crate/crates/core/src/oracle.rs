//! Exact minimum-color search for c-strong colorings on small ground sets.
//!
//! Backtracking over vertices in descending edge-membership order with two
//! sound reductions: a new vertex may only use a color at most one past the
//! largest color seen so far on the search path, and a branch is cut when
//! some edge's colored part plus its uncolored slots can no longer reach the
//! required number of distinct colors. A node budget turns long searches into
//! an explicit "budget exhausted" outcome, never an unproven negative.

use crate::coloring::Coloring;
use crate::hypergraph::Hypergraph;
use serde::Serialize;
use thiserror::Error;

/// Default cap on ground-set size; exhaustive search beyond this is a bug,
/// not a request.
pub const DEFAULT_MAX_VERTICES: usize = 16;
/// Default search-node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    pub max_vertices: usize,
    pub node_budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: DEFAULT_MAX_VERTICES,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("ground set has {vertices} vertices, above the configured bound of {bound}")]
    GroundSetTooLarge { vertices: usize, bound: usize },
    #[error("color count {k} outside the supported range 1..=64")]
    ColorCountOutOfRange { k: u32 },
    #[error("node budget exhausted after {explored} nodes; result unknown")]
    BudgetExhausted { explored: u64 },
}

/// Outcome of an exact minimum search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub strength: u32,
    /// Smallest color count admitting a valid coloring, absent when none
    /// exists within the probed range.
    pub min_colors: Option<u32>,
    pub witness: Option<Coloring>,
    /// Search nodes visited across all probed color counts.
    pub explored: u64,
}

/// Finds some coloring with at most `k` colors in which every edge `e` has at
/// least `min(|e|, strength)` distinct colors, or proves none exists.
pub fn oracle_exists_coloring(
    h: &Hypergraph,
    strength: u32,
    k: u32,
    config: &OracleConfig,
) -> Result<Option<Coloring>, OracleError> {
    Ok(search(h, strength, k, config)?.0)
}

/// Exact minimum number of colors for a `strength`-strong coloring, probing
/// k = 1, 2, ... up to `max_colors`. Each probe reuses the same search core,
/// so the first hit is the minimum.
pub fn oracle_min_colors(
    h: &Hypergraph,
    strength: u32,
    max_colors: u32,
    config: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    let mut explored_total = 0;
    for k in 1..=max_colors {
        let (found, explored) = match search(h, strength, k, config) {
            Ok(r) => r,
            Err(OracleError::BudgetExhausted { explored }) => {
                return Err(OracleError::BudgetExhausted {
                    explored: explored_total + explored,
                })
            }
            Err(e) => return Err(e),
        };
        explored_total += explored;
        if let Some(witness) = found {
            return Ok(OracleResult {
                strength,
                min_colors: Some(k),
                witness: Some(witness),
                explored: explored_total,
            });
        }
    }
    Ok(OracleResult {
        strength,
        min_colors: None,
        witness: None,
        explored: explored_total,
    })
}

fn search(
    h: &Hypergraph,
    strength: u32,
    k: u32,
    config: &OracleConfig,
) -> Result<(Option<Coloring>, u64), OracleError> {
    if h.vertex_count() > config.max_vertices {
        return Err(OracleError::GroundSetTooLarge {
            vertices: h.vertex_count(),
            bound: config.max_vertices,
        });
    }
    if k == 0 || k > 64 {
        return Err(OracleError::ColorCountOutOfRange { k });
    }

    let n = h.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(h.degree_of_position(p)));

    let mut state = Search {
        h,
        strength: strength as usize,
        k,
        order,
        colors: vec![0; n],
        explored: 0,
        budget: config.node_budget,
    };
    let found = state.assign(0, 0)?;
    let coloring = found.then(|| {
        state
            .colors
            .iter()
            .enumerate()
            .map(|(pos, &c)| (h.vertices()[pos], c))
            .collect()
    });
    Ok((coloring, state.explored))
}

struct Search<'a> {
    h: &'a Hypergraph,
    strength: usize,
    k: u32,
    order: Vec<usize>,
    colors: Vec<u32>,
    explored: u64,
    budget: u64,
}

impl Search<'_> {
    fn assign(&mut self, depth: usize, max_used: u32) -> Result<bool, OracleError> {
        self.explored += 1;
        if self.explored > self.budget {
            return Err(OracleError::BudgetExhausted {
                explored: self.explored,
            });
        }
        if depth == self.order.len() {
            return Ok(true);
        }
        let vertex = self.order[depth];
        for color in 1..=self.k.min(max_used + 1) {
            self.colors[vertex] = color;
            if self.feasible(vertex) && self.assign(depth + 1, max_used.max(color))? {
                return Ok(true);
            }
        }
        self.colors[vertex] = 0;
        Ok(false)
    }

    /// Every edge through `vertex` must still be able to reach its required
    /// number of distinct colors: distinct colors seen plus uncolored slots.
    fn feasible(&self, vertex: usize) -> bool {
        for edge in self.h.edges_bits() {
            if !edge.contains(vertex) {
                continue;
            }
            let mut seen: u64 = 0;
            let mut uncolored = 0usize;
            let mut size = 0usize;
            for p in edge.iter() {
                size += 1;
                match self.colors[p] {
                    0 => uncolored += 1,
                    c => seen |= 1 << (c - 1),
                }
            }
            let required = size.min(self.strength);
            if (seen.count_ones() as usize) + uncolored < required {
                return false;
            }
        }
        true
    }
}
