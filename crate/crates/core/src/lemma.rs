//! The recursive t-strong coloring for hypergraphs with property P_t.
//!
//! At each level the canonical containment-minimal edge `e0` anchors the
//! construction: everything outside `e0` takes the top color, and the family
//! traced onto `e0` is colored one strength lower. The recursion bottoms out
//! at strength 2 or when the deduplicated family collapses to a single edge,
//! which is colored round-robin so that the ground-set edge of each level
//! picks up one extra color.

use crate::bitset::BitSet;
use crate::coloring::{verify_strong, Coloring};
use crate::hypergraph::{canonicalize_edges, Hypergraph, StrengthError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LemmaError {
    #[error(transparent)]
    Strength(#[from] StrengthError),
    #[error("input lacks property P_{t}: edges {witness:?} have a common intersection smaller than {required}")]
    PropertyViolated {
        t: u32,
        witness: Vec<Vec<u32>>,
        required: usize,
    },
    #[error("internal verification failed: edge {edge:?} carries only {distinct_colors} distinct colors")]
    VerificationFailed {
        edge: Vec<u32>,
        distinct_colors: usize,
    },
}

/// Produces a t-strong coloring with colors drawn from `1..=t+1` for a
/// hypergraph with property P_t.
///
/// Fails with a witness tuple when the property does not hold, and runs the
/// verifier on its own output before returning.
pub fn lemma_coloring(h: &Hypergraph, t: u32) -> Result<Coloring, LemmaError> {
    if let Some(witness) = h.property_pt_witness(t)? {
        let required = t as usize + 1 - witness.len();
        return Err(LemmaError::PropertyViolated {
            t,
            witness: witness.iter().map(|&i| h.edge(i)).collect(),
            required,
        });
    }

    let ground = BitSet::from_positions(h.vertex_count(), 0..h.vertex_count());
    let mut assignment: BTreeMap<usize, u32> = BTreeMap::new();
    color_level(&ground, h.edges_bits().to_vec(), t, &mut assignment);

    let coloring: Coloring = assignment
        .into_iter()
        .map(|(pos, c)| (h.vertices()[pos], c))
        .collect();

    let report = verify_strong(h, &coloring, t).expect("lemma coloring is total");
    if let Some(fail) = report.failing_edges.first() {
        return Err(LemmaError::VerificationFailed {
            edge: fail.edge.clone(),
            distinct_colors: fail.distinct_colors,
        });
    }
    Ok(coloring)
}

/// Colors one recursion level. `edges` are subsets of `ground`, already in
/// canonical order and deduplicated; `out` receives a color for every member
/// of `ground`.
fn color_level(ground: &BitSet, edges: Vec<BitSet>, t: u32, out: &mut BTreeMap<usize, u32>) {
    if edges.is_empty() {
        for v in ground.iter() {
            out.insert(v, 1);
        }
        return;
    }

    if edges.len() == 1 {
        let e = &edges[0];
        for v in ground.difference(e).iter() {
            out.insert(v, t + 1);
        }
        let palette = (e.count() as u32).min(t + 1);
        for (i, v) in e.iter().enumerate() {
            out.insert(v, 1 + (i as u32) % palette);
        }
        return;
    }

    // The canonical-first edge has minimum size, hence is containment-minimal.
    let e0 = edges[0].clone();
    for v in ground.difference(&e0).iter() {
        out.insert(v, t + 1);
    }

    if t == 2 {
        let mut members = e0.iter();
        out.insert(members.next().expect("edges are non-empty"), 1);
        for v in members {
            out.insert(v, 2);
        }
        if e0.count() == 1 {
            // A singleton minimal edge leaves the rest of the ground set all
            // on color 3; promote the first outside vertex to color 2 so that
            // a ground-set edge still meets three colors.
            if let Some(first_outside) = ground.difference(&e0).first() {
                out.insert(first_outside, 2);
            }
        }
        return;
    }

    let mut traces: Vec<BitSet> = edges.iter().map(|h| h.intersection(&e0)).collect();
    canonicalize_edges(&mut traces);
    color_level(&e0, traces, t - 1, out);
}
