//! The 3-strong, five-color construction for 2-intersecting hypergraphs.
//!
//! Pipeline: reduce to the containment-minimal antichain, look for three
//! edges with empty intersection and smallest union, and either fall back to
//! the recursive strength-3 coloring (no such triple) or color the triple's
//! union X by fixed rules and the rest according to how many of the three
//! edges own private vertices. A run that lands in the one-private case may
//! swap the triple once and recolor from scratch.

use crate::bitset::BitSet;
use crate::coloring::{verify_strong, Coloring, ColoringReport, RunTrace, TracePath, TrivialKind};
use crate::hypergraph::{Hypergraph, Triple};
use crate::lemma::lemma_coloring;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoremError {
    #[error(
        "input is not 2-intersecting: edges {first:?} and {second:?} share fewer than two vertices"
    )]
    NotTwoIntersecting { first: Vec<u32>, second: Vec<u32> },
    #[error("internal verification failed: edge {edge:?} carries only {distinct_colors} distinct colors")]
    VerificationFailed {
        edge: Vec<u32>,
        distinct_colors: usize,
    },
    #[error("internal defect: {0}")]
    Internal(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("pairwise intersection of role edges e{role_a} and e{role_b} has {size} vertices, need at least 2; input cannot be 2-intersecting")]
pub struct ColorXError {
    pub role_a: u8,
    pub role_b: u8,
    pub size: usize,
}

/// The four branches of the case analysis, by number of non-empty private
/// parts (3, 2, 1, 0 respectively).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleCase {
    AllPrivate,
    TwoPrivate,
    OnePrivate,
    NoPrivate,
}

impl TripleCase {
    pub fn id(self) -> u8 {
        match self {
            TripleCase::AllPrivate => 1,
            TripleCase::TwoPrivate => 2,
            TripleCase::OnePrivate => 3,
            TripleCase::NoPrivate => 4,
        }
    }
}

/// A triple with its case decided and its edges assigned to roles e1, e2, e3.
#[derive(Clone, Debug)]
pub struct LabeledTriple {
    pub triple: Triple,
    pub case: TripleCase,
    /// Edge indices in role order (e1, e2, e3).
    pub roles: [usize; 3],
}

impl LabeledTriple {
    /// The role edges as vertex-id lists, in role order.
    pub fn role_edges(&self, h: &Hypergraph) -> [Vec<u32>; 3] {
        [
            h.edge(self.roles[0]),
            h.edge(self.roles[1]),
            h.edge(self.roles[2]),
        ]
    }
}

/// Decides the case of a triple and fixes the role assignment: the two-private
/// case puts the edge without a private part at role e2, the one-private case
/// puts the unique edge with one there; remaining roles follow canonical edge
/// order.
pub fn relabel_triple(triple: &Triple) -> LabeledTriple {
    let nonempty: Vec<bool> = triple
        .private_bits()
        .iter()
        .map(|p| !p.is_empty())
        .collect();
    let (case, middle) = match nonempty.iter().filter(|&&b| b).count() {
        3 => (TripleCase::AllPrivate, None),
        2 => (
            TripleCase::TwoPrivate,
            Some(nonempty.iter().position(|&b| !b).unwrap()),
        ),
        1 => (
            TripleCase::OnePrivate,
            Some(nonempty.iter().position(|&b| b).unwrap()),
        ),
        _ => (TripleCase::NoPrivate, None),
    };
    let roles = match middle {
        None => triple.edges,
        Some(mid) => {
            let rest: Vec<usize> = (0..3).filter(|&i| i != mid).collect();
            [
                triple.edges[rest[0]],
                triple.edges[mid],
                triple.edges[rest[1]],
            ]
        }
    };
    LabeledTriple {
        triple: triple.clone(),
        case,
        roles,
    }
}

/// Colors exactly the union X of a labeled triple.
///
/// Private parts of e1, e2, e3 take colors 1, 2, 3. In e1∩e3 the smallest
/// vertex takes 1 and the rest 3; in e1∩e2 the smallest takes 2 and the rest
/// 4; e2∩e3 is all 5. Errors when either special intersection has fewer than
/// two vertices, which cannot happen on 2-intersecting input.
pub fn color_x(h: &Hypergraph, labeled: &LabeledTriple) -> Result<Coloring, ColorXError> {
    let e1 = h.edge_bits(labeled.roles[0]);
    let e2 = h.edge_bits(labeled.roles[1]);
    let e3 = h.edge_bits(labeled.roles[2]);

    let i13 = e1.intersection(e3);
    if i13.count() < 2 {
        return Err(ColorXError {
            role_a: 1,
            role_b: 3,
            size: i13.count(),
        });
    }
    let i12 = e1.intersection(e2);
    if i12.count() < 2 {
        return Err(ColorXError {
            role_a: 1,
            role_b: 2,
            size: i12.count(),
        });
    }

    let mut out = Coloring::new();
    fn paint(out: &mut Coloring, h: &Hypergraph, set: &BitSet, color: u32) {
        for p in set.iter() {
            out.set(h.vertices()[p], color);
        }
    }

    paint(&mut out, h, &e1.difference(&e2.union(e3)), 1);
    paint(&mut out, h, &e2.difference(&e1.union(e3)), 2);
    paint(&mut out, h, &e3.difference(&e1.union(e2)), 3);

    paint(&mut out, h, &i13, 3);
    out.set(h.vertices()[i13.first().unwrap()], 1);
    paint(&mut out, h, &i12, 4);
    out.set(h.vertices()[i12.first().unwrap()], 2);
    paint(&mut out, h, &e2.intersection(e3), 5);

    debug_assert_eq!(out.len(), labeled.triple.union_size());
    Ok(out)
}

/// The all-private case's rule for vertices outside X: processed in ascending
/// vertex-id order, a vertex takes color 1 when it completes some edge whose
/// other vertices are already colored using only colors 2 and 3, and color 2
/// otherwise.
pub fn greedy_outside_case1(h: &Hypergraph, partial: &Coloring, x: &[u32]) -> Coloring {
    let n = h.vertex_count();
    let position = |id: u32| {
        h.vertices()
            .binary_search(&id)
            .expect("vertex in ground set")
    };
    let mut colored = BitSet::from_positions(n, x.iter().map(|&v| position(v)));
    let mut out = partial.clone();

    for pos in 0..n {
        if colored.contains(pos) {
            continue;
        }
        let completes_23_edge = h.edges_bits().iter().any(|f| {
            if !f.contains(pos) {
                return false;
            }
            let mut others = f.clone();
            let mut without = BitSet::new(n);
            without.insert(pos);
            others = others.difference(&without);
            others.is_subset(&colored)
                && others
                    .iter()
                    .all(|p| matches!(out.color(h.vertices()[p]), Some(2) | Some(3)))
        });
        out.set(h.vertices()[pos], if completes_23_edge { 1 } else { 2 });
        colored.insert(pos);
    }
    out
}

/// In a one-private run (all vertices outside X colored 1), looks for an edge
/// colored entirely within {2,3}. If one exists, returns the replacement
/// triple (f, e2, e3) built from the canonical-first such edge; the result is
/// checked to have empty intersection, union X, and at least two private
/// parts, which sends the rerun into the all- or two-private case.
pub fn case3_detect_swap(
    h: &Hypergraph,
    labeled: &LabeledTriple,
    coloring: &Coloring,
) -> Option<Triple> {
    debug_assert_eq!(labeled.case, TripleCase::OnePrivate);
    let f = (0..h.edge_count()).find(|&i| {
        h.edge(i)
            .iter()
            .all(|&v| matches!(coloring.color(v), Some(2) | Some(3)))
    })?;

    let replacement = h
        .triple(f, labeled.roles[1], labeled.roles[2])
        .expect("swap triple has empty intersection");
    assert_eq!(
        replacement.union_bits(),
        labeled.triple.union_bits(),
        "swap triple must keep the union X"
    );
    assert!(
        replacement.nonempty_private_count() >= 2,
        "swap triple must have at least two private parts"
    );
    Some(replacement)
}

/// Produces a 3-strong coloring with at most five colors for a 2-intersecting
/// hypergraph, together with the verification report and run trace.
pub fn theorem_coloring(h: &Hypergraph) -> Result<(Coloring, ColoringReport), TheoremError> {
    if let Some((i, j)) = h.violating_pair(2) {
        return Err(TheoremError::NotTwoIntersecting {
            first: h.edge(i),
            second: h.edge(j),
        });
    }

    let (coloring, trace) = build_coloring(h)?;

    let mut report = verify_strong(h, &coloring, 3).expect("pipeline colorings are total");
    if let Some(fail) = report.failing_edges.first() {
        return Err(TheoremError::VerificationFailed {
            edge: fail.edge.clone(),
            distinct_colors: fail.distinct_colors,
        });
    }
    report.trace = Some(trace);
    Ok((coloring, report))
}

fn build_coloring(h: &Hypergraph) -> Result<(Coloring, RunTrace), TheoremError> {
    if h.edge_count() == 0 {
        let coloring = h.vertices().iter().map(|&v| (v, 1)).collect();
        return Ok((coloring, RunTrace::trivial(TrivialKind::EmptyFamily)));
    }

    if h.edge_count() == 1 {
        let edge = h.edge(0);
        let palette = (edge.len() as u32).min(3);
        let mut coloring: Coloring = h.vertices().iter().map(|&v| (v, 1)).collect();
        for (i, &v) in edge.iter().enumerate() {
            coloring.set(v, 1 + (i as u32) % palette);
        }
        return Ok((coloring, RunTrace::trivial(TrivialKind::SingleEdge)));
    }

    let g = h.minimal_edges();

    // A minimal edge of two vertices is contained in every other edge, so it
    // is the whole antichain; two colors inside it and a third everywhere
    // else suffice.
    if g.edge_bits(0).count() == 2 {
        let pair = g.edge(0);
        let mut coloring: Coloring = h.vertices().iter().map(|&v| (v, 3)).collect();
        coloring.set(pair[0], 1);
        coloring.set(pair[1], 2);
        return Ok((coloring, RunTrace::trivial(TrivialKind::TwoVertexMinimal)));
    }

    let Some(triple) = g.min_union_empty_triple() else {
        // Every three edges meet, so the antichain has property P_3 and the
        // recursive construction yields a 3-strong coloring with 4 colors.
        let coloring = lemma_coloring(&g, 3)
            .map_err(|e| TheoremError::Internal(format!("strength-3 recursion failed: {e}")))?;
        return Ok((coloring, RunTrace::lemma()));
    };

    let labeled = relabel_triple(&triple);
    let (coloring, final_labeled, swapped) = color_by_case(&g, labeled)?;
    let trace = RunTrace {
        path: TracePath::Triple,
        trivial_kind: None,
        case_id: Some(final_labeled.case.id()),
        swapped,
        chosen_triple: Some(final_labeled.role_edges(&g)),
    };
    Ok((coloring, trace))
}

fn color_by_case(
    g: &Hypergraph,
    labeled: LabeledTriple,
) -> Result<(Coloring, LabeledTriple, bool), TheoremError> {
    let partial = color_x(g, &labeled)
        .map_err(|e| TheoremError::Internal(format!("triple coloring failed: {e}")))?;
    let x = g.ids(labeled.triple.union_bits());

    let coloring = match labeled.case {
        TripleCase::AllPrivate => greedy_outside_case1(g, &partial, &x),
        TripleCase::TwoPrivate => fill_outside(g, partial, labeled.triple.union_bits(), 2),
        TripleCase::NoPrivate => fill_outside(g, partial, labeled.triple.union_bits(), 1),
        TripleCase::OnePrivate => {
            let tentative = fill_outside(g, partial, labeled.triple.union_bits(), 1);
            match case3_detect_swap(g, &labeled, &tentative) {
                None => tentative,
                Some(replacement) => {
                    let relabeled = relabel_triple(&replacement);
                    let (coloring, final_labeled, _) = color_by_case(g, relabeled)?;
                    return Ok((coloring, final_labeled, true));
                }
            }
        }
    };
    Ok((coloring, labeled, false))
}

fn fill_outside(g: &Hypergraph, partial: Coloring, x: &BitSet, color: u32) -> Coloring {
    let mut out = partial;
    for pos in 0..g.vertex_count() {
        if !x.contains(pos) {
            out.set(g.vertices()[pos], color);
        }
    }
    out
}
