//! Hypergraph representation and the set-family predicates and searches the
//! coloring algorithms are built on.
//!
//! Edges are deduplicated and kept in a canonical order (by size, then
//! lexicographically by sorted vertex list), so every "pick an edge" step in
//! the algorithms is deterministic.

use crate::bitset::BitSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("edge {index} is empty; edges must contain at least one vertex")]
    EmptyEdge { index: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("edge indices {0:?} are not three distinct edges")]
    NotDistinct([usize; 3]),
    #[error("edge index {0} is out of range")]
    OutOfRange(usize),
    #[error("the three edges have common vertices {common:?}; an empty intersection is required")]
    NonEmptyIntersection { common: Vec<u32> },
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("property P_t is only defined for t >= 2, got t = {t}")]
pub struct StrengthError {
    pub t: u32,
}

/// A finite ground set of vertex ids together with a family of edges.
///
/// Construction canonicalizes: the ground set is sorted, edges are
/// deduplicated (set semantics) and ordered by size then lexicographically.
/// The ground set may contain vertices covered by no edge; they take part in
/// every coloring.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<u32>,
    edges: Vec<BitSet>,
}

impl Hypergraph {
    /// Builds a hypergraph whose ground set is the union of the given edges.
    pub fn from_edges<I, E>(edges: I) -> Result<Self, HypergraphError>
    where
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = u32>,
    {
        Self::from_parts(std::iter::empty(), edges)
    }

    /// Builds a hypergraph from explicit extra vertices (isolated ones, or a
    /// full ground-set declaration) plus the edge family.
    pub fn from_parts<V, I, E>(vertices: V, edges: I) -> Result<Self, HypergraphError>
    where
        V: IntoIterator<Item = u32>,
        I: IntoIterator<Item = E>,
        E: IntoIterator<Item = u32>,
    {
        let raw_edges: Vec<Vec<u32>> = edges
            .into_iter()
            .map(|e| {
                let mut v: Vec<u32> = e.into_iter().collect();
                v.sort_unstable();
                v.dedup();
                v
            })
            .collect();
        if let Some(index) = raw_edges.iter().position(|e| e.is_empty()) {
            return Err(HypergraphError::EmptyEdge { index });
        }

        let mut ground: Vec<u32> = vertices.into_iter().collect();
        ground.extend(raw_edges.iter().flatten().copied());
        ground.sort_unstable();
        ground.dedup();

        let position = |id: u32| ground.binary_search(&id).expect("id in ground set");
        let mut bit_edges: Vec<BitSet> = raw_edges
            .iter()
            .map(|e| BitSet::from_positions(ground.len(), e.iter().map(|&v| position(v))))
            .collect();
        canonicalize_edges(&mut bit_edges);

        Ok(Hypergraph {
            vertices: ground,
            edges: bit_edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Ground-set vertex ids in ascending order.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex ids of edge `index`, ascending.
    pub fn edge(&self, index: usize) -> Vec<u32> {
        self.ids(&self.edges[index])
    }

    pub fn edge_list(&self) -> Vec<Vec<u32>> {
        (0..self.edge_count()).map(|i| self.edge(i)).collect()
    }

    pub(crate) fn edge_bits(&self, index: usize) -> &BitSet {
        &self.edges[index]
    }

    pub(crate) fn edges_bits(&self) -> &[BitSet] {
        &self.edges
    }

    /// Translates a position set back to vertex ids.
    pub(crate) fn ids(&self, set: &BitSet) -> Vec<u32> {
        set.iter().map(|p| self.vertices[p]).collect()
    }

    pub fn contains_vertex(&self, id: u32) -> bool {
        self.vertices.binary_search(&id).is_ok()
    }

    /// Number of edges the vertex at `position` belongs to.
    pub(crate) fn degree_of_position(&self, position: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(position)).count()
    }

    /// True iff every pair of distinct edges shares at least `t` vertices.
    /// Vacuously true for families with at most one edge.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        self.violating_pair(t).is_none()
    }

    /// First pair of edges (canonical index order) meeting in fewer than `t`
    /// vertices, if any.
    pub fn violating_pair(&self, t: usize) -> Option<(usize, usize)> {
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if self.edges[i].intersection_count(&self.edges[j]) < t {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// True iff for every i in 2..=t, any i distinct edges have at least
    /// t+1-i common vertices. Clauses with fewer than i edges hold vacuously.
    pub fn has_property_pt(&self, t: u32) -> Result<bool, StrengthError> {
        Ok(self.property_pt_witness(t)?.is_none())
    }

    /// A violating edge tuple for property P_t, if one exists: the indices of
    /// i edges whose common intersection has fewer than t+1-i vertices.
    pub fn property_pt_witness(&self, t: u32) -> Result<Option<Vec<usize>>, StrengthError> {
        if t < 2 {
            return Err(StrengthError { t });
        }
        let t = t as usize;
        // DFS over index-increasing edge tuples of size 2..=t; the common
        // intersection only shrinks along a branch, so a violation at any
        // prefix is already a witness.
        let mut chosen = Vec::with_capacity(t);
        let found = self.pt_dfs(t, 0, None, &mut chosen);
        Ok(found)
    }

    fn pt_dfs(
        &self,
        t: usize,
        from: usize,
        common: Option<BitSet>,
        chosen: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if chosen.len() == t {
            return None;
        }
        for i in from..self.edges.len() {
            let next = match &common {
                None => self.edges[i].clone(),
                Some(c) => c.intersection(&self.edges[i]),
            };
            chosen.push(i);
            if chosen.len() >= 2 && next.count() < t + 1 - chosen.len() {
                return Some(chosen.clone());
            }
            if let Some(w) = self.pt_dfs(t, i + 1, Some(next), chosen) {
                return Some(w);
            }
            chosen.pop();
        }
        None
    }

    /// The sub-family of containment-minimal edges over the same ground set.
    /// The result is an antichain; the operation is idempotent.
    pub fn minimal_edges(&self) -> Hypergraph {
        let keep: Vec<BitSet> = self
            .edges
            .iter()
            .filter(|e| !self.edges.iter().any(|f| f != *e && f.is_subset(e)))
            .cloned()
            .collect();
        Hypergraph {
            vertices: self.vertices.clone(),
            edges: keep,
        }
    }

    /// Builds the [`Triple`] on edge indices `i`, `j`, `k`, which must be
    /// distinct edges with empty common intersection.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> Result<Triple, TripleError> {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        if idx[0] == idx[1] || idx[1] == idx[2] {
            return Err(TripleError::NotDistinct(idx));
        }
        if let Some(&bad) = idx.iter().find(|&&x| x >= self.edges.len()) {
            return Err(TripleError::OutOfRange(bad));
        }
        let [a, b, c] = [
            &self.edges[idx[0]],
            &self.edges[idx[1]],
            &self.edges[idx[2]],
        ];
        let common = a.intersection(b).intersection(c);
        if !common.is_empty() {
            return Err(TripleError::NonEmptyIntersection {
                common: self.ids(&common),
            });
        }
        Ok(Triple {
            edges: idx,
            union: a.union(b).union(c),
            pair_intersections: [a.intersection(b), a.intersection(c), b.intersection(c)],
            private_parts: [
                a.difference(&b.union(c)),
                b.difference(&a.union(c)),
                c.difference(&a.union(b)),
            ],
        })
    }

    /// Searches all edge triples with empty common intersection and returns
    /// one with the smallest union, ties broken by lexicographic order of the
    /// sorted index triple. `None` means every three distinct edges intersect
    /// (vacuously so with fewer than three edges).
    ///
    /// Exhaustive O(m^3) scan with pruning on the running minimum union size.
    pub fn min_union_empty_triple(&self) -> Option<Triple> {
        let m = self.edges.len();
        let mut best: Option<(usize, [usize; 3])> = None;
        for i in 0..m {
            for j in i + 1..m {
                let pair_union = self.edges[i].union(&self.edges[j]);
                if let Some((size, _)) = best {
                    // Adding a third edge cannot shrink the union.
                    if pair_union.count() >= size {
                        continue;
                    }
                }
                let pair_common = self.edges[i].intersection(&self.edges[j]);
                for k in j + 1..m {
                    if pair_common.intersection_count(&self.edges[k]) != 0 {
                        continue;
                    }
                    let union_size = pair_union.union_count(&self.edges[k]);
                    if best.is_none_or(|(size, _)| union_size < size) {
                        best = Some((union_size, [i, j, k]));
                    }
                }
            }
        }
        best.map(|(_, [i, j, k])| self.triple(i, j, k).expect("scan found an empty triple"))
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edge_list())
            .finish()
    }
}

/// Sorts by (size, lexicographic member order) and removes duplicates.
pub(crate) fn canonicalize_edges(edges: &mut Vec<BitSet>) {
    edges.sort_by(|a, b| {
        a.count()
            .cmp(&b.count())
            .then_with(|| a.iter().cmp(b.iter()))
    });
    edges.dedup();
}

/// Three distinct edges with empty common intersection, together with the
/// derived sets the case analysis needs: the union X, the three pairwise
/// intersections, and the three private parts.
#[derive(Clone, Debug)]
pub struct Triple {
    /// Ascending edge indices.
    pub edges: [usize; 3],
    union: BitSet,
    pair_intersections: [BitSet; 3],
    private_parts: [BitSet; 3],
}

impl Triple {
    pub(crate) fn union_bits(&self) -> &BitSet {
        &self.union
    }

    pub(crate) fn private_bits(&self) -> &[BitSet; 3] {
        &self.private_parts
    }

    /// The union X as vertex ids.
    pub fn union_vertices(&self, h: &Hypergraph) -> Vec<u32> {
        h.ids(&self.union)
    }

    pub fn union_size(&self) -> usize {
        self.union.count()
    }

    /// Pairwise intersections in local order: (e0∩e1, e0∩e2, e1∩e2) where
    /// e0, e1, e2 are the triple's edges in ascending index order.
    pub fn pair_intersections(&self, h: &Hypergraph) -> [Vec<u32>; 3] {
        let [a, b, c] = &self.pair_intersections;
        [h.ids(a), h.ids(b), h.ids(c)]
    }

    /// For each edge of the triple, the vertices belonging to neither of the
    /// other two. Together with the pairwise intersections these partition
    /// the union X.
    pub fn private_parts(&self, h: &Hypergraph) -> [Vec<u32>; 3] {
        let [a, b, c] = &self.private_parts;
        [h.ids(a), h.ids(b), h.ids(c)]
    }

    /// How many of the three private parts are non-empty.
    pub fn nonempty_private_count(&self) -> usize {
        self.private_parts.iter().filter(|p| !p.is_empty()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    pub(crate) fn hg(edges: &[&[u32]]) -> Hypergraph {
        Hypergraph::from_edges(edges.iter().map(|e| e.iter().copied())).unwrap()
    }

    fn complete_uniform(n: u32, k: usize) -> Hypergraph {
        Hypergraph::from_edges((1..=n).combinations(k)).unwrap()
    }

    #[test]
    fn construction_is_canonical() {
        let h = Hypergraph::from_edges(vec![
            vec![3, 1, 2],
            vec![1, 2, 3],
            vec![5, 4],
            vec![2, 1, 10],
        ])
        .unwrap();
        assert_eq!(h.vertices(), &[1, 2, 3, 4, 5, 10]);
        assert_eq!(
            h.edge_list(),
            vec![vec![4, 5], vec![1, 2, 3], vec![1, 2, 10]]
        );
    }

    #[test]
    fn empty_edge_rejected() {
        let err = Hypergraph::from_edges(vec![vec![1, 2], vec![]]).unwrap_err();
        assert_eq!(err, HypergraphError::EmptyEdge { index: 1 });
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let h = Hypergraph::from_parts(vec![9, 1], vec![vec![1, 2]]).unwrap();
        assert_eq!(h.vertices(), &[1, 2, 9]);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn t_intersecting_examples() {
        assert!(hg(&[&[1, 2, 3], &[1, 2, 4]]).is_t_intersecting(2));
        assert!(!hg(&[&[1, 2], &[1, 3]]).is_t_intersecting(2));
        // Every two 4-subsets of a 6-set meet in at least two vertices.
        assert!(complete_uniform(6, 4).is_t_intersecting(2));
        // Vacuous cases.
        assert!(hg(&[&[1]]).is_t_intersecting(5));
        assert!(
            Hypergraph::from_parts(vec![1u32, 2], Vec::<Vec<u32>>::new())
                .unwrap()
                .is_t_intersecting(2)
        );
    }

    #[test]
    fn violating_pair_is_canonical_first() {
        let h = hg(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(h.violating_pair(2), Some((0, 1)));
    }

    #[test]
    fn property_pt_examples() {
        assert_eq!(complete_uniform(3, 2).has_property_pt(2), Ok(true));
        assert_eq!(complete_uniform(4, 3).has_property_pt(3), Ok(true));
        assert_eq!(hg(&[&[1, 2], &[3, 4]]).has_property_pt(2), Ok(false));
        assert_eq!(
            hg(&[&[1, 2]]).has_property_pt(1),
            Err(StrengthError { t: 1 })
        );
    }

    #[test]
    fn property_pt_witness_names_a_bad_tuple() {
        let h = hg(&[&[1, 2, 3], &[1, 2, 4], &[3, 4, 5]]);
        // First violation in DFS preorder: the full triple has empty
        // intersection but i=3 requires one common vertex.
        let w = h.property_pt_witness(3).unwrap().unwrap();
        assert_eq!(w, vec![0, 1, 2]);

        let h = hg(&[&[1, 2, 3], &[3, 4, 5]]);
        assert_eq!(h.property_pt_witness(3).unwrap().unwrap(), vec![0, 1]);
    }

    #[test]
    fn minimal_edges_examples() {
        let h = hg(&[&[1, 2], &[1, 2, 3]]);
        assert_eq!(h.minimal_edges().edge_list(), vec![vec![1, 2]]);
        assert_eq!(h.minimal_edges().vertices(), &[1, 2, 3]);

        let antichain = hg(&[&[1, 2, 3], &[1, 4, 5]]);
        assert_eq!(antichain.minimal_edges(), antichain);

        let h = hg(&[&[1, 2, 3], &[1, 2, 3, 4], &[2, 3, 5]]);
        assert_eq!(
            h.minimal_edges().edge_list(),
            vec![vec![1, 2, 3], vec![2, 3, 5]]
        );
    }

    #[test]
    fn sunflower_has_no_empty_triple() {
        let h = hg(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert!(h.min_union_empty_triple().is_none());
        assert!(hg(&[&[1, 2], &[1, 3]]).min_union_empty_triple().is_none());
    }

    #[test]
    fn empty_triple_by_inspection() {
        let h = hg(&[&[1, 2, 3, 4], &[1, 2, 5, 6], &[3, 4, 5, 6]]);
        let t = h.min_union_empty_triple().unwrap();
        assert_eq!(t.edges, [0, 1, 2]);
        assert_eq!(t.union_vertices(&h), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(t.nonempty_private_count(), 0);
    }

    /// Brute-force reference: scan all index triples, track minimum union of
    /// those with empty intersection and the lexicographically first argmin.
    fn brute_force_min_union(h: &Hypergraph) -> Option<(usize, [usize; 3])> {
        let edges = h.edge_list();
        let mut best: Option<(usize, [usize; 3])> = None;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                for k in j + 1..edges.len() {
                    let common = edges[i]
                        .iter()
                        .filter(|v| edges[j].contains(v) && edges[k].contains(v))
                        .count();
                    if common != 0 {
                        continue;
                    }
                    let mut union: Vec<u32> = edges[i]
                        .iter()
                        .chain(&edges[j])
                        .chain(&edges[k])
                        .copied()
                        .collect();
                    union.sort_unstable();
                    union.dedup();
                    match best {
                        Some((size, _)) if size <= union.len() => {}
                        _ => best = Some((union.len(), [i, j, k])),
                    }
                }
            }
        }
        best
    }

    #[test]
    fn complete_six_four_min_union_is_six() {
        let h = complete_uniform(6, 4);
        let expected = brute_force_min_union(&h).unwrap();
        assert_eq!(expected.0, 6);
        let t = h.min_union_empty_triple().unwrap();
        assert_eq!(t.union_size(), 6);
        assert_eq!(t.edges, expected.1);
        assert_eq!(
            [h.edge(t.edges[0]), h.edge(t.edges[1]), h.edge(t.edges[2])],
            [vec![1, 2, 3, 4], vec![1, 2, 5, 6], vec![3, 4, 5, 6]]
        );
    }

    #[test]
    fn private_parts_examples() {
        let h = hg(&[&[1, 2, 3, 4], &[1, 2, 5, 6], &[3, 4, 5, 6]]);
        let t = h.triple(0, 1, 2).unwrap();
        assert_eq!(t.private_parts(&h), [vec![], vec![], vec![]]);

        let h = hg(&[&[1, 2, 3, 7], &[1, 2, 4, 8], &[3, 4, 9]]);
        let t = h.triple(0, 1, 2).unwrap();
        // Canonical edge order puts {3,4,9} first; identify edges by content.
        let privates = t.private_parts(&h);
        let by_edge: Vec<(Vec<u32>, Vec<u32>)> = t
            .edges
            .iter()
            .zip(privates.iter())
            .map(|(&e, p)| (h.edge(e), p.clone()))
            .collect();
        for (edge, private) in by_edge {
            match edge.as_slice() {
                [1, 2, 3, 7] => assert_eq!(private, vec![7]),
                [1, 2, 4, 8] => assert_eq!(private, vec![8]),
                [3, 4, 9] => assert_eq!(private, vec![9]),
                other => panic!("unexpected edge {other:?}"),
            }
        }

        let h = hg(&[&[1, 2, 3], &[1, 2, 4], &[3, 4, 5]]);
        let t = h.triple(0, 1, 2).unwrap();
        let privates = t.private_parts(&h);
        for (&e, p) in t.edges.iter().zip(privates.iter()) {
            if h.edge(e) == vec![3, 4, 5] {
                assert_eq!(p, &vec![5]);
            } else {
                assert!(p.is_empty());
            }
        }
    }

    #[test]
    fn triple_rejects_bad_input() {
        let h = hg(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert!(matches!(
            h.triple(0, 0, 1),
            Err(TripleError::NotDistinct(_))
        ));
        assert!(matches!(h.triple(0, 1, 7), Err(TripleError::OutOfRange(7))));
        assert_eq!(
            h.triple(0, 1, 2).unwrap_err(),
            TripleError::NonEmptyIntersection { common: vec![1, 2] }
        );
    }

    fn small_family() -> impl Strategy<Value = Hypergraph> {
        proptest::collection::vec(proptest::collection::btree_set(0u32..10, 1..5), 1..8)
            .prop_map(|edges| Hypergraph::from_edges(edges).unwrap())
    }

    proptest! {
        #[test]
        fn minimal_edges_is_idempotent_antichain(h in small_family()) {
            let g = h.minimal_edges();
            prop_assert_eq!(g.minimal_edges(), g.clone());
            let edges = g.edge_list();
            for a in &edges {
                for b in &edges {
                    if a != b {
                        prop_assert!(!a.iter().all(|v| b.contains(v)));
                    }
                }
            }
        }

        #[test]
        fn min_union_matches_brute_force(h in small_family()) {
            match (h.min_union_empty_triple(), brute_force_min_union(&h)) {
                (None, None) => {}
                (Some(t), Some((size, idx))) => {
                    prop_assert_eq!(t.union_size(), size);
                    prop_assert_eq!(t.edges, idx);
                }
                (got, want) => prop_assert!(false, "mismatch: {:?} vs {:?}", got, want),
            }
        }

        #[test]
        fn privates_and_intersections_partition_union(h in small_family()) {
            if let Some(t) = h.min_union_empty_triple() {
                let mut parts: Vec<u32> = Vec::new();
                for p in t.private_parts(&h) {
                    parts.extend(p);
                }
                for p in t.pair_intersections(&h) {
                    parts.extend(p);
                }
                let mut sorted = parts.clone();
                sorted.sort_unstable();
                sorted.dedup();
                // Disjoint (no duplicates lost) and covering the union.
                prop_assert_eq!(sorted.len(), parts.len());
                prop_assert_eq!(sorted, t.union_vertices(&h));
            }
        }

        #[test]
        fn property_pt_implies_weaker_pairwise(h in small_family(), t in 3u32..5) {
            if h.has_property_pt(t).unwrap() {
                prop_assert!(h.is_t_intersecting(t as usize - 1));
            }
        }

        #[test]
        fn property_p2_is_pairwise_intersecting(h in small_family()) {
            prop_assert_eq!(h.has_property_pt(2).unwrap(), h.is_t_intersecting(1));
        }
    }
}
