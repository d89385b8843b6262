//! Shared helpers for the integration suites: an independent brute-force
//! coloring oracle, corpus loading, and the seeded parameter schedules used
//! to build the random test corpora.

// Each integration test crate compiles this module and uses its own subset.
#![allow(dead_code)]

use std::path::PathBuf;
use strongcolor_core::{parse_hypergraph, Hypergraph};

/// Test-only double oracle: enumerates every assignment of colors `1..=k`
/// over the ground set and recounts distinct colors per edge directly,
/// independent of the search-based oracle and of `verify_strong`.
pub fn naive_exists_coloring(h: &Hypergraph, strength: u32, k: u32) -> bool {
    let n = h.vertex_count();
    let edges = h.edge_list();
    let index_of = |v: u32| h.vertices().binary_search(&v).unwrap();
    let total = (k as u64).pow(n as u32);
    'outer: for code in 0..total {
        let mut rest = code;
        let mut colors = vec![0u32; n];
        for slot in colors.iter_mut() {
            *slot = (rest % k as u64) as u32 + 1;
            rest /= k as u64;
        }
        for edge in &edges {
            let mut distinct: Vec<u32> = edge.iter().map(|&v| colors[index_of(v)]).collect();
            distinct.sort_unstable();
            distinct.dedup();
            if distinct.len() < edge.len().min(strength as usize) {
                continue 'outer;
            }
        }
        return true;
    }
    false
}

/// Distinct colors per edge recounted without `verify_strong`.
pub fn recount_is_strong(
    h: &Hypergraph,
    coloring: &strongcolor_core::Coloring,
    strength: u32,
) -> bool {
    h.edge_list().iter().all(|edge| {
        let mut distinct: Vec<u32> = edge.iter().map(|&v| coloring.color(v).unwrap()).collect();
        distinct.sort_unstable();
        distinct.dedup();
        distinct.len() >= edge.len().min(strength as usize)
    })
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Every corpus instance file, as (relative name, parsed hypergraph).
pub fn load_corpus() -> Vec<(String, Hypergraph)> {
    let mut out = Vec::new();
    for sub in ["hand", "golden"] {
        let dir = corpus_dir().join(sub);
        let mut entries: Vec<_> = std::fs::read_dir(&dir)
            .unwrap_or_else(|e| panic!("reading {}: {e}", dir.display()))
            .map(|e| e.unwrap().path())
            .filter(|p| p.extension().is_some_and(|x| x == "txt"))
            .collect();
        entries.sort();
        for path in entries {
            let text = std::fs::read_to_string(&path).unwrap();
            let h = parse_hypergraph(&text)
                .unwrap_or_else(|e| panic!("parsing {}: {e}", path.display()));
            out.push((
                format!("{sub}/{}", path.file_name().unwrap().to_string_lossy()),
                h,
            ));
        }
    }
    out
}

/// Parameters for the i-th random 2-intersecting corpus instance. Most slots
/// use edge sizes above (n+2)/2 so any draw is 2-intersecting; every tenth
/// slot samples looser sizes that need actual rejection.
pub fn random_2i_params(i: u32) -> (u32, u32, u32, u32, u64) {
    let seed = 10_000 + i as u64;
    if i % 10 == 9 {
        let m = 3 + (i / 10) % 3;
        return (10, m, 5, 6, seed);
    }
    let n = 6 + (i % 9);
    let min_size = n / 2 + 1 + (n % 2);
    let max_size = (min_size + 2).min(n);
    let m = 2 + (i * 7) % 39;
    (n, m, min_size, max_size, seed)
}

/// Parameters for the i-th random intersecting (no singleton) instance.
pub fn random_intersecting_params(i: u32) -> (u32, u32, u32, u32, u64) {
    let n = 5 + (i % 8);
    let min_size = n / 2 + 1;
    let max_size = (min_size + 2).min(n);
    let m = 2 + (i % 20);
    (n, m, min_size, max_size, 20_000 + i as u64)
}
