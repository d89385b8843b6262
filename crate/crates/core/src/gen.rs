//! Deterministic instance generators: the named families and seeded random
//! 2-intersecting / intersecting samplers, plus a search for inputs that
//! drive each branch of the coloring pipeline.
//!
//! Random sampling is rejection-based: draw a family, keep it only if it
//! satisfies the advertised predicate. Attempt `i` reseeds the generator with
//! `seed + i * 0x9e3779b97f4a7c15` (wrapping), so fixed seeds reproduce
//! byte-identical instances anywhere.

use crate::coloring::{TracePath, TrivialKind};
use crate::hypergraph::Hypergraph;
use crate::theorem::theorem_coloring;
use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

/// Sub-seed stride between rejection attempts.
pub const SUB_SEED_STRIDE: u64 = 0x9e37_79b9_7f4a_7c15;
/// Rejection attempts before giving up.
pub const REJECTION_ATTEMPTS: u32 = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no accepted sample after {attempts} attempts; loosen the parameters (fewer or larger edges)")]
    AttemptsExhausted { attempts: u32 },
}

/// A validated request for one generator family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorSpec {
    CompleteUniform {
        n: u32,
        k: u32,
    },
    Sunflower {
        core_size: u32,
        petals: u32,
        petal_size: u32,
    },
    ApexClique {
        k: u32,
    },
    Random2Intersecting {
        n: u32,
        m: u32,
        min_size: u32,
        max_size: u32,
        seed: u64,
    },
    RandomIntersecting {
        n: u32,
        m: u32,
        min_size: u32,
        max_size: u32,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Hypergraph, GenError> {
        match *self {
            GeneratorSpec::CompleteUniform { n, k } => gen_complete_uniform(n, k),
            GeneratorSpec::Sunflower {
                core_size,
                petals,
                petal_size,
            } => gen_sunflower(core_size, petals, petal_size),
            GeneratorSpec::ApexClique { k } => gen_apex_clique(k),
            GeneratorSpec::Random2Intersecting {
                n,
                m,
                min_size,
                max_size,
                seed,
            } => gen_random_2_intersecting(n, m, min_size, max_size, seed),
            GeneratorSpec::RandomIntersecting {
                n,
                m,
                min_size,
                max_size,
                seed,
            } => gen_random_intersecting(n, m, min_size, max_size, seed),
        }
    }

    /// One-line description for golden-file headers; names the PRNG scheme
    /// for the seeded families.
    pub fn describe(&self) -> String {
        match *self {
            GeneratorSpec::CompleteUniform { n, k } => format!("complete-uniform n={n} k={k}"),
            GeneratorSpec::Sunflower {
                core_size,
                petals,
                petal_size,
            } => format!("sunflower core={core_size} petals={petals} petal-size={petal_size}"),
            GeneratorSpec::ApexClique { k } => format!("apex-clique k={k}"),
            GeneratorSpec::Random2Intersecting {
                n,
                m,
                min_size,
                max_size,
                seed,
            } => format!(
                "random-2-intersecting n={n} m={m} sizes={min_size}..{max_size} seed={seed} \
                 rng=chacha8(seed+attempt*0x9e3779b97f4a7c15)"
            ),
            GeneratorSpec::RandomIntersecting {
                n,
                m,
                min_size,
                max_size,
                seed,
            } => format!(
                "random-intersecting n={n} m={m} sizes={min_size}..{max_size} seed={seed} \
                 rng=chacha8(seed+attempt*0x9e3779b97f4a7c15)"
            ),
        }
    }
}

/// All k-subsets of {1..n} in canonical order.
pub fn gen_complete_uniform(n: u32, k: u32) -> Result<Hypergraph, GenError> {
    if !(1..=n).contains(&k) || n > 20 {
        return Err(GenError::InvalidParameter(format!(
            "complete-uniform requires 1 <= k <= n <= 20, got n={n} k={k}"
        )));
    }
    Ok(Hypergraph::from_edges((1..=n).combinations(k as usize)).expect("edges are non-empty"))
}

/// Core {1..core_size} plus pairwise-disjoint petals; 2-intersecting by
/// construction and every edge triple meets inside the core.
pub fn gen_sunflower(core_size: u32, petals: u32, petal_size: u32) -> Result<Hypergraph, GenError> {
    if core_size < 2 {
        return Err(GenError::InvalidParameter(format!(
            "sunflower core must have at least 2 vertices, got {core_size}"
        )));
    }
    if petals < 1 {
        return Err(GenError::InvalidParameter(
            "sunflower needs at least one petal".into(),
        ));
    }
    if petal_size < 1 {
        return Err(GenError::InvalidParameter(format!(
            "petal size must be at least 1, got {petal_size}"
        )));
    }
    let total = core_size as u64 + petals as u64 * petal_size as u64;
    if total > 64 {
        return Err(GenError::InvalidParameter(format!(
            "sunflower would have {total} vertices, above the cap of 64"
        )));
    }
    let core: Vec<u32> = (1..=core_size).collect();
    let mut next = core_size + 1;
    let edges: Vec<Vec<u32>> = (0..petals)
        .map(|_| {
            let mut e = core.clone();
            for _ in 0..petal_size {
                e.push(next);
                next += 1;
            }
            e
        })
        .collect();
    let h = Hypergraph::from_edges(edges).expect("edges are non-empty");
    debug_assert!(h.is_t_intersecting(2));
    Ok(h)
}

/// Every edge {a,b} of the complete graph on {1..k+1} extended by the new
/// vertex 0: intersecting (all edges share 0) but not 2-intersecting for
/// k >= 3.
pub fn gen_apex_clique(k: u32) -> Result<Hypergraph, GenError> {
    if !(2..=8).contains(&k) {
        return Err(GenError::InvalidParameter(format!(
            "apex-clique requires 2 <= k <= 8, got {k}"
        )));
    }
    let edges = (1..=k + 1).tuple_combinations().map(|(a, b)| vec![0, a, b]);
    let h = Hypergraph::from_edges(edges).expect("edges are non-empty");
    debug_assert!(h.is_t_intersecting(1));
    Ok(h)
}

/// Seeded rejection sampler for 2-intersecting families.
pub fn gen_random_2_intersecting(
    n: u32,
    m: u32,
    min_size: u32,
    max_size: u32,
    seed: u64,
) -> Result<Hypergraph, GenError> {
    check_random_params(n, m, min_size, max_size, 1)?;
    rejection_sample(n, m, min_size, max_size, seed, |h| h.is_t_intersecting(2))
}

/// Seeded rejection sampler for intersecting families without singleton
/// edges.
pub fn gen_random_intersecting(
    n: u32,
    m: u32,
    min_size: u32,
    max_size: u32,
    seed: u64,
) -> Result<Hypergraph, GenError> {
    check_random_params(n, m, min_size, max_size, 2)?;
    rejection_sample(n, m, min_size, max_size, seed, |h| {
        h.is_t_intersecting(1) && (0..h.edge_count()).all(|i| h.edge_bits(i).count() >= 2)
    })
}

fn check_random_params(
    n: u32,
    m: u32,
    min_size: u32,
    max_size: u32,
    size_floor: u32,
) -> Result<(), GenError> {
    if n == 0 || n > 16 {
        return Err(GenError::InvalidParameter(format!(
            "ground set size must be in 1..=16, got {n}"
        )));
    }
    if m == 0 {
        return Err(GenError::InvalidParameter("need at least one edge".into()));
    }
    if min_size < size_floor || min_size > max_size || max_size > n {
        return Err(GenError::InvalidParameter(format!(
            "edge sizes must satisfy {size_floor} <= min <= max <= n, got {min_size}..{max_size} with n={n}"
        )));
    }
    Ok(())
}

fn rejection_sample(
    n: u32,
    m: u32,
    min_size: u32,
    max_size: u32,
    seed: u64,
    accept: impl Fn(&Hypergraph) -> bool,
) -> Result<Hypergraph, GenError> {
    for attempt in 0..REJECTION_ATTEMPTS {
        let mut rng = attempt_rng(seed, attempt);
        let h = random_family(&mut rng, n, m, min_size, max_size);
        if accept(&h) {
            return Ok(h);
        }
    }
    Err(GenError::AttemptsExhausted {
        attempts: REJECTION_ATTEMPTS,
    })
}

fn attempt_rng(seed: u64, attempt: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add((attempt as u64).wrapping_mul(SUB_SEED_STRIDE)))
}

/// Draws `m` edges with sizes uniform in `[min_size, max_size]`; each edge is
/// filled by repeated uniform vertex draws from {1..n} until it reaches its
/// size. Duplicate edges collapse under set semantics.
fn random_family(rng: &mut ChaCha8Rng, n: u32, m: u32, min_size: u32, max_size: u32) -> Hypergraph {
    let edges: Vec<BTreeSet<u32>> = (0..m)
        .map(|_| {
            let size = rng.random_range(min_size..=max_size) as usize;
            let mut edge = BTreeSet::new();
            while edge.len() < size {
                edge.insert(rng.random_range(1..=n));
            }
            edge
        })
        .collect();
    Hypergraph::from_edges(edges).expect("edges are non-empty")
}

/// Pipeline branches a witness instance can be asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchTarget {
    Case1,
    Case2,
    Case3,
    Case4,
    Case3Swap,
    Size2Minimal,
}

impl std::str::FromStr for BranchTarget {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" | "case1" => Ok(BranchTarget::Case1),
            "2" | "case2" => Ok(BranchTarget::Case2),
            "3" | "case3" => Ok(BranchTarget::Case3),
            "4" | "case4" => Ok(BranchTarget::Case4),
            "case3-swap" => Ok(BranchTarget::Case3Swap),
            "size2-minimal" => Ok(BranchTarget::Size2Minimal),
            other => Err(format!(
                "unknown branch target {other:?}; expected 1..4, case3-swap or size2-minimal"
            )),
        }
    }
}

/// Searches seeded random instances (and, first, small sub-families of the
/// 4-subsets of a 6-set) for one whose run trace matches the target branch.
/// `None` after `budget` attempts is a valid outcome.
pub fn find_branch_witness(target: BranchTarget, budget: u32, seed: u64) -> Option<Hypergraph> {
    let mut attempts = 0u32;

    // Exhaustive phase: every sub-family of the 4-subsets of {1..6} is
    // 2-intersecting; these reach the no-private case and the recursion
    // cheaply.
    let base: Vec<Vec<u32>> = (1u32..=6).combinations(4).collect();
    for mask in 1u32..(1 << base.len()) {
        if attempts >= budget {
            return None;
        }
        if mask.count_ones() < 3 {
            continue;
        }
        attempts += 1;
        let edges = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| e.clone());
        let h = Hypergraph::from_edges(edges).expect("edges are non-empty");
        if matches_target(&h, target) {
            return Some(h);
        }
        if attempts >= budget / 2 {
            break;
        }
    }

    // Random phase: rotate three samplers, all seeded from the attempt
    // number.
    while attempts < budget {
        let mut rng = attempt_rng(seed, attempts);
        let h = match attempts % 3 {
            0 => scaffold_family(&mut rng),
            1 => random_family(&mut rng, 9, 5, 5, 8),
            _ => pair_core_family(&mut rng),
        };
        attempts += 1;
        if h.is_t_intersecting(2) && matches_target(&h, target) {
            return Some(h);
        }
    }
    None
}

fn matches_target(h: &Hypergraph, target: BranchTarget) -> bool {
    let Ok((_, report)) = theorem_coloring(h) else {
        return false;
    };
    let trace = report.trace.expect("pipeline reports carry a trace");
    match target {
        BranchTarget::Case1 => trace.path == TracePath::Triple && trace.case_id == Some(1),
        BranchTarget::Case2 => trace.path == TracePath::Triple && trace.case_id == Some(2),
        BranchTarget::Case3 => trace.path == TracePath::Triple && trace.case_id == Some(3),
        BranchTarget::Case4 => trace.path == TracePath::Triple && trace.case_id == Some(4),
        BranchTarget::Case3Swap => trace.swapped,
        BranchTarget::Size2Minimal => trace.trivial_kind == Some(TrivialKind::TwoVertexMinimal),
    }
}

/// Builds a triple with prescribed structure: disjoint pairwise-intersection
/// pools A, B, C of size >= 2 and private pools of size 0..=2 per edge, so
/// the selected triple's case is drawn uniformly-ish over all four.
fn scaffold_family(rng: &mut ChaCha8Rng) -> Hypergraph {
    let mut next = 1u32;
    let mut pool = |size: u32| -> Vec<u32> {
        let vs: Vec<u32> = (next..next + size).collect();
        next += size;
        vs
    };
    let a = pool(rng.random_range(2..=3));
    let b = pool(rng.random_range(2..=3));
    let c = pool(rng.random_range(2..=3));
    let p1 = pool(rng.random_range(0..=2));
    let p2 = pool(rng.random_range(0..=2));
    let p3 = pool(rng.random_range(0..=2));

    let edge = |xs: &[&[u32]]| -> Vec<u32> { xs.iter().flat_map(|s| s.iter().copied()).collect() };
    let mut edges = vec![
        edge(&[&a, &b, &p1]),
        edge(&[&a, &c, &p2]),
        edge(&[&b, &c, &p3]),
    ];
    // Occasionally add a fourth edge covering two pools plus spillover.
    if rng.random_range(0..=1) == 1 {
        let mut extra = edge(&[&a, &b]);
        extra.extend(p2.iter().take(1));
        extra.extend(c.iter().take(1));
        edges.push(extra);
    }
    Hypergraph::from_edges(edges).expect("edges are non-empty")
}

/// A two-vertex edge plus random supersets of it: the minimal edge always
/// has exactly two vertices.
fn pair_core_family(rng: &mut ChaCha8Rng) -> Hypergraph {
    let n = 8u32;
    let mut edges: Vec<BTreeSet<u32>> = vec![[1, 2].into()];
    for _ in 0..rng.random_range(1..=4) {
        let mut e: BTreeSet<u32> = [1, 2].into();
        let extra = rng.random_range(1..=3);
        while e.len() < 2 + extra {
            e.insert(rng.random_range(1..=n));
        }
        edges.push(e);
    }
    Hypergraph::from_edges(edges).expect("edges are non-empty")
}
