//! Brute-force ground truth, deliberately dumb and independent of the
//! branching solver: exhaustive minimum hitting-set search, derivation of
//! the two-edge branching table for the five-vertex diamond-plus-witness
//! gadget, and the branching-factor recurrence root solver.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

use crate::forbidden::is_cd_free;
use crate::graph::{Edge, EdgeSet, Graph, VertexId};

/// Default ceiling on the number of cd-freeness checks an exhaustive search
/// may perform.
pub const DEFAULT_WORK_BOUND: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("exhaustive search needs {required} checks, above the bound of {bound}")]
    CapacityExceeded { required: u128, bound: u64 },
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn enumeration_cost(m: usize, k_max: usize) -> u128 {
    (0..=k_max.min(m)).map(|s| binomial(m, s)).sum()
}

/// Smallest CDH set of size at most `k_max` by exhaustive subset search,
/// with the default work bound.
///
/// Subsets are scanned by ascending size and lexicographic edge order, so
/// the returned witness is canonical.
pub fn brute_min_cdh(g: &Graph, k_max: usize) -> Result<Option<(usize, EdgeSet)>, OracleError> {
    brute_min_cdh_bounded(g, k_max, DEFAULT_WORK_BOUND)
}

/// Like [`brute_min_cdh`] with an explicit work bound; refuses up front if
/// the full enumeration could exceed it.
pub fn brute_min_cdh_bounded(
    g: &Graph,
    k_max: usize,
    bound: u64,
) -> Result<Option<(usize, EdgeSet)>, OracleError> {
    let required = enumeration_cost(g.edge_count(), k_max);
    if required > bound as u128 {
        return Err(OracleError::CapacityExceeded { required, bound });
    }
    if is_cd_free(g) {
        return Ok(Some((0, EdgeSet::new())));
    }
    let edges: Vec<Edge> = g.edges().collect();
    for s in 1..=k_max.min(edges.len()) {
        for subset in edges.iter().copied().combinations(s) {
            let set: EdgeSet = subset.into_iter().collect();
            let reduced = g.delete_edges(&set).expect("edges taken from g");
            if is_cd_free(&reduced) {
                return Ok(Some((s, set)));
            }
        }
    }
    Ok(None)
}

/// All CDH sets of the minimum size, if that size is at most `k_max`.
pub fn all_min_cdh_sets(
    g: &Graph,
    k_max: usize,
) -> Result<Option<(usize, Vec<EdgeSet>)>, OracleError> {
    let required = enumeration_cost(g.edge_count(), k_max);
    if required > DEFAULT_WORK_BOUND as u128 {
        return Err(OracleError::CapacityExceeded {
            required,
            bound: DEFAULT_WORK_BOUND,
        });
    }
    if is_cd_free(g) {
        return Ok(Some((0, vec![EdgeSet::new()])));
    }
    let edges: Vec<Edge> = g.edges().collect();
    for s in 1..=k_max.min(edges.len()) {
        let mut found = Vec::new();
        for subset in edges.iter().copied().combinations(s) {
            let set: EdgeSet = subset.into_iter().collect();
            let reduced = g.delete_edges(&set).expect("edges taken from g");
            if is_cd_free(&reduced) {
                found.push(set);
            }
        }
        if !found.is_empty() {
            return Ok(Some((s, found)));
        }
    }
    Ok(None)
}

/// All inclusion-minimal CDH sets of size at most `k_max`.
pub fn minimal_cdh_sets_up_to(g: &Graph, k_max: usize) -> Result<Vec<EdgeSet>, OracleError> {
    let required = enumeration_cost(g.edge_count(), k_max);
    if required > DEFAULT_WORK_BOUND as u128 {
        return Err(OracleError::CapacityExceeded {
            required,
            bound: DEFAULT_WORK_BOUND,
        });
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut minimal = Vec::new();
    for s in 0..=k_max.min(edges.len()) {
        for subset in edges.iter().copied().combinations(s) {
            let set: EdgeSet = subset.into_iter().collect();
            let reduced = g.delete_edges(&set).expect("edges taken from g");
            if !is_cd_free(&reduced) {
                continue;
            }
            let shrinkable = set.iter().any(|&e| {
                let mut smaller = set.clone();
                smaller.remove(&e);
                let r = g.delete_edges(&smaller).expect("subset of g");
                is_cd_free(&r)
            });
            if !shrinkable {
                minimal.push(set);
            }
        }
    }
    Ok(minimal)
}

// ---------------------------------------------------------------------------
// The five-vertex branching gadget
// ---------------------------------------------------------------------------

/// Abstract edge labels of the gadget on vertices {a, b, c, d, t}:
/// a and c are the chord endpoints of a diamond, b and d its non-adjacent
/// pair, and t is an external vertex adjacent to a, b and d. The gadget has
/// the eight edges below; bd and ct are non-edges.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GadgetEdge {
    AB,
    AD,
    AC,
    CB,
    CD,
    AT,
    BT,
    DT,
}

impl GadgetEdge {
    pub const ALL: [GadgetEdge; 8] = [
        GadgetEdge::AB,
        GadgetEdge::AD,
        GadgetEdge::AC,
        GadgetEdge::CB,
        GadgetEdge::CD,
        GadgetEdge::AT,
        GadgetEdge::BT,
        GadgetEdge::DT,
    ];

    /// Endpoint indices into a `[a, b, c, d, t]` labeling.
    fn slots(self) -> (usize, usize) {
        match self {
            GadgetEdge::AB => (0, 1),
            GadgetEdge::AD => (0, 3),
            GadgetEdge::AC => (0, 2),
            GadgetEdge::CB => (2, 1),
            GadgetEdge::CD => (2, 3),
            GadgetEdge::AT => (0, 4),
            GadgetEdge::BT => (1, 4),
            GadgetEdge::DT => (3, 4),
        }
    }

    /// Instantiates the label on concrete vertices.
    pub fn concrete(self, labels: [VertexId; 5]) -> Edge {
        let (i, j) = self.slots();
        Edge::new(labels[i], labels[j])
    }

    /// Image under the gadget automorphism that exchanges b and d.
    pub fn swap_sides(self) -> GadgetEdge {
        match self {
            GadgetEdge::AB => GadgetEdge::AD,
            GadgetEdge::AD => GadgetEdge::AB,
            GadgetEdge::CB => GadgetEdge::CD,
            GadgetEdge::CD => GadgetEdge::CB,
            GadgetEdge::BT => GadgetEdge::DT,
            GadgetEdge::DT => GadgetEdge::BT,
            other => other,
        }
    }
}

/// The unordered pairs of gadget edges whose deletion leaves the gadget
/// {claw, diamond}-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPairTable {
    pub pairs: BTreeSet<(GadgetEdge, GadgetEdge)>,
}

/// The gadget as a concrete graph on vertices a=0, b=1, c=2, d=3, t=4.
pub fn gadget_graph() -> Graph {
    let edges: Vec<(VertexId, VertexId)> = GadgetEdge::ALL
        .iter()
        .map(|e| e.concrete([0, 1, 2, 3, 4]).endpoints())
        .collect();
    Graph::from_edges(5, &edges).unwrap()
}

/// Tests each of the 28 unordered pairs of gadget edges: a pair is kept
/// exactly when deleting it leaves the five-vertex gadget with no induced
/// claw or diamond.
pub fn derive_gadget_pairs() -> GadgetPairTable {
    let g = gadget_graph();
    let labels = [0, 1, 2, 3, 4];
    let mut pairs = BTreeSet::new();
    for (i, &e1) in GadgetEdge::ALL.iter().enumerate() {
        for &e2 in &GadgetEdge::ALL[i + 1..] {
            let doomed: EdgeSet = [e1.concrete(labels), e2.concrete(labels)]
                .into_iter()
                .collect();
            let reduced = g.delete_edges(&doomed).expect("gadget edges");
            if is_cd_free(&reduced) {
                pairs.insert((e1, e2));
            }
        }
    }
    GadgetPairTable { pairs }
}

// ---------------------------------------------------------------------------
// Branching factors
// ---------------------------------------------------------------------------

/// Budget decreases of a branching rule's subinstances; entries are
/// positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingVector(Vec<u32>);

impl BranchingVector {
    /// Panics on an empty vector or a zero entry.
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "branching vector must be non-empty");
        assert!(
            entries.iter().all(|&a| a >= 1),
            "branching vector entries must be positive"
        );
        BranchingVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// The unique root x > 1 of x^p = Σ x^(p−aᵢ) with p = max aᵢ, located by
/// bisection well inside 1e-6 absolute tolerance.
///
/// A single-entry vector describes a chain, not a branch; its factor is
/// returned as exactly 1.
pub fn branching_factor(v: &BranchingVector) -> f64 {
    let entries = v.entries();
    let j = entries.len();
    if j == 1 {
        return 1.0;
    }
    let p = *entries.iter().max().unwrap() as i32;
    let f = |x: f64| -> f64 {
        let mut acc = x.powi(p);
        for &a in entries {
            acc -= x.powi(p - a as i32);
        }
        acc
    };
    let mut lo = 1.0f64;
    let mut hi = j as f64 + 1.0;
    debug_assert!(f(lo) < 0.0 && f(hi) > 0.0);
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
