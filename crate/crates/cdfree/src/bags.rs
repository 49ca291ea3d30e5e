//! Bag decomposition of {claw, diamond}-free graphs.
//!
//! A bag is a maximal clique or a singleton on a simplified vertex (one
//! whose neighborhood is a clique). In a cd-free graph without isolated
//! vertices the bags satisfy four structural conditions:
//!
//! 1. every non-isolated vertex lies in exactly two bags;
//! 2. every edge lies in exactly one bag;
//! 3. two bags share at most one vertex;
//! 4. bags sharing a vertex v have no edges between their remainders.
//!
//! The decomposition is computed per edge as the clique closure
//! `{u,v} ∪ N(u) ∩ N(v)`; in a diamond-free graph this is the unique
//! maximal clique through the edge, and a failed closure doubles as a
//! cd-freeness check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BagOrigin {
    MaximalClique,
    SimplifiedSingleton,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bag {
    pub vertices: BTreeSet<VertexId>,
    pub origin: BagOrigin,
}

impl Bag {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }
}

impl fmt::Display for Bag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.origin {
            BagOrigin::MaximalClique => "clique",
            BagOrigin::SimplifiedSingleton => "singleton",
        };
        write!(f, "{kind}{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The bags of a graph plus a vertex-to-bag index. Bags are ordered by
/// their vertex sets, cliques before singletons, so equal inputs yield
/// identical bag indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BagSet {
    pub bags: Vec<Bag>,
    vertex_to_bags: BTreeMap<VertexId, Vec<usize>>,
}

impl BagSet {
    fn from_bags(bags: Vec<Bag>) -> Self {
        let mut vertex_to_bags: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, bag) in bags.iter().enumerate() {
            for &v in &bag.vertices {
                vertex_to_bags.entry(v).or_default().push(i);
            }
        }
        BagSet {
            bags,
            vertex_to_bags,
        }
    }

    /// Indices of the bags containing `v`.
    pub fn bags_of(&self, v: VertexId) -> &[usize] {
        self.vertex_to_bags
            .get(&v)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Vertices covered by at least one bag.
    pub fn covered_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertex_to_bags.keys().copied()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error(
        "vertex {0} is isolated; the decomposition is defined for graphs without isolated vertices"
    )]
    IsolatedVertex(VertexId),
    #[error("clique closure of edge {edge} contains the non-adjacent pair {missing}; the graph has an induced diamond")]
    ClosureNotClique { edge: Edge, missing: Edge },
    #[error("vertex {vertex} lies in {count} maximal-clique closures instead of at most two; the graph has an induced claw")]
    VertexBagCount { vertex: VertexId, count: usize },
    #[error("edge {edge} lies in {count} distinct closures")]
    EdgeInMultipleBags { edge: Edge, count: usize },
}

/// Computes the bag decomposition of a {claw, diamond}-free graph without
/// isolated vertices. Violations of either precondition surface as
/// structured errors naming the failed condition.
pub fn compute_bags(h: &Graph) -> Result<BagSet, StructureError> {
    let active: BTreeSet<VertexId> = h.vertices().collect();
    compute_bags_within(h, &active, false)
}

/// Decomposition of the subgraph induced by `active`, keeping host ids.
/// With `lone_singletons`, a vertex isolated within `active` receives a
/// single singleton bag instead of raising an error; the kernelizer uses
/// this for vertices of G−X whose neighbors all lie in the modular.
pub(crate) fn compute_bags_within(
    g: &Graph,
    active: &BTreeSet<VertexId>,
    lone_singletons: bool,
) -> Result<BagSet, StructureError> {
    let mut closures: BTreeSet<Vec<VertexId>> = BTreeSet::new();
    let mut active_degree: BTreeMap<VertexId, usize> = BTreeMap::new();

    for &u in active {
        for &v in g.neighbors(u) {
            if !active.contains(&v) {
                continue;
            }
            *active_degree.entry(u).or_insert(0) += 1;
            if v < u {
                continue;
            }
            let mut closure = vec![u, v];
            closure.extend(
                g.common_neighbors(u, v)
                    .expect("vertices in range")
                    .into_iter()
                    .filter(|w| active.contains(w)),
            );
            closure.sort_unstable();
            // The closure must be a clique, otherwise the chord u-v and two
            // non-adjacent common neighbors form an induced diamond.
            for (i, &a) in closure.iter().enumerate() {
                for &b in &closure[i + 1..] {
                    if !g.has_edge(a, b) {
                        return Err(StructureError::ClosureNotClique {
                            edge: Edge::new(u, v),
                            missing: Edge::new(a, b),
                        });
                    }
                }
            }
            closures.insert(closure);
        }
    }

    let clique_bags: Vec<Vec<VertexId>> = closures.into_iter().collect();

    // Count closures per vertex and per edge.
    let mut per_vertex: BTreeMap<VertexId, usize> = BTreeMap::new();
    for bag in &clique_bags {
        for &v in bag {
            *per_vertex.entry(v).or_insert(0) += 1;
        }
    }
    for &u in active {
        for &v in g.neighbors(u) {
            if v < u || !active.contains(&v) {
                continue;
            }
            let count = clique_bags
                .iter()
                .filter(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
                .count();
            if count != 1 {
                return Err(StructureError::EdgeInMultipleBags {
                    edge: Edge::new(u, v),
                    count,
                });
            }
        }
    }

    let mut bags: Vec<Bag> = clique_bags
        .into_iter()
        .map(|vs| Bag {
            vertices: vs.into_iter().collect(),
            origin: BagOrigin::MaximalClique,
        })
        .collect();

    for &v in active {
        match active_degree.get(&v).copied().unwrap_or(0) {
            0 => {
                if !lone_singletons {
                    return Err(StructureError::IsolatedVertex(v));
                }
                bags.push(Bag {
                    vertices: [v].into_iter().collect(),
                    origin: BagOrigin::SimplifiedSingleton,
                });
            }
            _ => match per_vertex.get(&v).copied().unwrap_or(0) {
                1 => {
                    // In exactly one maximal clique: v is simplified and
                    // additionally forms the bag {v}.
                    bags.push(Bag {
                        vertices: [v].into_iter().collect(),
                        origin: BagOrigin::SimplifiedSingleton,
                    });
                }
                2 => {}
                count => {
                    return Err(StructureError::VertexBagCount { vertex: v, count });
                }
            },
        }
    }

    bags.sort_by(|a, b| {
        let ka = (
            matches!(a.origin, BagOrigin::SimplifiedSingleton),
            &a.vertices,
        );
        let kb = (
            matches!(b.origin, BagOrigin::SimplifiedSingleton),
            &b.vertices,
        );
        ka.cmp(&kb)
    });
    Ok(BagSet::from_bags(bags))
}

/// A violated structural condition; data, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ForeignVertex {
        bag: usize,
        vertex: VertexId,
    },
    NotAClique {
        bag: usize,
        missing: Edge,
    },
    NotMaximal {
        bag: usize,
        extendable_by: VertexId,
    },
    SingletonNotSimplified {
        bag: usize,
        vertex: VertexId,
        missing: Edge,
    },
    /// Condition 1: a non-isolated vertex must lie in exactly two bags.
    WrongBagCount {
        vertex: VertexId,
        count: usize,
    },
    /// Condition 2: an edge must lie in exactly one bag.
    EdgeCoverage {
        edge: Edge,
        count: usize,
    },
    /// Condition 3: two bags share at most one vertex.
    SharedVertices {
        bag1: usize,
        bag2: usize,
        shared: Vec<VertexId>,
    },
    /// Condition 4: no edges between the remainders of bags sharing `via`.
    CrossEdge {
        bag1: usize,
        bag2: usize,
        via: VertexId,
        edge: Edge,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ForeignVertex { bag, vertex } => {
                write!(f, "bag {bag} names vertex {vertex} outside the graph")
            }
            Violation::NotAClique { bag, missing } => {
                write!(f, "bag {bag} is not a clique: pair {missing} not adjacent")
            }
            Violation::NotMaximal { bag, extendable_by } => {
                write!(f, "bag {bag} is not maximal: vertex {extendable_by} extends it")
            }
            Violation::SingletonNotSimplified { bag, vertex, missing } => write!(
                f,
                "singleton bag {bag} on vertex {vertex} is not simplified: neighbors {missing} not adjacent"
            ),
            Violation::WrongBagCount { vertex, count } => write!(
                f,
                "condition 1: vertex {vertex} lies in {count} bags instead of two"
            ),
            Violation::EdgeCoverage { edge, count } => write!(
                f,
                "condition 2: edge {edge} lies in {count} bags instead of one"
            ),
            Violation::SharedVertices { bag1, bag2, shared } => write!(
                f,
                "condition 3: bags {bag1} and {bag2} share {} vertices",
                shared.len()
            ),
            Violation::CrossEdge { bag1, bag2, via, edge } => write!(
                f,
                "condition 4: bags {bag1} and {bag2} share {via} but edge {edge} joins their remainders"
            ),
        }
    }
}

/// Checks bag shapes and the four structural conditions; an empty result
/// means the decomposition is valid for `h`.
pub fn validate_bag_structure(h: &Graph, bs: &BagSet) -> Vec<Violation> {
    let mut out = Vec::new();
    let n = h.vertex_count();

    for (i, bag) in bs.bags.iter().enumerate() {
        let mut foreign = false;
        for &v in &bag.vertices {
            if v >= n {
                out.push(Violation::ForeignVertex { bag: i, vertex: v });
                foreign = true;
            }
        }
        if foreign {
            continue;
        }
        match bag.origin {
            BagOrigin::MaximalClique => {
                let vs: Vec<VertexId> = bag.vertices.iter().copied().collect();
                let mut clique = true;
                'pairs: for (a_i, &a) in vs.iter().enumerate() {
                    for &b in &vs[a_i + 1..] {
                        if !h.has_edge(a, b) {
                            out.push(Violation::NotAClique {
                                bag: i,
                                missing: Edge::new(a, b),
                            });
                            clique = false;
                            break 'pairs;
                        }
                    }
                }
                if clique {
                    if let Some(z) = h
                        .vertices()
                        .find(|&z| !bag.contains(z) && vs.iter().all(|&v| h.has_edge(z, v)))
                    {
                        out.push(Violation::NotMaximal {
                            bag: i,
                            extendable_by: z,
                        });
                    }
                }
            }
            BagOrigin::SimplifiedSingleton => {
                if bag.len() == 1 {
                    let v = *bag.vertices.iter().next().unwrap();
                    let ns = h.neighbors(v);
                    'nbrs: for (a_i, &a) in ns.iter().enumerate() {
                        for &b in &ns[a_i + 1..] {
                            if !h.has_edge(a, b) {
                                out.push(Violation::SingletonNotSimplified {
                                    bag: i,
                                    vertex: v,
                                    missing: Edge::new(a, b),
                                });
                                break 'nbrs;
                            }
                        }
                    }
                }
            }
        }
    }

    // Condition 1, for non-isolated vertices.
    for v in h.vertices() {
        if h.degree(v) == 0 {
            continue;
        }
        let count = bs.bags_of(v).len();
        if count != 2 {
            out.push(Violation::WrongBagCount { vertex: v, count });
        }
    }

    // Condition 2.
    for e in h.edges() {
        let (u, v) = e.endpoints();
        let count = bs
            .bags
            .iter()
            .filter(|b| b.contains(u) && b.contains(v))
            .count();
        if count != 1 {
            out.push(Violation::EdgeCoverage { edge: e, count });
        }
    }

    // Conditions 3 and 4.
    for i in 0..bs.bags.len() {
        for j in (i + 1)..bs.bags.len() {
            let shared: Vec<VertexId> = bs.bags[i]
                .vertices
                .intersection(&bs.bags[j].vertices)
                .copied()
                .collect();
            if shared.len() > 1 {
                out.push(Violation::SharedVertices {
                    bag1: i,
                    bag2: j,
                    shared,
                });
            } else if shared.len() == 1 {
                let via = shared[0];
                'cross: for &a in &bs.bags[i].vertices {
                    if a == via || a >= n {
                        continue;
                    }
                    for &b in &bs.bags[j].vertices {
                        if b == via || b >= n || a == b {
                            continue;
                        }
                        if h.has_edge(a, b) {
                            out.push(Violation::CrossEdge {
                                bag1: i,
                                bag2: j,
                                via,
                                edge: Edge::new(a, b),
                            });
                            break 'cross;
                        }
                    }
                }
            }
        }
    }

    out
}

// ---------------------------------------------------------------------------
// Classification relative to a modular
// ---------------------------------------------------------------------------

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BagRole {
    Attached,
    Border,
    Outlier,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SizeClass {
    Small,
    Big,
}

/// A bag of G−X with its attachment set A(B), role and size class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BagInfo {
    pub bag_index: usize,
    pub attachment: BTreeSet<VertexId>,
    pub role: BagRole,
    pub size_class: SizeClass,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("bag {bag} contains vertex {vertex}, which lies in the modular or outside the graph")]
    InconsistentBagSet { bag: usize, vertex: VertexId },
}

/// Classifies the bags of G−X relative to the modular `x` and budget `k`.
///
/// A bag B is attached to x' when either |B| ≥ 2 and x' is adjacent to all
/// of B, or B = {v}, x'v is an edge and x' is not adjacent to every vertex
/// of v's other bag. A lone singleton (v isolated in G−X) has no other bag;
/// its x'-edge is then uncovered and {v} counts as attached to x'.
/// Unattached bags sharing a vertex with an attached bag are border bags,
/// the remaining unattached bags outliers. Small means fewer than 2k+2
/// vertices.
pub fn classify_bags(
    g: &Graph,
    x: &BTreeSet<VertexId>,
    bs: &BagSet,
    k: usize,
) -> Result<Vec<BagInfo>, ClassifyError> {
    let n = g.vertex_count();
    for (i, bag) in bs.bags.iter().enumerate() {
        for &v in &bag.vertices {
            if v >= n || x.contains(&v) {
                return Err(ClassifyError::InconsistentBagSet { bag: i, vertex: v });
            }
        }
    }

    let small_threshold = 2 * k + 2;
    let mut infos: Vec<BagInfo> = Vec::with_capacity(bs.bags.len());

    for (i, bag) in bs.bags.iter().enumerate() {
        let mut attachment = BTreeSet::new();
        if bag.len() >= 2 {
            for &xv in x {
                if bag.vertices.iter().all(|&b| g.has_edge(xv, b)) {
                    attachment.insert(xv);
                }
            }
        } else {
            let v = *bag.vertices.iter().next().expect("singleton bag");
            let other = bs.bags_of(v).iter().copied().find(|&j| j != i);
            for &xv in x {
                if !g.has_edge(xv, v) {
                    continue;
                }
                let covered_by_other = match other {
                    Some(j) => bs.bags[j].vertices.iter().all(|&b| g.has_edge(xv, b)),
                    None => false,
                };
                if !covered_by_other {
                    attachment.insert(xv);
                }
            }
        }
        let size_class = if bag.len() < small_threshold {
            SizeClass::Small
        } else {
            SizeClass::Big
        };
        infos.push(BagInfo {
            bag_index: i,
            attachment,
            role: BagRole::Outlier,
            size_class,
        });
    }

    let attached: Vec<usize> = infos
        .iter()
        .filter(|info| !info.attachment.is_empty())
        .map(|info| info.bag_index)
        .collect();
    let attached_vertices: BTreeSet<VertexId> = attached
        .iter()
        .flat_map(|&i| bs.bags[i].vertices.iter().copied())
        .collect();

    for info in &mut infos {
        if !info.attachment.is_empty() {
            info.role = BagRole::Attached;
        } else if bs.bags[info.bag_index]
            .vertices
            .iter()
            .any(|v| attached_vertices.contains(v))
        {
            info.role = BagRole::Border;
        }
    }

    Ok(infos)
}

/// Attachment sanity checks used by tests and the kernelizer:
/// for every covered vertex v adjacent to some x', exactly one of v's bags
/// is attached to x'; at most two bags are attached to any single x'; and
/// an x' adjacent to two vertices of a bag must appear in that bag's
/// attachment set. Violations indicate a stale or invalid modular.
pub fn attachment_anomalies(
    g: &Graph,
    x: &BTreeSet<VertexId>,
    bs: &BagSet,
    infos: &[BagInfo],
) -> Vec<String> {
    let mut out = Vec::new();

    for v in bs.covered_vertices() {
        for &xv in x {
            if !g.has_edge(xv, v) {
                continue;
            }
            let count = bs
                .bags_of(v)
                .iter()
                .filter(|&&i| infos[i].attachment.contains(&xv))
                .count();
            if count != 1 {
                out.push(format!(
                    "vertex {v} adjacent to modular vertex {xv} has {count} attached bags instead of one"
                ));
            }
        }
    }

    for &xv in x {
        let count = infos
            .iter()
            .filter(|info| info.attachment.contains(&xv))
            .count();
        if count > 2 {
            out.push(format!(
                "modular vertex {xv} has {count} attached bags, more than two"
            ));
        }
    }

    for info in infos {
        let bag = &bs.bags[info.bag_index];
        for &xv in x {
            let hits = bag.vertices.iter().filter(|&&v| g.has_edge(xv, v)).count();
            if hits >= 2 && !info.attachment.contains(&xv) {
                out.push(format!(
                    "modular vertex {xv} touches {hits} vertices of bag {} without attachment",
                    info.bag_index
                ));
            }
        }
    }

    out
}
