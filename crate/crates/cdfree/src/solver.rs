//! Bounded search tree for the edge-deletion decision problem.
//!
//! Claws are branched first, three ways, one edge each. With no claw
//! present, a located diamond falls into one of four configurations:
//! an isolated component (forced chord deletion, no branching), twin chord
//! endpoints (three single-edge branches), or a witness vertex adjacent to
//! one chord endpoint and one or both of the side vertices (six branches
//! with vector <1,1,1,2,2,2>, or the fourteen two-edge branches from the
//! five-vertex gadget table). A witness on the other chord endpoint is the
//! mirrored configuration and is handled by swapping the chord roles.

use std::collections::BTreeSet;

use crate::forbidden::{find_claw, find_diamond, is_cd_free, ForbiddenSubgraph};
use crate::graph::{Edge, EdgeSet, Graph, VertexId};
use crate::kernel::{kernelize, Instance, KernelAudit, KernelError, KernelOutcome};
use crate::oracle::GadgetEdge;
use thiserror::Error;

/// The fourteen two-edge deletions that clean the five-vertex gadget,
/// frozen from the derivation in [`crate::oracle::derive_gadget_pairs`];
/// a test regenerates the table and compares. Labels: a, c are the chord
/// endpoints, b, d the side vertices, t the witness.
pub const GADGET_BRANCH_PAIRS: [(GadgetEdge, GadgetEdge); 14] = [
    (GadgetEdge::AB, GadgetEdge::AC),
    (GadgetEdge::AB, GadgetEdge::CD),
    (GadgetEdge::AB, GadgetEdge::AT),
    (GadgetEdge::AB, GadgetEdge::DT),
    (GadgetEdge::AD, GadgetEdge::AC),
    (GadgetEdge::AD, GadgetEdge::CB),
    (GadgetEdge::AD, GadgetEdge::AT),
    (GadgetEdge::AD, GadgetEdge::BT),
    (GadgetEdge::AC, GadgetEdge::BT),
    (GadgetEdge::AC, GadgetEdge::DT),
    (GadgetEdge::CB, GadgetEdge::AT),
    (GadgetEdge::CB, GadgetEdge::DT),
    (GadgetEdge::CD, GadgetEdge::AT),
    (GadgetEdge::CD, GadgetEdge::BT),
];

/// Which configuration a located diamond is in, given a claw-free host.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DiamondCase {
    /// No diamond vertex has neighbors outside the diamond.
    Isolated,
    /// The chord endpoints are twins (equal neighborhoods besides each
    /// other).
    Twins,
    /// The witness is adjacent to exactly one side vertex.
    OneSide,
    /// The witness is adjacent to both side vertices.
    BothSides,
}

/// A diamond with roles normalized for branching: the witness (if any) is
/// adjacent to chord endpoint `a`, and in the one-side case the side
/// vertex `b` is the one the witness touches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedDiamond {
    pub case: DiamondCase,
    /// `[a, b, c, d]`: chord (a, c), non-adjacent sides (b, d).
    pub labels: [VertexId; 4],
    pub witness: Option<VertexId>,
    /// True when the chord roles were swapped to move the witness onto `a`.
    pub mirrored: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CaseError {
    #[error("subgraph is not a diamond of the host graph")]
    NotADiamond,
    #[error("host graph has an induced claw; diamonds are classified only on claw-free graphs")]
    ClawPresent,
}

/// Branch labels for statistics and traces.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    Claw,
    DiamondIsolated,
    DiamondTwins,
    DiamondOneSide,
    DiamondBothSides,
    /// Any diamond case reached by swapping the chord roles.
    DiamondMirrored,
}

/// One branching case: delete these edges (one or two) and recurse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchCase {
    pub delete: EdgeSet,
    pub label: CaseLabel,
}

/// Classifies an induced diamond of a claw-free graph and normalizes its
/// roles. The smallest vertex of the neighborhood difference of the chord
/// endpoints serves as the witness, so classification is deterministic.
pub fn classify_diamond_case(
    g: &Graph,
    d: &ForbiddenSubgraph,
) -> Result<ClassifiedDiamond, CaseError> {
    let ForbiddenSubgraph::Diamond { chord, sides } = *d else {
        return Err(CaseError::NotADiamond);
    };
    let (a, c) = chord;
    let (b, dd) = sides;
    let members = [a, b, c, dd];
    for e in d.edge_list() {
        let (u, v) = e.endpoints();
        if !g.has_edge(u, v) {
            return Err(CaseError::NotADiamond);
        }
    }
    if g.has_edge(b, dd) || members.iter().any(|&v| v >= g.vertex_count()) {
        return Err(CaseError::NotADiamond);
    }
    if find_claw(g, None).is_some() {
        return Err(CaseError::ClawPresent);
    }

    if members
        .iter()
        .all(|&v| g.neighbors(v).iter().all(|w| members.contains(w)))
    {
        return Ok(ClassifiedDiamond {
            case: DiamondCase::Isolated,
            labels: [a, b, c, dd],
            witness: None,
            mirrored: false,
        });
    }

    let beside = |u: VertexId, other: VertexId| -> BTreeSet<VertexId> {
        g.neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != other)
            .collect()
    };
    let na = beside(a, c);
    let nc = beside(c, a);
    if na == nc {
        return Ok(ClassifiedDiamond {
            case: DiamondCase::Twins,
            labels: [a, b, c, dd],
            witness: None,
            mirrored: false,
        });
    }

    let t = *na
        .symmetric_difference(&nc)
        .next()
        .expect("difference is non-empty when not twins");
    debug_assert!(
        t != b && t != dd,
        "side vertices are adjacent to both chord ends"
    );
    let mirrored = !na.contains(&t);
    let (a, c) = if mirrored { (c, a) } else { (a, c) };
    // Claw-freeness forces the witness onto at least one side vertex:
    // otherwise a, t and the two sides would induce a claw centered at a.
    let hits_b = g.has_edge(t, b);
    let hits_d = g.has_edge(t, dd);
    debug_assert!(hits_b || hits_d);
    let (case, b, dd) = match (hits_b, hits_d) {
        (true, true) => (DiamondCase::BothSides, b, dd),
        (true, false) => (DiamondCase::OneSide, b, dd),
        (false, true) => (DiamondCase::OneSide, dd, b),
        (false, false) => unreachable!("claw-free host guarantees a side hit"),
    };
    Ok(ClassifiedDiamond {
        case,
        labels: [a, b, c, dd],
        witness: Some(t),
        mirrored,
    })
}

/// Expands a classified diamond into its branching cases, in the fixed
/// deterministic order the search explores them.
pub fn branch_cases(cd: &ClassifiedDiamond) -> Vec<BranchCase> {
    let [a, b, c, d] = cd.labels;
    let label = |plain: CaseLabel| {
        if cd.mirrored {
            CaseLabel::DiamondMirrored
        } else {
            plain
        }
    };
    let single = |e: Edge, l: CaseLabel| BranchCase {
        delete: [e].into_iter().collect(),
        label: l,
    };
    match cd.case {
        DiamondCase::Isolated => {
            vec![single(Edge::new(a, c), CaseLabel::DiamondIsolated)]
        }
        DiamondCase::Twins => {
            let l = label(CaseLabel::DiamondTwins);
            vec![
                single(Edge::new(a, d), l),
                single(Edge::new(a, c), l),
                single(Edge::new(a, b), l),
            ]
        }
        DiamondCase::OneSide => {
            let t = cd.witness.expect("witness present");
            let l = label(CaseLabel::DiamondOneSide);
            let pair = |e1: Edge, e2: Edge| BranchCase {
                delete: [e1, e2].into_iter().collect(),
                label: l,
            };
            vec![
                single(Edge::new(a, b), l),
                single(Edge::new(b, c), l),
                single(Edge::new(a, c), l),
                pair(Edge::new(a, d), Edge::new(a, t)),
                pair(Edge::new(a, d), Edge::new(b, t)),
                pair(Edge::new(c, d), Edge::new(a, t)),
            ]
        }
        DiamondCase::BothSides => {
            let t = cd.witness.expect("witness present");
            let l = label(CaseLabel::DiamondBothSides);
            GADGET_BRANCH_PAIRS
                .iter()
                .map(|&(e1, e2)| BranchCase {
                    delete: [e1.concrete([a, b, c, d, t]), e2.concrete([a, b, c, d, t])]
                        .into_iter()
                        .collect(),
                    label: l,
                })
                .collect()
        }
    }
}

/// Search counters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub max_depth: usize,
}

/// A certified YES answer: deleting `deleted` from the solved graph leaves
/// it {claw, diamond}-free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub deleted: EdgeSet,
    pub stats: SearchStats,
}

/// Result of a full solve run, including what was actually searched.
/// With kernelization enabled the certificate applies to the kernelized
/// instance (kernelization preserves answers, not edge sets).
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub solution: Option<Solution>,
    /// The instance the search ran on: the input, or its kernel.
    pub solved: Instance,
    pub audit: Option<KernelAudit>,
    /// The kernelizer already proved the answer NO.
    pub trivial_no: bool,
}

fn search(
    g: &Graph,
    k: usize,
    map: &[VertexId],
    depth: usize,
    stats: &mut SearchStats,
) -> Option<EdgeSet> {
    stats.nodes_expanded += 1;
    stats.max_depth = stats.max_depth.max(depth);

    let original = |e: Edge| {
        let (u, v) = e.endpoints();
        Edge::new(map[u], map[v])
    };

    if let Some(claw) = find_claw(g, None) {
        if k == 0 {
            return None;
        }
        for edge in claw.edge_list() {
            let doomed: EdgeSet = [edge].into_iter().collect();
            let child = g.delete_edges(&doomed).expect("claw edge present");
            if let Some(mut sol) = search(&child, k - 1, map, depth + 1, stats) {
                sol.insert(original(edge));
                return Some(sol);
            }
        }
        return None;
    }

    let Some(diamond) = find_diamond(g, None) else {
        return Some(EdgeSet::new());
    };
    if k == 0 {
        return None;
    }
    let cd = classify_diamond_case(g, &diamond).expect("claw-free node with a located diamond");

    if cd.case == DiamondCase::Isolated {
        // Forced chord deletion; the leftover 4-cycle is a clean component
        // no other structure can touch, so drop it from the working graph.
        let chord = Edge::new(cd.labels[0], cd.labels[2]);
        let doomed: EdgeSet = [chord].into_iter().collect();
        let child = g.delete_edges(&doomed).expect("chord present");
        let keep: BTreeSet<VertexId> = child
            .vertices()
            .filter(|v| !cd.labels.contains(v))
            .collect();
        let (sub, submap) = child.induced_subgraph(&keep).expect("vertices of child");
        let lifted: Vec<VertexId> = submap.iter().map(|&i| map[i]).collect();
        let mut sol = search(&sub, k - 1, &lifted, depth + 1, stats)?;
        sol.insert(original(chord));
        return Some(sol);
    }

    for case in branch_cases(&cd) {
        if case.delete.len() > k {
            continue;
        }
        let child = g.delete_edges(&case.delete).expect("branch edges present");
        if let Some(mut sol) = search(&child, k - case.delete.len(), map, depth + 1, stats) {
            for e in &case.delete {
                sol.insert(original(*e));
            }
            return Some(sol);
        }
    }
    None
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Decides whether at most k deletions suffice, optionally kernelizing
/// first, and reports what was solved.
pub fn solve_with_options(inst: &Instance, use_kernel: bool) -> Result<SolveOutcome, SolveError> {
    let (solved, audit) = if use_kernel {
        match kernelize(inst.clone())? {
            KernelOutcome::TrivialNo { instance } => {
                return Ok(SolveOutcome {
                    solution: None,
                    solved: instance,
                    audit: None,
                    trivial_no: true,
                });
            }
            KernelOutcome::Reduced { instance, audit } => (instance, Some(audit)),
        }
    } else {
        (inst.clone(), None)
    };

    let mut stats = SearchStats::default();
    let map: Vec<VertexId> = solved.graph.vertices().collect();
    let found = search(&solved.graph, solved.k, &map, 0, &mut stats);
    let solution = found.map(|deleted| {
        assert!(deleted.len() <= solved.k, "witness exceeds the budget");
        let cleaned = solved
            .graph
            .delete_edges(&deleted)
            .expect("witness edges belong to the solved graph");
        assert!(is_cd_free(&cleaned), "witness fails to clean the graph");
        Solution { deleted, stats }
    });
    Ok(SolveOutcome {
        solution,
        solved,
        audit,
        trivial_no: false,
    })
}

/// Decision interface: a certified solution if one of size at most k
/// exists. With kernelization the certificate applies to the kernel.
pub fn solve_decision(inst: &Instance, use_kernel: bool) -> Result<Option<Solution>, SolveError> {
    Ok(solve_with_options(inst, use_kernel)?.solution)
}

/// Iterative deepening: the smallest budget up to `k_max` with a YES
/// answer, plus its certificate.
pub fn solve_min(
    g: &Graph,
    k_max: usize,
    use_kernel: bool,
) -> Result<Option<(usize, Solution)>, SolveError> {
    for k in 0..=k_max {
        if let Some(sol) = solve_decision(&Instance::new(g.clone(), k), use_kernel)? {
            return Ok(Some((k, sol)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_set;
    use crate::oracle::{brute_min_cdh, derive_gadget_pairs};
    use crate::samples;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn frozen_pair_table_matches_the_derivation() {
        let derived = derive_gadget_pairs();
        let frozen: BTreeSet<(GadgetEdge, GadgetEdge)> = GADGET_BRANCH_PAIRS
            .iter()
            .map(|&(e1, e2)| if e1 <= e2 { (e1, e2) } else { (e2, e1) })
            .collect();
        assert_eq!(frozen.len(), 14, "frozen table has duplicates");
        assert_eq!(frozen, derived.pairs);
    }

    #[test]
    fn classify_isolated_component() {
        let d = samples::diamond();
        let fs = find_diamond(&d, None).unwrap();
        let cd = classify_diamond_case(&d, &fs).unwrap();
        assert_eq!(cd.case, DiamondCase::Isolated);
        assert_eq!(cd.labels, [0, 1, 2, 3]);
        assert!(!cd.mirrored);
        let cases = branch_cases(&cd);
        assert_eq!(cases.len(), 1);
        assert_eq!(cases[0].delete, edge_set(&[(0, 2)]));
        assert_eq!(cases[0].label, CaseLabel::DiamondIsolated);
    }

    #[test]
    fn classify_twins_in_k5_minus_edge() {
        let k5e = samples::complete(5)
            .delete_edges(&edge_set(&[(3, 4)]))
            .unwrap();
        let fs = find_diamond(&k5e, None).unwrap();
        let cd = classify_diamond_case(&k5e, &fs).unwrap();
        assert_eq!(cd.case, DiamondCase::Twins);
        let cases = branch_cases(&cd);
        assert_eq!(cases.len(), 3);
        assert!(cases.iter().all(|c| c.delete.len() == 1));
        let [a, b, c, d] = cd.labels;
        assert_eq!(cases[0].delete, [Edge::new(a, d)].into_iter().collect());
        assert_eq!(cases[1].delete, [Edge::new(a, c)].into_iter().collect());
        assert_eq!(cases[2].delete, [Edge::new(a, b)].into_iter().collect());
    }

    /// Diamond plus a witness adjacent to one chord endpoint and one side.
    fn one_side_gadget() -> Graph {
        let mut edges: Vec<(usize, usize)> =
            samples::diamond().edges().map(|e| e.endpoints()).collect();
        edges.push((0, 4));
        edges.push((1, 4));
        Graph::from_edges(5, &edges).unwrap()
    }

    #[test]
    fn classify_one_side_witness() {
        let g = one_side_gadget();
        let fs = find_diamond(&g, None).unwrap();
        let cd = classify_diamond_case(&g, &fs).unwrap();
        assert_eq!(cd.case, DiamondCase::OneSide);
        // The host holds two diamonds; the detector picks the
        // lexicographically first one, {0,1,2,4} with chord 0-1, whose
        // witness is then vertex 3.
        assert_eq!(cd.labels, [0, 2, 1, 4]);
        assert_eq!(cd.witness, Some(3));
        assert!(!cd.mirrored);

        let [a, b, c, d] = cd.labels;
        let t = cd.witness.unwrap();
        // Role shape: t touches a and b, not c or d.
        assert!(g.has_edge(a, t) && g.has_edge(b, t));
        assert!(!g.has_edge(c, t) && !g.has_edge(d, t));

        let cases = branch_cases(&cd);
        let sizes: Vec<usize> = cases.iter().map(|c| c.delete.len()).collect();
        assert_eq!(sizes, vec![1, 1, 1, 2, 2, 2]);
        let single = |e: Edge| -> EdgeSet { [e].into_iter().collect() };
        let pair = |e1: Edge, e2: Edge| -> EdgeSet { [e1, e2].into_iter().collect() };
        assert_eq!(cases[0].delete, single(Edge::new(a, b)));
        assert_eq!(cases[1].delete, single(Edge::new(b, c)));
        assert_eq!(cases[2].delete, single(Edge::new(a, c)));
        assert_eq!(cases[3].delete, pair(Edge::new(a, d), Edge::new(a, t)));
        assert_eq!(cases[4].delete, pair(Edge::new(a, d), Edge::new(b, t)));
        assert_eq!(cases[5].delete, pair(Edge::new(c, d), Edge::new(a, t)));
        // The discarded fourth pair never appears.
        let discarded = pair(Edge::new(c, d), Edge::new(b, t));
        assert!(cases.iter().all(|case| case.delete != discarded));
    }

    /// Deleting the discarded pair {cd, bt} from the one-side gadget leaves
    /// the claw {a; d, b, t}, which is why that branch is redundant.
    #[test]
    fn discarded_pair_leaves_a_claw_at_a() {
        let g = one_side_gadget();
        let reduced = g.delete_edges(&edge_set(&[(2, 3), (1, 4)])).unwrap();
        // Center a=0 with leaves d=3, b=1, t=4.
        assert!(reduced.has_edge(0, 3) && reduced.has_edge(0, 1) && reduced.has_edge(0, 4));
        assert!(!reduced.has_edge(3, 1) && !reduced.has_edge(3, 4) && !reduced.has_edge(1, 4));
        let witness = find_claw(&reduced, None).expect("claw must remain");
        let ForbiddenSubgraph::Claw { center, .. } = witness else {
            panic!("expected claw");
        };
        assert_eq!(center, 0);
    }

    #[test]
    fn classify_mirrored_witness() {
        // Witness 4 adjacent to chord endpoint 2 and side 1.
        let mut edges: Vec<(usize, usize)> =
            samples::diamond().edges().map(|e| e.endpoints()).collect();
        edges.push((2, 4));
        edges.push((1, 4));
        let g = Graph::from_edges(5, &edges).unwrap();
        let fs = find_diamond(&g, None).unwrap();
        let cd = classify_diamond_case(&g, &fs).unwrap();
        assert!(cd.mirrored);
        assert_eq!(cd.case, DiamondCase::OneSide);
        assert_eq!(cd.labels, [2, 1, 0, 3]);
        assert_eq!(cd.witness, Some(4));
        assert!(branch_cases(&cd)
            .iter()
            .all(|c| c.label == CaseLabel::DiamondMirrored));
    }

    #[test]
    fn classify_both_sides_witness() {
        let mut edges: Vec<(usize, usize)> =
            samples::diamond().edges().map(|e| e.endpoints()).collect();
        edges.push((0, 4));
        edges.push((1, 4));
        edges.push((3, 4));
        let g = Graph::from_edges(5, &edges).unwrap();
        let fs = find_diamond(&g, None).unwrap();
        let cd = classify_diamond_case(&g, &fs).unwrap();
        assert_eq!(cd.case, DiamondCase::BothSides);
        let cases = branch_cases(&cd);
        assert_eq!(cases.len(), 14);
        assert!(cases.iter().all(|c| c.delete.len() == 2));
        // Every branch deletes edges that actually exist.
        for case in &cases {
            for e in &case.delete {
                let (u, v) = e.endpoints();
                assert!(g.has_edge(u, v), "branch deletes absent edge {e}");
            }
        }
    }

    #[test]
    fn classify_contract_errors() {
        let claw_host = samples::disjoint_union(&samples::diamond(), &samples::claw());
        let fs = find_diamond(&claw_host, None).unwrap();
        assert_eq!(
            classify_diamond_case(&claw_host, &fs),
            Err(CaseError::ClawPresent)
        );

        let c5 = samples::cycle(5);
        let fake = ForbiddenSubgraph::Diamond {
            chord: (0, 2),
            sides: (1, 3),
        };
        assert_eq!(
            classify_diamond_case(&c5, &fake),
            Err(CaseError::NotADiamond)
        );
    }

    #[test]
    fn solve_examples() {
        for use_kernel in [false, true] {
            let sol = solve_decision(&Instance::new(samples::diamond(), 1), use_kernel)
                .unwrap()
                .expect("diamond is a YES at k=1");
            assert_eq!(sol.deleted, edge_set(&[(0, 2)]));

            assert!(
                solve_decision(&Instance::new(samples::claw(), 0), use_kernel)
                    .unwrap()
                    .is_none()
            );

            let k5e = samples::complete(5)
                .delete_edges(&edge_set(&[(3, 4)]))
                .unwrap();
            assert!(solve_decision(&Instance::new(k5e.clone(), 1), use_kernel)
                .unwrap()
                .is_none());
            let sol = solve_decision(&Instance::new(k5e.clone(), 2), use_kernel)
                .unwrap()
                .expect("two deletions clean K5 minus an edge");
            assert_eq!(sol.deleted.len(), 2);
        }
    }

    #[test]
    fn solve_min_examples() {
        for use_kernel in [false, true] {
            let (size, sol) = solve_min(&samples::cycle(6), 3, use_kernel)
                .unwrap()
                .expect("cd-free graph");
            assert_eq!(size, 0);
            assert!(sol.deleted.is_empty());

            let (size, sol) = solve_min(&samples::claw(), 3, use_kernel).unwrap().unwrap();
            assert_eq!(size, 1);
            assert_eq!(sol.deleted.len(), 1);

            let k5e = samples::complete(5)
                .delete_edges(&edge_set(&[(3, 4)]))
                .unwrap();
            let (size, _) = solve_min(&k5e, 5, use_kernel).unwrap().unwrap();
            assert_eq!(size, 2);
        }
    }

    #[test]
    fn trivial_no_short_circuits() {
        let outcome = solve_with_options(&Instance::new(samples::claw(), 0), true).unwrap();
        assert!(outcome.trivial_no);
        assert!(outcome.solution.is_none());
    }

    fn random_graph(n: usize, m: usize, seed: u64) -> Graph {
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(m);
        Graph::from_edges(n, &pairs).unwrap()
    }

    #[test]
    fn matches_oracle_on_random_corpus() {
        for seed in 0..60u64 {
            let n = 5 + (seed % 5) as usize;
            let max_m = n * (n - 1) / 2;
            let m = (6 + (seed % 9) as usize).min(max_m);
            let g = random_graph(n, m, seed);
            let oracle_min = brute_min_cdh(&g, 4).unwrap().map(|(s, _)| s);
            for k in 0..=4usize {
                let expected = oracle_min.is_some_and(|s| s <= k);
                for use_kernel in [false, true] {
                    let got = solve_decision(&Instance::new(g.clone(), k), use_kernel).unwrap();
                    assert_eq!(
                        got.is_some(),
                        expected,
                        "seed {seed} k {k} kernel {use_kernel}"
                    );
                    if let Some(sol) = got {
                        assert!(sol.deleted.len() <= k);
                    }
                }
            }
            for use_kernel in [false, true] {
                let got = solve_min(&g, 4, use_kernel).unwrap().map(|(s, _)| s);
                assert_eq!(got, oracle_min, "seed {seed} kernel {use_kernel}");
            }
        }
    }

    /// Classification is total on diamonds of claw-free hosts.
    #[test]
    fn classification_is_exhaustive_on_corpus_diamonds() {
        let mut classified = 0;
        for seed in 0..200u64 {
            let n = 5 + (seed % 5) as usize;
            let max_m = n * (n - 1) / 2;
            let m = (6 + (seed % 9) as usize).min(max_m);
            let g = random_graph(n, m, seed + 1000);
            if find_claw(&g, None).is_some() {
                continue;
            }
            if let Some(fs) = find_diamond(&g, None) {
                let cd = classify_diamond_case(&g, &fs).expect("classification total");
                if cd.witness.is_none() {
                    assert!(matches!(
                        cd.case,
                        DiamondCase::Isolated | DiamondCase::Twins
                    ));
                }
                classified += 1;
            }
        }
        assert!(
            classified > 10,
            "corpus exercised only {classified} diamonds"
        );
    }

    #[test]
    fn stats_count_nodes() {
        let outcome = solve_with_options(&Instance::new(samples::claw(), 1), false).unwrap();
        let sol = outcome.solution.unwrap();
        assert!(sol.stats.nodes_expanded >= 2);
        assert!(sol.stats.max_depth >= 1);
    }

    /// Dense near-complete graphs drive the twin and both-sides paths hard;
    /// the branching answer must still track the oracle exactly.
    #[test]
    fn matches_oracle_on_dense_graphs() {
        let k6_minus_matching = samples::complete(6)
            .delete_edges(&edge_set(&[(0, 1), (2, 3), (4, 5)]))
            .unwrap();
        let k6_minus_path = samples::complete(6)
            .delete_edges(&edge_set(&[(0, 1), (1, 2)]))
            .unwrap();
        let k7_minus_edge = samples::complete(7)
            .delete_edges(&edge_set(&[(5, 6)]))
            .unwrap();
        let dense = [
            ("K6 - matching", k6_minus_matching),
            ("K6 - path", k6_minus_path),
            ("K7 - edge", k7_minus_edge),
            ("petersen", samples::petersen()),
        ];
        for (name, g) in dense {
            let oracle_min = brute_min_cdh(&g, 5).unwrap().map(|(s, _)| s);
            for use_kernel in [false, true] {
                let got = solve_min(&g, 5, use_kernel).unwrap().map(|(s, _)| s);
                assert_eq!(got, oracle_min, "{name} kernel {use_kernel}");
            }
            for k in 0..=5usize {
                let expected = oracle_min.is_some_and(|s| s <= k);
                let got = solve_decision(&Instance::new(g.clone(), k), false).unwrap();
                assert_eq!(got.is_some(), expected, "{name} k {k}");
            }
        }
    }
}
