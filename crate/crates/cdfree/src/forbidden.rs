//! Detection of induced claws and diamonds, and the greedy edge-disjoint
//! packing whose vertex set is the modular used by the kernelizer.

use std::collections::BTreeSet;

use crate::graph::{Edge, EdgeSet, Graph, VertexId};

/// A located induced claw or diamond with role-labeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenSubgraph {
    /// Center adjacent to three pairwise non-adjacent leaves.
    Claw {
        center: VertexId,
        leaves: [VertexId; 3],
    },
    /// `chord` holds the two degree-3 vertices (the chord endpoints),
    /// `sides` the two non-adjacent degree-2 vertices.
    Diamond {
        chord: (VertexId, VertexId),
        sides: (VertexId, VertexId),
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Claw,
    Diamond,
}

impl ForbiddenSubgraph {
    pub fn kind(&self) -> Kind {
        match self {
            ForbiddenSubgraph::Claw { .. } => Kind::Claw,
            ForbiddenSubgraph::Diamond { .. } => Kind::Diamond,
        }
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        match *self {
            ForbiddenSubgraph::Claw { center, leaves } => {
                vec![center, leaves[0], leaves[1], leaves[2]]
            }
            ForbiddenSubgraph::Diamond { chord, sides } => {
                vec![chord.0, chord.1, sides.0, sides.1]
            }
        }
    }

    /// The member's own edges: 3 for a claw, 5 for a diamond.
    pub fn edge_list(&self) -> Vec<Edge> {
        match *self {
            ForbiddenSubgraph::Claw { center, leaves } => {
                leaves.iter().map(|&l| Edge::new(center, l)).collect()
            }
            ForbiddenSubgraph::Diamond { chord, sides } => {
                let (a, c) = chord;
                let (b, d) = sides;
                vec![
                    Edge::new(a, b),
                    Edge::new(a, d),
                    Edge::new(c, b),
                    Edge::new(c, d),
                    Edge::new(a, c),
                ]
            }
        }
    }
}

fn allows(allowed: Option<&EdgeSet>, e: Edge) -> bool {
    allowed.is_none_or(|set| set.contains(&e))
}

/// Finds the lexicographically first induced claw, optionally restricted to
/// claws whose three edges all lie in `allowed`.
///
/// Witness order: ascending center, then ascending leaf triple.
pub fn find_claw(g: &Graph, allowed: Option<&EdgeSet>) -> Option<ForbiddenSubgraph> {
    for center in g.vertices() {
        let ns = g.neighbors(center);
        if ns.len() < 3 {
            continue;
        }
        let ok: Vec<VertexId> = ns
            .iter()
            .copied()
            .filter(|&l| allows(allowed, Edge::new(center, l)))
            .collect();
        for i in 0..ok.len() {
            for j in (i + 1)..ok.len() {
                if g.has_edge(ok[i], ok[j]) {
                    continue;
                }
                for k in (j + 1)..ok.len() {
                    if g.has_edge(ok[i], ok[k]) || g.has_edge(ok[j], ok[k]) {
                        continue;
                    }
                    return Some(ForbiddenSubgraph::Claw {
                        center,
                        leaves: [ok[i], ok[j], ok[k]],
                    });
                }
            }
        }
    }
    None
}

/// Finds the lexicographically first induced diamond, optionally restricted
/// to diamonds whose five edges all lie in `allowed`.
///
/// Witness order: ascending chord edge, then ascending side pair. Each
/// diamond has a unique chord (its degree-3 pair), so the traversal sees
/// every diamond exactly once.
pub fn find_diamond(g: &Graph, allowed: Option<&EdgeSet>) -> Option<ForbiddenSubgraph> {
    for a in g.vertices() {
        for &c in g.neighbors(a) {
            if c <= a || !allows(allowed, Edge::new(a, c)) {
                continue;
            }
            let common = g.common_neighbors(a, c).expect("vertices in range");
            for (i, &b) in common.iter().enumerate() {
                if !allows(allowed, Edge::new(a, b)) || !allows(allowed, Edge::new(c, b)) {
                    continue;
                }
                for &d in &common[i + 1..] {
                    if g.has_edge(b, d) {
                        continue;
                    }
                    if allows(allowed, Edge::new(a, d)) && allows(allowed, Edge::new(c, d)) {
                        return Some(ForbiddenSubgraph::Diamond {
                            chord: (a, c),
                            sides: (b, d),
                        });
                    }
                }
            }
        }
    }
    None
}

/// True iff the graph contains no induced claw and no induced diamond.
pub fn is_cd_free(g: &Graph) -> bool {
    find_claw(g, None).is_none() && find_diamond(g, None).is_none()
}

/// A witness forbidden subgraph, if any exists.
pub fn cd_witness(g: &Graph) -> Option<ForbiddenSubgraph> {
    find_claw(g, None).or_else(|| find_diamond(g, None))
}

/// A maximal edge-disjoint packing of induced claws and diamonds, plus its
/// vertex set `modular`. The complement of the modular induces a
/// {claw, diamond}-free graph.
#[derive(Clone, Debug)]
pub struct Packing {
    pub members: Vec<ForbiddenSubgraph>,
    pub modular: BTreeSet<VertexId>,
}

/// Greedily packs edge-disjoint forbidden subgraphs until none remains on
/// unused edges. Diamonds are tried before claws each round; candidates are
/// scanned in lexicographic order, so the result is deterministic.
pub fn greedy_packing(g: &Graph) -> Packing {
    let mut unused = g.edge_set();
    let mut members = Vec::new();
    loop {
        let next = find_diamond(g, Some(&unused)).or_else(|| find_claw(g, Some(&unused)));
        let Some(member) = next else { break };
        for e in member.edge_list() {
            let was_unused = unused.remove(&e);
            debug_assert!(was_unused, "member reused edge {e}");
        }
        members.push(member);
    }
    let modular = members.iter().flat_map(|m| m.vertices()).collect();
    Packing { members, modular }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_set;
    use crate::samples;
    use proptest::prelude::*;

    /// Independent 4-subset enumeration used to cross-check the detectors.
    fn brute_has_claw(g: &Graph) -> bool {
        let n = g.vertex_count();
        for c in 0..n {
            for x in 0..n {
                for y in (x + 1)..n {
                    for z in (y + 1)..n {
                        if x == c || y == c || z == c {
                            continue;
                        }
                        if g.has_edge(c, x)
                            && g.has_edge(c, y)
                            && g.has_edge(c, z)
                            && !g.has_edge(x, y)
                            && !g.has_edge(x, z)
                            && !g.has_edge(y, z)
                        {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    fn brute_has_diamond(g: &Graph) -> bool {
        let n = g.vertex_count();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let vs = [a, b, c, d];
                        let mut count = 0;
                        for i in 0..4 {
                            for j in (i + 1)..4 {
                                if g.has_edge(vs[i], vs[j]) {
                                    count += 1;
                                }
                            }
                        }
                        if count == 5 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn claw_examples() {
        let claw = samples::claw();
        assert_eq!(
            find_claw(&claw, None),
            Some(ForbiddenSubgraph::Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert_eq!(find_claw(&samples::complete(4), None), None);

        // Every vertex of the Petersen graph centers a claw; cross-check
        // against the brute-force enumerator.
        let p = samples::petersen();
        assert!(brute_has_claw(&p));
        let found = find_claw(&p, None).expect("petersen has claws");
        let ForbiddenSubgraph::Claw { center, leaves } = found else {
            panic!("expected claw");
        };
        for l in leaves {
            assert!(p.has_edge(center, l));
        }
        assert!(!p.has_edge(leaves[0], leaves[1]));
        assert!(!p.has_edge(leaves[0], leaves[2]));
        assert!(!p.has_edge(leaves[1], leaves[2]));
    }

    #[test]
    fn diamond_examples() {
        let d = samples::diamond();
        assert_eq!(
            find_diamond(&d, None),
            Some(ForbiddenSubgraph::Diamond {
                chord: (0, 2),
                sides: (1, 3)
            })
        );
        assert_eq!(find_diamond(&samples::complete(4), None), None);

        // K5 minus 3-4: the missing pair becomes the side pair.
        let k5e = samples::complete(5)
            .delete_edges(&edge_set(&[(3, 4)]))
            .unwrap();
        assert!(brute_has_diamond(&k5e));
        let found = find_diamond(&k5e, None).expect("diamond exists");
        let ForbiddenSubgraph::Diamond { chord, sides } = found else {
            panic!("expected diamond");
        };
        assert_eq!(sides, (3, 4));
        assert!(k5e.has_edge(chord.0, chord.1));
    }

    #[test]
    fn diamond_roles_have_right_degrees() {
        let k5e = samples::complete(5)
            .delete_edges(&edge_set(&[(1, 4)]))
            .unwrap();
        let Some(fs) = find_diamond(&k5e, None) else {
            panic!("diamond expected");
        };
        let member: BTreeSet<VertexId> = fs.vertices().into_iter().collect();
        let (sub, map) = k5e.induced_subgraph(&member).unwrap();
        let ForbiddenSubgraph::Diamond { chord, sides } = fs else {
            unreachable!()
        };
        let deg_of = |orig: VertexId| {
            let local = map.iter().position(|&m| m == orig).unwrap();
            sub.degree(local)
        };
        assert_eq!(deg_of(chord.0), 3);
        assert_eq!(deg_of(chord.1), 3);
        assert_eq!(deg_of(sides.0), 2);
        assert_eq!(deg_of(sides.1), 2);
    }

    #[test]
    fn cd_free_examples() {
        assert!(is_cd_free(&samples::cycle(5)));
        assert!(is_cd_free(&samples::bowtie()));
        assert!(!brute_has_claw(&samples::bowtie()));
        assert!(!brute_has_diamond(&samples::bowtie()));

        let claw = samples::claw();
        assert!(!is_cd_free(&claw));
        assert_eq!(cd_witness(&claw).map(|w| w.kind()), Some(Kind::Claw));
    }

    #[test]
    fn allowed_edges_restrict_witnesses() {
        let claw = samples::claw();
        // Exclude one claw edge; no claw fits inside the remaining two.
        let allowed = edge_set(&[(0, 1), (0, 2)]);
        assert_eq!(find_claw(&claw, Some(&allowed)), None);

        let d = samples::diamond();
        let mut allowed = d.edge_set();
        allowed.remove(&Edge::new(0, 2));
        assert_eq!(find_diamond(&d, Some(&allowed)), None);
    }

    #[test]
    fn packing_examples() {
        let c5 = samples::cycle(5);
        let p = greedy_packing(&c5);
        assert!(p.members.is_empty());
        assert!(p.modular.is_empty());

        let d = samples::diamond();
        let p = greedy_packing(&d);
        assert_eq!(p.members.len(), 1);
        assert_eq!(p.modular.len(), 4);

        let two_claws = samples::disjoint_union(&samples::claw(), &samples::claw());
        let p = greedy_packing(&two_claws);
        assert_eq!(p.members.len(), 2);
        assert_eq!(p.modular.len(), 8);
    }

    fn check_packing_invariants(g: &Graph) {
        let p = greedy_packing(g);
        // Members pairwise edge-disjoint.
        let mut seen = EdgeSet::new();
        for m in &p.members {
            for e in m.edge_list() {
                assert!(g.has_edge(e.endpoints().0, e.endpoints().1));
                assert!(seen.insert(e), "edge {e} reused across members");
            }
        }
        // Modular covers exactly the member vertices.
        let union: BTreeSet<VertexId> = p.members.iter().flat_map(|m| m.vertices()).collect();
        assert_eq!(p.modular, union);
        // Maximality: the complement is cd-free.
        let rest: BTreeSet<VertexId> = g.vertices().filter(|v| !p.modular.contains(v)).collect();
        let (sub, _) = g.induced_subgraph(&rest).unwrap();
        assert!(is_cd_free(&sub));
    }

    #[test]
    fn packing_invariants_on_samples() {
        for g in [
            samples::claw(),
            samples::diamond(),
            samples::petersen(),
            samples::complete(6),
            samples::bowtie(),
            samples::disjoint_union(&samples::diamond(), &samples::cycle(3)),
        ] {
            check_packing_invariants(&g);
        }
    }

    /// Exhaustive detection check on every graph with up to 5 vertices.
    #[test]
    fn detectors_match_brute_force_exhaustively() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let chosen: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p)
                    .collect();
                let g = Graph::from_edges(n, &chosen).unwrap();
                assert_eq!(find_claw(&g, None).is_some(), brute_has_claw(&g));
                assert_eq!(find_diamond(&g, None).is_some(), brute_has_diamond(&g));
            }
        }
    }

    fn arb_graph(n_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
        n_range.prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let len = pairs.len();
            proptest::collection::vec(proptest::bool::ANY, len).prop_map(move |mask| {
                let chosen: Vec<(usize, usize)> = pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &keep)| keep)
                    .map(|(&p, _)| p)
                    .collect();
                Graph::from_edges(n, &chosen).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn detectors_match_brute_force_random(g in arb_graph(6..=8)) {
            prop_assert_eq!(find_claw(&g, None).is_some(), brute_has_claw(&g));
            prop_assert_eq!(find_diamond(&g, None).is_some(), brute_has_diamond(&g));
        }

        #[test]
        fn packing_invariants_random(g in arb_graph(4..=8)) {
            check_packing_invariants(&g);
        }
    }
}
