//! Hand-built kernelization scenarios, one per edge-touching reduction
//! rule. Each is tuned so that exactly its intended rule is the first
//! applicable one; tests and examples replay them.

use crate::graph::Graph;

pub struct RuleScenario {
    pub name: &'static str,
    pub graph: Graph,
    pub k: usize,
    /// The lowest-numbered rule that applies to the instance.
    pub expected_rule: u8,
}

/// Rule 2: a diamond far from a disjoint triangle. The triangle bag has no
/// modular neighbors, so it is an outlier and loses its edges.
pub fn outlier_scenario() -> RuleScenario {
    let graph = Graph::from_edges(
        7,
        &[
            // diamond 0-1-2-3 with chord 0-2
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (2, 3),
            // disjoint triangle
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap();
    RuleScenario {
        name: "outlier-triangle",
        graph,
        k: 1,
        expected_rule: 2,
    }
}

/// Rule 3: a four-clique {4,5,6,7} fully adjacent to the chord endpoint 0
/// is a big attached bag; the triangle {7,8,9} hanging off it is a border
/// bag touching no small attached bag, so its edges go.
pub fn border_scenario() -> RuleScenario {
    let graph = Graph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (2, 3),
            // clique on 4..=7
            (4, 5),
            (4, 6),
            (4, 7),
            (5, 6),
            (5, 7),
            (6, 7),
            // 0 dominates the clique
            (0, 4),
            (0, 5),
            (0, 6),
            (0, 7),
            // border triangle hanging off 7
            (7, 8),
            (7, 9),
            (8, 9),
        ],
    )
    .unwrap();
    RuleScenario {
        name: "border-triangle",
        graph,
        k: 1,
        expected_rule: 3,
    }
}

/// Rule 4: a five-clique {4..=8} attached to 0 reaches the 2k+3 threshold
/// and shares vertices with border bags; the border bag {8,9} also touches
/// the small attached bag {9,10}, which blocks rule 3. One clique vertex is
/// stripped of its clique and attachment edges.
pub fn trim_scenario() -> RuleScenario {
    let graph = Graph::from_edges(
        11,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (2, 3),
            // clique on 4..=8
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 8),
            (5, 6),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 8),
            (7, 8),
            // 0 dominates the clique
            (0, 4),
            (0, 5),
            (0, 6),
            (0, 7),
            (0, 8),
            // border edge off the clique
            (8, 9),
            // small bag {9,10} attached to 1
            (9, 10),
            (1, 9),
            (1, 10),
        ],
    )
    .unwrap();
    RuleScenario {
        name: "trim-attached",
        graph,
        k: 1,
        expected_rule: 4,
    }
}

/// Rule 5: the five-clique {4,6,7,8,9} is a border bag of size 2k+3
/// touching the small attached bag {4,5}; rules 2-4 are all blocked. Its
/// edges are deleted and a fresh replacement clique is grown on vertex 4.
pub fn replace_scenario() -> RuleScenario {
    let graph = Graph::from_edges(
        10,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (2, 3),
            // small attached bag {4,5} attached to 1
            (1, 4),
            (1, 5),
            (4, 5),
            // big border clique on {4,6,7,8,9}
            (4, 6),
            (4, 7),
            (4, 8),
            (4, 9),
            (6, 7),
            (6, 8),
            (6, 9),
            (7, 8),
            (7, 9),
            (8, 9),
        ],
    )
    .unwrap();
    RuleScenario {
        name: "replace-border",
        graph,
        k: 1,
        expected_rule: 5,
    }
}

/// All four edge-touching rule scenarios, in rule order.
pub fn rule_scenarios() -> Vec<RuleScenario> {
    vec![
        outlier_scenario(),
        border_scenario(),
        trim_scenario(),
        replace_scenario(),
    ]
}
