//! Decide edge-deletion instances and find minimum deletion sets with the
//! branching solver, with and without kernelization.
//!
//! Run with: cargo run -p cdfree --example solve_instance

use cdfree::cli::{gen_graph, GenModel};
use cdfree::forbidden::is_cd_free;
use cdfree::kernel::Instance;
use cdfree::samples;
use cdfree::solver::{solve_decision, solve_min, solve_with_options};

fn main() {
    // A diamond needs exactly one deletion: the chord.
    let sol = solve_decision(&Instance::new(samples::diamond(), 1), false)
        .unwrap()
        .expect("one deletion suffices");
    println!("diamond k=1: delete {:?}", sol.deleted);

    // K5 minus an edge needs two.
    let k5e = samples::complete(5)
        .delete_edges(&cdfree::graph::edge_set(&[(3, 4)]))
        .unwrap();
    for k in 1..=2 {
        let answer = solve_decision(&Instance::new(k5e.clone(), k), false).unwrap();
        println!(
            "K5-e k={k}: {}",
            match &answer {
                Some(sol) => format!("YES via {:?}", sol.deleted),
                None => "NO".to_string(),
            }
        );
    }

    // A planted instance: three disjoint forbidden subgraphs on a clean
    // base, so the minimum is exactly three.
    let g = gen_graph(
        &GenModel::Planted {
            left: 4,
            right: 4,
            base_edges: 10,
            planted: 3,
        },
        99,
    )
    .unwrap();
    // Without kernelization the certificate names edges of the input
    // graph itself and can be verified against it directly.
    let (size, sol) = solve_min(&g, 5, false).unwrap().expect("solvable within 5");
    println!(
        "\nplanted instance n={} m={}: minimum deletion set has {size} edges",
        g.vertex_count(),
        g.edge_count()
    );
    println!(
        "search expanded {} nodes, depth {}",
        sol.stats.nodes_expanded, sol.stats.max_depth
    );
    let cleaned = g.delete_edges(&sol.deleted).unwrap();
    assert!(is_cd_free(&cleaned));
    println!(
        "certificate verified: deleting {:?} leaves a cd-free graph",
        sol.deleted
    );

    // Kernelization can shrink the search; the certificate then applies to
    // the kernelized instance, whose audit comes along.
    let outcome = solve_with_options(&Instance::new(g.clone(), 3), true).unwrap();
    let audit = outcome.audit.expect("kernel ran");
    println!(
        "\nwith kernelization: solved n={} m={} (rules fired: {:?})",
        outcome.solved.graph.vertex_count(),
        outcome.solved.graph.edge_count(),
        audit.rule_applications
    );
}
