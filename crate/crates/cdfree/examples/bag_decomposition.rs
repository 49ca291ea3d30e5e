//! Compute and validate the bag decomposition of a {claw, diamond}-free
//! graph, then classify bags relative to a modular.
//!
//! Run with: cargo run -p cdfree --example bag_decomposition

use cdfree::bags::{compute_bags, validate_bag_structure};
use cdfree::cli::{gen_graph, GenModel};
use cdfree::forbidden::greedy_packing;
use cdfree::kernel::{Instance, RuleCtx};
use cdfree::samples;

fn main() {
    // Any line graph of a bipartite base is cd-free and decomposes.
    let g = gen_graph(
        &GenModel::LineOfBipartite {
            left: 4,
            right: 4,
            base_edges: 10,
        },
        7,
    )
    .unwrap();
    println!("line graph: n={} m={}", g.vertex_count(), g.edge_count());
    let bs = compute_bags(&g).expect("line graphs are cd-free");
    for (i, bag) in bs.bags.iter().enumerate() {
        println!("  bag {i}: {bag}");
    }
    let violations = validate_bag_structure(&g, &bs);
    println!("structural violations: {}", violations.len());
    assert!(violations.is_empty());

    // Classification needs a modular; borrow the kernelizer's context
    // builder on a graph that actually contains forbidden subgraphs.
    let host = cdfree::scenarios::border_scenario().graph;
    let packing = greedy_packing(&host);
    println!(
        "\nscenario host: modular X = {:?} (from {} packed members)",
        packing.modular,
        packing.members.len()
    );
    let ctx = RuleCtx::build(Instance::new(host, 1)).unwrap();
    for info in &ctx.infos {
        println!(
            "  bag {}: {} role={:?} size={:?} A(B)={:?}",
            info.bag_index,
            ctx.bags.bags[info.bag_index],
            info.role,
            info.size_class,
            info.attachment
        );
    }

    // Decompositions of tiny named graphs.
    for (name, g) in [("P3", samples::path(3)), ("K3", samples::complete(3))] {
        let bs = compute_bags(&g).unwrap();
        let rendered: Vec<String> = bs.bags.iter().map(|b| b.to_string()).collect();
        println!("\n{name}: {}", rendered.join(" "));
    }
}
