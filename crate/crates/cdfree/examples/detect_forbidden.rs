//! Locate induced claws and diamonds, test cd-freeness, and build the
//! greedy edge-disjoint packing whose vertex set is the modular.
//!
//! Run with: cargo run -p cdfree --example detect_forbidden

use cdfree::forbidden::{cd_witness, find_claw, find_diamond, greedy_packing, is_cd_free};
use cdfree::samples;

fn main() {
    let named = [
        ("claw", samples::claw()),
        ("diamond", samples::diamond()),
        ("C5", samples::cycle(5)),
        ("bowtie", samples::bowtie()),
        ("K4", samples::complete(4)),
        ("petersen", samples::petersen()),
    ];

    for (name, g) in &named {
        print!("{name:9} n={} m={:2}  ", g.vertex_count(), g.edge_count());
        if is_cd_free(g) {
            println!("cd-free");
            continue;
        }
        match cd_witness(g) {
            Some(w) => println!("witness: {w:?}"),
            None => unreachable!(),
        }
    }

    // A packing on a graph holding several structures at once.
    let host = samples::disjoint_union(
        &samples::disjoint_union(&samples::diamond(), &samples::claw()),
        &samples::cycle(6),
    );
    let packing = greedy_packing(&host);
    println!("\npacking on diamond + claw + C6:");
    for member in &packing.members {
        println!("  member {member:?}");
    }
    println!("  modular X = {:?}", packing.modular);

    // Searches can be restricted to an edge whitelist.
    let allowed = host.edge_set();
    assert!(find_diamond(&host, Some(&allowed)).is_some());
    assert!(find_claw(&host, Some(&allowed)).is_some());
}
