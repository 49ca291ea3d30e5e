//! Derive the fourteen two-edge branching pairs for the five-vertex
//! diamond-plus-witness gadget and solve the branching-factor recurrences
//! the search-tree analysis rests on.
//!
//! Run with: cargo run -p cdfree --example gadget_table

use cdfree::oracle::{branching_factor, derive_gadget_pairs, BranchingVector, GadgetEdge};
use cdfree::solver::GADGET_BRANCH_PAIRS;

fn main() {
    let table = derive_gadget_pairs();
    println!(
        "clean pairs: {} of {} candidates",
        table.pairs.len(),
        GadgetEdge::ALL.len() * (GadgetEdge::ALL.len() - 1) / 2
    );
    for (i, (e1, e2)) in table.pairs.iter().enumerate() {
        print!("{:>12}", format!("{e1:?}+{e2:?}"));
        if (i + 1) % 5 == 0 {
            println!();
        }
    }
    println!();

    // The solver ships the same table as a frozen constant.
    let frozen: std::collections::BTreeSet<_> = GADGET_BRANCH_PAIRS
        .iter()
        .map(|&(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    assert_eq!(frozen, table.pairs);
    println!("frozen solver table matches the derivation\n");

    let vectors: [(&str, Vec<u32>); 4] = [
        ("claw / twins branch", vec![1, 1, 1]),
        ("one-side witness branch", vec![1, 1, 1, 2, 2, 2]),
        ("both-sides witness branch", vec![2; 14]),
        ("naive five-edge branch", vec![1; 5]),
    ];
    for (name, entries) in vectors {
        let factor = branching_factor(&BranchingVector::new(entries.clone()));
        println!("{name:26} {entries:?} -> {factor:.4}");
    }
}
