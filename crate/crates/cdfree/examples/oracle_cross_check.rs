//! Cross-check the branching solver against the exhaustive oracle on a
//! seeded batch, the same discipline the acceptance suite enforces.
//!
//! Run with: cargo run -p cdfree --example oracle_cross_check

use cdfree::cli::{gen_graph, GenModel};
use cdfree::kernel::Instance;
use cdfree::oracle::brute_min_cdh;
use cdfree::solver::solve_min;

fn main() {
    println!(
        "{:>4} {:>3} {:>3} {:>10} {:>10}",
        "seed", "n", "m", "oracle", "solver"
    );
    let mut agreements = 0;
    for seed in 0..30u64 {
        let n = 6 + (seed % 4) as usize;
        let m = (8 + (seed % 6) as usize).min(n * (n - 1) / 2);
        let g = gen_graph(&GenModel::Gnm { n, m }, seed).unwrap();

        let oracle = brute_min_cdh(&g, 4).unwrap().map(|(s, _)| s);
        let solver = solve_min(&g, 4, true).unwrap().map(|(s, _)| s);
        assert_eq!(oracle, solver, "seed {seed}: solver diverged from oracle");
        agreements += 1;

        let show = |o: Option<usize>| match o {
            Some(s) => format!("min {s}"),
            None => "> 4".to_string(),
        };
        println!(
            "{seed:>4} {n:>3} {m:>3} {:>10} {:>10}",
            show(oracle),
            show(solver)
        );
    }
    println!("\n{agreements}/30 instances agree");

    // The oracle refuses instances beyond its work bound instead of
    // guessing.
    let big = gen_graph(&GenModel::Gnm { n: 12, m: 40 }, 1).unwrap();
    let refused = cdfree::oracle::brute_min_cdh_bounded(&big, 10, 1000);
    println!("oracle on n=12 m=40 with a bound of 1000 checks: {refused:?}");
    let _ = Instance::new(big, 1);
}
