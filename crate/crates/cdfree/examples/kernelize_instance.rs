//! Run the five-rule kernelization on the built-in rule scenarios and on a
//! trivial NO-instance, printing the audit each time.
//!
//! Run with: cargo run -p cdfree --example kernelize_instance

use cdfree::kernel::{audit_kernel, kernelize, Instance, KernelOutcome};
use cdfree::samples;
use cdfree::scenarios::rule_scenarios;

fn main() {
    for s in rule_scenarios() {
        let before = (s.graph.vertex_count(), s.graph.edge_count());
        let outcome = kernelize(Instance::new(s.graph.clone(), s.k)).unwrap();
        match &outcome {
            KernelOutcome::Reduced { instance, audit } => {
                println!(
                    "{:16} k={} | n,m {:?} -> ({}, {}) | rules {:?}",
                    s.name,
                    s.k,
                    before,
                    instance.graph.vertex_count(),
                    instance.graph.edge_count(),
                    audit.rule_applications
                );
                println!(
                    "{:16}        |X|={} attached={} max-bag={} max-border={}",
                    "",
                    audit.modular_size,
                    audit.attached_bag_count,
                    audit.max_bag_size,
                    audit.max_border_bag_size
                );
                // Recomputing the audit from scratch must agree.
                let recomputed = audit_kernel(&outcome).unwrap();
                assert_eq!(&recomputed, audit);
            }
            KernelOutcome::TrivialNo { .. } => {
                println!("{:16} k={} | trivial NO", s.name, s.k);
            }
        }
    }

    // A claw with no budget cannot be fixed; the kernelizer notices via
    // the modular-size shortcut and returns the canonical NO-instance.
    let outcome = kernelize(Instance::new(samples::claw(), 0)).unwrap();
    match outcome {
        KernelOutcome::TrivialNo { instance } => {
            println!(
                "\nclaw at k=0 -> trivial NO-instance with n={} m={} k={}",
                instance.graph.vertex_count(),
                instance.graph.edge_count(),
                instance.k
            );
        }
        KernelOutcome::Reduced { .. } => unreachable!(),
    }
}
