//! The five-rule kernelization driver.
//!
//! Each round recomputes the packing, the modular X, the bag decomposition
//! of G−X and its classification, then applies the lowest-numbered
//! applicable rule:
//!
//! 1. delete isolated vertices;
//! 2. delete the edges of an outlier bag (of size at least two);
//! 3. delete the edges of a border bag of size at least two that shares no
//!    vertex with any small attached bag;
//! 4. for an attached bag B of size at least 2k+3 sharing a vertex v with a
//!    border bag, delete every edge incident to v inside E(B ∪ A(B));
//! 5. for a border bag B of size at least 2k+3, delete E(B) and grow a
//!    fresh (2k+2)-clique on each attached bag's shared vertex.
//!
//! If the modular ever exceeds 4k vertices the instance cannot be solved
//! within budget and a fixed trivial NO-instance is returned. The budget k
//! is never changed. Rule 5's threshold is 2k+3 rather than the "big"
//! threshold 2k+2: its own replacement cliques have exactly 2k+2 vertices,
//! so the lower threshold would re-fire on them forever.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::bags::{
    attachment_anomalies, classify_bags, compute_bags_within, BagInfo, BagRole, BagSet, SizeClass,
};
use crate::forbidden::{greedy_packing, Packing};
use crate::graph::{Edge, EdgeSet, Graph, VertexId};

/// A graph plus the deletion budget k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Self {
        Instance { graph, k }
    }
}

/// Counters and bounds recorded for an irreducible instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelAudit {
    pub modular_size: usize,
    pub attached_bag_count: usize,
    pub max_bag_size: usize,
    pub max_border_bag_size: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    /// Applications per rule, keyed 1 through 5.
    pub rule_applications: BTreeMap<u8, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelOutcome {
    /// Irreducible equivalent instance plus its audit.
    Reduced {
        instance: Instance,
        audit: KernelAudit,
    },
    /// The modular exceeded 4k vertices; the answer is NO. Carries the
    /// fixed canonical NO-instance (a claw with budget zero).
    TrivialNo { instance: Instance },
}

/// The canonical NO-instance: a claw with budget 0.
pub fn trivial_no_instance() -> Instance {
    Instance::new(Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(), 0)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("stale modular at vertex {vertex}: modular neighbors {found:?} differ from the attachment set {expected:?}")]
    StaleModular {
        vertex: VertexId,
        found: Vec<VertexId>,
        expected: Vec<VertexId>,
    },
    #[error("rule {rule} failed to make progress: {detail}")]
    NoProgress { rule: u8, detail: String },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// Everything a reduction rule inspects: the instance together with the
/// freshly recomputed packing, bag decomposition of G−X and classification.
pub struct RuleCtx {
    pub instance: Instance,
    pub packing: Packing,
    pub bags: BagSet,
    pub infos: Vec<BagInfo>,
}

impl RuleCtx {
    /// Recomputes the modular and the classified decomposition of G−X.
    pub fn build(instance: Instance) -> Result<RuleCtx, KernelError> {
        let packing = greedy_packing(&instance.graph);
        RuleCtx::assemble(instance, packing)
    }

    fn assemble(instance: Instance, packing: Packing) -> Result<RuleCtx, KernelError> {
        let x = &packing.modular;
        let active: BTreeSet<VertexId> = instance
            .graph
            .vertices()
            .filter(|v| !x.contains(v))
            .collect();
        let bags = compute_bags_within(&instance.graph, &active, true)
            .map_err(|e| KernelError::Internal(format!("decomposition of G−X failed: {e}")))?;
        let infos = classify_bags(&instance.graph, x, &bags, instance.k)
            .map_err(|e| KernelError::Internal(format!("classification failed: {e}")))?;
        if cfg!(debug_assertions) {
            let anomalies = attachment_anomalies(&instance.graph, x, &bags, &infos);
            if !anomalies.is_empty() {
                return Err(KernelError::Internal(format!(
                    "attachment anomalies: {}",
                    anomalies.join("; ")
                )));
            }
        }
        Ok(RuleCtx {
            instance,
            packing,
            bags,
            infos,
        })
    }

    fn bag_vertices(&self, index: usize) -> &BTreeSet<VertexId> {
        &self.bags.bags[index].vertices
    }

    /// Border bags of size at least 2k+3; rule 5's progress metric.
    fn oversized_border_count(&self) -> usize {
        let threshold = 2 * self.instance.k + 3;
        self.infos
            .iter()
            .filter(|i| i.role == BagRole::Border && self.bags.bags[i.bag_index].len() >= threshold)
            .count()
    }
}

fn all_pairs(vs: &BTreeSet<VertexId>) -> EdgeSet {
    let list: Vec<VertexId> = vs.iter().copied().collect();
    let mut out = EdgeSet::new();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            out.insert(Edge::new(a, b));
        }
    }
    out
}

/// Rule 1: delete all isolated vertices. Remaining ids are compacted.
pub fn apply_rule_isolated(ctx: &RuleCtx) -> Option<Instance> {
    let g = &ctx.instance.graph;
    let isolated = g.isolated_vertices();
    if isolated.is_empty() {
        return None;
    }
    let keep: BTreeSet<VertexId> = g.vertices().filter(|v| g.degree(*v) > 0).collect();
    let (sub, _) = g.induced_subgraph(&keep).expect("vertices of g");
    Some(Instance::new(sub, ctx.instance.k))
}

/// Rule 2: delete the edges of an outlier bag of size at least two.
/// Singleton outliers are skipped; deleting their (empty) edge set would
/// never make progress.
pub fn apply_rule_outlier(ctx: &RuleCtx) -> Option<Instance> {
    let bag = ctx
        .infos
        .iter()
        .filter(|i| i.role == BagRole::Outlier && ctx.bags.bags[i.bag_index].len() >= 2)
        .map(|i| ctx.bag_vertices(i.bag_index))
        .min()?;
    let doomed = all_pairs(bag);
    let graph = ctx
        .instance
        .graph
        .delete_edges(&doomed)
        .expect("outlier bag is a clique");
    Some(Instance::new(graph, ctx.instance.k))
}

/// Rule 3: delete the edges of a border bag of size at least two that
/// shares no vertex with any small attached bag.
pub fn apply_rule_border_big(ctx: &RuleCtx) -> Option<Instance> {
    let small_attached: BTreeSet<VertexId> = ctx
        .infos
        .iter()
        .filter(|i| i.role == BagRole::Attached && i.size_class == SizeClass::Small)
        .flat_map(|i| ctx.bag_vertices(i.bag_index).iter().copied())
        .collect();
    let bag = ctx
        .infos
        .iter()
        .filter(|i| i.role == BagRole::Border && ctx.bags.bags[i.bag_index].len() >= 2)
        .map(|i| ctx.bag_vertices(i.bag_index))
        .filter(|vs| vs.iter().all(|v| !small_attached.contains(v)))
        .min()?;
    let doomed = all_pairs(bag);
    let graph = ctx
        .instance
        .graph
        .delete_edges(&doomed)
        .expect("border bag is a clique");
    Some(Instance::new(graph, ctx.instance.k))
}

/// Rule 4: pick an attached bag B of size at least 2k+3 sharing a vertex v
/// with a border bag, and delete every edge incident to v inside
/// E(B ∪ A(B)). Candidates are scanned by ascending bag vertex set, then
/// ascending v. The checked identity N(v) ∩ X = A(B) guards against a
/// stale modular.
pub fn apply_rule_trim_attached(ctx: &RuleCtx) -> Result<Option<Instance>, KernelError> {
    let threshold = 2 * ctx.instance.k + 3;
    let mut candidates: Vec<(usize, VertexId)> = Vec::new();
    for info in &ctx.infos {
        if info.role != BagRole::Attached || ctx.bags.bags[info.bag_index].len() < threshold {
            continue;
        }
        for &v in ctx.bag_vertices(info.bag_index) {
            let shares_border = ctx
                .bags
                .bags_of(v)
                .iter()
                .any(|&j| j != info.bag_index && ctx.infos[j].role == BagRole::Border);
            if shares_border {
                candidates.push((info.bag_index, v));
            }
        }
    }
    let Some(&(bag_index, v)) = candidates
        .iter()
        .min_by_key(|&&(b, v)| (ctx.bag_vertices(b), v))
    else {
        return Ok(None);
    };

    let bag = ctx.bag_vertices(bag_index);
    let attachment = &ctx.infos[bag_index].attachment;
    let x = &ctx.packing.modular;
    let modular_neighbors: BTreeSet<VertexId> = ctx
        .instance
        .graph
        .neighbors(v)
        .iter()
        .copied()
        .filter(|w| x.contains(w))
        .collect();
    if &modular_neighbors != attachment {
        return Err(KernelError::StaleModular {
            vertex: v,
            found: modular_neighbors.into_iter().collect(),
            expected: attachment.iter().copied().collect(),
        });
    }

    let mut doomed = EdgeSet::new();
    for &b in bag {
        if b != v {
            doomed.insert(Edge::new(v, b));
        }
    }
    for &xv in attachment {
        doomed.insert(Edge::new(v, xv));
    }
    let graph = ctx
        .instance
        .graph
        .delete_edges(&doomed)
        .expect("bag and attachment edges exist");
    Ok(Some(Instance::new(graph, ctx.instance.k)))
}

/// Rule 5: pick a border bag B of size at least 2k+3, delete E(B), and for
/// each attached bag sharing a vertex v with B add 2k+1 fresh vertices
/// forming a clique together with v. Fresh ids are appended after the
/// existing ones and never reused.
pub fn apply_rule_replace_border(ctx: &RuleCtx) -> Option<Instance> {
    let threshold = 2 * ctx.instance.k + 3;
    let (bag_index, bag) = ctx
        .infos
        .iter()
        .filter(|i| i.role == BagRole::Border && ctx.bags.bags[i.bag_index].len() >= threshold)
        .map(|i| (i.bag_index, ctx.bag_vertices(i.bag_index)))
        .min_by_key(|&(_, vs)| vs)?;

    let doomed = all_pairs(bag);
    let mut graph = ctx
        .instance
        .graph
        .delete_edges(&doomed)
        .expect("border bag is a clique");

    for &v in bag {
        let shares_attached = ctx
            .bags
            .bags_of(v)
            .iter()
            .any(|&j| j != bag_index && ctx.infos[j].role == BagRole::Attached);
        if !shares_attached {
            continue;
        }
        let base = graph.vertex_count();
        let fresh = 2 * ctx.instance.k + 1;
        graph = graph.add_vertices(fresh);
        let mut clique = EdgeSet::new();
        for i in 0..fresh {
            clique.insert(Edge::new(v, base + i));
            for j in (i + 1)..fresh {
                clique.insert(Edge::new(base + i, base + j));
            }
        }
        graph = graph.add_edges(&clique).expect("fresh vertices");
    }
    Some(Instance::new(graph, ctx.instance.k))
}

fn audit_from_ctx(ctx: &RuleCtx, rule_applications: BTreeMap<u8, u64>) -> KernelAudit {
    KernelAudit {
        modular_size: ctx.packing.modular.len(),
        attached_bag_count: ctx
            .infos
            .iter()
            .filter(|i| i.role == BagRole::Attached)
            .count(),
        max_bag_size: ctx.bags.bags.iter().map(|b| b.len()).max().unwrap_or(0),
        max_border_bag_size: ctx
            .infos
            .iter()
            .filter(|i| i.role == BagRole::Border)
            .map(|i| ctx.bags.bags[i.bag_index].len())
            .max()
            .unwrap_or(0),
        vertex_count: ctx.instance.graph.vertex_count(),
        edge_count: ctx.instance.graph.edge_count(),
        rule_applications,
    }
}

/// Applies rules 1-5 until none fits, recomputing the modular and the
/// classified decomposition before every attempt. Returns the trivial
/// NO-instance as soon as the modular exceeds 4k vertices. The budget is
/// never changed.
pub fn kernelize(inst: Instance) -> Result<KernelOutcome, KernelError> {
    let k = inst.k;
    let mut current = inst;
    let mut rule_applications: BTreeMap<u8, u64> = (1..=5).map(|r| (r, 0)).collect();
    // Progress metric for rule 5, checked against the next round's context.
    let mut pending_rule5_metric: Option<usize> = None;

    loop {
        let packing = greedy_packing(&current.graph);
        if packing.modular.len() > 4 * k {
            return Ok(KernelOutcome::TrivialNo {
                instance: trivial_no_instance(),
            });
        }
        let ctx = RuleCtx::assemble(current, packing)?;
        if let Some(before) = pending_rule5_metric.take() {
            let after = ctx.oversized_border_count();
            if after >= before {
                return Err(KernelError::NoProgress {
                    rule: 5,
                    detail: format!("oversized border bags went from {before} to {after}"),
                });
            }
        }

        let size_before = ctx.instance.graph.vertex_count() + ctx.instance.graph.edge_count();
        let applied: Option<(u8, Instance)> = if let Some(next) = apply_rule_isolated(&ctx) {
            Some((1, next))
        } else if let Some(next) = apply_rule_outlier(&ctx) {
            Some((2, next))
        } else if let Some(next) = apply_rule_border_big(&ctx) {
            Some((3, next))
        } else if let Some(next) = apply_rule_trim_attached(&ctx)? {
            Some((4, next))
        } else if let Some(next) = apply_rule_replace_border(&ctx) {
            pending_rule5_metric = Some(ctx.oversized_border_count());
            Some((5, next))
        } else {
            None
        };

        match applied {
            Some((rule, next)) => {
                debug_assert_eq!(next.k, k);
                if rule <= 4 {
                    let size_after = next.graph.vertex_count() + next.graph.edge_count();
                    if size_after >= size_before {
                        return Err(KernelError::NoProgress {
                            rule,
                            detail: format!(
                                "instance size went from {size_before} to {size_after}"
                            ),
                        });
                    }
                }
                *rule_applications.get_mut(&rule).expect("keys 1..=5") += 1;
                current = next;
            }
            None => {
                let audit = audit_from_ctx(&ctx, rule_applications);
                check_audit_bounds(&audit, k)
                    .map_err(|e| KernelError::Internal(format!("kernel bound broken: {e}")))?;
                if let Some(bad) = ctx
                    .infos
                    .iter()
                    .find(|i| i.role == BagRole::Outlier && ctx.bags.bags[i.bag_index].len() >= 2)
                {
                    return Err(KernelError::Internal(format!(
                        "irreducible instance keeps outlier bag {} with edges",
                        ctx.bags.bags[bad.bag_index]
                    )));
                }
                return Ok(KernelOutcome::Reduced {
                    instance: ctx.instance,
                    audit,
                });
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("outcome is not a reduced instance")]
    NotReduced,
    #[error("modular has {found} vertices, above the 4k bound of {bound}")]
    ModularTooBig { found: usize, bound: usize },
    #[error("{found} attached bags, above the 8k bound of {bound}")]
    TooManyAttachedBags { found: usize, bound: usize },
    #[error("a bag has {found} vertices, above the 8k bound of {bound}")]
    BagTooBig { found: usize, bound: usize },
    #[error("a border bag has {found} vertices, above the 2k+2 bound of {bound}")]
    BorderBagTooBig { found: usize, bound: usize },
    #[error("an outlier bag of size {size} retains internal edges")]
    OutlierWithEdges { size: usize },
    #[error("stored audit disagrees with recomputation: {0}")]
    Mismatch(String),
    #[error("audit recomputation failed: {0}")]
    Recompute(String),
}

fn check_audit_bounds(audit: &KernelAudit, k: usize) -> Result<(), AuditError> {
    if audit.modular_size > 4 * k {
        return Err(AuditError::ModularTooBig {
            found: audit.modular_size,
            bound: 4 * k,
        });
    }
    if audit.attached_bag_count > 8 * k {
        return Err(AuditError::TooManyAttachedBags {
            found: audit.attached_bag_count,
            bound: 8 * k,
        });
    }
    if audit.max_bag_size > 8 * k {
        return Err(AuditError::BagTooBig {
            found: audit.max_bag_size,
            bound: 8 * k,
        });
    }
    if audit.max_border_bag_size > 2 * k + 2 {
        return Err(AuditError::BorderBagTooBig {
            found: audit.max_border_bag_size,
            bound: 2 * k + 2,
        });
    }
    Ok(())
}

/// Recomputes every audit field of a reduced outcome from scratch, checks
/// the size bounds and the absence of outlier edges, and compares against
/// the stored audit.
pub fn audit_kernel(outcome: &KernelOutcome) -> Result<KernelAudit, AuditError> {
    let KernelOutcome::Reduced { instance, audit } = outcome else {
        return Err(AuditError::NotReduced);
    };
    check_audit_bounds(audit, instance.k)?;

    let ctx = RuleCtx::build(instance.clone()).map_err(|e| AuditError::Recompute(e.to_string()))?;
    let recomputed = audit_from_ctx(&ctx, audit.rule_applications.clone());
    check_audit_bounds(&recomputed, instance.k)?;
    for info in &ctx.infos {
        if info.role == BagRole::Outlier && ctx.bags.bags[info.bag_index].len() >= 2 {
            return Err(AuditError::OutlierWithEdges {
                size: ctx.bags.bags[info.bag_index].len(),
            });
        }
    }
    if recomputed != *audit {
        return Err(AuditError::Mismatch(format!(
            "stored {audit:?}, recomputed {recomputed:?}"
        )));
    }
    Ok(recomputed)
}
