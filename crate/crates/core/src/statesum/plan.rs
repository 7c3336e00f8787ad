//! Greedy pairwise contraction order for a closed tensor network.

use serde::Serialize;

use crate::surface::DualGraph;

/// Merge tensor `absorb` into tensor `keep`, contracting `contracted` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeStep {
    pub keep: usize,
    pub absorb: usize,
    pub contracted: Vec<usize>,
    /// Open legs of the merged tensor.
    pub open: usize,
    /// Total legs touched by the pairwise contraction (open plus contracted).
    pub touched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionPlan {
    /// `(vertex, edge)` pairs traced before any merge (self-loops).
    pub self_traces: Vec<(usize, usize)>,
    pub steps: Vec<MergeStep>,
    /// Largest open rank of any tensor during execution, inputs included.
    pub max_open_rank: usize,
    /// Open rank of the final tensor.
    pub final_rank: usize,
}

impl ContractionPlan {
    /// Number of distinct edges contracted, self-loops included.
    pub fn contracted_edges(&self) -> usize {
        self.self_traces.len() + self.steps.iter().map(|s| s.contracted.len()).sum::<usize>()
    }

    /// Multiply-add count of the pairwise contractions for leg dimension `d`.
    pub fn cost(&self, d: usize) -> u128 {
        self.steps
            .iter()
            .map(|s| (d as u128).saturating_pow(s.touched as u32))
            .fold(0u128, |a, b| a.saturating_add(b))
    }

    /// Largest tensor, in entries, that execution creates.
    pub fn max_entries(&self, d: usize) -> u128 {
        (d as u128).saturating_pow(self.max_open_rank as u32)
    }
}

pub fn plan_contraction(graph: &DualGraph) -> ContractionPlan {
    plan_for_legs(&graph.legs())
}

/// Plans a contraction of tensors whose legs are given as edge ids. An edge
/// id occurring twice is contracted; once, it stays open.
///
/// Each round merges the pair of live tensors whose merge leaves the fewest
/// open legs, ties going to the lexicographically smallest `(keep, absorb)`.
/// The merged tensor keeps the smaller index.
pub fn plan_for_legs(legs: &[Vec<usize>]) -> ContractionPlan {
    let mut self_traces = Vec::new();
    let mut live: Vec<Option<Vec<usize>>> = Vec::with_capacity(legs.len());
    let mut max_open_rank = legs.iter().map(Vec::len).max().unwrap_or(0);
    for (v, l) in legs.iter().enumerate() {
        let mut open = Vec::new();
        for &e in l {
            if let Some(p) = open.iter().position(|&x| x == e) {
                open.remove(p);
                self_traces.push((v, e));
            } else {
                open.push(e);
            }
        }
        live.push(Some(open));
    }

    let mut steps = Vec::new();
    loop {
        let ids: Vec<usize> = (0..live.len()).filter(|&i| live[i].is_some()).collect();
        if ids.len() < 2 {
            break;
        }
        let mut best: Option<(usize, usize, usize, usize)> = None; // (open, keep, absorb, shared)
        for (x, &a) in ids.iter().enumerate() {
            let la = live[a].as_ref().expect("live");
            for &b in &ids[x + 1..] {
                let lb = live[b].as_ref().expect("live");
                let shared = la.iter().filter(|e| lb.contains(e)).count();
                let open = la.len() + lb.len() - 2 * shared;
                if best.is_none_or(|(o, ..)| open < o) {
                    best = Some((open, a, b, shared));
                }
            }
        }
        let (open, keep, absorb, shared) = best.expect("at least one pair");
        let la = live[keep].take().expect("live");
        let lb = live[absorb].take().expect("live");
        let contracted: Vec<usize> = la.iter().copied().filter(|e| lb.contains(e)).collect();
        let merged: Vec<usize> = la
            .iter()
            .copied()
            .filter(|e| !contracted.contains(e))
            .chain(lb.iter().copied().filter(|e| !contracted.contains(e)))
            .collect();
        debug_assert_eq!(merged.len(), open);
        max_open_rank = max_open_rank.max(open);
        steps.push(MergeStep { keep, absorb, contracted, open, touched: open + shared });
        live[keep] = Some(merged);
    }
    let final_rank = live.iter().flatten().map(Vec::len).next().unwrap_or(0);
    ContractionPlan { self_traces, steps, max_open_rank, final_rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteAbelianGroup;
    use crate::surface::builders::*;

    #[test]
    fn theta_graph_is_one_step() {
        let plan = plan_contraction(&sphere(FiniteAbelianGroup::trivial()).dual_graph());
        assert_eq!(plan.steps.len(), 1);
        assert_eq!(plan.steps[0].contracted.len(), 3);
        assert_eq!(plan.final_rank, 0);
        assert_eq!(plan.contracted_edges(), 3);
    }

    #[test]
    fn path_of_four() {
        // 0 -e0- 1 -e1- 2 -e2- 3
        let legs = vec![vec![0], vec![0, 1], vec![1, 2], vec![2]];
        let plan = plan_for_legs(&legs);
        // hand simulation: (0,1) leaves 1 open; then ({01},2) and (2,3) both
        // leave 1 open, lowest pair wins; last merge closes
        let pairs: Vec<(usize, usize)> = plan.steps.iter().map(|s| (s.keep, s.absorb)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(plan.steps.iter().map(|s| s.open).collect::<Vec<_>>(), vec![1, 1, 0]);
        assert!(plan.max_open_rank <= 4);
        assert_eq!(plan.contracted_edges(), 3);
    }

    #[test]
    fn self_loops_and_components() {
        let legs = vec![vec![0, 0, 1], vec![1, 2, 2], vec![3, 4, 4], vec![3, 5, 5]];
        let plan = plan_for_legs(&legs);
        assert_eq!(plan.self_traces.len(), 4);
        assert_eq!(plan.contracted_edges(), 6);
        assert_eq!(plan.final_rank, 0);
        assert_eq!(plan.steps.len(), 3);
    }

    #[test]
    fn every_edge_once_on_larger_surfaces() {
        for h in 1..4 {
            let s = genus_surface(FiniteAbelianGroup::trivial(), h);
            let plan = plan_contraction(&s.dual_graph());
            assert_eq!(plan.contracted_edges(), s.num_edges());
            assert_eq!(plan.final_rank, 0);
            // deterministic
            assert_eq!(plan, plan_contraction(&s.dual_graph()));
        }
    }
}
