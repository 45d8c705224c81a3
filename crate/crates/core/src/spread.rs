//! Deterministic linear-threshold spread.
//!
//! Starting from a seed set `X = F_0`, round `i` activates every node whose
//! total in-weight from `F_{i-1}` reaches its threshold. A node with threshold
//! 0 therefore activates in round 1 even from an empty seed set.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::graph::InfluenceGraph;

/// Set of node indices of one graph.
pub type NodeSet = FixedBitSet;

/// The rounds `F_0 ⊆ F_1 ⊆ … ⊆ F_t` of one spread, ending at the first fixed point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationTrace {
    pub steps: Vec<NodeSet>,
}

impl ActivationTrace {
    /// Index of the round that produced the fixed point.
    pub fn converged_at(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn fixed_point(&self) -> &NodeSet {
        self.steps.last().expect("a trace always holds F_0")
    }
}

/// Reusable spread evaluator.
///
/// Keeps the accumulated in-weight of every inactive node, so each arc is
/// relaxed at most once per run. Hot loops that evaluate many seed sets on the
/// same graph should hold one `Spreader` per thread.
#[derive(Debug, Clone)]
pub struct Spreader<'g> {
    graph: &'g InfluenceGraph,
    zero_threshold: Vec<usize>,
    acc: Vec<u64>,
    active: NodeSet,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl<'g> Spreader<'g> {
    pub fn new(graph: &'g InfluenceGraph) -> Self {
        let n = graph.len();
        Spreader {
            graph,
            zero_threshold: (0..n).filter(|&v| graph.threshold(v) == 0).collect(),
            acc: vec![0; n],
            active: NodeSet::with_capacity(n),
            frontier: Vec::new(),
            next: Vec::new(),
        }
    }

    fn seed<I: IntoIterator<Item = usize>>(&mut self, seeds: I) {
        self.acc.fill(0);
        self.active.clear();
        self.frontier.clear();
        for v in seeds {
            if !self.active.put(v) {
                self.frontier.push(v);
            }
        }
    }

    /// One synchronous round; returns whether any node was activated.
    fn round(&mut self, first: bool) -> bool {
        self.next.clear();
        if first {
            for &v in &self.zero_threshold {
                if !self.active.put(v) {
                    self.next.push(v);
                }
            }
        }
        for &u in &self.frontier {
            for &(v, w) in self.graph.out_arcs(u) {
                if self.active.contains(v) {
                    continue;
                }
                self.acc[v] = self.acc[v].saturating_add(w);
                if self.acc[v] >= self.graph.threshold(v) {
                    self.active.insert(v);
                    self.next.push(v);
                }
            }
        }
        std::mem::swap(&mut self.frontier, &mut self.next);
        !self.frontier.is_empty()
    }

    /// Runs to the fixed point and returns `|F(X)|`.
    pub fn run<I: IntoIterator<Item = usize>>(&mut self, seeds: I) -> usize {
        self.seed(seeds);
        let mut first = true;
        while self.round(first) {
            first = false;
        }
        self.active.count_ones(..)
    }

    /// The activated set of the last [`Spreader::run`].
    pub fn active(&self) -> &NodeSet {
        &self.active
    }

    pub fn trace<I: IntoIterator<Item = usize>>(&mut self, seeds: I) -> ActivationTrace {
        self.seed(seeds);
        let mut steps = vec![self.active.clone()];
        let mut first = true;
        while self.round(first) {
            first = false;
            steps.push(self.active.clone());
        }
        ActivationTrace { steps }
    }
}

/// `F(X)` for seed indices `X`. Panics if an index is out of range.
pub fn spread(graph: &InfluenceGraph, seeds: &[usize]) -> NodeSet {
    let mut spreader = Spreader::new(graph);
    spreader.run(seeds.iter().copied());
    spreader.active
}

/// All rounds of the spread from seed indices `X`.
pub fn spread_trace(graph: &InfluenceGraph, seeds: &[usize]) -> ActivationTrace {
    Spreader::new(graph).trace(seeds.iter().copied())
}

/// `F(X)` for seeds given by node id.
pub fn spread_by_id<S: AsRef<str>>(graph: &InfluenceGraph, seeds: &[S]) -> Result<NodeSet> {
    Ok(spread(graph, &graph.indices_of(seeds)?))
}

/// Node ids of a set, in index order.
pub fn ids_of(graph: &InfluenceGraph, set: &NodeSet) -> Vec<String> {
    set.ones().map(|v| graph.id(v).to_owned()).collect()
}
