//! Minor containment.
//!
//! Every minor of `G` is a subgraph of some contraction of `G`, so the
//! search only branches on edge contractions and asks a subgraph question
//! at every state. States are pruned by order and size, and memoized by
//! canonical form so isomorphic contractions are explored once. When every
//! target has minimum degree at least three, vertices of degree at most two
//! are removed or suppressed before branching; that never changes the
//! answer for such targets.

use std::collections::HashSet;

use super::subgraph::{degrees_dominate, is_subgraph_iso};
use super::{bits, CanonicalForm, Graph};

/// A fixed family of minor targets searched together.
#[derive(Clone, Debug)]
pub struct MinorSet {
    targets: Vec<Target>,
    min_order: usize,
    min_size: usize,
    reducible: bool,
}

#[derive(Clone, Debug)]
struct Target {
    graph: Graph,
    size: usize,
    degrees: Vec<usize>,
}

impl MinorSet {
    pub fn new(graphs: impl IntoIterator<Item = Graph>) -> MinorSet {
        let mut targets: Vec<Target> = graphs
            .into_iter()
            .map(|graph| Target {
                size: graph.size(),
                degrees: graph.degree_sequence(),
                graph,
            })
            .collect();
        // cheapest first
        targets.sort_by_key(|t| (t.graph.order(), t.size));
        let min_order = targets.iter().map(|t| t.graph.order()).min().unwrap_or(0);
        let min_size = targets.iter().map(|t| t.size).min().unwrap_or(0);
        let reducible = !targets.is_empty()
            && targets
                .iter()
                .all(|t| t.graph.order() > 0 && t.graph.min_degree() >= 3);
        MinorSet {
            targets,
            min_order,
            min_size,
            reducible,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.targets.iter().map(|t| &t.graph)
    }

    /// True iff some target is a minor of `g`.
    pub fn any_minor_of(&self, g: &Graph) -> bool {
        self.find_minor_of(g).is_some()
    }

    /// A target that is a minor of `g`, if any.
    pub fn find_minor_of(&self, g: &Graph) -> Option<&Graph> {
        if self.targets.is_empty() {
            return None;
        }
        let start = if self.reducible {
            reduce(g, self.min_order)?
        } else {
            *g
        };
        if !self.viable(&start) {
            return None;
        }
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        seen.insert(start.canonical_form());
        let mut stack = vec![start];
        while let Some(state) = stack.pop() {
            if let Some(t) = self.subgraph_hit(&state) {
                return Some(&self.targets[t].graph);
            }
            if state.order() <= self.min_order {
                continue;
            }
            for (u, v) in state.edges() {
                let child = state.contracted(u, v);
                let child = if self.reducible {
                    match reduce(&child, self.min_order) {
                        Some(c) => c,
                        None => continue,
                    }
                } else {
                    child
                };
                if self.viable(&child) && seen.insert(child.canonical_form()) {
                    stack.push(child);
                }
            }
        }
        None
    }

    fn viable(&self, g: &Graph) -> bool {
        g.order() >= self.min_order && g.size() >= self.min_size
    }

    fn subgraph_hit(&self, state: &Graph) -> Option<usize> {
        let n = state.order();
        let m = state.size();
        let degrees = state.degree_sequence();
        self.targets.iter().position(|t| {
            t.graph.order() <= n
                && t.size <= m
                && degrees_dominate(&degrees, &t.degrees)
                && is_subgraph_iso(&t.graph, state)
        })
    }
}

/// Deletes vertices of degree at most one and suppresses degree-two
/// vertices until none remain. Returns `None` once the order drops below
/// `floor`.
fn reduce(g: &Graph, floor: usize) -> Option<Graph> {
    let mut g = *g;
    loop {
        if g.order() < floor {
            return None;
        }
        let Some(v) = (0..g.order()).find(|&v| g.degree(v) <= 2) else {
            return Some(g);
        };
        let nb: Vec<usize> = bits(g.neighbors(v)).collect();
        if nb.len() == 2 && !g.has_edge(nb[0], nb[1]) {
            g.set_edge(nb[0], nb[1]);
        }
        g = g.without_vertex(v);
    }
}

/// True iff `minor` can be obtained from `g` by deleting vertices, deleting
/// edges and contracting edges.
pub fn has_minor(g: &Graph, minor: &Graph) -> bool {
    MinorSet::new([*minor]).any_minor_of(g)
}

pub fn has_any_minor(g: &Graph, minors: &[Graph]) -> bool {
    MinorSet::new(minors.iter().copied()).any_minor_of(g)
}
