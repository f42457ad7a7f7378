use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use crate::graph::{bits, CanonicalForm, Graph, MinorSet, MAX_ORDER};

/// The seven forbidden minors for linkless embeddability: the ΔY/YΔ
/// closure of `K6`.
#[derive(Clone, Debug)]
pub struct PetersenFamily {
    graphs: Vec<Graph>,
    minors: MinorSet,
}

impl PetersenFamily {
    /// Runs the closure from `K6`. Members are canonical representatives,
    /// sorted by order and then canonical form.
    pub fn generate() -> PetersenFamily {
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut found: Vec<(CanonicalForm, Graph)> = Vec::new();
        let mut queue = VecDeque::new();
        let k6 = Graph::complete(6);
        seen.insert(k6.canonical_form());
        queue.push_back(k6);
        while let Some(g) = queue.pop_front() {
            found.push((g.canonical_form(), g.canonical_graph()));
            for h in delta_y_moves(&g).chain(y_delta_moves(&g)) {
                if seen.insert(h.canonical_form()) {
                    queue.push_back(h);
                }
            }
        }
        found.sort_by_key(|(form, g)| (g.order(), *form));
        let graphs: Vec<Graph> = found.into_iter().map(|(_, g)| g).collect();
        PetersenFamily {
            minors: MinorSet::new(graphs.iter().copied()),
            graphs,
        }
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.graphs.iter().any(|m| m.is_isomorphic(g))
    }

    pub(crate) fn minor_set(&self) -> &MinorSet {
        &self.minors
    }
}

/// Shared instance, computed on first use.
pub fn petersen_family() -> &'static PetersenFamily {
    static FAMILY: OnceLock<PetersenFamily> = OnceLock::new();
    FAMILY.get_or_init(PetersenFamily::generate)
}

/// Replace each triangle by a new degree-3 vertex joined to its corners.
fn delta_y_moves(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let n = g.order();
    let triangles = (0..n).flat_map(move |a| {
        bits(g.neighbors(a))
            .filter(move |&b| b > a)
            .flat_map(move |b| {
                bits(g.neighbors(a) & g.neighbors(b))
                    .filter(move |&c| c > b)
                    .map(move |c| (a, b, c))
            })
    });
    triangles
        .filter(move |_| n < MAX_ORDER)
        .map(move |(a, b, c)| {
            let mut h = g.disjoint_union(&Graph::empty(1));
            h.clear_edge(a, b);
            h.clear_edge(b, c);
            h.clear_edge(a, c);
            for v in [a, b, c] {
                h.set_edge(v, n);
            }
            h
        })
}

/// Replace a degree-3 vertex by a triangle on its neighbors, only where the
/// neighbors are pairwise non-adjacent.
fn y_delta_moves(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    (0..g.order()).filter_map(move |w| {
        if g.degree(w) != 3 {
            return None;
        }
        let nb: Vec<usize> = bits(g.neighbors(w)).collect();
        let (a, b, c) = (nb[0], nb[1], nb[2]);
        if g.has_edge(a, b) || g.has_edge(b, c) || g.has_edge(a, c) {
            return None;
        }
        let mut h = *g;
        h.set_edge(a, b);
        h.set_edge(b, c);
        h.set_edge(a, c);
        h.delete_vertex(w).ok()
    })
}
