//! Non-induced subgraph isomorphism by bitmask backtracking.

use super::{bits, Graph, VertexSet, MAX_ORDER};

/// True iff `pattern` is isomorphic to a (not necessarily induced) subgraph
/// of `host`.
pub fn is_subgraph_iso(pattern: &Graph, host: &Graph) -> bool {
    if pattern.order() > host.order() || pattern.size() > host.size() {
        return false;
    }
    if !degrees_dominate(&host.degree_sequence(), &pattern.degree_sequence()) {
        return false;
    }
    Matcher::new(pattern, host).run()
}

/// `host[i] >= pattern[i]` for every position of the (non-increasing)
/// pattern degree sequence.
pub(crate) fn degrees_dominate(host: &[usize], pattern: &[usize]) -> bool {
    pattern.len() <= host.len() && pattern.iter().zip(host).all(|(p, h)| h >= p)
}

struct Matcher<'a> {
    host: &'a Graph,
    order: Vec<usize>,
    /// For each position, indices (into `order`) of earlier neighbors.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
    image: [usize; MAX_ORDER],
}

impl<'a> Matcher<'a> {
    fn new(pattern: &Graph, host: &'a Graph) -> Self {
        let n = pattern.order();
        let mut order = Vec::with_capacity(n);
        let mut placed: VertexSet = 0;
        // Greedy connectivity-first order: most placed neighbors, then degree.
        while order.len() < n {
            let v = (0..n)
                .filter(|v| placed & (1 << v) == 0)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & placed).count_ones(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            placed |= 1 << v;
            order.push(v);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| pattern.has_edge(v, order[j])).collect())
            .collect();
        let degree = order.iter().map(|&v| pattern.degree(v)).collect();
        Matcher {
            host,
            order,
            back,
            degree,
            image: [0; MAX_ORDER],
        }
    }

    fn run(&mut self) -> bool {
        self.extend(0, 0)
    }

    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let mut cand = self.host.vertex_mask() & !used;
        for &j in &self.back[depth] {
            cand &= self.host.neighbors(self.image[j]);
        }
        let need = self.degree[depth];
        for w in bits(cand) {
            if self.host.degree(w) < need {
                continue;
            }
            self.image[depth] = w;
            if self.extend(depth + 1, used | (1 << w)) {
                return true;
            }
        }
        false
    }
}
