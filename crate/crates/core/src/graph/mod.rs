//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! A [`Graph`] is a `Copy` value holding one adjacency bitmask per vertex.
//! Mutating operations return a new graph and leave the receiver untouched.

mod canon;
mod cycles;
pub mod graph6;
mod minor;
mod subgraph;

use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use cycles::{enumerate_cycles, Cycle};
pub use minor::{has_any_minor, has_minor, MinorSet};
pub use subgraph::is_subgraph_iso;

pub const MAX_ORDER: usize = 12;

/// Vertex set as a bitmask; bit `i` is vertex `i`.
pub type VertexSet = u16;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    adj: [VertexSet; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    ///
    /// # Panics
    /// If `order > MAX_ORDER`.
    pub fn empty(order: usize) -> Graph {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        Graph {
            order: order as u8,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn complete(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        let all = g.vertex_mask();
        for v in 0..order {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    /// Builds a graph from 0-based edge pairs.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order > MAX_ORDER {
            return Err(Error::invalid(format!(
                "order {order} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!(
                    "duplicate edge {}-{}",
                    u + 1,
                    v + 1
                )));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Complement of the given edge set inside `K_order`.
    pub fn complete_minus(order: usize, removed: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::complete(order);
        for &(u, v) in removed {
            g.check_pair(u, v)?;
            if !g.has_edge(u, v) {
                return Err(Error::invalid(format!(
                    "edge {}-{} removed twice",
                    u + 1,
                    v + 1
                )));
            }
            g.clear_edge(u, v);
        }
        Ok(g)
    }

    pub fn cycle(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for v in 0..order {
            g.set_edge(v, (v + 1) % order);
        }
        g
    }

    pub fn path(order: usize) -> Graph {
        let mut g = Graph::empty(order);
        for v in 1..order {
            g.set_edge(v - 1, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Vertex-disjoint union; the vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n + other.order());
        g.adj[..n].copy_from_slice(&self.adj[..n]);
        for v in 0..other.order() {
            g.adj[n + v] = other.adj[v] << n;
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.adj[..self.order()]
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn vertex_mask(&self) -> VertexSet {
        ((1u32 << self.order) - 1) as VertexSet
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            bits(self.adj[u] & !((2u32 << u) - 1) as VertexSet).map(move |v| (u, v))
        })
    }

    /// Unordered vertex pairs that are not edges, lexicographic.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = self.vertex_mask();
        (0..self.order()).flat_map(move |u| {
            let missing = !self.adj[u] & all & !((2u32 << u) - 1) as VertexSet;
            bits(missing).map(move |v| (u, v))
        })
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `G + e`. Fails if `e` is already present or out of range.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::invalid(format!(
                "edge {}-{} already present",
                u + 1,
                v + 1
            )));
        }
        Ok(self.with_edge(u, v))
    }

    /// `G - e`. Fails if `e` is not an edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!(
                "{}-{} is not an edge",
                u + 1,
                v + 1
            )));
        }
        Ok(self.without_edge(u, v))
    }

    /// `G / e`: the endpoints are merged into the lower-numbered one and the
    /// higher-numbered vertex is removed, shifting later labels down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!(
                "{}-{} is not an edge",
                u + 1,
                v + 1
            )));
        }
        Ok(self.contracted(u, v))
    }

    /// Removes vertex `v`; vertices above `v` are relabeled down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::invalid(format!("vertex {} out of range", v + 1)));
        }
        Ok(self.without_vertex(v))
    }

    /// Subgraph induced by the vertices in `keep`, relabeled in increasing order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep & self.vertex_mask();
        let verts: Vec<usize> = bits(keep).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &w) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut inv = [0usize; MAX_ORDER];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut g = Graph::empty(self.order());
        for (new, &old) in perm.iter().enumerate() {
            let mut row = 0;
            for w in bits(self.adj[old]) {
                row |= 1 << inv[w];
            }
            g.adj[new] = row;
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        self.component_of(0) == self.vertex_mask()
    }

    /// Vertex set of the connected component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen: VertexSet = 1 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let mut g = *self;
        for v in 0..self.order() {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    /// Checks the loop-free, symmetric, in-range representation invariants.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertex_mask();
        (0..MAX_ORDER).all(|v| {
            if v >= self.order() {
                return self.adj[v] == 0;
            }
            self.adj[v] & !all == 0
                && self.adj[v] & (1 << v) == 0
                && bits(self.adj[v]).all(|w| self.adj[w] & (1 << v) != 0)
        })
    }

    // Unchecked variants for the search loops.

    #[inline]
    pub(crate) fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = *self;
        g.set_edge(u, v);
        g
    }

    #[inline]
    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = *self;
        g.clear_edge(u, v);
        g
    }

    pub(crate) fn contracted(&self, u: usize, v: usize) -> Graph {
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = *self;
        let merged = (g.adj[keep] | g.adj[gone]) & !(1 << keep) & !(1 << gone);
        for w in bits(g.adj[gone]) {
            g.adj[w] &= !(1 << gone);
        }
        g.adj[gone] = 0;
        g.adj[keep] = merged;
        for w in bits(merged) {
            g.adj[w] |= 1 << keep;
        }
        g.without_vertex(gone)
    }

    pub(crate) fn without_vertex(&self, v: usize) -> Graph {
        let n = self.order();
        let low: VertexSet = ((1u32 << v) - 1) as VertexSet;
        let mut g = Graph::empty(n - 1);
        let mut row = 0;
        for w in 0..n {
            if w == v {
                continue;
            }
            let a = self.adj[w];
            g.adj[row] = (a & low) | ((a >> 1) & !low);
            row += 1;
        }
        g
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if u >= self.order() || v >= self.order() {
            return Err(Error::invalid(format!(
                "vertex pair {}-{} out of range for order {}",
                u + 1,
                v + 1,
                self.order()
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("self-loop at vertex {}", u + 1)));
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.order)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}", u + 1, v + 1)?;
        }
        f.write_str("])")
    }
}

/// Iterates the set bits of a vertex mask in increasing order.
#[inline]
pub fn bits(mut mask: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
