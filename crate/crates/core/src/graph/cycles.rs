use std::fmt;

use super::{bits, Graph, VertexSet};
use crate::error::{Error, Result};

/// A simple cycle given as a closed vertex sequence `v1 v2 ... vk (v1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates that `vertices` is a cycle of `g`: at least three distinct
    /// vertices, consecutive ones adjacent, last adjacent to first.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Cycle> {
        if vertices.len() < 3 {
            return Err(Error::invalid("a cycle needs at least three vertices"));
        }
        let mut seen: VertexSet = 0;
        for &v in &vertices {
            if v >= g.order() {
                return Err(Error::invalid(format!("vertex {} out of range", v + 1)));
            }
            if seen & (1 << v) != 0 {
                return Err(Error::invalid(format!("vertex {} repeated", v + 1)));
            }
            seen |= 1 << v;
        }
        let k = vertices.len();
        for i in 0..k {
            let (a, b) = (vertices[i], vertices[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(Error::invalid(format!(
                    "{}-{} is not an edge",
                    a + 1,
                    b + 1
                )));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().fold(0, |m, &v| m | (1 << v))
    }

    pub fn is_disjoint(&self, other: &Cycle) -> bool {
        self.vertex_set() & other.vertex_set() == 0
    }

    /// Consecutive traversal steps, including the closing one.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// The same cycle traversed in the opposite direction from the same start.
    pub fn reversed(&self) -> Cycle {
        let mut vertices = vec![self.vertices[0]];
        vertices.extend(self.vertices[1..].iter().rev());
        Cycle { vertices }
    }

    /// The same traversal starting `k` steps later.
    pub fn rotated(&self, k: usize) -> Cycle {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(k % self.vertices.len());
        Cycle { vertices }
    }

    /// Representative: lowest vertex first, then the lower of its two
    /// cycle neighbors.
    pub fn normalized(&self) -> Cycle {
        let start = (0..self.len()).min_by_key(|&i| self.vertices[i]).unwrap();
        let c = self.rotated(start);
        if c.vertices[1] > c.vertices[c.len() - 1] {
            c.reversed()
        } else {
            c
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Every simple cycle with length in `min_len..=max_len`, once each, in
/// normalized form and sorted lexicographically. The range is clipped to
/// `3..=order`; an empty range yields no cycles.
pub fn enumerate_cycles(g: &Graph, min_len: usize, max_len: usize) -> Vec<Cycle> {
    let min_len = min_len.max(3);
    let max_len = max_len.min(g.order());
    let mut out = Vec::new();
    if min_len > max_len {
        return out;
    }
    let mut path = Vec::with_capacity(max_len);
    for s in 0..g.order() {
        let allowed = g.vertex_mask() & !((2u32 << s) - 1) as VertexSet;
        path.clear();
        path.push(s);
        extend(g, s, allowed, 1 << s, &mut path, min_len, max_len, &mut out);
    }
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    start: usize,
    allowed: VertexSet,
    used: VertexSet,
    path: &mut Vec<usize>,
    min_len: usize,
    max_len: usize,
    out: &mut Vec<Cycle>,
) {
    let cur = *path.last().unwrap();
    let k = path.len();
    if k >= min_len && g.has_edge(cur, start) && path[1] < cur {
        out.push(Cycle {
            vertices: path.clone(),
        });
    }
    if k == max_len {
        return;
    }
    for w in bits(g.neighbors(cur) & allowed & !used) {
        path.push(w);
        extend(
            g,
            start,
            allowed,
            used | (1 << w),
            path,
            min_len,
            max_len,
            out,
        );
        path.pop();
    }
}
