//! Canonical labeling by color refinement and individualization.
//!
//! The search tree branches on the vertices of the smallest non-singleton
//! cell of an equitable ordered partition. Leaves are compared by their
//! upper-triangle adjacency code; the largest code wins. Automorphisms found
//! along the way (two leaves with equal codes) prune siblings that lie in
//! the same orbit of the pointwise stabilizer of the current prefix.

use super::{bits, Graph, VertexSet, MAX_ORDER};

/// Isomorphism-class identifier: order plus the adjacency code of the
/// canonically relabeled graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Upper-triangle adjacency bits, column by column, most significant first.
    pub fn code(&self) -> u128 {
        self.code
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).1
}

/// Returns `perm` with `perm[i]` the vertex of `g` placed at canonical
/// position `i`, together with the canonical form.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalForm) {
    let n = g.order();
    if n <= 1 {
        return (
            (0..n).collect(),
            CanonicalForm {
                order: n as u8,
                code: 0,
            },
        );
    }
    let mut search = Search {
        g,
        n,
        best: None,
        generators: Vec::new(),
    };
    let mut root = Cells::unit(g.vertex_mask());
    let mut prefix = Vec::with_capacity(n);
    search.visit(&mut root, &mut prefix);
    let (code, perm) = search.best.expect("search visits at least one leaf");
    (
        perm[..n].to_vec(),
        CanonicalForm {
            order: n as u8,
            code,
        },
    )
}

impl Graph {
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }

    /// The representative of this graph's isomorphism class.
    pub fn canonical_graph(&self) -> Graph {
        let (perm, _) = canonical_labeling(self);
        self.permuted(&perm)
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.order() == other.order()
            && self.size() == other.size()
            && self.degree_sequence() == other.degree_sequence()
            && canonical_form(self) == canonical_form(other)
    }
}

#[derive(Clone)]
struct Cells {
    cells: [VertexSet; MAX_ORDER],
    len: usize,
}

impl Cells {
    fn unit(all: VertexSet) -> Cells {
        let mut cells = [0; MAX_ORDER];
        cells[0] = all;
        Cells { cells, len: 1 }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    /// Refines to the coarsest equitable partition finer than `self`.
    fn refine(&mut self, g: &Graph) {
        'outer: loop {
            for s in 0..self.len {
                let splitter = self.cells[s];
                for c in 0..self.len {
                    let cell = self.cells[c];
                    if cell.count_ones() == 1 {
                        continue;
                    }
                    let mut counts = [0u8; MAX_ORDER];
                    let mut lo = u8::MAX;
                    let mut hi = 0u8;
                    for v in bits(cell) {
                        let k = (g.neighbors(v) & splitter).count_ones() as u8;
                        counts[v] = k;
                        lo = lo.min(k);
                        hi = hi.max(k);
                    }
                    if lo == hi {
                        continue;
                    }
                    let mut parts = [0 as VertexSet; MAX_ORDER + 1];
                    for v in bits(cell) {
                        parts[counts[v] as usize] |= 1 << v;
                    }
                    let pieces: Vec<VertexSet> = parts[lo as usize..=hi as usize]
                        .iter()
                        .copied()
                        .filter(|p| *p != 0)
                        .collect();
                    self.replace(c, &pieces);
                    continue 'outer;
                }
            }
            break;
        }
    }

    fn replace(&mut self, at: usize, pieces: &[VertexSet]) {
        let extra = pieces.len() - 1;
        for i in (at + 1..self.len).rev() {
            self.cells[i + extra] = self.cells[i];
        }
        self.cells[at..at + pieces.len()].copy_from_slice(pieces);
        self.len += extra;
    }

    fn target_cell(&self) -> usize {
        (0..self.len)
            .filter(|&i| self.cells[i].count_ones() > 1)
            .min_by_key(|&i| self.cells[i].count_ones())
            .expect("non-discrete partition has a non-singleton cell")
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<(u128, [usize; MAX_ORDER])>,
    generators: Vec<[u8; MAX_ORDER]>,
}

impl Search<'_> {
    fn visit(&mut self, cells: &mut Cells, prefix: &mut Vec<usize>) {
        cells.refine(self.g);
        if cells.is_discrete(self.n) {
            self.leaf(cells);
            return;
        }
        let t = cells.target_cell();
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cells.cells[t]) {
            if !explored.is_empty() && self.in_explored_orbit(prefix, &explored, v) {
                continue;
            }
            let mut child = cells.clone();
            child.replace(t, &[1 << v, cells.cells[t] & !(1 << v)]);
            prefix.push(v);
            self.visit(&mut child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, cells: &Cells) {
        let mut perm = [0usize; MAX_ORDER];
        for (p, cell) in perm.iter_mut().zip(&cells.cells[..self.n]) {
            *p = cell.trailing_zeros() as usize;
        }
        let code = adjacency_code(self.g, &perm[..self.n]);
        match self.best {
            None => self.best = Some((code, perm)),
            Some((best, _)) if code > best => self.best = Some((code, perm)),
            Some((best, best_perm)) if code == best => {
                let mut gamma = [0u8; MAX_ORDER];
                let mut identity = true;
                for i in 0..self.n {
                    gamma[perm[i]] = best_perm[i] as u8;
                    identity &= perm[i] == best_perm[i];
                }
                if !identity {
                    self.generators.push(gamma);
                }
            }
            _ => {}
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the group
    /// generated by known automorphisms fixing `prefix` pointwise.
    fn in_explored_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
        fn find(p: &mut [u8; MAX_ORDER], mut x: usize) -> usize {
            while p[x] as usize != x {
                p[x] = p[p[x] as usize];
                x = p[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.generators {
            if prefix.iter().any(|&p| gamma[p] as usize != p) {
                continue;
            }
            any = true;
            for (x, &gx) in gamma.iter().enumerate().take(self.n) {
                let a = find(&mut parent, x);
                let b = find(&mut parent, gx as usize);
                if a != b {
                    parent[a.max(b)] = a.min(b) as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == root)
    }
}

fn adjacency_code(g: &Graph, perm: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..perm.len() {
        let row = g.neighbors(perm[j]);
        for &pi in &perm[..j] {
            code = (code << 1) | ((row >> pi) & 1) as u128;
        }
    }
    code
}
