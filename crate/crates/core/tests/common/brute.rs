//! Slow reference implementations that share no code with the library
//! beyond the `Graph` container.

use std::collections::{HashSet, VecDeque};

use torlink_core::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let p = pairs(n);
    (0u32..1 << p.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = p
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Isomorphism invariant: the smallest adjacency bit string over all
/// relabelings.
pub fn iso_key(g: &Graph) -> (usize, u64) {
    let n = g.order();
    let p = pairs(n);
    let key = permutations(n)
        .iter()
        .map(|perm| {
            p.iter().fold(0u64, |acc, &(u, v)| {
                acc << 1 | g.has_edge(perm[u], perm[v]) as u64
            })
        })
        .min()
        .unwrap_or(0);
    (n, key)
}

pub fn is_subgraph(pattern: &Graph, host: &Graph) -> bool {
    let (k, n) = (pattern.order(), host.order());
    if k > n {
        return false;
    }
    fn rec(pattern: &Graph, host: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == pattern.order() {
            return true;
        }
        for v in 0..host.order() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| !pattern.has_edge(i, j) || host.has_edge(v, map[j])) {
                map.push(v);
                if rec(pattern, host, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(pattern, host, &mut Vec::new())
}

fn one_step(g: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        out.push(g.delete_edge(u, v).unwrap());
        out.push(g.contract_edge(u, v).unwrap());
    }
    for v in 0..g.order() {
        out.push(g.delete_vertex(v).unwrap());
    }
    out
}

/// Isomorphism keys of every minor of `g`, by closure under single
/// deletions and contractions.
pub fn minor_keys(g: &Graph) -> HashSet<(usize, u64)> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([*g]);
    seen.insert(iso_key(g));
    while let Some(h) = queue.pop_front() {
        for m in one_step(&h) {
            if seen.insert(iso_key(&m)) {
                queue.push_back(m);
            }
        }
    }
    seen
}

/// Simple cycles as vertex sequences: smallest vertex first, and the
/// second vertex smaller than the last.
pub fn cycles(g: &Graph, min: usize, max: usize) -> HashSet<Vec<usize>> {
    fn rec(
        g: &Graph,
        path: &mut Vec<usize>,
        min: usize,
        max: usize,
        out: &mut HashSet<Vec<usize>>,
    ) {
        let (first, last) = (path[0], *path.last().unwrap());
        if path.len() >= 3 && path.len() >= min && g.has_edge(last, first) && path[1] < last {
            out.insert(path.clone());
        }
        if path.len() == max {
            return;
        }
        for v in first + 1..g.order() {
            if !path.contains(&v) && g.has_edge(last, v) {
                path.push(v);
                rec(g, path, min, max, out);
                path.pop();
            }
        }
    }
    let mut out = HashSet::new();
    for s in 0..g.order() {
        rec(g, &mut vec![s], min, max, &mut out);
    }
    out
}
