use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};

/// A graph drawn in the unit square with opposite sides identified.
///
/// `up` holds ordered pairs `(u, v)` whose edge leaves through the top side
/// when traversed from `u` to `v` (and re-enters at the bottom); `right`
/// likewise for the right side. An edge crosses each side at most once but
/// may cross both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusDiagram {
    graph: Graph,
    up: Vec<(usize, usize)>,
    right: Vec<(usize, usize)>,
}

impl TorusDiagram {
    pub fn new(
        graph: Graph,
        up: Vec<(usize, usize)>,
        right: Vec<(usize, usize)>,
    ) -> Result<TorusDiagram> {
        check_crossings(&graph, &up, "up")?;
        check_crossings(&graph, &right, "right")?;
        Ok(TorusDiagram { graph, up, right })
    }

    /// Diagram in which no edge crosses the boundary.
    pub fn planar(graph: Graph) -> TorusDiagram {
        TorusDiagram {
            graph,
            up: Vec::new(),
            right: Vec::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn up(&self) -> &[(usize, usize)] {
        &self.up
    }

    pub fn right(&self) -> &[(usize, usize)] {
        &self.right
    }

    pub fn crossing_matrix(&self) -> CrossingMatrix {
        let n = self.graph.order();
        let mut m = CrossingMatrix {
            n,
            entries: vec![(0, 0); n * n],
        };
        for &(j, k) in &self.up {
            m.entries[j * n + k].0 += 1;
            m.entries[k * n + j].0 -= 1;
        }
        for &(j, k) in &self.right {
            m.entries[j * n + k].1 += 1;
            m.entries[k * n + j].1 -= 1;
        }
        m
    }

    /// Parses the line-oriented embedding format:
    ///
    /// ```text
    /// order 6
    /// edges 1-2 1-3 ...
    /// up 5->1 6->1
    /// right 3->2
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<TorusDiagram> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut next = |keyword: &str| -> Result<(usize, Vec<String>)> {
            let (no, line) = lines
                .next()
                .ok_or_else(|| Error::parse(0, format!("missing `{keyword}` line")))?;
            let mut words = line.split_whitespace();
            if words.next() != Some(keyword) {
                return Err(Error::parse(
                    no,
                    format!("expected a line starting with `{keyword}`"),
                ));
            }
            Ok((no, words.map(str::to_owned).collect()))
        };

        let (no, words) = next("order")?;
        let order = match words.as_slice() {
            [n] => n
                .parse::<usize>()
                .map_err(|_| Error::parse(no, format!("bad order {n:?}")))?,
            _ => return Err(Error::parse(no, "expected `order <n>`")),
        };
        if order > crate::graph::MAX_ORDER {
            return Err(Error::parse(no, format!("order {order} is too large")));
        }

        let (no, words) = next("edges")?;
        let mut edges = Vec::with_capacity(words.len());
        for w in &words {
            edges.push(parse_pair(w, "-", order).map_err(|m| Error::parse(no, m))?);
        }
        let graph =
            Graph::from_edges(order, &edges).map_err(|e| Error::parse(no, e.to_string()))?;

        let mut crossings = |keyword: &str| -> Result<Vec<(usize, usize)>> {
            let (no, words) = next(keyword)?;
            let pairs = words
                .iter()
                .map(|w| parse_pair(w, "->", order).map_err(|m| Error::parse(no, m)))
                .collect::<Result<Vec<_>>>()?;
            check_crossings(&graph, &pairs, keyword)
                .map_err(|e| Error::Validation(format!("line {no}: {e}")))?;
            Ok(pairs)
        };
        let up = crossings("up")?;
        let right = crossings("right")?;
        if let Some((no, _)) = lines.next() {
            return Err(Error::parse(no, "unexpected trailing line"));
        }
        Ok(TorusDiagram { graph, up, right })
    }
}

impl fmt::Display for TorusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}", self.graph.order())?;
        f.write_str("edges")?;
        for (u, v) in self.graph.edges() {
            write!(f, " {}-{}", u + 1, v + 1)?;
        }
        f.write_str("\nup")?;
        for (u, v) in &self.up {
            write!(f, " {}->{}", u + 1, v + 1)?;
        }
        f.write_str("\nright")?;
        for (u, v) in &self.right {
            write!(f, " {}->{}", u + 1, v + 1)?;
        }
        writeln!(f)
    }
}

fn parse_pair(word: &str, sep: &str, order: usize) -> std::result::Result<(usize, usize), String> {
    let (a, b) = word
        .split_once(sep)
        .ok_or_else(|| format!("expected `u{sep}v`, found {word:?}"))?;
    let vertex = |s: &str| -> std::result::Result<usize, String> {
        match s.parse::<usize>() {
            Ok(v) if (1..=order).contains(&v) => Ok(v - 1),
            _ => Err(format!("bad vertex {s:?} in {word:?}")),
        }
    };
    Ok((vertex(a)?, vertex(b)?))
}

fn check_crossings(g: &Graph, pairs: &[(usize, usize)], list: &str) -> Result<()> {
    let mut seen = Vec::with_capacity(pairs.len());
    for &(u, v) in pairs {
        if !g.has_edge(u, v) {
            return Err(Error::Validation(format!(
                "{list} crossing {}->{} is not an edge",
                u + 1,
                v + 1
            )));
        }
        let key = (u.min(v), u.max(v));
        if seen.contains(&key) {
            return Err(Error::Validation(format!(
                "edge {}-{} appears twice in the {list} list",
                key.0 + 1,
                key.1 + 1
            )));
        }
        seen.push(key);
    }
    Ok(())
}

/// Signed boundary crossings per ordered vertex pair: entry `(j, k)` is the
/// (top, right) contribution of traversing edge `j -> k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingMatrix {
    n: usize,
    entries: Vec<(i64, i64)>,
}

impl CrossingMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: usize, k: usize) -> (i64, i64) {
        self.entries[j * self.n + k]
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|j| {
            (0..self.n).all(|k| {
                let (a, b) = self.get(j, k);
                self.get(k, j) == (-a, -b)
            })
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == (0, 0))
    }

    /// Componentwise sum along the closed traversal of `cycle`.
    pub fn traverse(&self, cycle: &Cycle) -> (i64, i64) {
        cycle.steps().fold((0, 0), |(p, q), (a, b)| {
            let (dp, dq) = self.get(a, b);
            (p + dp, q + dq)
        })
    }
}
