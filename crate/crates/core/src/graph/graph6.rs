//! graph6 encoding for graphs of order at most [`MAX_ORDER`].

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is accepted).
/// The error message describes the problem; callers attach line numbers.
pub fn decode(s: &str) -> std::result::Result<Graph, String> {
    let s = s.trim_end_matches(['\r', '\n']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err("empty graph6 string".into());
    };
    if let Some(b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(format!("invalid graph6 character {:?}", *b as char));
    }
    if first == 126 {
        return Err(format!("order above {MAX_ORDER} is not supported"));
    }
    let n = (first - 63) as usize;
    if n > MAX_ORDER {
        return Err(format!("order {n} exceeds the maximum of {MAX_ORDER}"));
    }
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    let body = &bytes[1..];
    if body.len() != expected {
        return Err(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    if bit % 6 != 0 && (body[bit / 6] - 63) & ((1 << (6 - bit % 6)) - 1) != 0 {
        return Err("non-zero padding bits".into());
    }
    Ok(g)
}

/// Parses one graph per non-empty line; errors carry 1-based line numbers.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(decode(line).map_err(|m| Error::parse(i + 1, m))?);
    }
    Ok(graphs)
}

impl Graph {
    pub fn to_graph6(&self) -> String {
        encode(self)
    }

    pub fn from_graph6(s: &str) -> Result<Graph> {
        decode(s.trim()).map_err(|m| Error::parse(1, m))
    }
}
