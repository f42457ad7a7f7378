use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use super::context::SearchContext;
use super::mtn::mtn_search_counted;
use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, CanonicalForm, Graph};
use crate::oracles::{is_mtn, is_nil};

pub const CENSUS_MIN_ORDER: usize = 3;
pub const CENSUS_MAX_ORDER: usize = 8;

/// All maxnIL graphs of order `n` up to isomorphism, sorted by size and
/// then canonical form.
///
/// Isomorphism classes are generated by adding one edge at a time to the
/// canonical representatives of the previous size. nIL is minor-closed, so
/// classes that are intrinsically linked are not extended. A nIL class is
/// maximal iff none of its one-edge extensions is nIL.
pub fn census_maxnil(n: usize) -> Result<Vec<Graph>> {
    if !(CENSUS_MIN_ORDER..=CENSUS_MAX_ORDER).contains(&n) {
        return Err(Error::UnsupportedOrder {
            order: n,
            supported: CENSUS_MAX_ORDER,
        });
    }
    let mut level = vec![Graph::empty(n)];
    let mut maximal: Vec<(usize, CanonicalForm, Graph)> = Vec::new();
    while !level.is_empty() {
        let expanded: Vec<Vec<(CanonicalForm, Graph)>> = level
            .par_iter()
            .map(|g| {
                g.non_edges()
                    .map(|(u, v)| {
                        let child = g.with_edge(u, v);
                        let (perm, cf) = canonical_labeling(&child);
                        (cf, child.permuted(&perm))
                    })
                    .collect()
            })
            .collect();
        let mut children: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
        for (cf, c) in expanded.iter().flatten() {
            children.entry(*cf).or_insert(*c);
        }
        let nil: BTreeMap<CanonicalForm, bool> = children
            .par_iter()
            .map(|(cf, c)| (*cf, is_nil(c)))
            .collect();
        for (g, kids) in level.iter().zip(&expanded) {
            if kids.iter().all(|(cf, _)| !nil[cf]) {
                maximal.push((g.size(), g.canonical_form(), *g));
            }
        }
        level = children
            .into_iter()
            .filter(|(cf, _)| nil[cf])
            .map(|(_, c)| c)
            .collect();
    }
    maximal.sort_by_key(|(size, cf, _)| (*size, *cf));
    Ok(maximal.into_iter().map(|(_, _, g)| g).collect())
}

/// A search result together with the non-toroidal maxnIL roots (indices
/// into the context's list) whose search produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub graph: Graph,
    pub roots: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub toroidal_maxnil: Vec<Graph>,
    pub nontoroidal_maxnil: Vec<Graph>,
    /// Union of the searches from every non-toroidal maxnIL graph.
    pub candidates: Vec<Candidate>,
    /// Candidates that pass the MTN check: the non-maxnIL MTN graphs.
    pub script_m: Vec<Candidate>,
    /// `script_m` together with the toroidal maxnIL graphs, sorted by
    /// canonical form.
    pub all_mtn: Vec<Graph>,
    pub states_explored: usize,
}

/// Searches from every non-toroidal maxnIL graph, keeps the candidates that
/// are MTN, and adds the toroidal maxnIL graphs.
pub fn find_all_mtn_order9(ctx: &SearchContext) -> Result<CensusReport> {
    let mut candidates: BTreeMap<CanonicalForm, Candidate> = BTreeMap::new();
    let mut states = 0;
    for (i, root) in ctx.nontoroidal_maxnil().iter().enumerate() {
        let outcome = mtn_search_counted(root, ctx)?;
        states += outcome.states;
        for g in outcome.graphs {
            candidates
                .entry(g.canonical_form())
                .or_insert_with(|| Candidate {
                    graph: g,
                    roots: Vec::new(),
                })
                .roots
                .push(i);
        }
    }
    let flags = candidates
        .par_iter()
        .map(|(_, c)| is_mtn(&c.graph, ctx.db()))
        .collect::<Result<Vec<bool>>>()?;
    let candidates: Vec<Candidate> = candidates.into_values().collect();
    let script_m: Vec<Candidate> = candidates
        .iter()
        .zip(&flags)
        .filter(|(_, &keep)| keep)
        .map(|(c, _)| c.clone())
        .collect();
    let mut all_mtn: Vec<Graph> = script_m
        .iter()
        .map(|c| c.graph)
        .chain(ctx.toroidal_maxnil().iter().copied())
        .collect();
    all_mtn.sort_by_key(Graph::canonical_form);
    Ok(CensusReport {
        toroidal_maxnil: ctx.toroidal_maxnil().to_vec(),
        nontoroidal_maxnil: ctx.nontoroidal_maxnil().to_vec(),
        candidates,
        script_m,
        all_mtn,
        states_explored: states,
    })
}

impl CensusReport {
    /// Line-oriented text: counts first, then one graph6 string per line
    /// tagged with its role and provenance. Roots are 1-based positions in
    /// the non-toroidal list.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "toroidal_maxnil {}", self.toroidal_maxnil.len());
        let _ = writeln!(out, "nontoroidal_maxnil {}", self.nontoroidal_maxnil.len());
        let _ = writeln!(out, "states_explored {}", self.states_explored);
        let _ = writeln!(out, "candidates {}", self.candidates.len());
        let _ = writeln!(out, "script_m {}", self.script_m.len());
        let _ = writeln!(out, "all_mtn {}", self.all_mtn.len());
        for (i, g) in self.nontoroidal_maxnil.iter().enumerate() {
            let _ = writeln!(out, "N{} {} size={}", i + 1, g.to_graph6(), g.size());
        }
        for g in &self.toroidal_maxnil {
            let _ = writeln!(out, "M {} size={}", g.to_graph6(), g.size());
        }
        for c in &self.candidates {
            let tag = if self.script_m.contains(c) {
                "MTN"
            } else {
                "candidate"
            };
            let roots: Vec<String> = c.roots.iter().map(|r| format!("N{}", r + 1)).collect();
            let _ = writeln!(
                out,
                "{tag} {} size={} from={}",
                c.graph.to_graph6(),
                c.graph.size(),
                roots.join(",")
            );
        }
        out
    }
}
