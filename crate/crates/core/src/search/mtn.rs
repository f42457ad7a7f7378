//! Recursive search for order-9 MTN graphs that are not maxnIL.
//!
//! Starting from a nIL graph, a state survives the guard only if it has
//! more than `size_floor` edges, is connected, and is not a subgraph of any
//! toroidal maxnIL graph. A surviving non-toroidal state recurses into all
//! single-edge deletions; a surviving toroidal state is a result. States
//! are memoized by canonical form, so each isomorphism class is expanded
//! at most once per search.

use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::{DashMap, DashSet};
use rayon::prelude::*;

use super::context::{SearchContext, SEARCH_ORDER};
use crate::error::{Error, Result};
use crate::graph::{is_subgraph_iso, CanonicalForm, Graph};
use crate::oracles::is_nil;

/// Result of one search: canonical representatives sorted by canonical
/// form, and the number of distinct states examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub graphs: Vec<Graph>,
    pub states: usize,
}

pub fn mtn_search(g: &Graph, ctx: &SearchContext) -> Result<Vec<Graph>> {
    Ok(mtn_search_counted(g, ctx)?.graphs)
}

pub fn mtn_search_counted(g: &Graph, ctx: &SearchContext) -> Result<SearchOutcome> {
    if g.order() != SEARCH_ORDER {
        return Err(Error::invalid(format!(
            "search input must have order {SEARCH_ORDER}, found {}",
            g.order()
        )));
    }
    ctx.db().require(SEARCH_ORDER)?;
    if !is_nil(g) {
        return Err(Error::invalid(format!(
            "search input {} is intrinsically linked",
            g.to_graph6()
        )));
    }
    let search = Search {
        ctx,
        visited: DashSet::new(),
        found: DashMap::new(),
        states: AtomicUsize::new(0),
    };
    search.visited.insert(g.canonical_form());
    search.explore(*g);
    let mut graphs: Vec<(CanonicalForm, Graph)> = search.found.into_iter().collect();
    graphs.sort_by_key(|(cf, _)| *cf);
    Ok(SearchOutcome {
        graphs: graphs.into_iter().map(|(_, g)| g).collect(),
        states: search.states.into_inner(),
    })
}

/// The guard shared by the search and its tests.
pub fn passes_guard(g: &Graph, ctx: &SearchContext) -> bool {
    g.size() > ctx.size_floor()
        && g.is_connected()
        && !ctx.toroidal_maxnil().iter().any(|m| is_subgraph_iso(g, m))
}

struct Search<'a> {
    ctx: &'a SearchContext,
    visited: DashSet<CanonicalForm>,
    found: DashMap<CanonicalForm, Graph>,
    states: AtomicUsize,
}

impl Search<'_> {
    fn explore(&self, g: Graph) {
        self.states.fetch_add(1, Ordering::Relaxed);
        if !passes_guard(&g, self.ctx) {
            return;
        }
        let toroidal = self
            .ctx
            .db()
            .is_toroidal(&g)
            .expect("order 9 support checked on entry");
        if toroidal {
            let (perm, cf) = crate::graph::canonical_labeling(&g);
            self.found.insert(cf, g.permuted(&perm));
            return;
        }
        let children: Vec<Graph> = g
            .edges()
            .map(|(u, v)| g.without_edge(u, v))
            .filter(|c| self.visited.insert(c.canonical_form()))
            .collect();
        children.into_par_iter().for_each(|c| self.explore(c));
    }
}
