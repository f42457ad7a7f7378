//! Verifiers that narrow the order-9 search space.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::context::{SearchContext, SEARCH_ORDER};
use crate::error::Result;
use crate::graph::{has_minor, is_subgraph_iso, CanonicalForm, Graph};
use crate::oracles::{is_tn, ObstructionDb, SMALLEST_OBSTRUCTION_ORDER};

/// Order-9 obstructions occurring as subgraphs of non-toroidal maxnIL
/// graphs of order 9.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ObstructionSetS {
    /// Canonical representatives, sorted by canonical form.
    pub graphs: Vec<Graph>,
    /// Order-8 obstructions found as minors of some non-toroidal maxnIL
    /// graph. Reported separately; they are not members of the set.
    pub order8_minors: Vec<Graph>,
}

pub fn extract_obstruction_set_s(ctx: &SearchContext) -> Result<ObstructionSetS> {
    let db = ctx.db();
    db.require(SEARCH_ORDER)?;
    let mut graphs: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let mut order8: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for host in ctx.nontoroidal_maxnil() {
        let hits: Vec<&Graph> = db
            .obstructions(SEARCH_ORDER)
            .par_iter()
            .filter(|b| is_subgraph_iso(b, host))
            .collect();
        for b in hits {
            graphs.insert(b.canonical_form(), b.canonical_graph());
        }
        for b in db.obstructions(SMALLEST_OBSTRUCTION_ORDER) {
            if has_minor(host, b) {
                order8.insert(b.canonical_form(), b.canonical_graph());
            }
        }
    }
    Ok(ObstructionSetS {
        graphs: graphs.into_values().collect(),
        order8_minors: order8.into_values().collect(),
    })
}

/// A size-19 graph `H - e` with no edge `e'` making `H - e + e'` TN.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Size19Counterexample {
    pub obstruction: Graph,
    pub removed: (usize, usize),
}

/// First `(H, e)` in `s` (in set order, then edge order) for which no
/// missing edge `e' ≠ e` of `H - e` gives a TN graph.
pub fn find_size19_counterexample(
    s: &ObstructionSetS,
    db: &ObstructionDb,
) -> Result<Option<Size19Counterexample>> {
    let cases: Vec<(Graph, (usize, usize))> = s
        .graphs
        .iter()
        .flat_map(|h| h.edges().map(move |e| (*h, e)))
        .collect();
    let rescued = cases
        .par_iter()
        .map(|(h, (u, v))| {
            let base = h.without_edge(*u, *v);
            for (a, b) in base.non_edges() {
                if (a, b) == (*u, *v) {
                    continue;
                }
                if is_tn(&base.with_edge(a, b), db)? {
                    return Ok(true);
                }
            }
            Ok(false)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(cases
        .into_iter()
        .zip(rescued)
        .find(|(_, ok)| !ok)
        .map(|((obstruction, removed), _)| Size19Counterexample {
            obstruction,
            removed,
        }))
}

/// True iff every `H - e` (H in `s`, e an edge of H) can be extended by
/// some other edge to a TN graph, which rules out size-19 members of the
/// non-maxnIL MTN set.
pub fn verify_size19_exclusion(s: &ObstructionSetS, db: &ObstructionDb) -> Result<bool> {
    Ok(find_size19_counterexample(s, db)?.is_none())
}
