use std::collections::HashSet;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::load_graph6_file;
use crate::oracles::{is_maxnil, ObstructionDb};

/// All graphs handled by the MTN search have this order.
pub const SEARCH_ORDER: usize = 9;
/// Published number of maxnIL graphs of order 9.
pub const MAXNIL_ORDER9_COUNT: usize = 20;
/// Graphs with at most this many edges are cut off by the search guard.
pub const DEFAULT_SIZE_FLOOR: usize = 19;

pub const MAXNIL_ORDER9_FILE: &str = "maxnil_order9.g6";

/// The maxnIL graphs of order 9 split by toroidality, plus the oracle and
/// size floor used by the search.
#[derive(Clone, Debug)]
pub struct SearchContext {
    toroidal_maxnil: Vec<Graph>,
    nontoroidal_maxnil: Vec<Graph>,
    db: ObstructionDb,
    size_floor: usize,
}

impl SearchContext {
    /// Checks that every graph has order 9 and is maxnIL, and that the
    /// split agrees with `db`.
    pub fn new(
        toroidal_maxnil: Vec<Graph>,
        nontoroidal_maxnil: Vec<Graph>,
        db: ObstructionDb,
    ) -> Result<SearchContext> {
        db.require(SEARCH_ORDER)?;
        for (set, expect_toroidal) in [(&toroidal_maxnil, true), (&nontoroidal_maxnil, false)] {
            for g in set {
                check_maxnil_order9(g)?;
                if db.is_toroidal(g)? != expect_toroidal {
                    return Err(Error::Validation(format!(
                        "{} is listed as {}toroidal but is not",
                        g.to_graph6(),
                        if expect_toroidal { "" } else { "non-" }
                    )));
                }
            }
        }
        let canon = |v: Vec<Graph>| sorted(v.iter().map(Graph::canonical_graph).collect());
        Ok(SearchContext {
            toroidal_maxnil: canon(toroidal_maxnil),
            nontoroidal_maxnil: canon(nontoroidal_maxnil),
            db,
            size_floor: DEFAULT_SIZE_FLOOR,
        })
    }

    pub fn with_size_floor(mut self, floor: usize) -> SearchContext {
        self.size_floor = floor;
        self
    }

    pub fn toroidal_maxnil(&self) -> &[Graph] {
        &self.toroidal_maxnil
    }

    pub fn nontoroidal_maxnil(&self) -> &[Graph] {
        &self.nontoroidal_maxnil
    }

    pub fn db(&self) -> &ObstructionDb {
        &self.db
    }

    pub fn size_floor(&self) -> usize {
        self.size_floor
    }
}

fn check_maxnil_order9(g: &Graph) -> Result<()> {
    if g.order() != SEARCH_ORDER {
        return Err(Error::Validation(format!(
            "{} has order {}, expected {SEARCH_ORDER}",
            g.to_graph6(),
            g.order()
        )));
    }
    if !is_maxnil(g) {
        return Err(Error::Validation(format!(
            "{} is not maxnIL",
            g.to_graph6()
        )));
    }
    Ok(())
}

/// Partitions the order-9 maxnIL graphs into toroidal and non-toroidal.
///
/// The input must hold exactly the twenty order-9 maxnIL graphs, pairwise
/// non-isomorphic; each one is re-verified.
pub fn classify_maxnil(maxnil_order9: &[Graph], db: &ObstructionDb) -> Result<SearchContext> {
    if maxnil_order9.is_empty() {
        return Err(Error::Validation("no maxnIL graphs given".into()));
    }
    db.require(SEARCH_ORDER)?;
    maxnil_order9
        .par_iter()
        .map(check_maxnil_order9)
        .collect::<Result<Vec<()>>>()?;
    let mut seen = HashSet::new();
    for g in maxnil_order9 {
        if !seen.insert(g.canonical_form()) {
            return Err(Error::Validation(format!(
                "{} is listed twice",
                g.to_graph6()
            )));
        }
    }
    if maxnil_order9.len() != MAXNIL_ORDER9_COUNT {
        return Err(Error::Validation(format!(
            "expected {MAXNIL_ORDER9_COUNT} maxnIL graphs of order {SEARCH_ORDER}, found {}",
            maxnil_order9.len()
        )));
    }
    let flags = maxnil_order9
        .par_iter()
        .map(|g| db.is_toroidal(g))
        .collect::<Result<Vec<bool>>>()?;
    let (toroidal, nontoroidal): (Vec<_>, Vec<_>) =
        maxnil_order9.iter().zip(flags).partition(|(_, t)| *t);
    let canon =
        |v: Vec<(&Graph, bool)>| sorted(v.into_iter().map(|(g, _)| g.canonical_graph()).collect());
    Ok(SearchContext {
        toroidal_maxnil: canon(toroidal),
        nontoroidal_maxnil: canon(nontoroidal),
        db: db.clone(),
        size_floor: DEFAULT_SIZE_FLOOR,
    })
}

fn sorted(mut v: Vec<Graph>) -> Vec<Graph> {
    v.sort_by_key(Graph::canonical_form);
    v
}

/// Obstruction database plus the order-9 maxnIL list from a data directory.
#[derive(Clone, Debug)]
pub struct DataSet {
    pub db: ObstructionDb,
    pub maxnil_order9: Option<Vec<Graph>>,
}

impl DataSet {
    pub fn load(dir: &Path) -> Result<DataSet> {
        let db = ObstructionDb::load(dir)?;
        let path = dir.join(MAXNIL_ORDER9_FILE);
        let maxnil_order9 = if path.exists() {
            Some(load_graph6_file(&path)?)
        } else {
            None
        };
        Ok(DataSet { db, maxnil_order9 })
    }

    /// Loads and classifies; fails if any required file is missing.
    pub fn search_context(&self) -> Result<SearchContext> {
        let maxnil = self.maxnil_order9.as_ref().ok_or_else(|| {
            Error::Validation(format!("{MAXNIL_ORDER9_FILE} not found in data directory"))
        })?;
        classify_maxnil(maxnil, &self.db)
    }
}
