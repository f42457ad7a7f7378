//! Toroidal minor-order obstructions, grouped by order.
//!
//! No obstruction has fewer than eight vertices, so orders up to seven are
//! always supported with an empty obstruction list. The three order-8
//! obstructions are built in; higher orders come from
//! `obstructions_order<k>.g6` files and are supported only when every
//! smaller order is present too.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph, MinorSet, MAX_ORDER};
use crate::io::load_graph6_file;

pub const SMALLEST_OBSTRUCTION_ORDER: usize = 8;

#[derive(Clone, Debug)]
pub struct ObstructionDb {
    by_order: BTreeMap<usize, Vec<Graph>>,
    max_supported_order: usize,
    /// `cumulative[k]` holds every obstruction of order at most `k`.
    cumulative: Vec<MinorSet>,
}

/// `K8` minus a triangle (25 edges).
pub fn k8_minus_k3() -> Graph {
    Graph::complete_minus(8, &[(0, 1), (0, 2), (1, 2)]).expect("valid pairs")
}

/// `K8` minus two disjoint edges and a disjoint three-vertex path (24 edges).
pub fn k8_minus_2k2_p3() -> Graph {
    Graph::complete_minus(8, &[(0, 1), (2, 3), (4, 5), (5, 6)]).expect("valid pairs")
}

/// `K8` minus `K_{2,3}` on parts `{1,2}` and `{3,4,5}` (22 edges).
pub fn k8_minus_k23() -> Graph {
    let removed: Vec<(usize, usize)> = [0, 1]
        .iter()
        .flat_map(|&a| [2, 3, 4].into_iter().map(move |b| (a, b)))
        .collect();
    Graph::complete_minus(8, &removed).expect("valid pairs")
}

impl ObstructionDb {
    /// Only the built-in order-8 obstructions; supports graphs of order ≤ 8.
    pub fn builtin() -> ObstructionDb {
        let mut by_order = BTreeMap::new();
        by_order.insert(8, vec![k8_minus_k3(), k8_minus_2k2_p3(), k8_minus_k23()]);
        ObstructionDb::from_parts(by_order, 8)
    }

    fn from_parts(by_order: BTreeMap<usize, Vec<Graph>>, max_supported_order: usize) -> Self {
        let cumulative = (0..=max_supported_order)
            .map(|k| MinorSet::new(by_order.range(..=k).flat_map(|(_, gs)| gs.iter().copied())))
            .collect();
        ObstructionDb {
            by_order,
            max_supported_order,
            cumulative,
        }
    }

    /// Adds the obstructions of the next unsupported order.
    pub fn with_order(&self, order: usize, graphs: Vec<Graph>) -> Result<ObstructionDb> {
        if order != self.max_supported_order + 1 {
            return Err(Error::Validation(format!(
                "obstructions of order {order} given, but order {} is the next one needed",
                self.max_supported_order + 1
            )));
        }
        if order > MAX_ORDER {
            return Err(Error::Validation(format!(
                "order {order} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        let mut seen = HashSet::new();
        for (i, g) in graphs.iter().enumerate() {
            if g.order() != order {
                return Err(Error::Validation(format!(
                    "obstruction #{} for order {order} has order {}",
                    i + 1,
                    g.order()
                )));
            }
            if !seen.insert(g.canonical_form()) {
                return Err(Error::Validation(format!(
                    "obstruction #{} for order {order} is a duplicate",
                    i + 1
                )));
            }
        }
        let mut by_order = self.by_order.clone();
        by_order.insert(order, graphs);
        Ok(ObstructionDb::from_parts(by_order, order))
    }

    /// Built-in order 8, then `obstructions_order<k>.g6` for k = 9, 10, ...
    /// until the first missing file. An `obstructions_order8.g6` file, if
    /// present, must agree with the built-in set up to isomorphism.
    pub fn load(dir: &Path) -> Result<ObstructionDb> {
        let mut db = ObstructionDb::builtin();
        let eight = dir.join(obstruction_file_name(8));
        if eight.exists() {
            let file: HashSet<CanonicalForm> = load_graph6_file(&eight)?
                .iter()
                .map(Graph::canonical_form)
                .collect();
            let builtin: HashSet<CanonicalForm> = db
                .obstructions(8)
                .iter()
                .map(Graph::canonical_form)
                .collect();
            if file != builtin {
                return Err(Error::Validation(format!(
                    "{} does not match the three order-8 obstructions",
                    eight.display()
                )));
            }
        }
        for k in 9..=MAX_ORDER {
            let path = dir.join(obstruction_file_name(k));
            if !path.exists() {
                break;
            }
            db = db.with_order(k, load_graph6_file(&path)?)?;
        }
        Ok(db)
    }

    pub fn max_supported_order(&self) -> usize {
        self.max_supported_order
    }

    pub fn supports(&self, order: usize) -> bool {
        order <= self.max_supported_order
    }

    /// `B_k`; empty for orders below eight or beyond the loaded data.
    pub fn obstructions(&self, order: usize) -> &[Graph] {
        self.by_order.get(&order).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn orders(&self) -> impl Iterator<Item = (usize, &[Graph])> {
        self.by_order.iter().map(|(k, v)| (*k, v.as_slice()))
    }

    pub fn require(&self, order: usize) -> Result<()> {
        if self.supports(order) {
            Ok(())
        } else {
            Err(Error::UnsupportedOrder {
                order,
                supported: self.max_supported_order,
            })
        }
    }

    /// True iff no obstruction of order at most `order(g)` is a minor of `g`.
    pub fn is_toroidal(&self, g: &Graph) -> Result<bool> {
        self.require(g.order())?;
        Ok(!self.cumulative[g.order()].any_minor_of(g))
    }

    /// An obstruction witnessing non-toroidality, if any.
    pub fn obstruction_minor(&self, g: &Graph) -> Result<Option<Graph>> {
        self.require(g.order())?;
        Ok(self.cumulative[g.order()].find_minor_of(g).copied())
    }

    /// Checks that every stored graph is an obstruction relative to the
    /// rest of the database: non-toroidal, and every single-edge deletion
    /// and contraction is toroidal.
    pub fn validate(&self) -> Result<()> {
        for (&k, graphs) in &self.by_order {
            for (i, h) in graphs.iter().enumerate() {
                let label = || format!("obstruction #{} of order {k}", i + 1);
                let smaller = &self.cumulative[k - 1];
                if smaller.any_minor_of(h) {
                    return Err(Error::Validation(format!(
                        "{} contains a smaller obstruction as a minor",
                        label()
                    )));
                }
                for (u, v) in h.edges() {
                    if !self.is_toroidal(&h.without_edge(u, v))? {
                        return Err(Error::Validation(format!(
                            "{} minus edge {}-{} is still non-toroidal",
                            label(),
                            u + 1,
                            v + 1
                        )));
                    }
                    if !self.is_toroidal(&h.contracted(u, v))? {
                        return Err(Error::Validation(format!(
                            "{} with edge {}-{} contracted is still non-toroidal",
                            label(),
                            u + 1,
                            v + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl Default for ObstructionDb {
    fn default() -> Self {
        ObstructionDb::builtin()
    }
}

pub fn obstruction_file_name(order: usize) -> String {
    format!("obstructions_order{order}.g6")
}
