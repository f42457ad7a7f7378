//! Forbidden-minor predicates.
//!
//! A graph is nIL iff it has no Petersen-family minor, and (for order at
//! most 12) toroidal iff it has no toroidal obstruction of order at most its
//! own as a minor. TN is the conjunction; maxnIL and MTN are maximality at
//! fixed order.

mod obstructions;
mod petersen;

pub use obstructions::{
    k8_minus_2k2_p3, k8_minus_k23, k8_minus_k3, obstruction_file_name, ObstructionDb,
    SMALLEST_OBSTRUCTION_ORDER,
};
pub use petersen::{petersen_family, PetersenFamily};

use crate::error::Result;
use crate::graph::Graph;

/// Every Petersen-family member has 15 edges and at least 6 vertices.
const FAMILY_MIN_SIZE: usize = 15;
const FAMILY_MIN_ORDER: usize = 6;

pub fn is_nil(g: &Graph) -> bool {
    if g.order() < FAMILY_MIN_ORDER || g.size() < FAMILY_MIN_SIZE {
        return true;
    }
    !petersen_family().minor_set().any_minor_of(g)
}

/// A Petersen-family minor of `g`, if `g` is intrinsically linked.
pub fn linking_witness(g: &Graph) -> Option<Graph> {
    petersen_family().minor_set().find_minor_of(g).copied()
}

pub fn is_toroidal(g: &Graph, db: &ObstructionDb) -> Result<bool> {
    db.is_toroidal(g)
}

pub fn is_tn(g: &Graph, db: &ObstructionDb) -> Result<bool> {
    db.require(g.order())?;
    Ok(is_nil(g) && db.is_toroidal(g)?)
}

/// nIL, and adding any missing edge makes it intrinsically linked.
pub fn is_maxnil(g: &Graph) -> bool {
    is_nil(g) && g.non_edges().all(|(u, v)| !is_nil(&g.with_edge(u, v)))
}

/// TN, and adding any missing edge breaks TN.
pub fn is_mtn(g: &Graph, db: &ObstructionDb) -> Result<bool> {
    if !is_tn(g, db)? {
        return Ok(false);
    }
    for (u, v) in g.non_edges() {
        if is_tn(&g.with_edge(u, v), db)? {
            return Ok(false);
        }
    }
    Ok(true)
}
