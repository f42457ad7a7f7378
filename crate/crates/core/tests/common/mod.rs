//! A small order-9 world for exercising the search without external data.
//!
//! The real order-9 obstructions are not bundled, and every order-8
//! obstruction contains `K6`, so with the built-in database alone every nIL
//! graph would count as toroidal. The fake database below declares one
//! 22-edge subgraph of a cone over a triangulation to be an obstruction of
//! order 9, which gives the search something to cut through.

#![allow(dead_code)]

pub mod brute;

use torlink_core::oracles::ObstructionDb;
use torlink_core::search::SearchContext;
use torlink_core::Graph;

/// Cone over a maximal planar graph on the vertices `0..8`, apex 8.
pub fn cone(triangulation: &[(usize, usize)]) -> Graph {
    let mut edges = triangulation.to_vec();
    edges.extend((0..8).map(|v| (v, 8)));
    Graph::from_edges(9, &edges).unwrap()
}

/// Hexagonal bipyramid: rim 0..6, poles 6 and 7.
pub fn bipyramid() -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    for i in 0..6 {
        e.push((i, 6));
        e.push((i, 7));
    }
    e
}

/// Square antiprism capped on both square faces.
pub fn capped_antiprism() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..4 {
        e.push((i, (i + 1) % 4));
        e.push((4 + i, 4 + (i + 1) % 4));
        e.push((i, 4 + i));
        e.push((i, 4 + (i + 1) % 4));
    }
    // the caps become the apex-free quadrilateral diagonals
    e.push((0, 2));
    e.push((5, 7));
    e
}

pub fn nontoroidal_root() -> Graph {
    cone(&bipyramid())
}

pub fn fake_obstruction() -> Graph {
    let g = nontoroidal_root();
    [(0, 8), (2, 8), (4, 8), (1, 6)]
        .iter()
        .fold(g, |g, &(u, v)| g.delete_edge(u, v).unwrap())
}

pub fn fake_db() -> ObstructionDb {
    ObstructionDb::builtin()
        .with_order(9, vec![fake_obstruction()])
        .unwrap()
}

pub fn toroidal_root() -> Graph {
    cone(&capped_antiprism())
}

pub fn context() -> SearchContext {
    SearchContext::new(vec![toroidal_root()], vec![nontoroidal_root()], fake_db()).unwrap()
}
