//! Link detection among disjoint cycles of a torus diagram.
//!
//! Two disjoint closed curves on the torus form a non-split link exactly
//! when they share a slope `p/q` with `p, q ≠ 0`. Inessential curves and
//! curves of slope 0 or ∞ never link.

use std::collections::BTreeMap;
use std::fmt;

use super::{SlopeClass, TorusDiagram};
use crate::graph::{enumerate_cycles, Cycle};

/// Two vertex-disjoint cycles that form a link in the embedding.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinkWitness {
    pub cycle_a: Cycle,
    pub cycle_b: Cycle,
    pub slope: SlopeClass,
}

impl fmt::Display for LinkWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} slope {}",
            self.cycle_a, self.cycle_b, self.slope
        )
    }
}

/// Two disjoint essential cycles with different slopes. This cannot occur
/// in a genuine embedding, so it points at a faulty diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlopeConflict {
    pub cycle_a: Cycle,
    pub slope_a: SlopeClass,
    pub cycle_b: Cycle,
    pub slope_b: SlopeClass,
}

impl fmt::Display for SlopeConflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "disjoint cycles {} (slope {}) and {} (slope {}) disagree",
            self.cycle_a, self.slope_a, self.cycle_b, self.slope_b
        )
    }
}

/// Cycle lengths examined by [`TorusDiagram::find_links_in`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleRange {
    pub min: usize,
    pub max: usize,
}

impl CycleRange {
    /// `3..=n-3`: a disjoint partner needs three vertices of its own.
    pub fn for_order(n: usize) -> CycleRange {
        CycleRange {
            min: 3,
            max: n.saturating_sub(3),
        }
    }
}

impl TorusDiagram {
    fn classified_cycles(&self, range: CycleRange) -> Vec<(Cycle, SlopeClass)> {
        let m = self.crossing_matrix();
        enumerate_cycles(self.graph(), range.min, range.max)
            .into_iter()
            .map(|c| {
                let (p, q) = m.traverse(&c);
                (c, SlopeClass::from_crossings(p, q))
            })
            .collect()
    }

    pub fn find_links(&self) -> Vec<LinkWitness> {
        self.find_links_in(CycleRange::for_order(self.graph().order()))
    }

    /// All linked pairs among cycles with length in `range`, sorted by
    /// (first cycle, second cycle).
    pub fn find_links_in(&self, range: CycleRange) -> Vec<LinkWitness> {
        let mut groups: BTreeMap<SlopeClass, Vec<Cycle>> = BTreeMap::new();
        for (c, slope) in self.classified_cycles(range) {
            if slope.is_linking() {
                groups.entry(slope).or_default().push(c);
            }
        }
        let mut links = Vec::new();
        for (slope, cycles) in &groups {
            for (i, a) in cycles.iter().enumerate() {
                for b in &cycles[i + 1..] {
                    if a.is_disjoint(b) {
                        let (cycle_a, cycle_b) = if a <= b { (a, b) } else { (b, a) };
                        links.push(LinkWitness {
                            cycle_a: cycle_a.clone(),
                            cycle_b: cycle_b.clone(),
                            slope: *slope,
                        });
                    }
                }
            }
        }
        links.sort();
        links
    }

    pub fn is_linkless(&self) -> bool {
        self.find_links().is_empty()
    }

    /// Disjoint essential cycles whose slopes differ, sorted.
    pub fn slope_conflicts(&self, range: CycleRange) -> Vec<SlopeConflict> {
        let essential: Vec<(Cycle, SlopeClass)> = self
            .classified_cycles(range)
            .into_iter()
            .filter(|(_, s)| s.is_essential())
            .collect();
        let mut out = Vec::new();
        for (i, (a, sa)) in essential.iter().enumerate() {
            for (b, sb) in &essential[i + 1..] {
                if a.is_disjoint(b) && !sa.same_slope(sb) {
                    out.push(SlopeConflict {
                        cycle_a: a.clone(),
                        slope_a: *sa,
                        cycle_b: b.clone(),
                        slope_b: *sb,
                    });
                }
            }
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn two_triangles(up: Vec<(usize, usize)>, right: Vec<(usize, usize)>) -> TorusDiagram {
        let g = Graph::complete(3).disjoint_union(&Graph::complete(3));
        TorusDiagram::new(g, up, right).unwrap()
    }

    #[test]
    fn two_one_one_triangles_link_once() {
        let d = two_triangles(vec![(0, 1), (3, 4)], vec![(1, 2), (4, 5)]);
        let links = d.find_links();
        assert_eq!(links.len(), 1);
        assert_eq!(links[0].slope, SlopeClass::Essential { p: 1, q: 1 });
        assert_eq!(links[0].cycle_a.to_string(), "1-2-3");
        assert_eq!(links[0].cycle_b.to_string(), "4-5-6");
        assert!(!d.is_linkless());
    }

    #[test]
    fn slope_zero_and_infinity_do_not_link() {
        let zero = two_triangles(vec![], vec![(0, 1), (3, 4)]);
        assert!(zero.find_links().is_empty());
        let inf = two_triangles(vec![(0, 1), (3, 4)], vec![]);
        assert!(inf.find_links().is_empty());
    }

    #[test]
    fn small_graphs_never_link() {
        let d = TorusDiagram::new(
            Graph::complete(5),
            vec![(0, 1), (2, 3)],
            vec![(1, 2), (3, 4)],
        )
        .unwrap();
        assert!(d.find_links().is_empty());
    }

    #[test]
    fn opposite_slopes_do_not_link() {
        // 1/1 against -1/1
        let d = two_triangles(vec![(0, 1), (4, 3)], vec![(1, 2), (4, 5)]);
        assert!(d.find_links().is_empty());
        assert_eq!(d.slope_conflicts(CycleRange::for_order(6)).len(), 1);
    }

    #[test]
    fn planar_diagram_is_linkless() {
        assert!(TorusDiagram::planar(Graph::complete(8)).is_linkless());
    }
}
