use std::fmt;

use num_integer::Integer;

use super::TorusDiagram;
use crate::graph::Cycle;

/// Homology class of a closed curve on the torus, up to orientation.
///
/// `Essential { p, q }` is reduced: `gcd(|p|, |q|) = 1`, and the sign is
/// chosen so that `q > 0`, or `p > 0` when `q = 0`. `p` counts signed
/// crossings of the top side and `q` of the right side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlopeClass {
    Inessential,
    Essential { p: i64, q: i64 },
}

impl SlopeClass {
    /// Classifies a raw crossing sum.
    pub fn from_crossings(p: i64, q: i64) -> SlopeClass {
        if p == 0 && q == 0 {
            return SlopeClass::Inessential;
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        SlopeClass::Essential { p, q }
    }

    pub fn is_essential(&self) -> bool {
        matches!(self, SlopeClass::Essential { .. })
    }

    /// Both components non-zero: two disjoint curves of this slope link.
    /// Slopes 0 and ∞ do not.
    pub fn is_linking(&self) -> bool {
        matches!(self, SlopeClass::Essential { p, q } if *p != 0 && *q != 0)
    }

    /// Slope equality by cross-multiplication; inessential classes have no
    /// slope and compare unequal to everything.
    pub fn same_slope(&self, other: &SlopeClass) -> bool {
        match (self, other) {
            (SlopeClass::Essential { p: a, q: b }, SlopeClass::Essential { p: c, q: d }) => {
                a * d == b * c
            }
            _ => false,
        }
    }
}

impl fmt::Display for SlopeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeClass::Inessential => f.write_str("inessential"),
            SlopeClass::Essential { p, q } => write!(f, "{p}/{q}"),
        }
    }
}

impl TorusDiagram {
    /// Signed (top, right) crossing totals along the traversal of `cycle`.
    pub fn cycle_crossings(&self, cycle: &Cycle) -> (i64, i64) {
        self.crossing_matrix().traverse(cycle)
    }

    pub fn cycle_slope(&self, cycle: &Cycle) -> SlopeClass {
        let (p, q) = self.cycle_crossings(cycle);
        SlopeClass::from_crossings(p, q)
    }
}
