use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Linking number of the torus link `T(m, n)`: `mn/2 · (1 - 1/gcd(m, n))`,
/// with the gcd taken on absolute values.
pub fn torus_link_linking_number(m: i64, n: i64) -> Result<Ratio<i64>> {
    if m == 0 && n == 0 {
        return Err(Error::invalid("T(0, 0) is not a torus link"));
    }
    let d = m.gcd(&n);
    Ok(Ratio::new(m * n, 2) * (Ratio::from_integer(1) - Ratio::new(1, d)))
}
