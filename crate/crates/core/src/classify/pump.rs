use serde::Serialize;

use crate::error::{Error, Result};
use crate::structure::ColoredStructure;

/// Three distinct vertices whose presence forces an MH-homogeneous graph to
/// be infinite:
///
/// 1. `χ(a0, a1) ≻ 0` and `χ(x, a1) ≻ 0`,
/// 2. `χ(a0, x) ⪯ χ(a0, a1)` and `χ(x) ⪯ χ(a1)`,
/// 3. at least one of the two relations in (2) is strict.
///
/// A finite graph containing one is therefore not MH-homogeneous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PumpConfig {
    pub a0: usize,
    pub a1: usize,
    pub x: usize,
}

impl PumpConfig {
    pub fn holds(g: &ColoredStructure, a0: usize, a1: usize, x: usize) -> bool {
        if a0 == a1 || a0 == x || a1 == x {
            return false;
        }
        let p = g.poset();
        let zero = p.bottom();
        let (e01, ex1, e0x) = (g.edge(a0, a1), g.edge(x, a1), g.edge(a0, x));
        let (cx, c1) = (g.vertex(x), g.vertex(a1));
        e01 != zero && ex1 != zero && p.leq(e0x, e01) && p.leq(cx, c1) && (e0x != e01 || cx != c1)
    }
}

/// The lexicographically least `(a0, a1, x)` pump configuration, if any.
pub fn find_pump_config(g: &ColoredStructure) -> Result<Option<PumpConfig>> {
    if !g.is_plain_shape() {
        return Err(Error::Flags);
    }
    let n = g.len();
    for a0 in 0..n {
        for a1 in 0..n {
            for x in 0..n {
                if PumpConfig::holds(g, a0, a1, x) {
                    return Ok(Some(PumpConfig { a0, a1, x }));
                }
            }
        }
    }
    Ok(None)
}
