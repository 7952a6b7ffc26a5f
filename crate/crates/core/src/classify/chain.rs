use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Shape;
use crate::structure::{ColoredStructure, ComponentSummary};

use super::{describe_class, Classification};

/// A local pattern that a finite MH-homogeneous graph over a chain cannot
/// contain. Triples satisfy `χ(x, z) ≻ 0` and `χ(y, z) ≻ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChainViolation {
    /// `χ(x, y) ≺ χ(x, z)` disagrees with `χ(y) ≻ χ(z)`.
    StrictMismatch { x: usize, y: usize, z: usize },
    /// `χ(x, y) = χ(x, z)` disagrees with `χ(y) = χ(z)`.
    EqualityMismatch { x: usize, y: usize, z: usize },
    /// Adjacent vertices with different colors.
    MixedEdge { x: usize, y: usize },
}

fn require_chain(g: &ColoredStructure) -> Result<()> {
    let shape = g.poset().shape();
    if shape != Shape::Chain {
        return Err(Error::Shape {
            expected: "chain",
            found: shape,
        });
    }
    if !g.is_plain_shape() {
        return Err(Error::Flags);
    }
    Ok(())
}

/// Every triple and adjacent pair breaking the necessary local conditions.
/// An empty list does not imply membership.
pub fn check_chain_necessary(g: &ColoredStructure) -> Result<Vec<ChainViolation>> {
    require_chain(g)?;
    let p = g.poset();
    let zero = p.bottom();
    let n = g.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x == y || y == z || x == z {
                    continue;
                }
                if g.edge(x, z) == zero || g.edge(y, z) == zero {
                    continue;
                }
                let edge_lt = p.lt(g.edge(x, y), g.edge(x, z));
                let vertex_gt = p.lt(g.vertex(z), g.vertex(y));
                if edge_lt != vertex_gt {
                    out.push(ChainViolation::StrictMismatch { x, y, z });
                }
                let edge_eq = g.edge(x, y) == g.edge(x, z);
                let vertex_eq = g.vertex(y) == g.vertex(z);
                if edge_eq != vertex_eq {
                    out.push(ChainViolation::EqualityMismatch { x, y, z });
                }
            }
        }
    }
    for x in 0..n {
        for y in (x + 1)..n {
            if g.edge(x, y) != zero && g.vertex(x) != g.vertex(y) {
                out.push(ChainViolation::MixedEdge { x, y });
            }
        }
    }
    Ok(out)
}

/// Decides MH (equivalently HH) membership over a chain: every component
/// is uniform, and whenever `α₁ ⪯ α₂` the sizes and edge colors are
/// monotone (`n₁ ≤ n₂`, `β₁ ⪯ β₂`). A single-vertex component has no edge
/// color and places no constraint on β.
pub fn classify_chain(g: &ColoredStructure) -> Result<Classification> {
    require_chain(g)?;
    let p = g.poset();
    let comps = g.components();
    let summaries: Vec<ComponentSummary> = comps.iter().map(|c| g.summarize_component(c)).collect();
    for (c, s) in comps.iter().zip(&summaries) {
        if !s.is_uniform() {
            return Ok(Classification::rejected(format!(
                "component {} is not uniform",
                describe_class(g, c)
            )));
        }
    }
    for (i, si) in summaries.iter().enumerate() {
        for (j, sj) in summaries.iter().enumerate() {
            if i == j {
                continue;
            }
            let (ai, aj) = (si.vertex_color.unwrap(), sj.vertex_color.unwrap());
            if !p.leq(ai, aj) {
                continue;
            }
            if si.size > sj.size {
                return Ok(Classification::rejected(format!(
                    "component {} has color {} ⪯ {} of component {} but is larger ({} > {})",
                    describe_class(g, &comps[i]),
                    p.name(ai),
                    p.name(aj),
                    describe_class(g, &comps[j]),
                    si.size,
                    sj.size
                )));
            }
            if let (Some(bi), Some(bj)) = (si.edge_color.color(), sj.edge_color.color()) {
                if !p.leq(bi, bj) {
                    return Ok(Classification::rejected(format!(
                        "component {} has color {} ⪯ {} of component {} but edge color {} ⋠ {}",
                        describe_class(g, &comps[i]),
                        p.name(ai),
                        p.name(aj),
                        describe_class(g, &comps[j]),
                        p.name(bi),
                        p.name(bj)
                    )));
                }
            }
        }
    }
    Ok(Classification::accepted(
        None,
        format!("{} uniform component(s), monotone in color", comps.len()),
    ))
}
