use serde::Serialize;

use crate::decider::{decide, ExtensionClass};
use crate::error::{Error, Result};
use crate::morphism::isomorphic;
use crate::poset::{Color, Shape};
use crate::structure::ColoredStructure;

use super::gardiner::recognize_gardiner;
use super::{describe_class, Branch, Classification};

fn require_vertex_uniform(g: &ColoredStructure) -> Result<Color> {
    if !g.is_plain_shape() {
        return Err(Error::Flags);
    }
    g.uniform_vertex_color().ok_or(Error::NotVertexUniform)
}

/// Decides MH (equivalently HH) membership of a vertex-uniform graph over a
/// diamond. Members are disjoint unions of copies of one graph `H`, where
/// `H` either has every edge colored top, or is complete with every edge
/// color strictly between bottom and top and is ultrahomogeneous.
///
/// "Strictly between" is required for distinct pairs only; the diagonal is
/// always bottom in a loopless graph. With exactly two middle colors the
/// ultrahomogeneity test reduces to recognizing the graph of one color as
/// an ultrahomogeneous plain graph; otherwise the brute-force II decider
/// settles it.
pub fn classify_diamond_vertex_uniform(g: &ColoredStructure) -> Result<Classification> {
    let shape = g.poset().shape();
    if shape != Shape::Diamond {
        return Err(Error::Shape {
            expected: "diamond",
            found: shape,
        });
    }
    require_vertex_uniform(g)?;
    let p = g.poset();
    let comps = g.components();
    let h = g.induced(&comps[0])?.structure;
    for c in &comps[1..] {
        let other = g.induced(c)?.structure;
        if isomorphic(&h, &other)?.is_none() {
            return Ok(Classification::rejected(format!(
                "components {} and {} are not isomorphic",
                describe_class(g, &comps[0]),
                describe_class(g, c)
            )));
        }
    }
    let n = h.len();
    let pairs = || (0..n).flat_map(|x| ((x + 1)..n).map(move |y| (x, y)));
    let copies = comps.len();
    if pairs().all(|(x, y)| h.edge(x, y) == p.top()) {
        return Ok(Classification::accepted(
            Some(Branch::U1),
            format!("{copies} cop(ies) of a complete {n}-vertex graph with top-colored edges"),
        ));
    }
    let strict = pairs().all(|(x, y)| {
        let c = h.edge(x, y);
        c != p.bottom() && c != p.top()
    });
    if !strict {
        return Ok(Classification::rejected(format!(
            "component {} mixes top with other edge colors or is not complete",
            describe_class(g, &comps[0])
        )));
    }
    let middles: Vec<Color> = p.middles().collect();
    if middles.len() == 2 {
        let red = p.color("r").unwrap_or(middles[0]);
        let blue = if red == middles[0] {
            middles[1]
        } else {
            middles[0]
        };
        let hr = h.edge_slice(red)?;
        let hb = h.edge_slice(blue)?;
        if hb != hr.complement() {
            return Ok(Classification::rejected(
                "the two middle-color graphs are not complementary".to_owned(),
            ));
        }
        return Ok(match recognize_gardiner(&hr) {
            Some(tag) => Classification::accepted(
                Some(Branch::Strict),
                format!(
                    "{copies} cop(ies) of a complete graph whose {}-colored edges form {tag}",
                    p.name(red)
                ),
            ),
            None => Classification::rejected(format!(
                "the {}-colored edges of a component do not form an ultrahomogeneous graph",
                p.name(red)
            )),
        });
    }
    let ii = decide(&h, ExtensionClass::II);
    Ok(if ii.is_member() {
        Classification::accepted(
            Some(Branch::Strict),
            format!("{copies} cop(ies) of an ultrahomogeneous complete graph with middle colors"),
        )
    } else {
        Classification::rejected(
            "component is complete with middle colors but not ultrahomogeneous".to_owned(),
        )
    })
}

/// Necessary conditions on top-colored edges in a vertex-uniform graph
/// that has at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Color1Violation {
    /// `x` has no top-colored edge.
    NoTopEdge { x: usize },
    /// `χ(x, y) = χ(y, z) = 1` but `χ(x, z) ≠ 1`.
    NotTransitive { x: usize, y: usize, z: usize },
    /// `x` and `y` share a component but `χ(x, y) ≠ 1`.
    ComponentPairNotTop { x: usize, y: usize },
    /// Components with least vertices `x` and `y` differ in size.
    ComponentSizes { x: usize, y: usize },
}

pub fn check_color1_structure(g: &ColoredStructure) -> Result<Vec<Color1Violation>> {
    require_vertex_uniform(g)?;
    let top = g.poset().top();
    let n = g.len();
    let is_top = |x: usize, y: usize| x != y && g.edge(x, y) == top;
    if !(0..n).any(|x| (0..n).any(|y| is_top(x, y))) {
        return Err(Error::Precondition("no pair is colored top".to_owned()));
    }
    let mut out = Vec::new();
    for x in 0..n {
        if !(0..n).any(|y| is_top(x, y)) {
            out.push(Color1Violation::NoTopEdge { x });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x != z && is_top(x, y) && is_top(y, z) && !is_top(x, z) {
                    out.push(Color1Violation::NotTransitive { x, y, z });
                }
            }
        }
    }
    let comps = g.components();
    for c in &comps {
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                if !is_top(x, y) {
                    out.push(Color1Violation::ComponentPairNotTop { x, y });
                }
            }
        }
    }
    for c in &comps[1..] {
        if c.len() != comps[0].len() {
            out.push(Color1Violation::ComponentSizes {
                x: comps[0][0],
                y: c[0],
            });
        }
    }
    Ok(out)
}
