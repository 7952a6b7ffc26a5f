//! Named structures: uniform cliques, the MH-but-not-HH families, and
//! lifted ultrahomogeneous plain graphs.

use std::sync::Arc;

use crate::classify::GardinerTag;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::{Color, Poset};
use crate::structure::{ColoredStructure, Flags};

/// `U(n, α, β)`: `n` vertices colored `alpha`, every pair colored `beta`.
pub fn make_uniform(
    n: usize,
    alpha: Color,
    beta: Color,
    poset: Arc<Poset>,
) -> Result<ColoredStructure> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n >= 2 && beta == poset.bottom() {
        return Err(Error::BadColor(
            "edge color of a uniform graph must be above bottom".to_owned(),
        ));
    }
    let mut m = vec![beta; n * n];
    for x in 0..n {
        m[x * n + x] = poset.bottom();
    }
    ColoredStructure::new(poset, vec![alpha; n], m, Flags::PLAIN)
}

/// Disjoint union; vertices keep their order, blocks are concatenated.
pub fn disjoint_union(parts: &[&ColoredStructure]) -> Result<ColoredStructure> {
    let first = parts.first().ok_or(Error::NoVertices)?;
    let poset = first.poset_arc().clone();
    let flags = first.flags();
    if parts.iter().any(|p| p.poset() != &*poset) {
        return Err(Error::PosetMismatch);
    }
    let n: usize = parts.iter().map(|p| p.len()).sum();
    let mut vc = Vec::with_capacity(n);
    let mut m = vec![poset.bottom(); n * n];
    let mut offset = 0;
    for part in parts {
        let k = part.len();
        vc.extend_from_slice(part.vertex_colors());
        for x in 0..k {
            for y in 0..k {
                m[(offset + x) * n + offset + y] = part.edge(x, y);
            }
        }
        offset += k;
    }
    ColoredStructure::new(poset, vc, m, flags)
}

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| (*s).to_owned()).collect()
}

/// The four-vertex M₂-colored graph on `a, b, c, d` that is MH- but not
/// HH-homogeneous: the homomorphism `(a b / a a)` has no extension.
pub fn example1() -> ColoredStructure {
    let p = Arc::new(Poset::m2());
    let (b, r) = (Color(1), Color(2));
    let (va, vb, vc, vd) = (0, 1, 2, 3);
    ColoredStructure::undirected(
        p,
        vec![r, r, b, b],
        &[
            (va, vc, r),
            (vc, vd, r),
            (vb, vd, r),
            (va, vd, b),
            (vb, vc, b),
        ],
    )
    .and_then(|g| g.renamed(names(&["a", "b", "c", "d"])))
    .expect("example is well formed")
}

/// Two `n`-cliques with vertices and inner edges colored `b`, joined
/// completely by `r` edges, plus two non-adjacent `r`-colored vertices `u`
/// and `v`: `u` sees the first clique through `r` and the second through
/// `b`, `v` the other way round. With `n = 1` this is [`example1`] up to
/// renaming.
pub fn fig6(n: usize) -> Result<ColoredStructure> {
    if n == 0 {
        return Err(Error::BadSpec("clique size must be at least 1".to_owned()));
    }
    let p = Arc::new(Poset::m2());
    let (b, r) = (Color(1), Color(2));
    let total = 2 * n + 2;
    let (u, v) = (2 * n, 2 * n + 1);
    let mut edges = Vec::new();
    for side in 0..2 {
        for i in 0..n {
            for j in (i + 1)..n {
                edges.push((side * n + i, side * n + j, b));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            edges.push((i, n + j, r));
        }
        edges.push((u, i, r));
        edges.push((u, n + i, b));
        edges.push((v, i, b));
        edges.push((v, n + i, r));
    }
    let mut vc = vec![b; total];
    vc[u] = r;
    vc[v] = r;
    let mut labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    labels.extend((0..n).map(|i| format!("q{i}")));
    labels.extend(names(&["u", "v"]));
    ColoredStructure::undirected(p, vc, &edges)?.renamed(labels)
}

/// Five `n`-cliques with `r` inner edges arranged on a pentagon: clique `i`
/// joins clique `i ± 1` by `b` edges and clique `i ± 2` by `r` edges.
/// Every vertex carries a `b` loop; vertex colors are bottom.
pub fn fig7(n: usize) -> Result<ColoredStructure> {
    if n == 0 {
        return Err(Error::BadSpec("clique size must be at least 1".to_owned()));
    }
    let p = Arc::new(Poset::m2());
    let (b, r) = (Color(1), Color(2));
    let total = 5 * n;
    let mut m = vec![p.bottom(); total * total];
    for x in 0..total {
        for y in 0..total {
            let (cx, cy) = (x / n, y / n);
            m[x * total + y] = if x == y {
                b
            } else {
                match (cx + 5 - cy) % 5 {
                    0 => r,
                    1 | 4 => b,
                    _ => r,
                }
            };
        }
    }
    let labels = (0..total)
        .map(|x| format!("k{}_{}", x / n, x % n))
        .collect();
    ColoredStructure::with_names(p, labels, vec![Color(0); total], m, Flags::LOOPS)
}

/// A named catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleSpec {
    Example1,
    Fig6(usize),
    Fig7(usize),
    Uniform {
        n: usize,
        alpha: String,
        beta: String,
        poset: String,
    },
    Gardiner(GardinerTag),
    /// A plain graph in graph6 encoding, lifted to the two-element chain.
    PlainGraph(String),
}

pub fn make_example(spec: &ExampleSpec) -> Result<ColoredStructure> {
    match spec {
        ExampleSpec::Example1 => Ok(example1()),
        ExampleSpec::Fig6(n) => fig6(*n),
        ExampleSpec::Fig7(n) => fig7(*n),
        ExampleSpec::Uniform {
            n,
            alpha,
            beta,
            poset,
        } => {
            let p = Arc::new(Poset::named(poset)?);
            let (a, b) = (p.color(alpha)?, p.color(beta)?);
            make_uniform(*n, a, b, p)
        }
        ExampleSpec::Gardiner(tag) => {
            let bad = |m: &str| Err(Error::BadSpec(m.to_owned()));
            match *tag {
                GardinerTag::UnionOfCliques { k, n }
                | GardinerTag::BalancedMultipartite { k, n }
                    if k == 0 || n == 0 =>
                {
                    return bad("family parameters must be positive")
                }
                GardinerTag::UnionOfCliques { k, n }
                | GardinerTag::BalancedMultipartite { k, n }
                    if k * n > 64 =>
                {
                    return bad("graph too large")
                }
                _ => {}
            }
            Ok(tag.build().to_structure())
        }
        ExampleSpec::PlainGraph(code) => {
            let g = SimpleGraph::from_graph6(code)?;
            if g.is_empty() {
                return Err(Error::NoVertices);
            }
            Ok(g.to_structure())
        }
    }
}
