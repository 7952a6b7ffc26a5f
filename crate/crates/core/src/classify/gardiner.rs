use std::fmt;

use serde::Serialize;

use crate::graph::SimpleGraph;
use crate::morphism::isomorphic;

/// The finite ultrahomogeneous plain graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GardinerTag {
    /// `k` disjoint copies of `K_n`. Covers `K_n` (k = 1) and the null graph
    /// (n = 1).
    UnionOfCliques {
        k: usize,
        n: usize,
    },
    /// Complete multipartite with `k` parts of size `n`.
    BalancedMultipartite {
        k: usize,
        n: usize,
    },
    C5,
    LineGraphK33,
}

impl GardinerTag {
    pub fn build(self) -> SimpleGraph {
        match self {
            GardinerTag::UnionOfCliques { k, n } => SimpleGraph::union_of_cliques(k, n),
            GardinerTag::BalancedMultipartite { k, n } => SimpleGraph::balanced_multipartite(k, n),
            GardinerTag::C5 => SimpleGraph::cycle(5),
            GardinerTag::LineGraphK33 => line_graph_k33(),
        }
    }
}

impl fmt::Display for GardinerTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GardinerTag::UnionOfCliques { k, n } => write!(f, "{k}·K{n}"),
            GardinerTag::BalancedMultipartite { k, n } => write!(f, "K({n}^{k})"),
            GardinerTag::C5 => f.write_str("C5"),
            GardinerTag::LineGraphK33 => f.write_str("L(K3,3)"),
        }
    }
}

pub fn line_graph_k33() -> SimpleGraph {
    SimpleGraph::complete_bipartite(3, 3).line_graph()
}

fn isomorphic_plain(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    a.len() == b.len()
        && a.edges().len() == b.edges().len()
        && isomorphic(&a.to_structure(), &b.to_structure())
            .expect("same poset")
            .is_some()
}

/// Matches the graph against the four families, in order: equal clique
/// unions, balanced complete multipartite, `C5`, `L(K3,3)`.
pub fn recognize_gardiner(g: &SimpleGraph) -> Option<GardinerTag> {
    if g.is_empty() {
        return None;
    }
    if let Some((k, n)) = g.equal_clique_union() {
        return Some(GardinerTag::UnionOfCliques { k, n });
    }
    if let Some((k, n)) = g.complement().equal_clique_union() {
        return Some(GardinerTag::BalancedMultipartite { k, n });
    }
    if g.len() == 5 && isomorphic_plain(g, &SimpleGraph::cycle(5)) {
        return Some(GardinerTag::C5);
    }
    if g.len() == 9 && isomorphic_plain(g, &line_graph_k33()) {
        return Some(GardinerTag::LineGraphK33);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(
            recognize_gardiner(&SimpleGraph::cycle(5)),
            Some(GardinerTag::C5)
        );
        assert_eq!(
            recognize_gardiner(&SimpleGraph::complete_bipartite(3, 3)),
            Some(GardinerTag::BalancedMultipartite { k: 2, n: 3 })
        );
        assert_eq!(
            recognize_gardiner(&SimpleGraph::complete(4)),
            Some(GardinerTag::UnionOfCliques { k: 1, n: 4 })
        );
        assert_eq!(
            recognize_gardiner(&SimpleGraph::new(3)),
            Some(GardinerTag::UnionOfCliques { k: 3, n: 1 })
        );
        assert_eq!(
            recognize_gardiner(&line_graph_k33()),
            Some(GardinerTag::LineGraphK33)
        );
        assert_eq!(recognize_gardiner(&SimpleGraph::path(3)), None);
        assert_eq!(recognize_gardiner(&SimpleGraph::cycle(6)), None);
    }

    #[test]
    fn complements_stay_in_class() {
        for tag in [
            GardinerTag::C5,
            GardinerTag::LineGraphK33,
            GardinerTag::UnionOfCliques { k: 2, n: 3 },
            GardinerTag::BalancedMultipartite { k: 3, n: 2 },
        ] {
            let g = tag.build();
            assert_eq!(recognize_gardiner(&g), Some(tag));
            assert!(recognize_gardiner(&g.complement()).is_some());
        }
    }

    #[test]
    fn relabelled_c5() {
        let g = SimpleGraph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]);
        assert_eq!(recognize_gardiner(&g), Some(GardinerTag::C5));
    }
}
