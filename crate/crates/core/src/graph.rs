//! Plain undirected loopless graphs on at most 64 vertices.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poset::{Color, Poset};
use crate::structure::{ColoredStructure, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        SimpleGraph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// `k` disjoint copies of `K_m`.
    pub fn union_of_cliques(k: usize, m: usize) -> Self {
        let mut g = Self::new(k * m);
        for c in 0..k {
            for u in 0..m {
                for v in (u + 1)..m {
                    g.add_edge(c * m + u, c * m + v);
                }
            }
        }
        g
    }

    /// Complete multipartite graph with `k` parts of size `m`.
    pub fn balanced_multipartite(k: usize, m: usize) -> Self {
        Self::union_of_cliques(k, m).complement()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::new(a + b);
        for u in 0..a {
            for v in a..(a + b) {
                g.add_edge(u, v);
            }
        }
        g
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loops are not allowed in a simple graph");
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect()
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let adj = (0..n).map(|u| !self.adj[u] & full & !(1 << u)).collect();
        SimpleGraph { adj }
    }

    /// Vertices are the edges of `self` in [`edges`](Self::edges) order; two
    /// are adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Self {
        let edges = self.edges();
        let mut g = Self::new(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if a == c || a == d || b == c || b == d {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let u = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[u] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push((0..n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        out
    }

    /// `Some((k, m))` if the graph is `k` disjoint copies of `K_m`.
    pub fn equal_clique_union(&self) -> Option<(usize, usize)> {
        let comps = self.components();
        let m = comps[0].len();
        let ok = comps
            .iter()
            .all(|c| c.len() == m && c.iter().all(|&u| self.degree(u) == m - 1));
        ok.then_some((comps.len(), m))
    }

    /// Lifts to an L-colored graph over the two-element chain: all vertices
    /// colored 0, edges colored 1.
    pub fn to_structure(&self) -> ColoredStructure {
        let poset = Arc::new(Poset::chain(2));
        self.to_structure_over(poset)
    }

    pub fn to_structure_over(&self, poset: Arc<Poset>) -> ColoredStructure {
        let n = self.len();
        let (zero, one) = (poset.bottom(), poset.top());
        let m = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| if self.has_edge(u, v) { one } else { zero })
            .collect();
        ColoredStructure::new(poset, vec![zero; n], m, crate::structure::Flags::PLAIN)
            .expect("simple graphs are symmetric and loopless")
    }

    /// Decodes a graph6 string (graphs with at most 62 vertices).
    pub fn from_graph6(code: &str) -> Result<Self> {
        let bytes = code.trim().as_bytes();
        let bad = |m: &str| Error::Graph6(format!("{m}: `{code}`"));
        let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty"))?;
        if !(63..=125).contains(&first) {
            return Err(bad("graphs above 62 vertices are not supported"));
        }
        let n = (first - 63) as usize;
        let mut g = Self::new(n);
        let mut bits = Vec::with_capacity(rest.len() * 6);
        for &b in rest {
            if !(63..=126).contains(&b) {
                return Err(bad("byte out of range"));
            }
            let v = b - 63;
            bits.extend((0..6).rev().map(|i| v >> i & 1 == 1));
        }
        let needed = n * n.saturating_sub(1) / 2;
        if bits.len() < needed || bits.len() >= needed + 6 {
            return Err(bad("wrong length"));
        }
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                if bits[k] {
                    g.add_edge(u, v);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.len();
        assert!(n <= 62);
        let mut out = vec![(n as u8) + 63];
        let mut bits = Vec::new();
        for v in 1..n {
            for u in 0..v {
                bits.push(self.has_edge(u, v));
            }
        }
        for chunk in bits.chunks(6) {
            let mut b = 0u8;
            for i in 0..6 {
                b = b << 1 | chunk.get(i).copied().unwrap_or(false) as u8;
            }
            out.push(b + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

/// Reads a plain graph back out of a structure: an edge wherever the color is
/// not bottom. Vertex colors are ignored.
pub fn underlying_graph(g: &ColoredStructure) -> SimpleGraph {
    let n = g.len();
    let mut out = SimpleGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if g.adjacent(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

/// Lifts the plain graph using explicit edge and non-edge colors.
pub fn two_colored(
    g: &SimpleGraph,
    poset: Arc<Poset>,
    vertex: Color,
    on: Color,
    off: Color,
) -> Result<ColoredStructure> {
    let n = g.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v, if g.has_edge(u, v) { on } else { off }));
        }
    }
    ColoredStructure::undirected(poset, vec![vertex; n], &edges)
}
