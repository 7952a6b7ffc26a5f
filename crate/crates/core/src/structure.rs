//! Finite L-colored graphs and their directed / loop-carrying generalization.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poset::{Color, Poset};

pub const MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Flags {
    pub directed: bool,
    pub loops: bool,
}

impl Flags {
    pub const PLAIN: Flags = Flags {
        directed: false,
        loops: false,
    };
    pub const LOOPS: Flags = Flags {
        directed: false,
        loops: true,
    };
    pub const DIGRAPH_LOOPS: Flags = Flags {
        directed: true,
        loops: true,
    };
}

/// A vertex set with a vertex coloring and an edge coloring into a bounded
/// poset. Edge colors are a dense row-major `n × n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredStructure {
    poset: Arc<Poset>,
    names: Vec<String>,
    vertex_color: Vec<Color>,
    edge_color: Vec<Color>,
    flags: Flags,
}

impl ColoredStructure {
    /// Validates and builds a structure. Vertices are named `v0, v1, …`.
    pub fn new(
        poset: Arc<Poset>,
        vertex_colors: Vec<Color>,
        edge_colors: Vec<Color>,
        flags: Flags,
    ) -> Result<Self> {
        let names = (0..vertex_colors.len()).map(|i| format!("v{i}")).collect();
        Self::with_names(poset, names, vertex_colors, edge_colors, flags)
    }

    pub fn with_names(
        poset: Arc<Poset>,
        names: Vec<String>,
        vertex_colors: Vec<Color>,
        edge_colors: Vec<Color>,
        flags: Flags,
    ) -> Result<Self> {
        let n = vertex_colors.len();
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if edge_colors.len() != n * n {
            return Err(Error::MatrixShape {
                expected: n * n,
                got: edge_colors.len(),
            });
        }
        assert_eq!(names.len(), n, "one name per vertex");
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let bound = poset.len();
        if let Some(c) = vertex_colors
            .iter()
            .chain(edge_colors.iter())
            .find(|c| c.index() >= bound)
        {
            return Err(Error::ColorOutOfRange(c.0));
        }
        if !flags.loops {
            if let Some(x) = (0..n).find(|&x| edge_colors[x * n + x] != poset.bottom()) {
                return Err(Error::Loop(x));
            }
        }
        if !flags.directed {
            for x in 0..n {
                for y in (x + 1)..n {
                    if edge_colors[x * n + y] != edge_colors[y * n + x] {
                        return Err(Error::Asymmetry(x, y));
                    }
                }
            }
        }
        Ok(ColoredStructure {
            poset,
            names,
            vertex_color: vertex_colors,
            edge_color: edge_colors,
            flags,
        })
    }

    /// Builds an undirected loopless structure from a list of colored pairs.
    /// Unlisted pairs get the bottom color.
    pub fn undirected(
        poset: Arc<Poset>,
        vertex_colors: Vec<Color>,
        edges: &[(usize, usize, Color)],
    ) -> Result<Self> {
        let n = vertex_colors.len();
        let mut m = vec![poset.bottom(); n * n];
        for &(u, v, c) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u.max(v)));
            }
            m[u * n + v] = c;
            m[v * n + u] = c;
        }
        Self::new(poset, vertex_colors, m, Flags::PLAIN)
    }

    pub fn renamed(mut self, names: Vec<String>) -> Result<Self> {
        assert_eq!(names.len(), self.len());
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        self.names = names;
        Ok(self)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertex_color.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertex_color.is_empty()
    }

    #[inline]
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn poset_arc(&self) -> &Arc<Poset> {
        &self.poset
    }

    #[inline]
    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn is_plain_shape(&self) -> bool {
        !self.flags.directed && !self.flags.loops
    }

    #[inline]
    pub fn vertex(&self, x: usize) -> Color {
        self.vertex_color[x]
    }

    #[inline]
    pub fn edge(&self, x: usize, y: usize) -> Color {
        self.edge_color[x * self.len() + y]
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_color
    }

    pub fn edge_matrix(&self) -> &[Color] {
        &self.edge_color
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Whether `x` and `y` are joined by a non-bottom edge in either direction.
    #[inline]
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        let z = self.poset.bottom();
        self.edge(x, y) != z || self.edge(y, x) != z
    }

    pub(crate) fn same_poset(&self, other: &ColoredStructure) -> bool {
        Arc::ptr_eq(&self.poset, &other.poset) || *self.poset == *other.poset
    }

    /// The substructure induced by `subset`, renumbered in ascending order of
    /// the original indices.
    pub fn induced(&self, subset: &[usize]) -> Result<Substructure> {
        if subset.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut origin = subset.to_vec();
        origin.sort_unstable();
        origin.dedup();
        if let Some(&bad) = origin.iter().find(|&&x| x >= self.len()) {
            return Err(Error::VertexOutOfRange(bad));
        }
        let vc = origin.iter().map(|&x| self.vertex(x)).collect();
        let ec = origin
            .iter()
            .flat_map(|&x| origin.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.edge(x, y))
            .collect();
        let names = origin.iter().map(|&x| self.names[x].clone()).collect();
        let structure = ColoredStructure {
            poset: Arc::clone(&self.poset),
            names,
            vertex_color: vc,
            edge_color: ec,
            flags: self.flags,
        };
        Ok(Substructure { structure, origin })
    }

    /// Connected components: classes of the reflexive-transitive closure of
    /// the non-bottom edge relation (symmetrized). Each class is sorted and
    /// classes are ordered by their least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut label = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = vec![start];
            label[start] = id;
            let mut i = 0;
            while i < class.len() {
                let x = class[i];
                for (y, l) in label.iter_mut().enumerate() {
                    if *l == usize::MAX && x != y && self.adjacent(x, y) {
                        *l = id;
                        class.push(y);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn summarize_component(&self, class: &[usize]) -> ComponentSummary {
        let first = self.vertex(class[0]);
        let vertex_color = class
            .iter()
            .all(|&x| self.vertex(x) == first)
            .then_some(first);
        let bottom = self.poset.bottom();
        let mut complete = true;
        let mut edge = EdgeUniformity::Vacuous;
        for &x in class {
            for &y in class {
                if x == y {
                    continue;
                }
                let c = self.edge(x, y);
                if c == bottom {
                    complete = false;
                }
                edge = match edge {
                    EdgeUniformity::Vacuous if c != bottom => EdgeUniformity::Uniform(c),
                    EdgeUniformity::Uniform(b) if b == c => edge,
                    _ => EdgeUniformity::NonUniform,
                };
            }
        }
        ComponentSummary {
            size: class.len(),
            vertex_color,
            edge_color: edge,
            complete,
        }
    }

    /// Whether every vertex has the same color; returns it.
    pub fn uniform_vertex_color(&self) -> Option<Color> {
        let c = self.vertex_color[0];
        self.vertex_color.iter().all(|&d| d == c).then_some(c)
    }

    /// The substructure induced by the vertices of color `alpha`.
    pub fn vertex_slice(&self, alpha: Color) -> Result<Substructure> {
        let w: Vec<usize> = (0..self.len())
            .filter(|&x| self.vertex(x) == alpha)
            .collect();
        if w.is_empty() {
            return Err(Error::EmptySlice(self.poset.name(alpha).to_owned()));
        }
        self.induced(&w)
    }

    /// The plain graph of the `alpha`-colored edges.
    pub fn edge_slice(&self, alpha: Color) -> Result<SimpleGraph> {
        if !self.is_plain_shape() {
            return Err(Error::Flags);
        }
        let n = self.len();
        let mut g = SimpleGraph::new(n);
        for x in 0..n {
            for y in (x + 1)..n {
                if self.edge(x, y) == alpha {
                    g.add_edge(x, y);
                }
            }
        }
        Ok(g)
    }
}

/// An induced substructure together with the original index of each vertex.
#[derive(Clone, Debug)]
pub struct Substructure {
    pub structure: ColoredStructure,
    pub origin: Vec<usize>,
}

/// Edge-color summary of a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeUniformity {
    /// Fewer than two vertices: no pairs to constrain the color.
    Vacuous,
    Uniform(Color),
    NonUniform,
}

impl EdgeUniformity {
    pub fn color(self) -> Option<Color> {
        match self {
            EdgeUniformity::Uniform(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub size: usize,
    /// `None` when the component is not vertex-uniform.
    pub vertex_color: Option<Color>,
    pub edge_color: EdgeUniformity,
    pub complete: bool,
}

impl ComponentSummary {
    /// Vertex-uniform and edge-uniform (vacuously so for a single vertex).
    pub fn is_uniform(&self) -> bool {
        self.vertex_color.is_some() && self.edge_color != EdgeUniformity::NonUniform
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn m2() -> Arc<Poset> {
        Arc::new(Poset::m2())
    }

    #[test]
    fn k2_over_two_chain() {
        let p = Arc::new(Poset::chain(2));
        let g = ColoredStructure::undirected(p, vec![Color(0); 2], &[(0, 1, Color(1))]).unwrap();
        assert_eq!(g.edge(0, 1), Color(1));
        assert_eq!(g.edge(1, 0), Color(1));
        assert_eq!(g.components(), vec![vec![0, 1]]);
    }

    #[test]
    fn loop_rejected() {
        let p = m2();
        let r = p.color("r").unwrap();
        let mut m = vec![Color(0); 4];
        m[0] = r;
        let err = ColoredStructure::new(p, vec![Color(0); 2], m, Flags::PLAIN).unwrap_err();
        assert!(matches!(err, Error::Loop(0)));
    }

    #[test]
    fn asymmetry_rejected() {
        let p = m2();
        let m = vec![Color(0), Color(1), Color(0), Color(0)];
        let err = ColoredStructure::new(p.clone(), vec![Color(0); 2], m.clone(), Flags::PLAIN)
            .unwrap_err();
        assert!(matches!(err, Error::Asymmetry(0, 1)));
        let directed = Flags {
            directed: true,
            loops: false,
        };
        assert!(ColoredStructure::new(p, vec![Color(0); 2], m, directed).is_ok());
    }

    #[test]
    fn color_out_of_range() {
        let p = Arc::new(Poset::chain(2));
        let err =
            ColoredStructure::new(p, vec![Color(5)], vec![Color(0)], Flags::PLAIN).unwrap_err();
        assert!(matches!(err, Error::ColorOutOfRange(5)));
    }

    #[test]
    fn example1_slices() {
        let g = catalog::example1();
        let p = g.poset();
        let (b, r) = (p.color("b").unwrap(), p.color("r").unwrap());
        let ab = g.induced(&[0, 1]).unwrap().structure;
        assert_eq!(ab.vertex_colors(), [r, r]);
        assert_eq!(ab.edge(0, 1), p.bottom());
        let cd = g.induced(&[2, 3]).unwrap().structure;
        assert_eq!(cd.vertex_colors(), [b, b]);
        assert_eq!(cd.edge(0, 1), r);

        let slice = g.vertex_slice(r).unwrap();
        assert_eq!(slice.origin, vec![0, 1]);
        assert!(matches!(g.vertex_slice(p.top()), Err(Error::EmptySlice(_))));

        let red = g.edge_slice(r).unwrap();
        assert_eq!(red.edges(), vec![(0, 2), (1, 3), (2, 3)]);
        let blue = g.edge_slice(b).unwrap();
        assert_eq!(blue.edges(), vec![(0, 3), (1, 2)]);
        assert!(g.edge_slice(p.top()).unwrap().edges().is_empty());
    }

    #[test]
    fn example1_single_component() {
        let g = catalog::example1();
        let comps = g.components();
        assert_eq!(comps, vec![vec![0, 1, 2, 3]]);
        let s = g.summarize_component(&comps[0]);
        assert_eq!(s.size, 4);
        assert_eq!(s.vertex_color, None);
        assert_eq!(s.edge_color, EdgeUniformity::NonUniform);
        assert!(!s.complete);
    }

    #[test]
    fn uniform_summary() {
        let p = m2();
        let one = p.top();
        let u = catalog::make_uniform(3, Color(1), one, p.clone()).unwrap();
        let s = u.summarize_component(&[0, 1, 2]);
        assert_eq!(
            s,
            ComponentSummary {
                size: 3,
                vertex_color: Some(Color(1)),
                edge_color: EdgeUniformity::Uniform(one),
                complete: true
            }
        );
        let single = catalog::make_uniform(1, Color(2), one, p).unwrap();
        let s = single.summarize_component(&[0]);
        assert_eq!(s.edge_color, EdgeUniformity::Vacuous);
        assert!(s.complete && s.is_uniform());
    }

    #[test]
    fn two_uniform_components() {
        let p = m2();
        let u = catalog::make_uniform(2, Color(1), Color(2), p.clone()).unwrap();
        let g = crate::catalog::disjoint_union(&[&u, &u]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(g.vertex_slice(Color(1)).unwrap().structure.len(), 4);
    }

    #[test]
    fn edge_slice_rejects_loops() {
        let g = catalog::fig7(1).unwrap();
        assert!(matches!(g.edge_slice(Color(1)), Err(Error::Flags)));
    }

    #[test]
    fn induced_empty() {
        assert!(matches!(
            catalog::example1().induced(&[]),
            Err(Error::EmptySet)
        ));
    }
}
