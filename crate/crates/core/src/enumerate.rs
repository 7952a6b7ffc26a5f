//! Exhaustive enumeration of small structures, one per isomorphism class.
//!
//! Every labeled structure is encoded as its vertex colors followed by its
//! free edge cells. Labeled structures are produced in ascending encoding
//! order and one is kept iff no vertex permutation yields a smaller
//! encoding, so each class is represented by its minimum encoding and the
//! stream is ordered by it.

use std::sync::Arc;

use itertools::Itertools;

use crate::decider::{Decider, ExtensionClass};
use crate::error::{Error, Result};
use crate::poset::{Color, Poset};
use crate::structure::{ColoredStructure, Flags};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexMode {
    /// Any coloring.
    Free,
    /// All vertices share one (arbitrary) color.
    Uniform,
    /// Every vertex has this color.
    Fixed(Color),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraints {
    pub vertex: VertexMode,
    /// Colors allowed on off-diagonal and loop cells; `None` allows all.
    pub edge_colors: Option<Vec<Color>>,
    /// Upper bound on the number of labeled structures visited.
    pub cap: u128,
}

pub const DEFAULT_CAP: u128 = 1 << 26;

impl Default for Constraints {
    fn default() -> Self {
        Constraints {
            vertex: VertexMode::Free,
            edge_colors: None,
            cap: DEFAULT_CAP,
        }
    }
}

impl Constraints {
    pub fn free() -> Self {
        Self::default()
    }

    pub fn vertex_uniform() -> Self {
        Constraints {
            vertex: VertexMode::Uniform,
            ..Self::default()
        }
    }

    /// Bottom-colored vertices; meant for the two-element chain.
    pub fn plain(poset: &Poset) -> Self {
        Constraints {
            vertex: VertexMode::Fixed(poset.bottom()),
            ..Self::default()
        }
    }

    pub fn fixed_vertices(c: Color) -> Self {
        Constraints {
            vertex: VertexMode::Fixed(c),
            ..Self::default()
        }
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }
}

/// Edge cells in encoding order.
fn cells(n: usize, flags: Flags) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let keep = if x == y {
                flags.loops
            } else if flags.directed {
                true
            } else {
                x < y
            };
            if keep {
                out.push((x, y));
            }
        }
    }
    out
}

/// Lazy stream of class representatives.
pub struct StructureStream {
    poset: Arc<Poset>,
    n: usize,
    flags: Flags,
    vertex_choices: Vec<Vec<Color>>,
    edge_choices: Vec<Color>,
    cells: Vec<(usize, usize)>,
    perms: Vec<Vec<usize>>,
    /// Position in `vertex_choices`, then an odometer over `cells`.
    vpos: usize,
    digits: Vec<usize>,
    done: bool,
}

impl StructureStream {
    fn encoding_under(&self, vc: &[Color], m: &[Color], perm: &[usize], out: &mut Vec<u8>) {
        out.clear();
        out.extend(perm.iter().map(|&p| vc[p].0));
        out.extend(
            self.cells
                .iter()
                .map(|&(x, y)| m[perm[x] * self.n + perm[y]].0),
        );
    }

    fn is_canonical(&self, vc: &[Color], m: &[Color]) -> bool {
        let mut base = Vec::with_capacity(self.n + self.cells.len());
        let id: Vec<usize> = (0..self.n).collect();
        self.encoding_under(vc, m, &id, &mut base);
        let mut other = Vec::with_capacity(base.len());
        self.perms.iter().skip(1).all(|perm| {
            self.encoding_under(vc, m, perm, &mut other);
            other >= base
        })
    }

    fn advance(&mut self) {
        for i in (0..self.digits.len()).rev() {
            self.digits[i] += 1;
            if self.digits[i] < self.edge_choices.len() {
                return;
            }
            self.digits[i] = 0;
        }
        self.vpos += 1;
        if self.vpos == self.vertex_choices.len() {
            self.done = true;
        }
    }
}

impl Iterator for StructureStream {
    type Item = ColoredStructure;

    fn next(&mut self) -> Option<ColoredStructure> {
        let n = self.n;
        let bottom = self.poset.bottom();
        while !self.done {
            let vc = self.vertex_choices[self.vpos].clone();
            let mut m = vec![bottom; n * n];
            for (&(x, y), &d) in self.cells.iter().zip(&self.digits) {
                let c = self.edge_choices[d];
                m[x * n + y] = c;
                if !self.flags.directed {
                    m[y * n + x] = c;
                }
            }
            self.advance();
            if self.is_canonical(&vc, &m) {
                return Some(
                    ColoredStructure::new(self.poset.clone(), vc, m, self.flags)
                        .expect("enumerated cells respect the flags"),
                );
            }
        }
        None
    }
}

/// One representative per isomorphism class of structures on `n` vertices.
pub fn enumerate_structures(
    poset: Arc<Poset>,
    n: usize,
    flags: Flags,
    constraints: &Constraints,
) -> Result<StructureStream> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    let all: Vec<Color> = poset.colors().collect();
    let edge_choices = match &constraints.edge_colors {
        Some(cs) => {
            let mut cs = cs.clone();
            cs.sort_unstable();
            cs.dedup();
            cs
        }
        None => all.clone(),
    };
    let cells = cells(n, flags);
    let vertex_count = match &constraints.vertex {
        VertexMode::Free => (all.len() as u128).saturating_pow(n as u32),
        VertexMode::Uniform => all.len() as u128,
        VertexMode::Fixed(_) => 1,
    };
    let space = vertex_count
        .saturating_mul((edge_choices.len() as u128).saturating_pow(cells.len() as u32));
    if space > constraints.cap {
        return Err(Error::CapExceeded {
            space,
            cap: constraints.cap,
        });
    }
    let vertex_choices: Vec<Vec<Color>> = match &constraints.vertex {
        VertexMode::Free => (0..n)
            .map(|_| all.iter().copied())
            .multi_cartesian_product()
            .collect(),
        VertexMode::Uniform => all.iter().map(|&c| vec![c; n]).collect(),
        VertexMode::Fixed(c) => vec![vec![*c; n]],
    };
    if edge_choices.is_empty() && !cells.is_empty() {
        return Err(Error::Precondition("no edge colors allowed".to_owned()));
    }
    let perms = (0..n).permutations(n).collect();
    let digits = vec![0; cells.len()];
    Ok(StructureStream {
        poset,
        n,
        flags,
        done: vertex_choices.is_empty(),
        vertex_choices,
        edge_choices,
        cells,
        perms,
        vpos: 0,
        digits,
    })
}

/// Representatives that are MH-homogeneous but not HH-homogeneous.
/// Structures whose verdicts exceed the decider's budget are skipped.
pub fn search_mh_not_hh(
    poset: Arc<Poset>,
    n: usize,
    flags: Flags,
    constraints: &Constraints,
    decider: Decider,
) -> Result<impl Iterator<Item = ColoredStructure>> {
    let stream = enumerate_structures(poset, n, flags, constraints)?;
    Ok(stream.filter(move |g| {
        decider.decide(g, ExtensionClass::MH).is_member()
            && decider.decide(g, ExtensionClass::HH).known() == Some(false)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::isomorphic;

    #[test]
    fn plain_three_vertex_graphs() {
        let p = Arc::new(Poset::chain(2));
        let c = Constraints::plain(&p);
        let reps: Vec<_> = enumerate_structures(p, 3, Flags::PLAIN, &c)
            .unwrap()
            .collect();
        assert_eq!(reps.len(), 4);
    }

    #[test]
    fn single_vertex_per_color() {
        for p in [Poset::chain(2), Poset::chain(3), Poset::m2(), Poset::m3()] {
            let len = p.len();
            let reps = enumerate_structures(Arc::new(p), 1, Flags::PLAIN, &Constraints::free())
                .unwrap()
                .count();
            assert_eq!(reps, len);
        }
    }

    #[test]
    fn m2_pair_with_fixed_vertices() {
        let p = Arc::new(Poset::m2());
        let c = Constraints::fixed_vertices(p.bottom());
        assert_eq!(
            enumerate_structures(p, 2, Flags::PLAIN, &c)
                .unwrap()
                .count(),
            4
        );
    }

    #[test]
    fn representatives_pairwise_non_isomorphic() {
        let p = Arc::new(Poset::chain(3));
        let reps: Vec<_> = enumerate_structures(p, 3, Flags::PLAIN, &Constraints::free())
            .unwrap()
            .collect();
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(isomorphic(a, b).unwrap().is_none());
            }
        }
    }

    #[test]
    fn class_counts_match_brute_force_dedup() {
        // Re-deduplicate every labeled plain graph on 4 vertices with the
        // isomorphism search and compare with the orderly count.
        let p = Arc::new(Poset::chain(2));
        let n = 4;
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut classes: Vec<ColoredStructure> = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(u, v))| (u, v, Color(1)))
                .collect();
            let g = ColoredStructure::undirected(p.clone(), vec![Color(0); n], &edges).unwrap();
            if !classes.iter().any(|h| isomorphic(h, &g).unwrap().is_some()) {
                classes.push(g);
            }
        }
        let orderly = enumerate_structures(p.clone(), n, Flags::PLAIN, &Constraints::plain(&p))
            .unwrap()
            .count();
        assert_eq!(classes.len(), 11);
        assert_eq!(orderly, classes.len());
    }

    #[test]
    fn cap_exceeded() {
        let p = Arc::new(Poset::chain(2));
        let c = Constraints::free().with_cap(1000);
        assert!(matches!(
            enumerate_structures(p, 5, Flags::DIGRAPH_LOOPS, &c),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn plain_graphs_never_separate() {
        let p = Arc::new(Poset::chain(2));
        for n in 1..=4 {
            let c = Constraints::plain(&p);
            let hits = search_mh_not_hh(p.clone(), n, Flags::PLAIN, &c, Decider::new())
                .unwrap()
                .count();
            assert_eq!(hits, 0, "n = {n}");
        }
    }
}
