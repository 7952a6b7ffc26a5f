//! Partial maps, morphism checks, and backtracking search for total
//! extensions and isomorphisms.
//!
//! All searches visit vertices and candidate targets in ascending index
//! order, so every witness and every extension found is reproducible.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::ColoredStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MorphismKind {
    Iso,
    Mono,
    Homo,
}

impl MorphismKind {
    pub const ALL: [MorphismKind; 3] = [MorphismKind::Iso, MorphismKind::Mono, MorphismKind::Homo];

    pub fn letter(self) -> char {
        match self {
            MorphismKind::Iso => 'I',
            MorphismKind::Mono => 'M',
            MorphismKind::Homo => 'H',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'I' => Some(MorphismKind::Iso),
            'M' => Some(MorphismKind::Mono),
            'H' => Some(MorphismKind::Homo),
            _ => None,
        }
    }

    #[inline]
    fn injective(self) -> bool {
        self != MorphismKind::Homo
    }
}

/// A finite partial function between vertex sets, stored as
/// `(source, target)` pairs sorted by source.
///
/// Maps order by domain size first, then lexicographically by pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PartialMap {
    pairs: Vec<(usize, usize)>,
}

impl PartialMap {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::RepeatedSource(w[0].0));
        }
        Ok(PartialMap { pairs })
    }

    pub fn empty() -> Self {
        PartialMap::default()
    }

    /// The total map `i ↦ targets[i]`.
    pub fn total(targets: &[usize]) -> Self {
        PartialMap {
            pairs: targets.iter().copied().enumerate().collect(),
        }
    }

    pub(crate) fn from_sorted(pairs: Vec<(usize, usize)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        PartialMap { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, source: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&source, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.pairs.iter().map(|p| p.1).collect();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.pairs.len()
    }

    /// `g ∘ self`, defined where both are.
    pub fn then(&self, g: &PartialMap) -> PartialMap {
        let pairs = self
            .pairs
            .iter()
            .filter_map(|&(x, y)| g.get(y).map(|z| (x, z)))
            .collect();
        PartialMap { pairs }
    }

    /// The restriction to the sources selected by `keep`.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> PartialMap {
        PartialMap {
            pairs: self.pairs.iter().copied().filter(|p| keep(p.0)).collect(),
        }
    }

    /// Whether `other` agrees with `self` on every source of `self`.
    pub fn agrees_with(&self, other: &[usize]) -> bool {
        self.pairs.iter().all(|&(x, y)| other[x] == y)
    }

    /// Matrix notation using the structure's vertex names, e.g. `(a b / a a)`.
    pub fn display<'a>(&'a self, g: &'a ColoredStructure) -> impl fmt::Display + 'a {
        struct D<'a>(&'a PartialMap, &'a ColoredStructure);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let top: Vec<&str> = self.0.pairs.iter().map(|p| self.1.name(p.0)).collect();
                let bot: Vec<&str> = self.0.pairs.iter().map(|p| self.1.name(p.1)).collect();
                write!(f, "({} / {})", top.join(" "), bot.join(" "))
            }
        }
        D(self, g)
    }

    pub fn named_pairs(&self, g: &ColoredStructure) -> Vec<(String, String)> {
        self.pairs
            .iter()
            .map(|&(x, y)| (g.name(x).to_owned(), g.name(y).to_owned()))
            .collect()
    }
}

impl Ord for PartialMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pairs
            .len()
            .cmp(&other.pairs.len())
            .then_with(|| self.pairs.cmp(&other.pairs))
    }
}

impl PartialOrd for PartialMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Whether adding `(x, t)` keeps the order conditions with every pair
/// already in `assigned`, including the diagonal `(x, x)`.
#[inline]
fn compatible(
    kind: MorphismKind,
    src: &ColoredStructure,
    dst: &ColoredStructure,
    assigned: &[(usize, usize)],
    x: usize,
    t: usize,
) -> bool {
    let p = src.poset();
    let rel = |a, b| match kind {
        MorphismKind::Iso => a == b,
        _ => p.leq(a, b),
    };
    if !rel(src.vertex(x), dst.vertex(t)) || !rel(src.edge(x, x), dst.edge(t, t)) {
        return false;
    }
    let directed = src.flags().directed || dst.flags().directed;
    for &(y, s) in assigned {
        if kind.injective() && s == t {
            return false;
        }
        if !rel(src.edge(x, y), dst.edge(t, s)) {
            return false;
        }
        if directed && !rel(src.edge(y, x), dst.edge(s, t)) {
            return false;
        }
    }
    true
}

/// Checks that `f` is a `kind`-morphism from `g[dom f]` to `h[im f]`.
pub fn check_morphism(
    f: &PartialMap,
    g: &ColoredStructure,
    h: &ColoredStructure,
    kind: MorphismKind,
) -> Result<bool> {
    if !g.same_poset(h) {
        return Err(Error::PosetMismatch);
    }
    for &(x, y) in &f.pairs {
        if x >= g.len() {
            return Err(Error::VertexOutOfRange(x));
        }
        if y >= h.len() {
            return Err(Error::VertexOutOfRange(y));
        }
    }
    Ok(f.pairs
        .iter()
        .enumerate()
        .all(|(i, &(x, t))| compatible(kind, g, h, &f.pairs[..i], x, t)))
}

/// Every partial `kind`-morphism of `g` into itself with at most `max_size`
/// pairs, ordered by domain size, then lexicographically by sorted pairs.
pub fn enumerate_partial(
    g: &ColoredStructure,
    kind: MorphismKind,
    max_size: usize,
) -> impl Iterator<Item = PartialMap> + '_ {
    (0..=max_size.min(g.len())).flat_map(move |k| SizedMaps::new(g, kind, k))
}

/// Partial self-maps with exactly `k` pairs, in lexicographic order.
///
/// Each level picks the next `(source, target)` pair; sources strictly
/// increase, so walking pair indices `source * n + target` upward visits
/// maps in lexicographic order. The morphism conditions are hereditary,
/// which lets every level prune against the pairs above it.
pub struct SizedMaps<'a> {
    g: &'a ColoredStructure,
    kind: MorphismKind,
    k: usize,
    pairs: Vec<(usize, usize)>,
    cursor: Vec<usize>,
    state: IterState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

impl<'a> SizedMaps<'a> {
    pub fn new(g: &'a ColoredStructure, kind: MorphismKind, k: usize) -> Self {
        SizedMaps {
            g,
            kind,
            k,
            pairs: Vec::with_capacity(k),
            cursor: Vec::with_capacity(k),
            state: if k > g.len() {
                IterState::Done
            } else {
                IterState::Fresh
            },
        }
    }
}

impl Iterator for SizedMaps<'_> {
    type Item = PartialMap;

    fn next(&mut self) -> Option<PartialMap> {
        let n = self.g.len();
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => {
                self.state = IterState::Running;
                if self.k == 0 {
                    self.state = IterState::Done;
                    return Some(PartialMap::empty());
                }
                self.cursor.push(0);
            }
            IterState::Running => {
                self.pairs.pop();
            }
        }
        loop {
            let level = self.pairs.len();
            // the remaining levels need distinct larger sources
            let last_source = n - (self.k - level);
            let mut found = None;
            while self.cursor[level] < n * n {
                let idx = self.cursor[level];
                self.cursor[level] += 1;
                let (x, t) = (idx / n, idx % n);
                if x > last_source {
                    self.cursor[level] = n * n;
                    break;
                }
                if compatible(self.kind, self.g, self.g, &self.pairs, x, t) {
                    found = Some((x, t));
                    break;
                }
            }
            match found {
                Some((x, t)) => {
                    self.pairs.push((x, t));
                    if self.pairs.len() == self.k {
                        return Some(PartialMap::from_sorted(self.pairs.clone()));
                    }
                    self.cursor.push((x + 1) * n);
                }
                None => {
                    if level == 0 {
                        self.state = IterState::Done;
                        return None;
                    }
                    self.cursor.pop();
                    self.pairs.pop();
                }
            }
        }
    }
}

/// Backtracking search for total self-maps of one structure that extend a
/// given partial map.
pub struct Extender<'a> {
    g: &'a ColoredStructure,
    kind: MorphismKind,
    assign: Vec<usize>,
    assigned: Vec<(usize, usize)>,
    free: Vec<usize>,
    nodes: u64,
}

const UNSET: usize = usize::MAX;

impl<'a> Extender<'a> {
    pub fn new(g: &'a ColoredStructure, kind: MorphismKind) -> Self {
        let n = g.len();
        Extender {
            g,
            kind,
            assign: vec![UNSET; n],
            assigned: Vec::with_capacity(n),
            free: Vec::with_capacity(n),
            nodes: 0,
        }
    }

    /// Search nodes visited so far across all calls.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// The first total `kind`-endomorphism agreeing with `f`, as a target
    /// vector, or `None`.
    pub fn extend(&mut self, f: &PartialMap) -> Option<Vec<usize>> {
        let n = self.g.len();
        self.assign.iter_mut().for_each(|a| *a = UNSET);
        self.assigned.clear();
        for &(x, t) in &f.pairs {
            if x >= n || t >= n {
                return None;
            }
            if !compatible(self.kind, self.g, self.g, &self.assigned, x, t) {
                return None;
            }
            self.assign[x] = t;
            self.assigned.push((x, t));
        }
        self.free.clear();
        self.free
            .extend((0..n).filter(|&x| self.assign[x] == UNSET));
        if self.search(0) {
            Some(self.assign.clone())
        } else {
            None
        }
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.free.len() {
            return true;
        }
        let n = self.g.len();
        let x = self.free[depth];
        for t in 0..n {
            self.nodes += 1;
            if compatible(self.kind, self.g, self.g, &self.assigned, x, t) {
                self.assign[x] = t;
                self.assigned.push((x, t));
                if self.search(depth + 1) {
                    return true;
                }
                self.assigned.pop();
                self.assign[x] = UNSET;
            }
        }
        false
    }
}

/// The first total self-map of `g` of the given kind (endomorphism,
/// injective endomorphism, or automorphism) that agrees with `f`.
pub fn extend_to_total(
    g: &ColoredStructure,
    f: &PartialMap,
    target_kind: MorphismKind,
) -> Option<PartialMap> {
    Extender::new(g, target_kind)
        .extend(f)
        .map(|t| PartialMap::total(&t))
}

/// A vertex invariant preserved by color-exact isomorphisms.
fn signature(g: &ColoredStructure, x: usize) -> (u8, u8, Vec<u8>, Vec<u8>) {
    let n = g.len();
    let mut out: Vec<u8> = (0..n).filter(|&y| y != x).map(|y| g.edge(x, y).0).collect();
    let mut inc: Vec<u8> = (0..n).filter(|&y| y != x).map(|y| g.edge(y, x).0).collect();
    out.sort_unstable();
    inc.sort_unstable();
    (g.vertex(x).0, g.edge(x, x).0, out, inc)
}

/// A color-exact bijection from `g` onto `h`, if one exists.
pub fn isomorphic(g: &ColoredStructure, h: &ColoredStructure) -> Result<Option<PartialMap>> {
    if !g.same_poset(h) {
        return Err(Error::PosetMismatch);
    }
    let n = g.len();
    if n != h.len() || g.flags() != h.flags() {
        return Ok(None);
    }
    let sg: Vec<_> = (0..n).map(|x| signature(g, x)).collect();
    let sh: Vec<_> = (0..n).map(|x| signature(h, x)).collect();
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&t| sg[x] == sh[t]).collect())
        .collect();

    fn go(
        g: &ColoredStructure,
        h: &ColoredStructure,
        candidates: &[Vec<usize>],
        assigned: &mut Vec<(usize, usize)>,
    ) -> bool {
        let x = assigned.len();
        if x == g.len() {
            return true;
        }
        for &t in &candidates[x] {
            if compatible(MorphismKind::Iso, g, h, assigned, x, t) {
                assigned.push((x, t));
                if go(g, h, candidates, assigned) {
                    return true;
                }
                assigned.pop();
            }
        }
        false
    }

    let mut assigned = Vec::with_capacity(n);
    Ok(go(g, h, &candidates, &mut assigned).then(|| PartialMap::from_sorted(assigned)))
}
