//! Finite bounded partial orders used as color sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of an element inside a [`Poset`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Color(pub u8);

impl Color {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Coarse classification of a poset's order shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Chain,
    Diamond,
    Other,
}

/// A finite partial order with a least and a greatest element.
///
/// The order is stored closed under reflexivity and transitivity, one bitmask
/// of upper bounds per element, so `leq` is a single shift.
#[derive(Clone, Debug)]
pub struct Poset {
    names: Vec<String>,
    /// `up[a]` has bit `b` set iff `a ⪯ b`.
    up: Vec<u64>,
    covers: Vec<(usize, usize)>,
    bottom: Color,
    top: Color,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.up == other.up
    }
}

impl Eq for Poset {}

pub const MAX_ELEMENTS: usize = 64;

impl Poset {
    /// Builds the reflexive-transitive closure of `cover_pairs` over the given
    /// element names and locates the bounds.
    pub fn build<S: AsRef<str>>(element_names: &[S], cover_pairs: &[(S, S)]) -> Result<Poset> {
        let names: Vec<String> = element_names
            .iter()
            .map(|s| s.as_ref().to_owned())
            .collect();
        if names.is_empty() {
            return Err(Error::NoBound);
        }
        if names.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateElement(name.clone()));
            }
        }
        let lookup = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| Error::UnknownElement(s.to_owned()))
        };
        let mut covers = Vec::with_capacity(cover_pairs.len());
        for (lo, hi) in cover_pairs {
            covers.push((lookup(lo.as_ref())?, lookup(hi.as_ref())?));
        }
        Self::from_indices(names, covers)
    }

    pub(crate) fn from_indices(names: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Poset> {
        let n = names.len();
        let mut up: Vec<u64> = (0..n).map(|a| 1u64 << a).collect();
        for &(lo, hi) in &covers {
            up[lo] |= 1u64 << hi;
        }
        // Warshall over bit rows.
        for k in 0..n {
            for a in 0..n {
                if up[a] >> k & 1 == 1 {
                    up[a] |= up[k];
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if up[a] >> b & 1 == 1 && up[b] >> a & 1 == 1 {
                    return Err(Error::Cycle(names[a].clone(), names[b].clone()));
                }
            }
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let bottom = (0..n).find(|&a| up[a] == all).ok_or(Error::NoBound)?;
        let top = (0..n)
            .find(|&b| (0..n).all(|a| up[a] >> b & 1 == 1))
            .ok_or(Error::NoBound)?;
        Ok(Poset {
            names,
            up,
            covers,
            bottom: Color(bottom as u8),
            top: Color(top as u8),
        })
    }

    /// The chain `0 ≺ m1 ≺ … ≺ 1` on `len` elements (`len ≥ 2`).
    pub fn chain(len: usize) -> Poset {
        assert!(len >= 2, "a bounded chain needs at least two elements");
        let names: Vec<String> = (0..len)
            .map(|i| match i {
                0 => "0".to_owned(),
                i if i == len - 1 => "1".to_owned(),
                _ if len == 3 => "m".to_owned(),
                i => format!("m{i}"),
            })
            .collect();
        let covers = (1..len).map(|i| (i - 1, i)).collect();
        Self::from_indices(names, covers).expect("chains are bounded")
    }

    /// A diamond: bottom, top and an antichain of named middle elements.
    pub fn diamond<S: AsRef<str>>(middles: &[S]) -> Poset {
        let mut names = vec!["0".to_owned()];
        names.extend(middles.iter().map(|s| s.as_ref().to_owned()));
        names.push("1".to_owned());
        let top = names.len() - 1;
        let covers = (1..top).flat_map(|m| [(0, m), (m, top)]).collect();
        Self::from_indices(names, covers).expect("diamonds are bounded")
    }

    /// The four-element diamond with middles `b` and `r`.
    pub fn m2() -> Poset {
        Self::diamond(&["b", "r"])
    }

    pub fn m3() -> Poset {
        Self::diamond(&["a", "b", "c"])
    }

    /// Built-in posets by name: `chain2`, `chain3`, `m2`, `m3`.
    pub fn named(name: &str) -> Result<Poset> {
        match name {
            "chain2" => Ok(Self::chain(2)),
            "chain3" => Ok(Self::chain(3)),
            "m2" => Ok(Self::m2()),
            "m3" => Ok(Self::m3()),
            other => Err(Error::UnknownPoset(other.to_owned())),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    #[inline]
    pub fn bottom(&self) -> Color {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> Color {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: Color, b: Color) -> bool {
        self.up[a.index()] >> b.0 & 1 == 1
    }

    #[inline]
    pub fn lt(&self, a: Color, b: Color) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Color, b: Color) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements strictly between bottom and top.
    pub fn middles(&self) -> impl Iterator<Item = Color> + '_ {
        self.colors()
            .filter(move |&c| c != self.bottom && c != self.top)
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        (0..self.names.len() as u8).map(Color)
    }

    pub fn name(&self, c: Color) -> &str {
        &self.names[c.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The cover pairs the poset was built from, by name.
    pub fn cover_names(&self) -> Vec<(String, String)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    pub fn color(&self, name: &str) -> Result<Color> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Color(i as u8))
            .ok_or_else(|| Error::UnknownElement(name.to_owned()))
    }

    pub fn shape(&self) -> Shape {
        let total = self
            .colors()
            .all(|a| self.colors().all(|b| self.comparable(a, b)));
        if total {
            return Shape::Chain;
        }
        let middles: Vec<Color> = self.middles().collect();
        let antichain = middles
            .iter()
            .all(|&a| middles.iter().all(|&b| a == b || !self.comparable(a, b)));
        if antichain {
            Shape::Diamond
        } else {
            Shape::Other
        }
    }
}
