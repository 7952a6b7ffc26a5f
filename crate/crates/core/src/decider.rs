//! Brute-force membership in the morphism-extension classes `XY`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::morphism::{Extender, MorphismKind, PartialMap, SizedMaps};
use crate::structure::ColoredStructure;

/// `XY`: every partial X-morphism extends to a total Y-endomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtensionClass {
    pub source: MorphismKind,
    pub target: MorphismKind,
}

impl ExtensionClass {
    pub const fn new(source: MorphismKind, target: MorphismKind) -> Self {
        ExtensionClass { source, target }
    }

    pub const II: Self = Self::new(MorphismKind::Iso, MorphismKind::Iso);
    pub const MH: Self = Self::new(MorphismKind::Mono, MorphismKind::Homo);
    pub const HH: Self = Self::new(MorphismKind::Homo, MorphismKind::Homo);

    /// All nine classes: II, IM, IH, MI, MM, MH, HI, HM, HH.
    pub fn all() -> [ExtensionClass; 9] {
        let mut out = [Self::II; 9];
        for (i, s) in MorphismKind::ALL.into_iter().enumerate() {
            for (j, t) in MorphismKind::ALL.into_iter().enumerate() {
                out[3 * i + j] = Self::new(s, t);
            }
        }
        out
    }
}

impl fmt::Display for ExtensionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.source.letter(), self.target.letter())
    }
}

impl FromStr for ExtensionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Precondition(format!("unknown class `{s}`"));
        let mut chars = s.chars();
        let (Some(a), Some(b), None) = (chars.next(), chars.next(), chars.next()) else {
            return Err(bad());
        };
        Ok(Self::new(
            MorphismKind::from_letter(a.to_ascii_uppercase()).ok_or_else(bad)?,
            MorphismKind::from_letter(b.to_ascii_uppercase()).ok_or_else(bad)?,
        ))
    }
}

impl Serialize for ExtensionClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Member,
    NonMember,
    /// The map budget ran out before a decision.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict {
    pub class: ExtensionClass,
    pub membership: Membership,
    /// Least non-extendable source map (smallest domain, then lexicographic);
    /// present iff the structure is not a member.
    pub witness: Option<PartialMap>,
    /// Partial source maps examined.
    pub checked: u64,
}

impl ClassVerdict {
    pub fn is_member(&self) -> bool {
        self.membership == Membership::Member
    }

    pub fn is_known(&self) -> bool {
        self.membership != Membership::Unknown
    }

    /// `Some(member)` when decided.
    pub fn known(&self) -> Option<bool> {
        match self.membership {
            Membership::Member => Some(true),
            Membership::NonMember => Some(false),
            Membership::Unknown => None,
        }
    }
}

/// Recently found total extensions. Any map agreeing with one of them is
/// extendable without a new search.
struct ExtensionCache {
    maps: Vec<Vec<usize>>,
    cap: usize,
}

impl ExtensionCache {
    fn new(cap: usize) -> Self {
        ExtensionCache {
            maps: Vec::with_capacity(cap),
            cap,
        }
    }

    fn hit(&mut self, f: &PartialMap) -> bool {
        match self.maps.iter().position(|g| f.agrees_with(g)) {
            Some(0) => true,
            Some(i) => {
                let g = self.maps.remove(i);
                self.maps.insert(0, g);
                true
            }
            None => false,
        }
    }

    fn insert(&mut self, g: Vec<usize>) {
        if self.maps.len() == self.cap {
            self.maps.pop();
        }
        self.maps.insert(0, g);
    }
}

/// Decides class membership by enumerating every partial source map in
/// ascending (domain size, lexicographic) order and searching for a total
/// extension of each. The first failure is therefore the least witness.
#[derive(Clone, Copy, Debug, Default)]
pub struct Decider {
    /// Cap on the number of partial maps examined; `None` is unlimited.
    pub budget: Option<u64>,
}

impl Decider {
    pub fn new() -> Self {
        Decider::default()
    }

    pub fn with_budget(budget: Option<u64>) -> Self {
        Decider { budget }
    }

    pub fn decide(&self, g: &ColoredStructure, class: ExtensionClass) -> ClassVerdict {
        let mut extender = Extender::new(g, class.target);
        let mut cache = ExtensionCache::new(48);
        let mut checked = 0u64;
        for k in 0..=g.len() {
            for f in SizedMaps::new(g, class.source, k) {
                if self.budget.is_some_and(|b| checked >= b) {
                    return ClassVerdict {
                        class,
                        membership: Membership::Unknown,
                        witness: None,
                        checked,
                    };
                }
                checked += 1;
                if cache.hit(&f) {
                    continue;
                }
                match extender.extend(&f) {
                    Some(total) => cache.insert(total),
                    None => {
                        return ClassVerdict {
                            class,
                            membership: Membership::NonMember,
                            witness: Some(f),
                            checked,
                        }
                    }
                }
            }
        }
        ClassVerdict {
            class,
            membership: Membership::Member,
            witness: None,
            checked,
        }
    }

    pub fn profile(&self, g: &ColoredStructure) -> Profile {
        let verdicts = ExtensionClass::all().map(|c| self.decide(g, c));
        let consistent = hierarchy_consistent(&verdicts);
        Profile {
            verdicts,
            consistent,
        }
    }
}

/// Decides with an unlimited budget.
pub fn decide(g: &ColoredStructure, class: ExtensionClass) -> ClassVerdict {
    Decider::new().decide(g, class)
}

pub fn hierarchy_profile(g: &ColoredStructure) -> Profile {
    Decider::new().profile(g)
}

/// All nine verdicts in II, IM, IH, MI, MM, MH, HI, HM, HH order.
#[derive(Clone, Debug)]
pub struct Profile {
    pub verdicts: [ClassVerdict; 9],
    /// Whether every inclusion between the classes holds.
    pub consistent: bool,
}

impl Profile {
    pub fn get(&self, class: ExtensionClass) -> &ClassVerdict {
        self.verdicts
            .iter()
            .find(|v| v.class == class)
            .expect("profile holds every class")
    }
}

/// Inclusions between the classes: with the target fixed, `HY ⊆ MY ⊆ IY`;
/// with the source fixed, `XI ⊆ XM ⊆ XH`. Undecided cells constrain nothing.
pub fn hierarchy_consistent(verdicts: &[ClassVerdict; 9]) -> bool {
    let at = |s: usize, t: usize| verdicts[3 * s + t].known();
    let implies = |a: Option<bool>, b: Option<bool>| !matches!((a, b), (Some(true), Some(false)));
    // indices: 0 = Iso, 1 = Mono, 2 = Homo
    (0..3).all(|y| implies(at(2, y), at(1, y)) && implies(at(1, y), at(0, y)))
        && (0..3).all(|x| implies(at(x, 0), at(x, 1)) && implies(at(x, 1), at(x, 2)))
}
