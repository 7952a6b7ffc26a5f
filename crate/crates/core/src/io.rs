//! JSON documents for structures, verdicts and profiles.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::decider::{ClassVerdict, Profile};
use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::structure::{ColoredStructure, Flags};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub name: String,
    pub color: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: String,
    pub v: String,
    pub color: String,
}

/// On-disk form of a [`ColoredStructure`]. Unlisted pairs are bottom; an
/// undirected structure lists each unordered pair at most once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub poset: PosetDoc,
    #[serde(default)]
    pub directed: bool,
    #[serde(default)]
    pub loops: bool,
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
}

impl StructureDoc {
    pub fn from_structure(g: &ColoredStructure) -> Self {
        let p = g.poset();
        let n = g.len();
        let flags = g.flags();
        let vertices = (0..n)
            .map(|x| VertexDoc {
                name: g.name(x).to_owned(),
                color: p.name(g.vertex(x)).to_owned(),
            })
            .collect();
        let mut edges = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if !flags.directed && y < x {
                    continue;
                }
                let c = g.edge(x, y);
                if c != p.bottom() {
                    edges.push(EdgeDoc {
                        u: g.name(x).to_owned(),
                        v: g.name(y).to_owned(),
                        color: p.name(c).to_owned(),
                    });
                }
            }
        }
        StructureDoc {
            poset: PosetDoc {
                elements: p.names().to_vec(),
                covers: p.cover_names(),
            },
            directed: flags.directed,
            loops: flags.loops,
            vertices,
            edges,
        }
    }

    pub fn to_structure(&self) -> Result<ColoredStructure> {
        let poset = Arc::new(Poset::build(&self.poset.elements, &self.poset.covers)?);
        let n = self.vertices.len();
        let names: Vec<String> = self.vertices.iter().map(|v| v.name.clone()).collect();
        let vc = self
            .vertices
            .iter()
            .map(|v| poset.color(&v.color))
            .collect::<Result<Vec<_>>>()?;
        let index = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
        };
        let mut m = vec![poset.bottom(); n * n];
        let mut seen = vec![false; n * n];
        for e in &self.edges {
            let (u, v) = (index(&e.u)?, index(&e.v)?);
            let c = poset.color(&e.color)?;
            if u == v && !self.loops {
                return Err(Error::Loop(u));
            }
            if seen[u * n + v] {
                return Err(Error::DuplicateEdge(e.u.clone(), e.v.clone()));
            }
            seen[u * n + v] = true;
            m[u * n + v] = c;
            if !self.directed {
                seen[v * n + u] = true;
                m[v * n + u] = c;
            }
        }
        let flags = Flags {
            directed: self.directed,
            loops: self.loops,
        };
        ColoredStructure::with_names(poset, names, vc, m, flags)
    }
}

pub fn parse_structure(text: &str) -> Result<ColoredStructure> {
    let doc: StructureDoc = serde_json::from_str(text)?;
    doc.to_structure()
}

pub fn structure_to_json(g: &ColoredStructure) -> String {
    serde_json::to_string_pretty(&StructureDoc::from_structure(g)).expect("serializable")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictDoc {
    pub class: String,
    /// `null` when the budget ran out.
    pub member: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
    pub checked: u64,
}

impl VerdictDoc {
    pub fn new(v: &ClassVerdict, g: &ColoredStructure) -> Self {
        VerdictDoc {
            class: v.class.to_string(),
            member: v.known(),
            witness: v.witness.as_ref().map(|w| WitnessDoc {
                pairs: w.named_pairs(g),
            }),
            checked: v.checked,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileDoc {
    pub verdicts: Vec<VerdictDoc>,
    pub consistent: bool,
}

impl ProfileDoc {
    pub fn new(p: &Profile, g: &ColoredStructure) -> Self {
        ProfileDoc {
            verdicts: p.verdicts.iter().map(|v| VerdictDoc::new(v, g)).collect(),
            consistent: p.consistent,
        }
    }
}
