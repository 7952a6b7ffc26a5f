//! Census runs: enumerate every class representative, profile it against
//! all nine extension classes, and cross-check each applicable structural
//! classifier against the brute-force verdicts.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{
    check_chain_necessary, classify_chain, classify_diamond_vertex_uniform, find_pump_config,
    recognize_gardiner, Classification, GardinerTag, PumpConfig,
};
use crate::decider::{Decider, ExtensionClass, Profile};
use crate::enumerate::{enumerate_structures, Constraints, VertexMode};
use crate::error::Result;
use crate::graph::underlying_graph;
use crate::io::StructureDoc;
use crate::poset::{Poset, Shape};
use crate::structure::{ColoredStructure, Flags};

#[derive(Clone, Debug)]
pub struct CensusParams {
    pub poset_name: String,
    pub poset: Arc<Poset>,
    pub n: usize,
    pub flags: Flags,
    pub constraints: Constraints,
    pub decider: Decider,
}

impl CensusParams {
    pub fn new(poset_name: &str, n: usize, flags: Flags, constraints: Constraints) -> Result<Self> {
        Ok(CensusParams {
            poset_name: poset_name.to_owned(),
            poset: Arc::new(Poset::named(poset_name)?),
            n,
            flags,
            constraints,
            decider: Decider::new(),
        })
    }

    fn mode_name(&self) -> &'static str {
        match self.constraints.vertex {
            VertexMode::Free => "free",
            VertexMode::Uniform => "vertex-uniform",
            VertexMode::Fixed(_) => "fixed-vertex-color",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassCount {
    pub member: usize,
    pub non_member: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureProfile {
    pub index: usize,
    pub structure: StructureDoc,
    pub classes: BTreeMap<String, Option<bool>>,
    pub consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pump: Option<PumpConfig>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain_violations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Classification>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diamond: Option<Classification>,
    /// Present for plain graphs: the recognized family, or `null`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gardiner: Option<Option<GardinerTag>>,
}

impl StructureProfile {
    pub fn member(&self, class: ExtensionClass) -> Option<bool> {
        self.classes[&class.to_string()]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub index: usize,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub poset: String,
    pub n: usize,
    pub flags: Flags,
    pub mode: String,
    pub classes: usize,
    pub counts: BTreeMap<String, ClassCount>,
    pub profiles: Vec<StructureProfile>,
    pub disagreements: Vec<Disagreement>,
    pub elapsed_ms: u128,
}

/// Whether the structure is a plain graph: two-element chain, bottom vertex
/// colors, undirected and loopless.
pub fn is_plain_graph(g: &ColoredStructure) -> bool {
    g.poset().len() == 2
        && g.is_plain_shape()
        && g.vertex_colors().iter().all(|&c| c == g.poset().bottom())
}

/// Profiles one structure and appends any theorem/brute-force mismatch.
pub fn profile_structure(
    index: usize,
    g: &ColoredStructure,
    decider: &Decider,
) -> (StructureProfile, Vec<Disagreement>) {
    let profile: Profile = decider.profile(g);
    let mh = profile.get(ExtensionClass::MH).known();
    let hh = profile.get(ExtensionClass::HH).known();
    let ii = profile.get(ExtensionClass::II).known();
    let mut out = Vec::new();
    let mut flag = |check: &str, detail: String| {
        out.push(Disagreement {
            index,
            check: check.to_owned(),
            detail,
        })
    };
    if !profile.consistent {
        flag("hierarchy", "class inclusions violated".to_owned());
    }
    let shape = g.poset().shape();
    let plain_shape = g.is_plain_shape();

    let pump = if plain_shape {
        find_pump_config(g).expect("plain shape checked")
    } else {
        None
    };
    if let (Some(cfg), Some(true)) = (pump, mh) {
        flag(
            "pump",
            format!("pump configuration {cfg:?} in an MH member"),
        );
    }

    let (mut chain, mut chain_violations) = (None, None);
    if plain_shape && shape == Shape::Chain {
        let c = classify_chain(g).expect("chain shape checked");
        for (name, v) in [("MH", mh), ("HH", hh)] {
            if v.is_some_and(|v| v != c.member) {
                flag(
                    "chain",
                    format!("classifier says {} but {name} is {v:?}", c.member),
                );
            }
        }
        let viol = check_chain_necessary(g).expect("chain shape checked");
        if !viol.is_empty() && mh == Some(true) {
            flag(
                "chain-necessary",
                format!("{} local violations in an MH member", viol.len()),
            );
        }
        chain = Some(c);
        chain_violations = Some(viol.len());
    }

    let mut diamond = None;
    if plain_shape && shape == Shape::Diamond && g.uniform_vertex_color().is_some() {
        let c = classify_diamond_vertex_uniform(g).expect("preconditions checked");
        for (name, v) in [("MH", mh), ("HH", hh)] {
            if v.is_some_and(|v| v != c.member) {
                flag(
                    "diamond",
                    format!("classifier says {} but {name} is {v:?}", c.member),
                );
            }
        }
        diamond = Some(c);
    }

    let mut gardiner = None;
    if is_plain_graph(g) {
        let tag = recognize_gardiner(&underlying_graph(g));
        if ii.is_some_and(|ii| ii != tag.is_some()) {
            flag(
                "gardiner",
                format!("recognizer says {tag:?} but II is {ii:?}"),
            );
        }
        gardiner = Some(tag);
    }

    let classes = profile
        .verdicts
        .iter()
        .map(|v| (v.class.to_string(), v.known()))
        .collect();
    let sp = StructureProfile {
        index,
        structure: StructureDoc::from_structure(g),
        classes,
        consistent: profile.consistent,
        pump,
        chain_violations,
        chain,
        diamond,
        gardiner,
    };
    (sp, out)
}

/// Runs a census on the current rayon pool. Output does not depend on the
/// number of worker threads.
pub fn run_census(params: &CensusParams) -> Result<CensusReport> {
    let start = Instant::now();
    let reps: Vec<ColoredStructure> = enumerate_structures(
        params.poset.clone(),
        params.n,
        params.flags,
        &params.constraints,
    )?
    .collect();
    let results: Vec<(StructureProfile, Vec<Disagreement>)> = reps
        .par_iter()
        .enumerate()
        .map(|(i, g)| profile_structure(i, g, &params.decider))
        .collect();
    let mut counts: BTreeMap<String, ClassCount> = ExtensionClass::all()
        .iter()
        .map(|c| (c.to_string(), ClassCount::default()))
        .collect();
    let mut profiles = Vec::with_capacity(results.len());
    let mut disagreements = Vec::new();
    for (p, d) in results {
        for (class, v) in &p.classes {
            let c = counts.get_mut(class).expect("all classes counted");
            match v {
                Some(true) => c.member += 1,
                Some(false) => c.non_member += 1,
                None => c.unknown += 1,
            }
        }
        profiles.push(p);
        disagreements.extend(d);
    }
    Ok(CensusReport {
        poset: params.poset_name.clone(),
        n: params.n,
        flags: params.flags,
        mode: params.mode_name().to_owned(),
        classes: profiles.len(),
        counts,
        profiles,
        disagreements,
        elapsed_ms: start.elapsed().as_millis(),
    })
}
