//! Fast structural checks: the local obstruction to finite MH-homogeneity,
//! the chain and diamond classifications, and ultrahomogeneous plain graph
//! recognition. These are independent of the brute-force decider and are
//! cross-checked against it by the census.

mod chain;
mod diamond;
mod gardiner;
mod pump;

use serde::Serialize;

pub use chain::{check_chain_necessary, classify_chain, ChainViolation};
pub use diamond::{check_color1_structure, classify_diamond_vertex_uniform, Color1Violation};
pub use gardiner::{line_graph_k33, recognize_gardiner, GardinerTag};
pub use pump::{find_pump_config, PumpConfig};

use crate::structure::ColoredStructure;

/// Which description matched an accepted diamond-colored graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// Copies of a complete graph with every edge colored top.
    U1,
    /// Copies of an ultrahomogeneous complete graph with edge colors strictly
    /// between bottom and top.
    Strict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub member: bool,
    pub branch: Option<Branch>,
    pub reason: String,
}

impl Classification {
    fn accepted(branch: Option<Branch>, reason: String) -> Self {
        Classification {
            member: true,
            branch,
            reason,
        }
    }

    fn rejected(reason: String) -> Self {
        Classification {
            member: false,
            branch: None,
            reason,
        }
    }
}

fn describe_class(g: &ColoredStructure, class: &[usize]) -> String {
    let names: Vec<&str> = class.iter().map(|&x| g.name(x)).collect();
    format!("{{{}}}", names.join(","))
}
