use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use homhom::catalog::{make_example, ExampleSpec};
use homhom::census::{run_census, CensusParams};
use homhom::classify::{
    classify_chain, classify_diamond_vertex_uniform, find_pump_config, GardinerTag,
};
use homhom::enumerate::{search_mh_not_hh, Constraints, DEFAULT_CAP};
use homhom::io::{parse_structure, structure_to_json, ProfileDoc, StructureDoc, VerdictDoc};
use homhom::{ColoredStructure, Decider, Error, ExtensionClass, Flags, Membership, Poset, Shape};
use serde::Serialize;
use serde_json::json;

/// Exit status for structures outside the scope of the structural theorems.
const OUT_OF_SCOPE: u8 = 3;
const FAILURE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "homhom",
    version,
    about = "Morphism-extension classes of poset-colored graphs"
)]
struct Cli {
    /// Worker threads for census runs (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership in one class (exit 0 member, 1 non-member, 2 unknown).
    Decide {
        /// Structure JSON file, or `-` for standard input.
        file: String,
        /// One of II, IM, IH, MI, MM, MH, HI, HM, HH.
        class: String,
        /// Stop after examining this many partial maps.
        #[arg(long)]
        max_maps: Option<u64>,
    },
    /// All nine class verdicts and the inclusion consistency flag.
    Profile {
        file: String,
        #[arg(long)]
        max_maps: Option<u64>,
    },
    /// Structural MH/HH classification over chains and vertex-uniform diamonds.
    Classify { file: String },
    /// Least pump configuration, if any.
    Pump { file: String },
    /// Emit a catalog structure as JSON.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
        /// Size parameter (clique size, vertex count, or family size).
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Number of parts / copies for Gardiner families.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value = "chain2")]
        poset: String,
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, default_value = "1")]
        beta: String,
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// graph6 code for `plain`.
        #[arg(long)]
        graph6: Option<String>,
    },
    /// Enumerate all classes of a size and cross-check theorems against brute force.
    Census(SpaceArgs),
    /// List structures that are MH- but not HH-homogeneous.
    Search(SpaceArgs),
}

#[derive(clap::Args)]
struct SpaceArgs {
    /// chain2, chain3, m2 or m3.
    #[arg(long)]
    poset: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Mode::Free)]
    mode: Mode,
    #[arg(long)]
    directed: bool,
    #[arg(long)]
    loops: bool,
    #[arg(long)]
    max_maps: Option<u64>,
    /// Maximum number of labeled structures to visit.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Omit per-structure profiles from the census report.
    #[arg(long)]
    summary: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Free,
    Uniform,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    Example1,
    Fig6,
    Fig7,
    Uniform,
    Gardiner,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cliques,
    Multipartite,
    C5,
    Lk33,
}

fn read_structure(path: &str) -> Result<ColoredStructure, String> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
    };
    parse_structure(&text).map_err(|e| format!("{path}: {e}"))
}

fn print_json(v: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn space(args: &SpaceArgs) -> Result<CensusParams, Error> {
    let poset = Poset::named(&args.poset)?;
    let constraints = match args.mode {
        Mode::Free => Constraints::free(),
        Mode::Uniform => Constraints::vertex_uniform(),
        Mode::Plain => Constraints::plain(&poset),
    }
    .with_cap(args.cap);
    let flags = Flags {
        directed: args.directed,
        loops: args.loops,
    };
    let mut params = CensusParams::new(&args.poset, args.n, flags, constraints)?;
    params.decider = Decider::with_budget(args.max_maps);
    Ok(params)
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Decide {
            file,
            class,
            max_maps,
        } => {
            let class: ExtensionClass = class.parse().map_err(|e: Error| e.to_string())?;
            let g = read_structure(&file)?;
            let v = Decider::with_budget(max_maps).decide(&g, class);
            print_json(&VerdictDoc::new(&v, &g));
            Ok(match v.membership {
                Membership::Member => 0,
                Membership::NonMember => 1,
                Membership::Unknown => 2,
            })
        }
        Command::Profile { file, max_maps } => {
            let g = read_structure(&file)?;
            let p = Decider::with_budget(max_maps).profile(&g);
            print_json(&ProfileDoc::new(&p, &g));
            Ok(if p.consistent { 0 } else { 1 })
        }
        Command::Classify { file } => {
            let g = read_structure(&file)?;
            let shape = g.poset().shape();
            let outcome = if !g.is_plain_shape() {
                Err("classification covers undirected loopless graphs only".to_owned())
            } else {
                match shape {
                    Shape::Chain => classify_chain(&g).map_err(|e| e.to_string()),
                    Shape::Diamond => match classify_diamond_vertex_uniform(&g) {
                        Err(Error::NotVertexUniform) => Err(
                            "graphs over a diamond are classified only when vertex-uniform"
                                .to_owned(),
                        ),
                        other => other.map_err(|e| e.to_string()),
                    },
                    Shape::Other => {
                        Err("classification covers chains and diamonds only".to_owned())
                    }
                }
            };
            match outcome {
                Ok(c) => {
                    print_json(&json!({
                        "shape": shape,
                        "member": c.member,
                        "branch": c.branch,
                        "reason": c.reason,
                    }));
                    Ok(if c.member { 0 } else { 1 })
                }
                Err(msg) => {
                    eprintln!("homhom: outside classified cases: {msg}");
                    Ok(OUT_OF_SCOPE)
                }
            }
        }
        Command::Pump { file } => {
            let g = read_structure(&file)?;
            let cfg = find_pump_config(&g).map_err(|e| e.to_string())?;
            let named =
                cfg.map(|c| json!({"a0": g.name(c.a0), "a1": g.name(c.a1), "x": g.name(c.x)}));
            print_json(&json!({ "config": named }));
            Ok(0)
        }
        Command::Example {
            name,
            n,
            k,
            poset,
            alpha,
            beta,
            family,
            graph6,
        } => {
            let spec = match name {
                ExampleName::Example1 => ExampleSpec::Example1,
                ExampleName::Fig6 => ExampleSpec::Fig6(n),
                ExampleName::Fig7 => ExampleSpec::Fig7(n),
                ExampleName::Uniform => ExampleSpec::Uniform {
                    n,
                    alpha,
                    beta,
                    poset,
                },
                ExampleName::Gardiner => {
                    ExampleSpec::Gardiner(match family.ok_or("gardiner needs --family")? {
                        Family::Cliques => GardinerTag::UnionOfCliques { k, n },
                        Family::Multipartite => GardinerTag::BalancedMultipartite { k, n },
                        Family::C5 => GardinerTag::C5,
                        Family::Lk33 => GardinerTag::LineGraphK33,
                    })
                }
                ExampleName::Plain => {
                    ExampleSpec::PlainGraph(graph6.ok_or("plain needs --graph6")?)
                }
            };
            let g = make_example(&spec).map_err(|e| e.to_string())?;
            println!("{}", structure_to_json(&g));
            Ok(0)
        }
        Command::Census(args) => {
            let params = space(&args).map_err(|e| e.to_string())?;
            let mut report = run_census(&params).map_err(|e| e.to_string())?;
            if args.summary {
                report.profiles.clear();
            }
            print_json(&report);
            Ok(if report.disagreements.is_empty() {
                0
            } else {
                1
            })
        }
        Command::Search(args) => {
            let params = space(&args).map_err(|e| e.to_string())?;
            let found: Vec<StructureDoc> = search_mh_not_hh(
                params.poset.clone(),
                params.n,
                params.flags,
                &params.constraints,
                params.decider,
            )
            .map_err(|e| e.to_string())?
            .map(|g| StructureDoc::from_structure(&g))
            .collect();
            print_json(&json!({
                "poset": args.poset,
                "n": args.n,
                "flags": params.flags,
                "count": found.len(),
                "structures": found,
            }));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("homhom: {e}");
            return ExitCode::from(FAILURE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("homhom: {msg}");
            ExitCode::from(FAILURE)
        }
    }
}
