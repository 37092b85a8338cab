use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use p5gem::classify::{classify, ClassLabel};
use p5gem::instances::{gen_class_instance, gen_target_delta, BagMode, GenSpec};
use p5gem::pattern::{find_induced, Pattern};
use p5gem::solver::{exact_chromatic_capped, replay, solve_with, SolveOptions, DEFAULT_ORACLE_CAP};
use p5gem::structure::TemplateId;
use p5gem::{verify_coloring, Graph};
use serde::Serialize;

mod document;
mod formats;

use document::{parse_coloring, write_coloring, TraceDocument};
use formats::{Format, ParseError};

#[derive(Parser)]
#[command(name = "p5gem", version, about = "Coloring (P5, gem)-free graphs with at most Δ-1 colors")]
struct Cli {
    /// Input graph format; inferred from the file extension when omitted
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for every randomized step
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest graph the exact oracle accepts
    #[arg(long, global = true, env = "P5GEM_MAX_ORACLE_N", default_value_t = DEFAULT_ORACLE_CAP)]
    max_oracle_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph with at most Δ-1 colors
    Color {
        graph: PathBuf,
        /// Write the reduction trace to this file
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Skip the (P5, gem)-freeness check
        #[arg(long)]
        unchecked: bool,
    },
    /// Look for induced P5, gem and C5
    Detect {
        graph: PathBuf,
        #[arg(long, value_enum)]
        pattern: Option<PatternArg>,
    },
    /// Report the structure class and its bags
    Classify { graph: PathBuf },
    /// Exact chromatic number
    Oracle { graph: PathBuf },
    /// Check a coloring file against a graph
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Generate a class member with a prescribed maximum degree
    Gen {
        /// Template name: G1..G10 or H
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value = "clique")]
        mode: ModeArg,
        #[arg(long, default_value_t = 9)]
        delta: usize,
        /// Explicit bag sizes, comma separated (skips the degree search)
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        /// Pendant component sizes for H, comma separated
        #[arg(long, value_delimiter = ',')]
        pendant: Vec<usize>,
        #[arg(long)]
        out: PathBuf,
        /// Write the generator spec and ground-truth bags as JSON
        #[arg(long)]
        bags: Option<PathBuf>,
    },
    /// Re-run a recorded trace and print the coloring it produces
    Replay { graph: PathBuf, trace: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum PatternArg {
    P4,
    P5,
    Gem,
    C5,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Clique,
    Cograph,
}

#[derive(Serialize)]
struct GeneratedBags<'a> {
    spec: &'a GenSpec,
    bags: &'a p5gem::structure::BagPartition,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<ParseError>().is_some() {
        return 2;
    }
    match e.downcast_ref::<p5gem::Error>() {
        Some(p5gem::Error::NotP5GemFree(_)) => 3,
        Some(p5gem::Error::DeltaTooSmall { .. }) => 4,
        Some(p5gem::Error::CliqueTooLarge { .. }) => 5,
        Some(p5gem::Error::InternalInconsistency(_) | p5gem::Error::InvalidCertificate(_)) => 6,
        _ => 1,
    }
}

fn read_graph(path: &Path, format: Option<Format>) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = format.unwrap_or_else(|| Format::from_path(path));
    Ok(formats::parse(&text, format)?)
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Color { graph, trace, unchecked } => {
            let g = read_graph(graph, cli.format)?;
            let (c, t) = solve_with(&g, SolveOptions { require_p5_gem_free: !unchecked })?;
            if let Some(path) = trace {
                fs::write(path, TraceDocument::new(&g, t).to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", write_coloring(&c));
        }
        Command::Detect { graph, pattern } => {
            let g = read_graph(graph, cli.format)?;
            let patterns = match pattern {
                None => vec![Pattern::P5, Pattern::Gem, Pattern::C5],
                Some(PatternArg::P4) => vec![Pattern::P4],
                Some(PatternArg::P5) => vec![Pattern::P5],
                Some(PatternArg::Gem) => vec![Pattern::Gem],
                Some(PatternArg::C5) => vec![Pattern::C5],
            };
            let found: Vec<_> = patterns.into_iter().filter_map(|p| find_induced(&g, p)).collect();
            if found.is_empty() {
                println!("none");
            }
            for w in found {
                println!("{w}");
            }
        }
        Command::Classify { graph } => {
            let g = read_graph(graph, cli.format)?;
            match classify(&g)? {
                ClassLabel::Perfect => println!("Perfect"),
                ClassLabel::Expansion(part) => {
                    let bags = if part.bags.iter().all(|b| b.len() == 1) {
                        "singletons".to_string()
                    } else {
                        let items: Vec<String> = part
                            .bags
                            .iter()
                            .enumerate()
                            .map(|(i, b)| {
                                let vs: Vec<String> = b.iter().map(usize::to_string).collect();
                                format!("{}={{{}}}", part.template.bag_name(i), vs.join(","))
                            })
                            .collect();
                        items.join(" ")
                    };
                    println!("{}; bags: {bags}", part.template);
                }
            }
        }
        Command::Oracle { graph } => {
            let g = read_graph(graph, cli.format)?;
            let (chi, _) = exact_chromatic_capped(&g, cli.max_oracle_n)?;
            println!("chi = {chi}");
        }
        Command::Verify { graph, coloring } => {
            let g = read_graph(graph, cli.format)?;
            let text = fs::read_to_string(coloring).with_context(|| format!("reading {}", coloring.display()))?;
            let c = parse_coloring(&text, g.n())?;
            if !verify_coloring(&g, &c) {
                println!("invalid");
                return Ok(ExitCode::FAILURE);
            }
            println!("ok: {} colors within palette {}", c.colors_used(), c.palette);
        }
        Command::Gen { class, mode, delta, sizes, pendant, out, bags } => {
            let Some(class) = TemplateId::parse(class) else {
                bail!("unknown class {class:?}; expected G1..G10 or H");
            };
            let mode = match mode {
                ModeArg::Clique => BagMode::Clique,
                ModeArg::Cograph => BagMode::Cograph,
            };
            let spec = GenSpec { class, sizes: sizes.clone(), mode, seed: cli.seed, pendant: pendant.clone() };
            let spec = if sizes.is_empty() { gen_target_delta(&spec, *delta, cli.seed)? } else { spec };
            let (g, part) = gen_class_instance(&spec)?;
            let format = cli.format.unwrap_or_else(|| Format::from_path(out));
            fs::write(out, formats::write(&g, format)).with_context(|| format!("writing {}", out.display()))?;
            if let Some(path) = bags {
                let doc = serde_json::to_string_pretty(&GeneratedBags { spec: &spec, bags: &part })?;
                fs::write(path, doc).with_context(|| format!("writing {}", path.display()))?;
            }
            println!("n = {}, m = {}, Delta = {}", g.n(), g.edge_count(), g.max_degree());
        }
        Command::Replay { graph, trace } => {
            let g = read_graph(graph, cli.format)?;
            let text = fs::read_to_string(trace).with_context(|| format!("reading {}", trace.display()))?;
            let doc = TraceDocument::from_json(&text)?;
            doc.check_graph(&g)?;
            let c = replay(&g, &doc.trace)?;
            if c.palette != doc.palette {
                bail!("replay used palette {} but the document records {}", c.palette, doc.palette);
            }
            print!("{}", write_coloring(&c));
        }
    }
    Ok(ExitCode::SUCCESS)
}
