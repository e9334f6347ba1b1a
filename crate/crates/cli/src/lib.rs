//! Command-line front end: file formats, instance loading and the commands.

pub mod error;
pub mod formats;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hgraph::clique::{clique_cactus, clique_cutset_decomposition, clique_helly, HellyCliqueResult};
use hgraph::fpt::{
    heuristic_decomposition, list_k_coloring, max_clique_in_bags, solve_list_coloring,
    tree_decomposition, DecompositionAttempt, DecompositionConfig,
};
use hgraph::generate::random_graph;
use hgraph::graph::{
    complement, max_clique_bruteforce, two_subdivision, Color, ColorLists, OracleConfig,
};
use hgraph::pattern::{find_tripartition, is_cactus, PatternProfile, TRIPARTITION_LIMIT};
use hgraph::representation::{
    generate_hard_instance, helly_check, td_from_representation, verify_representation,
    HRepresentation, HellyReport, Verdict,
};
use hgraph::{Multigraph, SimpleGraph, Vertex};

pub use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(
    name = "hgraph",
    version,
    about = "Clique, coloring and representation tools for H-graphs"
)]
pub struct Cli {
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximal-clique enumeration cap for the Helly check.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub cap: usize,
    /// Largest vertex count handed to the brute-force solvers.
    #[arg(long, global = true, default_value_t = 20)]
    pub oracle_limit: usize,
    /// Decompositions of width up to this factor times the target are within budget.
    #[arg(long, global = true, default_value_t = 5)]
    pub approx_factor: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Auto,
    Helly,
    Cactus,
    Treewidth,
    Brute,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum clique.
    Clique {
        graph: PathBuf,
        /// Pattern multigraph (.hgr).
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// Representation (.rep).
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// List coloring with colors 1..=k.
    Color {
        graph: PathBuf,
        #[arg(long)]
        k: Color,
        /// Lists file; unlisted vertices may use every color.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Tree decomposition (.td) to run the dynamic program on.
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Complement of the 2-subdivision of a graph with a representation on a pattern.
    GenHard {
        /// Input graph; omit to draw a random one with --random.
        graph: Option<PathBuf>,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Vertex count of a random G(n, 1/2) input.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Checks a representation against a graph.
    Verify { graph: PathBuf, rep: PathBuf },
    /// Checks the Helly property of a representation.
    Helly { rep: PathBuf },
    /// Clique-cutset decomposition.
    Atoms { graph: PathBuf },
    /// Tree decomposition in .td format.
    Td {
        graph: PathBuf,
        /// Target width; defaults to the vertex count.
        #[arg(long)]
        width: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 2-subdivision in .gr format.
    Subdivide {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complement in .gr format.
    Complement {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Yes = 0,
    No = 1,
    LimitExceeded = 3,
}

pub const EXIT_INPUT_ERROR: i32 = 2;

/// Exit code for an error: limits are 3, everything else is an input error.
pub fn error_code(e: &CliError) -> i32 {
    match e {
        CliError::Core(
            hgraph::Error::OracleLimitExceeded { .. }
            | hgraph::Error::ExactLimitExceeded { .. }
            | hgraph::Error::SearchLimitExceeded { .. },
        ) => Status::LimitExceeded as i32,
        _ => EXIT_INPUT_ERROR,
    }
}

/// A loaded and cross-checked input.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: SimpleGraph,
    pub pattern: Option<Multigraph>,
    pub representation: Option<HRepresentation>,
    pub lists: Option<ColorLists>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Helly,
    Cactus,
    Treewidth,
    Brute,
}

impl Strategy {
    fn name(self) -> &'static str {
        match self {
            Strategy::Helly => "helly",
            Strategy::Cactus => "cactus",
            Strategy::Treewidth => "treewidth",
            Strategy::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyChoice {
    pub strategy: Strategy,
    pub reason: String,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn io(out: &mut impl Write, text: &str) -> CliResult<()> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

pub fn load_graph(path: &Path) -> CliResult<SimpleGraph> {
    formats::parse_gr(&path.display().to_string(), &read(path)?)
}

pub fn load_pattern(path: &Path) -> CliResult<Multigraph> {
    formats::parse_hgr(&path.display().to_string(), &read(path)?)
}

/// Loads a representation together with the pattern file it names.
pub fn load_representation(path: &Path) -> CliResult<HRepresentation> {
    let rep = formats::parse_rep_header(&path.display().to_string(), &read(path)?)?;
    let base = load_pattern(&rep.pattern_location(path))?;
    rep.build(base)
}

/// Paths making up an instance.
#[derive(Debug, Clone, Default)]
pub struct InstancePaths<'a> {
    pub graph: Option<&'a Path>,
    pub pattern: Option<&'a Path>,
    pub rep: Option<&'a Path>,
    pub lists: Option<&'a Path>,
}

/// Loads every given file and checks that they refer to the same objects.
pub fn parse_instance(paths: &InstancePaths, k: Option<Color>) -> CliResult<Instance> {
    let graph = paths
        .graph
        .map(load_graph)
        .transpose()?
        .ok_or_else(|| CliError::Usage("a graph file is required".into()))?;
    let representation = paths.rep.map(load_representation).transpose()?;
    let mut pattern = paths.pattern.map(load_pattern).transpose()?;
    if let Some(r) = &representation {
        if r.vertex_count() != graph.n() {
            return Err(CliError::Usage(format!(
                "representation maps {} vertices but the graph has {}",
                r.vertex_count(),
                graph.n()
            )));
        }
        match &pattern {
            Some(p) if p != r.pattern().base() => {
                return Err(CliError::Usage(
                    "pattern file differs from the pattern named by the representation".into(),
                ))
            }
            Some(_) => {}
            None => pattern = Some(r.pattern().base().clone()),
        }
    }
    let lists = match (paths.lists, k) {
        (Some(p), Some(k)) => Some(formats::parse_lists(
            &p.display().to_string(),
            &read(p)?,
            graph.n(),
            k,
        )?),
        (None, Some(k)) => Some(ColorLists::uniform(graph.n(), k)),
        (Some(_), None) => return Err(CliError::Usage("lists need a palette size".into())),
        (None, None) => None,
    };
    Ok(Instance {
        graph,
        pattern,
        representation,
        lists,
    })
}

fn join(vs: &[Vertex]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl Cli {
    fn decomposition_config(&self) -> DecompositionConfig {
        DecompositionConfig {
            approx_factor: self.approx_factor,
            ..DecompositionConfig::default()
        }
    }

    fn oracle_config(&self) -> OracleConfig {
        OracleConfig {
            clique_limit: self.oracle_limit,
            coloring_limit: self.oracle_limit,
        }
    }
}

/// Picks the clique strategy for `auto` mode.
pub fn choose_strategy(inst: &Instance, cli: &Cli) -> StrategyChoice {
    let choice = |strategy, reason: &str| StrategyChoice {
        strategy,
        reason: reason.to_string(),
    };
    if let Some(r) = &inst.representation {
        if is_cactus(r.pattern().base()) {
            return choice(Strategy::Cactus, "representation on a cactus pattern");
        }
    }
    if inst.pattern.is_some() {
        return choice(Strategy::Helly, "pattern given");
    }
    let g = &inst.graph;
    if g.n() > cli.oracle_limit {
        return choice(Strategy::Treewidth, "graph too large for brute force");
    }
    let width = heuristic_decomposition(g, &cli.decomposition_config()).width();
    if width + 1 < g.n() {
        choice(Strategy::Treewidth, "decomposition splits the graph")
    } else {
        choice(Strategy::Brute, "decomposition is a single bag")
    }
}

fn run_clique(cli: &Cli, inst: &Instance, mode: Mode, out: &mut impl Write) -> CliResult<Status> {
    let mut pick = match mode {
        Mode::Auto => choose_strategy(inst, cli),
        Mode::Helly => StrategyChoice {
            strategy: Strategy::Helly,
            reason: "requested".into(),
        },
        Mode::Cactus => StrategyChoice {
            strategy: Strategy::Cactus,
            reason: "requested".into(),
        },
        Mode::Treewidth => StrategyChoice {
            strategy: Strategy::Treewidth,
            reason: "requested".into(),
        },
        Mode::Brute => StrategyChoice {
            strategy: Strategy::Brute,
            reason: "requested".into(),
        },
    };
    let g = &inst.graph;
    let clique = loop {
        match pick.strategy {
            Strategy::Cactus => {
                let r = inst
                    .representation
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("cactus mode needs --rep".into()))?;
                break clique_cactus(g, r)?;
            }
            Strategy::Helly => {
                let h = inst
                    .pattern
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("helly mode needs --pattern or --rep".into()))?;
                match clique_helly(g, h) {
                    HellyCliqueResult::MaxClique(c) => break c,
                    HellyCliqueResult::NotHellyCertificate(found) if mode == Mode::Auto => {
                        io(
                            out,
                            &format!("note: {found} maximal cliques exceed the Helly bound, falling back\n"),
                        )?;
                        pick = StrategyChoice {
                            strategy: Strategy::Treewidth,
                            reason: "no Helly representation on the pattern".into(),
                        };
                    }
                    HellyCliqueResult::NotHellyCertificate(found) => {
                        io(
                            out,
                            &format!("not helly: more than the bound with {found} maximal cliques found\n"),
                        )?;
                        return Ok(Status::LimitExceeded);
                    }
                }
            }
            Strategy::Treewidth => {
                let d = heuristic_decomposition(g, &cli.decomposition_config());
                break max_clique_in_bags(g, &d)?;
            }
            Strategy::Brute => break max_clique_bruteforce(g, &cli.oracle_config())?,
        }
    };
    io(
        out,
        &format!(
            "strategy: {} ({})\nsize: {}\nclique: {}\n",
            pick.strategy.name(),
            pick.reason,
            clique.len(),
            join(&clique)
        ),
    )?;
    Ok(Status::Yes)
}

fn emit(out: &mut impl Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => write_file(p, text),
        None => io(out, text),
    }
}

/// Runs the parsed command line, writing human-readable results to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> CliResult<Status> {
    match &cli.command {
        Command::Clique {
            graph,
            pattern,
            rep,
            mode,
        } => {
            let inst = parse_instance(
                &InstancePaths {
                    graph: Some(graph),
                    pattern: pattern.as_deref(),
                    rep: rep.as_deref(),
                    lists: None,
                },
                None,
            )?;
            run_clique(cli, &inst, *mode, out)
        }
        Command::Color {
            graph,
            k,
            lists,
            td,
        } => {
            let inst = parse_instance(
                &InstancePaths {
                    graph: Some(graph),
                    lists: lists.as_deref(),
                    ..Default::default()
                },
                Some(*k),
            )?;
            let lists = inst.lists.expect("palette given");
            let coloring = match td {
                Some(p) => {
                    let d = formats::parse_td(&p.display().to_string(), &read(p)?)?;
                    list_k_coloring(&inst.graph, &lists, *k, &d)?
                }
                None => solve_list_coloring(&inst.graph, &lists, *k, &cli.decomposition_config())?,
            };
            match coloring {
                Some(c) => {
                    let text: Vec<String> = c.iter().map(u32::to_string).collect();
                    io(out, &format!("coloring: {}\n", text.join(" ")))?;
                    Ok(Status::Yes)
                }
                None => {
                    io(out, "UNSAT\n")?;
                    Ok(Status::No)
                }
            }
        }
        Command::GenHard {
            graph,
            pattern,
            out: dir,
            random,
        } => {
            let g = match (graph, random) {
                (Some(p), None) => load_graph(p)?,
                (None, Some(n)) => random_graph(*n, 0.5, &mut ChaCha8Rng::seed_from_u64(cli.seed)),
                _ => {
                    return Err(CliError::Usage(
                        "give either a graph file or --random".into(),
                    ))
                }
            };
            let h = load_pattern(pattern)?;
            let part = find_tripartition(&h, TRIPARTITION_LIMIT)?.ok_or_else(|| {
                CliError::Usage("pattern has no split into three connected parts with two edges between each pair".into())
            })?;
            let inst = generate_hard_instance(&g, &h, &part)?;
            fs::create_dir_all(dir).map_err(|source| CliError::Io {
                path: dir.clone(),
                source,
            })?;
            write_file(&dir.join("target.gr"), &formats::emit_gr(&inst.target))?;
            write_file(&dir.join("pattern.hgr"), &formats::emit_hgr(&h))?;
            write_file(
                &dir.join("instance.rep"),
                &formats::emit_rep(&inst.representation, "pattern.hgr"),
            )?;
            let profile = PatternProfile::new(&h)?;
            let td = td_from_representation(&inst.target, &inst.representation, &profile)?;
            write_file(
                &dir.join("target.td"),
                &formats::emit_td(&td, inst.target.n()),
            )?;
            io(
                out,
                &format!(
                    "target: {} vertices, {} edges\ndecomposition width: {}\n",
                    inst.target.n(),
                    inst.target.m(),
                    td.width()
                ),
            )?;
            Ok(Status::Yes)
        }
        Command::Verify { graph, rep } => {
            let g = load_graph(graph)?;
            let r = load_representation(rep)?;
            match verify_representation(&g, &r)? {
                Verdict::Ok => {
                    io(out, "ok\n")?;
                    Ok(Status::Yes)
                }
                bad => {
                    io(out, &format!("{bad}\n"))?;
                    Ok(Status::No)
                }
            }
        }
        Command::Helly { rep } => {
            let r = load_representation(rep)?;
            match helly_check(&r, cli.cap) {
                HellyReport::Helly => {
                    io(out, "helly\n")?;
                    Ok(Status::Yes)
                }
                HellyReport::Violation(vs) => {
                    io(out, &format!("violation: {}\n", join(&vs)))?;
                    Ok(Status::No)
                }
                HellyReport::Exceeded(cap) => {
                    io(out, &format!("more than {cap} maximal cliques\n"))?;
                    Ok(Status::LimitExceeded)
                }
            }
        }
        Command::Atoms { graph } => {
            let g = load_graph(graph)?;
            let d = clique_cutset_decomposition(&g);
            let mut text = String::new();
            for a in &d.atoms {
                text.push_str(&format!("atom: {}\n", join(a)));
            }
            io(out, &text)?;
            Ok(Status::Yes)
        }
        Command::Td {
            graph,
            width,
            out: path,
        } => {
            let g = load_graph(graph)?;
            let t = width.unwrap_or(g.n());
            match tree_decomposition(&g, t, &cli.decomposition_config()) {
                DecompositionAttempt::Found { decomposition, .. } => {
                    emit(
                        out,
                        path.as_deref(),
                        &formats::emit_td(&decomposition, g.n()),
                    )?;
                    Ok(Status::Yes)
                }
                DecompositionAttempt::WidthExceeded { lower_bound } => {
                    io(out, &format!("treewidth is at least {lower_bound}\n"))?;
                    Ok(Status::No)
                }
            }
        }
        Command::Subdivide { graph, out: path } => {
            let g = load_graph(graph)?;
            emit(
                out,
                path.as_deref(),
                &formats::emit_gr(&two_subdivision(&g).result),
            )?;
            Ok(Status::Yes)
        }
        Command::Complement { graph, out: path } => {
            let g = load_graph(graph)?;
            emit(out, path.as_deref(), &formats::emit_gr(&complement(&g)))?;
            Ok(Status::Yes)
        }
    }
}
