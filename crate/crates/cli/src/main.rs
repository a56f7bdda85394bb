use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cbnet_core::accessibility::{analyze_structure, CoreConfig, StructureAnalysis};
use cbnet_core::bounds::diameter_bound;
use cbnet_core::constructions::{
    construct_mka, construct_mpc, mstar, oracle_min_pclan, OracleCache, ORACLE_MAX_ORDER,
};
use cbnet_core::graph::{accessibility_profile, condense, diameter, is_acyclic, tarjan_scc};
use cbnet_core::io::{
    export_dot, generate, graph_section, ids, parse_edge_list_with, parse_payment_paths,
    parse_vertex_table, profile_section, removal_section, structure_section, to_edge_list,
    to_vertex_table, vertex_rows, GeneratorConfig, Report,
};
use cbnet_core::reduction::{check_removal, greedy_max_removal};
use cbnet_core::{Digraph, Error, Result, VertexSet};

#[derive(Parser)]
#[command(name = "cbnet", version, about = "Connectivity analysis of correspondent-banking networks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Input {
    /// Edge list (`src,dst`) or payment paths (`sender,receiver,b1|b2|...`).
    file: PathBuf,
    /// Vertex table (`id,kind,parent_id`) for an edge list.
    #[arg(long)]
    vertices: Option<PathBuf>,
}

#[derive(Args)]
struct CoreArgs {
    /// Minimum size of the accessibility core.
    #[arg(long)]
    min_core_size: Option<usize>,
    /// Plateau width as a fraction of the bank count.
    #[arg(long)]
    plateau_tol: Option<f64>,
}

impl CoreArgs {
    fn config(&self) -> CoreConfig {
        CoreConfig { min_core_size: self.min_core_size, plateau_tolerance: self.plateau_tol }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: profile, k, GSCC, roles, bounds and m*.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        core: CoreArgs,
    },
    /// Per-vertex accessibility and eccentricity.
    Accessibility {
        #[command(flatten)]
        input: Input,
    },
    /// Strongly connected components and the condensation.
    Scc {
        #[command(flatten)]
        input: Input,
    },
    /// Diameter bounds for a strongly connected digraph.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// Diameter used for the circumference interval.
        #[arg(long)]
        p: Option<usize>,
    },
    /// Claimed minimum edge count of a p-Clan digraph.
    Mstar {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Compare with the exhaustive oracle (N <= 6).
        #[arg(long)]
        oracle: bool,
    },
    /// Build and certify a minimal digraph.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Exhaustive minimum edge count of a p-Clan digraph (N <= 6).
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        /// Cache file with `N p min_m` lines, read and updated.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Synthetic network with planted structure.
    Generate(GenerateArgs),
    /// What-if removal of GSCC banks.
    Reduce {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        core: CoreArgs,
        /// Comma separated ids to remove.
        #[arg(long, value_delimiter = ',', conflicts_with = "greedy")]
        remove: Vec<String>,
        /// Greedily remove as many banks as possible.
        #[arg(long)]
        greedy: bool,
        /// `id,cost` lines ranking greedy candidates.
        #[arg(long, requires = "greedy")]
        costs: Option<PathBuf>,
    },
    /// Graphviz rendering.
    ExportDot {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        core: CoreArgs,
        /// Fill the detected GSCC.
        #[arg(long)]
        highlight_gscc: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Minimal k-accessible digraph.
    Mka {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Write the edge list here.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Minimal p-Clan digraph.
    Mpc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        edges: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 31)]
    parents: usize,
    #[arg(long, default_value_t = 2.0)]
    branch_mean: f64,
    #[arg(long, default_value_t = 2.5)]
    branch_exponent: f64,
    #[arg(long, default_value_t = 0.08)]
    core_density: f64,
    #[arg(long, default_value_t = 60)]
    sender_correspondents: usize,
    #[arg(long, default_value_t = 400)]
    receiver_correspondents: usize,
    #[arg(long, default_value_t = 0)]
    senders: usize,
    #[arg(long, default_value_t = 0)]
    receivers: usize,
    #[arg(long, default_value_t = 1.0)]
    attach_exponent: f64,
    /// Write the edge list here instead of stdout.
    #[arg(long)]
    out_edges: Option<PathBuf>,
    /// Write the vertex table here.
    #[arg(long)]
    out_vertices: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Payment files are recognised by three fields on the first data line.
fn looks_like_payments(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split(',').count() == 3)
}

fn load(input: &Input) -> Result<Digraph> {
    let text = read(&input.file)?;
    if looks_like_payments(&text) {
        if input.vertices.is_some() {
            return Err(Error::Precondition("--vertices applies to edge lists only".into()));
        }
        return parse_payment_paths(&text);
    }
    let meta = input.vertices.as_deref().map(read).transpose()?;
    let meta = meta.as_deref().map(parse_vertex_table).transpose()?;
    parse_edge_list_with(&text, meta.as_deref())
}

fn gscc_of(g: &Digraph, analysis: &StructureAnalysis) -> Result<VertexSet> {
    match &analysis.report {
        Some(r) if r.gscc.len() >= 2 => Ok(r.gscc.clone()),
        Some(_) => Err(Error::Precondition("no nontrivial GSCC among the core banks".into())),
        None => Err(Error::Precondition(format!(
            "bank subgraph of {} vertices is not k-accessible",
            g.bank_subgraph().graph.order()
        ))),
    }
}

fn analyze(g: &Digraph, core: &CoreArgs, report: &mut Report) -> Result<bool> {
    let analysis = analyze_structure(g, &core.config());
    report
        .section("graph", Some(graph_section(g)))
        .section("profile", Some(profile_section(&analysis.bank_profile)))
        .section("structure", Some(structure_section(g, &analysis)));
    if let Some(r) = analysis.report.as_ref().filter(|r| r.gscc.len() >= 2) {
        let sub = g.induced_subgraph(&r.gscc);
        report.section("bounds", Some(diameter_bound(&sub.graph, None)?));
        let n = sub.graph.order();
        if let (true, Some(d)) = (n >= 3, diameter(&sub.graph, None).finite()) {
            let p = d.clamp(1, n - 1);
            let mut m = mstar(n, p)?;
            if n <= ORACLE_MAX_ORDER {
                m = m.with_oracle(oracle_min_pclan(n, p)?.min_edges);
            }
            report.section("mstar", Some(json!({ "result": m, "gscc_edges": sub.graph.size() })));
        }
    }
    Ok(analysis.report.as_ref().is_some_and(|r| r.has_model_violation()))
}

fn parse_costs(g: &Digraph, text: &str) -> Result<BTreeMap<usize, f64>> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || (i == 0 && line.starts_with("id,")) {
            continue;
        }
        let parse_err = |m: &str| Error::Parse { line: i + 1, message: m.to_string() };
        let (id, cost) = line.split_once(',').ok_or_else(|| parse_err("expected `id,cost`"))?;
        let cost: f64 = cost.trim().parse().map_err(|_| parse_err("cost is not a number"))?;
        let v = g.index_of(id.trim()).ok_or_else(|| Error::UnknownVertex(id.trim().into()))?;
        out.insert(v, cost);
    }
    Ok(out)
}

/// Runs one command. Returns the text to print and whether a model
/// violation was found.
fn run(cli: &Cli) -> Result<(String, bool)> {
    let mut violation = false;
    let mut report = Report::new(match &cli.command {
        Command::Analyze { .. } => "analyze",
        Command::Accessibility { .. } => "accessibility",
        Command::Scc { .. } => "scc",
        Command::Bounds { .. } => "bounds",
        Command::Mstar { .. } => "mstar",
        Command::Construct { .. } => "construct",
        Command::Oracle { .. } => "oracle",
        Command::Generate(_) => "generate",
        Command::Reduce { .. } => "reduce",
        Command::ExportDot { .. } => "export-dot",
    });
    match &cli.command {
        Command::Analyze { input, core } => {
            let g = load(input)?;
            violation = analyze(&g, core, &mut report)?;
        }
        Command::Accessibility { input } => {
            let g = load(input)?;
            let profile = accessibility_profile(&g);
            report
                .section("profile", Some(profile_section(&profile)))
                .section("vertices", Some(vertex_rows(&g, &profile)));
        }
        Command::Scc { input } => {
            let g = load(input)?;
            let scc = tarjan_scc(&g);
            let dag = condense(&g, &scc)?;
            let comps: Vec<Vec<&str>> =
                scc.components.iter().map(|c| c.iter().map(|&v| g.id(v)).collect()).collect();
            report.section(
                "scc",
                Some(json!({
                    "count": comps.len(),
                    "nontrivial": scc.nontrivial().count(),
                    "largest": scc.sizes().into_iter().max().unwrap_or(0),
                    "components": comps,
                    "condensation_edges": dag.size(),
                    "condensation_acyclic": is_acyclic(&dag),
                })),
            );
        }
        Command::Bounds { input, p } => {
            let g = load(input)?;
            report.section("bounds", Some(diameter_bound(&g, *p)?));
        }
        Command::Mstar { n, p, oracle } => {
            let mut r = mstar(*n, *p)?;
            if *oracle {
                r = r.with_oracle(oracle_min_pclan(*n, *p)?.min_edges);
            }
            report.section("mstar", Some(r));
        }
        Command::Construct { family } => {
            let (c, edges) = match family {
                Family::Mka { n, k, edges } => (construct_mka(*n, *k)?, edges),
                Family::Mpc { n, p, edges } => (construct_mpc(*n, *p)?, edges),
            };
            if let Some(path) = edges {
                write(path, &to_edge_list(&c.graph))?;
            }
            report.section("construction", Some(&c));
        }
        Command::Oracle { n, p, cache } => {
            let min_edges = match cache {
                Some(path) => {
                    let mut c = OracleCache::load(path)?;
                    let m = c.lookup(*n, *p)?;
                    c.save(path)?;
                    m
                }
                None => oracle_min_pclan(*n, *p)?.min_edges,
            };
            report.section("oracle", Some(json!({ "n": n, "p": p, "min_edges": min_edges })));
        }
        Command::Generate(a) => {
            let config = GeneratorConfig {
                seed: a.seed,
                parents: a.parents,
                branch_mean: a.branch_mean,
                branch_exponent: a.branch_exponent,
                core_density: a.core_density,
                sender_correspondents: a.sender_correspondents,
                receiver_correspondents: a.receiver_correspondents,
                sender_count: a.senders,
                receiver_count: a.receivers,
                attach_exponent: a.attach_exponent,
            };
            let net = generate(&config)?;
            if let Some(path) = &a.out_vertices {
                write(path, &to_vertex_table(&net.graph))?;
            }
            let Some(path) = &a.out_edges else {
                return Ok((to_edge_list(&net.graph), false));
            };
            write(path, &to_edge_list(&net.graph))?;
            report.section("config", Some(&config)).section(
                "planted",
                Some(json!({
                    "order": net.graph.order(),
                    "size": net.graph.size(),
                    "parents": net.parents.len(),
                    "expected_gscc": net.expected_gscc.len(),
                    "planted_k": net.planted_k,
                })),
            );
        }
        Command::Reduce { input, core, remove, greedy, costs } => {
            let g = load(input)?;
            let analysis = analyze_structure(&g, &core.config());
            let gscc = gscc_of(&g, &analysis)?;
            let verdict = if *greedy {
                let costs = costs.as_deref().map(read).transpose()?;
                let costs = costs.map(|t| parse_costs(&g, &t)).transpose()?;
                greedy_max_removal(&g, &gscc, costs.as_ref())?.1
            } else {
                let candidates = remove
                    .iter()
                    .map(|id| g.index_of(id).ok_or_else(|| Error::UnknownVertex(id.clone())))
                    .collect::<Result<VertexSet>>()?;
                check_removal(&g, &gscc, &candidates)?
            };
            report.section("removal", Some(removal_section(&g, &verdict)));
            report.section("gscc", Some(ids(&g, &gscc)));
        }
        Command::ExportDot { input, core, highlight_gscc } => {
            let g = load(input)?;
            let highlight = if *highlight_gscc {
                analyze_structure(&g, &core.config()).report.map(|r| r.gscc)
            } else {
                None
            };
            return Ok((export_dot(&g, highlight.as_ref()), false));
        }
    }
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    Ok((text, violation))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, violation)) => {
            print!("{text}");
            if violation {
                eprintln!("model violation: see structure.violations / gscc_diagnostic");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
