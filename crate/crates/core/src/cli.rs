//! Command-line front end: graph6 in, JSON out, human summaries on stderr.
//! Exit codes: 0 confirmed/ok, 1 counterexample or failed verification,
//! 2 usage or input error, 3 solver budget exceeded.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::coloring::{is_rainbow_connected, is_strongly_rainbow_connected, EdgeColoring};
use crate::constructions::{
    claim2_scheme_coloring, cycle_plus_fresh, triangle_packing_coloring, unicyclic_coloring,
    Claim2Variant, SchemeId,
};
use crate::graph::{emit_graph6, Graph};
use crate::harness::{
    self, budget_from_env, builtin_cubic_graphs, enumerate_connected_graphs, Campaign,
    CampaignParams, ValidationReport,
};
use crate::solver::{self, Mode, SolveOptions};
use crate::structure::{
    classify, d2_tree, gbar_triangle_count, lemma1_configuration, line_graph,
    max_edge_disjoint_triangles, star_cliques,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "srclab",
    version,
    about = "Strong rainbow connection numbers of small graphs: exact solving, \
             constructive colorings, classification, and validation campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// graph6 file, one graph per line ('#' comments allowed); stdin when
    /// omitted
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute exact connection numbers with certificate colorings
    Solve {
        /// src (strong rainbow) or rc (rainbow)
        #[arg(long, default_value = "src")]
        mode: ModeArg,
        #[command(flatten)]
        input: InputArg,
        /// Cap on examined colorings (default from SRC_LAB_BUDGET or built-in)
        #[arg(long)]
        budget: Option<u64>,
        /// Include the certificate coloring in the output
        #[arg(long)]
        emit_certificate: bool,
        /// Prune partial colorings whose settled pairs already fail
        #[arg(long)]
        prune: bool,
    },
    /// Verify a coloring file against a graph
    Verify {
        #[arg(long, default_value = "src")]
        mode: ModeArg,
        #[command(flatten)]
        input: InputArg,
        /// Whitespace-separated color labels, one per edge id
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Emit a constructive scheme coloring
    Color {
        /// cycle | cycle-plus-fresh | triangle-packing | unicyclic | one of
        /// the named scheme tags (2.1-long, 2.2.1, ..., thm2-claim3)
        #[arg(long)]
        scheme: String,
        #[command(flatten)]
        input: InputArg,
        /// Also write the coloring in text format to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report structural class labels and related data
    Classify {
        #[command(flatten)]
        input: InputArg,
    },
    /// Build the line graph and its star-clique decomposition
    Linegraph {
        #[command(flatten)]
        input: InputArg,
    },
    /// Stream one graph6 line per isomorphism class of connected graphs
    Enumerate {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 15)]
        m_max: usize,
    },
    /// Run a validation campaign and print its JSON report
    Validate {
        /// theorem1 | theorem2 | lemma1 | corollary1 | proposition13 |
        /// observation1
        campaign: String,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        /// Validate graphs from this graph6 file instead of enumerating
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also write a CSV summary to this file
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Process graphs one at a time instead of in parallel
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum ModeArg {
    Src,
    Rc,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Src => Mode::Src,
            ModeArg::Rc => Mode::Rc,
        }
    }
}

/// Entry point used by `main` and by tests; returns the process exit code.
pub fn run_cli<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    run_cli_io(args, &mut stdout, &mut stderr)
}

/// Like `run_cli` with explicit output streams.
pub fn run_cli_io<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage text
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    match command {
        Command::Solve {
            mode,
            input,
            budget,
            emit_certificate,
            prune,
        } => cmd_solve(mode.into(), &input, budget, emit_certificate, prune, stdout, stderr),
        Command::Verify {
            mode,
            input,
            coloring,
        } => cmd_verify(mode.into(), &input, &coloring, stdout, stderr),
        Command::Color { scheme, input, out } => cmd_color(&scheme, &input, out, stdout, stderr),
        Command::Classify { input } => cmd_classify(&input, stdout),
        Command::Linegraph { input } => cmd_linegraph(&input, stdout),
        Command::Enumerate { n_max, m_max } => cmd_enumerate(n_max, m_max, stdout, stderr),
        Command::Validate {
            campaign,
            n_max,
            m_max,
            budget,
            input,
            csv,
            sequential,
        } => cmd_validate(
            &campaign, n_max, m_max, budget, input, csv, sequential, stdout, stderr,
        ),
    }
}

fn read_input_graphs(input: &InputArg) -> Result<Vec<Graph>, String> {
    let text = match &input.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("reading {}: {e}", path.display()))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading stdin: {e}"))?;
            buf
        }
    };
    let graphs = harness::parse_graph6_lines(&text).map_err(|e| e.to_string())?;
    if graphs.is_empty() {
        return Err("no graphs in input".into());
    }
    Ok(graphs)
}

fn cmd_solve(
    mode: Mode,
    input: &InputArg,
    budget: Option<u64>,
    emit_certificate: bool,
    prune: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let graphs = read_input_graphs(input)?;
    let options = SolveOptions {
        budget: budget.unwrap_or_else(budget_from_env),
        partial_pruning: prune,
    };
    let mut exit = EXIT_OK;
    for g in &graphs {
        let graph6 = emit_graph6(g).map_err(|e| e.to_string())?;
        match solver::solve(g, mode, options) {
            Ok(res) => {
                let mut obj = json!({
                    "graph6": graph6,
                    "mode": mode.to_string(),
                    "value": res.value,
                    "examined": res.examined,
                    "ms": res.elapsed.as_millis() as u64,
                });
                if emit_certificate {
                    obj["certificate"] = json!(res.certificate.colors());
                }
                writeln!(stdout, "{obj}").map_err(|e| e.to_string())?;
                let _ = writeln!(stderr, "{graph6}: {mode} = {}", res.value);
            }
            Err(solver::SolverError::BudgetExceeded {
                examined,
                upper_bound,
                certificate,
            }) => {
                let mut obj = json!({
                    "graph6": graph6,
                    "mode": mode.to_string(),
                    "budget_exceeded": true,
                    "examined": examined,
                    "upper_bound": upper_bound,
                });
                if emit_certificate {
                    obj["certificate"] = json!(certificate);
                }
                writeln!(stdout, "{obj}").map_err(|e| e.to_string())?;
                let _ = writeln!(
                    stderr,
                    "{graph6}: budget exceeded, {mode} <= {upper_bound} (uncertified)"
                );
                exit = EXIT_BUDGET;
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(exit)
}

fn parse_coloring_file(path: &Path, expected: usize) -> Result<EdgeColoring, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    let colors: Result<Vec<u32>, _> = text.split_whitespace().map(str::parse).collect();
    let colors = colors.map_err(|e| format!("bad color label: {e}"))?;
    if colors.len() != expected {
        return Err(format!(
            "coloring has {} labels but the graph has {expected} edges",
            colors.len()
        ));
    }
    Ok(EdgeColoring::new(colors))
}

fn cmd_verify(
    mode: Mode,
    input: &InputArg,
    coloring: &Path,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let graphs = read_input_graphs(input)?;
    if graphs.len() != 1 {
        return Err("verify expects exactly one graph".into());
    }
    let g = &graphs[0];
    let c = parse_coloring_file(coloring, g.edge_count())?;
    let verdict = match mode {
        Mode::Src => is_strongly_rainbow_connected(g, &c),
        Mode::Rc => is_rainbow_connected(g, &c),
    }
    .map_err(|e| e.to_string())?;
    let graph6 = emit_graph6(g).map_err(|e| e.to_string())?;
    let obj = json!({
        "graph6": graph6,
        "mode": mode.to_string(),
        "colors": c.color_count(),
        "ok": verdict.ok,
        "witness": verdict.witness.map(|(u, v)| vec![u, v]),
    });
    writeln!(stdout, "{obj}").map_err(|e| e.to_string())?;
    let _ = writeln!(
        stderr,
        "{graph6}: {}",
        if verdict.ok { "ok" } else { "NOT ok" }
    );
    Ok(if verdict.ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn parse_scheme(tag: &str) -> Result<SchemeId, String> {
    Ok(match tag {
        "cycle" => SchemeId::CycleChartrand,
        "cycle-plus-fresh" => SchemeId::CyclePlusFresh,
        "triangle-packing" => SchemeId::TrianglePacking,
        "unicyclic" => SchemeId::UnicyclicK3, // dispatched on the actual cycle length
        other => SchemeId::Claim2Config(other.parse::<Claim2Variant>()?),
    })
}

fn cmd_color(
    scheme: &str,
    input: &InputArg,
    out: Option<PathBuf>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let graphs = read_input_graphs(input)?;
    if graphs.len() != 1 {
        return Err("color expects exactly one graph".into());
    }
    let g = &graphs[0];
    let scheme_id = parse_scheme(scheme)?;
    let coloring = match scheme_id {
        SchemeId::CycleChartrand | SchemeId::CyclePlusFresh => {
            cycle_plus_fresh(g).map_err(|e| e.to_string())?
        }
        SchemeId::TrianglePacking => {
            let packing = max_edge_disjoint_triangles(g, g.edge_count() <= 20);
            triangle_packing_coloring(g, &packing).map_err(|e| e.to_string())?
        }
        SchemeId::UnicyclicK3 | SchemeId::UnicyclicK4 | SchemeId::UnicyclicK5 => {
            unicyclic_coloring(g).map_err(|e| e.to_string())?
        }
        SchemeId::Claim2Config(variant) => {
            claim2_scheme_coloring(g, variant).map_err(|e| e.to_string())?
        }
    };
    let verdict = is_strongly_rainbow_connected(g, &coloring).map_err(|e| e.to_string())?;
    let graph6 = emit_graph6(g).map_err(|e| e.to_string())?;
    let text = coloring
        .colors()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    if let Some(path) = out {
        std::fs::write(&path, format!("{text}\n"))
            .map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    let obj = json!({
        "graph6": graph6,
        "scheme": scheme,
        "colors": coloring.colors(),
        "color_count": coloring.color_count(),
        "strongly_rainbow": verdict.ok,
    });
    writeln!(stdout, "{obj}").map_err(|e| e.to_string())?;
    let _ = writeln!(
        stderr,
        "{graph6}: {} colors, {}",
        coloring.color_count(),
        if verdict.ok { "ok" } else { "NOT ok" }
    );
    Ok(if verdict.ok { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

fn cmd_classify(input: &InputArg, stdout: &mut dyn Write) -> Result<i32, String> {
    let graphs = read_input_graphs(input)?;
    for g in &graphs {
        let graph6 = emit_graph6(g).map_err(|e| e.to_string())?;
        let labels = classify(g).map_err(|e| e.to_string())?;
        let packing = max_edge_disjoint_triangles(g, g.edge_count() <= 20);
        let mut obj = json!({
            "graph6": graph6,
            "labels": labels.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "girth": g.girth(),
            "t_max": packing.t(),
        });
        if let Ok(cfg) = lemma1_configuration(g) {
            obj["lemma1_pattern"] = json!(cfg.pattern.to_string());
        }
        if gbar_triangle_count(g).is_some_and(|t| t >= 1) {
            if let Ok(t) = d2_tree(g) {
                obj["d2_tree_graph6"] = json!(emit_graph6(&t).map_err(|e| e.to_string())?);
            }
        }
        writeln!(stdout, "{obj}").map_err(|e| e.to_string())?;
    }
    Ok(EXIT_OK)
}

fn cmd_linegraph(input: &InputArg, stdout: &mut dyn Write) -> Result<i32, String> {
    let graphs = read_input_graphs(input)?;
    for g in &graphs {
        let l = line_graph(g);
        let obj = json!({
            "graph6": emit_graph6(g).map_err(|e| e.to_string())?,
            "line_graph6": emit_graph6(&l).map_err(|e| e.to_string())?,
            "vertices": l.vertex_count(),
            "edges": l.edge_count(),
            "star_cliques": star_cliques(g),
        });
        writeln!(stdout, "{obj}").map_err(|e| e.to_string())?;
    }
    Ok(EXIT_OK)
}

fn cmd_enumerate(
    n_max: usize,
    m_max: usize,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let graphs = enumerate_connected_graphs(n_max, m_max).map_err(|e| e.to_string())?;
    for g in &graphs {
        writeln!(stdout, "{}", emit_graph6(g).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    }
    let _ = writeln!(
        stderr,
        "{} connected graphs with n <= {n_max}, m <= {m_max}",
        graphs.len()
    );
    Ok(EXIT_OK)
}

fn campaign_defaults(campaign: Campaign) -> (usize, usize) {
    match campaign {
        Campaign::Theorem1 | Campaign::Theorem2 => (7, 10),
        Campaign::Lemma1 => (7, 21),
        Campaign::Proposition13 => (6, 10),
        Campaign::Observation1 => (6, 10),
        Campaign::Corollary1 => (10, 30),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_validate(
    campaign: &str,
    n_max: Option<usize>,
    m_max: Option<usize>,
    budget: Option<u64>,
    input: Option<PathBuf>,
    csv: Option<PathBuf>,
    sequential: bool,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, String> {
    let campaign: Campaign = campaign.parse()?;
    let defaults = campaign_defaults(campaign);
    let mut params = CampaignParams::new(n_max.unwrap_or(defaults.0), m_max.unwrap_or(defaults.1));
    if let Some(b) = budget {
        params.budget = b;
    }
    if sequential {
        params.threading = crate::exec::Threading::Sequential;
    }
    let source = match &input {
        Some(path) => {
            let graphs = harness::load_graph6_file(path).map_err(|e| e.to_string())?;
            for (i, g) in graphs.iter().enumerate() {
                if !g.is_connected() {
                    return Err(format!("input graph {} is not connected", i + 1));
                }
            }
            Some(graphs)
        }
        None => None,
    };
    let report: ValidationReport = match campaign {
        Campaign::Theorem1 => match source {
            Some(graphs) => harness::validate_theorem1_on(graphs, params),
            None => harness::validate_theorem1(params).map_err(|e| e.to_string())?,
        },
        Campaign::Theorem2 => match source {
            Some(graphs) => harness::validate_theorem2_on(graphs, params),
            None => harness::validate_theorem2(params).map_err(|e| e.to_string())?,
        },
        Campaign::Lemma1 => match source {
            Some(graphs) => harness::validate_lemma1_on(graphs, params),
            None => harness::validate_lemma1(params).map_err(|e| e.to_string())?,
        },
        Campaign::Proposition13 => match source {
            Some(graphs) => harness::validate_proposition13_on(graphs, params),
            None => harness::validate_proposition13(params).map_err(|e| e.to_string())?,
        },
        Campaign::Observation1 => match source {
            Some(graphs) => harness::validate_observation1_on(graphs, params),
            None => harness::validate_observation1(params).map_err(|e| e.to_string())?,
        },
        Campaign::Corollary1 => {
            let graphs = source.unwrap_or_else(builtin_cubic_graphs);
            harness::validate_corollary1(graphs, params).map_err(|e| e.to_string())?
        }
    };
    writeln!(
        stdout,
        "{}",
        serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
    )
    .map_err(|e| e.to_string())?;
    if let Some(path) = csv {
        let file = std::fs::File::create(&path)
            .map_err(|e| format!("creating {}: {e}", path.display()))?;
        report
            .write_csv(std::io::BufWriter::new(file))
            .map_err(|e| e.to_string())?;
    }
    let s = &report.summary;
    let _ = writeln!(
        stderr,
        "{campaign}: {} graphs, {} confirmed, {} counterexamples, {} skipped ({} ms)",
        s.graphs, s.confirmed, s.counterexamples, s.budget_exceeded,
        report.environment.elapsed_ms
    );
    Ok(if s.counterexamples > 0 {
        EXIT_COUNTEREXAMPLE
    } else if s.budget_exceeded > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    })
}
