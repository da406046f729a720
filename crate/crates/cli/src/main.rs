use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hspectrum::format::read_graph_file;
use hspectrum::pseudoordering::{extremal_number, isomorphic_via_h, spectrum};
use hspectrum::transform::{pathify, pathify_general};
use hspectrum::verify::{
    verify_closed_forms, verify_non_articulation, verify_spanning_tree_characterization,
    verify_upper_bound, HFamily, VerificationReport, VerifyOptions,
};
use hspectrum::{Error, ExtremalQuery, Graph, Method, Pseudoordering, Sense};

/// Pseudoordering spectra, extremal H-numbers and tree-to-path surgery for small graphs.
#[derive(Parser, Debug)]
#[command(name = "hspectrum", version)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every pseudoordering sum of H on G, with multiplicities
    Spectrum {
        /// H: a .g6 or .edges file, or `cycle` / `path`
        #[arg(long)]
        h: String,
        #[arg(long)]
        g: PathBuf,
    },
    /// Minimum or maximum pseudoordering sum
    Number {
        #[arg(long)]
        h: String,
        #[arg(long)]
        g: PathBuf,
        #[arg(long, value_enum)]
        sense: SenseArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Exhaustive)]
        method: MethodArg,
    },
    /// Turn a tree (or a connected graph, via a spanning tree) into a path
    /// without lowering the sum
    Transform {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        h: String,
        /// Image list: position x holds f(x). Defaults to the identity.
        #[arg(long, value_delimiter = ',')]
        f: Option<Vec<usize>>,
        /// Print every surgery step
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively check a claim over a small graph family
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        jobs: Option<usize>,
        /// Progress file; finished pairs are skipped on rerun
        #[arg(long)]
        resume: Option<PathBuf>,
        /// H family for `upper-bound`
        #[arg(long, value_enum, default_value_t = FamilyArg::Canonical)]
        family: FamilyArg,
    },
    /// Isomorphism test via the pseudoordering minimum
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SenseArg {
    Min,
    Max,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum MethodArg {
    Exhaustive,
    Bnb,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Claim {
    ClosedForms,
    UpperBound,
    SpanningTrees,
    Articulation,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FamilyArg {
    Canonical,
    All,
}

/// A file, or `cycle` / `path` sized to `n`.
fn resolve_h(src: &str, n: usize) -> Result<Graph, Error> {
    match src {
        "cycle" => Graph::cycle(n),
        "path" => Graph::path(n),
        _ => read_graph_file(Path::new(src)),
    }
}

fn join(p: &Pseudoordering) -> String {
    p.as_slice()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn edges_text(g: &Graph) -> String {
    g.edges()
        .iter()
        .map(|(a, b)| format!("{a}-{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn report(r: &VerificationReport, fmt: OutputFormat) -> (String, ExitCode) {
    let out = match fmt {
        OutputFormat::Text => r.to_text(),
        OutputFormat::Json => r.to_json() + "\n",
    };
    let code = if r.passed { ExitCode::SUCCESS } else { ExitCode::from(3) };
    (out, code)
}

fn run(cli: Cli) -> Result<(String, ExitCode), Error> {
    let fmt = cli.format;
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match cli.command {
        Command::Spectrum { h, g } => {
            let g = read_graph_file(&g)?;
            let h = resolve_h(&h, g.n())?;
            let r = spectrum(&h, &g)?;
            ok(match fmt {
                OutputFormat::Text => r.to_text(),
                OutputFormat::Json => r.to_json() + "\n",
            })
        }
        Command::Number { h, g, sense, method } => {
            let g = read_graph_file(&g)?;
            let h = resolve_h(&h, g.n())?;
            let sense = match sense {
                SenseArg::Min => Sense::Min,
                SenseArg::Max => Sense::Max,
            };
            let method = match method {
                MethodArg::Exhaustive => Method::Exhaustive,
                MethodArg::Bnb => Method::BranchAndBound,
            };
            let e = extremal_number(&h, &g, ExtremalQuery::new(sense, method))?;
            ok(match fmt {
                OutputFormat::Text => format!("{}\n", e.value),
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::json!({ "value": e.value, "witness": e.witness.as_slice() })
                ),
            })
        }
        Command::Transform { tree, h, f, trace } => {
            let t = read_graph_file(&tree)?;
            let h = resolve_h(&h, t.n())?;
            let f = match f {
                Some(map) => Pseudoordering::new(map)?,
                None => Pseudoordering::identity(t.n()),
            };
            let tr = if t.is_tree() { pathify(&t, &h, &f)? } else { pathify_general(&t, &h, &f)? };
            ok(match (fmt, trace) {
                (OutputFormat::Text, true) => tr.to_text(),
                (OutputFormat::Json, true) => tr.to_json() + "\n",
                (OutputFormat::Text, false) => format!(
                    "final: {}\nf: {}\ninitial_sum: {}\nfinal_sum: {}\nsteps: {}\n",
                    edges_text(&tr.final_graph),
                    join(&tr.f),
                    tr.initial_sum,
                    tr.final_sum,
                    tr.steps.len()
                ),
                (OutputFormat::Json, false) => format!(
                    "{}\n",
                    serde_json::json!({
                        "final": tr.final_graph,
                        "initial_sum": tr.initial_sum,
                        "final_sum": tr.final_sum,
                        "steps": tr.steps.len(),
                    })
                ),
            })
        }
        Command::Verify { claim, n, jobs, resume, family } => {
            let opts = VerifyOptions { jobs, progress: resume };
            let r = match claim {
                Claim::ClosedForms => verify_closed_forms(n)?,
                Claim::UpperBound => {
                    let family = match family {
                        FamilyArg::Canonical => HFamily::Canonical,
                        FamilyArg::All => HFamily::ConnectedAll,
                    };
                    verify_upper_bound(n, family, &opts)?
                }
                Claim::SpanningTrees => verify_spanning_tree_characterization(n, &opts)?,
                Claim::Articulation => verify_non_articulation(n, &opts)?,
            };
            Ok(report(&r, fmt))
        }
        Command::Iso { a, b } => {
            let (a, b) = (read_graph_file(&a)?, read_graph_file(&b)?);
            let same = a.n() == b.n() && a.edge_count() == b.edge_count() && isomorphic_via_h(&a, &b)?;
            ok(match fmt {
                OutputFormat::Text if same => "isomorphic\n".to_string(),
                OutputFormat::Text => "not isomorphic\n".to_string(),
                OutputFormat::Json => format!("{}\n", serde_json::json!({ "isomorphic": same })),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
