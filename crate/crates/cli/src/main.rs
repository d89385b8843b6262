//! Command-line interface for strong hypergraph coloring.
//!
//! Exit codes are a stable contract:
//!   0 success, 1 I/O or parse or parameter error, 2 algorithm precondition
//!   violated, 3 internal verification failure, 4 invalid coloring,
//!   5 search budget exhausted.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use strongcolor_core::gen::BranchTarget;
use strongcolor_core::{
    find_branch_witness, lemma_coloring, oracle_min_colors, parse_coloring, parse_hypergraph,
    serialize_coloring, serialize_hypergraph, theorem_coloring, verify_strong, ColoringReport,
    GenError, GeneratorSpec, Hypergraph, LemmaError, OracleConfig, OracleError, RunTrace,
    TheoremError, TrivialKind,
};

/// Environment variable overriding the oracle's search-node budget.
const ORACLE_BUDGET_ENV: &str = "STRONGCOLOR_ORACLE_BUDGET";

const EXIT_IO: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_INVALID_COLORING: u8 = 4;
const EXIT_BUDGET: u8 = 5;

#[derive(Parser)]
#[command(
    name = "strongcolor",
    version,
    about = "Strong colorings of intersecting hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a hypergraph file; the coloring goes to stdout, a summary to stderr
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Theorem)]
        algorithm: Algorithm,
        /// Strength for the recursive algorithm (required with --algorithm lemma)
        #[arg(long, required_if_eq("algorithm", "lemma"))]
        t: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify that a coloring file is c-strong for a hypergraph file
    Check {
        hypergraph: PathBuf,
        coloring: PathBuf,
        #[arg(long, default_value_t = 3)]
        strength: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact minimum number of colors, by exhaustive search
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        strength: u32,
        #[arg(long, default_value_t = 6)]
        max_colors: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a named or seeded random instance
    Gen {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Search for an instance driving a chosen pipeline branch
    Witness {
        /// 1, 2, 3, 4, case3-swap or size2-minimal
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 5000)]
        budget: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Theorem,
    Lemma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// All k-subsets of {1..n}
    CompleteUniform {
        n: u32,
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Common core plus pairwise-disjoint petals
    Sunflower {
        core_size: u32,
        petals: u32,
        petal_size: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Complete graph on k+1 vertices, every edge extended by vertex 0
    ApexClique {
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded rejection sampling of a 2-intersecting family
    #[command(name = "random-2-intersecting")]
    Random2Intersecting {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        min_size: u32,
        #[arg(long)]
        max_size: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded rejection sampling of an intersecting family without singletons
    RandomIntersecting {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        min_size: u32,
        #[arg(long)]
        max_size: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl std::fmt::Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.exit_code() == 0 => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_IO);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Color {
            file,
            algorithm,
            t,
            format,
        } => color(&file, algorithm, t, format),
        Command::Check {
            hypergraph,
            coloring,
            strength,
            format,
        } => check(&hypergraph, &coloring, strength, format),
        Command::Oracle {
            file,
            strength,
            max_colors,
            format,
        } => oracle(&file, strength, max_colors, format),
        Command::Gen { family } => gen(family),
        Command::Witness {
            target,
            budget,
            seed,
            out,
        } => witness(&target, budget, seed, out.as_deref()),
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))?;
    parse_hypergraph(&text).map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))
}

fn color(path: &Path, algorithm: Algorithm, t: Option<u32>, format: Format) -> Result<(), Failure> {
    let h = read_hypergraph(path)?;
    let (name, coloring, report) = match algorithm {
        Algorithm::Theorem => {
            let (coloring, report) = theorem_coloring(&h).map_err(|e| match e {
                TheoremError::NotTwoIntersecting { .. } => fail(EXIT_PRECONDITION, e),
                _ => fail(EXIT_INTERNAL, e),
            })?;
            ("theorem", coloring, report)
        }
        Algorithm::Lemma => {
            let t = t.expect("clap enforces --t with --algorithm lemma");
            let coloring = lemma_coloring(&h, t).map_err(|e| match e {
                LemmaError::VerificationFailed { .. } => fail(EXIT_INTERNAL, e),
                _ => fail(EXIT_PRECONDITION, e),
            })?;
            let mut report =
                verify_strong(&h, &coloring, t).expect("algorithm colorings are total");
            report.trace = Some(RunTrace::lemma());
            ("lemma", coloring, report)
        }
    };

    match format {
        Format::Text => {
            print_report_summary(&report);
            print!("{}", serialize_coloring(&coloring));
        }
        Format::Json => {
            let doc = json!({
                "kind": "coloring",
                "algorithm": name,
                "coloring": coloring,
                "report": report,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(())
}

fn print_report_summary(report: &ColoringReport) {
    eprintln!("valid: {}", report.valid);
    eprintln!("strength: {}", report.strength);
    eprintln!("colors_used: {}", report.colors_used);
    if let Some(trace) = &report.trace {
        let mut line = format!("path: {:?}", trace.path).to_lowercase();
        if let Some(kind) = trace.trivial_kind {
            let name = match kind {
                TrivialKind::EmptyFamily => "empty-family",
                TrivialKind::SingleEdge => "single-edge",
                TrivialKind::TwoVertexMinimal => "two-vertex-minimal",
            };
            line.push_str(&format!(" ({name})"));
        }
        if let Some(case) = trace.case_id {
            line.push_str(&format!(" case {case}"));
        }
        if trace.swapped {
            line.push_str(" (swapped)");
        }
        eprintln!("{line}");
    }
}

fn check(
    hypergraph: &Path,
    coloring_path: &Path,
    strength: u32,
    format: Format,
) -> Result<(), Failure> {
    let h = read_hypergraph(hypergraph)?;
    let text = std::fs::read_to_string(coloring_path)
        .map_err(|e| fail(EXIT_IO, format!("{}: {e}", coloring_path.display())))?;
    let coloring = parse_coloring(&text)
        .map_err(|e| fail(EXIT_IO, format!("{}: {e}", coloring_path.display())))?;

    let report = verify_strong(&h, &coloring, strength).map_err(|e| fail(EXIT_IO, e))?;

    match format {
        Format::Text => {
            println!("valid: {}", report.valid);
            println!("colors_used: {}", report.colors_used);
            for f in &report.failing_edges {
                let edge: Vec<String> = f.edge.iter().map(|v| v.to_string()).collect();
                println!(
                    "failing edge: {} ({} distinct colors)",
                    edge.join(" "),
                    f.distinct_colors
                );
            }
        }
        Format::Json => {
            let doc = json!({ "kind": "check", "report": report });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }

    if report.valid {
        Ok(())
    } else {
        Err(fail(
            EXIT_INVALID_COLORING,
            format!(
                "coloring is not {strength}-strong: {} failing edge(s)",
                report.failing_edges.len()
            ),
        ))
    }
}

fn oracle_config() -> Result<OracleConfig, Failure> {
    let mut config = OracleConfig::default();
    if let Ok(raw) = std::env::var(ORACLE_BUDGET_ENV) {
        config.node_budget = raw.parse().map_err(|_| {
            fail(
                EXIT_IO,
                format!("{ORACLE_BUDGET_ENV} must be an integer, got {raw:?}"),
            )
        })?;
    }
    Ok(config)
}

fn oracle(path: &Path, strength: u32, max_colors: u32, format: Format) -> Result<(), Failure> {
    let h = read_hypergraph(path)?;
    let config = oracle_config()?;
    let result = oracle_min_colors(&h, strength, max_colors, &config).map_err(|e| match e {
        OracleError::BudgetExhausted { .. } => fail(EXIT_BUDGET, e),
        _ => fail(EXIT_IO, e),
    })?;

    match format {
        Format::Text => {
            match result.min_colors {
                Some(k) => println!("min_colors: {k}"),
                None => println!("min_colors: none (<= {max_colors})"),
            }
            println!("explored: {}", result.explored);
            if let Some(witness) = &result.witness {
                println!("witness:");
                print!("{}", serialize_coloring(witness));
            }
        }
        Format::Json => {
            let doc = json!({
                "kind": "oracle",
                "strength": result.strength,
                "max_colors": max_colors,
                "min_colors": result.min_colors,
                "witness": result.witness,
                "explored": result.explored,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(())
}

fn gen(family: FamilyCommand) -> Result<(), Failure> {
    let (spec, out) = match family {
        FamilyCommand::CompleteUniform { n, k, out } => {
            (GeneratorSpec::CompleteUniform { n, k }, out)
        }
        FamilyCommand::Sunflower {
            core_size,
            petals,
            petal_size,
            out,
        } => (
            GeneratorSpec::Sunflower {
                core_size,
                petals,
                petal_size,
            },
            out,
        ),
        FamilyCommand::ApexClique { k, out } => (GeneratorSpec::ApexClique { k }, out),
        FamilyCommand::Random2Intersecting {
            n,
            m,
            min_size,
            max_size,
            seed,
            out,
        } => (
            GeneratorSpec::Random2Intersecting {
                n,
                m,
                min_size,
                max_size,
                seed,
            },
            out,
        ),
        FamilyCommand::RandomIntersecting {
            n,
            m,
            min_size,
            max_size,
            seed,
            out,
        } => (
            GeneratorSpec::RandomIntersecting {
                n,
                m,
                min_size,
                max_size,
                seed,
            },
            out,
        ),
    };

    let h = spec.generate().map_err(|e| match e {
        GenError::AttemptsExhausted { .. } => fail(EXIT_BUDGET, e),
        GenError::InvalidParameter(_) => fail(EXIT_IO, e),
    })?;

    let mut content = String::new();
    if matches!(
        spec,
        GeneratorSpec::Random2Intersecting { .. } | GeneratorSpec::RandomIntersecting { .. }
    ) {
        content.push_str(&format!("# {}\n", spec.describe()));
    }
    content.push_str(&serialize_hypergraph(&h));
    write_output(out.as_deref(), &content)?;

    eprintln!(
        "{}: {} vertices, {} edges; 2-intersecting: {}, intersecting: {}",
        spec.describe(),
        h.vertex_count(),
        h.edge_count(),
        h.is_t_intersecting(2),
        h.is_t_intersecting(1),
    );
    Ok(())
}

fn witness(target: &str, budget: u32, seed: u64, out: Option<&Path>) -> Result<(), Failure> {
    let target: BranchTarget = target.parse().map_err(|e| fail(EXIT_IO, e))?;
    match find_branch_witness(target, budget, seed) {
        Some(h) => {
            let content = serialize_hypergraph(&h);
            write_output(out, &content)?;
            eprintln!(
                "witness for {target:?}: {} vertices, {} edges",
                h.vertex_count(),
                h.edge_count()
            );
            Ok(())
        }
        None => Err(fail(
            EXIT_BUDGET,
            format!("no witness for {target:?} within {budget} attempts"),
        )),
    }
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
