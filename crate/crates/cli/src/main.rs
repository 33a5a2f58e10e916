use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use seqembed::embed::{embed_in_dimension, embed_in_plane, sequential_planar_embed};
use seqembed::graph::{chromatic_number, format_edge_list, k_coloring, parse_edge_list, Coloring};
use seqembed::hyper::{
    build_zk, format_geometric, parse_abstract, parse_geometric,
    realizability_obstruction_3uniform, sharp_construction, strong_chromatic_number,
    validate_segment_hypergraph, weak_chromatic_number, Hypergraph, SegmentHypergraph,
};
use seqembed::lattice::{format_placement, parse_placement, verify_embedding, Checks};
use seqembed::{random, Error, Graph, Placement, Result};

mod render;

#[derive(Parser)]
#[command(name = "seqembed", version, about = "Sequential lattice embeddings of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Sequential embedding in the plane (needs a 4-coloring).
    Plane,
    /// Sequential planar embedding of a planar graph.
    Planar,
    /// Sequential embedding in dimension `--d` (needs a 2^d-coloring).
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedFormat {
    Tsv,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Kv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    FourPartite,
    MaximalPlanar,
    Planar,
    Segment,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a graph given as an edge list.
    Embed {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "plane")]
        mode: Mode,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Re-run the verifier and exit 1 on any violation.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "tsv")]
        format: EmbedFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a placement of a graph.
    Verify {
        graph: PathBuf,
        placement: PathBuf,
        /// Comma-separated subset of sequential, planar, line; or `all`.
        #[arg(long, default_value = "all")]
        checks: Checks,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print the chromatic number and an optimal coloring, or a `--k`-coloring.
    Color {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Segment hypergraph tools.
    Hyper {
        #[command(subcommand)]
        command: HyperCommand,
    },
    /// Render a two-dimensional placement as SVG.
    Render {
        placement: PathBuf,
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generate seeded test inputs.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long, default_value_t = 10)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability (four-partite) or keep probability (planar).
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Uniformity for segment hypergraphs.
        #[arg(long, default_value_t = 3)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum HyperCommand {
    /// Check a geometric hypergraph file; exit 1 if invalid.
    Validate { file: Option<PathBuf> },
    /// Print the lines of size k in Z_k x Z_k, one edge per line.
    Zk {
        #[arg(long)]
        k: u64,
    },
    /// Print the construction with strong chromatic number r^2.
    Sharp {
        #[arg(long)]
        r: usize,
    },
    /// Print strong and weak chromatic numbers.
    Chroma {
        file: Option<PathBuf>,
        /// Read whitespace-separated vertex ids instead of points.
        #[arg(long = "abstract")]
        abstract_format: bool,
    },
    /// Test the 3-uniform realizability obstruction on an abstract file.
    Obstruct { file: Option<PathBuf> },
}

fn read_input(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = fs::read_to_string(p)
                .map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::InvalidArgument(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&read_input(Some(path))?)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn format_coloring(c: &Coloring) -> String {
    c.assignment()
        .iter()
        .map(|(v, k)| format!("{v} {k}\n"))
        .collect()
}

/// Exit status besides errors: 0 or 1.
type Outcome = Result<u8>;

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Embed {
            graph,
            mode,
            d,
            verify,
            format,
            output,
        } => {
            let g = read_graph(&graph)?;
            let (placement, checks): (Placement<BigInt>, Checks) = match mode {
                Mode::Plane => (embed_in_plane(&g)?, Checks::SEQUENTIAL.union(Checks::ONE_EDGE_PER_LINE)),
                Mode::Planar => (sequential_planar_embed(&g)?, Checks::ALL),
                Mode::D if d == 2 => (
                    embed_in_dimension(&g, 2)?,
                    Checks::SEQUENTIAL.union(Checks::ONE_EDGE_PER_LINE),
                ),
                Mode::D => (embed_in_dimension(&g, d)?, Checks::SEQUENTIAL),
            };
            let text = match format {
                EmbedFormat::Tsv => format_placement(&placement),
                EmbedFormat::Svg => render::render_svg(&g, &placement)?,
            };
            write_output(output.as_deref(), &text)?;
            if verify {
                let report = verify_embedding(&g, &placement, checks)?;
                if !report.passed() {
                    eprint!("{}", report.to_text());
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Verify {
            graph,
            placement,
            checks,
            format,
        } => {
            let g = read_graph(&graph)?;
            let p: Placement<BigInt> = parse_placement(&read_input(Some(&placement))?)?;
            let report = verify_embedding(&g, &p, checks)?;
            match format {
                ReportFormat::Text => print!("{}", report.to_text()),
                ReportFormat::Kv => print!("{}", report.to_key_value()),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Color { graph, k } => {
            let g = read_graph(&graph)?;
            let k = k.unwrap_or_else(|| chromatic_number(&g));
            let c = k_coloring(&g, k).ok_or(Error::Uncolorable { colors: k })?;
            println!("# colors {k}");
            print!("{}", format_coloring(&c));
            Ok(0)
        }
        Command::Hyper { command } => run_hyper(command),
        Command::Render {
            placement,
            graph,
            output,
        } => {
            let g = read_graph(&graph)?;
            let p: Placement<BigInt> = parse_placement(&read_input(Some(&placement))?)?;
            write_output(output.as_deref(), &render::render_svg(&g, &p)?)?;
            Ok(0)
        }
        Command::Gen { kind, n, seed, p, r } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let text = match kind {
                GenKind::FourPartite => format_edge_list(&random::four_partite(&mut rng, n, p).0),
                GenKind::MaximalPlanar => {
                    if n < 3 {
                        return Err(Error::InvalidArgument("maximal-planar needs --n >= 3".into()));
                    }
                    format_edge_list(&random::maximal_planar(&mut rng, n))
                }
                GenKind::Planar => format_edge_list(&random::planar(&mut rng, n, p)),
                GenKind::Segment => {
                    if r < 2 {
                        return Err(Error::InvalidArgument("segment needs --r >= 2".into()));
                    }
                    let h: SegmentHypergraph<BigInt> =
                        random::segment_hypergraph(&mut rng, r, n as usize, 4);
                    format_geometric(&h)
                }
            };
            print!("{text}");
            Ok(0)
        }
    }
}

fn run_hyper(command: HyperCommand) -> Outcome {
    match command {
        HyperCommand::Validate { file } => {
            let h: SegmentHypergraph<BigInt> = parse_geometric(&read_input(file.as_deref())?)?;
            let report = validate_segment_hypergraph(&h);
            if report.is_valid() {
                println!("valid r={} edges={}", h.r, h.edges.len());
                return Ok(0);
            }
            println!("invalid");
            for v in &report.violations {
                println!("violation {v}");
            }
            Ok(1)
        }
        HyperCommand::Zk { k } => {
            let z = build_zk(k)?;
            for e in &z.edges {
                let pts: Vec<String> = e.iter().map(|(x, y)| format!("{x},{y}")).collect();
                println!("{}", pts.join(" "));
            }
            Ok(0)
        }
        HyperCommand::Sharp { r } => {
            let h: SegmentHypergraph<BigInt> = sharp_construction(r)?;
            print!("{}", format_geometric(&h));
            Ok(0)
        }
        HyperCommand::Chroma {
            file,
            abstract_format,
        } => {
            let text = read_input(file.as_deref())?;
            let h: Hypergraph = if abstract_format {
                parse_abstract(&text)?
            } else {
                let h: SegmentHypergraph<BigInt> = parse_geometric(&text)?;
                h.to_abstract().0
            };
            println!("chi_s={}", strong_chromatic_number(&h));
            println!("chi_w={}", weak_chromatic_number(&h)?);
            Ok(0)
        }
        HyperCommand::Obstruct { file } => {
            let h = parse_abstract(&read_input(file.as_deref())?)?;
            println!("{}", realizability_obstruction_3uniform(&h)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
