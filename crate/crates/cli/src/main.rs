mod input;
mod report;
mod svg;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use symgame::cartography::{decompose, mc_region_fractions_parallel, trajectory};
use symgame::ordergraph::{build_order_graph, to_dot, DotOptions};
use symgame::taxonomy::{census, ClassId};
use symgame::{Error, PayoffMatrix};

use report::{DecompositionJson, DecompositionReport, FractionsReport, Report};

#[derive(Parser)]
#[command(name = "symgame", version, about = "Analyze 2x2 symmetric games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a game and print its full report.
    Classify {
        /// Matrix as "a,b;c,d", JSON {"payoff": [[a,b],[c,d]]}, or "-" for stdin.
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        json: bool,
    },
    /// Draw the unfolded map as SVG.
    Map {
        /// File with one matrix per line.
        #[arg(long)]
        points: Option<PathBuf>,
        /// Single game to mark; may be repeated.
        #[arg(long = "point", allow_hyphen_values = true)]
        point: Vec<String>,
        /// "a,b;c,d;e,f;g,h;n": start, end and sample count.
        #[arg(long, allow_hyphen_values = true)]
        trajectory: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo estimate of class and region fractions.
    Fractions {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Classify all 24 ordinal games and check the per-class triangle counts.
    Census {
        #[arg(long)]
        json: bool,
    },
    /// Emit the order graph in Graphviz DOT.
    Ordergraph {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        simplified: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a game over the canonical vertices of its region.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Contract(format!("cannot write output: {e}")))
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

fn cmd_classify(matrix: &str, json: bool) -> Result<(), Failure> {
    let game = input::parse_matrix_arg(matrix)?;
    let report = Report::build(&game);
    let text = if json { to_json(&report) } else { report.to_text() };
    emit(None, &text)
}

fn cmd_map(
    points: Option<&PathBuf>,
    point: &[String],
    spec: Option<&str>,
    out: Option<&PathBuf>,
) -> Result<(), Failure> {
    let mut overlay = svg::MapOverlay::default();
    if let Some(path) = points {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        overlay.points = input::parse_points_file(&text)?;
    }
    for p in point {
        overlay.points.push(input::parse_matrix(p)?);
    }
    if let Some(spec) = spec {
        let spec = input::parse_trajectory(spec)?;
        overlay.trajectory = Some(trajectory(&spec.start, &spec.end, spec.samples)?);
    }
    emit(out, &svg::render_map(&overlay))
}

fn cmd_fractions(samples: u64, seed: u64, format: Format, workers: usize) -> Result<(), Failure> {
    if samples == 0 {
        return Err(Failure::Usage("--samples must be at least 1".into()));
    }
    if workers == 0 {
        return Err(Failure::Usage("--workers must be at least 1".into()));
    }
    let estimate = mc_region_fractions_parallel(samples, seed, workers);
    let report = FractionsReport::new(&estimate, seed, workers);
    let text = match format {
        Format::Csv => report.to_csv(),
        Format::Json => to_json(&report),
    };
    emit(None, &text)
}

#[derive(serde::Serialize)]
struct CensusRow {
    id: usize,
    name: &'static str,
    expected: usize,
    observed: usize,
    matches: bool,
}

fn cmd_census(json: bool) -> Result<(), Failure> {
    let result = census();
    let rows: Vec<CensusRow> = ClassId::all()
        .map(|c| {
            let record = c.record();
            CensusRow {
                id: c.index(),
                name: record.display_name,
                expected: record.triangle_count,
                observed: result.count(c),
                matches: record.triangle_count == result.count(c),
            }
        })
        .collect();
    let text = if json {
        to_json(&serde_json::json!({ "rows": rows, "total": result.total() }))
    } else {
        let mut text = format!("{:<3} {:<28} {:>8} {:>8}  status\n", "id", "class", "expected", "observed");
        for r in &rows {
            text += &format!(
                "{:<3} {:<28} {:>8} {:>8}  {}\n",
                r.id,
                r.name,
                r.expected,
                r.observed,
                if r.matches { "ok" } else { "MISMATCH" }
            );
        }
        text + &format!("total {}\n", result.total())
    };
    emit(None, &text)?;
    let mismatches = result.mismatches();
    if mismatches.is_empty() && result.total() == 24 {
        Ok(())
    } else {
        Err(Failure::Contract(format!(
            "census mismatch in classes {:?}",
            mismatches.iter().map(|c| c.index()).collect::<Vec<_>>()
        )))
    }
}

fn cmd_ordergraph(matrix: &str, simplified: bool, out: Option<&PathBuf>) -> Result<(), Failure> {
    let game = input::parse_matrix_arg(matrix)?;
    let graph = build_order_graph(&game);
    emit(out, &to_dot(&graph, DotOptions { simplified }))
}

fn cmd_decompose(matrix: &str) -> Result<(), Failure> {
    let game: PayoffMatrix = input::parse_matrix_arg(matrix)?;
    let decomposition = match decompose(&game) {
        Ok(d) => d,
        Err(Error::TrivialGame) => {
            return Err(Failure::Contract(format!(
                "{game} is trivial and has no decomposition"
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let body = DecompositionJson::new(&game, &decomposition);
    let verified = body.reconstruction_verified;
    let report = DecompositionReport {
        schema: report::DECOMPOSITION_SCHEMA,
        input: (&game).into(),
        decomposition: body,
    };
    emit(None, &to_json(&report))?;
    if verified {
        Ok(())
    } else {
        Err(Failure::Contract("reconstruction does not match the input".into()))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { matrix, json } => cmd_classify(&matrix, json),
        Command::Map {
            points,
            point,
            trajectory,
            out,
        } => cmd_map(points.as_ref(), &point, trajectory.as_deref(), out.as_ref()),
        Command::Fractions {
            samples,
            seed,
            format,
            workers,
        } => cmd_fractions(samples, seed, format, workers),
        Command::Census { json } => cmd_census(json),
        Command::Ordergraph {
            matrix,
            simplified,
            out,
        } => cmd_ordergraph(&matrix, simplified, out.as_ref()),
        Command::Decompose { matrix } => cmd_decompose(&matrix),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Contract(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
