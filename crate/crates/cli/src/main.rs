//! Command line front end: enumeration, weights, bijections, exact
//! verification and rendering. All numeric output is exact and every
//! byte of output is a pure function of the arguments.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use rhombic::algebra::parse_rational;
use rhombic::assemblees::{
    enumerate_assemblees, insert, rho, GreenPointChoice, TruncatedSubexceedant,
};
use rhombic::bijections::{fusion_exchange, label_passing, EdgeLabel};
use rhombic::rat::{
    closed_form_partition, enumerate_fillings, partition_function_jobs, state_weight, Tableau,
};
use rhombic::shapes::{build_diagram, canonical_tiling, parse_word, Edge, Point, Tiling};
use rhombic::verify::run_all;
use rhombic::Assemblee;

const ENUM_LIMIT: usize = 4_000_000;

#[derive(Parser)]
#[command(
    name = "rhombic",
    version,
    about = "Rhombic alternative tableaux, assemblées and the two-species exclusion process, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Assemblée to tableau (fusion-exchange on the canonical tiling)
    A2t,
    /// Tableau to assemblée (label-passing)
    T2a,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Svg,
    Ascii,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the tableaux of a word on its canonical tiling
    EnumerateRat {
        /// State word over D (heavy), A (light), E (hole)
        #[arg(long)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight generating function of one word
    Weight {
        #[arg(long)]
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Partition function over all words of length n with r lights
    Partition {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Worker threads for the per-state sums
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the partition function at q = 1 with the closed product form
    VerifyPartition {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Convert between assemblées and tableaux
    Biject {
        direction: Direction,
        /// Input JSON file (assemblée for a2t, tableau for t2a)
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// For a2t, also emit the full edge-label trace
        #[arg(long)]
        trace: bool,
    },
    /// List every assemblée with n elements in r blocks
    EnumerateAssemblees {
        /// Element count (the n+1 of a size-(n, r) word)
        #[arg(long)]
        n: usize,
        /// Block count (the r+1 of a size-(n, r) word)
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the insertion algorithm for one height function and green choice
    Insert {
        /// Comma-separated insertion heights f(1),...,f(m)
        #[arg(long, value_delimiter = ',')]
        values: Vec<usize>,
        /// Truncation parameter (one less than the number of green lines)
        #[arg(long)]
        r: usize,
        /// Gap index per green line, top to bottom; the bottom line is
        /// pinned after the last element and must be omitted
        #[arg(long, value_delimiter = ',')]
        green: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the chain exactly and compare with the tableau ratios
    VerifyAsep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Entry rate, as p/q
        #[arg(long)]
        alpha: String,
        /// Exit rate, as p/q
        #[arg(long)]
        beta: String,
        /// Reverse hopping rate, as p/q
        #[arg(long)]
        q: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the whole verification suite and print one line per criterion
    VerifyAll {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Criteria run concurrently in waves of this size
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Draw a tableau, assemblée or label trace
    Render {
        /// Input JSON file; the object kind is detected from its shape
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))
        }
    }
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::EnumerateRat { word, out } => {
            let word = parse_word(&word)?;
            let tiling = canonical_tiling(&build_diagram(&word));
            let tableaux = enumerate_fillings(&tiling, ENUM_LIMIT)?;
            let value = serde_json::json!({
                "word": word.to_string(),
                "count": tableaux.len(),
                "tableaux": tableaux.iter().map(Tableau::to_json).collect::<Vec<_>>(),
            });
            emit(&out, &format!("{value}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Weight { word, out } => {
            let word = parse_word(&word)?;
            let weight = state_weight(&word, ENUM_LIMIT)?;
            emit(&out, &format!("{}\n", weight.to_json()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Partition { n, r, jobs, out } => {
            if r > n {
                bail!("need r <= n");
            }
            let z = partition_function_jobs(n, r, ENUM_LIMIT, jobs.max(1))?;
            emit(&out, &format!("{}\n", z.to_json()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPartition { n, r } => {
            if r > n {
                bail!("need r <= n");
            }
            let z = partition_function_jobs(n, r, ENUM_LIMIT, 1)?.substitute_q_one();
            let closed = closed_form_partition(n, r);
            println!("partition(q=1): {}", z.to_json());
            println!("closed form:    {}", closed.to_json());
            if z == closed {
                println!("PASS");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("FAIL");
                Ok(ExitCode::from(1))
            }
        }
        Command::Biject {
            direction,
            input,
            out,
            trace,
        } => {
            let value = read_json(&input)?;
            match direction {
                Direction::A2t => {
                    let a = Assemblee::from_json(&value)?;
                    let word = rhombic::assemblees::word_of_assemblee(&a);
                    let tiling = canonical_tiling(&build_diagram(&word));
                    let lt = fusion_exchange(&a, &tiling)?;
                    let rendered = if trace {
                        lt.to_json()
                    } else {
                        lt.tableau.to_json()
                    };
                    emit(&out, &format!("{rendered}\n"))?;
                }
                Direction::T2a => {
                    let tableau = Tableau::from_json(&value)?;
                    let a = label_passing(&tableau)?;
                    emit(&out, &format!("{}\n", a.to_json()))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::EnumerateAssemblees { n, r, out } => {
            if r < 1 || r > n {
                bail!("need 1 <= r <= n (element and block counts)");
            }
            let assemblees = enumerate_assemblees(n, r, ENUM_LIMIT)?;
            let value = serde_json::json!({
                "count": assemblees.len(),
                "assemblees": assemblees.iter().map(Assemblee::to_json).collect::<Vec<_>>(),
            });
            emit(&out, &format!("{value}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Insert {
            values,
            r,
            green,
            out,
        } => {
            let f = TruncatedSubexceedant::new(r, values)?;
            let m = f.insertions();
            if green.len() != r {
                bail!("--green needs exactly r = {r} entries (bottom line is implied)");
            }
            let mut gaps = green;
            gaps.push(m);
            let g = GreenPointChoice::new(m, gaps)?;
            let outcome = insert(&f, &g)?;
            let image = rho(&outcome.assemblee);
            let value = serde_json::json!({
                "assemblee": outcome.assemblee.to_json(),
                "rho": image.to_json(),
                "weight": outcome.weight.to_json(),
            });
            emit(&out, &format!("{value}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyAsep {
            n,
            r,
            alpha,
            beta,
            q,
            out,
        } => {
            let report = rhombic::asep::verify_stationarity(
                n,
                r,
                &parse_rational(&alpha)?,
                &parse_rational(&beta)?,
                &parse_rational(&q)?,
                ENUM_LIMIT,
            )?;
            emit(&out, &format!("{}\n", report.to_json()))?;
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyAll { max_n, jobs } => {
            let reports = if jobs <= 1 {
                run_all(max_n)
            } else {
                run_all_in_waves(max_n, jobs)
            };
            let mut all_pass = true;
            println!("{:<24}{:<8}details", "criterion", "result");
            for (i, report) in reports.iter().enumerate() {
                all_pass &= report.pass;
                println!(
                    "{:<24}{:<8}{}",
                    format!("{:02} {}", i + 1, report.name),
                    if report.pass { "PASS" } else { "FAIL" },
                    report.details
                );
            }
            println!(
                "{:<24}{}",
                "overall",
                if all_pass { "PASS" } else { "FAIL" }
            );
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render { input, format, out } => {
            let value = read_json(&input)?;
            let rendered = render_value(&value, format)?;
            emit(&out, &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The criteria have very uneven costs; waves of `jobs` keep the output
/// order fixed while letting the slow ones overlap.
fn run_all_in_waves(max_n: usize, jobs: usize) -> Vec<rhombic::verify::CriterionReport> {
    use rhombic::verify::*;
    type Check = Box<dyn FnOnce() -> CriterionReport + Send>;
    let checks: Vec<Check> = vec![
        Box::new(move || check_lah_counts(max_n.min(7))),
        Box::new(move || check_partition_identity(max_n.min(6))),
        Box::new(move || check_tiling_invariance(max_n.min(5))),
        Box::new(move || check_round_trips((max_n + 1).min(7), max_n.min(6))),
        Box::new(move || check_weight_preservation((max_n + 1).min(7))),
        Box::new(move || check_stationarity(max_n.min(5))),
        Box::new(move || check_insertion(max_n.min(7))),
        Box::new(check_worked_example),
        Box::new(move || check_confluence(max_n.min(5), 20)),
    ];
    let mut reports = Vec::with_capacity(checks.len());
    let mut queue = checks.into_iter();
    loop {
        let wave: Vec<Check> = queue.by_ref().take(jobs).collect();
        if wave.is_empty() {
            break;
        }
        std::thread::scope(|scope| {
            let handles: Vec<_> = wave.into_iter().map(|c| scope.spawn(c)).collect();
            for handle in handles {
                reports.push(handle.join().expect("criterion worker panicked"));
            }
        });
    }
    reports
}

fn render_value(value: &Value, format: Format) -> Result<String> {
    // Shape detection: an array is an assemblée, an object with a
    // `labels` field is a trace, otherwise a tableau (a bare tiling
    // renders with an all-empty filling).
    if value.is_array() {
        let a = Assemblee::from_json(value)?;
        return Ok(match format {
            Format::Svg => render::assemblee_svg(&a),
            Format::Ascii => render::assemblee_ascii(&a),
            Format::Json => format!("{}\n", a.to_json()),
        });
    }
    let obj = value
        .as_object()
        .ok_or_else(|| anyhow!("expected a JSON object or array"))?;
    let tableau = if obj.contains_key("filling") {
        Tableau::from_json(value)?
    } else {
        let tiling = Tiling::from_json(value)?;
        let empties = vec![rhombic::rat::Fill::Empty; tiling.tile_count()];
        Tableau::with_fills(tiling, &empties)?
    };
    if let Some(labels_json) = obj.get("labels") {
        let labels = parse_trace_labels(labels_json)?;
        return Ok(match format {
            Format::Svg => render::trace_svg(&tableau, &labels)?,
            Format::Ascii => render::trace_ascii(&tableau, &labels),
            Format::Json => format!("{value}\n"),
        });
    }
    Ok(match format {
        Format::Svg => render::tableau_svg(&tableau)?,
        Format::Ascii => render::tableau_ascii(&tableau),
        Format::Json => format!("{}\n", tableau.to_json()),
    })
}

fn parse_trace_labels(value: &Value) -> Result<Vec<(Edge, EdgeLabel)>> {
    let records = value
        .as_array()
        .ok_or_else(|| anyhow!("`labels` must be an array"))?;
    let mut labels = Vec::with_capacity(records.len());
    for record in records {
        let endpoints = record
            .get("edge")
            .and_then(Value::as_array)
            .filter(|pts| pts.len() == 2)
            .ok_or_else(|| anyhow!("label record needs `edge`: [[x,y],[x,y]]"))?;
        let mut points = [Point::ORIGIN; 2];
        for (slot, pt) in endpoints.iter().enumerate() {
            let coords = pt
                .as_array()
                .filter(|c| c.len() == 2)
                .ok_or_else(|| anyhow!("edge endpoint must be [x, y]"))?;
            let x = coords[0].as_i64().ok_or_else(|| anyhow!("bad x"))?;
            let y = coords[1].as_i64().ok_or_else(|| anyhow!("bad y"))?;
            points[slot] = Point::new(x, y);
        }
        let label = match record.get("label") {
            None | Some(Value::Null) => EdgeLabel::EMPTY,
            Some(Value::Array(bounds)) if bounds.len() == 2 => {
                let lo = bounds[0].as_u64().ok_or_else(|| anyhow!("bad label"))? as u32;
                let hi = bounds[1].as_u64().ok_or_else(|| anyhow!("bad label"))? as u32;
                if lo > hi {
                    bail!("label interval reversed");
                }
                EdgeLabel::interval(lo, hi)
            }
            _ => bail!("label must be null or [lo, hi]"),
        };
        labels.push((Edge::new(points[0], points[1]), label));
    }
    Ok(labels)
}
