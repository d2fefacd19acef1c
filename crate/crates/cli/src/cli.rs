use std::io::Read;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgereg::{FieldSpec, Graph, GraphFamily, RegularityConfig};

use crate::commands::{self, CoverMethod};
use crate::config::{SuiteConfig, CORPUS_NMAX};
use crate::input::{self, InputFormat, InputGraph};
use crate::report::{self, Check, OutputFormat, ReportRecord, Status};
use crate::{reproduce, search};

#[derive(Debug, Parser)]
#[command(
    name = "edgereg",
    version,
    about = "Exact edge-ideal regularity workbench"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Input file, `-` for stdin. Commands that scan a corpus default to the
    /// bundled one; the others read stdin.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    pub format: Format,
    /// Comma-separated primes for regularity.
    #[arg(long, global = true, default_value = "2")]
    pub fields: String,
    /// Largest vertex count taken from the bundled corpus, or the largest
    /// n for paths and cycles.
    #[arg(long, global = true)]
    pub nmax: Option<usize>,
    /// Worker threads, 0 for one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Time budget per cover search in milliseconds.
    #[arg(long, global = true)]
    pub timeout_ms: Option<u64>,
    /// JSON array of records.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// One CSV row per graph.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Record wall times (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Largest graph handed to the regularity scan.
    #[arg(long, global = true, default_value_t = edgereg::homology::DEFAULT_REGULARITY_VERTEX_CAP)]
    pub vertex_cap: usize,
    /// Largest number of faces of one independence complex.
    #[arg(long, global = true, default_value_t = edgereg::homology::DEFAULT_FACE_CAP)]
    pub face_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edges,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All invariants plus the bounds chain.
    Invariants,
    /// Regularity over each requested field.
    Regularity,
    /// Exact co-chordal cover number with its cover.
    Cochord,
    /// Build and certify one cover.
    Cover {
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Check the bounds and structural equalities on a corpus.
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
    /// Recompute fixed example families and constructions.
    Reproduce {
        #[command(subcommand)]
        what: ReproduceWhat,
    },
    /// Look for counterexamples to two open questions.
    Search {
        #[command(subcommand)]
        what: SearchWhat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Split,
    Chain,
    Greedy,
    Exact,
}

#[derive(Debug, Subcommand)]
pub enum VerifyWhat {
    /// Bounds chain and the structural equalities on every input graph.
    Bounds,
}

#[derive(Debug, Subcommand)]
pub enum ReproduceWhat {
    /// Paths and cycles for n = 3..=nmax (default 12).
    PathsCycles,
    /// Gap construction from disjoint 5- and 7-cycles. Without `--r`/`--s`
    /// six standard pairs are run.
    Gap {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Whiskers of the corpus graphs (default n <= 5).
    Whisker,
    /// A 6-cycle with pendants on four consecutive vertices.
    ScmExample,
    /// Clique-pair splits of the Petersen complement.
    PetersenComplement,
}

#[derive(Debug, Subcommand)]
pub enum SearchWhat {
    /// Is cochord <= 2 for every (2K2, claw)-free graph?
    Q51,
    /// Does every claw-free graph have an edge cover by indmatch
    /// (2K2, claw)-free subgraphs?
    Q52,
}

/// Output text and exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
            code: 2,
        }
    }
}

fn config(c: &Common) -> Result<SuiteConfig, String> {
    let cfg = SuiteConfig {
        nmax: c.nmax.unwrap_or(CORPUS_NMAX),
        fields: SuiteConfig::parse_fields(&c.fields).map_err(|e| e.to_string())?,
        regularity: RegularityConfig {
            vertex_cap: c.vertex_cap,
            face_cap: c.face_cap,
        },
        cochord_budget: c.timeout_ms.map(Duration::from_millis),
        format: if c.json {
            OutputFormat::Json
        } else if c.csv {
            OutputFormat::Csv
        } else {
            OutputFormat::Text
        },
        jobs: c.jobs,
        timings: c.timings,
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn read_inputs(
    c: &Common,
    cfg: &SuiteConfig,
    corpus_default: bool,
) -> Result<Vec<InputGraph>, String> {
    let format = match c.format {
        Format::Graph6 => InputFormat::Graph6,
        Format::Edges => InputFormat::Edges,
    };
    match &c.input {
        None if corpus_default => Ok(input::bundled(cfg.nmax)),
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            Ok(input::read(&text, format, &p.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(input::read(&text, format, "stdin"))
        }
    }
}

fn field0(cfg: &SuiteConfig) -> FieldSpec {
    cfg.fields[0]
}

fn blocked(id: &str, e: impl ToString) -> ReportRecord {
    let mut r = ReportRecord::new(id, "");
    r.push(Check::new(id, Status::Blocked, e.to_string()));
    r
}

pub fn execute(cli: &Cli) -> Outcome {
    let cfg = match config(&cli.common) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let stream =
        |corpus_default: bool, f: &(dyn Fn(&str, &Graph, &SuiteConfig) -> ReportRecord + Sync)| {
            read_inputs(&cli.common, &cfg, corpus_default)
                .map(|inputs| commands::run_stream(&inputs, &cfg, f))
        };
    let records = match &cli.command {
        Command::Invariants => stream(false, &commands::invariants),
        Command::Regularity => stream(false, &commands::regularity),
        Command::Cochord => stream(false, &commands::cochord),
        Command::Cover { method } => {
            let m = match method {
                Method::Split => CoverMethod::Split,
                Method::Chain => CoverMethod::Chain,
                Method::Greedy => CoverMethod::Greedy,
                Method::Exact => CoverMethod::Exact,
            };
            stream(false, &move |id: &str, g: &Graph, cfg: &SuiteConfig| {
                commands::cover(id, g, cfg, m)
            })
        }
        Command::Verify {
            what: VerifyWhat::Bounds,
        } => stream(true, &commands::verify_bounds),
        Command::Reproduce { what } => Ok(reproduce_records(what, &cli.common, &cfg)),
        Command::Search {
            what: SearchWhat::Q51,
        } => stream(true, &search::q51).map(|mut rs| {
            match reproduce::petersen_complement().and_then(|x| reproduce::petersen_record(&x)) {
                Ok(r) => rs.push(r),
                Err(e) => rs.push(blocked("petersen-complement", e)),
            }
            let mut r = search::q51(
                "petersen-complement",
                &GraphFamily::Petersen.build().unwrap().complement(),
                &cfg,
            );
            r.graph_id = "petersen-complement/q51".into();
            rs.push(r);
            rs
        }),
        Command::Search {
            what: SearchWhat::Q52,
        } => stream(true, &search::q52),
    };
    let records = match records {
        Ok(r) => r,
        Err(e) => return Outcome::usage(e),
    };
    let mut stderr = String::new();
    if matches!(cli.command, Command::Search { .. }) {
        let tally = |s: Status| {
            records
                .iter()
                .filter(|r| r.checks.iter().any(|c| c.status == s))
                .count()
        };
        stderr = format!(
            "searched {} graphs: {} pass, {} skipped, {} findings, {} blocked\n",
            records.len(),
            tally(Status::Pass),
            tally(Status::Skip),
            tally(Status::Finding),
            tally(Status::Blocked)
        );
    }
    Outcome {
        stdout: report::emit(&records, cfg.format),
        stderr,
        code: report::exit_code(&records),
    }
}

fn reproduce_records(
    what: &ReproduceWhat,
    common: &Common,
    cfg: &SuiteConfig,
) -> Vec<ReportRecord> {
    let f = field0(cfg);
    let budget = cfg.cochord_budget;
    match what {
        ReproduceWhat::PathsCycles => {
            let nmax = common.nmax.unwrap_or(12);
            match reproduce::paths_cycles(nmax, f, budget) {
                Ok(rows) => reproduce::paths_cycles_records(&rows),
                Err(e) => vec![blocked("paths-cycles", e)],
            }
        }
        ReproduceWhat::Gap { r, s } => {
            let pairs = match (r, s) {
                (None, None) => vec![(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)],
                (r, s) => vec![(r.unwrap_or(0), s.unwrap_or(0))],
            };
            pairs
                .into_iter()
                .map(|(r, s)| {
                    match reproduce::gap(r, s, f, budget).and_then(|x| reproduce::gap_record(&x)) {
                        Ok(rec) => rec,
                        Err(e) => blocked(&format!("gap({r},{s})"), e),
                    }
                })
                .collect()
        }
        ReproduceWhat::Whisker => {
            let cfg = SuiteConfig {
                nmax: common.nmax.unwrap_or(5),
                ..cfg.clone()
            };
            match read_inputs(common, &cfg, true) {
                Ok(inputs) => commands::run_stream(&inputs, &cfg, |id, g, cfg| {
                    reproduce::whisker_record(id, g, cfg.cochord_budget)
                }),
                Err(e) => vec![blocked("whisker", e)],
            }
        }
        ReproduceWhat::ScmExample => match reproduce::scm_example(f, budget) {
            Ok(x) => vec![reproduce::scm_record(&x)],
            Err(e) => vec![blocked("c6-pendants", e)],
        },
        ReproduceWhat::PetersenComplement => {
            match reproduce::petersen_complement().and_then(|x| reproduce::petersen_record(&x)) {
                Ok(r) => vec![r],
                Err(e) => vec![blocked("petersen-complement", e)],
            }
        }
    }
}
