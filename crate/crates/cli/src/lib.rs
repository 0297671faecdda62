//! Command-line front end. Every command is a thin wrapper over a library call;
//! [`run`] returns the exit code and output instead of touching the process so
//! tests can drive it directly.
//!
//! Exit codes: 0 on success or an affirmative answer, 1 on a well-formed
//! negative answer (no trail, no single winner, a failed verification), 2 on
//! usage, parse, or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use claimproof_core::hands::{determine_winner, Entry, Outcome};
use claimproof_core::oracle::Enumerator;
use claimproof_core::{
    combinatorial_proof, count_category, degree_map, eulerian_status, find_trail, impossibility_proof, load_rubric,
    parse_graph, parse_marks, probability, score, AceRule, DeckSpec, EulerianStatus, HandCategory, Multigraph,
    Probability, TrailSearch, Vocabulary,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn negative(stdout: String) -> Self {
        Output { code: EXIT_NEGATIVE, stdout, stderr: String::new() }
    }

    fn error(message: impl std::fmt::Display) -> Self {
        Output { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

#[derive(Debug, Parser)]
#[command(name = "claimproof", version, about = "Exact poker-hand counts, Eulerian trail proofs, and rubric scoring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Five-card hand counting on standard or variant decks
    #[command(subcommand)]
    Poker(PokerCommand),
    /// Eulerian trail analysis of a graph file
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Rubric scoring
    #[command(subcommand)]
    Rubric(RubricCommand),
}

#[derive(Debug, Subcommand)]
enum PokerCommand {
    /// Number of hands in each category
    Count(Selection),
    /// Exact probability of each category
    Prob(Selection),
    /// Declare the winner: the rarest hand wins
    Winner {
        /// Players as NAME=CATEGORY, e.g. Bond=full-house
        #[arg(required = true, value_parser = parse_entry)]
        players: Vec<Entry>,
        #[command(flatten)]
        deck: DeckArgs,
    },
    /// Check every closed form against exhaustive enumeration
    Verify {
        #[command(flatten)]
        deck: DeckArgs,
        /// Emit CSV instead of a table
        #[arg(long)]
        csv: bool,
        /// Worker threads for the enumeration (output does not depend on it)
        #[arg(long)]
        threads: Option<NonZeroUsize>,
    },
    /// Claim-Proof document for one category
    Proof {
        category: HandCategory,
        #[command(flatten)]
        deck: DeckArgs,
        /// List the proof steps with their kinds instead of prose
        #[arg(long)]
        steps: bool,
    },
}

#[derive(Debug, Args)]
struct Selection {
    /// Category such as full-house; all categories when omitted
    #[arg(conflicts_with = "all")]
    category: Option<HandCategory>,
    /// Report every category (the default)
    #[arg(long)]
    all: bool,
    #[command(flatten)]
    deck: DeckArgs,
}

#[derive(Debug, Args)]
struct DeckArgs {
    /// Number of card values
    #[arg(long, default_value_t = 13)]
    values: u32,
    /// Number of suits
    #[arg(long, default_value_t = 4)]
    suits: u32,
    /// Number of wild cards added to the deck
    #[arg(long, default_value_t = 0)]
    wilds: u32,
    /// Whether the lowest value may also play above the top one (both) or not (high)
    #[arg(long, default_value = "both")]
    ace: AceRule,
}

impl DeckArgs {
    fn spec(&self) -> Result<DeckSpec, String> {
        DeckSpec::new(self.values, self.suits, self.wilds, self.ace).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// Degrees and Eulerian status
    Analyze { file: PathBuf },
    /// Print an Eulerian trail if one exists
    Trail { file: PathBuf },
    /// Print the parity impossibility proof if no trail can exist
    Proof {
        file: PathBuf,
        /// Wording for places and passages
        #[arg(long, value_enum, default_value_t = Vocab::Generic)]
        vocab: Vocab,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Vocab {
    Generic,
    Bridges,
    Rooms,
}

impl Vocab {
    fn words(self) -> Vocabulary {
        match self {
            Vocab::Generic => Vocabulary::generic(),
            Vocab::Bridges => Vocabulary::bridges(),
            Vocab::Rooms => Vocabulary::floor_plan(),
        }
    }
}

#[derive(Debug, Subcommand)]
enum RubricCommand {
    /// Score a mark sheet against a rubric
    Score { rubric: PathBuf, marks: PathBuf },
}

fn parse_entry(s: &str) -> Result<Entry, String> {
    let (name, category) = s.split_once('=').ok_or_else(|| format!("expected NAME=CATEGORY, got `{s}`"))?;
    if name.trim().is_empty() {
        return Err(format!("missing player name in `{s}`"));
    }
    let category: HandCategory = category.parse().map_err(|e: claimproof_core::HandError| e.to_string())?;
    Ok(Entry::new(name.trim(), category))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            } else {
                Output::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Poker(cmd) => poker(cmd),
        Command::Graph(cmd) => graph(cmd),
        Command::Rubric(RubricCommand::Score { rubric, marks }) => rubric_score(&rubric, &marks),
    };
    result.unwrap_or_else(Output::error)
}

fn poker(cmd: PokerCommand) -> Result<Output, String> {
    match cmd {
        PokerCommand::Count(sel) => counts(&sel, false),
        PokerCommand::Prob(sel) => counts(&sel, true),
        PokerCommand::Winner { players, deck } => {
            let report = determine_winner(&players, &deck.spec()?).map_err(|e| e.to_string())?;
            let line = format!("{}\n", report.summary());
            Ok(match report.outcome {
                Outcome::Winner(_) => Output::ok(line),
                Outcome::Tie(_) | Outcome::NoWinner => Output::negative(line),
            })
        }
        PokerCommand::Verify { deck, csv, threads } => {
            let mut oracle = Enumerator::default();
            if let Some(n) = threads {
                oracle = oracle.with_threads(n);
            }
            let report = oracle.verify_closed_forms(&deck.spec()?).map_err(|e| e.to_string())?;
            let text = if csv { report.to_csv() } else { format!("{report}\n") };
            Ok(if report.passed() { Output::ok(text) } else { Output::negative(text) })
        }
        PokerCommand::Proof { category, deck, steps } => {
            let doc = combinatorial_proof(category, &deck.spec()?).map_err(|e| e.to_string())?;
            Ok(Output::ok(if steps { doc.render_steps() } else { doc.render_text() }))
        }
    }
}

/// Closed forms for wild-free decks; exhaustive enumeration once wilds are in play.
fn counts(sel: &Selection, as_probability: bool) -> Result<Output, String> {
    let spec = sel.deck.spec()?;
    let categories: Vec<HandCategory> = match sel.category {
        Some(c) => vec![c],
        None => HandCategory::ALL.to_vec(),
    };
    let tally = if spec.wilds() > 0 { Some(Enumerator::default().tally(&spec).map_err(|e| e.to_string())?) } else { None };

    let mut out = String::new();
    for category in categories {
        let value = match (&tally, as_probability) {
            (Some(t), false) => t.get(category).to_string(),
            (Some(t), true) => Probability::new(t.get(category).into(), spec.hand_count()).to_string(),
            (None, false) => count_category(category, &spec).map_err(|e| e.to_string())?.to_string(),
            (None, true) => probability(category, &spec).map_err(|e| e.to_string())?.to_string(),
        };
        writeln!(out, "{:<16} {value}", category.slug()).unwrap();
    }
    if sel.category.is_none() {
        writeln!(out, "{:<16} {}", "total", spec.hand_count()).unwrap();
    }
    Ok(Output::ok(out))
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Multigraph, String> {
    parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn graph(cmd: GraphCommand) -> Result<Output, String> {
    match cmd {
        GraphCommand::Analyze { file } => {
            let g = load_graph(&file)?;
            let status = eulerian_status(&g).map_err(|e| e.to_string())?;
            let width = degree_map(&g).keys().map(|k| k.chars().count()).max().unwrap_or(0);
            let mut out = format!("{}\n", status.describe(&g));
            writeln!(out, "{} vertices, {} edges", g.vertex_count(), g.edge_count()).unwrap();
            let by_id = g.degrees();
            for v in g.vertices() {
                let d = by_id[v.0];
                let parity = if d % 2 == 1 { "odd" } else { "even" };
                writeln!(out, "  {:<width$}  {d:>3}  {parity}", g.name(v)).unwrap();
            }
            Ok(Output::ok(out))
        }
        GraphCommand::Trail { file } => {
            let g = load_graph(&file)?;
            Ok(match find_trail(&g).map_err(|e| e.to_string())? {
                TrailSearch::Found(trail) => {
                    let kind = if trail.is_closed() { "circuit" } else { "trail" };
                    Output::ok(format!("Eulerian {kind} over {} edges:\n{}\n", trail.steps.len(), trail.render(&g)))
                }
                TrailSearch::Impossible(status) => Output::negative(format!("{}\n", status.describe(&g))),
            })
        }
        GraphCommand::Proof { file, vocab } => {
            let g = load_graph(&file)?;
            let status = eulerian_status(&g).map_err(|e| e.to_string())?;
            Ok(match status {
                EulerianStatus::NoTrail { .. } => {
                    let doc = impossibility_proof(&g, &vocab.words()).map_err(|e| e.to_string())?;
                    Output::ok(doc.render_text())
                }
                other => Output::negative(format!("{}; no parity proof applies\n", other.describe(&g))),
            })
        }
    }
}

fn rubric_score(rubric: &Path, marks: &Path) -> Result<Output, String> {
    let r = load_rubric(&read(rubric)?).map_err(|e| format!("{}: {e}", rubric.display()))?;
    let m = parse_marks(&read(marks)?).map_err(|e| format!("{}: {e}", marks.display()))?;
    let report = score(&r, &m).map_err(|e| e.to_string())?;
    Ok(Output::ok(format!("{report}\n")))
}
