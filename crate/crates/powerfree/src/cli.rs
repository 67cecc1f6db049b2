//! Command-line front end: generation, checking, search, the Φ operations,
//! serialization, and the verification suites, glued to a stable exit-status
//! contract: 0 on success, 1 when the answer is "none" or a violation was
//! found, 2 on usage or I/O errors.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::automata::{build_di, Dfa};
use crate::carpi;
use crate::constructions;
use crate::morphisms::{thue_morse_prefix, Morphism};
use crate::search::{shortest_free_accepted_with, SearchOptions, SearchOutcome};
use crate::verify::{self, Suite, VerifyConfig};
use crate::words::{Constraint, Symbol, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "powerfree",
    about = "Repetition-free words, chain automata, and the 25-letter code",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate words: Thue-Morse prefixes, the recursive families,
    /// circularly squarefree witnesses, simple overlaps, morphism fixed
    /// points.
    GenWord(GenWordArgs),
    /// Generate a member of the chain-automaton family as JSON (and
    /// optionally DOT).
    GenDfa(GenDfaArgs),
    /// Check a word for primitivity, repetitions, simple powers, or
    /// circular squarefreeness.
    Check(CheckArgs),
    /// Shortest repetition-free word accepted by a DFA read from JSON.
    SearchShortest(SearchArgs),
    /// Operations around the 25-letter code and its preimage automaton.
    Carpi {
        #[command(subcommand)]
        op: CarpiCommand,
    },
    /// Render a DFA JSON file as Graphviz DOT.
    ExportDot(ExportDotArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    ThueMorse,
    Wi,
    WiPrime,
    CircSquarefree,
    SimpleOverlap,
    FixedPoint,
}

#[derive(Debug, Args)]
pub struct GenWordArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Output length (thue-morse, circ-squarefree, fixed-point).
    #[arg(long)]
    pub len: Option<usize>,
    /// Power exponent for the wi / wi-prime families.
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    /// Base word, e.g. 01x3 (wi, wi-prime, simple-overlap).
    #[arg(long, default_value = "01x3")]
    pub base: String,
    /// Family index.
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    /// Override the inferred alphabet size of --base.
    #[arg(long)]
    pub alphabet: Option<usize>,
    /// Morphism in text form, e.g. "0->01,1->10" (fixed-point).
    #[arg(long)]
    pub morphism: Option<String>,
    /// Start symbol of the fixed point.
    #[arg(long, default_value_t = 0)]
    pub start: Symbol,
}

#[derive(Debug, Args)]
pub struct GenDfaArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value = "01x3")]
    pub base: String,
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    #[arg(long)]
    pub alphabet: Option<usize>,
    /// Write the JSON here instead of stdout.
    #[arg(long)]
    pub out: Option<String>,
    /// Also write a labeled DOT rendering here.
    #[arg(long)]
    pub dot: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Primitive,
    Kpower,
    Overlap,
    SimplePower,
    CircSquarefree,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub kind: CheckKind,
    /// Power exponent (kpower, simple-power).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub alphabet: Option<usize>,
    /// The word, in digit syntax (e.g. 0110, 01x3, 0[12]3).
    pub word: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstraintKind {
    Kpower,
    Overlap,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// DFA JSON file.
    #[arg(long)]
    pub dfa: String,
    #[arg(long, value_enum)]
    pub constraint: ConstraintKind,
    /// Power exponent (required for --constraint kpower).
    #[arg(long)]
    pub k: Option<usize>,
    /// Search words of length at most this bound.
    #[arg(long)]
    pub max_len: usize,
    /// Expand each search level in this many threads (results are
    /// bit-identical to the sequential order).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Per-level progress on stderr.
    #[arg(long)]
    pub verbose: bool,
}

#[derive(Debug, Subcommand)]
pub enum CarpiCommand {
    /// Image of a code word (comma-separated codes, or "eps").
    Phi { word: String },
    /// The two halves whose concatenation is the image.
    PhiSplit { word: String },
    /// All preimages of a binary word up to a code-word length bound.
    Invert {
        word: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Build the preimage automaton of a binary DFA.
    BuildPsi {
        #[arg(long)]
        dfa: String,
        #[arg(long)]
        out: Option<String>,
        /// State budget for the discovery loop.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Shortest-by-code-length overlap-free image accepted by a binary DFA.
    ViaPsi {
        #[arg(long)]
        dfa: String,
        #[arg(long)]
        max_len: usize,
    },
}

#[derive(Debug, Args)]
pub struct ExportDotArgs {
    #[arg(long)]
    pub dfa: String,
    /// Include the dead state and its edges.
    #[arg(long)]
    pub show_dead: bool,
    #[arg(long)]
    pub out: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemmas,
    Theorem7,
    Carpi,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    /// Cap the exhaustive scan lengths.
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Also run the expensive third family member search.
    #[arg(long)]
    pub long: bool,
}

/// Parses an argument vector into a command. Unknown flags are rejected.
pub fn parse_command<I, T>(args: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Cli::try_parse_from(args).map(|cli| cli.command)
}

/// Parse plus execute, with clap's help/version handled conventionally.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_command(args) {
        Ok(command) => {
            let mut stdout = std::io::stdout();
            execute(&command, &mut stdout)
        }
        Err(err) => match err.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{err}");
                EXIT_OK
            }
            _ => {
                eprint!("{err}");
                EXIT_USAGE
            }
        },
    }
}

/// Executes a parsed command, writing its primary output to `out`.
/// Diagnostics go to stderr. Returns the exit status.
pub fn execute(command: &Command, out: &mut dyn Write) -> i32 {
    match execute_inner(command, out) {
        Ok(status) => status,
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
        Err(CliError::Io(message)) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn usage(err: impl Display) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

type ExecResult = Result<i32, CliError>;

fn execute_inner(command: &Command, out: &mut dyn Write) -> ExecResult {
    match command {
        Command::GenWord(args) => gen_word(args, out),
        Command::GenDfa(args) => gen_dfa(args, out),
        Command::Check(args) => check(args, out),
        Command::SearchShortest(args) => search_shortest(args, out),
        Command::Carpi { op } => carpi_command(op, out),
        Command::ExportDot(args) => export_dot(args, out),
        Command::Verify(args) => verify_command(args, out),
    }
}

fn parse_word(text: &str, alphabet: Option<usize>) -> Result<Word, CliError> {
    let word: Word = text.parse().map_err(CliError::usage)?;
    match alphabet {
        Some(size) => word.with_alphabet(size).map_err(CliError::usage),
        None => Ok(word),
    }
}

/// Code words print and parse as comma-separated decimal codes; the empty
/// word is "eps".
fn parse_code_word(text: &str) -> Result<Word, CliError> {
    if text == "eps" || text.is_empty() {
        return Word::empty(carpi::SIGMA).map_err(CliError::usage);
    }
    let mut codes = Vec::new();
    for part in text.split(',') {
        let code: u8 = part
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad letter code {part:?}")))?;
        codes.push(code);
    }
    Word::new(codes, carpi::SIGMA).map_err(CliError::usage)
}

fn render_codes(word: &Word) -> String {
    if word.is_empty() {
        return "eps".to_string();
    }
    word.symbols()
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn render_word(word: &Word) -> String {
    if word.is_empty() {
        "eps".to_string()
    } else {
        word.to_string()
    }
}

fn write_line(out: &mut dyn Write, line: impl Display) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(CliError::from)
}

fn gen_word(args: &GenWordArgs, out: &mut dyn Write) -> ExecResult {
    let need_len = || {
        args.len
            .ok_or_else(|| CliError::Usage("--len is required for this family".into()))
    };
    let word = match args.family {
        Family::ThueMorse => thue_morse_prefix(need_len()?),
        Family::Wi => {
            let base = parse_word(&args.base, args.alphabet)?;
            constructions::build_w(&base, args.k, args.i).map_err(CliError::usage)?
        }
        Family::WiPrime => {
            let base = parse_word(&args.base, args.alphabet)?;
            constructions::build_w_prime(&base, args.k, args.i).map_err(CliError::usage)?
        }
        Family::CircSquarefree => {
            match constructions::find_circularly_squarefree(need_len()?) {
                Some(word) => word,
                None => {
                    write_line(out, "none")?;
                    return Ok(EXIT_NONE);
                }
            }
        }
        Family::SimpleOverlap => {
            let base = parse_word(&args.base, args.alphabet)?;
            constructions::simple_overlap_from_square(&base).map_err(CliError::usage)?
        }
        Family::FixedPoint => {
            let text = args.morphism.as_ref().ok_or_else(|| {
                CliError::Usage("--morphism is required for --family fixed-point".into())
            })?;
            let morphism: Morphism = text.parse().map_err(CliError::usage)?;
            morphism
                .fixed_point_prefix(args.start, need_len()?)
                .map_err(CliError::usage)?
        }
    };
    write_line(out, render_word(&word))?;
    Ok(EXIT_OK)
}

fn gen_dfa(args: &GenDfaArgs, out: &mut dyn Write) -> ExecResult {
    let base = parse_word(&args.base, args.alphabet)?;
    let family = build_di(&base, args.k, args.i).map_err(CliError::usage)?;
    let json = family.dfa.to_json();
    if let Some(path) = &args.dot {
        fs::write(path, family.dfa.to_dot(Some(&family.labels), false))?;
    }
    match &args.out {
        Some(path) => {
            fs::write(path, &json)?;
            eprintln!("wrote {path} ({} states)", family.dfa.state_count());
        }
        None => write!(out, "{json}").map_err(CliError::from)?,
    }
    Ok(EXIT_OK)
}

fn check(args: &CheckArgs, out: &mut dyn Write) -> ExecResult {
    let word = parse_word(&args.word, args.alphabet)?;
    let need_k = || {
        args.k
            .ok_or_else(|| CliError::Usage("--k is required for this kind".into()))
    };
    match args.kind {
        CheckKind::Primitive => {
            let primitive = word.is_primitive().map_err(CliError::usage)?;
            write_line(out, format!("primitive: {primitive}"))?;
            Ok(if primitive { EXIT_OK } else { EXIT_NONE })
        }
        CheckKind::Kpower => {
            let k = need_k()?;
            match word.find_kpower(k).map_err(CliError::usage)? {
                Some(occ) => {
                    let factor =
                        Word::new(word.symbols()[occ.start..occ.start + occ.len()].to_vec(), word.alphabet_size())
                            .expect("factor of a valid word");
                    write_line(
                        out,
                        format!(
                            "occurrence: start={} period={} exponent={k} factor={factor}",
                            occ.start, occ.period
                        ),
                    )?;
                    Ok(EXIT_NONE)
                }
                None => {
                    write_line(out, "none")?;
                    Ok(EXIT_OK)
                }
            }
        }
        CheckKind::Overlap => match word.find_overlap() {
            Some(occ) => {
                let factor =
                    Word::new(word.symbols()[occ.start..occ.start + occ.len()].to_vec(), word.alphabet_size())
                        .expect("factor of a valid word");
                write_line(
                    out,
                    format!(
                        "occurrence: start={} period={} factor={factor}",
                        occ.start, occ.period
                    ),
                )?;
                Ok(EXIT_NONE)
            }
            None => {
                write_line(out, "none")?;
                Ok(EXIT_OK)
            }
        },
        CheckKind::SimplePower => {
            let k = need_k()?;
            let simple = word.is_simple_kpower(k).map_err(CliError::usage)?;
            write_line(out, format!("simple {k}-power: {simple}"))?;
            Ok(if simple { EXIT_OK } else { EXIT_NONE })
        }
        CheckKind::CircSquarefree => {
            let word = word.with_alphabet(3).map_err(CliError::usage)?;
            let free = word.is_circularly_squarefree().map_err(CliError::usage)?;
            write_line(out, format!("circularly squarefree: {free}"))?;
            Ok(if free { EXIT_OK } else { EXIT_NONE })
        }
    }
}

fn load_dfa(path: &str) -> Result<Dfa, CliError> {
    let text = fs::read_to_string(path)?;
    Dfa::from_json(&text).map_err(CliError::usage)
}

fn search_shortest(args: &SearchArgs, out: &mut dyn Write) -> ExecResult {
    let dfa = load_dfa(&args.dfa)?;
    let constraint = match args.constraint {
        ConstraintKind::Kpower => {
            let k = args.k.ok_or_else(|| {
                CliError::Usage("--k is required for --constraint kpower".into())
            })?;
            Constraint::kpower(k).map_err(CliError::usage)?
        }
        ConstraintKind::Overlap => Constraint::Overlap,
    };
    let options = SearchOptions {
        parallel: args.threads.is_some_and(|t| t > 1),
        verbose: args.verbose,
    };
    let outcome = match args.threads {
        Some(threads) if threads > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(CliError::usage)?;
            pool.install(|| shortest_free_accepted_with(&dfa, &constraint, args.max_len, &options))
        }
        _ => shortest_free_accepted_with(&dfa, &constraint, args.max_len, &options),
    }
    .map_err(CliError::usage)?;
    match outcome {
        SearchOutcome::Found(word) => {
            write_line(out, render_word(&word))?;
            Ok(EXIT_OK)
        }
        SearchOutcome::NoneExists => {
            write_line(out, "none: no such word exists at any length")?;
            Ok(EXIT_NONE)
        }
        SearchOutcome::NoneWithin { max_len } => {
            write_line(out, format!("none within length {max_len}"))?;
            Ok(EXIT_NONE)
        }
    }
}

fn carpi_command(op: &CarpiCommand, out: &mut dyn Write) -> ExecResult {
    match op {
        CarpiCommand::Phi { word } => {
            let word = parse_code_word(word)?;
            let image = carpi::phi(&word).map_err(CliError::usage)?;
            write_line(out, render_word(&image))?;
            Ok(EXIT_OK)
        }
        CarpiCommand::PhiSplit { word } => {
            let word = parse_code_word(word)?;
            let (left, right) = carpi::phi_split(&word).map_err(CliError::usage)?;
            write_line(out, format!("{} {}", render_word(&left), render_word(&right)))?;
            Ok(EXIT_OK)
        }
        CarpiCommand::Invert { word, max_len } => {
            let image = parse_word(word, None)?;
            let preimages = carpi::invert_phi(&image, *max_len).map_err(CliError::usage)?;
            if preimages.is_empty() {
                write_line(out, "none")?;
                return Ok(EXIT_NONE);
            }
            for preimage in &preimages {
                write_line(out, render_codes(preimage))?;
            }
            Ok(EXIT_OK)
        }
        CarpiCommand::BuildPsi { dfa, out: file, budget } => {
            let base = load_dfa(dfa)?;
            let psi = match budget {
                Some(budget) => carpi::build_psi_dfa_with_budget(&base, *budget),
                None => carpi::build_psi_dfa(&base),
            }
            .map_err(CliError::usage)?;
            let json = psi.dfa.to_json();
            match file {
                Some(path) => {
                    fs::write(path, &json)?;
                    eprintln!("wrote {path} ({} states)", psi.state_count());
                }
                None => write!(out, "{json}").map_err(CliError::from)?,
            }
            Ok(EXIT_OK)
        }
        CarpiCommand::ViaPsi { dfa, max_len } => {
            let base = load_dfa(dfa)?;
            match carpi::shortest_overlap_free_via_psi(&base, *max_len).map_err(CliError::usage)? {
                Some(witness) => {
                    write_line(
                        out,
                        format!(
                            "image={} preimage={}",
                            render_word(&witness.image),
                            render_codes(&witness.preimage)
                        ),
                    )?;
                    Ok(EXIT_OK)
                }
                None => {
                    write_line(out, "none")?;
                    Ok(EXIT_NONE)
                }
            }
        }
    }
}

fn export_dot(args: &ExportDotArgs, out: &mut dyn Write) -> ExecResult {
    let dfa = load_dfa(&args.dfa)?;
    let dot = dfa.to_dot(None, args.show_dead);
    match &args.out {
        Some(path) => fs::write(path, dot)?,
        None => write!(out, "{dot}").map_err(CliError::from)?,
    }
    Ok(EXIT_OK)
}

fn verify_command(args: &VerifyArgs, out: &mut dyn Write) -> ExecResult {
    let suite = match args.suite {
        SuiteArg::Lemmas => Suite::Lemmas,
        SuiteArg::Theorem7 => Suite::Theorem7,
        SuiteArg::Carpi => Suite::Carpi,
        SuiteArg::All => Suite::All,
    };
    let config = VerifyConfig {
        max_len: args.max_len,
        long: args.long,
    };
    let reports = verify::run_suite(suite, &config);
    for report in &reports {
        write_line(
            out,
            format!(
                "{} instances={} counterexamples={}",
                report.name, report.instances, report.counterexamples
            ),
        )?;
    }
    if matches!(suite, Suite::Theorem7 | Suite::All) {
        let base: Word = "01x3".parse().expect("valid literal");
        for row in verify::growth_table(&base, 3, 4) {
            write_line(
                out,
                format!(
                    "# growth i={} states={} witness={} ratio={:.6}",
                    row.index, row.state_count, row.witness_len, row.ratio
                ),
            )?;
        }
    }
    if verify::all_passed(&reports) {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_NONE)
    }
}
