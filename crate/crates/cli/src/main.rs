use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use dfa_spectra::rank_one::{closed_form_count, expanded_canonical_automaton};
use dfa_spectra::{
    analyze, compile_regex, decode_index, encode_index, is_equitable, language_rank, minimize,
    parse_dfa, quotient_automaton, serialize_dfa, AnalysisReport, Dfa, Error, Partition, Ranker,
};

/// Spectral analysis, counting and ranking for deterministic finite automata.
#[derive(Parser, Debug)]
#[command(name = "dfa-spectra", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Source {
    /// Automaton file in the DFA text format, or `-` for stdin.
    input: Option<String>,

    /// Build the automaton from a regular expression instead of a file.
    #[arg(long)]
    regex: Option<String>,
}

#[derive(Args, Debug)]
struct SourceAndArg {
    /// Automaton file (or `-`), followed by ARG; with --regex, just ARG.
    #[arg(value_name = "INPUT", allow_hyphen_values = true)]
    first: String,

    /// The subcommand's argument (a word or an index).
    #[arg(value_name = "ARG", allow_hyphen_values = true)]
    second: Option<String>,

    /// Build the automaton from a regular expression instead of a file.
    #[arg(long)]
    regex: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rank, nullity, characteristic polynomial and rank-one structure.
    Analyze(Source),
    /// Minimal automaton in the DFA text format.
    Minimize(Source),
    /// Rank of the language (rank of its minimal automaton).
    Rank(Source),
    /// Number of words of length N.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(short = 'n')]
        n: u64,
        /// Evaluate the rank-one closed form; fails unless the language has rank one.
        #[arg(long)]
        closed_form: bool,
    },
    /// Shortlex index of a word.
    RankWord(SourceAndArg),
    /// Word with a given shortlex index.
    UnrankWord(SourceAndArg),
    /// Encode a word as the bytes of its index (hex unless --raw).
    Compress {
        #[command(flatten)]
        args: SourceAndArg,
        #[arg(long)]
        raw: bool,
    },
    /// Decode index bytes read from stdin (hex unless --raw).
    Decompress {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        raw: bool,
    },
    /// Expanded canonical automaton of a rank-one language.
    Expand(Source),
    /// Quotient automaton by a partition such as "0,1|2".
    Quotient {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        partition: String,
    },
    /// Whether a partition such as "0,1|2" is equitable for the adjacency matrix.
    Equitable {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        partition: String,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(format!("{}: {e}", e.code()))
        } else {
            Failure::Domain(e)
        }
    }
}

/// A result printed as plain text or as a JSON value.
enum Output {
    Both { text: String, json: Value },
    Bytes { raw: Vec<u8>, json: Value },
}

fn read_stdin() -> Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    io::stdin()
        .read_to_end(&mut buf)
        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn load(input: Option<&str>, regex: Option<&str>) -> Result<Dfa, Failure> {
    match (input, regex) {
        (Some(_), Some(_)) => Err(Failure::Usage("give either an input file or --regex, not both".into())),
        (None, None) => Err(Failure::Usage("missing input: give a file, `-`, or --regex".into())),
        (None, Some(pattern)) => Ok(compile_regex(pattern)?),
        (Some(path), None) => {
            let text = if path == "-" {
                String::from_utf8(read_stdin()?)
                    .map_err(|_| Failure::Usage("stdin is not UTF-8".into()))?
            } else {
                std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?
            };
            Ok(parse_dfa(&text)?)
        }
    }
}

impl SourceAndArg {
    fn split(&self) -> Result<(Dfa, &str), Failure> {
        match (&self.second, &self.regex) {
            (None, Some(_)) => Ok((load(None, self.regex.as_deref())?, &self.first)),
            (Some(arg), None) => Ok((load(Some(&self.first), None)?, arg)),
            (None, None) => Err(Failure::Usage("missing input: give a file, `-`, or --regex".into())),
            (Some(_), Some(_)) => Err(Failure::Usage("give either an input file or --regex, not both".into())),
        }
    }
}

fn big(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(x) => json!(x),
        Err(_) => json!(n.to_string()),
    }
}

fn report_text(r: &AnalysisReport) -> String {
    let list = |v: &[dfa_spectra::BigInt]| {
        v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    };
    let mut out = format!(
        "states: {}\ntrim: {}\nminimal: {}\nrank: {}\nnullity: {}\ncharPoly: {}\nlanguageRank: {}\n",
        r.state_count, r.is_trim, r.is_minimal, r.rank, r.nullity, r.char_poly, r.language_rank
    );
    match &r.rank_one {
        Some(dec) => out.push_str(&format!(
            "rankOne: in=[{}] out=[{}] lambda={}\n",
            list(&dec.in_vector),
            list(&dec.out_vector),
            dec.lambda
        )),
        None => out.push_str("rankOne: none\n"),
    }
    out.push_str(&format!("expandedNormal: {}\n", r.is_expanded_normal));
    out
}

fn automaton_output(d: &Dfa) -> Output {
    let text = serialize_dfa(d);
    Output::Both {
        json: json!(text),
        text,
    }
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Analyze(s) => {
            let report = analyze(&load(s.input.as_deref(), s.regex.as_deref())?);
            Output::Both {
                text: report_text(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
            }
        }
        Command::Minimize(s) => automaton_output(&minimize(&load(s.input.as_deref(), s.regex.as_deref())?)),
        Command::Rank(s) => {
            let r = language_rank(&load(s.input.as_deref(), s.regex.as_deref())?);
            Output::Both {
                text: r.to_string(),
                json: json!(r),
            }
        }
        Command::Count {
            source,
            n,
            closed_form,
        } => {
            let d = load(source.input.as_deref(), source.regex.as_deref())?;
            let count = if closed_form {
                closed_form_count(&d)?.count(n)
            } else {
                let n = usize::try_from(n).map_err(|_| Failure::Usage("length too large".into()))?;
                dfa_spectra::count_words(&d, n)
            };
            Output::Both {
                text: count.to_string(),
                json: big(&count),
            }
        }
        Command::RankWord(args) => {
            let (d, word) = args.split()?;
            let r = Ranker::new(&d).rank(word)?;
            Output::Both {
                text: r.to_string(),
                json: big(&r),
            }
        }
        Command::UnrankWord(args) => {
            let (d, index) = args.split()?;
            let index: BigUint = index
                .parse()
                .map_err(|_| Failure::Usage(format!("invalid index {index:?}")))?;
            let w = Ranker::new(&d).unrank(&index)?;
            Output::Both {
                json: json!(w),
                text: w,
            }
        }
        Command::Compress { args, raw } => {
            let (d, word) = args.split()?;
            let bytes = encode_index(&Ranker::new(&d).rank(word)?);
            let json = json!(hex::encode(&bytes));
            if raw {
                Output::Bytes { raw: bytes, json }
            } else {
                Output::Both {
                    text: hex::encode(&bytes),
                    json,
                }
            }
        }
        Command::Decompress { source, raw } => {
            if source.input.as_deref() == Some("-") {
                return Err(Failure::Usage("stdin carries the index bytes; read the automaton from a file".into()));
            }
            let d = load(source.input.as_deref(), source.regex.as_deref())?;
            let input = read_stdin()?;
            let bytes = if raw {
                input
            } else {
                let text = String::from_utf8(input)
                    .map_err(|_| Failure::Usage("hex input is not UTF-8".into()))?;
                hex::decode(text.trim())
                    .map_err(|e| Failure::Usage(format!("invalid hex input: {e}")))?
            };
            let w = Ranker::new(&d).unrank(&decode_index(&bytes)?)?;
            Output::Both {
                json: json!(w),
                text: w,
            }
        }
        Command::Expand(s) => automaton_output(&expanded_canonical_automaton(&load(
            s.input.as_deref(),
            s.regex.as_deref(),
        )?)?),
        Command::Quotient { source, partition } => {
            let d = load(source.input.as_deref(), source.regex.as_deref())?;
            let p: Partition = partition.parse()?;
            automaton_output(&quotient_automaton(&d, &p)?)
        }
        Command::Equitable { source, partition } => {
            let d = load(source.input.as_deref(), source.regex.as_deref())?;
            let p: Partition = partition.parse()?;
            let eq = is_equitable(&d.adjacency(), &p)?;
            Output::Both {
                text: eq.to_string(),
                json: json!(eq),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json_mode = cli.format == Format::Json;
    let mut stdout = io::stdout().lock();
    match run(cli.command) {
        Ok(out) => {
            let written = match (out, json_mode) {
                (Output::Both { text, .. }, false) => writeln!(stdout, "{}", text.trim_end_matches('\n')),
                (Output::Both { json, .. } | Output::Bytes { json, .. }, true) => {
                    writeln!(stdout, "{}", json!({"ok": true, "result": json}))
                }
                (Output::Bytes { raw, .. }, false) => stdout.write_all(&raw),
            };
            if written.is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (exit, code, detail) = match failure {
                Failure::Usage(msg) => (2, "UsageError", msg),
                Failure::Domain(e) => (1, e.code(), e.to_string()),
            };
            if json_mode {
                let _ = writeln!(
                    stdout,
                    "{}",
                    json!({"ok": false, "error": {"code": code, "detail": detail}})
                );
            } else if exit == 1 {
                eprintln!("error: {code}: {detail}");
            } else {
                eprintln!("error: {detail}");
            }
            ExitCode::from(exit)
        }
    }
}
