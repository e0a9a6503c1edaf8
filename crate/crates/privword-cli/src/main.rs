//! Batch command-line surface: analyze finite words, profile generated
//! prefixes, print the Thue-Morse even-length table, and scan profiles for
//! zero gaps.
//!
//! Exit codes: 0 on success, 1 when a requested verification (`--check`)
//! fails, 2 on usage or input errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use privword_cli::output::{AnalyzeDoc, Format, GapsDoc, ProfileDoc};
use privword::generators::WordSource;
use privword::palindromes::richness_report;
use privword::privileged::privileged_factors;
use privword::profiler::{profile_source, profile_word, scan_zero_runs, thue_morse_even_table, ProfilerOptions, Statistic};
use privword::qcomplexity::{jsp_check, ppal_check};
use privword::returns::complete_return_factors;
use privword::{Alphabet, Word};

#[derive(Parser)]
#[command(name = "privword", version, about = "Privileged-word analyzer and complexity profiler")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Size of the worker pool for per-length computations.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Token used to render the empty word in tables.
    #[arg(long, global = true, default_value = "EPS")]
    eps_token: String,
}

#[derive(Args)]
struct WordInput {
    /// Word given inline.
    #[arg(long, conflicts_with = "file")]
    word: Option<String>,
    /// File with one word per line ('-' for stdin).
    #[arg(long)]
    file: Option<String>,
    /// Declared alphabet (characters in order); inferred when omitted.
    #[arg(long)]
    alphabet: Option<String>,
    /// Accept the empty word (rendered with the eps token).
    #[arg(long)]
    allow_empty: bool,
}

#[derive(Args)]
struct SizingOpts {
    /// Minimum prefix-length-to-n ratio for exact rows.
    #[arg(long, default_value_t = 64)]
    cushion: usize,
    /// Hard cap on generated prefix length, in symbols.
    #[arg(long, default_value_t = 1 << 22)]
    max_prefix: usize,
}

impl SizingOpts {
    fn to_options(&self) -> ProfilerOptions {
        ProfilerOptions {
            cushion: self.cushion.max(1),
            max_prefix: self.max_prefix,
            stable_rounds: 2,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Factor-class report: privileged/palindromic/closed counts, richness
    /// and C-poorness.
    Analyze {
        #[command(flatten)]
        input: WordInput,
    },
    /// Complexity profile of a generated source or a finite word.
    Profile {
        /// Generated source: tm, fibonacci, alpha, standard:d1,d2,...,
        /// episturmian:letters, periodic:u,v.
        #[arg(long, conflicts_with_all = ["word", "file"])]
        source: Option<String>,
        #[command(flatten)]
        input: WordInput,
        /// Largest factor length to count.
        #[arg(long)]
        nmax: usize,
        /// What to count: privileged, palindrome, letter-power, or factor.
        #[arg(long, default_value = "privileged")]
        property: String,
        #[command(flatten)]
        sizing: SizingOpts,
        /// Verify the profile shape; a failed check exits with code 1.
        #[arg(long, value_parser = ["jsp", "ppal"])]
        check: Option<String>,
    },
    /// Even-length privileged counts of the Thue-Morse word.
    TmTable {
        /// Largest (even) length.
        #[arg(long, default_value_t = 70)]
        nmax: usize,
        #[command(flatten)]
        sizing: SizingOpts,
    },
    /// Maximal zero runs of a profile of a generated source.
    ScanGaps {
        #[arg(long)]
        source: String,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, default_value = "privileged")]
        property: String,
        #[command(flatten)]
        sizing: SizingOpts,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_words(input: &WordInput) -> Result<Vec<Word>, String> {
    let alphabet = match &input.alphabet {
        Some(chars) => Some(Alphabet::new(chars.chars()).map_err(|e| e.to_string())?),
        None => None,
    };
    let texts: Vec<String> = if let Some(word) = &input.word {
        vec![word.clone()]
    } else if let Some(path) = &input.file {
        let raw = if path == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
            buf
        } else {
            fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
        };
        if raw.is_empty() && input.allow_empty {
            vec![String::new()]
        } else {
            raw.lines().map(|l| l.trim_end().to_string()).collect()
        }
    } else {
        return Err("one of --word or --file is required".into());
    };

    let mut words = Vec::new();
    for text in texts {
        if text.is_empty() {
            if !input.allow_empty {
                return Err("empty word rejected; pass --allow-empty to analyze ε".into());
            }
            let a = alphabet.clone().unwrap_or_else(Alphabet::binary);
            words.push(Word::empty(a));
            continue;
        }
        let word = match &alphabet {
            Some(a) => Word::from_text(&text, a),
            None => Word::parse(&text),
        }
        .map_err(|e| format!("cannot parse {text:?}: {e}"))?;
        words.push(word);
    }
    if words.is_empty() {
        return Err("no words in input".into());
    }
    Ok(words)
}

fn analyze_word(w: &Word) -> AnalyzeDoc {
    let report = richness_report(w);
    let closed = complete_return_factors(w);
    let privileged_count = privileged_factors(w).len();
    AnalyzeDoc {
        word: w.to_string(),
        length: w.len(),
        privileged_count,
        palindromic_count: report.palindrome_count,
        closed_count: closed.count,
        is_rich: report.is_rich,
        pri_equals_pal: report.pri_equals_pal,
        is_c_poor: closed.is_c_poor,
        counting_law_ok: privileged_count == w.len() + 1,
        witness: report.witness.map(|f| f.to_string()),
    }
}

fn statistic(name: &str) -> Result<Statistic, String> {
    Statistic::parse(name).ok_or_else(|| {
        format!("unknown property {name:?}; expected privileged, palindrome, letter-power or factor")
    })
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Analyze { input } => {
            let words = parse_words(input)?;
            let docs: Vec<AnalyzeDoc> = words.iter().map(analyze_word).collect();
            let text = match cli.format {
                Format::Json => {
                    if docs.len() == 1 {
                        serde_json::to_string_pretty(&docs[0]).unwrap() + "\n"
                    } else {
                        serde_json::to_string_pretty(&docs).unwrap() + "\n"
                    }
                }
                Format::Csv => docs.iter().map(|d| d.to_csv(&cli.eps_token)).collect::<Vec<_>>().join("\n"),
                Format::Table => docs
                    .iter()
                    .map(|d| d.to_table(&cli.eps_token))
                    .collect::<Vec<_>>()
                    .join("\n"),
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile { source, input, nmax, property, sizing, check } => {
            let stat = statistic(property)?;
            let (name, profile) = match source {
                Some(spec) => {
                    let src = WordSource::parse(spec).map_err(|e| e.to_string())?;
                    let profile = profile_source(&src, &stat, *nmax, &sizing.to_options())
                        .map_err(|e| e.to_string())?;
                    (src.name(), profile)
                }
                None => {
                    let words = parse_words(input)?;
                    if words.len() != 1 {
                        return Err("profile expects exactly one word".into());
                    }
                    let w = &words[0];
                    if *nmax > w.len() {
                        eprintln!(
                            "note: nmax {} exceeds |w| = {}; longer rows are zero",
                            nmax,
                            w.len()
                        );
                    }
                    (format!("word:{w}"), profile_word(w, &stat, *nmax))
                }
            };
            if profile.valid_to < profile.n_max() {
                eprintln!(
                    "warning: rows beyond n = {} are not exact at this prefix cap",
                    profile.valid_to
                );
            }
            let doc = ProfileDoc::new(&name, &profile);
            emit(&cli.out, &doc.render(cli.format))?;
            if let Some(check) = check {
                let ok = match check.as_str() {
                    "jsp" => jsp_check(&profile),
                    _ => ppal_check(&profile),
                };
                if !ok {
                    eprintln!("check {check} failed for {name}");
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::TmTable { nmax, sizing } => {
            if *nmax < 2 || nmax % 2 != 0 {
                return Err("tm-table expects an even --nmax >= 2".into());
            }
            let table = thue_morse_even_table(*nmax, &sizing.to_options()).map_err(|e| e.to_string())?;
            let text = match cli.format {
                Format::Json => {
                    #[derive(serde::Serialize)]
                    struct Doc<'a> {
                        name: &'a str,
                        kind: &'a str,
                        rows: &'a [(usize, usize)],
                    }
                    serde_json::to_string_pretty(&Doc {
                        name: "tm",
                        kind: "privileged",
                        rows: &table,
                    })
                    .unwrap()
                        + "\n"
                }
                Format::Csv => {
                    let mut out = String::from("n,count\n");
                    for &(n, c) in &table {
                        out.push_str(&format!("{n},{c}\n"));
                    }
                    out
                }
                Format::Table => {
                    let mut out = String::from("# even-length privileged counts of the Thue-Morse word\n    n  count\n");
                    for &(n, c) in &table {
                        out.push_str(&format!("{n:>5}  {c}\n"));
                    }
                    out
                }
            };
            emit(&cli.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ScanGaps { source, from, to, property, sizing } => {
            if from > to {
                return Err("--from must not exceed --to".into());
            }
            let stat = statistic(property)?;
            let src = WordSource::parse(source).map_err(|e| e.to_string())?;
            let profile =
                profile_source(&src, &stat, *to, &sizing.to_options()).map_err(|e| e.to_string())?;
            if (*from..=*to).any(|n| !profile.is_exact(n)) {
                eprintln!("warning: inexact rows in [{from}, {to}]; raise --max-prefix for full coverage");
            }
            let runs = scan_zero_runs(&profile, *from, *to);
            let doc = GapsDoc {
                name: src.name(),
                kind: profile.kind.as_str().to_string(),
                from: *from,
                to: *to,
                runs,
            };
            emit(&cli.out, &doc.render(cli.format))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
