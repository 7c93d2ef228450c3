//! `necklaces`: list, canonicalize and count necklaces, bracelets, Lyndon
//! words, compositions and de Bruijn sequences.
//!
//! Exit status: 0 on success, 1 when `debruijn --verify` rejects its input,
//! 2 on usage or argument errors.

mod output;
mod parse;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use necklace_core::compositions::{
    counting_vectors, multi_index_compositions, multiset_permutations,
};
use necklace_core::debruijn::{build_de_bruijn, verify_de_bruijn};
use necklace_core::generators::{oracle_fixed_content, GenerationRequest, Mode, Scope};
use necklace_core::{counting, Alphabet, ContentVector, Limits, OrbitKind, Word};

use crate::output::{Format, Listing};

#[derive(Debug, Parser)]
#[command(
    name = "necklaces",
    version,
    about = "Necklaces, bracelets, Lyndon words and de Bruijn sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every word equivalent to WORD under rotation (necklace) or
    /// rotation and reflection (bracelet).
    Orbit(OrbitArgs),
    /// List canonical representatives of a fixed content or a fixed length.
    Generate(GenerateArgs),
    /// Build, print or verify the least de Bruijn sequence.
    Debruijn(DebruijnArgs),
    /// Compositions of a multi-index into a number of multi-indexes.
    Compose(ComposeArgs),
    /// Distinct permutations of a vector with repeated entries.
    Permute(PermuteArgs),
    /// Closed-form class counts.
    Count(CountArgs),
}

#[derive(Debug, Clone, Args)]
struct FormatArgs {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Compat)]
    format: Format,
    /// Leave out the running "( k )" index in compat listings.
    #[arg(long)]
    no_index: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Necklace,
    Bracelet,
}

#[derive(Debug, Args)]
struct OrbitArgs {
    /// Digits such as 001101, or comma separated symbols such as 0,0,11,2.
    #[arg(allow_hyphen_values = true)]
    word: String,
    #[arg(long, value_enum, default_value_t = KindArg::Necklace)]
    kind: KindArg,
    /// First alphabet symbol. Defaults to the smallest symbol of WORD.
    #[arg(long, allow_hyphen_values = true)]
    offset: Option<i64>,
    /// Alphabet size. Defaults to the span of the symbols of WORD.
    #[arg(long)]
    arity: Option<usize>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Necklaces,
    Bracelets,
    Lyndon,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Word length n.
    #[arg(long, requires = "arity", conflicts_with = "content")]
    length: Option<usize>,
    /// Alphabet size m.
    #[arg(long, requires = "length")]
    arity: Option<usize>,
    /// Symbol multiplicities i1,...,im.
    #[arg(long, required_unless_present = "length")]
    content: Option<String>,
    /// First alphabet symbol.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    offset: i64,
    /// Print only the number of representatives.
    #[arg(long)]
    count_only: bool,
    /// Filter all permutations of the content instead of generating directly.
    #[arg(long, requires = "content")]
    oracle: bool,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct DebruijnArgs {
    /// Window length n.
    #[arg(long)]
    length: usize,
    /// Alphabet size m.
    #[arg(long)]
    arity: usize,
    /// First alphabet symbol.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    offset: i64,
    /// Character inserted between the concatenated aperiodic prefixes.
    #[arg(long)]
    sep: Option<char>,
    /// Print the m^n circular windows in positional order.
    #[arg(long, conflicts_with = "verify")]
    windows: bool,
    /// Check a candidate sequence, given inline or as a file path.
    #[arg(long, value_name = "FILE|STRING")]
    verify: Option<String>,
}

#[derive(Debug, Args)]
struct ComposeArgs {
    /// Target multi-index i1,...,im.
    #[arg(long, requires = "terms", conflicts_with = "counting_vectors")]
    target: Option<String>,
    /// Number of multi-indexes in each composition.
    #[arg(long)]
    terms: Option<usize>,
    /// All m-part weak compositions of n, given as n,m.
    #[arg(long, value_name = "N,M", required_unless_present = "target")]
    counting_vectors: Option<String>,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct PermuteArgs {
    /// Digits such as 1011, or comma separated values.
    #[arg(allow_hyphen_values = true)]
    values: String,
    #[command(flatten)]
    format: FormatArgs,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    object: ModeArg,
    #[arg(long)]
    length: usize,
    #[arg(long)]
    arity: usize,
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Rejected,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|s| {
        out.flush()?;
        Ok(s)
    });
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Rejected) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<Status> {
    let limits = Limits::from_env()?;
    match command {
        Command::Orbit(args) => orbit(args, out),
        Command::Generate(args) => generate(args, &limits, out),
        Command::Debruijn(args) => debruijn(args, &limits, out),
        Command::Compose(args) => compose(args, out),
        Command::Permute(args) => permute(args, out),
        Command::Count(args) => count(args, out),
    }
}

fn orbit(args: OrbitArgs, out: &mut impl Write) -> Result<Status> {
    let symbols = parse::symbols(&args.word)?;
    let word = match (args.offset, args.arity) {
        (None, None) => Word::inferred(symbols)?,
        (offset, arity) => {
            let spanning = Alphabet::spanning(&symbols)?;
            let offset = offset.unwrap_or(spanning.offset());
            let arity = match arity {
                Some(a) => a,
                None => usize::try_from(spanning.last() - offset + 1)
                    .context("symbols lie below the alphabet offset")?,
            };
            Word::new(symbols, Alphabet::new(arity, offset)?)?
        }
    };
    let orbit = match args.kind {
        KindArg::Necklace => word.rotation_orbit(),
        KindArg::Bracelet => word.dihedral_orbit(),
    };
    let listing = Listing::words(orbit.members());
    listing.write(out, args.format.format, !args.format.no_index)?;
    Ok(Status::Ok)
}

fn generate(args: GenerateArgs, limits: &Limits, out: &mut impl Write) -> Result<Status> {
    let mode = match args.mode {
        ModeArg::Necklaces => Mode::Necklace,
        ModeArg::Bracelets => Mode::Bracelet,
        ModeArg::Lyndon => Mode::Lyndon,
    };
    let scope = match (&args.content, args.length, args.arity) {
        (Some(content), _, _) => {
            Scope::FixedContent(ContentVector::new(parse::unsigned_list(content)?)?)
        }
        (None, Some(length), Some(arity)) => Scope::All { length, arity },
        _ => bail!("give either --length and --arity, or --content"),
    };
    let list = if args.oracle {
        let Scope::FixedContent(content) = &scope else {
            bail!("--oracle needs --content");
        };
        let kind = match mode {
            Mode::Necklace => OrbitKind::Rotation,
            Mode::Bracelet => OrbitKind::Dihedral,
            Mode::Lyndon => bail!("--oracle supports necklaces and bracelets only"),
        };
        oracle_fixed_content(content, args.offset, kind, limits)?
    } else {
        GenerationRequest {
            mode,
            scope,
            offset: args.offset,
        }
        .run()?
    };
    let listing = Listing::words(&list.words);
    if args.count_only {
        listing.write_count(out, args.format.format)?;
    } else {
        listing.write(out, args.format.format, !args.format.no_index)?;
    }
    Ok(Status::Ok)
}

fn debruijn(args: DebruijnArgs, limits: &Limits, out: &mut impl Write) -> Result<Status> {
    if let Some(candidate) = &args.verify {
        if args.length < 1 || args.arity < 1 {
            bail!("n and m must be positive integers");
        }
        let text = if Path::new(candidate).is_file() {
            fs::read_to_string(candidate).with_context(|| format!("reading {candidate}"))?
        } else {
            candidate.clone()
        };
        let symbols = parse::sequence(&text, args.sep)?;
        let alphabet = Alphabet::new(args.arity, args.offset)?;
        let word = match Word::new(symbols, alphabet) {
            Ok(w) => w,
            Err(e) => {
                eprintln!("not a de Bruijn sequence: {e}");
                return Ok(Status::Rejected);
            }
        };
        let verdict = verify_de_bruijn(&word, args.length);
        if verdict.is_valid() {
            writeln!(out, "valid de Bruijn sequence of order {}", args.length)?;
            return Ok(Status::Ok);
        }
        for defect in &verdict.defects {
            eprintln!("not a de Bruijn sequence: {defect}");
        }
        return Ok(Status::Rejected);
    }

    let seq = build_de_bruijn(args.length, args.arity, args.offset, limits)?;
    if args.windows {
        for w in seq.circular_windows() {
            writeln!(out, "{w}")?;
        }
        return Ok(Status::Ok);
    }
    if seq.needs_separator() && args.sep.is_none() {
        bail!("symbols outside 0..=9 need --sep to be rendered unambiguously");
    }
    writeln!(out, "{}", seq.render(args.sep))?;
    Ok(Status::Ok)
}

fn compose(args: ComposeArgs, out: &mut impl Write) -> Result<Status> {
    let compositions = match (&args.target, args.terms, &args.counting_vectors) {
        (Some(target), Some(terms), None) => {
            multi_index_compositions(&ContentVector::new(parse::unsigned_list(target)?)?, terms)?
        }
        (None, None, Some(nm)) => {
            let (n, m) = parse::pair(nm)?;
            // each counting vector printed as m one-part multi-indexes
            let vectors = counting_vectors(n, m)?;
            let listing = Listing::counting_vectors(&vectors);
            listing.write(out, args.format.format, false)?;
            return Ok(Status::Ok);
        }
        _ => bail!("give either --target with --terms, or --counting-vectors"),
    };
    Listing::compositions(&compositions).write(out, args.format.format, false)?;
    Ok(Status::Ok)
}

fn permute(args: PermuteArgs, out: &mut impl Write) -> Result<Status> {
    let values = parse::symbols(&args.values)?;
    let perms = multiset_permutations(&values)?;
    Listing::sequences(&perms).write(out, args.format.format, !args.format.no_index)?;
    Ok(Status::Ok)
}

fn count(args: CountArgs, out: &mut impl Write) -> Result<Status> {
    let value = match args.object {
        ModeArg::Necklaces => counting::count_necklaces(args.length, args.arity)?,
        ModeArg::Bracelets => counting::count_bracelets(args.length, args.arity)?,
        ModeArg::Lyndon => counting::count_lyndon(args.length, args.arity)?,
    };
    writeln!(out, "{value}")?;
    Ok(Status::Ok)
}
