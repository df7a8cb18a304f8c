//! Command-line front end for the graph polynomial library.
//!
//! Exit codes: 0 success, 1 failed identity check, 2 parse error, 3 size
//! guard exceeded, 4 invalid flag combination, 5 transform assertion
//! failure, 6 reconstruction found zero or multiple candidates.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use graphpoly::checks::{identity_suite, SuiteError};
use graphpoly::encodings::{
    brute_force_reconstruct_check, degree_histogram_from_tcp, parse_deck, polynomial_deck,
    reconstruct_lower_coeffs, write_deck, EncodingError,
};
use graphpoly::invariants::{
    bad_coloring, bad_coloring_recurrence, bivariate_chromatic, eep_recurrence, potts_recurrence,
    potts_subset, scomp_subset, scp_induced, scp_recurrence, scp_subset, tcp_expansion,
    tcp_recurrence, InvariantError, SizeGuard,
};
use graphpoly::poly::{PolyError, Polynomial};
use graphpoly::transforms::{eep_from_scp, eep_from_tcp, scp_from_eep, tcp_from_eep, TransformError};
use graphpoly::{Graph, GraphError, GraphFormat};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;
const EXIT_FLAGS: u8 = 4;
const EXIT_TRANSFORM: u8 = 5;
const EXIT_RECONSTRUCT: u8 = 6;

#[derive(Parser)]
#[command(
    name = "graphpoly",
    version,
    about = "Compute, transform, check and reconstruct graph polynomials with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a graph polynomial in canonical text (or JSON) form.
    Compute(ComputeArgs),
    /// Run the exact identity suite on a graph or a labeled-graph corpus.
    Check(CheckArgs),
    /// Convert a polynomial between the eep, scp and tcp forms.
    Transform(TransformArgs),
    /// Emit the polynomial deck of a graph (vertex count, then one
    /// canonical polynomial per vertex-deleted subgraph).
    Deck(DeckArgs),
    /// Reconstruct a polynomial from a deck file.
    Reconstruct(ReconstructArgs),
    /// Print the degree histogram of a graph as `degree:count` lines.
    Degseq(DegseqArgs),
}

#[derive(Args)]
struct GraphSource {
    /// Path to a graph file (edge list or graph6, detected by content).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Inline edge list, `;` instead of newlines: "n m;u w;u w;...".
    #[arg(long)]
    edges: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Eep,
    Scp,
    Tcp,
    Potts,
    Badcol,
    Bivchrom,
    Scomp,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// The defining enumeration (subsets, induced subgraphs or colorings).
    Def,
    /// The edge recurrence.
    Rec,
    /// Sum of Potts models over induced subgraphs (scp only).
    Induced,
    /// Vertex-subset expansion (tcp only).
    Expansion,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algo::Def => "def",
            Algo::Rec => "rec",
            Algo::Induced => "induced",
            Algo::Expansion => "expansion",
        };
        f.write_str(s)
    }
}

#[derive(Args)]
struct ComputeArgs {
    /// Which polynomial to compute.
    #[arg(long, value_enum)]
    poly: PolyKind,
    /// Which algorithm to use; defaults to the canonical one per polynomial.
    #[arg(long, value_enum)]
    algo: Option<Algo>,
    #[command(flatten)]
    source: GraphSource,
    /// Emit the JSON term list instead of canonical text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Check every labeled simple graph on k vertices: `all-n<k>`, k <= 5.
    #[arg(long)]
    corpus: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PolyForm {
    Eep,
    Scp,
    Tcp,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    from: PolyForm,
    #[arg(long, value_enum)]
    to: PolyForm,
    /// Vertex count of the underlying graph; required whenever the scp
    /// form is involved.
    #[arg(long)]
    n: Option<usize>,
    /// Path to a polynomial file in canonical text form.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct DeckArgs {
    #[command(flatten)]
    source: GraphSource,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Path to a deck file: first line `n`, then n polynomial lines.
    #[arg(long)]
    deck: PathBuf,
    /// Also search all labeled simple graphs for matching decks and print
    /// the full polynomial when the match is unique.
    #[arg(long)]
    brute_force: bool,
}

#[derive(Args)]
struct DegseqArgs {
    #[command(flatten)]
    source: GraphSource,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
        }
    }

    fn flags(message: impl Into<String>) -> CliError {
        CliError::new(EXIT_FLAGS, message)
    }

    fn parse(message: impl Into<String>) -> CliError {
        CliError::new(EXIT_PARSE, message)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> CliError {
        CliError::parse(e.to_string())
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> CliError {
        match e {
            PolyError::Parse { .. } => CliError::parse(e.to_string()),
            other => CliError::new(EXIT_TRANSFORM, other.to_string()),
        }
    }
}

impl From<InvariantError> for CliError {
    fn from(e: InvariantError) -> CliError {
        match e {
            InvariantError::SizeGuardExceeded { .. }
            | InvariantError::EnumerationGuardExceeded { .. } => {
                CliError::new(EXIT_GUARD, e.to_string())
            }
            InvariantError::Graph(g) => g.into(),
            InvariantError::Poly(p) => p.into(),
            other => CliError::parse(other.to_string()),
        }
    }
}

impl From<TransformError> for CliError {
    fn from(e: TransformError) -> CliError {
        match e {
            TransformError::Poly(PolyError::Parse { .. }) => CliError::parse(e.to_string()),
            other => CliError::new(EXIT_TRANSFORM, other.to_string()),
        }
    }
}

impl From<EncodingError> for CliError {
    fn from(e: EncodingError) -> CliError {
        match e {
            EncodingError::SizeGuardExceeded { .. } => CliError::new(EXIT_GUARD, e.to_string()),
            EncodingError::Invariant(inner) => inner.into(),
            EncodingError::Graph(inner) => inner.into(),
            EncodingError::Poly(inner) => inner.into(),
            other => CliError::parse(other.to_string()),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> CliError {
        match e {
            SuiteError::Invariant(inner) => inner.into(),
            SuiteError::Encoding(inner) => inner.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let guard = guard_from_env()?;
    match cli.command {
        Command::Compute(args) => cmd_compute(args, &guard),
        Command::Check(args) => cmd_check(args, &guard),
        Command::Transform(args) => cmd_transform(args),
        Command::Deck(args) => cmd_deck(args, &guard),
        Command::Reconstruct(args) => cmd_reconstruct(args),
        Command::Degseq(args) => cmd_degseq(args, &guard),
    }
}

/// GP_SIZE_GUARD overrides the edge cap used by the recurrences and subset
/// enumerations.
fn guard_from_env() -> Result<SizeGuard, CliError> {
    match std::env::var("GP_SIZE_GUARD") {
        Err(_) => Ok(SizeGuard::default()),
        Ok(raw) => {
            let max_edges: usize = raw.parse().map_err(|_| {
                CliError::parse(format!("GP_SIZE_GUARD must be an integer, got {raw:?}"))
            })?;
            Ok(SizeGuard::with_max_edges(max_edges))
        }
    }
}

fn load_graph(source: &GraphSource) -> Result<Graph, CliError> {
    let supplied = [
        source.graph.is_some(),
        source.g6.is_some(),
        source.edges.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if supplied != 1 {
        return Err(CliError::flags(
            "exactly one of --graph, --g6, --edges is required",
        ));
    }
    if let Some(path) = &source.graph {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
        let format = detect_format(&text);
        return Ok(Graph::parse(&text, format)?);
    }
    if let Some(g6) = &source.g6 {
        return Ok(Graph::parse(g6, GraphFormat::Graph6)?);
    }
    let inline = source.edges.as_ref().expect("one source is set");
    let text = inline.replace(';', "\n");
    Ok(Graph::parse(&text, GraphFormat::EdgeList)?)
}

/// Edge list lines start with a digit (or comment); graph6 bytes never do.
fn detect_format(text: &str) -> GraphFormat {
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with(|c: char| c.is_ascii_digit()) {
            return GraphFormat::EdgeList;
        }
        return GraphFormat::Graph6;
    }
    GraphFormat::EdgeList
}

fn cmd_compute(args: ComputeArgs, guard: &SizeGuard) -> Result<ExitCode, CliError> {
    let algo = args.algo.unwrap_or(match args.poly {
        PolyKind::Eep => Algo::Rec,
        PolyKind::Tcp => Algo::Expansion,
        _ => Algo::Def,
    });
    let g = load_graph(&args.source)?;
    let poly = match (args.poly, algo) {
        (PolyKind::Eep, Algo::Rec) => eep_recurrence(&g, guard)?,
        (PolyKind::Scp, Algo::Def) => scp_subset(&g, guard)?,
        (PolyKind::Scp, Algo::Induced) => scp_induced(&g, guard)?,
        (PolyKind::Scp, Algo::Rec) => scp_recurrence(&g, guard)?,
        (PolyKind::Tcp, Algo::Expansion) => tcp_expansion(&g, guard)?,
        (PolyKind::Tcp, Algo::Rec) => tcp_recurrence(&g, guard)?,
        (PolyKind::Potts, Algo::Def) => potts_subset(&g, guard)?,
        (PolyKind::Potts, Algo::Rec) => potts_recurrence(&g, guard)?,
        (PolyKind::Badcol, Algo::Def) => bad_coloring(&g, guard)?,
        (PolyKind::Badcol, Algo::Rec) => bad_coloring_recurrence(&g, guard)?,
        (PolyKind::Bivchrom, Algo::Def) => bivariate_chromatic(&g, guard)?,
        (PolyKind::Scomp, Algo::Def) => scomp_subset(&g, guard)?,
        (_, algo) => {
            return Err(CliError::flags(format!(
                "--algo {algo} is not defined for this polynomial"
            )))
        }
    };
    if args.json {
        println!("{}", poly.to_json_text());
    } else {
        println!("{}", poly.to_canonical_text());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(args: CheckArgs, guard: &SizeGuard) -> Result<ExitCode, CliError> {
    let graph_sources = [
        args.source.graph.is_some(),
        args.source.g6.is_some(),
        args.source.edges.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    match (&args.corpus, graph_sources) {
        (Some(_), 0) => {}
        (None, _) => return check_single(&load_graph(&args.source)?, guard),
        (Some(_), _) => {
            return Err(CliError::flags(
                "--corpus cannot be combined with a graph source",
            ))
        }
    }
    let spec = args.corpus.expect("corpus is set");
    let k: u32 = spec
        .strip_prefix("all-n")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CliError::parse(format!("invalid corpus {spec:?}, expected all-n<k>")))?;
    if k > 5 {
        return Err(CliError::new(
            EXIT_GUARD,
            format!("corpus all-n{k} exceeds the supported k <= 5"),
        ));
    }
    let graphs: Vec<Graph> = graphpoly::corpus::all_labeled_simple_graphs(k).collect();
    let results: Vec<Result<Vec<graphpoly::checks::Check>, CliError>> = graphs
        .par_iter()
        .map(|g| identity_suite(g, guard).map_err(CliError::from))
        .collect();
    let mut all_pass = true;
    for (idx, result) in results.into_iter().enumerate() {
        let checks = result?;
        let failed: Vec<&graphpoly::checks::Check> =
            checks.iter().filter(|c| !c.pass).collect();
        if failed.is_empty() {
            println!("graph {idx:>4}: PASS ({} identities)", checks.len());
        } else {
            all_pass = false;
            let names: Vec<&str> = failed.iter().map(|c| c.name).collect();
            println!(
                "graph {idx:>4}: FAIL ({}/{}): {}",
                failed.len(),
                checks.len(),
                names.join(", ")
            );
        }
    }
    println!(
        "corpus {spec}: {} graphs checked: {}",
        graphs.len(),
        if all_pass { "PASS" } else { "FAIL" }
    );
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}

fn check_single(g: &Graph, guard: &SizeGuard) -> Result<ExitCode, CliError> {
    let checks = identity_suite(g, guard)?;
    let mut all_pass = true;
    for c in &checks {
        if c.pass {
            println!("PASS  {}", c.name);
        } else {
            all_pass = false;
            match &c.detail {
                Some(d) => println!("FAIL  {} ({d})", c.name),
                None => println!("FAIL  {}", c.name),
            }
        }
    }
    println!(
        "{} identities: {}",
        checks.len(),
        if all_pass { "PASS" } else { "FAIL" }
    );
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    })
}

fn cmd_transform(args: TransformArgs) -> Result<ExitCode, CliError> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", args.input.display())))?;
    let input = Polynomial::parse_text(text.trim())?;
    let needs_n = matches!(args.from, PolyForm::Scp) || matches!(args.to, PolyForm::Scp);
    let n = match (needs_n, args.n) {
        (true, None) => {
            return Err(CliError::flags(
                "--n <vertex count> is required when converting to or from scp",
            ))
        }
        (_, n) => n.unwrap_or(0),
    };
    // Route through the edge elimination form.
    let xi = match args.from {
        PolyForm::Eep => input,
        PolyForm::Scp => eep_from_scp(&input, n)?,
        PolyForm::Tcp => eep_from_tcp(&input)?,
    };
    let out = match args.to {
        PolyForm::Eep => xi,
        PolyForm::Scp => scp_from_eep(&xi, n)?,
        PolyForm::Tcp => tcp_from_eep(&xi)?,
    };
    println!("{}", out.to_canonical_text());
    Ok(ExitCode::SUCCESS)
}

fn cmd_deck(args: DeckArgs, guard: &SizeGuard) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.source)?;
    let deck = polynomial_deck(&g, guard)?;
    print!("{}", write_deck(&deck));
    Ok(ExitCode::SUCCESS)
}

fn cmd_reconstruct(args: ReconstructArgs) -> Result<ExitCode, CliError> {
    let text = fs::read_to_string(&args.deck)
        .map_err(|e| CliError::parse(format!("cannot read {}: {e}", args.deck.display())))?;
    let deck = parse_deck(&text)?;
    let partial = reconstruct_lower_coeffs(&deck)?;
    println!("{}", partial.to_canonical_text());
    if args.brute_force {
        let candidates = brute_force_reconstruct_check(&deck)?;
        match candidates.as_slice() {
            [unique] => {
                println!("{}", unique.to_canonical_text());
            }
            [] => {
                return Err(CliError::new(
                    EXIT_RECONSTRUCT,
                    "no labeled graph matches this deck",
                ))
            }
            many => {
                return Err(CliError::new(
                    EXIT_RECONSTRUCT,
                    format!("{} distinct polynomials match this deck", many.len()),
                ))
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_degseq(args: DegseqArgs, guard: &SizeGuard) -> Result<ExitCode, CliError> {
    let g = load_graph(&args.source)?;
    let pt = tcp_expansion(&g, guard)?;
    let hist = degree_histogram_from_tcp(&pt)?;
    for (degree, count) in hist.counts() {
        println!("{degree}:{count}");
    }
    Ok(ExitCode::SUCCESS)
}
