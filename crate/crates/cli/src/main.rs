use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use cycle_ei::lp::{frac, half_edge_lp, solve};
use cycle_ei::search::{
    find_minimum, find_representation, MinimumOutcome, SearchParams, SearchStatus,
};
use cycle_ei::{
    build, export, profile, verify, ConstructionSpec, ExportFormat, Hypergraph, Variant,
};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cycle-ei",
    version,
    about = "Uniform hypergraphs whose edge intersection hypergraph is the cycle C_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a k-uniform hypergraph with EI(H) = C_n and write it as JSON
    Construct {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// k3, k4-thm5, k4-thm6, k5-lemma-32 or k5-thm9 (default depends on k)
        #[arg(long)]
        variant: Option<String>,
        /// Output file; JSON goes to stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sort hyperedges lexicographically before writing
        #[arg(long)]
        canonical: bool,
    },
    /// Check EI(H) = C_n for a JSON hypergraph; exit status 0 iff it holds
    Verify {
        input: PathBuf,
        /// Expected number of vertices
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Render a JSON hypergraph as Graphviz DOT or canonical JSON
    Export {
        input: PathBuf,
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the half-edge linear program over exact rationals
    Lp {
        /// Add the constraint x5 <= 0 (only (3,2) hyperedges among the 5-section types)
        #[arg(long)]
        no_x5: bool,
    },
    /// Exhaustive search for a small representation
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Edge cap; required unless --minimum is given
        #[arg(long)]
        max_edges: Option<usize>,
        /// Find the least edge count by iterative deepening
        #[arg(long)]
        minimum: bool,
        /// Node budget
        #[arg(long, default_value_t = SearchParams::DEFAULT_BUDGET)]
        budget: u64,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Write the witness hypergraph here as JSON
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Section profile and half-edge capacity of every hyperedge
    Analyze { input: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Construct {
            k,
            n,
            variant,
            out,
            canonical,
        } => construct(k, n, variant.as_deref(), out.as_deref(), canonical),
        Command::Verify { input, n, json } => verify_file(&input, n, json),
        Command::Export { input, format, out } => {
            let format: ExportFormat = format.parse()?;
            let h = read_hypergraph(&input)?;
            emit(out.as_deref(), &export(&h, format))?;
            Ok(0)
        }
        Command::Lp { no_x5 } => {
            let mut p = half_edge_lp();
            if no_x5 {
                p.add_upper_bound("x5", frac(0, 1))?;
            }
            println!("{p}");
            println!("{}", solve(&p));
            Ok(0)
        }
        Command::Search {
            k,
            n,
            max_edges,
            minimum,
            budget,
            threads,
            witness,
        } => {
            if minimum {
                search_minimum(k, n, budget, threads, witness.as_deref())
            } else {
                let Some(max_edges) = max_edges else {
                    bail!("--max-edges is required unless --minimum is given");
                };
                let params = SearchParams::new(k, n, max_edges)
                    .budget(budget)
                    .threads(threads);
                search(params, witness.as_deref())
            }
        }
        Command::Analyze { input } => analyze(&input),
    }
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Hypergraph::from_json(&text)
        .with_context(|| format!("invalid hypergraph file {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn construct(
    k: usize,
    n: usize,
    variant: Option<&str>,
    out: Option<&Path>,
    canonical: bool,
) -> Result<u8> {
    let variant = match variant {
        Some(name) => name.parse::<Variant>()?,
        None => ConstructionSpec::default_variant(k)
            .with_context(|| format!("no construction for k = {k} (supported: 3, 4, 5)"))?,
    };
    let mut h = build(ConstructionSpec::new(k, n, variant)?)?;
    if canonical {
        h = h.canonical();
    }
    emit(out, &h.to_json())?;

    let mut census: BTreeMap<String, usize> = BTreeMap::new();
    for e in h.edges() {
        *census.entry(profile(e, n)?.to_string()).or_default() += 1;
    }
    let census: Vec<String> = census.iter().map(|(p, c)| format!("{p} x{c}")).collect();
    // keep stdout clean for the JSON when no output file is given
    let summary = format!(
        "{}: n = {n}, |E| = {}, profiles: {}",
        variant.name(),
        h.len(),
        census.join(", ")
    );
    if out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(0)
}

fn verify_file(input: &Path, n: Option<usize>, json: bool) -> Result<u8> {
    let h = read_hypergraph(input)?;
    if let Some(n) = n {
        if n != h.n() {
            bail!("file declares n = {}, but --n {n} was given", h.n());
        }
    }
    let report = verify(&h);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    Ok(if report.is_cycle { 0 } else { EXIT_FAILED })
}

fn search(params: SearchParams, witness_path: Option<&Path>) -> Result<u8> {
    let outcome = find_representation(params)?;
    let head = format!(
        "k = {}, n = {}, max edges = {}",
        params.k, params.n, params.max_edges
    );
    match &outcome.status {
        SearchStatus::Exists(h) => {
            println!("{head}: exists ({} edges)", h.len());
            print_witness(h, witness_path)?;
        }
        SearchStatus::NotExists => println!("{head}: not_exists"),
        SearchStatus::BudgetExhausted => println!("{head}: budget_exhausted"),
    }
    println!(
        "nodes explored: {} of {}",
        outcome.nodes_explored, outcome.budget
    );
    Ok(match outcome.status {
        SearchStatus::Exists(_) => 0,
        SearchStatus::NotExists => EXIT_FAILED,
        SearchStatus::BudgetExhausted => EXIT_BUDGET,
    })
}

fn search_minimum(
    k: usize,
    n: usize,
    budget: u64,
    threads: usize,
    witness_path: Option<&Path>,
) -> Result<u8> {
    match find_minimum(k, n, budget, threads)? {
        MinimumOutcome::Minimum { edges, witness } => {
            println!("k = {k}, n = {n}: minimum |E| = {edges}");
            print_witness(&witness, witness_path)?;
            Ok(0)
        }
        MinimumOutcome::NoRepresentation => {
            println!("k = {k}, n = {n}: no representation exists");
            Ok(EXIT_FAILED)
        }
        MinimumOutcome::BudgetExhausted { searched_below } => {
            println!("k = {k}, n = {n}: budget_exhausted (no representation with fewer than {searched_below} edges)");
            Ok(EXIT_BUDGET)
        }
    }
}

fn print_witness(h: &Hypergraph, path: Option<&Path>) -> Result<()> {
    let edges: Vec<String> = h.edges().iter().map(|e| e.to_string()).collect();
    println!("witness: {}", edges.join(" "));
    if let Some(path) = path {
        fs::write(path, h.to_json()).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn analyze(input: &Path) -> Result<u8> {
    let h = read_hypergraph(input)?;
    let n = h.n();
    let mut census: BTreeMap<String, usize> = BTreeMap::new();
    let mut capacity = 0;
    for e in h.edges() {
        match profile(e, n) {
            Ok(p) => {
                println!("{e}  profile {p}  capacity {}", p.half_edge_capacity());
                capacity += p.half_edge_capacity();
                *census.entry(p.to_string()).or_default() += 1;
            }
            Err(err) => println!("{e}  {err}"),
        }
    }
    println!("census:");
    for (p, c) in &census {
        println!("  {p}: {c}");
    }
    println!(
        "total half-edge capacity: {capacity} (a representation of C_{n} needs {})",
        2 * n
    );
    Ok(0)
}
