use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use realplanar::enumerate::{enumerate_graphs, enumerate_lattice_subgraphs};
use realplanar::generators::{self, GridSpec};
use realplanar::harness::{self, frontier, Status, TheoremId, VerifyConfig};
use realplanar::{
    classify, euler_polynomial, fvector_of, parse_edge_list, parse_graph6, write_edge_list,
    write_graph6, FVector, FilterSpec, Graph,
};

/// Classify planar graphs as real or complex and check the claims about them.
#[derive(Parser)]
#[command(name = "realplanar", version)]
struct Cli {
    /// Worker threads for parallel sweeps (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graphs read from a file or stdin.
    Classify {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = Report::Json)]
        output: Report,
    },
    /// Emit a member of a named family.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Vertex count, or the second grid dimension.
        #[arg(long)]
        n: Option<usize>,
        /// First grid dimension (defaults to n).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Stream one graph per isomorphism class.
    Enumerate {
        #[arg(long, required_unless_present = "lattice")]
        n: Option<usize>,
        /// Comma list: connected, biconnected, triangle-free, planar, bipartite.
        #[arg(long, default_value = "")]
        filter: String,
        /// Inclusive edge range lo:hi.
        #[arg(long)]
        edges: Option<String>,
        /// Exact f-vector f0,f1,f2.
        #[arg(long)]
        fvector: Option<String>,
        /// Enumerate lattice subgraphs with lo:hi vertices instead.
        #[arg(long, conflicts_with_all = ["n", "filter", "edges", "fvector"])]
        lattice: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
        format: GraphFormat,
    },
    /// Run verifiers and print their reports as a JSON array.
    Verify {
        /// 1, 2, 3, 4, 5, corollary, lemma2, small or all.
        #[arg(long, default_value = "all")]
        theorem: String,
        /// Upper end of the arithmetic scans.
        #[arg(long, default_value_t = harness::DEFAULT_BOUND)]
        bound: u64,
        /// Largest lattice subgraph order swept.
        #[arg(long, default_value_t = harness::DEFAULT_LATTICE_MAX)]
        lattice_max: usize,
    },
    /// Print the real/complex frontier per vertex count as CSV.
    Sweep {
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Report {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Grid,
    Triangulation,
    Fig2,
}

/// Errors that map to exit code 2.
struct Usage(anyhow::Error);

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, Usage> {
    let out = io::stdout().lock();
    let mut out = BufWriter::new(out);
    let code = match command {
        Command::Classify {
            file,
            format,
            output,
        } => classify_cmd(&mut out, file, format, output),
        Command::Gen {
            family,
            n,
            m,
            format,
        } => gen_cmd(&mut out, family, n, m, format),
        Command::Enumerate {
            n,
            filter,
            edges,
            fvector,
            lattice,
            format,
        } => match lattice {
            Some(range) => lattice_cmd(&mut out, &range),
            None => enumerate_cmd(
                &mut out,
                n.expect("clap requires n"),
                &filter,
                edges,
                fvector,
                format,
            ),
        },
        Command::Verify {
            theorem,
            bound,
            lattice_max,
        } => verify_cmd(&mut out, &theorem, VerifyConfig { bound, lattice_max }),
        Command::Sweep { bound } => sweep_cmd(&mut out, bound),
    }
    .map_err(Usage)?;
    out.flush().map_err(|e| Usage(e.into()))?;
    Ok(code)
}

fn read_input(file: Option<PathBuf>) -> Result<String> {
    match file {
        Some(path) => {
            fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            Ok(s)
        }
    }
}

fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>> {
    let graph6 = match format {
        InputFormat::Graph6 => true,
        InputFormat::Edgelist => false,
        // an edge list starts with a decimal header
        InputFormat::Auto => !text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .is_some_and(|l| l.split_whitespace().all(|t| t.parse::<usize>().is_ok())),
    };
    if graph6 {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .enumerate()
            .map(|(i, l)| parse_graph6(l).with_context(|| format!("graph6 line {}", i + 1)))
            .collect()
    } else {
        Ok(vec![parse_edge_list(text).context("edge list")?])
    }
}

fn classify_cmd(
    out: &mut impl Write,
    file: Option<PathBuf>,
    format: InputFormat,
    output: Report,
) -> Result<u8> {
    let graphs = parse_graphs(&read_input(file)?, format)?;
    if graphs.is_empty() {
        bail!("no graph in input");
    }
    for g in &graphs {
        let f = fvector_of(g)?;
        let p = euler_polynomial(f);
        let roots = p.roots()?;
        let verdict = classify(f);
        match output {
            Report::Json => {
                let value = json!({
                    "fvector": f,
                    "polynomial": p.coefficients,
                    "delta": p.delta,
                    "roots": roots.roots,
                    "verdict": verdict,
                });
                writeln!(out, "{value}")?;
            }
            Report::Text => {
                let [a, b, c, d] = p.coefficients;
                writeln!(out, "f-vector   {f}")?;
                writeln!(out, "polynomial {a}x^3 + {b}x^2 + {c}x + {d}")?;
                writeln!(out, "delta      {}", p.delta)?;
                let shown: Vec<String> = roots
                    .roots
                    .iter()
                    .map(|r| format!("{:.6}{:+.6}i", r.re, r.im))
                    .collect();
                writeln!(out, "roots      {}", shown.join(", "))?;
                writeln!(out, "verdict    {verdict}")?;
            }
        }
    }
    Ok(0)
}

fn emit(out: &mut impl Write, g: &Graph, format: GraphFormat) -> Result<()> {
    match format {
        GraphFormat::Graph6 => writeln!(out, "{}", write_graph6(g))?,
        GraphFormat::Edgelist => write!(out, "{}", write_edge_list(g))?,
        GraphFormat::Json => writeln!(
            out,
            "{}",
            json!({ "n": g.order(), "edges": g.edges().collect::<Vec<_>>() })
        )?,
    }
    Ok(())
}

fn gen_cmd(
    out: &mut impl Write,
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    format: GraphFormat,
) -> Result<u8> {
    let need = || n.ok_or_else(|| anyhow!("--n is required for this family"));
    let g = match family {
        Family::Path => generators::path(need()?)?,
        Family::Cycle => generators::cycle(need()?)?,
        Family::Triangulation => generators::maximal_triangulation(need()?)?,
        Family::Grid => {
            let n = need()?;
            generators::grid(GridSpec::new(m.unwrap_or(n), n)?)?
        }
        Family::Fig2 => generators::fig2_witness(),
    };
    emit(out, &g, format)?;
    Ok(0)
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| anyhow!("expected lo:hi, got {s:?}"))?;
    Ok((lo.trim().parse()?, hi.trim().parse()?))
}

fn parse_fvector(s: &str) -> Result<FVector> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .with_context(|| format!("bad f-vector {s:?}"))?;
    match parts[..] {
        [a, b, c] => Ok(FVector::new(a, b, c)),
        _ => bail!("f-vector needs three components, got {s:?}"),
    }
}

fn enumerate_cmd(
    out: &mut impl Write,
    n: usize,
    filter: &str,
    edges: Option<String>,
    fvector: Option<String>,
    format: GraphFormat,
) -> Result<u8> {
    let mut spec: FilterSpec = filter.parse()?;
    if let Some(e) = edges {
        let (lo, hi) = parse_range(&e)?;
        spec = spec.edge_range(lo, hi);
    }
    if let Some(f) = fvector {
        spec = spec.exact_fvector(parse_fvector(&f)?);
    }
    for g in enumerate_graphs(n, &spec)? {
        emit(out, &g, format)?;
    }
    Ok(0)
}

fn lattice_cmd(out: &mut impl Write, range: &str) -> Result<u8> {
    let (lo, hi) = parse_range(range)?;
    for lg in enumerate_lattice_subgraphs(lo, hi)? {
        writeln!(out, "{}", serde_json::to_string(&lg)?)?;
    }
    Ok(0)
}

fn verify_cmd(out: &mut impl Write, theorem: &str, config: VerifyConfig) -> Result<u8> {
    let ids: Vec<TheoremId> = if theorem == "all" {
        TheoremId::ALL.to_vec()
    } else {
        vec![theorem.parse().map_err(|e: String| anyhow!(e))?]
    };
    let reports = harness::verify_many(&ids, &config);
    serde_json::to_writer_pretty(&mut *out, &reports)?;
    writeln!(out)?;
    for r in &reports {
        eprintln!(
            "{:<13} {:?} ({:.2}s)",
            r.theorem.to_string(),
            r.status,
            r.seconds
        );
    }
    Ok(if reports.iter().any(|r| r.status == Status::Refuted) {
        1
    } else {
        0
    })
}

fn sweep_cmd(out: &mut impl Write, bound: u64) -> Result<u8> {
    let mut w = csv::Writer::from_writer(out);
    for row in frontier(bound) {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(0)
}
