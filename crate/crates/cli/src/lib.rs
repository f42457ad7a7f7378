//! The `torlink` command line.
//!
//! [`run`] parses arguments, executes one command and writes its report.
//! Reports go to `out` and are deterministic; timings and diagnostics go to
//! `err`. Exit status: 0 success, 1 a mathematical check came out negative,
//! 2 a usage, input or data error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use torlink_core::io::{load_embedding_dir, load_embedding_file, load_graph6_file};
use torlink_core::oracles::{
    is_maxnil, is_mtn, is_nil, is_tn, is_toroidal, petersen_family, ObstructionDb,
};
use torlink_core::search::{
    census_maxnil, certify_order, extract_obstruction_set_s, find_all_mtn_order9,
    find_size19_counterexample, DataSet, SEARCH_ORDER,
};
use torlink_core::torus::{torus_link_linking_number, CycleRange, TorusDiagram};
use torlink_core::{Cycle, Graph};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "torlink",
    version,
    about = "Toroidal and linkless embedding checks for small graphs"
)]
struct Cli {
    /// Directory holding obstruction and maxnIL graph6 files.
    #[arg(long, global = true, env = "TORLINK_DATA_DIR", value_name = "PATH")]
    data_dir: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate predicates on a graph (all of them if none is selected).
    Check(CheckArgs),
    /// List the Petersen family.
    Petersen,
    /// Linking number of the torus link T(m, n).
    #[command(allow_negative_numbers = true)]
    LinkingNumber { m: i64, n: i64 },
    /// Crossings and slope of cycles in an embedding, e.g. `1-4-5`.
    Slope {
        embedding: PathBuf,
        #[arg(required = true)]
        cycles: Vec<String>,
    },
    /// List linked pairs of disjoint cycles in an embedding.
    FindLinks {
        embedding: PathBuf,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// Check that an embedding is linkless; exits 1 if it is not.
    VerifyEmbedding {
        embedding: PathBuf,
        #[command(flatten)]
        range: RangeArgs,
    },
    /// All maxnIL graphs of order n (3 to 8).
    CensusMaxnil { n: usize },
    /// Order-9 MTN census from the files in the data directory.
    MtnCensus,
    /// Match MTN graphs against embeddings and check each is linkless.
    Certify {
        mtn_graphs: PathBuf,
        embeddings_dir: PathBuf,
    },
    /// Load and re-verify every file in the data directory.
    ValidateData,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// graph6 string.
    #[arg(required_unless_present = "file", conflicts_with = "file")]
    graph: Option<String>,
    /// Check every graph in a graph6 file instead.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    nil: bool,
    #[arg(long)]
    toroidal: bool,
    #[arg(long)]
    tn: bool,
    #[arg(long)]
    maxnil: bool,
    #[arg(long)]
    mtn: bool,
}

#[derive(Args, Debug)]
struct RangeArgs {
    #[arg(long, value_name = "LEN")]
    min_cycle: Option<usize>,
    #[arg(long, value_name = "LEN")]
    max_cycle: Option<usize>,
}

impl RangeArgs {
    fn resolve(&self, order: usize) -> CycleRange {
        let d = CycleRange::for_order(order);
        CycleRange {
            min: self.min_cycle.unwrap_or(d.min),
            max: self.max_cycle.unwrap_or(d.max),
        }
    }
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            let _ = writeln!(err, "error: --jobs must be at least 1");
            return EXIT_ERROR;
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ERROR;
        }
    };
    let mut report = Vec::new();
    let start = Instant::now();
    let result = pool.install(|| dispatch(&cli, &mut report));
    let _ = out.write_all(&report);
    let _ = writeln!(err, "elapsed {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_NEGATIVE,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

/// `Ok(false)` marks a negative mathematical outcome.
fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> anyhow::Result<bool> {
    let ok = match &cli.command {
        Command::Check(args) => check(args, cli.data_dir.as_deref(), out)?,
        Command::Petersen => {
            for g in petersen_family().graphs() {
                writeln!(
                    out,
                    "{} order={} size={}",
                    g.to_graph6(),
                    g.order(),
                    g.size()
                )?;
            }
            true
        }
        Command::LinkingNumber { m, n } => {
            writeln!(out, "{}", torus_link_linking_number(*m, *n)?)?;
            true
        }
        Command::Slope { embedding, cycles } => {
            let d = load_embedding_file(embedding)?;
            for text in cycles {
                let c = parse_cycle(d.graph(), text)?;
                let (p, q) = d.cycle_crossings(&c);
                writeln!(out, "{c} crossings=({p},{q}) slope={}", d.cycle_slope(&c))?;
            }
            true
        }
        Command::FindLinks { embedding, range } => {
            let d = load_embedding_file(embedding)?;
            let links = d.find_links_in(range.resolve(d.graph().order()));
            for w in &links {
                writeln!(out, "link {w}")?;
            }
            writeln!(out, "links {}", links.len())?;
            true
        }
        Command::VerifyEmbedding { embedding, range } => {
            let d = load_embedding_file(embedding)?;
            verify_embedding(&d, range.resolve(d.graph().order()), out)?
        }
        Command::CensusMaxnil { n } => {
            let found = census_maxnil(*n)?;
            for g in &found {
                writeln!(out, "{} size={}", g.to_graph6(), g.size())?;
            }
            writeln!(out, "maxnil order={n} count={}", found.len())?;
            true
        }
        Command::MtnCensus => mtn_census(data_dir(cli)?, out)?,
        Command::Certify {
            mtn_graphs,
            embeddings_dir,
        } => {
            let graphs = load_graph6_file(mtn_graphs)?;
            let loaded = load_embedding_dir(embeddings_dir)?;
            let names: Vec<String> = loaded
                .iter()
                .map(|(p, _)| {
                    p.file_name()
                        .map_or_else(String::new, |n| n.to_string_lossy().into_owned())
                })
                .collect();
            let diagrams: Vec<TorusDiagram> = loaded.into_iter().map(|(_, d)| d).collect();
            let report = certify_order(&graphs, &diagrams);
            out.extend_from_slice(report.render(&names).as_bytes());
            report.passed()
        }
        Command::ValidateData => validate_data(data_dir(cli)?, out)?,
    };
    Ok(ok)
}

fn data_dir(cli: &Cli) -> anyhow::Result<&Path> {
    cli.data_dir
        .as_deref()
        .ok_or_else(|| anyhow!("this command needs --data-dir (or TORLINK_DATA_DIR)"))
}

fn load_db(dir: Option<&Path>) -> anyhow::Result<ObstructionDb> {
    match dir {
        Some(d) => ObstructionDb::load(d).with_context(|| format!("loading {}", d.display())),
        None => Ok(ObstructionDb::builtin()),
    }
}

fn check(args: &CheckArgs, dir: Option<&Path>, out: &mut Vec<u8>) -> anyhow::Result<bool> {
    let graphs = match (&args.graph, &args.file) {
        (Some(s), _) => {
            vec![Graph::from_graph6(s.trim()).map_err(|e| anyhow!("bad graph6 {s:?}: {e}"))?]
        }
        (None, Some(path)) => load_graph6_file(path)?,
        (None, None) => bail!("no graph given"),
    };
    let all = !(args.nil || args.toroidal || args.tn || args.maxnil || args.mtn);
    let needs_db = all || args.toroidal || args.tn || args.mtn;
    let db = if needs_db { Some(load_db(dir)?) } else { None };
    let mut ok = true;
    for g in &graphs {
        writeln!(
            out,
            "graph {} order={} size={}",
            g.to_graph6(),
            g.order(),
            g.size()
        )?;
        let mut report = |name: &str, value: bool| -> std::io::Result<()> {
            ok &= value;
            writeln!(out, "{name}: {value}")
        };
        if all || args.nil {
            report("nIL", is_nil(g))?;
        }
        if let Some(db) = &db {
            if all || args.toroidal {
                report("toroidal", is_toroidal(g, db)?)?;
            }
            if all || args.tn {
                report("TN", is_tn(g, db)?)?;
            }
        }
        if all || args.maxnil {
            report("maxnIL", is_maxnil(g))?;
        }
        if let Some(db) = &db {
            if all || args.mtn {
                report("MTN", is_mtn(g, db)?)?;
            }
        }
    }
    Ok(ok)
}

fn parse_cycle(g: &Graph, text: &str) -> anyhow::Result<Cycle> {
    let vertices = text
        .split(['-', ','])
        .map(|w| match w.trim().parse::<usize>() {
            Ok(v) if (1..=g.order()).contains(&v) => Ok(v - 1),
            _ => Err(anyhow!("bad vertex {w:?} in cycle {text:?}")),
        })
        .collect::<anyhow::Result<Vec<usize>>>()?;
    Cycle::new(g, vertices).with_context(|| format!("cycle {text:?}"))
}

fn verify_embedding(
    d: &TorusDiagram,
    range: CycleRange,
    out: &mut Vec<u8>,
) -> anyhow::Result<bool> {
    let g = d.graph();
    writeln!(
        out,
        "graph {} order={} size={}",
        g.to_graph6(),
        g.order(),
        g.size()
    )?;
    for c in d.slope_conflicts(range) {
        writeln!(out, "warning {c}")?;
    }
    let links = d.find_links_in(range);
    for w in &links {
        writeln!(out, "link {w}")?;
    }
    if links.is_empty() {
        writeln!(out, "linkless")?;
    } else {
        writeln!(out, "linked ({} pairs)", links.len())?;
    }
    Ok(links.is_empty())
}

fn mtn_census(dir: &Path, out: &mut Vec<u8>) -> anyhow::Result<bool> {
    let data = DataSet::load(dir)?;
    let ctx = data.search_context()?;
    let s = extract_obstruction_set_s(&ctx)?;
    writeln!(out, "obstruction_set_s {}", s.graphs.len())?;
    for h in &s.graphs {
        writeln!(out, "S {} size={}", h.to_graph6(), h.size())?;
    }
    for h in &s.order8_minors {
        writeln!(out, "order8_minor {}", h.to_graph6())?;
    }
    let counterexample = find_size19_counterexample(&s, ctx.db())?;
    match &counterexample {
        None => writeln!(out, "size19_exclusion true")?,
        Some(ce) => writeln!(
            out,
            "size19_exclusion false at {} minus {}-{}",
            ce.obstruction.to_graph6(),
            ce.removed.0 + 1,
            ce.removed.1 + 1
        )?,
    }
    let report = find_all_mtn_order9(&ctx)?;
    out.extend_from_slice(report.render().as_bytes());
    Ok(counterexample.is_none())
}

fn validate_data(dir: &Path, out: &mut Vec<u8>) -> anyhow::Result<bool> {
    let data = DataSet::load(dir)?;
    for (k, graphs) in data.db.orders() {
        writeln!(out, "obstructions order={k} count={}", graphs.len())?;
    }
    data.db.validate()?;
    writeln!(out, "obstructions minor-minimal: ok")?;
    match &data.maxnil_order9 {
        Some(_) if !data.db.supports(SEARCH_ORDER) => {
            bail!("maxnIL list present but no order-{SEARCH_ORDER} obstructions to classify it")
        }
        Some(_) => {
            let ctx = data.search_context()?;
            writeln!(
                out,
                "maxnil order=9 toroidal={} nontoroidal={}",
                ctx.toroidal_maxnil().len(),
                ctx.nontoroidal_maxnil().len()
            )?;
        }
        None => writeln!(out, "maxnil order=9 absent")?,
    }
    Ok(true)
}
