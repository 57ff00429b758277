use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use dipathcover::extremal::{self, Family};
use dipathcover::harness::{self, CampaignConfig, Mode, TheoremId};
use dipathcover::io;
use dipathcover::{
    construct_cover, find_cover_exact, verify_cover, ConstructError, CoverSpec,
    CoverVariant, Digraph,
};

#[derive(Parser)]
#[command(name = "dipathcover", version, about = "Disjoint directed path covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Method {
    Exact,
    Constructive,
}

#[derive(Subcommand)]
enum Command {
    /// Find a cover for one source/sink choice.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// Cover kind: unpaired-mtm, paired-mtm, one-to-many, one-to-one.
        #[arg(long, required_unless_present = "spec")]
        kind: Option<CoverVariant>,
        #[arg(long, value_enum, default_value = "constructive")]
        method: Method,
        #[arg(long = "S", value_delimiter = ',')]
        sources: Vec<usize>,
        #[arg(long = "T", value_delimiter = ',')]
        sinks: Vec<usize>,
        /// Number of paths; only needed for one-to-one.
        #[arg(long)]
        k: Option<usize>,
        /// Read the choice from a spec JSON file instead.
        #[arg(long, conflicts_with_all = ["kind", "sources", "sinks", "k"])]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a cover file against a digraph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Spec JSON; defaults to the spec embedded in the cover file.
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Emit a sharpness witness as digraph JSON, spec JSON and DOT.
    GenExtremal {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "m")]
        k: Option<usize>,
        /// |A| for the paired2-figure1 family.
        #[arg(long)]
        m: Option<usize>,
        /// Write graph.json, spec.json and graph.dot here instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Run a verification campaign for one sufficient condition.
    CheckTheorem {
        #[arg(long)]
        id: TheoremId,
        #[arg(long)]
        mode: Mode,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        k_min: Option<usize>,
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        #[arg(long, default_value_t = 12)]
        oracle_max_order: usize,
        #[arg(long, default_value_t = 1_000_000)]
        instance_cap: usize,
        #[arg(long, default_value_t = 5)]
        max_exhaustive_order: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        threshold_offset: i64,
        #[arg(long)]
        record_timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one sharpness witness from both sides.
    CheckSharpness {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "m")]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print degree statistics of a digraph.
    Degrees {
        #[arg(long)]
        graph: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Digraph> {
    io::digraph_from_json(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build_spec(kind: CoverVariant, sources: Vec<usize>, sinks: Vec<usize>, k: Option<usize>) -> Result<CoverSpec> {
    let spec = match kind {
        CoverVariant::UnpairedMtm => CoverSpec::unpaired(sources, sinks),
        CoverVariant::PairedMtm => CoverSpec::paired(sources, sinks),
        CoverVariant::OneToMany => {
            let [s] = sources[..] else { bail!("one-to-many takes exactly one source") };
            CoverSpec::one_to_many(s, sinks)
        }
        CoverVariant::OneToOne => {
            let ([s], [t]) = (&sources[..], &sinks[..]) else {
                bail!("one-to-one takes exactly one source and one sink")
            };
            let Some(k) = k else { bail!("one-to-one needs --k") };
            CoverSpec::one_to_one(*s, *t, k)
        }
    };
    if let Some(k) = k {
        if k != spec.k() {
            bail!("--k {k} does not match the {} sinks given", spec.k());
        }
    }
    Ok(spec)
}

/// Ok(true) on success or acceptance, Ok(false) on rejection or refutation,
/// Err on usage problems.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Solve { graph, kind, method, sources, sinks, k, spec, out } => {
            let d = read_graph(&graph)?;
            let spec = match spec {
                Some(p) => io::spec_from_json(&read(&p)?)?,
                None => build_spec(kind.expect("required by clap"), sources, sinks, k)?,
            };
            let found = match method {
                Method::Exact => find_cover_exact(&d, &spec)?,
                Method::Constructive => match construct_cover(&d, &spec) {
                    Ok(c) => Some(c.cover),
                    Err(ConstructError::Precondition(p)) => {
                        eprintln!("precondition not met: {p}");
                        return Ok(false);
                    }
                    Err(e) => bail!(e),
                },
            };
            match found {
                Some(cover) => {
                    write_or_print(out.as_deref(), &(io::cover_to_json(&spec, &cover) + "\n"))?;
                    Ok(true)
                }
                None => {
                    eprintln!("no cover exists");
                    Ok(false)
                }
            }
        }
        Command::Verify { graph, spec, cover } => {
            let d = read_graph(&graph)?;
            let (embedded, cover) = io::cover_from_json(&read(&cover)?)?;
            let spec = match spec {
                Some(p) => io::spec_from_json(&read(&p)?)?,
                None => embedded,
            };
            match verify_cover(&d, &spec, &cover) {
                Ok(()) => {
                    println!("accept");
                    Ok(true)
                }
                Err(r) => {
                    println!("reject {:?}: {r}", r.code());
                    Ok(false)
                }
            }
        }
        Command::GenExtremal { family, n, k, m, out_dir } => {
            let w = extremal::generate(family, n, m.or(k).expect("required by clap"))?;
            let graph = io::digraph_to_json(&w.digraph) + "\n";
            let spec = io::spec_to_json(&w.spec) + "\n";
            let dot = io::to_dot(&w.digraph, Some(&w.spec));
            match out_dir {
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    fs::write(dir.join("graph.json"), graph)?;
                    fs::write(dir.join("spec.json"), spec)?;
                    fs::write(dir.join("graph.dot"), dot)?;
                }
                None => {
                    let doc = serde_json::json!({
                        "family": family,
                        "claim": w.claim,
                        "graph": w.digraph,
                        "spec": w.spec,
                    });
                    println!("{doc}");
                    print!("{dot}");
                }
            }
            if !w.in_stated_range {
                eprintln!("note: parameters lie outside the range the family is stated for");
            }
            Ok(true)
        }
        Command::CheckTheorem {
            id,
            mode,
            seed,
            n_min,
            n_max,
            k_min,
            k_max,
            samples,
            oracle_max_order,
            instance_cap,
            max_exhaustive_order,
            threshold_offset,
            record_timing,
            out,
        } => {
            let seed = match (mode, seed) {
                (_, Some(s)) => s,
                (Mode::Random, None) => bail!("random mode needs --seed"),
                (Mode::Exhaustive, None) => 0,
            };
            let defaults = CampaignConfig::new(id, mode);
            let config = CampaignConfig {
                n_min: n_min.unwrap_or(defaults.n_min),
                n_max: n_max.unwrap_or(defaults.n_max),
                k_min: k_min.unwrap_or(defaults.k_min),
                k_max: k_max.unwrap_or(defaults.k_max),
                samples,
                seed,
                oracle_max_order,
                instance_cap,
                max_exhaustive_order,
                threshold_offset,
                record_timing,
                ..defaults
            };
            let report = harness::run_theorem_check(&config)?;
            if let Some(p) = &out {
                fs::write(p, report.to_json())?;
            }
            println!("{}", report.summary_line());
            Ok(report.passed())
        }
        Command::CheckSharpness { family, n, k, m, out } => {
            let report = harness::run_sharpness_check(family, n, m.or(k).expect("required by clap"))?;
            if let Some(p) = &out {
                fs::write(p, report.to_json())?;
            }
            println!("{}", report.summary_line());
            Ok(report.passed())
        }
        Command::Degrees { graph } => {
            let d = read_graph(&graph)?;
            println!("{}", serde_json::to_string(&d.degree_summary())?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
