use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use bridgekit::record::Selection;
use bridgekit::{load_structure, DedupMode, NamedStructure, PipelineError, RunConfig};
use bridgekit_core::biquandle::{coloring_lower_bound, count_colorings, kishino_family};
use bridgekit_core::bracket::{jones, kauffman_bracket, verify_virtualization};
use bridgekit_core::bridge::{default_k_max, wirtinger_number};
use bridgekit_core::{ParsedCode, Sign, SignedGaussCode, WirtingerNumber};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bridgekit",
    version,
    about = "Gauss code invariants and bridge-number datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CodeInput {
    /// A Gauss code such as `-1 2 -3 1 -2 3 | - - -`.
    #[arg(allow_hyphen_values = true)]
    code: Option<String>,
    /// File with one code per line (`#` starts a comment).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write results here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and normalize codes and report their structure.
    Parse(CodeInput),
    /// Remove kinks (and, for signed codes, removable bigons).
    Simplify(CodeInput),
    /// Smallest number of seed strands that colors the whole diagram.
    Wirtinger {
        #[command(flatten)]
        io: CodeInput,
        #[arg(long, default_value_t = 1)]
        k_start: usize,
        /// Defaults to the crossing count.
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Coloring counts and the bridge lower bounds they give.
    Colorings {
        #[command(flatten)]
        io: CodeInput,
        /// Quandle table files; R3 when none is given.
        #[arg(long, num_args = 1..)]
        quandle: Vec<PathBuf>,
        /// Biquandle table files; Y when none is given.
        #[arg(long, num_args = 1..)]
        biquandle: Vec<PathBuf>,
    },
    /// Jones polynomial in the variable A.
    Jones {
        #[command(flatten)]
        io: CodeInput,
        /// Also print the Kauffman bracket.
        #[arg(long)]
        bracket: bool,
    },
    /// Turn one crossing (or each crossing in turn) virtual.
    Virtualize {
        #[command(flatten)]
        io: CodeInput,
        /// Crossing label; all labels when absent.
        #[arg(long)]
        k: Option<u32>,
        /// Check the bracket relation between the code, its switch and the
        /// virtualization.
        #[arg(long)]
        check: bool,
    },
    /// Member of the family built from Kishino knots and trefoils.
    Kishino {
        /// Number of trefoil summands plus one.
        #[arg(long)]
        m: usize,
        /// Number of Kishino summands.
        #[arg(long)]
        n: usize,
        #[arg(long)]
        counts: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build a labeled dataset from code tables.
    Dataset(DatasetArgs),
    /// Write random virtual codes of a fixed size as a CSV table.
    Synth {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 15)]
        crossings: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct DatasetArgs {
    /// CSV or JSON-lines tables with a gauss_code column.
    #[arg(long, required = true, num_args = 1..)]
    input: Vec<PathBuf>,
    /// Output directory.
    #[arg(long)]
    output: PathBuf,
    /// Replace each input code by its single-crossing virtualizations.
    #[arg(long)]
    virtualize: bool,
    /// Inputs are classical census tables.
    #[arg(long)]
    census: bool,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    k_start: Option<u8>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long, num_args = 1..)]
    quandle: Vec<PathBuf>,
    #[arg(long, num_args = 1..)]
    biquandle: Vec<PathBuf>,
    /// Defaults to `both`, or `canonical` with --no-jones.
    #[arg(long, value_enum)]
    dedup: Option<DedupMode>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Reuse and extend this checkpoint file.
    #[arg(long)]
    resume: Option<PathBuf>,
    #[arg(long, default_value_t = 256)]
    chunk_size: usize,
    #[arg(long)]
    no_jones: bool,
    #[arg(long)]
    no_wirtinger: bool,
    #[arg(long)]
    no_colorings: bool,
}

fn read_codes(io: &CodeInput) -> anyhow::Result<Vec<(String, ParsedCode)>> {
    let lines: Vec<String> = match (&io.code, &io.input) {
        (Some(code), None) => vec![code.clone()],
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|source| PipelineError::FileUnreadable {
                path: path.clone(),
                source,
            })?
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim().to_string())
            .filter(|l| !l.is_empty())
            .collect(),
        _ => bail!("give either a code or --input"),
    };
    lines
        .into_iter()
        .map(|l| {
            let parsed = ParsedCode::parse(&l).with_context(|| format!("bad code `{l}`"))?;
            Ok((l, parsed))
        })
        .collect()
}

fn signed(code: ParsedCode) -> SignedGaussCode {
    if !code.is_signed() && !code.code().is_empty() {
        log::warn!("no signs given; all crossings taken as negative");
    }
    code.into_signed_or(Sign::Negative)
}

fn sink(path: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p).map_err(
            |source| PipelineError::OutputUnwritable {
                path: p.clone(),
                source,
            },
        )?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn structures(
    paths: &[PathBuf],
    fallback: fn() -> NamedStructure,
) -> anyhow::Result<Vec<NamedStructure>> {
    if paths.is_empty() {
        return Ok(vec![fallback()]);
    }
    Ok(paths
        .iter()
        .map(|p| load_structure(p))
        .collect::<Result<_, _>>()?)
}

fn show(code: &ParsedCode) -> String {
    match code {
        ParsedCode::Signed(s) => s.to_string(),
        ParsedCode::Unsigned(c) => c.to_string(),
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Parse(io) => {
            let mut out = sink(&io.output)?;
            for (_, code) in read_codes(&io)? {
                let c = code.code();
                writeln!(
                    out,
                    "{}\tcrossings={} overbridges={} parity_ok={}",
                    show(&code),
                    c.crossing_count(),
                    c.overbridge_count(),
                    c.parity_filter()
                )?;
            }
            out.flush()?;
        }
        Command::Simplify(io) => {
            let mut out = sink(&io.output)?;
            for (_, code) in read_codes(&io)? {
                let simple = match code {
                    ParsedCode::Signed(s) => ParsedCode::Signed(s.simplify()),
                    ParsedCode::Unsigned(c) => ParsedCode::Unsigned(c.simplify()),
                };
                writeln!(out, "{}", show(&simple))?;
            }
            out.flush()?;
        }
        Command::Wirtinger { io, k_start, k_max } => {
            let mut out = sink(&io.output)?;
            for (_, code) in read_codes(&io)? {
                let c = code.code();
                let k_max = k_max.unwrap_or_else(|| default_k_max(c, false));
                match wirtinger_number(c, k_start, k_max) {
                    WirtingerNumber::Seeds(k) => writeln!(out, "{k}")?,
                    WirtingerNumber::Unknot => writeln!(out, "1\tunknot")?,
                    WirtingerNumber::NotFound => writeln!(out, "none\tabove k_max={k_max}")?,
                }
            }
            out.flush()?;
        }
        Command::Colorings {
            io,
            quandle,
            biquandle,
        } => {
            let quandles = structures(&quandle, NamedStructure::r3)?;
            let biquandles = structures(&biquandle, NamedStructure::y4)?;
            let mut out = sink(&io.output)?;
            for (_, code) in read_codes(&io)? {
                let code = signed(code);
                let mut fields = Vec::new();
                for s in quandles.iter().chain(&biquandles) {
                    let count = count_colorings(&code, &s.structure);
                    let bound =
                        coloring_lower_bound(count, s.structure.order(), s.structure.kind())?;
                    fields.push(format!("{}={} (bound {})", s.name, count, bound));
                }
                writeln!(out, "{}", fields.join("\t"))?;
            }
            out.flush()?;
        }
        Command::Jones { io, bracket } => {
            let mut out = sink(&io.output)?;
            for (_, code) in read_codes(&io)? {
                let code = signed(code);
                if bracket {
                    writeln!(out, "{}\t{}", jones(&code), kauffman_bracket(&code))?;
                } else {
                    writeln!(out, "{}", jones(&code))?;
                }
            }
            out.flush()?;
        }
        Command::Virtualize { io, k, check } => {
            let mut out = sink(&io.output)?;
            for (_, code) in read_codes(&io)? {
                let code = signed(code);
                let labels: Vec<u32> = match k {
                    Some(k) => vec![k],
                    None => (1..=code.crossing_count() as u32).collect(),
                };
                for k in labels {
                    let v = code.virtualize_remove(k)?;
                    if check {
                        let holds = verify_virtualization(&code, k)?;
                        writeln!(out, "{k}\t{v}\tidentity={holds}")?;
                    } else {
                        writeln!(out, "{k}\t{v}")?;
                    }
                }
            }
            out.flush()?;
        }
        Command::Kishino {
            m,
            n,
            counts,
            output,
        } => {
            if m == 0 {
                bail!("--m must be at least 1");
            }
            let code = kishino_family(m, n);
            let mut out = sink(&output)?;
            if counts {
                let y = NamedStructure::y4();
                writeln!(out, "{code}\tY={}", count_colorings(&code, &y.structure))?;
            } else {
                writeln!(out, "{code}")?;
            }
            out.flush()?;
        }
        Command::Dataset(args) => {
            let summary = bridgekit::run(&dataset_config(args)?)?;
            eprintln!(
                "exported {} of {} ingested ({} rejected, {} + {} deduplicated), {} exact",
                summary.exported,
                summary.ingested,
                summary.rejected,
                summary.deduplicated_canonical,
                summary.deduplicated_jones,
                summary.exact
            );
        }
        Command::Synth {
            count,
            crossings,
            seed,
            output,
        } => {
            if crossings == 0 {
                bail!("--crossings must be at least 1");
            }
            let codes = bridgekit::synth::generate(count, crossings, seed);
            bridgekit::synth::write_csv(&output, &codes)?;
        }
    }
    Ok(())
}

fn dataset_config(a: DatasetArgs) -> anyhow::Result<RunConfig> {
    let mut config = RunConfig::new(a.input, a.output);
    config.virtualize = a.virtualize;
    config.census = a.census;
    config.k_start = a.k_start.map(usize::from);
    config.k_max = a.k_max;
    config.quandles = structures(&a.quandle, NamedStructure::r3)?;
    config.biquandles = structures(&a.biquandle, NamedStructure::y4)?;
    config.selection = Selection {
        wirtinger: !a.no_wirtinger,
        colorings: !a.no_colorings,
        jones: !a.no_jones,
    };
    config.dedup = a.dedup.unwrap_or(if a.no_jones {
        DedupMode::Canonical
    } else {
        DedupMode::Both
    });
    config.jobs = a.jobs;
    config.resume = a.resume;
    config.chunk_size = a.chunk_size;
    Ok(config)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<PipelineError>() {
        Some(p) => p.exit_code() as u8,
        None => 1,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
