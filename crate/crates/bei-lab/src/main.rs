use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use bei_core::graph::Graph;
use bei_core::poly::FieldKind;
use bei_lab::config::{parse_fields, Overrides};
use bei_lab::report::summary_path;
use bei_lab::{
    inspect, run_campaign, summary, write_csv, Campaign, CampaignConfig, ConfigFile, CONFIG_ENV,
};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bei-lab",
    version,
    about = "Verification campaigns for binomial edge ideals of small graphs"
)]
struct Cli {
    /// TOML config file; defaults to $BEI_LAB_CONFIG when set.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a campaign over every graph of its family up to --n-max vertices.
    Campaign {
        name: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Comma-separated fields among p32003, p2, Q.
        #[arg(long)]
        field: Option<String>,
        /// CSV report path; the JSON summary goes next to it. Without it the CSV goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print every statistic of one graph (edge-list text or graph6; `-` reads stdin).
    Analyze {
        graphfile: PathBuf,
        #[arg(long, default_value = "p32003")]
        field: String,
    },
    /// Print the reduced lex Groebner basis of J_G and its initial ideal.
    Gb {
        graphfile: PathBuf,
        #[arg(long, default_value = "p32003")]
        field: String,
    },
    /// List the campaigns with their size guards.
    List,
}

/// Configuration or input problems, reported with exit code 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Graph::parse(&text).with_context(|| format!("parsing graph from {}", path.display()))
}

fn config_file(flag: Option<PathBuf>) -> Result<Option<ConfigFile>> {
    let path = flag.or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
    path.map(|p| ConfigFile::load(&p)).transpose()
}

fn campaign(
    cli_config: Option<PathBuf>,
    name: &str,
    n_max: Option<usize>,
    field: Option<String>,
    out: Option<PathBuf>,
    jobs: Option<usize>,
) -> std::result::Result<bool, Usage> {
    let campaign: Campaign = name.parse()?;
    let file = config_file(cli_config)?;
    let fields = field.as_deref().map(parse_fields).transpose()?;
    let cfg = CampaignConfig::resolve(
        campaign,
        file.as_ref(),
        Overrides {
            n_max,
            fields,
            out,
            jobs,
        },
    )?;
    let start = Instant::now();
    let results = run_campaign(&cfg)?;
    let s = summary(&cfg, &results);
    match &cfg.out {
        Some(path) => {
            write_csv(
                &results,
                BufWriter::new(
                    File::create(path).with_context(|| format!("creating {}", path.display()))?,
                ),
            )?;
            let json = serde_json::to_string_pretty(&s)? + "\n";
            std::fs::write(summary_path(path), json)?;
        }
        None => write_csv(&results, io::stdout().lock())?,
    }
    for r in results.iter().filter(|r| !r.passed()) {
        eprintln!(
            "FAIL {} n={} canonical_id={} edges=[{}] ell={:?} reg_JG={:?} reg_in={:?} indmatch_H={:?} {}",
            cfg.campaign, r.n, r.canonical_id, r.graph.edge_string(), r.ell, r.reg_jg, r.reg_in, r.indmatch_h, r.detail
        );
    }
    eprintln!(
        "{}: {} graphs, {} pass, {} fail (n <= {}, fields {}) in {:.2?}",
        cfg.campaign,
        s.totals.graphs,
        s.totals.passed,
        s.totals.failed,
        cfg.n_max,
        s.fields.join(","),
        start.elapsed()
    );
    Ok(s.totals.failed == 0)
}

fn run(cli: Cli) -> std::result::Result<bool, Usage> {
    match cli.command {
        Command::Campaign {
            name,
            n_max,
            field,
            out,
            jobs,
        } => campaign(cli.config, &name, n_max, field, out, jobs),
        Command::Analyze { graphfile, field } => {
            let field: FieldKind = field.parse()?;
            print!("{}", inspect::analyze(&read_graph(&graphfile)?, field)?);
            Ok(true)
        }
        Command::Gb { graphfile, field } => {
            let field: FieldKind = field.parse()?;
            print!(
                "{}",
                inspect::groebner_report(&read_graph(&graphfile)?, field)?
            );
            Ok(true)
        }
        Command::List => {
            let mut out = io::stdout().lock();
            for c in Campaign::ALL {
                writeln!(
                    out,
                    "{:<24} n_max <= {}  {}",
                    c.name(),
                    c.guard(),
                    c.description()
                )?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
