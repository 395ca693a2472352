use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use o3sym_cli::report::{render_all, Format, Report, RunConfig};
use o3sym_cli::suites;
use o3sym_core::GroupError;

/// Environment variable overriding the order cap; the --order-cap flag
/// wins over it.
const ORDER_CAP_ENV: &str = "O3SYM_ORDER_CAP";

#[derive(Parser)]
#[command(name = "o3sym", version, about = "Exhaustive verification sweeps over Z2-extensions of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a machine-readable report
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Extensions of cyclic groups Z_n, n = 1..max-n (default 30)
    Cyclic(SweepArgs),
    /// Extensions of dihedral groups D_2n, n = 3..max-n (default 12)
    Dihedral(SweepArgs),
    /// Extension class sets over A4, S4, A5 and the order-20 affine chain
    Polyhedral(SweepArgs),
    /// Automorphism structure of D_2n, n = 3..max-n (default 12)
    AutDihedral(SweepArgs),
    /// Kernel self-detection and catalog exclusion up to order max-n (default 200)
    Kernels(SweepArgs),
    /// Every suite at its shipped default bound (ignores --max-n)
    All(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep bound: largest n, or the order bound for `kernels`
    #[arg(long)]
    max_n: Option<usize>,
    /// Worker threads; reports are byte-identical for any value
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap on constructed group orders (default 360; env O3SYM_ORDER_CAP)
    #[arg(long)]
    order_cap: Option<usize>,
    /// Dump every case's group table as JSON into this directory
    #[arg(long)]
    dump_groups: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
}

impl SweepArgs {
    fn run_config(&self) -> Result<RunConfig, String> {
        let order_cap = match self.order_cap {
            Some(cap) => cap,
            None => match std::env::var(ORDER_CAP_ENV) {
                Ok(s) => s
                    .parse::<usize>()
                    .map_err(|_| format!("{ORDER_CAP_ENV}={s} is not a valid order cap"))?,
                Err(_) => o3sym_core::DEFAULT_ORDER_CAP,
            },
        };
        if self.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        Ok(RunConfig {
            max_n: self.max_n,
            jobs: self.jobs,
            format: match self.format {
                FormatArg::Json => Format::Json,
                FormatArg::Tsv => Format::Tsv,
            },
            order_cap,
            dump_dir: self.dump_groups.clone(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify { suite } = cli.command;
    let args = match &suite {
        Suite::Cyclic(a)
        | Suite::Dihedral(a)
        | Suite::Polyhedral(a)
        | Suite::AutDihedral(a)
        | Suite::Kernels(a)
        | Suite::All(a) => a,
    };
    let cfg = match args.run_config() {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("o3sym: {msg}");
            return ExitCode::from(2);
        }
    };
    let reports: Result<Vec<Report>, GroupError> = match &suite {
        Suite::Cyclic(_) => suites::run_cyclic(&cfg).map(|r| vec![r]),
        Suite::Dihedral(_) => suites::run_dihedral(&cfg).map(|r| vec![r]),
        Suite::Polyhedral(_) => suites::run_polyhedral(&cfg).map(|r| vec![r]),
        Suite::AutDihedral(_) => suites::run_aut_dihedral(&cfg).map(|r| vec![r]),
        Suite::Kernels(_) => suites::run_kernels(&cfg).map(|r| vec![r]),
        Suite::All(_) => suites::run_all(&cfg),
    };
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            eprintln!("o3sym: {e}");
            return ExitCode::from(2);
        }
    };
    let (text, code) = render_all(&reports, cfg.format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("o3sym: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
