use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ospkw::{run, Command, OutputFormat, Request};
use ospkw_core::characters::WeylSumStrategy;

/// Tame modules and Kac-Wakimoto characters of ortho-symplectic Lie
/// superalgebras osp(2m+1|2n) (family B) and osp(2m|2n) (family D).
#[derive(Parser, Debug)]
#[command(name = "ospkw", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    common: Common,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Algebra as `B:m:n` or `D:m:n`.
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Hook partition as comma-separated parts, e.g. `6,6,5,2,1,1`.
    #[arg(long, global = true, default_value = "")]
    partition: String,
    /// Use the twin highest weight `lambda^nat_-` (family D only).
    #[arg(long, global = true)]
    minus: bool,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Worker threads for the Weyl group sum.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Largest m and n accepted by `verify`.
    #[arg(long, global = true, default_value_t = 2)]
    max_rank: usize,
    #[arg(long, global = true, value_enum, default_value_t = Strategy::Orbit)]
    strategy: Strategy,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Sub {
    /// Atypicality, tameness and the tame witness data.
    Classify,
    /// Walk down the block to its tame bottom.
    Bottom,
    /// Kac-Wakimoto character of a tame module.
    Character,
    /// Tame members of a family D block of atypicality one.
    BlockFamily,
    /// Run the identity checks.
    Verify,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Output {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Strategy {
    Naive,
    Orbit,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Some(threads) = cli.common.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads.into()).build_global() {
            eprintln!("error[ThreadPool]: {e}");
            return ExitCode::from(2);
        }
    }
    let req = Request {
        command: match cli.command {
            Sub::Classify => Command::Classify,
            Sub::Bottom => Command::Bottom,
            Sub::Character => Command::Character,
            Sub::BlockFamily => Command::BlockFamily,
            Sub::Verify => Command::Verify,
        },
        algebra: cli.common.algebra,
        partition: cli.common.partition,
        minus: cli.common.minus,
        output: match cli.common.output {
            Output::Json => OutputFormat::Json,
            Output::Text => OutputFormat::Text,
        },
        strategy: match cli.common.strategy {
            Strategy::Naive => WeylSumStrategy::Naive,
            Strategy::Orbit => WeylSumStrategy::OrbitCompressed,
        },
        max_rank: cli.common.max_rank,
    };
    let resp = run(&req);
    let _ = std::io::stdout().write_all(resp.stdout.as_bytes());
    let _ = std::io::stderr().write_all(resp.stderr.as_bytes());
    ExitCode::from(resp.exit_code)
}
