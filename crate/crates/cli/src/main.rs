use std::path::PathBuf;
use std::process::ExitCode;

use cayley_core::contact::MAX_ORDER;
use cayley_core::{CubicParams, GroupElem, HPoint, Param};
use cayley_verify::commands::{self, Output};
use cayley_verify::{run_suite, CliError, SampleSpec, Suite};
use clap::{Parser, Subcommand};

/// Exact verification of Cayley's ruled cubic surface and its cubic parabolas.
///
/// Points and parameters are comma-separated rationals, e.g. `-5,7/3,1/2`.
/// Exit status: 0 when every check holds, 1 when a mathematical check
/// fails, 2 on usage or input errors.
#[derive(Parser)]
#[command(name = "cayley-verify", version)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Seed of the random sample stream
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Number of random cases per suite
    #[arg(long, global = true, default_value_t = 100,
          value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Height bound of random rationals
    #[arg(long, global = true, default_value_t = 6,
          value_parser = clap::value_parser!(u32).range(1..))]
    bound: u32,
    /// Highest contact order to decide
    #[arg(long, global = true, default_value_t = MAX_ORDER,
          value_parser = clap::value_parser!(u32).range(0..=MAX_ORDER as i64))]
    max_order: u32,
    /// Dump jets and the first failing matching order
    #[arg(long, global = true)]
    explain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the surface equation at a point and name its orbit
    Eval {
        #[arg(allow_hyphen_values = true)]
        point: HPoint,
    },
    /// Points and osculating planes of a family curve
    Curve {
        #[arg(allow_hyphen_values = true)]
        params: CubicParams,
        /// Curve parameters; `inf` is the point U
        #[arg(allow_hyphen_values = true, required = true)]
        u: Vec<Param>,
    },
    /// Contact order at U (or dual contact at omega) of two family curves
    Contact {
        #[arg(allow_hyphen_values = true)]
        p: CubicParams,
        #[arg(allow_hyphen_values = true)]
        p_bar: CubicParams,
        #[arg(long)]
        dual: bool,
    },
    /// Transport curve parameters by a group element (a,b,c)
    Act {
        #[arg(allow_hyphen_values = true)]
        g: GroupElem,
        #[arg(allow_hyphen_values = true)]
        params: CubicParams,
    },
    /// Recover curve parameters from a JSON point list
    Identify { file: PathBuf },
    /// Run a verification suite
    Suite {
        #[arg(value_enum)]
        name: Suite,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    Ok(match &cli.command {
        Command::Eval { point } => commands::eval(point),
        Command::Curve { params, u } => commands::curve(params, u),
        Command::Contact { p, p_bar, dual } => {
            commands::contact(p, p_bar, *dual, cli.max_order, cli.explain)?
        }
        Command::Act { g, params } => commands::act(g, params),
        Command::Identify { file } => commands::identify(file)?,
        Command::Suite { name } => {
            let count = usize::try_from(cli.samples)
                .map_err(|_| CliError::Usage("too many samples".into()))?;
            let spec = SampleSpec::new(cli.seed, count, cli.bound)?;
            let report = run_suite(*name, &spec, cli.max_order);
            Output {
                text: report.render(),
                json: serde_json::to_value(&report).expect("reports serialize"),
                ok: report.all_passed(),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
